#ifndef GLS_SHARP_CONSTANTS_HPP
#define GLS_SHARP_CONSTANTS_HPP

namespace gls {

// Parameter record for the Hardy-Rellich constant: n >= 3, p in (1, n/2).
struct HardyRellichQuery {
    int n;
    double p;

    void validate() const;
};

// Parameter record for the weighted Sobolev constant:
// n >= 2, beta in (0, n), p in (1, n/beta).
struct SobolevQuery {
    int n;
    double beta;
    double p;

    void validate() const;
};

enum class BoundaryEnd { Lower, Upper };

// K_HR(n, p) = p p' / (n (n - 2p)), p' = p/(p-1). Sharp constant of
// |V f|_p <= K_HR |Delta f|_p.
double k_hr(const HardyRellichQuery& q);

// K_S(n, beta, p) = 2^{-beta} G[(beta/2p)(n/beta - p)] G[n/2 - n/2p]
//                   / (G[(n+beta)/2 - n/2p] G[n/2p]),
// evaluated through log-Gamma. Sharp constant of
// |W f|_p <= K_S |(-Delta)^{beta/2} f|_p. Reduces to K_HR at beta = 2.
double k_s(const SobolevQuery& q);

// Boundary asymptotics. Lower end (p -> 1+): K ~ coeff/(p-1); upper end
// (p -> n/2 or n/beta): K ~ coeff/(n/2 - p) resp. coeff/(n/beta - p).
double k_hr_asymptotic(int n, BoundaryEnd end);
double k_s_asymptotic(int n, double beta, BoundaryEnd end);

// Independent cross-check of k_s through the Riesz-potential parameters:
// with lambda = n/p - beta,
//   G(lambda/2) G((n-lambda-beta)/2) / (2^beta G((lambda+beta)/2) G((n-lambda)/2)).
// Algebraically equal to K_S; used only to validate the Gamma kernel.
double riesz_reciprocal(const SobolevQuery& q);

// Bounded envelope K(p) (p-1) (n/2 - p) (resp. (n/beta - p)); its inf/sup
// over a p-grid estimate the equivalence constants C1..C4.
double envelope_hr(int n, double p);
double envelope_s(int n, double beta, double p);

struct EnvelopeBounds {
    double inf;
    double sup;
    int grid_points;
};

EnvelopeBounds envelope_bounds_hr(int n, int grid_points = 1000);
EnvelopeBounds envelope_bounds_s(int n, double beta, int grid_points = 1000);

} // namespace gls

#endif
