#ifndef GLS_JSON_IO_HPP
#define GLS_JSON_IO_HPP

#include "gls/gls_core.hpp"
#include "gls/psi.hpp"
#include "gls/radial.hpp"

#include <json.hpp>

#include <string>

namespace gls {

inline constexpr const char* kToolName = "gls-sharp";
inline constexpr const char* kToolVersion = "1.0.0";

// psi record: {kind, a, b, beta, gamma, r, h, samples[]}; natural weights
// deserialize to their sampled table (the exact-evaluator hook is a runtime
// object and does not round-trip).
nlohmann::json psi_to_json(const PsiFunction& psi);
PsiFunction psi_from_json(const nlohmann::json& j);

// Catalog syntax: "gaussian(t)", "ball_indicator(R)",
// "power_trunc(sigma,eps,smoothing)", or a JSON array of mixture components
// [{"kind":"gaussian","t":...,"coef":...}, ...], inline or in a file.
RadialProfile profile_from_spec(const std::string& spec, int n);

// Provenance block embedded in every report so any number in a table is
// reproducible from the report alone.
struct ReportMeta {
    std::string command;
    bool include_timestamp = true;
    QuadratureSpec quad;
    int gls_grid_points = kGlsGridPoints;
    int natural_samples = PsiFunction::kNaturalSamples;
};

nlohmann::json make_provenance(const ReportMeta& meta);
nlohmann::json gls_result_to_json(const GlsNormResult& r);
nlohmann::json report_to_json(const VerificationReport& rep, const ReportMeta& meta);
nlohmann::json sharpness_to_json(const SharpnessResult& s, double tolerance,
                                 const ReportMeta& meta);

} // namespace gls

#endif
