#ifndef QTORUS_JSON_IO_HPP
#define QTORUS_JSON_IO_HPP

#include <json.hpp>

#include "qtorus/weight_module.hpp"

namespace qtorus {

using json = nlohmann::json;

// Rationals travel as "p/q" strings (plain integers also accepted on input).
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

// {"order": L, "coeffs": ["p/q", ...]} with coeffs the canonical polynomial
// in zeta_L; rationals and "p/q" strings are accepted as shorthand.
json cyc_to_json(const CycScalar& c);
CycScalar cyc_from_json(const json& j);

/// q-matrix entries as [num, den] pairs meaning e^{2 pi i num/den}.
/// Throws std::invalid_argument on malformed input or invalid q.
QMatrix q_from_json(const json& j);
json q_to_json(const QMatrix& q);

/// Structural report: radical lattice, Gamma invariants, normal form.
json analyze_report(const QMatrix& q);

/// {"N", "dim", "grading", "action": [{"degree", "matrix"}]}; the module is
/// validated against the graded law (throws std::invalid_argument).
GradedGlModule w_from_json(const json& j, const QMatrix& q, const RadicalData& rad);

/// {"V": {"lambda": [...], "b": "p/q"}, "W": "left-regular" | {...},
///  "alpha": ["p/q", ...], "fault": 0}
ModuleDescriptor descriptor_from_json(const QMatrix& q, const json& module);

struct CliConfig {
  json q;                           // raw q object
  json module;                      // raw module object (may be null)
  std::vector<std::string> suites;  // empty means "all applicable"
  long long window = 2;
  unsigned long long seed = 0;
  int fault = 0;
};

/// Reads the top-level config: {"schema": 1, "q": ..., "module": ...,
/// "suites": [...], "window": K, "seed": S, "fault": 0}.
CliConfig config_from_json(const json& j);

/// Canonical serialized form: sorted keys, two-space indent, trailing newline.
std::string dump_report(const json& j);

}  // namespace qtorus

#endif  // QTORUS_JSON_IO_HPP
