#ifndef PNF_VERIFY_VERIFY_HPP
#define PNF_VERIFY_VERIFY_HPP

#include <string>
#include <vector>

namespace pnf::verify {

struct CheckResult {
  std::string name;
  std::string group;  // "symbolic" or "numeric"
  bool pass = false;
  std::string residual;  // worst residual or mismatch, as text
  std::string details;
};

struct VerifyOptions {
  bool symbolic = true;
  bool numeric = true;
  /// Negative-control fixture: evaluates the torsion-flow formula with a
  /// deliberately flipped sign so the agreement checks must fail.
  bool inject_eq21_sign_flip = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;  // sorted by name
  bool all_pass = true;
};

VerifyReport run_verify(const VerifyOptions& opts);

/// Deterministic JSON rendering: object keys sorted, every float
/// formatted with 17 significant digits.
std::string report_json(const VerifyReport& report);
std::string report_table(const VerifyReport& report);

/// Fixed expression corpus (>= 50 entries) used for parse/format
/// round-trip checks; includes every printed hierarchy member.
const std::vector<std::string>& expression_corpus();

/// printf-style %.17g formatting used for all floating-point output.
std::string fmt_g17(double v);

}  // namespace pnf::verify

#endif
