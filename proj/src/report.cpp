#include "sgs/report.hpp"

namespace sgs {

std::string render_report(const AuditReport& r) {
  std::string out = r.system + " (samples=" + std::to_string(r.samples) +
                    ", seed=" + std::to_string(r.seed) + ")\n";
  for (const auto& v : r.verdicts) {
    out += v.pass ? "  pass  " : "  FAIL  ";
    out += v.axiom;
    if (!v.pass && !v.counterexample.empty()) out += "  [" + v.counterexample + "]";
    out += "\n";
  }
  out += r.accepted() ? "  => accepted\n" : "  => rejected\n";
  return out;
}

}  // namespace sgs
