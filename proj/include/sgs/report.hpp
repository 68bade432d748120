#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sgs {

struct AxiomVerdict {
  std::string axiom;
  bool pass = true;
  std::string counterexample;  // empty when pass
};

struct AuditReport {
  std::string system;
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<AxiomVerdict> verdicts;

  bool accepted() const {
    for (const auto& v : verdicts)
      if (!v.pass) return false;
    return true;
  }

  const AxiomVerdict* find(std::string_view axiom) const {
    for (const auto& v : verdicts)
      if (v.axiom == axiom) return &v;
    return nullptr;
  }
};

// Tracks the first counterexample for one named check across many samples.
class CheckAcc {
 public:
  CheckAcc(AuditReport& r, std::string axiom) : report_(r) { verdict_.axiom = std::move(axiom); }
  ~CheckAcc() { report_.verdicts.push_back(verdict_); }
  CheckAcc(const CheckAcc&) = delete;

  void expect(bool ok, const std::string& note) {
    if (!ok && verdict_.pass) {
      verdict_.pass = false;
      verdict_.counterexample = note;
    }
  }
  bool passing() const { return verdict_.pass; }

 private:
  AuditReport& report_;
  AxiomVerdict verdict_;
};

std::string render_report(const AuditReport&);

}  // namespace sgs
