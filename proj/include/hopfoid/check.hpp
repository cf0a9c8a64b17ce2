#pragma once

#include <string>
#include <vector>

#include "hopfoid/valid.hpp"

namespace hopfoid {

// Outcome of one named check over many instances. horizon scopes the verdict:
// on truncated tracks "pass" means "no violation among components of T-degree
// <= horizon"; exact tracks report kValidInf.
struct CheckResult {
  std::string id;
  std::string statement;
  std::string verdict;  // "pass" | "fail" | "inconclusive"
  Valid horizon = kValidInf;
  long cases = 0;
  std::string witness;  // first failing / undecidable instance
};

// Accumulates per-instance outcomes into a single CheckResult. A check fails
// if any instance fails; otherwise it is inconclusive if any instance was
// undecidable at this window; otherwise it passes.
class Checker {
 public:
  Checker(std::string id, std::string statement) {
    r_.id = std::move(id);
    r_.statement = std::move(statement);
  }

  void pass(Valid horizon = kValidInf) {
    ++r_.cases;
    r_.horizon = vmin(r_.horizon, horizon);
  }

  void fail(const std::string& witness, Valid horizon = kValidInf) {
    ++r_.cases;
    r_.horizon = vmin(r_.horizon, horizon);
    if (!failed_) {
      failed_ = true;
      r_.witness = witness;
    }
  }

  void inconclusive(const std::string& note) {
    ++r_.cases;
    if (!failed_ && !undecided_) r_.witness = note;
    undecided_ = true;
  }

  void record(bool ok, const std::string& witness, Valid horizon = kValidInf) {
    if (ok)
      pass(horizon);
    else
      fail(witness, horizon);
  }

  bool failed() const { return failed_; }

  CheckResult done() const {
    CheckResult r = r_;
    r.verdict = failed_ ? "fail" : (undecided_ ? "inconclusive" : "pass");
    if (r.verdict == "pass") r.witness.clear();
    return r;
  }

 private:
  CheckResult r_;
  bool failed_ = false;
  bool undecided_ = false;
};

}  // namespace hopfoid
