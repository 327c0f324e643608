#pragma once

#include <string>
#include <utility>
#include <vector>

namespace schur {

// Outcome of checking one analytic bound against measured data.
// Bounds whose hypotheses require parameters far beyond desk scale are
// still evaluated; for those `pass` is informational, never a hard gate.
struct LemmaReport {
  std::string name;
  double measured = 0.0;
  double bound = 0.0;
  std::string relation = ">=";  // measured <relation> bound
  bool pass = false;
  double margin = 0.0;  // positive iff the relation holds, with slack
  std::string note;
};

inline LemmaReport make_report(std::string name, double measured, double bound,
                               std::string relation, std::string note = {}) {
  LemmaReport r;
  r.name = std::move(name);
  r.measured = measured;
  r.bound = bound;
  r.relation = std::move(relation);
  if (r.relation == ">=") {
    r.pass = measured >= bound;
    r.margin = measured - bound;
  } else {
    r.pass = measured <= bound;
    r.margin = bound - measured;
  }
  r.note = std::move(note);
  return r;
}

}  // namespace schur
