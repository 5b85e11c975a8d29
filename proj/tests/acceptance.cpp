// Acceptance run: one PASS/FAIL line per criterion, with wall-clock limits.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "endo/endo.hpp"

namespace {

struct Criterion {
  int id;
  std::string name;
  double limit_ms;
  std::function<bool(std::string&)> run;
};

bool report_ok(const endo::VerificationReport& r, std::string& detail) {
  detail += r.suite + ": " + std::to_string(r.points_checked) + " points, " + std::to_string(r.failure_count) +
            " failures; ";
  return r.pass();
}

bool worked_counting_values(std::string& detail) {
  endo::ResidueParam f5(5);
  bool ok = endo::bold_gamma_count_enumerated(1, f5) == 4 && endo::bold_gamma_count(1, f5) == 4;
  endo::SplitShape sh(2, 0);
  auto L = endo::enumerate_L(sh)[0];
  auto a = endo::fiber_count_check({{1, 4}, {}}, sh, f5, L);
  auto b = endo::fiber_count_check({{1, 2}, {}}, sh, f5, L);
  ok = ok && a.observed == 2 && b.observed == 1 && a.predicted == endo::ExactValue::integer(2) &&
       b.predicted == endo::ExactValue::integer(1);
  detail += "worked |Gamma|=4 and fibers {2,1}: " + std::string(ok ? "ok" : "mismatch") + "; ";
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> cs = {
      {1, "annexe identities, r' <= 30, |r''| <= 30", 5000,
       [](std::string& d) { return report_ok(endo::verify_annexe(30), d); }},
      {2, "splitting sum and r'' swap, N', N'' <= 10", 5000,
       [](std::string& d) { return report_ok(endo::verify_split(30, 10), d); }},
      {3, "kappa sum over (L1, L2), R - r <= 6", 10000,
       [](std::string& d) { return report_ok(endo::verify_lemma25(6), d); }},
      {4, "fiber counts and |Gamma|, q in {5,7,13}, t2 <= 2", 120000,
       [](std::string& d) {
         bool w = worked_counting_values(d);
         return report_ok(endo::verify_counting({5, 7, 13}, 2), d) && w;
       }},
      {5, "constant identity 2^{-1-beta} C4 |Gamma| = C, R <= 6", 60000,
       [](std::string& d) {
         auto r = endo::verify_const28({5, 7, 13}, 6);
         auto& alt = r.notes["alternate_reading"];
         d += "alternate reading failures " + alt["failure_count"].dump() + "/" + alt["points_checked"].dump() + "; ";
         return report_ok(r, d);
       }},
      {6, "sign chain c C (-1)^{d2 r''} = (-1)^n U, U = U1 U2, r' <= 8", 5000,
       [](std::string& d) { return report_ok(endo::verify_c1(8), d); }},
      {7, "factor-wise product equals d kappa kappa_U, q in {5,7}, R - r <= 4", 120000,
       [](std::string& d) { return report_ok(endo::verify_lemma26({5, 7}, 4), d); }},
      {8, "type B class sizes against signed permutations, N <= 4", 30000,
       [](std::string& d) { return report_ok(endo::verify_weyl(4), d); }},
      {9, "descent: sgn_CD on V, solver uniqueness, sector sums", 30000,
       [](std::string& d) { return report_ok(endo::verify_descent(4), d); }},
      {10, "parameter algebra, |Jord_bp| <= 3", 5000,
       [](std::string& d) { return report_ok(endo::verify_params(4, 3), d); }},
  };

  int failed = 0;
  for (auto& c : cs) {
    std::string detail;
    endo::Stopwatch sw;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail += std::string("exception: ") + e.what();
    }
    double ms = sw.ms();
    bool in_time = ms < c.limit_ms;
    bool pass = ok && in_time;
    if (!pass) ++failed;
    std::printf("%s criterion %d: %s [%.0f ms, limit %.0f ms] %s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), ms,
                c.limit_ms, detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(cs.size()) - failed, cs.size());
  return failed == 0 ? 0 : 1;
}
