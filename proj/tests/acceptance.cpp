// Acceptance harness: one PASS/FAIL line per criterion, with timings and
// diagnostic notes. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "autf/autf.hpp"
#include "autf/cmetrics.hpp"
#include "autf/eptree.hpp"
#include "autf/errors.hpp"
#include "autf/lab.hpp"
#include "autf/report.hpp"
#include "test_support.hpp"

using namespace autf;

namespace {

struct Verdict {
  bool pass = false;
  std::string summary;
  std::vector<std::string> notes;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Verdict()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.pass = false;
    v.summary = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = limit_seconds <= 0 || secs < limit_seconds;
  bool ok = v.pass && in_time;
  if (!ok) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s", secs);
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ". " << title << ": " << v.summary << " (" << timing;
  if (limit_seconds > 0) std::cout << ", limit " << limit_seconds << " s";
  std::cout << ")\n";
  if (!in_time) std::cout << "       over the time limit\n";
  for (const std::string& n : v.notes) std::cout << "       note: " << n << "\n";
  std::cout.flush();
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::string audit_text(const AuditReport& r) {
  std::ostringstream os;
  os << report::audit_csv(r) << r.growth_violations << ' ' << r.step_checks << ' ' << r.step_violations << ' '
     << r.w_steps << ' ' << r.w_steps_c_changed << ' ' << r.exactness_mismatches << ' ' << r.reconstruction_failures
     << ' ' << r.fx_elements << ' ' << r.fx_bound_violations << '\n';
  for (const auto& e : r.examples) os << e << '\n';
  return os.str();
}

}  // namespace

int main() {
  const unsigned jobs = 0;  // all cores
  const GeneratorCatalog& cat = default_catalog();
  std::cout << "convention: " << cat.convention().describe() << "\n";

  criterion(1, "r_4 caret count is 27", 1.0, [&] {
    auto rows = rn_sweep(cat, 4, 1);
    Verdict v;
    v.pass = rows[4].carets == 27;
    v.summary = "carets(r_4) = " + std::to_string(rows[4].carets) + ", expected 27";
    if (!v.pass) {
      v.notes.push_back("reduced diagram of w0^-4 x1^4 w0^4 has " + std::to_string(rows[4].carets) +
                        " carets; the sequence for n = 1..4 is " + std::to_string(rows[1].carets) + ", " +
                        std::to_string(rows[2].carets) + ", " + std::to_string(rows[3].carets) + ", " +
                        std::to_string(rows[4].carets) + " (n^2 + 3n + 3)");
      v.notes.push_back("carets of the w0^4 block: " + std::to_string(power(cat.f_generator(0), 4).carets()) +
                        " (the printed claim is 4)");
    }
    return v;
  });

  criterion(2, "carets(r_n) >= n^2 for n = 1..16, length bound 3n", 30.0, [&] {
    auto rows = rn_sweep(cat, 16, jobs);
    Verdict v;
    v.pass = true;
    for (const auto& r : rows) {
      if (r.n == 0) continue;
      v.pass = v.pass && r.carets >= static_cast<std::int64_t>(r.n) * r.n && r.word_length_bound == 3 * r.n;
      Word w = parse_word("w0^-" + std::to_string(r.n) + " x1^" + std::to_string(r.n) + " w0^" + std::to_string(r.n));
      v.pass = v.pass && word_length(w) == r.word_length_bound;
    }
    v.summary = "carets(r_16) = " + std::to_string(rows[16].carets) + " >= 256";
    return v;
  });

  criterion(3, "relator suites", 10.0, [&] {
    Verdict v;
    v.pass = true;
    std::size_t total = 0, failed = 0;
    for (const char* id : {"F_X", "F_Y", "F_Z", "F_W", "COMM_YZ", "C_SET", "T_SET", "B1_SET"}) {
      for (const RelatorResult& r : relator_suite(cat, id)) {
        ++total;
        if (r.pass) continue;
        ++failed;
        v.pass = false;
        v.notes.push_back(r.set + " " + r.name + " fails; computed " + r.witness);
      }
    }
    v.summary = std::to_string(total - failed) + "/" + std::to_string(total) + " relators hold";
    return v;
  });

  criterion(4, "calibration has exactly one survivor (printed action words)", 10.0, [&] {
    CalibrationResult printed = calibrate_search(Gate::printed);
    CalibrationResult corrected = calibrate_search(Gate::corrected);
    Verdict v;
    v.pass = printed.survivors.size() == 1;
    v.summary = std::to_string(printed.survivors.size()) + " survivor(s)";
    v.notes.push_back("with the corrected y0 x1 y0^-1 word: " + std::to_string(corrected.survivors.size()) +
                      " survivor(s)" +
                      (corrected.survivors.size() == 1 ? " (" + corrected.survivors[0].describe() + ")" : ""));
    return v;
  });

  std::shared_ptr<BallTable> ball;
  criterion(5, "exactness on the radius-6 ball", 300.0, [&] {
    ball = std::make_shared<BallTable>(bfs_ball(cat, 6, jobs));
    const auto& entries = ball->entries();
    std::vector<char> agree(entries.size());
    parallel_for(entries.size(), jobs, [&](std::size_t i) {
      auto [neg, pos] = pi(entries[i].element);
      bool trivial = neg.is_identity() && pos.is_identity();
      agree[i] = trivial == translations_at_infinity(entries[i].element).has_value();
    });
    std::size_t mismatches = 0;
    for (char a : agree) mismatches += a ? 0 : 1;
    Verdict v;
    v.pass = mismatches == 0 && ball->approx_bytes() <= memory_budget_bytes();
    v.summary = std::to_string(entries.size()) + " elements, " + std::to_string(mismatches) + " mismatches";
    v.notes.push_back("sphere sizes " + join(ball->sphere_sizes()) + ", ~" +
                      std::to_string(ball->approx_bytes() >> 20) + " MiB");
    return v;
  });

  AuditReport audit;
  bool audited = false;
  criterion(6, "metric inequalities on the radius-6 ball", 0, [&] {
    if (!ball) throw std::runtime_error("ball unavailable");
    audit = ball_audit(cat, *ball, jobs);
    audited = true;
    Verdict v;
    v.pass = audit.growth_violations == 0 && audit.step_violations == 0 && audit.fx_bound_violations == 0;
    const AuditRow& last = audit.rows.back();
    v.summary = std::to_string(audit.step_checks) + " step checks, " + std::to_string(audit.step_violations) +
                " step violations, " + std::to_string(audit.growth_violations) + " growth violations";
    v.notes.push_back("K estimate max (a + c + ceil sqrt b)/L = " + std::to_string(last.k_num) + "/" +
                      std::to_string(last.k_den) + "; F_x elements " + std::to_string(audit.fx_elements) +
                      ", carets > K L^2 on " + std::to_string(audit.fx_bound_violations));
    v.notes.push_back("c changed on " + std::to_string(audit.w_steps_c_changed) + " of " +
                      std::to_string(audit.w_steps) + " w-steps");
    EPMap r2 = cat.eval("w0^-2 x1^2 w0^2");
    int len = ball->distance(r2);
    auto idx = ball->find(r2);
    std::size_t b = idx ? profile(cat, r2).b : 0;
    v.notes.push_back("r_2 at distance " + std::to_string(len) + " with b = " + std::to_string(b));
    v.pass = v.pass && len >= 0 && len <= 6 && b >= 4;
    for (const auto& e : audit.examples) v.notes.push_back(e);
    return v;
  });

  criterion(7, "F_w undistorted on the radius-6 F-ball", 120.0, [&] {
    UndistortionReport r = undistortion_check(cat, 6);
    Verdict v;
    v.pass = r.pass();
    v.summary = std::to_string(r.elements) + " elements, " + std::to_string(r.profile_violations) +
                " profile violations, " + std::to_string(r.word_image_violations) + " word-image violations";
    for (const auto& e : r.examples) v.notes.push_back(e);
    return v;
  });

  criterion(8, "tree route equals map route; reconstruction on the ball", 0, [&] {
    std::mt19937_64 rng(2024);
    std::size_t disagreements = 0;
    for (int i = 0; i < 1000; ++i) {
      Word w = test::random_aut_word(rng, 8);
      if (!canonical_equal(eptree_to_map(ep_eval(cat, w)), cat.eval(w))) ++disagreements;
    }
    if (!audited) throw std::runtime_error("audit unavailable");
    Verdict v;
    v.pass = disagreements == 0 && audit.reconstruction_failures == 0;
    v.summary = std::to_string(disagreements) + "/1000 route disagreements, " +
                std::to_string(audit.reconstruction_failures) + " reconstruction failures over " +
                std::to_string(ball->entries().size()) + " elements";
    return v;
  });

  criterion(9, "determinism across runs and worker counts", 0, [&] {
    std::string s1 = report::sweep_csv(rn_sweep(cat, 16, 1));
    std::string s2 = report::sweep_csv(rn_sweep(cat, 16, 4));
    std::string s3 = report::sweep_csv(rn_sweep(cat, 16, 1));
    std::string a1 = audit_text(ball_audit(cat, 5, 1));
    std::string a2 = audit_text(ball_audit(cat, 5, 3));
    std::string a3 = audit_text(ball_audit(cat, 5, 1));
    Verdict v;
    v.pass = s1 == s2 && s1 == s3 && a1 == a2 && a1 == a3;
    v.summary = std::string("sweep ") + (s1 == s2 && s1 == s3 ? "identical" : "differs") + ", audit " +
                (a1 == a2 && a1 == a3 ? "identical" : "differs");
    v.notes.push_back("audits compared at radius 5 with 1 and 3 workers");
    return v;
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criterion(s) fail") << "\n";
  return failures == 0 ? 0 : 1;
}
