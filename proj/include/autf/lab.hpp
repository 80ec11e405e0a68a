#pragma once

// Batch experiments: relator suites, the r_n sweep, undistortion of F_w,
// derived conjugation tables and the full ball audit.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "autf/autf.hpp"
#include "autf/cmetrics.hpp"

namespace autf {

// ---- relators ----

struct RelatorEntry {
  std::string name;
  std::string text;  // verbatim word
  std::string rhs;   // stated right-hand side; empty means the identity
};

struct RelatorSet {
  std::string id;
  bool in_T = false;  // evaluated on rotated pairs over {x0, x1, t}
  std::vector<RelatorEntry> entries;
};

const std::vector<RelatorSet>& relator_catalog();
// Throws UnknownName.
const RelatorSet& relator_set(std::string_view id);

struct RelatorResult {
  std::string set, name, text, rhs;
  bool pass = false;
  // On failure: the computed word for the left-hand side (when it lies in
  // F), else a description of the discrepancy.
  std::string witness;
};

std::vector<RelatorResult> relator_suite(const GeneratorCatalog& cat, std::string_view set_id);

// ---- r_n sweep ----

struct DistortionRow {
  int n = 0;
  std::int64_t word_length_bound = 0;  // 3n
  std::int64_t carets = 0;
  std::int64_t ratio_num = 0, ratio_den = 1;  // carets / n^2 reduced; 0/1 at n = 0
};

// r_n = w0^-n x1^n w0^n for n = 0..n_max. Rows are independent; `jobs`
// only spreads them over threads.
std::vector<DistortionRow> rn_sweep(const GeneratorCatalog& cat, int n_max, unsigned jobs = 1);

// ---- undistortion of F_w ----

struct UndistortionReport {
  int radius = 0;
  std::size_t elements = 0;
  std::size_t profile_violations = 0;  // profile(sigma(w)) != (carets(w), 0, 0)
  std::size_t word_image_violations = 0;  // sigma(w) != image of a shortest F word
  std::vector<std::string> examples;   // first few violations
  bool pass() const { return profile_violations == 0 && word_image_violations == 0; }
};

UndistortionReport undistortion_check(const GeneratorCatalog& cat, int radius);

// ---- derived action words ----

struct ActionRow {
  std::string lhs;      // e.g. "y0 x1 y0^-1"
  std::string derived;  // normal form of the conjugate
  std::string printed;  // printed right-hand side, empty if none
  bool round_trip = false;
  bool printed_matches = false;
};

// family: "y", "z" or "w". Throws UnknownName.
std::vector<ActionRow> derive_action_words(const GeneratorCatalog& cat, std::string_view family);

// ---- ball audit ----

struct AuditRow {
  int radius = 0;
  std::size_t elements = 0;  // cumulative up to this radius
  std::size_t max_a = 0, max_b = 0, max_c = 0;
  // max over 1 <= L <= radius of (a + c + ceil(sqrt b)) / L, reduced
  std::int64_t k_num = 0, k_den = 1;
};

struct AuditReport {
  int radius = 0;
  std::vector<std::size_t> sphere_sizes;
  std::vector<AuditRow> rows;
  std::size_t growth_violations = 0;     // a <= 3L, c <= 3L, b <= 9L^2
  std::size_t step_checks = 0;
  std::size_t step_violations = 0;
  std::size_t w_steps = 0;
  std::size_t w_steps_c_changed = 0;     // c(g w) != c(g), reported only
  std::size_t exactness_mismatches = 0;  // pi(g) trivial <=> g in F_x
  std::size_t reconstruction_failures = 0;
  std::size_t fx_elements = 0;
  std::size_t fx_bound_violations = 0;   // carets > K L^2 for g in F_x
  std::vector<std::string> examples;     // first few violations of any kind
  bool pass() const {
    return growth_violations == 0 && step_violations == 0 && exactness_mismatches == 0 &&
           reconstruction_failures == 0 && fx_bound_violations == 0;
  }
};

AuditReport ball_audit(const GeneratorCatalog& cat, int radius, unsigned jobs = 1);
AuditReport ball_audit(const GeneratorCatalog& cat, const BallTable& ball, unsigned jobs = 1);

// Runs f(i) for i in [0, n) over `jobs` threads in contiguous chunks.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& f);

}  // namespace autf
