#pragma once

// Metric estimators on C = F_x x| F_w: the debris decomposition, the
// quantities a, b, c, their per-generator step bounds, and an exact
// breadth-first word-length oracle over {x0, x1, w0, w1}^{+-1}.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "autf/autf.hpp"
#include "autf/errors.hpp"

namespace autf {

struct MetricProfile {
  std::size_t a = 0;  // carets of the projection to F_w
  std::size_t b = 0;  // carets of the debris
  std::size_t c = 0;  // spine carets of the debris, roots excluded, both trees
  TreePair debris, projection;
};

// sigma(pi_C(g))^-1 g as an element of F. Throws MembershipError.
TreePair debris(const GeneratorCatalog& cat, const EPMap& g);
MetricProfile profile(const GeneratorCatalog& cat, const EPMap& g);

// a + c + sqrt(b), kept exact.
struct LowerBound {
  std::int64_t linear = 0;
  std::int64_t radicand = 0;
};
LowerBound lower_bound(const MetricProfile& p);
// a + sqrt(b) + c > (k_num / k_den) * length, decided by integer squaring.
bool bound_exceeds(const LowerBound& v, std::int64_t k_num, std::int64_t k_den, std::int64_t length);

// The eight steps x0, x0^-1, x1, x1^-1, w0, w0^-1, w1, w1^-1 in this order.
const std::vector<Letter>& c_steps();

struct Inequality {
  std::string name;      // e.g. "b(g w0) <= b(g) + 2c(g)"
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool equality = false;  // the bound is an equation
  bool holds() const { return equality ? lhs == rhs : lhs <= rhs; }
  std::int64_t slack() const { return rhs - lhs; }
};

struct StepReport {
  Letter step;
  std::vector<Inequality> checks;  // a, b, c in this order
  bool c_unchanged = true;         // c(g s) == c(g); meaningful for w steps
  bool all_hold() const;
};

StepReport step_check(const MetricProfile& before, const MetricProfile& after, const Letter& step);
StepReport step_check(const GeneratorCatalog& cat, const EPMap& g, const Letter& step);

// Breadth-first ball in C. Elements are listed level by level, each level in
// canonical order, so the table does not depend on the worker count.
class BallTable {
 public:
  struct Entry {
    EPMap element;
    int length = 0;
    std::int64_t parent = -1;  // index of the predecessor, -1 for the identity
    int step = -1;             // index into c_steps()
  };

  int radius() const { return radius_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<std::size_t>& sphere_sizes() const { return spheres_; }
  // -1 when g is not in the ball.
  int distance(const EPMap& g) const;
  std::optional<std::size_t> find(const EPMap& g) const;
  // A shortest word for entry i.
  Word word(std::size_t i) const;
  std::size_t approx_bytes() const { return bytes_; }

 private:
  friend BallTable bfs_ball(const GeneratorCatalog&, int, unsigned);
  int radius_ = 0;
  std::vector<Entry> entries_;
  std::vector<std::size_t> spheres_;
  std::unordered_map<EPMap, std::size_t, EPMapHash> index_;
  std::size_t bytes_ = 0;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(int completed_radius, std::shared_ptr<const BallTable> partial);
  int completed_radius() const { return completed_; }
  const BallTable& partial() const { return *partial_; }

 private:
  int completed_;
  std::shared_ptr<const BallTable> partial_;
};

// Memory cap from AUTF_MEMORY_MB (default 4096).
std::size_t memory_budget_bytes();

// jobs == 0 uses the hardware concurrency. Throws BudgetExceeded.
BallTable bfs_ball(const GeneratorCatalog& cat, int radius, unsigned jobs = 1);

// Total order used for deterministic merges.
bool canonical_less(const EPMap& f, const EPMap& g);

}  // namespace autf
