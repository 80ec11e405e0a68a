#include "autf/cmetrics.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

namespace autf {

namespace {

using boost::multiprecision::cpp_int;

std::int64_t as_i64(std::size_t n) { return static_cast<std::int64_t>(n); }

struct StepBounds {
  bool a_fixed;     // a(g s) = a(g)
  int a_add;        // a(g s) <= a(g) + a_add
  int b_add;        // b(g s) <= b(g) + b_add
  int b_c_factor;   // b(g s) <= b(g) + b_c_factor * c(g)
  int c_add;        // c(g s) <= c(g) + c_add
};

StepBounds bounds_for(Gen g) {
  switch (g) {
    case Gen::x0: return {true, 0, 2, 0, 2};
    case Gen::x1: return {true, 0, 3, 0, 3};
    case Gen::w0: return {false, 2, 0, 2, 0};
    case Gen::w1: return {false, 3, 0, 3, 0};
    default: break;
  }
  throw ParseError("step generator must be one of x0, x1, w0, w1", 0);
}

std::size_t entry_bytes(const EPMap& g) { return sizeof(BallTable::Entry) + g.heap_bytes() + 64; }

}  // namespace

TreePair debris(const GeneratorCatalog& cat, const EPMap& g) {
  TreePair w = pi_C(g);
  return cat.extract(compose(invert(sigma(w)), g));
}

MetricProfile profile(const GeneratorCatalog& cat, const EPMap& g) {
  MetricProfile p;
  p.projection = pi_C(g);
  p.debris = cat.extract(compose(invert(sigma(p.projection)), g));
  CaretCounts cc = carets_and_spines(p.debris);
  p.a = p.projection.carets();
  p.b = cc.carets;
  p.c = static_cast<std::size_t>(cc.left_spine + cc.right_spine);
  return p;
}

LowerBound lower_bound(const MetricProfile& p) { return {as_i64(p.a + p.c), as_i64(p.b)}; }

bool bound_exceeds(const LowerBound& v, std::int64_t k_num, std::int64_t k_den, std::int64_t length) {
  if (k_den <= 0) throw std::invalid_argument("bound denominator must be positive");
  // k_den * sqrt(b) > k_num * L - k_den * (a + c) =: r
  cpp_int r = cpp_int(k_num) * length - cpp_int(k_den) * v.linear;
  if (r < 0) return true;
  return cpp_int(k_den) * k_den * v.radicand > r * r;
}

const std::vector<Letter>& c_steps() {
  static const std::vector<Letter> steps{{Gen::x0, 1}, {Gen::x0, -1}, {Gen::x1, 1}, {Gen::x1, -1},
                                         {Gen::w0, 1}, {Gen::w0, -1}, {Gen::w1, 1}, {Gen::w1, -1}};
  return steps;
}

bool StepReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const Inequality& i) { return i.holds(); });
}

StepReport step_check(const MetricProfile& before, const MetricProfile& after, const Letter& step) {
  StepBounds sb = bounds_for(step.gen);
  std::string s = format_word(std::vector<Letter>{step});
  auto a = as_i64(before.a), b = as_i64(before.b), c = as_i64(before.c);
  StepReport r;
  r.step = step;
  if (sb.a_fixed) {
    r.checks.push_back({"a(g " + s + ") = a(g)", as_i64(after.a), a, true});
  } else {
    r.checks.push_back({"a(g " + s + ") <= a(g) + " + std::to_string(sb.a_add), as_i64(after.a), a + sb.a_add, false});
  }
  if (sb.b_c_factor != 0) {
    r.checks.push_back({"b(g " + s + ") <= b(g) + " + std::to_string(sb.b_c_factor) + "c(g)", as_i64(after.b),
                        b + sb.b_c_factor * c, false});
  } else {
    r.checks.push_back({"b(g " + s + ") <= b(g) + " + std::to_string(sb.b_add), as_i64(after.b), b + sb.b_add, false});
  }
  r.checks.push_back({"c(g " + s + ") <= c(g)" + (sb.c_add ? " + " + std::to_string(sb.c_add) : std::string()),
                      as_i64(after.c), c + sb.c_add, false});
  r.c_unchanged = after.c == before.c;
  return r;
}

StepReport step_check(const GeneratorCatalog& cat, const EPMap& g, const Letter& step) {
  bounds_for(step.gen);
  return step_check(profile(cat, g), profile(cat, compose(g, cat.eval(std::vector<Letter>{step}))), step);
}

bool canonical_less(const EPMap& f, const EPMap& g) {
  if (f.window() != g.window()) return f.window() < g.window();
  const auto& p = f.points();
  const auto& q = g.points();
  if (p.size() != q.size()) return p.size() < q.size();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].x != q[i].x) return p[i].x < q[i].x;
    if (p[i].y != q[i].y) return p[i].y < q[i].y;
  }
  return false;
}

int BallTable::distance(const EPMap& g) const {
  auto it = index_.find(g);
  return it == index_.end() ? -1 : entries_[it->second].length;
}

std::optional<std::size_t> BallTable::find(const EPMap& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Word BallTable::word(std::size_t i) const {
  Word w;
  for (auto k = static_cast<std::int64_t>(i); entries_[static_cast<std::size_t>(k)].parent >= 0;
       k = entries_[static_cast<std::size_t>(k)].parent) {
    w.push_back(c_steps()[static_cast<std::size_t>(entries_[static_cast<std::size_t>(k)].step)]);
  }
  std::reverse(w.begin(), w.end());
  return w;
}

BudgetExceeded::BudgetExceeded(int completed_radius, std::shared_ptr<const BallTable> partial)
    : Error("memory budget exceeded; ball complete to radius " + std::to_string(completed_radius)),
      completed_(completed_radius),
      partial_(std::move(partial)) {}

std::size_t memory_budget_bytes() {
  std::size_t mb = 4096;
  if (const char* env = std::getenv("AUTF_MEMORY_MB")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) mb = static_cast<std::size_t>(v);
  }
  return mb * 1024 * 1024;
}

BallTable bfs_ball(const GeneratorCatalog& cat, int radius, unsigned jobs) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::size_t budget = memory_budget_bytes();
  std::vector<EPMap> step_maps;
  for (const Letter& s : c_steps()) step_maps.push_back(cat.eval(std::vector<Letter>{s}));

  BallTable t;
  t.entries_.push_back({EPMap(), 0, -1, -1});
  t.index_.emplace(EPMap(), 0);
  t.spheres_.push_back(1);
  t.bytes_ = entry_bytes(EPMap());

  struct Candidate {
    EPMap element;
    std::int64_t parent;
    int step;
  };
  std::size_t level_begin = 0;
  for (int r = 1; r <= radius; ++r) {
    std::size_t level_end = t.entries_.size();
    std::size_t n = level_end - level_begin;
    unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));
    std::vector<std::vector<Candidate>> parts(workers);
    auto expand = [&](unsigned w) {
      std::size_t lo = level_begin + n * w / workers, hi = level_begin + n * (w + 1) / workers;
      for (std::size_t i = lo; i < hi; ++i) {
        for (std::size_t s = 0; s < step_maps.size(); ++s) {
          EPMap g = compose(t.entries_[i].element, step_maps[s]);
          if (t.index_.count(g)) continue;
          parts[w].push_back({std::move(g), static_cast<std::int64_t>(i), static_cast<int>(s)});
        }
      }
    };
    if (workers == 1) {
      expand(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(expand, w);
      for (auto& th : pool) th.join();
    }
    std::vector<Candidate> cands;
    std::size_t cand_bytes = 0;
    for (auto& p : parts) {
      for (auto& c : p) {
        cand_bytes += entry_bytes(c.element);
        cands.push_back(std::move(c));
      }
      p.clear();
      p.shrink_to_fit();
    }
    if (t.bytes_ + cand_bytes > budget) {
      throw BudgetExceeded(r - 1, std::make_shared<const BallTable>(std::move(t)));
    }
    // Candidates arrive ordered by (parent, step); a stable sort by key keeps
    // that order among duplicates, so the first copy is the canonical one.
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      if (a.element.hash() != b.element.hash()) return a.element.hash() < b.element.hash();
      return canonical_less(a.element, b.element);
    });
    std::vector<char> fresh(cands.size(), 1);
    for (std::size_t i = 1; i < cands.size(); ++i) fresh[i] = !(cands[i].element == cands[i - 1].element);
    std::size_t added = 0;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (!fresh[i]) continue;
      t.bytes_ += entry_bytes(cands[i].element);
      t.index_.emplace(cands[i].element, t.entries_.size());
      t.entries_.push_back({std::move(cands[i].element), r, cands[i].parent, cands[i].step});
      ++added;
    }
    t.spheres_.push_back(added);
    t.radius_ = r;
    level_begin = level_end;
  }
  return t;
}

}  // namespace autf
