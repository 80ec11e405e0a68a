#include <doctest.h>

#include <cstdlib>
#include <random>

#include "autf/cmetrics.hpp"
#include "autf/eptree.hpp"
#include "autf/errors.hpp"
#include "test_support.hpp"

using namespace autf;

namespace {

constexpr Gen kCGens[] = {Gen::x0, Gen::x1, Gen::w0, Gen::w1};

// Spine carets read off the leaf depths: the first and last leaf sit at the
// bottom of the left and right spines.
std::size_t spine_oracle(const TreePair& p) {
  std::size_t total = 0;
  for (const BinaryTree* t : {&p.source(), &p.target()}) {
    const auto& d = t->depths();
    total += d.front() > 0 ? d.front() - 1u : 0u;
    total += d.back() > 0 ? d.back() - 1u : 0u;
  }
  return total;
}

// Breadth-first ball on the tree route, deduplicated by linear search.
std::vector<std::size_t> tree_route_spheres(const GeneratorCatalog& cat, int radius) {
  std::vector<EPTreePair> steps;
  for (const Letter& s : c_steps()) steps.push_back(ep_eval(cat, std::vector<Letter>{s}));
  std::vector<EPTreePair> seen{eptree_view(EPMap())};
  std::vector<std::size_t> spheres{1};
  std::size_t begin = 0;
  for (int r = 1; r <= radius; ++r) {
    std::size_t end = seen.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (const EPTreePair& s : steps) {
        EPTreePair next = ep_multiply(seen[i], s);
        if (std::find(seen.begin(), seen.end(), next) == seen.end()) seen.push_back(std::move(next));
      }
    }
    spheres.push_back(seen.size() - end);
    begin = end;
  }
  return spheres;
}

}  // namespace

TEST_CASE("profile examples") {
  const GeneratorCatalog& cat = default_catalog();
  MetricProfile id = profile(cat, EPMap());
  CHECK(id.a == 0);
  CHECK(id.b == 0);
  CHECK(id.c == 0);

  MetricProfile x0 = profile(cat, cat.generator(Gen::x0));
  CHECK(x0.a == 0);
  CHECK(x0.debris == cat.f_generator(0));
  CHECK(x0.b == 2);
  CHECK(x0.c == spine_oracle(cat.f_generator(0)));

  for (const char* text : {"w0", "w1^-2 w0", "w0^3 w1 w0^-1"}) {
    EPMap g = cat.eval(text);
    MetricProfile p = profile(cat, g);
    CHECK(sigma(p.projection) == g);
    CHECK(p.a == p.projection.carets());
    CHECK(p.b == 0);
    CHECK(p.c == 0);
  }

  // r_4 lies in F_x; the whole element is debris.
  MetricProfile r4 = profile(cat, cat.eval("w0^-4 x1^4 w0^4"));
  CHECK(r4.a == 0);
  CHECK(r4.b == 31);
  CHECK(r4.debris == cat.extract(cat.eval("w0^-4 x1^4 w0^4")));

  CHECK_THROWS_AS(profile(cat, cat.generator(Gen::y0)), MembershipError);
  CHECK_THROWS_AS(debris(cat, cat.generator(Gen::z1)), MembershipError);
}

TEST_CASE("profiles of random elements of C") {
  const GeneratorCatalog& cat = default_catalog();
  std::mt19937_64 rng(61);
  for (int i = 0; i < 200; ++i) {
    EPMap g = cat.eval(test::random_word(rng, 10, kCGens));
    MetricProfile p = profile(cat, g);
    CHECK(p.debris == debris(cat, g));
    CHECK(compose(sigma(p.projection), cat.embed(p.debris)) == g);
    CHECK(p.c == spine_oracle(p.debris));
    CHECK(p.b == p.debris.carets());
  }
}

TEST_CASE("bound_exceeds") {
  LowerBound v{3, 4};  // 3 + sqrt 4 = 5
  CHECK_FALSE(bound_exceeds(v, 5, 1, 1));
  CHECK(bound_exceeds(v, 9, 2, 1));
  CHECK_FALSE(bound_exceeds(v, 5, 2, 2));
  CHECK(bound_exceeds({3, 5}, 5, 1, 1));
  CHECK_FALSE(bound_exceeds({3, 5}, 6, 1, 1));
  CHECK(bound_exceeds({7, 0}, 1, 1, 3));
  CHECK_THROWS_AS(bound_exceeds(v, 1, 0, 1), std::invalid_argument);
  MetricProfile p;
  p.a = 2;
  p.b = 9;
  p.c = 1;
  CHECK(lower_bound(p).linear == 3);
  CHECK(lower_bound(p).radicand == 9);
}

TEST_CASE("step checks") {
  const GeneratorCatalog& cat = default_catalog();
  REQUIRE(c_steps().size() == 8);
  StepReport r = step_check(cat, EPMap(), {Gen::w0, 1});
  REQUIRE(r.checks.size() == 3);
  CHECK(r.checks[0].name == "a(g w0) <= a(g) + 2");
  CHECK(r.checks[1].name == "b(g w0) <= b(g) + 2c(g)");
  CHECK(r.checks[2].name == "c(g w0) <= c(g)");
  CHECK(r.checks[0].lhs == 2);
  CHECK(r.all_hold());
  StepReport x = step_check(cat, EPMap(), {Gen::x1, -1});
  CHECK(x.checks[0].equality);
  CHECK(x.checks[0].name == "a(g x1^-1) = a(g)");
  CHECK(x.checks[1].rhs == 3);
  CHECK(x.all_hold());
  CHECK_THROWS_AS(step_check(cat, EPMap(), {Gen::y0, 1}), ParseError);

  std::mt19937_64 rng(62);
  for (int i = 0; i < 60; ++i) {
    EPMap g = cat.eval(test::random_word(rng, 9, kCGens));
    for (const Letter& s : c_steps()) {
      StepReport rep = step_check(cat, g, s);
      CHECK(rep.all_hold());
      if (s.gen == Gen::w0 || s.gen == Gen::w1) CHECK(rep.c_unchanged);
    }
  }
}

TEST_CASE("breadth-first ball") {
  const GeneratorCatalog& cat = default_catalog();
  BallTable ball = bfs_ball(cat, 3, 1);
  CHECK(ball.sphere_sizes() == std::vector<std::size_t>{1, 8, 48, 280});
  CHECK(ball.sphere_sizes() == tree_route_spheres(cat, 3));
  CHECK(ball.distance(EPMap()) == 0);
  CHECK(ball.distance(cat.generator(Gen::x0)) == 1);
  CHECK(ball.distance(cat.generator(Gen::w0)) == 1);
  CHECK(ball.distance(cat.eval("w0 x1^-1 w1")) == 3);
  CHECK(ball.distance(cat.generator(Gen::y0)) == -1);
  for (std::size_t i = 0; i < ball.entries().size(); ++i) {
    Word w = ball.word(i);
    CHECK(static_cast<int>(w.size()) == ball.entries()[i].length);
    CHECK(cat.eval(w) == ball.entries()[i].element);
  }

  BallTable ball5 = bfs_ball(cat, 5, 3);
  CHECK(ball5.sphere_sizes() == std::vector<std::size_t>{1, 8, 48, 280, 1632, 9492});
  CHECK(ball5.distance(cat.eval("w0^-2 x1^2 w0^2")) <= 6);
  BallTable serial = bfs_ball(cat, 4, 1), threaded = bfs_ball(cat, 4, 4);
  REQUIRE(serial.entries().size() == threaded.entries().size());
  bool same = true;
  for (std::size_t i = 0; i < serial.entries().size(); ++i) {
    same = same && serial.entries()[i].element == threaded.entries()[i].element &&
           serial.entries()[i].parent == threaded.entries()[i].parent;
  }
  CHECK(same);
  CHECK_THROWS_AS(bfs_ball(cat, -1), std::invalid_argument);
}

TEST_CASE("memory budget") {
  const GeneratorCatalog& cat = default_catalog();
  ::setenv("AUTF_MEMORY_MB", "1", 1);
  CHECK(memory_budget_bytes() == 1024 * 1024);
  bool thrown = false;
  try {
    bfs_ball(cat, 8, 1);
  } catch (const BudgetExceeded& e) {
    thrown = true;
    CHECK(e.completed_radius() < 8);
    CHECK(e.partial().radius() == e.completed_radius());
    CHECK(e.partial().approx_bytes() <= 1024 * 1024);
  }
  CHECK(thrown);
  ::unsetenv("AUTF_MEMORY_MB");
  CHECK(memory_budget_bytes() == 4096ull * 1024 * 1024);
}
