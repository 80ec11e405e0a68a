#include <doctest.h>

#include <random>

#include "autf/errors.hpp"
#include "autf/ftrees.hpp"
#include "test_support.hpp"

using namespace autf;

namespace {

// Independent reducer: repeatedly cancels a randomly chosen exposed caret.
TreePair naive_reduce(TreePair p, std::mt19937_64& rng) {
  for (;;) {
    const auto& s = p.source().depths();
    const auto& t = p.target().depths();
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] != s[i + 1] || t[i] != t[i + 1] || s[i] == 0 || t[i] == 0) continue;
      // Two equal-depth adjacent leaves are siblings iff the left one starts
      // on a boundary aligned to its parent.
      auto aligned = [&](const std::vector<std::uint16_t>& d) {
        Dyadic start(0);
        for (std::size_t k = 0; k < i; ++k) start += Dyadic::pow2(-int(d[k]));
        return start.scaled(int(d[i]) - 1).is_integer();
      };
      if (aligned(s) && aligned(t)) spots.push_back(i);
    }
    if (spots.empty()) return p;
    std::size_t i = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
    auto merge = [&](std::vector<std::uint16_t> d) {
      d[i] -= 1;
      d.erase(d.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      return BinaryTree::from_depths(std::move(d));
    };
    p = TreePair(merge(s), merge(t));
  }
}

}  // namespace

TEST_CASE("tree text round trip and validation") {
  BinaryTree t = BinaryTree::parse("(L ((L L) L))");
  CHECK(t.depths() == std::vector<std::uint16_t>{1, 3, 3, 2});
  CHECK(t.to_string() == "(L ((L L) L))");
  CHECK(t.carets() == 3);
  CHECK(BinaryTree::left_comb(2).to_string() == "((L L) L)");
  CHECK(BinaryTree::right_comb(2).to_string() == "(L (L L))");
  CHECK_THROWS_AS(BinaryTree::from_depths({1, 2}), InvalidPair);
  CHECK_THROWS_AS(BinaryTree::from_depths({2, 1, 2}), InvalidPair);
  CHECK_THROWS_AS(BinaryTree::parse("(L L"), ParseError);
  CHECK_THROWS_AS(BinaryTree::parse("(L L L)"), ParseError);
  CHECK_THROWS_AS(TreePair(BinaryTree::parse("(L L)"), BinaryTree()), InvalidPair);
}

TEST_CASE("reduce examples") {
  BinaryTree t = BinaryTree::parse("((L L) (L (L L)))");
  CHECK(reduce(TreePair(t, t)) == TreePair());
  CHECK(reduce(x0_pair()) == x0_pair());
  // x0 with its last leaf split in both trees.
  TreePair fat(BinaryTree::parse("((L L) (L L))"), BinaryTree::parse("(L (L (L L)))"));
  TreePair red = reduce(fat);
  CHECK(red.carets() == 2);
  for (int e = 0; e <= 6; ++e) {
    for (std::int64_t k = 0; k <= (std::int64_t{1} << e); ++k) {
      Dyadic x = Dyadic::from_parts(k, e);
      CHECK(test::eval_pair(red, x) == test::eval_pair(fat, x));
    }
  }
}

TEST_CASE("reduction is confluent") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    TreePair p = test::random_unreduced_pair(rng, 9, 4);
    TreePair r = reduce(p);
    for (int k = 0; k < 3; ++k) CHECK(naive_reduce(p, rng) == r);
  }
}

TEST_CASE("multiply, invert, identity") {
  TreePair sq = multiply(x0_pair(), x0_pair());
  CHECK(sq.carets() == 3);
  CHECK(sq.source() == BinaryTree::left_comb(3));
  CHECK(sq.target() == BinaryTree::right_comb(3));
  CHECK(invert(x0_pair()).source() == x0_pair().target());
  CHECK(multiply(x1_pair(), TreePair()) == x1_pair());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    TreePair p = reduce(test::random_unreduced_pair(rng, 8, 0));
    TreePair q = reduce(test::random_unreduced_pair(rng, 8, 0));
    CHECK(multiply(p, invert(p)).is_identity());
    CHECK(invert(p).carets() == p.carets());
    TreePair pq = multiply(p, q);
    CHECK(pq.carets() <= p.carets() + q.carets());
    for (int k = 0; k < 20; ++k) {
      Dyadic x = test::random_unit_dyadic(rng, 10);
      CHECK(test::eval_pair(pq, x) == test::eval_pair(q, test::eval_pair(p, x)));
    }
  }
}

TEST_CASE("carets and spines") {
  CHECK(carets_and_spines(TreePair()) == CaretCounts{0, 0, 0});
  CaretCounts c = carets_and_spines(x0_pair());
  CHECK(c.carets == 2);
  CHECK(c.left_spine == 1);
  CHECK(c.right_spine == 1);
  CHECK(carets_and_spines(x1_pair()).carets == 3);
}

TEST_CASE("eval_word and relators") {
  CHECK(eval_word("").is_identity());
  CHECK(eval_word("x0 x0^-1").is_identity());
  CHECK(eval_word("[x0 x1^-1, x0^-1 x1 x0]").is_identity());
  CHECK(eval_word("[x0 x1^-1, x0^-2 x1 x0^2]").is_identity());
  CHECK_FALSE(eval_word("[x0, x1]").is_identity());
  CHECK(eval_word("x0^4").carets() == 5);
  CHECK(eval_word("x1^4").carets() == 6);
  CHECK_THROWS_AS(eval_word("x0 y0"), ParseError);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Word u = test::random_f_word(rng, 6), v = test::random_f_word(rng, 6);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(eval_word(uv) == multiply(eval_word(u), eval_word(v)));
  }
}

TEST_CASE("normal form") {
  CHECK(normal_form(TreePair()).empty());
  CHECK(format_word(normal_form(x1_pair())) == "x1");
  CHECK(format_word(normal_form(x0_pair())) == "x0");
  TreePair p = eval_word("x0^-1 x1 x0");
  CHECK(eval_word(normal_form(p)) == p);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    TreePair q = eval_word(test::random_f_word(rng, 10));
    CHECK(eval_word(normal_form(q)) == q);
  }
}

TEST_CASE("rotated pairs") {
  const RotatedTreePair& t = t_pair();
  CHECK_FALSE(t_is_in_F(t));
  CHECK(t_is_in_F(RotatedTreePair()));
  CHECK(t_multiply(t, t).is_identity());
  RotatedTreePair c = t_multiply(t, RotatedTreePair(x0_pair()));
  CHECK_FALSE(c.is_identity());
  CHECK_FALSE(t_multiply(c, c).is_identity());
  CHECK(t_multiply(t_multiply(c, c), c).is_identity());
  CHECK(eval_t_word("t x0 t x0 t x0").is_identity());
  CHECK(eval_t_word("x1^-1 t x0^2 x1^-1 x0^-1 t").is_identity());
  CHECK(eval_t_word("x1^-1 t x0^2 x1^-1 t x0 t x0").is_identity());
  CHECK(eval_t_word("t^2").is_identity());
  CHECK(t_is_in_F(eval_t_word("x0 x1^-3 x0^2")));
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    Word w = test::random_t_word(rng, 8);
    RotatedTreePair p = eval_t_word(w);
    CHECK(t_multiply(p, invert(p)).is_identity());
    Word w2 = test::random_t_word(rng, 5);
    Word ww = w;
    ww.insert(ww.end(), w2.begin(), w2.end());
    RotatedTreePair q = eval_t_word(w2);
    CHECK(eval_t_word(ww) == t_multiply(p, q));
    for (int k = 0; k < 10; ++k) {
      Dyadic x = test::random_unit_dyadic(rng, 8);
      if (x == Dyadic(1)) continue;
      CHECK(test::eval_rotated(t_multiply(p, q), x) ==
            test::eval_rotated(q, test::eval_rotated(p, x)));
    }
  }
}
