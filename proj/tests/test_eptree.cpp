#include <doctest.h>

#include <random>

#include "autf/eptree.hpp"
#include "autf/errors.hpp"
#include "test_support.hpp"

using namespace autf;

TEST_CASE("eptree views") {
  EPTreePair id = eptree_view(EPMap());
  CHECK(id.source.window == 0);
  CHECK(id.target.window == 0);
  CHECK(id.source.right_block.leaves() == 1);
  CHECK(id.source.left_block.leaves() == 1);
  CHECK(id.target_mark == 0);
  CHECK(eptree_to_map(id).is_identity());

  const GeneratorCatalog& cat = default_catalog();
  EPTreePair x0 = eptree_view(cat.generator(Gen::x0));
  CHECK(x0.source == id.source);
  CHECK(x0.target == id.target);
  CHECK(x0.target_mark == 1);

  // w0^-4 repeats the diagram of the fourth power of F-gen-0 in every box.
  EPTreePair w = eptree_view(cat.eval("w0^-4"));
  CHECK(w.source.window == 0);
  CHECK(w.carets_per_block() == power(cat.f_generator(0), 4).carets());
  CHECK(w.carets_per_block() == 5);

  EPTreePair bad = id;
  bad.target.right_block = BinaryTree::parse("(L L)");
  CHECK_THROWS_AS(bad.validate(), InvalidPair);
  CHECK_THROWS_AS(eptree_to_map(bad), InvalidPair);
}

TEST_CASE("eptree round trip") {
  const GeneratorCatalog& cat = default_catalog();
  std::mt19937_64 rng(41);
  for (int i = 0; i < 400; ++i) {
    EPMap g = cat.eval(test::random_aut_word(rng, 7));
    EPTreePair v = eptree_view(g);
    CHECK(eptree_to_map(v) == g);
    CHECK(ep_normalize(v) == v);
    CHECK(eptree_view(g.mirror()) == ep_mirror(v));
    CHECK(eptree_view(invert(g)) == ep_invert(v));
  }
}

TEST_CASE("tree route generators") {
  const GeneratorCatalog& cat = default_catalog();
  for (Gen g : kAutGens) {
    Word w{{g, 1}};
    CHECK(ep_eval(cat, w) == eptree_view(cat.generator(g)));
  }
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    TreePair p = reduce(test::random_unreduced_pair(rng, 8, 0));
    for (int o : {1, -1}) CHECK(ep_transport(p, o) == eptree_view(transport(p, o)));
    CHECK(ep_lift(p, Side::negative) == eptree_view(lift_halfline(p, Side::negative)));
    CHECK(ep_sigma(p) == eptree_view(sigma(p)));
  }
}

TEST_CASE("tree route agrees with map route") {
  const GeneratorCatalog& cat = default_catalog();
  std::mt19937_64 rng(43);
  for (int i = 0; i < 300; ++i) {
    Word w = test::random_aut_word(rng, 8);
    EPTreePair tree_route = ep_eval(cat, w);
    EPMap map_route = cat.eval(w);
    CHECK(canonical_equal(eptree_to_map(tree_route), map_route));
    CHECK(tree_route == eptree_view(map_route));
  }
}
