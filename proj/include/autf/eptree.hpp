#pragma once

// Eventually periodic tree pairs: the infinite-diagram view of an EPMap.
//
// An EPTree subdivides every integral interval [k, k+1] by a finite tree:
// `left_block` for k < -N, `window_trees[k + N]` for -N <= k < N and
// `right_block` for k >= N. Leaves are indexed relative to the first leaf of
// [0, 1]. In a pair, source leaf i maps linearly onto target leaf
// i + target_mark; the source mark is always leaf 0.
//
// The tree-route product below works on the diagrams directly (refine,
// graft, cancel) and is kept as an independent check of EPMap composition.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "autf/autf.hpp"
#include "autf/ftrees.hpp"
#include "autf/plmaps.hpp"

namespace autf {

struct EPTree {
  std::int64_t window = 0;
  BinaryTree left_block, right_block;
  std::vector<BinaryTree> window_trees;

  const BinaryTree& at(std::int64_t k) const;
  // Relative index of the first leaf of [k, k+1].
  std::int64_t leaves_before(std::int64_t k) const;
  // (k, position inside the tree of [k, k+1]) of relative leaf i.
  std::pair<std::int64_t, std::size_t> locate(std::int64_t i) const;
  // Relative index of the leaf whose half-open interval contains x.
  std::int64_t leaf_containing(const Dyadic& x) const;
  // Start and depth of relative leaf i.
  std::pair<Dyadic, int> leaf_interval(std::int64_t i) const;

  // Drops window trees equal to their blocks from both ends.
  void shrink();

  friend bool operator==(const EPTree&, const EPTree&) = default;
};

struct EPTreePair {
  EPTree source, target;
  std::int64_t target_mark = 0;

  // Throws InvalidPair if block leaf counts differ.
  void validate() const;
  std::size_t carets_per_block() const { return source.right_block.carets(); }

  friend bool operator==(const EPTreePair&, const EPTreePair&) = default;
};

EPTreePair eptree_view(const EPMap& f);
EPMap eptree_to_map(const EPTreePair& p);

// ---- tree route ----

EPTreePair ep_normalize(const EPTreePair& p);  // cancel shared carets, minimal windows
EPTreePair ep_multiply(const EPTreePair& p, const EPTreePair& q);  // apply p, then q
EPTreePair ep_invert(const EPTreePair& p);
EPTreePair ep_mirror(const EPTreePair& p);  // x -> -f(-x)

EPTreePair ep_transport(const TreePair& p, int orientation = 1);
EPTreePair ep_lift(const TreePair& w, Side side);
EPTreePair ep_sigma(const TreePair& w);

// Evaluates a word entirely on diagrams, with generators built from the
// catalog's convention and F-generators (never from its EPMaps).
EPTreePair ep_eval(const GeneratorCatalog& cat, std::span<const Letter> w);

}  // namespace autf
