#pragma once

// Finite binary trees, tree pair diagrams for F and rotated pairs for T.
//
// A tree is stored as the depth sequence of its leaves, left to right; leaf i
// covers a standard dyadic interval of length 2^-depth. The text form is
// "L" for a leaf and "(A B)" for a caret.
//
// Product convention: p * q applies p first, then q.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "autf/dyadic.hpp"
#include "autf/words.hpp"

namespace autf {

inline constexpr bool kApplyFirst = true;

class BinaryTree {
 public:
  BinaryTree() : depths_{0} {}

  // Throws InvalidPair unless the sequence is the leaf depths of a tree.
  static BinaryTree from_depths(std::vector<std::uint16_t> depths);
  static BinaryTree parse(std::string_view text);
  static BinaryTree caret(const BinaryTree& left, const BinaryTree& right);
  static BinaryTree left_comb(std::size_t carets);
  static BinaryTree right_comb(std::size_t carets);
  // All leaves at depth `depth`.
  static BinaryTree balanced(int depth);

  const std::vector<std::uint16_t>& depths() const { return depths_; }
  std::size_t leaves() const { return depths_.size(); }
  std::size_t carets() const { return depths_.size() - 1; }
  // Spine carets, root excluded.
  int left_spine() const { return depths_.front() > 0 ? depths_.front() - 1 : 0; }
  int right_spine() const { return depths_.back() > 0 ? depths_.back() - 1 : 0; }

  // Leaf boundaries 0 = b_0 < ... < b_n = 1.
  std::vector<Dyadic> boundaries() const;
  std::string to_string() const;

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
  friend auto operator<=>(const BinaryTree&, const BinaryTree&) = default;
  std::size_t hash() const noexcept;

 private:
  explicit BinaryTree(std::vector<std::uint16_t> d) : depths_(std::move(d)) {}
  std::vector<std::uint16_t> depths_;
};

// Returns one past the last leaf of the complete subtree rooted at depth
// `root_depth` whose first leaf is depths[start]; throws InvalidPair if the
// sequence does not close one.
std::size_t consume_subtree(std::span<const std::uint16_t> depths, std::size_t start,
                            int root_depth);

struct Refinement {
  BinaryTree tree;
  // How many leaves of `tree` lie under each leaf of the two inputs.
  std::vector<std::uint32_t> counts_a, counts_b;
};
Refinement common_refinement(const BinaryTree& a, const BinaryTree& b);

class TreePair {
 public:
  TreePair() = default;  // identity
  // Throws InvalidPair on a leaf-count mismatch. Not reduced automatically.
  TreePair(BinaryTree source, BinaryTree target);

  const BinaryTree& source() const { return source_; }
  const BinaryTree& target() const { return target_; }
  std::size_t carets() const { return source_.carets(); }
  bool is_identity() const { return source_ == target_; }
  bool is_reduced() const;

  std::string to_string() const;

  friend bool operator==(const TreePair&, const TreePair&) = default;
  friend auto operator<=>(const TreePair&, const TreePair&) = default;
  std::size_t hash() const noexcept;

 private:
  BinaryTree source_, target_;
};

TreePair reduce(const TreePair& p);
TreePair multiply(const TreePair& p, const TreePair& q);
TreePair invert(const TreePair& p);
inline TreePair operator*(const TreePair& p, const TreePair& q) { return multiply(p, q); }
TreePair power(const TreePair& p, int e);

struct CaretCounts {
  std::size_t carets = 0;
  int left_spine = 0;   // over both trees, roots excluded
  int right_spine = 0;  // over both trees, roots excluded

  friend bool operator==(const CaretCounts&, const CaretCounts&) = default;
};
CaretCounts carets_and_spines(const TreePair& p);

// The comb pairs ((L L) L) -> (L (L L)) and (L ((L L) L)) -> (L (L (L L))).
const TreePair& x0_pair();
const TreePair& x1_pair();

// Words over {x0, x1}; throws ParseError for any other generator.
TreePair eval_word(std::span<const Letter> w, const TreePair& x0, const TreePair& x1);
TreePair eval_word(std::span<const Letter> w);
TreePair eval_word(std::string_view text);

// Word over {x0, x1} that evaluates to p (with the comb generators).
Word normal_form(const TreePair& p);

class RotatedTreePair {
 public:
  RotatedTreePair() = default;
  RotatedTreePair(BinaryTree source, BinaryTree target, std::size_t offset);
  explicit RotatedTreePair(const TreePair& p);

  const BinaryTree& source() const { return source_; }
  const BinaryTree& target() const { return target_; }
  std::size_t offset() const { return offset_; }
  std::size_t carets() const { return source_.carets(); }
  bool is_identity() const { return offset_ == 0 && source_ == target_; }

  std::string to_string() const;

  friend bool operator==(const RotatedTreePair&, const RotatedTreePair&) = default;
  std::size_t hash() const noexcept;

 private:
  BinaryTree source_, target_;
  std::size_t offset_ = 0;
};

RotatedTreePair reduce(const RotatedTreePair& p);
RotatedTreePair t_multiply(const RotatedTreePair& p, const RotatedTreePair& q);
RotatedTreePair invert(const RotatedTreePair& p);
inline RotatedTreePair operator*(const RotatedTreePair& p, const RotatedTreePair& q) {
  return t_multiply(p, q);
}
bool t_is_in_F(const RotatedTreePair& p);
// Throws NotInF when the offset is non-zero.
TreePair to_tree_pair(const RotatedTreePair& p);

// The rotation by 1/2: one caret to one caret, offset 1.
const RotatedTreePair& t_pair();
// Words over {x0, x1, t}.
RotatedTreePair eval_t_word(std::span<const Letter> w);
RotatedTreePair eval_t_word(std::string_view text);

struct TreePairHash {
  std::size_t operator()(const TreePair& p) const noexcept { return p.hash(); }
};

}  // namespace autf
