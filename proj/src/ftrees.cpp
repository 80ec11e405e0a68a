#include "autf/ftrees.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

#include <boost/container_hash/hash.hpp>

#include "autf/errors.hpp"
#include "tree_nodes.hpp"

namespace autf {

using detail::Nodes;

namespace {

constexpr int kMaxDepth = std::numeric_limits<std::uint16_t>::max();

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  std::vector<std::uint16_t> parse() {
    node(0);
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing characters after tree", pos_);
    return std::move(out_);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void node(int depth) {
    if (depth > kMaxDepth) throw ParseError("tree too deep", pos_);
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of tree", pos_);
    if (text_[pos_] == 'L') {
      ++pos_;
      out_.push_back(static_cast<std::uint16_t>(depth));
      return;
    }
    if (text_[pos_] != '(') throw ParseError("expected 'L' or '('", pos_);
    ++pos_;
    node(depth + 1);
    node(depth + 1);
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::uint16_t> out_;
};

void render(const std::vector<std::uint16_t>& d, std::size_t& pos, int depth, std::string& out) {
  if (d[pos] == depth) {
    out += 'L';
    ++pos;
    return;
  }
  out += '(';
  render(d, pos, depth + 1, out);
  out += ' ';
  render(d, pos, depth + 1, out);
  out += ')';
}

struct Reduced {
  std::vector<std::uint16_t> source, target;
  std::size_t offset;
};

// Cancels carets shared by both trees, scanning source leaves left to right.
// Source leaf i corresponds to target leaf (i + offset) mod n.
Reduced reduce_depths(const std::vector<std::uint16_t>& s, const std::vector<std::uint16_t>& t,
                      std::size_t offset) {
  std::size_t n = s.size();
  Nodes ns(s), nt(t);
  std::vector<std::pair<int, int>> stack;
  stack.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    stack.emplace_back(ns.leaf_node[i], nt.leaf_node[(i + offset) % n]);
    while (stack.size() >= 2) {
      auto [a1, b1] = stack[stack.size() - 2];
      auto [a2, b2] = stack.back();
      if (a1 == 0 || b1 == 0 || !ns.is_left[a1] || !nt.is_left[b1]) break;
      if (ns.parent[a1] != ns.parent[a2] || nt.parent[b1] != nt.parent[b2]) break;
      stack.pop_back();
      stack.back() = {ns.parent[a1], nt.parent[b1]};
    }
  }
  Reduced r;
  std::size_t m = stack.size();
  r.source.reserve(m);
  for (auto& [a, b] : stack) r.source.push_back(ns.depth[a]);
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return nt.first_leaf[stack[i].second] < nt.first_leaf[stack[j].second];
  });
  r.target.reserve(m);
  r.offset = 0;
  for (std::size_t k = 0; k < m; ++k) {
    r.target.push_back(nt.depth[stack[order[k]].second]);
    if (order[k] == 0) r.offset = k;
  }
  return r;
}

std::vector<std::uint32_t> starts_of(const std::vector<std::uint32_t>& counts) {
  std::vector<std::uint32_t> st(counts.size());
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    st[i] = acc;
    acc += counts[i];
  }
  return st;
}

// Leaf i of `tree` is refined like leaf `under[i]` of `base`, whose refinement
// occupies `ref` leaves [start[under[i]], start + count).
std::vector<std::uint16_t> graft(const std::vector<std::uint16_t>& tree,
                                 const std::vector<std::uint16_t>& base,
                                 const std::vector<std::uint16_t>& ref,
                                 const std::vector<std::uint32_t>& counts,
                                 const std::vector<std::uint32_t>& start,
                                 const std::vector<std::size_t>& under) {
  std::vector<std::uint16_t> out;
  out.reserve(ref.size());
  for (std::size_t i = 0; i < tree.size(); ++i) {
    std::size_t j = under[i];
    int shift = int(tree[i]) - int(base[j]);
    for (std::uint32_t k = start[j]; k < start[j] + counts[j]; ++k) {
      int d = ref[k] + shift;
      if (d > kMaxDepth) throw InvalidPair("tree depth overflow");
      out.push_back(static_cast<std::uint16_t>(d));
    }
  }
  return out;
}

}  // namespace

// ---- BinaryTree ----

std::size_t consume_subtree(std::span<const std::uint16_t> depths, std::size_t start,
                            int root_depth) {
  std::vector<int> stack;
  std::size_t i = start;
  while (i < depths.size()) {
    int d = depths[i++];
    if (d < root_depth) break;
    if (!stack.empty() && stack.back() > d) break;
    stack.push_back(d);
    while (stack.size() >= 2 && stack[stack.size() - 1] == stack[stack.size() - 2]) {
      stack.pop_back();
      stack.back() -= 1;
    }
    if (stack.size() == 1 && stack[0] == root_depth) return i;
    if (stack.size() == 1 && stack[0] < root_depth) break;
  }
  throw InvalidPair("leaf depths do not form a complete subtree");
}

BinaryTree BinaryTree::from_depths(std::vector<std::uint16_t> depths) {
  if (depths.empty() || consume_subtree(depths, 0, 0) != depths.size()) {
    throw InvalidPair("leaf depths do not form a binary tree");
  }
  return BinaryTree(std::move(depths));
}

BinaryTree BinaryTree::parse(std::string_view text) { return BinaryTree(TreeParser(text).parse()); }

BinaryTree BinaryTree::caret(const BinaryTree& left, const BinaryTree& right) {
  std::vector<std::uint16_t> d;
  d.reserve(left.leaves() + right.leaves());
  for (auto x : left.depths_) d.push_back(static_cast<std::uint16_t>(x + 1));
  for (auto x : right.depths_) d.push_back(static_cast<std::uint16_t>(x + 1));
  return BinaryTree(std::move(d));
}

BinaryTree BinaryTree::left_comb(std::size_t carets) {
  if (carets == 0) return {};
  std::vector<std::uint16_t> d;
  d.push_back(static_cast<std::uint16_t>(carets));
  for (std::size_t k = carets; k >= 1; --k) d.push_back(static_cast<std::uint16_t>(k));
  return BinaryTree(std::move(d));
}

BinaryTree BinaryTree::right_comb(std::size_t carets) {
  BinaryTree t = left_comb(carets);
  std::reverse(t.depths_.begin(), t.depths_.end());
  return t;
}

BinaryTree BinaryTree::balanced(int depth) {
  return BinaryTree(std::vector<std::uint16_t>(std::size_t{1} << depth,
                                               static_cast<std::uint16_t>(depth)));
}

std::vector<Dyadic> BinaryTree::boundaries() const {
  std::vector<Dyadic> b;
  b.reserve(depths_.size() + 1);
  Dyadic x(0);
  b.push_back(x);
  for (auto d : depths_) {
    x += Dyadic::pow2(-int(d));
    b.push_back(x);
  }
  return b;
}

std::string BinaryTree::to_string() const {
  std::string out;
  std::size_t pos = 0;
  render(depths_, pos, 0, out);
  return out;
}

std::size_t BinaryTree::hash() const noexcept { return boost::hash_range(depths_.begin(), depths_.end()); }

Refinement common_refinement(const BinaryTree& a, const BinaryTree& b) {
  const auto& da = a.depths();
  const auto& db = b.depths();
  Refinement r;
  r.counts_a.assign(da.size(), 1);
  r.counts_b.assign(db.size(), 1);
  std::vector<std::uint16_t> out;
  out.reserve(da.size() + db.size());
  std::size_t i = 0, j = 0;
  while (i < da.size() && j < db.size()) {
    if (da[i] == db[j]) {
      out.push_back(da[i]);
      ++i;
      ++j;
    } else if (da[i] > db[j]) {
      std::size_t end = consume_subtree(da, i, db[j]);
      r.counts_b[j] = static_cast<std::uint32_t>(end - i);
      out.insert(out.end(), da.begin() + static_cast<std::ptrdiff_t>(i),
                 da.begin() + static_cast<std::ptrdiff_t>(end));
      i = end;
      ++j;
    } else {
      std::size_t end = consume_subtree(db, j, da[i]);
      r.counts_a[i] = static_cast<std::uint32_t>(end - j);
      out.insert(out.end(), db.begin() + static_cast<std::ptrdiff_t>(j),
                 db.begin() + static_cast<std::ptrdiff_t>(end));
      j = end;
      ++i;
    }
  }
  r.tree = BinaryTree::from_depths(std::move(out));
  return r;
}

// ---- TreePair ----

TreePair::TreePair(BinaryTree source, BinaryTree target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_.leaves() != target_.leaves()) {
    throw InvalidPair("tree pair leaf counts differ: " + std::to_string(source_.leaves()) +
                      " vs " + std::to_string(target_.leaves()));
  }
}

bool TreePair::is_reduced() const { return reduce(*this).carets() == carets(); }

std::string TreePair::to_string() const { return source_.to_string() + " -> " + target_.to_string(); }

std::size_t TreePair::hash() const noexcept {
  std::size_t h = source_.hash();
  boost::hash_combine(h, target_.hash());
  return h;
}

TreePair reduce(const TreePair& p) {
  Reduced r = reduce_depths(p.source().depths(), p.target().depths(), 0);
  return TreePair(BinaryTree::from_depths(std::move(r.source)),
                  BinaryTree::from_depths(std::move(r.target)));
}

TreePair multiply(const TreePair& p, const TreePair& q) {
  Refinement r = common_refinement(p.target(), q.source());
  const auto& u = r.tree.depths();
  std::vector<std::size_t> same_p(p.source().leaves()), same_q(q.target().leaves());
  std::iota(same_p.begin(), same_p.end(), 0);
  std::iota(same_q.begin(), same_q.end(), 0);
  auto s = graft(p.source().depths(), p.target().depths(), u, r.counts_a, starts_of(r.counts_a),
                 same_p);
  auto t = graft(q.target().depths(), q.source().depths(), u, r.counts_b, starts_of(r.counts_b),
                 same_q);
  Reduced red = reduce_depths(s, t, 0);
  return TreePair(BinaryTree::from_depths(std::move(red.source)),
                  BinaryTree::from_depths(std::move(red.target)));
}

TreePair invert(const TreePair& p) { return TreePair(p.target(), p.source()); }

TreePair power(const TreePair& p, int e) {
  TreePair base = e < 0 ? invert(p) : p;
  TreePair acc;
  for (int k = 0; k < std::abs(e); ++k) acc = multiply(acc, base);
  return acc;
}

CaretCounts carets_and_spines(const TreePair& p) {
  CaretCounts c;
  c.carets = p.carets();
  c.left_spine = p.source().left_spine() + p.target().left_spine();
  c.right_spine = p.source().right_spine() + p.target().right_spine();
  return c;
}

const TreePair& x0_pair() {
  static const TreePair p(BinaryTree::parse("((L L) L)"), BinaryTree::parse("(L (L L))"));
  return p;
}

const TreePair& x1_pair() {
  static const TreePair p(BinaryTree::parse("(L ((L L) L))"), BinaryTree::parse("(L (L (L L)))"));
  return p;
}

TreePair eval_word(std::span<const Letter> w, const TreePair& x0, const TreePair& x1) {
  static constexpr Gen allowed[] = {Gen::x0, Gen::x1};
  check_alphabet(w, allowed, "an F word");
  TreePair acc;
  for (const Letter& l : w) acc = multiply(acc, power(l.gen == Gen::x0 ? x0 : x1, l.exponent));
  return acc;
}

TreePair eval_word(std::span<const Letter> w) { return eval_word(w, x0_pair(), x1_pair()); }

TreePair eval_word(std::string_view text) { return eval_word(parse_word(text)); }

namespace {

// Exponent of each leaf: the length of the longest run of left edges going
// up from the leaf that stays off the right spine.
std::vector<int> leaf_exponents(const BinaryTree& tree) {
  Nodes nodes(tree.depths());
  std::size_t count = nodes.parent.size();
  std::vector<char> on_right(count, 0);
  on_right[0] = 1;
  for (std::size_t v = 1; v < count; ++v) {
    on_right[v] = !nodes.is_left[v] && on_right[nodes.parent[v]];
  }
  std::vector<int> ex(tree.leaves(), 0);
  for (std::size_t i = 0; i < tree.leaves(); ++i) {
    int v = nodes.leaf_node[i];
    int len = 0;
    while (v != 0 && nodes.is_left[v]) {
      v = nodes.parent[v];
      ++len;
    }
    if (len > 0 && on_right[v]) --len;
    ex[i] = len;
  }
  return ex;
}

void append_xk(Word& w, std::size_t k, int e) {
  if (e == 0) return;
  if (k == 0) {
    w.push_back({Gen::x0, e});
    return;
  }
  int shift = static_cast<int>(k) - 1;
  if (shift) w.push_back({Gen::x0, -shift});
  w.push_back({Gen::x1, e});
  if (shift) w.push_back({Gen::x0, shift});
}

}  // namespace

Word normal_form(const TreePair& p) {
  TreePair r = reduce(p);
  std::vector<int> pos = leaf_exponents(r.source());
  std::vector<int> neg = leaf_exponents(r.target());
  Word w;
  for (std::size_t k = 0; k < pos.size(); ++k) append_xk(w, k, pos[k]);
  for (std::size_t k = neg.size(); k-- > 0;) append_xk(w, k, -neg[k]);
  return simplify(w);
}

// ---- RotatedTreePair ----

RotatedTreePair::RotatedTreePair(BinaryTree source, BinaryTree target, std::size_t offset)
    : source_(std::move(source)), target_(std::move(target)), offset_(offset) {
  if (source_.leaves() != target_.leaves()) throw InvalidPair("rotated pair leaf counts differ");
  if (offset_ >= source_.leaves()) throw InvalidPair("rotated pair offset out of range");
}

RotatedTreePair::RotatedTreePair(const TreePair& p) : source_(p.source()), target_(p.target()) {}

std::string RotatedTreePair::to_string() const {
  return source_.to_string() + " -> " + target_.to_string() + " @" + std::to_string(offset_);
}

std::size_t RotatedTreePair::hash() const noexcept {
  std::size_t h = source_.hash();
  boost::hash_combine(h, target_.hash());
  boost::hash_combine(h, offset_);
  return h;
}

RotatedTreePair reduce(const RotatedTreePair& p) {
  Reduced r = reduce_depths(p.source().depths(), p.target().depths(), p.offset());
  return RotatedTreePair(BinaryTree::from_depths(std::move(r.source)),
                         BinaryTree::from_depths(std::move(r.target)), r.offset);
}

RotatedTreePair t_multiply(const RotatedTreePair& p, const RotatedTreePair& q) {
  std::size_t np = p.source().leaves(), nq = q.source().leaves();
  Refinement r = common_refinement(p.target(), q.source());
  const auto& u = r.tree.depths();
  auto start_a = starts_of(r.counts_a);
  auto start_b = starts_of(r.counts_b);

  std::vector<std::size_t> under_p(np), under_q(nq);
  for (std::size_t i = 0; i < np; ++i) under_p[i] = (i + p.offset()) % np;
  for (std::size_t j = 0; j < nq; ++j) under_q[j] = (j + nq - q.offset()) % nq;
  auto s = graft(p.source().depths(), p.target().depths(), u, r.counts_a, start_a, under_p);
  auto t = graft(q.target().depths(), q.source().depths(), u, r.counts_b, start_b, under_q);

  // Where the first new source leaf lands in the new target.
  std::uint32_t u0 = start_a[p.offset()];
  std::size_t j0 = static_cast<std::size_t>(
      std::upper_bound(start_b.begin(), start_b.end(), u0) - start_b.begin() - 1);
  std::uint32_t r0 = u0 - start_b[j0];
  std::size_t tq_leaf = (j0 + q.offset()) % nq;
  std::size_t t_start = 0;
  for (std::size_t j = 0; j < tq_leaf; ++j) t_start += r.counts_b[under_q[j]];
  std::size_t offset = (t_start + r0) % s.size();

  Reduced red = reduce_depths(s, t, offset);
  return RotatedTreePair(BinaryTree::from_depths(std::move(red.source)),
                         BinaryTree::from_depths(std::move(red.target)), red.offset);
}

RotatedTreePair invert(const RotatedTreePair& p) {
  std::size_t n = p.source().leaves();
  return RotatedTreePair(p.target(), p.source(), (n - p.offset()) % n);
}

bool t_is_in_F(const RotatedTreePair& p) { return p.offset() == 0; }

TreePair to_tree_pair(const RotatedTreePair& p) {
  if (p.offset() != 0) throw NotInF("rotated pair has non-zero offset " + std::to_string(p.offset()));
  return TreePair(p.source(), p.target());
}

const RotatedTreePair& t_pair() {
  static const RotatedTreePair p(BinaryTree::parse("(L L)"), BinaryTree::parse("(L L)"), 1);
  return p;
}

RotatedTreePair eval_t_word(std::span<const Letter> w) {
  static constexpr Gen allowed[] = {Gen::x0, Gen::x1, Gen::t};
  check_alphabet(w, allowed, "a T word");
  static const RotatedTreePair x0(x0_pair()), x1(x1_pair());
  RotatedTreePair acc;
  for (const Letter& l : w) {
    const RotatedTreePair& g = l.gen == Gen::x0 ? x0 : l.gen == Gen::x1 ? x1 : t_pair();
    RotatedTreePair step = l.exponent < 0 ? invert(g) : g;
    for (int k = 0; k < std::abs(l.exponent); ++k) acc = t_multiply(acc, step);
  }
  return acc;
}

RotatedTreePair eval_t_word(std::string_view text) { return eval_t_word(parse_word(text)); }

}  // namespace autf
