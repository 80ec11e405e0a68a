#include "autf/eptree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "autf/errors.hpp"
#include "tree_nodes.hpp"

namespace autf {

namespace {

using Depths = std::vector<std::uint16_t>;

std::int64_t floor_int(const Dyadic& d) { return d.floor().as_int64(); }
std::int64_t ceil_int(const Dyadic& d) { return d.ceil().as_int64(); }

std::int64_t window_leaves(const EPTree& t) {
  std::int64_t n = 0;
  for (const BinaryTree& b : t.window_trees) n += static_cast<std::int64_t>(b.leaves());
  return n;
}

BinaryTree mirrored(const BinaryTree& t) {
  Depths d(t.depths().rbegin(), t.depths().rend());
  return BinaryTree::from_depths(std::move(d));
}

// Boxes k <= lo use tree(lo), boxes k >= hi - 1 use tree(hi - 1).
EPTree make_tree(std::int64_t lo, std::int64_t hi, const std::function<BinaryTree(std::int64_t)>& tree) {
  EPTree t;
  t.left_block = tree(lo);
  t.right_block = tree(hi - 1);
  t.window = std::max<std::int64_t>({0, hi - 1, -lo - 1});
  for (std::int64_t k = -t.window; k < t.window; ++k) t.window_trees.push_back(tree(std::clamp(k, lo, hi - 1)));
  t.shrink();
  return t;
}

// A finite run of boxes [lo, lo + boxes.size()) with relative leaf indices.
struct Strip {
  std::int64_t lo = 0;
  std::vector<Depths> boxes;
  std::vector<std::int64_t> start;  // relative index of each box's first leaf, plus one past the end

  std::int64_t hi() const { return lo + static_cast<std::int64_t>(boxes.size()); }
  const Depths& box(std::int64_t k) const { return boxes[static_cast<std::size_t>(k - lo)]; }
  std::int64_t first() const { return start.front(); }
  std::int64_t last() const { return start.back(); }

  void index_from(std::int64_t first_index) {
    start.assign(1, first_index);
    for (const Depths& d : boxes) start.push_back(start.back() + static_cast<std::int64_t>(d.size()));
  }
  // Relative indices with box 0 starting at 0.
  void index_at_zero() {
    if (lo > 0 || hi() <= 0) throw std::logic_error("strip does not contain [0,1]");
    index_from(0);
    std::int64_t shift = start[static_cast<std::size_t>(-lo)];
    for (std::int64_t& s : start) s -= shift;
  }
  std::pair<std::int64_t, std::size_t> locate(std::int64_t i) const {
    if (i < first() || i >= last()) throw std::logic_error("leaf outside strip");
    auto it = std::upper_bound(start.begin(), start.end(), i) - 1;
    auto b = static_cast<std::size_t>(it - start.begin());
    return {lo + static_cast<std::int64_t>(b), static_cast<std::size_t>(i - *it)};
  }
  std::int64_t index_of(std::int64_t k, std::size_t local) const {
    return start[static_cast<std::size_t>(k - lo)] + static_cast<std::int64_t>(local);
  }
};

Strip materialize(const EPTree& t, std::int64_t lo, std::int64_t hi) {
  Strip s;
  s.lo = lo;
  for (std::int64_t k = lo; k < hi; ++k) s.boxes.push_back(t.at(k).depths());
  s.index_from(t.leaves_before(lo));
  return s;
}

// Block detection on an exactly computed strip; the runs at both ends are
// the periodic tails.
EPTree compress(const Strip& s) {
  std::int64_t lo = s.lo, hi = s.hi();
  std::int64_t k0 = hi - 1;
  while (k0 > lo && s.box(k0 - 1) == s.box(hi - 1)) --k0;
  std::int64_t k1 = lo;
  while (k1 + 1 < hi && s.box(k1 + 1) == s.box(lo)) ++k1;
  if (hi - k0 < 2 || k1 - lo + 1 < 2) throw std::logic_error("tree route: strip too short to see the tails");
  return make_tree(k1, k0 + 1, [&](std::int64_t k) { return BinaryTree::from_depths(s.box(k)); });
}

// Cancels carets shared by source and target; source leaf i pairs with target
// leaf i + mark. Only boxes whose leaves are all paired come out exact, and
// the result keeps just those.
EPTreePair reduce_and_compress(const Strip& src, const Strip& tgt, std::int64_t mark) {
  using detail::Nodes;
  // Source boxes whose images lie inside the target strip.
  std::int64_t s0 = src.lo, s1 = src.hi();
  while (s0 < s1 && src.start[static_cast<std::size_t>(s0 - src.lo)] + mark < tgt.first()) ++s0;
  while (s1 > s0 && src.start[static_cast<std::size_t>(s1 - src.lo)] + mark > tgt.last()) --s1;
  if (s0 > 0 || s1 <= 0) throw std::logic_error("tree route: [0,1] not covered");

  std::vector<Nodes> sn, tn;
  for (std::int64_t k = s0; k < s1; ++k) sn.emplace_back(src.box(k));
  for (const Depths& d : tgt.boxes) tn.emplace_back(d);

  struct Entry {
    std::int64_t sbox;
    int snode;
    std::int64_t tbox;
    int tnode;
  };
  std::vector<Entry> stack;
  std::int64_t first_image = src.index_of(s0, 0) + mark;
  std::int64_t end_image = src.start[static_cast<std::size_t>(s1 - src.lo)] + mark;
  for (std::int64_t k = s0; k < s1; ++k) {
    const Nodes& ns = sn[static_cast<std::size_t>(k - s0)];
    for (std::size_t l = 0; l < src.box(k).size(); ++l) {
      auto [m, j] = tgt.locate(src.index_of(k, l) + mark);
      const Nodes& nt = tn[static_cast<std::size_t>(m - tgt.lo)];
      stack.push_back({k, ns.leaf_node[l], m, nt.leaf_node[j]});
      while (stack.size() >= 2) {
        const Entry& a = stack[stack.size() - 2];
        const Entry& b = stack.back();
        if (a.sbox != b.sbox || a.tbox != b.tbox) break;
        const Nodes& as = sn[static_cast<std::size_t>(a.sbox - s0)];
        const Nodes& at = tn[static_cast<std::size_t>(a.tbox - tgt.lo)];
        int ps = as.parent[static_cast<std::size_t>(a.snode)];
        int pt = at.parent[static_cast<std::size_t>(a.tnode)];
        if (ps < 0 || pt < 0 || ps != as.parent[static_cast<std::size_t>(b.snode)] ||
            pt != at.parent[static_cast<std::size_t>(b.tnode)] || !at.is_left[static_cast<std::size_t>(a.tnode)]) {
          break;
        }
        Entry merged{a.sbox, ps, a.tbox, pt};
        stack.pop_back();
        stack.back() = merged;
      }
    }
  }

  Strip rs;
  rs.lo = s0;
  rs.boxes.resize(static_cast<std::size_t>(s1 - s0));
  for (const Entry& e : stack) {
    rs.boxes[static_cast<std::size_t>(e.sbox - s0)].push_back(
        sn[static_cast<std::size_t>(e.sbox - s0)].depth[static_cast<std::size_t>(e.snode)]);
  }
  rs.index_at_zero();

  // Target boxes whose leaves are all images.
  std::int64_t t0 = tgt.lo, t1 = tgt.hi();
  while (t0 < t1 && tgt.start[static_cast<std::size_t>(t0 - tgt.lo)] < first_image) ++t0;
  while (t1 > t0 && tgt.start[static_cast<std::size_t>(t1 - tgt.lo)] > end_image) --t1;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint16_t>>> tb(static_cast<std::size_t>(t1 - t0));
  for (const Entry& e : stack) {
    if (e.tbox < t0 || e.tbox >= t1) continue;
    const Nodes& nt = tn[static_cast<std::size_t>(e.tbox - tgt.lo)];
    tb[static_cast<std::size_t>(e.tbox - t0)].emplace_back(nt.first_leaf[static_cast<std::size_t>(e.tnode)],
                                                           nt.depth[static_cast<std::size_t>(e.tnode)]);
  }
  Strip rt;
  rt.lo = t0;
  for (auto& v : tb) {
    std::sort(v.begin(), v.end());
    Depths d;
    for (auto& [fl, dep] : v) d.push_back(dep);
    rt.boxes.push_back(std::move(d));
  }
  rt.index_at_zero();

  // Image of the first source leaf of [0,1].
  const Entry* e0 = nullptr;
  for (const Entry& e : stack) {
    if (e.sbox == 0) {
      e0 = &e;
      break;
    }
  }
  if (e0 == nullptr || e0->tbox < t0 || e0->tbox >= t1) throw std::logic_error("tree route: mark not covered");
  const Nodes& nt0 = tn[static_cast<std::size_t>(e0->tbox - tgt.lo)];
  std::uint32_t fl0 = nt0.first_leaf[static_cast<std::size_t>(e0->tnode)];
  const auto& v0 = tb[static_cast<std::size_t>(e0->tbox - t0)];
  std::size_t rank = 0;
  while (v0[rank].first != fl0) ++rank;

  EPTreePair out;
  out.source = compress(rs);
  out.target = compress(rt);
  out.target_mark = rt.index_of(e0->tbox, rank);
  return out;
}

std::int64_t route_margin(const EPTreePair& p) {
  return p.source.window + p.target.window + window_leaves(p.source) + window_leaves(p.target) +
         std::abs(p.target_mark);
}

// Boxes of `t` that hold the relative leaves [first, last).
std::pair<std::int64_t, std::int64_t> boxes_holding(const EPTree& t, std::int64_t first, std::int64_t last) {
  return {t.locate(first).first, t.locate(last - 1).first + 1};
}

EPTree single_leaves() { return EPTree{}; }

}  // namespace

// ---- EPTree ----

const BinaryTree& EPTree::at(std::int64_t k) const {
  if (k < -window) return left_block;
  if (k >= window) return right_block;
  return window_trees[static_cast<std::size_t>(k + window)];
}

std::int64_t EPTree::leaves_before(std::int64_t k) const {
  std::int64_t n = 0;
  if (k >= 0) {
    for (std::int64_t j = 0; j < std::min(k, window); ++j) n += static_cast<std::int64_t>(at(j).leaves());
    if (k > window) n += (k - window) * static_cast<std::int64_t>(right_block.leaves());
    return n;
  }
  for (std::int64_t j = std::max(k, -window); j < 0; ++j) n += static_cast<std::int64_t>(at(j).leaves());
  if (k < -window) n += (-window - k) * static_cast<std::int64_t>(left_block.leaves());
  return -n;
}

std::pair<std::int64_t, std::size_t> EPTree::locate(std::int64_t i) const {
  std::int64_t right = leaves_before(window), left = leaves_before(-window);
  if (i >= right) {
    auto b = static_cast<std::int64_t>(right_block.leaves());
    std::int64_t r = i - right;
    return {window + r / b, static_cast<std::size_t>(r % b)};
  }
  if (i < left) {
    auto b = static_cast<std::int64_t>(left_block.leaves());
    std::int64_t r = left - 1 - i;
    return {-window - 1 - r / b, static_cast<std::size_t>(b - 1 - r % b)};
  }
  std::int64_t k = -window, s = left;
  while (s + static_cast<std::int64_t>(at(k).leaves()) <= i) s += static_cast<std::int64_t>(at(k++).leaves());
  return {k, static_cast<std::size_t>(i - s)};
}

std::int64_t EPTree::leaf_containing(const Dyadic& x) const {
  std::int64_t k = floor_int(x);
  auto b = at(k).boundaries();
  Dyadic u = x - Dyadic(k);
  auto local = static_cast<std::int64_t>(std::upper_bound(b.begin(), b.end(), u) - b.begin()) - 1;
  return leaves_before(k) + local;
}

std::pair<Dyadic, int> EPTree::leaf_interval(std::int64_t i) const {
  auto [k, local] = locate(i);
  const BinaryTree& t = at(k);
  return {t.boundaries()[local] + Dyadic(k), t.depths()[local]};
}

void EPTree::shrink() {
  while (window > 0 && window_trees.back() == right_block && window_trees.front() == left_block) {
    window_trees.pop_back();
    window_trees.erase(window_trees.begin());
    --window;
  }
}

void EPTreePair::validate() const {
  if (source.right_block.leaves() != target.right_block.leaves() ||
      source.left_block.leaves() != target.left_block.leaves()) {
    throw InvalidPair("source and target blocks have different leaf counts");
  }
  for (const EPTree* t : {&source, &target}) {
    if (t->window < 0 || t->window_trees.size() != static_cast<std::size_t>(2 * t->window)) {
      throw InvalidPair("window tree count does not match the window");
    }
  }
}

// ---- views ----

EPTreePair eptree_view(const EPMap& f) {
  std::int64_t m = f.window();
  std::map<std::int64_t, std::vector<LeafImage>> subs;
  auto sub = [&](std::int64_t k) -> const std::vector<LeafImage>& {
    auto it = subs.find(k);
    if (it == subs.end()) it = subs.emplace(k, box_subdivision(f, k)).first;
    return it->second;
  };
  auto tree_of = [](const std::vector<LeafImage>& leaves) {
    Depths d;
    for (const LeafImage& l : leaves) d.push_back(l.depth);
    return BinaryTree::from_depths(std::move(d));
  };

  EPTreePair out;
  out.source = make_tree(-m - 1, m + 1, [&](std::int64_t k) { return tree_of(sub(k)); });

  std::int64_t nlo = floor_int(f(Dyadic(-m))) - 1, nhi = ceil_int(f(Dyadic(m))) + 1;
  std::int64_t klo = floor_int(f.inverse_at(Dyadic(nlo))), khi = ceil_int(f.inverse_at(Dyadic(nhi)));
  std::map<std::int64_t, std::vector<std::pair<Dyadic, std::uint16_t>>> images;
  for (std::int64_t k = klo; k < khi; ++k) {
    for (const LeafImage& l : sub(k)) images[floor_int(l.image)].emplace_back(l.image, l.image_depth);
  }
  out.target = make_tree(nlo, nhi, [&](std::int64_t n) {
    auto& v = images.at(n);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Depths d;
    for (auto& [x, dep] : v) d.push_back(dep);
    return BinaryTree::from_depths(std::move(d));
  });
  out.target_mark = out.target.leaf_containing(f(Dyadic(0)));
  return out;
}

EPMap eptree_to_map(const EPTreePair& p) {
  p.validate();
  const EPTree& s = p.source;
  const EPTree& t = p.target;
  std::int64_t mark = p.target_mark;
  std::int64_t m = std::max(s.window, t.window);
  while (s.leaves_before(m) + mark < t.leaves_before(t.window) ||
         s.leaves_before(-m) + mark > t.leaves_before(-t.window)) {
    ++m;
  }
  std::vector<Dyadic> cands;
  for (std::int64_t k = -m - 1; k <= m; ++k) {
    for (const Dyadic& b : s.at(k).boundaries()) cands.push_back(b + Dyadic(k));
  }
  return EPMap::build(m, std::move(cands), [&](const Dyadic& x) {
    std::int64_t i = s.leaf_containing(x);
    auto [a, ds] = s.leaf_interval(i);
    auto [b, dt] = t.leaf_interval(i + mark);
    return b + (x - a).scaled(ds - dt);
  });
}

// ---- tree route ----

EPTreePair ep_normalize(const EPTreePair& p) {
  p.validate();
  std::int64_t k = 2 * route_margin(p) + 8;
  Strip src = materialize(p.source, -k, k);
  auto [a, b] = boxes_holding(p.target, src.first() + p.target_mark, src.last() + p.target_mark);
  Strip tgt = materialize(p.target, a, b);
  return reduce_and_compress(src, tgt, p.target_mark);
}

EPTreePair ep_multiply(const EPTreePair& p, const EPTreePair& q) {
  p.validate();
  q.validate();
  std::int64_t k = 2 * (route_margin(p) + route_margin(q)) + 8;
  Strip sp = materialize(p.source, -k, k);
  auto [a, b] = boxes_holding(p.target, sp.first() + p.target_mark, sp.last() + p.target_mark);
  Strip tp = materialize(p.target, a, b);
  Strip sq = materialize(q.source, a, b);

  std::vector<Refinement> u;
  std::vector<std::vector<std::uint32_t>> cum_a, cum_b;
  for (std::int64_t n = a; n < b; ++n) {
    u.push_back(common_refinement(BinaryTree::from_depths(tp.box(n)), BinaryTree::from_depths(sq.box(n))));
    for (auto [counts, cum] : {std::pair{&u.back().counts_a, &cum_a}, std::pair{&u.back().counts_b, &cum_b}}) {
      std::vector<std::uint32_t> c{0};
      for (std::uint32_t x : *counts) c.push_back(c.back() + x);
      cum->push_back(std::move(c));
    }
  }
  auto ubox = [&](std::int64_t n) { return static_cast<std::size_t>(n - a); };

  // Source: each leaf of p's source takes the refinement of its image.
  Strip src;
  src.lo = sp.lo;
  for (std::int64_t kk = sp.lo; kk < sp.hi(); ++kk) {
    Depths d;
    for (std::size_t l = 0; l < sp.box(kk).size(); ++l) {
      auto [n, j] = tp.locate(sp.index_of(kk, l) + p.target_mark);
      const auto& ud = u[ubox(n)].tree.depths();
      int shift = int(sp.box(kk)[l]) - int(tp.box(n)[j]);
      for (std::uint32_t x = cum_a[ubox(n)][j]; x < cum_a[ubox(n)][j + 1]; ++x) {
        d.push_back(static_cast<std::uint16_t>(int(ud[x]) + shift));
      }
    }
    src.boxes.push_back(std::move(d));
  }
  src.index_at_zero();

  // Target: each leaf of q's target takes the refinement of its preimage,
  // over the boxes whose preimages are all in [a, b).
  std::int64_t first = sq.first() + q.target_mark, last = sq.last() + q.target_mark;
  auto [c0, l0] = q.target.locate(first);
  auto [e0, l1] = q.target.locate(last - 1);
  std::int64_t c = l0 == 0 ? c0 : c0 + 1;
  std::int64_t e = l1 + 1 == q.target.at(e0).leaves() ? e0 + 1 : e0;
  Strip tq = materialize(q.target, c, e);
  Strip tgt;
  tgt.lo = c;
  std::vector<std::vector<std::int64_t>> refined_before;
  for (std::int64_t m = c; m < e; ++m) {
    Depths d;
    std::vector<std::int64_t> before;
    for (std::size_t l = 0; l < tq.box(m).size(); ++l) {
      before.push_back(static_cast<std::int64_t>(d.size()));
      auto [n, j] = sq.locate(tq.index_of(m, l) - q.target_mark);
      const auto& ud = u[ubox(n)].tree.depths();
      int shift = int(tq.box(m)[l]) - int(sq.box(n)[j]);
      for (std::uint32_t x = cum_b[ubox(n)][j]; x < cum_b[ubox(n)][j + 1]; ++x) {
        d.push_back(static_cast<std::uint16_t>(int(ud[x]) + shift));
      }
    }
    tgt.boxes.push_back(std::move(d));
    refined_before.push_back(std::move(before));
  }
  tgt.index_at_zero();

  // Follow the first source leaf of [0,1] through the common refinement.
  auto [n, j] = tp.locate(p.target_mark);
  std::uint32_t leaf_u = cum_a[ubox(n)][j];
  const auto& cb = cum_b[ubox(n)];
  auto jj = static_cast<std::size_t>(std::upper_bound(cb.begin(), cb.end(), leaf_u) - cb.begin()) - 1;
  std::int64_t r = leaf_u - cb[jj];
  auto [mm, ll] = tq.locate(sq.index_of(n, jj) + q.target_mark);
  std::int64_t mark = tgt.index_of(mm, 0) + refined_before[static_cast<std::size_t>(mm - c)][ll] + r;
  return reduce_and_compress(src, tgt, mark);
}

EPTreePair ep_invert(const EPTreePair& p) {
  EPTreePair out;
  out.source = p.target;
  out.target = p.source;
  out.target_mark = -p.target_mark;
  return out;
}

EPTreePair ep_mirror(const EPTreePair& p) {
  auto mirror = [](const EPTree& t) {
    EPTree m;
    m.window = t.window;
    m.left_block = mirrored(t.right_block);
    m.right_block = mirrored(t.left_block);
    for (auto it = t.window_trees.rbegin(); it != t.window_trees.rend(); ++it) m.window_trees.push_back(mirrored(*it));
    return m;
  };
  EPTreePair out;
  out.source = mirror(p.source);
  out.target = mirror(p.target);
  out.target_mark = -p.target_mark;
  return out;
}

EPTreePair ep_transport(const TreePair& p, int orientation) {
  if (orientation != 1 && orientation != -1) throw InvalidMap("orientation must be +1 or -1");
  Depths s = p.source().depths(), t = p.target().depths();
  // Lengthen both outer spines to at least two carets so the root splits at
  // 1/2 with [0,1] hanging below it.
  while (s.back() < 2 || t.back() < 2) {
    for (Depths* d : {&s, &t}) {
      std::uint16_t x = d->back();
      d->back() = static_cast<std::uint16_t>(x + 1);
      d->push_back(static_cast<std::uint16_t>(x + 1));
    }
  }
  while (s.front() < 2 || t.front() < 2) {
    for (Depths* d : {&s, &t}) {
      std::uint16_t x = d->front();
      d->front() = static_cast<std::uint16_t>(x + 1);
      d->insert(d->begin(), static_cast<std::uint16_t>(x + 1));
    }
  }
  // Leaves strictly between the outer ones land in boxes -dL+1 .. dR-2; the
  // outer leaves become the single-leaf tails.
  auto to_line = [](const Depths& d, std::int64_t& before_half) {
    BinaryTree tree = BinaryTree::from_depths(d);
    auto bounds = tree.boundaries();
    std::map<std::int64_t, Depths> boxes;
    before_half = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (bounds[i] < Dyadic::pow2(-1)) ++before_half;
      if (i == 0 || i + 1 == d.size()) continue;
      std::int64_t k = floor_int(phi(bounds[i]));
      std::int64_t depth = k >= 0 ? d[i] - k - 2 : d[i] + k - 1;
      boxes[k].push_back(static_cast<std::uint16_t>(depth));
    }
    EPTree e;
    e.window = std::max<std::int64_t>(d.back() - 1, d.front() - 1);
    for (std::int64_t k = -e.window; k < e.window; ++k) {
      auto it = boxes.find(k);
      e.window_trees.push_back(it == boxes.end() ? BinaryTree() : BinaryTree::from_depths(it->second));
    }
    return e;
  };
  std::int64_t ps = 0, pt = 0;
  EPTreePair out;
  out.source = to_line(s, ps);
  out.target = to_line(t, pt);
  out.target_mark = ps - pt;
  if (orientation == -1) out = ep_mirror(out);
  return ep_normalize(out);
}

EPTreePair ep_lift(const TreePair& w, Side side) {
  EPTreePair out;
  (side == Side::positive ? out.source.right_block : out.source.left_block) = w.source();
  (side == Side::positive ? out.target.right_block : out.target.left_block) = w.target();
  return ep_normalize(out);
}

EPTreePair ep_sigma(const TreePair& w) {
  EPTreePair out;
  out.source.left_block = out.source.right_block = w.source();
  out.target.left_block = out.target.right_block = w.target();
  return ep_normalize(out);
}

EPTreePair ep_eval(const GeneratorCatalog& cat, std::span<const Letter> w) {
  check_alphabet(w, kAutGens, "Aut+F word");
  const Convention& c = cat.convention();
  Side z_side = c.y_side == Side::positive ? Side::negative : Side::positive;
  auto gen = [&](Gen g) {
    switch (g) {
      case Gen::x0: return ep_transport(cat.f_generator(0), c.phi_orientation);
      case Gen::x1: return ep_transport(cat.f_generator(1), c.phi_orientation);
      case Gen::y0: return ep_lift(cat.f_generator(0), c.y_side);
      case Gen::y1: return ep_lift(cat.f_generator(1), c.y_side);
      case Gen::z0: return ep_lift(cat.f_generator(0), z_side);
      case Gen::z1: return ep_lift(cat.f_generator(1), z_side);
      case Gen::w0: return ep_sigma(cat.f_generator(0));
      case Gen::w1: return ep_sigma(cat.f_generator(1));
      default: break;
    }
    throw ParseError("generator t is not an element of Aut+F", 0);
  };
  EPTreePair acc{single_leaves(), single_leaves(), 0};
  for (const Letter& l : w) {
    EPTreePair g = gen(l.gen);
    if (l.exponent < 0) g = ep_invert(g);
    for (int k = 0; k < std::abs(l.exponent); ++k) acc = ep_multiply(acc, g);
  }
  return acc;
}

}  // namespace autf
