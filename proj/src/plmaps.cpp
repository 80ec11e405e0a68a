#include "autf/plmaps.hpp"

#include <algorithm>

#include <boost/container_hash/hash.hpp>

#include "autf/errors.hpp"

namespace autf {

namespace {

constexpr int kMaxSplitDepth = 4096;

// log2 of the slope of each segment; throws InvalidMap unless every
// segment is strictly increasing with a power-of-two slope.
std::vector<int> segment_slopes(const std::vector<Point>& pts) {
  std::vector<int> s;
  s.reserve(pts.size());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Dyadic dx = pts[i + 1].x - pts[i].x;
    Dyadic dy = pts[i + 1].y - pts[i].y;
    if (dx.sign() <= 0 || dy.sign() <= 0) {
      throw InvalidMap("breakpoints not strictly increasing at x = " + pts[i].x.to_string());
    }
    auto k = power_ratio(dy, dx);
    if (!k) throw InvalidMap("slope is not a power of two at x = " + pts[i].x.to_string());
    s.push_back(k->exponent);
  }
  return s;
}

// Drops interior points whose two neighbouring segments have equal slope.
void drop_collinear(std::vector<Point>& pts, std::vector<int>& slopes) {
  if (pts.size() <= 2) return;
  std::vector<Point> p;
  std::vector<int> s;
  p.reserve(pts.size());
  s.reserve(slopes.size());
  p.push_back(std::move(pts[0]));
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    if (slopes[i - 1] == slopes[i]) continue;
    s.push_back(slopes[i - 1]);
    p.push_back(std::move(pts[i]));
  }
  s.push_back(slopes.back());
  p.push_back(std::move(pts.back()));
  pts = std::move(p);
  slopes = std::move(s);
}

std::size_t segment_of(const std::vector<Point>& pts, const Dyadic& x) {
  auto it = std::upper_bound(pts.begin(), pts.end(), x,
                             [](const Dyadic& v, const Point& p) { return v < p.x; });
  std::size_t i = it == pts.begin() ? 0 : static_cast<std::size_t>(it - pts.begin()) - 1;
  return std::min(i, pts.size() - 2);
}

std::size_t segment_of_y(const std::vector<Point>& pts, const Dyadic& y) {
  auto it = std::upper_bound(pts.begin(), pts.end(), y,
                             [](const Dyadic& v, const Point& p) { return v < p.y; });
  std::size_t i = it == pts.begin() ? 0 : static_cast<std::size_t>(it - pts.begin()) - 1;
  return std::min(i, pts.size() - 2);
}

Dyadic interp(const std::vector<Point>& pts, const std::vector<int>& slopes, const Dyadic& x) {
  std::size_t i = segment_of(pts, x);
  return pts[i].y + (x - pts[i].x).scaled(slopes[i]);
}

Dyadic interp_inverse(const std::vector<Point>& pts, const std::vector<int>& slopes,
                      const Dyadic& y) {
  std::size_t i = segment_of_y(pts, y);
  return pts[i].x + (y - pts[i].y).scaled(-slopes[i]);
}

void sort_unique(std::vector<Dyadic>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::int64_t ceil_int(const Dyadic& d) { return d.ceil().as_int64(); }
std::int64_t floor_int(const Dyadic& d) { return d.floor().as_int64(); }

// Standard dyadic subdivision of [0,1] into pieces on which `eval` is linear
// with a standard dyadic image. `cuts` holds the points where it may bend
// (sorted, inside (0,1)). Calls leaf(start, depth, image_start, slope_log2).
template <class Eval, class Leaf>
void split_standard(const Dyadic& a, int depth, const std::vector<Dyadic>& cuts, const Eval& eval,
                    bool modular, const Leaf& leaf) {
  if (depth > kMaxSplitDepth) throw InvalidMap("subdivision does not terminate");
  Dyadic len = Dyadic::pow2(-depth);
  Dyadic b = a + len;
  auto it = std::upper_bound(cuts.begin(), cuts.end(), a);
  bool bent = it != cuts.end() && *it < b;
  if (!bent) {
    Dyadic ya = eval(a);
    Dyadic yb = eval(b);
    auto slope = power_ratio(yb - ya, len);
    if (!slope) throw InvalidMap("slope is not a power of two");
    int image_depth = depth - slope->exponent;
    Dyadic start = modular ? ya - ya.floor() : ya;
    if (image_depth >= 0 && start.scaled(image_depth).is_integer()) {
      leaf(a, depth, start, image_depth);
      return;
    }
  }
  split_standard(a, depth + 1, cuts, eval, modular, leaf);
  split_standard(a + len.scaled(-1), depth + 1, cuts, eval, modular, leaf);
}

std::uint16_t as_depth(int d) {
  if (d < 0 || d > 65535) throw InvalidMap("leaf depth out of range");
  return static_cast<std::uint16_t>(d);
}

}  // namespace

// ---- PLMap01 ----

PLMap01::PLMap01() : points_{{0, 0}, {1, 1}}, slopes_{0} {}

PLMap01 PLMap01::from_points(std::vector<Point> points) {
  if (points.size() < 2 || points.front() != Point{0, 0} || points.back() != Point{1, 1}) {
    throw InvalidMap("map of [0,1] must run from (0,0) to (1,1)");
  }
  PLMap01 f;
  f.slopes_ = segment_slopes(points);
  f.points_ = std::move(points);
  drop_collinear(f.points_, f.slopes_);
  return f;
}

Dyadic PLMap01::operator()(const Dyadic& x) const {
  if (x < Dyadic(0) || x > Dyadic(1)) throw DomainError("argument outside [0,1]: " + x.to_string());
  return interp(points_, slopes_, x);
}

Dyadic PLMap01::inverse_at(const Dyadic& y) const {
  if (y < Dyadic(0) || y > Dyadic(1)) throw DomainError("argument outside [0,1]: " + y.to_string());
  return interp_inverse(points_, slopes_, y);
}

PLMap01 compose(const PLMap01& f, const PLMap01& g) {
  std::vector<Dyadic> xs;
  for (const Point& p : f.points()) xs.push_back(p.x);
  for (const Point& p : g.points()) xs.push_back(f.inverse_at(p.x));
  sort_unique(xs);
  std::vector<Point> pts;
  pts.reserve(xs.size());
  for (const Dyadic& x : xs) pts.push_back({x, g(f(x))});
  return PLMap01::from_points(std::move(pts));
}

PLMap01 invert(const PLMap01& f) {
  std::vector<Point> pts;
  pts.reserve(f.points().size());
  for (const Point& p : f.points()) pts.push_back({p.y, p.x});
  return PLMap01::from_points(std::move(pts));
}

PLMap01 tree_to_map01(const TreePair& p) {
  auto bs = p.source().boundaries();
  auto bt = p.target().boundaries();
  std::vector<Point> pts;
  pts.reserve(bs.size());
  for (std::size_t i = 0; i < bs.size(); ++i) pts.push_back({bs[i], bt[i]});
  return PLMap01::from_points(std::move(pts));
}

TreePair map01_to_tree(const PLMap01& f) {
  std::vector<Dyadic> cuts;
  for (std::size_t i = 1; i + 1 < f.points().size(); ++i) cuts.push_back(f.points()[i].x);
  std::vector<std::uint16_t> s, t;
  split_standard(Dyadic(0), 0, cuts, f, false,
                 [&](const Dyadic&, int depth, const Dyadic&, int image_depth) {
                   s.push_back(as_depth(depth));
                   t.push_back(as_depth(image_depth));
                 });
  return reduce(TreePair(BinaryTree::from_depths(std::move(s)), BinaryTree::from_depths(std::move(t))));
}

// ---- EPMap ----

EPMap::EPMap() : EPMap(0, {{-1, -1}, {1, 1}}, {0}) {}

EPMap::EPMap(std::int64_t window, std::vector<Point> points, std::vector<int> slopes)
    : window_(window), points_(std::move(points)), slopes_(std::move(slopes)) {
  std::size_t h = std::hash<std::int64_t>{}(window_);
  for (const Point& p : points_) {
    boost::hash_combine(h, p.x.hash());
    boost::hash_combine(h, p.y.hash());
  }
  hash_ = h;
}

EPMap EPMap::build(std::int64_t window, std::vector<Dyadic> candidates,
                   const std::function<Dyadic(const Dyadic&)>& eval) {
  if (window < 0) throw InvalidMap("negative window");
  Dyadic lo(-window - 1), hi(window + 1);
  std::erase_if(candidates, [&](const Dyadic& x) { return x < lo || x > hi; });
  for (std::int64_t k = -window - 1; k <= window + 1; ++k) candidates.emplace_back(k);
  sort_unique(candidates);

  std::vector<Point> pts;
  pts.reserve(candidates.size());
  for (Dyadic& x : candidates) {
    Dyadic y = eval(x);
    pts.push_back({std::move(x), std::move(y)});
  }
  std::vector<int> slopes = segment_slopes(pts);

  auto value_at = [&](const Dyadic& x) { return interp(pts, slopes, x); };
  auto periodic_from = [&](std::int64_t m) {
    // f(x+1) = f(x)+1 on [m-1, m] and f(x-1) = f(x)-1 on [-m, -m+1].
    for (const Point& p : pts) {
      if (p.x >= Dyadic(m - 1) && p.x <= Dyadic(m + 1)) {
        bool lower = p.x <= Dyadic(m);
        Dyadic other = lower ? p.x + Dyadic(1) : p.x - Dyadic(1);
        if (value_at(other) != (lower ? p.y + Dyadic(1) : p.y - Dyadic(1))) return false;
      }
      if (p.x >= Dyadic(-m - 1) && p.x <= Dyadic(-m + 1)) {
        bool upper = p.x >= Dyadic(-m);
        Dyadic other = upper ? p.x - Dyadic(1) : p.x + Dyadic(1);
        if (value_at(other) != (upper ? p.y - Dyadic(1) : p.y + Dyadic(1))) return false;
      }
    }
    return true;
  };
  if (value_at(hi) != value_at(Dyadic(window)) + Dyadic(1) ||
      value_at(Dyadic(-window)) != value_at(lo) + Dyadic(1)) {
    throw InvalidMap("periodic extension is inconsistent at the window edge");
  }
  std::int64_t m = window;
  while (m > 0 && periodic_from(m)) --m;
  if (m < window) {
    Dyadic nlo(-m - 1), nhi(m + 1);
    std::size_t first = 0, last = pts.size();
    while (pts[first].x < nlo) ++first;
    while (pts[last - 1].x > nhi) --last;
    pts = std::vector<Point>(pts.begin() + static_cast<std::ptrdiff_t>(first),
                             pts.begin() + static_cast<std::ptrdiff_t>(last));
    slopes = std::vector<int>(slopes.begin() + static_cast<std::ptrdiff_t>(first),
                              slopes.begin() + static_cast<std::ptrdiff_t>(last - 1));
  }
  drop_collinear(pts, slopes);
  return EPMap(m, std::move(pts), std::move(slopes));
}

EPMap EPMap::from_points(std::int64_t window, std::vector<Point> points) {
  if (window < 0) throw InvalidMap("negative window");
  if (points.size() < 2 || points.front().x != Dyadic(-window - 1) ||
      points.back().x != Dyadic(window + 1)) {
    throw InvalidMap("breakpoints must span exactly [-M-1, M+1]");
  }
  std::vector<int> slopes = segment_slopes(points);
  std::vector<Dyadic> xs;
  xs.reserve(points.size());
  for (const Point& p : points) xs.push_back(p.x);
  return build(window, std::move(xs), [&](const Dyadic& x) { return interp(points, slopes, x); });
}

EPMap EPMap::translation(std::int64_t k) {
  return EPMap(0, {{-1, Dyadic(-1 + k)}, {1, Dyadic(1 + k)}}, {0});
}

Dyadic EPMap::window_eval(const Dyadic& x) const { return interp(points_, slopes_, x); }

Dyadic EPMap::window_inverse(const Dyadic& y) const { return interp_inverse(points_, slopes_, y); }

Dyadic EPMap::operator()(const Dyadic& x) const {
  if (x > Dyadic(window_ + 1)) {
    Dyadic k = x.floor() - Dyadic(window_);
    return window_eval(x - k) + k;
  }
  if (x < Dyadic(-window_ - 1)) {
    Dyadic k = x.ceil() + Dyadic(window_);
    return window_eval(x - k) + k;
  }
  return window_eval(x);
}

Dyadic EPMap::inverse_at(const Dyadic& y) const {
  if (y > points_.back().y) {
    Dyadic edge = window_eval(Dyadic(window_));
    Dyadic k = (y - edge).floor();
    return window_inverse(y - k) + k;
  }
  if (y < points_.front().y) {
    Dyadic edge = window_eval(Dyadic(-window_));
    Dyadic k = (y - edge).ceil();
    return window_inverse(y - k) + k;
  }
  return window_inverse(y);
}

std::vector<Dyadic> EPMap::breakpoints_in(const Dyadic& lo, const Dyadic& hi) const {
  std::vector<Dyadic> out;
  std::size_t n = points_.size();
  Dyadic m(window_), m1(window_ + 1);
  // p, p + dir, p + 2 dir, ... (from the first-th step on) inside [lo, hi]
  auto repeat = [&](const Dyadic& p, int dir, std::int64_t first) {
    std::int64_t kmin = std::max(first, dir > 0 ? ceil_int(lo - p) : ceil_int(p - hi));
    std::int64_t kmax = dir > 0 ? floor_int(hi - p) : floor_int(p - lo);
    for (std::int64_t k = kmin; k <= kmax; ++k) out.push_back(dir > 0 ? p + Dyadic(k) : p - Dyadic(k));
  };
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const Dyadic& x = points_[i].x;
    if (x > m && x < m1) {
      repeat(x, 1, 0);
    } else if (x < -m && x > -m1) {
      repeat(x, -1, 0);
    } else if (x >= lo && x <= hi) {
      out.push_back(x);
    }
  }
  // Copies of the window edges bend iff the slopes across the block seam differ.
  auto left_of = [&](const Dyadic& x) {
    auto it = std::lower_bound(points_.begin(), points_.end(), x,
                               [](const Point& p, const Dyadic& v) { return p.x < v; });
    return slopes_[static_cast<std::size_t>(it - points_.begin()) - 1];
  };
  if (slopes_[segment_of(points_, m)] != slopes_.back()) repeat(m, 1, 1);
  if (left_of(-m) != slopes_.front()) repeat(-m, -1, 1);
  sort_unique(out);
  return out;
}

EPMap EPMap::mirror() const {
  std::vector<Point> pts;
  pts.reserve(points_.size());
  for (auto it = points_.rbegin(); it != points_.rend(); ++it) pts.push_back({-it->x, -it->y});
  std::vector<int> slopes(slopes_.rbegin(), slopes_.rend());
  return EPMap(window_, std::move(pts), std::move(slopes));
}

std::size_t EPMap::heap_bytes() const noexcept {
  std::size_t n = points_.capacity() * sizeof(Point) + slopes_.capacity() * sizeof(int);
  for (const Point& p : points_) n += p.x.heap_bytes() + p.y.heap_bytes();
  return n;
}

EPMap compose(const EPMap& f, const EPMap& g) {
  if (f.is_identity()) return g;
  if (g.is_identity()) return f;
  std::int64_t mg = g.window();
  std::int64_t m = std::max<std::int64_t>(
      {f.window(), ceil_int(f.inverse_at(Dyadic(mg))), ceil_int(-f.inverse_at(Dyadic(-mg))), 0});
  Dyadic lo(-m - 1), hi(m + 1);
  std::vector<Dyadic> cands = f.breakpoints_in(lo, hi);
  for (const Dyadic& b : g.breakpoints_in(f(lo), f(hi))) cands.push_back(f.inverse_at(b));
  return EPMap::build(m, std::move(cands), [&](const Dyadic& x) { return g(f(x)); });
}

EPMap invert(const EPMap& f) {
  if (f.is_identity()) return f;
  std::int64_t mf = f.window();
  std::int64_t m = std::max<std::int64_t>({ceil_int(f(Dyadic(mf))), ceil_int(-f(Dyadic(-mf))), 0});
  Dyadic lo(-m - 1), hi(m + 1);
  std::vector<Dyadic> cands;
  for (const Dyadic& b : f.breakpoints_in(f.inverse_at(lo), f.inverse_at(hi))) cands.push_back(f(b));
  return EPMap::build(m, std::move(cands), [&](const Dyadic& y) { return f.inverse_at(y); });
}

EPMap power(const EPMap& f, int e) {
  EPMap base = e < 0 ? invert(f) : f;
  EPMap acc;
  for (unsigned n = static_cast<unsigned>(std::abs(e)); n; n >>= 1) {
    if (n & 1) acc = compose(acc, base);
    if (n > 1) base = compose(base, base);
  }
  return acc;
}

std::optional<std::pair<std::int64_t, std::int64_t>> translations_at_infinity(const EPMap& f) {
  const auto& pts = f.points();
  Dyadic m(f.window()), m1(f.window() + 1);
  for (const Point& p : pts) {
    if ((p.x > m && p.x < m1) || (p.x < -m && p.x > -m1)) return std::nullopt;
  }
  Dyadic k = f(m) - m;
  Dyadic l = f(-m) + m;
  if (!k.is_integer() || !l.is_integer()) return std::nullopt;
  return std::make_pair(k.as_int64(), l.as_int64());
}

// ---- transport ----

Dyadic phi(const Dyadic& x) {
  if (x <= Dyadic(0) || x >= Dyadic(1)) throw DomainError("phi is defined on (0,1) only");
  Dyadic half = Dyadic::pow2(-1);
  if (x >= half) {
    Dyadic r = Dyadic(1) - x;
    std::int64_t lg = r.floor_log2();
    std::int64_t j = r == Dyadic::pow2(static_cast<int>(lg)) ? -lg : -lg - 1;
    Dyadic piece = Dyadic(1) - Dyadic::pow2(static_cast<int>(-j));
    return Dyadic(j - 1) + (x - piece).scaled(static_cast<int>(j + 1));
  }
  std::int64_t j = -x.floor_log2() - 1;
  return Dyadic(-j) + (x - Dyadic::pow2(static_cast<int>(-j - 1))).scaled(static_cast<int>(j + 1));
}

Dyadic phi_inverse(const Dyadic& t) {
  if (t.sign() >= 0) {
    std::int64_t j = floor_int(t) + 1;
    return Dyadic(1) - Dyadic::pow2(static_cast<int>(-j)) +
           (t - Dyadic(j - 1)).scaled(static_cast<int>(-(j + 1)));
  }
  std::int64_t j = -floor_int(t);
  return (Dyadic(1) + t + Dyadic(j)).scaled(static_cast<int>(-j - 1));
}

EPMap transport(const TreePair& p, int orientation) {
  if (orientation != 1 && orientation != -1) throw InvalidMap("orientation must be +1 or -1");
  PLMap01 f = tree_to_map01(p);
  if (f.is_identity()) return EPMap();
  const auto& pts = f.points();
  const Dyadic& last_start = pts[pts.size() - 2].x;
  const Dyadic& first_end = pts[1].x;
  std::int64_t m = std::max<std::int64_t>({0, ceil_int(phi(last_start)), ceil_int(phi(f(last_start))),
                                           ceil_int(-phi(first_end)), ceil_int(-phi(f(first_end)))});
  auto eval = [&](const Dyadic& t) { return phi(f(phi_inverse(t))); };
  std::vector<Dyadic> cands;
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) cands.push_back(phi(pts[i].x));
  Dyadic ylo = eval(Dyadic(-m - 1)), yhi = eval(Dyadic(m + 1));
  for (std::int64_t n = ceil_int(ylo); n <= floor_int(yhi); ++n) {
    cands.push_back(phi(f.inverse_at(phi_inverse(Dyadic(n)))));
  }
  EPMap g = EPMap::build(m, std::move(cands), eval);
  return orientation == 1 ? g : g.mirror();
}

TreePair strip_tails(const EPMap& g, int orientation) {
  if (orientation != 1 && orientation != -1) throw InvalidMap("orientation must be +1 or -1");
  EPMap f = orientation == 1 ? g : g.mirror();
  auto tr = translations_at_infinity(f);
  if (!tr) throw NotInF("map is not an integer translation near both ends");
  if (f.is_identity()) return TreePair();
  std::int64_t m = f.window() + std::max(std::abs(tr->first), std::abs(tr->second));
  Dyadic lo(-m - 1), hi(m + 1);
  std::vector<Dyadic> ts = f.breakpoints_in(lo, hi);
  for (std::int64_t n = -m - 1; n <= m + 1; ++n) ts.emplace_back(n);
  for (std::int64_t n = ceil_int(f(lo)); n <= floor_int(f(hi)); ++n) ts.push_back(f.inverse_at(Dyadic(n)));
  std::vector<Dyadic> us{Dyadic(0), Dyadic(1)};
  for (const Dyadic& t : ts) us.push_back(phi_inverse(t));
  sort_unique(us);
  std::vector<Point> pts;
  pts.reserve(us.size());
  for (Dyadic& u : us) {
    Dyadic v = (u.is_zero() || u == Dyadic(1)) ? u : phi_inverse(f(phi(u)));
    pts.push_back({std::move(u), std::move(v)});
  }
  return map01_to_tree(PLMap01::from_points(std::move(pts)));
}

std::vector<LeafImage> box_subdivision(const EPMap& f, std::int64_t k) {
  Dyadic base(k);
  auto h = [&](const Dyadic& u) { return f(base + u); };
  std::vector<Dyadic> cuts;
  for (const Dyadic& x : f.breakpoints_in(base, base + Dyadic(1))) cuts.push_back(x - base);
  for (std::int64_t n = ceil_int(h(Dyadic(0))); n <= floor_int(h(Dyadic(1))); ++n) {
    cuts.push_back(f.inverse_at(Dyadic(n)) - base);
  }
  std::erase_if(cuts, [](const Dyadic& u) { return u <= Dyadic(0) || u >= Dyadic(1); });
  sort_unique(cuts);
  std::vector<LeafImage> out;
  split_standard(Dyadic(0), 0, cuts, h, false,
                 [&](const Dyadic&, int depth, const Dyadic& start, int image_depth) {
                   out.push_back({as_depth(depth), start, as_depth(image_depth)});
                 });
  return out;
}

RotatedTreePair circle_descend(const EPMap& f, Side side) {
  Dyadic base = side == Side::positive ? Dyadic(f.window()) : Dyadic(-f.window() - 1);
  auto h = [&](const Dyadic& u) { return f(base + u); };
  std::vector<Dyadic> cuts;
  for (const Dyadic& x : f.breakpoints_in(base, base + Dyadic(1))) cuts.push_back(x - base);
  Dyadic y0 = h(Dyadic(0));
  for (std::int64_t n = ceil_int(y0); n <= floor_int(y0 + Dyadic(1)); ++n) {
    cuts.push_back(f.inverse_at(Dyadic(n)) - base);
  }
  std::erase_if(cuts, [](const Dyadic& u) { return u <= Dyadic(0) || u >= Dyadic(1); });
  sort_unique(cuts);

  struct Leaf {
    Dyadic image;
    std::uint16_t depth;
    std::size_t index;
  };
  std::vector<std::uint16_t> s;
  std::vector<Leaf> images;
  split_standard(Dyadic(0), 0, cuts, h, true,
                 [&](const Dyadic&, int depth, const Dyadic& start, int image_depth) {
                   images.push_back({start, as_depth(image_depth), s.size()});
                   s.push_back(as_depth(depth));
                 });
  std::sort(images.begin(), images.end(), [](const Leaf& a, const Leaf& b) { return a.image < b.image; });
  std::vector<std::uint16_t> t;
  t.reserve(images.size());
  std::size_t offset = 0;
  for (std::size_t k = 0; k < images.size(); ++k) {
    t.push_back(images[k].depth);
    if (images[k].index == 0) offset = k;
  }
  return reduce(RotatedTreePair(BinaryTree::from_depths(std::move(s)),
                                BinaryTree::from_depths(std::move(t)), offset));
}

}  // namespace autf
