#pragma once

// PL_2 homeomorphisms: maps of [0,1] (elements of F) and eventually periodic
// maps of the real line (elements of Aut+F).
//
// An EPMap stores a window M >= 0 and every breakpoint in [-M-1, M+1]; off
// the window it extends by f(x+1) = f(x)+1 for x >= M and f(x-1) = f(x)-1
// for x <= -M. Stored maps are canonical (minimal M, no collinear interior
// points), so == is equality of maps.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "autf/dyadic.hpp"
#include "autf/ftrees.hpp"

namespace autf {

struct Point {
  Dyadic x, y;

  friend bool operator==(const Point&, const Point&) = default;
};

class PLMap01 {
 public:
  PLMap01();  // identity

  // Validates and drops collinear interior points. Throws InvalidMap.
  static PLMap01 from_points(std::vector<Point> points);

  const std::vector<Point>& points() const { return points_; }
  // Throws DomainError outside [0,1].
  Dyadic operator()(const Dyadic& x) const;
  Dyadic inverse_at(const Dyadic& y) const;
  bool is_identity() const { return points_.size() == 2; }

  friend bool operator==(const PLMap01&, const PLMap01&) = default;

 private:
  std::vector<Point> points_;
  std::vector<int> slopes_;  // log2 of each segment's slope
};

PLMap01 compose(const PLMap01& f, const PLMap01& g);  // apply f, then g
PLMap01 invert(const PLMap01& f);

PLMap01 tree_to_map01(const TreePair& p);
// Reduced pair of f. Throws InvalidMap if f is not PL_2.
TreePair map01_to_tree(const PLMap01& f);

class EPMap {
 public:
  EPMap();  // identity

  // Breakpoints spanning exactly [-M-1, M+1]; validated and canonicalized.
  static EPMap from_points(std::int64_t window, std::vector<Point> points);
  // Canonical map agreeing with `eval` on [-M-1, M+1] and extended from
  // there. `candidates` must contain every breakpoint inside the window.
  static EPMap build(std::int64_t window, std::vector<Dyadic> candidates,
                     const std::function<Dyadic(const Dyadic&)>& eval);
  static EPMap translation(std::int64_t k);

  std::int64_t window() const { return window_; }
  const std::vector<Point>& points() const { return points_; }

  Dyadic operator()(const Dyadic& x) const;
  Dyadic inverse_at(const Dyadic& y) const;

  // Breakpoints (periodic ones included) with x in [lo, hi].
  std::vector<Dyadic> breakpoints_in(const Dyadic& lo, const Dyadic& hi) const;

  // x -> -f(-x)
  EPMap mirror() const;

  bool is_identity() const { return window_ == 0 && points_.size() == 2 && points_[0].y == -1; }
  std::size_t hash() const noexcept { return hash_; }
  std::size_t heap_bytes() const noexcept;

  friend bool operator==(const EPMap& a, const EPMap& b) {
    return a.hash_ == b.hash_ && a.window_ == b.window_ && a.points_ == b.points_;
  }

 private:
  EPMap(std::int64_t window, std::vector<Point> points, std::vector<int> slopes);
  Dyadic window_eval(const Dyadic& x) const;
  Dyadic window_inverse(const Dyadic& y) const;

  std::int64_t window_ = 0;
  std::vector<Point> points_;
  std::vector<int> slopes_;
  std::size_t hash_ = 0;
};

EPMap compose(const EPMap& f, const EPMap& g);  // apply f, then g
EPMap invert(const EPMap& f);
inline EPMap operator*(const EPMap& f, const EPMap& g) { return compose(f, g); }
EPMap power(const EPMap& f, int e);
inline bool canonical_equal(const EPMap& f, const EPMap& g) { return f == g; }

struct EPMapHash {
  std::size_t operator()(const EPMap& f) const noexcept { return f.hash(); }
};

// (k, l) with f(x) = x+k for x >> 0 and f(x) = x+l for x << 0, when both
// are integers.
std::optional<std::pair<std::int64_t, std::int64_t>> translations_at_infinity(const EPMap& f);

// The transport of [0,1] onto the real line: 1/2 -> 0, 1 - 2^-(k+1) -> k and
// 2^-(k+1) -> -k, linear in between. Orientation -1 composes with x -> -x.
Dyadic phi(const Dyadic& x);         // x in (0,1)
Dyadic phi_inverse(const Dyadic& t);

EPMap transport(const TreePair& p, int orientation = 1);
// Throws NotInF unless f is an integer translation near both ends.
TreePair strip_tails(const EPMap& f, int orientation = 1);

// Coarsest standard dyadic subdivision of [k, k+1] on whose leaves f is
// linear onto a standard dyadic interval of length at most 1.
struct LeafImage {
  std::uint16_t depth;  // within [k, k+1]
  Dyadic image;         // start of the image
  std::uint16_t image_depth;
};
std::vector<LeafImage> box_subdivision(const EPMap& f, std::int64_t k);

enum class Side { negative, positive };

// The circle map R/Z -> R/Z induced by f near -infinity or +infinity.
RotatedTreePair circle_descend(const EPMap& f, Side side);

}  // namespace autf
