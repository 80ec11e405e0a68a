#include "autf/autf.hpp"

#include <sstream>
#include <stdexcept>

#include "autf/errors.hpp"

namespace autf {

namespace {

Side other(Side s) { return s == Side::positive ? Side::negative : Side::positive; }

std::string_view side_name(Side s) { return s == Side::positive ? "positive" : "negative"; }

// Interior points of w shifted into the box [k, k+1].
void append_box(std::vector<Point>& pts, const PLMap01& w, std::int64_t k) {
  const auto& wp = w.points();
  for (std::size_t i = 1; i + 1 < wp.size(); ++i) pts.push_back({wp[i].x + Dyadic(k), wp[i].y + Dyadic(k)});
}

EPMap lift(const TreePair& w, bool negative, bool positive) {
  PLMap01 m = tree_to_map01(w);
  std::vector<Point> pts{{-1, -1}};
  if (negative) append_box(pts, m, -1);
  pts.push_back({0, 0});
  if (positive) append_box(pts, m, 0);
  pts.push_back({1, 1});
  return EPMap::from_points(0, std::move(pts));
}

}  // namespace

std::string Convention::describe() const {
  std::ostringstream os;
  os << "x0=" << (x0_flipped ? "flipped" : "standard") << " phi=" << (phi_orientation > 0 ? "+1" : "-1")
     << " y-side=" << side_name(y_side);
  return os.str();
}

std::vector<Convention> all_conventions() {
  std::vector<Convention> out;
  for (bool flip : {false, true}) {
    for (int o : {1, -1}) {
      for (Side s : {Side::positive, Side::negative}) out.push_back({flip, o, s});
    }
  }
  return out;
}

EPMap lift_halfline(const TreePair& w, Side side) {
  return lift(w, side == Side::negative, side == Side::positive);
}

EPMap sigma(const TreePair& w) { return lift(w, true, true); }

GeneratorCatalog::GeneratorCatalog(Convention c) : convention_(c) {
  if (c.phi_orientation != 1 && c.phi_orientation != -1) throw InvalidMap("orientation must be +1 or -1");
  f_gens_[0] = c.x0_flipped ? invert(x0_pair()) : x0_pair();
  f_gens_[1] = x1_pair();
  gens_.resize(8);
  gens_[static_cast<int>(Gen::x0)] = embed(f_gens_[0]);
  gens_[static_cast<int>(Gen::x1)] = embed(f_gens_[1]);
  for (int i = 0; i < 2; ++i) {
    gens_[static_cast<int>(Gen::y0) + i] = lift_halfline(f_gens_[i], c.y_side);
    gens_[static_cast<int>(Gen::z0) + i] = lift_halfline(f_gens_[i], other(c.y_side));
    gens_[static_cast<int>(Gen::w0) + i] = sigma(f_gens_[i]);
  }
  for (const EPMap& g : gens_) inverses_.push_back(invert(g));
}

const EPMap& GeneratorCatalog::generator(Gen g) const {
  if (g == Gen::t) throw ParseError("generator t is not an element of Aut+F", 0);
  return gens_[static_cast<int>(g)];
}

EPMap GeneratorCatalog::eval(std::span<const Letter> w) const {
  check_alphabet(w, kAutGens, "Aut+F word");
  EPMap acc;
  for (const Letter& l : w) {
    const EPMap& g = l.exponent < 0 ? inverses_[static_cast<int>(l.gen)] : gens_[static_cast<int>(l.gen)];
    for (int k = 0; k < std::abs(l.exponent); ++k) acc = compose(acc, g);
  }
  return acc;
}

EPMap GeneratorCatalog::eval(std::string_view text) const { return eval(parse_word(text)); }

TreePair GeneratorCatalog::eval_f(std::span<const Letter> w) const {
  return eval_word(w, f_gens_[0], f_gens_[1]);
}

const std::vector<ActionWord>& b1_action_words() {
  static const std::vector<ActionWord> words{
      {"y0 x0 y0^-1", "x0 x1 x0^-1 x1 x0 x1^-2", ""},
      {"y0 x1 y0^-1", "x1^3 x0^-1 x1 x0^-3 x1 x0 x1 x0^3 x1^-2",
       "x1^3 x0^-1 x1 x0^-3 x1 x0 x1^-2 x0^3 x1^-2"},
      {"y1 x0 y1^-1", "x0 x1 x0^-1 x1 x0^-1 x1 x0 x1^-2 x0 x1^-1", ""},
      {"y1 x1 y1^-1",
       "x1^2 x0^-1 x1 x0^-1 x1 x0^-2 x1^2 x0^-2 x1 x0 x1^-2 x0 x1^-1 x0^3 x1^-2 x0 x1^-1", ""},
  };
  return words;
}

const std::vector<ActionWord>& c_action_words() {
  static const std::vector<ActionWord> words{
      {"w0 x1 w0^-1", b1_action_words()[1].printed, b1_action_words()[1].corrected},
      {"w1 x1 w1^-1", b1_action_words()[3].printed, ""},
  };
  return words;
}

bool ConventionReport::survives() const {
  if (!f1 || !f2 || !x1_support) return false;
  for (bool b : action_words) {
    if (!b) return false;
  }
  return true;
}

std::string CalibrationResult::describe() const {
  std::ostringstream os;
  os << "calibration (" << (gate == Gate::printed ? "printed" : "corrected") << " action words): "
     << survivors.size() << " surviving convention(s)\n";
  for (const ConventionReport& r : reports) {
    os << "  " << r.convention.describe() << ": f1=" << r.f1 << " f2=" << r.f2
       << " x1-support=" << r.x1_support << " actions=";
    for (bool b : r.action_words) os << b;
    os << (r.survives() ? "  survives" : "") << '\n';
  }
  return os.str();
}

CalibrationResult calibrate_search(Gate gate) {
  CalibrationResult res{gate, {}, {}};
  for (const Convention& c : all_conventions()) {
    GeneratorCatalog cat(c);
    ConventionReport r;
    r.convention = c;
    r.f1 = cat.eval("[x0 x1^-1, x0^-1 x1 x0]").is_identity();
    r.f2 = cat.eval("[x0 x1^-1, x0^-2 x1 x0^2]").is_identity();
    r.x1_support = support_is_positive_halfline(cat.generator(Gen::x1));
    for (const ActionWord& a : b1_action_words()) {
      const std::string& rhs = gate == Gate::corrected && !a.corrected.empty() ? a.corrected : a.printed;
      r.action_words.push_back(cat.eval(a.lhs) == cat.eval(rhs));
    }
    if (r.survives()) res.survivors.push_back(c);
    res.reports.push_back(std::move(r));
  }
  return res;
}

GeneratorCatalog calibrate(Gate gate) {
  CalibrationResult res = calibrate_search(gate);
  if (res.survivors.size() != 1) throw CalibrationError(res.describe());
  return GeneratorCatalog(res.survivors.front());
}

const GeneratorCatalog& default_catalog() {
  static const GeneratorCatalog cat = calibrate(Gate::corrected);
  return cat;
}

bool support_is_positive_halfline(const EPMap& f) {
  const auto& pts = f.points();
  for (const Point& p : pts) {
    if (p.x <= Dyadic(0) && p.y != p.x) return false;
  }
  if (f(Dyadic(0)) != Dyadic(0)) return false;
  // No segment in [0, M+1] may be fixed pointwise; further right the
  // segments repeat those of [M, M+1].
  std::vector<Dyadic> xs{Dyadic(0)};
  for (const Point& p : pts) {
    if (p.x > Dyadic(0)) xs.push_back(p.x);
  }
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (f(xs[i]) == xs[i] && f(xs[i + 1]) == xs[i + 1]) return false;
  }
  return true;
}

std::pair<RotatedTreePair, RotatedTreePair> pi(const EPMap& g) {
  return {circle_descend(g, Side::negative), circle_descend(g, Side::positive)};
}

Membership membership(const EPMap& g) {
  Membership m;
  m.in_Fx = translations_at_infinity(g).has_value();
  auto [neg, pos] = pi(g);
  m.in_A = t_is_in_F(neg) && t_is_in_F(pos);
  m.in_C = m.in_A && neg == pos;
  return m;
}

TreePair pi_C(const EPMap& g) {
  auto [neg, pos] = pi(g);
  if (!t_is_in_F(neg)) throw MembershipError("not in C: the circle map at -infinity moves 0");
  if (!t_is_in_F(pos)) throw MembershipError("not in C: the circle map at +infinity moves 0");
  if (neg != pos) throw MembershipError("not in C: the circle maps at the two ends differ");
  return to_tree_pair(pos);
}

TreePair conjugate_F(const GeneratorCatalog& cat, const EPMap& g, const TreePair& f) {
  EPMap h = compose(compose(g, cat.embed(f)), invert(g));
  try {
    return cat.extract(h);
  } catch (const NotInF&) {
    throw std::logic_error("conjugate of an element of F lost its translation tails");
  }
}

}  // namespace autf
