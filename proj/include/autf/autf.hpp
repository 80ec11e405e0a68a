#pragma once

// Aut+F as eventually periodic maps: the generator catalog and its
// calibration, half-line and diagonal lifts of F, the projection to T x T,
// subgroup membership and the conjugation action on F.
//
// Subgroups: F_x is the kernel copy of F (integer translation at both ends),
// A = pi^-1(F x F), C = pi^-1(diagonal F), F_w the diagonal lifts.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "autf/ftrees.hpp"
#include "autf/plmaps.hpp"
#include "autf/words.hpp"

namespace autf {

// The finite space of conventions the generator catalog is built under.
struct Convention {
  bool x0_flipped = false;     // use the x0 comb pair with its trees swapped
  int phi_orientation = 1;     // +1: the transport sends 1 to +infinity
  Side y_side = Side::positive;  // half-line carrying y0, y1 (z0, z1 on the other)

  std::string describe() const;
  friend bool operator==(const Convention&, const Convention&) = default;
};

std::vector<Convention> all_conventions();

// Repeats w in every unit box on one half-line; the identity elsewhere.
EPMap lift_halfline(const TreePair& w, Side side);
// Repeats w in every unit box.
EPMap sigma(const TreePair& w);

class GeneratorCatalog {
 public:
  explicit GeneratorCatalog(Convention c = {});

  const Convention& convention() const { return convention_; }
  // F-generator i (0 or 1) as a tree pair on [0,1].
  const TreePair& f_generator(int i) const { return f_gens_[i]; }
  // Throws ParseError for t.
  const EPMap& generator(Gen g) const;

  EPMap eval(std::span<const Letter> w) const;
  EPMap eval(std::string_view text) const;
  // Tree pair of a word over {x0, x1} built from the calibrated F generators.
  TreePair eval_f(std::span<const Letter> w) const;

  // F -> F_x and back.
  EPMap embed(const TreePair& f) const { return transport(f, convention_.phi_orientation); }
  TreePair extract(const EPMap& g) const { return strip_tails(g, convention_.phi_orientation); }

 private:
  Convention convention_;
  TreePair f_gens_[2];
  std::vector<EPMap> gens_;  // indexed by Gen
  std::vector<EPMap> inverses_;
};

// The four conjugation actions of y0, y1 on x0, x1 as printed for B1.
struct ActionWord {
  std::string lhs;        // e.g. "y0 x0 y0^-1"
  std::string printed;    // right-hand side as printed
  std::string corrected;  // a corrected right-hand side, empty if none
};
const std::vector<ActionWord>& b1_action_words();
// w0 and w1 acting on x1 as printed in the presentation of C.
const std::vector<ActionWord>& c_action_words();

enum class Gate { printed, corrected };

struct ConventionReport {
  Convention convention;
  bool f1 = false, f2 = false, x1_support = false;
  std::vector<bool> action_words;  // one per B1 word
  bool survives() const;
};

struct CalibrationResult {
  Gate gate;
  std::vector<ConventionReport> reports;
  std::vector<Convention> survivors;
  std::string describe() const;
};

CalibrationResult calibrate_search(Gate gate);
// Throws CalibrationError (with the per-convention table) unless exactly
// one convention survives.
GeneratorCatalog calibrate(Gate gate = Gate::corrected);
// Calibrated once with the corrected gate and shared read-only.
const GeneratorCatalog& default_catalog();

// True iff the support of f is exactly [0, +infinity).
bool support_is_positive_halfline(const EPMap& f);

// (behaviour near -infinity, behaviour near +infinity) as elements of T.
std::pair<RotatedTreePair, RotatedTreePair> pi(const EPMap& g);

struct Membership {
  bool in_Fx = false, in_A = false, in_C = false;
  friend bool operator==(const Membership&, const Membership&) = default;
};
Membership membership(const EPMap& g);

// The F element w with sigma(w)^-1 g in F_x. Throws MembershipError.
TreePair pi_C(const EPMap& g);

// g f g^-1 (word order, apply-first) as an element of F.
TreePair conjugate_F(const GeneratorCatalog& cat, const EPMap& g, const TreePair& f);

}  // namespace autf
