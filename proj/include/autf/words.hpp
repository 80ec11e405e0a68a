#pragma once

// Words over the generators of Aut+F (and the torsion generator t of T).
//
//   word := term* ; term := gen ("^" int)? | "[" word "," word "]"
//   gen  := x0 | x1 | y0 | y1 | z0 | z1 | w0 | w1 | t
//
// Commutators expand as [u,v] = u^-1 v^-1 u v. Words are read left to
// right in application order: "u v" applies u first, then v.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace autf {

enum class Gen : std::uint8_t { x0, x1, y0, y1, z0, z1, w0, w1, t };

inline constexpr Gen kAutGens[] = {Gen::x0, Gen::x1, Gen::y0, Gen::y1,
                                   Gen::z0, Gen::z1, Gen::w0, Gen::w1};

struct Letter {
  Gen gen;
  int exponent;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

std::string_view gen_name(Gen g);

// Throws ParseError (with character position) on malformed input.
Word parse_word(std::string_view text);

// Canonical text: letters separated by one space, exponent 1 omitted.
std::string format_word(std::span<const Letter> w);

Word inverse(std::span<const Letter> w);

// Merges adjacent letters over the same generator and drops zero powers.
Word simplify(std::span<const Letter> w);

// Sum of |exponent| over letters.
std::int64_t word_length(std::span<const Letter> w);

// Throws ParseError if any letter is outside `allowed`.
void check_alphabet(std::span<const Letter> w, std::span<const Gen> allowed,
                    std::string_view context);

}  // namespace autf
