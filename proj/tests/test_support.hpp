#pragma once

// Independent oracles and random generators shared by the unit tests.

#include <random>

#include "autf/dyadic.hpp"
#include "autf/ftrees.hpp"
#include "autf/words.hpp"

namespace autf::test {

// Evaluates a tree pair on [0,1] directly from leaf boundaries.
inline Dyadic eval_pair(const TreePair& p, const Dyadic& x) {
  auto bs = p.source().boundaries();
  auto bt = p.target().boundaries();
  std::size_t i = 0;
  while (i + 2 < bs.size() && bs[i + 1] <= x) ++i;
  int shift = int(p.source().depths()[i]) - int(p.target().depths()[i]);
  return bt[i] + (x - bs[i]).scaled(shift);
}

// Circle map on [0,1) for a rotated pair.
inline Dyadic eval_rotated(const RotatedTreePair& p, const Dyadic& x) {
  auto bs = p.source().boundaries();
  auto bt = p.target().boundaries();
  std::size_t n = p.source().leaves();
  std::size_t i = 0;
  while (i + 2 < bs.size() && bs[i + 1] <= x) ++i;
  std::size_t j = (i + p.offset()) % n;
  int shift = int(p.source().depths()[i]) - int(p.target().depths()[j]);
  return bt[j] + (x - bs[i]).scaled(shift);
}

inline BinaryTree random_tree(std::mt19937_64& rng, std::size_t carets) {
  std::vector<std::uint16_t> d{0};
  for (std::size_t c = 0; c < carets; ++c) {
    std::size_t i = std::uniform_int_distribution<std::size_t>(0, d.size() - 1)(rng);
    std::uint16_t v = static_cast<std::uint16_t>(d[i] + 1);
    d[i] = v;
    d.insert(d.begin() + static_cast<std::ptrdiff_t>(i), v);
  }
  return BinaryTree::from_depths(std::move(d));
}

// Random pair with up to `carets` carets, then `extra` common leaf splits.
inline TreePair random_unreduced_pair(std::mt19937_64& rng, std::size_t carets,
                                      std::size_t extra) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(0, carets)(rng);
  std::vector<std::uint16_t> s = random_tree(rng, n).depths();
  std::vector<std::uint16_t> t = random_tree(rng, n).depths();
  for (std::size_t e = 0; e < extra; ++e) {
    std::size_t i = std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng);
    auto split = [&](std::vector<std::uint16_t>& d) {
      std::uint16_t v = static_cast<std::uint16_t>(d[i] + 1);
      d[i] = v;
      d.insert(d.begin() + static_cast<std::ptrdiff_t>(i), v);
    };
    split(s);
    split(t);
  }
  return TreePair(BinaryTree::from_depths(s), BinaryTree::from_depths(t));
}

inline Dyadic random_unit_dyadic(std::mt19937_64& rng, int max_exp) {
  int e = std::uniform_int_distribution<int>(0, max_exp)(rng);
  std::int64_t k = std::uniform_int_distribution<std::int64_t>(0, std::int64_t{1} << e)(rng);
  return Dyadic::from_parts(k, e);
}

inline Word random_word(std::mt19937_64& rng, std::size_t max_len, std::span<const Gen> gens) {
  std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  Word w;
  for (std::size_t i = 0; i < len; ++i) {
    Gen g = gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)];
    w.push_back({g, std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1});
  }
  return w;
}

inline Word random_f_word(std::mt19937_64& rng, std::size_t max_len) {
  static constexpr Gen gens[] = {Gen::x0, Gen::x1};
  return random_word(rng, max_len, gens);
}

inline Word random_t_word(std::mt19937_64& rng, std::size_t max_len) {
  static constexpr Gen gens[] = {Gen::x0, Gen::x1, Gen::t};
  return random_word(rng, max_len, gens);
}

inline Word random_aut_word(std::mt19937_64& rng, std::size_t max_len) {
  return random_word(rng, max_len, kAutGens);
}

}  // namespace autf::test
