#pragma once

#include <vector>

#include "lfactor/root_datum.hpp"

namespace lfac {

inline constexpr std::size_t kDefaultWeylGuard = 1000000;

// Weyl group element: its action on X_* and X^* (row-major rank x rank) plus one reduced word.
// Equality is equality of the coweight action.
struct WeylElement {
  int rank = 0;
  Vec cow;
  Vec wt;
  std::vector<int> word;

  std::size_t word_length() const { return word.size(); }
  bool operator==(const WeylElement& o) const { return cow == o.cow; }
  bool operator<(const WeylElement& o) const { return cow < o.cow; }
};

WeylElement identity_element(const RootDatum& d);
std::vector<WeylElement> simple_reflections(const RootDatum& d);

Coweight apply(const WeylElement& w, const Coweight& y);
Weight apply_weight(const WeylElement& w, const Weight& x);
// Image of a root index under w.
int apply_root(const RootDatum& d, const WeylElement& w, int root);

// Rebuilds an element from its coweight matrix, attaching a reduced word.
WeylElement from_matrix(const RootDatum& d, const Vec& cow);
WeylElement multiply(const RootDatum& d, const WeylElement& w, const WeylElement& v);
WeylElement inverse(const RootDatum& d, const WeylElement& w);
WeylElement reflection(const RootDatum& d, int root);
WeylElement from_word(const RootDatum& d, const std::vector<int>& word);

// ℓ(w s_i) < ℓ(w).
bool has_right_descent(const RootDatum& d, const WeylElement& w, int s);
int length(const RootDatum& d, const WeylElement& w);
bool bruhat_leq(const RootDatum& d, const WeylElement& w, const WeylElement& v);

// All of W sorted by (length, word); throws GroupTooLarge past the guard.
std::vector<WeylElement> enumerate_group(const RootDatum& d, std::size_t guard = kDefaultWeylGuard);
WeylElement longest_element(const RootDatum& d);

// Coweight lists use descending lexicographic order as their canonical order.
void sort_canonical(std::vector<Coweight>& v);
std::vector<Coweight> orbit(const RootDatum& d, const Coweight& y, std::size_t guard = kDefaultWeylGuard);
Coweight dominant_representative(const RootDatum& d, const Coweight& y);

// Minimal-length representatives of W/W_γ̌, ordered by (length, word).
std::vector<WeylElement> stabilizer_coset_reps(const RootDatum& d, const Coweight& gamma,
                                               std::size_t guard = kDefaultWeylGuard);
std::vector<WeylElement> quotient_linear_extension(const RootDatum& d, const Coweight& gamma,
                                                   std::size_t guard = kDefaultWeylGuard);
// The minimal representative of the coset w·W_γ̌, chosen among precomputed reps.
const WeylElement& coset_rep_of(const std::vector<WeylElement>& reps, const WeylElement& w, const Coweight& gamma);

}  // namespace lfac
