#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lfactor/root_datum.hpp"

namespace lfac {

inline constexpr std::int64_t kDefaultMaxDim = 10000000;

using WeightMults = std::vector<std::pair<Coweight, std::int64_t>>;

// Weights of the dual-group irreducible with highest weight `highest`, as coweights of `datum`.
struct WeightSystem {
  RootDatum datum;
  Coweight highest;
  std::map<Coweight, std::int64_t> table;
  WeightMults dominant;  // dominant keys, descending order
};

// Formal direct sum of irreducibles, merged and in descending order of highest weight.
struct RepSum {
  WeightMults summands;
};

enum class RepClass { Minuscule, QuasiMinuscule, Neither, Trivial };
std::string_view rep_class_name(RepClass c);

// B(x,y) = Σ_{β∈Φ} ⟨β,x⟩⟨β,y⟩.
std::int64_t invariant_form(const RootDatum& d, const Coweight& x, const Coweight& y);

BigInt weyl_dimension(const RootDatum& d, const Coweight& highest);

// Dominant weights of the irreducible with highest weight λ̌, descending.
// With stop_at_noncentral, returns early once a second non-central weight appears.
std::vector<Coweight> dominant_weights_below(const RootDatum& d, const Coweight& highest,
                                             bool stop_at_noncentral = false);

WeightSystem weight_system(const RootDatum& d, const Coweight& highest, std::int64_t max_dim = kDefaultMaxDim);
WeightMults dominant_support(const WeightSystem& ws);
RepClass classify(const RootDatum& d, const Coweight& highest);

Coweight highest_coroot(const RootDatum& d);
Coweight highest_short_coroot(const RootDatum& d);

struct Table1Row {
  Coweight highest;
  std::int64_t m0 = 0;
  std::vector<int> boxed;  // simple indices with ⟨α,λ̌⟩ = 1
  BigInt dimension;
  bool minuscule = false;
};
// Nontrivial quasi-minuscule representations of the dual of the adjoint group of the given type.
std::vector<Table1Row> table1_rows(char type, int rank);

RepSum named_rep(const RootDatum& d, const std::string& name);
RepSum make_rep_sum(WeightMults summands);
std::int64_t rep_dimension(const RootDatum& d, const RepSum& r);

}  // namespace lfac
