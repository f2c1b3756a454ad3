#pragma once

#include <optional>
#include <random>
#include <vector>

#include "lfactor/root_datum.hpp"

namespace lfac {

// ℤ ∪ {∞}; nullopt is ∞.
using ExtInt = std::optional<std::int64_t>;
inline constexpr ExtInt kInfinity = std::nullopt;

ExtInt ext_add(ExtInt a, ExtInt b);
bool ext_le(ExtInt a, ExtInt b);
bool ext_lt(ExtInt a, ExtInt b);
std::string ext_str(ExtInt a);

// A function Φ ∪ {0} → ℤ ∪ {∞}, indexed by root index.
struct RootFunction {
  std::vector<ExtInt> on_roots;
  ExtInt at_zero = 0;

  bool operator==(const RootFunction&) const = default;
};

bool is_concave(const RootDatum& d, const RootFunction& f);
// Passes f through the concavity gate, throwing BadParameters if it fails.
RootFunction make_concave(const RootDatum& d, RootFunction f);

std::vector<int> psi(const RootDatum& d, const RootFunction& f);
RootFunction star(const RootDatum& d, const RootFunction& f);
RootFunction pointwise_max(const RootDatum& d, const RootFunction& f, const RootFunction& g);

// Roots with f(α) < g(α).
std::vector<int> less_set(const RootDatum& d, const RootFunction& f, const RootFunction& g);

struct CosetHypotheses {
  bool zero_values_equal = false;        // (i)
  bool less_set_positive = false;        // (ii)
  bool psi_agree = false;                // (iii)
  std::vector<int> nonpositive_witnesses;
  std::vector<int> psi_witnesses;
  bool all() const { return zero_values_equal && less_set_positive && psi_agree; }
};
CosetHypotheses check_coset_hypotheses(const RootDatum& d, const RootFunction& f, const RootFunction& g);
std::int64_t coset_index_exponent(const RootDatum& d, const RootFunction& f, const RootFunction& g);

// α <_B β iff β − α ∈ Φ⁺.
bool less_b(const RootDatum& d, int alpha, int beta);
std::vector<int> minimal_numbering(const RootDatum& d, const std::vector<int>& s);

RootFunction g_gamma(const RootDatum& d, const Coweight& gamma);
RootFunction f_gamma(const RootDatum& d, const Coweight& gamma);
std::int64_t double_coset_degree_exponent(const RootDatum& d, const Coweight& gamma);

// Coset labels of ⊕𝔭^{f}/⊕𝔭^{g} for residue field size q: one digit tuple per representative,
// digits listed root by root in minimal-numbering order.
std::vector<std::vector<int>> enumerate_representatives(const RootDatum& d, const RootFunction& f,
                                                        const RootFunction& g, int q,
                                                        std::size_t max_count = 10000);

// Seeded sampler: a linear-plus-constant function with random raises, rejected until concave.
RootFunction sample_concave(const RootDatum& d, std::mt19937_64& rng);

}  // namespace lfac
