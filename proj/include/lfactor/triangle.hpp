#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lfactor/concave.hpp"
#include "lfactor/weyl.hpp"

namespace lfac {

// val(t_α) for α ∈ Φ_γ̌⁺, keyed by root index.
using Valuations = std::map<int, std::int64_t>;

struct SignSplit {
  std::vector<int> plus;   // wα ∈ Φ⁺
  std::vector<int> minus;  // wα ∈ Φ⁻
};
SignSplit split_signs(const RootDatum& d, const Coweight& gamma, const WeylElement& w);

std::vector<int> s_set(const RootDatum& d, const Coweight& gamma, const WeylElement& w, const Valuations& vals);

struct LambdaSets {
  Rational lambda;
  std::vector<int> a;
  std::vector<int> a_bar;
};
LambdaSets lambda_and_sets(const RootDatum& d, const Coweight& gamma, const WeylElement& w, const Valuations& vals);

// Roots of `ambient` lying in ℤ_{≥0}A ∖ {0}.
std::vector<int> positive_span_within(const RootDatum& d, const std::vector<int>& a, const std::vector<int>& ambient);

struct Separator {
  int alpha0 = -1;
  std::vector<Rational> delta;
  bool from_dual_basis = false;
};
Separator separating_coweight(const RootDatum& d, const std::vector<int>& a, const std::vector<int>& a_bar);
bool separates(const RootDatum& d, const std::vector<int>& a_bar, int alpha0, const std::vector<Rational>& delta);

struct TriangleFunctions {
  RootFunction f1, f2;
  LambdaSets sets;
  Separator separator;
};
TriangleFunctions build_f1_f2(const RootDatum& d, const Coweight& gamma, const WeylElement& w, const Valuations& vals);
RootFunction build_f0(const RootDatum& d, const Coweight& gamma, const Valuations& vals, const RootFunction& f1,
                      int alpha0);

struct RootIdentity {
  HalfInt lhs, rhs;
  bool equal = false;
};
RootIdentity root_identity(const RootDatum& d, const Coweight& gamma, const WeylElement& w);

// One step of the triangular descent: with S empty the coset of w is kept; otherwise
// w₀ = w·w_{α₀} and its coset lies strictly below that of w.
struct TriangleStep {
  bool s_empty = true;
  int alpha0 = -1;
  std::optional<WeylElement> lower;
  bool coset_strictly_lower = false;
};
TriangleStep triangle_step(const RootDatum& d, const Coweight& gamma, const WeylElement& w, const Valuations& vals);

}  // namespace lfac
