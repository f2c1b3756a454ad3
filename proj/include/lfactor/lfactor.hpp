#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lfactor/rep_weights.hpp"
#include "lfactor/weyl.hpp"

namespace lfac {

// q^{q_exp} · ∏ z_i^{z_i}.
struct TorusMonomial {
  HalfInt q_exp;
  Vec z;

  TorusMonomial operator*(const TorusMonomial& o) const;
  auto operator<=>(const TorusMonomial&) const = default;
  std::string str() const;
};

class UnramifiedCharacter {
 public:
  static UnramifiedCharacter generic() { return {}; }
  static UnramifiedCharacter numeric(std::vector<Rational> values);

  bool is_generic() const { return !values_; }
  const std::vector<Rational>& values() const { return *values_; }

 private:
  std::optional<std::vector<Rational>> values_;
};

std::variant<TorusMonomial, Rational> chi_eval(const UnramifiedCharacter& chi, const Coweight& y);

// L(s)^{-1} = ∏ (1 − q^{-s}·c)^m, stored as a merged multiset of c.
struct LFactor {
  std::map<TorusMonomial, std::int64_t> factors;

  void add(const TorusMonomial& c, std::int64_t m);
  std::int64_t degree() const;
  bool operator==(const LFactor&) const = default;
  std::string str() const;
};

// Same shape after substituting numbers for z: c = q^{q_exp} · value.
struct NumericKey {
  HalfInt q_exp;
  Rational value;
  bool operator<(const NumericKey& o) const {
    if (q_exp != o.q_exp) return q_exp < o.q_exp;
    return value < o.value;
  }
  bool operator==(const NumericKey& o) const { return q_exp == o.q_exp && value == o.value; }
};
using NumericLFactor = std::map<NumericKey, std::int64_t>;

NumericLFactor specialize(const LFactor& l, const UnramifiedCharacter& chi);

LFactor satake_lfactor(const RootDatum& d, const RepSum& r);
NumericLFactor satake_lfactor(const RootDatum& d, const RepSum& r, const UnramifiedCharacter& chi);

struct HeckeTriangularModel {
  Coweight gamma;
  std::vector<WeylElement> reps;
  std::vector<TorusMonomial> diag;
  HalfInt rho_pair;
};
HeckeTriangularModel hecke_model(const RootDatum& d, const Coweight& gamma);
LFactor char_poly_factors(const HeckeTriangularModel& m);

// 𝒫⁺(r) with multiplicities summed over the summands of r.
WeightMults rep_dominant_support(const RootDatum& d, const RepSum& r);

LFactor hecke_lfactor(const RootDatum& d, const RepSum& r);
NumericLFactor hecke_lfactor(const RootDatum& d, const RepSum& r, const UnramifiedCharacter& chi);

struct GammaDetail {
  Coweight gamma;
  std::int64_t multiplicity = 0;
  std::size_t coset_count = 0;
  HalfInt rho_pair;
  KGammaShape shape;
};

struct TheoremReport {
  bool equal = false;
  LFactor lhs;  // Satake side
  LFactor rhs;  // Hecke side
  std::int64_t degree = 0;
  std::vector<GammaDetail> per_gamma;
};
TheoremReport verify_theorem(const RootDatum& d, const RepSum& r);

struct QuasiMinusculeReport {
  bool minuscule = false;
  Coweight gamma;
  HalfInt shift;
  std::optional<Coweight> gamma_prime;
  std::int64_t m_prime = 0;
  LFactor form;
  bool consistent = false;
};
QuasiMinusculeReport quasi_minuscule_form(const RootDatum& d, const Coweight& highest);

}  // namespace lfac
