#include "lfactor/lfactor.hpp"

#include <sstream>

namespace lfac {

TorusMonomial TorusMonomial::operator*(const TorusMonomial& o) const {
  if (z.size() != o.z.size()) throw Error(ErrorCode::DimensionMismatch, "monomials of different rank");
  TorusMonomial r{q_exp + o.q_exp, z};
  for (std::size_t i = 0; i < z.size(); ++i) r.z[i] += o.z[i];
  return r;
}

std::string TorusMonomial::str() const {
  std::ostringstream os;
  bool any = false;
  if (q_exp.doubled() != 0) {
    os << "q^" << (q_exp.is_integer() ? q_exp.str() : "(" + q_exp.str() + ")");
    any = true;
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] == 0) continue;
    os << (any ? "*" : "") << "z" << i;
    if (z[i] != 1) os << "^" << (z[i] < 0 ? "(" + std::to_string(z[i]) + ")" : std::to_string(z[i]));
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

UnramifiedCharacter UnramifiedCharacter::numeric(std::vector<Rational> values) {
  for (const auto& v : values)
    if (v == 0) throw Error(ErrorCode::BadParameters, "character values must be nonzero");
  UnramifiedCharacter c;
  c.values_ = std::move(values);
  return c;
}

std::variant<TorusMonomial, Rational> chi_eval(const UnramifiedCharacter& chi, const Coweight& y) {
  if (chi.is_generic()) return TorusMonomial{HalfInt(), y.coords};
  const auto& v = chi.values();
  if (v.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "character rank differs from coweight");
  Rational r = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto e = y[i];
    for (std::int64_t k = 0; k < std::abs(e); ++k) {
      if (e > 0)
        r *= v[i];
      else
        r /= v[i];
    }
  }
  return r;
}

void LFactor::add(const TorusMonomial& c, std::int64_t m) {
  if (m == 0) return;
  if ((factors[c] += m) == 0) factors.erase(c);
}

std::int64_t LFactor::degree() const {
  std::int64_t s = 0;
  for (const auto& [c, m] : factors) s += m;
  return s;
}

std::string LFactor::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, m] : factors) {
    os << (first ? "" : " ") << "(1 - q^-s*" << c.str() << ")";
    if (m != 1) os << "^" << m;
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

NumericLFactor specialize(const LFactor& l, const UnramifiedCharacter& chi) {
  NumericLFactor out;
  for (const auto& [c, m] : l.factors) {
    auto v = chi_eval(chi, Coweight(c.z));
    if (auto* r = std::get_if<Rational>(&v))
      out[{c.q_exp, *r}] += m;
    else
      throw Error(ErrorCode::BadParameters, "specialize needs a numeric character");
  }
  return out;
}

LFactor satake_lfactor(const RootDatum& d, const RepSum& r) {
  LFactor l;
  for (const auto& [hw, mult] : r.summands) {
    WeightSystem ws = weight_system(d, hw);
    for (const auto& [delta, m] : ws.table) l.add(TorusMonomial{HalfInt(), delta.coords}, m * mult);
  }
  return l;
}

NumericLFactor satake_lfactor(const RootDatum& d, const RepSum& r, const UnramifiedCharacter& chi) {
  NumericLFactor out;
  for (const auto& [hw, mult] : r.summands) {
    WeightSystem ws = weight_system(d, hw);
    for (const auto& [delta, m] : ws.table) out[{HalfInt(), std::get<Rational>(chi_eval(chi, delta))}] += m * mult;
  }
  return out;
}

HeckeTriangularModel hecke_model(const RootDatum& d, const Coweight& gamma) {
  HeckeTriangularModel m;
  m.gamma = gamma;
  m.reps = quotient_linear_extension(d, gamma);
  m.rho_pair = rho_pair(d, gamma);
  for (const auto& w : m.reps) m.diag.push_back(TorusMonomial{m.rho_pair, apply(w, gamma).coords});
  return m;
}

LFactor char_poly_factors(const HeckeTriangularModel& m) {
  LFactor l;
  for (const auto& c : m.diag) l.add(c, 1);
  return l;
}

WeightMults rep_dominant_support(const RootDatum& d, const RepSum& r) {
  WeightMults all;
  for (const auto& [hw, mult] : r.summands) {
    for (auto [gamma, m] : dominant_support(weight_system(d, hw))) all.emplace_back(gamma, m * mult);
  }
  return make_rep_sum(std::move(all)).summands;
}

LFactor hecke_lfactor(const RootDatum& d, const RepSum& r) {
  LFactor l;
  for (const auto& [gamma, m] : rep_dominant_support(d, r)) {
    auto model = hecke_model(d, gamma);
    TorusMonomial shift{-model.rho_pair, Vec(d.rank(), 0)};
    for (const auto& [c, k] : char_poly_factors(model).factors) l.add(c * shift, k * m);
  }
  return l;
}

NumericLFactor hecke_lfactor(const RootDatum& d, const RepSum& r, const UnramifiedCharacter& chi) {
  NumericLFactor out;
  for (const auto& [gamma, m] : rep_dominant_support(d, r)) {
    auto model = hecke_model(d, gamma);
    for (std::size_t i = 0; i < model.reps.size(); ++i) {
      Rational v = std::get<Rational>(chi_eval(chi, Coweight(model.diag[i].z)));
      out[{model.diag[i].q_exp - model.rho_pair, v}] += m;
    }
  }
  return out;
}

TheoremReport verify_theorem(const RootDatum& d, const RepSum& r) {
  TheoremReport rep;
  rep.lhs = satake_lfactor(d, r);
  rep.rhs = hecke_lfactor(d, r);
  rep.equal = rep.lhs == rep.rhs;
  rep.degree = rep.lhs.degree();
  for (const auto& [gamma, m] : rep_dominant_support(d, r)) {
    GammaDetail g;
    g.gamma = gamma;
    g.multiplicity = m;
    g.coset_count = stabilizer_coset_reps(d, gamma).size();
    g.rho_pair = rho_pair(d, gamma);
    g.shape = gamma_partition(d, gamma);
    rep.per_gamma.push_back(std::move(g));
  }
  return rep;
}

QuasiMinusculeReport quasi_minuscule_form(const RootDatum& d, const Coweight& highest) {
  RepClass c = classify(d, highest);
  if (c != RepClass::Minuscule && c != RepClass::QuasiMinuscule)
    throw Error(ErrorCode::NotQuasiMinuscule, format_vec(highest.coords) + " is " + std::string(rep_class_name(c)));
  QuasiMinusculeReport q;
  q.minuscule = c == RepClass::Minuscule;
  q.gamma = highest;
  q.shift = rho_pair(d, highest);
  auto model = hecke_model(d, highest);
  TorusMonomial shift{-q.shift, Vec(d.rank(), 0)};
  for (const auto& [m, k] : char_poly_factors(model).factors) q.form.add(m * shift, k);
  if (!q.minuscule) {
    for (const auto& [gamma, m] : dominant_support(weight_system(d, highest))) {
      if (gamma == highest) continue;
      q.gamma_prime = gamma;
      q.m_prime = m;
      q.form.add(TorusMonomial{HalfInt(), gamma.coords}, m);
    }
  }
  q.consistent = q.form == verify_theorem(d, RepSum{{{highest, 1}}}).lhs;
  return q;
}

}  // namespace lfac
