#include "lfactor/triangle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

namespace lfac {

namespace {

void require_dominant(const RootDatum& d, const Coweight& g) {
  if (!is_dominant(d, g)) throw Error(ErrorCode::NotDominant, format_vec(g.coords) + " is not dominant");
}

void validate(const RootDatum& d, const Coweight& gamma, const SignSplit& split, const Valuations& vals) {
  for (const auto& [i, v] : vals) {
    if (i < 0 || i >= static_cast<int>(d.num_roots()) || pairing(d.root(i), gamma) <= 0)
      throw Error(ErrorCode::BadParameters, "valuation given for a root outside the positive part");
    if (v < -pairing(d.root(i), gamma))
      throw Error(ErrorCode::HypothesisViolated, "val(t) = " + std::to_string(v) + " below -<alpha,gamma> at " +
                                                     format_vec(d.root(i).coords));
  }
  for (int i : split.minus)
    if (!vals.count(i)) throw Error(ErrorCode::BadParameters, "missing valuation at " + format_vec(d.root(i).coords));
}

BigInt floor_rational(const Rational& r) {
  BigInt n = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
  BigInt q = n / den;
  if (n % den != 0 && n < 0) q -= 1;
  return q;
}

Rational rdot(const Weight& x, const std::vector<Rational>& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < y.size(); ++i) s += Rational(x[i]) * y[i];
  return s;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// Paper-style candidate: dual basis of a maximal independent subset of A starting at α₀.
std::optional<std::vector<Rational>> dual_basis_candidate(const RootDatum& d, const std::vector<int>& a,
                                                          const std::vector<int>& a_bar, int alpha0) {
  const int r = d.rank();
  std::vector<int> basis{alpha0};
  RatMatrix rows{std::vector<Rational>(d.root(alpha0).coords.begin(), d.root(alpha0).coords.end())};
  for (int x : a) {
    if (x == alpha0) continue;
    auto trial = rows;
    trial.emplace_back(d.root(x).coords.begin(), d.root(x).coords.end());
    if (rank_rational(trial) == static_cast<int>(trial.size())) {
      rows = std::move(trial);
      basis.push_back(x);
    }
  }
  std::vector<std::vector<Rational>> duals;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    std::vector<Rational> e(basis.size(), Rational(0));
    e[j] = 1;
    auto sol = solve_rational(rows, e);
    if (!sol) return std::nullopt;
    duals.push_back(*sol);
  }
  std::vector<Rational> delta(r, Rational(0));
  Rational mx = rdot(d.root(a_bar.front()), duals[0]);
  for (int b : a_bar) mx = std::max(mx, rdot(d.root(b), duals[0]));
  if (mx <= 0) return std::nullopt;
  for (int t = 0; t < r; ++t) delta[t] += duals[0][t] / mx;
  for (std::size_t i = 1; i < duals.size(); ++i) {
    std::optional<Rational> mn;
    for (int b : a_bar) {
      Rational p = rdot(d.root(b), duals[i]);
      if (p > 0 && (!mn || p < *mn)) mn = p;
    }
    if (!mn) return std::nullopt;
    for (int t = 0; t < r; ++t) delta[t] -= 2 * duals[i][t] / *mn;
  }
  return delta;
}

// Integer perceptron for ⟨α₀,δ⟩ > 0, ⟨β,δ⟩ < 0; converges whenever the system is strictly feasible.
std::optional<std::vector<Rational>> perceptron_candidate(const RootDatum& d, const std::vector<int>& a_bar,
                                                          int alpha0) {
  std::vector<Vec> cons{d.root(alpha0).coords};
  for (int b : a_bar)
    if (b != alpha0) cons.push_back((-d.root(b)).coords);
  Vec delta(d.rank(), 0);
  for (int updates = 0; updates < 200000;) {
    bool clean = true;
    for (const auto& c : cons) {
      if (dot(c, delta) > 0) continue;
      for (std::size_t t = 0; t < delta.size(); ++t) delta[t] += c[t];
      ++updates;
      clean = false;
    }
    if (clean) return std::vector<Rational>(delta.begin(), delta.end());
  }
  return std::nullopt;
}

}  // namespace

SignSplit split_signs(const RootDatum& d, const Coweight& gamma, const WeylElement& w) {
  require_dominant(d, gamma);
  SignSplit s;
  for (int i = 0; i < static_cast<int>(d.num_roots()); ++i) {
    if (pairing(d.root(i), gamma) <= 0) continue;
    (d.is_positive(apply_root(d, w, i)) ? s.plus : s.minus).push_back(i);
  }
  return s;
}

std::vector<int> s_set(const RootDatum& d, const Coweight& gamma, const WeylElement& w, const Valuations& vals) {
  auto split = split_signs(d, gamma, w);
  validate(d, gamma, split, vals);
  std::vector<int> out;
  for (int i : split.minus)
    if (vals.at(i) < 0) out.push_back(i);
  return out;
}

std::vector<int> positive_span_within(const RootDatum& d, const std::vector<int>& a, const std::vector<int>& ambient) {
  for (int x : a)
    if (!d.is_positive(x)) throw Error(ErrorCode::NotPositive, format_vec(d.root(x).coords) + " is not positive");
  std::set<Vec> dead;
  std::function<bool(const Vec&)> reach = [&](const Vec& v) {
    if (std::all_of(v.begin(), v.end(), [](auto c) { return c == 0; })) return true;
    if (dead.count(v)) return false;
    for (int x : a) {
      const Vec& c = d.root_coefficients(x);
      Vec rest = v;
      bool ok = true;
      for (std::size_t t = 0; t < v.size(); ++t)
        if ((rest[t] -= c[t]) < 0) ok = false;
      if (ok && reach(rest)) return true;
    }
    dead.insert(v);
    return false;
  };
  std::vector<int> out;
  for (int b : ambient)
    if (d.is_positive(b) && reach(d.root_coefficients(b))) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

LambdaSets lambda_and_sets(const RootDatum& d, const Coweight& gamma, const WeylElement& w, const Valuations& vals) {
  if (s_set(d, gamma, w, vals).empty()) throw Error(ErrorCode::EmptyS, "no minus-root has negative valuation");
  auto split = split_signs(d, gamma, w);
  LambdaSets out;
  bool first = true;
  for (int i : split.minus) {
    Rational q = Rational(vals.at(i)) / pairing(d.root(i), gamma);
    if (first || q < out.lambda) out.lambda = q;
    first = false;
  }
  for (int i : split.minus)
    if (Rational(vals.at(i)) / pairing(d.root(i), gamma) == out.lambda) out.a.push_back(i);
  out.a_bar = positive_span_within(d, out.a, split.minus);
  return out;
}

bool separates(const RootDatum& d, const std::vector<int>& a_bar, int alpha0, const std::vector<Rational>& delta) {
  if (rdot(d.root(alpha0), delta) <= 0) return false;
  for (int b : a_bar)
    if (b != alpha0 && rdot(d.root(b), delta) >= 0) return false;
  return true;
}

Separator separating_coweight(const RootDatum& d, const std::vector<int>& a, const std::vector<int>& a_bar) {
  if (a.empty()) throw Error(ErrorCode::BadParameters, "A is empty");
  for (int x : a) {
    if (!d.is_positive(x)) throw Error(ErrorCode::NotPositive, format_vec(d.root(x).coords) + " is not positive");
    if (!contains(a_bar, x)) throw Error(ErrorCode::BadParameters, "A is not contained in its closure");
  }
  for (int a0 : a) {
    auto delta = dual_basis_candidate(d, a, a_bar, a0);
    if (delta && separates(d, a_bar, a0, *delta)) return {a0, *delta, true};
  }
  for (int a0 : a) {
    auto delta = perceptron_candidate(d, a_bar, a0);
    if (delta && separates(d, a_bar, a0, *delta)) return {a0, *delta, false};
  }
  throw Error(ErrorCode::NoSeparator, "no separating coweight found");
}

TriangleFunctions build_f1_f2(const RootDatum& d, const Coweight& gamma, const WeylElement& w, const Valuations& vals) {
  TriangleFunctions t;
  t.sets = lambda_and_sets(d, gamma, w, vals);
  t.separator = separating_coweight(d, t.sets.a, t.sets.a_bar);
  const int a0 = t.separator.alpha0;
  auto minus = split_signs(d, gamma, w).minus;
  const auto& abar = t.sets.a_bar;
  t.f1.at_zero = 1;
  for (int i = 0; i < static_cast<int>(d.num_roots()); ++i) {
    Rational lv = t.sets.lambda * pairing(d.root(i), gamma);
    if (i != a0 && contains(abar, i)) {
      if (boost::multiprecision::denominator(lv) != 1)
        throw Error(ErrorCode::BadParameters, "lambda pairing not integral on the closure");
      t.f1.on_roots.emplace_back(static_cast<std::int64_t>(boost::multiprecision::numerator(lv)));
    } else if (i == a0 || contains(minus, i)) {
      t.f1.on_roots.emplace_back(static_cast<std::int64_t>(floor_rational(lv + 1)));
    } else {
      t.f1.on_roots.emplace_back(kInfinity);
    }
  }
  t.f2 = t.f1;
  t.f2.on_roots[a0] = *t.f1.on_roots[a0] - 1;
  if (!is_concave(d, t.f1) || !is_concave(d, t.f2))
    throw Error(ErrorCode::BadParameters, "f1/f2 failed the concavity gate");
  return t;
}

RootFunction build_f0(const RootDatum& d, const Coweight& gamma, const Valuations& vals, const RootFunction& f1,
                      int alpha0) {
  const int n = static_cast<int>(d.num_roots());
  auto v = vals.at(alpha0);
  std::vector<ExtInt> h = f1.on_roots;
  const int neg = d.negation(alpha0);
  if (ext_lt(ExtInt(-v), h[neg])) h[neg] = -v;

  std::vector<std::array<int, 3>> sums;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (auto k = d.root_index(d.root(i) + d.root(j))) sums.push_back({i, j, *k});

  std::int64_t hi = 0, lo = 0;
  for (int i = 0; i < n; ++i) {
    if (h[i]) hi = std::max(hi, *h[i]);
    lo = std::min(lo, -std::abs(pairing(d.root(i), gamma)));
  }
  const std::int64_t guard = static_cast<std::int64_t>(n) * (hi - lo + 2) + 2;
  for (std::int64_t pass = 0;; ++pass) {
    if (pass > guard) throw Error(ErrorCode::NonTermination, "relaxation did not stabilize");
    bool changed = false;
    for (const auto& [i, j, k] : sums) {
      ExtInt c = ext_add(h[i], h[j]);
      if (ext_lt(c, h[k])) {
        h[k] = c;
        changed = true;
      }
    }
    if (!changed) break;
  }
  RootFunction f0{h, 1};
  if (!is_concave(d, f0)) throw Error(ErrorCode::BadParameters, "f0 failed the concavity gate");
  return f0;
}

RootIdentity root_identity(const RootDatum& d, const Coweight& gamma, const WeylElement& w) {
  auto split = split_signs(d, gamma, w);
  std::int64_t plus_sum = 0;
  for (int i : split.plus) plus_sum += pairing(d.root(i), gamma);
  Weight rho2 = two_rho(d);
  Weight winv_rho2 = apply_weight(inverse(d, w), rho2);
  RootIdentity r;
  r.lhs = HalfInt::from_int(plus_sum) - HalfInt::from_doubled(pairing(winv_rho2, gamma));
  r.rhs = HalfInt::from_doubled(pairing(rho2, gamma));
  r.equal = r.lhs == r.rhs;
  return r;
}

TriangleStep triangle_step(const RootDatum& d, const Coweight& gamma, const WeylElement& w, const Valuations& vals) {
  TriangleStep step;
  if (s_set(d, gamma, w, vals).empty()) return step;
  step.s_empty = false;
  auto t = build_f1_f2(d, gamma, w, vals);
  step.alpha0 = t.separator.alpha0;
  WeylElement w0 = multiply(d, w, reflection(d, step.alpha0));
  auto reps = stabilizer_coset_reps(d, gamma);
  const auto& r0 = coset_rep_of(reps, w0, gamma);
  const auto& r1 = coset_rep_of(reps, w, gamma);
  step.coset_strictly_lower = !(r0 == r1) && bruhat_leq(d, r0, r1);
  step.lower = w0;
  return step;
}

}  // namespace lfac
