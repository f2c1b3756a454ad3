#include "lfactor/concave.hpp"

#include <algorithm>

namespace lfac {

ExtInt ext_add(ExtInt a, ExtInt b) {
  if (!a || !b) return kInfinity;
  return *a + *b;
}

bool ext_le(ExtInt a, ExtInt b) {
  if (!b) return true;
  if (!a) return false;
  return *a <= *b;
}

bool ext_lt(ExtInt a, ExtInt b) { return ext_le(a, b) && a != b; }

std::string ext_str(ExtInt a) { return a ? std::to_string(*a) : "inf"; }

namespace {

void require_total(const RootDatum& d, const RootFunction& f) {
  if (f.on_roots.size() != d.num_roots())
    throw Error(ErrorCode::IncompleteDomain, "function has " + std::to_string(f.on_roots.size()) + " root values, datum has " +
                                                 std::to_string(d.num_roots()));
}

}  // namespace

bool is_concave(const RootDatum& d, const RootFunction& f) {
  require_total(d, f);
  if (!ext_le(f.at_zero, ext_add(f.at_zero, f.at_zero))) return false;
  if (f.at_zero && *f.at_zero < 0) return false;
  const int n = static_cast<int>(d.num_roots());
  for (int i = 0; i < n; ++i) {
    if (!ext_le(f.on_roots[i], ext_add(f.at_zero, f.on_roots[i]))) return false;
    for (int j = i; j < n; ++j) {
      ExtInt sum = ext_add(f.on_roots[i], f.on_roots[j]);
      if (d.negation(i) == j) {
        if (!ext_le(f.at_zero, sum)) return false;
        continue;
      }
      auto k = d.root_index(d.root(i) + d.root(j));
      if (k && !ext_le(f.on_roots[*k], sum)) return false;
    }
  }
  return true;
}

RootFunction make_concave(const RootDatum& d, RootFunction f) {
  if (!is_concave(d, f)) throw Error(ErrorCode::BadParameters, "function is not concave");
  return f;
}

std::vector<int> psi(const RootDatum& d, const RootFunction& f) {
  require_total(d, f);
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(d.num_roots()); ++i) {
    ExtInt s = ext_add(f.on_roots[i], f.on_roots[d.negation(i)]);
    if (s && *s == 0) out.push_back(i);
  }
  return out;
}

RootFunction star(const RootDatum& d, const RootFunction& f) {
  RootFunction g = f;
  g.at_zero = f.at_zero ? std::max<std::int64_t>(*f.at_zero, 1) : kInfinity;
  for (int i : psi(d, f)) g.on_roots[i] = *f.on_roots[i] + 1;
  return make_concave(d, std::move(g));
}

RootFunction pointwise_max(const RootDatum& d, const RootFunction& f, const RootFunction& g) {
  require_total(d, f);
  require_total(d, g);
  auto mx = [](ExtInt a, ExtInt b) { return ext_le(a, b) ? b : a; };
  RootFunction h;
  h.at_zero = mx(f.at_zero, g.at_zero);
  for (std::size_t i = 0; i < f.on_roots.size(); ++i) h.on_roots.push_back(mx(f.on_roots[i], g.on_roots[i]));
  return make_concave(d, std::move(h));
}

std::vector<int> less_set(const RootDatum& d, const RootFunction& f, const RootFunction& g) {
  require_total(d, f);
  require_total(d, g);
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(d.num_roots()); ++i)
    if (ext_lt(f.on_roots[i], g.on_roots[i])) out.push_back(i);
  return out;
}

CosetHypotheses check_coset_hypotheses(const RootDatum& d, const RootFunction& f, const RootFunction& g) {
  CosetHypotheses h;
  h.zero_values_equal = f.at_zero == g.at_zero;
  for (int i : less_set(d, f, g))
    if (!d.is_positive(i)) h.nonpositive_witnesses.push_back(i);
  h.less_set_positive = h.nonpositive_witnesses.empty();
  auto pf = psi(d, f), pg = psi(d, g);
  std::vector<int> sym;
  std::set_symmetric_difference(pf.begin(), pf.end(), pg.begin(), pg.end(), std::back_inserter(sym));
  for (int i : pf)
    if (std::binary_search(pg.begin(), pg.end(), i) && f.on_roots[i] != g.on_roots[i]) sym.push_back(i);
  std::sort(sym.begin(), sym.end());
  h.psi_witnesses = sym;
  h.psi_agree = sym.empty();
  return h;
}

std::int64_t coset_index_exponent(const RootDatum& d, const RootFunction& f, const RootFunction& g) {
  auto h = check_coset_hypotheses(d, f, g);
  if (!h.all()) throw Error(ErrorCode::HypothesesFail, "coset hypotheses (i)-(iii) do not hold");
  std::int64_t e = 0;
  for (int i : less_set(d, f, g)) {
    if (!g.on_roots[i]) throw Error(ErrorCode::HypothesesFail, "infinite index at root " + format_vec(d.root(i).coords));
    e += *g.on_roots[i] - *f.on_roots[i];
  }
  return e;
}

bool less_b(const RootDatum& d, int alpha, int beta) {
  auto k = d.root_index(d.root(beta) - d.root(alpha));
  return k && d.is_positive(*k);
}

std::vector<int> minimal_numbering(const RootDatum& d, const std::vector<int>& s) {
  for (int i : s)
    if (!d.is_positive(i)) throw Error(ErrorCode::NotPositive, format_vec(d.root(i).coords) + " is not positive");
  std::vector<int> rest(s);
  std::sort(rest.begin(), rest.end());
  rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
  std::vector<int> out;
  while (!rest.empty()) {
    auto it = std::find_if(rest.begin(), rest.end(), [&](int a) {
      return std::none_of(rest.begin(), rest.end(), [&](int b) { return less_b(d, b, a); });
    });
    // <_B is acyclic on positive roots (differences raise height), so a minimal element exists.
    out.push_back(*it);
    rest.erase(it);
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (less_b(d, out[j], out[i])) throw Error(ErrorCode::BadParameters, "minimal numbering check failed");
  return out;
}

RootFunction g_gamma(const RootDatum& d, const Coweight& gamma) {
  if (!is_dominant(d, gamma)) throw Error(ErrorCode::NotDominant, format_vec(gamma.coords) + " is not dominant");
  RootFunction g;
  g.at_zero = 0;
  for (const auto& a : d.roots()) g.on_roots.push_back(pairing(a, gamma) < 0 ? 1 : 0);
  return make_concave(d, std::move(g));
}

RootFunction f_gamma(const RootDatum& d, const Coweight& gamma) {
  RootFunction f = g_gamma(d, gamma);
  for (std::size_t i = 0; i < d.num_roots(); ++i) f.on_roots[i] = *f.on_roots[i] - pairing(d.root(i), gamma);
  return make_concave(d, std::move(f));
}

std::int64_t double_coset_degree_exponent(const RootDatum& d, const Coweight& gamma) {
  if (!is_dominant(d, gamma)) throw Error(ErrorCode::NotDominant, format_vec(gamma.coords) + " is not dominant");
  std::int64_t e = 0;
  for (const auto& a : d.roots()) {
    auto p = pairing(a, gamma);
    if (p > 0) e += p;
  }
  return e;
}

std::vector<std::vector<int>> enumerate_representatives(const RootDatum& d, const RootFunction& f,
                                                        const RootFunction& g, int q, std::size_t max_count) {
  if (q < 2 || q > 3) throw Error(ErrorCode::BadParameters, "enumeration supports residue size 2 or 3");
  std::int64_t e = coset_index_exponent(d, f, g);
  std::size_t count = 1;
  for (std::int64_t k = 0; k < e; ++k) {
    count *= q;
    if (count > max_count) throw Error(ErrorCode::TooLarge, "more than " + std::to_string(max_count) + " representatives");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> digits(e, 0);
  for (std::size_t n = 0; n < count; ++n) {
    out.push_back(digits);
    for (std::int64_t k = e - 1; k >= 0; --k) {
      if (++digits[k] < q) break;
      digits[k] = 0;
    }
  }
  return out;
}

RootFunction sample_concave(const RootDatum& d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-2, 2), small(0, 2), bump(1, 3), coin(0, 9);
  Coweight y = Coweight::zero(d.rank());
  for (auto& c : y.coords) c = coord(rng);
  std::int64_t c = small(rng);
  RootFunction base;
  base.at_zero = std::uniform_int_distribution<std::int64_t>(0, 2 * c)(rng);
  for (const auto& a : d.roots()) base.on_roots.push_back(pairing(a, y) + c);
  const int n = static_cast<int>(d.num_roots());
  for (int attempt = 0; attempt < 50; ++attempt) {
    RootFunction f = base;
    int raises = std::uniform_int_distribution<int>(1, std::max(1, n / 2))(rng);
    for (int r = 0; r < raises; ++r) {
      int slot = std::uniform_int_distribution<int>(0, n)(rng);
      ExtInt& v = slot == n ? f.at_zero : f.on_roots[slot];
      if (coin(rng) < 2)
        v = kInfinity;
      else if (v)
        v = *v + bump(rng);
    }
    if (is_concave(d, f)) return f;
  }
  return base;
}

}  // namespace lfac
