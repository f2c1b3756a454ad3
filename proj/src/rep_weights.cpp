#include "lfactor/rep_weights.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "lfactor/weyl.hpp"

namespace lfac {

std::string_view rep_class_name(RepClass c) {
  switch (c) {
    case RepClass::Minuscule: return "minuscule";
    case RepClass::QuasiMinuscule: return "quasi_minuscule";
    case RepClass::Neither: return "neither";
    case RepClass::Trivial: return "trivial";
  }
  return "";
}

std::int64_t invariant_form(const RootDatum& d, const Coweight& x, const Coweight& y) {
  std::int64_t s = 0;
  for (const auto& b : d.roots()) s += pairing(b, x) * pairing(b, y);
  return s;
}

namespace {

void require_dominant(const RootDatum& d, const Coweight& y) {
  if (!is_dominant(d, y)) throw Error(ErrorCode::NotDominant, format_vec(y.coords) + " is not dominant");
}

}  // namespace

BigInt weyl_dimension(const RootDatum& d, const Coweight& highest) {
  require_dominant(d, highest);
  const Coweight rho2 = two_rho_check(d);
  Rational prod = 1;
  for (int a : d.positive_indices()) {
    auto base = pairing(d.root(a), rho2);
    prod *= Rational(2 * pairing(d.root(a), highest) + base) / Rational(base);
  }
  return boost::multiprecision::numerator(prod);
}

std::vector<Coweight> dominant_weights_below(const RootDatum& d, const Coweight& highest, bool stop_at_noncentral) {
  require_dominant(d, highest);
  auto pos = d.positive_indices();
  std::set<Coweight> seen{highest};
  std::vector<Coweight> queue{highest};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int a : pos) {
      Coweight nu = queue[head] - d.coroot(a);
      if (!is_dominant(d, nu) || !seen.insert(nu).second) continue;
      queue.push_back(nu);
      if (stop_at_noncentral && !is_central(d, nu)) {
        sort_canonical(queue);
        return queue;
      }
    }
  }
  sort_canonical(queue);
  return queue;
}

WeightSystem weight_system(const RootDatum& d, const Coweight& highest, std::int64_t max_dim) {
  require_dominant(d, highest);
  BigInt dim = weyl_dimension(d, highest);
  if (dim > max_dim)
    throw Error(ErrorCode::TooLarge, "representation dimension " + dim.str() + " exceeds " + std::to_string(max_dim));

  std::vector<Coweight> dom = dominant_weights_below(d, highest);
  const Coweight rho2 = two_rho_check(d);
  auto norm = [&](const Coweight& mu) {
    Coweight v = mu * 2 + rho2;
    return invariant_form(d, v, v);
  };
  std::vector<std::pair<std::int64_t, Coweight>> order;
  for (const auto& mu : dom) order.emplace_back(norm(mu), mu);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

  std::set<Coweight> dom_set(dom.begin(), dom.end());
  std::map<Coweight, std::int64_t> mult;
  const std::int64_t top = norm(highest);
  auto pos = d.positive_indices();
  for (const auto& [nrm, mu] : order) {
    if (mu == highest) {
      mult[mu] = 1;
      continue;
    }
    // m_μ = 8 Σ_{α>0} Σ_{k≥1} m_{μ+kα^∨} B(μ+kα^∨, α^∨) / (B(2λ+2ρ̂) − B(2μ+2ρ̂))
    __int128 num = 0;
    for (int a : pos) {
      const Coweight& ac = d.coroot(a);
      Coweight nu = mu + ac;
      while (true) {
        Coweight dn = dominant_representative(d, nu);
        if (!dom_set.count(dn)) break;
        auto it = mult.find(dn);
        if (it == mult.end())
          throw Error(ErrorCode::FreudenthalDenominatorZero, "dominant weight processed out of order");
        num += static_cast<__int128>(it->second) * invariant_form(d, nu, ac);
        nu += ac;
      }
    }
    std::int64_t den = top - nrm;
    if (den == 0) throw Error(ErrorCode::FreudenthalDenominatorZero, "at weight " + format_vec(mu.coords));
    __int128 scaled = 8 * num;
    if (scaled % den != 0)
      throw Error(ErrorCode::FreudenthalDenominatorZero, "non-integral multiplicity at " + format_vec(mu.coords));
    mult[mu] = static_cast<std::int64_t>(scaled / den);
  }

  WeightSystem ws{d, highest, {}, {}};
  for (const auto& mu : dom) {
    ws.dominant.emplace_back(mu, mult.at(mu));
    for (const auto& nu : orbit(d, mu)) ws.table[nu] = mult.at(mu);
  }
  return ws;
}

WeightMults dominant_support(const WeightSystem& ws) { return ws.dominant; }

RepClass classify(const RootDatum& d, const Coweight& highest) {
  require_dominant(d, highest);
  if (is_central(d, highest)) return RepClass::Trivial;
  auto dom = dominant_weights_below(d, highest);
  bool others_central = true;
  for (const auto& mu : dom)
    if (mu != highest && !is_central(d, mu)) others_central = false;
  if (dom.size() == 1) return RepClass::Minuscule;
  return others_central ? RepClass::QuasiMinuscule : RepClass::Neither;
}

namespace {

std::vector<int> dominant_positive_coroots(const RootDatum& d) {
  std::vector<int> out;
  for (int a : d.positive_indices())
    if (is_dominant(d, d.coroot(a))) out.push_back(a);
  return out;
}

std::int64_t coheight(const RootDatum& d, int a) {
  std::int64_t h = 0;
  for (auto c : d.coroot_coefficients(a)) h += c;
  return h;
}

// Connected components of the Dynkin diagram, as lists of simple indices.
std::vector<std::vector<int>> dynkin_components(const RootDatum& d) {
  const int m = d.num_simple();
  std::vector<int> comp(m, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = static_cast<int>(out.size());
    out.emplace_back();
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      out.back().push_back(t);
      for (int u = 0; u < m; ++u)
        if (comp[u] < 0 && d.cartan(t, u) != 0) {
          comp[u] = comp[s];
          stack.push_back(u);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

// Highest coroot supported on one Dynkin component.
Coweight component_highest_coroot(const RootDatum& d, const std::vector<int>& comp) {
  int best = -1;
  for (int a : d.positive_indices()) {
    const auto& c = d.coroot_coefficients(a);
    bool inside = true;
    for (int s = 0; s < d.num_simple(); ++s)
      if (c[s] != 0 && !std::binary_search(comp.begin(), comp.end(), s)) inside = false;
    if (inside && (best < 0 || coheight(d, a) > coheight(d, best))) best = a;
  }
  return d.coroot(best);
}

}  // namespace

Coweight highest_coroot(const RootDatum& d) {
  auto cand = dominant_positive_coroots(d);
  if (cand.empty()) throw Error(ErrorCode::BadParameters, "datum has no roots");
  int best = cand[0];
  for (int a : cand)
    if (coheight(d, a) > coheight(d, best)) best = a;
  return d.coroot(best);
}

Coweight highest_short_coroot(const RootDatum& d) {
  auto cand = dominant_positive_coroots(d);
  if (cand.empty()) throw Error(ErrorCode::BadParameters, "datum has no roots");
  int best = cand[0];
  for (int a : cand) {
    auto na = invariant_form(d, d.coroot(a), d.coroot(a));
    auto nb = invariant_form(d, d.coroot(best), d.coroot(best));
    if (na < nb || (na == nb && d.coroot(a) > d.coroot(best))) best = a;
  }
  return d.coroot(best);
}

std::vector<Table1Row> table1_rows(char type, int rank) {
  const RootDatum d = simple(type, rank, Isogeny::Adjoint);
  std::set<Coweight> candidates;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << rank); ++mask) {
    Vec c(rank, 0);
    for (int i = 0; i < rank; ++i) c[i] = (mask >> i) & 1;
    candidates.insert(Coweight(c));
  }
  candidates.insert(highest_short_coroot(d));

  std::vector<Table1Row> rows;
  for (const auto& lam : candidates) {
    auto screen = dominant_weights_below(d, lam, true);
    bool possible = true;
    for (const auto& mu : screen)
      if (mu != lam && !is_central(d, mu)) possible = false;
    if (!possible) continue;
    RepClass c = classify(d, lam);
    if (c != RepClass::Minuscule && c != RepClass::QuasiMinuscule) continue;
    WeightSystem ws = weight_system(d, lam);
    Table1Row row;
    row.highest = lam;
    auto z = ws.table.find(Coweight::zero(rank));
    row.m0 = z == ws.table.end() ? 0 : z->second;
    for (int s = 0; s < d.num_simple(); ++s)
      if (pairing(d.simple_root(s), lam) == 1) row.boxed.push_back(s);
    row.dimension = weyl_dimension(d, lam);
    row.minuscule = c == RepClass::Minuscule;
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Table1Row& a, const Table1Row& b) {
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    return a.boxed < b.boxed;
  });
  return rows;
}

RepSum make_rep_sum(WeightMults summands) {
  std::map<Coweight, std::int64_t, std::greater<>> merged;
  for (auto& [w, m] : summands) merged[w] += m;
  RepSum r;
  for (auto& [w, m] : merged)
    if (m > 0) r.summands.emplace_back(w, m);
  return r;
}

std::int64_t rep_dimension(const RootDatum& d, const RepSum& r) {
  BigInt total = 0;
  for (const auto& [w, m] : r.summands) total += weyl_dimension(d, w) * m;
  return static_cast<std::int64_t>(total);
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& s, const std::string& context) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw Error(ErrorCode::BadParameters, "bad integer '" + s + "' in " + context);
  return v;
}

WeightMults named_term(const RootDatum& d, const std::string& term) {
  const int k = d.rank();
  const auto& fam = d.family();
  auto colon = term.find(':');
  std::string head = term.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : term.substr(colon + 1);
  auto needs_no_arg = [&] {
    if (colon != std::string::npos) throw Error(ErrorCode::BadParameters, "'" + head + "' takes no parameter");
  };

  if (head == "hw") {
    Vec c;
    std::size_t start = 0;
    while (start <= arg.size()) {
      auto comma = arg.find(',', start);
      if (comma == std::string::npos) comma = arg.size();
      c.push_back(parse_int(trim(arg.substr(start, comma - start)), term));
      start = comma + 1;
    }
    if (static_cast<int>(c.size()) != k)
      throw Error(ErrorCode::BadParameters, "hw needs " + std::to_string(k) + " coordinates");
    Coweight w(c);
    if (!is_dominant(d, w)) throw Error(ErrorCode::BadParameters, "hw " + format_vec(c) + " is not dominant");
    return {{w, 1}};
  }
  if (head == "adj") {
    needs_no_arg();
    WeightMults out;
    for (const auto& comp : dynkin_components(d)) out.emplace_back(component_highest_coroot(d, comp), 1);
    if (k > d.num_simple()) out.emplace_back(Coweight::zero(k), k - d.num_simple());
    return out;
  }
  if (fam.kind == Family::Kind::GL) {
    const int n = fam.n;
    if (head == "std") {
      needs_no_arg();
      Vec c(n, 0);
      c[0] = 1;
      return {{Coweight(c), 1}};
    }
    if (head == "wedge" || head == "sym") {
      auto l = parse_int(arg, term);
      Vec c(n, 0);
      if (head == "wedge") {
        if (l < 0 || l > n) throw Error(ErrorCode::BadParameters, "wedge degree out of range 0.." + std::to_string(n));
        for (int i = 0; i < l; ++i) c[i] = 1;
      } else {
        if (l < 0) throw Error(ErrorCode::BadParameters, "sym degree must be nonnegative");
        c[0] = l;
      }
      return {{Coweight(c), 1}};
    }
  }
  if (fam.kind == Family::Kind::GSp) {
    if (head == "spin" || head == "std") {
      needs_no_arg();
      Vec c(k, 0);
      c[head == "spin" ? 0 : 1] = 1;
      return {{Coweight(c), 1}};
    }
  }
  throw Error(ErrorCode::UnknownRepName, "'" + term + "' is not recognized for " + d.label());
}

}  // namespace

RepSum named_rep(const RootDatum& d, const std::string& name) {
  WeightMults all;
  std::size_t start = 0;
  while (start <= name.size()) {
    auto plus = name.find('+', start);
    if (plus == std::string::npos) plus = name.size();
    std::string term = trim(name.substr(start, plus - start));
    if (term.empty()) throw Error(ErrorCode::UnknownRepName, "empty summand in '" + name + "'");
    for (auto& s : named_term(d, term)) all.push_back(s);
    start = plus + 1;
  }
  return make_rep_sum(std::move(all));
}

}  // namespace lfac
