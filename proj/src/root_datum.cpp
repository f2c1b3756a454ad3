#include "lfactor/root_datum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace lfac {

namespace {

struct ClosureEntry {
  Vec coroot;
  Vec coeff;
  Vec cocoeff;
};

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

bool all_nonneg(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](auto c) { return c >= 0; });
}
bool all_nonpos(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](auto c) { return c <= 0; });
}

}  // namespace

RootDatum RootDatum::build(int rank, const std::vector<Weight>& simple_roots,
                           const std::vector<Coweight>& simple_coroots, std::string label) {
  if (rank < 0) throw Error(ErrorCode::DimensionMismatch, "negative rank");
  if (simple_roots.size() != simple_coroots.size())
    throw Error(ErrorCode::DimensionMismatch, "simple roots and coroots have different counts");
  const std::size_t m = simple_roots.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (simple_roots[i].size() != static_cast<std::size_t>(rank) ||
        simple_coroots[i].size() != static_cast<std::size_t>(rank))
      throw Error(ErrorCode::DimensionMismatch, "simple vector " + std::to_string(i) + " has wrong length");
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto c = dot(simple_roots[i].coords, simple_coroots[j].coords);
      auto t = dot(simple_roots[j].coords, simple_coroots[i].coords);
      if ((i == j && c != 2) || (i != j && (c > 0 || (c == 0) != (t == 0)))) {
        std::ostringstream os;
        os << "<alpha_" << i + 1 << ", alpha_" << j + 1 << "^v> = " << c;
        if (i != j) os << " but <alpha_" << j + 1 << ", alpha_" << i + 1 << "^v> = " << t;
        throw Error(ErrorCode::InvalidCartan, os.str());
      }
    }
  }

  std::map<Vec, ClosureEntry> found;
  std::vector<Vec> queue;
  for (std::size_t i = 0; i < m; ++i) {
    found.emplace(simple_roots[i].coords, ClosureEntry{simple_coroots[i].coords, unit(m, i), unit(m, i)});
    queue.push_back(simple_roots[i].coords);
  }
  if (found.size() != m) throw Error(ErrorCode::InvalidCartan, "repeated simple root");

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vec r = queue[head];
    const ClosureEntry e = found.at(r);
    for (std::size_t s = 0; s < m; ++s) {
      const Vec& a = simple_roots[s].coords;
      const Vec& ac = simple_coroots[s].coords;
      std::int64_t p = dot(r, ac);
      std::int64_t pc = dot(a, e.coroot);
      Vec r2 = r, c2 = e.coroot, k2 = e.coeff, kc2 = e.cocoeff;
      for (int t = 0; t < rank; ++t) {
        r2[t] -= p * a[t];
        c2[t] -= pc * ac[t];
      }
      k2[s] -= p;
      kc2[s] -= pc;
      auto it = found.find(r2);
      if (it != found.end()) {
        if (it->second.coroot != c2 || it->second.coeff != k2 || it->second.cocoeff != kc2)
          throw Error(ErrorCode::InvalidCartan,
                      "reflection closure is inconsistent at root " + format_vec(r2) +
                          " (simple roots dependent or coroots mismatched)");
        continue;
      }
      if (found.size() >= static_cast<std::size_t>(kMaxRoots))
        throw Error(ErrorCode::InfiniteSystem, "reflection closure exceeds " + std::to_string(kMaxRoots) + " roots");
      found.emplace(r2, ClosureEntry{c2, k2, kc2});
      queue.push_back(r2);
    }
  }

  RootDatum d;
  d.rank_ = rank;
  d.label_ = std::move(label);
  for (auto& [r, e] : found) {
    if (!(all_nonneg(e.coeff) || all_nonpos(e.coeff)))
      throw Error(ErrorCode::InvalidCartan, "root " + format_vec(r) + " has mixed-sign coefficients");
    d.roots_.emplace_back(r);
    d.coroots_.emplace_back(e.coroot);
    d.root_coeff_.push_back(e.coeff);
    d.coroot_coeff_.push_back(e.cocoeff);
    d.positive_.push_back(all_nonneg(e.coeff));
  }
  const int n = static_cast<int>(d.roots_.size());
  for (int i = 0; i < n; ++i) {
    if (d.root_index(d.roots_[i] * 2))
      throw Error(ErrorCode::InvalidCartan, "non-reduced root system at " + format_vec(d.roots_[i].coords));
  }
  d.negation_.resize(n);
  for (int i = 0; i < n; ++i) d.negation_[i] = *d.root_index(-d.roots_[i]);
  for (std::size_t s = 0; s < m; ++s) d.simple_.push_back(*d.root_index(simple_roots[s]));
  d.coroot_order_.resize(n);
  std::iota(d.coroot_order_.begin(), d.coroot_order_.end(), 0);
  std::sort(d.coroot_order_.begin(), d.coroot_order_.end(),
            [&](int a, int b) { return d.coroots_[a] < d.coroots_[b]; });
  for (int k = 1; k < n; ++k) {
    if (d.coroots_[d.coroot_order_[k]] == d.coroots_[d.coroot_order_[k - 1]])
      throw Error(ErrorCode::InvalidCartan, "two roots share a coroot");
  }
  return d;
}

std::vector<int> RootDatum::positive_indices() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(roots_.size()); ++i)
    if (positive_[i]) out.push_back(i);
  return out;
}

std::int64_t RootDatum::height(int i) const {
  return std::accumulate(root_coeff_[i].begin(), root_coeff_[i].end(), std::int64_t{0});
}

std::optional<int> RootDatum::root_index(const Weight& x) const {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), x);
  if (it == roots_.end() || *it != x) return std::nullopt;
  return static_cast<int>(it - roots_.begin());
}

std::optional<int> RootDatum::coroot_index(const Coweight& y) const {
  auto it = std::lower_bound(coroot_order_.begin(), coroot_order_.end(), y,
                             [&](int i, const Coweight& v) { return coroots_[i] < v; });
  if (it == coroot_order_.end() || coroots_[*it] != y) return std::nullopt;
  return *it;
}

int RootDatum::require_root(const Weight& x) const {
  auto i = root_index(x);
  if (!i) throw Error(ErrorCode::NotARoot, format_vec(x.coords) + " is not a root");
  return *i;
}

std::int64_t RootDatum::cartan(int i, int j) const { return pairing(simple_root(i), simple_coroot(j)); }

RootDatum gl(int n) {
  if (n < 1) throw Error(ErrorCode::UnsupportedFamily, "gl(n) needs n >= 1");
  std::vector<Weight> a;
  std::vector<Coweight> ac;
  for (int i = 0; i + 1 < n; ++i) {
    Vec v(n, 0);
    v[i] = 1;
    v[i + 1] = -1;
    a.emplace_back(v);
    ac.emplace_back(v);
  }
  auto d = RootDatum::build(n, a, ac, "gl(" + std::to_string(n) + ")");
  d.set_family({Family::Kind::GL, n});
  return d;
}

RootDatum gsp(int two_n) {
  if (two_n < 2 || two_n % 2 != 0) throw Error(ErrorCode::UnsupportedFamily, "gsp(2n) needs an even argument >= 2");
  const int n = two_n / 2;
  const int k = n + 1;  // basis e_0, e_1, ..., e_n
  std::vector<Weight> a;
  std::vector<Coweight> ac;
  for (int i = 1; i < n; ++i) {
    Vec v(k, 0);
    v[i] = 1;
    v[i + 1] = -1;
    a.emplace_back(v);
    ac.emplace_back(v);
  }
  Vec last(k, 0);
  last[n] = 2;
  last[0] = 1;
  a.emplace_back(last);
  Vec lastc(k, 0);
  lastc[n] = 1;
  ac.emplace_back(lastc);
  auto d = RootDatum::build(k, a, ac, "gsp(" + std::to_string(two_n) + ")");
  d.set_family({Family::Kind::GSp, n});
  return d;
}

std::vector<Vec> cartan_matrix(char type, int r) {
  bool ok = (type == 'A' && r >= 1) || (type == 'B' && r >= 2) || (type == 'C' && r >= 2) ||
            (type == 'D' && r >= 3) || (type == 'E' && r >= 6 && r <= 8) || (type == 'F' && r == 4) ||
            (type == 'G' && r == 2);
  if (!ok) throw Error(ErrorCode::UnsupportedFamily, std::string("no simple type ") + type + std::to_string(r));
  std::vector<Vec> p(r, Vec(r, 0));
  for (int i = 0; i < r; ++i) p[i][i] = 2;
  auto link = [&](int i, int j) { p[i][j] = p[j][i] = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      p[r - 2][r - 1] = -2;  // last simple root short
      break;
    case 'C':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      p[r - 1][r - 2] = -2;  // last simple root long
      break;
    case 'D':
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 3, r - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < r; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      p[1][2] = -2;
      break;
    case 'G':
      link(0, 1);
      p[1][0] = -3;
      break;
  }
  return p;
}

RootDatum simple(char type, int r, Isogeny iso) {
  auto p = cartan_matrix(type, r);
  std::vector<Weight> a;
  std::vector<Coweight> ac;
  for (int j = 0; j < r; ++j) {
    Vec root(r, 0), coroot(r, 0);
    for (int i = 0; i < r; ++i) {
      if (iso == Isogeny::Adjoint) {
        root[i] = (i == j);
        coroot[i] = p[i][j];
      } else {
        root[i] = p[j][i];
        coroot[i] = (i == j);
      }
    }
    a.emplace_back(root);
    ac.emplace_back(coroot);
  }
  std::string label = std::string(1, type) + std::to_string(r) + (iso == Isogeny::Adjoint ? "_adj" : "_sc");
  auto d = RootDatum::build(r, a, ac, label);
  Family f;
  f.kind = Family::Kind::Simple;
  f.type = type;
  f.rank = r;
  f.isogeny = iso;
  d.set_family(f);
  return d;
}

RootDatum dual(const RootDatum& d) {
  std::vector<Weight> a;
  std::vector<Coweight> ac;
  for (int s = 0; s < d.num_simple(); ++s) {
    a.emplace_back(d.simple_coroot(s).coords);
    ac.emplace_back(d.simple_root(s).coords);
  }
  return RootDatum::build(d.rank(), a, ac, "dual(" + d.label() + ")");
}

std::int64_t pairing(const Weight& x, const Coweight& y) { return dot(x.coords, y.coords); }

Weight two_rho(const RootDatum& d) {
  Weight s = Weight::zero(d.rank());
  for (int i : d.positive_indices()) s += d.root(i);
  return s;
}

Coweight two_rho_check(const RootDatum& d) {
  Coweight s = Coweight::zero(d.rank());
  for (int i : d.positive_indices()) s += d.coroot(i);
  return s;
}

HalfInt rho_pair(const RootDatum& d, const Coweight& y) { return HalfInt::from_doubled(pairing(two_rho(d), y)); }

bool is_dominant(const RootDatum& d, const Coweight& y) {
  if (y.size() != static_cast<std::size_t>(d.rank()))
    throw Error(ErrorCode::DimensionMismatch, "coweight length differs from rank");
  for (int s = 0; s < d.num_simple(); ++s)
    if (pairing(d.simple_root(s), y) < 0) return false;
  return true;
}

bool is_central(const RootDatum& d, const Coweight& y) {
  if (y.size() != static_cast<std::size_t>(d.rank()))
    throw Error(ErrorCode::DimensionMismatch, "coweight length differs from rank");
  for (int s = 0; s < d.num_simple(); ++s)
    if (pairing(d.simple_root(s), y) != 0) return false;
  return true;
}

Weight reflect_weight(const RootDatum& d, int root, const Weight& x) {
  return x - d.root(root) * pairing(x, d.coroot(root));
}

Coweight reflect_coweight(const RootDatum& d, int root, const Coweight& y) {
  return y - d.coroot(root) * pairing(d.root(root), y);
}

int root_string_n_abs(const RootDatum& d, int alpha, int beta) {
  const int n = static_cast<int>(d.num_roots());
  if (alpha < 0 || alpha >= n || beta < 0 || beta >= n) throw Error(ErrorCode::NotARoot, "root index out of range");
  if (d.negation(alpha) == beta) throw Error(ErrorCode::BadParameters, "alpha + beta = 0");
  if (!d.root_index(d.root(alpha) + d.root(beta))) return 0;
  int p = 1;
  while (d.root_index(d.root(beta) - d.root(alpha) * p)) ++p;
  return p;
}

KGammaShape gamma_partition(const RootDatum& d, const Coweight& gamma) {
  if (!is_dominant(d, gamma)) throw Error(ErrorCode::NotDominant, format_vec(gamma.coords) + " is not dominant");
  KGammaShape k;
  k.gamma = gamma;
  k.conductor.assign(d.num_roots(), 0);
  for (int i = 0; i < static_cast<int>(d.num_roots()); ++i) {
    auto p = pairing(d.root(i), gamma);
    if (p > 0) {
      k.plus.push_back(i);
    } else if (p == 0) {
      k.zero.push_back(i);
    } else {
      k.minus.push_back(i);
      k.conductor[i] = 1;
    }
  }
  return k;
}

std::vector<Coweight> fundamental_coweights(const RootDatum& d) {
  const int r = d.rank();
  const int m = d.num_simple();
  // Column-reduce the simple-root matrix S (m x r) to [H | 0] with S·U, U unimodular.
  std::vector<Vec> s(m, Vec(r));
  for (int i = 0; i < m; ++i) s[i] = d.simple_root(i).coords;
  std::vector<Vec> u(r, Vec(r, 0));
  for (int i = 0; i < r; ++i) u[i][i] = 1;
  auto col_axpy = [&](int dst, int src, std::int64_t q) {  // col_dst -= q * col_src
    for (int i = 0; i < m; ++i) s[i][dst] -= q * s[i][src];
    for (int i = 0; i < r; ++i) u[i][dst] -= q * u[i][src];
  };
  auto col_swap = [&](int a, int b) {
    for (int i = 0; i < m; ++i) std::swap(s[i][a], s[i][b]);
    for (int i = 0; i < r; ++i) std::swap(u[i][a], u[i][b]);
  };
  for (int row = 0; row < m; ++row) {
    while (true) {
      int piv = -1;
      for (int c = row; c < r; ++c)
        if (s[row][c] != 0 && (piv < 0 || std::abs(s[row][c]) < std::abs(s[row][piv]))) piv = c;
      if (piv < 0) throw Error(ErrorCode::InvalidCartan, "simple roots are linearly dependent");
      bool done = true;
      for (int c = row; c < r; ++c) {
        if (c == piv || s[row][c] == 0) continue;
        col_axpy(c, piv, s[row][c] / s[row][piv]);
        if (s[row][c] != 0) done = false;
      }
      if (done) {
        col_swap(row, piv);
        break;
      }
    }
  }
  std::vector<Coweight> out;
  for (int target = 0; target < m; ++target) {
    std::vector<Rational> y(m);
    for (int i = 0; i < m; ++i) {
      Rational acc = (i == target) ? 1 : 0;
      for (int j = 0; j < i; ++j) acc -= Rational(s[i][j]) * y[j];
      y[i] = acc / s[i][i];
    }
    BigInt k = common_denominator(y);
    Vec g(r, 0);
    for (int i = 0; i < r; ++i) {
      Rational acc = 0;
      for (int j = 0; j < m; ++j) acc += Rational(u[i][j]) * y[j] * Rational(k);
      g[i] = static_cast<std::int64_t>(boost::multiprecision::numerator(acc));
    }
    out.emplace_back(g);
  }
  return out;
}

}  // namespace lfac
