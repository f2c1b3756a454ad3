#include "lfactor/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lfac {

namespace {

Vec matmul(const Vec& a, const Vec& b, int r) {
  Vec c(static_cast<std::size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      auto aik = a[i * r + k];
      if (aik == 0) continue;
      for (int j = 0; j < r; ++j) c[i * r + j] += aik * b[k * r + j];
    }
  return c;
}

Vec matvec(const Vec& a, const Vec& x, int r) {
  if (x.size() != static_cast<std::size_t>(r)) throw Error(ErrorCode::DimensionMismatch, "vector length differs from rank");
  Vec y(r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) y[i] += a[i * r + j] * x[j];
  return y;
}

Vec identity_matrix(int r) {
  Vec m(static_cast<std::size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i) m[i * r + i] = 1;
  return m;
}

Vec simple_cow_matrix(const RootDatum& d, int s) {
  const int r = d.rank();
  Vec m = identity_matrix(r);
  const auto& a = d.simple_root(s);
  const auto& ac = d.simple_coroot(s);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m[i * r + j] -= ac[i] * a[j];
  return m;
}

Vec simple_wt_matrix(const RootDatum& d, int s) {
  const int r = d.rank();
  Vec m = identity_matrix(r);
  const auto& a = d.simple_root(s);
  const auto& ac = d.simple_coroot(s);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m[i * r + j] -= a[i] * ac[j];
  return m;
}

bool coroot_is_negative(const RootDatum& d, const Coweight& y) {
  auto idx = d.coroot_index(y);
  if (!idx) throw Error(ErrorCode::NotARoot, "Weyl element does not permute coroots");
  return !d.is_positive(*idx);
}

}  // namespace

WeylElement identity_element(const RootDatum& d) {
  WeylElement e;
  e.rank = d.rank();
  e.cow = identity_matrix(d.rank());
  e.wt = e.cow;
  return e;
}

std::vector<WeylElement> simple_reflections(const RootDatum& d) {
  std::vector<WeylElement> out;
  for (int s = 0; s < d.num_simple(); ++s) {
    WeylElement w;
    w.rank = d.rank();
    w.cow = simple_cow_matrix(d, s);
    w.wt = simple_wt_matrix(d, s);
    w.word = {s};
    out.push_back(std::move(w));
  }
  return out;
}

Coweight apply(const WeylElement& w, const Coweight& y) { return Coweight(matvec(w.cow, y.coords, w.rank)); }

Weight apply_weight(const WeylElement& w, const Weight& x) { return Weight(matvec(w.wt, x.coords, w.rank)); }

int apply_root(const RootDatum& d, const WeylElement& w, int root) {
  auto idx = d.coroot_index(apply(w, d.coroot(root)));
  if (!idx) throw Error(ErrorCode::NotARoot, "Weyl element does not permute coroots");
  return *idx;
}

bool has_right_descent(const RootDatum& d, const WeylElement& w, int s) {
  return coroot_is_negative(d, apply(w, d.simple_coroot(s)));
}

WeylElement from_word(const RootDatum& d, const std::vector<int>& word) {
  const int r = d.rank();
  WeylElement w = identity_element(d);
  for (int s : word) {
    if (s < 0 || s >= d.num_simple()) throw Error(ErrorCode::BadParameters, "simple index out of range");
    w.cow = matmul(w.cow, simple_cow_matrix(d, s), r);
    w.wt = matmul(w.wt, simple_wt_matrix(d, s), r);
  }
  return from_matrix(d, w.cow);
}

WeylElement from_matrix(const RootDatum& d, const Vec& cow) {
  const int r = d.rank();
  // Peel right descents (smallest index first) down to the identity.
  WeylElement cur;
  cur.rank = r;
  cur.cow = cow;
  std::vector<int> reversed;
  while (true) {
    int found = -1;
    for (int s = 0; s < d.num_simple(); ++s)
      if (has_right_descent(d, cur, s)) { found = s; break; }
    if (found < 0) break;
    cur.cow = matmul(cur.cow, simple_cow_matrix(d, found), r);
    reversed.push_back(found);
    if (reversed.size() > d.num_roots()) throw Error(ErrorCode::BadParameters, "matrix is not a Weyl group element");
  }
  if (cur.cow != identity_matrix(r)) throw Error(ErrorCode::BadParameters, "matrix is not a Weyl group element");
  WeylElement w;
  w.rank = r;
  w.cow = cow;
  w.word.assign(reversed.rbegin(), reversed.rend());
  w.wt = identity_matrix(r);
  for (int s : w.word) w.wt = matmul(w.wt, simple_wt_matrix(d, s), r);
  return w;
}

WeylElement multiply(const RootDatum& d, const WeylElement& w, const WeylElement& v) {
  return from_matrix(d, matmul(w.cow, v.cow, d.rank()));
}

WeylElement inverse(const RootDatum& d, const WeylElement& w) {
  std::vector<int> word(w.word.rbegin(), w.word.rend());
  return from_word(d, word);
}

WeylElement reflection(const RootDatum& d, int root) {
  const int r = d.rank();
  Vec m = identity_matrix(r);
  const auto& a = d.root(root);
  const auto& ac = d.coroot(root);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m[i * r + j] -= ac[i] * a[j];
  return from_matrix(d, m);
}

int length(const RootDatum& d, const WeylElement& w) {
  int n = 0;
  for (int i : d.positive_indices())
    if (coroot_is_negative(d, apply(w, d.coroot(i)))) ++n;
  return n;
}

bool bruhat_leq(const RootDatum& d, const WeylElement& w0, const WeylElement& v0) {
  // Lifting property: if v s < v, then w <= v iff (w s <= v s when w s < w, else w <= v s).
  const int r = d.rank();
  Vec w = w0.cow, v = v0.cow;
  int lw = length(d, w0), lv = length(d, v0);
  const Vec id = identity_matrix(r);
  while (true) {
    if (lw > lv) return false;
    if (w == v) return true;
    if (lv == 0) return w == id;
    WeylElement ve{r, v, {}, {}}, we{r, w, {}, {}};
    int s = -1;
    for (int t = 0; t < d.num_simple(); ++t)
      if (has_right_descent(d, ve, t)) { s = t; break; }
    Vec ms = simple_cow_matrix(d, s);
    v = matmul(v, ms, r);
    --lv;
    if (has_right_descent(d, we, s)) {
      w = matmul(w, ms, r);
      --lw;
    }
  }
}

std::vector<WeylElement> enumerate_group(const RootDatum& d, std::size_t guard) {
  const int r = d.rank();
  auto gens = simple_reflections(d);
  std::map<Vec, std::size_t> seen;
  std::vector<WeylElement> all{identity_element(d)};
  seen.emplace(all[0].cow, 0);
  for (std::size_t head = 0; head < all.size(); ++head) {
    for (int s = 0; s < d.num_simple(); ++s) {
      WeylElement next;
      next.rank = r;
      next.cow = matmul(all[head].cow, gens[s].cow, r);
      if (seen.count(next.cow)) continue;
      if (all.size() >= guard)
        throw Error(ErrorCode::GroupTooLarge, "Weyl group exceeds guard of " + std::to_string(guard) + " elements");
      next.wt = matmul(all[head].wt, gens[s].wt, r);
      next.word = all[head].word;
      next.word.push_back(s);
      seen.emplace(next.cow, all.size());
      all.push_back(std::move(next));
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  return all;
}

WeylElement longest_element(const RootDatum& d) {
  // Multiply by simple reflections while length increases.
  WeylElement w = identity_element(d);
  auto gens = simple_reflections(d);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int s = 0; s < d.num_simple(); ++s) {
      if (!has_right_descent(d, w, s)) {
        w.cow = matmul(w.cow, gens[s].cow, d.rank());
        grew = true;
      }
    }
  }
  return from_matrix(d, w.cow);
}

void sort_canonical(std::vector<Coweight>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

std::vector<Coweight> orbit(const RootDatum& d, const Coweight& y, std::size_t guard) {
  if (y.size() != static_cast<std::size_t>(d.rank()))
    throw Error(ErrorCode::DimensionMismatch, "coweight length differs from rank");
  std::set<Coweight> seen{y};
  std::vector<Coweight> queue{y};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int s = 0; s < d.num_simple(); ++s) {
      Coweight z = reflect_coweight(d, d.simple_indices()[s], queue[head]);
      if (seen.insert(z).second) {
        if (queue.size() >= guard)
          throw Error(ErrorCode::OrbitTooLarge, "orbit exceeds guard of " + std::to_string(guard));
        queue.push_back(z);
      }
    }
  }
  sort_canonical(queue);
  return queue;
}

Coweight dominant_representative(const RootDatum& d, const Coweight& y) {
  Coweight z = y;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < d.num_simple(); ++s) {
      auto p = pairing(d.simple_root(s), z);
      if (p < 0) {
        z -= d.simple_coroot(s) * p;
        changed = true;
      }
    }
  }
  return z;
}

std::vector<WeylElement> stabilizer_coset_reps(const RootDatum& d, const Coweight& gamma, std::size_t guard) {
  if (!is_dominant(d, gamma)) throw Error(ErrorCode::NotDominant, format_vec(gamma.coords) + " is not dominant");
  const int r = d.rank();
  auto gens = simple_reflections(d);
  std::map<Coweight, std::size_t> seen;
  std::vector<std::pair<Coweight, WeylElement>> queue;
  queue.emplace_back(gamma, identity_element(d));
  seen.emplace(gamma, 0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int s = 0; s < d.num_simple(); ++s) {
      const Coweight& mu = queue[head].first;
      auto p = pairing(d.simple_root(s), mu);
      if (p <= 0) continue;
      Coweight nu = mu - d.simple_coroot(s) * p;
      if (seen.count(nu)) continue;
      if (queue.size() >= guard)
        throw Error(ErrorCode::GroupTooLarge, "coset count exceeds guard of " + std::to_string(guard));
      const WeylElement& w = queue[head].second;
      WeylElement sw;
      sw.rank = r;
      sw.cow = matmul(gens[s].cow, w.cow, r);
      sw.wt = matmul(gens[s].wt, w.wt, r);
      sw.word.push_back(s);
      sw.word.insert(sw.word.end(), w.word.begin(), w.word.end());
      seen.emplace(nu, queue.size());
      queue.emplace_back(nu, std::move(sw));
    }
  }
  std::vector<WeylElement> reps;
  reps.reserve(queue.size());
  for (auto& [mu, w] : queue) reps.push_back(std::move(w));
  std::stable_sort(reps.begin(), reps.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  return reps;
}

std::vector<WeylElement> quotient_linear_extension(const RootDatum& d, const Coweight& gamma, std::size_t guard) {
  // Sorted by length, which already refines the Bruhat order.
  return stabilizer_coset_reps(d, gamma, guard);
}

const WeylElement& coset_rep_of(const std::vector<WeylElement>& reps, const WeylElement& w, const Coweight& gamma) {
  Coweight target = apply(w, gamma);
  for (const auto& r : reps)
    if (apply(r, gamma) == target) return r;
  throw Error(ErrorCode::BadParameters, "no representative for coset");
}

}  // namespace lfac
