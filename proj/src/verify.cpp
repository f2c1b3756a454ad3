#include "lfactor/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

#include "lfactor/lfactor.hpp"
#include "lfactor/parse.hpp"

namespace lfac {

int thread_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("LFACTOR_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min<long>(v, 256));
  }
  return hw;
}

namespace {

// Collects case counts and keeps the witness with the smallest case index, so the
// reported failure does not depend on scheduling.
class Tally {
 public:
  void pass(std::size_t n = 1) { cases_ += n; }
  void fail(std::size_t order, std::string witness) {
    std::lock_guard lock(mu_);
    ++cases_;
    ++failures_;
    if (!witness_ || order < order_) {
      witness_ = std::move(witness);
      order_ = order;
    }
  }
  void finish(CheckResult& r) const {
    r.passed = failures_ == 0;
    r.detail = r.passed ? std::to_string(cases_.load()) + " cases"
                        : std::to_string(failures_) + " of " + std::to_string(cases_.load()) + " cases failed; first: " +
                              *witness_;
  }

 private:
  std::atomic<std::size_t> cases_{0};
  std::size_t failures_ = 0;
  std::mutex mu_;
  std::optional<std::string> witness_;
  std::size_t order_ = 0;
};

// Runs body(i) for i in [0, n) on up to thread_count() workers.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) body(i);
    });
  for (auto& th : pool) th.join();
}

CheckResult timed(std::string name, const std::function<void(Tally&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  r.name = std::move(name);
  Tally tally;
  try {
    body(tally);
    tally.finish(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Runs one case and converts an exception into a failure witness.
void guarded(Tally& t, std::size_t order, const std::string& label, const std::function<bool(std::string&)>& body) {
  std::string why;
  try {
    if (body(why)) {
      t.pass();
      return;
    }
  } catch (const std::exception& e) {
    why = e.what();
  }
  t.fail(order, label + (why.empty() ? "" : ": " + why));
}

std::vector<RootDatum> identity_data() {
  std::vector<RootDatum> out;
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'C', 2}, {'C', 3}, {'B', 3}, {'G', 2}})
    for (auto iso : {Isogeny::Adjoint, Isogeny::SimplyConnected}) out.push_back(simple(t, r, iso));
  out.push_back(gsp(4));
  return out;
}

std::vector<RootDatum> rank4_presets() {
  std::vector<RootDatum> out;
  for (int n = 1; n <= 4; ++n) out.push_back(gl(n));
  out.push_back(gsp(4));
  out.push_back(gsp(6));
  for (auto [t, lo, hi] : std::vector<std::tuple<char, int, int>>{
           {'A', 1, 4}, {'B', 2, 4}, {'C', 2, 4}, {'D', 3, 4}, {'F', 4, 4}, {'G', 2, 2}})
    for (int r = lo; r <= hi; ++r)
      for (auto iso : {Isogeny::Adjoint, Isogeny::SimplyConnected}) out.push_back(simple(t, r, iso));
  return out;
}

RootDatum datum_of(const Fixture& f) { return parse_group(f.group); }

std::string fixture_label(const Fixture& f) { return f.group + " " + f.rep; }

// Irreducible highest weights used by the Freudenthal property checks.
std::vector<std::pair<RootDatum, Coweight>> weight_fixtures() {
  std::vector<std::pair<RootDatum, Coweight>> out;
  for (const auto& f : theorem_fixtures()) {
    auto d = datum_of(f);
    for (const auto& [hw, m] : named_rep(d, f.rep).summands) out.emplace_back(d, hw);
  }
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 4}, {'B', 4}, {'C', 4}, {'D', 4}, {'F', 4}, {'G', 2}}) {
    for (auto iso : {Isogeny::Adjoint, Isogeny::SimplyConnected}) {
      auto d = simple(t, r, iso);
      for (const auto& g : fundamental_coweights(d)) out.emplace_back(d, g);
    }
  }
  return out;
}

std::string gamma_label(const RootDatum& d, const Coweight& g) { return d.label() + " gamma=" + format_vec(g.coords); }

std::string word_str(const WeylElement& w) {
  std::string s = "w=[";
  for (std::size_t i = 0; i < w.word.size(); ++i) s += (i ? "," : "") + std::to_string(w.word[i]);
  return s + "]";
}

}  // namespace

std::vector<Fixture> theorem_fixtures() {
  std::vector<Fixture> out;
  for (int n = 2; n <= 4; ++n) {
    std::string g = "gl:" + std::to_string(n);
    out.push_back({g, "std"});
    for (int l = 0; l <= n; ++l) out.push_back({g, "wedge:" + std::to_string(l)});
    for (int l = 0; l <= 3; ++l) out.push_back({g, "sym:" + std::to_string(l)});
    out.push_back({g, "adj"});
  }
  for (const char* g : {"gsp:4", "gsp:6"})
    for (const char* r : {"spin", "std"}) out.push_back({g, r});
  out.push_back({"simple:G:2:adj", "hw:0,1"});
  for (const char* g : {"simple:A:2:adj", "simple:A:3:adj", "simple:C:2:adj", "simple:C:3:adj", "simple:B:3:adj"})
    out.push_back({g, "adj"});
  return out;
}

std::vector<RootDatum> small_rank_data() {
  std::vector<RootDatum> out;
  for (auto [t, r] : std::vector<std::pair<char, int>>{
           {'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'C', 2}, {'B', 3}, {'C', 3}, {'G', 2}})
    out.push_back(simple(t, r, Isogeny::Adjoint));
  out.push_back(gl(2));
  out.push_back(gl(3));
  out.push_back(gsp(4));
  return out;
}

std::vector<TriangleCase> triangle_corpus(std::uint64_t seed, int per_element) {
  std::mt19937_64 rng(seed);
  auto data = small_rank_data();
  std::vector<TriangleCase> out;
  for (std::size_t di = 0; di < data.size(); ++di) {
    const auto& d = data[di];
    auto group = enumerate_group(d);
    for (const auto& gamma : fundamental_coweights(d)) {
      for (const auto& w : group) {
        auto split = split_signs(d, gamma, w);
        if (split.minus.empty()) continue;
        for (int k = 0; k < per_element; ++k) {
          TriangleCase c{static_cast<int>(di), gamma, w, {}};
          for (int i : split.minus) {
            auto p = pairing(d.root(i), gamma);
            c.vals[i] = std::uniform_int_distribution<std::int64_t>(-p, 2)(rng);
          }
          for (int i : split.plus) {
            auto p = pairing(d.root(i), gamma);
            c.vals[i] = std::uniform_int_distribution<std::int64_t>(-p, 2)(rng);
          }
          out.push_back(std::move(c));
        }
      }
    }
  }
  return out;
}

CheckResult check_theorem_battery() {
  return timed("theorem: Satake side equals Hecke side on the fixture battery", [](Tally& t) {
    auto fx = theorem_fixtures();
    parallel_for(fx.size(), [&](std::size_t i) {
      guarded(t, i, fixture_label(fx[i]), [&](std::string& why) {
        auto d = datum_of(fx[i]);
        auto rep = verify_theorem(d, named_rep(d, fx[i].rep));
        if (!rep.equal) why = "satake " + rep.lhs.str() + " vs hecke " + rep.rhs.str();
        return rep.equal;
      });
    });
  });
}

CheckResult check_degree_equals_dimension() {
  return timed("theorem: degree equals the sum of Weyl dimensions", [](Tally& t) {
    auto fx = theorem_fixtures();
    parallel_for(fx.size(), [&](std::size_t i) {
      guarded(t, i, fixture_label(fx[i]), [&](std::string& why) {
        auto d = datum_of(fx[i]);
        auto r = named_rep(d, fx[i].rep);
        BigInt dim = 0;
        for (const auto& [hw, m] : r.summands) dim += weyl_dimension(d, hw) * m;
        auto deg = hecke_lfactor(d, r).degree();
        why = "degree " + std::to_string(deg) + ", dimension " + dim.str();
        return BigInt(deg) == dim;
      });
    });
  });
}

CheckResult check_numeric_specialization(int chars_per_fixture, std::uint64_t seed) {
  return timed("theorem: numeric specialization commutes with both sides", [=](Tally& t) {
    auto fx = theorem_fixtures();
    parallel_for(fx.size(), [&](std::size_t i) {
      auto d = datum_of(fx[i]);
      auto r = named_rep(d, fx[i].rep);
      auto sat = satake_lfactor(d, r);
      auto hec = hecke_lfactor(d, r);
      std::mt19937_64 rng(seed + i);
      std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
      for (int k = 0; k < chars_per_fixture; ++k) {
        std::vector<Rational> v;
        for (int c = 0; c < d.rank(); ++c) {
          int p = 0;
          while (p == 0) p = num(rng);
          v.emplace_back(p, den(rng));
        }
        auto chi = UnramifiedCharacter::numeric(v);
        guarded(t, i * 1000 + k, fixture_label(fx[i]) + " character #" + std::to_string(k), [&](std::string&) {
          return specialize(sat, chi) == satake_lfactor(d, r, chi) && specialize(hec, chi) == hecke_lfactor(d, r, chi);
        });
      }
    });
  });
}

CheckResult check_shift_invariants() {
  return timed("theorem: diagonal carries q^<rho,gamma>, shifted factors carry q^0", [](Tally& t) {
    auto fx = theorem_fixtures();
    parallel_for(fx.size(), [&](std::size_t i) {
      guarded(t, i, fixture_label(fx[i]), [&](std::string& why) {
        auto d = datum_of(fx[i]);
        auto r = named_rep(d, fx[i].rep);
        for (const auto& [gamma, m] : rep_dominant_support(d, r)) {
          auto model = hecke_model(d, gamma);
          for (const auto& c : char_poly_factors(model).factors)
            if (c.first.q_exp != model.rho_pair) {
              why = "diagonal entry " + c.first.str() + " at " + format_vec(gamma.coords);
              return false;
            }
        }
        for (const auto& c : hecke_lfactor(d, r).factors)
          if (c.first.q_exp.doubled() != 0) {
            why = "shifted factor " + c.first.str();
            return false;
          }
        return true;
      });
    });
  });
}

CheckResult check_linear_extension() {
  return timed("theorem: model order is a linear extension of the quotient Bruhat order", [](Tally& t) {
    auto fx = theorem_fixtures();
    parallel_for(fx.size(), [&](std::size_t i) {
      guarded(t, i, fixture_label(fx[i]), [&](std::string& why) {
        auto d = datum_of(fx[i]);
        for (const auto& [gamma, m] : rep_dominant_support(d, named_rep(d, fx[i].rep))) {
          auto reps = hecke_model(d, gamma).reps;
          for (std::size_t a = 0; a < reps.size(); ++a)
            for (std::size_t b = a + 1; b < reps.size(); ++b)
              if (bruhat_leq(d, reps[b], reps[a])) {
                why = format_vec(gamma.coords) + " positions " + std::to_string(a) + " < " + std::to_string(b);
                return false;
              }
        }
        return true;
      });
    });
  });
}

CheckResult check_freudenthal_mass() {
  return timed("weights: Freudenthal mass equals Weyl dimension", [](Tally& t) {
    auto wf = weight_fixtures();
    parallel_for(wf.size(), [&](std::size_t i) {
      const auto& [d, hw] = wf[i];
      guarded(t, i, gamma_label(d, hw), [&](std::string& why) {
        auto ws = weight_system(d, hw);
        BigInt mass = 0;
        for (const auto& [w, m] : ws.table) mass += m;
        auto dim = weyl_dimension(d, hw);
        why = "mass " + mass.str() + ", dimension " + dim.str();
        return mass == dim;
      });
    });
  });
}

CheckResult check_multiplicity_invariance() {
  return timed("weights: multiplicities are Weyl invariant", [](Tally& t) {
    auto wf = weight_fixtures();
    parallel_for(wf.size(), [&](std::size_t i) {
      const auto& [d, hw] = wf[i];
      guarded(t, i, gamma_label(d, hw), [&](std::string& why) {
        auto ws = weight_system(d, hw);
        for (const auto& [w, m] : ws.table)
          for (int s : d.simple_indices()) {
            auto it = ws.table.find(reflect_coweight(d, s, w));
            if (it == ws.table.end() || it->second != m) {
              why = "weight " + format_vec(w.coords) + " under simple reflection " + std::to_string(s);
              return false;
            }
          }
        return true;
      });
    });
  });
}

CheckResult check_root_identity() {
  return timed("triangle: root identity for all w and fundamental coweights", [](Tally& t) {
    auto data = identity_data();
    parallel_for(data.size(), [&](std::size_t i) {
      const auto& d = data[i];
      auto group = enumerate_group(d);
      std::size_t k = 0;
      for (const auto& gamma : fundamental_coweights(d))
        for (const auto& w : group) {
          auto order = i * 1000000 + k++;
          guarded(t, order, gamma_label(d, gamma) + " " + word_str(w), [&](std::string& why) {
            auto r = root_identity(d, gamma, w);
            why = r.lhs.str() + " vs " + r.rhs.str();
            return r.equal;
          });
        }
    });
  });
}

CheckResult check_index_consistency() {
  return timed("concave: coset index equals double coset degree equals 2<rho,gamma>", [](Tally& t) {
    auto data = rank4_presets();
    parallel_for(data.size(), [&](std::size_t i) {
      const auto& d = data[i];
      std::size_t k = 0;
      for (const auto& gamma : fundamental_coweights(d))
        guarded(t, i * 100 + k++, gamma_label(d, gamma), [&](std::string& why) {
          auto a = coset_index_exponent(d, f_gamma(d, gamma), g_gamma(d, gamma));
          auto b = double_coset_degree_exponent(d, gamma);
          auto c = pairing(two_rho(d), gamma);
          why = std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c);
          return a == b && b == c;
        });
    });
  });
}

CheckResult check_concave_closure(int samples, std::uint64_t seed) {
  return timed("concave: star and pointwise max stay concave on random samples", [=](Tally& t) {
    auto data = small_rank_data();
    parallel_for(data.size(), [&](std::size_t i) {
      const auto& d = data[i];
      std::mt19937_64 rng(seed + i);
      for (int k = 0; k < samples; ++k) {
        auto f = sample_concave(d, rng);
        auto g = sample_concave(d, rng);
        guarded(t, i * 100000 + k, d.label() + " sample " + std::to_string(k), [&](std::string&) {
          return is_concave(d, f) && is_concave(d, star(d, f)) && is_concave(d, pointwise_max(d, f, g));
        });
      }
    });
  });
}

CheckResult check_minimal_numbering() {
  return timed("concave: minimal numbering over all subsets of positive roots", [](Tally& t) {
    auto data = small_rank_data();
    parallel_for(data.size(), [&](std::size_t i) {
      const auto& d = data[i];
      auto pos = d.positive_indices();
      for (std::size_t mask = 1; mask < (std::size_t{1} << pos.size()); ++mask) {
        std::vector<int> s;
        for (std::size_t b = 0; b < pos.size(); ++b)
          if (mask >> b & 1) s.push_back(pos[b]);
        guarded(t, i * 100000 + mask, d.label() + " subset mask " + std::to_string(mask), [&](std::string&) {
          auto out = minimal_numbering(d, s);
          auto sorted = out;
          std::sort(sorted.begin(), sorted.end());
          if (sorted != s) return false;
          for (std::size_t a = 0; a < out.size(); ++a)
            for (std::size_t b = a + 1; b < out.size(); ++b)
              if (less_b(d, out[b], out[a])) return false;
          return true;
        });
      }
    });
  });
}

CheckResult check_psi_empty_when_positive(int samples, std::uint64_t seed) {
  return timed("concave: psi is empty whenever f(0) > 0", [=](Tally& t) {
    auto data = small_rank_data();
    parallel_for(data.size(), [&](std::size_t i) {
      const auto& d = data[i];
      std::mt19937_64 rng(seed + i);
      for (int k = 0; k < samples; ++k) {
        auto f = sample_concave(d, rng);
        if (!f.at_zero || *f.at_zero <= 0) continue;
        guarded(t, i * 100000 + k, d.label() + " sample " + std::to_string(k),
                [&](std::string&) { return psi(d, f).empty(); });
      }
    });
  });
}

namespace {

using DimM0 = std::vector<std::pair<std::int64_t, std::int64_t>>;

std::int64_t binom(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

DimM0 expected_table1(char type, int r) {
  DimM0 e;
  switch (type) {
    case 'A':
      for (int k = 1; k <= r; ++k) e.emplace_back(binom(r + 1, k), 0);
      e.emplace_back((r + 1) * (r + 1) - 1, r);
      break;
    case 'B':
      e = {{2 * r, 0}, {r * (2 * r - 1) - 1, r - 1}};
      break;
    case 'C':
      e = {{std::int64_t{1} << r, 0}, {2 * r + 1, 1}};
      break;
    case 'D':
      e = {{2 * r, 0}, {std::int64_t{1} << (r - 1), 0}, {std::int64_t{1} << (r - 1), 0}, {r * (2 * r - 1), r}};
      break;
    case 'E':
      if (r == 6) e = {{27, 0}, {27, 0}, {78, 6}};
      if (r == 7) e = {{56, 0}, {133, 7}};
      if (r == 8) e = {{248, 8}};
      break;
    case 'F':
      e = {{26, 2}};
      break;
    case 'G':
      e = {{7, 1}};
      break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

std::string dim_m0_str(const DimM0& v) {
  std::string s;
  for (const auto& [d, m] : v) s += (s.empty() ? "" : " ") + std::to_string(d) + ":" + std::to_string(m);
  return "{" + s + "}";
}

}  // namespace

CheckResult check_table1() {
  return timed("table1: quasi-minuscule dimensions and m0 column", [](Tally& t) {
    std::vector<std::pair<char, int>> types;
    for (int r = 1; r <= 5; ++r) types.emplace_back('A', r);
    for (int r = 2; r <= 4; ++r) types.emplace_back('B', r);
    for (int r = 2; r <= 4; ++r) types.emplace_back('C', r);
    for (int r = 3; r <= 5; ++r) types.emplace_back('D', r);
    for (int r = 6; r <= 8; ++r) types.emplace_back('E', r);
    types.emplace_back('F', 4);
    types.emplace_back('G', 2);
    parallel_for(types.size(), [&](std::size_t i) {
      auto [type, r] = types[i];
      guarded(t, i, std::string(1, type) + std::to_string(r), [&](std::string& why) {
        DimM0 got;
        for (const auto& row : table1_rows(type, r))
          got.emplace_back(static_cast<std::int64_t>(row.dimension), row.m0);
        std::sort(got.begin(), got.end());
        auto want = expected_table1(type, r);
        why = "got " + dim_m0_str(got) + ", expected " + dim_m0_str(want);
        return got == want;
      });
    });
  });
}

CheckResult check_separator_exhaustive() {
  return timed("triangle: separating coweight over all nonempty subsets of positive roots", [](Tally& t) {
    std::vector<RootDatum> data;
    for (auto [ty, r] : std::vector<std::pair<char, int>>{{'C', 2}, {'G', 2}, {'A', 3}, {'B', 3}, {'C', 3}})
      data.push_back(simple(ty, r, Isogeny::Adjoint));
    parallel_for(data.size(), [&](std::size_t i) {
      const auto& d = data[i];
      auto pos = d.positive_indices();
      for (std::size_t mask = 1; mask < (std::size_t{1} << pos.size()); ++mask) {
        std::vector<int> a;
        for (std::size_t b = 0; b < pos.size(); ++b)
          if (mask >> b & 1) a.push_back(pos[b]);
        guarded(t, i * 100000 + mask, d.label() + " subset mask " + std::to_string(mask), [&](std::string&) {
          auto a_bar = positive_span_within(d, a, pos);
          auto sep = separating_coweight(d, a, a_bar);
          return std::find(a.begin(), a.end(), sep.alpha0) != a.end() && separates(d, a_bar, sep.alpha0, sep.delta);
        });
      }
    });
  });
}

CheckResult check_triangle_corpus() {
  return timed("triangle: f1, f2, f0 concavity and bounds on the fuzz corpus", [](Tally& t) {
    auto data = small_rank_data();
    auto corpus = triangle_corpus();
    parallel_for(corpus.size(), [&](std::size_t i) {
      const auto& c = corpus[i];
      const auto& d = data[c.datum];
      guarded(t, i, gamma_label(d, c.gamma) + " " + word_str(c.w), [&](std::string& why) {
        auto split = split_signs(d, c.gamma, c.w);
        auto s = s_set(d, c.gamma, c.w, c.vals);
        bool all_nonneg = std::all_of(split.minus.begin(), split.minus.end(), [&](int x) { return c.vals.at(x) >= 0; });
        if (s.empty() != all_nonneg) {
          why = "S emptiness";
          return false;
        }
        if (s.empty()) return true;
        auto tf = build_f1_f2(d, c.gamma, c.w, c.vals);
        const auto& sets = tf.sets;
        const int a0 = tf.separator.alpha0;
        if (!(sets.lambda >= -1 && sets.lambda < 0)) {
          why = "lambda out of range";
          return false;
        }
        for (int x : sets.a)
          if (std::find(sets.a_bar.begin(), sets.a_bar.end(), x) == sets.a_bar.end()) {
            why = "A not in closure";
            return false;
          }
        for (int x : sets.a_bar)
          if (std::find(split.minus.begin(), split.minus.end(), x) == split.minus.end()) {
            why = "closure leaves the minus set";
            return false;
          }
        if (!separates(d, sets.a_bar, a0, tf.separator.delta)) {
          why = "separator";
          return false;
        }
        if (!is_concave(d, tf.f1) || !is_concave(d, tf.f2)) {
          why = "f1/f2 concavity";
          return false;
        }
        auto f0 = build_f0(d, c.gamma, c.vals, tf.f1, a0);
        if (!is_concave(d, f0) || f0.at_zero != ExtInt(1)) {
          why = "f0 concavity";
          return false;
        }
        auto in_abar = [&](int x) { return std::find(sets.a_bar.begin(), sets.a_bar.end(), x) != sets.a_bar.end(); };
        for (int x = 0; x < static_cast<int>(d.num_roots()); ++x) {
          Rational low = sets.lambda * pairing(d.root(x), c.gamma);
          auto ge = [&](const ExtInt& v) { return !v || Rational(*v) >= low; };
          auto eq = [&](const ExtInt& v) { return v && Rational(*v) == low; };
          bool diff_ok = x == a0 ? tf.f1.on_roots[x] == ext_add(tf.f2.on_roots[x], 1) : tf.f1.on_roots[x] == tf.f2.on_roots[x];
          if (!diff_ok || !ge(tf.f1.on_roots[x]) || !ge(tf.f2.on_roots[x]) ||
              eq(tf.f1.on_roots[x]) != (in_abar(x) && x != a0) || eq(tf.f2.on_roots[x]) != in_abar(x)) {
            why = "f1/f2 table at " + format_vec(d.root(x).coords);
            return false;
          }
          if (!ext_le(f0.on_roots[x], tf.f1.on_roots[x]) || !ge(f0.on_roots[x])) {
            why = "f1 >= f0 >= lambda<.,gamma> at " + format_vec(d.root(x).coords);
            return false;
          }
        }
        auto step = triangle_step(d, c.gamma, c.w, c.vals);
        if (!step.coset_strictly_lower) {
          why = "lower coset";
          return false;
        }
        return true;
      });
    });
  });
}

CheckResult check_descent_lemma() {
  return timed("weyl: w.alpha > 0 iff w < w s_alpha", [](Tally& t) {
    std::vector<RootDatum> data;
    for (auto [ty, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'C', 2}, {'G', 2}, {'A', 3}, {'B', 3}, {'C', 3}})
      data.push_back(simple(ty, r, Isogeny::Adjoint));
    parallel_for(data.size(), [&](std::size_t i) {
      const auto& d = data[i];
      auto group = enumerate_group(d);
      std::size_t k = 0;
      for (const auto& w : group)
        for (int a : d.positive_indices()) {
          guarded(t, i * 1000000 + k++, d.label() + " " + word_str(w) + " root " + std::to_string(a), [&](std::string&) {
            auto ws = multiply(d, w, reflection(d, a));
            bool lower = bruhat_leq(d, w, ws) && !(w == ws);
            return d.is_positive(apply_root(d, w, a)) == lower;
          });
        }
    });
  });
}

CheckResult check_quotient_order_preserved() {
  return timed("weyl: Bruhat order descends to minimal coset representatives", [](Tally& t) {
    std::vector<RootDatum> data;
    for (auto [ty, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'C', 2}, {'G', 2}, {'A', 3}, {'B', 3}, {'C', 3}})
      data.push_back(simple(ty, r, Isogeny::Adjoint));
    struct Job {
      std::size_t datum;
      Coweight gamma;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < data.size(); ++i)
      for (const auto& g : fundamental_coweights(data[i])) jobs.push_back({i, g});
    parallel_for(jobs.size(), [&](std::size_t j) {
      const auto& d = data[jobs[j].datum];
      const auto& gamma = jobs[j].gamma;
      auto group = enumerate_group(d);
      auto reps = stabilizer_coset_reps(d, gamma);
      std::size_t k = 0;
      for (const auto& w : group)
        for (const auto& v : group) {
          if (!bruhat_leq(d, w, v)) continue;
          guarded(t, j * 10000000 + k++, gamma_label(d, gamma) + " " + word_str(w) + " <= " + word_str(v),
                  [&](std::string&) { return bruhat_leq(d, coset_rep_of(reps, w, gamma), coset_rep_of(reps, v, gamma)); });
        }
    });
  });
}

std::vector<std::string> suite_names() { return {"theorem", "root_identity", "concave", "table1", "triangle", "all"}; }

std::vector<CheckResult> run_suite(const std::string& suite) {
  std::vector<CheckResult> out;
  bool all = suite == "all";
  bool known = false;
  if (all || suite == "theorem") {
    known = true;
    out.push_back(check_theorem_battery());
    out.push_back(check_degree_equals_dimension());
    out.push_back(check_numeric_specialization());
    out.push_back(check_shift_invariants());
    out.push_back(check_linear_extension());
    out.push_back(check_freudenthal_mass());
    out.push_back(check_multiplicity_invariance());
  }
  if (all || suite == "root_identity") {
    known = true;
    out.push_back(check_root_identity());
  }
  if (all || suite == "concave") {
    known = true;
    out.push_back(check_index_consistency());
    out.push_back(check_concave_closure());
    out.push_back(check_minimal_numbering());
    out.push_back(check_psi_empty_when_positive());
  }
  if (all || suite == "table1") {
    known = true;
    out.push_back(check_table1());
  }
  if (all || suite == "triangle") {
    known = true;
    out.push_back(check_separator_exhaustive());
    out.push_back(check_triangle_corpus());
    out.push_back(check_descent_lemma());
    out.push_back(check_quotient_order_preserved());
  }
  if (!known) throw Error(ErrorCode::BadParameters, "unknown suite '" + suite + "'");
  return out;
}

}  // namespace lfac
