#include <random>

#include "doctest.h"
#include "lfactor/concave.hpp"
#include "lfactor/verify.hpp"

using namespace lfac;

namespace {

RootFunction constant(const RootDatum& d, ExtInt roots, ExtInt zero) {
  return RootFunction{std::vector<ExtInt>(d.num_roots(), roots), zero};
}

int idx(const RootDatum& d, Vec v) { return d.require_root(Weight(std::move(v))); }

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("extended integers") {
  CHECK(ext_add(1, 2) == ExtInt(3));
  CHECK(ext_add(kInfinity, 2) == kInfinity);
  CHECK(ext_le(5, kInfinity));
  CHECK(ext_le(kInfinity, kInfinity));
  CHECK_FALSE(ext_lt(kInfinity, kInfinity));
  CHECK_FALSE(ext_le(kInfinity, 5));
  CHECK(ext_str(kInfinity) == "inf");
}

TEST_CASE("concavity gate") {
  auto d = gsp(4);
  CHECK(is_concave(d, constant(d, 0, 0)));
  CHECK_FALSE(is_concave(d, constant(d, 0, -1)));
  CHECK(is_concave(d, constant(d, kInfinity, 0)));
  for (const auto& g : fundamental_coweights(d)) CHECK(is_concave(d, g_gamma(d, g)));
  RootFunction bad = constant(d, 0, 0);
  bad.on_roots.pop_back();
  CHECK_THROWS_AS(is_concave(d, bad), Error);
  CHECK_THROWS_AS(make_concave(d, constant(d, 0, -1)), Error);
  // a sum of two roots with values 0 cannot exceed 0
  auto f = constant(d, 0, 0);
  f.on_roots[idx(d, {1, 1, 1})] = 1;
  CHECK_FALSE(is_concave(d, f));
}

TEST_CASE("psi") {
  auto d = gsp(4);
  auto g = g_gamma(d, Coweight({1, 0, 0}));
  CHECK(as_set(psi(d, g)) == std::set<int>{idx(d, {0, 1, -1}), idx(d, {0, -1, 1})});
  CHECK(psi(gl(2), g_gamma(gl(2), Coweight({1, 0}))).empty());
  CHECK(psi(d, constant(d, kInfinity, 0)).empty());
  CHECK(psi(d, constant(d, 0, 0)).size() == d.num_roots());
}

TEST_CASE("star") {
  auto d = gsp(4);
  auto g = g_gamma(d, Coweight({1, 0, 0}));
  auto s = star(d, g);
  CHECK(s.at_zero == ExtInt(1));
  for (int i = 0; i < static_cast<int>(d.num_roots()); ++i) {
    bool in_psi = i == idx(d, {0, 1, -1}) || i == idx(d, {0, -1, 1});
    CHECK(s.on_roots[i] == ext_add(g.on_roots[i], in_psi ? 1 : 0));
  }
  auto two = constant(d, 3, 2);
  CHECK(star(d, two) == two);
  auto z = star(d, constant(d, 0, 0));
  CHECK(z == constant(d, 1, 1));
  CHECK(is_concave(d, s));
}

TEST_CASE("pointwise max") {
  auto d = gsp(4);
  auto g = g_gamma(d, Coweight({1, 0, 0}));
  auto f = f_gamma(d, Coweight({1, 0, 0}));
  CHECK(pointwise_max(d, f, f) == f);
  // f exceeds g exactly on the roots pairing negatively with γ̌
  auto m = pointwise_max(d, g, f);
  for (int i = 0; i < static_cast<int>(d.num_roots()); ++i)
    CHECK(m.on_roots[i] == (pairing(d.root(i), Coweight({1, 0, 0})) < 0 ? f.on_roots[i] : g.on_roots[i]));
  CHECK(m.at_zero == g.at_zero);
  auto inf = constant(d, kInfinity, 0);
  CHECK(pointwise_max(d, g, inf) == inf);
}

TEST_CASE("coset hypotheses and index") {
  auto d = gsp(4);
  Coweight e0({1, 0, 0});
  auto h = check_coset_hypotheses(d, f_gamma(d, e0), g_gamma(d, e0));
  CHECK(h.all());
  CHECK(coset_index_exponent(d, f_gamma(d, e0), g_gamma(d, e0)) == 3);

  auto g2 = gl(2);
  Coweight y({1, 0});
  auto swapped = check_coset_hypotheses(g2, g_gamma(g2, y), f_gamma(g2, y));
  CHECK(swapped.zero_values_equal);
  CHECK_FALSE(swapped.less_set_positive);
  CHECK(swapped.nonpositive_witnesses == std::vector<int>{idx(g2, {-1, 1})});
  CHECK_THROWS_AS(coset_index_exponent(g2, g_gamma(g2, y), f_gamma(g2, y)), Error);
  CHECK(coset_index_exponent(g2, f_gamma(g2, y), g_gamma(g2, y)) == 1);

  auto f = f_gamma(d, e0);
  CHECK(check_coset_hypotheses(d, f, f).all());
  CHECK(less_set(d, f, f).empty());
  CHECK(coset_index_exponent(d, f, f) == 0);
}

TEST_CASE("index exponent equals twice the rho pairing") {
  std::vector<RootDatum> data{gl(2), gl(3), gl(4), gsp(4), gsp(6)};
  for (auto [t, r] : std::vector<std::pair<char, int>>{
           {'A', 1}, {'A', 4}, {'B', 4}, {'C', 4}, {'D', 4}, {'F', 4}, {'G', 2}})
    for (auto iso : {Isogeny::Adjoint, Isogeny::SimplyConnected}) data.push_back(simple(t, r, iso));
  for (const auto& d : data)
    for (const auto& g : fundamental_coweights(d)) {
      auto e = coset_index_exponent(d, f_gamma(d, g), g_gamma(d, g));
      CHECK(e == double_coset_degree_exponent(d, g));
      CHECK(e == pairing(two_rho(d), g));
    }
}

TEST_CASE("minimal numbering") {
  auto d = gsp(4);
  int a = idx(d, {1, 2, 0}), b = idx(d, {1, 0, 2}), c = idx(d, {1, 1, 1});
  auto order = minimal_numbering(d, {a, b, c});
  REQUIRE(order.size() == 3);
  CHECK(less_b(d, c, a));
  CHECK_FALSE(less_b(d, a, c));
  // a must come after c
  auto pos = [&](int x) { return std::find(order.begin(), order.end(), x) - order.begin(); };
  CHECK(pos(c) < pos(a));
  CHECK(pos(b) < pos(c));
  CHECK(minimal_numbering(d, {a}) == std::vector<int>{a});
  auto g3 = gl(3);
  int e12 = idx(g3, {1, -1, 0}), e13 = idx(g3, {1, 0, -1});
  CHECK(minimal_numbering(g3, {e13, e12}) == std::vector<int>{e12, e13});
  CHECK_THROWS_AS(minimal_numbering(g3, {idx(g3, {-1, 1, 0})}), Error);
}

TEST_CASE("minimal numbering is a linear extension on all positive subsets") {
  for (const auto& d : small_rank_data()) {
    auto pos = d.positive_indices();
    if (pos.size() > 9) continue;
    for (unsigned mask = 1; mask < (1u << pos.size()); ++mask) {
      std::vector<int> s;
      for (std::size_t i = 0; i < pos.size(); ++i)
        if (mask >> i & 1) s.push_back(pos[i]);
      auto order = minimal_numbering(d, s);
      CHECK(as_set(order) == as_set(s));
      for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) CHECK_FALSE(less_b(d, order[j], order[i]));
    }
  }
}

TEST_CASE("gamma functions") {
  auto d = gl(2);
  int a = idx(d, {1, -1}), na = idx(d, {-1, 1});
  auto g = g_gamma(d, Coweight({1, 0}));
  auto f = f_gamma(d, Coweight({1, 0}));
  CHECK(g.on_roots[a] == ExtInt(0));
  CHECK(g.on_roots[na] == ExtInt(1));
  CHECK(g.at_zero == ExtInt(0));
  CHECK(f.on_roots[a] == ExtInt(-1));
  CHECK(f.on_roots[na] == ExtInt(2));
  CHECK(f.at_zero == ExtInt(0));

  auto s = gsp(4);
  CHECK(f_gamma(s, Coweight({1, 0, 0})).on_roots[idx(s, {1, 2, 0})] == ExtInt(-1));
  CHECK(g_gamma(s, Coweight::zero(3)) == constant(s, 0, 0));
  CHECK(f_gamma(s, Coweight::zero(3)) == constant(s, 0, 0));
  CHECK_THROWS_AS(g_gamma(d, Coweight({0, 1})), Error);
  CHECK_THROWS_AS(f_gamma(d, Coweight({0, 1})), Error);
}

TEST_CASE("double coset degree") {
  CHECK(double_coset_degree_exponent(gl(2), Coweight({1, 0})) == 1);
  CHECK(double_coset_degree_exponent(gsp(4), Coweight({1, 0, 0})) == 3);
  CHECK(double_coset_degree_exponent(gsp(4), Coweight::zero(3)) == 0);
  CHECK_THROWS_AS(double_coset_degree_exponent(gl(2), Coweight({0, 1})), Error);
}

TEST_CASE("enumerated representatives match the index") {
  auto d = gsp(4);
  Coweight e0({1, 0, 0});
  for (int q : {2, 3}) {
    auto reps = enumerate_representatives(d, f_gamma(d, e0), g_gamma(d, e0), q);
    CHECK(reps.size() == static_cast<std::size_t>(q * q * q));
    std::set<std::vector<int>> distinct(reps.begin(), reps.end());
    CHECK(distinct.size() == reps.size());
  }
  auto g = gl(3);
  Coweight y({1, 0, -1});
  auto reps = enumerate_representatives(g, f_gamma(g, y), g_gamma(g, y), 2);
  CHECK(reps.size() == 1u << coset_index_exponent(g, f_gamma(g, y), g_gamma(g, y)));
  CHECK_THROWS_AS(enumerate_representatives(g, f_gamma(g, y), g_gamma(g, y), 5), Error);
}

TEST_CASE("sampled closure properties") {
  std::mt19937_64 rng(11);
  for (const auto& d : small_rank_data()) {
    for (int k = 0; k < 200; ++k) {
      auto f = sample_concave(d, rng);
      auto g = sample_concave(d, rng);
      REQUIRE(is_concave(d, f));
      CHECK(is_concave(d, star(d, f)));
      CHECK(is_concave(d, pointwise_max(d, f, g)));
      if (f.at_zero && *f.at_zero > 0) {
        CHECK(psi(d, f).empty());
        CHECK(star(d, f) == f);
      }
    }
  }
}
