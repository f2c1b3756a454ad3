#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lfactor/triangle.hpp"

namespace lfac {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // case count on success, first witness on failure
  double seconds = 0;
};

// LFACTOR_THREADS caps the worker count; unset or invalid means hardware concurrency.
int thread_count();

struct Fixture {
  std::string group;
  std::string rep;
};
// gl(2..4) × {std, wedge, sym ≤ 3, adj}, gsp(4), gsp(6) × {spin, std}, G₂ 7-dim,
// adjoint of A₂, A₃, C₂, C₃, B₃.
std::vector<Fixture> theorem_fixtures();

// Rank ≤ 3 presets used by the exhaustive and sampled sweeps.
std::vector<RootDatum> small_rank_data();

struct TriangleCase {
  int datum = 0;  // index into small_rank_data()
  Coweight gamma;
  WeylElement w;
  Valuations vals;
};
// Seeded corpus over all w and fundamental γ̌; vals uniform in [−⟨α,γ̌⟩, 2].
std::vector<TriangleCase> triangle_corpus(std::uint64_t seed = 20240611, int per_element = 3);

CheckResult check_theorem_battery();
CheckResult check_degree_equals_dimension();
CheckResult check_numeric_specialization(int chars_per_fixture = 100, std::uint64_t seed = 7);
CheckResult check_shift_invariants();
CheckResult check_linear_extension();
CheckResult check_freudenthal_mass();
CheckResult check_multiplicity_invariance();

CheckResult check_root_identity();
CheckResult check_index_consistency();

CheckResult check_concave_closure(int samples = 500, std::uint64_t seed = 11);
CheckResult check_minimal_numbering();
CheckResult check_psi_empty_when_positive(int samples = 500, std::uint64_t seed = 13);

CheckResult check_table1();

CheckResult check_separator_exhaustive();
CheckResult check_triangle_corpus();
// wα ∈ Φ⁺ ⇔ w < w·s_α, for all w and α ∈ Φ⁺.
CheckResult check_descent_lemma();
// w ≤ v implies the minimal coset representatives compare the same way.
CheckResult check_quotient_order_preserved();

std::vector<std::string> suite_names();
// Throws BadParameters on an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace lfac
