#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lfactor/numeric.hpp"

namespace lfac {

enum class Isogeny { Adjoint, SimplyConnected };

// Which preset a datum came from; Custom for data built from explicit simples.
struct Family {
  enum class Kind { Custom, GL, GSp, Simple };
  Kind kind = Kind::Custom;
  int n = 0;          // gl(n); gsp(2n) stores n
  char type = 0;      // simple type letter
  int rank = 0;       // simple rank
  Isogeny isogeny = Isogeny::Adjoint;
};

class RootDatum {
 public:
  static constexpr int kMaxRoots = 10000;

  static RootDatum build(int rank, const std::vector<Weight>& simple_roots,
                         const std::vector<Coweight>& simple_coroots, std::string label);

  int rank() const { return rank_; }
  const std::string& label() const { return label_; }
  const Family& family() const { return family_; }
  void set_family(Family f) { family_ = f; }

  std::size_t num_roots() const { return roots_.size(); }
  const std::vector<Weight>& roots() const { return roots_; }
  const std::vector<Coweight>& coroots() const { return coroots_; }
  const Weight& root(int i) const { return roots_[i]; }
  const Coweight& coroot(int i) const { return coroots_[i]; }

  int num_simple() const { return static_cast<int>(simple_.size()); }
  const std::vector<int>& simple_indices() const { return simple_; }
  const Weight& simple_root(int s) const { return roots_[simple_[s]]; }
  const Coweight& simple_coroot(int s) const { return coroots_[simple_[s]]; }

  bool is_positive(int i) const { return positive_[i]; }
  std::vector<int> positive_indices() const;
  int negation(int i) const { return negation_[i]; }
  // Coefficients of roots[i] in the simple roots, and of coroots[i] in the simple coroots.
  const Vec& root_coefficients(int i) const { return root_coeff_[i]; }
  const Vec& coroot_coefficients(int i) const { return coroot_coeff_[i]; }
  std::int64_t height(int i) const;

  std::optional<int> root_index(const Weight& x) const;
  std::optional<int> coroot_index(const Coweight& y) const;
  int require_root(const Weight& x) const;

  // ⟨α_i, α_j^∨⟩ for simple i, j.
  std::int64_t cartan(int i, int j) const;

  // Structural equality: rank, roots, coroots and simple base. Labels are ignored.
  bool operator==(const RootDatum& o) const {
    return rank_ == o.rank_ && roots_ == o.roots_ && coroots_ == o.coroots_ && simple_ == o.simple_;
  }

 private:
  int rank_ = 0;
  std::string label_;
  Family family_;
  std::vector<Weight> roots_;
  std::vector<Coweight> coroots_;
  std::vector<int> simple_;
  std::vector<bool> positive_;
  std::vector<int> negation_;
  std::vector<Vec> root_coeff_;
  std::vector<Vec> coroot_coeff_;
  std::vector<int> coroot_order_;  // coroot indices sorted by coordinates
};

RootDatum gl(int n);
RootDatum gsp(int two_n);
RootDatum simple(char type, int rank, Isogeny isogeny);
// ⟨α_i, α_j^∨⟩ table of a simple type in Bourbaki numbering.
std::vector<Vec> cartan_matrix(char type, int rank);

RootDatum dual(const RootDatum& d);

std::int64_t pairing(const Weight& x, const Coweight& y);
Weight two_rho(const RootDatum& d);
// Σ_{α>0} α^∨, the doubled half-sum of positive coroots.
Coweight two_rho_check(const RootDatum& d);
HalfInt rho_pair(const RootDatum& d, const Coweight& y);
bool is_dominant(const RootDatum& d, const Coweight& y);
// W-fixed: pairs to zero with every root.
bool is_central(const RootDatum& d, const Coweight& y);

// Reflections s_α on both lattices.
Weight reflect_weight(const RootDatum& d, int root, const Weight& x);
Coweight reflect_coweight(const RootDatum& d, int root, const Coweight& y);

int root_string_n_abs(const RootDatum& d, int alpha, int beta);

struct KGammaShape {
  Coweight gamma;
  std::vector<int> plus, zero, minus;
  std::vector<int> conductor;  // per root index, 1 on minus
};
KGammaShape gamma_partition(const RootDatum& d, const Coweight& gamma);

// One integral dominant coweight per simple root, pairing to k·δ_ij with k ≥ 1 minimal.
std::vector<Coweight> fundamental_coweights(const RootDatum& d);

}  // namespace lfac
