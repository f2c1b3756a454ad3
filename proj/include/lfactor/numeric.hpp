#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lfactor/errors.hpp"

namespace lfac {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Vec = std::vector<std::int64_t>;

// A half-integer stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_doubled(std::int64_t d) { return HalfInt(d); }
  static constexpr HalfInt from_int(std::int64_t n) { return HalfInt(2 * n); }

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(doubled_ + o.doubled_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(doubled_ - o.doubled_); }
  constexpr HalfInt operator-() const { return HalfInt(-doubled_); }
  constexpr HalfInt operator*(std::int64_t k) const { return HalfInt(doubled_ * k); }
  HalfInt& operator+=(HalfInt o) { doubled_ += o.doubled_; return *this; }

  constexpr auto operator<=>(const HalfInt&) const = default;

  std::string str() const;

 private:
  constexpr explicit HalfInt(std::int64_t d) : doubled_(d) {}
  std::int64_t doubled_ = 0;
};

std::ostream& operator<<(std::ostream& os, HalfInt h);

// Integer vectors tagged by the lattice they live in.
template <class Tag>
struct LatticeVector {
  Vec coords;

  LatticeVector() = default;
  explicit LatticeVector(Vec c) : coords(std::move(c)) {}
  LatticeVector(std::initializer_list<std::int64_t> c) : coords(c) {}
  static LatticeVector zero(std::size_t n) { return LatticeVector(Vec(n, 0)); }

  std::size_t size() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  std::int64_t& operator[](std::size_t i) { return coords[i]; }

  bool is_zero() const {
    for (auto c : coords)
      if (c != 0) return false;
    return true;
  }

  LatticeVector operator+(const LatticeVector& o) const {
    check(o);
    LatticeVector r(coords);
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
  }
  LatticeVector operator-(const LatticeVector& o) const {
    check(o);
    LatticeVector r(coords);
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
  }
  LatticeVector operator-() const {
    LatticeVector r(coords);
    for (auto& c : r.coords) c = -c;
    return r;
  }
  LatticeVector operator*(std::int64_t k) const {
    LatticeVector r(coords);
    for (auto& c : r.coords) c *= k;
    return r;
  }
  LatticeVector& operator+=(const LatticeVector& o) { return *this = *this + o; }
  LatticeVector& operator-=(const LatticeVector& o) { return *this = *this - o; }

  auto operator<=>(const LatticeVector&) const = default;
  bool operator==(const LatticeVector&) const = default;

 private:
  void check(const LatticeVector& o) const {
    if (o.coords.size() != coords.size())
      throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
  }
};

struct WeightTag {};
struct CoweightTag {};
using Weight = LatticeVector<WeightTag>;      // element of X^*(T)
using Coweight = LatticeVector<CoweightTag>;  // element of X_*(T)

std::string format_vec(const Vec& v);
template <class Tag>
std::ostream& operator<<(std::ostream& os, const LatticeVector<Tag>& v) {
  return os << format_vec(v.coords);
}

std::int64_t dot(const Vec& a, const Vec& b);

// Exact rational linear algebra on small dense systems.
using RatMatrix = std::vector<std::vector<Rational>>;

// Solves M x = b; returns one solution (free variables set to zero) or nothing.
std::optional<std::vector<Rational>> solve_rational(const RatMatrix& m, const std::vector<Rational>& b);
int rank_rational(RatMatrix m);

// Least common multiple of the denominators of v.
BigInt common_denominator(const std::vector<Rational>& v);

std::string rational_str(const Rational& r);

}  // namespace lfac
