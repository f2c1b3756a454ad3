#include "lfactor/numeric.hpp"

#include <sstream>

namespace lfac {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidCartan: return "InvalidCartan";
    case ErrorCode::InfiniteSystem: return "InfiniteSystem";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::OrbitTooLarge: return "OrbitTooLarge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::FreudenthalDenominatorZero: return "FreudenthalDenominatorZero";
    case ErrorCode::UnknownRepName: return "UnknownRepName";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::IncompleteDomain: return "IncompleteDomain";
    case ErrorCode::HypothesesFail: return "HypothesesFail";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::EmptyS: return "EmptyS";
    case ErrorCode::NoSeparator: return "NoSeparator";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::NotQuasiMinuscule: return "NotQuasiMinuscule";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string HalfInt::str() const {
  if (doubled_ % 2 == 0) return std::to_string(doubled_ / 2);
  return std::to_string(doubled_) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

std::string format_vec(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::int64_t dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "pairing of vectors of different length");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

// Row-reduces the augmented matrix in place; returns pivot columns.
std::vector<int> row_reduce(RatMatrix& a, int ncols) {
  std::vector<int> pivots;
  int rows = static_cast<int>(a.size());
  int r = 0;
  for (int c = 0; c < ncols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Rational>> solve_rational(const RatMatrix& m, const std::vector<Rational>& b) {
  if (m.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "solve: row count mismatch");
  int ncols = m.empty() ? 0 : static_cast<int>(m[0].size());
  RatMatrix a = m;
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  auto pivots = row_reduce(a, ncols);
  for (std::size_t i = pivots.size(); i < a.size(); ++i)
    if (a[i][ncols] != 0) return std::nullopt;
  std::vector<Rational> x(ncols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][ncols];
  return x;
}

int rank_rational(RatMatrix m) {
  int ncols = m.empty() ? 0 : static_cast<int>(m[0].size());
  return static_cast<int>(row_reduce(m, ncols).size());
}

BigInt common_denominator(const std::vector<Rational>& v) {
  BigInt l = 1;
  for (const auto& x : v) {
    BigInt d = boost::multiprecision::denominator(x);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  return l;
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) os << '/' << boost::multiprecision::denominator(r);
  return os.str();
}

}  // namespace lfac
