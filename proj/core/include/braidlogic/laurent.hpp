#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "braidlogic/errors.hpp"

namespace braidlogic {

/// Exact integer Laurent polynomial in a single named variable.
///
/// Coefficients are kept in a dense window [min_exp, min_exp + coeffs.size()),
/// trimmed so the first and last stored coefficients are nonzero; the zero
/// polynomial stores nothing. Arithmetic is exact; coefficient overflow is
/// detected and raises InternalError rather than wrapping.
class LaurentPoly {
 public:
  using Coeff = __int128;

  LaurentPoly() = default;
  explicit LaurentPoly(char var) : var_(var) {}

  static LaurentPoly zero(char var = 't') { return LaurentPoly(var); }
  static LaurentPoly constant(long long c, char var = 't');
  static LaurentPoly monomial(long long c, int exponent, char var = 't');
  /// 1 + x + ... + x^(k-1); k = 0 gives the zero polynomial.
  static LaurentPoly power_sum(int k, char var = 't');

  char var() const noexcept { return var_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept;
  int lowest_exponent() const;   // throws InternalError on the zero polynomial
  int highest_exponent() const;  // ditto
  Coeff coefficient(int exponent) const noexcept;

  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly operator-() const;
  LaurentPoly pow(unsigned k) const;

  /// Multiply by x^k.
  LaurentPoly shifted(int k) const;
  /// Substitute x -> x^{-1}.
  LaurentPoly inverted_variable() const;
  /// Exact division; throws InternalError if a remainder would be left.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  bool operator==(const LaurentPoly& other) const noexcept;

  /// Monomials sorted by descending exponent, e.g. "t^2 - t + 1", "-A^3".
  std::string to_string() const;
  /// Exponent -> coefficient, omitting zeros.
  std::map<int, long long> coefficients() const;

 private:
  void trim();

  char var_ = 't';
  int min_exp_ = 0;
  std::vector<Coeff> coeffs_;
};

/// Canonical representative of a LaurentPoly up to multiplication by +-x^k:
/// lowest exponent shifted to 0 and the lowest coefficient made positive.
class NormalizedPoly {
 public:
  NormalizedPoly() = default;
  static NormalizedPoly of(const LaurentPoly& p);

  const LaurentPoly& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_.is_zero(); }
  bool operator==(const NormalizedPoly& other) const noexcept {
    return value_ == other.value_;
  }
  std::string to_string() const { return value_.to_string(); }

 private:
  LaurentPoly value_;
};

namespace detail {
std::string int128_to_string(__int128 v);
long long checked_narrow(__int128 v);
}  // namespace detail

}  // namespace braidlogic
