#include "braidlogic/laurent.hpp"

#include <algorithm>
#include <limits>

namespace braidlogic {

namespace detail {

std::string int128_to_string(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  std::string digits;
  while (u > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

long long checked_narrow(__int128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw InternalError("coefficient does not fit in 64 bits: " +
                        int128_to_string(v));
  }
  return static_cast<long long>(v);
}

namespace {

__int128 checked_add(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw InternalError("coefficient overflow in addition");
  }
  return r;
}

__int128 checked_mul(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw InternalError("coefficient overflow in multiplication");
  }
  return r;
}

}  // namespace
}  // namespace detail

LaurentPoly LaurentPoly::constant(long long c, char var) {
  return monomial(c, 0, var);
}

LaurentPoly LaurentPoly::monomial(long long c, int exponent, char var) {
  LaurentPoly p(var);
  if (c != 0) {
    p.min_exp_ = exponent;
    p.coeffs_ = {static_cast<Coeff>(c)};
  }
  return p;
}

LaurentPoly LaurentPoly::power_sum(int k, char var) {
  LaurentPoly p(var);
  if (k > 0) {
    p.min_exp_ = 0;
    p.coeffs_.assign(static_cast<std::size_t>(k), 1);
  }
  return p;
}

bool LaurentPoly::is_one() const noexcept {
  return coeffs_.size() == 1 && min_exp_ == 0 && coeffs_[0] == 1;
}

int LaurentPoly::lowest_exponent() const {
  if (is_zero()) throw InternalError("lowest_exponent of zero polynomial");
  return min_exp_;
}

int LaurentPoly::highest_exponent() const {
  if (is_zero()) throw InternalError("highest_exponent of zero polynomial");
  return min_exp_ + static_cast<int>(coeffs_.size()) - 1;
}

LaurentPoly::Coeff LaurentPoly::coefficient(int exponent) const noexcept {
  if (is_zero()) return 0;
  int i = exponent - min_exp_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

void LaurentPoly::trim() {
  std::size_t lo = 0;
  while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
  if (lo == coeffs_.size()) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  std::size_t hi = coeffs_.size();
  while (hi > lo && coeffs_[hi - 1] == 0) --hi;
  if (lo > 0 || hi < coeffs_.size()) {
    coeffs_ = std::vector<Coeff>(coeffs_.begin() + static_cast<long>(lo),
                                 coeffs_.begin() + static_cast<long>(hi));
    min_exp_ += static_cast<int>(lo);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  int lo = std::min(min_exp_, other.min_exp_);
  int hi = std::max(highest_exponent(), other.highest_exponent());
  LaurentPoly r(var_);
  r.min_exp_ = lo;
  r.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    r.coeffs_[static_cast<std::size_t>(min_exp_ - lo) + i] = coeffs_[i];
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    auto& slot = r.coeffs_[static_cast<std::size_t>(other.min_exp_ - lo) + i];
    slot = detail::checked_add(slot, other.coeffs_[i]);
  }
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
  return *this + (-other);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  if (is_zero() || other.is_zero()) return zero(var_);
  LaurentPoly r(var_);
  r.min_exp_ = min_exp_ + other.min_exp_;
  r.coeffs_.assign(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (other.coeffs_[j] == 0) continue;
      r.coeffs_[i + j] = detail::checked_add(
          r.coeffs_[i + j], detail::checked_mul(coeffs_[i], other.coeffs_[j]));
    }
  }
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r = constant(1, var_);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    base = base * base;
    k >>= 1u;
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.min_exp_ += k;
  return r;
}

LaurentPoly LaurentPoly::inverted_variable() const {
  if (is_zero()) return *this;
  LaurentPoly r(var_);
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  r.min_exp_ = -highest_exponent();
  return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw InternalError("division by zero polynomial");
  if (is_zero()) return zero(var_);
  // Long division from the top degree; Laurent shifts are absorbed into the
  // exponent of the quotient.
  std::vector<Coeff> rem = coeffs_;
  const std::vector<Coeff>& d = divisor.coeffs_;
  if (rem.size() < d.size()) {
    throw InternalError("non-exact polynomial division (degree)");
  }
  std::size_t qsize = rem.size() - d.size() + 1;
  std::vector<Coeff> q(qsize, 0);
  for (std::size_t step = qsize; step-- > 0;) {
    Coeff top = rem[step + d.size() - 1];
    if (top == 0) continue;
    Coeff lead = d.back();
    if (top % lead != 0) {
      throw InternalError("non-exact polynomial division (leading coefficient)");
    }
    Coeff f = top / lead;
    q[step] = f;
    for (std::size_t j = 0; j < d.size(); ++j) {
      rem[step + j] -= detail::checked_mul(f, d[j]);
    }
  }
  for (Coeff c : rem) {
    if (c != 0) throw InternalError("non-exact polynomial division (remainder)");
  }
  LaurentPoly r(var_);
  r.coeffs_ = std::move(q);
  r.min_exp_ = min_exp_ - divisor.min_exp_;
  r.trim();
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& other) const noexcept {
  if (is_zero() && other.is_zero()) return true;
  return min_exp_ == other.min_exp_ && coeffs_ == other.coeffs_;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
    Coeff c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    int e = min_exp_ + i;
    bool neg = c < 0;
    Coeff mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool unit = (mag == 1);
    if (!unit || e == 0) out += detail::int128_to_string(mag);
    if (e != 0) {
      out += var_;
      if (e != 1) {
        out += '^';
        out += std::to_string(e);
      }
    }
  }
  return out;
}

std::map<int, long long> LaurentPoly::coefficients() const {
  std::map<int, long long> m;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) {
      m[min_exp_ + static_cast<int>(i)] = detail::checked_narrow(coeffs_[i]);
    }
  }
  return m;
}

NormalizedPoly NormalizedPoly::of(const LaurentPoly& p) {
  NormalizedPoly r;
  if (p.is_zero()) {
    r.value_ = LaurentPoly::zero(p.var());
    return r;
  }
  LaurentPoly shifted = p.shifted(-p.lowest_exponent());
  if (shifted.coefficient(0) < 0) shifted = -shifted;
  r.value_ = shifted;
  return r;
}

}  // namespace braidlogic
