#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include <Eigen/Core>

namespace eloday {

class BigInt {
 public:
  BigInt() = default;
  BigInt(int v) : v_(v) {}
  BigInt(long v) : v_(v) {}
  BigInt(long long v);
  explicit BigInt(const mpz_class& v) : v_(v) {}
  explicit BigInt(const std::string& s) : v_(s) {}

  const mpz_class& mpz() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool fits_int64() const;
  long long to_int64() const;
  std::string str() const { return v_.get_str(); }

  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

  friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ + b.v_)); }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ - b.v_)); }
  friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ * b.v_)); }
  friend BigInt operator-(const BigInt& a) { return BigInt(mpz_class(-a.v_)); }
  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) >= 0; }
  friend std::ostream& operator<<(std::ostream& os, const BigInt& a);

 private:
  mpz_class v_;
};

BigInt abs(const BigInt& a);
BigInt gcd(const BigInt& a, const BigInt& b);
// Floor division and the matching nonnegative-for-positive-divisor remainder.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt floor_mod(const BigInt& a, const BigInt& b);
// a / b, which must be exact.
BigInt div_exact(const BigInt& a, const BigInt& b);
bool divides(const BigInt& d, const BigInt& a);

}  // namespace eloday

namespace Eigen {
template <>
struct NumTraits<eloday::BigInt> : GenericNumTraits<eloday::BigInt> {
  typedef eloday::BigInt Real;
  typedef eloday::BigInt NonInteger;
  typedef eloday::BigInt Nested;
  typedef eloday::BigInt Literal;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 6,
    MulCost = 12
  };
};
}  // namespace Eigen
