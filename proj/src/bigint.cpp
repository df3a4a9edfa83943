#include "eloday/bigint.hpp"

#include <climits>
#include <ostream>
#include <stdexcept>

namespace eloday {

BigInt::BigInt(long long v) {
  if (v >= LONG_MIN && v <= LONG_MAX) {
    v_ = static_cast<long>(v);
  } else {
    v_ = mpz_class(std::to_string(v));
  }
}

bool BigInt::fits_int64() const { return v_.fits_slong_p() && sizeof(long) == 8; }

long long BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("integer does not fit in 64 bits");
  return v_.get_si();
}

std::ostream& operator<<(std::ostream& os, const BigInt& a) { return os << a.v_.get_str(); }

BigInt abs(const BigInt& a) { return BigInt(mpz_class(::abs(a.mpz()))); }

BigInt gcd(const BigInt& a, const BigInt& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInt(g);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInt(q);
}

BigInt floor_mod(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInt(r);
}

BigInt div_exact(const BigInt& a, const BigInt& b) {
  if (!divides(b, a)) throw std::domain_error("inexact division");
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInt(q);
}

bool divides(const BigInt& d, const BigInt& a) {
  if (d.is_zero()) return a.is_zero();
  return mpz_divisible_p(a.mpz().get_mpz_t(), d.mpz().get_mpz_t()) != 0;
}

}  // namespace eloday
