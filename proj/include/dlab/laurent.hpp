#ifndef DLAB_LAURENT_HPP
#define DLAB_LAURENT_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace dlab {

// Integer Laurent polynomial in one variable v, exact arbitrary-precision
// coefficients.  Stored densely over the exponent window [low, low+size):
// coeff of v^(low+i) is coeffs[i].  Canonical form: first and last stored
// coefficients are nonzero; the zero polynomial stores nothing and low = 0.
class LaurentPoly {
public:
  LaurentPoly() = default;                      // zero
  LaurentPoly(long c) : LaurentPoly(mpz_class(c), 0) {}
  explicit LaurentPoly(const mpz_class& c) : LaurentPoly(c, 0) {}
  LaurentPoly(const mpz_class& c, int exp);     // c * v^exp

  static LaurentPoly v(int exp) { return LaurentPoly(mpz_class(1), exp); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;

  // Exponent window; both return 0 for the zero polynomial.
  int low_exp() const { return is_zero() ? 0 : low_; }
  int high_exp() const {
    return is_zero() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1;
  }

  // Coefficient of v^k (zero outside the stored window).
  const mpz_class& coeff(int k) const;

  LaurentPoly bar() const;                      // v -> v^-1
  LaurentPoly shifted(int k) const;             // *this * v^k

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const mpz_class& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const mpz_class& c) { return a *= c; }
  friend LaurentPoly operator*(const mpz_class& c, LaurentPoly a) { return a *= c; }
  bool operator==(const LaurentPoly& o) const {
    return low_ == o.low_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Membership predicates for the subrings used by the Kazhdan-Lusztig
  // conditions.  All consistent with coeff().
  bool in_z_pos_v() const;        // in Z>=0[v]       (no negative exponents, coeffs >= 0)
  bool in_v_zv() const;           // in v Z[v]        (lowest exponent >= 1)
  bool in_one_plus_v_zv() const;  // in 1 + v Z[v]
  bool all_coeffs_nonneg() const;

  // a <= b coefficientwise (b - a has nonnegative coefficients).
  static bool leq_coefficientwise(const LaurentPoly& a, const LaurentPoly& b);

  // Text form "low:c0,c1,...,ck"; zero is "0".  parse() accepts exactly that.
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

private:
  void trim();

  int low_ = 0;
  std::vector<mpz_class> coeffs_;
};

}  // namespace dlab

#endif
