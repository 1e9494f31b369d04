#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qpos/rational.hpp"

namespace qpos {

using Exponent = std::int64_t;

/**
 * Dense Laurent polynomial in q with arbitrary-precision integer
 * coefficients.
 *
 * coeffs()[i] is the coefficient of q^(min_exp() + i). Values are kept in
 * normal form: the first and last stored coefficients are nonzero, and the
 * zero polynomial has no coefficients and min_exp() == 0. Normal form makes
 * equality a positional comparison.
 */
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long constant) : LaurentPoly(Integer(constant)) {}  // NOLINT
  LaurentPoly(int constant) : LaurentPoly(Integer(constant)) {}   // NOLINT
  LaurentPoly(Exponent min_exp, std::vector<Integer> coeffs);

  /// c * q^e
  static LaurentPoly monomial(const Integer& c, Exponent e);

  bool is_zero() const { return coeffs_.empty(); }
  Exponent min_exp() const { return min_exp_; }
  /// Highest exponent with a stored coefficient; min_exp() for zero.
  Exponent max_exp() const {
    return coeffs_.empty() ? min_exp_ : min_exp_ + static_cast<Exponent>(coeffs_.size()) - 1;
  }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const Integer> coeffs() const { return coeffs_; }

  /// Coefficient of q^e (zero outside the stored range).
  Integer coeff(Exponent e) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& b);
  LaurentPoly& operator-=(const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& b);

 private:
  void normalize();

  Exponent min_exp_ = 0;
  std::vector<Integer> coeffs_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

/// Returns c with a == b * c. Long division runs from the lowest exponent;
/// any nonzero remainder throws NotDivisible, b == 0 throws DivisionByZero.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// q -> q^k for k >= 1.
LaurentPoly dilate(const LaurentPoly& a, Exponent k);

/// q -> q^{-1}.
LaurentPoly invert_variable(const LaurentPoly& a);

/// Multiplies by sign * q^e; sign must be +1 or -1.
LaurentPoly monomial_mul(const LaurentPoly& a, int sign, Exponent e);

LaurentPoly scale(const LaurentPoly& a, const Integer& c);

bool is_nonneg(const LaurentPoly& a);

/// Sum of all coefficients.
Integer eval_at_one(const LaurentPoly& a);

/// Human-readable form, ascending exponents: "1 + q + 2q^2", "-q^-1 + 1", "0".
std::string to_string(const LaurentPoly& a);

inline LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
inline LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return mul(a, b); }

namespace detail {

/// Operand size below which multiplication stays schoolbook. Chosen with
/// tools/bench_mul.
inline constexpr std::size_t kKaratsubaThreshold = 40;

/// Accumulates a*b into out (out.size() >= a.size() + b.size() - 1).
void mul_schoolbook(std::span<const Integer> a, std::span<const Integer> b,
                    std::span<Integer> out);
void mul_karatsuba(std::span<const Integer> a, std::span<const Integer> b,
                   std::span<Integer> out, std::size_t threshold = kKaratsubaThreshold);

}  // namespace detail

}  // namespace qpos
