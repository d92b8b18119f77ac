#pragma once

// Exact arithmetic in the Q-span of {sqrt(q) : q squarefree}.
//
// Every value is stored as a finite sum  sum_q c_q * sqrt(q)  with q >= 1
// squarefree and c_q a nonzero rational. Because square roots of distinct
// squarefree integers are linearly independent over Q, this representation is
// unique, so equality is structural. Ordering is decided by interval
// evaluation with increasing precision.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gaindex {

using Rational = mpq_class;

/// num / den in lowest terms (mpq_class's two-argument constructor does not
/// canonicalize).
inline Rational ratio(long num, long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

/// k = square_root^2 * squarefree, squarefree has no repeated prime factor.
struct SquarefreeSplit {
  std::uint64_t square_root = 1;
  std::uint64_t squarefree = 1;

  bool operator==(const SquarefreeSplit&) const = default;
};

/// Splits k >= 1 by trial division. Throws std::invalid_argument for k == 0.
SquarefreeSplit radical_sqrt(std::uint64_t k);

bool is_squarefree(std::uint64_t k);
bool is_perfect_square(std::uint64_t k);

/// A double together with a bound on its absolute distance to the true value.
struct Approximation {
  double value = 0.0;
  double abs_error = 0.0;
};

class RadicalNumber {
 public:
  using Terms = std::map<std::uint64_t, Rational>;

  RadicalNumber() = default;
  RadicalNumber(const Rational& r);  // NOLINT: rationals embed implicitly
  RadicalNumber(long value);         // NOLINT

  /// sqrt(k) in canonical form.
  static RadicalNumber sqrt_of(std::uint64_t k);
  /// sqrt(r) for a rational r >= 0, rationalized as sqrt(p*q)/q.
  static RadicalNumber sqrt_of(const Rational& r);
  /// c * sqrt(q) for arbitrary q >= 1 (canonicalized).
  static RadicalNumber term(const Rational& c, std::uint64_t q);

  /// Parses the display format produced by to_string(), e.g. "1 + 4/3*sqrt(2)".
  /// Radicands need not be squarefree; the result is canonicalized.
  /// Throws ParseError on malformed input.
  static RadicalNumber parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  bool is_integer() const;
  /// The rational value; only valid when is_rational().
  Rational rational_part() const;

  /// -1, 0 or +1.
  int sign() const;

  std::string to_string() const;

  RadicalNumber& operator+=(const RadicalNumber& other);
  RadicalNumber& operator-=(const RadicalNumber& other);
  RadicalNumber& operator*=(const RadicalNumber& other);
  RadicalNumber& operator*=(const Rational& factor);

  friend RadicalNumber operator+(RadicalNumber a, const RadicalNumber& b) {
    return a += b;
  }
  friend RadicalNumber operator-(RadicalNumber a, const RadicalNumber& b) {
    return a -= b;
  }
  friend RadicalNumber operator*(const RadicalNumber& a, const RadicalNumber& b);
  friend RadicalNumber operator*(RadicalNumber a, const Rational& r) {
    return a *= r;
  }
  friend RadicalNumber operator*(const Rational& r, RadicalNumber a) {
    return a *= r;
  }
  RadicalNumber operator-() const;

  friend bool operator==(const RadicalNumber& a, const RadicalNumber& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void accumulate(std::uint64_t q, const Rational& c);

  Terms terms_;
};

RadicalNumber add(const RadicalNumber& a, const RadicalNumber& b);
RadicalNumber scale(const RadicalNumber& a, const Rational& r);

/// Total order on real values. Equal iff the term maps coincide; otherwise
/// decided by outward-rounded interval evaluation, doubling the working
/// precision (from 64 bits) until the sign of a - b is certain.
std::strong_ordering compare(const RadicalNumber& a, const RadicalNumber& b);

inline std::strong_ordering operator<=>(const RadicalNumber& a,
                                        const RadicalNumber& b) {
  return compare(a, b);
}

inline bool is_rational(const RadicalNumber& a) { return a.is_rational(); }
inline bool is_integer(const RadicalNumber& a) { return a.is_integer(); }

/// Nearest double with relative error at most 2^(1 - precision_bits) before
/// the final rounding to double; precision_bits must be >= 32. Zero maps to
/// exactly 0.0.
Approximation to_float(const RadicalNumber& a, int precision_bits = 53);

/// Decimal expansion with `digits` significant digits, evaluated rigorously.
std::string to_decimal_string(const RadicalNumber& a, int digits);

}  // namespace gaindex
