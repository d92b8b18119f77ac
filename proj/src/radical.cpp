#include "gaindex/radical.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <mpfr.h>

#include "gaindex/errors.hpp"

namespace gaindex {
namespace {

constexpr mpfr_prec_t kStartPrecision = 64;
constexpr mpfr_prec_t kMaxPrecision = mpfr_prec_t{1} << 22;

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
  ~Mpfr() { mpfr_clear(value_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

 private:
  mpfr_t value_;
};

// Outward-rounded enclosure [lo, hi] of the real value of `a`.
void enclose(const RadicalNumber& a, mpfr_prec_t precision, Mpfr& lo, Mpfr& hi) {
  mpfr_set_zero(lo.get(), 1);
  mpfr_set_zero(hi.get(), 1);
  Mpfr c_lo(precision), c_hi(precision), s_lo(precision), s_hi(precision),
      t(precision);
  for (const auto& [q, c] : a.terms()) {
    mpfr_set_q(c_lo.get(), c.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(c_hi.get(), c.get_mpq_t(), MPFR_RNDU);
    if (q == 1) {
      mpfr_add(lo.get(), lo.get(), c_lo.get(), MPFR_RNDD);
      mpfr_add(hi.get(), hi.get(), c_hi.get(), MPFR_RNDU);
      continue;
    }
    mpfr_sqrt_ui(s_lo.get(), q, MPFR_RNDD);
    mpfr_sqrt_ui(s_hi.get(), q, MPFR_RNDU);
    if (sgn(c) > 0) {
      mpfr_mul(t.get(), c_lo.get(), s_lo.get(), MPFR_RNDD);
      mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), c_hi.get(), s_hi.get(), MPFR_RNDU);
      mpfr_add(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    } else {
      mpfr_mul(t.get(), c_lo.get(), s_hi.get(), MPFR_RNDD);
      mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), c_hi.get(), s_lo.get(), MPFR_RNDU);
      mpfr_add(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    }
  }
}

// Refines until the enclosure excludes zero and its width is at most
// 2^-rel_bits times the smaller endpoint magnitude. `a` must be nonzero.
mpfr_prec_t refine(const RadicalNumber& a, int rel_bits, Mpfr*& lo_out,
                   Mpfr*& hi_out, std::vector<std::unique_ptr<Mpfr>>& store) {
  for (mpfr_prec_t precision = std::max<mpfr_prec_t>(kStartPrecision, rel_bits + 16);
       precision <= kMaxPrecision; precision *= 2) {
    store.clear();
    store.push_back(std::make_unique<Mpfr>(precision));
    store.push_back(std::make_unique<Mpfr>(precision));
    Mpfr& lo = *store[0];
    Mpfr& hi = *store[1];
    enclose(a, precision, lo, hi);
    if (mpfr_sgn(lo.get()) != mpfr_sgn(hi.get()) || mpfr_zero_p(lo.get())) {
      continue;
    }
    if (rel_bits > 0) {
      Mpfr width(precision), bound(precision);
      mpfr_sub(width.get(), hi.get(), lo.get(), MPFR_RNDU);
      mpfr_abs(bound.get(), mpfr_sgn(lo.get()) > 0 ? lo.get() : hi.get(), MPFR_RNDD);
      mpfr_mul_2si(bound.get(), bound.get(), -rel_bits, MPFR_RNDD);
      if (mpfr_cmp(width.get(), bound.get()) > 0) continue;
    }
    lo_out = &lo;
    hi_out = &hi;
    return precision;
  }
  throw std::runtime_error("RadicalNumber: interval refinement did not converge");
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("RadicalNumber: radicand product overflows 64 bits");
  }
  return out;
}

}  // namespace

SquarefreeSplit radical_sqrt(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("radical_sqrt: k must be positive");
  SquarefreeSplit out;
  auto strip = [&](std::uint64_t p) {
    int exponent = 0;
    while (k % p == 0) {
      k /= p;
      ++exponent;
    }
    for (int i = 0; i < exponent / 2; ++i) out.square_root *= p;
    if (exponent % 2 == 1) out.squarefree *= p;
  };
  strip(2);
  strip(3);
  // 6j +- 1 wheel.
  for (std::uint64_t p = 5; p <= k / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (k > 1) out.squarefree *= k;
  return out;
}

bool is_squarefree(std::uint64_t k) {
  return k != 0 && radical_sqrt(k).square_root == 1;
}

bool is_perfect_square(std::uint64_t k) {
  return k == 0 || radical_sqrt(k).squarefree == 1;
}

RadicalNumber::RadicalNumber(const Rational& r) {
  if (sgn(r) != 0) terms_.emplace(1, r);
}

RadicalNumber::RadicalNumber(long value) : RadicalNumber(Rational(value)) {}

RadicalNumber RadicalNumber::sqrt_of(std::uint64_t k) {
  if (k == 0) return {};
  const auto split = radical_sqrt(k);
  RadicalNumber out;
  out.terms_.emplace(split.squarefree, Rational(mpz_class(split.square_root)));
  return out;
}

RadicalNumber RadicalNumber::sqrt_of(const Rational& r) {
  if (sgn(r) < 0) throw std::domain_error("RadicalNumber::sqrt_of: negative argument");
  if (sgn(r) == 0) return {};
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  mpz_class product = num * den;
  if (!product.fits_ulong_p()) {
    throw std::overflow_error("RadicalNumber::sqrt_of: radicand too large");
  }
  RadicalNumber out = sqrt_of(static_cast<std::uint64_t>(product.get_ui()));
  out *= Rational(1, 1) / Rational(den);
  return out;
}

RadicalNumber RadicalNumber::term(const Rational& c, std::uint64_t q) {
  return sqrt_of(q) * c;
}

bool RadicalNumber::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

bool RadicalNumber::is_integer() const {
  return is_rational() && (terms_.empty() || terms_.begin()->second.get_den() == 1);
}

Rational RadicalNumber::rational_part() const {
  auto it = terms_.find(1);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RadicalNumber::accumulate(std::uint64_t q, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(q, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

RadicalNumber& RadicalNumber::operator+=(const RadicalNumber& other) {
  for (const auto& [q, c] : other.terms_) accumulate(q, c);
  return *this;
}

RadicalNumber& RadicalNumber::operator-=(const RadicalNumber& other) {
  for (const auto& [q, c] : other.terms_) accumulate(q, -c);
  return *this;
}

RadicalNumber& RadicalNumber::operator*=(const Rational& factor) {
  if (sgn(factor) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [q, c] : terms_) c *= factor;
  return *this;
}

RadicalNumber& RadicalNumber::operator*=(const RadicalNumber& other) {
  *this = *this * other;
  return *this;
}

RadicalNumber operator*(const RadicalNumber& a, const RadicalNumber& b) {
  RadicalNumber out;
  for (const auto& [qa, ca] : a.terms_) {
    for (const auto& [qb, cb] : b.terms_) {
      // sqrt(qa) sqrt(qb) = g sqrt((qa/g)(qb/g)); the cofactors are coprime
      // and squarefree, so their product is squarefree.
      const std::uint64_t g = std::gcd(qa, qb);
      const std::uint64_t q = checked_mul(qa / g, qb / g);
      out.accumulate(q, ca * cb * Rational(mpz_class(g)));
    }
  }
  return out;
}

RadicalNumber RadicalNumber::operator-() const {
  RadicalNumber out = *this;
  for (auto& [q, c] : out.terms_) c = -c;
  return out;
}

int RadicalNumber::sign() const {
  if (terms_.empty()) return 0;
  if (is_rational()) return sgn(terms_.begin()->second);
  bool all_positive = true;
  bool all_negative = true;
  for (const auto& [q, c] : terms_) {
    all_positive = all_positive && sgn(c) > 0;
    all_negative = all_negative && sgn(c) < 0;
  }
  if (all_positive) return 1;
  if (all_negative) return -1;
  std::vector<std::unique_ptr<Mpfr>> store;
  Mpfr* lo = nullptr;
  Mpfr* hi = nullptr;
  refine(*this, 0, lo, hi, store);
  return mpfr_sgn(lo->get()) > 0 ? 1 : -1;
}

std::string RadicalNumber::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [q, c] : terms_) {
    const bool negative = sgn(c) < 0;
    const Rational magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (q == 1) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += "sqrt(" + std::to_string(q) + ")";
    } else {
      out += magnitude.get_str() + "*sqrt(" + std::to_string(q) + ")";
    }
  }
  return out;
}

namespace {

class RadicalParser {
 public:
  explicit RadicalParser(std::string_view text) : text_(text) {}

  RadicalNumber parse() {
    skip_spaces();
    if (at_end()) fail("empty radical expression");
    RadicalNumber out;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
      skip_spaces();
    }
    out += signed_term(negative);
    for (;;) {
      skip_spaces();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
      skip_spaces();
      out += signed_term(negative);
    }
    return out;
  }

 private:
  RadicalNumber signed_term(bool negative) {
    RadicalNumber t = term();
    return negative ? -t : t;
  }

  RadicalNumber term() {
    if (lookahead("sqrt(")) return RadicalNumber::sqrt_of(radicand());
    Rational coefficient = rational();
    skip_spaces();
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_spaces();
      if (!lookahead("sqrt(")) fail("expected sqrt( after '*'");
      return RadicalNumber::term(coefficient, radicand());
    }
    return RadicalNumber(coefficient);
  }

  std::uint64_t radicand() {
    pos_ += 5;  // "sqrt("
    skip_spaces();
    const mpz_class value = integer();
    skip_spaces();
    if (at_end() || peek() != ')') fail("expected ')'");
    ++pos_;
    if (value == 0 || !value.fits_ulong_p()) fail("radicand out of range");
    return value.get_ui();
  }

  Rational rational() {
    mpz_class num = integer();
    if (!at_end() && peek() == '/') {
      ++pos_;
      mpz_class den = integer();
      if (den == 0) fail("zero denominator");
      Rational out(num, den);
      out.canonicalize();
      return out;
    }
    return Rational(num);
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  bool lookahead(std::string_view token) const {
    return text_.substr(pos_, token.size()) == token;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_spaces() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("radical: " + what + " at offset " + std::to_string(pos_), pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RadicalNumber RadicalNumber::parse(std::string_view text) {
  return RadicalParser(text).parse();
}

RadicalNumber add(const RadicalNumber& a, const RadicalNumber& b) { return a + b; }

RadicalNumber scale(const RadicalNumber& a, const Rational& r) { return a * r; }

std::strong_ordering compare(const RadicalNumber& a, const RadicalNumber& b) {
  if (a == b) return std::strong_ordering::equal;
  const int s = (a - b).sign();
  return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

Approximation to_float(const RadicalNumber& a, int precision_bits) {
  if (precision_bits < 32) {
    throw std::invalid_argument("to_float: precision must be at least 32 bits");
  }
  if (a.is_zero()) return {};
  std::vector<std::unique_ptr<Mpfr>> store;
  Mpfr* lo = nullptr;
  Mpfr* hi = nullptr;
  const mpfr_prec_t precision = refine(a, precision_bits - 1, lo, hi, store);
  Mpfr mid(precision + 1), half_width(precision + 1);
  mpfr_add(mid.get(), lo->get(), hi->get(), MPFR_RNDN);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  mpfr_sub(half_width.get(), hi->get(), lo->get(), MPFR_RNDU);
  mpfr_div_2ui(half_width.get(), half_width.get(), 1, MPFR_RNDU);
  Approximation out;
  out.value = mpfr_get_d(mid.get(), MPFR_RNDN);
  out.abs_error = mpfr_get_d(half_width.get(), MPFR_RNDU) +
                  std::ldexp(std::abs(out.value), -53);
  return out;
}

std::string to_decimal_string(const RadicalNumber& a, int digits) {
  if (digits < 1) throw std::invalid_argument("to_decimal_string: digits must be >= 1");
  if (a.is_zero()) return "0";
  const int bits = static_cast<int>(std::ceil(digits * 3.33)) + 16;
  std::vector<std::unique_ptr<Mpfr>> store;
  Mpfr* lo = nullptr;
  Mpfr* hi = nullptr;
  refine(a, bits, lo, hi, store);
  std::vector<char> buffer(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Rg", digits, lo->get());
  return std::string(buffer.data());
}

}  // namespace gaindex
