#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace lienil {

// Exact rational number, always in lowest terms with a positive denominator.
//
// Values whose numerator and denominator fit in a signed 64-bit word are kept
// inline and combined through __int128 intermediates; anything larger is
// promoted to a GMP rational and demoted again as soon as it fits.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {  // NOLINT: implicit on purpose
    if (value == INT64_MIN) set_big(mpq_class(mpz_class(std::to_string(value))));
  }
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& q) { assign(q); }

  Rational(const Rational& other) { *this = other; }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;

  /// Parses "p" or "p/q" (arbitrary size); throws InputError on junk.
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;

  /// Numerator/denominator as int64 when both fit.
  std::optional<std::pair<std::int64_t, std::int64_t>> small() const;

  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// this -= factor * x, the inner step of every elimination loop.
  void sub_mul(const Rational& factor, const Rational& x);
  /// this += factor * x.
  void add_mul(const Rational& factor, const Rational& x);

 private:
  void assign(const mpq_class& q);
  void assign128(__int128 num, __int128 den);
  void set_big(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace lienil
