#include "lienil/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <ostream>

#include "lienil/errors.hpp"

namespace lienil {
namespace {

using u128 = unsigned __int128;

constexpr __int128 kSmallMax = INT64_MAX;

u128 uabs(__int128 v) { return v < 0 ? u128(-v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from128(__int128 v) {
  const bool neg = v < 0;
  u128 mag = uabs(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

bool mpz_small(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) && z != LONG_MIN; }

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  assign128(num, den);
}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_) {
    big_ = std::make_unique<mpq_class>(*other.big_);
  } else {
    big_.reset();
  }
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  auto digits = [&](bool allow_sign) {
    std::size_t start = pos;
    if (allow_sign && pos < text.size() && text[pos] == '-') ++pos;
    std::size_t first = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == first) throw InputError("malformed rational '" + std::string(text) + "'");
    return std::string(text.substr(start, pos - start));
  };
  mpz_class num(digits(true));
  mpz_class den(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = mpz_class(digits(false));
  }
  if (pos != text.size()) throw InputError("malformed rational '" + std::string(text) + "'");
  if (den == 0) throw InputError("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

void Rational::set_big(mpq_class q) {
  big_ = std::make_unique<mpq_class>(std::move(q));
  num_ = 0;
  den_ = 1;
}

void Rational::assign(const mpq_class& q) {
  if (mpz_small(q.get_num()) && mpz_small(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    set_big(q);
  }
}

void Rational::assign128(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  if (den != 1) {
    u128 g = gcd128(uabs(num), u128(den));
    if (g != 1) {
      num /= static_cast<__int128>(g);
      den /= static_cast<__int128>(g);
    }
  }
  if (num <= kSmallMax && num >= -kSmallMax && den <= kSmallMax) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
  } else {
    set_big(mpq_class(mpz_from128(num), mpz_from128(den)));
  }
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }

mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_)); }

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::optional<std::pair<std::int64_t, std::int64_t>> Rational::small() const {
  if (big_) return std::nullopt;
  return std::pair{num_, den_};
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational out;
  if (big_) {
    out.assign(mpq_class(-*big_));
  } else {
    out.num_ = -num_;
    out.den_ = den_;
  }
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(num_, rhs.num_, &r) && r != INT64_MIN) {
        num_ = r;
        return *this;
      }
    }
    const __int128 n = static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_;
    const __int128 d = static_cast<__int128>(den_) * rhs.den_;
    assign128(n, d);
    return *this;
  }
  assign(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t r;
      if (!__builtin_sub_overflow(num_, rhs.num_, &r) && r != INT64_MIN) {
        num_ = r;
        return *this;
      }
    }
    const __int128 n = static_cast<__int128>(num_) * rhs.den_ - static_cast<__int128>(rhs.num_) * den_;
    const __int128 d = static_cast<__int128>(den_) * rhs.den_;
    assign128(n, d);
    return *this;
  }
  assign(to_mpq() - rhs.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t r;
      if (!__builtin_mul_overflow(num_, rhs.num_, &r) && r != INT64_MIN) {
        num_ = r;
        return *this;
      }
    }
    const __int128 n = static_cast<__int128>(num_) * rhs.num_;
    const __int128 d = static_cast<__int128>(den_) * rhs.den_;
    assign128(n, d);
    return *this;
  }
  assign(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw InputError("rational division by zero");
  if (!big_ && !rhs.big_) {
    const __int128 n = static_cast<__int128>(num_) * rhs.den_;
    const __int128 d = static_cast<__int128>(den_) * rhs.num_;
    assign128(n, d);
    return *this;
  }
  assign(to_mpq() / rhs.to_mpq());
  return *this;
}

void Rational::sub_mul(const Rational& factor, const Rational& x) {
  if (!big_ && !factor.big_ && !x.big_ && den_ == 1 && factor.den_ == 1 && x.den_ == 1) {
    std::int64_t prod, r;
    if (!__builtin_mul_overflow(factor.num_, x.num_, &prod) && !__builtin_sub_overflow(num_, prod, &r) &&
        r != INT64_MIN) {
      num_ = r;
      return;
    }
  }
  Rational t = factor;
  t *= x;
  *this -= t;
}

void Rational::add_mul(const Rational& factor, const Rational& x) {
  if (!big_ && !factor.big_ && !x.big_ && den_ == 1 && factor.den_ == 1 && x.den_ == 1) {
    std::int64_t prod, r;
    if (!__builtin_mul_overflow(factor.num_, x.num_, &prod) && !__builtin_add_overflow(num_, prod, &r) &&
        r != INT64_MIN) {
      num_ = r;
      return;
    }
  }
  Rational t = factor;
  t *= x;
  *this += t;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace lienil
