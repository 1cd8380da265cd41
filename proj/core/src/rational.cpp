#include "dzid/rational.hpp"

#include <climits>
#include <ostream>
#include <stdexcept>

namespace dzid {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMax = INT64_MAX;
constexpr i128 kMin = -static_cast<i128>(INT64_MAX);  // INT64_MIN excluded so negation stays small

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

bool fits(const mpz_class& z) { return z.fits_slong_p() && z != LONG_MIN; }

}  // namespace

Rational::Rational(const BigInt& value) { assign(mpq_class(value)); }

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  assign(std::move(q));
}

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  assign(den < 0 ? -static_cast<i128>(num) : num, den < 0 ? -static_cast<i128>(den) : den);
}

Rational& Rational::operator=(const Rational& o) {
  if (this != &o) {
    num_ = o.num_;
    den_ = o.den_;
    big_.reset(o.big_ ? new mpq_class(*o.big_) : nullptr);
  }
  return *this;
}

void Rational::assign(i128 num, i128 den) {
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  const u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (num >= kMin && num <= kMax && den <= kMax) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  auto to_mpz = [](i128 x) {
    const bool neg = x < 0;
    u128 u = abs128(x);
    mpz_class z(static_cast<unsigned long>(u >> 64));
    z <<= 64;
    z += static_cast<unsigned long>(u & ~static_cast<unsigned long>(0));
    return neg ? mpz_class(-z) : z;
  };
  big_ = std::make_unique<mpq_class>(to_mpz(num), to_mpz(den));
}

void Rational::assign(mpq_class q) {
  if (fits(q.get_num()) && fits(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(std::move(q));
  }
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

BigInt Rational::numerator() const { return big_ ? big_->get_num() : BigInt(static_cast<long>(num_)); }
BigInt Rational::denominator() const { return big_ ? big_->get_den() : BigInt(static_cast<long>(den_)); }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
}

Rational& Rational::operator+=(const Rational& o) {
  if (big_ || o.big_) {
    assign(to_mpq() + o.to_mpq());
  } else if (den_ == 1 && o.den_ == 1) {
    assign(static_cast<i128>(num_) + o.num_, 1);
  } else {
    assign(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_, static_cast<i128>(den_) * o.den_);
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (big_ || o.big_) {
    assign(to_mpq() * o.to_mpq());
  } else {
    assign(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
  }
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  return *this *= o.inverse();
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  Rational r;
  if (big_) {
    r.assign(mpq_class(1) / *big_);
  } else {
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
  }
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.assign(mpq_class(-*big_));
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a value that fits is never stored in GMP form
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c;
  if (!a.big_ && !b.big_) {
    const i128 l = static_cast<i128>(a.num_) * b.den_, r = static_cast<i128>(b.num_) * a.den_;
    c = l < r ? -1 : (l > r ? 1 : 0);
  } else {
    c = cmp(a.to_mpq(), b.to_mpq());
  }
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt pochhammer(const BigInt& s, unsigned t) {
  BigInt result = 1;
  for (unsigned i = 0; i < t; ++i) result *= s - i;
  return result;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt double_factorial(long n) {
  if (n < -1) throw std::domain_error("double_factorial: argument below -1");
  BigInt r = 1;
  for (long k = n; k > 1; k -= 2) r *= k;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace dzid
