#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace dzid {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator, so two values are equal iff their representations are.
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// larger ones fall back to GMP.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : num_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value);         // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den);

  Rational(const Rational& o) : num_(o.num_), den_(o.den_), big_(o.big_ ? new mpq_class(*o.big_) : nullptr) {}
  Rational(Rational&& o) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&& o) noexcept = default;
  ~Rational() = default;

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  [[nodiscard]] BigInt numerator() const;
  [[nodiscard]] BigInt denominator() const;
  [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  [[nodiscard]] bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  [[nodiscard]] int sign() const;
  [[nodiscard]] Rational abs() const;
  [[nodiscard]] Rational inverse() const;

  [[nodiscard]] std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// GMP value, for interop.
  [[nodiscard]] mpq_class to_mpq() const;

 private:
  void assign(__int128 num, __int128 den);  // den > 0, not necessarily reduced
  void assign(mpq_class q);                 // canonical; demoted when it fits

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Falling factorial s(s-1)...(s-t+1); equals 1 for t = 0.
BigInt pochhammer(const BigInt& s, unsigned t);
BigInt factorial(unsigned n);
/// (2k-1)!! style double factorial with the convention (-1)!! = 1.
BigInt double_factorial(long n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace dzid
