#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace e7sym {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are kept
/// inline; anything larger is promoted to a shared, immutable GMP rational and
/// demoted again as soon as a result fits. Nothing is ever rounded.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n) : Rational(static_cast<long long>(n)) {}  // NOLINT
  Rational(long long n) {  // NOLINT(google-explicit-constructor)
    if (n == kMin) {
      set_big(mpq_class(mpz_class(static_cast<signed long>(n))));
    } else {
      num_ = n;
    }
  }
  Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    *this = from_wide(n, d);
  }

  /// Parses "n", "-n" or "n/d" (whitespace not allowed).
  static Rational parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    mpq_class q;
    const std::string s(text);
    for (char c : s) {
      if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9'))) {
        throw std::invalid_argument("Rational: malformed '" + s + "'");
      }
    }
    const std::string cleaned = s.front() == '+' ? s.substr(1) : s;
    if (q.set_str(cleaned, 10) != 0) {
      throw std::invalid_argument("Rational: malformed '" + s + "'");
    }
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    return from_mpq(q);
  }

  [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_integer() const { return !big_ && den_ == 1; }
  [[nodiscard]] int sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }

  /// Always "num/den", e.g. "3/1", "-1/2".
  [[nodiscard]] std::string to_string() const {
    if (big_) {
      return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  [[nodiscard]] mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_class(static_cast<signed long>(num_)),
                mpz_class(static_cast<signed long>(den_)));
    return q;
  }

  [[nodiscard]] double to_double() const { return to_mpq().get_d(); }

  Rational operator-() const {
    if (big_) return from_mpq(-*big_);
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        return from_wide(static_cast<Wide>(a.num_) + b.num_, 1);
      }
      if (a.num_ == 0) return b;
      if (b.num_ == 0) return a;
      const Wide g = gcd_u(static_cast<UWide>(a.den_), static_cast<UWide>(b.den_));
      const Wide ad = a.den_ / g;
      const Wide bd = b.den_ / g;
      return from_wide(a.num_ * bd + b.num_ * ad, ad * b.den_);
    }
    return from_mpq(a.to_mpq() + b.to_mpq());
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.num_ == 0 || b.num_ == 0) return {};
      if (a.den_ == 1 && b.den_ == 1) {
        return from_wide(static_cast<Wide>(a.num_) * b.num_, 1);
      }
      const Wide g1 = gcd_u(abs_u(a.num_), static_cast<UWide>(b.den_));
      const Wide g2 = gcd_u(abs_u(b.num_), static_cast<UWide>(a.den_));
      const Wide n = (a.num_ / g1) * (b.num_ / g2);
      const Wide d = (a.den_ / g2) * (b.den_ / g1);
      return from_reduced(n, d);
    }
    return from_mpq(a.to_mpq() * b.to_mpq());
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    return a * b.inverse();
  }

  [[nodiscard]] Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: division by zero");
    if (big_) return from_mpq(1 / *big_);
    Rational r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical forms differ in representation
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      const Wide l = static_cast<Wide>(a.num_) * b.den_;
      const Wide r = static_cast<Wide>(b.num_) * a.den_;
      return l <=> r;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  using Wide = __int128;
  using UWide = unsigned __int128;
  static constexpr long long kMin = std::numeric_limits<long long>::min();
  static constexpr long long kMax = std::numeric_limits<long long>::max();

  static UWide abs_u(Wide v) { return v < 0 ? static_cast<UWide>(-v) : static_cast<UWide>(v); }

  static int ctz(UWide v) {
    const auto lo = static_cast<std::uint64_t>(v);
    if (lo != 0) return __builtin_ctzll(lo);
    return 64 + __builtin_ctzll(static_cast<std::uint64_t>(v >> 64));
  }

  static Wide gcd_u(UWide a, UWide b) {
    if (a == 0) return static_cast<Wide>(b);
    if (b == 0) return static_cast<Wide>(a);
    const int shift = ctz(a | b);
    a >>= ctz(a);
    do {
      b >>= ctz(b);
      if (a > b) std::swap(a, b);
      b -= a;
    } while (b != 0);
    return static_cast<Wide>(a << shift);
  }

  static bool fits(Wide v) { return v > kMin && v <= kMax; }

  static mpz_class to_mpz(Wide v) {
    const bool neg = v < 0;
    UWide u = abs_u(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
  }

  // n/d with d != 0, not necessarily reduced.
  static Rational from_wide(Wide n, Wide d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const Wide g = gcd_u(abs_u(n), static_cast<UWide>(d));
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return from_reduced(n, d);
  }

  static Rational from_reduced(Wide n, Wide d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Rational r;
    if (fits(n) && fits(d)) {
      r.num_ = static_cast<long long>(n);
      r.den_ = n == 0 ? 1 : static_cast<long long>(d);
      return r;
    }
    r.set_big(mpq_class(to_mpz(n), to_mpz(d)));
    return r;
  }

  static Rational from_mpq(const mpq_class& q) {
    Rational r;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != kMin) {
      r.num_ = n.get_si();
      r.den_ = d.get_si();
      return r;
    }
    r.set_big(q);
    return r;
  }

  void set_big(const mpq_class& q) {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(q);
  }

  long long num_ = 0;
  long long den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace e7sym
