#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ffactor {

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit from integers is intended
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    normalize();
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_integer() const { return den_ == 1; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    const __int128 lhs = static_cast<__int128>(x.num_) * y.den_;
    const __int128 rhs = static_cast<__int128>(y.num_) * x.den_;
    return lhs <=> rhs;
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return from_wide(static_cast<__int128>(x.num_) * y.den_ + static_cast<__int128>(y.num_) * x.den_,
                     static_cast<__int128>(x.den_) * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return from_wide(static_cast<__int128>(x.num_) * y.den_ - static_cast<__int128>(y.num_) * x.den_,
                     static_cast<__int128>(x.den_) * y.den_);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return from_wide(static_cast<__int128>(x.num_) * y.num_, static_cast<__int128>(x.den_) * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw std::domain_error("rational division by zero");
    return from_wide(static_cast<__int128>(x.num_) * y.den_, static_cast<__int128>(x.den_) * y.num_);
  }

  /// Largest integer not exceeding the value.
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p" or "p/q".
  static Rational parse(const std::string& text) {
    std::size_t used = 0;
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) {
        const std::int64_t v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return Rational(v);
      }
      const std::string head = text.substr(0, slash);
      const std::string tail = text.substr(slash + 1);
      std::size_t used_tail = 0;
      const std::int64_t p = std::stoll(head, &used);
      const std::int64_t q = std::stoll(tail, &used_tail);
      if (used != head.size() || used_tail != tail.size()) throw std::invalid_argument(text);
      return Rational(p, q);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed rational '" + text + "'");
    }
  }

 private:
  static Rational from_wide(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
    constexpr __int128 lim = INT64_MAX;
    if (num > lim || num < -lim || den > lim) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

/// A rational extended with +infinity. Toughness-type minima are infinite when
/// no cutset qualifies.
class ExtRational {
 public:
  constexpr ExtRational() = default;
  ExtRational(Rational value) : value_(value) {}  // NOLINT
  ExtRational(std::int64_t value) : value_(value) {}  // NOLINT

  static ExtRational infinity() {
    ExtRational r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  const Rational& value() const {
    if (infinite_) throw std::logic_error("infinite value has no finite representation");
    return value_;
  }

  friend bool operator==(const ExtRational& x, const ExtRational& y) {
    if (x.infinite_ || y.infinite_) return x.infinite_ == y.infinite_;
    return x.value_ == y.value_;
  }
  friend std::strong_ordering operator<=>(const ExtRational& x, const ExtRational& y) {
    if (x.infinite_ || y.infinite_) return x.infinite_ <=> y.infinite_;
    return x.value_ <=> y.value_;
  }

  std::string str() const { return infinite_ ? "inf" : value_.str(); }

  static ExtRational parse(const std::string& text) {
    if (text == "inf") return infinity();
    return Rational::parse(text);
  }

 private:
  Rational value_;
  bool infinite_ = false;
};

inline std::ostream& operator<<(std::ostream& os, const ExtRational& r) { return os << r.str(); }

using ToughnessValue = ExtRational;

}  // namespace ffactor
