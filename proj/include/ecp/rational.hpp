#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ecp {

/// Exact rational number on 64-bit numerator/denominator.
/// Weight arithmetic throughout the toolkit is exact; comparisons use
/// 128-bit cross multiplication so no overflow occurs at the sizes the
/// desk-scale instances produce.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  Rational operator+(const Rational& o) const {
    return Rational(checked(static_cast<__int128>(num_) * o.den_ +
                            static_cast<__int128>(o.num_) * den_),
                    checked(static_cast<__int128>(den_) * o.den_));
  }
  Rational operator-(const Rational& o) const {
    return Rational(checked(static_cast<__int128>(num_) * o.den_ -
                            static_cast<__int128>(o.num_) * den_),
                    checked(static_cast<__int128>(den_) * o.den_));
  }
  Rational operator*(const Rational& o) const {
    // Cross-reduce before multiplying to keep magnitudes small.
    long long g1 = std::gcd(num_, o.den_);
    long long g2 = std::gcd(o.num_, den_);
    long long a = g1 ? num_ / g1 : num_;
    long long b = g2 ? o.num_ / g2 : o.num_;
    long long c = g2 ? den_ / g2 : den_;
    long long d = g1 ? o.den_ / g1 : o.den_;
    return Rational(checked(static_cast<__int128>(a) * b),
                    checked(static_cast<__int128>(c) * d));
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return *this * Rational(o.den_, o.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ <
           static_cast<__int128>(o.num_) * den_;
  }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// Canonical text form: "n" when integral, else "n/d".
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "n" or "n/d". Throws std::invalid_argument on malformed input.
  static Rational parse(const std::string& s);

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  static long long checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("rational overflow");
    return static_cast<long long>(v);
  }

  long long num_;
  long long den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace ecp

template <>
struct std::hash<ecp::Rational> {
  std::size_t operator()(const ecp::Rational& r) const {
    return std::hash<long long>()(r.num()) * 1000003u ^
           std::hash<long long>()(r.den());
  }
};
