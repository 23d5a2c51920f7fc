#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace bwcv {

/// Arbitrary-precision rational number, always held in canonical form
/// (lowest terms, positive denominator). Every probability, budget and
/// payment in this library is a Rational; floating point is never used.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(int n) : value_(n) {}        // NOLINT: implicit by design
  Rational(long n) : value_(n) {}       // NOLINT
  Rational(long long n) : value_(static_cast<long>(n)) {}  // NOLINT

  Rational(long numerator, long denominator) {
    if (denominator == 0) {
      throw std::invalid_argument("Rational: zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
  }

  explicit Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
  }

  /// Parses "p/q" or a plain integer "p". Throws std::invalid_argument on
  /// malformed input or zero denominator.
  static Rational parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) {
        return Rational(mpq_class(mpz_class(text)));
      }
      mpz_class num(text.substr(0, slash));
      mpz_class den(text.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return Rational(std::move(q));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
  }

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return value_ == 0; }

  /// Canonical "numerator/denominator" string, denominator always explicit
  /// (e.g. "19/40", "1/1", "-3/7"). This is the on-disk format.
  std::string str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  long to_long() const {
    if (!is_integer()) throw std::logic_error("Rational: not an integer: " + str());
    if (!value_.get_num().fits_slong_p()) throw std::overflow_error("Rational: out of long range");
    return value_.get_num().get_si();
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.value_ == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(mpq_class(a.value_ / b.value_));
  }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

 private:
  mpq_class value_;
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

template <typename Stream>
Stream& operator<<(Stream& os, const Rational& r) {
  os << r.str();
  return os;
}

}  // namespace bwcv
