#ifndef WORDSTAT_LOG_VALUE_HPP
#define WORDSTAT_LOG_VALUE_HPP

#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>

#include "wordstat/bigcomb.hpp"

namespace wordstat {

/// A nonnegative real held as its natural logarithm. Zero is represented by
/// -inf. Products are sums of logs; sums go through log-sum-exp.
class LogValue {
 public:
  constexpr LogValue() = default;

  static constexpr LogValue zero() { return LogValue(); }
  static constexpr LogValue one() { return from_log(0.0); }

  static constexpr LogValue from_log(double log_value) {
    LogValue v;
    v.log_ = log_value;
    return v;
  }

  static LogValue from_double(double value) {
    if (!(value >= 0.0)) throw std::domain_error("LogValue: negative or NaN value");
    return from_log(std::log(value));
  }

  static LogValue from_big(const BigInt& value) { return from_log(log_big(value)); }

  constexpr double log() const { return log_; }
  constexpr bool is_zero() const { return log_ == -std::numeric_limits<double>::infinity(); }
  double value() const { return std::exp(log_); }

  /// n-th root, i.e. exp(log / n).
  LogValue root(double n) const { return from_log(log_ / n); }
  LogValue pow(double e) const { return is_zero() ? zero() : from_log(log_ * e); }

  friend LogValue operator*(LogValue a, LogValue b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return from_log(a.log_ + b.log_);
  }

  friend LogValue operator/(LogValue a, LogValue b) {
    if (b.is_zero()) throw std::domain_error("LogValue: division by zero");
    if (a.is_zero()) return zero();
    return from_log(a.log_ - b.log_);
  }

  friend LogValue operator+(LogValue a, LogValue b) {
    if (a.log_ < b.log_) std::swap(a, b);
    if (b.is_zero()) return a;
    return from_log(a.log_ + std::log1p(std::exp(b.log_ - a.log_)));
  }

  LogValue& operator*=(LogValue o) { return *this = *this * o; }
  LogValue& operator+=(LogValue o) { return *this = *this + o; }

  friend constexpr std::partial_ordering operator<=>(LogValue a, LogValue b) {
    return a.log_ <=> b.log_;
  }
  friend constexpr bool operator==(LogValue a, LogValue b) { return a.log_ == b.log_; }

 private:
  double log_ = -std::numeric_limits<double>::infinity();
};

}  // namespace wordstat

#endif  // WORDSTAT_LOG_VALUE_HPP
