#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace paveset {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Extended rational scalar: an exact rational number or one of +inf / -inf.
///
/// Conventions used throughout the library:
///   * 0 * (+-inf) == 0 (product of a zero weight with an infinite value vanishes),
///   * inf + finite == inf, and inf + inf == inf,
///   * inf - inf is a logic error; callers that can hit it must branch first.
/// The order is total: -inf < every finite value < +inf.
class ExtRat {
 public:
  ExtRat() : kind_(Kind::Finite), v_(0) {}
  ExtRat(long long n) : kind_(Kind::Finite), v_(n) {}  // NOLINT: implicit by design
  ExtRat(long long num, long long den);
  explicit ExtRat(BigRat v) : kind_(Kind::Finite), v_(std::move(v)) {}

  static ExtRat inf();
  static ExtRat neg_inf();

  /// Accepts "p", "p/q", "inf", "-inf", "+inf" with optional sign on p. Throws Error("Parse").
  static ExtRat parse(const std::string& s);

  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_zero() const { return kind_ == Kind::Finite && v_ == 0; }
  bool is_negative() const;

  /// Finite payload; calling it on an infinity is a logic error.
  const BigRat& rat() const;

  ExtRat operator-() const;
  ExtRat operator+(const ExtRat& o) const;
  ExtRat operator-(const ExtRat& o) const;
  ExtRat operator*(const ExtRat& o) const;
  /// Division by a finite nonzero value only.
  ExtRat operator/(const ExtRat& o) const;

  ExtRat& operator+=(const ExtRat& o) { return *this = *this + o; }

  bool operator==(const ExtRat& o) const;
  std::strong_ordering operator<=>(const ExtRat& o) const;

  /// Canonical text form: reduced "p/q", "p" when the denominator is 1, "inf"/"-inf".
  std::string str() const;

 private:
  enum class Kind : std::uint8_t { Finite, PosInf, NegInf };
  explicit ExtRat(Kind k) : kind_(k), v_(0) {}

  Kind kind_;
  BigRat v_;
};

inline ExtRat min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }
inline ExtRat max(const ExtRat& a, const ExtRat& b) { return a < b ? b : a; }

/// floor(v) for finite v.
BigInt rat_floor(const BigRat& v);

}  // namespace paveset
