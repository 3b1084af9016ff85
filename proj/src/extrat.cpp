#include "paveset/extrat.hpp"

#include "paveset/error.hpp"

namespace paveset {

ExtRat::ExtRat(long long num, long long den) : kind_(Kind::Finite) {
  if (den == 0) throw Error("Parse", "zero denominator");
  v_ = BigRat(BigInt(num), BigInt(den));
}

ExtRat ExtRat::inf() { return ExtRat(Kind::PosInf); }
ExtRat ExtRat::neg_inf() { return ExtRat(Kind::NegInf); }

ExtRat ExtRat::parse(const std::string& s) {
  if (s == "inf" || s == "+inf") return inf();
  if (s == "-inf") return neg_inf();
  if (s.empty()) throw Error("Parse", "empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return ExtRat(BigRat(BigInt(s)));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw Error("Parse", "zero denominator in \"" + s + "\"");
    return ExtRat(BigRat(num, den));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error("Parse", "bad rational literal \"" + s + "\"");
  }
}

bool ExtRat::is_negative() const {
  if (kind_ == Kind::NegInf) return true;
  if (kind_ == Kind::PosInf) return false;
  return v_ < 0;
}

const BigRat& ExtRat::rat() const {
  if (kind_ != Kind::Finite) throw Error("Internal", "rat() on an infinite value");
  return v_;
}

ExtRat ExtRat::operator-() const {
  switch (kind_) {
    case Kind::PosInf: return neg_inf();
    case Kind::NegInf: return inf();
    default: return ExtRat(BigRat(-v_));
  }
}

ExtRat ExtRat::operator+(const ExtRat& o) const {
  if (kind_ == Kind::Finite && o.kind_ == Kind::Finite) return ExtRat(BigRat(v_ + o.v_));
  if (is_pos_inf() && o.is_neg_inf()) throw Error("Internal", "inf + -inf");
  if (is_neg_inf() && o.is_pos_inf()) throw Error("Internal", "-inf + inf");
  return is_finite() ? o : *this;
}

ExtRat ExtRat::operator-(const ExtRat& o) const { return *this + (-o); }

ExtRat ExtRat::operator*(const ExtRat& o) const {
  if (is_zero() || o.is_zero()) return ExtRat(0);  // 0 * inf == 0 by convention
  if (kind_ == Kind::Finite && o.kind_ == Kind::Finite) return ExtRat(BigRat(v_ * o.v_));
  bool neg = is_negative() != o.is_negative();
  return neg ? neg_inf() : inf();
}

ExtRat ExtRat::operator/(const ExtRat& o) const {
  if (!o.is_finite() || o.is_zero()) throw Error("Internal", "division by zero or infinity");
  if (kind_ != Kind::Finite) return o.is_negative() ? -*this : *this;
  return ExtRat(BigRat(v_ / o.v_));
}

bool ExtRat::operator==(const ExtRat& o) const {
  return kind_ == o.kind_ && (kind_ != Kind::Finite || v_ == o.v_);
}

std::strong_ordering ExtRat::operator<=>(const ExtRat& o) const {
  auto rank = [](Kind k) { return k == Kind::NegInf ? 0 : (k == Kind::Finite ? 1 : 2); };
  if (kind_ != o.kind_) return rank(kind_) <=> rank(o.kind_);
  if (kind_ != Kind::Finite) return std::strong_ordering::equal;
  if (v_ < o.v_) return std::strong_ordering::less;
  if (o.v_ < v_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtRat::str() const {
  if (is_pos_inf()) return "inf";
  if (is_neg_inf()) return "-inf";
  BigInt num = boost::multiprecision::numerator(v_);
  BigInt den = boost::multiprecision::denominator(v_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt rat_floor(const BigRat& v) {
  BigInt num = boost::multiprecision::numerator(v);
  BigInt den = boost::multiprecision::denominator(v);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

}  // namespace paveset
