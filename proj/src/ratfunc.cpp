#include "regal/ratfunc.hpp"

#include "regal/errors.hpp"

namespace regal {

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail("DivisionByZero", "rational function with zero denominator");
  QPoly g = QPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = QPoly::exact_div(num_, g);
    den_ = QPoly::exact_div(den_, g);
  }
  Rat lc = den_.lc();
  if (lc != 1) {
    Rat inv = Rat(1) / lc;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) fail("DivisionByZero", "rational function division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inv() const {
  if (is_zero()) fail("DivisionByZero", "inverse of zero rational function");
  return RatFunc(den_, num_);
}

Rat RatFunc::eval(const Rat& t) const {
  Rat d = den_.eval(t);
  if (d == 0) fail("PoleAtPoint", "rational function has a pole at " + rat_str(t));
  return num_.eval(t) / d;
}

std::string RatFunc::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace regal
