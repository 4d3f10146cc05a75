#ifndef REGAL_RATFUNC_HPP
#define REGAL_RATFUNC_HPP

#include <string>

#include "regal/qpoly.hpp"

namespace regal {

/// Rational function in one variable: num/den, den monic, gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(QPoly::constant(1)) {}
  RatFunc(QPoly num, QPoly den);
  explicit RatFunc(const QPoly& p) : num_(p), den_(QPoly::constant(1)) {}
  explicit RatFunc(const Rat& a) : num_(QPoly::constant(a)), den_(QPoly::constant(1)) {}

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc inv() const;
  Rat eval(const Rat& t) const;  // throws PoleAtPoint if den(t) = 0
  std::string str(const std::string& var = "T") const;

 private:
  QPoly num_, den_;
};

}  // namespace regal

#endif
