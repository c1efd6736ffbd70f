#pragma once

#include <compare>
#include <map>

namespace showdown::numerics {

/// Exact exponential polynomial f(x) = sum c[j,k] x^j e^{k x}, with j, k >= 0.
///
/// The family is closed under +, * and integration, which is what lets the
/// win-probability recursions of the sequential game be carried out
/// symbolically. Coefficients are kept in extended precision: expanded powers
/// of 1 + e^x (x - 1) cancel heavily (term magnitudes ~1e6 for the 9th power
/// near x = 0.87) and double storage would lose ~1e-10 absolute.
class ExpPoly {
 public:
  using Coeff = long double;

  struct Key {
    int power = 0;  // j: exponent of x
    int rate = 0;   // k: exponent rate of e^{k x}

    auto operator<=>(const Key&) const = default;
  };

  using Terms = std::map<Key, Coeff>;

  ExpPoly() = default;

  static ExpPoly constant(Coeff c);
  static ExpPoly term(int power, int rate, Coeff c = 1.0L);
  // 1 + e^x (x - 1): probability of busting with greed threshold x
  static ExpPoly bust_prob();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_power() const;
  int max_rate() const;

  ExpPoly& operator+=(const ExpPoly& other);
  ExpPoly& operator-=(const ExpPoly& other);
  ExpPoly& operator*=(const ExpPoly& other);
  ExpPoly& operator*=(Coeff scale);

  friend ExpPoly operator+(ExpPoly lhs, const ExpPoly& rhs) { return lhs += rhs; }
  friend ExpPoly operator-(ExpPoly lhs, const ExpPoly& rhs) { return lhs -= rhs; }
  friend ExpPoly operator*(const ExpPoly& lhs, const ExpPoly& rhs);
  friend ExpPoly operator*(ExpPoly lhs, Coeff scale) { return lhs *= scale; }
  friend ExpPoly operator*(Coeff scale, ExpPoly rhs) { return rhs *= scale; }

  ExpPoly pow(int exponent) const;

  double operator()(double x) const { return static_cast<double>(eval(x)); }
  long double eval(long double x) const;

  /// Antiderivative with zero constant term, via the unrolled recurrence
  /// int x^j e^{kx} = x^j e^{kx}/k - (j/k) int x^{j-1} e^{kx}.
  ExpPoly antiderivative() const;

  double integral(double a, double b) const;

 private:
  void add_term(Key key, Coeff c);

  Terms terms_;
};

}  // namespace showdown::numerics
