#include "showdown/exp_poly.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "showdown/errors.hpp"

namespace showdown::numerics {

ExpPoly ExpPoly::constant(Coeff c) { return term(0, 0, c); }

ExpPoly ExpPoly::term(int power, int rate, Coeff c) {
  if (power < 0 || rate < 0) throw DomainError("ExpPoly: negative power or rate");
  ExpPoly p;
  p.add_term({power, rate}, c);
  return p;
}

ExpPoly ExpPoly::bust_prob() {
  // 1 - e^x + x e^x
  ExpPoly p = constant(1.0L);
  p.add_term({0, 1}, -1.0L);
  p.add_term({1, 1}, 1.0L);
  return p;
}

int ExpPoly::max_power() const {
  int m = 0;
  for (const auto& [key, c] : terms_) m = std::max(m, key.power);
  return m;
}

int ExpPoly::max_rate() const {
  int m = 0;
  for (const auto& [key, c] : terms_) m = std::max(m, key.rate);
  return m;
}

void ExpPoly::add_term(Key key, Coeff c) {
  if (c == 0.0L) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0L) terms_.erase(it);
  }
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

ExpPoly& ExpPoly::operator*=(const ExpPoly& other) {
  *this = *this * other;
  return *this;
}

ExpPoly& ExpPoly::operator*=(Coeff scale) {
  if (scale == 0.0L) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scale;
  return *this;
}

ExpPoly operator*(const ExpPoly& lhs, const ExpPoly& rhs) {
  ExpPoly out;
  for (const auto& [ka, ca] : lhs.terms_) {
    for (const auto& [kb, cb] : rhs.terms_) {
      out.add_term({ka.power + kb.power, ka.rate + kb.rate}, ca * cb);
    }
  }
  return out;
}

ExpPoly ExpPoly::pow(int exponent) const {
  if (exponent < 0) throw DomainError("ExpPoly::pow: negative exponent");
  ExpPoly result = constant(1.0L);
  ExpPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

long double ExpPoly::eval(long double x) const {
  const int powers = max_power() + 1;
  const int rates = max_rate() + 1;
  std::vector<long double> x_pow(powers, 1.0L);
  for (int j = 1; j < powers; ++j) x_pow[j] = x_pow[j - 1] * x;
  std::vector<long double> exp_rate(rates, 1.0L);
  for (int k = 1; k < rates; ++k) exp_rate[k] = std::exp(static_cast<long double>(k) * x);

  long double sum = 0.0L;
  for (const auto& [key, c] : terms_) sum += c * x_pow[key.power] * exp_rate[key.rate];
  return sum;
}

ExpPoly ExpPoly::antiderivative() const {
  ExpPoly out;
  for (const auto& [key, c] : terms_) {
    const int j = key.power;
    const int k = key.rate;
    if (k == 0) {
      out.add_term({j + 1, 0}, c / static_cast<Coeff>(j + 1));
      continue;
    }
    // e^{kx} sum_{i=0..j} (-1)^i j!/(j-i)! x^{j-i} / k^{i+1}
    Coeff factor = c / static_cast<Coeff>(k);
    for (int i = 0; i <= j; ++i) {
      out.add_term({j - i, k}, factor);
      factor *= -static_cast<Coeff>(j - i) / static_cast<Coeff>(k);
    }
  }
  return out;
}

double ExpPoly::integral(double a, double b) const {
  const ExpPoly anti = antiderivative();
  return static_cast<double>(anti.eval(b) - anti.eval(a));
}

}  // namespace showdown::numerics
