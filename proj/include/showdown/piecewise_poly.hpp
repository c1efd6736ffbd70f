#pragma once

#include <span>
#include <vector>

namespace showdown::numerics {

/// Dense polynomial sum c[k] t^k.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);

  static Polynomial constant(double c) { return Polynomial({c}); }
  // a + b t
  static Polynomial linear(double a, double b) { return Polynomial({a, b}); }

  const std::vector<double>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  double operator()(double t) const;

  // q(t) = p(t + d)
  Polynomial shifted(double d) const;

  Polynomial& operator*=(double scale);
  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  // integral of p over [t0, t1]
  double integral(double t0, double t1) const;

 private:
  std::vector<double> coeffs_;
};

/// Piecewise polynomial on [0, 1].
///
/// Piece i lives on [breaks[i], breaks[i+1]) and is stored in the local
/// variable t = x - breaks[i]; the last piece also owns x = 1. Products of
/// CDF factors a + b t with a, b >= 0 then have non-negative coefficients, so
/// segment integrals involve no cancellation.
class PiecewisePoly {
 public:
  PiecewisePoly();  // zero function
  // breaks must be strictly increasing from 0 to 1, one more than pieces
  PiecewisePoly(std::vector<double> breaks, std::vector<Polynomial> pieces);

  static PiecewisePoly constant(double c);

  const std::vector<double>& breaks() const { return breaks_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }

  // Right-continuous evaluation; x outside [0, 1] throws DomainError.
  double operator()(double x) const;

  double integral(double a, double b) const;

  // Same function re-expressed on the union of breaks and `extra`.
  PiecewisePoly refined(std::span<const double> extra) const;

  // scale * f + offset
  PiecewisePoly affine(double scale, double offset) const;

  friend PiecewisePoly operator*(const PiecewisePoly& lhs, const PiecewisePoly& rhs);

 private:
  std::size_t piece_index(double x) const;

  std::vector<double> breaks_;
  std::vector<Polynomial> pieces_;
};

/// Exact integral over [a, b] of the product of `factors`, segment by segment
/// over the merged breakpoints. An empty factor list integrates the constant 1.
double piecewise_product_integral(std::span<const PiecewisePoly> factors, double a, double b);

}  // namespace showdown::numerics
