#include "showdown/piecewise_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "showdown/errors.hpp"

namespace showdown::numerics {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

double Polynomial::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::shifted(double d) const {
  // Repeated synthetic division (Taylor shift).
  std::vector<double> c = coeffs_;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = n - 1; k > i; --k) c[k - 1] += d * c[k];
  }
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator*=(double scale) {
  for (double& c : coeffs_) c *= scale;
  return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  std::vector<double> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

double Polynomial::integral(double t0, double t1) const {
  // Horner on the antiderivative sum c[k] t^{k+1}/(k+1)
  auto anti = [this](double t) {
    double acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      acc = acc * t + coeffs_[k] / static_cast<double>(k + 1);
    }
    return acc * t;
  };
  return anti(t1) - anti(t0);
}

PiecewisePoly::PiecewisePoly() : breaks_{0.0, 1.0}, pieces_{Polynomial::constant(0.0)} {}

PiecewisePoly::PiecewisePoly(std::vector<double> breaks, std::vector<Polynomial> pieces)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces)) {
  if (breaks_.size() != pieces_.size() + 1 || pieces_.empty()) {
    throw ContractViolation("PiecewisePoly: need exactly one more break than pieces");
  }
  if (breaks_.front() != 0.0 || breaks_.back() != 1.0) {
    throw ContractViolation("PiecewisePoly: breaks must span [0, 1]");
  }
  if (!std::is_sorted(breaks_.begin(), breaks_.end(), std::less_equal<>())) {
    throw ContractViolation("PiecewisePoly: breaks must be strictly increasing");
  }
}

PiecewisePoly PiecewisePoly::constant(double c) {
  return PiecewisePoly({0.0, 1.0}, {Polynomial::constant(c)});
}

std::size_t PiecewisePoly::piece_index(double x) const {
  const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  const auto idx = static_cast<std::size_t>(std::distance(breaks_.begin(), it));
  return std::min(idx == 0 ? 0 : idx - 1, pieces_.size() - 1);
}

double PiecewisePoly::operator()(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg << "PiecewisePoly: x = " << x << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  const std::size_t i = piece_index(x);
  return pieces_[i](x - breaks_[i]);
}

double PiecewisePoly::integral(double a, double b) const {
  const PiecewisePoly* self = this;
  return piecewise_product_integral(std::span(self, 1), a, b);
}

PiecewisePoly PiecewisePoly::refined(std::span<const double> extra) const {
  std::vector<double> merged = breaks_;
  for (double x : extra) {
    if (x > 0.0 && x < 1.0) merged.push_back(x);
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  std::vector<Polynomial> pieces;
  pieces.reserve(merged.size() - 1);
  for (std::size_t s = 0; s + 1 < merged.size(); ++s) {
    const std::size_t i = piece_index(merged[s]);
    pieces.push_back(pieces_[i].shifted(merged[s] - breaks_[i]));
  }
  return PiecewisePoly(std::move(merged), std::move(pieces));
}

PiecewisePoly PiecewisePoly::affine(double scale, double offset) const {
  PiecewisePoly out = *this;
  for (Polynomial& p : out.pieces_) {
    p *= scale;
    p += Polynomial::constant(offset);
  }
  return out;
}

PiecewisePoly operator*(const PiecewisePoly& lhs, const PiecewisePoly& rhs) {
  const PiecewisePoly a = lhs.refined(rhs.breaks_);
  const PiecewisePoly b = rhs.refined(a.breaks_);
  std::vector<Polynomial> pieces;
  pieces.reserve(a.pieces_.size());
  for (std::size_t i = 0; i < a.pieces_.size(); ++i) pieces.push_back(a.pieces_[i] * b.pieces_[i]);
  return PiecewisePoly(a.breaks_, std::move(pieces));
}

double piecewise_product_integral(std::span<const PiecewisePoly> factors, double a, double b) {
  if (!(a >= 0.0 && b <= 1.0 && a <= b)) {
    std::ostringstream msg;
    msg << "piecewise_product_integral: [" << a << ", " << b << "] not inside [0, 1]";
    throw DomainError(msg.str());
  }
  if (a == b) return 0.0;

  std::vector<double> cuts{a, b};
  for (const PiecewisePoly& f : factors) {
    for (double x : f.breaks()) {
      if (x > a && x < b) cuts.push_back(x);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double total = 0.0;
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const double lo = cuts[s];
    const double hi = cuts[s + 1];
    Polynomial product = Polynomial::constant(1.0);
    for (const PiecewisePoly& f : factors) {
      const auto& breaks = f.breaks();
      auto it = std::upper_bound(breaks.begin(), breaks.end(), lo);
      std::size_t i = static_cast<std::size_t>(std::distance(breaks.begin(), it)) - 1;
      i = std::min(i, f.pieces().size() - 1);
      product = product * f.pieces()[i].shifted(lo - breaks[i]);
    }
    total += product.integral(0.0, hi - lo);
  }
  return total;
}

}  // namespace showdown::numerics
