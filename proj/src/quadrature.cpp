#include "showdown/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "showdown/errors.hpp"

namespace showdown::numerics {
namespace {

// Kronrod abscissae on [-1, 1] (positive half, descending); odd indices are
// shared with the 7-point Gauss rule.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool resolved;  // error estimate is at roundoff level
  int depth = 0;

  bool operator<(const Panel& other) const { return error < other.error; }
};

struct Rule {
  double kronrod;
  double gauss;
  double magnitude;  // K15 applied to |f|
};

Rule gauss_kronrod(const ScalarFn& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  auto eval = [&](double x) {
    const double fx = f(x);
    if (!std::isfinite(fx)) {
      std::ostringstream msg;
      msg << "integrate_adaptive: non-finite integrand " << fx << " at x = " << x;
      throw DomainError(msg.str());
    }
    return fx;
  };

  const double f_center = eval(center);
  double kronrod = kKronrodWeights[7] * f_center;
  double gauss = kGaussWeights[3] * f_center;
  double magnitude = kKronrodWeights[7] * std::abs(f_center);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double f1 = eval(center - dx);
    const double f2 = eval(center + dx);
    kronrod += kKronrodWeights[i] * (f1 + f2);
    magnitude += kKronrodWeights[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (f1 + f2);
  }
  return {kronrod * half, gauss * half, magnitude * std::abs(half)};
}

// K15 on the whole panel and on both halves. The G7/K15 gap alone can vanish
// by accident when a kink sits at an unlucky spot, so the whole-versus-halves
// gap is folded into the estimate too.
Panel evaluate_panel(const ScalarFn& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const Rule whole = gauss_kronrod(f, a, b);
  const Rule left = gauss_kronrod(f, a, mid);
  const Rule right = gauss_kronrod(f, mid, b);

  const double value = left.kronrod + right.kronrod;
  double error = std::max(std::abs(left.kronrod - left.gauss) + std::abs(right.kronrod - right.gauss),
                          std::abs(whole.kronrod - value));
  const double floor =
      50.0 * std::numeric_limits<double>::epsilon() * (left.magnitude + right.magnitude);
  const bool resolved = error <= floor;
  if (resolved) error = floor;
  return {a, b, value, error, resolved};
}

}  // namespace

QuadratureResult integrate_adaptive_detailed(const ScalarFn& f, double a, double b, double tol) {
  if (!(a <= b)) {
    std::ostringstream msg;
    msg << "integrate_adaptive: reversed interval [" << a << ", " << b << "]";
    throw DomainError(msg.str());
  }
  if (!(tol > 0.0)) throw DomainError("integrate_adaptive: tolerance must be positive");
  if (a == b) return {0.0, 0.0, 0};

  constexpr int kMaxPanels = 20000;
  constexpr int kMaxDepth = 60;

  std::priority_queue<Panel> panels;
  panels.push(evaluate_panel(f, a, b));
  double total_error = panels.top().error;
  int count = 1;

  while (total_error > tol) {
    Panel worst = panels.top();
    if (worst.resolved) break;  // everything left is roundoff
    const double mid = 0.5 * (worst.a + worst.b);
    if (count >= kMaxPanels || worst.depth >= kMaxDepth || mid <= worst.a || mid >= worst.b) {
      std::ostringstream msg;
      msg << "integrate_adaptive: no convergence on [" << a << ", " << b
          << "], error estimate " << total_error << " > tol " << tol << " after " << count
          << " panels (worst near x = " << mid << ")";
      throw AccuracyError(msg.str());
    }
    panels.pop();
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    left.depth = right.depth = worst.depth + 1;
    total_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
  }

  // Sum from scratch; the running error total drifts.
  QuadratureResult result;
  result.intervals = static_cast<int>(panels.size());
  while (!panels.empty()) {
    result.value += panels.top().value;
    result.error += panels.top().error;
    panels.pop();
  }
  return result;
}

}  // namespace showdown::numerics
