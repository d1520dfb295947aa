#pragma once

#include <cmath>
#include <utility>

namespace ovp::detail {

struct Min1D {
  double x = 0.0;
  double value = 0.0;
};

// Golden-section search on [lo, hi]. Assumes unimodal input; ties and flat
// stretches resolve toward the smaller parameter.
template <class F>
Min1D golden_min(F&& f, double lo, double hi, double xtol, int max_iter = 200) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > xtol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

// Uniform scan with n+1 nodes followed by golden refinement around the best
// cell. The scan guards against non-unimodal objectives.
template <class F>
Min1D scan_golden_min(F&& f, double lo, double hi, int n, double xtol) {
  if (n < 2) n = 2;
  double best_x = lo, best_v = f(lo);
  for (int i = 1; i <= n; ++i) {
    double x = lo + (hi - lo) * double(i) / double(n);
    double v = f(x);
    if (v < best_v) {
      best_v = v;
      best_x = x;
    }
  }
  double h = (hi - lo) / double(n);
  double a = std::max(lo, best_x - h);
  double b = std::min(hi, best_x + h);
  Min1D refined = golden_min(f, a, b, xtol);
  if (best_v < refined.value) return {best_x, best_v};
  return refined;
}

struct Min2D {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
};

// Coarse n-by-n grid over the box, then nested golden refinement on the
// neighborhood of the best node.
template <class F>
Min2D grid_golden_min(F&& f, double xlo, double xhi, double ylo, double yhi,
                      int n, double xtol) {
  if (n < 4) n = 4;
  Min2D best{xlo, ylo, f(xlo, ylo)};
  for (int i = 0; i <= n; ++i) {
    double x = xlo + (xhi - xlo) * double(i) / double(n);
    for (int j = 0; j <= n; ++j) {
      double y = ylo + (yhi - ylo) * double(j) / double(n);
      double v = f(x, y);
      if (v < best.value) best = {x, y, v};
    }
  }
  double hx = (xhi - xlo) / double(n), hy = (yhi - ylo) / double(n);
  double ax = std::max(xlo, best.x - 1.5 * hx), bx = std::min(xhi, best.x + 1.5 * hx);
  double ay = std::max(ylo, best.y - 1.5 * hy), by = std::min(yhi, best.y + 1.5 * hy);
  double inner_y = best.y;
  auto outer = [&](double x) {
    Min1D m = golden_min([&](double y) { return f(x, y); }, ay, by, xtol);
    inner_y = m.x;
    return m.value;
  };
  Min1D mx = golden_min(outer, ax, bx, xtol);
  double vy = outer(mx.x);
  Min2D refined{mx.x, inner_y, vy};
  if (best.value < refined.value) return best;
  return refined;
}

}  // namespace ovp::detail
