// Copyright 2026 the qfc developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include "qfc/errors.hpp"

namespace qfc {

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

struct SimplexOptions {
  double ftol = 1e-9;          // absolute improvement threshold
  std::size_t max_evaluations = 100000;
  double initial_step = 0.1;   // per-coordinate simplex extent
  int restarts = 2;            // re-seed simplex around the incumbent
};

/// Nelder-Mead minimizer. Deterministic: vertex ordering ties resolve by
/// index, the initial simplex is axis-aligned, and restarts shrink the
/// step by 0.25x around the best point found so far.
inline SimplexResult minimize_simplex(const std::function<double(const std::vector<double>&)>& f,
                                      std::vector<double> x0, SimplexOptions opt = {}) {
  const std::size_t n = x0.size();
  if (n == 0) throw domain_error("minimize_simplex: empty parameter vector");

  SimplexResult result;
  result.x = x0;
  result.value = f(x0);
  result.evaluations = 1;

  double step = opt.initial_step;
  for (int round = 0; round <= opt.restarts; ++round, step *= 0.25) {
    std::vector<std::vector<double>> pts(n + 1, result.x);
    std::vector<double> vals(n + 1);
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
    for (std::size_t i = 0; i <= n; ++i) {
      vals[i] = (i == 0) ? result.value : f(pts[i]);
      if (i != 0) ++result.evaluations;
    }

    std::vector<std::size_t> order(n + 1);
    std::iota(order.begin(), order.end(), 0);
    auto sort_order = [&]() {
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    };

    while (result.evaluations < opt.max_evaluations) {
      sort_order();
      const std::size_t best = order[0], worst = order[n], second_worst = order[n - 1];
      if (vals[worst] - vals[best] < opt.ftol) {
        result.converged = true;
        break;
      }

      std::vector<double> centroid(n, 0.0);
      for (std::size_t i = 0; i <= n; ++i) {
        if (i == worst) continue;
        for (std::size_t d = 0; d < n; ++d) centroid[d] += pts[i][d];
      }
      for (double& c : centroid) c /= static_cast<double>(n);

      auto blend = [&](double coeff) {
        std::vector<double> p(n);
        for (std::size_t d = 0; d < n; ++d)
          p[d] = centroid[d] + coeff * (pts[worst][d] - centroid[d]);
        return p;
      };

      const std::vector<double> refl = blend(-1.0);
      const double refl_val = f(refl);
      ++result.evaluations;

      if (refl_val < vals[best]) {
        const std::vector<double> expd = blend(-2.0);
        const double expd_val = f(expd);
        ++result.evaluations;
        if (expd_val < refl_val) {
          pts[worst] = expd;
          vals[worst] = expd_val;
        } else {
          pts[worst] = refl;
          vals[worst] = refl_val;
        }
      } else if (refl_val < vals[second_worst]) {
        pts[worst] = refl;
        vals[worst] = refl_val;
      } else {
        const bool outside = refl_val < vals[worst];
        const std::vector<double> contr = blend(outside ? -0.5 : 0.5);
        const double contr_val = f(contr);
        ++result.evaluations;
        if (contr_val < std::min(refl_val, vals[worst])) {
          pts[worst] = contr;
          vals[worst] = contr_val;
        } else {
          // Shrink toward the best vertex.
          for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            for (std::size_t d = 0; d < n; ++d)
              pts[i][d] = pts[best][d] + 0.5 * (pts[i][d] - pts[best][d]);
            vals[i] = f(pts[i]);
            ++result.evaluations;
          }
        }
      }
    }

    sort_order();
    if (vals[order[0]] < result.value) {
      result.value = vals[order[0]];
      result.x = pts[order[0]];
    }
  }
  return result;
}

/// Golden-section minimum of a 1-D unimodal function on [lo, hi].
inline double minimize_golden(const std::function<double(double)>& f, double lo, double hi,
                              double xtol = 1e-10, int max_iter = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < max_iter && (b - a) > xtol * (1.0 + std::abs(a) + std::abs(b)); ++i) {
    if (fc < fd) {
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
  return 0.5 * (a + b);
}

}  // namespace qfc
