#include "discord/optimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace discord {

namespace {

constexpr double kPi = 3.14159265358979323846;

inline void grid_point(int flat, int n_phi, int n_theta, double* theta,
                       double* phi) {
  const int i = flat / n_phi;
  const int j = flat % n_phi;
  // Offset theta off the poles where phi is degenerate.
  *theta = kPi * (i + 0.5) / n_theta;
  *phi = 2.0 * kPi * j / n_phi;
}

}  // namespace

GridBest scan_qubit_grid(const AngleObjective& f, int n_theta, int n_phi,
                         Execution exec) {
  const int total = n_theta * n_phi;
  double best_value = std::numeric_limits<double>::infinity();
  int best_flat = 0;

  if (exec == Execution::Parallel) {
#ifdef _OPENMP
#pragma omp parallel
    {
      double local_best = std::numeric_limits<double>::infinity();
      int local_flat = 0;
#pragma omp for schedule(static)
      for (int flat = 0; flat < total; ++flat) {
        double theta, phi;
        grid_point(flat, n_phi, n_theta, &theta, &phi);
        const double v = f(theta, phi);
        if (v < local_best || (v == local_best && flat < local_flat)) {
          local_best = v;
          local_flat = flat;
        }
      }
#pragma omp critical
      {
        if (local_best < best_value ||
            (local_best == best_value && local_flat < best_flat)) {
          best_value = local_best;
          best_flat = local_flat;
        }
      }
    }
#else
    exec = Execution::Serial;
#endif
  }
  if (exec == Execution::Serial) {
    for (int flat = 0; flat < total; ++flat) {
      double theta, phi;
      grid_point(flat, n_phi, n_theta, &theta, &phi);
      const double v = f(theta, phi);
      if (v < best_value) {
        best_value = v;
        best_flat = flat;
      }
    }
  }

  GridBest best;
  best.value = best_value;
  grid_point(best_flat, n_phi, n_theta, &best.theta, &best.phi);
  return best;
}

NelderMead2DResult nelder_mead_2d(
    const std::function<double(double, double)>& f, double x0, double y0,
    double step, int max_iterations, double ftol) {
  struct Vertex {
    double x, y, v;
  };
  std::array<Vertex, 3> s = {Vertex{x0, y0, f(x0, y0)},
                             Vertex{x0 + step, y0, f(x0 + step, y0)},
                             Vertex{x0, y0 + step, f(x0, y0 + step)}};
  auto by_value = [](const Vertex& a, const Vertex& b) { return a.v < b.v; };

  NelderMead2DResult res;
  int it = 0;
  for (; it < max_iterations; ++it) {
    std::sort(s.begin(), s.end(), by_value);
    const double spread = std::abs(s[2].v - s[0].v);
    if (spread <= ftol * (1.0 + std::abs(s[0].v))) {
      res.converged = true;
      break;
    }
    const double cx = (s[0].x + s[1].x) / 2.0;
    const double cy = (s[0].y + s[1].y) / 2.0;

    auto eval = [&](double a) {
      return Vertex{cx + a * (cx - s[2].x), cy + a * (cy - s[2].y),
                    f(cx + a * (cx - s[2].x), cy + a * (cy - s[2].y))};
    };
    Vertex refl = eval(1.0);
    if (refl.v < s[0].v) {
      Vertex expa = eval(2.0);
      s[2] = expa.v < refl.v ? expa : refl;
    } else if (refl.v < s[1].v) {
      s[2] = refl;
    } else {
      Vertex contr = refl.v < s[2].v ? eval(0.5) : eval(-0.5);
      if (contr.v < std::min(refl.v, s[2].v)) {
        s[2] = contr;
      } else {
        // Shrink toward the best vertex.
        for (int k = 1; k < 3; ++k) {
          s[k].x = s[0].x + 0.5 * (s[k].x - s[0].x);
          s[k].y = s[0].y + 0.5 * (s[k].y - s[0].y);
          s[k].v = f(s[k].x, s[k].y);
        }
      }
    }
  }
  std::sort(s.begin(), s.end(), by_value);
  res.value = s[0].v;
  res.x = s[0].x;
  res.y = s[0].y;
  res.iterations = it;
  return res;
}

}  // namespace discord
