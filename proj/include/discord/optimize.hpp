#ifndef DISCORD_OPTIMIZE_HPP
#define DISCORD_OPTIMIZE_HPP

#include <functional>

namespace discord {

enum class Execution { Serial, Parallel };

// Objective over Bloch angles (theta in [0,pi], phi in [0,2pi)).
using AngleObjective = std::function<double(double, double)>;

struct GridBest {
  double value = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

// Dense scan over an n_theta x n_phi Bloch-angle grid. The parallel kernel
// and the serial reference return bit-identical results (argmin ties broken
// by flat grid index).
GridBest scan_qubit_grid(const AngleObjective& f, int n_theta, int n_phi,
                         Execution exec);

struct NelderMead2DResult {
  double value = 0.0;
  double x = 0.0;
  double y = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Derivative-free local refinement of a smooth 2-d objective.
NelderMead2DResult nelder_mead_2d(const std::function<double(double, double)>& f,
                                  double x0, double y0, double step,
                                  int max_iterations, double ftol);

}  // namespace discord

#endif
