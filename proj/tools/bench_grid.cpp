// Compares the OpenMP grid kernel against the serial reference on the
// geometric-discord objective and reports timings.

#include <chrono>
#include <cstdio>

#include "discord/measures.hpp"
#include "discord/states.hpp"

using namespace discord;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int n_theta = argc > 1 ? std::atoi(argv[1]) : 512;
  const int n_phi = argc > 2 ? std::atoi(argv[2]) : 1024;
  const BipartiteState state = random_state(2, 4, 42);

  auto f = [&](double theta, double phi) {
    return projection_distance_sq(state, qubit_basis(theta, phi));
  };

  auto t0 = Clock::now();
  const GridBest serial = scan_qubit_grid(f, n_theta, n_phi, Execution::Serial);
  const double t_serial = seconds_since(t0);

  t0 = Clock::now();
  const GridBest parallel =
      scan_qubit_grid(f, n_theta, n_phi, Execution::Parallel);
  const double t_parallel = seconds_since(t0);

  std::printf("grid %d x %d evaluations of ||rho - Pi(rho)||^2\n", n_theta,
              n_phi);
  std::printf("serial:   %.3f s  (min %.12g at theta=%.6f phi=%.6f)\n",
              t_serial, serial.value, serial.theta, serial.phi);
  std::printf("parallel: %.3f s  (min %.12g at theta=%.6f phi=%.6f)\n",
              t_parallel, parallel.value, parallel.theta, parallel.phi);
  std::printf("speedup:  %.2fx\n", t_serial / t_parallel);

  const bool same = serial.value == parallel.value &&
                    serial.theta == parallel.theta &&
                    serial.phi == parallel.phi;
  std::printf("kernels agree: %s\n", same ? "yes" : "NO");
  return same ? 0 : 1;
}
