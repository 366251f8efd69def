#ifndef DISCORD_MEASURES_HPP
#define DISCORD_MEASURES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "discord/channels.hpp"
#include "discord/optimize.hpp"
#include "discord/qmat.hpp"
#include "discord/states.hpp"

namespace discord {

// Values below this magnitude that come out slightly negative are clamped.
constexpr double kZeroClamp = 1e-9;

// von Neumann entropy in bits, eigenvalues clamped at 0.
double vn_entropy(const Mat& rho);

// I(A:B) = S(rho_A) + S(rho_B) - S(rho_AB), in bits.
double mutual_info(const BipartiteState& state);

struct TriDims {
  int dA = 1;  // A' (conditioning system)
  int dB = 1;
  int dC = 1;
};

// I(B:C|A') = I(A'C:B) - I(A':B) on a state ordered (A', B, C).
double cond_mutual_info(const Mat& rho, const TriDims& dims);

// I(A:B)_rho - I(A:B)_{Lambda_A(rho)}; nonnegative by data processing.
double info_loss(const BipartiteState& state, const Channel& ch_on_a);

struct OptConfig {
  int grid_theta = 64;
  int grid_phi = 128;
  int refine_iters = 500;
  int restarts = 32;       // for d_A > 2 unitary search
  double ftol = 1e-14;
  Execution exec = Execution::Parallel;
  int max_dim_a = 4;
  std::uint64_t seed = 12345;  // restarts for d_A > 2
};

struct OptimizerDiag {
  int restarts = 0;
  int grid_theta = 0;
  int grid_phi = 0;
  int refine_iters = 0;
  bool converged = true;
};

struct MeasureReport {
  double value = 0.0;
  MeasurementBasis argmin_basis;
  std::string arg_desc;
  OptimizerDiag optimizer;
  bool clamped = false;
};

struct ChannelClass {
  enum class Tag { Projective, POVMBased } tag = Tag::Projective;
  int max_outcomes = 0;  // POVMBased only; 0 means d_A^2
};

// Entropic discord (projective or POVM-based class): upper-bound estimate of
// inf over the class of info_loss.
MeasureReport discord(const BipartiteState& state, const ChannelClass& cls,
                      const OptConfig& cfg = {});

// Geometric discord: min over complete von Neumann projections on A of
// ||rho - Pi_A(rho)||_2^2 (no extra normalization factor).
MeasureReport geometric_discord(const BipartiteState& state,
                                const OptConfig& cfg = {});

// Exact closed form for d_A = 2 (any d_B): with rho = (1/2)(I (x) C_0 +
// sum_k sigma_k (x) C_k), the minimum over Bloch directions is
// Tr(rho^2) - ||C_0||^2/2 - lambda_max(K)/2, K_kl = Tr(C_k C_l).
double geometric_discord_qubit_closed_form(const BipartiteState& state);

struct TildeConfig {
  int n_random_channels = 12;
  int max_dout = 4;
  OptConfig opt;
};

// Sampled lower bound on sup over channels on B of the geometric discord of
// the image state. Always samples the identity channel.
MeasureReport tilde_geometric_discord(const BipartiteState& state,
                                      const TildeConfig& cfg,
                                      std::uint64_t seed);

struct ScalingReport {
  double before = 0.0;
  double after = 0.0;
  double ratio = 0.0;          // after / before (0 if before == 0)
  double ancilla_purity = 0.0; // Tr(sigma^2)
  double defect = 0.0;         // |after - before * purity|
  bool law_holds = false;      // defect <= 1e-8
};

// Geometric discord before/after attaching sigma on B.
ScalingReport scaling_demo(const BipartiteState& state, const Mat& sigma,
                           const OptConfig& cfg = {});

enum class MeasureKind { Entropic, Geometric };

struct AuditRow {
  int trial = 0;
  std::uint64_t seed = 0;
  double before = 0.0;
  double after = 0.0;
  double delta = 0.0;  // after - before; positive means increase
  std::string channel_desc;
};

// Monotonicity audit under random channels on B. For the geometric measure
// the ancilla-discard rows that provably increase the value are appended
// after the random trials.
std::vector<AuditRow> monotonicity_audit(MeasureKind kind, int n_trials,
                                         const DimPair& dims,
                                         std::uint64_t seed,
                                         const OptConfig& cfg = {});

// Shared helper: squared HS distance ||rho - Pi_A(rho)||_2^2 for an explicit
// basis (no optimization).
double projection_distance_sq(const BipartiteState& state,
                              const MeasurementBasis& basis);

// info_loss specialization for an explicit projective basis on A.
double projective_info_loss(const BipartiteState& state,
                            const MeasurementBasis& basis);

// The qubit basis {v0, v1} for Bloch angles (theta, phi).
MeasurementBasis qubit_basis(double theta, double phi);

}  // namespace discord

#endif
