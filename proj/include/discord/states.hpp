#ifndef DISCORD_STATES_HPP
#define DISCORD_STATES_HPP

#include <cstdint>
#include <vector>

#include "discord/qmat.hpp"

namespace discord {

// Density matrix on A (x) B; party A is always the first tensor factor and is
// the measured party in all discord quantities.
struct BipartiteState {
  Mat rho;
  DimPair dims;

  BipartiteState() = default;
  BipartiteState(Mat r, DimPair d);  // validates

  Mat reduced_a() const { return partial_trace(rho, dims, Side::A); }
  Mat reduced_b() const { return partial_trace(rho, dims, Side::B); }
};

// Classical-quantum specification: sum_i p_i |i><i| (x) rho_i.
struct CQSpec {
  std::vector<double> probs;
  std::vector<CVec> basis;   // orthonormal states of A
  std::vector<Mat> blocks;   // density matrices on B
};

BipartiteState cq_state(const CQSpec& spec);

// (|00><00| + |11><11|)/2, the classical-classical two-qubit state.
BipartiteState example_cc_state();

// (|0><0| (x) |0><0| + |+><+| (x) |1><1|)/2; the image of the
// classical-classical state under the discord-creating channel on A.
BipartiteState example_post_channel_state();

// |Phi+><Phi+| with |Phi+> = (|00> + |11>)/sqrt(2).
BipartiteState bell_state();

// Hilbert-Schmidt ensemble sample: rho = G G^dag / Tr(G G^dag) with G a
// square complex Ginibre matrix. Deterministic per seed.
BipartiteState random_state(int d_a, int d_b, std::uint64_t seed);

// Random classical-quantum state: Haar basis on A, Dirichlet probabilities,
// Hilbert-Schmidt random blocks on B.
BipartiteState random_cq_state(int d_a, int d_b, std::uint64_t seed);

}  // namespace discord

#endif
