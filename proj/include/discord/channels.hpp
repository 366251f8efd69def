#ifndef DISCORD_CHANNELS_HPP
#define DISCORD_CHANNELS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "discord/qmat.hpp"
#include "discord/states.hpp"

namespace discord {

// CPTP map as a finite Kraus family of d_out x d_in operators.
struct Channel {
  std::vector<Mat> kraus;
  int d_in = 0;
  int d_out = 0;
  std::string label;

  Channel() = default;
  Channel(std::vector<Mat> k, std::string lbl = "");  // validates

  // ||sum K_i^dag K_i - I||_2
  double completeness_defect() const;
};

struct MeasurementBasis {
  Mat vectors;  // d_A orthonormal columns

  MeasurementBasis() = default;
  explicit MeasurementBasis(Mat v);  // validates Gram = I within kHermTol
  int dim() const { return static_cast<int>(vectors.cols()); }
};

struct POVM {
  std::vector<Mat> elements;

  POVM() = default;
  explicit POVM(std::vector<Mat> m);  // validates PSD + completeness
  int dim() const { return static_cast<int>(elements[0].rows()); }
};

Mat apply(const Channel& ch, const Mat& rho);

// Lift a single-party channel to the joint space, identity on the other side.
Channel embed(const Channel& ch, const DimPair& dims, Side side);

// Convenience: apply a channel acting on one party of a bipartite state. A
// channel on B that enlarges B (d_out = d_B * d_anc) yields a state whose
// B-factor absorbs the ancilla as the last tensor factor.
BipartiteState apply_local(const Channel& ch, const BipartiteState& state,
                           Side side);

// Gamma^sigma: X -> X (x) sigma, the ancilla-attach channel on a d_in-
// dimensional system; d_out = d_in * dim(sigma), ancilla as last factor.
Channel gamma_sigma(const Mat& sigma, int d_in = 1);

// Complete von Neumann projection X -> sum_i |i><i| X |i><i|.
Channel projective_channel(const MeasurementBasis& basis);

// X -> sum_i Tr(M_i X) |i><i| on the pointer basis of the outcomes.
Channel povm_channel(const POVM& povm);

// Stinespring isometry V = sum_i K_i (x) |i>_C; V^dag V = I and
// Tr_C(V rho V^dag) = apply(ch, rho). Output ordering is (out, env).
Mat stinespring(const Channel& ch);

// Dilated tripartite state (I (x) not applied on B): given ch on A, returns
// (V (x) I_B) rho (V (x) I_B)^dag reordered to (A', B, C) together with dims.
struct Tripartite {
  Mat rho;
  int dA = 1, dB = 1, dC = 1;
};
Tripartite dilate_on_a(const Channel& ch, const BipartiteState& state);

// The paper-style discord-creating qubit map, realized as measure-and-prepare:
// X -> <0|X|0> |0><0| + <1|X|1> |+><+|.
Channel measure_and_prepare_example();

// Haar-random isometry d_in -> d_out * kraus_rank sliced into Kraus operators.
Channel random_channel(int d_in, int d_out, int kraus_rank, std::uint64_t seed);

Channel identity_channel(int d);
Channel depolarizing_channel(int d);

// Trace out the last tensor factor of a space grouped as d_keep * d_anc.
Channel discard_ancilla_channel(int d_keep, int d_anc);

// Trace out the last factor and re-prepare it in the pure state |0>.
Channel replace_ancilla_pure_channel(int d_keep, int d_anc);

}  // namespace discord

#endif
