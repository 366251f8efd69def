#include "discord/states.hpp"

#include <cmath>

#include "discord/rng.hpp"

namespace discord {

BipartiteState::BipartiteState(Mat r, DimPair d) : rho(std::move(r)), dims(d) {
  if (dims.joint() != rho.rows())
    throw DimensionError("BipartiteState: dims inconsistent with matrix size");
  require_density(rho, "BipartiteState");
}

BipartiteState cq_state(const CQSpec& spec) {
  const int n = static_cast<int>(spec.probs.size());
  if (n == 0 || spec.basis.size() != static_cast<size_t>(n) ||
      spec.blocks.size() != static_cast<size_t>(n))
    throw DimensionError("cq_state: probs/basis/blocks size mismatch");

  double psum = 0.0;
  for (double p : spec.probs) {
    if (p < -1e-12) throw InvalidStateError("cq_state: negative probability");
    psum += p;
  }
  if (std::abs(psum - 1.0) > 1e-12)
    throw InvalidStateError("cq_state: probabilities do not sum to 1");

  const int dA = static_cast<int>(spec.basis[0].size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Complex g = spec.basis[i].dot(spec.basis[j]);
      const double target = (i == j) ? 1.0 : 0.0;
      if (std::abs(g - target) > kHermTol)
        throw InvalidStateError("cq_state: basis not orthonormal");
    }

  const int dB = static_cast<int>(spec.blocks[0].rows());
  Mat rho = Mat::Zero(dA * dB, dA * dB);
  for (int i = 0; i < n; ++i) {
    require_density(spec.blocks[i], "cq_state block");
    const Mat proj = spec.basis[i] * spec.basis[i].adjoint();
    rho += spec.probs[i] * tensor(proj, spec.blocks[i]);
  }
  return BipartiteState(rho, DimPair{dA, dB});
}

namespace {

CVec ket(int d, int i) {
  CVec v = CVec::Zero(d);
  v(i) = 1.0;
  return v;
}

}  // namespace

BipartiteState example_cc_state() {
  CQSpec spec;
  spec.probs = {0.5, 0.5};
  spec.basis = {ket(2, 0), ket(2, 1)};
  spec.blocks = {basis_projector(2, 0), basis_projector(2, 1)};
  return cq_state(spec);
}

BipartiteState example_post_channel_state() {
  const Mat p0 = basis_projector(2, 0);
  const Mat p1 = basis_projector(2, 1);
  Mat plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  Mat rho = 0.5 * tensor(p0, p0) + 0.5 * tensor(plus, p1);
  return BipartiteState(std::move(rho), DimPair{2, 2});
}

BipartiteState bell_state() {
  CVec phi = CVec::Zero(4);
  phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
  return BipartiteState(phi * phi.adjoint(), DimPair{2, 2});
}

BipartiteState random_state(int d_a, int d_b, std::uint64_t seed) {
  if (d_a < 1 || d_b < 1) throw DimensionError("random_state: dims must be >= 1");
  Rng rng(seed);
  const int d = d_a * d_b;
  const Mat g = ginibre(d, d, rng);
  Mat rho = g * g.adjoint();
  rho /= rho.trace().real();
  return BipartiteState(std::move(rho), DimPair{d_a, d_b});
}

BipartiteState random_cq_state(int d_a, int d_b, std::uint64_t seed) {
  Rng rng(seed);
  const Mat u = haar_unitary(d_a, rng);
  CQSpec spec;
  spec.probs = dirichlet_uniform(d_a, rng);
  for (int i = 0; i < d_a; ++i) {
    spec.basis.push_back(u.col(i));
    const Mat g = ginibre(d_b, d_b, rng);
    Mat block = g * g.adjoint();
    block /= block.trace().real();
    spec.blocks.push_back(std::move(block));
  }
  return cq_state(spec);
}

}  // namespace discord
