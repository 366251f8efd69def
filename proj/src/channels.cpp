#include "discord/channels.hpp"

#include <cmath>

#include "discord/rng.hpp"

namespace discord {

Channel::Channel(std::vector<Mat> k, std::string lbl)
    : kraus(std::move(k)), label(std::move(lbl)) {
  if (kraus.empty()) throw DimensionError("Channel: empty Kraus family");
  d_out = static_cast<int>(kraus[0].rows());
  d_in = static_cast<int>(kraus[0].cols());
  for (const Mat& m : kraus)
    if (m.rows() != d_out || m.cols() != d_in)
      throw DimensionError("Channel: inconsistent Kraus shapes");
  if (completeness_defect() > kHermTol)
    throw InvalidStateError("Channel: sum K^dag K != I, defect " +
                            std::to_string(completeness_defect()));
}

double Channel::completeness_defect() const {
  Mat acc = Mat::Zero(d_in, d_in);
  for (const Mat& m : kraus) acc += m.adjoint() * m;
  return (acc - identity(d_in)).norm();
}

MeasurementBasis::MeasurementBasis(Mat v) : vectors(std::move(v)) {
  const Mat gram = vectors.adjoint() * vectors;
  if (vectors.rows() != vectors.cols() ||
      (gram - identity(dim())).norm() > kHermTol)
    throw InvalidStateError("MeasurementBasis: columns not orthonormal");
}

POVM::POVM(std::vector<Mat> m) : elements(std::move(m)) {
  if (elements.empty()) throw DimensionError("POVM: no elements");
  const int d = dim();
  Mat sum = Mat::Zero(d, d);
  for (const Mat& e : elements) {
    if (e.rows() != d || e.cols() != d)
      throw DimensionError("POVM: inconsistent element shapes");
    const EigH eg = eig_hermitian(e);
    if (eg.values.minCoeff() < -kPosTol)
      throw InvalidStateError("POVM: element not positive semidefinite");
    sum += e;
  }
  if ((sum - identity(d)).norm() > kHermTol)
    throw InvalidStateError("POVM: elements do not sum to identity");
}

Mat apply(const Channel& ch, const Mat& rho) {
  if (rho.rows() != ch.d_in || rho.cols() != ch.d_in)
    throw DimensionError("apply: state dimension does not match channel input");
  Mat out = Mat::Zero(ch.d_out, ch.d_out);
  for (const Mat& k : ch.kraus) out += k * rho * k.adjoint();
  return out;
}

Channel embed(const Channel& ch, const DimPair& dims, Side side) {
  const int local = side == Side::A ? dims.dA : dims.dB;
  if (ch.d_in != local)
    throw DimensionError("embed: channel input does not match chosen side");
  std::vector<Mat> lifted;
  lifted.reserve(ch.kraus.size());
  for (const Mat& k : ch.kraus)
    lifted.push_back(side == Side::A ? tensor(k, identity(dims.dB))
                                     : tensor(identity(dims.dA), k));
  return Channel(std::move(lifted), ch.label);
}

BipartiteState apply_local(const Channel& ch, const BipartiteState& state,
                           Side side) {
  const Channel lifted = embed(ch, state.dims, side);
  DimPair out_dims = state.dims;
  (side == Side::A ? out_dims.dA : out_dims.dB) = ch.d_out;
  return BipartiteState(apply(lifted, state.rho), out_dims);
}

Channel gamma_sigma(const Mat& sigma, int d_in) {
  require_density(sigma, "gamma_sigma ancilla");
  const int d_anc = static_cast<int>(sigma.rows());
  const EigH eg = eig_hermitian(sigma);
  // K_j = I_{d_in} (x) sqrt(lambda_j)|v_j>, one per nonzero eigenvalue of
  // sigma; together they realize X -> X (x) sigma exactly.
  std::vector<Mat> kraus;
  for (int j = 0; j < d_anc; ++j) {
    const double lam = std::max(eg.values(j), 0.0);
    if (lam < kEigClamp) continue;
    Mat col(d_anc, 1);
    col.col(0) = std::sqrt(lam) * eg.vectors.col(j);
    kraus.push_back(tensor(identity(d_in), col));
  }
  return Channel(std::move(kraus),
                 "gamma_sigma(d_anc=" + std::to_string(d_anc) + ")");
}

Channel projective_channel(const MeasurementBasis& basis) {
  const int d = basis.dim();
  std::vector<Mat> kraus;
  kraus.reserve(d);
  for (int i = 0; i < d; ++i) {
    const CVec v = basis.vectors.col(i);
    kraus.push_back(v * v.adjoint());
  }
  return Channel(std::move(kraus), "projective");
}

Channel povm_channel(const POVM& povm) {
  const int d = povm.dim();
  const int n = static_cast<int>(povm.elements.size());
  std::vector<Mat> kraus;
  for (int i = 0; i < n; ++i) {
    const EigH eg = eig_hermitian(povm.elements[i]);
    for (int j = 0; j < d; ++j) {
      const double lam = std::max(eg.values(j), 0.0);
      if (lam < kEigClamp) continue;
      // |i> m^dag with m = sqrt(lambda) v: contributes Tr(m m^dag X)|i><i|.
      Mat k = Mat::Zero(n, d);
      k.row(i) = std::sqrt(lam) * eg.vectors.col(j).adjoint();
      kraus.push_back(std::move(k));
    }
  }
  return Channel(std::move(kraus), "povm(" + std::to_string(n) + " outcomes)");
}

Mat stinespring(const Channel& ch) {
  const int n = static_cast<int>(ch.kraus.size());
  Mat v = Mat::Zero(ch.d_out * n, ch.d_in);
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < ch.d_out; ++r)
      v.row(r * n + i) = ch.kraus[i].row(r);  // (out, env) ordering, env last
  return v;
}

Tripartite dilate_on_a(const Channel& ch, const BipartiteState& state) {
  const Mat v = stinespring(ch);
  const int n = static_cast<int>(ch.kraus.size());
  const Mat w = tensor(v, identity(state.dims.dB));
  const Mat rho_acb = w * state.rho * w.adjoint();  // order (A', C, B)
  Tripartite t;
  t.dA = ch.d_out;
  t.dC = n;
  t.dB = state.dims.dB;
  t.rho = permute_systems(rho_acb, {t.dA, t.dC, t.dB}, {0, 2, 1});
  return t;
}

Channel measure_and_prepare_example() {
  CVec plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CVec zero(2), one(2);
  zero << 1.0, 0.0;
  one << 0.0, 1.0;
  std::vector<Mat> kraus = {zero * zero.adjoint(), plus * one.adjoint()};
  return Channel(std::move(kraus), "measure_and_prepare_example");
}

Channel random_channel(int d_in, int d_out, int kraus_rank,
                       std::uint64_t seed) {
  if (kraus_rank < 1) throw DimensionError("random_channel: kraus_rank >= 1");
  Rng rng(seed);
  const int big = d_out * kraus_rank;
  if (big < d_in)
    throw DimensionError("random_channel: d_out * kraus_rank < d_in");
  const Mat u = haar_unitary(big, rng);
  const Mat v = u.leftCols(d_in);  // Haar-random isometry
  std::vector<Mat> kraus(kraus_rank, Mat(d_out, d_in));
  for (int i = 0; i < kraus_rank; ++i)
    for (int r = 0; r < d_out; ++r)
      kraus[i].row(r) = v.row(r * kraus_rank + i);
  return Channel(std::move(kraus),
                 "random(" + std::to_string(d_in) + "->" +
                     std::to_string(d_out) + ",rank=" +
                     std::to_string(kraus_rank) + ",seed=" +
                     std::to_string(seed) + ")");
}

Channel identity_channel(int d) {
  return Channel({identity(d)}, "identity");
}

Channel depolarizing_channel(int d) {
  // Kraus family {|i><j|/sqrt(d)} maps every state to I/d.
  std::vector<Mat> kraus;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Mat k = Mat::Zero(d, d);
      k(i, j) = 1.0 / std::sqrt(static_cast<double>(d));
      kraus.push_back(std::move(k));
    }
  return Channel(std::move(kraus), "depolarizing");
}

Channel discard_ancilla_channel(int d_keep, int d_anc) {
  std::vector<Mat> kraus;
  for (int j = 0; j < d_anc; ++j) {
    Mat k = Mat::Zero(d_keep, d_keep * d_anc);
    for (int r = 0; r < d_keep; ++r) k(r, r * d_anc + j) = 1.0;
    kraus.push_back(std::move(k));
  }
  return Channel(std::move(kraus),
                 "discard_ancilla(d_anc=" + std::to_string(d_anc) + ")");
}

Channel replace_ancilla_pure_channel(int d_keep, int d_anc) {
  const int d = d_keep * d_anc;
  std::vector<Mat> kraus;
  for (int j = 0; j < d_anc; ++j) {
    Mat k = Mat::Zero(d, d);
    for (int r = 0; r < d_keep; ++r) k(r * d_anc + 0, r * d_anc + j) = 1.0;
    kraus.push_back(std::move(k));
  }
  return Channel(std::move(kraus),
                 "replace_ancilla_pure(d_anc=" + std::to_string(d_anc) + ")");
}

}  // namespace discord
