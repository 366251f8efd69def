#include "discord/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "discord/rng.hpp"

namespace discord {

namespace {

double entropy_of_eigs(const RVec& vals) {
  double s = 0.0;
  for (int i = 0; i < vals.size(); ++i) {
    const double lam = vals(i);
    if (lam > kEigClamp) s -= lam * std::log2(lam);
  }
  return s;
}

// Entropy without density-matrix validation; used on measurement blocks that
// are PSD by construction up to eigensolver noise.
double entropy_nocheck(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es((m + m.adjoint()) * 0.5);
  return entropy_of_eigs(es.eigenvalues());
}

// rho viewed as a d_A x d_A array of d_B x d_B blocks.
struct BlockView {
  std::vector<Mat> blocks;  // row-major (a, b)
  int dA, dB;

  explicit BlockView(const BipartiteState& state)
      : dA(state.dims.dA), dB(state.dims.dB) {
    blocks.reserve(dA * dA);
    for (int a = 0; a < dA; ++a)
      for (int b = 0; b < dA; ++b)
        blocks.push_back(state.rho.block(a * dB, b * dB, dB, dB));
  }

  // B_i = (v^dag (x) I) rho (v (x) I) for one basis vector v of A.
  Mat contract(const CVec& v) const {
    Mat out = Mat::Zero(dB, dB);
    for (int a = 0; a < dA; ++a)
      for (int b = 0; b < dA; ++b)
        out += std::conj(v(a)) * v(b) * blocks[a * dA + b];
    return out;
  }
};

double geometric_objective(const BlockView& view, double tr_rho_sq,
                           const Mat& basis_vectors) {
  double acc = 0.0;
  for (int i = 0; i < basis_vectors.cols(); ++i)
    acc += view.contract(basis_vectors.col(i)).squaredNorm();
  return tr_rho_sq - acc;
}

// info_loss for a projective measurement, given the basis-independent offset
// c0 = S(rho_A) - S(rho_AB):   loss = c0 + sum_i p_i S(B_i / p_i).
double entropic_objective(const BlockView& view, double c0,
                          const Mat& basis_vectors) {
  double acc = 0.0;
  for (int i = 0; i < basis_vectors.cols(); ++i) {
    const Mat b = view.contract(basis_vectors.col(i));
    const double p = b.trace().real();
    if (p > 1e-15) acc += p * entropy_nocheck(b / p);
  }
  return c0 + acc;
}

struct QubitOptResult {
  double value;
  double theta, phi;
  int refine_iters;
  bool converged;
};

QubitOptResult optimize_qubit(const std::function<double(double, double)>& f,
                              const OptConfig& cfg) {
  const GridBest grid = scan_qubit_grid(f, cfg.grid_theta, cfg.grid_phi,
                                        cfg.exec);
  NelderMead2DResult nm = nelder_mead_2d(f, grid.theta, grid.phi, 0.05,
                                         cfg.refine_iters, cfg.ftol);
  // Second polish pass with a tight simplex around the found optimum.
  NelderMead2DResult nm2 = nelder_mead_2d(f, nm.x, nm.y, 1e-4,
                                          cfg.refine_iters, cfg.ftol);
  if (nm2.value > nm.value) nm2 = nm;
  return {std::min(nm2.value, grid.value), nm2.x, nm2.y,
          nm.iterations + nm2.iterations, nm.converged && nm2.converged};
}

Mat random_hermitian(int d, Rng& rng) {
  const Mat g = ginibre(d, d, rng);
  return (g + g.adjoint()) * 0.5;
}

Mat unitary_exp(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  CVec phases(h.rows());
  for (int i = 0; i < h.rows(); ++i)
    phases(i) = std::exp(Complex(0.0, es.eigenvalues()(i)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// Random-restart hill climbing over unitaries for d_A > 2.
struct UnitaryOptResult {
  double value;
  Mat basis;
  bool converged;
};

UnitaryOptResult optimize_unitary(const std::function<double(const Mat&)>& f,
                                  int d, const OptConfig& cfg) {
  UnitaryOptResult best{std::numeric_limits<double>::infinity(), identity(d),
                        true};
  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng(derive_seed(cfg.seed, r));
    Mat u = r == 0 ? identity(d) : haar_unitary(d, rng);
    double cur = f(u);
    double eps = 0.3;
    int stuck = 0;
    for (int it = 0; it < cfg.refine_iters && eps > 1e-9; ++it) {
      const Mat step = unitary_exp(eps * random_hermitian(d, rng));
      const Mat cand = step * u;
      const double v = f(cand);
      if (v < cur) {
        cur = v;
        u = cand;
        stuck = 0;
      } else if (++stuck >= 10) {
        eps *= 0.5;
        stuck = 0;
      }
    }
    if (cur < best.value) best = {cur, u, eps <= 1e-6};
  }
  return best;
}

void clamp_report(MeasureReport& rep) {
  if (rep.value < 0.0 && rep.value > -kZeroClamp) {
    rep.value = 0.0;
    rep.clamped = true;
  }
}

}  // namespace

double vn_entropy(const Mat& rho) {
  require_density(rho, "vn_entropy");
  RVec vals = eig_hermitian(rho).values;
  for (int i = 0; i < vals.size(); ++i)
    if (vals(i) < 0.0) vals(i) = 0.0;
  return entropy_of_eigs(vals);
}

double mutual_info(const BipartiteState& state) {
  return vn_entropy(state.reduced_a()) + vn_entropy(state.reduced_b()) -
         vn_entropy(state.rho);
}

double cond_mutual_info(const Mat& rho, const TriDims& dims) {
  const std::vector<int> d = {dims.dA, dims.dB, dims.dC};
  if (dims.dA * dims.dB * dims.dC != rho.rows())
    throw DimensionError("cond_mutual_info: dims inconsistent");
  const double s_abc = vn_entropy(rho);
  const double s_ac = entropy_nocheck(partial_trace_multi(rho, d, {true, false, true}));
  const double s_ab = entropy_nocheck(partial_trace_multi(rho, d, {true, true, false}));
  const double s_a = entropy_nocheck(partial_trace_multi(rho, d, {true, false, false}));
  return s_ac - s_abc - s_a + s_ab;
}

double info_loss(const BipartiteState& state, const Channel& ch_on_a) {
  if (ch_on_a.d_in != state.dims.dA)
    throw DimensionError("info_loss: channel input does not match d_A");
  return mutual_info(state) - mutual_info(apply_local(ch_on_a, state, Side::A));
}

MeasurementBasis qubit_basis(double theta, double phi) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  const Complex ph = std::exp(Complex(0.0, phi));
  Mat v(2, 2);
  v << Complex(c), -s * std::conj(ph), s * ph, Complex(c);
  return MeasurementBasis(v);
}

double projection_distance_sq(const BipartiteState& state,
                              const MeasurementBasis& basis) {
  const BlockView view(state);
  return geometric_objective(view, (state.rho * state.rho).trace().real(),
                             basis.vectors);
}

double projective_info_loss(const BipartiteState& state,
                            const MeasurementBasis& basis) {
  const BlockView view(state);
  const double c0 = vn_entropy(state.reduced_a()) - vn_entropy(state.rho);
  return entropic_objective(view, c0, basis.vectors);
}

MeasureReport geometric_discord(const BipartiteState& state,
                                const OptConfig& cfg) {
  const int dA = state.dims.dA;
  if (dA > cfg.max_dim_a)
    throw DimensionError("geometric_discord: d_A exceeds optimizer guard");
  const BlockView view(state);
  const double tr_sq = (state.rho * state.rho).trace().real();

  MeasureReport rep;
  rep.optimizer.grid_theta = cfg.grid_theta;
  rep.optimizer.grid_phi = cfg.grid_phi;
  if (dA == 1) {
    rep.value = 0.0;
    rep.argmin_basis = MeasurementBasis(identity(1));
  } else if (dA == 2) {
    auto f = [&](double th, double ph) {
      return geometric_objective(view, tr_sq, qubit_basis(th, ph).vectors);
    };
    const QubitOptResult r = optimize_qubit(f, cfg);
    rep.value = r.value;
    rep.argmin_basis = qubit_basis(r.theta, r.phi);
    rep.optimizer.refine_iters = r.refine_iters;
    rep.optimizer.converged = r.converged;
  } else {
    auto f = [&](const Mat& u) { return geometric_objective(view, tr_sq, u); };
    const UnitaryOptResult r = optimize_unitary(f, dA, cfg);
    rep.value = r.value;
    rep.argmin_basis = MeasurementBasis(r.basis);
    rep.optimizer.restarts = cfg.restarts;
    rep.optimizer.converged = r.converged;
  }
  rep.arg_desc = "projective basis";
  clamp_report(rep);
  return rep;
}

namespace {

// POVM-class optimizer: n parameter matrices A_i define Q_i = A_i^dag A_i,
// renormalized to M_i = S^{-1/2} Q_i S^{-1/2} with S = sum_i Q_i. Seeded at
// the best projective basis so the POVM value never exceeds the projective
// one.
struct PovmParam {
  std::vector<Mat> a;
};

std::vector<Mat> povm_from_param(const PovmParam& p, int d) {
  Mat s = Mat::Zero(d, d);
  std::vector<Mat> q;
  q.reserve(p.a.size());
  for (const Mat& ai : p.a) {
    q.push_back(ai.adjoint() * ai);
    s += q.back();
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(s);
  CVec inv_sqrt(d);
  for (int i = 0; i < d; ++i) {
    const double lam = std::max(es.eigenvalues()(i), kEigClamp);
    inv_sqrt(i) = 1.0 / std::sqrt(lam);
  }
  const Mat si = es.eigenvectors() * inv_sqrt.asDiagonal() *
                 es.eigenvectors().adjoint();
  for (Mat& qi : q) qi = si * qi * si;
  return q;
}

double povm_info_loss(const BlockView& view, double c0,
                      const std::vector<Mat>& elements,
                      const BipartiteState& state) {
  // Post-measurement blocks B_i = Tr_A[(M_i (x) I) rho].
  double acc = 0.0;
  const int dA = state.dims.dA, dB = state.dims.dB;
  for (const Mat& m : elements) {
    Mat b = Mat::Zero(dB, dB);
    for (int a = 0; a < dA; ++a)
      for (int bb = 0; bb < dA; ++bb)
        b += m(bb, a) * view.blocks[a * dA + bb];
    const double p = b.trace().real();
    if (p > 1e-15) acc += p * entropy_nocheck(b / p);
  }
  return c0 + acc;
}

}  // namespace

MeasureReport discord(const BipartiteState& state, const ChannelClass& cls,
                      const OptConfig& cfg) {
  const int dA = state.dims.dA;
  if (dA > cfg.max_dim_a)
    throw DimensionError("discord: d_A exceeds optimizer guard");
  const BlockView view(state);
  const double c0 = vn_entropy(state.reduced_a()) - vn_entropy(state.rho);

  MeasureReport rep;
  rep.optimizer.grid_theta = cfg.grid_theta;
  rep.optimizer.grid_phi = cfg.grid_phi;

  // Projective optimum first; it is the final answer for the projective class
  // and the starting point for the POVM class.
  if (dA == 1) {
    rep.value = 0.0;
    rep.argmin_basis = MeasurementBasis(identity(1));
  } else if (dA == 2) {
    auto f = [&](double th, double ph) {
      return entropic_objective(view, c0, qubit_basis(th, ph).vectors);
    };
    const QubitOptResult r = optimize_qubit(f, cfg);
    rep.value = r.value;
    rep.argmin_basis = qubit_basis(r.theta, r.phi);
    rep.optimizer.refine_iters = r.refine_iters;
    rep.optimizer.converged = r.converged;
  } else {
    auto f = [&](const Mat& u) { return entropic_objective(view, c0, u); };
    const UnitaryOptResult r = optimize_unitary(f, dA, cfg);
    rep.value = r.value;
    rep.argmin_basis = MeasurementBasis(r.basis);
    rep.optimizer.restarts = cfg.restarts;
    rep.optimizer.converged = r.converged;
  }
  rep.arg_desc = "projective basis";

  if (cls.tag == ChannelClass::Tag::POVMBased) {
    const int n = cls.max_outcomes > 0 ? cls.max_outcomes : dA * dA;
    if (n < dA) throw DimensionError("discord: max_outcomes < d_A");
    PovmParam p;
    for (int i = 0; i < n; ++i) {
      if (i < dA) {
        const CVec v = rep.argmin_basis.vectors.col(i);
        p.a.push_back(v * v.adjoint());
      } else {
        p.a.push_back(Mat::Zero(dA, dA));
      }
    }
    Rng rng(derive_seed(cfg.seed, 7));
    double cur = povm_info_loss(view, c0, povm_from_param(p, dA), state);
    double eps = 0.2;
    int stuck = 0;
    for (int it = 0; it < cfg.refine_iters && eps > 1e-8; ++it) {
      PovmParam cand = p;
      for (Mat& ai : cand.a) ai += eps * ginibre(dA, dA, rng);
      const double v = povm_info_loss(view, c0, povm_from_param(cand, dA), state);
      if (v < cur) {
        cur = v;
        p = cand;
        stuck = 0;
      } else if (++stuck >= 15) {
        eps *= 0.5;
        stuck = 0;
      }
    }
    if (cur < rep.value) {
      rep.value = cur;
      rep.arg_desc = "povm(" + std::to_string(n) + " outcomes)";
    }
  }
  clamp_report(rep);
  return rep;
}

double geometric_discord_qubit_closed_form(const BipartiteState& state) {
  if (state.dims.dA != 2)
    throw DimensionError("closed form requires d_A = 2");
  const int dB = state.dims.dB;
  Mat sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  sz << 1, 0, 0, -1;
  const Mat paulis[3] = {sx, sy, sz};

  // C_0 = Tr_A rho, C_k = Tr_A[(sigma_k (x) I) rho].
  const Mat c0 = partial_trace(state.rho, state.dims, Side::B);
  Mat c[3];
  for (int k = 0; k < 3; ++k)
    c[k] = partial_trace(tensor(paulis[k], identity(dB)) * state.rho,
                         state.dims, Side::B);

  Eigen::Matrix3d kmat;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      kmat(k, l) = (c[k] * c[l]).trace().real();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(kmat);
  const double tr_sq = (state.rho * state.rho).trace().real();
  const double val = tr_sq - 0.5 * c0.squaredNorm() -
                     0.5 * es.eigenvalues().maxCoeff();
  return std::max(val, 0.0);
}

MeasureReport tilde_geometric_discord(const BipartiteState& state,
                                      const TildeConfig& cfg,
                                      std::uint64_t seed) {
  const int dB = state.dims.dB;
  std::vector<Channel> candidates;
  candidates.push_back(identity_channel(dB));
  candidates.push_back(gamma_sigma(basis_projector(2, 0), dB));
  for (int a = 2; a <= dB; ++a) {
    if (dB % a != 0) continue;
    candidates.push_back(discard_ancilla_channel(dB / a, a));
    candidates.push_back(replace_ancilla_pure_channel(dB / a, a));
  }
  for (int r = 0; r < cfg.n_random_channels; ++r) {
    const int dout = 1 + r % cfg.max_dout;
    candidates.push_back(
        random_channel(dB, dout, dB * dout, derive_seed(seed, r)));
  }

  MeasureReport best;
  best.value = -std::numeric_limits<double>::infinity();
  for (const Channel& ch : candidates) {
    const BipartiteState image = apply_local(ch, state, Side::B);
    MeasureReport r = geometric_discord(image, cfg.opt);
    if (r.value > best.value) {
      best = r;
      best.arg_desc = "Lambda_B = " + ch.label;
    }
  }
  clamp_report(best);
  return best;
}

ScalingReport scaling_demo(const BipartiteState& state, const Mat& sigma,
                           const OptConfig& cfg) {
  ScalingReport rep;
  rep.ancilla_purity = purity(sigma);
  rep.before = geometric_discord(state, cfg).value;
  const BipartiteState attached =
      apply_local(gamma_sigma(sigma, state.dims.dB), state, Side::B);
  rep.after = geometric_discord(attached, cfg).value;
  rep.ratio = rep.before > 1e-12 ? rep.after / rep.before : 0.0;
  rep.defect = std::abs(rep.after - rep.before * rep.ancilla_purity);
  rep.law_holds = rep.defect <= 1e-8;
  return rep;
}

std::vector<AuditRow> monotonicity_audit(MeasureKind kind, int n_trials,
                                         const DimPair& dims,
                                         std::uint64_t seed,
                                         const OptConfig& cfg) {
  if (n_trials < 0) throw DimensionError("monotonicity_audit: n_trials < 0");
  auto eval = [&](const BipartiteState& s) {
    return kind == MeasureKind::Entropic
               ? discord(s, ChannelClass{}, cfg).value
               : geometric_discord(s, cfg).value;
  };

  std::vector<AuditRow> rows(n_trials);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int t = 0; t < n_trials; ++t) {
    const std::uint64_t st = derive_seed(seed, t);
    const BipartiteState rho = random_state(dims.dA, dims.dB, st);
    const Channel ch = random_channel(dims.dB, dims.dB, dims.dB * dims.dB,
                                      derive_seed(st, 1));
    AuditRow row;
    row.trial = t;
    row.seed = st;
    row.before = eval(rho);
    row.after = eval(apply_local(ch, rho, Side::B));
    row.delta = row.after - row.before;
    row.channel_desc = ch.label;
    rows[t] = row;
  }

  if (kind == MeasureKind::Geometric) {
    // Guaranteed-increase rows: the input carries a maximally mixed ancilla
    // on B and the channel discards it, which doubles the value.
    const Mat mixed = identity(2) / 2.0;
    std::vector<BipartiteState> bases;
    if (dims.dA == 2 && dims.dB == 2) bases.push_back(bell_state());
    for (int k = 0; k < 2; ++k)
      bases.push_back(random_state(dims.dA, dims.dB, derive_seed(seed, 1000 + k)));
    const Channel discard = discard_ancilla_channel(dims.dB, 2);
    int t = n_trials;
    for (const BipartiteState& base : bases) {
      const BipartiteState input = apply_local(
          gamma_sigma(mixed, base.dims.dB), base, Side::B);
      AuditRow row;
      row.trial = t++;
      row.seed = seed;
      row.before = eval(input);
      row.after = eval(apply_local(discard, input, Side::B));
      row.delta = row.after - row.before;
      row.channel_desc = discard.label;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace discord
