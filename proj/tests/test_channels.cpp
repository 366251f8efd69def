#include <doctest.h>

#include "discord/channels.hpp"
#include "discord/rng.hpp"
#include "discord/states.hpp"

using namespace discord;

TEST_CASE("apply: identity and depolarizing") {
  const BipartiteState s = random_state(1, 2, 4);
  CHECK((discord::apply(identity_channel(2), s.rho) - s.rho).norm() < 1e-14);
  CHECK((discord::apply(depolarizing_channel(2), s.rho) - identity(2) / 2.0).norm() <
        1e-12);
}

TEST_CASE("apply preserves trace and positivity on random pairs") {
  for (int t = 0; t < 100; ++t) {
    const Channel ch = random_channel(2, 3, 4, derive_seed(100, t));
    const Mat rho = random_state(1, 2, derive_seed(200, t)).rho;
    const Mat out = discord::apply(ch, rho);
    CHECK(std::abs(out.trace() - rho.trace()) <= 1e-12);
    CHECK(validate_density(out).ok);
  }
}

TEST_CASE("apply rejects mismatched dimensions") {
  CHECK_THROWS_AS(discord::apply(identity_channel(2), identity(3)), DimensionError);
}

TEST_CASE("embed: identity lift and marginal consistency") {
  const DimPair dims{2, 3};
  const Channel id_joint = embed(identity_channel(2), dims, Side::A);
  const Mat rho = random_state(2, 3, 8).rho;
  CHECK((discord::apply(id_joint, rho) - rho).norm() < 1e-14);

  // Tr_A(embed(ch, B)(rho)) = ch(Tr_A rho)
  for (int t = 0; t < 20; ++t) {
    const Channel ch = random_channel(3, 3, 9, derive_seed(300, t));
    const BipartiteState s = random_state(2, 3, derive_seed(400, t));
    const Mat lhs = partial_trace(discord::apply(embed(ch, dims, Side::B), s.rho),
                                  dims, Side::B);
    const Mat rhs = discord::apply(ch, s.reduced_b());
    CHECK((lhs - rhs).norm() < 1e-12);
  }
}

TEST_CASE("gamma_sigma: definitional identity and Kraus count") {
  Rng rng(12);
  Mat sigma = ginibre(2, 2, rng);
  sigma = sigma * sigma.adjoint();
  sigma /= sigma.trace().real();

  const Channel g = gamma_sigma(sigma, 3);
  CHECK(g.d_in == 3);
  CHECK(g.d_out == 6);
  const Mat rho = random_state(1, 3, 13).rho;
  CHECK((discord::apply(g, rho) - tensor(rho, sigma)).norm() < 1e-14);

  // Pure ancilla: a single isometric Kraus operator.
  const Channel gp = gamma_sigma(basis_projector(2, 0), 2);
  CHECK(gp.kraus.size() == 1);
  CHECK((gp.kraus[0].adjoint() * gp.kraus[0] - identity(2)).norm() < 1e-12);
  CHECK(purity(identity(2) / 2.0) == doctest::Approx(0.5));
}

TEST_CASE("gamma_sigma embedded on B appends the ancilla as last factor") {
  const BipartiteState s = random_state(2, 2, 21);
  Mat sigma = Mat::Zero(2, 2);
  sigma(0, 0) = 0.75;
  sigma(1, 1) = 0.25;
  const BipartiteState out =
      apply_local(gamma_sigma(sigma, 2), s, Side::B);
  CHECK(out.dims.dA == 2);
  CHECK(out.dims.dB == 4);
  CHECK((out.rho - tensor(s.rho, sigma)).norm() < 1e-14);
}

TEST_CASE("projective_channel: diagonal fixed points and idempotence") {
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 0.3;
  d(1, 1) = 0.7;
  const Channel pi = projective_channel(MeasurementBasis(identity(2)));
  CHECK((discord::apply(pi, d) - d).norm() < 1e-14);

  Mat plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  CHECK((discord::apply(pi, plus) - identity(2) / 2.0).norm() < 1e-14);

  Rng rng(14);
  const Mat u = haar_unitary(2, rng);
  const Channel pi_u = projective_channel(MeasurementBasis(u));
  const Mat rho = random_state(1, 2, 15).rho;
  const Mat once = discord::apply(pi_u, rho);
  CHECK((discord::apply(pi_u, once) - once).norm() <= 1e-12);
  for (int i = 0; i < 2; ++i) {
    const Mat p = u.col(i) * u.col(i).adjoint();
    CHECK((once * p - p * once).norm() < 1e-12);
  }
}

TEST_CASE("projective_channel rejects non-orthonormal bases") {
  Mat v(2, 2);
  v << 1, 1, 0, 0;
  CHECK_THROWS_AS((void)MeasurementBasis{v}, InvalidStateError);
}

TEST_CASE("povm_channel: projective POVM and trivial POVM") {
  const POVM proj({basis_projector(2, 0), basis_projector(2, 1)});
  const Channel ch = povm_channel(proj);
  const Mat rho = random_state(1, 2, 16).rho;
  const Mat out = discord::apply(ch, rho);
  // Diagonal with entries Tr(M_i rho), i.e. the projective probabilities.
  CHECK(out.isDiagonal(1e-14));
  CHECK(out(0, 0).real() == doctest::Approx(rho(0, 0).real()));
  CHECK(out(1, 1).real() == doctest::Approx(rho(1, 1).real()));

  const POVM flat({identity(2) / 2.0, identity(2) / 2.0});
  const Mat flat_out = discord::apply(povm_channel(flat), rho);
  CHECK((flat_out - identity(2) / 2.0).norm() < 1e-12);

  for (int t = 0; t < 10; ++t) {
    const Mat r = random_state(1, 2, derive_seed(500, t)).rho;
    CHECK(std::abs(discord::apply(ch, r).trace() - r.trace()) < 1e-12);
  }
}

TEST_CASE("povm validation") {
  CHECK_THROWS_AS(POVM({identity(2) / 2.0}), InvalidStateError);
}

TEST_CASE("stinespring: isometry and dilation consistency") {
  const Mat v_id = stinespring(identity_channel(2));
  CHECK((v_id.adjoint() * v_id - identity(2)).norm() < 1e-14);

  const Mat v_dep = stinespring(depolarizing_channel(2));
  CHECK(v_dep.rows() == 8);
  CHECK((v_dep.adjoint() * v_dep - identity(2)).norm() <= 1e-12);

  for (int t = 0; t < 100; ++t) {
    const Channel ch = random_channel(2, 2 + t % 2, 3, derive_seed(600, t));
    const Mat rho = random_state(1, 2, derive_seed(700, t)).rho;
    const Mat v = stinespring(ch);
    CHECK((v.adjoint() * v - identity(2)).norm() <= 1e-12);
    const int env = static_cast<int>(ch.kraus.size());
    const Mat dilated = v * rho * v.adjoint();
    const Mat reduced =
        partial_trace(dilated, DimPair{ch.d_out, env}, Side::A);
    CHECK((reduced - discord::apply(ch, rho)).norm() <= 1e-12);
  }
}

TEST_CASE("measure_and_prepare_example matches its defining actions") {
  const Channel ch = measure_and_prepare_example();
  Mat plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  CHECK((discord::apply(ch, basis_projector(2, 0)) - basis_projector(2, 0)).norm() <
        1e-14);
  CHECK((discord::apply(ch, basis_projector(2, 1)) - plus).norm() < 1e-14);

  const BipartiteState mapped =
      apply_local(ch, example_cc_state(), Side::A);
  CHECK((mapped.rho - example_post_channel_state().rho).norm() < 1e-14);
}

TEST_CASE("random_channel: unitary case and completeness") {
  const Channel u = random_channel(3, 3, 1, 99);
  CHECK(u.kraus.size() == 1);
  CHECK((u.kraus[0].adjoint() * u.kraus[0] - identity(3)).norm() < 1e-10);

  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL})
    CHECK(random_channel(2, 4, 8, seed).completeness_defect() <= 1e-10);

  // Ancilla-attach structure lives inside the d_out = 2 d_in family.
  const Channel g = gamma_sigma(identity(2) / 2.0, 2);
  CHECK(g.d_out == 2 * g.d_in);
  CHECK(g.completeness_defect() <= 1e-10);
}

TEST_CASE("discard / replace ancilla channels") {
  const BipartiteState base = random_state(2, 2, 33);
  Mat sigma = Mat::Zero(2, 2);
  sigma(0, 0) = 0.6;
  sigma(1, 1) = 0.4;
  const BipartiteState with_anc =
      apply_local(gamma_sigma(sigma, 2), base, Side::B);

  const BipartiteState back =
      apply_local(discard_ancilla_channel(2, 2), with_anc, Side::B);
  CHECK((back.rho - base.rho).norm() < 1e-12);

  const BipartiteState pure =
      apply_local(replace_ancilla_pure_channel(2, 2), with_anc, Side::B);
  CHECK((pure.rho - tensor(base.rho, basis_projector(2, 0))).norm() < 1e-12);
}

TEST_CASE("per-projector scaling identity on a fixed basis probe set") {
  // ||rho (x) sigma - (Pi_A (x) I)(rho (x) sigma)||^2
  //   = ||rho - Pi_A(rho)||^2 Tr(sigma^2), for every basis.
  const BipartiteState rho = random_state(2, 2, 55);
  Rng srng(56);
  Mat sigma = ginibre(2, 2, srng);
  sigma = sigma * sigma.adjoint();
  sigma /= sigma.trace().real();
  const double pur = purity(sigma);
  const Mat big = tensor(rho.rho, sigma);

  for (int t = 0; t < 32; ++t) {
    Rng rng(derive_seed(800, t));
    const Mat u = haar_unitary(2, rng);
    const Channel pi_small =
        embed(projective_channel(MeasurementBasis(u)), rho.dims, Side::A);
    const Channel pi_big = embed(projective_channel(MeasurementBasis(u)),
                                 DimPair{2, 4}, Side::A);
    const double lhs = hs_norm(big - discord::apply(pi_big, big));
    const double rhs = hs_norm(rho.rho - discord::apply(pi_small, rho.rho));
    CHECK(lhs * lhs == doctest::Approx(rhs * rhs * pur).epsilon(1e-12));
  }
}
