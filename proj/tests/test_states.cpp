#include <doctest.h>

#include "discord/rng.hpp"
#include "discord/states.hpp"

using namespace discord;

namespace {

CVec ket(int d, int i) {
  CVec v = CVec::Zero(d);
  v(i) = 1.0;
  return v;
}

}  // namespace

TEST_CASE("cq_state: classical-classical and product examples") {
  CQSpec cc;
  cc.probs = {0.5, 0.5};
  cc.basis = {ket(2, 0), ket(2, 1)};
  cc.blocks = {basis_projector(2, 0), basis_projector(2, 1)};
  const BipartiteState s = cq_state(cc);
  Mat expected = Mat::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = 0.5;
  CHECK((s.rho - expected).norm() < 1e-14);

  CQSpec prod;
  prod.probs = {1.0};
  prod.basis = {ket(2, 0)};
  prod.blocks = {identity(2) / 2.0};
  CHECK((cq_state(prod).rho - tensor(basis_projector(2, 0), identity(2) / 2.0))
            .norm() < 1e-14);

  CQSpec mm;
  mm.probs = {0.5, 0.5};
  mm.basis = {ket(2, 0), ket(2, 1)};
  mm.blocks = {identity(2) / 2.0, identity(2) / 2.0};
  CHECK((cq_state(mm).rho - identity(4) / 4.0).norm() < 1e-14);
}

TEST_CASE("cq_state rejects bad specs") {
  CQSpec bad;
  bad.probs = {0.6, 0.6};
  bad.basis = {ket(2, 0), ket(2, 1)};
  bad.blocks = {identity(2) / 2.0, identity(2) / 2.0};
  CHECK_THROWS_AS(cq_state(bad), InvalidStateError);

  CQSpec skew;
  skew.probs = {0.5, 0.5};
  skew.basis = {ket(2, 0), ket(2, 0)};  // not orthonormal
  skew.blocks = {identity(2) / 2.0, identity(2) / 2.0};
  CHECK_THROWS_AS(cq_state(skew), InvalidStateError);
}

TEST_CASE("cq_state linearity in the spec blocks") {
  Rng rng(31);
  Mat b0 = ginibre(2, 2, rng), b1 = ginibre(2, 2, rng);
  b0 = b0 * b0.adjoint();
  b0 /= b0.trace().real();
  b1 = b1 * b1.adjoint();
  b1 /= b1.trace().real();
  CQSpec spec;
  spec.probs = {0.3, 0.7};
  spec.basis = {ket(2, 0), ket(2, 1)};
  spec.blocks = {b0, b1};
  const Mat merged = cq_state(spec).rho;
  const Mat sum = 0.3 * tensor(basis_projector(2, 0), b0) +
                  0.7 * tensor(basis_projector(2, 1), b1);
  CHECK((merged - sum).norm() < 1e-12);
}

TEST_CASE("example states") {
  const BipartiteState cc = example_cc_state();
  CHECK(cc.rho.isDiagonal(1e-15));
  CHECK(cc.rho(0, 0).real() == doctest::Approx(0.5));
  CHECK(cc.rho(3, 3).real() == doctest::Approx(0.5));
  CHECK(purity(cc.rho) == doctest::Approx(0.5));

  const BipartiteState post = example_post_channel_state();
  CHECK(std::abs(post.rho.trace() - Complex(1.0)) < 1e-14);
  CHECK(validate_density(post.rho).ok);

  const BipartiteState bell = bell_state();
  CHECK(purity(bell.rho) == doctest::Approx(1.0));
  CHECK((bell.reduced_a() - identity(2) / 2.0).norm() < 1e-14);
}

TEST_CASE("random_state: determinism and validity") {
  for (std::uint64_t seed : {1ULL, 42ULL, 999ULL}) {
    const BipartiteState a = random_state(2, 3, seed);
    const BipartiteState b = random_state(2, 3, seed);
    CHECK((a.rho - b.rho).norm() == 0.0);
    CHECK(validate_density(a.rho).ok);
  }
  CHECK((random_state(2, 2, 1).rho - random_state(2, 2, 2).rho).norm() > 1e-3);
}

TEST_CASE("random_state mean purity matches the HS-ensemble value") {
  // Square Ginibre N = M = 4: E[Tr rho^2] = (N + M)/(N M + 1) = 8/17.
  double acc = 0.0;
  const int n = 1000;
  for (int t = 0; t < n; ++t) acc += purity(random_state(2, 2, 5000 + t).rho);
  CHECK(acc / n == doctest::Approx(8.0 / 17.0).epsilon(0.05));
  CHECK(std::abs(acc / n - 8.0 / 17.0) < 0.02);
}

TEST_CASE("random_cq_state: valid and deterministic") {
  const BipartiteState a = random_cq_state(2, 2, 77);
  const BipartiteState b = random_cq_state(2, 2, 77);
  CHECK((a.rho - b.rho).norm() == 0.0);
  CHECK(validate_density(a.rho).ok);
  const BipartiteState c = random_cq_state(3, 2, 78);
  CHECK(validate_density(c.rho).ok);
  CHECK(c.dims.dA == 3);
}
