#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "grover/analytics.hpp"
#include "grover/operators.hpp"
#include "grover/oracle.hpp"
#include "test_support.hpp"

namespace grover {
namespace {

using testing::Cx;
using testing::Mat;

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

TEST(Hadamard, ZeroGivesUniform) {
  CostTally tally;
  const Ket<> k = hadamard(basis_ket(3, BasisIndex(0)), tally);
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(std::abs(k[i] - Cx(1 / std::sqrt(8.0))), 0.0, 1e-15);
  EXPECT_EQ(tally.single_qubit_ops(), 3u);
  EXPECT_EQ(tally.oracle_queries(), 0u);
}

TEST(Hadamard, OneOnOneQubit) {
  CostTally tally;
  const Ket<> k = hadamard(basis_ket(1, BasisIndex(1)), tally);
  EXPECT_NEAR(std::abs(k[0] - Cx(1 / std::sqrt(2.0))), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(k[1] - Cx(-1 / std::sqrt(2.0))), 0.0, 1e-15);
}

TEST(Hadamard, Involution) {
  CostTally tally;
  for (std::uint64_t x = 0; x < 16; ++x) {
    const Ket<> k = hadamard(hadamard(basis_ket(4, BasisIndex(x)), tally), tally);
    EXPECT_NEAR(max_abs(k.amplitudes() - basis_ket(4, BasisIndex(x)).amplitudes()), 0.0, 1e-14);
  }
  EXPECT_EQ(tally.single_qubit_ops(), 16u * 2 * 4);
}

TEST(Hadamard, MatchesReferenceMatrix) {
  std::mt19937_64 gen(21);
  for (int n = 1; n <= 7; ++n) {
    const Ket<> psi = testing::random_ket(n, gen);
    CostTally tally;
    const Eigen::VectorXcd expected = testing::reference_hadamard(n) * psi.amplitudes();
    EXPECT_NEAR(max_abs(hadamard(psi, tally).amplitudes() - expected), 0.0, 1e-12) << n;
  }
}

TEST(InversionAbout, TargetFiveIsDiagonal) {
  const DenseUnitary<> m = inversion_about(basis_ket(3, BasisIndex(5)));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      EXPECT_EQ(m(i, j), Cx(i != j ? 0.0 : (i == 5 ? -1.0 : 1.0)));
}

TEST(InversionAbout, ZeroOnOneQubit) {
  const DenseUnitary<> m = inversion_about(basis_ket(1, BasisIndex(0)));
  Mat expected(2, 2);
  expected << -1, 0, 0, 1;
  EXPECT_EQ(max_abs(m.matrix() - expected), 0.0);
}

TEST(InversionAbout, RejectsUnnormalized) {
  EXPECT_THROW(inversion_about(Ket<>(Eigen::VectorXcd::Constant(4, 1.0))), DomainError);
}

TEST(InversionAbout, ReflectionProperties) {
  std::mt19937_64 gen(22);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 4;
    const Ket<> psi = testing::random_ket(n, gen);
    const Mat m = inversion_about(psi).matrix();
    const Mat id = Mat::Identity(m.rows(), m.cols());
    EXPECT_LE(max_abs(m - m.adjoint()), 1e-12);
    EXPECT_LE(max_abs(m.adjoint() * m - id), 1e-12);
    EXPECT_LE(max_abs(m * m - id), 1e-12);
    EXPECT_LE(max_abs(m - testing::reference_reflection(psi.amplitudes())), 1e-14);
  }
}

TEST(InversionAbout, MatrixFreeReflectAgrees) {
  std::mt19937_64 gen(23);
  const Ket<> psi = testing::random_ket(4, gen);
  const Ket<> s = testing::random_ket(4, gen);
  const Eigen::VectorXcd dense = inversion_about(psi).matrix() * s.amplitudes();
  EXPECT_LE(max_abs(reflect(s, psi).amplitudes() - dense), 1e-14);
}

TEST(PhaseFlip, OnUniform) {
  CostTally tally;
  const Ket<> k = phase_flip(uniform_ket(3), BasisIndex(5), tally);
  const double a = 1 / std::sqrt(8.0);
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(k[i].real(), i == 5 ? -a : a, 1e-15);
  EXPECT_EQ(tally.oracle_queries(), 1u);
  EXPECT_EQ(tally.phase_ops(), 1u);
}

TEST(PhaseFlip, BasisStates) {
  CostTally tally;
  for (std::uint64_t x = 0; x < 8; ++x) {
    const Ket<> k = phase_flip(basis_ket(3, BasisIndex(x)), BasisIndex(2), tally);
    EXPECT_EQ(k[static_cast<Eigen::Index>(x)], Cx(x == 2 ? -1.0 : 1.0));
  }
  EXPECT_THROW(phase_flip(basis_ket(3, BasisIndex(0)), BasisIndex(8), tally), DomainError);
}

TEST(PhaseFlipZero, NegatesFirstAmplitudeOnly) {
  Eigen::VectorXcd v(4);
  v << 0.5, Cx(0.5, 0.1), -0.3, 0.2;
  CostTally tally;
  const Ket<> k = phase_flip_zero(Ket<>(v), tally);
  EXPECT_EQ(k[0], Cx(-0.5));
  EXPECT_EQ(k[1], v[1]);
  EXPECT_EQ(k[3], v[3]);
  EXPECT_EQ(max_abs(phase_flip_zero(k, tally).amplitudes() - v), 0.0);
  EXPECT_EQ(tally.phase_ops(), 2u);
  EXPECT_EQ(tally.oracle_queries(), 0u);
}

TEST(PhaseFlipZero, AfterHadamardOnOneQubit) {
  CostTally tally;
  const Ket<> k = phase_flip_zero(hadamard(basis_ket(1, BasisIndex(0)), tally), tally);
  EXPECT_NEAR(k[0].real(), -1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(k[1].real(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(GroverIterate, FirstAndSecondIterations) {
  OracleBox box(3, BasisIndex(5));
  CostTally tally;
  const Ket<> psi1 = grover_iterate(uniform_ket(3), box, tally);
  const Ket<> psi2 = grover_iterate(psi1, box, tally);
  const double s1 = 1 / (4 * std::sqrt(2.0));
  const double s2 = 1 / (8 * std::sqrt(2.0));
  for (int i = 0; i < 8; ++i) {
    EXPECT_NEAR(std::abs(psi1[i] - Cx(s1 * (i == 5 ? 5 : 1))), 0.0, 1e-15) << i;
    EXPECT_NEAR(std::abs(psi2[i] - Cx(s2 * (i == 5 ? 11 : -1))), 0.0, 1e-15) << i;
  }
  EXPECT_EQ(tally.single_qubit_ops(), 2u * 2 * 3);
  EXPECT_EQ(tally.oracle_queries(), 2u);
  EXPECT_EQ(tally.phase_ops(), 4u);
  EXPECT_EQ(box.query_count(), 2u);
}

TEST(GroverIterate, DimensionMismatch) {
  OracleBox box(3, BasisIndex(5));
  CostTally tally;
  EXPECT_THROW(grover_iterate(uniform_ket(2), box, tally), DomainError);
}

TEST(GroverIterate, DenseMatchesReferenceProduct) {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t x0 = 0; x0 < (1u << n); ++x0) {
      OracleBox box(n, BasisIndex(x0));
      CostTally scratch;
      const auto q = render_dense([&](const Ket<>& s) { return grover_iterate(s, box, scratch); }, n);
      EXPECT_LE(max_abs(q.matrix() - testing::reference_grover_iterate(n, x0)), 1e-12);
    }
  }
}

TEST(StandardOracle, FlipsOutputQubitOnTarget) {
  CostTally tally;
  const Ket<> in = tensor(basis_ket(3, BasisIndex(5)), basis_ket(1, BasisIndex(0)));
  const Ket<> out = standard_oracle_uf(in, BasisIndex(5), tally);
  const Ket<> expected = tensor(basis_ket(3, BasisIndex(5)), basis_ket(1, BasisIndex(1)));
  EXPECT_EQ(max_abs(out.amplitudes() - expected.amplitudes()), 0.0);
  EXPECT_EQ(tally.oracle_queries(), 1u);
}

TEST(StandardOracle, LeavesOtherLabelsAlone) {
  CostTally tally;
  for (std::uint64_t x = 0; x < 8; ++x) {
    if (x == 5) continue;
    const Ket<> in = tensor(basis_ket(3, BasisIndex(x)), basis_ket(1, BasisIndex(0)));
    EXPECT_EQ(max_abs(standard_oracle_uf(in, BasisIndex(5), tally).amplitudes() - in.amplitudes()),
              0.0);
  }
}

TEST(StandardOracle, Errors) {
  CostTally tally;
  EXPECT_THROW(standard_oracle_uf(basis_ket(1, BasisIndex(0)), BasisIndex(0), tally), DomainError);
  EXPECT_THROW(standard_oracle_uf(basis_ket(3, BasisIndex(0)), BasisIndex(4), tally), DomainError);
}

TEST(RenderDense, HadamardOneQubit) {
  CostTally scratch;
  const auto h = render_dense([&](const Ket<>& s) { return hadamard(s, scratch); }, 1);
  Mat expected(2, 2);
  expected << 1, 1, 1, -1;
  expected /= std::sqrt(2.0);
  EXPECT_LE(max_abs(h.matrix() - expected), 1e-15);
}

TEST(RenderDense, TooLargeIsResourceError) {
  auto identity = [](const Ket<>& s) { return s; };
  EXPECT_THROW(render_dense(identity, 13), ResourceError);
}

TEST(RenderDense, NonUnitaryOperatorRejected) {
  auto doubling = [](const Ket<>& s) { return Ket<>(2.0 * s.amplitudes()); };
  EXPECT_THROW(render_dense(doubling, 2), InvariantViolation);
}

TEST(OperatorProperties, QUnitary) {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t x0 = 0; x0 < (1u << n); x0 += 3) {
      OracleBox box(n, BasisIndex(x0));
      CostTally scratch;
      const auto q = render_dense([&](const Ket<>& s) { return grover_iterate(s, box, scratch); }, n);
      EXPECT_LE(DenseUnitary<>::unitarity_error(q.matrix()), 1e-10);
    }
  }
}

TEST(OperatorProperties, NormConservedOverManyIterations) {
  for (int n = 1; n <= 10; ++n) {
    OracleBox box(n, BasisIndex((1u << n) - 1));
    CostTally tally;
    Ket<> psi = uniform_ket(n);
    const std::uint64_t steps = 4 * make_plan(n).K;
    for (std::uint64_t k = 0; k < steps; ++k) {
      psi = grover_iterate(psi, box, tally);
      ASSERT_NEAR(norm(psi), 1.0, 1e-10);
    }
  }
}

TEST(OperatorProperties, ConjugationIdentity) {
  for (int n = 1; n <= 6; ++n) {
    CostTally scratch;
    const auto conj = render_dense(
        [&](const Ket<>& s) { return hadamard(phase_flip_zero(hadamard(s, scratch), scratch), scratch); },
        n);
    const auto direct = inversion_about(uniform_ket(n));
    EXPECT_LE(max_abs(conj.matrix() - direct.matrix()), 1e-10) << n;

    OracleBox box(n, BasisIndex(n % (1u << n)));
    const auto q = render_dense([&](const Ket<>& s) { return grover_iterate(s, box, scratch); }, n);
    const auto composed = -(direct * inversion_about(basis_ket(n, BasisIndex(n % (1u << n)))));
    EXPECT_LE(max_abs(q.matrix() - composed.matrix()), 1e-10) << n;
  }
}

TEST(OperatorProperties, MatrixFreeMatchesDense) {
  std::mt19937_64 gen(24);
  for (int n = 1; n <= 6; ++n) {
    const BasisIndex target((7u * n) % (1u << n));
    OracleBox box(n, target);
    CostTally scratch;
    const auto flip = render_dense([&](const Ket<>& s) { return phase_flip(s, target, scratch); }, n);
    const auto q = render_dense([&](const Ket<>& s) { return grover_iterate(s, box, scratch); }, n);
    for (int trial = 0; trial < 5; ++trial) {
      const Ket<> psi = testing::random_ket(n, gen);
      EXPECT_LE(max_abs(phase_flip(psi, target, scratch).amplitudes() - flip.apply(psi).amplitudes()),
                1e-12);
      EXPECT_LE(max_abs(grover_iterate(psi, box, scratch).amplitudes() - q.apply(psi).amplitudes()),
                1e-12);
    }
  }
}

TEST(CostTally, Accumulates) {
  CostTally t;
  t.add_single_qubit_ops(3);
  t.add_oracle_queries(1);
  t.add_phase_ops(2);
  t.add_single_qubit_ops(3);
  EXPECT_EQ(t.single_qubit_ops(), 6u);
  EXPECT_EQ(t.oracle_queries(), 1u);
  EXPECT_EQ(t.phase_ops(), 2u);
}

}  // namespace
}  // namespace grover
