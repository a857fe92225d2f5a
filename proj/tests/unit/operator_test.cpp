// Copyright 2026 The qasym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qasym/errors.hpp"
#include "qasym/operator.hpp"
#include "qasym/random.hpp"

namespace qasym {
namespace {

TEST(Operator, RejectsNonSquareAndNonFinite) {
  EXPECT_THROW(Operator(Matrix::Zero(3, 2)), InputError);
  Matrix m = Matrix::Identity(2, 2);
  m(0, 1) = Complex(std::nan(""), 0.0);
  EXPECT_THROW(Operator{m}, InputError);
  EXPECT_THROW(Superoperator(Matrix::Identity(3, 3)), InputError);
}

TEST(Operator, PauliAlgebra) {
  const Operator x = pauli::x();
  const Operator y = pauli::y();
  const Operator z = pauli::z();
  EXPECT_LT((x * y - kI * z).norm(), 1e-15);
  EXPECT_LT((x * x - Operator::identity(2)).norm(), 1e-15);
  EXPECT_LT((commutator(y, z) - 2.0 * kI * x).norm(), 1e-15);
}

TEST(Vectorization, KroneckerIdentityHoldsForRandomMatrices) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = 2 + trial % 3;
    const Matrix a = ginibre(d, d, rng);
    const Matrix b = ginibre(d, d, rng);
    const Operator x(ginibre(d, d, rng));
    const Vector lhs = vectorize(Operator(a * x.matrix() * b));
    const Vector rhs = kron(b.transpose(), a) * vectorize(x);
    EXPECT_LT((lhs - rhs).norm(), 1e-12);
    EXPECT_TRUE(devectorize(vectorize(x)).matrix() == x.matrix());
  }
}

TEST(Vectorization, HilbertSchmidtInnerProduct) {
  Rng rng(5);
  const Operator x(ginibre(3, 3, rng));
  const Operator y(ginibre(3, 3, rng));
  EXPECT_LT(std::abs(hs_inner(x, y) - (x.adjoint() * y).trace()), 1e-12);
  EXPECT_LT(std::abs(hs_inner(x, y) - std::conj(hs_inner(y, x))), 1e-12);
}

TEST(Superoperator, KrausMatchesEntrywiseFormula) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Index d = 2 + static_cast<Index>(seed % 3);
    const auto kraus = random_stinespring_kraus(d, 2, seed);
    const Superoperator s = superop_from_kraus(kraus, Picture::heisenberg);
    EXPECT_LT((s.matrix() - oracle::heisenberg_superop(oracle::matrices(kraus))).norm(), 1e-13);
  }
}

TEST(Superoperator, PicturesAreHilbertSchmidtDual) {
  Rng rng(9);
  const auto kraus = random_stinespring_kraus(3, 2, 21);
  const Superoperator h = superop_from_kraus(kraus, Picture::heisenberg);
  const Superoperator sch = superop_from_kraus(kraus, Picture::schrodinger);
  EXPECT_LT((hs_adjoint(h).matrix() - sch.matrix()).norm(), 1e-13);
  const Operator rho(ginibre(3, 3, rng));
  const Operator x(ginibre(3, 3, rng));
  EXPECT_LT(std::abs(hs_inner(sch(rho), x) - hs_inner(rho, h(x))), 1e-12);
}

TEST(Superoperator, CompositionAndPower) {
  const auto kraus = random_unital_kraus(2, 2, 4);
  const Superoperator s = superop_from_kraus(kraus, Picture::heisenberg);
  EXPECT_LT(((s * s * s).matrix() - s.power(3).matrix()).norm(), 1e-13);
  EXPECT_LT((s.power(0).matrix() - Matrix::Identity(4, 4)).norm(), 1e-15);
}

TEST(ValidateUcp, RandomChannelsPass) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Index d = 2 + static_cast<Index>(seed % 3);
    const auto s = superop_from_kraus(random_stinespring_kraus(d, 3, seed), Picture::heisenberg);
    const UcpReport r = validate_ucp(s);
    EXPECT_TRUE(r.ok()) << "seed " << seed;
    EXPECT_GE(r.min_choi_eigenvalue, -1e-12);
    EXPECT_LT(r.unitality_residual, 1e-12);
  }
}

TEST(ValidateUcp, UnitalMixturesHaveUnitalDual) {
  const auto s = superop_from_kraus(random_unital_kraus(3, 4, 8), Picture::heisenberg);
  const UcpReport r = validate_ucp(s);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.is_trace_preserving_dual);
}

TEST(ValidateUcp, TransposeIsNotCompletelyPositive) {
  const Superoperator t = Superoperator::from_action(2, [](const Operator& x) { return x.transpose(); });
  const UcpReport r = validate_ucp(t);
  EXPECT_FALSE(r.is_cp);
  EXPECT_TRUE(r.is_unital);
  EXPECT_NEAR(r.min_choi_eigenvalue, -1.0, 1e-12);
}

TEST(ValidateUcp, ScaledKrausIsNotUnital) {
  const std::vector<Operator> k{2.0 * Operator::identity(2)};
  const UcpReport r = validate_ucp(superop_from_kraus(k, Picture::heisenberg));
  EXPECT_TRUE(r.is_cp);
  EXPECT_FALSE(r.is_unital);
}

TEST(ChoiMatrix, HermitianAndTraceEqualsDimForUnital) {
  const auto s = superop_from_kraus(random_unital_kraus(3, 2, 17), Picture::heisenberg);
  const Operator c = choi_matrix(s);
  EXPECT_TRUE(c.is_hermitian(1e-12));
  EXPECT_NEAR(c.trace().real(), 3.0, 1e-12);
}

TEST(Random, SameSeedIsBitIdentical) {
  const auto a = random_unital_kraus(3, 3, 42);
  const auto b = random_unital_kraus(3, 3, 42);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(a[i].matrix() == b[i].matrix());
  const auto c = random_unital_kraus(3, 3, 43);
  EXPECT_FALSE(a[0].matrix() == c[0].matrix());
}

TEST(Random, HaarUnitaryIsUnitary) {
  Rng rng(3);
  for (Index d = 1; d <= 6; ++d) {
    const Matrix u = haar_unitary(d, rng);
    EXPECT_LT((u.adjoint() * u - Matrix::Identity(d, d)).norm(), 1e-13);
  }
}

TEST(Random, DerivedSeedsDiffer) {
  EXPECT_NE(derive_seed(7, 0), derive_seed(7, 1));
  EXPECT_NE(derive_seed(7, 0), derive_seed(8, 0));
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
}

TEST(Random, UniformStaysInUnitInterval) {
  Rng rng(123);
  double lo = 1.0;
  double hi = 0.0;
  double mean = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    mean += u / 20000.0;
  }
  EXPECT_GE(lo, 0.0);
  EXPECT_LT(hi, 1.0);
  EXPECT_NEAR(mean, 0.5, 0.01);
}

}  // namespace
}  // namespace qasym
