#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("derivations of abelian algebras are all linear maps") {
  for (int k = 0; k <= 4; ++k) {
    const Algebra a = family(Family::Abelian, k);
    CHECK(derivation_space(a).dim() == k * k);
    CHECK(inner_derivation_space(a).dim() == 0);
    CHECK(h1_dimension(a) == k * k);
  }
}

TEST_CASE("dim Der for N, M and M^{1,alpha}") {
  for (int n : {7, 9, 11}) {
    CAPTURE(n);
    CHECK(derivation_space(family(Family::N, n)).dim() == 3 * (n - 1) / 2 + 7);
  }
  for (int n = 7; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(derivation_space(family(Family::M, n)).dim() == n + 6);
    for (const char* alpha : {"1", "1/2", "2", "3+1i", "-3", "1/3"}) {
      CAPTURE(alpha);
      CHECK(derivation_space(m_alpha(n, Scalar::parse(alpha))).dim() == n + 5);
    }
    // At alpha = -1 the z1 products are antisymmetric and one more derivation appears.
    CHECK(derivation_space(m_alpha(n, Scalar(-1))).dim() == n + 6);
    CHECK(h1_dimension(m_alpha(n, Scalar(-1))) == n + 3);
  }
}

TEST_CASE("inner derivations") {
  const Algebra m7 = family(Family::M, 7);
  const DerivationSpace inn = inner_derivation_space(m7);
  CHECK(inn.dim() == 2);
  const std::vector<Vector> flat{flatten(inn.basis[0]), flatten(inn.basis[1])};
  CHECK(in_span(flat, flatten(right_operator(m7, basis_vector(m7, "y1")))));
  CHECK(in_span(flat, flatten(right_operator(m7, basis_vector(m7, "y6")))));

  CHECK(inner_derivation_space(m_alpha(7, Scalar(1))).dim() == 3);
  // [f1,e0] = e6 makes R_f1 independent of the other right operators, so Inn(N(n)) has dim n-1.
  CHECK(inner_derivation_space(family(Family::N, 7)).dim() == 6);
  CHECK(inner_derivation_space(family(Family::N, 9)).dim() == 8);
}

TEST_CASE("first cohomology") {
  for (int n = 7; n <= 10; ++n) {
    CHECK(h1_dimension(family(Family::M, n)) == n + 4);
    CHECK(h1_dimension(m_alpha(n, Scalar(mpq_class(1, 2)))) == n + 2);
  }
  // Quotient reading with the computed Inn: (3(n-1)/2 + 7) - (n-1).
  for (int n : {7, 9, 11}) CHECK(h1_dimension(family(Family::N, n)) == (n + 13) / 2);

  const CohomologyReport r = first_cohomology(family(Family::M, 7));
  CHECK(r.der_dim == 13);
  CHECK(r.inn_dim == 2);
  CHECK(r.h1_dim == 11);
}

TEST_CASE("containment failure aborts loudly") {
  const Algebra m7 = family(Family::M, 7);
  const DerivationSpace der;  // empty, so Inn cannot sit inside it
  CHECK_THROWS_AS(first_cohomology(m7, der, inner_derivation_space(m7)), std::logic_error);
}

TEST_CASE("non-Leibniz input is rejected") {
  CHECK_THROWS_AS(derivation_space(mutated_m7()), ContractError);
  CHECK_THROWS_AS(h1_dimension(mutated_m7()), ContractError);
}

TEST_CASE("every derivation satisfies the identity; Inn is an ideal of Der") {
  Rng rng(31);
  for (const Algebra& a : leibniz_pool()) {
    const DerivationSpace der = derivation_space(a);
    for (const Matrix& d : der.basis) {
      CHECK(is_derivation(a, d));
      CHECK(satisfies_derivation_identity(a, d));
    }
    Matrix d = Matrix::Zero(a.dim(), a.dim());
    for (const Matrix& b : der.basis) d += b * random_scalar(rng);
    for (int s = 0; s < 5; ++s) {
      const Vector x = random_vector(rng, a.dim());
      const Matrix rx = right_operator(a, x);
      CHECK(d * rx - rx * d == right_operator(a, d * x));
    }
  }
}

TEST_CASE("dim Der is invariant under change of basis") {
  Rng rng(41);
  for (int s = 0; s < 30; ++s) {
    const Algebra& a = pick(rng, leibniz_pool());
    const Algebra b = change_of_basis(a, random_invertible(rng, a.dim()));
    CHECK(derivation_space(a).dim() == derivation_space(b).dim());
    CHECK(inner_derivation_space(a).dim() == inner_derivation_space(b).dim());
  }
}

TEST_CASE("flatten round trip and non-derivations") {
  Rng rng(2);
  const Matrix m = random_matrix(rng, 4, 4);
  CHECK(unflatten(flatten(m), 4) == m);
  const Algebra m7 = family(Family::M, 7);
  CHECK(is_derivation(m7, Matrix::Identity(8, 8) * Scalar(0)));
  CHECK_FALSE(is_derivation(m7, Matrix::Identity(8, 8)));
}
