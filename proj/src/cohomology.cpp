#include "leibniz/cohomology.hpp"

#include <stdexcept>

namespace leibniz {

Vector flatten(const Matrix& m) {
  Vector v(m.rows() * m.cols());
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) v(r * m.cols() + c) = m(r, c);
  return v;
}

Matrix unflatten(const Vector& v, Index dim) {
  Matrix m(dim, dim);
  for (Index r = 0; r < dim; ++r)
    for (Index c = 0; c < dim; ++c) m(r, c) = v(r * dim + c);
  return m;
}

bool is_derivation(const Algebra& a, const Matrix& d) {
  const Index n = a.dim();
  if (d.rows() != n || d.cols() != n) return false;
  std::vector<Vector> images;
  for (Index i = 0; i < n; ++i) images.push_back(d.col(i));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vector lhs = d * a.product(i, j);
      const Vector rhs =
          bracket(a, images[i], unit_vector<Scalar>(n, j)) + bracket(a, unit_vector<Scalar>(n, i), images[j]);
      if (lhs != rhs) return false;
    }
  return true;
}

DerivationSpace derivation_space(const Algebra& a) {
  if (!is_leibniz(a)) throw ContractError("derivation_space: not a Leibniz algebra");
  const Index n = a.dim();
  auto var = [n](Index r, Index c) { return r * n + c; };

  // Coefficient of e_t in d([e_i,e_j]) - [d e_i, e_j] - [e_i, d e_j]:
  //   sum_k g_ij^k d_tk - sum_k d_ki g_kj^t - sum_k d_kj g_ik^t
  SparseEchelon<Scalar> system(n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Vector gij = a.product(i, j);
      std::vector<Vector> right_i, left_j;  // [e_k, e_j] and [e_i, e_k]
      for (Index k = 0; k < n; ++k) {
        right_i.push_back(a.product(k, j));
        left_j.push_back(a.product(i, k));
      }
      for (Index t = 0; t < n; ++t) {
        SparseEchelon<Scalar>::Row row;
        for (Index k = 0; k < n; ++k) {
          if (!gij(k).is_zero()) row[var(t, k)] += gij(k);
          if (!right_i[k](t).is_zero()) row[var(k, i)] -= right_i[k](t);
          if (!left_j[k](t).is_zero()) row[var(k, j)] -= left_j[k](t);
        }
        system.add_row(std::move(row));
      }
    }
  }

  DerivationSpace out;
  for (const Vector& v : system.kernel_basis()) out.basis.push_back(unflatten(v, n));
  return out;
}

DerivationSpace inner_derivation_space(const Algebra& a) {
  const Index n = a.dim();
  std::vector<Vector> flat;
  for (Index i = 0; i < n; ++i) flat.push_back(flatten(right_operator(a, unit_vector<Scalar>(n, i))));
  DerivationSpace out;
  for (const Vector& v : span_basis(flat, n * n)) {
    Matrix m = unflatten(v, n);
    if (!is_derivation(a, m)) throw ContractError("inner_derivation_space: right operator is not a derivation");
    out.basis.push_back(std::move(m));
  }
  return out;
}

CohomologyReport first_cohomology(const Algebra& a) {
  return first_cohomology(a, derivation_space(a), inner_derivation_space(a));
}

CohomologyReport first_cohomology(const Algebra& a, const DerivationSpace& der, const DerivationSpace& inn) {
  std::vector<Vector> der_flat;
  for (const auto* space : {&der, &inn})
    for (const Matrix& m : space->basis)
      if (m.rows() != a.dim() || m.cols() != a.dim()) throw ContractError("first_cohomology: wrong matrix shape");
  for (const Matrix& d : der.basis) der_flat.push_back(flatten(d));
  for (const Matrix& r : inn.basis)
    if (!in_span(der_flat, flatten(r)))
      throw std::logic_error("first_cohomology: inner derivation outside the computed derivation space");
  if (inn.dim() > der.dim()) throw std::logic_error("first_cohomology: dim Inn exceeds dim Der");
  return {der.dim(), inn.dim(), der.dim() - inn.dim()};
}

}  // namespace leibniz
