#include "leibniz/algebra.hpp"

#include <set>
#include <sstream>

namespace leibniz {

Algebra::Algebra(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw ContractError("empty basis label");
    if (!seen.insert(l).second) throw ContractError("duplicate basis label '" + l + "'");
  }
}

Algebra Algebra::with_dimension(Index dim, const std::string& prefix) {
  std::vector<std::string> labels;
  for (Index i = 1; i <= dim; ++i) labels.push_back(prefix + std::to_string(i));
  return Algebra(std::move(labels));
}

std::optional<Index> Algebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<Index>(i);
  return std::nullopt;
}

void Algebra::check_index(Index i) const {
  if (i < 0 || i >= dim()) throw ContractError("basis index " + std::to_string(i) + " out of range");
}

void Algebra::set_product(Index i, Index j, const Vector& result) {
  check_index(i);
  check_index(j);
  if (result.size() != dim()) throw ContractError("product vector has wrong length");
  if (is_zero_matrix(result))
    products_.erase({i, j});
  else
    products_[{i, j}] = result;
}

void Algebra::add_product(Index i, Index j, Index k, const Scalar& coeff) {
  check_index(k);
  Vector v = product(i, j);
  v(k) += coeff;
  set_product(i, j, v);
}

Vector Algebra::product(Index i, Index j) const {
  check_index(i);
  check_index(j);
  auto it = products_.find({i, j});
  return it == products_.end() ? Vector::Zero(dim()) : it->second;
}

Vector bracket(const Algebra& a, const Vector& x, const Vector& y) {
  if (x.size() != a.dim() || y.size() != a.dim()) throw ContractError("bracket: dimension mismatch");
  Vector out = Vector::Zero(a.dim());
  for (const auto& [key, result] : a.products()) {
    const Scalar& xi = x(key.first);
    const Scalar& yj = y(key.second);
    if (xi.is_zero() || yj.is_zero()) continue;
    const Scalar c = xi * yj;
    for (Index k = 0; k < a.dim(); ++k)
      if (!result(k).is_zero()) out(k) += c * result(k);
  }
  return out;
}

std::vector<LeibnizViolation> leibniz_residual(const Algebra& a) {
  const Index n = a.dim();
  std::vector<Vector> basis;
  for (Index i = 0; i < n; ++i) basis.push_back(unit_vector<Scalar>(n, i));

  std::vector<LeibnizViolation> out;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Vector xy = a.product(i, j);
      for (Index k = 0; k < n; ++k) {
        Vector r = bracket(a, basis[i], a.product(j, k)) - bracket(a, xy, basis[k]) +
                   bracket(a, a.product(i, k), basis[j]);
        if (!is_zero_matrix(r)) out.push_back({i, j, k, std::move(r)});
      }
    }
  }
  return out;
}

Matrix right_operator(const Algebra& a, const Vector& x) {
  if (x.size() != a.dim()) throw ContractError("right_operator: dimension mismatch");
  Matrix m = Matrix::Zero(a.dim(), a.dim());
  for (const auto& [key, result] : a.products()) {
    const Scalar& c = x(key.second);
    if (c.is_zero()) continue;
    m.col(key.first) += c * result;
  }
  return m;
}

Matrix left_operator(const Algebra& a, const Vector& x) {
  if (x.size() != a.dim()) throw ContractError("left_operator: dimension mismatch");
  Matrix m = Matrix::Zero(a.dim(), a.dim());
  for (const auto& [key, result] : a.products()) {
    const Scalar& c = x(key.first);
    if (c.is_zero()) continue;
    m.col(key.second) += c * result;
  }
  return m;
}

Algebra change_of_basis(const Algebra& a, const Matrix& p) {
  const Index n = a.dim();
  if (p.rows() != n || p.cols() != n) throw ContractError("change_of_basis: map has wrong shape");
  auto p_inv = inverse(p);
  if (!p_inv) throw ContractError("change_of_basis: singular basis change");

  std::vector<Vector> cols;
  for (Index c = 0; c < n; ++c) cols.push_back(p.col(c));

  Algebra out(a.labels());
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Vector v = bracket(a, cols[i], cols[j]);
      if (!is_zero_matrix(v)) out.set_product(i, j, *p_inv * v);
    }
  return out;
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  std::vector<std::string> labels = a.labels();
  std::set<std::string> taken(labels.begin(), labels.end());
  for (std::string l : b.labels()) {
    while (taken.count(l)) l += "'";
    taken.insert(l);
    labels.push_back(l);
  }
  Algebra out(std::move(labels));
  const Index n = out.dim();
  const Index off = a.dim();
  for (const auto& [key, result] : a.products()) {
    Vector v = Vector::Zero(n);
    v.head(a.dim()) = result;
    out.set_product(key.first, key.second, v);
  }
  for (const auto& [key, result] : b.products()) {
    Vector v = Vector::Zero(n);
    v.tail(b.dim()) = result;
    out.set_product(key.first + off, key.second + off, v);
  }
  return out;
}

Matrix structure_matrix(const Algebra& a) {
  const Index n = a.dim();
  Matrix m = Matrix::Zero(n, n * n);
  for (const auto& [key, result] : a.products()) m.col(key.first * n + key.second) = result;
  return m;
}

std::string render_vector(const Algebra& a, const Vector& v) {
  std::ostringstream os;
  bool first = true;
  for (Index k = 0; k < v.size(); ++k) {
    if (v(k).is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (v(k).is_one())
      os << a.label(k);
    else if (v(k).is_real())
      os << v(k) << "*" << a.label(k);
    else
      os << "(" << v(k) << ")*" << a.label(k);
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace leibniz
