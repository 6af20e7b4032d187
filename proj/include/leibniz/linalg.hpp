#ifndef LEIBNIZ_LINALG_HPP
#define LEIBNIZ_LINALG_HPP

// Exact dense linear algebra over any field type usable as an Eigen scalar.
// Eigen provides storage and expression arithmetic; elimination is done here
// because Eigen's decompositions rely on magnitude thresholds.

#include <Eigen/Core>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

using Index = Eigen::Index;

template <typename S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Scalar>;
using Vector = VectorX<Scalar>;

/// Violated precondition of an operation (non-square, non-nilpotent, singular, ...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {
template <typename S>
bool scalar_is_zero(const S& s) {
  return s == S(0);
}
}  // namespace detail

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      if (!detail::scalar_is_zero<S>(m(r, c))) return false;
  return true;
}

template <typename S>
VectorX<S> unit_vector(Index dim, Index i) {
  VectorX<S> v = VectorX<S>::Zero(dim);
  v(i) = S(1);
  return v;
}

/// Reduced row echelon form together with its pivot columns.
template <typename S>
struct Echelon {
  MatrixX<S> reduced;         // rank() nonzero rows first, pivots equal to 1
  std::vector<Index> pivots;  // pivot column of each nonzero row, increasing

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Gauss-Jordan elimination; the pivot of each column is the first row
/// (in current order) holding a nonzero entry there.
template <typename Derived>
Echelon<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  Echelon<S> e{m, {}};
  MatrixX<S>& a = e.reduced;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index pivot = -1;
    for (Index r = row; r < a.rows(); ++r) {
      if (!detail::scalar_is_zero<S>(a(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    const S inv = S(1) / a(row, col);
    for (Index c = col; c < a.cols(); ++c)
      if (!detail::scalar_is_zero<S>(a(row, c))) a(row, c) = a(row, c) * inv;
    for (Index r = 0; r < a.rows(); ++r) {
      if (r == row || detail::scalar_is_zero<S>(a(r, col))) continue;
      const S factor = a(r, col);
      for (Index c = col; c < a.cols(); ++c)
        if (!detail::scalar_is_zero<S>(a(row, c))) a(r, c) = a(r, c) - factor * a(row, c);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return row_echelon(m).rank();
}

/// Basis of {v : m v = 0}; one vector per free column, with a 1 in that
/// column and zeros in the other free columns.
template <typename Derived>
std::vector<VectorX<typename Derived::Scalar>> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const Echelon<S> e = row_echelon(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<VectorX<S>> basis;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    VectorX<S> v = VectorX<S>::Zero(m.cols());
    v(free) = S(1);
    for (Index r = 0; r < e.rank(); ++r) v(e.pivots[static_cast<std::size_t>(r)]) = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Stacks vectors as the columns of a matrix.
template <typename S>
MatrixX<S> as_columns(const std::vector<VectorX<S>>& vs, Index dim) {
  MatrixX<S> m(dim, static_cast<Index>(vs.size()));
  for (std::size_t k = 0; k < vs.size(); ++k) m.col(static_cast<Index>(k)) = vs[k];
  return m;
}

/// Echelonized basis (RREF rows) of the span of the given vectors.
template <typename S>
std::vector<VectorX<S>> span_basis(const std::vector<VectorX<S>>& vs, Index dim) {
  MatrixX<S> m(static_cast<Index>(vs.size()), dim);
  for (std::size_t k = 0; k < vs.size(); ++k) m.row(static_cast<Index>(k)) = vs[k].transpose();
  const Echelon<S> e = row_echelon(m);
  std::vector<VectorX<S>> basis;
  for (Index r = 0; r < e.rank(); ++r) basis.push_back(e.reduced.row(r).transpose());
  return basis;
}

template <typename S>
bool in_span(const std::vector<VectorX<S>>& basis, const VectorX<S>& v) {
  if (basis.empty()) return is_zero_matrix(v);
  const Index dim = v.size();
  MatrixX<S> m = as_columns(basis, dim);
  MatrixX<S> aug(dim, m.cols() + 1);
  aug << m, v;
  return rank(aug) == rank(m);
}

/// Exact inverse, or nullopt for singular input.
template <typename Derived>
std::optional<MatrixX<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw ContractError("inverse: matrix is not square");
  const Index n = m.rows();
  if (n == 0) return MatrixX<S>(0, 0);
  MatrixX<S> aug(n, 2 * n);
  aug << m, MatrixX<S>::Identity(n, n);
  const Echelon<S> e = row_echelon(aug);
  if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1) return std::nullopt;
  return MatrixX<S>(e.reduced.rightCols(n));
}

/// Jordan block sizes of a nilpotent matrix, largest first, from the rank
/// chain r_k = rank(m^k): blocks of size exactly k number r_{k-1} - 2 r_k + r_{k+1}.
template <typename Derived>
std::vector<int> nilpotent_partition(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw ContractError("nilpotent_partition: matrix is not square");
  const Index n = m.rows();
  std::vector<Index> ranks{n};
  MatrixX<S> power = MatrixX<S>::Identity(n, n);
  for (Index k = 1; k <= n; ++k) {
    if (ranks.back() == 0) {  // m^{k-1} = 0 already forces m^n = 0
      ranks.push_back(0);
      continue;
    }
    power = (power * m).eval();
    ranks.push_back(is_zero_matrix(power) ? 0 : rank(power));
  }
  if (n > 0 && ranks.back() != 0) throw ContractError("nilpotent_partition: matrix is not nilpotent");
  ranks.push_back(0);

  std::vector<int> parts;
  for (Index k = n; k >= 1; --k) {
    const Index count = ranks[k - 1] - 2 * ranks[k] + ranks[k + 1];
    for (Index c = 0; c < count; ++c) parts.push_back(static_cast<int>(k));
  }
  return parts;
}

/// Incremental row reduction for large sparse homogeneous systems.
/// Rows are kept with pivot coefficient 1; reduction happens on insert.
template <typename S>
class SparseEchelon {
 public:
  using Row = std::map<Index, S>;

  explicit SparseEchelon(Index cols) : cols_(cols) {}

  Index cols() const { return cols_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }

  /// Reduces the row against existing pivots; returns true if it was independent.
  bool add_row(Row row) {
    prune(row);
    auto it = row.begin();
    while (it != row.end()) {
      auto piv = rows_.find(it->first);
      if (piv == rows_.end()) {
        ++it;
        continue;
      }
      const S factor = it->second;
      const Index col = it->first;
      for (const auto& [c, v] : piv->second) {
        auto [slot, inserted] = row.try_emplace(c, S(0));
        slot->second -= factor * v;
      }
      row.erase(col);
      prune(row);
      it = row.upper_bound(col);
    }
    if (row.empty()) return false;
    const Index lead = row.begin()->first;
    const S inv = S(1) / row.begin()->second;
    for (auto& [c, v] : row) v *= inv;
    rows_.emplace(lead, std::move(row));
    return true;
  }

  /// Kernel basis of the accumulated system, one vector per free column.
  std::vector<VectorX<S>> kernel_basis() const {
    std::map<Index, Row> reduced = rows_;
    // back substitution, highest pivot first
    for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
      const Index p = it->first;
      for (auto& [q, row] : reduced) {
        if (q >= p) break;
        auto hit = row.find(p);
        if (hit == row.end()) continue;
        const S factor = hit->second;
        for (const auto& [c, v] : it->second) {
          auto [slot, inserted] = row.try_emplace(c, S(0));
          slot->second -= factor * v;
        }
        prune(row);
      }
    }
    std::vector<VectorX<S>> basis;
    for (Index free = 0; free < cols_; ++free) {
      if (reduced.count(free)) continue;
      VectorX<S> v = VectorX<S>::Zero(cols_);
      v(free) = S(1);
      for (const auto& [p, row] : reduced) {
        auto hit = row.find(free);
        if (hit != row.end()) v(p) = -hit->second;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  static void prune(Row& row) {
    for (auto it = row.begin(); it != row.end();) {
      if (detail::scalar_is_zero<S>(it->second))
        it = row.erase(it);
      else
        ++it;
    }
  }

  Index cols_;
  std::map<Index, Row> rows_;  // keyed by pivot column
};

}  // namespace leibniz

#endif  // LEIBNIZ_LINALG_HPP
