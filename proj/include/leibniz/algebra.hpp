#ifndef LEIBNIZ_ALGEBRA_HPP
#define LEIBNIZ_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/linalg.hpp"

namespace leibniz {

/// Finite-dimensional algebra given by structure constants in a labelled basis.
///
/// product(i, j) holds the coordinates of [e_i, e_j]; the left factor is the
/// first index. Products that are never set are zero. Values are immutable
/// once built and handed to the algorithms below.
class Algebra {
 public:
  using Key = std::pair<Index, Index>;

  Algebra() = default;
  explicit Algebra(std::vector<std::string> labels);

  /// Basis labelled e1..en.
  static Algebra with_dimension(Index dim, const std::string& prefix = "e");

  Index dim() const { return static_cast<Index>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Index i) const { return labels_.at(static_cast<std::size_t>(i)); }
  std::optional<Index> index_of(const std::string& label) const;

  /// Replaces [e_i, e_j]. A zero vector erases the entry.
  void set_product(Index i, Index j, const Vector& result);
  /// [e_i, e_j] += coeff * e_k
  void add_product(Index i, Index j, Index k, const Scalar& coeff = Scalar(1));

  Vector product(Index i, Index j) const;
  const std::map<Key, Vector>& products() const { return products_; }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.labels_ == b.labels_ && a.products_ == b.products_;
  }

 private:
  void check_index(Index i) const;

  std::vector<std::string> labels_;
  std::map<Key, Vector> products_;  // only nonzero results are stored
};

/// One basis triple where [x,[y,z]] - [[x,y],z] + [[x,z],y] is nonzero.
struct LeibnizViolation {
  Index i, j, k;
  Vector residual;
};

Vector bracket(const Algebra& a, const Vector& x, const Vector& y);

/// All nonzero residuals of the right Leibniz identity
/// [x,[y,z]] = [[x,y],z] - [[x,z],y] over basis triples, in (i,j,k) order.
std::vector<LeibnizViolation> leibniz_residual(const Algebra& a);

inline bool is_leibniz(const Algebra& a) { return leibniz_residual(a).empty(); }

/// Matrix of R_x : y -> [y, x].
Matrix right_operator(const Algebra& a, const Vector& x);
/// Matrix of L_x : y -> [x, y].
Matrix left_operator(const Algebra& a, const Vector& x);

/// Structure constants in the basis given by the columns of p.
/// Throws ContractError if p is singular.
Algebra change_of_basis(const Algebra& a, const Matrix& p);

/// Block sum; labels of b that clash with a get a trailing prime.
Algebra direct_sum(const Algebra& a, const Algebra& b);

/// Bilinear map as a dim x dim^2 matrix: column i*dim+j holds [e_i, e_j].
Matrix structure_matrix(const Algebra& a);

std::string render_vector(const Algebra& a, const Vector& v);

}  // namespace leibniz

#endif  // LEIBNIZ_ALGEBRA_HPP
