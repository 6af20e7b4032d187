#ifndef LEIBNIZ_GRADATIONS_HPP
#define LEIBNIZ_GRADATIONS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Integer weight per basis vector: V_w is spanned by the basis vectors of weight w.
struct WeightAssignment {
  std::vector<int> weights;

  friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;
};

struct GradationReport {
  bool valid = false;
  std::vector<int> occupied;               // sorted distinct weights
  std::map<int, Index> component_dims;     // weight -> dim V_w
  bool connected = false;                  // occupied weights form an interval
  std::optional<Index> length;             // only defined for connected gradations
  bool maximum_length = false;             // valid, connected, length == dim
  std::vector<std::pair<Index, Index>> violations;  // (i,j) with [e_i,e_j] not in V_{w_i+w_j}
};

/// Checks [V_a, V_b] in V_{a+b} for the diagonal gradation given by w.
GradationReport verify_gradation(const Algebra& a, const WeightAssignment& w);

/// Multi-line report with one row per occupied weight.
std::string render_gradation(const Algebra& a, const WeightAssignment& w, const GradationReport& r);

/// Lexicographically least maximum-length diagonal gradation with weights in
/// [-max_abs, max_abs], taken up to w -> -w (the first nonzero weight is positive).
/// nullopt means none exists among gradations diagonal in this basis.
std::optional<WeightAssignment> search_diagonal_gradation(const Algebra& a, int max_abs);

inline int default_max_abs(const Algebra& a) { return static_cast<int>(2 * a.dim()); }

/// Splits d into weight-homogeneous parts: entry (r,c) has weight w_r - w_c.
std::map<int, Matrix> homogeneous_components(const Matrix& d, const WeightAssignment& w);

/// dim W_i for each weight i with W_i nonzero, where Der = sum of W_i.
/// Throws ContractError if w is not a gradation of a or some input is not a derivation.
std::map<int, Index> graded_derivation_split(const Algebra& a, const WeightAssignment& w,
                                             const std::vector<Matrix>& der_basis);

}  // namespace leibniz

#endif  // LEIBNIZ_GRADATIONS_HPP
