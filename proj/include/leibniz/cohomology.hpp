#ifndef LEIBNIZ_COHOMOLOGY_HPP
#define LEIBNIZ_COHOMOLOGY_HPP

#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Subspace of End(L) given by an echelonized basis over the dim^2
/// coordinates (entry (r,c) at index r*dim + c).
struct DerivationSpace {
  std::vector<Matrix> basis;

  Index dim() const { return static_cast<Index>(basis.size()); }
};

/// d([x,y]) = [d(x),y] + [x,d(y)] on all basis pairs.
bool is_derivation(const Algebra& a, const Matrix& d);

/// Der(L) as the kernel of the linear constraints the identity imposes on
/// the entries of d. Throws ContractError on non-Leibniz input.
DerivationSpace derivation_space(const Algebra& a);

/// Span of the right operators R_{e_i}.
DerivationSpace inner_derivation_space(const Algebra& a);

struct CohomologyReport {
  Index der_dim = 0;
  Index inn_dim = 0;
  Index h1_dim = 0;
};

/// dim Der - dim Inn, after checking Inn is a subspace of Der.
/// A failed containment check throws std::logic_error.
CohomologyReport first_cohomology(const Algebra& a);
CohomologyReport first_cohomology(const Algebra& a, const DerivationSpace& der, const DerivationSpace& inn);

inline Index h1_dimension(const Algebra& a) { return first_cohomology(a).h1_dim; }

/// Row-major flattening used for the dim^2 coordinate space.
Vector flatten(const Matrix& m);
Matrix unflatten(const Vector& v, Index dim);

}  // namespace leibniz

#endif  // LEIBNIZ_COHOMOLOGY_HPP
