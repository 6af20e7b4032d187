#ifndef LEIBNIZ_CATALOG_HPP
#define LEIBNIZ_CATALOG_HPP

#include <map>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/gradations.hpp"

namespace leibniz {

enum class Family { L1, KF4, KF5, NGF1, N, M, M1alpha, NullFiliform, Abelian };

/// Family name as used on the command line ("L1", "KF4", ..., "nullfiliform-ml", "abelian").
std::string family_name(Family f);
/// Throws ContractError for unknown names.
Family parse_family(const std::string& name);
const std::vector<Family>& all_families();

struct FamilySpec {
  Family family = Family::Abelian;
  int n = 0;
  std::map<std::string, Scalar> params;  // unset parameters are zero
};

/// Dimension of build(spec) for a given n.
Index family_dim(Family f, int n);
/// p for which the family is advertised as p-filiform at this n.
int advertised_p(Family f, int n);
/// Smallest admissible n.
int min_n(Family f);

/// Parameter names the family accepts at this n, in canonical order:
///   KF4, KF5: alpha_k, beta_k (3 <= k <= n-2); beta_i_k (2 <= i <= n-4, i+2 <= k <= n-2);
///             gamma_k (4 <= k <= n-2)
///   M1alpha:  alpha
std::vector<std::string> parameter_names(Family f, int n);

/// Structure constants of the family. Throws ContractError on an
/// out-of-range n, an even n for N, or an unknown parameter name.
Algebra build(const FamilySpec& spec);

/// Maximum-length weights for M and M^{1,alpha}: y_i -> i (i <= n-2),
/// y_{n-1} -> -1, y_n -> 0, z_1 -> n-1.
WeightAssignment m_family_weights(int n);

/// Leibniz violations of the built algebra; empty means the parameters are admissible.
std::vector<LeibnizViolation> admissible_param_check(const FamilySpec& spec);

}  // namespace leibniz

#endif  // LEIBNIZ_CATALOG_HPP
