#ifndef LEIBNIZ_INVARIANTS_HPP
#define LEIBNIZ_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Descending central sequence L^1 = L, L^{k+1} = [L^k, L].
struct SeriesReport {
  std::vector<std::vector<Vector>> terms;  // echelonized bases of the nonzero terms L^1, L^2, ...
  std::vector<Index> dims;                 // dims of the nonzero terms
  std::optional<Index> nilindex;           // nullopt when the sequence stabilises above zero

  bool nilpotent() const { return nilindex.has_value(); }
};

SeriesReport central_series(const Algebra& a);

/// {x : [y,x] = 0 for all y}
std::vector<Vector> right_annihilator(const Algebra& a);
/// {z : [x,z] = [z,x] = 0 for all x}
std::vector<Vector> center(const Algebra& a);

/// Witnessed maximum of the Jordan type of R_x over x outside L^2.
struct CharSeq {
  std::vector<int> parts;  // weakly decreasing, sums to dim
  Vector witness;
};

inline constexpr int kDefaultTrials = 20;
inline constexpr unsigned long kDefaultSeed = 1;

/// Lexicographic maximum of nilpotent_partition(R_x) over the basis vectors
/// outside L^2, their pairwise sums, and `trials` seeded random Gaussian-integer
/// combinations. Throws ContractError for non-nilpotent algebras.
CharSeq characteristic_sequence(const Algebra& a, int trials = kDefaultTrials, unsigned long seed = kDefaultSeed);

/// p when parts == (dim-p, 1, ..., 1); 0 is null-filiform, 1 filiform.
std::optional<int> p_filiform_class(const CharSeq& cs);
std::optional<int> p_filiform_class(const std::vector<int>& parts);

/// gr L built on complements of L^{i+1} in L^i.
struct NaturalGrading {
  Algebra graded;
  std::vector<Index> component_dims;  // dim L_1, dim L_2, ...
  Matrix lift;                        // columns: the chosen complement vectors in the original basis
};

NaturalGrading natural_graded(const Algebra& a);

/// Isomorphism invariants in comparison order. Equal fingerprints are
/// necessary for isomorphism, never sufficient.
struct Fingerprint {
  Index dim = 0;
  std::vector<Index> series_dims;
  std::optional<Index> nilindex;
  Index center_dim = 0;
  Index right_annihilator_dim = 0;
  std::optional<std::vector<int>> char_seq;  // absent for non-nilpotent algebras
  Index der_dim = 0;
  Index inn_dim = 0;
  Index h1_dim = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

  /// Canonical single-line record, e.g.
  /// dim=8;series=8,5,3,2,1;nilindex=5;center=2;rann=6;charseq=5,1,1,1;der=13;inn=2;h1=11
  std::string to_string() const;
};

/// Field names in comparison order, matching Fingerprint::to_string keys.
const std::vector<std::string>& fingerprint_fields();
/// Name of the first field where a and b differ, or nullopt.
std::optional<std::string> first_difference(const Fingerprint& a, const Fingerprint& b);

Fingerprint fingerprint(const Algebra& a, int trials = kDefaultTrials, unsigned long seed = kDefaultSeed);

std::string join(const std::vector<int>& xs, const char* sep = ",");
std::string join(const std::vector<Index>& xs, const char* sep = ",");

}  // namespace leibniz

#endif  // LEIBNIZ_INVARIANTS_HPP
