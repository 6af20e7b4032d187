#ifndef LEIBNIZ_ISOMORPHISM_HPP
#define LEIBNIZ_ISOMORPHISM_HPP

#include <optional>
#include <string>
#include <utility>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Candidate isomorphism source -> target; column c of map is the image of
/// the source basis vector c in target coordinates.
struct IsoCertificate {
  Algebra source;
  Algebra target;
  Matrix map;
};

struct CertificateVerdict {
  bool accepted = false;
  std::string reason;                                   // empty when accepted
  std::optional<std::pair<Index, Index>> violated_pair;  // first (i,j) in index order

  explicit operator bool() const { return accepted; }
};

/// Accepts iff map is invertible and map([e_i,e_j]) = [map e_i, map e_j] for all i, j.
CertificateVerdict verify_certificate(const IsoCertificate& c);

struct FingerprintComparison {
  bool distinguished = false;
  std::string field;  // first differing fingerprint field

  std::string to_string() const { return distinguished ? "distinguished(" + field + ")" : "inconclusive"; }
};

/// Screens for non-isomorphism; never claims two algebras are isomorphic.
FingerprintComparison compare_fingerprints(const Algebra& a, const Algebra& b, int trials = 20,
                                           unsigned long seed = 1);

}  // namespace leibniz

#endif  // LEIBNIZ_ISOMORPHISM_HPP
