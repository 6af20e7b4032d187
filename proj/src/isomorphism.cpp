#include "leibniz/isomorphism.hpp"

#include "leibniz/invariants.hpp"

namespace leibniz {

CertificateVerdict verify_certificate(const IsoCertificate& c) {
  const Index n = c.source.dim();
  CertificateVerdict v;
  if (c.target.dim() != n || c.map.rows() != n || c.map.cols() != n) {
    v.reason = "dimension mismatch";
    return v;
  }
  if (rank(c.map) < n) {
    v.reason = "singular map";
    return v;
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vector lhs = c.map * c.source.product(i, j);
      const Vector rhs = bracket(c.target, c.map.col(i), c.map.col(j));
      if (lhs != rhs) {
        v.violated_pair = {i, j};
        v.reason = "map does not preserve [" + c.source.label(i) + "," + c.source.label(j) + "]: image " +
                   render_vector(c.target, lhs) + " vs bracket of images " + render_vector(c.target, rhs);
        return v;
      }
    }
  v.accepted = true;
  return v;
}

FingerprintComparison compare_fingerprints(const Algebra& a, const Algebra& b, int trials, unsigned long seed) {
  FingerprintComparison out;
  if (auto field = first_difference(fingerprint(a, trials, seed), fingerprint(b, trials, seed))) {
    out.distinguished = true;
    out.field = *field;
  }
  return out;
}

}  // namespace leibniz
