// Shared fixtures for the test binaries: catalog shortcuts, seeded exact
// samplers, independent oracles and the randomized property suites.
#ifndef LEIBNIZ_TESTS_SUPPORT_HPP
#define LEIBNIZ_TESTS_SUPPORT_HPP

#include <functional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "leibniz/catalog.hpp"
#include "leibniz/cohomology.hpp"
#include "leibniz/gradations.hpp"
#include "leibniz/invariants.hpp"
#include "leibniz/isomorphism.hpp"

namespace testing {

using namespace leibniz;

inline Algebra family(Family f, int n, std::map<std::string, Scalar> params = {}) {
  return build(FamilySpec{f, n, std::move(params)});
}

inline Algebra m_alpha(int n, const Scalar& alpha) { return family(Family::M1alpha, n, {{"alpha", alpha}}); }

/// M(7) with the extra product [y2,y6] = y1.
inline Algebra mutated_m7() {
  Algebra a = family(Family::M, 7);
  a.add_product(*a.index_of("y2"), *a.index_of("y6"), *a.index_of("y1"));
  return a;
}

inline Vector coords(std::initializer_list<long> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index k = 0;
  for (long x : xs) v(k++) = Scalar(x);
  return v;
}

inline Vector basis_vector(const Algebra& a, const std::string& label) { return unit_vector<Scalar>(a.dim(), *a.index_of(label)); }

// ---------------------------------------------------------------- samplers

using Rng = std::mt19937_64;

inline long small_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Gaussian rational with numerators in [-3,3] and denominators in [1,3].
inline Scalar random_scalar(Rng& rng) {
  const mpq_class re(small_int(rng, -3, 3), small_int(rng, 1, 3));
  const mpq_class im = small_int(rng, 0, 2) == 0 ? mpq_class(small_int(rng, -3, 3), small_int(rng, 1, 3)) : mpq_class(0);
  return Scalar(re, im);
}

inline Scalar random_nonzero_scalar(Rng& rng) {
  for (;;)
    if (Scalar s = random_scalar(rng); !s.is_zero()) return s;
}

inline Vector random_vector(Rng& rng, Index dim) {
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = random_scalar(rng);
  return v;
}

inline Matrix random_matrix(Rng& rng, Index rows, Index cols, int zero_bias = 0) {
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = small_int(rng, 0, zero_bias) == 0 ? random_scalar(rng) : Scalar(0);
  return m;
}

/// Permutation times unit-lower times upper-triangular with nonzero diagonal:
/// invertible by construction, entries kept small.
inline Matrix random_invertible(Rng& rng, Index n) {
  Matrix lower = Matrix::Identity(n, n), upper = Matrix::Identity(n, n), perm = Matrix::Zero(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) {
      if (r > c && small_int(rng, 0, 2) == 0) lower(r, c) = Scalar(small_int(rng, -1, 1), small_int(rng, -1, 1));
      if (r < c && small_int(rng, 0, 2) == 0) upper(r, c) = Scalar(small_int(rng, -1, 1));
    }
  for (Index i = 0; i < n; ++i) upper(i, i) = Scalar(mpq_class(small_int(rng, 1, 2) * (small_int(rng, 0, 1) ? 1 : -1), 1));
  std::vector<Index> order(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (Index i = 0; i < n; ++i) perm(order[static_cast<std::size_t>(i)], i) = Scalar(1);
  return perm * lower * upper;
}

/// Leibniz algebras of dimension <= 8 from the catalog, plus sums.
inline const std::vector<Algebra>& leibniz_pool() {
  static const std::vector<Algebra> pool = [] {
    std::vector<Algebra> p;
    for (int n = 5; n <= 7; ++n) {
      p.push_back(family(Family::M, n));
      p.push_back(m_alpha(n, Scalar(1)));
      p.push_back(m_alpha(n, Scalar(mpq_class(1, 2), 1)));
      p.push_back(family(Family::KF4, n));
      p.push_back(family(Family::NGF1, n));
    }
    p.push_back(family(Family::N, 7));
    p.push_back(family(Family::L1, 7));
    p.push_back(family(Family::NullFiliform, 5));
    p.push_back(family(Family::Abelian, 3));
    p.push_back(direct_sum(family(Family::NGF1, 4), family(Family::Abelian, 2)));
    return p;
  }();
  return pool;
}

inline const Algebra& pick(Rng& rng, const std::vector<Algebra>& pool) {
  return pool[static_cast<std::size_t>(small_int(rng, 0, static_cast<long>(pool.size()) - 1))];
}

// ---------------------------------------------------------------- oracles

/// Fraction-free Bareiss elimination on an integer matrix, independent of the library's elimination.
inline long bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<long>(r);
}

/// Integer entries of an exact matrix whose entries are all real integers.
inline std::vector<std::vector<mpz_class>> to_integer_rows(const Matrix& m) {
  std::vector<std::vector<mpz_class>> out(static_cast<std::size_t>(m.rows()));
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) {
      const Scalar& s = m(r, c);
      if (!s.is_real() || s.real().get_den() != 1) throw std::invalid_argument("to_integer_rows: non-integer entry");
      out[static_cast<std::size_t>(r)].push_back(s.real().get_num());
    }
  return out;
}

/// Dense triple loop over the structure tensor; counts basis triples with a nonzero residual.
inline long dense_leibniz_violations(const Algebra& a) {
  const Index n = a.dim();
  std::vector<Scalar> g(static_cast<std::size_t>(n * n * n), Scalar(0));
  auto at = [&](Index i, Index j, Index k) -> Scalar& { return g[static_cast<std::size_t>((i * n + j) * n + k)]; };
  for (const auto& [key, v] : a.products())
    for (Index k = 0; k < n; ++k) at(key.first, key.second, k) = v(k);
  long bad = 0;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        for (Index t = 0; t < n; ++t) {
          Scalar s(0);
          for (Index m = 0; m < n; ++m) s += at(y, z, m) * at(x, m, t) - at(x, y, m) * at(m, z, t) + at(x, z, m) * at(m, y, t);
          if (!s.is_zero()) {
            ++bad;
            t = n;
          }
        }
  return bad;
}

// ---------------------------------------------------------------- property suites

struct SuiteResult {
  std::string name;
  int samples = 0;
  int failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++samples;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0 && samples > 0; }
};

inline constexpr int kPropertySamples = 100;

inline SuiteResult suite_bilinearity(unsigned long seed, int samples = kPropertySamples) {
  SuiteResult res{"bilinearity"};
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Algebra& a = pick(rng, leibniz_pool());
    const Index n = a.dim();
    const Vector x = random_vector(rng, n), y = random_vector(rng, n), z = random_vector(rng, n);
    const Scalar p = random_scalar(rng), q = random_scalar(rng);
    const Vector mixed = (x * p + z * q).eval();
    const bool left = bracket(a, mixed, y) == (bracket(a, x, y) * p + bracket(a, z, y) * q).eval();
    const bool right = bracket(a, y, mixed) == (bracket(a, y, x) * p + bracket(a, y, z) * q).eval();
    res.record(left && right, "sample " + std::to_string(s));
  }
  return res;
}

inline SuiteResult suite_fingerprint_invariance(unsigned long seed, int samples = kPropertySamples) {
  SuiteResult res{"fingerprint invariance under change of basis"};
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Algebra& a = pick(rng, leibniz_pool());
    const Algebra b = change_of_basis(a, random_invertible(rng, a.dim()));
    const Fingerprint fa = fingerprint(a), fb = fingerprint(b);
    res.record(fa == fb, "sample " + std::to_string(s) + ": " + fa.to_string() + " vs " + fb.to_string());
  }
  return res;
}

/// d[e_i,e_j] = [d e_i, e_j] + [e_i, d e_j] checked through bracket(), not through is_derivation.
inline bool satisfies_derivation_identity(const Algebra& a, const Matrix& d) {
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      const Vector ei = unit_vector<Scalar>(a.dim(), i), ej = unit_vector<Scalar>(a.dim(), j);
      if (d * a.product(i, j) != bracket(a, d * ei, ej) + bracket(a, ei, d * ej)) return false;
    }
  return true;
}

inline SuiteResult suite_derivation_identity(unsigned long seed, int samples = kPropertySamples) {
  SuiteResult res{"derivation identity on every Der basis element"};
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Algebra& base = pick(rng, leibniz_pool());
    const Algebra a = s % 2 ? change_of_basis(base, random_invertible(rng, base.dim())) : base;
    const DerivationSpace der = derivation_space(a);
    bool ok = !der.basis.empty();
    for (const Matrix& d : der.basis) ok = ok && satisfies_derivation_identity(a, d);
    res.record(ok, "sample " + std::to_string(s));
  }
  return res;
}

/// Algebras paired with a valid gradation for the split suite.
inline std::vector<std::pair<Algebra, WeightAssignment>> graded_pool() {
  std::vector<std::pair<Algebra, WeightAssignment>> out;
  for (int n = 5; n <= 7; ++n) {
    out.emplace_back(family(Family::M, n), m_family_weights(n));
    out.emplace_back(m_alpha(n, Scalar(2)), m_family_weights(n));
    WeightAssignment nf;
    for (int i = 1; i <= n; ++i) nf.weights.push_back(i);
    out.emplace_back(family(Family::NullFiliform, n), nf);
  }
  const Algebra n7 = family(Family::N, 7);
  out.emplace_back(n7, *search_diagonal_gradation(n7, default_max_abs(n7)));
  out.emplace_back(family(Family::Abelian, 3), WeightAssignment{{0, 2, 5}});
  return out;
}

inline SuiteResult suite_split_recombination(unsigned long seed, int samples = kPropertySamples) {
  SuiteResult res{"graded derivation split recombines"};
  Rng rng(seed);
  const auto pool = graded_pool();
  std::vector<DerivationSpace> spaces;
  for (const auto& [a, w] : pool) spaces.push_back(derivation_space(a));
  for (int s = 0; s < samples; ++s) {
    const auto k = static_cast<std::size_t>(small_int(rng, 0, static_cast<long>(pool.size()) - 1));
    const auto& [a, w] = pool[k];
    Matrix d = Matrix::Zero(a.dim(), a.dim());
    for (const Matrix& b : spaces[k].basis) d += b * random_scalar(rng);
    Matrix sum = Matrix::Zero(a.dim(), a.dim());
    bool ok = true;
    for (const auto& [weight, part] : homogeneous_components(d, w)) {
      ok = ok && is_derivation(a, part);
      sum += part;
    }
    ok = ok && sum == d;
    Index total = 0;
    for (const auto& [weight, dim] : graded_derivation_split(a, w, spaces[k].basis)) total += dim;
    ok = ok && total == spaces[k].dim();
    res.record(ok, "sample " + std::to_string(s));
  }
  return res;
}

inline SuiteResult suite_certificate_composition(unsigned long seed, int samples = kPropertySamples) {
  SuiteResult res{"certificate composition"};
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Algebra& a = pick(rng, leibniz_pool());
    const Matrix p = random_invertible(rng, a.dim()), q = random_invertible(rng, a.dim());
    // change_of_basis(X, P) is carried onto X by P itself.
    const Algebra b = change_of_basis(a, p);
    const Algebra c = change_of_basis(b, q);
    const bool pb = static_cast<bool>(verify_certificate({b, a, p}));
    const bool qc = static_cast<bool>(verify_certificate({c, b, q}));
    const bool composed = static_cast<bool>(verify_certificate({c, a, p * q}));
    res.record(pb && qc && composed, "sample " + std::to_string(s));
  }
  return res;
}

inline std::vector<std::function<SuiteResult()>> all_property_suites(unsigned long seed) {
  return {
      [=] { return suite_bilinearity(seed); },
      [=] { return suite_fingerprint_invariance(seed + 1); },
      [=] { return suite_derivation_identity(seed + 2); },
      [=] { return suite_split_recombination(seed + 3); },
      [=] { return suite_certificate_composition(seed + 4); },
  };
}

}  // namespace testing

#endif  // LEIBNIZ_TESTS_SUPPORT_HPP
