#include "leibniz/invariants.hpp"

#include <random>
#include <set>
#include <sstream>

#include "leibniz/cohomology.hpp"

namespace leibniz {

namespace {

std::vector<Matrix> right_operators(const Algebra& a) {
  std::vector<Matrix> ops;
  for (Index j = 0; j < a.dim(); ++j) ops.push_back(right_operator(a, unit_vector<Scalar>(a.dim(), j)));
  return ops;
}

std::vector<Matrix> left_operators(const Algebra& a) {
  std::vector<Matrix> ops;
  for (Index j = 0; j < a.dim(); ++j) ops.push_back(left_operator(a, unit_vector<Scalar>(a.dim(), j)));
  return ops;
}

Matrix stack(const std::vector<Matrix>& blocks, Index cols) {
  Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Matrix m(rows, cols);
  Index at = 0;
  for (const auto& b : blocks) {
    m.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return m;
}

}  // namespace

SeriesReport central_series(const Algebra& a) {
  const Index n = a.dim();
  SeriesReport report;
  if (n == 0) {
    report.nilindex = 0;
    return report;
  }
  std::vector<Vector> current;
  for (Index i = 0; i < n; ++i) current.push_back(unit_vector<Scalar>(n, i));
  report.terms.push_back(current);
  report.dims.push_back(n);

  const std::vector<Matrix> rops = right_operators(a);
  while (true) {
    std::vector<Vector> images;
    for (const Vector& u : current)
      for (const Matrix& r : rops) {
        Vector v = r * u;
        if (!is_zero_matrix(v)) images.push_back(std::move(v));
      }
    std::vector<Vector> next = span_basis(images, n);
    if (next.empty()) {
      report.nilindex = static_cast<Index>(report.terms.size());
      return report;
    }
    if (static_cast<Index>(next.size()) >= report.dims.back()) return report;  // stable: not nilpotent
    report.dims.push_back(static_cast<Index>(next.size()));
    report.terms.push_back(next);
    current = std::move(next);
  }
}

std::vector<Vector> right_annihilator(const Algebra& a) {
  if (a.dim() == 0) return {};
  return kernel_basis(stack(left_operators(a), a.dim()));
}

std::vector<Vector> center(const Algebra& a) {
  if (a.dim() == 0) return {};
  std::vector<Matrix> blocks = left_operators(a);
  for (Matrix& r : right_operators(a)) blocks.push_back(std::move(r));
  return kernel_basis(stack(blocks, a.dim()));
}

CharSeq characteristic_sequence(const Algebra& a, int trials, unsigned long seed) {
  const Index n = a.dim();
  const SeriesReport series = central_series(a);
  if (!series.nilpotent()) throw ContractError("characteristic_sequence: algebra is not nilpotent");
  if (n == 0) return {{}, Vector(0)};
  const std::vector<Vector> square = series.terms.size() > 1 ? series.terms[1] : std::vector<Vector>{};

  std::optional<CharSeq> best;
  auto consider = [&](const Vector& x) {
    if (in_span(square, x)) return;
    std::vector<int> parts = nilpotent_partition(right_operator(a, x));
    if (!best || best->parts < parts) best = CharSeq{std::move(parts), x};
  };

  std::vector<Index> outside;
  for (Index i = 0; i < n; ++i)
    if (!in_span(square, unit_vector<Scalar>(n, i))) outside.push_back(i);
  for (Index i : outside) consider(unit_vector<Scalar>(n, i));
  for (std::size_t p = 0; p < outside.size(); ++p)
    for (std::size_t q = p + 1; q < outside.size(); ++q)
      consider(unit_vector<Scalar>(n, outside[p]) + unit_vector<Scalar>(n, outside[q]));

  // Modular reduction rather than std::uniform_int_distribution keeps the
  // sample stream identical across standard libraries.
  std::mt19937_64 rng(seed);
  auto small = [&rng]() { return static_cast<long>(rng() % 5) - 2; };
  for (int t = 0; t < trials; ++t) {
    Vector x(n);
    for (Index i = 0; i < n; ++i) {
      const long re = small();
      const long im = small();
      x(i) = Scalar(mpq_class(re), mpq_class(im));
    }
    consider(x);
  }
  if (!best) throw ContractError("characteristic_sequence: no candidate outside L^2");
  return *best;
}

std::optional<int> p_filiform_class(const std::vector<int>& parts) {
  if (parts.empty()) return std::nullopt;
  int dim = 0;
  for (int p : parts) dim += p;
  const int p = static_cast<int>(parts.size()) - 1;
  if (parts.front() != dim - p) return std::nullopt;
  for (std::size_t k = 1; k < parts.size(); ++k)
    if (parts[k] != 1) return std::nullopt;
  return p;
}

std::optional<int> p_filiform_class(const CharSeq& cs) { return p_filiform_class(cs.parts); }

NaturalGrading natural_graded(const Algebra& a) {
  const Index n = a.dim();
  const SeriesReport series = central_series(a);
  if (!series.nilpotent()) throw ContractError("natural_graded: algebra is not nilpotent");

  NaturalGrading out;
  std::vector<Vector> lifts;
  std::vector<Index> degree_of;  // degree (0-based) of each lift
  for (std::size_t i = 0; i < series.terms.size(); ++i) {
    std::vector<Vector> span = i + 1 < series.terms.size() ? series.terms[i + 1] : std::vector<Vector>{};
    Index added = 0;
    for (const Vector& v : series.terms[i]) {
      if (in_span(span, v)) continue;
      span.push_back(v);
      lifts.push_back(v);
      degree_of.push_back(static_cast<Index>(i));
      ++added;
    }
    out.component_dims.push_back(added);
  }

  out.lift = as_columns(lifts, n);
  const auto lift_inv = inverse(out.lift);
  if (!lift_inv) throw std::logic_error("natural_graded: complements do not form a basis");

  std::vector<std::string> labels;
  std::set<std::string> taken;
  for (Index c = 0; c < n; ++c) {
    std::string label = "g" + std::to_string(c + 1);
    Index nonzero = 0, at = -1;
    for (Index k = 0; k < n; ++k)
      if (!lifts[c](k).is_zero()) ++nonzero, at = k;
    if (nonzero == 1 && lifts[c](at).is_one()) label = a.label(at);
    while (taken.count(label)) label += "'";
    taken.insert(label);
    labels.push_back(label);
  }

  out.graded = Algebra(labels);
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q) {
      const Vector w = bracket(a, lifts[p], lifts[q]);
      if (is_zero_matrix(w)) continue;
      // [L_i, L_j] lands in L_{i+j}: with 1-based degrees i+j, i.e. 0-based deg_p + deg_q + 1
      const Index target = degree_of[p] + degree_of[q] + 1;
      Vector coords = *lift_inv * w;
      for (Index k = 0; k < n; ++k)
        if (degree_of[k] != target) coords(k) = 0;
      out.graded.set_product(p, q, coords);
    }
  return out;
}

std::string join(const std::vector<int>& xs, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

std::string join(const std::vector<Index>& xs, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "dim=" << dim << ";series=" << join(series_dims) << ";nilindex="
     << (nilindex ? std::to_string(*nilindex) : "none") << ";center=" << center_dim
     << ";rann=" << right_annihilator_dim << ";charseq=" << (char_seq ? join(*char_seq) : "none")
     << ";der=" << der_dim << ";inn=" << inn_dim << ";h1=" << h1_dim;
  return os.str();
}

const std::vector<std::string>& fingerprint_fields() {
  static const std::vector<std::string> fields{
      "dim",        "series dims",           "nilindex", "dim center", "dim right annihilator",
      "characteristic sequence", "dim Der", "dim Inn",  "dim H1"};
  return fields;
}

std::optional<std::string> first_difference(const Fingerprint& a, const Fingerprint& b) {
  const auto& f = fingerprint_fields();
  if (a.dim != b.dim) return f[0];
  if (a.series_dims != b.series_dims) return f[1];
  if (a.nilindex != b.nilindex) return f[2];
  if (a.center_dim != b.center_dim) return f[3];
  if (a.right_annihilator_dim != b.right_annihilator_dim) return f[4];
  if (a.char_seq != b.char_seq) return f[5];
  if (a.der_dim != b.der_dim) return f[6];
  if (a.inn_dim != b.inn_dim) return f[7];
  if (a.h1_dim != b.h1_dim) return f[8];
  return std::nullopt;
}

Fingerprint fingerprint(const Algebra& a, int trials, unsigned long seed) {
  if (!is_leibniz(a)) throw ContractError("fingerprint: not a Leibniz algebra");
  Fingerprint f;
  f.dim = a.dim();
  const SeriesReport series = central_series(a);
  f.series_dims = series.dims;
  f.nilindex = series.nilindex;
  f.center_dim = static_cast<Index>(center(a).size());
  f.right_annihilator_dim = static_cast<Index>(right_annihilator(a).size());
  if (series.nilpotent()) f.char_seq = characteristic_sequence(a, trials, seed).parts;
  const CohomologyReport h = first_cohomology(a);
  f.der_dim = h.der_dim;
  f.inn_dim = h.inn_dim;
  f.h1_dim = h.h1_dim;
  return f;
}

}  // namespace leibniz
