#include "leibniz/cli.hpp"

#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/cohomology.hpp"
#include "leibniz/gradations.hpp"
#include "leibniz/invariants.hpp"
#include "leibniz/io.hpp"
#include "leibniz/isomorphism.hpp"

namespace leibniz {

namespace {

struct Options {
  std::vector<std::string> files;
  std::string out_path;
  std::string weights_path;
  std::string map_path;
  std::string family;
  int n = 0;
  std::vector<std::string> params;
  int max_abs = 0;  // 0: 2 * dim
  unsigned long seed = kDefaultSeed;
  int trials = kDefaultTrials;
  int section = 0;
  bool dump_basis = false;
};

std::string basis_text(const Algebra& a, const std::vector<Vector>& basis) {
  std::string s = "<";
  for (std::size_t i = 0; i < basis.size(); ++i) s += (i ? ", " : "") + render_vector(a, basis[i]);
  return s + ">";
}

std::string parts_text(const std::vector<int>& parts) { return "(" + join(parts) + ")"; }

std::string matrix_text(const Matrix& m) {
  std::string s = "[";
  for (Index r = 0; r < m.rows(); ++r) {
    s += r ? ", [" : "[";
    for (Index c = 0; c < m.cols(); ++c) s += (c ? ", " : "") + m(r, c).to_string();
    s += "]";
  }
  return s + "]";
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty())
    out << text;
  else
    write_text_file(o.out_path, text);
}

int cmd_check(const Options& o, std::ostream& out) {
  const Algebra a = load_algebra(o.files.at(0));
  const auto violations = leibniz_residual(a);
  if (violations.empty()) {
    out << "Leibniz: OK (0 violations)\n";
    return kExitOk;
  }
  out << "Leibniz: FAILED (" << violations.size() << " violations)\n";
  for (const auto& v : violations)
    out << "  x=" << a.label(v.i) << " y=" << a.label(v.j) << " z=" << a.label(v.k)
        << ": [x,[y,z]] - [[x,y],z] + [[x,z],y] = " << render_vector(a, v.residual) << "\n";
  return kExitNegative;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const Algebra a = load_algebra(o.files.at(0));
  const SeriesReport series = central_series(a);
  out << "dim: " << a.dim() << "\n";
  out << "central series dims: " << join(series.dims) << "\n";
  out << "nilindex: " << (series.nilindex ? std::to_string(*series.nilindex) : "not nilpotent") << "\n";
  const auto z = center(a);
  const auto r = right_annihilator(a);
  out << "center: dim " << z.size() << " " << basis_text(a, z) << "\n";
  out << "right annihilator: dim " << r.size() << " " << basis_text(a, r) << "\n";
  if (!series.nilpotent()) {
    out << "characteristic sequence: undefined (not nilpotent)\n";
    return kExitOk;
  }
  const CharSeq cs = characteristic_sequence(a, o.trials, o.seed);
  out << "characteristic sequence: " << parts_text(cs.parts) << " witnessed maximum (trials=" << o.trials
      << ", seed=" << o.seed << "), witness " << render_vector(a, cs.witness) << "\n";
  const auto p = p_filiform_class(cs);
  out << "p-filiform: " << (p ? std::to_string(*p) : "not p-filiform") << "\n";
  if (is_leibniz(a)) out << "natural gradation dims: " << join(natural_graded(a).component_dims) << "\n";
  return kExitOk;
}

int cmd_der(const Options& o, std::ostream& out) {
  const Algebra a = load_algebra(o.files.at(0));
  const DerivationSpace der = derivation_space(a);
  const DerivationSpace inn = inner_derivation_space(a);
  const CohomologyReport h = first_cohomology(a, der, inn);
  out << "dim Der: " << h.der_dim << "\n";
  out << "dim Inn: " << h.inn_dim << "\n";
  out << "dim H1: " << h.h1_dim << "\n";
  if (o.dump_basis) {
    for (std::size_t k = 0; k < der.basis.size(); ++k) out << "D" << k + 1 << " = " << matrix_text(der.basis[k]) << "\n";
    for (std::size_t k = 0; k < inn.basis.size(); ++k) out << "R" << k + 1 << " = " << matrix_text(inn.basis[k]) << "\n";
  }
  return kExitOk;
}

int cmd_h1(const Options& o, std::ostream& out) {
  out << "dim H1: " << h1_dimension(load_algebra(o.files.at(0))) << "\n";
  return kExitOk;
}

int cmd_grade_verify(const Options& o, std::ostream& out) {
  const Algebra a = load_algebra(o.files.at(0));
  const WeightAssignment w = load_weights(o.weights_path, a);
  const GradationReport r = verify_gradation(a, w);
  out << render_gradation(a, w, r);
  return r.valid ? kExitOk : kExitNegative;
}

int cmd_grade_search(const Options& o, std::ostream& out) {
  const Algebra a = load_algebra(o.files.at(0));
  const int max_abs = o.max_abs > 0 ? o.max_abs : default_max_abs(a);
  const auto w = search_diagonal_gradation(a, max_abs);
  if (!w) {
    out << "none found: no maximum-length gradation diagonal in the given basis with |weight| <= " << max_abs
        << " (evidence only; a basis change could still admit one)\n";
    return kExitNegative;
  }
  out << "found maximum-length diagonal gradation (max_abs=" << max_abs << ")\n";
  out << render_gradation(a, *w, verify_gradation(a, *w));
  if (o.out_path.empty())
    out << weights_to_json(a, *w);
  else
    write_text_file(o.out_path, weights_to_json(a, *w));
  return kExitOk;
}

FamilySpec family_spec(const std::string& family, int n, const std::vector<std::string>& params) {
  FamilySpec spec{parse_family(family), n, {}};
  for (const auto& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw ContractError("parameter must be name=value, got '" + kv + "'");
    spec.params[kv.substr(0, eq)] = Scalar::parse(kv.substr(eq + 1));
  }
  return spec;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  emit(o, algebra_to_json(build(family_spec(o.family, o.n, o.params))), out);
  return kExitOk;
}

int cmd_iso_verify(const Options& o, std::ostream& out) {
  IsoCertificate c;
  if (o.files.size() == 1 && o.map_path.empty()) {
    c = load_certificate(o.files[0]);
  } else if (o.files.size() == 2 && !o.map_path.empty()) {
    c = {load_algebra(o.files[0]), load_algebra(o.files[1]), parse_matrix(read_text_file(o.map_path), o.map_path)};
    if (c.map.rows() != c.source.dim()) throw ContractError("map dimension does not match the algebras");
  } else {
    throw ContractError("iso-verify takes CERTIFICATE, or SOURCE TARGET --map PATH");
  }
  const CertificateVerdict v = verify_certificate(c);
  if (v) {
    out << "certificate: ACCEPTED\n";
    return kExitOk;
  }
  out << "certificate: REJECTED (" << v.reason << ")\n";
  return kExitNegative;
}

int cmd_fingerprint(const Options& o, std::ostream& out) {
  std::vector<Fingerprint> prints;
  for (const auto& path : o.files) {
    prints.push_back(fingerprint(load_algebra(path), o.trials, o.seed));
    out << prints.back().to_string() << "\n";
  }
  if (prints.size() == 2) {
    const auto field = first_difference(prints[0], prints[1]);
    out << "comparison: " << (field ? "distinguished(" + *field + ")" : std::string("inconclusive")) << "\n";
  }
  return kExitOk;
}

// Replication tables: each row pairs a computed value with the closed form it
// is expected to match.
struct Row {
  std::string item;
  std::string computed;
  std::string expected;
  bool ok;
};

void print_rows(const std::vector<Row>& rows, std::ostream& out) {
  std::size_t w0 = 4, w1 = 8, w2 = 8;
  for (const auto& r : rows) {
    w0 = std::max(w0, r.item.size());
    w1 = std::max(w1, r.computed.size());
    w2 = std::max(w2, r.expected.size());
  }
  out << std::left << std::setw(static_cast<int>(w0)) << "item" << "  " << std::setw(static_cast<int>(w1))
      << "computed" << "  " << std::setw(static_cast<int>(w2)) << "expected" << "  status\n";
  for (const auto& r : rows)
    out << std::setw(static_cast<int>(w0)) << r.item << "  " << std::setw(static_cast<int>(w1)) << r.computed << "  "
        << std::setw(static_cast<int>(w2)) << r.expected << "  " << (r.ok ? "ok" : "MISMATCH") << "\n";
}

Row count_row(const std::string& item, Index computed, Index expected) {
  return {item, std::to_string(computed), std::to_string(expected), computed == expected};
}

int replicate_section3(int n, std::ostream& out) {
  std::vector<Row> rows;
  struct Case {
    std::string name;
    FamilySpec spec;
    Index der, h1;
  };
  std::vector<Case> cases;
  if (n % 2 == 1) cases.push_back({"N", {Family::N, n, {}}, 3 * (n - 1) / 2 + 7, (n + 19) / 2});
  cases.push_back({"M", {Family::M, n, {}}, n + 6, n + 4});
  cases.push_back({"M1alpha(alpha=1)", {Family::M1alpha, n, {{"alpha", Scalar(1)}}}, n + 5, n + 2});

  out << "derivations and first cohomology, n=" << n << "\n";
  if (n % 2 == 0) out << "N skipped: the family needs odd n\n";
  for (const auto& c : cases) {
    const CohomologyReport h = first_cohomology(build(c.spec));
    rows.push_back(count_row(c.name + " dim Der", h.der_dim, c.der));
    rows.push_back({c.name + " dim Inn", std::to_string(h.inn_dim), "-", true});
    rows.push_back(count_row(c.name + " dim H1", h.h1_dim, c.h1));
  }
  print_rows(rows, out);
  for (const auto& r : rows)
    if (!r.ok) return kExitNegative;
  return kExitOk;
}

int replicate_section2(int n, const Options& o, std::ostream& out) {
  std::vector<Row> rows;
  auto leibniz_row = [&](const std::string& name, const Algebra& a) {
    const auto v = leibniz_residual(a);
    rows.push_back({name + " Leibniz violations", std::to_string(v.size()), "0", v.empty()});
  };
  auto charseq_row = [&](const std::string& name, const Algebra& a, std::vector<int> expected) {
    std::string computed = "not nilpotent";
    bool ok = false;
    if (central_series(a).nilpotent()) {
      const auto cs = characteristic_sequence(a, o.trials, o.seed);
      computed = parts_text(cs.parts);
      ok = cs.parts == expected;
    }
    rows.push_back({name + " characteristic sequence", computed, parts_text(expected), ok});
  };
  auto ones = [](int head, int count) {
    std::vector<int> parts{head};
    parts.insert(parts.end(), static_cast<std::size_t>(count), 1);
    return parts;
  };

  out << "maximum-length classification checks, n=" << n << "\n";
  const Algebra l1 = build({Family::L1, n, {}});
  const Algebra m = build({Family::M, n, {}});
  const Algebra m1 = build({Family::M1alpha, n, {{"alpha", Scalar(1)}}});
  const Algebra kf4 = build({Family::KF4, n, {}});
  const Algebra kf5 = build({Family::KF5, n, {}});
  const Algebra ngf1 = build({Family::NGF1, n, {}});

  for (const auto& [name, a] : std::vector<std::pair<std::string, const Algebra*>>{
           {"L1", &l1}, {"M", &m}, {"M1alpha(alpha=1)", &m1}, {"KF4", &kf4}, {"KF5", &kf5}, {"NGF1", &ngf1}})
    leibniz_row(name, *a);
  charseq_row("L1", l1, ones(n - 3, 3));
  charseq_row("M", m, ones(n - 2, 3));
  charseq_row("M1alpha(alpha=1)", m1, ones(n - 2, 3));
  charseq_row("NGF1", ngf1, ones(n - 1, 1));
  charseq_row("KF4", kf4, ones(n - 2, 2));
  charseq_row("KF5", kf5, ones(n - 2, 2));

  for (const auto& [name, a] : std::vector<std::pair<std::string, const Algebra*>>{{"M", &m}, {"M1alpha(alpha=1)", &m1}}) {
    const auto r = verify_gradation(*a, m_family_weights(n));
    rows.push_back({name + " explicit weights", r.maximum_length ? "maximum length" : "not maximum", "maximum length",
                    r.maximum_length});
  }

  if (n % 2 == 1) {
    const Algebra nn = build({Family::N, n, {}});
    leibniz_row("N", nn);
    charseq_row("N", nn, ones(n - 2, 3));
    const auto w = search_diagonal_gradation(nn, default_max_abs(nn));
    rows.push_back({"N diagonal search", w ? "found" : "none found", "found", w.has_value()});
  } else {
    out << "N skipped: the family needs odd n\n";
  }

  const auto none = search_diagonal_gradation(l1, default_max_abs(l1));
  rows.push_back({"L1 diagonal search", none ? "found" : "none found", "none found", !none});

  std::vector<Index> gr_expected{3, 2};
  for (int i = 3; i <= n - 3; ++i) gr_expected.push_back(1);
  const auto gr = natural_graded(l1).component_dims;
  rows.push_back({"L1 natural gradation dims", join(gr), join(gr_expected), gr == gr_expected});

  print_rows(rows, out);
  for (const auto& r : rows)
    if (!r.ok) return kExitNegative;
  return kExitOk;
}

int cmd_replicate(const Options& o, std::ostream& out) {
  if (o.section == 3) return replicate_section3(o.n > 0 ? o.n : 9, out);
  if (o.section == 2) return replicate_section2(o.n > 0 ? o.n : 7, o, out);
  throw ContractError("--section must be 2 or 3");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact structure-constant toolkit for finite-dimensional Leibniz algebras", "leibniz"};
  app.require_subcommand(1);
  Options o;

  auto seed_opts = [&o](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "seed for characteristic-sequence trials")->capture_default_str();
    sub->add_option("--trials", o.trials, "random characteristic-sequence trials")->capture_default_str();
  };

  auto* check = app.add_subcommand("check", "verify the Leibniz identity on all basis triples");
  check->add_option("algebra", o.files, "algebra file")->required()->expected(1);

  auto* inv = app.add_subcommand("invariants", "central series, center, annihilator, characteristic sequence");
  inv->add_option("algebra", o.files, "algebra file")->required()->expected(1);
  seed_opts(inv);

  auto* der = app.add_subcommand("der", "derivations, inner derivations and dim H1");
  der->add_option("algebra", o.files, "algebra file")->required()->expected(1);
  der->add_flag("--dump-basis", o.dump_basis, "print basis matrices of Der and Inn");

  auto* h1 = app.add_subcommand("h1", "dimension of the first cohomology with adjoint coefficients");
  h1->add_option("algebra", o.files, "algebra file")->required()->expected(1);

  auto* gv = app.add_subcommand("grade-verify", "check a weight assignment is a gradation");
  gv->add_option("algebra", o.files, "algebra file")->required()->expected(1);
  gv->add_option("--weights", o.weights_path, "weights file")->required();

  auto* gs = app.add_subcommand("grade-search", "search maximum-length gradations diagonal in the given basis");
  gs->add_option("algebra", o.files, "algebra file")->required()->expected(1);
  gs->add_option("--max-abs", o.max_abs, "weight bound (default 2*dim)");
  gs->add_option("--out", o.out_path, "write the weights file here");

  auto* cat = app.add_subcommand("catalog", "emit a catalog algebra");
  cat->add_option("--family", o.family, "L1, KF4, KF5, NGF1, N, M, M1alpha, nullfiliform-ml, abelian")->required();
  cat->add_option("--n", o.n, "family size parameter")->required();
  cat->add_option("--param", o.params, "name=value, repeatable");
  cat->add_option("--out", o.out_path, "output path (default stdout)");

  auto* iso = app.add_subcommand("iso-verify", "verify an isomorphism certificate");
  iso->add_option("files", o.files, "CERTIFICATE, or SOURCE TARGET with --map")->required()->expected(1, 2);
  iso->add_option("--map", o.map_path, "matrix file");

  auto* fp = app.add_subcommand("fingerprint", "isomorphism invariants; two files are also compared");
  fp->add_option("algebras", o.files, "one or two algebra files")->required()->expected(1, 2);
  seed_opts(fp);

  auto* rep = app.add_subcommand("replicate", "recompute the classification and cohomology tables");
  rep->add_option("--section", o.section, "2 or 3")->required()->check(CLI::IsMember({2, 3}));
  rep->add_option("--n", o.n, "size parameter (default 7 for section 2, 9 for section 3)");
  seed_opts(rep);

  std::vector<const char*> argv{"leibniz"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*inv) return cmd_invariants(o, out);
    if (*der) return cmd_der(o, out);
    if (*h1) return cmd_h1(o, out);
    if (*gv) return cmd_grade_verify(o, out);
    if (*gs) return cmd_grade_search(o, out);
    if (*cat) return cmd_catalog(o, out);
    if (*iso) return cmd_iso_verify(o, out);
    if (*fp) return cmd_fingerprint(o, out);
    if (*rep) return cmd_replicate(o, out);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace leibniz
