#include "leibniz/catalog.hpp"

#include <algorithm>

namespace leibniz {

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::L1, "L1"},           {Family::KF4, "KF4"},         {Family::KF5, "KF5"},
    {Family::NGF1, "NGF1"},       {Family::N, "N"},             {Family::M, "M"},
    {Family::M1alpha, "M1alpha"}, {Family::NullFiliform, "nullfiliform-ml"},
    {Family::Abelian, "abelian"},
};

std::vector<std::string> numbered(const std::string& prefix, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

class Builder {
 public:
  Builder(std::vector<std::string> labels, const std::map<std::string, Scalar>& params)
      : algebra_(std::move(labels)), params_(params) {}

  // Indices are given by label so each law reads like its multiplication table.
  Index at(const std::string& label) const {
    auto idx = algebra_.index_of(label);
    if (!idx) throw std::logic_error("catalog: missing label " + label);
    return *idx;
  }

  void put(const std::string& x, const std::string& y, const std::string& z, const Scalar& c = Scalar(1)) {
    if (!c.is_zero()) algebra_.add_product(at(x), at(y), at(z), c);
  }
  /// Lie products carry both [x,y] and [y,x] = -[x,y].
  void put_lie(const std::string& x, const std::string& y, const std::string& z, const Scalar& c) {
    put(x, y, z, c);
    put(y, x, z, -c);
  }

  Scalar param(const std::string& name) const {
    auto it = params_.find(name);
    return it == params_.end() ? Scalar(0) : it->second;
  }

  Algebra take() { return std::move(algebra_); }

 private:
  Algebra algebra_;
  const std::map<std::string, Scalar>& params_;
};

std::string e(int i) { return "e" + std::to_string(i); }
std::string f(int i) { return "f" + std::to_string(i); }
std::string y(int i) { return "y" + std::to_string(i); }

Algebra build_l1(int n, const std::map<std::string, Scalar>& params) {
  auto labels = numbered("e", 1, n - 3);
  for (auto& l : numbered("f", 1, 3)) labels.push_back(l);
  Builder b(labels, params);
  for (int i = 1; i <= n - 4; ++i) b.put(e(i), e(1), e(i + 1));
  b.put(e(1), f(1), f(3));
  for (int i = 1; i <= n - 4; ++i) b.put(e(i), f(2), e(i + 1));
  return b.take();
}

Algebra build_kf(int n, bool kf5, const std::map<std::string, Scalar>& params) {
  Builder b(numbered("e", 1, n), params);
  for (int i = 1; i <= n - 3; ++i) b.put(e(i), e(1), e(i + 1));
  if (kf5) b.put(e(1), e(n - 1), e(2));
  b.put(e(1), e(n - 1), e(n));
  for (int k = 3; k <= n - 2; ++k) b.put(e(1), e(n - 1), e(k), b.param("alpha_" + std::to_string(k)));
  for (int k = 3; k <= n - 2; ++k) b.put(e(n - 1), e(n - 1), e(k), b.param("beta_" + std::to_string(k)));
  for (int i = 2; i <= n - 4; ++i) {
    if (kf5) b.put(e(i), e(n - 1), e(i + 1));
    for (int k = i + 2; k <= n - 2; ++k)
      b.put(e(i), e(n - 1), e(k), b.param("beta_" + std::to_string(i) + "_" + std::to_string(k)));
  }
  for (int k = 4; k <= n - 2; ++k) b.put(e(n), e(n - 1), e(k), b.param("gamma_" + std::to_string(k)));
  return b.take();
}

Algebra build_ngf1(int n, const std::map<std::string, Scalar>& params) {
  Builder b(numbered("e", 1, n), params);
  b.put(e(1), e(1), e(3));
  for (int i = 2; i <= n - 1; ++i) b.put(e(i), e(1), e(i + 1));
  return b.take();
}

// Basis e0..e_{n-1}, f1; the table lists one product of each antisymmetric pair.
Algebra build_n(int n, const std::map<std::string, Scalar>& params) {
  auto labels = numbered("e", 0, n - 1);
  labels.push_back(f(1));
  Builder b(labels, params);
  for (int i = 2; i <= n - 2; ++i) b.put_lie(e(i - 1), e(0), e(i), 1);
  b.put_lie(e(n - 3), e(1), e(n - 1), -1);
  b.put_lie(e(n - 4), e(2), e(n - 1), 1);
  for (int i = 3; i <= (n - 3) / 2; ++i) b.put_lie(e(i), e(n - 2 - i), e(n - 1), (i - 1) % 2 == 0 ? 1 : -1);
  b.put_lie(f(1), e(0), e(n - 1), 1);
  return b.take();
}

Algebra build_m(int n, bool family, const std::map<std::string, Scalar>& params) {
  auto labels = numbered("y", 1, n);
  labels.push_back("z1");
  Builder b(labels, params);
  for (int i = 1; i <= n - 3; ++i) b.put(y(i), y(1), y(i + 1));
  b.put(y(1), y(n - 1), y(n));
  if (family) {
    b.put(y(n - 1), "z1", y(n - 2));
    b.put("z1", y(n - 1), y(n - 2), b.param("alpha"));
  } else {
    b.put("z1", y(n - 1), y(n - 2));
  }
  return b.take();
}

Algebra build_null_filiform(int n, const std::map<std::string, Scalar>& params) {
  Builder b(numbered("e", 1, n), params);
  for (int i = 1; i <= n - 1; ++i) b.put(e(i), e(1), e(i + 1));
  return b.take();
}

}  // namespace

std::string family_name(Family fam) {
  for (const auto& info : kFamilies)
    if (info.family == fam) return info.name;
  throw std::logic_error("family_name: unknown family");
}

Family parse_family(const std::string& name) {
  for (const auto& info : kFamilies)
    if (name == info.name) return info.family;
  throw ContractError("unknown family '" + name + "'");
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> fams = [] {
    std::vector<Family> out;
    for (const auto& info : kFamilies) out.push_back(info.family);
    return out;
  }();
  return fams;
}

int min_n(Family fam) {
  switch (fam) {
    case Family::L1:
    case Family::N:
      return 7;
    case Family::KF4:
    case Family::KF5:
    case Family::M:
    case Family::M1alpha:
      return 5;
    case Family::NGF1:
      return 3;
    case Family::NullFiliform:
      return 1;
    case Family::Abelian:
      return 0;
  }
  return 0;
}

Index family_dim(Family fam, int n) {
  switch (fam) {
    case Family::N:
    case Family::M:
    case Family::M1alpha:
      return n + 1;
    default:
      return n;
  }
}

int advertised_p(Family fam, int n) {
  switch (fam) {
    case Family::L1:
    case Family::N:
    case Family::M:
    case Family::M1alpha:
      return 3;
    case Family::KF4:
    case Family::KF5:
      return 2;
    case Family::NGF1:
      return 1;
    case Family::NullFiliform:
      return 0;
    case Family::Abelian:
      return n - 1;
  }
  return -1;
}

std::vector<std::string> parameter_names(Family fam, int n) {
  std::vector<std::string> out;
  if (fam == Family::KF4 || fam == Family::KF5) {
    for (int k = 3; k <= n - 2; ++k) out.push_back("alpha_" + std::to_string(k));
    for (int k = 3; k <= n - 2; ++k) out.push_back("beta_" + std::to_string(k));
    for (int i = 2; i <= n - 4; ++i)
      for (int k = i + 2; k <= n - 2; ++k) out.push_back("beta_" + std::to_string(i) + "_" + std::to_string(k));
    for (int k = 4; k <= n - 2; ++k) out.push_back("gamma_" + std::to_string(k));
  } else if (fam == Family::M1alpha) {
    out.push_back("alpha");
  }
  return out;
}

Algebra build(const FamilySpec& spec) {
  const std::string name = family_name(spec.family);
  if (spec.n < min_n(spec.family))
    throw ContractError(name + " requires n >= " + std::to_string(min_n(spec.family)) + ", got " +
                        std::to_string(spec.n));
  if (spec.family == Family::N && spec.n % 2 == 0)
    throw ContractError("N requires odd n, got " + std::to_string(spec.n));
  const auto allowed = parameter_names(spec.family, spec.n);
  for (const auto& [key, value] : spec.params)
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ContractError("unknown parameter '" + key + "' for " + name + " at n=" + std::to_string(spec.n));

  switch (spec.family) {
    case Family::L1:
      return build_l1(spec.n, spec.params);
    case Family::KF4:
      return build_kf(spec.n, false, spec.params);
    case Family::KF5:
      return build_kf(spec.n, true, spec.params);
    case Family::NGF1:
      return build_ngf1(spec.n, spec.params);
    case Family::N:
      return build_n(spec.n, spec.params);
    case Family::M:
      return build_m(spec.n, false, spec.params);
    case Family::M1alpha:
      return build_m(spec.n, true, spec.params);
    case Family::NullFiliform:
      return build_null_filiform(spec.n, spec.params);
    case Family::Abelian:
      return Algebra::with_dimension(spec.n, "c");
  }
  throw std::logic_error("build: unhandled family");
}

WeightAssignment m_family_weights(int n) {
  WeightAssignment w;
  for (int i = 1; i <= n - 2; ++i) w.weights.push_back(i);
  w.weights.push_back(-1);
  w.weights.push_back(0);
  w.weights.push_back(n - 1);
  return w;
}

std::vector<LeibnizViolation> admissible_param_check(const FamilySpec& spec) { return leibniz_residual(build(spec)); }

}  // namespace leibniz
