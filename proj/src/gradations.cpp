#include "leibniz/gradations.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "leibniz/cohomology.hpp"

namespace leibniz {

GradationReport verify_gradation(const Algebra& a, const WeightAssignment& w) {
  if (static_cast<Index>(w.weights.size()) != a.dim())
    throw ContractError("verify_gradation: weight count " + std::to_string(w.weights.size()) +
                        " does not match dim " + std::to_string(a.dim()));
  GradationReport r;
  for (const auto& [key, result] : a.products()) {
    const int target = w.weights[static_cast<std::size_t>(key.first)] + w.weights[static_cast<std::size_t>(key.second)];
    for (Index k = 0; k < a.dim(); ++k) {
      if (!result(k).is_zero() && w.weights[static_cast<std::size_t>(k)] != target) {
        r.violations.push_back(key);
        break;
      }
    }
  }
  r.valid = r.violations.empty();
  for (int x : w.weights) ++r.component_dims[x];
  for (const auto& [weight, count] : r.component_dims) r.occupied.push_back(weight);
  if (!r.occupied.empty()) {
    const Index span = r.occupied.back() - r.occupied.front() + 1;
    r.connected = span == static_cast<Index>(r.occupied.size());
    if (r.connected) r.length = span;
  }
  r.maximum_length = r.valid && r.connected && r.length == a.dim();
  return r;
}

std::string render_gradation(const Algebra& a, const WeightAssignment& w, const GradationReport& r) {
  std::ostringstream os;
  os << "gradation: " << (r.valid ? "valid" : "INVALID") << "\n";
  if (r.occupied.empty()) {
    os << "occupied: none\n";
    return os.str();
  }
  os << "occupied: ";
  if (r.connected) {
    os << r.occupied.front() << ".." << r.occupied.back() << " (connected)\n";
    os << "length: " << *r.length << " of dim " << a.dim()
       << (r.maximum_length ? " (maximum length)" : " (not maximum length)") << "\n";
  } else {
    os << "{";
    for (std::size_t i = 0; i < r.occupied.size(); ++i) os << (i ? "," : "") << r.occupied[i];
    os << "} (not connected, length undefined)\n";
  }
  for (int k = r.occupied.front(); k <= r.occupied.back(); ++k) {
    os << "  V_" << k << " = <";
    bool first = true;
    for (Index i = 0; i < a.dim(); ++i) {
      if (w.weights[static_cast<std::size_t>(i)] != k) continue;
      os << (first ? "" : ",") << a.label(i);
      first = false;
    }
    os << (first ? "0>" : ">") << "\n";
  }
  for (const auto& [i, j] : r.violations) {
    os << "violation: [" << a.label(i) << "," << a.label(j) << "] = " << render_vector(a, a.product(i, j))
       << " not in V_" << w.weights[static_cast<std::size_t>(i)] + w.weights[static_cast<std::size_t>(j)] << "\n";
  }
  return os.str();
}

namespace {

// Homogeneity constraint w_k = w_i + w_j for a nonzero coefficient of e_k in [e_i,e_j].
struct Constraint {
  Index i, j, k;
};

class DiagonalSearch {
 public:
  DiagonalSearch(const Algebra& a, int max_abs) : n_(a.dim()), max_abs_(max_abs), by_last_(static_cast<std::size_t>(n_)) {
    for (const auto& [key, result] : a.products())
      for (Index k = 0; k < n_; ++k)
        if (!result(k).is_zero()) {
          const Constraint c{key.first, key.second, k};
          by_last_[static_cast<std::size_t>(std::max({c.i, c.j, c.k}))].push_back(c);
        }
    w_.assign(static_cast<std::size_t>(n_), 0);
  }

  std::optional<WeightAssignment> run() {
    if (n_ == 0) return WeightAssignment{};
    if (static_cast<long>(n_) > 2L * max_abs_ + 1) return std::nullopt;
    if (assign(0)) return WeightAssignment{w_};
    return std::nullopt;
  }

 private:
  // Values for position p implied by constraints whose indices are all <= p.
  // Returns false if those constraints are already contradictory.
  bool forced_value(Index p, std::optional<int>& forced) const {
    for (const Constraint& c : by_last_[static_cast<std::size_t>(p)]) {
      int coeff = 0;
      long rest = 0;
      auto term = [&](Index idx, int sign) {
        if (idx == p)
          coeff += sign;
        else
          rest += sign * w_[static_cast<std::size_t>(idx)];
      };
      term(c.k, 1);
      term(c.i, -1);
      term(c.j, -1);
      if (coeff == 0) {
        if (rest != 0) return false;
        continue;
      }
      if (rest % coeff != 0) return false;
      const long value = -rest / coeff;
      if (forced && *forced != value) return false;
      forced = static_cast<int>(value);
    }
    return true;
  }

  bool assign(Index p) {
    if (p == n_) return true;
    std::optional<int> forced;
    if (!forced_value(p, forced)) return false;

    const bool prefix_zero =
        std::all_of(w_.begin(), w_.begin() + p, [](int x) { return x == 0; });
    const int lo = forced ? *forced : -max_abs_;
    const int hi = forced ? *forced : max_abs_;
    for (int v = lo; v <= hi; ++v) {
      if (v < -max_abs_ || v > max_abs_) continue;
      if (prefix_zero && v < 0) continue;  // representative of {w, -w}
      if (used_.count(v)) continue;
      if (!used_.empty()) {
        const int lo_w = std::min(*used_.begin(), v);
        const int hi_w = std::max(*used_.rbegin(), v);
        if (hi_w - lo_w > n_ - 1) continue;
      }
      w_[static_cast<std::size_t>(p)] = v;
      used_.insert(v);
      if (assign(p + 1)) return true;
      used_.erase(v);
    }
    w_[static_cast<std::size_t>(p)] = 0;
    return false;
  }

  Index n_;
  int max_abs_;
  std::vector<std::vector<Constraint>> by_last_;
  std::vector<int> w_;
  std::set<int> used_;
};

}  // namespace

std::optional<WeightAssignment> search_diagonal_gradation(const Algebra& a, int max_abs) {
  if (max_abs < 1) throw ContractError("search_diagonal_gradation: max_abs must be at least 1");
  return DiagonalSearch(a, max_abs).run();
}

std::map<int, Matrix> homogeneous_components(const Matrix& d, const WeightAssignment& w) {
  if (d.rows() != d.cols() || d.rows() != static_cast<Index>(w.weights.size()))
    throw ContractError("homogeneous_components: shape mismatch");
  std::map<int, Matrix> parts;
  for (Index r = 0; r < d.rows(); ++r)
    for (Index c = 0; c < d.cols(); ++c) {
      if (d(r, c).is_zero()) continue;
      const int weight = w.weights[static_cast<std::size_t>(r)] - w.weights[static_cast<std::size_t>(c)];
      auto [it, inserted] = parts.try_emplace(weight, Matrix::Zero(d.rows(), d.cols()));
      it->second(r, c) = d(r, c);
    }
  return parts;
}

std::map<int, Index> graded_derivation_split(const Algebra& a, const WeightAssignment& w,
                                             const std::vector<Matrix>& der_basis) {
  if (!verify_gradation(a, w).valid) throw ContractError("graded_derivation_split: weights are not a gradation");
  const Index n = a.dim();
  std::map<int, std::vector<Vector>> by_weight;
  for (const Matrix& d : der_basis) {
    if (!is_derivation(a, d)) throw ContractError("graded_derivation_split: basis element is not a derivation");
    for (auto& [weight, part] : homogeneous_components(d, w)) {
      if (!is_derivation(a, part))
        throw std::logic_error("graded_derivation_split: homogeneous component is not a derivation");
      by_weight[weight].push_back(flatten(part));
    }
  }
  std::map<int, Index> dims;
  for (const auto& [weight, parts] : by_weight) {
    const Index d = static_cast<Index>(span_basis(parts, n * n).size());
    if (d > 0) dims[weight] = d;
  }
  return dims;
}

}  // namespace leibniz
