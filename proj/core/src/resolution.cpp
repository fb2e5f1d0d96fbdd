#include "monocurve/resolution.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "monocurve/errors.hpp"

namespace monocurve {

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols,
                       std::size_t num_variables)
    : rows_(rows),
      cols_(cols),
      num_variables_(num_variables),
      entries_(rows * cols, Polynomial(num_variables)) {}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (cols_ != other.rows_) {
    throw ValidationError("matrix dimensions do not match");
  }
  PolyMatrix out(rows_, other.cols_, num_variables_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t l = 0; l < cols_; ++l) {
      const auto& a = (*this)(i, l);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const auto& b = other(l, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  }
  return out;
}

void PolyMatrix::erase_row(std::size_t r) {
  auto first = entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
  entries_.erase(first, first + static_cast<std::ptrdiff_t>(cols_));
  --rows_;
}

void PolyMatrix::erase_column(std::size_t c) {
  std::vector<Polynomial> kept;
  kept.reserve(rows_ * (cols_ - 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (k != c) kept.push_back(std::move(entries_[r * cols_ + k]));
    }
  }
  entries_ = std::move(kept);
  --cols_;
}

// ---------------------------------------------------------------------------
// GradedResolution

std::vector<std::size_t> GradedResolution::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& s : shifts) r.push_back(s.size());
  return r;
}

std::vector<std::size_t> GradedResolution::betti() const {
  auto r = ranks();
  if (!r.empty()) r.erase(r.begin());
  return r;
}

// ---------------------------------------------------------------------------
// Schreyer syzygies of an ideal basis

std::vector<FreeModuleElement> schreyer_syzygies(
    const GroebnerBasis& gb, std::span<const std::int64_t> weights) {
  const auto& gens = gb.generators();
  const auto t = gens.size();
  const auto n = gb.num_variables();
  std::vector<std::int64_t> shifts;
  for (const auto& g : gens) shifts.push_back(g.weighted_degree(weights));

  std::vector<FreeModuleElement> out;
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      const auto& tr = gb.transcript(i, j);
      FreeModuleElement v{tr.quotients, shifts};
      if (v.coordinates.size() != t) {
        throw InternalError("transcript has the wrong number of quotients");
      }
      v.coordinates[i] -= tr.left;
      v.coordinates[j] += tr.right;
      Polynomial check(n);
      for (std::size_t k = 0; k < t; ++k) {
        check += v.coordinates[k] * gens[k];
      }
      if (!check.is_zero()) {
        throw InternalError("Schreyer vector does not annihilate the basis");
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Schreyer frame iteration

namespace {

using ModuleVector = std::map<std::size_t, Polynomial>;

// Basis data of one free module of the frame. Module monomials x^a e_c are
// ordered by x^a * labels[c] in the ring order, ties going to the basis
// vector with the smaller index.
struct FrameLevel {
  std::vector<Monomial> labels;
};

struct ModuleLead {
  std::size_t component = 0;
  Monomial monomial;
  Rational coefficient;
};

class ModuleOrder {
 public:
  ModuleOrder(const MonomialOrder& ring, const FrameLevel& level)
      : ring_(ring), level_(level) {}

  bool greater(const Monomial& a, std::size_t ca, const Monomial& b,
               std::size_t cb) const {
    auto c = ring_.compare(a * level_.labels[ca], b * level_.labels[cb]);
    if (c != 0) return c > 0;
    return ca < cb;
  }

  ModuleLead lead(const ModuleVector& v) const {
    const Term* best = nullptr;
    std::size_t best_component = 0;
    for (const auto& [component, poly] : v) {
      for (const auto& term : poly.terms()) {
        if (!best || greater(term.monomial, component, best->monomial,
                             best_component)) {
          best = &term;
          best_component = component;
        }
      }
    }
    if (!best) throw InternalError("leading term of a zero module element");
    return {best_component, best->monomial, best->coefficient};
  }

 private:
  const MonomialOrder& ring_;
  const FrameLevel& level_;
};

void add_scaled(ModuleVector& target, const Rational& c, const Monomial& m,
                const ModuleVector& source) {
  for (const auto& [component, poly] : source) {
    auto it = target.find(component);
    if (it == target.end()) {
      it = target.emplace(component, Polynomial(poly.num_variables())).first;
    }
    it->second.subtract_multiple(-c, m, poly);
    if (it->second.is_zero()) target.erase(it);
  }
}

void add_poly(ModuleVector& target, std::size_t component,
              const Polynomial& p) {
  if (p.is_zero()) return;
  auto it = target.find(component);
  if (it == target.end()) {
    target.emplace(component, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) target.erase(it);
}

bool is_zero(const ModuleVector& v) { return v.empty(); }

// Divides v by the generators; returns quotients, throws unless the
// remainder vanishes.
std::vector<Polynomial> divide_to_zero(ModuleVector v,
                                       const std::vector<ModuleVector>& gens,
                                       const std::vector<ModuleLead>& leads,
                                       const ModuleOrder& order,
                                       std::size_t num_variables) {
  std::vector<Polynomial> q(gens.size(), Polynomial(num_variables));
  while (!is_zero(v)) {
    auto lt = order.lead(v);
    bool reduced = false;
    for (std::size_t a = 0; a < gens.size(); ++a) {
      if (leads[a].component != lt.component ||
          !leads[a].monomial.divides(lt.monomial)) {
        continue;
      }
      Rational c = lt.coefficient / leads[a].coefficient;
      Monomial m = lt.monomial.quotient(leads[a].monomial);
      q[a].add_term(c, m);
      add_scaled(v, -c, m, gens[a]);
      reduced = true;
      break;
    }
    if (!reduced) {
      throw InternalError(
          "S-pair of a frame level does not reduce to zero");
    }
  }
  return q;
}

}  // namespace

GradedResolution free_resolution(const GroebnerBasis& gb,
                                 std::span<const std::int64_t> weights) {
  const auto n = gb.num_variables();
  const auto& ring = gb.order();
  if (weights.size() != n) {
    throw ValidationError("one weight per variable is required");
  }
  GradedResolution res;
  res.num_variables = n;
  res.weights.assign(weights.begin(), weights.end());
  res.shifts.push_back({0});

  // Level 0: the ring itself, one basis vector with label 1.
  FrameLevel previous{{Monomial(n)}};
  std::vector<ModuleVector> gens;
  for (const auto& g : gb.generators()) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous(weights)) {
      throw ValidationError("resolution input must be weighted-homogeneous");
    }
    gens.push_back(ModuleVector{{0, g}});
  }

  for (std::size_t level = 1; !gens.empty(); ++level) {
    if (level > n + 1) {
      throw InternalError("Schreyer frame did not terminate");
    }
    ModuleOrder prev_order(ring, previous);
    std::vector<ModuleLead> leads;
    for (const auto& g : gens) leads.push_back(prev_order.lead(g));

    // Within each lead component, sort by descending exponent of one
    // variable; syzygy leads then avoid that variable, so the frame dies
    // out after num_variables levels.
    const std::size_t var = (level - 1) % n;
    std::vector<std::size_t> idx(gens.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      if (leads[a].component != leads[b].component) {
        return leads[a].component < leads[b].component;
      }
      return leads[a].monomial[var] > leads[b].monomial[var];
    });
    {
      std::vector<ModuleVector> g2;
      std::vector<ModuleLead> l2;
      for (auto k : idx) {
        g2.push_back(std::move(gens[k]));
        l2.push_back(leads[k]);
      }
      gens = std::move(g2);
      leads = std::move(l2);
    }

    const auto rank_prev = previous.labels.size();
    const auto rank = gens.size();
    FrameLevel current;
    std::vector<std::int64_t> shifts;
    PolyMatrix d(rank_prev, rank, n);
    for (std::size_t a = 0; a < rank; ++a) {
      current.labels.push_back(leads[a].monomial *
                               previous.labels[leads[a].component]);
      shifts.push_back(current.labels.back().weighted_degree(weights));
      for (const auto& [component, poly] : gens[a]) d(component, a) = poly;
    }
    res.differentials.push_back(std::move(d));
    res.shifts.push_back(std::move(shifts));

    // Syzygies from S-pairs with a common lead component.
    std::vector<ModuleVector> syzygies;
    for (std::size_t a = 0; a < rank; ++a) {
      for (std::size_t b = a + 1; b < rank; ++b) {
        if (leads[a].component != leads[b].component) continue;
        const auto& la = leads[a];
        const auto& lb = leads[b];
        Monomial l = la.monomial.lcm(lb.monomial);
        Rational left_c = 1 / la.coefficient;
        Rational right_c = 1 / lb.coefficient;
        Monomial left_m = l.quotient(la.monomial);
        Monomial right_m = l.quotient(lb.monomial);

        ModuleVector syz;
        if (level == 1 && la.monomial.coprime(lb.monomial)) {
          // S(f, g) = -(g - Lt g) f / (cf cg) + (f - Lt f) g / (cf cg).
          const auto& f = gens[a].at(0);
          const auto& g = gens[b].at(0);
          Rational denom = la.coefficient * lb.coefficient;
          Polynomial g_tail = g;
          g_tail.add_term(-lb.coefficient, lb.monomial);
          Polynomial f_tail = f;
          f_tail.add_term(-la.coefficient, la.monomial);
          add_poly(syz, a, g_tail.scaled(-1 / denom));
          add_poly(syz, b, f_tail.scaled(1 / denom));
        } else {
          ModuleVector s;
          add_scaled(s, left_c, left_m, gens[a]);
          add_scaled(s, -right_c, right_m, gens[b]);
          auto q = divide_to_zero(std::move(s), gens, leads, prev_order, n);
          for (std::size_t k = 0; k < rank; ++k) add_poly(syz, k, q[k]);
        }
        add_poly(syz, a, Polynomial::from_monomial(left_m, -left_c));
        add_poly(syz, b, Polynomial::from_monomial(right_m, right_c));
        if (!is_zero(syz)) syzygies.push_back(std::move(syz));
      }
    }

    // Keep only syzygies whose lead term is not divisible by another's; the
    // survivors still have leads generating the lead module, so they remain
    // a Groebner basis for the induced order.
    ModuleOrder order(ring, current);
    std::vector<ModuleLead> syz_leads;
    for (const auto& s : syzygies) syz_leads.push_back(order.lead(s));
    std::vector<ModuleVector> next;
    for (std::size_t a = 0; a < syzygies.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < syzygies.size() && !redundant; ++b) {
        if (b == a || syz_leads[b].component != syz_leads[a].component ||
            !syz_leads[b].monomial.divides(syz_leads[a].monomial)) {
          continue;
        }
        redundant = syz_leads[b].monomial != syz_leads[a].monomial || b < a;
      }
      if (!redundant) next.push_back(std::move(syzygies[a]));
    }
    previous = std::move(current);
    gens = std::move(next);
  }
  return res;
}

GradedResolution free_resolution(const GradedIdealPresentation& pres) {
  auto gb = reduce_basis(buchberger(pres.generators, pres.order));
  return free_resolution(gb, pres.weights);
}

// ---------------------------------------------------------------------------
// Minimalization

namespace {

// Entry (r, c) of differentials[k] is a unit: split off the trivial complex
// spanned by basis vector c of F_{k+1} and basis vector r of F_k.
void cancel_unit(GradedResolution& res, std::size_t k, std::size_t r,
                 std::size_t c) {
  auto& d = res.differentials[k];
  const Rational unit = d(r, c).terms().front().coefficient;
  for (std::size_t col = 0; col < d.cols(); ++col) {
    if (col == c || d(r, col).is_zero()) continue;
    Polynomial factor = d(r, col).scaled(1 / unit);
    for (std::size_t row = 0; row < d.rows(); ++row) {
      if (!d(row, c).is_zero()) d(row, col) -= factor * d(row, c);
    }
  }
  d.erase_row(r);
  d.erase_column(c);
  if (k > 0) res.differentials[k - 1].erase_column(r);
  if (k + 1 < res.differentials.size()) res.differentials[k + 1].erase_row(c);
  res.shifts[k].erase(res.shifts[k].begin() + static_cast<std::ptrdiff_t>(r));
  res.shifts[k + 1].erase(res.shifts[k + 1].begin() +
                          static_cast<std::ptrdiff_t>(c));
}

bool find_unit(const GradedResolution& res, std::size_t& k, std::size_t& r,
               std::size_t& c) {
  // F_0 = R is never split off, so the map into it is skipped.
  for (k = 1; k < res.differentials.size(); ++k) {
    const auto& d = res.differentials[k];
    for (r = 0; r < d.rows(); ++r) {
      for (c = 0; c < d.cols(); ++c) {
        if (d(r, c).is_constant()) return true;
      }
    }
  }
  return false;
}

}  // namespace

GradedResolution minimalize(GradedResolution res) {
  std::size_t k = 0, r = 0, c = 0;
  while (find_unit(res, k, r, c)) cancel_unit(res, k, r, c);
  while (!res.differentials.empty() && res.differentials.back().cols() == 0) {
    res.differentials.pop_back();
    res.shifts.pop_back();
  }
  res.minimal = true;
  return res;
}

bool is_complex(const GradedResolution& res) {
  for (std::size_t k = 0; k + 1 < res.differentials.size(); ++k) {
    if (!(res.differentials[k] * res.differentials[k + 1]).is_zero()) {
      return false;
    }
  }
  return true;
}

bool has_no_constant_entries(const GradedResolution& res) {
  for (const auto& d : res.differentials) {
    for (std::size_t r = 0; r < d.rows(); ++r) {
      for (std::size_t c = 0; c < d.cols(); ++c) {
        if (d(r, c).is_constant()) return false;
      }
    }
  }
  return true;
}

bool is_graded(const GradedResolution& res) {
  for (std::size_t k = 0; k < res.differentials.size(); ++k) {
    const auto& d = res.differentials[k];
    for (std::size_t r = 0; r < d.rows(); ++r) {
      for (std::size_t c = 0; c < d.cols(); ++c) {
        const auto& e = d(r, c);
        if (e.is_zero()) continue;
        if (!e.is_homogeneous(res.weights) ||
            e.weighted_degree(res.weights) !=
                res.shifts[k + 1][c] - res.shifts[k][r]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::size_t> betti_numbers(const MonomialCurve& curve,
                                       std::size_t max_basis_size) {
  auto gb = defining_ideal_basis(curve, max_basis_size);
  return minimalize(free_resolution(gb, curve.weights())).betti();
}

std::vector<std::size_t> betti_numbers(const MonomialCurve& curve,
                                       const MonomialOrder& order,
                                       std::size_t max_basis_size) {
  auto ideal = defining_ideal_basis(curve, max_basis_size);
  BuchbergerOptions options;
  options.max_basis_size = max_basis_size;
  auto gb = reduce_basis(buchberger(ideal.generators(), order, options));
  return minimalize(free_resolution(gb, curve.weights())).betti();
}

// ---------------------------------------------------------------------------
// Export

std::string resolution_to_json(const GradedResolution& res,
                               const VariableNames& names) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["minimal"] = res.minimal;
  j["variables"] = std::vector<std::string>(
      names.begin(), names.begin() + static_cast<std::ptrdiff_t>(
                                         std::min(names.size(), res.num_variables)));
  j["weights"] = res.weights;
  j["ranks"] = res.ranks();
  j["shifts"] = res.shifts;
  auto diffs = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < res.differentials.size(); ++k) {
    const auto& d = res.differentials[k];
    nlohmann::ordered_json m;
    m["from"] = k + 1;
    m["to"] = k;
    m["rows"] = d.rows();
    m["cols"] = d.cols();
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < d.rows(); ++r) {
      auto row = nlohmann::ordered_json::array();
      for (std::size_t c = 0; c < d.cols(); ++c) {
        row.push_back(to_string(d(r, c), names));
      }
      rows.push_back(std::move(row));
    }
    m["entries"] = std::move(rows);
    diffs.push_back(std::move(m));
  }
  j["differentials"] = std::move(diffs);
  return j.dump(2);
}

std::string resolution_to_text(const GradedResolution& res,
                               const VariableNames& names) {
  std::ostringstream out;
  out << (res.minimal ? "minimal" : "non-minimal") << " resolution\n";
  out << "ranks:";
  for (auto r : res.ranks()) out << ' ' << r;
  out << '\n';
  for (std::size_t k = 0; k < res.shifts.size(); ++k) {
    out << "shifts F" << k << ":";
    for (auto s : res.shifts[k]) out << ' ' << s;
    out << '\n';
  }
  for (std::size_t k = 0; k < res.differentials.size(); ++k) {
    const auto& d = res.differentials[k];
    out << "d" << k + 1 << ": F" << k + 1 << " -> F" << k << " (" << d.rows()
        << "x" << d.cols() << ")\n";
    for (std::size_t r = 0; r < d.rows(); ++r) {
      out << "  [";
      for (std::size_t c = 0; c < d.cols(); ++c) {
        out << (c ? ", " : "") << to_string(d(r, c), names);
      }
      out << "]\n";
    }
  }
  return out.str();
}

}  // namespace monocurve
