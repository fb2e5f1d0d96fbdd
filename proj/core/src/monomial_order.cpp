#include "monocurve/monomial_order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "monocurve/errors.hpp"

namespace monocurve {

std::vector<std::size_t> identity_permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

namespace {

void validate_permutation(const std::vector<std::size_t>& perm) {
  if (perm.empty()) throw ValidationError("empty variable permutation");
  std::vector<bool> seen(perm.size(), false);
  for (auto v : perm) {
    if (v >= perm.size() || seen[v]) {
      throw ValidationError("not a permutation of the variables");
    }
    seen[v] = true;
  }
}

std::strong_ordering compare_lex(const Monomial& u, const Monomial& v,
                                 const std::vector<std::size_t>& perm,
                                 std::size_t begin, std::size_t end) {
  for (std::size_t k = begin; k < end; ++k) {
    auto i = perm[k];
    if (u[i] != v[i]) return u[i] <=> v[i];
  }
  return std::strong_ordering::equal;
}

// Reverse-lex tie break: the last differing variable decides, and the
// smaller exponent there is the greater monomial.
std::strong_ordering compare_revlex(const Monomial& u, const Monomial& v,
                                    const std::vector<std::size_t>& perm,
                                    std::size_t begin, std::size_t end) {
  for (std::size_t k = end; k > begin; --k) {
    auto i = perm[k - 1];
    if (u[i] != v[i]) return v[i] <=> u[i];
  }
  return std::strong_ordering::equal;
}

std::int64_t block_degree(const Monomial& m,
                          const std::vector<std::size_t>& perm,
                          const std::vector<std::int64_t>& weights,
                          std::size_t begin, std::size_t end) {
  std::int64_t d = 0;
  for (std::size_t k = begin; k < end; ++k) {
    auto i = perm[k];
    d += static_cast<std::int64_t>(m[i]) * weights[i];
  }
  return d;
}

std::strong_ordering compare_weighted_block(
    const Monomial& u, const Monomial& v,
    const std::vector<std::size_t>& perm,
    const std::vector<std::int64_t>& weights, std::size_t begin,
    std::size_t end) {
  auto du = block_degree(u, perm, weights, begin, end);
  auto dv = block_degree(v, perm, weights, begin, end);
  if (du != dv) return du <=> dv;
  return compare_revlex(u, v, perm, begin, end);
}

}  // namespace

MonomialOrder::MonomialOrder(OrderKind kind,
                             std::vector<std::size_t> permutation,
                             std::vector<std::int64_t> weights,
                             std::size_t block_split)
    : kind_(kind),
      permutation_(std::move(permutation)),
      weights_(std::move(weights)),
      block_split_(block_split) {
  validate_permutation(permutation_);
  if (permutation_.size() > kMaxVariables) {
    throw ValidationError("too many variables for a monomial order");
  }
  if (weights_.empty()) weights_.assign(permutation_.size(), 1);
  if (weights_.size() != permutation_.size()) {
    throw ValidationError("weight vector length does not match variables");
  }
  for (auto w : weights_) {
    if (w <= 0) throw ValidationError("weights must be positive");
  }
  if (kind_ == OrderKind::block_elimination &&
      (block_split_ == 0 || block_split_ >= permutation_.size())) {
    throw ValidationError("block split must leave both blocks nonempty");
  }
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> permutation) {
  return {OrderKind::lex, std::move(permutation), {}, 0};
}
MonomialOrder MonomialOrder::graded_lex(std::vector<std::size_t> permutation) {
  return {OrderKind::graded_lex, std::move(permutation), {}, 0};
}
MonomialOrder MonomialOrder::graded_revlex(
    std::vector<std::size_t> permutation) {
  return {OrderKind::graded_revlex, std::move(permutation), {}, 0};
}
MonomialOrder MonomialOrder::weighted(std::vector<std::size_t> permutation,
                                      std::vector<std::int64_t> weights) {
  return {OrderKind::weighted, std::move(permutation), std::move(weights), 0};
}
MonomialOrder MonomialOrder::block_elimination(
    std::vector<std::size_t> permutation, std::vector<std::int64_t> weights,
    std::size_t block_split) {
  return {OrderKind::block_elimination, std::move(permutation),
          std::move(weights), block_split};
}

MonomialOrder MonomialOrder::lex(std::size_t n) {
  return lex(identity_permutation(n));
}
MonomialOrder MonomialOrder::graded_lex(std::size_t n) {
  return graded_lex(identity_permutation(n));
}
MonomialOrder MonomialOrder::graded_revlex(std::size_t n) {
  return graded_revlex(identity_permutation(n));
}
MonomialOrder MonomialOrder::weighted(std::vector<std::int64_t> weights) {
  auto n = weights.size();
  return weighted(identity_permutation(n), std::move(weights));
}

std::strong_ordering MonomialOrder::compare_base(const Monomial& u,
                                                 const Monomial& v) const {
  const auto n = permutation_.size();
  switch (kind_) {
    case OrderKind::lex:
      return compare_lex(u, v, permutation_, 0, n);
    case OrderKind::graded_lex: {
      auto du = u.total_degree(), dv = v.total_degree();
      if (du != dv) return du <=> dv;
      return compare_lex(u, v, permutation_, 0, n);
    }
    case OrderKind::graded_revlex: {
      auto du = u.total_degree(), dv = v.total_degree();
      if (du != dv) return du <=> dv;
      return compare_revlex(u, v, permutation_, 0, n);
    }
    case OrderKind::weighted:
      return compare_weighted_block(u, v, permutation_, weights_, 0, n);
    case OrderKind::block_elimination: {
      auto c = compare_weighted_block(u, v, permutation_, weights_, 0,
                                      block_split_);
      if (c != 0) return c;
      return compare_weighted_block(u, v, permutation_, weights_,
                                    block_split_, n);
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& u,
                                            const Monomial& v) const {
  if (u.size() != v.size() || u.size() != permutation_.size()) {
    throw ValidationError("exponent vector length does not match the order");
  }
  if (!homogenizing_variable_) return compare_base(u, v);
  auto du = u.total_degree(), dv = v.total_degree();
  if (du != dv) return du <=> dv;
  Monomial uu(u), vv(v);
  uu[*homogenizing_variable_] = 0;
  vv[*homogenizing_variable_] = 0;
  return compare_base(uu, vv);
}

std::int64_t MonomialOrder::degree(const Monomial& m) const {
  if (!homogenizing_variable_ && (kind_ == OrderKind::weighted ||
                                  kind_ == OrderKind::block_elimination)) {
    return m.weighted_degree(weights_);
  }
  return static_cast<std::int64_t>(m.total_degree());
}

bool MonomialOrder::is_degree_compatible() const {
  if (homogenizing_variable_) return true;
  switch (kind_) {
    case OrderKind::graded_lex:
    case OrderKind::graded_revlex:
      return true;
    case OrderKind::weighted:
      return std::all_of(weights_.begin(), weights_.end(),
                         [&](auto w) { return w == weights_.front(); });
    default:
      return false;
  }
}

MonomialOrder MonomialOrder::homogenized() const {
  if (!is_degree_compatible()) {
    throw ValidationError("homogenization needs a degree-compatible order");
  }
  if (homogenizing_variable_) {
    throw ValidationError("order is already homogenized");
  }
  auto perm = permutation_;
  auto h = perm.size();
  perm.push_back(h);
  auto weights = weights_;
  weights.push_back(1);
  MonomialOrder result(kind_, std::move(perm), std::move(weights),
                       block_split_);
  result.homogenizing_variable_ = h;
  return result;
}

std::string MonomialOrder::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case OrderKind::lex: out << "lex"; break;
    case OrderKind::graded_lex: out << "grlex"; break;
    case OrderKind::graded_revlex: out << "grevlex"; break;
    case OrderKind::weighted: out << "weighted"; break;
    case OrderKind::block_elimination: out << "block"; break;
  }
  out << "(";
  for (std::size_t k = 0; k < permutation_.size(); ++k) {
    if (k) out << (kind_ == OrderKind::block_elimination && k == block_split_
                       ? " | "
                       : " > ");
    out << "x" << permutation_[k];
  }
  out << ")";
  if (kind_ == OrderKind::weighted || kind_ == OrderKind::block_elimination) {
    out << " weights [";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      out << (i ? "," : "") << weights_[i];
    }
    out << "]";
  }
  if (homogenizing_variable_) out << " homogenized by x" << *homogenizing_variable_;
  return out.str();
}

}  // namespace monocurve
