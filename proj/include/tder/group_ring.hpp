#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tder/group.hpp"
#include "tder/matrix.hpp"

namespace tder {

template <ExactField F>
class GroupRingElement {
 public:
  using Scalar = typename F::Scalar;

  GroupRingElement(GroupPtr group, F field)
      : group_(std::move(group)), field_(field), coeffs_(group_->order(), field_.zero()) {}
  GroupRingElement(GroupPtr group, F field, Vector<F> coeffs)
      : group_(std::move(group)), field_(field), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != group_->order()) throw DomainError("coefficient vector has wrong length");
  }

  static GroupRingElement basis(GroupPtr group, F field, Element g) {
    GroupRingElement e(std::move(group), field);
    e.coeffs_.at(g) = field.one();
    return e;
  }
  static GroupRingElement one(GroupPtr group, F field) {
    const Element e = group->identity();
    return basis(std::move(group), field, e);
  }

  const GroupPtr& group_ptr() const { return group_; }
  const FiniteGroup& group() const { return *group_; }
  const F& field() const { return field_; }
  const Vector<F>& coeffs() const { return coeffs_; }
  const Scalar& coeff(Element g) const { return coeffs_.at(g); }
  void set(Element g, Scalar v) { coeffs_.at(g) = std::move(v); }
  void add_to(Element g, const Scalar& v) { coeffs_.at(g) += v; }

  std::vector<Element> support() const {
    std::vector<Element> s;
    for (Element g = 0; g < coeffs_.size(); ++g)
      if (!tder::is_zero(coeffs_[g])) s.push_back(g);
    return s;
  }
  bool is_zero() const { return is_zero_vector<F>(coeffs_); }

  GroupRingElement& operator+=(const GroupRingElement& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!tder::is_zero(o.coeffs_[i])) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!tder::is_zero(o.coeffs_[i])) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator-(GroupRingElement a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend GroupRingElement operator*(const Scalar& s, GroupRingElement a) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
  }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    a.check(b);
    GroupRingElement out(a.group_, a.field_);
    const auto& G = *a.group_;
    for (Element g = 0; g < a.coeffs_.size(); ++g) {
      if (tder::is_zero(a.coeffs_[g])) continue;
      for (Element h = 0; h < b.coeffs_.size(); ++h) {
        if (tder::is_zero(b.coeffs_[h])) continue;
        out.coeffs_[G.mul(g, h)] += a.coeffs_[g] * b.coeffs_[h];
      }
    }
    return out;
  }
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.group_ == b.group_ && a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  // l * this * r for group elements l, r.
  GroupRingElement translate(Element l, Element r) const {
    GroupRingElement out(group_, field_);
    const auto& G = *group_;
    for (Element g = 0; g < coeffs_.size(); ++g)
      if (!tder::is_zero(coeffs_[g])) out.coeffs_[G.mul(G.mul(l, g), r)] += coeffs_[g];
    return out;
  }

 private:
  void check(const GroupRingElement& o) const {
    if (group_ != o.group_) throw DomainError("group ring elements over different groups");
    if (!(field_ == o.field_)) throw DomainError("group ring elements over different fields");
  }

  GroupPtr group_;
  F field_;
  Vector<F> coeffs_;
};

template <ExactField F>
GroupRingElement<F> apply_endo(const Endomorphism& sigma, const GroupRingElement<F>& a) {
  if (sigma.group_ptr() != a.group_ptr()) throw DomainError("endomorphism is on a different group");
  GroupRingElement<F> out(a.group_ptr(), a.field());
  for (Element g = 0; g < a.coeffs().size(); ++g)
    if (!is_zero(a.coeff(g))) out.add_to(sigma(g), a.coeff(g));
  return out;
}

// Matrix (acting on coefficient columns) of alpha -> alpha*beta + sign*beta*alpha.
template <ExactField F>
Matrix<F> commutator_matrix(const GroupRingElement<F>& beta, int sign) {
  const auto& G = beta.group();
  const std::size_t n = G.order();
  Matrix<F> m(beta.field(), n, n);
  const auto s = beta.field().from_int(sign);
  for (Element g = 0; g < n; ++g)
    for (Element h : beta.support()) {
      m(G.mul(g, h), g) += beta.coeff(h);
      m(G.mul(h, g), g) += s * beta.coeff(h);
    }
  return m;
}

template <ExactField F>
std::vector<GroupRingElement<F>> elements_from_vectors(const GroupPtr& g, const F& field,
                                                       const std::vector<Vector<F>>& vs) {
  std::vector<GroupRingElement<F>> out;
  for (const auto& v : vs) out.emplace_back(g, field, v);
  return out;
}

// Basis of {alpha : alpha*beta = beta*alpha}.
template <ExactField F>
std::vector<GroupRingElement<F>> centralizer_basis(const GroupRingElement<F>& beta) {
  return elements_from_vectors(beta.group_ptr(), beta.field(), kernel_basis(commutator_matrix(beta, -1)));
}

// Basis of {alpha : alpha*beta = -beta*alpha}.
template <ExactField F>
std::vector<GroupRingElement<F>> anticentralizer_basis(const GroupRingElement<F>& beta) {
  return elements_from_vectors(beta.group_ptr(), beta.field(), kernel_basis(commutator_matrix(beta, 1)));
}

template <ExactField F>
std::size_t span_rank(const std::vector<GroupRingElement<F>>& xs, const GroupPtr& g, const F& field) {
  RowEchelon<F> e(field, g->order());
  for (const auto& x : xs) e.insert(x.coeffs());
  return e.rank();
}

// Equal spans, tested by rank of the union.
template <ExactField F>
bool same_span(const std::vector<GroupRingElement<F>>& a, const std::vector<GroupRingElement<F>>& b,
               const GroupPtr& g, const F& field) {
  auto u = a;
  u.insert(u.end(), b.begin(), b.end());
  const auto ru = span_rank(u, g, field);
  return span_rank(a, g, field) == ru && span_rank(b, g, field) == ru;
}

// Grammar: terms separated by + or -, each `coef*word`, `word`, or `coef`.
template <ExactField F>
GroupRingElement<F> parse_element(const GroupPtr& g, const F& field, std::string_view text);

template <ExactField F>
std::string format_element(const GroupRingElement<F>& a);

}  // namespace tder
