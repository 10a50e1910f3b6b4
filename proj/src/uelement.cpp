#include "qshift/uelement.hpp"

#include <algorithm>

#include "memo.hpp"
#include "qshift/text.hpp"
#include "terms_util.hpp"

namespace qshift {

AlgebraPtr common_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a != b && (a->family() != b->family() || a->N() != b->N()))
    throw Error("operands belong to different algebras: " + a->name() + " vs " + b->name());
  return a;
}

UElement::UElement(AlgebraPtr alg, Terms terms) : alg_(std::move(alg)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return qshift::is_zero(kv.second); });
}

UElement UElement::scalar(AlgebraPtr alg, const Scalar& c) {
  UElement e(std::move(alg));
  e.add_term(Monomial{}, c);
  return e;
}

UElement UElement::generator(AlgebraPtr alg, GenId g) {
  if (!alg || g >= alg->num_generators()) throw Error("generator id out of range");
  UElement e(std::move(alg));
  e.add_term(Monomial::single(g), 1);
  return e;
}

UElement UElement::matrix_entry(AlgebraPtr alg, int i, int j) {
  if (i < 0 || j < 0 || i >= alg->N() || j >= alg->N()) throw Error("matrix index out of range");
  UElement e(alg);
  if (const auto& t = alg->entry(i, j)) e.add_term(Monomial::single(t->gen), t->coeff);
  return e;
}

bool UElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar UElement::constant_term() const { return coefficient(Monomial{}); }

Scalar UElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int UElement::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

UElement UElement::component(int degree) const {
  UElement out(alg_);
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.degree()) == degree) out.terms_.emplace(m, c);
  return out;
}

std::vector<std::pair<Monomial, Scalar>> UElement::sorted_terms() const {
  std::vector<std::pair<Monomial, Scalar>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return graded_less(a.first, b.first); });
  return out;
}

void UElement::add_term(const Monomial& m, const Scalar& c) { detail::add_term(terms_, m, c); }

UElement& UElement::operator+=(const UElement& other) {
  add_scaled(other, 1);
  return *this;
}

UElement& UElement::operator-=(const UElement& other) {
  add_scaled(other, -1);
  return *this;
}

UElement& UElement::operator*=(const Scalar& c) {
  if (qshift::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

void UElement::add_scaled(const UElement& other, const Scalar& c) {
  alg_ = common_algebra(alg_, other.alg_);
  if (&other == this) {
    *this *= Scalar(1 + c);
    return;
  }
  detail::accumulate(terms_, other.terms_, c);
}

bool operator==(const UElement& a, const UElement& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  if (common_algebra(a.alg_, b.alg_) == nullptr) return false;
  return a.terms_ == b.terms_;
}

std::string UElement::to_string() const { return format_element(*this); }

const Terms& LieAlgebra::product_with_generator(const Monomial& m, GenId g) const {
  std::string key = m.word();
  key.push_back(static_cast<char>(g));
  if (const Terms* hit = memo_->find(memo_->products, key)) return *hit;

  Terms result;
  if (m.empty() || m.back() <= g) {
    result.emplace(m.appended(g), 1);
  } else {
    // m' x g = (m' g) x + m' [x, g]
    const GenId x = m.back();
    const Monomial rest = m.head(m.degree() - 1);
    const Terms& left = product_with_generator(rest, g);
    for (const auto& [t, c] : left) detail::accumulate(result, product_with_generator(t, x), c);
    for (const auto& [h, c] : bracket(x, g)) detail::accumulate(result, product_with_generator(rest, h), c);
  }
  return memo_->insert(memo_->products, std::move(key), std::move(result));
}

namespace detail {

Terms monomial_product(const LieAlgebra& alg, const Monomial& a, const Monomial& b) {
  if (b.empty()) return Terms{{a, Scalar(1)}};
  if (a.empty() || a.back() <= b.front()) return Terms{{Monomial(a.word() + b.word()), Scalar(1)}};
  Terms cur{{a, Scalar(1)}};
  for (std::size_t k = 0; k < b.degree(); ++k) {
    Terms next;
    for (const auto& [t, c] : cur) detail::accumulate(next, alg.product_with_generator(t, b[k]), c);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace detail

UElement normal_form(const AlgebraPtr& alg, std::span<const GenId> word) {
  for (GenId g : word)
    if (g >= alg->num_generators()) throw Error("generator id out of range in word");
  Terms cur{{Monomial{}, Scalar(1)}};
  for (GenId g : word) {
    Terms next;
    for (const auto& [t, c] : cur) detail::accumulate(next, alg->product_with_generator(t, g), c);
    cur = std::move(next);
  }
  return UElement(alg, std::move(cur));
}

UElement multiply(const UElement& f, const UElement& g) {
  AlgebraPtr alg = common_algebra(f.algebra(), g.algebra());
  if (f.is_zero() || g.is_zero()) return UElement(alg);
  if (f.degree() + g.degree() > desk_caps().max_degree)
    throw Error("product degree " + std::to_string(f.degree() + g.degree()) + " exceeds the desk cap");
  Terms out;
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) {
      const Scalar k = ca * cb;
      if (a.empty() || b.empty() || a.back() <= b.front()) {
        detail::add_term(out, Monomial(a.word() + b.word()), k);
        continue;
      }
      detail::accumulate(out, detail::monomial_product(*alg, a, b), k);
    }
  return UElement(alg, std::move(out));
}

UElement operator*(const UElement& a, const UElement& b) { return multiply(a, b); }

UElement commutator(const UElement& f, const UElement& g) { return multiply(f, g) - multiply(g, f); }

UElement commutator_generators(const AlgebraPtr& alg, GenId a, GenId b) {
  UElement out(alg);
  for (const auto& [h, c] : alg->bracket(a, b)) out.add_term(Monomial::single(h), c);
  return out;
}

UElement power(const UElement& f, int p) {
  if (p < 0) throw Error("negative power");
  if (!f.algebra()) return p == 0 ? UElement() : f;
  UElement out = UElement::one(f.algebra());
  for (int k = 0; k < p; ++k) out = out * f;
  return out;
}

}  // namespace qshift
