#include "qshift/selement.hpp"

#include <algorithm>

#include "qshift/text.hpp"
#include "qshift/uelement.hpp"
#include "terms_util.hpp"

namespace qshift {

SElement::SElement(AlgebraPtr alg, Terms terms) : alg_(std::move(alg)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return qshift::is_zero(kv.second); });
}

SElement SElement::scalar(AlgebraPtr alg, const Scalar& c) {
  SElement e(std::move(alg));
  e.add_term(Monomial{}, c);
  return e;
}

SElement SElement::generator(AlgebraPtr alg, GenId g) {
  SElement e(std::move(alg));
  e.add_term(Monomial::single(g), 1);
  return e;
}

int SElement::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

SElement SElement::component(int degree) const {
  SElement out(alg_);
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.degree()) == degree) out.terms_.emplace(m, c);
  return out;
}

std::vector<std::pair<Monomial, Scalar>> SElement::sorted_terms() const {
  std::vector<std::pair<Monomial, Scalar>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return graded_less(a.first, b.first); });
  return out;
}

SElement SElement::partial(GenId g) const {
  SElement out(alg_);
  for (const auto& [m, c] : terms_) {
    const auto& w = m.word();
    const auto pos = w.find(static_cast<char>(g));
    if (pos == std::string::npos) continue;
    const auto count = static_cast<long>(std::count(w.begin(), w.end(), static_cast<char>(g)));
    std::string reduced = w;
    reduced.erase(pos, 1);
    out.add_term(Monomial(std::move(reduced)), c * count);
  }
  return out;
}

void SElement::add_term(const Monomial& m, const Scalar& c) { detail::add_term(terms_, m, c); }

SElement& SElement::operator+=(const SElement& other) {
  alg_ = common_algebra(alg_, other.alg_);
  detail::accumulate(terms_, other.terms_, 1);
  return *this;
}

SElement& SElement::operator-=(const SElement& other) {
  alg_ = common_algebra(alg_, other.alg_);
  detail::accumulate(terms_, other.terms_, -1);
  return *this;
}

SElement& SElement::operator*=(const Scalar& c) {
  if (qshift::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

SElement operator*(const SElement& a, const SElement& b) {
  SElement out(common_algebra(a.alg_, b.alg_));
  for (const auto& [m1, c1] : a.terms_)
    for (const auto& [m2, c2] : b.terms_) out.add_term(m1.merged(m2), c1 * c2);
  return out;
}

bool operator==(const SElement& a, const SElement& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  common_algebra(a.alg_, b.alg_);
  return a.terms_ == b.terms_;
}

std::string SElement::to_string() const { return format_element(*this); }

SElement poisson_bracket(const SElement& p, const SElement& q) {
  AlgebraPtr alg = common_algebra(p.algebra(), q.algebra());
  SElement out(alg);
  if (!alg) return out;
  const auto d = static_cast<GenId>(alg->num_generators());
  std::vector<SElement> dq;
  dq.reserve(d);
  for (GenId b = 0; b < d; ++b) dq.push_back(q.partial(b));
  for (GenId a = 0; a < d; ++a) {
    SElement dp = p.partial(a);
    if (dp.is_zero()) continue;
    for (GenId b = 0; b < d; ++b) {
      if (dq[b].is_zero()) continue;
      const auto& br = alg->bracket(a, b);
      if (br.empty()) continue;
      SElement lin(alg);
      for (const auto& t : br) lin.add_term(Monomial::single(t.gen), t.coeff);
      out += dp * dq[b] * lin;
    }
  }
  return out;
}

std::vector<SElement> argument_shift(const SElement& p, const ShiftMatrix& mu) {
  AlgebraPtr alg = common_algebra(p.algebra(), mu.algebra());
  const int d = std::max(p.degree(), 0);
  std::vector<SElement> coeffs(static_cast<std::size_t>(d + 1), SElement(alg));
  for (const auto& [m, c] : p.terms()) {
    // prod_k (Y_k + t mu_k) expanded as a polynomial in t
    std::vector<SElement> poly{SElement::scalar(alg, c)};
    for (std::size_t k = 0; k < m.degree(); ++k) {
      const SElement y = SElement::generator(alg, m[k]);
      const Scalar shift = mu.on_generator(m[k]);
      std::vector<SElement> next(poly.size() + 1, SElement(alg));
      for (std::size_t e = 0; e < poly.size(); ++e) {
        next[e] += poly[e] * y;
        if (!is_zero(shift)) next[e + 1] += shift * poly[e];
      }
      poly = std::move(next);
    }
    for (std::size_t e = 0; e < poly.size(); ++e) coeffs[e] += poly[e];
  }
  return coeffs;
}

SElement to_commutative(const UElement& f) { return SElement(f.algebra(), f.terms()); }

SElement symbol(const UElement& f) { return to_commutative(f.component(f.degree())); }

}  // namespace qshift
