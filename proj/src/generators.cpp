#include "qshift/generators.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include <json.hpp>

#include "qshift/operators.hpp"
#include "qshift/quasi_derivation.hpp"

namespace qshift {

UElement trace_power(const AlgebraPtr& alg, int p) {
  if (p < 0) throw Error("negative power");
  return UMatrix::generators(alg).power(p).trace();
}

UElement trace_matrix_power(const AlgebraPtr& alg, const std::vector<Scalar>& m, int p) {
  return (UMatrix::constant(alg, m) * UMatrix::generators(alg).power(p)).trace();
}

UElement gelfand_generator(const AlgebraPtr& alg, const std::vector<int>& powers) {
  if (static_cast<int>(powers.size()) > desk_caps().max_slots)
    throw Error("too many trace factors for the desk cap");
  UElement out = UElement::one(alg);
  for (int p : powers) {
    if (p < 1) throw Error("powers must be natural numbers");
    out = out * trace_power(alg, p);
  }
  return out;
}

namespace {

enum class Projector { antisym, sym, brauer };

// Projectors are pure functions of (family, N, m); cache them.
const Tensor& cached_projector(const AlgebraPtr& alg, int m, Projector kind) {
  static std::mutex mutex;
  static std::map<std::tuple<Family, int, int, Projector>, Tensor> cache;
  const auto key = std::make_tuple(alg->family(), alg->N(), m, kind);
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Tensor t;
  switch (kind) {
    case Projector::antisym: t = antisymmetrizer(alg, m); break;
    case Projector::sym: t = symmetrizer(alg, m); break;
    case Projector::brauer: t = brauer_gamma(*alg, m) * brauer_symmetrizer(alg, m); break;
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(t)).first->second;
}

UElement projected_trace(const ShiftMatrix& mu, int m, int k, Projector kind) {
  const AlgebraPtr& alg = mu.algebra();
  if (m < 1 || m > alg->N()) throw Error("m = " + std::to_string(m) + " out of range 1.." + std::to_string(alg->N()));
  if (k < 0 || k > m) throw Error("k = " + std::to_string(k) + " out of range 0.." + std::to_string(m));
  const UMatrix muM = UMatrix::constant(alg, mu.entries());
  const UMatrix F = UMatrix::generators(alg);
  std::vector<UMatrix> factors;
  for (int a = 0; a < m; ++a) factors.push_back(a < k ? muM : F);
  return trace_product(cached_projector(alg, m, kind), factors);
}

}  // namespace

UElement phi(const ShiftMatrix& mu, int m, int k) {
  switch (mu.algebra()->form()) {
    case Form::none:
    case Form::symplectic: return projected_trace(mu, m, k, Projector::antisym);
    case Form::orthogonal: return projected_trace(mu, m, k, Projector::brauer);
  }
  throw Error("unreachable");
}

UElement phi_brauer(const ShiftMatrix& mu, int m, int k) {
  if (mu.algebra()->form() == Form::none) throw Error("the Brauer form of phi needs an orthogonal or symplectic algebra");
  return projected_trace(mu, m, k, Projector::brauer);
}

UElement psi(const ShiftMatrix& mu, int m, int k) {
  if (mu.algebra()->family() != Family::gl) throw Error("psi is defined for gl_N only");
  return projected_trace(mu, m, k, Projector::sym);
}

namespace {

int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++inv;
  return inv % 2 ? -1 : 1;
}

// Perfect matchings of {0..2n-1} as sequences (i1 j1 i2 j2 ...) with
// i_k < j_k and i1 < i2 < ...
void matchings(std::vector<int>& cur, std::vector<bool>& used, int N, std::vector<std::vector<int>>& out) {
  int first = -1;
  for (int i = 0; i < N; ++i)
    if (!used[i]) {
      first = i;
      break;
    }
  if (first < 0) {
    out.push_back(cur);
    return;
  }
  used[first] = true;
  for (int j = first + 1; j < N; ++j) {
    if (used[j]) continue;
    used[j] = true;
    cur.push_back(first);
    cur.push_back(j);
    matchings(cur, used, N, out);
    cur.pop_back();
    cur.pop_back();
    used[j] = false;
  }
  used[first] = false;
}

std::vector<std::vector<int>> all_matchings(int N) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<std::size_t>(N), false);
  matchings(cur, used, N, out);
  return out;
}

void require_even_orthogonal(const LieAlgebra& alg) {
  if (alg.form() != Form::orthogonal || alg.N() % 2 != 0)
    throw Error("the Pfaffian is defined for o_2n only, not " + alg.name());
}

}  // namespace

UElement pfaffian(const AlgebraPtr& alg) {
  require_even_orthogonal(*alg);
  const int N = alg->N();
  UElement out(alg);
  if (alg->family() == Family::orthogonal_canonical) {
    for (const auto& s : all_matchings(N)) {
      UElement term = UElement::scalar(alg, permutation_sign(s));
      for (int k = 0; k < N; k += 2) term = term * UElement::matrix_entry(alg, s[k], s[k + 1]);
      out += term;
    }
    return out;
  }
  std::vector<int> s(static_cast<std::size_t>(N));
  std::iota(s.begin(), s.end(), 0);
  do {
    UElement term = UElement::scalar(alg, permutation_sign(s));
    for (int k = 0; k < N && !term.is_zero(); k += 2)
      term = term * UElement::matrix_entry(alg, s[k], alg->prime(s[k + 1]));
    out += term;
  } while (std::next_permutation(s.begin(), s.end()));
  out *= 1 / (Scalar(factorial(N / 2)) * Scalar(1 << (N / 2)));
  return out;
}

std::vector<UElement> pf_shift_coeffs(const ShiftMatrix& mu) {
  const AlgebraPtr& alg = mu.algebra();
  if (alg->family() != Family::orthogonal_canonical)
    throw Error("the Pfaffian shift coefficients use the canonical presentation of o_2n");
  const int N = alg->N(), n = N / 2;
  std::vector<UElement> pi(static_cast<std::size_t>(n + 1), UElement(alg));
  for (const auto& s : all_matchings(N)) {
    const int sign = permutation_sign(s);
    // choose which factors contribute mu (bit set) and which contribute F
    for (int mask = 0; mask < (1 << n); ++mask) {
      UElement term = UElement::scalar(alg, sign);
      for (int k = 0; k < n && !term.is_zero(); ++k) {
        const int a = s[2 * k], b = s[2 * k + 1];
        if (mask & (1 << k))
          term *= mu(a, b);
        else
          term = term * UElement::matrix_entry(alg, a, b);
      }
      pi[static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)))] += term;
    }
  }
  return pi;
}

UMatrix pfaffian_derivative_matrix(const AlgebraPtr& alg) {
  const UElement pf = pfaffian(alg);
  UMatrix out(alg);
  for (int i = 0; i < alg->N(); ++i)
    for (int j = 0; j < alg->N(); ++j) out(i, j) = quasi_derive(pf, i, j);
  return out;
}

int t_element_count(const LieAlgebra& alg) { return alg.form() == Form::none ? alg.N() : alg.n(); }

UElement t_element(const ShiftMatrix& mu, int i) {
  mu.require_generic_diagonal();
  const AlgebraPtr& alg = mu.algebra();
  if (i < 0 || i >= t_element_count(*alg))
    throw Error("T_" + std::to_string(i + 1) + " is out of range for " + alg->name());
  UElement out(alg);
  for (int k = 0; k < alg->N(); ++k) {
    if (k == i) continue;
    const UElement a = UElement::matrix_entry(alg, i, k);
    if (a.is_zero()) continue;
    const Scalar den = mu(i, i) - mu(k, k);
    out.add_scaled(a * UElement::matrix_entry(alg, k, i), 1 / den);
  }
  return out;
}

std::string FamilyLabel::to_string() const {
  return kind + "(m=" + std::to_string(m) + "," + (kind == "phi" || kind == "psi" ? "k=" : "p=") +
         std::to_string(k_or_p) + ")";
}

GeneratorFamily amu_generating_family(const ShiftMatrix& mu) {
  const AlgebraPtr& alg = mu.algebra();
  GeneratorFamily fam{alg, {}};
  std::vector<int> ms;
  bool with_pfaffian = false;
  if (alg->form() == Form::none) {
    for (int m = 1; m <= alg->N(); ++m) ms.push_back(m);
  } else {
    const int n = alg->n();
    with_pfaffian = alg->form() == Form::orthogonal && alg->N() % 2 == 0;
    const int top = with_pfaffian ? 2 * n - 2 : 2 * n;
    for (int m = 2; m <= top; m += 2) ms.push_back(m);
  }
  for (int m : ms) {
    UElement x = phi(mu, m, 0);
    for (int p = 0; p < m; ++p) {
      if (p > 0) x = d_mu(mu, x);
      fam.members.push_back({{"dmu-iterate", m, p}, x});
    }
  }
  if (with_pfaffian) {
    UElement x = pfaffian(alg);
    for (int p = 0; p < alg->n(); ++p) {
      if (p > 0) x = d_mu(mu, x);
      fam.members.push_back({{"pi", alg->n(), p}, x});
    }
  }
  return fam;
}

GeneratorFamily phi_family(const ShiftMatrix& mu, int max_m, bool use_psi) {
  GeneratorFamily fam{mu.algebra(), {}};
  for (int m = 1; m <= max_m; ++m)
    for (int k = 0; k <= m; ++k)
      fam.members.push_back({{use_psi ? "psi" : "phi", m, k}, use_psi ? psi(mu, m, k) : phi(mu, m, k)});
  return fam;
}

std::string family_to_json(const GeneratorFamily& family) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& mem : family.members)
    arr.push_back({{"label", {{"kind", mem.label.kind}, {"m", mem.label.m}, {"k_or_p", mem.label.k_or_p}}},
                   {"element", mem.element.to_string()}});
  return arr.dump(2);
}

}  // namespace qshift
