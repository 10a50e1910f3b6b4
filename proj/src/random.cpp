#include "qshift/random.hpp"

namespace qshift {

UElement random_element(const AlgebraPtr& alg, Rng& rng, int max_terms, int max_degree) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::uniform_int_distribution<int> gen(0, static_cast<int>(alg->num_generators()) - 1);
  std::uniform_int_distribution<int> coeff(1, 6);
  UElement out(alg);
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    std::vector<GenId> word(static_cast<std::size_t>(degree(rng)));
    for (auto& g : word) g = static_cast<GenId>(gen(rng));
    const int c = coeff(rng);
    out.add_scaled(normal_form(alg, word), c <= 3 ? c : 3 - c);
  }
  return out;
}

ShiftMatrix random_shift_matrix(const AlgebraPtr& alg, Rng& rng) {
  std::uniform_int_distribution<int> value(-5, 5);
  const int N = alg->N();
  std::vector<Scalar> m(static_cast<std::size_t>(N * N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (alg->form() == Form::none) {
        m[i * N + j] = value(rng);
        continue;
      }
      // mu_ij = -theta_ij mu_{j'i'}
      const int pi = alg->prime(j), pj = alg->prime(i);
      if (std::make_pair(i, j) > std::make_pair(pi, pj)) continue;
      const int r = value(rng);
      if (std::make_pair(i, j) == std::make_pair(pi, pj)) {
        if (alg->theta(i, j) == -1) m[i * N + j] = r;
        continue;
      }
      m[i * N + j] = r;
      m[pi * N + pj] = -alg->theta(i, j) * r;
    }
  return ShiftMatrix(alg, std::move(m));
}

}  // namespace qshift
