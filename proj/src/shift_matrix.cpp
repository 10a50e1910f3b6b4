#include "qshift/shift_matrix.hpp"

#include <json.hpp>

namespace qshift {

ShiftMatrix::ShiftMatrix(AlgebraPtr alg, std::vector<Scalar> entries)
    : alg_(std::move(alg)), entries_(std::move(entries)) {
  if (!alg_) throw Error("shift matrix needs an algebra");
  const int N = alg_->N();
  if (entries_.size() != static_cast<std::size_t>(N * N))
    throw Error("shift matrix must be " + std::to_string(N) + "x" + std::to_string(N));
  if (alg_->form() == Form::none) return;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const Scalar& a = entries_[i * N + j];
      const Scalar& b = entries_[alg_->prime(j) * N + alg_->prime(i)];
      if (!is_zero(a + alg_->theta(i, j) * b))
        throw Error("shift matrix violates the skew-symmetry of " + alg_->name() + " at (" +
                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
}

ShiftMatrix ShiftMatrix::zero(AlgebraPtr alg) {
  const int N = alg->N();
  return ShiftMatrix(std::move(alg), std::vector<Scalar>(static_cast<std::size_t>(N * N)));
}

ShiftMatrix ShiftMatrix::diagonal(AlgebraPtr alg, const std::vector<Scalar>& diag) {
  const int N = alg->N();
  if (diag.size() != static_cast<std::size_t>(N)) throw Error("diagonal length must equal N");
  std::vector<Scalar> e(static_cast<std::size_t>(N * N));
  for (int i = 0; i < N; ++i) e[i * N + i] = diag[i];
  return ShiftMatrix(std::move(alg), std::move(e));
}

ShiftMatrix ShiftMatrix::generic(AlgebraPtr alg) {
  const int N = alg->N();
  switch (alg->family()) {
    case Family::gl: {
      std::vector<Scalar> d;
      for (int i = 0; i < N; ++i) d.emplace_back(i + 1);
      return diagonal(std::move(alg), d);
    }
    case Family::orthogonal_split:
    case Family::symplectic_split: {
      std::vector<Scalar> d(static_cast<std::size_t>(N));
      for (int i = 0; i < N / 2; ++i) {
        d[i] = i + 1;
        d[N - 1 - i] = -(i + 1);
      }
      return diagonal(std::move(alg), d);
    }
    case Family::orthogonal_canonical: {
      std::vector<Scalar> e(static_cast<std::size_t>(N * N));
      for (int k = 0; k < N / 2; ++k) {
        e[(2 * k) * N + 2 * k + 1] = k + 1;
        e[(2 * k + 1) * N + 2 * k] = -(k + 1);
      }
      return ShiftMatrix(std::move(alg), std::move(e));
    }
  }
  throw Error("unreachable");
}

bool ShiftMatrix::is_diagonal() const {
  const int N = this->N();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (i != j && !is_zero(entries_[i * N + j])) return false;
  return true;
}

Scalar ShiftMatrix::on_generator(GenId g) const {
  auto [i, j] = alg_->generator_index(g);
  return (*this)(i, j);
}

Scalar ShiftMatrix::pair_with(GenId g) const {
  Scalar s = 0;
  for (const auto& e : alg_->ambient(g)) s += e.coeff * (*this)(e.row, e.col);
  return s;
}

void ShiftMatrix::require_generic_diagonal() const {
  if (alg_->family() == Family::orthogonal_canonical)
    throw Error("the commutant criterion needs a diagonal shift; use the split presentation of o_2n");
  if (!is_diagonal()) throw Error("shift matrix is not diagonal");
  const int N = this->N();
  const int range = alg_->form() == Form::none ? N : N / 2;
  for (int i = 0; i < range; ++i) {
    if (alg_->form() != Form::none && is_zero((*this)(i, i)))
      throw Error("shift matrix is not generic: mu_" + std::to_string(i + 1) + " = 0");
    for (int k = 0; k < N; ++k)
      if (k != i && (*this)(i, i) == (*this)(k, k))
        throw Error("shift matrix is not generic: repeated diagonal entry " + format_scalar((*this)(i, i)));
  }
}

ShiftMatrix parse_shift_matrix_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed mu file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("family") || !doc.contains("N") || !doc.contains("entries"))
    throw Error("mu file needs keys \"family\", \"N\" and \"entries\"");
  if (!doc["family"].is_string() || !doc["N"].is_number_integer() || !doc["entries"].is_array())
    throw Error("mu file has fields of the wrong type");
  const std::string family_text = doc["family"].get<std::string>();
  const Family family = parse_family(family_text);
  const int N = doc["N"].get<int>();
  if (const int named = family_size(family_text); named != 0 && named != N)
    throw Error("mu file: family '" + family_text + "' does not match N = " + std::to_string(N));
  AlgebraPtr alg = LieAlgebra::build(family, N);
  const auto& rows = doc["entries"];
  if (rows.size() != static_cast<std::size_t>(N)) throw Error("mu file: expected " + std::to_string(N) + " rows");
  std::vector<Scalar> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(N))
      throw Error("mu file: every row needs " + std::to_string(N) + " entries");
    for (const auto& x : row) {
      if (x.is_string())
        entries.push_back(parse_scalar(x.get<std::string>()));
      else if (x.is_number_integer())
        entries.emplace_back(x.get<long>());
      else
        throw Error("mu file: entries must be strings \"p/q\" or integers");
    }
  }
  return ShiftMatrix(std::move(alg), std::move(entries));
}

std::string shift_matrix_to_json(const ShiftMatrix& mu) {
  nlohmann::json doc;
  doc["family"] = std::string(family_name(mu.algebra()->family()));
  doc["N"] = mu.N();
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < mu.N(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < mu.N(); ++j) row.push_back(format_scalar(mu(i, j)));
    rows.push_back(row);
  }
  doc["entries"] = rows;
  return doc.dump();
}

}  // namespace qshift
