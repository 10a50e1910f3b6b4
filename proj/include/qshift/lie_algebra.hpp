#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qshift/monomial.hpp"
#include "qshift/rational.hpp"

namespace qshift {

/// Sparse coefficient map over PBW (or commutative) monomials.
using Terms = std::unordered_map<Monomial, Scalar, MonomialHash>;

enum class Family {
  gl,                    ///< gl_N with generators E_ij
  orthogonal_split,      ///< o_N inside gl_N, F_ij = E_ij - E_{j'i'}
  symplectic_split,      ///< sp_N inside gl_N, F_ij = E_ij - e_i e_j E_{j'i'}
  orthogonal_canonical,  ///< o_2n as skew-symmetric matrices, F_ij = E_ij - E_ji
};

/// Bilinear form type preserved by the algebra (none for gl_N).
enum class Form { none, orthogonal, symplectic };

std::string_view family_name(Family f);
/// Accepts "glN", "oN", "oN-split", "spN", "spN-split", "o2n-canonical" and
/// the same with a concrete size ("gl3", "o5", "sp4-split", "o4-canonical").
Family parse_family(std::string_view name);
/// The concrete size in a family name, 0 when absent.
int family_size(std::string_view name);

/// A single entry (row, col, coefficient) of an N x N matrix; indices 0-based.
struct MatrixEntry {
  int row;
  int col;
  Scalar coeff;
};

struct GenTerm {
  GenId gen;
  Scalar coeff;
};
using LinearCombo = std::vector<GenTerm>;

enum class DerivationKind { standard, hat };

/// Structure data of one of the classical Lie algebras, realized inside gl_N.
///
/// Canonical generators are the matrices F_ij (E_ij for gl_N) with (i,j)
/// minimal in its symmetry class {(i,j), (j',i')}; identically zero matrices
/// are dropped. The generator order (and hence the PBW order) is
/// lexicographic in (i,j). The bracket table is computed once by expanding
/// generators in gl_N and re-expressing the commutators, which doubles as a
/// closure check.
///
/// Instances are immutable apart from memo caches used by the PBW product and
/// the quasi-derivations; those caches are mutex-guarded.
class LieAlgebra {
 public:
  static std::shared_ptr<const LieAlgebra> build(Family family, int N);

  LieAlgebra(const LieAlgebra&) = delete;
  LieAlgebra& operator=(const LieAlgebra&) = delete;
  ~LieAlgebra();

  Family family() const { return family_; }
  Form form() const { return form_; }
  int N() const { return N_; }
  int n() const { return N_ / 2; }
  std::string name() const;
  char letter() const { return family_ == Family::gl ? 'E' : 'F'; }

  /// i -> i' (0-based). Identity for gl_N and the canonical presentation.
  int prime(int i) const;
  /// e_i; +1 except for the second half of the symplectic index range.
  int eps(int i) const;
  /// Sign in F_ij = E_ij - theta_ij E_{j'i'}; 1 (orthogonal) or e_i e_j.
  int theta(int i, int j) const;

  std::size_t num_generators() const { return index_.size(); }
  std::pair<int, int> generator_index(GenId g) const { return index_[g]; }
  /// Matrix entry F_ij (E_ij) as coefficient times canonical generator;
  /// nullopt when the entry vanishes identically.
  const std::optional<GenTerm>& entry(int i, int j) const { return entries_[i * N_ + j]; }
  /// The generator as a matrix in gl_N.
  const std::vector<MatrixEntry>& ambient(GenId g) const { return ambient_[g]; }
  /// The scalar matrix [d_ij g], i.e. the transpose of ambient(g).
  const std::vector<MatrixEntry>& derivative(GenId g) const { return derivative_[g]; }
  const LinearCombo& bracket(GenId a, GenId b) const { return brackets_[a * index_.size() + b]; }

  // Memoized kernels. The returned references stay valid for the lifetime of
  // the algebra.

  /// PBW normal form of m * g for a PBW monomial m.
  const Terms& product_with_generator(const Monomial& m, GenId g) const;
  /// d_ij applied to a PBW monomial (indices 0-based).
  const Terms& quasi_derivative(const Monomial& m, int i, int j, DerivationKind kind) const;

  std::size_t cache_size() const;

 private:
  LieAlgebra(Family family, int N);
  void init_generators();
  void init_brackets();

  Family family_;
  Form form_;
  int N_;
  std::vector<std::pair<int, int>> index_;
  std::vector<std::optional<GenTerm>> entries_;
  std::vector<std::vector<MatrixEntry>> ambient_;
  std::vector<std::vector<MatrixEntry>> derivative_;
  std::vector<LinearCombo> brackets_;

  struct Memo;
  std::unique_ptr<Memo> memo_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Desk-scale resource caps, enforced when building algebras and tensors.
struct DeskCaps {
  int max_n = 6;
  int max_slots = 6;
  int max_degree = 8;
};
DeskCaps desk_caps();
void set_desk_caps(const DeskCaps& caps);

}  // namespace qshift
