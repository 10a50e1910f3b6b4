#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qshift/uelement.hpp"

namespace qshift {

/// An N x N matrix with entries in U(g), used for single-slot factors such as
/// F, F^p or a constant matrix mu.
class UMatrix {
 public:
  UMatrix() = default;
  explicit UMatrix(AlgebraPtr alg);
  /// Matrix of generators [F_ij] (E for gl_N).
  static UMatrix generators(AlgebraPtr alg);
  static UMatrix identity(AlgebraPtr alg);
  /// Constant matrix from row-major rationals.
  static UMatrix constant(AlgebraPtr alg, const std::vector<Scalar>& entries);

  const AlgebraPtr& algebra() const { return alg_; }
  int N() const { return N_; }
  const UElement& operator()(int i, int j) const { return entries_[i * N_ + j]; }
  UElement& operator()(int i, int j) { return entries_[i * N_ + j]; }

  UMatrix& operator+=(const UMatrix& other);
  UMatrix& operator-=(const UMatrix& other);
  friend UMatrix operator+(UMatrix a, const UMatrix& b) { return a += b; }
  friend UMatrix operator-(UMatrix a, const UMatrix& b) { return a -= b; }
  friend UMatrix operator*(const Scalar& c, UMatrix a);
  friend UMatrix operator*(const UMatrix& a, const UMatrix& b);
  friend bool operator==(const UMatrix& a, const UMatrix& b) { return a.entries_ == b.entries_; }

  UElement trace() const;
  /// X' with (X')_ij = theta_ij X_{j'i'}; rejected for gl_N.
  UMatrix transpose_prime() const;
  UMatrix power(int p) const;

 private:
  AlgebraPtr alg_;
  int N_ = 0;
  std::vector<UElement> entries_;
};

/// An element of End(C^N)^{(x) m} (x) U(g), stored sparsely by packed
/// (row multi-index, column multi-index). Slots are numbered 0..m-1; within a
/// multi-index slot 0 is the most significant digit (base N).
class Tensor {
 public:
  using Index = std::uint64_t;
  using Key = std::pair<Index, Index>;

  Tensor() = default;
  Tensor(AlgebraPtr alg, int slots);

  static Tensor identity(AlgebraPtr alg, int slots);
  /// A U-element as a tensor with no slots.
  static Tensor from_element(const UElement& x);
  /// Permutation operator P_ab.
  static Tensor P(AlgebraPtr alg, int slots, int a, int b);
  /// Q_ab = sum theta_ij e_ij (x) e_{i'j'}; needs a form.
  static Tensor Q(AlgebraPtr alg, int slots, int a, int b);
  /// Phi_ab = P_ab - Q_ab.
  static Tensor Phi(AlgebraPtr alg, int slots, int a, int b);
  /// A single-slot matrix placed at slot a (identity elsewhere).
  static Tensor embed(const UMatrix& x, int slots, int a);
  /// The generator matrix at slot a (E_a or F_a).
  static Tensor generator_matrix(AlgebraPtr alg, int slots, int a);
  static Tensor constant_matrix(AlgebraPtr alg, int slots, int a, const std::vector<Scalar>& entries);

  const AlgebraPtr& algebra() const { return alg_; }
  int slots() const { return m_; }
  int N() const { return N_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::map<Key, UElement>& entries() const { return entries_; }

  std::vector<int> unpack(Index idx) const;
  Index pack(const std::vector<int>& digits) const;
  UElement entry(const std::vector<int>& row, const std::vector<int>& col) const;
  void add_entry(Index row, Index col, const UElement& value);
  void add_entry(Index row, Index col, const Scalar& value);

  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  Tensor& operator*=(const Scalar& c);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Scalar& c, Tensor a) { return a *= c; }
  friend Tensor operator*(const Tensor& a, const Tensor& b);
  /// Coefficient-wise product with an element of U(g) on either side.
  friend Tensor operator*(const Tensor& a, const UElement& z);
  friend Tensor operator*(const UElement& z, const Tensor& a);
  friend bool operator==(const Tensor& a, const Tensor& b);

  /// Trace over the given slots; the remaining slots keep their order.
  Tensor partial_trace(const std::vector<int>& slots) const;
  /// Trace over all slots.
  UElement full_trace() const;
  /// Slot permutation: result slot s carries the original slot order[s].
  /// Equals conjugation by the corresponding permutation operator.
  Tensor permuted(const std::vector<int>& order) const;
  /// Transposition associated with the form, at one slot.
  Tensor transpose_prime(int slot) const;
  /// The U-coefficient of a single-slot tensor as a matrix.
  UMatrix as_matrix() const;

  /// Applies D at a new slot inserted at position `at` (0 = front): the
  /// (i, j) entry of the new slot is d_ij of each coefficient.
  Tensor apply_D(int at = 0, DerivationKind kind = DerivationKind::standard) const;
  /// Adds an identity slot at position `at`.
  Tensor with_slot(int at) const;

  /// {"m": m, "entries": [{"row": [...], "col": [...], "element": str}]}
  /// with 1-based indices.
  std::string to_json() const;

 private:
  AlgebraPtr alg_;
  int m_ = 0;
  int N_ = 0;
  std::map<Key, UElement> entries_;
};

/// tr_{1..m} T X_1 ... X_m for single-slot factors X_a (slot a of T), the
/// U-coefficients multiplied in slot order after T's own coefficient.
/// Avoids materializing the product tensor.
UElement trace_product(const Tensor& t, const std::vector<UMatrix>& factors);

}  // namespace qshift
