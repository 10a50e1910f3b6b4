#include "qshift/tensor.hpp"

#include <json.hpp>

#include "qshift/quasi_derivation.hpp"

namespace qshift {

// ---------------------------------------------------------------- UMatrix

UMatrix::UMatrix(AlgebraPtr alg) : alg_(std::move(alg)), N_(alg_->N()) {
  entries_.assign(static_cast<std::size_t>(N_ * N_), UElement(alg_));
}

UMatrix UMatrix::generators(AlgebraPtr alg) {
  UMatrix x(alg);
  for (int i = 0; i < x.N_; ++i)
    for (int j = 0; j < x.N_; ++j) x(i, j) = UElement::matrix_entry(alg, i, j);
  return x;
}

UMatrix UMatrix::identity(AlgebraPtr alg) {
  UMatrix x(alg);
  for (int i = 0; i < x.N_; ++i) x(i, i) = UElement::one(alg);
  return x;
}

UMatrix UMatrix::constant(AlgebraPtr alg, const std::vector<Scalar>& entries) {
  UMatrix x(alg);
  if (entries.size() != x.entries_.size()) throw Error("constant matrix has the wrong size");
  for (std::size_t k = 0; k < entries.size(); ++k) x.entries_[k] = UElement::scalar(alg, entries[k]);
  return x;
}

UMatrix& UMatrix::operator+=(const UMatrix& other) {
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

UMatrix& UMatrix::operator-=(const UMatrix& other) {
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

UMatrix operator*(const Scalar& c, UMatrix a) {
  for (auto& e : a.entries_) e *= c;
  return a;
}

UMatrix operator*(const UMatrix& a, const UMatrix& b) {
  UMatrix out(common_algebra(a.alg_, b.alg_));
  const int N = out.N_;
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) {
      const UElement& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < N; ++j)
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
    }
  return out;
}

UElement UMatrix::trace() const {
  UElement t(alg_);
  for (int i = 0; i < N_; ++i) t += (*this)(i, i);
  return t;
}

UMatrix UMatrix::transpose_prime() const {
  if (alg_->form() == Form::none) throw Error("gl_N has no form; the primed transposition is undefined");
  UMatrix out(alg_);
  for (int i = 0; i < N_; ++i)
    for (int j = 0; j < N_; ++j) {
      out(i, j) = (*this)(alg_->prime(j), alg_->prime(i));
      out(i, j) *= Scalar(alg_->theta(i, j));
    }
  return out;
}

UMatrix UMatrix::power(int p) const {
  if (p < 0) throw Error("negative matrix power");
  UMatrix out = identity(alg_);
  for (int k = 0; k < p; ++k) out = out * *this;
  return out;
}

// ----------------------------------------------------------------- Tensor

Tensor::Tensor(AlgebraPtr alg, int slots) : alg_(std::move(alg)), m_(slots) {
  if (!alg_) throw Error("tensor needs an algebra");
  if (slots < 0) throw Error("negative slot count");
  if (slots > desk_caps().max_slots)
    throw Error(std::to_string(slots) + " tensor slots exceed the desk cap " + std::to_string(desk_caps().max_slots));
  N_ = alg_->N();
}

namespace {

void check_slot(int slots, int a) {
  if (a < 0 || a >= slots) throw Error("slot " + std::to_string(a) + " out of range for " + std::to_string(slots) + " slots");
}

void check_pair(int slots, int a, int b) {
  check_slot(slots, a);
  check_slot(slots, b);
  if (a == b) throw Error("operator needs two distinct slots");
}

Tensor::Index ipow(int base, int e) {
  Tensor::Index r = 1;
  for (int k = 0; k < e; ++k) r *= static_cast<Tensor::Index>(base);
  return r;
}

}  // namespace

std::vector<int> Tensor::unpack(Index idx) const {
  std::vector<int> d(static_cast<std::size_t>(m_));
  for (int s = m_ - 1; s >= 0; --s) {
    d[s] = static_cast<int>(idx % N_);
    idx /= N_;
  }
  return d;
}

Tensor::Index Tensor::pack(const std::vector<int>& digits) const {
  Index idx = 0;
  for (int d : digits) idx = idx * N_ + static_cast<Index>(d);
  return idx;
}

UElement Tensor::entry(const std::vector<int>& row, const std::vector<int>& col) const {
  if (row.size() != static_cast<std::size_t>(m_) || col.size() != static_cast<std::size_t>(m_))
    throw Error("multi-index length does not match the slot count");
  auto it = entries_.find({pack(row), pack(col)});
  return it == entries_.end() ? UElement(alg_) : it->second;
}

void Tensor::add_entry(Index row, Index col, const UElement& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({row, col}, value);
  if (inserted) return;
  it->second += value;
  if (it->second.is_zero()) entries_.erase(it);
}

void Tensor::add_entry(Index row, Index col, const Scalar& value) {
  if (qshift::is_zero(value)) return;
  add_entry(row, col, UElement::scalar(alg_, value));
}

Tensor Tensor::identity(AlgebraPtr alg, int slots) {
  Tensor t(alg, slots);
  const Index total = ipow(t.N_, slots);
  for (Index r = 0; r < total; ++r) t.entries_.emplace(Key{r, r}, UElement::one(alg));
  return t;
}

Tensor Tensor::from_element(const UElement& x) {
  if (!x.algebra()) throw Error("cannot place an element without an algebra into a tensor");
  Tensor t(x.algebra(), 0);
  t.add_entry(0, 0, x);
  return t;
}

Tensor Tensor::P(AlgebraPtr alg, int slots, int a, int b) {
  check_pair(slots, a, b);
  Tensor t(alg, slots);
  const Index total = ipow(t.N_, slots);
  for (Index r = 0; r < total; ++r) {
    auto d = t.unpack(r);
    std::swap(d[a], d[b]);
    t.entries_.emplace(Key{r, t.pack(d)}, UElement::one(alg));
  }
  return t;
}

Tensor Tensor::Q(AlgebraPtr alg, int slots, int a, int b) {
  check_pair(slots, a, b);
  if (alg->form() == Form::none) throw Error("Q needs an orthogonal or symplectic form");
  Tensor t(alg, slots);
  const Index total = ipow(t.N_, slots);
  const LieAlgebra& g = *alg;
  // (e_ij)_a (e_{i'j'})_b: row digits (i, i') and column digits (j, j').
  for (Index r = 0; r < total; ++r) {
    auto row = t.unpack(r);
    const int i = row[a];
    if (row[b] != g.prime(i)) continue;
    for (int j = 0; j < t.N_; ++j) {
      auto col = row;
      col[a] = j;
      col[b] = g.prime(j);
      t.add_entry(r, t.pack(col), Scalar(g.theta(i, j)));
    }
  }
  return t;
}

Tensor Tensor::Phi(AlgebraPtr alg, int slots, int a, int b) { return P(alg, slots, a, b) - Q(alg, slots, a, b); }

Tensor Tensor::embed(const UMatrix& x, int slots, int a) {
  check_slot(slots, a);
  Tensor t(x.algebra(), slots);
  const Index total = ipow(t.N_, slots);
  for (Index r = 0; r < total; ++r) {
    auto row = t.unpack(r);
    const int i = row[a];
    for (int j = 0; j < t.N_; ++j) {
      if (x(i, j).is_zero()) continue;
      auto col = row;
      col[a] = j;
      t.entries_.emplace(Key{r, t.pack(col)}, x(i, j));
    }
  }
  return t;
}

Tensor Tensor::generator_matrix(AlgebraPtr alg, int slots, int a) {
  return embed(UMatrix::generators(std::move(alg)), slots, a);
}

Tensor Tensor::constant_matrix(AlgebraPtr alg, int slots, int a, const std::vector<Scalar>& entries) {
  return embed(UMatrix::constant(std::move(alg), entries), slots, a);
}

Tensor& Tensor::operator+=(const Tensor& other) {
  if (other.m_ != m_) throw Error("tensor slot counts differ");
  common_algebra(alg_, other.alg_);
  for (const auto& [k, v] : other.entries_) add_entry(k.first, k.second, v);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  if (other.m_ != m_) throw Error("tensor slot counts differ");
  common_algebra(alg_, other.alg_);
  for (const auto& [k, v] : other.entries_) add_entry(k.first, k.second, -v);
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& c) {
  if (qshift::is_zero(c)) {
    entries_.clear();
    return *this;
  }
  for (auto& [k, v] : entries_) v *= c;
  return *this;
}

Tensor operator*(const Tensor& a, const Tensor& b) {
  if (a.m_ != b.m_) throw Error("tensor slot counts differ");
  Tensor out(common_algebra(a.alg_, b.alg_), a.m_);
  for (const auto& [ka, va] : a.entries_) {
    for (auto it = b.entries_.lower_bound({ka.second, 0}); it != b.entries_.end() && it->first.first == ka.second;
         ++it) {
      const UElement& vb = it->second;
      if (va.is_scalar() && vb.is_scalar())
        out.add_entry(ka.first, it->first.second, va.constant_term() * vb.constant_term());
      else
        out.add_entry(ka.first, it->first.second, va * vb);
    }
  }
  return out;
}

Tensor operator*(const Tensor& a, const UElement& z) {
  Tensor out(common_algebra(a.alg_, z.algebra()), a.m_);
  for (const auto& [k, v] : a.entries_) out.add_entry(k.first, k.second, v * z);
  return out;
}

Tensor operator*(const UElement& z, const Tensor& a) {
  Tensor out(common_algebra(a.alg_, z.algebra()), a.m_);
  for (const auto& [k, v] : a.entries_) out.add_entry(k.first, k.second, z * v);
  return out;
}

bool operator==(const Tensor& a, const Tensor& b) {
  if (a.m_ != b.m_) return false;
  if (a.entries_.empty() && b.entries_.empty()) return true;
  common_algebra(a.alg_, b.alg_);
  return a.entries_ == b.entries_;
}

Tensor Tensor::partial_trace(const std::vector<int>& slots) const {
  std::vector<bool> traced(static_cast<std::size_t>(m_), false);
  for (int s : slots) {
    check_slot(m_, s);
    if (traced[s]) throw Error("slot traced twice");
    traced[s] = true;
  }
  Tensor out(alg_, m_ - static_cast<int>(slots.size()));
  for (const auto& [k, v] : entries_) {
    const auto row = unpack(k.first), col = unpack(k.second);
    bool diagonal = true;
    std::vector<int> r, c;
    for (int s = 0; s < m_; ++s) {
      if (traced[s]) {
        if (row[s] != col[s]) {
          diagonal = false;
          break;
        }
        continue;
      }
      r.push_back(row[s]);
      c.push_back(col[s]);
    }
    if (diagonal) out.add_entry(out.pack(r), out.pack(c), v);
  }
  return out;
}

UElement Tensor::full_trace() const {
  UElement t(alg_);
  for (const auto& [k, v] : entries_)
    if (k.first == k.second) t += v;
  return t;
}

Tensor Tensor::permuted(const std::vector<int>& order) const {
  if (order.size() != static_cast<std::size_t>(m_)) throw Error("permutation length does not match the slot count");
  std::vector<bool> seen(static_cast<std::size_t>(m_), false);
  for (int s : order) {
    check_slot(m_, s);
    if (seen[s]) throw Error("not a permutation");
    seen[s] = true;
  }
  Tensor out(alg_, m_);
  for (const auto& [k, v] : entries_) {
    const auto row = unpack(k.first), col = unpack(k.second);
    std::vector<int> r(row.size()), c(col.size());
    for (int s = 0; s < m_; ++s) {
      r[s] = row[order[s]];
      c[s] = col[order[s]];
    }
    out.entries_.emplace(Key{out.pack(r), out.pack(c)}, v);
  }
  return out;
}

Tensor Tensor::transpose_prime(int slot) const {
  check_slot(m_, slot);
  if (alg_->form() == Form::none) throw Error("gl_N has no form; the primed transposition is undefined");
  Tensor out(alg_, m_);
  for (const auto& [k, v] : entries_) {
    auto row = unpack(k.first), col = unpack(k.second);
    // entry (j', i') of X lands at (i, j) of X'
    const int i = alg_->prime(col[slot]), j = alg_->prime(row[slot]);
    row[slot] = i;
    col[slot] = j;
    UElement w = v;
    w *= Scalar(alg_->theta(i, j));
    out.entries_.emplace(Key{out.pack(row), out.pack(col)}, std::move(w));
  }
  return out;
}

UMatrix Tensor::as_matrix() const {
  if (m_ != 1) throw Error("as_matrix needs a single-slot tensor");
  UMatrix x(alg_);
  for (const auto& [k, v] : entries_) x(static_cast<int>(k.first), static_cast<int>(k.second)) = v;
  return x;
}

Tensor Tensor::apply_D(int at, DerivationKind kind) const {
  if (at < 0 || at > m_) throw Error("slot position out of range for D");
  Tensor out(alg_, m_ + 1);
  for (const auto& [k, v] : entries_) {
    auto row = unpack(k.first), col = unpack(k.second);
    row.insert(row.begin() + at, 0);
    col.insert(col.begin() + at, 0);
    for (int i = 0; i < N_; ++i)
      for (int j = 0; j < N_; ++j) {
        UElement d = quasi_derive(v, i, j, kind);
        if (d.is_zero()) continue;
        row[at] = i;
        col[at] = j;
        out.add_entry(out.pack(row), out.pack(col), d);
      }
  }
  return out;
}

Tensor Tensor::with_slot(int at) const {
  if (at < 0 || at > m_) throw Error("slot position out of range");
  Tensor out(alg_, m_ + 1);
  for (const auto& [k, v] : entries_) {
    auto row = unpack(k.first), col = unpack(k.second);
    row.insert(row.begin() + at, 0);
    col.insert(col.begin() + at, 0);
    for (int i = 0; i < N_; ++i) {
      row[at] = col[at] = i;
      out.entries_.emplace(Key{out.pack(row), out.pack(col)}, v);
    }
  }
  return out;
}

std::string Tensor::to_json() const {
  nlohmann::json doc;
  doc["m"] = m_;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& [k, v] : entries_) {
    auto row = unpack(k.first), col = unpack(k.second);
    for (auto& x : row) ++x;
    for (auto& x : col) ++x;
    list.push_back({{"row", row}, {"col", col}, {"element", v.to_string()}});
  }
  doc["entries"] = list;
  return doc.dump();
}

UElement trace_product(const Tensor& t, const std::vector<UMatrix>& factors) {
  if (factors.size() != static_cast<std::size_t>(t.slots())) throw Error("one factor per slot required");
  const AlgebraPtr& alg = t.algebra();
  UElement out(alg);
  for (const auto& [k, v] : t.entries()) {
    const auto row = t.unpack(k.first), col = t.unpack(k.second);
    // T_rc X_{c r}
    UElement prod = v;
    for (std::size_t a = 0; a < factors.size() && !prod.is_zero(); ++a) {
      const UElement& x = factors[a](col[a], row[a]);
      if (x.is_zero()) {
        prod = UElement(alg);
        break;
      }
      if (x.is_scalar())
        prod *= x.constant_term();
      else
        prod = prod * x;
    }
    out += prod;
  }
  return out;
}

}  // namespace qshift
