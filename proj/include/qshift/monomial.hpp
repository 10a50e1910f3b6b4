#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qshift {

/// Index of a canonical generator of a Lie algebra.
using GenId = std::uint8_t;

/// An ordered word in canonical generators. For PBW monomials the word is
/// non-decreasing; a generator repeated k times encodes exponent k. Stored in
/// a std::string so that short monomials never touch the heap.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::string word) : word_(std::move(word)) {}
  static Monomial single(GenId g) { return Monomial(std::string(1, static_cast<char>(g))); }

  std::size_t degree() const { return word_.size(); }
  bool empty() const { return word_.empty(); }
  GenId operator[](std::size_t k) const { return static_cast<GenId>(word_[k]); }
  GenId front() const { return static_cast<GenId>(word_.front()); }
  GenId back() const { return static_cast<GenId>(word_.back()); }

  Monomial head(std::size_t len) const { return Monomial(word_.substr(0, len)); }
  Monomial tail(std::size_t from) const { return Monomial(word_.substr(from)); }
  Monomial appended(GenId g) const { return Monomial(word_ + static_cast<char>(g)); }

  bool is_sorted() const;
  /// Commutative product: merge of two sorted words.
  Monomial merged(const Monomial& other) const;
  /// (generator, exponent) runs.
  std::vector<std::pair<GenId, int>> runs() const;

  const std::string& word() const { return word_; }

  bool operator==(const Monomial&) const = default;
  /// Graded order: higher degree first, then lexicographic on generator ids.
  friend bool graded_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return std::lexicographical_compare(a.word_.begin(), a.word_.end(), b.word_.begin(), b.word_.end(),
                                        [](char x, char y) { return static_cast<GenId>(x) < static_cast<GenId>(y); });
  }

 private:
  std::string word_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return std::hash<std::string>{}(m.word()); }
};

inline bool Monomial::is_sorted() const {
  for (std::size_t k = 1; k < word_.size(); ++k)
    if ((*this)[k - 1] > (*this)[k]) return false;
  return true;
}

inline Monomial Monomial::merged(const Monomial& other) const {
  std::string out;
  out.reserve(word_.size() + other.word_.size());
  std::size_t i = 0, j = 0;
  while (i < word_.size() && j < other.word_.size()) {
    if (static_cast<GenId>(word_[i]) <= static_cast<GenId>(other.word_[j]))
      out.push_back(word_[i++]);
    else
      out.push_back(other.word_[j++]);
  }
  out.append(word_, i, std::string::npos);
  out.append(other.word_, j, std::string::npos);
  return Monomial(std::move(out));
}

inline std::vector<std::pair<GenId, int>> Monomial::runs() const {
  std::vector<std::pair<GenId, int>> out;
  for (std::size_t k = 0; k < word_.size(); ++k) {
    GenId g = (*this)[k];
    if (!out.empty() && out.back().first == g)
      ++out.back().second;
    else
      out.emplace_back(g, 1);
  }
  return out;
}

}  // namespace qshift
