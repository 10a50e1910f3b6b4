#include "qshift/lie_algebra.hpp"

#include <map>
#include <regex>

#include "memo.hpp"

namespace qshift {

namespace {

std::mutex caps_mutex;
DeskCaps current_caps;

}  // namespace

DeskCaps desk_caps() {
  std::lock_guard lock(caps_mutex);
  return current_caps;
}

void set_desk_caps(const DeskCaps& caps) {
  std::lock_guard lock(caps_mutex);
  current_caps = caps;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::gl: return "glN";
    case Family::orthogonal_split: return "oN-split";
    case Family::symplectic_split: return "spN-split";
    case Family::orthogonal_canonical: return "o2n-canonical";
  }
  return "?";
}

namespace {

// letters, size ("N", "2n" or digits) and presentation suffix
const std::regex kFamilyPattern(R"(^(gl|o|sp)(N|2n|[0-9]+)?(-split|-canonical)?$)");

std::smatch match_family(const std::string& name) {
  std::smatch m;
  if (!std::regex_match(name, m, kFamilyPattern)) throw Error("unknown algebra family '" + name + "'");
  return m;
}

}  // namespace

Family parse_family(std::string_view name) {
  const std::string s(name);
  const std::smatch m = match_family(s);
  const std::string letters = m[1], size = m[2], suffix = m[3];
  if (letters == "gl" && suffix.empty() && size != "2n") return Family::gl;
  if (letters == "o" && suffix == "-canonical") return Family::orthogonal_canonical;
  if (letters == "o" && size == "2n" && suffix.empty()) return Family::orthogonal_canonical;
  if (size != "2n" && suffix != "-canonical") {
    if (letters == "o") return Family::orthogonal_split;
    if (letters == "sp") return Family::symplectic_split;
  }
  throw Error("unknown algebra family '" + s + "'");
}

int family_size(std::string_view name) {
  const std::string s(name);
  const std::string size = match_family(s)[2];
  if (size.empty() || size == "N" || size == "2n") return 0;
  return std::stoi(size);
}

LieAlgebra::LieAlgebra(Family family, int N)
    : family_(family), N_(N), memo_(std::make_unique<Memo>()) {
  switch (family) {
    case Family::gl: form_ = Form::none; break;
    case Family::orthogonal_split:
    case Family::orthogonal_canonical: form_ = Form::orthogonal; break;
    case Family::symplectic_split: form_ = Form::symplectic; break;
  }
}

LieAlgebra::~LieAlgebra() = default;

std::shared_ptr<const LieAlgebra> LieAlgebra::build(Family family, int N) {
  const DeskCaps caps = desk_caps();
  if (N < 1) throw Error("N must be positive");
  if (N > caps.max_n)
    throw Error("N = " + std::to_string(N) + " exceeds the desk cap " + std::to_string(caps.max_n));
  switch (family) {
    case Family::gl: break;
    case Family::orthogonal_split:
      if (N < 2) throw Error("o_N needs N >= 2");
      break;
    case Family::symplectic_split:
      if (N % 2 != 0) throw Error("sp_N needs even N, got " + std::to_string(N));
      break;
    case Family::orthogonal_canonical:
      if (N % 2 != 0 || N < 2) throw Error("canonical o_2n needs even N >= 2, got " + std::to_string(N));
      break;
  }
  // One shared instance per (family, N) so that memo caches are reused.
  static std::mutex registry_mutex;
  static std::map<std::pair<Family, int>, std::shared_ptr<const LieAlgebra>> registry;
  std::lock_guard lock(registry_mutex);
  auto& slot = registry[{family, N}];
  if (!slot) {
    std::shared_ptr<LieAlgebra> alg(new LieAlgebra(family, N));
    alg->init_generators();
    alg->init_brackets();
    slot = std::move(alg);
  }
  return slot;
}

std::string LieAlgebra::name() const {
  switch (family_) {
    case Family::gl: return "gl_" + std::to_string(N_);
    case Family::orthogonal_split: return "o_" + std::to_string(N_);
    case Family::symplectic_split: return "sp_" + std::to_string(N_);
    case Family::orthogonal_canonical: return "o_" + std::to_string(N_) + "(canonical)";
  }
  return "?";
}

int LieAlgebra::prime(int i) const {
  if (family_ == Family::orthogonal_split || family_ == Family::symplectic_split) return N_ - 1 - i;
  return i;
}

int LieAlgebra::eps(int i) const {
  if (family_ == Family::symplectic_split && i >= N_ / 2) return -1;
  return 1;
}

int LieAlgebra::theta(int i, int j) const {
  return form_ == Form::symplectic ? eps(i) * eps(j) : 1;
}

void LieAlgebra::init_generators() {
  entries_.assign(static_cast<std::size_t>(N_ * N_), std::nullopt);
  std::vector<int> id_of(static_cast<std::size_t>(N_ * N_), -1);

  auto add_generator = [&](int i, int j, std::vector<MatrixEntry> amb) {
    const auto g = static_cast<GenId>(index_.size());
    index_.emplace_back(i, j);
    std::vector<MatrixEntry> der;
    for (const auto& e : amb) der.push_back({e.col, e.row, e.coeff});
    ambient_.push_back(std::move(amb));
    derivative_.push_back(std::move(der));
    id_of[i * N_ + j] = g;
  };

  for (int i = 0; i < N_; ++i) {
    for (int j = 0; j < N_; ++j) {
      if (form_ == Form::none) {
        add_generator(i, j, {{i, j, 1}});
        continue;
      }
      const int pi = prime(j), pj = prime(i);  // partner (j', i')
      const auto self = std::make_pair(i, j), partner = std::make_pair(pi, pj);
      if (partner < self) continue;
      const int th = theta(i, j);
      if (self == partner) {
        if (th == 1) continue;  // F_{i i'} = 0 in the orthogonal case
        add_generator(i, j, {{i, j, Scalar(1 - th)}});
      } else {
        add_generator(i, j, {{i, j, 1}, {pi, pj, Scalar(-th)}});
      }
    }
  }
  if (index_.size() > 255) throw Error("too many generators");

  for (int k = 0; k < N_; ++k) {
    for (int l = 0; l < N_; ++l) {
      if (id_of[k * N_ + l] >= 0) {
        entries_[k * N_ + l] = GenTerm{static_cast<GenId>(id_of[k * N_ + l]), 1};
        continue;
      }
      // F_kl = -theta_ab F_ab with (a, b) = (l', k') canonical.
      const int a = prime(l), b = prime(k);
      if (id_of[a * N_ + b] >= 0 && std::make_pair(a, b) != std::make_pair(k, l))
        entries_[k * N_ + l] = GenTerm{static_cast<GenId>(id_of[a * N_ + b]), Scalar(-theta(a, b))};
    }
  }
}

void LieAlgebra::init_brackets() {
  const std::size_t d = index_.size();
  brackets_.assign(d * d, {});
  std::vector<Scalar> m(static_cast<std::size_t>(N_ * N_));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      for (auto& x : m) x = 0;
      for (const auto& x : ambient_[a])
        for (const auto& y : ambient_[b]) {
          if (x.col == y.row) m[x.row * N_ + y.col] += x.coeff * y.coeff;
          if (y.col == x.row) m[y.row * N_ + x.col] -= x.coeff * y.coeff;
        }
      LinearCombo combo;
      for (std::size_t g = 0; g < d; ++g) {
        auto [i, j] = index_[g];
        const Scalar& lead = m[i * N_ + j];
        if (is_zero(lead)) continue;
        const Scalar c = lead / ambient_[g].front().coeff;
        combo.push_back({static_cast<GenId>(g), c});
      }
      for (const auto& t : combo)
        for (const auto& e : ambient_[t.gen]) m[e.row * N_ + e.col] -= t.coeff * e.coeff;
      for (const auto& x : m)
        if (!is_zero(x)) throw Error("bracket of " + name() + " generators does not close");
      brackets_[a * d + b] = std::move(combo);
    }
  }
}

std::size_t LieAlgebra::cache_size() const {
  std::lock_guard lock(memo_->mutex);
  return memo_->products.size() + memo_->derivatives.size();
}

}  // namespace qshift
