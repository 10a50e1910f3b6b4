#include "qshift/text.hpp"

#include <cctype>
#include <vector>

#include "qshift/selement.hpp"
#include "qshift/uelement.hpp"

namespace qshift {

std::string generator_name(const LieAlgebra& alg, GenId g) {
  auto [i, j] = alg.generator_index(g);
  return std::string(1, alg.letter()) + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

std::string format_monomial(const LieAlgebra& alg, const Monomial& m) {
  std::string out;
  for (auto [g, e] : m.runs()) {
    out += generator_name(alg, g);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

std::string format_terms(const LieAlgebra* alg, const std::vector<std::pair<Monomial, Scalar>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool negative = sgn(c) < 0;
    const Scalar mag = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (m.empty()) {
      out += format_scalar(mag);
      continue;
    }
    if (mag != 1) out += format_scalar(mag) + "*";
    out += format_monomial(*alg, m);
  }
  return out;
}

class Parser {
 public:
  Parser(const AlgebraPtr& alg, std::string_view text) : alg_(alg), text_(text) {}

  UElement parse() {
    UElement result(alg_);
    skip_space();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      bool saw_sign = false;
      while (true) {
        skip_space();
        if (consume("-") || consume("\xE2\x88\x92")) {
          sign = -sign;
          saw_sign = true;
        } else if (consume("+")) {
          saw_sign = true;
        } else {
          break;
        }
      }
      if (!first && !saw_sign) fail("expected '+' or '-' between terms");
      first = false;
      UElement term = parse_term();
      result.add_scaled(term, sign);
      skip_space();
    }
    return result;
  }

 private:
  UElement parse_term() {
    skip_space();
    Scalar coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coeff();
      have_coeff = true;
      skip_space();
      if (consume("*")) {
        skip_space();
      } else if (at_end() || (peek() != 'E' && peek() != 'F')) {
        return UElement::scalar(alg_, coeff);
      }
    }
    if (at_end() || (peek() != 'E' && peek() != 'F'))
      fail(have_coeff ? "expected a generator after '*'" : "expected a term");
    UElement product = UElement::scalar(alg_, coeff);
    while (true) {
      product = product * parse_generator();
      const std::size_t save = pos_;
      skip_space();
      consume("*");
      skip_space();
      if (!at_end() && (peek() == 'E' || peek() == 'F')) continue;
      pos_ = save;
      break;
    }
    return product;
  }

  Scalar parse_coeff() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == den) fail("missing denominator");
    }
    try {
      return parse_scalar(text_.substr(start, pos_ - start));
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  int parse_int() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  UElement parse_generator() {
    const char letter = peek();
    ++pos_;
    if (letter != alg_->letter())
      fail(std::string("generator letter '") + letter + "' does not belong to " + alg_->name());
    skip_space();
    if (!consume("[")) fail("expected '['");
    const int i = parse_int();
    skip_space();
    if (!consume(",")) fail("expected ','");
    const int j = parse_int();
    skip_space();
    if (!consume("]")) fail("expected ']'");
    if (i < 1 || j < 1 || i > alg_->N() || j > alg_->N())
      fail("index out of range for " + alg_->name());
    int exponent = 1;
    if (consume("^")) exponent = parse_int();
    return power(UElement::matrix_entry(alg_, i - 1, j - 1), exponent);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool consume(std::string_view tok) {
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("parse error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  AlgebraPtr alg_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_element(const UElement& f) {
  if (f.is_zero()) return "0";
  return format_terms(f.algebra().get(), f.sorted_terms());
}

std::string format_element(const SElement& f) {
  if (f.is_zero()) return "0";
  return format_terms(f.algebra().get(), f.sorted_terms());
}

UElement parse_element(const AlgebraPtr& alg, std::string_view text) { return Parser(alg, text).parse(); }

ExpressionShape scan_expression(std::string_view text) {
  ExpressionShape shape;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if ((text[k] == 'E' || text[k] == 'F') && k + 1 < text.size() && text[k + 1] == '[') {
      if (shape.letter != 0 && shape.letter != text[k]) throw Error("expression mixes E and F generators");
      shape.letter = text[k];
      std::size_t p = k + 2;
      for (int part = 0; part < 2; ++part) {
        while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
        int v = 0;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) v = 10 * v + (text[p++] - '0');
        shape.max_index = std::max(shape.max_index, v);
        while (p < text.size() && (std::isspace(static_cast<unsigned char>(text[p])) || text[p] == ',')) ++p;
      }
    }
  }
  return shape;
}

}  // namespace qshift
