#pragma once

#include <map>
#include <string>
#include <type_traits>
#include <utility>

#include "operads/rational.hpp"

namespace operads {

// Formal linear combination over a canonically ordered basis type B.
// Zero coefficients are never stored, so map equality is element equality.
template <typename B>
class LinComb {
 public:
  using Terms = std::map<B, Rational>;

  LinComb() = default;

  static LinComb zero() { return {}; }

  static LinComb term(B basis, Rational coeff = 1) {
    LinComb out;
    out.add_term(std::move(basis), std::move(coeff));
    return out;
  }

  void add_term(B basis, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(basis), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& other) {
    for (const auto& [b, c] : other.terms_) add_term(b, c);
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }

  LinComb scaled(const Rational& factor) const {
    LinComb out;
    if (factor == 0) return out;
    for (const auto& [b, c] : terms_) out.terms_.emplace(b, c * factor);
    return out;
  }

  friend LinComb operator*(const Rational& factor, const LinComb& x) { return x.scaled(factor); }
  friend LinComb operator-(const LinComb& x) { return x.scaled(-1); }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a += b.scaled(-1); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  Rational coefficient(const B& basis) const {
    auto it = terms_.find(basis);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Sum of all coefficients (the total multiplicity of the combination).
  Rational total() const {
    Rational out = 0;
    for (const auto& [b, c] : terms_) out += c;
    return out;
  }

  // Linear extension of a basis map f: B -> B'.
  template <typename F>
  auto map(F&& f) const -> LinComb<std::decay_t<decltype(f(std::declval<const B&>()))>> {
    LinComb<std::decay_t<decltype(f(std::declval<const B&>()))>> out;
    for (const auto& [b, c] : terms_) out.add_term(f(b), c);
    return out;
  }

  // Linear extension of f: B -> LinComb<B'>.
  template <typename F>
  auto flat_map(F&& f) const -> std::decay_t<decltype(f(std::declval<const B&>()))> {
    std::decay_t<decltype(f(std::declval<const B&>()))> out;
    for (const auto& [b, c] : terms_) {
      const auto image = f(b);
      for (const auto& [b2, c2] : image.terms()) out.add_term(b2, c * c2);
    }
    return out;
  }

  friend bool operator==(const LinComb&, const LinComb&) = default;
  friend auto operator<=>(const LinComb&, const LinComb&) = default;

 private:
  Terms terms_;
};

// Canonical text: terms in basis order, "c*term" with the coefficient
// omitted when it is 1 ("-" prefix when -1); the zero combination is "0".
template <typename B>
std::string to_text(const LinComb<B>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : x.terms()) {
    if (!first) out += " + ";
    if (c == 1) {
      out += to_text(b);
    } else if (c == -1) {
      out += "-" + to_text(b);
    } else {
      out += to_text(c) + "*" + to_text(b);
    }
    first = false;
  }
  return out;
}

}  // namespace operads
