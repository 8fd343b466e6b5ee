#include "ncsym/sym_element.hpp"

#include "ncsym/sparse.hpp"

namespace ncsym {

SymElement SymElement::monomial(const IntPartition& mu, Alphabet n) {
  SymElement f(n);
  f.add_term(mu, 1);
  return f;
}

Rational SymElement::coefficient(const IntPartition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymElement::add_term(const IntPartition& mu, const Rational& c) {
  if (!alphabet_.admits(mu.length())) return;
  accumulate(terms_, mu, c);
}

SymElement SymElement::truncated(Alphabet n) const {
  SymElement out(n);
  for (const auto& [mu, c] : terms_) out.add_term(mu, c);
  return out;
}

SymElement& SymElement::operator+=(const SymElement& other) {
  require_same_alphabet(alphabet_, other.alphabet_);
  for (const auto& [mu, c] : other.terms_) accumulate(terms_, mu, c);
  return *this;
}

SymElement& SymElement::operator-=(const SymElement& other) {
  require_same_alphabet(alphabet_, other.alphabet_);
  for (const auto& [mu, c] : other.terms_) accumulate(terms_, mu, Rational(-c));
  return *this;
}

SymElement& SymElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mu, x] : terms_) x *= c;
  return *this;
}

SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }
SymElement operator*(const Rational& c, SymElement a) { return a *= c; }

}  // namespace ncsym
