#pragma once

#include <map>
#include <optional>

#include "ncsym/alphabet.hpp"
#include "ncsym/partition.hpp"
#include "ncsym/rational.hpp"

namespace ncsym {

/// Finite rational combination of monomial symmetric functions m_mu in n
/// commuting variables. Terms with more than n parts are never stored.
class SymElement {
 public:
  using Terms = std::map<IntPartition, Rational>;

  explicit SymElement(Alphabet n) : alphabet_(n) {}

  static SymElement zero(Alphabet n) { return SymElement(n); }
  static SymElement one(Alphabet n) { return monomial(IntPartition{}, n); }
  static SymElement monomial(const IntPartition& mu, Alphabet n);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const IntPartition& mu) const;

  /// Adds c * m_mu; silently drops mu with too many parts.
  void add_term(const IntPartition& mu, const Rational& c);

  /// Same terms re-tagged for a smaller alphabet, dropping what vanishes there.
  SymElement truncated(Alphabet n) const;

  SymElement& operator+=(const SymElement& other);
  SymElement& operator-=(const SymElement& other);
  SymElement& operator*=(const Rational& c);

  friend bool operator==(const SymElement&, const SymElement&) = default;

 private:
  Alphabet alphabet_;
  Terms terms_;
};

SymElement operator+(SymElement a, const SymElement& b);
SymElement operator-(SymElement a, const SymElement& b);
SymElement operator*(const Rational& c, SymElement a);

}  // namespace ncsym
