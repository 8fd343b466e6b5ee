#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ncsym/alphabet.hpp"
#include "ncsym/partition.hpp"
#include "ncsym/permutation.hpp"
#include "ncsym/rational.hpp"
#include "ncsym/rg_word.hpp"
#include "ncsym/set_partition.hpp"
#include "ncsym/sym_element.hpp"

namespace ncsym {

/// Finite rational combination of monomials m_A of the algebra of symmetric
/// functions in n noncommuting variables. Basis indices are set partitions of
/// standard ground sets, keyed by their restricted growth words so that
/// iteration follows the length-plus-lexicographic order. Terms with more
/// than n blocks are never stored.
class NCSymElement {
 public:
  using Terms = std::map<RGWord, Rational>;

  explicit NCSymElement(Alphabet n) : alphabet_(n) {}

  static NCSymElement zero(Alphabet n) { return NCSymElement(n); }
  static NCSymElement one(Alphabet n) { return monomial(RGWord{}, n); }
  static NCSymElement monomial(const SetPartition& a, Alphabet n);
  static NCSymElement monomial(const RGWord& w, Alphabet n);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const RGWord& w) const;
  Rational coefficient(const SetPartition& a) const { return coefficient(to_rgword(a)); }

  /// Adds c * m_w; drops w with more than n blocks.
  void add_term(const RGWord& w, const Rational& c);

  /// Degree if every term has the same degree; nullopt for zero or mixed.
  std::optional<int> homogeneous_degree() const;
  NCSymElement degree_component(int d) const;
  NCSymElement shape_component(const IntPartition& mu) const;

  NCSymElement& operator+=(const NCSymElement& other);
  NCSymElement& operator-=(const NCSymElement& other);
  NCSymElement& operator*=(const Rational& c);

  friend bool operator==(const NCSymElement&, const NCSymElement&) = default;

 private:
  Alphabet alphabet_;
  Terms terms_;
};

NCSymElement operator+(NCSymElement a, const NCSymElement& b);
NCSymElement operator-(NCSymElement a, const NCSymElement& b);
NCSymElement operator*(const Rational& c, NCSymElement a);

/// Bilinear quasi-shuffle product; terms with more than n blocks are dropped
/// after shuffling. Throws AlphabetMismatch.
NCSymElement multiply(const NCSymElement& f, const NCSymElement& g);
NCSymElement operator*(const NCSymElement& f, const NCSymElement& g);

/// fg - gf.
NCSymElement lie_bracket(const NCSymElement& f, const NCSymElement& g);

/// Coefficient of m_{empty}.
Rational counit(const NCSymElement& f);

/// Element of the r-fold tensor power, keyed by tuples of basis words.
class Tensor {
 public:
  using Key = std::vector<RGWord>;
  using Terms = std::map<Key, Rational>;

  Tensor(Alphabet n, std::size_t arity) : alphabet_(n), arity_(arity) {}

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t arity() const noexcept { return arity_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Key& key) const;

  void add_term(const Key& key, const Rational& c);

  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  Alphabet alphabet_;
  std::size_t arity_;
  Terms terms_;
};

Tensor operator+(Tensor a, const Tensor& b);
Tensor operator-(Tensor a, const Tensor& b);

/// f1 (x) f2 (x) ... as a simple tensor.
Tensor tensor_product(const std::vector<NCSymElement>& factors);

/// Componentwise product (a1 (x) a2)(b1 (x) b2) = a1 b1 (x) a2 b2.
Tensor tensor_multiply(const Tensor& x, const Tensor& y);

/// Delta(m_A) = sum over complementary block subsets B, C of A of
/// m_std(B) (x) m_std(C).
Tensor coproduct(const NCSymElement& f);

/// Applies the coproduct to tensor slot `slot`, raising the arity by one.
Tensor coproduct_at(const Tensor& t, std::size_t slot);

/// Delta(f) - f (x) 1 - 1 (x) f. Throws PreconditionError if counit(f) != 0.
Tensor reduced_coproduct(const NCSymElement& f);

/// The r-fold tensor obtained by applying the reduced coproduct r - 1 times
/// to the leftmost factor. r = 1 returns f itself as a 1-tensor.
Tensor iterate_reduced(const NCSymElement& f, std::size_t r);

/// Place action m_A . rho = m_{rho^{-1}(A)}. f must be homogeneous of degree
/// rho.size() (zero is accepted).
NCSymElement place_act(const NCSymElement& f, const Permutation& rho);

/// Number of standard set partitions of shape mu.
BigInt shape_dimension(const IntPartition& mu);

/// Place-action invariant (1 / (dim N_mu * mu^!)) * sum_{shape(A) = mu} m_A.
/// Zero when mu has more than n parts.
NCSymElement m_bold(const IntPartition& mu, Alphabet n);

/// Linear extension of m_mu -> m_bold(mu).
NCSymElement iota(const SymElement& f);

/// m_A -> shape(A)^! m_{shape(A)}.
SymElement abelianize(const NCSymElement& f);

struct LeadingTerm {
  RGWord word;
  Rational coefficient;
  SetPartition index() const { return from_rgword(word); }
};

/// Minimal support word under the length-plus-lexicographic order. Throws
/// PreconditionError for zero or inhomogeneous input.
LeadingTerm leading_term(const NCSymElement& f);

}  // namespace ncsym
