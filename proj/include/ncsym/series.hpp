#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ncsym/alphabet.hpp"
#include "ncsym/error.hpp"
#include "ncsym/partition.hpp"
#include "ncsym/rational.hpp"

namespace ncsym {

/// Power series in t known exactly up to t^precision.
class TruncSeries {
 public:
  explicit TruncSeries(int precision);
  TruncSeries(int precision, std::vector<Rational> coefficients);

  static TruncSeries one(int precision);
  /// t^k (zero if k exceeds the precision).
  static TruncSeries monomial(int k, const Rational& c, int precision);

  int precision() const noexcept { return precision_; }
  const Rational& operator[](int d) const { return coefficients_[static_cast<std::size_t>(d)]; }
  Rational& operator[](int d) { return coefficients_[static_cast<std::size_t>(d)]; }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }

  /// 1 / f for f with nonzero constant term.
  TruncSeries reciprocal() const;
  /// Value at t = 1 of the truncated polynomial.
  Rational sum() const;

  TruncSeries& operator+=(const TruncSeries& other);
  TruncSeries& operator-=(const TruncSeries& other);
  TruncSeries& operator*=(const TruncSeries& other);

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  int precision_;
  std::vector<Rational> coefficients_;
};

TruncSeries operator+(TruncSeries a, const TruncSeries& b);
TruncSeries operator-(TruncSeries a, const TruncSeries& b);
TruncSeries operator*(TruncSeries a, const TruncSeries& b);

/// Integer combination of shape markers q_mu = q_{mu_1} q_{mu_2} ..., all of
/// weight at most max_weight.
class ShapePoly {
 public:
  using Terms = std::map<IntPartition, BigInt>;

  explicit ShapePoly(int max_weight) : max_weight_(max_weight) {}

  int max_weight() const noexcept { return max_weight_; }
  const Terms& terms() const noexcept { return terms_; }
  BigInt coefficient(const IntPartition& mu) const;
  /// Ignores markers heavier than max_weight.
  void add_term(const IntPartition& mu, const BigInt& c);

  ShapePoly weight_component(int d) const;
  /// Substitutes q_i -> t^i.
  TruncSeries specialize() const;

  /// q_lambda q_mu = q_{lambda u mu}, truncated.
  ShapePoly& operator*=(const ShapePoly& other);
  ShapePoly& operator+=(const ShapePoly& other);

  friend bool operator==(const ShapePoly&, const ShapePoly&) = default;

 private:
  int max_weight_;
  Terms terms_;
};

ShapePoly operator*(ShapePoly a, const ShapePoly& b);

/// Raised when a coinvariant Hilbert series has a negative coefficient.
class NegativeCoefficient : public Error {
 public:
  NegativeCoefficient(int degree, const Rational& value);
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

/// prod_{i=1}^{n} 1/(1 - t^i).
TruncSeries hilb_sym(const Alphabet& n, int precision);
/// prod_{i=1}^{n} (1 + t + ... + t^{i-1}); n must be finite.
TruncSeries coinvariant_poly(const Alphabet& n);
/// 1 + sum_{k=1}^{n} t^k / ((1-t)(1-2t)...(1-kt)).
TruncSeries hilb_ncsym(const Alphabet& n, int precision);
/// hilb_ncsym * prod_{i=1}^{n} (1 - t^i); throws NegativeCoefficient.
TruncSeries hilb_cosym(const Alphabet& n, int precision);

/// Degree-d shape enumerator of the noncommutative monomials with at most n
/// blocks, computed by enumeration and by the exponential generating
/// function; throws InternalError if the two disagree.
ShapePoly shape_hilb_ncsym(int d, const Alphabet& n);
/// sum_d d! [t^d] exp(sum_k q_k t^k / k!) * prod_i (1 - q_i), up to weight D.
ShapePoly shape_hilb_cosym_inf(int max_weight);
/// prod_i 1/(1 - q_i) up to weight D.
ShapePoly shape_hilb_sym(int max_weight);

}  // namespace ncsym
