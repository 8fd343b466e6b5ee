#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "ncsym/alphabet.hpp"
#include "ncsym/partition.hpp"
#include "ncsym/rational.hpp"

namespace ncsym {

/// Symmetric function in infinitely many variables, expanded in power sums:
/// p_mu -> coefficient. p_0 = 1.
class PExpansion {
 public:
  using Terms = std::map<IntPartition, Rational>;

  PExpansion() = default;
  static PExpansion constant(const Rational& c);
  static PExpansion power_sum(const IntPartition& mu);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const IntPartition& mu) const;
  void add_term(const IntPartition& mu, const Rational& c);

  PExpansion homogeneous_component(int d) const;

  PExpansion& operator+=(const PExpansion& other);
  PExpansion& operator-=(const PExpansion& other);
  PExpansion& operator*=(const Rational& c);

  friend bool operator==(const PExpansion&, const PExpansion&) = default;

 private:
  Terms terms_;
};

PExpansion operator+(PExpansion a, const PExpansion& b);
PExpansion operator-(PExpansion a, const PExpansion& b);
PExpansion operator*(const Rational& c, PExpansion a);
/// p_lambda p_mu = p_{lambda u mu}.
PExpansion operator*(const PExpansion& f, const PExpansion& g);

/// h_k = sum_{lambda |- k} p_lambda / z_lambda.
PExpansion h_in_p(int k);

/// f[g], the linear and multiplicative extension of p_k[p_l] = p_{kl}.
PExpansion plethysm(const PExpansion& f, const PExpansion& g);

/// Frobenius characteristic of the place-action module spanned by the
/// monomials of shape mu = 1^{a_1} ... k^{a_k}: h_{a_1}[h_1] ... h_{a_k}[h_k].
PExpansion frob_shape(const IntPartition& mu);

/// chi^lambda evaluated on the class mu (Murnaghan-Nakayama). Cached.
BigInt character(const IntPartition& lambda, const IntPartition& mu);

using SchurExpansion = std::map<IntPartition, Rational>;

/// Schur coefficients of a homogeneous f: [s_lambda] f = sum_mu chi^lambda(mu) [p_mu] f.
SchurExpansion p_to_schur(const PExpansion& f);

/// Number of standard Young tableaux of shape lambda (hook length formula).
BigInt schur_dim(const IntPartition& lambda);

/// Set partitions A of [d] with sigma_mu . A = A, optionally restricted to
/// at most n blocks; mu |- d.
std::uint64_t fixed_points(int d, const IntPartition& mu, const Alphabet& n = Alphabet::infinite());

/// Fixed points of sigma_mu among the set partitions of shape lambda.
std::uint64_t fixed_points_of_shape(const IntPartition& lambda, const IntPartition& mu);

}  // namespace ncsym
