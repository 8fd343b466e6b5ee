#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ncsym/ncsym.hpp"
#include "ncsym/sym_element.hpp"

namespace ncsym {

/// Product in the monomial basis, computed as ab(iota(f) * iota(g)) over the
/// unbounded alphabet and truncated to n afterwards.
SymElement multiply(const SymElement& f, const SymElement& g);
SymElement operator*(const SymElement& f, const SymElement& g);

using SymTensor = std::map<std::pair<IntPartition, IntPartition>, Rational>;

/// Delta(m_mu) = sum over distinct (theta, nu) with theta u nu = mu of
/// m_theta (x) m_nu, each pair with coefficient 1.
SymTensor coproduct(const SymElement& f);
Rational counit(const SymElement& f);

/// (ab (x) ab) applied to a 2-tensor of the noncommutative algebra.
SymTensor abelianize(const Tensor& t);

/// Commutative polynomial in k variables: exponent vector -> coefficient.
using Polynomial = std::map<std::vector<int>, Rational>;

/// Explicit expansion of f in k commuting variables.
Polynomial expand_oracle(const SymElement& f, int k);
Polynomial multiply(const Polynomial& p, const Polynomial& q, int k);
/// Reads off the monomial-basis coefficients of a symmetric polynomial in k
/// variables (the coefficient of x^mu for each mu). Throws InternalError if
/// the polynomial is not symmetric.
SymElement collect_symmetric(const Polynomial& p, int k, Alphabet n);

}  // namespace ncsym
