#pragma once

#include <vector>

#include "ncsym/ncsym.hpp"
#include "ncsym/permutation.hpp"
#include "ncsym/set_partition.hpp"

// Brute-force reference computations. They work directly on words in
// explicit variables or on blocks, and share no code with the algebra
// they are used to check.
namespace ncsym::oracle {

/// All words x_{i_1} ... x_{i_d} in k noncommuting variables whose type (the
/// partition of positions by equal letters) is A.
std::vector<std::vector<int>> words_of_type(const SetPartition& a, int k);

/// f * g computed by expanding both factors into words in k noncommuting
/// variables, concatenating, and collecting by type. Throws InternalError if
/// the result is not constant on types.
NCSymElement word_product(const NCSymElement& f, const NCSymElement& g, int k);

/// Coproduct from explicit subsets of blocks, standardizing each side.
Tensor block_coproduct(const SetPartition& a, const Alphabet& n);

/// rho^{-1}(A), computed by moving the elements of every block.
SetPartition permute_blocks(const SetPartition& a, const Permutation& rho);

}  // namespace ncsym::oracle
