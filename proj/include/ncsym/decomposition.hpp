#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncsym/alphabet.hpp"
#include "ncsym/ncsym.hpp"
#include "ncsym/partition.hpp"
#include "ncsym/rg_word.hpp"
#include "ncsym/set_partition.hpp"

namespace ncsym {

/// Linearly independent homogeneous elements of one degree.
class DegreeBasis {
 public:
  /// Throws PreconditionError if an element has the wrong degree and
  /// InternalError if the elements are dependent.
  DegreeBasis(int degree, std::vector<NCSymElement> elements,
              std::optional<IntPartition> shape = {});

  int degree() const noexcept { return degree_; }
  const std::vector<NCSymElement>& elements() const noexcept { return elements_; }
  std::size_t dimension() const noexcept { return elements_.size(); }
  const std::optional<IntPartition>& shape() const noexcept { return shape_; }

 private:
  int degree_;
  std::vector<NCSymElement> elements_;
  std::optional<IntPartition> shape_;
};

/// Rank of a family of elements, expressed in the monomial basis.
std::size_t rank_of(const std::vector<NCSymElement>& elements);

/// (id (x) ab) Delta(h) == h (x) 1. Requires the unbounded alphabet.
bool is_in_hopf_kernel(const NCSymElement& h);

/// Basis of the left Hopf kernel of ab inside the shape-mu component, over
/// the unbounded alphabet.
DegreeBasis hopf_kernel_basis(const IntPartition& mu);

struct Primitive {
  NCSymElement element;  // m_A - sum alpha_B m_B
  /// Dimension of the affine family of admissible solutions.
  std::size_t solution_dimension = 0;
};

/// Primitive element m_A - sum alpha_B m_B, B non-atomic of the shape of A,
/// for an atomic A over the unbounded alphabet. Free coordinates of the
/// solution (columns in word order) are set to zero.
Primitive compute_primitive(const SetPartition& a);

/// Tail-free words of length d with letters at most n.
std::vector<RGWord> cosym_word_basis(int d, const Alphabet& n);
/// m_{w'} m_{w''} ... m_{w^(r)} for the bimodal factors of a tail-free word.
NCSymElement cosym_element(const RGWord& w, const Alphabet& n);

/// The set partition of the word w' | ... | w^(r) | w(mu).
SetPartition phi(const std::vector<RGWord>& factors, const IntPartition& mu, const Alphabet& n);

struct ShapeDimension {
  int degree;
  IntPartition shape;
  std::size_t expected_dim;
  std::size_t computed_dim;
};

struct TensorIsoReport {
  int degree = 0;
  Alphabet alphabet = Alphabet::infinite();
  std::size_t expected_dim = 0;       // dim N_d at this alphabet
  std::size_t candidate_count = 0;    // sum_k dim C_k * #{mu |- d-k, l(mu) <= n}
  std::size_t rank = 0;               // rank of {c * iota(m_mu)}
  bool phi_bijective = true;          // finite n: phi hits every word once
  bool leading_terms_match = true;    // finite n: leading term of c * m_bold(mu) is phi
  std::vector<ShapeDimension> kernel_shapes;  // unbounded alphabet only
  bool passed = false;
};

/// Certifies that {c * iota(m_mu)} is a basis of N_d over alphabet n, where c
/// runs over a basis of the coinvariant part in degree d - |mu|.
TensorIsoReport verify_tensor_iso(int d, const Alphabet& n);

}  // namespace ncsym
