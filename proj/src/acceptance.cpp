#include "ncsym/acceptance.hpp"

#include <exception>
#include <functional>
#include <initializer_list>
#include <set>
#include <sstream>

#include "ncsym/decomposition.hpp"
#include "ncsym/error.hpp"
#include "ncsym/frobenius.hpp"
#include "ncsym/ncsym.hpp"
#include "ncsym/oracle.hpp"
#include "ncsym/series.hpp"
#include "ncsym/sym.hpp"

namespace ncsym {

namespace {

const Alphabet kInf = Alphabet::infinite();

Alphabet fin(std::size_t n) { return Alphabet::finite(n); }

// Collects the first failed expectation; later ones are only counted.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  std::size_t checks() const { return checks_; }
  const std::string& failure() const { return failure_; }

 private:
  std::size_t checks_ = 0;
  std::string failure_;
};

NCSymElement nc_sum(std::initializer_list<const char*> sps, Alphabet n) {
  NCSymElement out(n);
  for (const char* s : sps) out.add_term(to_rgword(parse_setpartition(s)), 1);
  return out;
}

NCSymElement nc_mono(const char* sp, Alphabet n) { return NCSymElement::monomial(parse_setpartition(sp), n); }

SymElement sym_mono(const char* mu, Alphabet n) { return SymElement::monomial(parse_partition(mu), n); }

SymElement sym_sum(std::initializer_list<std::pair<const char*, int>> terms, Alphabet n) {
  SymElement out(n);
  for (const auto& [mu, c] : terms) out.add_term(parse_partition(mu), c);
  return out;
}

ShapePoly shape_poly(int max_weight, std::initializer_list<std::pair<const char*, int>> terms) {
  ShapePoly out(max_weight);
  for (const auto& [mu, c] : terms) out.add_term(parse_partition(mu), c);
  return out;
}

std::vector<RGWord> words_up_to(int d, const Alphabet& n) {
  std::vector<RGWord> out;
  for (int k = 0; k <= d; ++k)
    for (auto& w : enumerate_rgwords(k, n)) out.push_back(std::move(w));
  return out;
}

std::vector<IntPartition> partitions_up_to(int d) {
  std::vector<IntPartition> out;
  for (int k = 0; k <= d; ++k)
    for (auto& mu : enumerate_partitions(k)) out.push_back(std::move(mu));
  return out;
}

// Hilb_q of the coinvariants through weight 5, as displayed in the source.
ShapePoly displayed_cosym_shapes() {
  return shape_poly(5, {{"", 1},
                        {"2,1", 2},
                        {"3,1", 3},
                        {"2,2", 2},
                        {"2,1,1", 3},
                        {"4,1", 4},
                        {"3,2", 9},
                        {"3,1,1", 6},
                        {"2,2,1", 10},
                        {"2,1,1,1", 4}});
}

// 1. Displayed products.
std::string products(Checker& ck) {
  for (Alphabet n : {fin(4), fin(5), kInf}) {
    SymElement expected = sym_sum({{"2,1,1,1", 3}, {"2,2,1", 2}, {"3,1,1", 2}, {"3,2", 1}}, n);
    ck.expect(multiply(sym_mono("2,1", n), sym_mono("1,1", n)) == expected, "m21*m11 at n=" + to_string(n));
  }
  ck.expect(multiply(sym_mono("2,1", fin(3)), sym_mono("1,1", fin(3))) ==
                sym_sum({{"2,2,1", 2}, {"3,1,1", 2}, {"3,2", 1}}, fin(3)),
            "m21*m11 at n=3 keeps a four-part term");

  NCSymElement seven = nc_sum({"13.2.4.5", "134.2.5", "135.2.4", "13.24.5", "13.25.4", "135.24", "134.25"}, kInf);
  ck.expect(multiply(nc_mono("13.2", kInf), nc_mono("1.2", kInf)) == seven, "m_{13.2} * m_{1.2}");
  ck.expect(seven.size() == 7, "seven distinct terms");

  NCSymElement six(fin(3));
  for (const char* w : {"12113", "12131", "12123", "12132", "12121", "12112"}) six.add_term(parse_rgword(w), 1);
  ck.expect(six.size() == 6, "six distinct terms");
  ck.expect(multiply(NCSymElement::monomial(parse_rgword("121"), fin(3)),
                     NCSymElement::monomial(parse_rgword("12"), fin(3))) == six,
            "m_121 * m_12 at n=3");
  return "m21*m11 at n=3,4,5,inf; m_{13.2}*m_{1.2} (7 terms); m_121*m_12 at n=3 (6 terms)";
}

// 2. Products against explicit expansions.
std::string oracles(Checker& ck) {
  const Alphabet four = fin(4);
  std::size_t nc_pairs = 0;
  for (const auto& u : words_up_to(5, four))
    for (const auto& v : words_up_to(5 - static_cast<int>(u.size()), four)) {
      NCSymElement f = NCSymElement::monomial(u, four), g = NCSymElement::monomial(v, four);
      ck.expect(multiply(f, g) == oracle::word_product(f, g, 4),
                "quasi-shuffle vs word expansion for " + to_string(u) + " * " + to_string(v));
      ++nc_pairs;
    }
  const int k = 8;
  const Alphabet eight = fin(8);
  std::size_t sym_pairs = 0;
  for (const auto& lam : partitions_up_to(5))
    for (const auto& mu : partitions_up_to(5 - lam.weight())) {
      SymElement f = SymElement::monomial(lam, eight), g = SymElement::monomial(mu, eight);
      Polynomial p = multiply(expand_oracle(f, k), expand_oracle(g, k), k);
      ck.expect(multiply(f, g) == collect_symmetric(p, k, eight),
                "Sym product vs expansion for m_" + to_string(lam) + " * m_" + to_string(mu));
      ++sym_pairs;
    }
  return std::to_string(nc_pairs) + " word pairs at n=4, " + std::to_string(sym_pairs) +
         " partition pairs at k=8, total degree <= 5";
}

// 3. Hilbert series.
std::string series(Checker& ck) {
  const int bell[] = {1, 1, 2, 5, 15, 52, 203};
  TruncSeries nc = hilb_ncsym(kInf, 6);
  for (int d = 0; d <= 6; ++d) {
    ck.expect(nc[d] == bell[d], "hilb_ncsym coefficient " + std::to_string(d));
    ck.expect(enumerate_setpartitions(d, kInf).size() == static_cast<std::size_t>(bell[d]),
              "set partition count " + std::to_string(d));
  }
  for (Alphabet n : {fin(2), fin(3), fin(4), kInf}) {
    bool nonneg = true;
    try {
      TruncSeries c = hilb_cosym(n, 10);
      for (const auto& x : c.coefficients()) nonneg = nonneg && x >= 0;
    } catch (const NegativeCoefficient&) {
      nonneg = false;
    }
    ck.expect(nonneg, "hilb_cosym nonnegative through t^10 at n=" + to_string(n));
  }
  TruncSeries c = hilb_cosym(kInf, 4);
  ck.expect(c[3] == 2 && c[4] == 8, "hilb_cosym t^3, t^4 coefficients at n=inf");
  ck.expect(cosym_word_basis(3, kInf).size() == 2 && cosym_word_basis(4, kInf).size() == 8,
            "tail-free word counts in degrees 3 and 4");
  return "Bell numbers through d=6; hilb_cosym >= 0 through t^10 for n=2,3,4,inf; [t^3]=2, [t^4]=8";
}

// 4. Shape series.
std::string shape_series(Checker& ck) {
  ShapePoly expected =
      shape_poly(6, {{"6", 1}, {"5,1", 6}, {"4,2", 15}, {"4,1,1", 15}, {"3,3", 10}, {"3,2,1", 60}, {"2,2,2", 15}});
  ck.expect(shape_hilb_ncsym(6, fin(3)) == expected, "shape series of N_6 at n=3");
  ck.expect(shape_hilb_cosym_inf(5) == displayed_cosym_shapes(), "shape series of the coinvariants through weight 5");
  return "Hilb_q(N_6) at n=3 (7 terms); Hilb_q(C) through weight 5 (all displayed terms)";
}

// 5. Frobenius characteristics.
std::string frobenius(Checker& ck) {
  const IntPartition m222 = parse_partition("2,2,2");
  SchurExpansion s = p_to_schur(frob_shape(m222));
  SchurExpansion expected{{parse_partition("6"), 1}, {parse_partition("4,2"), 1}, {m222, 1}};
  ck.expect(s == expected, "Schur expansion of Frob(N_222)");
  BigInt dim = 0;
  for (const auto& [lam, c] : s) dim += c.get_num() * schur_dim(lam);
  ck.expect(dim == 15 && shape_dimension(m222) == 15, "dimension 1+9+5 = 15");

  std::size_t classes = 0;
  for (int d = 0; d <= 6; ++d) {
    PExpansion total;
    for (const auto& lam : enumerate_partitions(d)) total += frob_shape(lam);
    for (const auto& mu : enumerate_partitions(d)) {
      Rational lhs = Rational(to_bigint(z_constant(mu))) * total.coefficient(mu);
      ck.expect(lhs == Rational(to_bigint(fixed_points(d, mu))),
                "character vs fixed points at mu=" + to_string(mu));
      ++classes;
    }
  }
  return "s_6+s_42+s_222, dimension 15; character = fixed points on " + std::to_string(classes) + " classes, d <= 6";
}

// 6. Main theorem over the unbounded alphabet.
std::string main_infinite(Checker& ck) {
  ShapePoly displayed = displayed_cosym_shapes();
  ShapePoly formula = shape_hilb_cosym_inf(5);
  std::size_t shapes = 0;
  for (const auto& mu : partitions_up_to(5)) {
    BigInt dim = to_bigint(hopf_kernel_basis(mu).dimension());
    ck.expect(dim == displayed.coefficient(mu) && dim == formula.coefficient(mu),
              "Hopf kernel dimension at shape " + to_string(mu));
    ++shapes;
  }
  for (int d = 0; d <= 5; ++d) {
    TensorIsoReport r = verify_tensor_iso(d, kInf);
    ck.expect(r.passed && r.rank == bell_restricted(d, kInf), "tensor decomposition at d=" + std::to_string(d));
  }
  return std::to_string(shapes) + " kernel shape dimensions; full rank B_d for d <= 5";
}

// 7. Main theorem over finite alphabets.
std::string main_finite(Checker& ck) {
  for (Alphabet n : {fin(2), fin(3), kInf}) {
    for (int d = 0; d <= 7; ++d) {
      std::set<RGWord> images;
      std::size_t count = 0;
      for (int k = 0; k <= d; ++k)
        for (const auto& w : cosym_word_basis(k, n)) {
          auto factors = bimodal_decompose(w).factors;
          for (const auto& nu : enumerate_partitions(d - k, n.cap(static_cast<std::size_t>(d)))) {
            RGWord image = to_rgword(phi(factors, nu, n));
            BimodalDecomposition back = bimodal_decompose(image);
            ck.expect(back.factors == factors && back.tail == convex_word(nu), "phi inverse at " + to_string(image));
            images.insert(image);
            ++count;
          }
        }
      auto all = enumerate_rgwords(d, n);
      ck.expect(count == all.size() && images == std::set<RGWord>(all.begin(), all.end()),
                "phi bijection at d=" + std::to_string(d) + ", n=" + to_string(n));
    }
  }
  for (Alphabet n : {fin(2), fin(3)})
    for (int d = 0; d <= 6; ++d) {
      TensorIsoReport r = verify_tensor_iso(d, n);
      ck.expect(r.passed, "tensor decomposition at d=" + std::to_string(d) + ", n=" + to_string(n));
    }
  for (Alphabet n : {fin(2), fin(3), fin(4), kInf}) {
    TruncSeries h = hilb_cosym(n, 7);
    for (int d = 0; d <= 7; ++d)
      ck.expect(h[d] == static_cast<long>(cosym_word_basis(d, n).size()),
                "tail-free count at d=" + std::to_string(d) + ", n=" + to_string(n));
  }
  return "phi bijective for d <= 7, n=2,3,inf; full rank for d <= 6, n=2,3; word counts match series for d <= 7";
}

// 8. Primitive elements.
std::string primitives(Checker& ck) {
  std::size_t count = 0;
  for (int d = 1; d <= 5; ++d)
    for (const auto& a : enumerate_setpartitions(d, kInf)) {
      if (!is_atomic(a) || a.length() == 1) continue;
      ++count;
      const std::string name = to_string(a);
      NCSymElement prim = compute_primitive(a).element;
      RGWord target = to_rgword(a);
      ck.expect(reduced_coproduct(prim).is_zero(), "primitivity of " + name);
      ck.expect(prim.coefficient(target) == 1, "leading coefficient for " + name);
      Rational alpha_sum = 0;
      for (const auto& [w, c] : prim.terms()) {
        if (w == target) continue;
        SetPartition b = from_rgword(w);
        ck.expect(!is_atomic(b) && b.shape() == a.shape(), "support of the primitive for " + name);
        alpha_sum -= c;
      }
      ck.expect(alpha_sum == 1, "zero-sum property for " + name);
    }
  NCSymElement expected = nc_mono("13.2", kInf) - nc_mono("12.3", kInf);
  ck.expect(compute_primitive(parse_setpartition("13.2")).element == expected, "primitive for 13.2");
  return std::to_string(count) + " atomic partitions with |A| <= 5; m_{13.2} - m_{12.3}";
}

// 9. Hopf algebra and place-action structure.
std::string structure(Checker& ck) {
  for (Alphabet n : {kInf, fin(2)}) {
    auto words = words_up_to(4, n);
    for (const auto& u : words)
      for (const auto& v : words)
        for (const auto& w : words) {
          if (u.size() + v.size() + w.size() > 4) continue;
          NCSymElement a = NCSymElement::monomial(u, n), b = NCSymElement::monomial(v, n),
                       c = NCSymElement::monomial(w, n);
          ck.expect((a * b) * c == a * (b * c), "associativity at n=" + to_string(n));
        }
  }
  for (const auto& u : words_up_to(5, kInf)) {
    Tensor d = coproduct(NCSymElement::monomial(u, kInf));
    ck.expect(coproduct_at(d, 0) == coproduct_at(d, 1), "coassociativity at " + to_string(u));
    ck.expect(d == oracle::block_coproduct(from_rgword(u), kInf), "coproduct vs block subsets at " + to_string(u));
  }

  for (const auto& u : words_up_to(5, kInf))
    for (const auto& v : words_up_to(5 - static_cast<int>(u.size()), kInf)) {
      NCSymElement f = NCSymElement::monomial(u, kInf), g = NCSymElement::monomial(v, kInf);
      ck.expect(coproduct(f * g) == tensor_multiply(coproduct(f), coproduct(g)),
                "multiplicativity at " + to_string(u) + " * " + to_string(v));
    }
  std::string witness;
  for (const auto& u : words_up_to(4, fin(2))) {
    for (const auto& v : words_up_to(4 - static_cast<int>(u.size()), fin(2))) {
      NCSymElement f = NCSymElement::monomial(u, fin(2)), g = NCSymElement::monomial(v, fin(2));
      if (coproduct(f * g) != tensor_multiply(coproduct(f), coproduct(g))) {
        witness = to_string(from_rgword(u)) + " * " + to_string(from_rgword(v));
        break;
      }
    }
    if (!witness.empty()) break;
  }
  ck.expect(!witness.empty(), "multiplicativity counterexample at n=2");

  for (Alphabet n : {kInf, fin(2), fin(3)})
    for (const auto& mu : partitions_up_to(5)) {
      SymElement m = SymElement::monomial(mu, n);
      ck.expect(abelianize(iota(m)) == m, "ab(iota(m_" + to_string(mu) + ")) at n=" + to_string(n));
    }
  for (const auto& mu : partitions_up_to(5)) {
    Tensor lifted(kInf, 2);
    for (const auto& [key, c] : coproduct(SymElement::monomial(mu, kInf))) {
      Tensor pair = tensor_product({m_bold(key.first, kInf), m_bold(key.second, kInf)});
      for (const auto& [k2, c2] : pair.terms()) lifted.add_term(k2, c * c2);
    }
    ck.expect(coproduct(m_bold(mu, kInf)) == lifted, "iota is a coalgebra map at m_" + to_string(mu));
  }

  for (int d = 0; d <= 5; ++d) {
    auto perms = all_permutations(static_cast<std::size_t>(d));
    std::vector<Permutation> generators;
    for (int i = 1; i < d; ++i) {
      std::vector<int> img;
      for (int j = 1; j <= d; ++j) img.push_back(j == i ? i + 1 : j == i + 1 ? i : j);
      generators.emplace_back(img);
    }
    const auto& sigmas = d <= 4 ? perms : generators;
    for (const auto& a : enumerate_setpartitions(d, kInf)) {
      NCSymElement m = NCSymElement::monomial(a, kInf);
      ck.expect(place_act(m, Permutation::identity(static_cast<std::size_t>(d))) == m, "identity acts trivially");
      std::set<SetPartition> orbit;
      for (const auto& rho : perms) {
        NCSymElement moved = place_act(m, rho);
        SetPartition image = oracle::permute_blocks(a, rho);
        ck.expect(moved == NCSymElement::monomial(image, kInf), "place action vs moved blocks");
        orbit.insert(image);
        for (const auto& sigma : sigmas)
          ck.expect(place_act(moved, sigma) == place_act(m, rho * sigma), "(m.rho).sigma = m.(rho sigma)");
      }
      auto shape_class = setpartitions_of_shape(a.shape());
      ck.expect(orbit == std::set<SetPartition>(shape_class.begin(), shape_class.end()),
                "orbit of " + to_string(a) + " is its shape class");
    }
  }
  return "associativity, coassociativity, multiplicativity at n=inf (n=2 witness " + witness +
         "), ab o iota = id, iota coalgebra map, place action through d=5";
}

const std::vector<std::pair<std::string, std::function<std::string(Checker&)>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<std::string(Checker&)>>> table{
      {"product identities", products},
      {"oracle equivalence", oracles},
      {"Hilbert series", series},
      {"shape series", shape_series},
      {"Frobenius characteristics", frobenius},
      {"tensor decomposition, unbounded alphabet", main_infinite},
      {"tensor decomposition, finite alphabets", main_finite},
      {"primitive elements", primitives},
      {"Hopf and place-action structure", structure},
  };
  return table;
}

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriterionCount) throw PreconditionError("no criterion " + std::to_string(id));
  const auto& [name, body] = criteria()[static_cast<std::size_t>(id - 1)];
  Checker ck;
  std::string summary;
  try {
    summary = body(ck);
  } catch (const std::exception& e) {
    return {id, name, false, std::string("exception: ") + e.what()};
  }
  if (!ck.ok()) return {id, name, false, ck.failure()};
  return {id, name, true, summary + " (" + std::to_string(ck.checks()) + " checks)"};
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
  return out;
}

}  // namespace ncsym
