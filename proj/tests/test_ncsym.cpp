#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "ncsym/error.hpp"
#include "ncsym/oracle.hpp"
#include "ncsym/sym.hpp"

using namespace ncsym;
using testing::fin;
using testing::kInf;
using testing::m;
using testing::ms;
using testing::P;
using testing::SP;
using testing::W;

namespace {

NCSymElement word_sum(std::initializer_list<const char*> words, Alphabet n) {
  NCSymElement out(n);
  for (const char* w : words) out.add_term(W(w), 1);
  return out;
}

std::vector<RGWord> words_up_to(int d, Alphabet n) {
  std::vector<RGWord> out;
  for (int k = 0; k <= d; ++k)
    for (const auto& w : enumerate_rgwords(k, n)) out.push_back(w);
  return out;
}

// A random element of degree d with small integer coefficients.
NCSymElement random_element(std::mt19937& rng, int d, Alphabet n) {
  auto words = enumerate_rgwords(d, n);
  std::uniform_int_distribution<int> coeff(-3, 3);
  NCSymElement f(n);
  for (const auto& w : words) f.add_term(w, coeff(rng));
  return f;
}

Tensor tensor(std::initializer_list<std::pair<std::vector<const char*>, int>> terms, Alphabet n, std::size_t arity) {
  Tensor t(n, arity);
  for (const auto& [sps, c] : terms) {
    Tensor::Key key;
    for (const char* s : sps) key.push_back(to_rgword(SP(s)));
    t.add_term(key, c);
  }
  return t;
}

}  // namespace

TEST_CASE("monomials and truncation") {
  CHECK(m("1.2.3", fin(2)).is_zero());
  CHECK(m("", fin(2)) == NCSymElement::one(fin(2)));
  CHECK(m("13.2", fin(3)).coefficient(SP("13.2")) == 1);
  CHECK(m("13.2").homogeneous_degree() == 3);
  CHECK_FALSE((m("1") + m("12")).homogeneous_degree().has_value());
  CHECK((m("1") + m("12") + m("1.2")).degree_component(2) == m("12") + m("1.2"));
  CHECK((m("12") + m("1.2")).shape_component(P("1,1")) == m("1.2"));
}

TEST_CASE("product examples") {
  NCSymElement seven = m("13.2.4.5") + m("134.2.5") + m("135.2.4") + m("13.24.5") + m("13.25.4") + m("135.24") +
                       m("134.25");
  CHECK(m("13.2") * m("1.2") == seven);
  CHECK(NCSymElement::monomial(W("121"), fin(3)) * NCSymElement::monomial(W("12"), fin(3)) ==
        word_sum({"12113", "12131", "12123", "12132", "12121", "12112"}, fin(3)));
  CHECK(m("13.2") * NCSymElement::one(kInf) == m("13.2"));
  CHECK_THROWS_AS(m("1", fin(2)) * m("1", fin(3)), AlphabetMismatch);
}

TEST_CASE("product matches explicit word expansion") {
  for (int k : {2, 3, 4})
    for (const auto& u : words_up_to(4, fin(static_cast<std::size_t>(k))))
      for (const auto& v : words_up_to(5 - static_cast<int>(u.size()), fin(static_cast<std::size_t>(k)))) {
        NCSymElement f = NCSymElement::monomial(u, fin(static_cast<std::size_t>(k)));
        NCSymElement g = NCSymElement::monomial(v, fin(static_cast<std::size_t>(k)));
        CHECK(f * g == oracle::word_product(f, g, k));
      }
}

TEST_CASE("product is graded and associative") {
  for (Alphabet n : {kInf, fin(2), fin(3)}) {
    auto words = words_up_to(4, n);
    for (const auto& u : words)
      for (const auto& v : words) {
        NCSymElement p = NCSymElement::monomial(u, n) * NCSymElement::monomial(v, n);
        if (!p.is_zero()) CHECK(p.homogeneous_degree() == static_cast<int>(u.size() + v.size()));
        if (u.size() + v.size() > 4) continue;
        for (const auto& w : words)
          if (u.size() + v.size() + w.size() <= 6) {
            NCSymElement a = NCSymElement::monomial(u, n), b = NCSymElement::monomial(v, n),
                         c = NCSymElement::monomial(w, n);
            CHECK((a * b) * c == a * (b * c));
          }
      }
  }
}

TEST_CASE("leading term of a product is the concatenation") {
  for (Alphabet n : {kInf, fin(2), fin(3)}) {
    auto words = words_up_to(5, n);
    for (const auto& u : words)
      for (const auto& v : words) {
        if (u.size() + v.size() > 5 || u.size() + v.size() == 0) continue;
        LeadingTerm lt = leading_term(NCSymElement::monomial(u, n) * NCSymElement::monomial(v, n));
        CHECK(lt.word == concat(u, v));
        CHECK(lt.coefficient == 1);
      }
  }
  CHECK(leading_term(m("13.2")).index() == SP("13.2"));
  CHECK_THROWS_AS(leading_term(NCSymElement(kInf)), PreconditionError);
  CHECK_THROWS_AS(leading_term(m("1") + m("12")), PreconditionError);
}

TEST_CASE("coproduct examples") {
  CHECK(coproduct(m("1")) == tensor({{{"1", ""}, 1}, {{"", "1"}, 1}}, kInf, 2));
  CHECK(coproduct(m("1.2")) == tensor({{{"1.2", ""}, 1}, {{"1", "1"}, 2}, {{"", "1.2"}, 1}}, kInf, 2));
  NCSymElement h = m("13.2") - m("12.3");
  Tensor expected = tensor_product({h, NCSymElement::one(kInf)}) + tensor_product({NCSymElement::one(kInf), h});
  CHECK(coproduct(h) == expected);
  CHECK(counit(NCSymElement::one(kInf)) == 1);
  CHECK(counit(m("13.2")) == 0);
}

TEST_CASE("coproduct against block subsets, coassociativity, counit") {
  for (Alphabet n : {kInf, fin(2)})
    for (const auto& u : words_up_to(6, n)) {
      NCSymElement f = NCSymElement::monomial(u, n);
      Tensor d = coproduct(f);
      CHECK(d == oracle::block_coproduct(from_rgword(u), n));
      CHECK(coproduct_at(d, 0) == coproduct_at(d, 1));
    }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    NCSymElement f = random_element(rng, trial % 3, kInf) + random_element(rng, 0, kInf);
    NCSymElement g = random_element(rng, trial % 2, kInf) + random_element(rng, 0, kInf);
    CHECK(counit(f * g) == counit(f) * counit(g));
  }
}

TEST_CASE("coproduct is multiplicative for the unbounded alphabet only") {
  for (const auto& u : words_up_to(5, kInf))
    for (const auto& v : words_up_to(5 - static_cast<int>(u.size()), kInf)) {
      NCSymElement f = NCSymElement::monomial(u, kInf), g = NCSymElement::monomial(v, kInf);
      CHECK(coproduct(f * g) == tensor_multiply(coproduct(f), coproduct(g)));
    }
  NCSymElement f = m("1", fin(2)), g = m("1.2", fin(2));
  CHECK(coproduct(f * g) != tensor_multiply(coproduct(f), coproduct(g)));
}

TEST_CASE("reduced coproduct and its iterates") {
  CHECK(reduced_coproduct(m("1.2")) == tensor({{{"1", "1"}, 2}}, kInf, 2));
  CHECK(reduced_coproduct(m("123")).is_zero());
  CHECK(iterate_reduced(m("1.2.3"), 3) == tensor({{{"1", "1", "1"}, 6}}, kInf, 3));
  CHECK(iterate_reduced(m("13.2"), 1) == tensor({{{"13.2"}, 1}}, kInf, 1));
  CHECK_THROWS_AS(reduced_coproduct(NCSymElement::one(kInf)), PreconditionError);

  // For l(A) = r the (r-1)-st iterate is the sum over orderings of the blocks.
  for (int d = 1; d <= 5; ++d)
    for (const auto& a : enumerate_setpartitions(d, kInf)) {
      Tensor expected(kInf, a.length());
      std::vector<std::size_t> order(a.length());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      do {
        Tensor::Key key;
        for (std::size_t i : order) key.push_back(to_rgword(standardize(SetPartition({a.blocks()[i]}))));
        expected.add_term(key, 1);
      } while (std::next_permutation(order.begin(), order.end()));
      CHECK(iterate_reduced(NCSymElement::monomial(a, kInf), a.length()) == expected);
    }
}

TEST_CASE("place action") {
  CHECK(place_act(m("13.2"), Permutation{2, 1, 3}) == m("1.23"));
  CHECK_THROWS_AS(place_act(m("13.2"), Permutation{2, 1}), PreconditionError);
  for (int d = 0; d <= 4; ++d) {
    auto perms = all_permutations(static_cast<std::size_t>(d));
    for (const auto& a : enumerate_setpartitions(d, kInf)) {
      NCSymElement f = NCSymElement::monomial(a, kInf);
      CHECK(place_act(f, Permutation::identity(static_cast<std::size_t>(d))) == f);
      std::set<SetPartition> orbit;
      for (const auto& rho : perms) {
        NCSymElement moved = place_act(f, rho);
        CHECK(moved == NCSymElement::monomial(oracle::permute_blocks(a, rho), kInf));
        orbit.insert(from_rgword(leading_term(moved).word));
        for (const auto& sigma : perms) CHECK(place_act(moved, sigma) == place_act(f, rho * sigma));
      }
      auto shape_class = setpartitions_of_shape(a.shape());
      CHECK(orbit == std::set<SetPartition>(shape_class.begin(), shape_class.end()));
    }
  }
}

TEST_CASE("invariants m_bold") {
  CHECK(m_bold(P("1,1"), kInf) == Rational(1, 2) * m("1.2"));
  CHECK(m_bold(P("1,1,1"), fin(2)).is_zero());
  CHECK(shape_dimension(P("2,2,2")) == 15);
  for (int d = 0; d <= 6; ++d)
    for (const auto& mu : enumerate_partitions(d))
      CHECK(shape_dimension(mu) == setpartitions_of_shape(mu).size());
  for (int d = 0; d <= 4; ++d)
    for (const auto& mu : enumerate_partitions(d)) {
      NCSymElement b = m_bold(mu, kInf);
      for (const auto& rho : all_permutations(static_cast<std::size_t>(d))) CHECK(place_act(b, rho) == b);
    }
}

TEST_CASE("abelianization and its splitting") {
  CHECK(abelianize(m("1.2")) == 2 * ms("1,1"));
  CHECK(abelianize(m("123")) == ms("3"));
  CHECK(iota(ms("2,1")) == m_bold(P("2,1"), kInf));
  for (Alphabet n : {kInf, fin(2), fin(3)})
    for (int d = 0; d <= 5; ++d)
      for (const auto& mu : enumerate_partitions(d)) {
        CHECK(abelianize(m_bold(mu, n)) == SymElement::monomial(mu, n));
      }
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    SymElement f(kInf);
    for (int d = 0; d <= 6; ++d)
      for (const auto& mu : enumerate_partitions(d)) f.add_term(mu, coeff(rng));
    CHECK(abelianize(iota(f)) == f);
  }
}

TEST_CASE("abelianization is a map of algebras and coalgebras") {
  for (const auto& u : words_up_to(5, kInf)) {
    NCSymElement f = NCSymElement::monomial(u, kInf);
    CHECK(abelianize(coproduct(f)) == coproduct(abelianize(f)));
    for (const auto& v : words_up_to(5 - static_cast<int>(u.size()), kInf)) {
      NCSymElement g = NCSymElement::monomial(v, kInf);
      CHECK(abelianize(f * g) == abelianize(f) * abelianize(g));
    }
  }
}

TEST_CASE("iota is a coalgebra map") {
  for (int d = 0; d <= 5; ++d)
    for (const auto& mu : enumerate_partitions(d)) {
      Tensor lifted(kInf, 2);
      for (const auto& [key, c] : coproduct(SymElement::monomial(mu, kInf))) {
        Tensor pair = tensor_product({m_bold(key.first, kInf), m_bold(key.second, kInf)});
        for (const auto& [k2, c2] : pair.terms()) lifted.add_term(k2, c * c2);
      }
      CHECK(coproduct(m_bold(mu, kInf)) == lifted);
    }
}

TEST_CASE("Lie bracket") {
  CHECK(lie_bracket(m("1"), m("1")).is_zero());
  NCSymElement b = lie_bracket(m("12"), m("1"));
  CHECK(b == m("12.3") - m("1.23"));
  CHECK(reduced_coproduct(b).is_zero());
  NCSymElement f = m("13.2") + 3 * m("1.2");
  CHECK(lie_bracket(f, f).is_zero());
}
