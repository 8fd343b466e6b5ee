#include <doctest.h>

#include "helpers.hpp"
#include "ncsym/error.hpp"
#include "ncsym/sym.hpp"

using namespace ncsym;
using testing::fin;
using testing::kInf;
using testing::ms;
using testing::P;

namespace {

std::vector<IntPartition> partitions_up_to(int d) {
  std::vector<IntPartition> out;
  for (int k = 0; k <= d; ++k)
    for (const auto& mu : enumerate_partitions(k)) out.push_back(mu);
  return out;
}

}  // namespace

TEST_CASE("elements") {
  CHECK(ms("1,1,1", fin(2)).is_zero());
  CHECK(ms("2,1", fin(2)).coefficient(P("2,1")) == 1);
  SymElement f = ms("2,1") + ms("1,1,1");
  CHECK(f.truncated(fin(2)) == ms("2,1", fin(2)));
  CHECK((f - f).is_zero());
}

TEST_CASE("product example") {
  for (Alphabet n : {fin(4), fin(6), kInf})
    CHECK(ms("2,1", n) * ms("1,1", n) ==
          3 * ms("2,1,1,1", n) + 2 * ms("2,2,1", n) + 2 * ms("3,1,1", n) + ms("3,2", n));
  CHECK(ms("2,1", fin(3)) * ms("1,1", fin(3)) == 2 * ms("2,2,1", fin(3)) + 2 * ms("3,1,1", fin(3)) + ms("3,2", fin(3)));
  CHECK(ms("2,1") * SymElement::one(kInf) == ms("2,1"));
  CHECK_THROWS_AS(ms("1", fin(2)) * ms("1", kInf), AlphabetMismatch);
}

TEST_CASE("expansion oracle") {
  Polynomial m11 = expand_oracle(ms("1,1"), 3);
  CHECK(m11 == Polynomial{{{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 1}});
  CHECK(expand_oracle(ms("1,1,1"), 2).empty());
  Polynomial p = multiply(expand_oracle(ms("2,1"), 5), expand_oracle(ms("1,1"), 5), 5);
  CHECK(collect_symmetric(p, 5, fin(5)) ==
        3 * ms("2,1,1,1", fin(5)) + 2 * ms("2,2,1", fin(5)) + 2 * ms("3,1,1", fin(5)) + ms("3,2", fin(5)));
  CHECK_THROWS_AS(collect_symmetric(Polynomial{{{1, 0}, 1}}, 2, fin(2)), InternalError);
}

TEST_CASE("product agrees with polynomial expansion") {
  const int k = 8;
  for (Alphabet n : {fin(3), kInf})
    for (const auto& lam : partitions_up_to(5))
      for (const auto& mu : partitions_up_to(5 - lam.weight())) {
        SymElement f = SymElement::monomial(lam, n), g = SymElement::monomial(mu, n);
        Polynomial p = multiply(expand_oracle(f, k), expand_oracle(g, k), k);
        CHECK(f * g == collect_symmetric(p, k, n));
      }
}

TEST_CASE("dominance filtration of products") {
  for (Alphabet n : {fin(2), fin(3), fin(4), kInf})
    for (const auto& lam : partitions_up_to(7))
      for (const auto& mu : partitions_up_to(7 - lam.weight())) {
        if (!n.admits(lam.length()) || !n.admits(mu.length())) continue;
        SymElement p = SymElement::monomial(lam, n) * SymElement::monomial(mu, n);
        IntPartition low = union_of(lam, mu), high = part_sum(lam, mu);
        for (const auto& [nu, c] : p.terms()) {
          CHECK(c > 0);
          CHECK(dominance_leq(low, nu));
        }
        CHECK(p.coefficient(high) != 0);
        CHECK((p.coefficient(low) != 0) == n.admits(lam.length() + mu.length()));
      }
}

TEST_CASE("coproduct") {
  auto pair = [](const char* a, const char* b) { return std::make_pair(P(a), P(b)); };
  CHECK(coproduct(ms("2")) == SymTensor{{pair("2", ""), 1}, {pair("", "2"), 1}});
  CHECK(coproduct(ms("1,1")) == SymTensor{{pair("1,1", ""), 1}, {pair("1", "1"), 1}, {pair("", "1,1"), 1}});
  CHECK(counit(SymElement::one(kInf)) == 1);
  CHECK(counit(ms("2")) == 0);
}
