#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "ncsym/error.hpp"
#include "ncsym/permutation.hpp"

using namespace ncsym;
using testing::P;

TEST_CASE("partitions are stored decreasing") {
  CHECK(IntPartition({1, 3, 2}).parts() == std::vector<int>{3, 2, 1});
  CHECK(P("1,2,2").weight() == 5);
  CHECK(P("").empty());
  CHECK(P("0").empty());
  CHECK_THROWS_AS(IntPartition({2, 0}), PreconditionError);
  CHECK_THROWS_AS(P("2,x"), ParseError);
  CHECK(to_string(P("1,3,2")) == "3,2,1");
  CHECK(to_string(IntPartition{}) == "");
  CHECK(P("2,2,1,1").multiplicities() == std::vector<int>{0, 2, 2});
}

TEST_CASE("order within a weight") {
  auto ps = enumerate_partitions(4);
  CHECK(std::is_sorted(ps.begin(), ps.end()));
  CHECK(P("4") < P("3,1"));
  CHECK(P("2,2") < P("2,1,1"));
  CHECK(P("1,1,1") < P("4"));
}

TEST_CASE("dominance") {
  CHECK(dominance_leq(P("2,1,1,1"), P("3,2")));
  CHECK(dominance_leq(P("3,2"), P("3,2")));
  CHECK_FALSE(dominance_leq(P("3,2"), P("2,1,1,1")));
  CHECK_THROWS_WITH_AS(dominance_leq(P("3"), P("2,2")), "incomparable weights", PreconditionError);
}

TEST_CASE("dominance is a partial order and union lies below part sum") {
  for (int d = 0; d <= 6; ++d) {
    auto ps = enumerate_partitions(d);
    for (const auto& a : ps)
      for (const auto& b : ps) {
        if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
        for (const auto& c : ps)
          if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
      }
  }
  for (int d = 0; d <= 6; ++d)
    for (int k = 0; k <= d; ++k)
      for (const auto& a : enumerate_partitions(k))
        for (const auto& b : enumerate_partitions(d - k)) CHECK(dominance_leq(union_of(a, b), part_sum(a, b)));
}

TEST_CASE("union and part sum") {
  CHECK(union_of(P("3,1"), P("2,2,1")) == P("3,2,2,1,1"));
  CHECK(union_of(P("2,1"), P("1,1")) == P("2,1,1,1"));
  CHECK(union_of(P("3,1"), P("")) == P("3,1"));
  CHECK(part_sum(P("3,1"), P("2,2,1")) == P("5,3,1"));
  CHECK(part_sum(P("2,1"), P("1,1")) == P("3,2"));
  CHECK(part_sum(P(""), P("4,2")) == P("4,2"));
  for (const auto& a : enumerate_partitions(4))
    for (const auto& b : enumerate_partitions(3)) {
      CHECK(union_of(a, b) == union_of(b, a));
      CHECK(part_sum(a, b) == part_sum(b, a));
      CHECK(part_sum(part_sum(a, b), P("2,1")) == part_sum(a, part_sum(b, P("2,1"))));
    }
}

TEST_CASE("multiplicity factorials and centralizers") {
  CHECK(mu_factorial(P("1,1")) == 2);
  CHECK(mu_factorial(P("2,2,2")) == 6);
  CHECK(mu_factorial(P("")) == 1);
  CHECK(z_constant(P("2,1")) == 2);
  CHECK(z_constant(P("1")) == 1);
  CHECK(z_constant(P("2")) == 2);
  CHECK(z_constant(P("1,1,1")) == 6);
}

TEST_CASE("class sizes d!/z_mu add up to d!") {
  for (int d = 0; d <= 7; ++d) {
    auto perms = all_permutations(static_cast<std::size_t>(d));
    std::map<IntPartition, std::uint64_t> classes;
    for (const auto& s : perms) ++classes[cycle_type(s)];
    std::uint64_t total = 0;
    for (const auto& mu : enumerate_partitions(d)) {
      std::uint64_t size = perms.size() / z_constant(mu);
      CHECK(classes[mu] == size);
      total += size;
    }
    CHECK(total == perms.size());
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate_partitions(4) == std::vector<IntPartition>{P("4"), P("3,1"), P("2,2"), P("2,1,1"), P("1,1,1,1")});
  CHECK(enumerate_partitions(4, 2) == std::vector<IntPartition>{P("4"), P("3,1"), P("2,2")});
  CHECK(enumerate_partitions(0) == std::vector<IntPartition>{IntPartition{}});
  const std::size_t p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int d = 0; d <= 8; ++d) CHECK(enumerate_partitions(d).size() == p[d]);
}

TEST_CASE("permutations") {
  Permutation id = Permutation::identity(3);
  CHECK(cycle_type(id) == P("1,1,1"));
  Permutation r = representative_of_type(P("2,1"));
  CHECK(r.images() == std::vector<int>{2, 1, 3});
  for (int d = 0; d <= 6; ++d)
    for (const auto& mu : enumerate_partitions(d)) CHECK(cycle_type(representative_of_type(mu)) == mu);

  Permutation a{2, 3, 1}, b{2, 1, 3};
  CHECK((a * b)(1) == a(b(1)));
  CHECK((a * a.inverse()) == id);
  CHECK(parse_permutation(to_string(a)) == a);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), PreconditionError);
  CHECK_THROWS_AS(parse_permutation("1,3"), ParseError);
  CHECK(all_permutations(4).size() == 24);
  auto all = all_permutations(4);
  std::set<std::vector<int>> distinct;
  for (const auto& s : all) distinct.insert(s.images());
  CHECK(distinct.size() == 24);
}
