#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "ncsym/error.hpp"

using namespace ncsym;
using testing::fin;
using testing::kInf;
using testing::P;
using testing::SP;
using testing::W;

namespace {

std::vector<SetPartition> parts(std::initializer_list<const char*> list) {
  std::vector<SetPartition> out;
  for (const char* s : list) out.push_back(SP(s));
  return out;
}

}  // namespace

TEST_CASE("text forms") {
  CHECK(SP("13.2") == SP("1,3/2"));
  CHECK(to_string(SP("13.2")) == "1,3/2");
  CHECK(SP("2/3,1") == SP("1,3/2"));
  CHECK(SP("").empty());
  CHECK(to_string(SP("1,10/2,3,4,5,6,7,8,9")) == "1,10/2,3,4,5,6,7,8,9");
  CHECK_THROWS_AS(SP("1,2/2"), ParseError);
  CHECK_THROWS_AS(SP("1,a"), ParseError);
  CHECK(W("121") == W("1,2,1"));
  CHECK(to_string(W("121")) == "1,2,1");
  CHECK_THROWS_AS(W("13"), ParseError);
  CHECK_THROWS_AS(W("21"), ParseError);
}

TEST_CASE("shape and length") {
  CHECK(SP("13.2").shape() == P("2,1"));
  CHECK(SP("13.2").length() == 2);
  CHECK(SP("17.235.4.68").shape() == P("3,2,2,1"));
  CHECK(SP("17.235.4.68").length() == 4);
  CHECK(SP("").shape() == P(""));
  CHECK(SP("").length() == 0);
}

TEST_CASE("shift and standardize") {
  CHECK(shift(SP("1.2"), 3) == SP("4.5"));
  CHECK(shift(SP("13.2"), 0) == SP("13.2"));
  CHECK(standardize(SP("18.4")) == SP("13.2"));
  CHECK(standardize(SP("18.4.67")) == SP("15.2.34"));
  for (const auto& a : enumerate_setpartitions(4, kInf)) {
    CHECK(standardize(a) == a);
    CHECK(standardize(shift(a, 5)) == a);
    CHECK(shift(a, 2).shape() == a.shape());
  }
}

TEST_CASE("quasi-shuffle") {
  auto product = quasi_shuffle(SP("13.2"), SP("1.2"));
  auto expected = parts({"13.2.4.5", "134.2.5", "135.2.4", "13.24.5", "13.25.4", "135.24", "134.25"});
  CHECK(std::set<SetPartition>(product.begin(), product.end()) ==
        std::set<SetPartition>(expected.begin(), expected.end()));
  CHECK(product.size() == 7);
  CHECK(quasi_shuffle(SP("13.2"), SP("")) == parts({"13.2"}));
  CHECK(quasi_shuffle(SP(""), SP("13.2")) == parts({"13.2"}));
  CHECK(quasi_shuffle(SP("1.2"), SP("1.2")).size() == 7);
}

TEST_CASE("quasi-shuffles are distinct and bounded by union and part sum") {
  for (int c = 0; c <= 4; ++c)
    for (int d = 0; c + d <= 7 && d <= 4; ++d)
      for (const auto& a : enumerate_setpartitions(c, kInf))
        for (const auto& b : enumerate_setpartitions(d, kInf)) {
          auto q = quasi_shuffle(a, b);
          std::set<SetPartition> distinct(q.begin(), q.end());
          CHECK(distinct.size() == q.size());
          IntPartition low = union_of(a.shape(), b.shape()), high = part_sum(a.shape(), b.shape());
          bool has_low = false, has_high = false;
          for (const auto& x : q) {
            CHECK(x.is_standard());
            CHECK(x.size() == c + d);
            CHECK(dominance_leq(low, x.shape()));
            CHECK(dominance_leq(x.shape(), high));
            has_low = has_low || x.shape() == low;
            has_high = has_high || x.shape() == high;
          }
          CHECK(has_low);
          CHECK(has_high);
        }
}

TEST_CASE("words of set partitions") {
  CHECK(to_rgword(SP("13.2")) == W("121"));
  CHECK(to_rgword(SP("17.235.4.68")) == W("12232414"));
  CHECK(from_rgword(W("12232414")) == SP("17.235.4.68"));
  CHECK_THROWS_AS(to_rgword(SP("18.4")), PreconditionError);
  for (int d = 0; d <= 7; ++d) {
    auto all = enumerate_setpartitions(d, kInf);
    for (const auto& a : all) CHECK(from_rgword(to_rgword(a)) == a);
    for (const auto& w : enumerate_rgwords(d, kInf)) CHECK(to_rgword(from_rgword(w)) == w);
    CHECK(enumerate_rgwords(d, kInf).size() == all.size());
  }
}

TEST_CASE("convex words") {
  CHECK(convex_word(P("3,2,2,1")) == W("11122334"));
  CHECK(convex_word(P("")).empty());
  CHECK(is_convex(W("11122334")));
  CHECK_FALSE(is_convex(W("122")));
  CHECK(is_convex(RGWord{}));
  CHECK_FALSE(is_convex(W("121")));
  for (int d = 0; d <= 6; ++d)
    for (const auto& mu : enumerate_partitions(d)) {
      auto shapes = setpartitions_of_shape(mu);
      std::vector<RGWord> words;
      for (const auto& a : shapes) words.push_back(to_rgword(a));
      CHECK(*std::min_element(words.begin(), words.end()) == convex_word(mu));
      CHECK(word_shape(convex_word(mu)) == mu);
    }
}

TEST_CASE("atomic splitting") {
  CHECK(is_atomic(SP("17.235.4.68")));
  CHECK_FALSE(is_atomic(SP("12.346.57.8")));
  CHECK(atomic_splitting(SP("12.346.57.8")) == parts({"12", "124.35", "1"}));
  CHECK(atomic_splitting(SP("1.2")) == parts({"1", "1"}));
  CHECK_FALSE(is_atomic(SP("")));
  CHECK(is_atomic(SP("13.2")));
  CHECK_FALSE(is_atomic(SP("12.3")));
  for (int d = 1; d <= 6; ++d)
    for (const auto& a : enumerate_setpartitions(d, kInf)) {
      auto factors = atomic_splitting(a);
      SetPartition back;
      for (const auto& f : factors) {
        CHECK(is_atomic(f));
        back = splice(back, f);
      }
      CHECK(back == a);
      CHECK((factors.size() == 1) == is_atomic(a));
    }
}

TEST_CASE("primary words") {
  CHECK(is_primary(W("12314")));
  CHECK_FALSE(is_primary(W("11232411")));
  CHECK(primary_splitting(W("11232411")) == std::vector<RGWord>{W("1"), W("12324"), W("1"), W("1")});
  CHECK(primary_splitting(W("1122212")) == std::vector<RGWord>{W("1"), W("1222"), W("12")});
  for (int d = 1; d <= 6; ++d)
    for (const auto& w : enumerate_rgwords(d, kInf)) {
      auto factors = primary_splitting(w);
      CHECK(concat(factors) == w);
      for (const auto& f : factors) CHECK(is_primary(f));
    }
}

TEST_CASE("bimodal decomposition") {
  auto a = bimodal_decompose(W("1122212"));
  CHECK(a.factors == std::vector<RGWord>{W("11222")});
  CHECK(a.tail == W("12"));
  auto b = bimodal_decompose(parse_rgword("1,2,3,1,2,3,1,4,1,1,1,2,2,3,1,1"));
  CHECK(b.factors == std::vector<RGWord>{parse_rgword("1,2,3,1,2,3,1,4"), parse_rgword("1,1,1,2,2,3,1")});
  CHECK(b.tail == W("1"));
  auto c = bimodal_decompose(convex_word(P("3,2,2")));
  CHECK(c.factors.empty());
  CHECK(c.tail == convex_word(P("3,2,2")));
  CHECK(is_bimodal(W("121")));
  CHECK(is_bimodal(W("122")));
  CHECK_FALSE(is_bimodal(W("12")));
  CHECK_FALSE(is_bimodal(W("112")));
  CHECK(is_tail_free(RGWord{}));
  for (int d = 0; d <= 7; ++d)
    for (const auto& w : enumerate_rgwords(d, kInf)) {
      auto dec = bimodal_decompose(w);
      CHECK(concat(concat(dec.factors), dec.tail) == w);
      CHECK(is_convex(dec.tail));
      for (const auto& f : dec.factors) CHECK(is_bimodal(f));
    }
}

TEST_CASE("tail-free counts") {
  std::size_t count4 = 0;
  for (const auto& w : enumerate_rgwords(4, kInf)) count4 += is_tail_free(w);
  CHECK(count4 == 8);
  std::vector<RGWord> three;
  for (const auto& w : enumerate_rgwords(3, kInf))
    if (is_tail_free(w)) three.push_back(w);
  CHECK(three == std::vector<RGWord>{W("121"), W("122")});
}

TEST_CASE("tail-free words times convex tails give every word once") {
  for (Alphabet n : {fin(2), fin(3), fin(4), kInf})
    for (int d = 0; d <= 8; ++d) {
      std::multiset<RGWord> built;
      for (int c = 0; c <= d; ++c)
        for (const auto& u : enumerate_rgwords(c, n)) {
          if (!is_tail_free(u)) continue;
          for (const auto& mu : enumerate_partitions(d - c)) {
            RGWord t = convex_word(mu);
            if (!n.admits(static_cast<std::size_t>(std::max(u.max_letter(), t.max_letter())))) continue;
            RGWord ut = concat(u, t);
            auto dec = bimodal_decompose(ut);
            CHECK(concat(dec.factors) == u);
            CHECK(dec.tail == t);
            built.insert(ut);
          }
        }
      auto all = enumerate_rgwords(d, n);
      CHECK(built.size() == all.size());
      CHECK(std::set<RGWord>(built.begin(), built.end()) == std::set<RGWord>(all.begin(), all.end()));
    }
}

TEST_CASE("enumeration and restricted Bell numbers") {
  CHECK(bell_restricted(3, kInf) == 5);
  CHECK(bell_restricted(3, fin(2)) == 4);
  CHECK(bell_restricted(0, fin(1)) == 1);
  CHECK(enumerate_setpartitions(3, fin(2)) == parts({"123", "12.3", "13.2", "1.23"}));
  for (Alphabet n : {fin(1), fin(2), fin(3), kInf})
    for (int d = 0; d <= 7; ++d) {
      auto all = enumerate_setpartitions(d, n);
      CHECK(all.size() == bell_restricted(d, n));
      for (const auto& a : all) CHECK(n.admits(a.length()));
    }
  CHECK(setpartitions_of_shape(P("2,2,2")).size() == 15);
}

TEST_CASE("length plus lexicographic order") {
  CHECK(prec_compare(W("121"), W("1211")) < 0);
  CHECK(prec_compare(W("12113"), W("12121")) < 0);
  CHECK(prec_compare(W("12"), W("12")) == 0);
  std::vector<RGWord> words;
  for (int d = 0; d <= 5; ++d)
    for (const auto& w : enumerate_rgwords(d, kInf)) words.push_back(w);
  for (std::size_t i = 1; i < words.size(); ++i) CHECK(prec_compare(words[i - 1], words[i]) < 0);
}
