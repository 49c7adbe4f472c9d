#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dlab/coxeter.hpp"
#include "dlab/errors.hpp"
#include "oracles.hpp"

using namespace dlab;

namespace {

GroupElement word_prod(const CoxeterSystem& sys, std::initializer_list<int> gens) {
  GroupElement w = sys.identity();
  for (int s : gens) w = w.mul_gen(s, Side::right);
  return w;
}

std::vector<GroupElement> all_elements(const CoxeterSystem& sys, int max_len) {
  std::vector<GroupElement> out;
  for (const auto& stratum : enumerate_elements(sys, max_len))
    out.insert(out.end(), stratum.begin(), stratum.end());
  return out;
}

}  // namespace

TEST_CASE("descriptor grammar") {
  CHECK(CoxeterSystem::from_descriptor("A3").rank() == 3);
  CHECK(CoxeterSystem::from_descriptor("B2").rank() == 2);
  CHECK(CoxeterSystem::from_descriptor("C3").rank() == 3);
  CHECK(CoxeterSystem::from_descriptor("D4").rank() == 4);
  CHECK(CoxeterSystem::from_descriptor("G2").rank() == 2);
  CHECK(CoxeterSystem::from_descriptor("F4").rank() == 4);
  CHECK(CoxeterSystem::from_descriptor("E6").rank() == 6);
  CHECK(CoxeterSystem::from_descriptor("At2").rank() == 3);
  CHECK(CoxeterSystem::from_descriptor("At1").rank() == 2);
  CHECK(CoxeterSystem::from_descriptor("I2(7)").is_dihedral());
  CHECK(CoxeterSystem::from_descriptor("I2(inf)").dihedral_order() == 0);
  CHECK(CoxeterSystem::from_descriptor("U3").is_universal());

  CHECK_THROWS_AS(CoxeterSystem::from_descriptor(""), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterSystem::from_descriptor("A0"), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterSystem::from_descriptor("I2(1)"), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterSystem::from_descriptor("I2(x)"), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterSystem::from_descriptor("U0"), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterSystem::from_descriptor("Z5"), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterSystem::from_descriptor("Bt3"), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterSystem::from_descriptor("E9"), std::invalid_argument);
}

TEST_CASE("generator multiplication basics") {
  for (const char* desc : {"A2", "I2(3)", "U2"}) {
    CAPTURE(desc);
    auto sys = CoxeterSystem::from_descriptor(desc);
    GroupElement e = sys.identity();
    GroupElement s = e.mul_gen(0, Side::right);
    CHECK(s.length() == 1);
    CHECK(s == sys.generator(0));
    CHECK(s.mul_gen(0, Side::right) == e);
    CHECK(s.mul_gen(0, Side::right).length() == 0);
  }
}

TEST_CASE("A2 braid relation via canonical forms") {
  auto sys = CoxeterSystem::from_descriptor("A2");
  GroupElement a = word_prod(sys, {0, 1, 0});
  GroupElement b = word_prod(sys, {1, 0, 1});
  CHECK(a == b);
  CHECK(a.length() == 3);
}

TEST_CASE("dihedral braid relation and longest element") {
  for (int m : {2, 3, 4, 5, 6, 7, 8}) {
    CAPTURE(m);
    auto sys = CoxeterSystem::dihedral(m);
    GroupElement a = sys.identity(), b = sys.identity();
    for (int i = 0; i < m; ++i) {
      a = a.mul_gen(i % 2, Side::right);
      b = b.mul_gen(1 - i % 2, Side::right);
    }
    CHECK(a == b);
    CHECK(a.length() == m);
    CHECK(a.inverse() == a);
    // one step beyond the top goes down
    CHECK(a.mul_gen(0, Side::right).length() == m - 1);
    CHECK(a.mul_gen(1, Side::right).length() == m - 1);
    CHECK(a.mul_gen(0, Side::right).mul_gen(0, Side::right) == a);
  }
}

TEST_CASE("lengths and descents against the BFS oracle") {
  for (const char* desc : {"A2", "A3", "B2", "I2(4)", "I2(5)", "U2", "At1"}) {
    CAPTURE(desc);
    auto sys = CoxeterSystem::from_descriptor(desc);
    int L = sys.is_crystallographic() && sys.rank() == 3 ? 6 : 5;
    auto dist = oracle::bfs_lengths(sys, L);
    for (const auto& [w, d] : dist) {
      CHECK(w.length() == d);
      if (d == L) continue;  // neighbours beyond the horizon unknown
      for (int s = 0; s < sys.rank(); ++s) {
        GroupElement ws = w.mul_gen(s, Side::right);
        GroupElement sw = w.mul_gen(s, Side::left);
        CHECK(w.is_right_descent(s) == (dist.at(ws) < d));
        CHECK(w.is_left_descent(s) == (dist.at(sw) < d));
      }
    }
  }
}

TEST_CASE("frozen descent examples in A2") {
  auto sys = CoxeterSystem::from_descriptor("A2");
  GroupElement e = sys.identity();
  CHECK(e.length() == 0);
  CHECK(e.right_descents().empty());
  CHECK(e.left_descents().empty());

  GroupElement w0 = word_prod(sys, {0, 1, 0});
  CHECK(w0.length() == 3);
  CHECK(w0.right_descents() == std::vector<int>{0, 1});
  CHECK(w0.left_descents() == std::vector<int>{0, 1});

  GroupElement s12 = word_prod(sys, {0, 1});
  CHECK(s12.length() == 2);
  CHECK(s12.left_descents() == std::vector<int>{0});
  CHECK(s12.right_descents() == std::vector<int>{1});
}

TEST_CASE("length and descent symmetry under inverse") {
  for (const char* desc : {"A3", "I2(6)", "U3", "At2"}) {
    CAPTURE(desc);
    auto sys = CoxeterSystem::from_descriptor(desc);
    for (const auto& w : all_elements(sys, 4)) {
      GroupElement wi = w.inverse();
      CHECK(w.length() == wi.length());
      CHECK(w.left_descents() == wi.right_descents());
      CHECK(w.inverse().inverse() == w);
      for (int s = 0; s < sys.rank(); ++s) {
        int d = w.mul_gen(s, Side::right).length() - w.length();
        CHECK((d == 1 || d == -1));
      }
    }
  }
}

TEST_CASE("multiplication is a group action on canonical forms") {
  // (w s) s = w and left/right commute: s (w t) = (s w) t
  for (const char* desc : {"A3", "I2(5)", "U2", "At1"}) {
    CAPTURE(desc);
    auto sys = CoxeterSystem::from_descriptor(desc);
    for (const auto& w : all_elements(sys, 4))
      for (int s = 0; s < sys.rank(); ++s) {
        CHECK(w.mul_gen(s, Side::right).mul_gen(s, Side::right) == w);
        CHECK(w.mul_gen(s, Side::left).mul_gen(s, Side::left) == w);
        for (int t = 0; t < sys.rank(); ++t)
          CHECK(w.mul_gen(t, Side::right).mul_gen(s, Side::left) ==
                w.mul_gen(s, Side::left).mul_gen(t, Side::right));
      }
  }
}

TEST_CASE("Bruhat order: frozen examples") {
  auto sys = CoxeterSystem::from_descriptor("A2");
  GroupElement e = sys.identity();
  GroupElement s1 = sys.generator(0);
  GroupElement s12 = word_prod(sys, {0, 1});
  GroupElement s21 = word_prod(sys, {1, 0});
  for (const auto& w : all_elements(sys, 3)) CHECK(bruhat_leq(e, w));
  CHECK(bruhat_leq(s1, s12));
  CHECK_FALSE(bruhat_leq(s12, s21));
  CHECK_FALSE(bruhat_leq(s21, s12));
}

TEST_CASE("Bruhat order agrees with the subword oracle") {
  for (const char* desc : {"A2", "A3", "I2(5)", "I2(8)", "U2"}) {
    CAPTURE(desc);
    auto sys = CoxeterSystem::from_descriptor(desc);
    auto elems = all_elements(sys, 6);
    for (const auto& x : elems)
      for (const auto& y : elems) {
        bool lib = bruhat_leq(x, y);
        CHECK(lib == oracle::bruhat_leq_subword(x, y));
        if (lib) {
          CHECK(x.length() <= y.length());
          if (x.length() == y.length()) CHECK(x == y);
        }
      }
  }
}

TEST_CASE("enumerate_elements strata") {
  auto a2 = enumerate_elements(CoxeterSystem::from_descriptor("A2"), 3);
  REQUIRE(a2.size() == 4);
  CHECK(a2[0].size() == 1);
  CHECK(a2[1].size() == 2);
  CHECK(a2[2].size() == 2);
  CHECK(a2[3].size() == 1);

  auto u2 = enumerate_elements(CoxeterSystem::universal(2), 3);
  CHECK(u2[0].size() == 1);
  CHECK(u2[1].size() == 2);
  CHECK(u2[2].size() == 2);
  CHECK(u2[3].size() == 2);

  auto i24 = enumerate_elements(CoxeterSystem::from_descriptor("I2(4)"), 4);
  std::size_t total = 0;
  for (const auto& st : i24) total += st.size();
  CHECK(total == 8);
  // nothing above the longest element
  auto more = enumerate_elements(CoxeterSystem::from_descriptor("I2(4)"), 6);
  CHECK(more[5].empty());
  CHECK(more[6].empty());

  auto s4 = enumerate_elements(CoxeterSystem::from_descriptor("A3"), 6);
  std::vector<std::size_t> profile;
  for (const auto& st : s4) profile.push_back(st.size());
  CHECK(profile == std::vector<std::size_t>{1, 3, 5, 6, 5, 3, 1});

  CHECK_THROWS_AS(enumerate_elements(CoxeterSystem::from_descriptor("A3"), 6, 10),
                  resource_limit_error);
}

TEST_CASE("affine group grows without bound") {
  auto sys = CoxeterSystem::from_descriptor("At2");
  auto strata = enumerate_elements(sys, 6);
  for (int k = 1; k <= 6; ++k) CHECK(strata[static_cast<std::size_t>(k)].size() > 0);
  // affine A1 stratum sizes are 1,2,2,2,...
  auto a1 = enumerate_elements(CoxeterSystem::from_descriptor("At1"), 5);
  for (int k = 1; k <= 5; ++k) CHECK(a1[static_cast<std::size_t>(k)].size() == 2);
}

TEST_CASE("reduced words") {
  auto sys = CoxeterSystem::from_descriptor("A2");
  CHECK(reduced_words(sys.identity()) ==
        std::vector<std::vector<int>>{{}});

  GroupElement w0 = word_prod(sys, {0, 1, 0});
  auto words = reduced_words(w0);
  std::set<std::vector<int>> got(words.begin(), words.end());
  CHECK(got == std::set<std::vector<int>>{{0, 1, 0}, {1, 0, 1}});
  CHECK(got == oracle::reduced_words_brute(w0));

  GroupElement s12 = word_prod(sys, {0, 1});
  CHECK(reduced_words(s12) == std::vector<std::vector<int>>{{0, 1}});

  CHECK_THROWS_AS(reduced_words(w0, 1), resource_limit_error);
}

TEST_CASE("every reduced word re-multiplies to its element") {
  for (const char* desc : {"A3", "I2(5)", "At1"}) {
    CAPTURE(desc);
    auto sys = CoxeterSystem::from_descriptor(desc);
    for (const auto& w : all_elements(sys, 5)) {
      auto words = reduced_words(w);
      std::set<std::vector<int>> unique(words.begin(), words.end());
      CHECK(unique.size() == words.size());
      CHECK(unique == oracle::reduced_words_brute(w));
      for (const auto& word : words) {
        CHECK(static_cast<int>(word.size()) == w.length());
        GroupElement u = sys.identity();
        for (int s : word) u = u.mul_gen(s, Side::right);
        CHECK(u == w);
      }
    }
  }
}

TEST_CASE("element serialization") {
  auto sys = CoxeterSystem::from_descriptor("A3");
  CHECK(sys.identity().to_string() == "e");
  CHECK(parse_element(sys, "e") == sys.identity());
  GroupElement w = parse_element(sys, "2 1 3 2");
  CHECK(w.length() == 4);
  CHECK(parse_element(sys, w.to_string()) == w);
  for (const auto& u : all_elements(sys, 6))
    CHECK(parse_element(sys, u.to_string()) == u);

  CHECK_THROWS_AS(parse_element(sys, ""), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(sys, "0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(sys, "4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(sys, "1 x"), std::invalid_argument);
}

TEST_CASE("universal and I2(inf) rank-2 groups agree") {
  auto u2 = CoxeterSystem::universal(2);
  auto i2 = CoxeterSystem::dihedral(0);
  auto su = enumerate_elements(u2, 6);
  auto si = enumerate_elements(i2, 6);
  for (std::size_t k = 0; k < su.size(); ++k) CHECK(su[k].size() == si[k].size());
}
