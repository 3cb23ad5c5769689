#include <map>
#include <set>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "overlap_auto/phi.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"
#include "support/phi_words.hpp"

using namespace overlap_auto;


TEST_CASE("build_phi_alphabet", "[phi]") {
  fixtures::PhiExample e;
  CHECK(e.phi.size() == 12);
  std::vector<std::string> got;
  for (auto x : e.phi.letters()) {
    got.push_back(e.p.to_string(e.phi.word(x)));
  }
  CHECK(got
        == std::vector<std::string>{
            "a", "b", "c", "ab", "ba", "bc", "cb", "cc", "abc", "bcc", "cba",
            "abcc"});
  std::set<word_type> b(e.phi.b_set().begin(), e.phi.b_set().end());
  CHECK(b == brute::subwords(e.p));

  // Construction does not depend on the small overlap conditions.
  auto q = parse_presentation("generators: a\nrelation: aa = a");
  CHECK(PhiAlphabet(q).size() == 2);
}

TEST_CASE("eta", "[phi]") {
  fixtures::PhiExample e;
  CHECK(e.p.to_string(e.phi.eta(e("[ba][bcc]"))) == "babcc");
  CHECK(e.phi.eta(phi_word{}).empty());
  CHECK(e.p.to_string(e.phi.eta(e("[abcc]"))) == "abcc");
  CHECK(e.str(e(" [ba] [bcc] ")) == "[ba][bcc]");
  CHECK_THROWS_AS(e("[bb]"), Error);
  CHECK_THROWS_AS(e("[ba"), Error);
  CHECK_THROWS_AS(e("ba"), Error);
}

TEST_CASE("complement", "[phi]") {
  fixtures::PhiExample e;
  CHECK(e.p.to_string(complement(e.p, e.p.parse_word("abcc"))) == "cba");
  CHECK(e.p.to_string(complement(e.p, e.p.parse_word("cba"))) == "abcc");
  CHECK_THROWS_AS(complement(e.p, e.p.parse_word("abc")), Error);
}

TEST_CASE("is_admissible and merge_non_admissible", "[phi]") {
  fixtures::PhiExample e;
  CHECK(!is_admissible(e.phi, e("[ab][cc]")));
  CHECK(is_admissible(e.phi, e("[ba][bcc]")));
  CHECK(is_admissible(e.phi, e("[abcc]")));
  CHECK(e.str(merge_non_admissible(e.phi, e("[ab][cc]"))) == "[abcc]");
  CHECK(e.str(merge_non_admissible(e.phi, e("[a][bc][c]"))) == "[abc][c]");
  CHECK_THROWS_AS(merge_non_admissible(e.phi, e("[abcc]")), Error);
}

TEST_CASE("merging preserves eta and terminates", "[phi][property]") {
  fixtures::PhiExample e;
  auto    b = brute::subwords(e.p);
  for (auto const& a : fixtures::all_phi_words(e.phi, 4)) {
    CHECK(is_admissible(e.phi, a) == brute::admissible(b, e.phi.images(a)));
    auto c = a;
    while (!is_admissible(e.phi, c)) {
      auto d = merge_non_admissible(e.phi, c);
      CHECK(d.size() + 1 == c.size());
      CHECK(e.phi.eta(d) == e.phi.eta(a));
      c = d;
    }
  }
}

TEST_CASE("is_left_greedy and left_greedy_normalize", "[phi]") {
  fixtures::PhiExample e;
  CHECK(!is_left_greedy(e.phi, e("[b][cba]")));
  CHECK(is_left_greedy(e.phi, e("[bc][ba]")));
  CHECK(is_left_greedy(e.phi, e("[cba]")));
  CHECK(e.str(left_greedy_normalize(e.phi, e("[b][cba]"))) == "[bc][ba]");
  CHECK(e.str(left_greedy_normalize(e.phi, e("[ab][cc]"))) == "[abcc]");
  CHECK(e.str(left_greedy_normalize(e.phi, e("[abcc]"))) == "[abcc]");
}

TEST_CASE("is_semi_geodesic", "[phi]") {
  fixtures::PhiExample e;
  CHECK(is_semi_geodesic(e.phi, e("[b][cba]")));
  CHECK(!is_semi_geodesic(e.phi, e("[a][b][cc]")));
  for (auto x : e.phi.letters()) {
    CHECK(is_semi_geodesic(e.phi, phi_word{x}));
  }
}

TEST_CASE("left-greedy representatives are unique and shortest",
          "[phi][property]") {
  fixtures::PhiExample e;
  auto    b = brute::subwords(e.p);
  for (auto const& w : brute::words_up_to(3, 7)) {
    auto        all        = brute::splits(b, w);
    std::size_t shortest   = SIZE_MAX;
    std::size_t greedy     = 0;
    brute::split the_greedy;
    for (auto const& s : all) {
      shortest = std::min(shortest, s.size());
      if (brute::left_greedy(b, s)) {
        ++greedy;
        the_greedy = s;
      }
    }
    REQUIRE(!all.empty());
    CHECK(greedy == 1);
    auto lg = left_greedy(e.phi, w);
    CHECK(e.phi.images(lg) == the_greedy);
    CHECK(lg.size() == shortest);
    CHECK(is_left_greedy(e.phi, lg));
    CHECK(left_greedy_normalize(e.phi, lg) == lg);
    CHECK(decompositions(e.phi, w).size() == all.size());
  }
}

TEST_CASE("is_semi_geodesic agrees with enumeration", "[phi][property]") {
  fixtures::PhiExample e;
  auto    b = brute::subwords(e.p);
  std::map<word_type, std::size_t> shortest;
  for (auto const& a : fixtures::all_phi_words(e.phi, 3)) {
    auto w  = e.phi.eta(a);
    auto it = shortest.find(w);
    if (it == shortest.end()) {
      std::size_t m = SIZE_MAX;
      for (auto const& s : brute::splits(b, w)) {
        m = std::min(m, s.size());
      }
      it = shortest.emplace(w, m).first;
    }
    CHECK(is_semi_geodesic(e.phi, a) == (a.size() == it->second));
  }
}
