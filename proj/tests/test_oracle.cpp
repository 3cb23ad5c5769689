#include <random>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "overlap_auto/oracle.hpp"
#include "overlap_auto/phi.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace overlap_auto;

TEST_CASE("build_semigroup_oracle", "[oracle]") {
  auto p  = fixtures::example();
  auto rs = build_semigroup_oracle(p);
  REQUIRE(rs.rules().size() == 1);
  CHECK(p.to_string(rs.rules()[0].lhs) == "abcc");
  CHECK(p.to_string(rs.rules()[0].rhs) == "cba");
  CHECK(rs.confluent());
  CHECK(rs.critical_overlaps().empty());

  // With a < b the shortlex larger side is ba.
  auto q   = parse_presentation("generators: a b\nrelation: ab = ba");
  auto rsq = build_semigroup_oracle(q);
  REQUIRE(rsq.rules().size() == 1);
  CHECK(q.to_string(rsq.rules()[0].lhs) == "ba");
  CHECK(q.to_string(rsq.rules()[0].rhs) == "ab");
  CHECK(rsq.confluent());

  CHECK_THROWS_AS(
      build_semigroup_oracle(parse_presentation("generators: a\nrelation: aa = aa")),
      Error);
}

TEST_CASE("sgp_equal and normal_form", "[oracle]") {
  auto   p = fixtures::example();
  Oracle o(p);
  auto   w = [&p](char const* s) { return p.parse_word(s); };
  CHECK(o.sgp_equal(w("abcc"), w("cba")) == tril::TRUE);
  CHECK(o.sgp_equal(w("abcabcc"), w("cbaba")) == tril::TRUE);
  CHECK(o.sgp_equal(w("abc"), w("cba")) == tril::FALSE);
  CHECK(p.to_string(o.normal_form(w("abcc"))) == "cba");
  CHECK(p.to_string(o.normal_form(w("babcc"))) == "bcba");
  CHECK(p.to_string(o.normal_form(w("abc"))) == "abc");
  for (auto const& u : brute::words_up_to(3, 6)) {
    auto nf = o.normal_form(u);
    CHECK(o.normal_form(nf) == nf);
  }
}

TEST_CASE("sgp_equal agrees with brute force", "[oracle][property]") {
  auto   p = fixtures::example();
  Oracle o(p);
  auto   words = brute::words_up_to(3, 5);
  for (auto const& u : words) {
    auto cls = brute::class_of(p, u, u.size() + 4);
    for (auto const& v : words) {
      CHECK((o.sgp_equal(u, v) == tril::TRUE) == (cls.count(v) != 0));
    }
  }
}

TEST_CASE("sgp_equal is an equivalence relation", "[oracle][property]") {
  auto   p = fixtures::example();
  Oracle o(p);
  auto   words = brute::words_up_to(3, 7);
  // Transitivity via classes: every member of the enumerated class of u has
  // the normal form of u, and the class contains every word with that form.
  std::map<word_type, std::set<word_type>> by_nf;
  for (auto const& u : words) {
    by_nf[o.normal_form(u)].insert(u);
  }
  for (auto const& [nf, members] : by_nf) {
    auto const& u   = *members.begin();
    auto        cls = o.rewriting().enumerate_class(u, 7);
    REQUIRE(cls.complete);
    std::set<word_type> got(cls.words.begin(), cls.words.end());
    CHECK(got == members);
  }
}

TEST_CASE("non-confluent systems degrade to bounded search", "[oracle]") {
  auto p = parse_presentation("generators: a b\nrelation: aba = bab");
  RewriteSettings s;
  s.completion_bound = 4;
  Oracle o(p, s);
  CHECK(!o.rewriting().confluent());
  CHECK_THROWS_AS(o.normal_form(p.parse_word("ab")), Error);
  CHECK(o.sgp_equal(p.parse_word("aba"), p.parse_word("bab")) == tril::TRUE);
  CHECK(o.sgp_equal(p.parse_word("abaa"), p.parse_word("baba"))
        == tril::TRUE);
  auto r = o.sgp_equal(p.parse_word("ab"), p.parse_word("ba"));
  CHECK(r != tril::TRUE);
  CHECK(o.is_geodesic(p.parse_word("ab")) != tril::FALSE);
}

TEST_CASE("group_equal", "[oracle]") {
  auto   p = fixtures::example();
  Oracle o(p);
  auto   w = [&p](char const* s) { return p.parse_word(s); };
  CHECK(o.group().metric_ok());
  CHECK(o.group_equal(w("abcc"), w("cba")) == tril::TRUE);
  CHECK(o.group_equal(w("a"), w("b")) == tril::FALSE);
  CHECK(o.group_equal(w("abcab"), w("abcab")) == tril::TRUE);

  auto const& gr = o.group();
  group_word  x  = to_group_word(w("ab"));
  auto        xi = inverse(x);
  group_word  xxi(x);
  xxi.insert(xxi.end(), xi.begin(), xi.end());
  CHECK(gr.is_identity(xxi) == tril::TRUE);
  // c is trivial in the abelianisation, but not in the group.
  CHECK(gr.is_identity(to_group_word(w("c"))) == tril::FALSE);
}

TEST_CASE("group_equal agrees with sgp_equal on positive words",
          "[oracle][property]") {
  auto   p = fixtures::example();
  Oracle o(p);
  auto   words = brute::words_up_to(3, 4);
  for (auto const& u : words) {
    for (auto const& v : words) {
      CHECK(o.group_equal(u, v) == o.sgp_equal(u, v));
    }
  }
}

TEST_CASE("is_geodesic", "[oracle]") {
  auto   p = fixtures::example();
  Oracle o(p);
  CHECK(o.is_geodesic(p.parse_word("abc")) == tril::TRUE);
  CHECK(o.is_geodesic(p.parse_word("cba")) == tril::TRUE);
  CHECK(o.is_geodesic(p.parse_word("abcc")) == tril::FALSE);
  for (auto const& u : brute::words_up_to(3, 6)) {
    CHECK((o.is_geodesic(u) == tril::TRUE)
          == (o.normal_form(u).size() == u.size()));
  }
}

TEST_CASE("induced_distance", "[oracle]") {
  auto        p = fixtures::example();
  Oracle      o(p);
  PhiAlphabet phi(p);
  auto        w = [&p](char const* s) { return p.parse_word(s); };
  CHECK(o.induced_distance(w("abc"), w("abc"), 3) == Distance::exact(0));
  CHECK(o.induced_distance(w("abc"), w("cba"), 3) == Distance::exact(1));
  CHECK(o.induced_distance(w("ba"), w("b"), phi.b_set(), 3)
        == Distance::exact(1));
  CHECK(o.induced_distance(w("abcc"), w("cba"), 3) == Distance::exact(0));
  auto far = o.induced_distance(w("aaaa"), w("bbbb"), 2);
  CHECK(!far.is_exact());
  CHECK(far.bound() == 2);
  CHECK(far.to_string() == ">2");
  CHECK_THROWS_AS(far.value(), Error);
}

TEST_CASE("distance one means one generator apart", "[oracle][property]") {
  auto   p = fixtures::example();
  Oracle o(p);
  auto   words = brute::words_up_to(3, 3);
  for (auto const& s : words) {
    for (auto const& t : words) {
      bool adjacent = false;
      for (letter_type x = 0; x < 3; ++x) {
        adjacent = adjacent || brute::equal(p, concat(s, word_type{x}), t)
                   || brute::equal(p, concat(t, word_type{x}), s);
      }
      bool same = brute::equal(p, s, t);
      auto d    = o.induced_distance(s, t, 1);
      CHECK(d.at_most(0) == same);
      CHECK(d.at_most(1) == (same || adjacent));
    }
  }
}

TEST_CASE("induced_distance is symmetric and satisfies the triangle inequality",
          "[oracle][property]") {
  auto   p   = fixtures::example();
  Oracle o(p);
  auto   gen = brute::rng(23);
  std::uniform_int_distribution<std::size_t> len(0, 5), letter(0, 2);
  auto random_word = [&] {
    word_type w(len(gen));
    for (auto& x : w) {
      x = static_cast<letter_type>(letter(gen));
    }
    return w;
  };
  for (int trial = 0; trial < 200; ++trial) {
    auto s = random_word(), t = random_word(), u = random_word();
    auto st = o.induced_distance(s, t, 4), ts = o.induced_distance(t, s, 4);
    CHECK(st == ts);
    auto tu = o.induced_distance(t, u, 4), su = o.induced_distance(s, u, 4);
    if (st.is_exact() && tu.is_exact() && st.value() + tu.value() <= 4) {
      CHECK(su.is_exact());
      if (su.is_exact()) {
        CHECK(su.value() <= st.value() + tu.value());
      }
    }
  }
}

TEST_CASE("fellow_travel_bound", "[oracle]") {
  auto   p = fixtures::example();
  Oracle o(p);
  auto   w = [&p](char const* s) { return p.parse_word(s); };
  CHECK(o.fellow_travel_bound(w("abcab"), w("abcab"), 2).bound
        == Distance::exact(0));
  auto ft = o.fellow_travel_bound(w("abc"), w("abcc"), 2);
  CHECK(ft.bound == Distance::exact(1));
  REQUIRE(ft.profile.size() == 4);
  CHECK(ft.profile[2] == Distance::exact(0));
  CHECK(ft.profile[3] == Distance::exact(1));

  auto v3 = power(w("abc"), 3);
  auto u3 = concat(w("c"), power(w("ba"), 3));
  auto r  = o.fellow_travel_bound(v3, u3, 2);
  CHECK(!r.bound.is_exact());
  CHECK(r.bound.bound() == 2);
}

TEST_CASE("fellow travelling adds up", "[oracle][property]") {
  auto   p   = fixtures::example();
  Oracle o(p);
  auto   gen = brute::rng(31);
  std::uniform_int_distribution<std::size_t> len(0, 5), letter(0, 2);
  auto random_word = [&] {
    word_type w(len(gen));
    for (auto& x : w) {
      x = static_cast<letter_type>(letter(gen));
    }
    return w;
  };
  for (int trial = 0; trial < 100; ++trial) {
    auto w = random_word(), u = random_word(), v = random_word();
    auto wu = o.fellow_travel_bound(w, u, 4).bound;
    auto uv = o.fellow_travel_bound(u, v, 4).bound;
    auto wv = o.fellow_travel_bound(w, v, 8).bound;
    if (wu.is_exact() && uv.is_exact()) {
      REQUIRE(wv.is_exact());
      CHECK(wv.value() <= wu.value() + uv.value());
    }
  }
}
