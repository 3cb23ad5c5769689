#include <map>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "overlap_auto/kappa.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"
#include "support/phi_words.hpp"

using namespace overlap_auto;

TEST_CASE("kappa_vector", "[kappa]") {
  fixtures::PhiExample e;
  CHECK(e.kappa("[abcc]") == "1");
  CHECK(e.kappa("[cba]") == "0");
  CHECK(e.kappa("[ba][bcc]") == "01");
  CHECK(e.kappa("[b][cba]") == "00");
  CHECK(e.ctx.kappa_vector(phi_word{}).size() == 0);
}

TEST_CASE("kappa agrees with the occurrence characterisation",
          "[kappa][property]") {
  fixtures::PhiExample e;
  auto                 bad = brute::bad_words(e.p);
  for (auto const& a : fixtures::all_phi_words(e.phi, 4)) {
    auto k = e.ctx.kappa_vector(a);
    CHECK(k.size() == a.size());
    auto b = brute::kappa(bad, e.phi.images(a));
    CHECK(std::vector<int>(k.bits.begin(), k.bits.end()) == b);
  }
}

TEST_CASE("is_efficient", "[kappa]") {
  fixtures::PhiExample e;
  CHECK(e.ctx.is_efficient(e("[b][cba]")));
  CHECK(!e.ctx.is_efficient(e("[ba][bcc]")));
  CHECK(!e.ctx.is_efficient(e("[ab][cc]")));
}

TEST_CASE("inefficiency_witness", "[kappa]") {
  fixtures::PhiExample e;
  auto w = e.ctx.inefficiency_witness(e("[ba][bcc]"));
  REQUIRE(w);
  CHECK(e.p.to_string(w->word) == "abcc");
  CHECK(w->position == 1);
  CHECK(!e.ctx.inefficiency_witness(e("[b][cba]")));
  CHECK(!e.ctx.inefficiency_witness(e("[cc][cb]")));
  CHECK_THROWS_AS(e.ctx.inefficiency_witness(e("[ab][cc]")), Error);
}

TEST_CASE("a bad subword exists exactly when kappa is nonzero",
          "[kappa][property]") {
  fixtures::PhiExample e;
  for (auto const& a : fixtures::all_phi_words(e.phi, 3)) {
    if (is_admissible(e.phi, a)) {
      CHECK(!e.ctx.inefficiency_witness(a).has_value()
            == e.ctx.kappa_vector(a).is_zero());
    }
  }
}

TEST_CASE("efficiency only depends on eta", "[kappa][property]") {
  fixtures::PhiExample e;
  for (auto const& w : brute::words_up_to(3, 6)) {
    int verdict = -1;
    for (auto const& a : decompositions(e.phi, w)) {
      if (!is_admissible(e.phi, a)) {
        continue;
      }
      int v = e.ctx.is_efficient(a);
      if (verdict == -1) {
        verdict = v;
      }
      CHECK(v == verdict);
    }
  }
}

TEST_CASE("piefer_compare", "[kappa]") {
  fixtures::PhiExample e;
  CHECK(piefer_compare(e.ctx, e("[cba]"), e("[abcc]")) == piefer::PRECEDES);
  CHECK(piefer_compare(e.ctx, e("[a]"), e("[a][b]")) == piefer::PRECEDES);
  CHECK(piefer_compare(e.ctx, e("[abcc]"), e("[cba]")) == piefer::NEITHER);
  CHECK(piefer_compare(e.ctx, e("[a]"), e("[b]")) == piefer::PRECEDES);
  CHECK(piefer_compare(e.ctx, e("[b]"), e("[a]")) == piefer::PRECEDES);
}

TEST_CASE("the Piefer order is total and transitive", "[kappa][property]") {
  fixtures::PhiExample e;
  auto                 words = fixtures::all_phi_words(e.phi, 2);
  auto                 bad   = brute::bad_words(e.p);
  std::vector<KappaVector> ks;
  for (auto const& a : words) {
    ks.push_back(e.ctx.kappa_vector(a));
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      bool ij = kappa_precedes(ks[i], ks[j]);
      bool ji = kappa_precedes(ks[j], ks[i]);
      CHECK((ij || ji));
      CHECK((ij && ji) == (ks[i] == ks[j]));
      CHECK(ij
            == brute::piefer_precedes(brute::kappa(bad, e.phi.images(words[i])),
                                      brute::kappa(bad, e.phi.images(words[j]))));
    }
  }
  // Strict precedence is transitive; kappa vectors of length <= 3 suffice.
  std::vector<KappaVector> all;
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t m = 0; m < (1u << n); ++m) {
      KappaVector k;
      for (std::size_t i = 0; i < n; ++i) {
        k.bits.push_back((m >> i) & 1);
      }
      all.push_back(k);
    }
  }
  for (auto const& x : all) {
    for (auto const& y : all) {
      for (auto const& z : all) {
        if (kappa_strictly_precedes(x, y) && kappa_strictly_precedes(y, z)) {
          CHECK(kappa_strictly_precedes(x, z));
        }
      }
    }
  }
}

TEST_CASE("minimal_representatives", "[kappa]") {
  fixtures::PhiExample e;
  auto strs = [&e](std::vector<phi_word> const& v) {
    std::vector<std::string> r;
    for (auto const& a : v) {
      r.push_back(e.phi.to_string(a));
    }
    return r;
  };
  CHECK(strs(minimal_representatives(e.oracle, e.ctx, e("[abcc]"), 1))
        == std::vector<std::string>{"[cba]"});
  CHECK(strs(minimal_representatives(e.oracle, e.ctx, e("[a]"), 1))
        == std::vector<std::string>{"[a]"});
  auto m = strs(minimal_representatives(e.oracle, e.ctx, e("[ba][bcc]"), 2));
  CHECK(std::find(m.begin(), m.end(), "[bc][ba]") != m.end());
  CHECK(std::find(m.begin(), m.end(), "[b][cba]") != m.end());
  for (auto const& a : fixtures::all_phi_words(e.phi, 2)) {
    if (!a.empty()) {
      CHECK(!minimal_representatives(e.oracle, e.ctx, a, a.size()).empty());
    }
  }
}
