#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "overlap_auto/refute.hpp"
#include "support/brute.hpp"
#include "support/phi_words.hpp"

using namespace overlap_auto;

TEST_CASE("fix_at", "[refute]") {
  fixtures::PhiExample e;
  CHECK(e.str(fix_at(e.ctx, e("[abcc]"), 1)) == "[cba]");
  CHECK(e.str(fix_at(e.ctx, e("[ba][bcc]"), 2)) == "[b][cba]");
  CHECK_THROWS_AS(fix_at(e.ctx, e("[cba]"), 1), Error);
  CHECK_THROWS_AS(fix_at(e.ctx, e("[abcc]"), 2), Error);
  CHECK_THROWS_AS(fix_at(e.ctx, e("[abcc]"), 0), Error);
  CHECK_THROWS_AS(fix_at(e.ctx, e("[ab][cc]"), 1), Error);

  auto d = fix_at_detail(e.ctx, e("[ba][bcc]"), 2);
  CHECK(e.p.to_string(d.window.word) == "abcc");
  CHECK(e.p.to_string(d.replacement) == "cba");
  CHECK(!d.empty_residual);
}

TEST_CASE("fix_at laws", "[refute][property]") {
  fixtures::PhiExample e;
  auto const&          pt = e.ctx.pieces();
  std::size_t          sites = 0;
  for (auto const& a : fixtures::all_phi_words(e.phi, 3)) {
    if (!is_admissible(e.phi, a)) {
      continue;
    }
    auto ka = e.ctx.kappa_vector(a);
    for (std::size_t ell = 1; ell <= a.size(); ++ell) {
      if (!ka[ell - 1]) {
        continue;
      }
      ++sites;
      auto d = fix_at_detail(e.ctx, a, ell);
      auto b = d.result;
      CHECK(d.raw.size() == a.size());
      CHECK(e.oracle.sgp_equal(e.phi.eta(a), e.phi.eta(b)) == tril::TRUE);
      CHECK(e.oracle
                .fellow_travel_bound(
                    e.phi.images(a), e.phi.images(d.raw), e.phi.b_set(), 1)
                .bound.at_most(1));
      if (ell < a.size() && d.raw[ell] != identity_letter) {
        auto const& w = e.phi.word(a[ell]);
        auto const& u = e.phi.word(d.raw[ell]);
        REQUIRE(u.size() <= w.size());
        CHECK(std::equal(u.rbegin(), u.rend(), w.rbegin()));
        CHECK(pt.piece_length(w) <= pt.piece_length(u) + PieceLength(1));
      }
      auto const& u = e.phi.word(d.raw[ell - 1]);
      CHECK(pt.piece_length(u) < pt.piece_length(complement(e.p, u)));
      if (!d.empty_residual && is_admissible(e.phi, b)) {
        auto kb = e.ctx.kappa_vector(b);
        CHECK(kb[ell - 1] == 0);
        for (std::size_t j = 0; j + 2 < ell; ++j) {
          CHECK(kb[j] <= ka[j]);
        }
      }
    }
  }
  CHECK(sites > 0);
}

TEST_CASE("is_pacing_pair", "[refute]") {
  fixtures::PhiExample e;
  auto r = is_pacing_pair(e.oracle, e.ctx, e("[ba][bcc]"), e("[b][cba]"), 2);
  CHECK(r.c1 == tril::TRUE);
  CHECK(r.c2 == tril::TRUE);
  CHECK(r.c3 == tril::TRUE);
  CHECK(r.c4 == tril::TRUE);
  CHECK(r.c5 == tril::TRUE);
  CHECK(r.verdict() == tril::TRUE);
  REQUIRE(r.profile.size() == 2);
  CHECK(r.profile[0].value() <= 2);
  CHECK(r.profile[1].value() == 0);

  auto s = is_pacing_pair(e.oracle, e.ctx, e("[b][cba]"), e("[ba][bcc]"), 2);
  CHECK(s.c1 == tril::FALSE);
  CHECK(s.verdict() == tril::FALSE);
  auto t = is_pacing_pair(e.oracle, e.ctx, e("[ba][bcc]"), e("[b][cb]"), 2);
  CHECK(t.c2 == tril::FALSE);
}

TEST_CASE("build_pacing_partner", "[refute][property]") {
  fixtures::PhiExample e;
  CHECK(e.str(build_pacing_partner(e.ctx, e("[ba][bcc]"), 2)) == "[b][cba]");
  std::size_t recursions = 0;
  for (auto const& a : fixtures::all_phi_words(e.phi, 3)) {
    if (!is_admissible(e.phi, a)) {
      continue;
    }
    auto ka = e.ctx.kappa_vector(a);
    for (std::size_t ell = 1; ell <= a.size(); ++ell) {
      if (!ka[ell - 1]) {
        continue;
      }
      std::size_t depth = 0;
      auto        b     = build_pacing_partner(e.ctx, a, ell, &depth);
      CHECK(depth <= ell);
      recursions += depth > 1;
      if (b.size() == a.size()) {
        auto r = is_pacing_pair(e.oracle, e.ctx, a, b, ell);
        INFO(e.str(a) << " -> " << e.str(b) << " at " << ell);
        CHECK(r.verdict() == tril::TRUE);
      }
    }
  }
  INFO("recursive instances: " << recursions);
  CHECK(true);
}

TEST_CASE("refute_step and verify_refutes", "[refute]") {
  fixtures::PhiExample e;
  CHECK(verify_refutes(e.oracle, e.ctx, e("[b][cba]"), e("[ba][bcc]"), 3));
  CHECK(!verify_refutes(e.oracle, e.ctx, e("[ba][bcc]"), e("[b][cba]"), 3));
  CHECK(!verify_refutes(e.oracle, e.ctx, e("[a]"), e("[b]"), 3));

  auto s = refute_step(e.ctx, e("[ab][cc]"));
  CHECK(s.kind == step_kind::MERGE);
  CHECK(e.str(s.after) == "[abcc]");
  CHECK(s.ell == 0);

  auto t = refute_step(e.ctx, e("[ba][bcc]"));
  CHECK(t.kind == step_kind::FIX_AT);
  CHECK(t.ell == 2);
  CHECK(e.str(t.after) == "[b][cba]");
  CHECK_THROWS_AS(refute_step(e.ctx, e("[cba]")), Error);
  CHECK(std::string(to_cstring(step_kind::PACING_RECURSE)) == "PACING_RECURSE");
}

TEST_CASE("refute_step output refutes its input", "[refute][property]") {
  fixtures::PhiExample e;
  for (auto const& a : fixtures::all_phi_words(e.phi, 2)) {
    if (a.empty() || e.ctx.is_efficient(a)) {
      continue;
    }
    auto s = refute_step(e.ctx, a);
    INFO(e.str(a) << " -> " << e.str(s.after));
    CHECK(verify_refutes(e.oracle, e.ctx, s.after, a, 3));
  }
}

TEST_CASE("refute_to_minimal", "[refute]") {
  fixtures::PhiExample e;
  auto t = refute_to_minimal(e.ctx, e("[ab][cc]"));
  CHECK(e.str(t.final) == "[cba]");
  REQUIRE(t.steps.size() == 2);
  CHECK(t.steps[0].kind == step_kind::MERGE);
  CHECK(t.steps[1].kind == step_kind::FIX_AT);
  for (auto const& a : fixtures::all_phi_words(e.phi, 3)) {
    if (a.empty()) {
      continue;
    }
    auto r = refute_to_minimal(e.ctx, a);
    CHECK(e.ctx.is_efficient(r.final));
    CHECK(e.oracle.sgp_equal(e.phi.eta(a), e.phi.eta(r.final)) == tril::TRUE);
    for (auto const& s : r.steps) {
      CHECK(e.ctx.strictly_precedes(s.after, s.before));
    }
  }
}

TEST_CASE("find_shorter_refuter", "[refute]") {
  fixtures::PhiExample e;
  auto c = find_shorter_refuter(e.oracle, e.ctx, e("[ab][cc]"), 2);
  REQUIRE(c);
  CHECK(c->size() == 1);
  CHECK(!find_shorter_refuter(e.oracle, e.ctx, e("[a]"), 2));
  CHECK(!find_shorter_refuter(e.oracle, e.ctx, e("[ab][a]"), 2));
  CHECK(find_shorter_refuter(e.oracle, e.ctx, e("[a][b]"), 2));
}
