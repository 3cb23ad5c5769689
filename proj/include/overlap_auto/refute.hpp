#ifndef OVERLAP_AUTO_REFUTE_HPP_
#define OVERLAP_AUTO_REFUTE_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "kappa.hpp"
#include "oracle.hpp"
#include "phi.hpp"
#include "word.hpp"

// Positions ell in this file are 1-based, as are the letters W_1 ... W_n of
// a Phi-word; kappa vectors are stored 0-based.

namespace overlap_auto {

  struct FixAtDetail {
    phi_word    raw;     // may contain identity_letter for empty residuals
    phi_word    result;  // raw with identity letters removed
    KappaWindow window;  // the bad defining word read around W_ell
    word_type   replacement;
    bool        empty_residual = false;
  };

  // Replace the bad defining word around W_ell by its complement, shortening
  // W_{ell-1} and W_{ell+1} accordingly.
  inline FixAtDetail fix_at_detail(KappaContext const& ctx,
                                   phi_word const&     a,
                                   std::size_t         ell) {
    auto const& phi = ctx.phi();
    auto const& pt  = ctx.pieces();
    if (ell == 0 || ell > a.size()) {
      throw Error("fix_at: position " + std::to_string(ell)
                  + " out of range for " + phi.to_string(a));
    }
    if (!is_admissible(phi, a)) {
      throw Error("fix_at: " + phi.to_string(a) + " is not admissible");
    }
    auto const i = ell - 1;
    if (!ctx.bit(a, i)) {
      throw Error("fix_at: kappa bit " + std::to_string(ell) + " of "
                  + phi.to_string(a) + " is 0");
    }
    auto all = ctx.windows(a, i, false);
    if (all.size() != 1) {
      throw InvariantViolation(
          "fix_at: " + std::to_string(all.size())
          + " decompositions read a defining word around letter "
          + std::to_string(ell) + " of " + phi.to_string(a));
    }
    FixAtDetail d;
    d.window      = all.front();
    d.replacement = complement(phi.presentation(), d.window.word);

    word_type const& prev = i > 0 ? phi.word(a[i - 1]) : word_type();
    word_type const& next = i + 1 < a.size() ? phi.word(a[i + 1]) : word_type();
    word_type        prev_tail(prev.end() - d.window.left, prev.end());
    word_type        next_head(next.begin(), next.begin() + d.window.right);

    if (ctx.hypotheses_hold()) {
      if (pt.piece_length(prev_tail) > PieceLength(1)
          || pt.piece_length(next_head) > PieceLength(1)) {
        throw InvariantViolation("fix_at: a residual overlap of "
                                 + phi.to_string(a)
                                 + " has piece length greater than 1");
      }
      if (pt.piece_length(d.window.word) < PieceLength(4)) {
        throw InvariantViolation("fix_at: the bad word "
                                 + phi.presentation().to_string(d.window.word)
                                 + " has piece length less than 4");
      }
    }

    d.raw = a;
    if (i > 0) {
      word_type head(prev.begin(), prev.end() - d.window.left);
      d.raw[i - 1] = head.empty() ? identity_letter : phi.letter(head);
    }
    d.raw[i] = phi.letter(d.replacement);
    if (i + 1 < a.size()) {
      word_type tail(next.begin() + d.window.right, next.end());
      d.raw[i + 1] = tail.empty() ? identity_letter : phi.letter(tail);
    }
    d.result         = strip_identity(d.raw);
    d.empty_residual = d.result.size() != d.raw.size();
    return d;
  }

  inline phi_word
  fix_at(KappaContext const& ctx, phi_word const& a, std::size_t ell) {
    return fix_at_detail(ctx, a, ell).result;
  }

  // Follows the induction: fix at ell, and fix again one position to the
  // left whenever that switched the previous kappa bit on.
  inline phi_word build_pacing_partner(KappaContext const& ctx,
                                       phi_word const&     a,
                                       std::size_t         ell,
                                       std::size_t*        depth = nullptr) {
    auto b = fix_at(ctx, a, ell);
    if (depth != nullptr) {
      ++*depth;
    }
    if (ell == 1 || b.size() != a.size() || !is_admissible(ctx.phi(), b)
        || ctx.bit(b, ell - 2) <= ctx.bit(a, ell - 2)) {
      return b;
    }
    return build_pacing_partner(ctx, b, ell - 1, depth);
  }

  struct PacingReport {
    tril                       c1 = tril::FALSE;
    tril                       c2 = tril::FALSE;
    tril                       c3 = tril::FALSE;
    tril                       c4 = tril::FALSE;
    tril                       c5 = tril::FALSE;
    std::optional<std::size_t> j;        // an index witnessing C3
    std::vector<Distance>      profile;  // d_Phi(A(i), B(i)) for i = 1, 2, ...

    tril verdict() const {
      tril result = tril::TRUE;
      for (auto c : {c1, c2, c3, c4, c5}) {
        if (c == tril::FALSE) {
          return tril::FALSE;
        }
        if (c == tril::unknown) {
          result = tril::unknown;
        }
      }
      return result;
    }
  };

  namespace detail {
    inline tril within(Distance const& d, std::size_t k) {
      if (d.at_most(k)) {
        return tril::TRUE;
      }
      return d.flagged() ? tril::unknown : tril::FALSE;
    }

    inline tril conj(tril x, tril y) {
      if (x == tril::FALSE || y == tril::FALSE) {
        return tril::FALSE;
      }
      return x == tril::TRUE && y == tril::TRUE ? tril::TRUE : tril::unknown;
    }

    inline tril disj(tril x, tril y) {
      if (x == tril::TRUE || y == tril::TRUE) {
        return tril::TRUE;
      }
      return x == tril::FALSE && y == tril::FALSE ? tril::FALSE : tril::unknown;
    }
  }  // namespace detail

  inline PacingReport is_pacing_pair(Oracle const&       oracle,
                                     KappaContext const& ctx,
                                     phi_word const&     a,
                                     phi_word const&     b,
                                     std::size_t         ell) {
    using detail::conj;
    using detail::disj;
    using detail::within;
    auto const&  phi = ctx.phi();
    auto const&  pt  = ctx.pieces();
    PacingReport r;
    std::size_t const n = a.size();
    if (ell == 0 || ell > n) {
      return r;
    }
    auto const ka = ctx.kappa_vector(a);
    auto const kb = ctx.kappa_vector(b);

    r.c1 = to_tril(is_admissible(phi, a) && ka[ell - 1]);

    r.c2 = b.size() == n ? oracle.sgp_equal(phi.eta(a), phi.eta(b))
                         : tril::FALSE;

    r.profile = oracle
                    .fellow_travel_bound(
                        phi.images(a), phi.images(b), phi.b_set(), 2)
                    .profile;
    auto d = [&r](std::size_t i) -> Distance const& { return r.profile[i - 1]; };
    for (std::size_t j = 1; j <= ell && r.c3 != tril::TRUE; ++j) {
      tril t = within(d(ell), 1);
      for (std::size_t i = 1; i <= r.profile.size(); ++i) {
        if (i < j || i > ell) {
          t = conj(t, within(d(i), 0));
        } else if (i < ell) {
          t = conj(t, within(d(i), 2));
        }
      }
      if (t == tril::TRUE) {
        r.j = j;
      }
      r.c3 = disj(r.c3, t);
    }

    if (ell == n) {
      r.c4 = tril::TRUE;
    } else if (b.size() != n) {
      r.c4 = tril::FALSE;
    } else {
      auto const& w = phi.word(a[ell]);
      auto const& u = phi.word(b[ell]);
      bool ok = is_subword(u, w)
                && pt.piece_length(w) <= pt.piece_length(u) + PieceLength(1);
      for (std::size_t k = ell + 1; k < n; ++k) {
        ok = ok && a[k] == b[k];
      }
      r.c4 = to_tril(ok);
    }

    if (!is_admissible(phi, b)) {
      r.c5 = tril::TRUE;
    } else if (kb.size() < ell) {
      r.c5 = tril::FALSE;
    } else {
      bool ok = kb[ell - 1] < ka[ell - 1];
      for (std::size_t i = 0; i + 1 < ell; ++i) {
        ok = ok && kb[i] <= ka[i];
      }
      r.c5 = to_tril(ok);
    }
    return r;
  }

  struct RefuteCheck {
    tril         pi_equal = tril::FALSE;
    bool         precedes = false;  // strictly
    FellowTravel ft;
    tril         ft_within = tril::FALSE;

    tril verdict() const {
      return detail::conj(detail::conj(pi_equal, to_tril(precedes)),
                          ft_within);
    }
  };

  // Does B k-refute A?
  inline RefuteCheck check_refutes(Oracle const&       oracle,
                                   KappaContext const& ctx,
                                   phi_word const&     b,
                                   phi_word const&     a,
                                   std::size_t         k) {
    auto const& phi = ctx.phi();
    RefuteCheck c;
    c.pi_equal = oracle.sgp_equal(phi.eta(a), phi.eta(b));
    c.precedes = ctx.strictly_precedes(b, a);
    c.ft = oracle.fellow_travel_bound(
        phi.images(a), phi.images(b), phi.b_set(), k);
    c.ft_within = detail::within(c.ft.bound, k);
    return c;
  }

  inline bool verify_refutes(Oracle const&       oracle,
                             KappaContext const& ctx,
                             phi_word const&     b,
                             phi_word const&     a,
                             std::size_t         k) {
    return check_refutes(oracle, ctx, b, a, k).verdict() == tril::TRUE;
  }

  enum class step_kind { MERGE, FIX_AT, PACING_RECURSE };

  inline char const* to_cstring(step_kind k) noexcept {
    switch (k) {
      case step_kind::MERGE:
        return "MERGE";
      case step_kind::FIX_AT:
        return "FIX_AT";
      default:
        return "PACING_RECURSE";
    }
  }

  struct RefutationStep {
    step_kind   kind = step_kind::MERGE;
    phi_word    before;
    phi_word    after;
    std::size_t ell = 0;  // 0 for MERGE
    // The pacing partner, when it was not admissible and had to be merged
    // to obtain `after`.
    std::optional<phi_word> partner;
    std::size_t             ft_claimed = 1;
  };

  struct RefutationTrace {
    std::vector<RefutationStep> steps;
    phi_word                    initial;
    phi_word                    final;
  };

  inline RefutationStep refute_step(KappaContext const& ctx,
                                    phi_word const&     a) {
    auto const& phi = ctx.phi();
    if (ctx.is_efficient(a)) {
      throw Error(phi.to_string(a) + " is already efficient");
    }
    RefutationStep s;
    s.before = a;
    if (!is_admissible(phi, a)) {
      s.kind       = step_kind::MERGE;
      s.after      = merge_non_admissible(phi, a);
      s.ft_claimed = 1;
      return s;
    }
    s.ell             = *ctx.kappa_vector(a).first_set() + 1;
    std::size_t depth = 0;
    auto        b     = build_pacing_partner(ctx, a, s.ell, &depth);
    s.kind = depth > 1 ? step_kind::PACING_RECURSE : step_kind::FIX_AT;
    if (!is_admissible(phi, b)) {
      s.partner    = b;
      s.after      = merge_non_admissible(phi, b);
      s.ft_claimed = 3;
    } else {
      s.after      = b;
      s.ft_claimed = 2;
    }
    return s;
  }

  inline RefutationTrace refute_to_minimal(KappaContext const& ctx,
                                           phi_word const&     a) {
    RefutationTrace t;
    t.initial = a;
    t.final   = a;
    while (!ctx.is_efficient(t.final)) {
      t.steps.push_back(refute_step(ctx, t.final));
      t.final = t.steps.back().after;
    }
    return t;
  }

  // Some C with |C| < |A| and pi(C) = pi(A) that k-refutes A, searched over
  // all Phi-words presenting pi(A) of length less than |A|.
  inline std::optional<phi_word> find_shorter_refuter(Oracle const&       oracle,
                                                      KappaContext const& ctx,
                                                      phi_word const&     a,
                                                      std::size_t         k) {
    auto const& phi = ctx.phi();
    auto const& rs  = oracle.rewriting();
    if (a.size() <= 1) {
      return std::nullopt;
    }
    auto const max_len = a.size() - 1;
    auto slice = rs.enumerate_class(phi.eta(a), max_len * phi.max_word_length());
    if (!slice.complete) {
      throw Error("find_shorter_refuter: class enumeration incomplete");
    }
    std::optional<phi_word> found;
    for (auto const& v : slice.words) {
      for_each_decomposition(phi, v, max_len, [&](phi_word const& c) {
        if (!found && !c.empty()
            && detail::within(oracle
                                  .fellow_travel_bound(phi.images(a),
                                                       phi.images(c),
                                                       phi.b_set(),
                                                       k)
                                  .bound,
                              k)
                   == tril::TRUE) {
          found = c;
        }
      });
      if (found) {
        break;
      }
    }
    return found;
  }

}  // namespace overlap_auto

#endif  // OVERLAP_AUTO_REFUTE_HPP_
