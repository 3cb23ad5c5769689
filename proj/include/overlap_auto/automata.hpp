#ifndef OVERLAP_AUTO_AUTOMATA_HPP_
#define OVERLAP_AUTO_AUTOMATA_HPP_

#include <algorithm>  // for find, max
#include <cstddef>    // for size_t
#include <deque>      // for deque
#include <map>        // for map
#include <string>     // for string
#include <tuple>      // for tuple
#include <utility>    // for pair
#include <vector>     // for vector

#include "dfa.hpp"
#include "kappa.hpp"
#include "phi.hpp"
#include "word.hpp"

namespace overlap_auto {

  // Symbols of a Dfa over Phi are the letter indices.
  inline Dfa::input_type to_input(phi_word const& a) {
    Dfa::input_type result;
    for (auto x : a) {
      result.push_back(index(x));
    }
    return result;
  }

  inline phi_word to_phi_word(Dfa::input_type const& w) {
    phi_word result;
    for (auto a : w) {
      result.push_back(static_cast<phi_letter>(a));
    }
    return result;
  }

  inline std::vector<std::string> phi_labels(PhiAlphabet const& phi) {
    std::vector<std::string> result;
    for (auto x : phi.letters()) {
      result.push_back(phi.to_string(x));
    }
    return result;
  }

  // The padded pair alphabet over m letters: pairs (x, y) with x, y in
  // {0, ..., m - 1, $} other than ($, $), where $ is encoded as m.
  class PairAlphabet {
   public:
    explicit PairAlphabet(std::size_t m) : _m(m) {}

    std::size_t letters() const noexcept {
      return _m;
    }

    std::size_t size() const noexcept {
      return (_m + 1) * (_m + 1) - 1;
    }

    std::size_t pad() const noexcept {
      return _m;
    }

    // x or y equal to pad() stands for $.
    std::size_t encode(std::size_t x, std::size_t y) const {
      if (x > _m || y > _m || (x == _m && y == _m)) {
        throw Error("not a padded pair symbol");
      }
      return x * (_m + 1) + y;
    }

    std::pair<std::size_t, std::size_t> decode(std::size_t s) const {
      return {s / (_m + 1), s % (_m + 1)};
    }

    Dfa::input_type convolve(Dfa::input_type const& u,
                             Dfa::input_type const& v) const {
      Dfa::input_type result;
      for (std::size_t i = 0; i < std::max(u.size(), v.size()); ++i) {
        result.push_back(encode(i < u.size() ? u[i] : _m,
                                i < v.size() ? v[i] : _m));
      }
      return result;
    }

    std::vector<std::string>
    labels(std::vector<std::string> const& letter_labels) const {
      std::vector<std::string> result;
      for (std::size_t s = 0; s < size(); ++s) {
        auto [x, y] = decode(s);
        result.push_back("(" + (x == _m ? std::string("$") : letter_labels[x])
                         + "," + (y == _m ? std::string("$") : letter_labels[y])
                         + ")");
      }
      return result;
    }

   private:
    std::size_t _m;
  };

  // Accepts the pair words in which $ only occurs as trailing padding.
  inline Dfa padding_dfa(PairAlphabet const& pairs) {
    Dfa  d(pairs.size());
    auto both   = d.add_state(true);
    auto a_done = d.add_state(true);
    auto b_done = d.add_state(true);
    auto dead   = d.add_state(false);
    for (std::size_t s = 0; s < pairs.size(); ++s) {
      auto [x, y]  = pairs.decode(s);
      bool const xp = x == pairs.pad(), yp = y == pairs.pad();
      d.set_transition(both, s, xp ? a_done : (yp ? b_done : both));
      d.set_transition(a_done, s, xp ? a_done : dead);
      d.set_transition(b_done, s, yp ? b_done : dead);
      d.set_transition(dead, s, dead);
    }
    return d;
  }

  // The words on one track (0 or 1) of the correctly padded pair words
  // accepted by d.
  inline Dfa project(Dfa const& d, PairAlphabet const& pairs, std::size_t track) {
    if (d.alphabet_size() != pairs.size()) {
      throw Error("project: the automaton is not over the pair alphabet");
    }
    if (track > 1) {
      throw Error("project: track must be 0 or 1");
    }
    auto legal = intersect(d, padding_dfa(pairs));
    Nfa  nfa(pairs.letters());
    for (Dfa::state_type s = 0; s < legal.number_of_states(); ++s) {
      nfa.add_state(legal.accepting(s));
    }
    nfa.add_start(legal.start());
    for (Dfa::state_type s = 0; s < legal.number_of_states(); ++s) {
      for (std::size_t a = 0; a < pairs.size(); ++a) {
        auto [x, y] = pairs.decode(a);
        auto z      = track == 0 ? x : y;
        if (z == pairs.pad()) {
          nfa.add_epsilon(s, legal.next(s, a));
        } else {
          nfa.add_transition(s, z, legal.next(s, a));
        }
      }
    }
    return determinize(nfa);
  }

  inline Dfa build_admissible_dfa(PhiAlphabet const& phi) {
    std::size_t const n = phi.size();
    Dfa               d(n, phi_labels(phi));
    auto              start = d.add_state(true);
    for (std::size_t x = 0; x < n; ++x) {
      d.add_state(true);
    }
    auto dead = d.add_state(false);
    for (std::size_t y = 0; y < n; ++y) {
      d.set_transition(start, y, static_cast<Dfa::state_type>(1 + y));
      d.set_transition(dead, y, dead);
      for (std::size_t x = 0; x < n; ++x) {
        bool merge = phi.concat(static_cast<phi_letter>(x),
                                static_cast<phi_letter>(y))
                         .has_value();
        d.set_transition(static_cast<Dfa::state_type>(1 + x),
                         y,
                         merge ? dead : static_cast<Dfa::state_type>(1 + y));
      }
    }
    return d;
  }

  namespace detail {
    // Deterministic matcher over X for a finite set of patterns: states are
    // the prefixes of patterns, plus an absorbing state once any pattern
    // has occurred.
    class PatternMatcher {
     public:
      PatternMatcher(std::vector<word_type> patterns, std::size_t alphabet)
          : _patterns(std::move(patterns)), _n(alphabet) {
        _prefixes.push_back({});
        for (auto const& p : _patterns) {
          for (std::size_t i = 1; i <= p.size(); ++i) {
            word_type q(p.begin(), p.begin() + i);
            if (std::find(_prefixes.begin(), _prefixes.end(), q)
                == _prefixes.end()) {
              _prefixes.push_back(q);
            }
          }
        }
        _matched = _prefixes.size();
        _delta.assign((_matched + 1) * _n, _matched);
        for (std::size_t s = 0; s < _matched; ++s) {
          for (std::size_t g = 0; g < _n; ++g) {
            word_type w = _prefixes[s];
            w.push_back(static_cast<letter_type>(g));
            bool hit = false;
            for (auto const& p : _patterns) {
              hit = hit || is_suffix(p, w);
            }
            if (hit) {
              continue;
            }
            // Longest suffix of w that is a prefix of some pattern.
            for (std::size_t k = 0; k <= w.size(); ++k) {
              word_type suffix(w.begin() + k, w.end());
              auto it = std::find(_prefixes.begin(), _prefixes.end(), suffix);
              if (it != _prefixes.end()) {
                _delta[s * _n + g] = it - _prefixes.begin();
                break;
              }
            }
          }
        }
      }

      std::size_t start() const noexcept {
        return 0;
      }

      std::size_t matched() const noexcept {
        return _matched;
      }

      std::size_t next(std::size_t s, letter_type g) const {
        return _delta[s * _n + g];
      }

     private:
      std::vector<word_type>   _patterns;
      std::size_t              _n;
      std::vector<word_type>   _prefixes;
      std::size_t              _matched;
      std::vector<std::size_t> _delta;
    };
  }  // namespace detail

  // Admissible Phi-words whose image under eta avoids every bad defining
  // word.
  inline Dfa build_efficient_dfa(KappaContext const& ctx) {
    auto const&             phi = ctx.phi();
    auto const              adm = build_admissible_dfa(phi);
    detail::PatternMatcher  pm(ctx.bad_words(),
                              phi.presentation().alphabet_size());
    std::size_t const       n = phi.size();
    Dfa                     d(n, phi_labels(phi));
    std::map<std::pair<Dfa::state_type, std::size_t>, Dfa::state_type> ids;
    std::deque<std::pair<Dfa::state_type, std::size_t>>                queue;
    auto id_of = [&](std::pair<Dfa::state_type, std::size_t> p) {
      auto it = ids.find(p);
      if (it != ids.end()) {
        return it->second;
      }
      auto id = d.add_state(adm.accepting(p.first) && p.second != pm.matched());
      ids.emplace(p, id);
      queue.push_back(p);
      return id;
    };
    d.set_start(id_of({adm.start(), pm.start()}));
    while (!queue.empty()) {
      auto p = queue.front();
      queue.pop_front();
      auto from = ids.at(p);
      for (std::size_t x = 0; x < n; ++x) {
        auto s = p.second;
        for (auto g : phi.word(static_cast<phi_letter>(x))) {
          s = pm.next(s, g);
        }
        d.set_transition(from, x, id_of({adm.next(p.first, x), s}));
      }
    }
    return d;
  }

  // Accepts convolve(A, B) exactly when A precedes B in the Piefer order.
  //
  // Bit i of kappa depends on letters i - 1, i and i + 1, so each track
  // remembers its current letter and the class of the previous one, and the
  // bit of a letter is compared once the following letter (or $) is read.
  inline Dfa build_order_pair_dfa(KappaContext const& ctx) {
    auto const&       phi = ctx.phi();
    std::size_t const n   = phi.size();
    PairAlphabet      pairs(n);

    // bit(p, c, x) with p, x in {0, ..., n - 1} or n for the empty word.
    auto bit = [&](std::size_t p, std::size_t c, std::size_t x) {
      phi_word a;
      a.push_back(p == n ? identity_letter : static_cast<phi_letter>(p));
      a.push_back(static_cast<phi_letter>(c));
      a.push_back(x == n ? identity_letter : static_cast<phi_letter>(x));
      return ctx.bit(a, 1);
    };
    // cls[c][p]: previous letters p (n for none) with the same bits for
    // every next letter share a class.
    std::vector<std::vector<std::size_t>> cls(n, std::vector<std::size_t>(n + 1));
    std::vector<std::vector<std::size_t>> rep(n);  // a representative
    for (std::size_t c = 0; c < n; ++c) {
      std::map<std::vector<bool>, std::size_t> sig;
      for (std::size_t p = 0; p <= n; ++p) {
        std::vector<bool> key;
        for (std::size_t x = 0; x <= n; ++x) {
          key.push_back(bit(p, c, x));
        }
        auto [it, inserted] = sig.emplace(key, sig.size());
        if (inserted) {
          rep[c].push_back(p);
        }
        cls[c][p] = it->second;
      }
    }

    enum kind { START, BOTH, A_SHORTER, B_SHORTER, DEAD };
    enum status { EQ, A_LESS, B_LESS };
    // (kind, cur A, class A, cur B, class B, status)
    using key_type = std::tuple<int, std::size_t, std::size_t, std::size_t,
                                std::size_t, int>;

    auto final_status = [&](key_type const& k) {
      auto [kd, ca, pa, cb, pb, st] = k;
      if (st != EQ) {
        return st;
      }
      bool const ba = bit(rep[ca][pa], ca, n);
      bool const bb = bit(rep[cb][pb], cb, n);
      return ba == bb ? int(EQ) : (ba < bb ? int(A_LESS) : int(B_LESS));
    };
    auto accepting = [&](key_type const& k) {
      switch (std::get<0>(k)) {
        case START:
        case A_SHORTER:
          return true;
        case BOTH:
          return final_status(k) != B_LESS;
        default:
          return false;
      }
    };

    Dfa d(pairs.size(), pairs.labels(phi_labels(phi)));
    std::map<key_type, Dfa::state_type> ids;
    std::deque<key_type>                queue;
    auto id_of = [&](key_type const& k) {
      auto it = ids.find(k);
      if (it != ids.end()) {
        return it->second;
      }
      auto id = d.add_state(accepting(k));
      ids.emplace(k, id);
      queue.push_back(k);
      return id;
    };
    key_type const dead{DEAD, 0, 0, 0, 0, EQ};
    key_type const a_shorter{A_SHORTER, 0, 0, 0, 0, EQ};
    key_type const b_shorter{B_SHORTER, 0, 0, 0, 0, EQ};
    d.set_start(id_of({START, 0, 0, 0, 0, EQ}));
    while (!queue.empty()) {
      auto k = queue.front();
      queue.pop_front();
      auto from             = ids.at(k);
      auto [kd, ca, pa, cb, pb, st] = k;
      for (std::size_t s = 0; s < pairs.size(); ++s) {
        auto [x, y]   = pairs.decode(s);
        bool const xp = x == n, yp = y == n;
        key_type   to = dead;
        switch (kd) {
          case START:
            if (xp) {
              to = a_shorter;
            } else if (yp) {
              to = b_shorter;
            } else {
              to = {BOTH, x, cls[x][n], y, cls[y][n], EQ};
            }
            break;
          case BOTH:
            if (xp) {
              to = a_shorter;
            } else if (yp) {
              to = b_shorter;
            } else {
              int next_st = st;
              if (st == EQ) {
                bool const ba = bit(rep[ca][pa], ca, x);
                bool const bb = bit(rep[cb][pb], cb, y);
                next_st = ba == bb ? int(EQ) : (ba < bb ? int(A_LESS) : int(B_LESS));
              }
              if (next_st == EQ) {
                to = {BOTH, x, cls[x][ca], y, cls[y][cb], EQ};
              } else {
                to = {BOTH, 0, 0, 0, 0, next_st};
              }
            }
            break;
          case A_SHORTER:
            to = xp ? a_shorter : dead;
            break;
          case B_SHORTER:
            to = yp ? b_shorter : dead;
            break;
          default:
            break;
        }
        d.set_transition(from, s, id_of(to));
      }
    }
    return d;
  }

}  // namespace overlap_auto

#endif  // OVERLAP_AUTO_AUTOMATA_HPP_
