#ifndef OVERLAP_AUTO_ORACLE_HPP_
#define OVERLAP_AUTO_ORACLE_HPP_

#include <algorithm>  // for max
#include <cstddef>    // for size_t
#include <cstdint>    // for int64_t
#include <string>     // for string
#include <vector>     // for vector

#include "group.hpp"
#include "presentation.hpp"
#include "rewriting.hpp"
#include "word.hpp"

namespace overlap_auto {

  // Either an exact distance, or a certificate that exhaustive search up to
  // `bound` found nothing.
  class Distance {
   public:
    static Distance exact(std::size_t d, bool flagged = false) {
      return Distance(d, true, flagged);
    }

    static Distance greater_than(std::size_t bound, bool flagged = false) {
      return Distance(bound, false, flagged);
    }

    bool is_exact() const noexcept {
      return _exact;
    }

    std::size_t value() const {
      if (!_exact) {
        throw Error("distance is only known to exceed "
                    + std::to_string(_value));
      }
      return _value;
    }

    // The radius searched, for an inexact distance.
    std::size_t bound() const noexcept {
      return _value;
    }

    // Some equality query along the way was answered "unknown"; an exact
    // value is then still an upper bound.
    bool flagged() const noexcept {
      return _flagged;
    }

    bool at_most(std::size_t k) const noexcept {
      return _exact && _value <= k;
    }

    std::string to_string() const {
      return _exact ? std::to_string(_value) : ">" + std::to_string(_value);
    }

    friend bool operator==(Distance const&, Distance const&) = default;

   private:
    Distance(std::size_t v, bool e, bool f)
        : _value(v), _exact(e), _flagged(f) {}

    std::size_t _value;
    bool        _exact;
    bool        _flagged;
  };

  struct FellowTravel {
    Distance              bound = Distance::exact(0);
    std::vector<Distance> profile;  // profile[n - 1] compares prefixes of length n
  };

  // Equality and distance oracle for a presentation: the semigroup rewriting
  // system and the co-presented group reducer.
  class Oracle {
   public:
    Oracle(Presentation const& p,
           RewriteSettings     s              = {},
           std::size_t         fallback_depth = 3)
        : _presentation(p), _rs(p, s), _gr(p, fallback_depth) {
      for (std::size_t x = 0; x < p.alphabet_size(); ++x) {
        _generators.push_back({static_cast<letter_type>(x)});
      }
    }

    Presentation const& presentation() const noexcept {
      return _presentation;
    }

    RewriteSystem const& rewriting() const noexcept {
      return _rs;
    }

    GroupReducer const& group() const noexcept {
      return _gr;
    }

    // The generating set X as one-letter words.
    std::vector<word_type> const& generators() const noexcept {
      return _generators;
    }

    tril sgp_equal(word_type const& w, word_type const& u) const {
      return _rs.equal(w, u);
    }

    word_type normal_form(word_type const& w) const {
      return _rs.normal_form(w);
    }

    tril group_equal(word_type const& w, word_type const& u) const {
      return _gr.equal_positive(w, u);
    }

    tril is_geodesic(word_type const& w) const {
      return _rs.is_geodesic(w);
    }

    // Distance from s to t in the Cayley graph of the co-presented group
    // with respect to generating_set and its inverses, searched up to radius.
    Distance induced_distance(word_type const&              s,
                              word_type const&              t,
                              std::vector<word_type> const& generating_set,
                              std::size_t                   radius) const {
      if (s == t) {
        return Distance::exact(0);
      }
      auto h = inverse(to_group_word(s));
      auto tg = to_group_word(t);
      h.insert(h.end(), tg.begin(), tg.end());
      free_reduce(h);
      bool flagged = false;
      switch (_gr.is_identity(h)) {
        case tril::TRUE:
          return Distance::exact(0);
        case tril::unknown:
          flagged = true;
          break;
        default:
          break;
      }
      Search search(*this, h, generating_set);
      for (std::size_t r = 1; r <= radius; ++r) {
        if (search.run(r)) {
          return Distance::exact(r, flagged || search.flagged);
        }
      }
      return Distance::greater_than(radius, flagged || search.flagged);
    }

    Distance induced_distance(word_type const& s,
                              word_type const& t,
                              std::size_t      radius) const {
      return induced_distance(s, t, _generators, radius);
    }

    // Words are given letter by letter, each letter by its image in X*;
    // prefixes of length n are compared for every n up to the longer word.
    FellowTravel
    fellow_travel_bound(std::vector<word_type> const& w_letters,
                        std::vector<word_type> const& u_letters,
                        std::vector<word_type> const& generating_set,
                        std::size_t                   radius) const {
      FellowTravel result;
      std::size_t  n = std::max(w_letters.size(), u_letters.size());
      word_type    wp, up;
      std::size_t  worst = 0;
      bool         exact = true, flagged = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (i < w_letters.size()) {
          wp.insert(wp.end(), w_letters[i].begin(), w_letters[i].end());
        }
        if (i < u_letters.size()) {
          up.insert(up.end(), u_letters[i].begin(), u_letters[i].end());
        }
        auto d = induced_distance(wp, up, generating_set, radius);
        flagged |= d.flagged();
        if (d.is_exact()) {
          worst = std::max(worst, d.value());
        } else {
          exact = false;
        }
        result.profile.push_back(d);
      }
      result.bound = exact ? Distance::exact(worst, flagged)
                           : Distance::greater_than(radius, flagged);
      return result;
    }

    FellowTravel fellow_travel_bound(word_type const& w,
                                     word_type const& u,
                                     std::size_t      radius) const {
      std::vector<word_type> wl, ul;
      for (auto x : w) {
        wl.push_back({x});
      }
      for (auto x : u) {
        ul.push_back({x});
      }
      return fellow_travel_bound(wl, ul, _generators, radius);
    }

   private:
    // Depth first enumeration of freely reduced sequences of generators and
    // inverses of a fixed length, pruned by the abelian invariants.
    struct Search {
      Search(Oracle const&                 o,
             group_word const&             h,
             std::vector<word_type> const& gens)
          : oracle(o), target(inverse(h)) {
        auto const& fs = o._gr.abelian_functionals();
        for (auto const& g : gens) {
          auto gw = to_group_word(g);
          letters.push_back(gw);
          letters.push_back(inverse(gw));
          std::vector<std::int64_t> e(fs.size(), 0);
          for (std::size_t k = 0; k < fs.size(); ++k) {
            for (auto x : g) {
              e[k] += fs[k][x];
            }
          }
          values.push_back(e);
          for (auto& v : e) {
            v = -v;
          }
          values.push_back(e);
        }
        need.assign(fs.size(), 0);
        max_step.assign(fs.size(), 0);
        for (std::size_t k = 0; k < fs.size(); ++k) {
          for (auto x : h) {
            need[k] += (x & 1) ? -fs[k][x / 2] : fs[k][x / 2];
          }
          for (auto const& v : values) {
            max_step[k] = std::max(max_step[k], v[k] < 0 ? -v[k] : v[k]);
          }
        }
      }

      bool run(std::size_t r) {
        length = r;
        word   = target;
        partial.assign(need.size(), 0);
        return extend(0, SIZE_MAX);
      }

      bool extend(std::size_t depth, std::size_t last) {
        std::size_t const remaining = length - depth;
        for (std::size_t k = 0; k < need.size(); ++k) {
          auto gap = need[k] - partial[k];
          if ((gap < 0 ? -gap : gap)
              > static_cast<std::int64_t>(remaining) * max_step[k]) {
            return false;
          }
        }
        if (remaining == 0) {
          auto t = oracle._gr.is_identity(word);
          if (t == tril::unknown) {
            flagged = true;
          }
          return t == tril::TRUE;
        }
        for (std::size_t i = 0; i < letters.size(); ++i) {
          if (last != SIZE_MAX && i == (last ^ 1)) {
            continue;
          }
          auto const size = word.size();
          word.insert(word.end(), letters[i].begin(), letters[i].end());
          for (std::size_t k = 0; k < need.size(); ++k) {
            partial[k] += values[i][k];
          }
          bool found = extend(depth + 1, i);
          for (std::size_t k = 0; k < need.size(); ++k) {
            partial[k] -= values[i][k];
          }
          word.resize(size);
          if (found) {
            return true;
          }
        }
        return false;
      }

      Oracle const&                          oracle;
      group_word                             target;
      std::vector<group_word>                letters;
      std::vector<std::vector<std::int64_t>> values;
      std::vector<std::int64_t>              need;
      std::vector<std::int64_t>              partial;
      std::vector<std::int64_t>              max_step;
      group_word                             word;
      std::size_t                            length  = 0;
      bool                                   flagged = false;
    };

    Presentation           _presentation;
    RewriteSystem          _rs;
    GroupReducer           _gr;
    std::vector<word_type> _generators;
  };

}  // namespace overlap_auto

#endif  // OVERLAP_AUTO_ORACLE_HPP_
