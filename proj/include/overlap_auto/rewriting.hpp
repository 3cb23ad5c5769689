#ifndef OVERLAP_AUTO_REWRITING_HPP_
#define OVERLAP_AUTO_REWRITING_HPP_

#include <algorithm>      // for max, equal
#include <cstddef>        // for size_t
#include <deque>          // for deque
#include <unordered_map>  // for unordered_map
#include <unordered_set>  // for unordered_set
#include <utility>        // for move
#include <vector>         // for vector

#include "presentation.hpp"
#include "word.hpp"

namespace overlap_auto {

  struct Rule {
    word_type lhs;
    word_type rhs;

    friend bool operator==(Rule const&, Rule const&) = default;
  };

  struct RewriteSettings {
    std::size_t completion_bound = 256;  // maximum number of rules
    std::size_t slack            = 0;    // 0 means: longest defining word
    std::size_t class_cap        = 100000;
  };

  // Result of enumerating (part of) an equivalence class.
  struct ClassSlice {
    std::vector<word_type> words;
    bool                   complete = true;  // false if the cap was hit
  };

  // Rules oriented shortlex decreasing, closed under critical pairs with
  // Knuth-Bendix completion up to a bound on the number of rules.
  class RewriteSystem {
   public:
    RewriteSystem() = default;

    explicit RewriteSystem(Presentation const& p, RewriteSettings s = {})
        : _settings(s), _relations(p.relations), _n(p.alphabet_size()) {
      p.validate();
      if (_settings.slack == 0) {
        for (auto const& r : p.relations) {
          _settings.slack
              = std::max({_settings.slack, r.lhs.size(), r.rhs.size()});
        }
      }
      std::vector<Rule> pending;
      for (auto const& r : p.relations) {
        if (r.lhs == r.rhs) {
          throw Error("unorientable relation: both sides are "
                      + p.to_string(r.lhs));
        }
        pending.push_back(orient(r.lhs, r.rhs));
      }
      complete(std::move(pending));
    }

    std::vector<Rule> const& rules() const noexcept {
      return _rules;
    }

    bool confluent() const noexcept {
      return _confluent;
    }

    std::size_t completion_bound() const noexcept {
      return _settings.completion_bound;
    }

    std::size_t slack() const noexcept {
      return _settings.slack;
    }

    static Rule orient(word_type const& u, word_type const& v) {
      return shortlex_less(u, v) ? Rule{v, u} : Rule{u, v};
    }

    // Rewrites with the current rules to an irreducible word. Always
    // terminates because every rule is shortlex decreasing.
    word_type rewrite(word_type const& w) const {
      word_type out;
      word_type in(w.rbegin(), w.rend());
      out.reserve(w.size());
      while (!in.empty()) {
        out.push_back(in.back());
        in.pop_back();
        for (auto const& rule : _rules) {
          auto const& l = rule.lhs;
          if (l.size() <= out.size() && l.back() == out.back()
              && std::equal(l.begin(), l.end(), out.end() - l.size())) {
            out.resize(out.size() - l.size());
            in.insert(in.end(), rule.rhs.rbegin(), rule.rhs.rend());
            break;
          }
        }
      }
      return out;
    }

    word_type normal_form(word_type const& w) const {
      if (!_confluent) {
        throw Error("normal_form requires a confluent rewriting system");
      }
      return rewrite(w);
    }

    // Exact if confluent, otherwise a bounded bidirectional search over
    // applications of the defining relations.
    tril equal(word_type const& w, word_type const& u) const {
      if (w == u) {
        return tril::TRUE;
      }
      if (_confluent) {
        return to_tril(rewrite(w) == rewrite(u));
      }
      return bounded_search(w, u);
    }

    // All overlap words of pairs of left hand sides (proper overlaps and
    // inclusions). Empty exactly when there is nothing to resolve.
    std::vector<word_type> critical_overlaps() const {
      std::vector<word_type> result;
      for (std::size_t i = 0; i < _rules.size(); ++i) {
        for (std::size_t j = 0; j < _rules.size(); ++j) {
          for (auto& cp : critical_pairs(_rules[i], _rules[j], i == j)) {
            result.push_back(std::move(cp.overlap));
          }
        }
      }
      return result;
    }

    // Words equivalent to w of length at most max_length, found by breadth
    // first search applying relations and rules in both directions.
    // Complete when the system is confluent: any two such words are joined
    // through their common normal form, and no rule increases length.
    ClassSlice enumerate_class(word_type const& w,
                               std::size_t      max_length) const {
      ClassSlice                               result;
      std::unordered_set<word_type, word_hash> seen{w};
      std::deque<word_type>                    queue{w};
      auto apply = [&](word_type const& v, word_type const& from, word_type const& to) {
        if (v.size() - std::min(v.size(), from.size()) + to.size() > max_length) {
          return;
        }
        for (auto pos : find_subword_occurrences(v, from)) {
          word_type x(v.begin(), v.begin() + pos);
          x.insert(x.end(), to.begin(), to.end());
          x.insert(x.end(), v.begin() + pos + from.size(), v.end());
          if (seen.insert(x).second) {
            queue.push_back(std::move(x));
          }
        }
      };
      while (!queue.empty()) {
        word_type v = std::move(queue.front());
        queue.pop_front();
        result.words.push_back(v);
        if (result.words.size() > _settings.class_cap) {
          result.complete = false;
          break;
        }
        for (auto const& r : _relations) {
          apply(v, r.lhs, r.rhs);
          apply(v, r.rhs, r.lhs);
        }
        for (auto const& r : _rules) {
          apply(v, r.lhs, r.rhs);
          apply(v, r.rhs, r.lhs);
        }
      }
      if (!_confluent) {
        result.complete = false;
      }
      return result;
    }

    // True iff no strictly shorter word is equal to w in the semigroup.
    tril is_geodesic(word_type const& w) const {
      auto slice = enumerate_class(w, w.size());
      for (auto const& v : slice.words) {
        if (v.size() < w.size()) {
          return tril::FALSE;
        }
      }
      return slice.complete ? tril::TRUE : tril::unknown;
    }

   private:
    struct CriticalPair {
      word_type overlap;
      word_type left;
      word_type right;
    };

    static std::vector<CriticalPair> critical_pairs(Rule const& r1,
                                                    Rule const& r2,
                                                    bool        same) {
      std::vector<CriticalPair> result;
      auto const&               l1 = r1.lhs;
      auto const&               l2 = r2.lhs;
      // l1 = xy, l2 = yz with x, y, z non-empty
      for (std::size_t k = 1; k < std::min(l1.size(), l2.size()) + 0; ++k) {
        if (std::equal(l1.end() - k, l1.end(), l2.begin())) {
          word_type overlap = l1;
          overlap.insert(overlap.end(), l2.begin() + k, l2.end());
          word_type left = r1.rhs;
          left.insert(left.end(), l2.begin() + k, l2.end());
          word_type right(l1.begin(), l1.end() - k);
          right.insert(right.end(), r2.rhs.begin(), r2.rhs.end());
          result.push_back({overlap, left, right});
        }
      }
      // l2 a proper subword of l1
      if (!same && l2.size() <= l1.size()) {
        for (auto pos : find_subword_occurrences(l1, l2)) {
          word_type right(l1.begin(), l1.begin() + pos);
          right.insert(right.end(), r2.rhs.begin(), r2.rhs.end());
          right.insert(right.end(), l1.begin() + pos + l2.size(), l1.end());
          result.push_back({l1, r1.rhs, right});
        }
      }
      return result;
    }

    void add_rule(Rule rule, std::vector<Rule>& pending) {
      // Rules whose left side becomes reducible are removed and requeued.
      std::vector<Rule> kept;
      for (auto& r : _rules) {
        if (is_subword(rule.lhs, r.lhs)) {
          pending.push_back(std::move(r));
        } else {
          kept.push_back(std::move(r));
        }
      }
      _rules = std::move(kept);
      _rules.push_back(std::move(rule));
      for (auto& r : _rules) {
        r.rhs = rewrite(r.rhs);
      }
    }

    void complete(std::vector<Rule> pending) {
      _confluent = false;
      while (true) {
        while (!pending.empty()) {
          Rule r = std::move(pending.back());
          pending.pop_back();
          auto u = rewrite(r.lhs);
          auto v = rewrite(r.rhs);
          if (u != v) {
            add_rule(orient(u, v), pending);
            if (_rules.size() > _settings.completion_bound) {
              return;
            }
          }
        }
        for (std::size_t i = 0; i < _rules.size(); ++i) {
          for (std::size_t j = 0; j < _rules.size(); ++j) {
            for (auto& cp : critical_pairs(_rules[i], _rules[j], i == j)) {
              if (rewrite(cp.left) != rewrite(cp.right)) {
                pending.push_back({std::move(cp.left), std::move(cp.right)});
              }
            }
          }
        }
        if (pending.empty()) {
          _confluent = true;
          return;
        }
      }
    }

    tril bounded_search(word_type const& w, word_type const& u) const {
      std::size_t const cap = std::max(w.size(), u.size()) + _settings.slack;
      std::unordered_map<word_type, int, word_hash> side;
      std::deque<word_type>                          queue;
      side.emplace(w, 0);
      side.emplace(u, 1);
      queue.push_back(w);
      queue.push_back(u);
      bool pruned = false;
      while (!queue.empty()) {
        word_type v = std::move(queue.front());
        queue.pop_front();
        int const s = side.at(v);
        for (auto const& r : _relations) {
          for (int dir = 0; dir < 2; ++dir) {
            auto const& from = dir == 0 ? r.lhs : r.rhs;
            auto const& to   = dir == 0 ? r.rhs : r.lhs;
            for (auto pos : find_subword_occurrences(v, from)) {
              word_type x(v.begin(), v.begin() + pos);
              x.insert(x.end(), to.begin(), to.end());
              x.insert(x.end(), v.begin() + pos + from.size(), v.end());
              if (x.size() > cap) {
                pruned = true;
                continue;
              }
              auto [it, inserted] = side.emplace(x, s);
              if (!inserted && it->second != s) {
                return tril::TRUE;
              }
              if (inserted) {
                queue.push_back(std::move(x));
              }
              if (side.size() > _settings.class_cap) {
                return tril::unknown;
              }
            }
          }
        }
      }
      // Both classes were enumerated without ever meeting.
      return pruned ? tril::unknown : tril::FALSE;
    }

    RewriteSettings       _settings;
    std::vector<Relation> _relations;
    std::size_t           _n = 0;
    std::vector<Rule>     _rules;
    bool                  _confluent = false;
  };

  inline RewriteSystem build_semigroup_oracle(Presentation const& p,
                                              RewriteSettings     s = {}) {
    return RewriteSystem(p, s);
  }

}  // namespace overlap_auto

#endif  // OVERLAP_AUTO_REWRITING_HPP_
