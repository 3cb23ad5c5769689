// Slow reference implementations used only by the tests. They work from the
// definitions directly and share no code with the library beyond the
// Presentation data type.

#ifndef OVERLAP_AUTO_TESTS_BRUTE_HPP_
#define OVERLAP_AUTO_TESTS_BRUTE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "overlap_auto/presentation.hpp"

namespace brute {

  using overlap_auto::Presentation;
  using word = std::vector<std::uint8_t>;

  inline constexpr std::size_t INF = std::numeric_limits<std::size_t>::max();

  inline std::vector<word> defining_words(Presentation const& p) {
    std::set<word> s;
    for (auto const& r : p.relations) {
      s.insert(r.lhs);
      s.insert(r.rhs);
    }
    return {s.begin(), s.end()};
  }

  // P is a piece when W1 = U1 P U2 and W2 = V1 P V2 for defining words with
  // (U1, U2) != (V1, V2).
  inline std::set<word> pieces(Presentation const& p) {
    // context: (defining word, prefix U, suffix V)
    std::vector<std::pair<word, std::pair<word, word>>> occ;
    for (auto const& w : defining_words(p)) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j <= w.size(); ++j) {
          occ.push_back({word(w.begin() + i, w.begin() + j),
                         {word(w.begin(), w.begin() + i),
                          word(w.begin() + j, w.end())}});
        }
      }
    }
    std::set<word> result;
    for (std::size_t x = 0; x < occ.size(); ++x) {
      for (std::size_t y = 0; y < occ.size(); ++y) {
        if (x != y && occ[x].first == occ[y].first
            && occ[x].second != occ[y].second) {
          result.insert(occ[x].first);
        }
      }
    }
    return result;
  }

  // Minimum over all decompositions into pieces, by exhaustive recursion.
  inline std::size_t lp(std::set<word> const& ps, word const& w) {
    if (w.empty()) {
      return 0;
    }
    std::size_t best = INF;
    for (std::size_t k = 1; k <= w.size(); ++k) {
      if (ps.count(word(w.begin(), w.begin() + k))) {
        auto rest = lp(ps, word(w.begin() + k, w.end()));
        if (rest != INF) {
          best = std::min(best, rest + 1);
        }
      }
    }
    return best;
  }

  // Words equal to w in the semigroup, by applying relations in both
  // directions without exceeding max_length.
  inline std::set<word> class_of(Presentation const& p,
                                 word const&         w,
                                 std::size_t         max_length) {
    std::set<word>   seen{w};
    std::deque<word> queue{w};
    while (!queue.empty()) {
      word v = queue.front();
      queue.pop_front();
      for (auto const& r : p.relations) {
        for (int dir = 0; dir < 2; ++dir) {
          word const& from = dir ? r.rhs : r.lhs;
          word const& to   = dir ? r.lhs : r.rhs;
          for (std::size_t i = 0; i + from.size() <= v.size(); ++i) {
            if (!std::equal(from.begin(), from.end(), v.begin() + i)) {
              continue;
            }
            word x(v.begin(), v.begin() + i);
            x.insert(x.end(), to.begin(), to.end());
            x.insert(x.end(), v.begin() + i + from.size(), v.end());
            if (x.size() <= max_length && seen.insert(x).second) {
              queue.push_back(x);
            }
          }
        }
      }
    }
    return seen;
  }

  inline bool equal(Presentation const& p,
                    word const&         u,
                    word const&         v,
                    std::size_t         slack = 4) {
    return class_of(p, u, std::max(u.size(), v.size()) + slack).count(v) != 0;
  }

  // All words of length exactly n over k letters, in lexicographic order.
  inline std::vector<word> words_of_length(std::size_t k, std::size_t n) {
    std::vector<word> result{word()};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<word> next;
      for (auto const& w : result) {
        for (std::size_t x = 0; x < k; ++x) {
          word v = w;
          v.push_back(static_cast<std::uint8_t>(x));
          next.push_back(v);
        }
      }
      result = std::move(next);
    }
    return result;
  }

  inline std::vector<word> words_up_to(std::size_t k, std::size_t n) {
    std::vector<word> result;
    for (std::size_t len = 0; len <= n; ++len) {
      auto ws = words_of_length(k, len);
      result.insert(result.end(), ws.begin(), ws.end());
    }
    return result;
  }

  // The set B of non-empty subwords of defining words.
  inline std::set<word> subwords(Presentation const& p) {
    std::set<word> result;
    for (auto const& w : defining_words(p)) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j <= w.size(); ++j) {
          result.insert(word(w.begin() + i, w.begin() + j));
        }
      }
    }
    return result;
  }

  // Phi-words are represented here by the list of their letters' words.
  using split = std::vector<word>;

  inline word join(split const& a) {
    word result;
    for (auto const& w : a) {
      result.insert(result.end(), w.begin(), w.end());
    }
    return result;
  }

  // Every way of cutting w into members of B.
  inline std::vector<split> splits(std::set<word> const& b, word const& w) {
    if (w.empty()) {
      return {split()};
    }
    std::vector<split> result;
    for (std::size_t k = 1; k <= w.size(); ++k) {
      word head(w.begin(), w.begin() + k);
      if (!b.count(head)) {
        continue;
      }
      for (auto& rest : splits(b, word(w.begin() + k, w.end()))) {
        rest.insert(rest.begin(), head);
        result.push_back(std::move(rest));
      }
    }
    return result;
  }

  inline bool admissible(std::set<word> const& b, split const& a) {
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      word w = a[i];
      w.insert(w.end(), a[i + 1].begin(), a[i + 1].end());
      if (b.count(w)) {
        return false;
      }
    }
    return true;
  }

  // Defining words whose piece length exceeds that of the other side.
  inline std::set<word> bad_words(Presentation const& p) {
    auto           ps = pieces(p);
    std::set<word> result;
    for (auto const& r : p.relations) {
      auto l = lp(ps, r.lhs), q = lp(ps, r.rhs);
      if (l > q) {
        result.insert(r.lhs);
      }
      if (q > l) {
        result.insert(r.rhs);
      }
    }
    return result;
  }

  // Bit i is set when some bad word occurs in W_{i-1} W_i W_{i+1}, starting
  // no later than W_i starts and ending no earlier than W_i ends.
  inline std::vector<int> kappa(std::set<word> const& bad, split const& a) {
    std::vector<int> result(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      word        w;
      std::size_t begin = 0;
      if (i > 0) {
        w     = a[i - 1];
        begin = w.size();
      }
      w.insert(w.end(), a[i].begin(), a[i].end());
      std::size_t const end = w.size();
      if (i + 1 < a.size()) {
        w.insert(w.end(), a[i + 1].begin(), a[i + 1].end());
      }
      for (auto const& r : bad) {
        for (std::size_t s = 0; s + r.size() <= w.size(); ++s) {
          if (s <= begin && s + r.size() >= end
              && std::equal(r.begin(), r.end(), w.begin() + s)) {
            result[i] = 1;
          }
        }
      }
    }
    return result;
  }

  // Shortlex precedence on 0/1 vectors, or equality.
  inline bool piefer_precedes(std::vector<int> const& x,
                              std::vector<int> const& y) {
    if (x.size() != y.size()) {
      return x.size() < y.size();
    }
    return x <= y;
  }

  // Left-greedy: no letter extends by the first generator of the next one.
  inline bool left_greedy(std::set<word> const& b, split const& a) {
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      word w = a[i];
      w.push_back(a[i + 1].front());
      if (b.count(w)) {
        return false;
      }
    }
    return true;
  }

  inline std::mt19937_64 rng(std::uint64_t seed) {
    return std::mt19937_64(seed);
  }

}  // namespace brute

#endif  // OVERLAP_AUTO_TESTS_BRUTE_HPP_
