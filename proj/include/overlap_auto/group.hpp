#ifndef OVERLAP_AUTO_GROUP_HPP_
#define OVERLAP_AUTO_GROUP_HPP_

#include <algorithm>      // for reverse, max, min
#include <cstddef>        // for size_t
#include <cstdint>        // for int64_t
#include <deque>          // for deque
#include <numeric>        // for gcd
#include <set>            // for set
#include <unordered_set>  // for unordered_set
#include <vector>         // for vector

#include "presentation.hpp"
#include "word.hpp"

namespace overlap_auto {

  // Words over X and X^{-1}: generator g is encoded as 2g, its inverse as
  // 2g + 1.
  using group_letter = std::uint8_t;
  using group_word   = std::vector<group_letter>;

  inline constexpr group_letter inverse(group_letter x) noexcept {
    return x ^ 1;
  }

  inline group_word to_group_word(word_type const& w) {
    group_word result;
    result.reserve(w.size());
    for (auto x : w) {
      result.push_back(static_cast<group_letter>(2 * x));
    }
    return result;
  }

  inline group_word inverse(group_word const& w) {
    group_word result;
    result.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      result.push_back(inverse(*it));
    }
    return result;
  }

  inline void free_reduce(group_word& w) {
    std::size_t top = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (top > 0 && w[top - 1] == inverse(w[i])) {
        --top;
      } else {
        w[top++] = w[i];
      }
    }
    w.resize(top);
  }

  inline group_word free_reduced(group_word w) {
    free_reduce(w);
    return w;
  }

  inline void cyclically_reduce(group_word& w) {
    free_reduce(w);
    std::size_t i = 0, j = w.size();
    while (j - i >= 2 && w[i] == inverse(w[j - 1])) {
      ++i;
      --j;
    }
    w = group_word(w.begin() + i, w.begin() + j);
  }

  using group_word_hash = WordHash<group_letter>;

  // Decides equality in the co-presented group. When the symmetrised
  // relators satisfy C'(1/6), Dehn's algorithm is exact; otherwise only
  // reductions that succeed are trusted and the answer may be unknown.
  class GroupReducer {
   public:
    GroupReducer() = default;

    explicit GroupReducer(Presentation const& p, std::size_t fallback_depth = 3)
        : _n(p.alphabet_size()), _fallback_depth(fallback_depth) {
      p.validate();
      std::set<group_word> variants;
      for (auto const& r : p.relations) {
        group_word rel = to_group_word(r.lhs);
        auto       inv = inverse(to_group_word(r.rhs));
        rel.insert(rel.end(), inv.begin(), inv.end());
        cyclically_reduce(rel);
        if (rel.empty()) {
          continue;
        }
        _relators.push_back(rel);
        for (auto const& base : {rel, inverse(rel)}) {
          for (std::size_t i = 0; i < base.size(); ++i) {
            group_word v(base.begin() + i, base.end());
            v.insert(v.end(), base.begin(), base.begin() + i);
            variants.insert(v);
          }
        }
      }
      _variants.assign(variants.begin(), variants.end());
      _by_first.assign(2 * _n, {});
      for (std::size_t i = 0; i < _variants.size(); ++i) {
        _by_first[_variants[i].front()].push_back(i);
        _max_relator_length
            = std::max(_max_relator_length, _variants[i].size());
      }
      _metric_ok = true;
      for (std::size_t i = 0; i < _variants.size(); ++i) {
        for (std::size_t j = i + 1; j < _variants.size(); ++j) {
          auto const& u = _variants[i];
          auto const& v = _variants[j];
          std::size_t k = 0;
          while (k < u.size() && k < v.size() && u[k] == v[k]) {
            ++k;
          }
          _max_piece_length = std::max(_max_piece_length, k);
          if (6 * k >= std::min(u.size(), v.size())) {
            _metric_ok = false;
          }
        }
      }
      compute_abelian_invariants(p);
    }

    bool metric_ok() const noexcept {
      return _metric_ok;
    }

    std::size_t max_piece_length() const noexcept {
      return _max_piece_length;
    }

    std::size_t fallback_depth() const noexcept {
      return _fallback_depth;
    }

    std::vector<group_word> const& relator_variants() const noexcept {
      return _variants;
    }

    std::vector<group_word> const& relators() const noexcept {
      return _relators;
    }

    // Repeatedly replaces a subword that is more than half of a relator
    // variant by the inverse of the remainder, freely reducing throughout.
    group_word dehn_reduce(group_word w) const {
      free_reduce(w);
      std::size_t p = 0;
      while (p < w.size()) {
        bool replaced = false;
        for (auto idx : _by_first[w[p]]) {
          auto const& v = _variants[idx];
          std::size_t m = 0;
          while (m < v.size() && p + m < w.size() && w[p + m] == v[m]) {
            ++m;
          }
          if (2 * m > v.size()) {
            group_word x(w.begin(), w.begin() + p);
            for (std::size_t k = v.size(); k > m; --k) {
              x.push_back(inverse(v[k - 1]));
            }
            x.insert(x.end(), w.begin() + p + m, w.end());
            free_reduce(x);
            w        = std::move(x);
            p        = p > 2 * _max_relator_length ? p - 2 * _max_relator_length : 0;
            replaced = true;
            break;
          }
        }
        if (!replaced) {
          ++p;
        }
      }
      return w;
    }

    // A necessary condition for w = 1: its exponent sums vanish on every
    // integer functional that kills all relators.
    bool abelian_trivial(group_word const& w) const {
      if (_functionals.empty()) {
        return true;
      }
      std::vector<std::int64_t> exp(_n, 0);
      for (auto x : w) {
        exp[x / 2] += (x & 1) ? -1 : 1;
      }
      return abelian_trivial(exp);
    }

    bool abelian_trivial(std::vector<std::int64_t> const& exponents) const {
      for (auto const& f : _functionals) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < _n; ++i) {
          s += f[i] * exponents[i];
        }
        if (s != 0) {
          return false;
        }
      }
      return true;
    }

    std::vector<std::vector<std::int64_t>> const& abelian_functionals() const {
      return _functionals;
    }

    tril is_identity(group_word const& w) const {
      if (!abelian_trivial(w)) {
        return tril::FALSE;
      }
      auto r = dehn_reduce(w);
      if (r.empty()) {
        return tril::TRUE;
      }
      if (_metric_ok) {
        return tril::FALSE;
      }
      return bounded_search(std::move(r));
    }

    tril equal(group_word const& w, group_word const& u) const {
      group_word x = w;
      auto       v = inverse(u);
      x.insert(x.end(), v.begin(), v.end());
      return is_identity(x);
    }

    // Equality of the images of two positive words.
    tril equal_positive(word_type const& w, word_type const& u) const {
      return equal(to_group_word(w), to_group_word(u));
    }

   private:
    // Breadth first search over replacements of any relator prefix by the
    // inverse of the corresponding suffix, to depth fallback_depth.
    tril bounded_search(group_word w) const {
      std::size_t const cap = w.size() + 2 * _max_relator_length;
      std::unordered_set<group_word, group_word_hash> seen{w};
      std::vector<group_word>                         frontier{w};
      for (std::size_t depth = 0; depth < _fallback_depth; ++depth) {
        std::vector<group_word> next;
        for (auto const& x : frontier) {
          for (std::size_t p = 0; p <= x.size(); ++p) {
            for (auto const& v : _variants) {
              for (std::size_t m = 0; m <= v.size(); ++m) {
                if (m > 0 && (p + m > x.size() || x[p + m - 1] != v[m - 1])) {
                  break;
                }
                group_word y(x.begin(), x.begin() + p);
                for (std::size_t k = v.size(); k > m; --k) {
                  y.push_back(inverse(v[k - 1]));
                }
                y.insert(y.end(), x.begin() + p + m, x.end());
                free_reduce(y);
                if (y.empty()) {
                  return tril::TRUE;
                }
                if (y.size() <= cap && seen.insert(y).second) {
                  next.push_back(std::move(y));
                }
              }
            }
          }
        }
        frontier = std::move(next);
      }
      return tril::unknown;
    }

    // Integer basis of the functionals vanishing on the relation vectors,
    // via the rational null space of the relation matrix.
    void compute_abelian_invariants(Presentation const& p) {
      using row = std::vector<std::int64_t>;
      std::vector<row> m;
      for (auto const& r : p.relations) {
        row v(_n, 0);
        for (auto x : r.lhs) {
          ++v[x];
        }
        for (auto x : r.rhs) {
          --v[x];
        }
        m.push_back(v);
      }
      // Fraction free row reduction.
      std::vector<std::size_t> pivots;
      std::size_t              rank = 0;
      for (std::size_t col = 0; col < _n && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) {
          ++piv;
        }
        if (piv == m.size()) {
          continue;
        }
        std::swap(m[piv], m[rank]);
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (i == rank || m[i][col] == 0) {
            continue;
          }
          std::int64_t a = m[rank][col], b = m[i][col];
          for (std::size_t k = 0; k < _n; ++k) {
            m[i][k] = a * m[i][k] - b * m[rank][k];
          }
          normalise(m[i]);
        }
        pivots.push_back(col);
        ++rank;
      }
      m.resize(rank);
      // One basis vector per free column.
      for (std::size_t free = 0; free < _n; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) {
          continue;
        }
        std::int64_t denom = 1;
        for (std::size_t i = 0; i < rank; ++i) {
          auto a = m[i][pivots[i]];
          denom  = denom / std::gcd(denom, a) * (a < 0 ? -a : a);
        }
        row f(_n, 0);
        f[free] = denom;
        for (std::size_t i = 0; i < rank; ++i) {
          f[pivots[i]] = -m[i][free] * (denom / m[i][pivots[i]]);
        }
        normalise(f);
        _functionals.push_back(f);
      }
    }

    static void normalise(std::vector<std::int64_t>& v) {
      std::int64_t g = 0;
      for (auto x : v) {
        g = std::gcd(g, x < 0 ? -x : x);
      }
      if (g > 1) {
        for (auto& x : v) {
          x /= g;
        }
      }
    }

    std::size_t                            _n              = 0;
    std::size_t                            _fallback_depth = 3;
    std::vector<group_word>                _relators;
    std::vector<group_word>                _variants;
    std::vector<std::vector<std::size_t>>  _by_first;
    std::size_t                            _max_relator_length = 0;
    std::size_t                            _max_piece_length   = 0;
    bool                                   _metric_ok          = false;
    std::vector<std::vector<std::int64_t>> _functionals;
  };

}  // namespace overlap_auto

#endif  // OVERLAP_AUTO_GROUP_HPP_
