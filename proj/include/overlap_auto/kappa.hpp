#ifndef OVERLAP_AUTO_KAPPA_HPP_
#define OVERLAP_AUTO_KAPPA_HPP_

#include <algorithm>      // for sort, min_element
#include <cstddef>        // for size_t
#include <cstdint>        // for uint8_t
#include <optional>       // for optional
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "oracle.hpp"
#include "phi.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace overlap_auto {

  struct KappaVector {
    std::vector<std::uint8_t> bits;

    std::size_t size() const noexcept {
      return bits.size();
    }

    bool operator[](std::size_t i) const {
      return bits[i] != 0;
    }

    bool is_zero() const noexcept {
      return std::find(bits.begin(), bits.end(), 1) == bits.end();
    }

    std::optional<std::size_t> first_set() const {
      auto it = std::find(bits.begin(), bits.end(), 1);
      if (it == bits.end()) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - bits.begin());
    }

    std::string to_string() const {
      std::string result;
      for (auto b : bits) {
        result += b ? '1' : '0';
      }
      return result;
    }

    friend bool operator==(KappaVector const&, KappaVector const&) = default;
  };

  enum class piefer { PRECEDES, NEITHER };

  inline bool kappa_precedes(KappaVector const& a, KappaVector const& b) {
    return a == b || shortlex_less(a.bits, b.bits);
  }

  // A < B strictly: A precedes B and not conversely.
  inline bool kappa_strictly_precedes(KappaVector const& a,
                                      KappaVector const& b) {
    return shortlex_less(a.bits, b.bits);
  }

  // A defining word occurring in eta(A) whose piece length exceeds that of
  // its complement; position is 0-based in eta(A).
  struct InefficiencyWitness {
    word_type   word;
    std::size_t position;

    friend bool operator==(InefficiencyWitness const&,
                           InefficiencyWitness const&) = default;
  };

  // One way of reading a bad defining word around letter i: the last
  // `left` letters of W_{i-1}, all of W_i and the first `right` letters of
  // W_{i+1}.
  struct KappaWindow {
    std::size_t left;
    std::size_t right;
    word_type   word;
  };

  class KappaContext {
   public:
    explicit KappaContext(PhiAlphabet const& phi)
        : _phi(phi), _pieces(phi.presentation()) {
      auto const& p = phi.presentation();
      for (auto const& w : _pieces.defining_words()) {
        auto lp  = _pieces.piece_length(w);
        bool bad = false;
        for (auto const& r : p.relations) {
          if ((r.lhs == w && _pieces.piece_length(r.rhs) < lp)
              || (r.rhs == w && _pieces.piece_length(r.lhs) < lp)) {
            bad = true;
          }
        }
        _bad.emplace(w, bad);
        if (bad) {
          _bad_words.push_back(w);
        }
      }
      std::sort(_bad_words.begin(), _bad_words.end(), ShortlexLess());
      _hypotheses = check_k32(_pieces).holds() && check_dagger(_pieces).holds;
    }

    // Whether the presentation satisfies K(3,2) and the dagger condition.
    bool hypotheses_hold() const noexcept {
      return _hypotheses;
    }

    PhiAlphabet const& phi() const noexcept {
      return _phi;
    }

    PieceTable const& pieces() const noexcept {
      return _pieces;
    }

    // Defining words with larger piece length than their complement.
    std::vector<word_type> const& bad_words() const noexcept {
      return _bad_words;
    }

    bool is_bad(word_type const& w) const {
      auto it = _bad.find(w);
      return it != _bad.end() && it->second;
    }

    bool is_defining(word_type const& w) const {
      return _bad.count(w) != 0;
    }

    // All windows witnessing bit i (0-based) of kappa_A. With bad_only
    // false, every window reading some defining word is returned.
    std::vector<KappaWindow> windows(phi_word const& a,
                                     std::size_t     i,
                                     bool            bad_only = true) const {
      std::vector<KappaWindow> result;
      scan(a, i, bad_only, [&result](KappaWindow&& w) {
        result.push_back(std::move(w));
        return false;
      });
      return result;
    }

    bool bit(phi_word const& a, std::size_t i) const {
      return scan(a, i, true, [](KappaWindow&&) { return true; });
    }

    KappaVector kappa_vector(phi_word const& a) const {
      KappaVector k;
      k.bits.resize(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        k.bits[i] = bit(a, i);
      }
      return k;
    }

    bool is_efficient(phi_word const& a) const {
      if (!is_admissible(_phi, a)) {
        return false;
      }
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (bit(a, i)) {
          return false;
        }
      }
      return true;
    }

    // Leftmost occurrence in eta(A) of a bad defining word; ties at the same
    // position are broken shortlex.
    std::optional<InefficiencyWitness>
    inefficiency_witness(phi_word const& a) const {
      if (!is_admissible(_phi, a)) {
        throw Error(_phi.to_string(a) + " is not admissible");
      }
      auto const w = _phi.eta(a);
      for (std::size_t pos = 0; pos < w.size(); ++pos) {
        for (auto const& b : _bad_words) {
          if (pos + b.size() <= w.size()
              && std::equal(b.begin(), b.end(), w.begin() + pos)) {
            return InefficiencyWitness{b, pos};
          }
        }
      }
      return std::nullopt;
    }

    piefer compare(phi_word const& a, phi_word const& b) const {
      return kappa_precedes(kappa_vector(a), kappa_vector(b))
                 ? piefer::PRECEDES
                 : piefer::NEITHER;
    }

    bool strictly_precedes(phi_word const& a, phi_word const& b) const {
      return kappa_strictly_precedes(kappa_vector(a), kappa_vector(b));
    }

   private:
    // Calls f on each window for bit i until f returns true.
    template <typename F>
    bool scan(phi_word const& a, std::size_t i, bool bad_only, F&& f) const {
      static word_type const empty;
      auto const& prev = i > 0 ? _phi.word(a[i - 1]) : empty;
      auto const& cur  = _phi.word(a[i]);
      auto const& next = i + 1 < a.size() ? _phi.word(a[i + 1]) : empty;
      word_type   w;
      for (std::size_t left = 0; left <= prev.size(); ++left) {
        for (std::size_t right = 0; right <= next.size(); ++right) {
          w.assign(prev.end() - left, prev.end());
          w.insert(w.end(), cur.begin(), cur.end());
          w.insert(w.end(), next.begin(), next.begin() + right);
          if ((bad_only ? is_bad(w) : is_defining(w))
              && f(KappaWindow{left, right, w})) {
            return true;
          }
        }
      }
      return false;
    }

    PhiAlphabet                                    _phi;
    PieceTable                                     _pieces;
    std::unordered_map<word_type, bool, word_hash> _bad;
    std::vector<word_type>                         _bad_words;
    bool                                           _hypotheses = false;
  };

  inline piefer piefer_compare(KappaContext const& ctx,
                               phi_word const&     a,
                               phi_word const&     b) {
    return ctx.compare(a, b);
  }

  // The Phi-words B with |B| <= length_bound and pi(B) = pi(A) whose kappa
  // vector is shortlex minimal, in shortlex order.
  inline std::vector<phi_word>
  minimal_representatives(Oracle const&       oracle,
                          KappaContext const& ctx,
                          phi_word const&     a,
                          std::size_t         length_bound) {
    auto const& rs = oracle.rewriting();
    if (!rs.confluent()) {
      throw Error("minimal_representatives needs a confluent rewriting "
                  "system; completion stopped at "
                  + std::to_string(rs.completion_bound()) + " rules");
    }
    auto const& phi = ctx.phi();
    auto const  w   = phi.eta(a);
    if (w.empty()) {
      return {phi_word{}};
    }
    auto slice = rs.enumerate_class(w, length_bound * phi.max_word_length());
    if (!slice.complete) {
      throw Error("class of " + phi.presentation().to_string(w)
                  + " exceeds the enumeration cap");
    }
    for (std::size_t len = 1; len <= length_bound; ++len) {
      std::vector<phi_word> candidates;
      for (auto const& v : slice.words) {
        if (v.size() > len * phi.max_word_length()) {
          continue;
        }
        for_each_decomposition(phi, v, len, [&](phi_word const& b) {
          if (b.size() == len) {
            candidates.push_back(b);
          }
        });
      }
      if (candidates.empty()) {
        continue;
      }
      std::vector<KappaVector> kappas;
      for (auto const& b : candidates) {
        kappas.push_back(ctx.kappa_vector(b));
      }
      auto best = *std::min_element(
          kappas.begin(), kappas.end(), [](auto const& x, auto const& y) {
            return shortlex_less(x.bits, y.bits);
          });
      std::vector<phi_word> result;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (kappas[i] == best) {
          result.push_back(candidates[i]);
        }
      }
      std::sort(result.begin(), result.end(), ShortlexLess());
      return result;
    }
    return {};
  }

}  // namespace overlap_auto

#endif  // OVERLAP_AUTO_KAPPA_HPP_
