#ifndef OVERLAP_AUTO_WORD_HPP_
#define OVERLAP_AUTO_WORD_HPP_

#include <algorithm>    // for lexicographical_compare, equal
#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for uint8_t
#include <functional>   // for less
#include <optional>     // for optional
#include <span>         // for span
#include <stdexcept>    // for runtime_error
#include <string>       // for string
#include <utility>      // for pair
#include <vector>       // for vector

namespace overlap_auto {

  // Base exception type for everything thrown by this library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Thrown when a computation observes a fact that a proven lemma forbids,
  // e.g. two decompositions where exactly one must exist.
  class InvariantViolation : public Error {
   public:
    using Error::Error;
  };

  // Three-valued truth, used wherever an oracle may have to give up.
  enum class tril : std::uint8_t { FALSE = 0, TRUE = 1, unknown = 2 };

  inline constexpr tril to_tril(bool b) noexcept {
    return b ? tril::TRUE : tril::FALSE;
  }

  inline constexpr char const* to_cstring(tril t) noexcept {
    switch (t) {
      case tril::FALSE:
        return "false";
      case tril::TRUE:
        return "true";
      default:
        return "unknown";
    }
  }

  using letter_type = std::uint8_t;
  using word_type   = std::vector<letter_type>;

  inline constexpr std::size_t max_generators = 128;

  // FNV-1a over the letters; enough for the desk-scale hash maps used here.
  template <typename Letter>
  struct WordHash {
    std::size_t operator()(std::vector<Letter> const& w) const noexcept {
      std::size_t h = 1469598103934665603ULL;
      for (auto x : w) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b9;
        h *= 1099511628211ULL;
      }
      return h;
    }
  };

  using word_hash = WordHash<letter_type>;

  ////////////////////////////////////////////////////////////////////////
  // Shortlex
  ////////////////////////////////////////////////////////////////////////

  enum class order : std::int8_t { LESS = -1, EQUAL = 0, GREATER = 1 };

  // Shorter sequences come first; sequences of equal length are compared
  // lexicographically using `less` on the entries.
  template <typename T, typename Compare = std::less<T>>
  order shortlex_compare(std::span<T const> u,
                         std::span<T const> v,
                         Compare less = Compare()) {
    if (u.size() != v.size()) {
      return u.size() < v.size() ? order::LESS : order::GREATER;
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (less(u[i], v[i])) {
        return order::LESS;
      } else if (less(v[i], u[i])) {
        return order::GREATER;
      }
    }
    return order::EQUAL;
  }

  template <typename T, typename Compare = std::less<T>>
  order shortlex_compare(std::vector<T> const& u,
                         std::vector<T> const& v,
                         Compare less = Compare()) {
    return shortlex_compare(
        std::span<T const>(u), std::span<T const>(v), less);
  }

  template <typename T>
  bool shortlex_less(std::vector<T> const& u, std::vector<T> const& v) {
    return shortlex_compare(u, v) == order::LESS;
  }

  struct ShortlexLess {
    template <typename T>
    bool operator()(std::vector<T> const& u, std::vector<T> const& v) const {
      return shortlex_less(u, v);
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Subwords
  ////////////////////////////////////////////////////////////////////////

  // All (possibly overlapping) 0-based start positions of `needle` in
  // `haystack`, in increasing order.
  template <typename T>
  std::vector<std::size_t> find_subword_occurrences(std::span<T const> haystack,
                                                    std::span<T const> needle) {
    if (needle.empty()) {
      throw Error("find_subword_occurrences: the needle must be non-empty");
    }
    std::vector<std::size_t> result;
    if (needle.size() > haystack.size()) {
      return result;
    }
    for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
      if (std::equal(needle.begin(), needle.end(), haystack.begin() + i)) {
        result.push_back(i);
      }
    }
    return result;
  }

  template <typename T>
  std::vector<std::size_t> find_subword_occurrences(
      std::vector<T> const& haystack,
      std::vector<T> const& needle) {
    return find_subword_occurrences(std::span<T const>(haystack),
                                    std::span<T const>(needle));
  }

  template <typename T>
  bool is_subword(std::vector<T> const& needle,
                  std::vector<T> const& haystack) {
    return needle.empty()
           || std::search(
                  haystack.begin(), haystack.end(), needle.begin(), needle.end())
                  != haystack.end();
  }

  template <typename T>
  bool is_prefix(std::vector<T> const& prefix, std::vector<T> const& w) {
    return prefix.size() <= w.size()
           && std::equal(prefix.begin(), prefix.end(), w.begin());
  }

  template <typename T>
  bool is_suffix(std::vector<T> const& suffix, std::vector<T> const& w) {
    return suffix.size() <= w.size()
           && std::equal(suffix.begin(), suffix.end(), w.end() - suffix.size());
  }

  template <typename T>
  std::vector<T> subword(std::vector<T> const& w,
                         std::size_t      first,
                         std::size_t      last) {
    return std::vector<T>(w.begin() + first, w.begin() + last);
  }

  template <typename T>
  std::vector<T> concat(std::vector<T> u, std::vector<T> const& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
  }

  template <typename T>
  std::vector<T> power(std::vector<T> const& w, std::size_t n) {
    std::vector<T> result;
    result.reserve(w.size() * n);
    for (std::size_t i = 0; i < n; ++i) {
      result.insert(result.end(), w.begin(), w.end());
    }
    return result;
  }

  // Every non-empty subword of `w`, with repetitions.
  template <typename T>
  std::vector<std::vector<T>> all_subwords(std::vector<T> const& w) {
    std::vector<std::vector<T>> result;
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = i + 1; j <= w.size(); ++j) {
        result.push_back(subword(w, i, j));
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Padded convolution
  ////////////////////////////////////////////////////////////////////////

  // One letter of the padded pair alphabet; an empty optional is the padding
  // symbol $. The pair ($,$) is never produced.
  template <typename T>
  struct PaddedPair {
    std::optional<T> first;
    std::optional<T> second;

    friend bool operator==(PaddedPair const&, PaddedPair const&) = default;
  };

  template <typename T>
  using padded_pair_word = std::vector<PaddedPair<T>>;

  template <typename T>
  padded_pair_word<T> convolve(std::span<T const> w, std::span<T const> u) {
    padded_pair_word<T> result;
    std::size_t const   n = std::max(w.size(), u.size());
    result.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      PaddedPair<T> p;
      if (i < w.size()) {
        p.first = w[i];
      }
      if (i < u.size()) {
        p.second = u[i];
      }
      result.push_back(p);
    }
    return result;
  }

  template <typename T>
  padded_pair_word<T> convolve(std::vector<T> const& w,
                               std::vector<T> const& u) {
    return convolve(std::span<T const>(w), std::span<T const>(u));
  }

  // Inverse of convolve; throws if the padding is not a contiguous suffix on
  // a single track or if ($,$) occurs.
  template <typename T>
  std::pair<std::vector<T>, std::vector<T>> project(
      padded_pair_word<T> const& pw) {
    std::pair<std::vector<T>, std::vector<T>> result;
    bool first_done = false, second_done = false;
    for (auto const& p : pw) {
      if (!p.first && !p.second) {
        throw Error("project: the pair ($,$) is not a padded pair letter");
      }
      if (p.first) {
        if (first_done) {
          throw Error("project: letter after padding on the first track");
        }
        result.first.push_back(*p.first);
      } else {
        first_done = true;
      }
      if (p.second) {
        if (second_done) {
          throw Error("project: letter after padding on the second track");
        }
        result.second.push_back(*p.second);
      } else {
        second_done = true;
      }
    }
    return result;
  }

}  // namespace overlap_auto

#endif  // OVERLAP_AUTO_WORD_HPP_
