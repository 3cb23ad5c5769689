#ifndef OVERLAP_AUTO_PHI_HPP_
#define OVERLAP_AUTO_PHI_HPP_

#include <algorithm>      // for sort, find, min
#include <cstddef>        // for size_t
#include <cstdint>        // for uint16_t
#include <functional>     // for function
#include <optional>       // for optional
#include <string>         // for string
#include <string_view>    // for string_view
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "presentation.hpp"
#include "word.hpp"

namespace overlap_auto {

  // A symbol standing for a non-empty subword of a defining word.
  enum class phi_letter : std::uint16_t {};
  using phi_word      = std::vector<phi_letter>;
  using phi_word_hash = WordHash<phi_letter>;

  // Stands for the empty word. Never produced by the public operations.
  inline constexpr phi_letter identity_letter{0xFFFF};

  inline constexpr std::size_t index(phi_letter x) noexcept {
    return static_cast<std::size_t>(x);
  }

  // The complement of the defining word w: the other side of the relation
  // containing it.
  inline word_type complement(Presentation const& p, word_type const& w) {
    std::optional<word_type> result;
    for (auto const& r : p.relations) {
      word_type const* other = nullptr;
      if (r.lhs == w) {
        other = &r.rhs;
      } else if (r.rhs == w) {
        other = &r.lhs;
      }
      if (other != nullptr) {
        if (result && *result != *other) {
          throw Error("complement of " + p.to_string(w)
                      + " is not unique: it occurs in several relations");
        }
        result = *other;
      }
    }
    if (!result) {
      throw Error(p.to_string(w) + " is not a defining word");
    }
    return *result;
  }

  class PhiAlphabet {
   public:
    explicit PhiAlphabet(Presentation const& p) : _presentation(p) {
      p.validate();
      for (auto const& w : p.defining_words()) {
        for (auto& u : all_subwords(w)) {
          if (!u.empty()
              && std::find(_words.begin(), _words.end(), u) == _words.end()) {
            _words.push_back(std::move(u));
          }
        }
      }
      std::sort(_words.begin(), _words.end(), ShortlexLess());
      if (_words.size() >= index(identity_letter)) {
        throw Error("too many subwords of defining words");
      }
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _symbol.emplace(_words[i], static_cast<phi_letter>(i));
        _max_length = std::max(_max_length, _words[i].size());
      }
      std::size_t const n = _words.size(), m = p.alphabet_size();
      _concat.assign(n * n, none);
      _extend.assign(n * m, none);
      _generator.assign(m, none);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (auto z = symbol_of(overlap_auto::concat(_words[x], _words[y]))) {
            _concat[x * n + y] = index(*z);
          }
        }
        for (std::size_t g = 0; g < m; ++g) {
          word_type w = _words[x];
          w.push_back(static_cast<letter_type>(g));
          if (auto z = symbol_of(w)) {
            _extend[x * m + g] = index(*z);
          }
        }
      }
      for (std::size_t g = 0; g < m; ++g) {
        if (auto z = symbol_of({static_cast<letter_type>(g)})) {
          _generator[g] = index(*z);
        }
      }
    }

    Presentation const& presentation() const noexcept {
      return _presentation;
    }

    std::size_t size() const noexcept {
      return _words.size();
    }

    // Shortlex ordered; the i-th entry is the word of letter i.
    std::vector<word_type> const& b_set() const noexcept {
      return _words;
    }

    std::size_t max_word_length() const noexcept {
      return _max_length;
    }

    std::vector<phi_letter> letters() const {
      std::vector<phi_letter> result;
      for (std::size_t i = 0; i < _words.size(); ++i) {
        result.push_back(static_cast<phi_letter>(i));
      }
      return result;
    }

    word_type const& word(phi_letter x) const {
      static word_type const empty;
      if (x == identity_letter) {
        return empty;
      }
      return _words.at(index(x));
    }

    bool contains(word_type const& w) const {
      return _symbol.count(w) != 0;
    }

    std::optional<phi_letter> symbol_of(word_type const& w) const {
      auto it = _symbol.find(w);
      if (it == _symbol.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    phi_letter letter(word_type const& w) const {
      if (auto x = symbol_of(w)) {
        return *x;
      }
      throw Error(_presentation.to_string(w)
                  + " is not a subword of a defining word");
    }

    // The letter for the concatenation of the words of x and y, if any.
    std::optional<phi_letter> concat(phi_letter x, phi_letter y) const {
      return lookup(_concat[index(x) * _words.size() + index(y)]);
    }

    // The letter for the word of x followed by the generator g, if any.
    std::optional<phi_letter> extend(phi_letter x, letter_type g) const {
      return lookup(_extend[index(x) * _presentation.alphabet_size() + g]);
    }

    std::optional<phi_letter> generator_letter(letter_type g) const {
      return lookup(_generator.at(g));
    }

    word_type eta(phi_word const& a) const {
      word_type result;
      for (auto x : a) {
        auto const& w = word(x);
        result.insert(result.end(), w.begin(), w.end());
      }
      return result;
    }

    // The word of each letter, for distance computations over Phi.
    std::vector<word_type> images(phi_word const& a) const {
      std::vector<word_type> result;
      for (auto x : a) {
        result.push_back(word(x));
      }
      return result;
    }

    std::string to_string(phi_letter x) const {
      return "[" + _presentation.to_string(word(x)) + "]";
    }

    std::string to_string(phi_word const& a) const {
      std::string result;
      for (auto x : a) {
        result += to_string(x);
      }
      return result;
    }

    // Parses bracketed tokens such as "[ba][bcc]"; whitespace between
    // tokens is ignored.
    phi_word parse(std::string_view text) const {
      phi_word    result;
      std::size_t i = 0;
      while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t') {
          ++i;
          continue;
        }
        if (text[i] != '[') {
          throw Error("expected '[' at position " + std::to_string(i)
                      + " in Phi-word \"" + std::string(text) + "\"");
        }
        auto j = text.find(']', i);
        if (j == std::string_view::npos) {
          throw Error("unterminated '[' in Phi-word \"" + std::string(text)
                      + "\"");
        }
        auto w = _presentation.parse_word(text.substr(i + 1, j - i - 1));
        if (w.empty()) {
          throw Error("empty token in Phi-word \"" + std::string(text) + "\"");
        }
        result.push_back(letter(w));
        i = j + 1;
      }
      return result;
    }

   private:
    static constexpr std::size_t none = SIZE_MAX;

    static std::optional<phi_letter> lookup(std::size_t i) {
      if (i == none) {
        return std::nullopt;
      }
      return static_cast<phi_letter>(i);
    }

    Presentation                                          _presentation;
    std::vector<word_type>                                _words;
    std::unordered_map<word_type, phi_letter, word_hash> _symbol;
    std::vector<std::size_t>                              _concat;
    std::vector<std::size_t>                              _extend;
    std::vector<std::size_t>                              _generator;
    std::size_t                                           _max_length = 0;
  };

  inline PhiAlphabet build_phi_alphabet(Presentation const& p) {
    return PhiAlphabet(p);
  }

  inline phi_word strip_identity(phi_word a) {
    a.erase(std::remove(a.begin(), a.end(), identity_letter), a.end());
    return a;
  }

  // Index of the leftmost i with W_i W_{i+1} in B.
  inline std::optional<std::size_t> first_mergeable(PhiAlphabet const& phi,
                                                    phi_word const&    a) {
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      if (phi.concat(a[i], a[i + 1])) {
        return i;
      }
    }
    return std::nullopt;
  }

  inline bool is_admissible(PhiAlphabet const& phi, phi_word const& a) {
    return !first_mergeable(phi, a).has_value();
  }

  inline phi_word merge_non_admissible(PhiAlphabet const& phi,
                                       phi_word const&    a) {
    auto i = first_mergeable(phi, a);
    if (!i) {
      throw Error(phi.to_string(a) + " is admissible");
    }
    phi_word result(a.begin(), a.begin() + *i);
    result.push_back(*phi.concat(a[*i], a[*i + 1]));
    result.insert(result.end(), a.begin() + *i + 2, a.end());
    return result;
  }

  inline bool is_left_greedy(PhiAlphabet const& phi, phi_word const& a) {
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      if (phi.extend(a[i], phi.word(a[i + 1]).front())) {
        return false;
      }
    }
    return true;
  }

  // Repeatedly split off the longest prefix lying in B.
  inline phi_word left_greedy(PhiAlphabet const& phi, word_type const& w) {
    phi_word    result;
    std::size_t i = 0;
    while (i < w.size()) {
      auto x = phi.generator_letter(w[i]);
      if (!x) {
        throw Error("generator " + phi.presentation().generators[w[i]]
                    + " does not occur in any defining word");
      }
      ++i;
      while (i < w.size()) {
        auto y = phi.extend(*x, w[i]);
        if (!y) {
          break;
        }
        x = y;
        ++i;
      }
      result.push_back(*x);
    }
    return result;
  }

  inline phi_word left_greedy_normalize(PhiAlphabet const& phi,
                                        phi_word const&    a) {
    return left_greedy(phi, phi.eta(a));
  }

  inline bool is_semi_geodesic(PhiAlphabet const& phi, phi_word const& a) {
    return a.size() == left_greedy_normalize(phi, a).size();
  }

  // Calls f on every Phi-word A with eta(A) = w and |A| <= max_length.
  inline void for_each_decomposition(PhiAlphabet const&                  phi,
                                     word_type const&                    w,
                                     std::size_t                         max_length,
                                     std::function<void(phi_word const&)> const& f) {
    phi_word current;
    std::function<void(std::size_t)> recurse = [&](std::size_t i) {
      if (i == w.size()) {
        f(current);
        return;
      }
      if (current.size() == max_length) {
        return;
      }
      auto x = phi.generator_letter(w[i]);
      for (std::size_t j = i + 1; x; ++j) {
        current.push_back(*x);
        recurse(j);
        current.pop_back();
        if (j == w.size()) {
          break;
        }
        x = phi.extend(*x, w[j]);
      }
    };
    recurse(0);
  }

  inline std::vector<phi_word> decompositions(PhiAlphabet const& phi,
                                              word_type const&   w,
                                              std::size_t max_length = SIZE_MAX) {
    std::vector<phi_word> result;
    for_each_decomposition(
        phi, w, max_length, [&result](phi_word const& a) { result.push_back(a); });
    return result;
  }

}  // namespace overlap_auto

#endif  // OVERLAP_AUTO_PHI_HPP_
