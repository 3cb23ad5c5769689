#ifndef OVERLAP_AUTO_PRESENTATION_HPP_
#define OVERLAP_AUTO_PRESENTATION_HPP_

#include <algorithm>      // for sort, find
#include <cctype>         // for isspace
#include <compare>        // for strong_ordering
#include <cstddef>        // for size_t
#include <optional>       // for optional
#include <set>            // for set
#include <string>         // for string, to_string
#include <string_view>    // for string_view
#include <unordered_map>  // for unordered_map
#include <unordered_set>  // for unordered_set
#include <utility>        // for move, pair
#include <vector>         // for vector

#include "word.hpp"

namespace overlap_auto {

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& msg)
        : Error("line " + std::to_string(line) + ", column "
                + std::to_string(column) + ": " + msg),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }

    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  struct Relation {
    word_type lhs;
    word_type rhs;

    friend bool operator==(Relation const&, Relation const&) = default;
  };

  // A finite semigroup presentation. Letters of words are indices into
  // `generators`, and the generator order is the declaration order.
  class Presentation {
   public:
    std::string              name;
    std::vector<std::string> generators;
    std::vector<Relation>    relations;

    std::size_t alphabet_size() const noexcept {
      return generators.size();
    }

    // Throws if a relation side is empty, a letter is out of range, a
    // generator name is invalid or repeated, or there are no relations.
    void validate() const {
      if (generators.empty()) {
        throw Error("presentation has no generators");
      }
      if (generators.size() > max_generators) {
        throw Error("at most " + std::to_string(max_generators)
                    + " generators are supported");
      }
      std::set<std::string> seen;
      for (auto const& g : generators) {
        check_generator_name(g);
        if (!seen.insert(g).second) {
          throw Error("generator \"" + g + "\" declared twice");
        }
      }
      if (relations.empty()) {
        throw Error("presentation has no relations");
      }
      for (std::size_t i = 0; i < relations.size(); ++i) {
        for (auto const* side : {&relations[i].lhs, &relations[i].rhs}) {
          if (side->empty()) {
            throw Error("relation " + std::to_string(i + 1)
                        + " has an empty side");
          }
          for (auto x : *side) {
            if (x >= generators.size()) {
              throw Error("relation " + std::to_string(i + 1)
                          + " uses an undeclared generator");
            }
          }
        }
      }
    }

    static void check_generator_name(std::string const& g) {
      if (g.empty()) {
        throw Error("empty generator name");
      }
      if (g == "$") {
        throw Error("\"$\" is reserved for padding and cannot be a generator");
      }
      for (char c : g) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}'
            || c == '[' || c == ']' || c == '=' || c == '#' || c == '$'
            || c == '(' || c == ')' || c == ',') {
          throw Error("invalid character in generator name \"" + g + "\"");
        }
      }
    }

    std::optional<letter_type> letter(std::string_view name) const {
      auto it = std::find(generators.begin(), generators.end(), name);
      if (it == generators.end()) {
        return std::nullopt;
      }
      return static_cast<letter_type>(it - generators.begin());
    }

    // Words are written letter by letter; a generator whose name has more
    // than one character is written in braces, e.g. a{x1}b. Whitespace is
    // ignored.
    word_type parse_word(std::string_view text) const {
      word_type w;
      for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
          continue;
        }
        std::string name;
        if (c == '{') {
          auto close = text.find('}', i);
          if (close == std::string_view::npos) {
            throw ParseError(1, i + 1, "unterminated '{'");
          }
          name = std::string(text.substr(i + 1, close - i - 1));
          i    = close;
        } else {
          name = std::string(1, c);
        }
        auto x = letter(name);
        if (!x) {
          throw ParseError(1, i + 1, "undeclared generator \"" + name + "\"");
        }
        w.push_back(*x);
      }
      return w;
    }

    std::string to_string(word_type const& w) const {
      std::string result;
      for (auto x : w) {
        auto const& g = generators.at(x);
        if (g.size() == 1) {
          result += g;
        } else {
          result += "{" + g + "}";
        }
      }
      return result;
    }

    // The set of defining words, without repetitions, in order of first
    // appearance L1, R1, L2, R2, ...
    std::vector<word_type> defining_words() const {
      std::vector<word_type> result;
      for (auto const& r : relations) {
        for (auto const* w : {&r.lhs, &r.rhs}) {
          if (std::find(result.begin(), result.end(), *w) == result.end()) {
            result.push_back(*w);
          }
        }
      }
      return result;
    }
  };

  namespace detail {
    inline std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    inline std::size_t column_of(std::string_view line, std::string_view part) {
      return static_cast<std::size_t>(part.data() - line.data()) + 1;
    }
  }  // namespace detail

  // Line oriented format:
  //
  //   # comment
  //   name: optional label
  //   generators: a b c
  //   relation: abcc = cba
  inline Presentation parse_presentation(std::string_view text) {
    Presentation p;
    bool         have_generators = false;
    std::size_t  line_no         = 0;
    std::size_t  pos             = 0;
    while (pos <= text.size()) {
      auto        eol  = text.find('\n', pos);
      std::string_view line = text.substr(
          pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
      pos = (eol == std::string_view::npos ? text.size() + 1 : eol + 1);
      ++line_no;
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      std::string_view content = line.substr(0, line.find('#'));
      if (detail::trim(content).empty()) {
        continue;
      }
      auto colon = content.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(line_no,
                         detail::column_of(line, detail::trim(content)),
                         "expected \"keyword: value\"");
      }
      auto keyword = detail::trim(content.substr(0, colon));
      auto value   = content.substr(colon + 1);
      if (keyword == "name") {
        p.name = std::string(detail::trim(value));
      } else if (keyword == "generators") {
        if (have_generators) {
          throw ParseError(line_no,
                           detail::column_of(line, keyword),
                           "generators declared twice");
        }
        have_generators = true;
        std::size_t i   = 0;
        while (i < value.size()) {
          while (i < value.size()
                 && std::isspace(static_cast<unsigned char>(value[i]))) {
            ++i;
          }
          if (i == value.size()) {
            break;
          }
          std::size_t j = i;
          while (j < value.size()
                 && !std::isspace(static_cast<unsigned char>(value[j]))) {
            ++j;
          }
          std::string name(value.substr(i, j - i));
          // Declarations may use the same braces as words: {x1}.
          if (name.size() > 2 && name.front() == '{' && name.back() == '}') {
            name = name.substr(1, name.size() - 2);
          }
          try {
            Presentation::check_generator_name(name);
          } catch (Error const& e) {
            throw ParseError(
                line_no, detail::column_of(line, value.substr(i)), e.what());
          }
          if (std::find(p.generators.begin(), p.generators.end(), name)
              != p.generators.end()) {
            throw ParseError(line_no,
                             detail::column_of(line, value.substr(i)),
                             "generator \"" + name + "\" declared twice");
          }
          p.generators.push_back(std::move(name));
          i = j;
        }
        if (p.generators.empty()) {
          throw ParseError(
              line_no, detail::column_of(line, value), "no generators listed");
        }
        if (p.generators.size() > max_generators) {
          throw ParseError(line_no,
                           detail::column_of(line, value),
                           "too many generators");
        }
      } else if (keyword == "relation") {
        if (!have_generators) {
          throw ParseError(line_no,
                           detail::column_of(line, keyword),
                           "relation before the generators line");
        }
        auto eq = value.find('=');
        if (eq == std::string_view::npos
            || value.find('=', eq + 1) != std::string_view::npos) {
          throw ParseError(line_no,
                           detail::column_of(line, value),
                           "a relation needs exactly one '='");
        }
        Relation r;
        for (int side = 0; side < 2; ++side) {
          auto part = side == 0 ? value.substr(0, eq) : value.substr(eq + 1);
          auto word = side == 0 ? &r.lhs : &r.rhs;
          if (detail::trim(part).empty()) {
            throw ParseError(line_no,
                             detail::column_of(line, part),
                             "empty relation side");
          }
          try {
            *word = p.parse_word(part);
          } catch (ParseError const& e) {
            // rebase the column onto the full line
            std::string msg = e.what();
            msg             = msg.substr(msg.find(": ") + 2);
            throw ParseError(
                line_no, detail::column_of(line, part) + e.column() - 1, msg);
          }
        }
        p.relations.push_back(std::move(r));
      } else {
        throw ParseError(line_no,
                         detail::column_of(line, keyword),
                         "unknown keyword \"" + std::string(keyword) + "\"");
      }
    }
    if (!have_generators) {
      throw ParseError(line_no, 1, "missing \"generators:\" line");
    }
    if (p.relations.empty()) {
      throw ParseError(line_no, 1, "at least one relation is required");
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Piece length
  ////////////////////////////////////////////////////////////////////////

  // A non-negative integer or infinity.
  class PieceLength {
   public:
    constexpr PieceLength() = default;
    constexpr explicit PieceLength(std::size_t v) : _value(v) {}

    static constexpr PieceLength infinite() noexcept {
      PieceLength result;
      result._value = std::nullopt;
      return result;
    }

    constexpr bool is_infinite() const noexcept {
      return !_value.has_value();
    }

    constexpr bool is_finite() const noexcept {
      return _value.has_value();
    }

    std::size_t value() const {
      if (!_value) {
        throw Error("piece length is infinite");
      }
      return *_value;
    }

    constexpr friend bool operator==(PieceLength const&,
                                     PieceLength const&) = default;

    constexpr friend std::strong_ordering operator<=>(PieceLength const& x,
                                                      PieceLength const& y) {
      if (x.is_infinite() || y.is_infinite()) {
        return x.is_infinite() == y.is_infinite()
                   ? std::strong_ordering::equal
                   : (x.is_infinite() ? std::strong_ordering::greater
                                      : std::strong_ordering::less);
      }
      return *x._value <=> *y._value;
    }

    constexpr friend PieceLength operator+(PieceLength const& x,
                                           PieceLength const& y) {
      if (x.is_infinite() || y.is_infinite()) {
        return infinite();
      }
      return PieceLength(*x._value + *y._value);
    }

    std::string to_string() const {
      return _value ? std::to_string(*_value) : std::string("inf");
    }

   private:
    std::optional<std::size_t> _value = 0;
  };

  // The pieces of a presentation together with a table of piece lengths of
  // all subwords of defining words.
  class PieceTable {
   public:
    explicit PieceTable(Presentation p) : _presentation(std::move(p)) {
      _presentation.validate();
      _defining = _presentation.defining_words();

      // Count occurrences as (defining word, start) pairs.
      std::unordered_map<word_type, std::size_t, word_hash> occurrences;
      for (auto const& w : _defining) {
        for (std::size_t i = 0; i < w.size(); ++i) {
          for (std::size_t j = i + 1; j <= w.size(); ++j) {
            ++occurrences[subword(w, i, j)];
          }
        }
      }
      for (auto const& [w, count] : occurrences) {
        if (count >= 2) {
          _pieces.push_back(w);
          _piece_set.insert(w);
          _max_piece_length = std::max(_max_piece_length, w.size());
        }
      }
      std::sort(_pieces.begin(), _pieces.end(), ShortlexLess());

      for (auto const& [w, count] : occurrences) {
        _lp.emplace(w, compute(w));
      }
    }

    Presentation const& presentation() const noexcept {
      return _presentation;
    }

    // Shortlex ordered.
    std::vector<word_type> const& pieces() const noexcept {
      return _pieces;
    }

    bool is_piece(word_type const& w) const {
      return _piece_set.count(w) != 0;
    }

    std::vector<word_type> const& defining_words() const noexcept {
      return _defining;
    }

    PieceLength piece_length(word_type const& w) const {
      auto it = _lp.find(w);
      if (it != _lp.end()) {
        return it->second;
      }
      return compute(w);
    }

   private:
    // Prefix dynamic program: best[i] is the piece length of w[0, i).
    PieceLength compute(word_type const& w) const {
      std::vector<PieceLength> best(w.size() + 1, PieceLength::infinite());
      best[0] = PieceLength(0);
      word_type candidate;
      for (std::size_t i = 1; i <= w.size(); ++i) {
        for (std::size_t len = 1; len <= std::min(i, _max_piece_length);
             ++len) {
          if (best[i - len].is_infinite()) {
            continue;
          }
          candidate.assign(w.begin() + (i - len), w.begin() + i);
          if (_piece_set.count(candidate)) {
            best[i] = std::min(best[i], best[i - len] + PieceLength(1));
          }
        }
      }
      return best.back();
    }

    Presentation                                      _presentation;
    std::vector<word_type>                            _defining;
    std::vector<word_type>                            _pieces;
    std::unordered_set<word_type, word_hash>          _piece_set;
    std::size_t                                       _max_piece_length = 0;
    std::unordered_map<word_type, PieceLength, word_hash> _lp;
  };

  inline PieceTable compute_pieces(Presentation const& p) {
    return PieceTable(p);
  }

  inline PieceLength piece_length(PieceTable const& pt, word_type const& w) {
    return pt.piece_length(w);
  }

  ////////////////////////////////////////////////////////////////////////
  // Small overlap conditions
  ////////////////////////////////////////////////////////////////////////

  struct K32Witness {
    char        condition;  // 'a', 'b' or 'c'
    std::size_t relation;   // 0-based relation index
    word_type   word;
    PieceLength lp;
    std::string detail;
  };

  struct K32Report {
    bool                    condition_a = true;
    bool                    condition_b = true;
    bool                    condition_c = true;
    std::vector<K32Witness> witnesses;

    bool holds() const noexcept {
      return condition_a && condition_b && condition_c;
    }
  };

  // Evaluates all three conditions; never stops at the first failure.
  inline K32Report check_k32(PieceTable const& pt) {
    auto const& p = pt.presentation();
    K32Report   report;
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
      auto const& r = p.relations[i];
      if (r.lhs.front() == r.rhs.front()) {
        report.condition_a = false;
        report.witnesses.push_back(
            {'a', i, r.lhs, pt.piece_length(r.lhs), "sides start alike"});
      }
      if (r.lhs.back() == r.rhs.back()) {
        report.condition_a = false;
        report.witnesses.push_back(
            {'a', i, r.lhs, pt.piece_length(r.lhs), "sides end alike"});
      }
      for (auto const* w : {&r.lhs, &r.rhs}) {
        auto lp = pt.piece_length(*w);
        if (lp < PieceLength(3)) {
          report.condition_b = false;
          report.witnesses.push_back({'b', i, *w, lp, "piece length below 3"});
        }
      }
    }
    // All 2n defining words must be pairwise distinct.
    std::vector<std::pair<word_type, std::size_t>> all;
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
      all.emplace_back(p.relations[i].lhs, i);
      all.emplace_back(p.relations[i].rhs, i);
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        if (all[i].first == all[j].first) {
          report.condition_c = false;
          report.witnesses.push_back(
              {'c',
               all[j].second,
               all[j].first,
               pt.piece_length(all[j].first),
               "repeats a defining word of relation "
                   + std::to_string(all[i].second + 1)});
        }
      }
    }
    return report;
  }

  inline K32Report check_k32(Presentation const& p) {
    return check_k32(PieceTable(p));
  }

  struct DaggerRow {
    PieceLength lp_lhs;
    PieceLength lp_rhs;
    bool        vacuous;  // some side has infinite piece length

    PieceLength sum() const {
      return lp_lhs + lp_rhs;
    }
  };

  struct DaggerReport {
    bool                   holds       = true;
    bool                   any_vacuous = false;
    std::vector<DaggerRow> per_relation;
  };

  inline DaggerReport check_dagger(PieceTable const& pt) {
    DaggerReport report;
    for (auto const& r : pt.presentation().relations) {
      DaggerRow row{pt.piece_length(r.lhs), pt.piece_length(r.rhs), false};
      row.vacuous = row.lp_lhs.is_infinite() || row.lp_rhs.is_infinite();
      report.any_vacuous |= row.vacuous;
      if (row.sum() < PieceLength(7)) {
        report.holds = false;
      }
      report.per_relation.push_back(row);
    }
    return report;
  }

  inline DaggerReport check_dagger(Presentation const& p) {
    return check_dagger(PieceTable(p));
  }

  // C(n): every defining word has piece length at least n.
  inline bool check_cn(PieceTable const& pt, std::size_t n) {
    for (auto const& w : pt.defining_words()) {
      if (pt.piece_length(w) < PieceLength(n)) {
        return false;
      }
    }
    return true;
  }

  inline bool check_cn(Presentation const& p, std::size_t n) {
    return check_cn(PieceTable(p), n);
  }

  struct FreeSplit {
    Presentation             core;
    std::vector<std::string> free_generators;
  };

  // Separates the generators occurring in no relation; the core keeps the
  // relative order of the remaining generators.
  inline FreeSplit split_free_part(Presentation const& p) {
    p.validate();
    std::vector<bool> used(p.alphabet_size(), false);
    for (auto const& r : p.relations) {
      for (auto x : r.lhs) {
        used[x] = true;
      }
      for (auto x : r.rhs) {
        used[x] = true;
      }
    }
    FreeSplit                result;
    std::vector<letter_type> remap(p.alphabet_size(), 0);
    result.core.name = p.name;
    for (std::size_t i = 0; i < p.alphabet_size(); ++i) {
      if (used[i]) {
        remap[i] = static_cast<letter_type>(result.core.generators.size());
        result.core.generators.push_back(p.generators[i]);
      } else {
        result.free_generators.push_back(p.generators[i]);
      }
    }
    for (auto const& r : p.relations) {
      Relation nr;
      for (auto x : r.lhs) {
        nr.lhs.push_back(remap[x]);
      }
      for (auto x : r.rhs) {
        nr.rhs.push_back(remap[x]);
      }
      result.core.relations.push_back(std::move(nr));
    }
    return result;
  }

}  // namespace overlap_auto

#endif  // OVERLAP_AUTO_PRESENTATION_HPP_
