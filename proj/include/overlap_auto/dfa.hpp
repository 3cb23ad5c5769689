#ifndef OVERLAP_AUTO_DFA_HPP_
#define OVERLAP_AUTO_DFA_HPP_

#include <algorithm>  // for fill, sort
#include <cstddef>    // for size_t
#include <cstdint>    // for uint32_t
#include <deque>      // for deque
#include <map>        // for map
#include <optional>   // for optional
#include <sstream>    // for ostringstream
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

#include "word.hpp"

namespace overlap_auto {

  // Symbols are the integers 0, ..., alphabet_size() - 1; labels are only
  // used for export.
  class Dfa {
   public:
    using state_type  = std::uint32_t;
    using symbol_type = std::size_t;
    using input_type  = std::vector<symbol_type>;

    static constexpr state_type undefined = UINT32_MAX;

    Dfa() = default;

    explicit Dfa(std::size_t alphabet_size, std::vector<std::string> labels = {})
        : _k(alphabet_size), _labels(std::move(labels)) {
      if (!_labels.empty() && _labels.size() != _k) {
        throw Error("Dfa: expected " + std::to_string(_k) + " labels, found "
                    + std::to_string(_labels.size()));
      }
    }

    std::size_t alphabet_size() const noexcept {
      return _k;
    }

    std::size_t number_of_states() const noexcept {
      return _accepting.size();
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    std::string label(symbol_type a) const {
      return _labels.empty() ? std::to_string(a) : _labels.at(a);
    }

    void set_labels(std::vector<std::string> labels) {
      if (labels.size() != _k) {
        throw Error("Dfa: wrong number of labels");
      }
      _labels = std::move(labels);
    }

    state_type add_state(bool accepting = false) {
      _accepting.push_back(accepting);
      _delta.resize(_delta.size() + _k, undefined);
      return static_cast<state_type>(_accepting.size() - 1);
    }

    void set_transition(state_type s, symbol_type a, state_type t) {
      _delta.at(s * _k + a) = t;
    }

    state_type next(state_type s, symbol_type a) const {
      return _delta[s * _k + a];
    }

    state_type start() const noexcept {
      return _start;
    }

    void set_start(state_type s) noexcept {
      _start = s;
    }

    bool accepting(state_type s) const {
      return _accepting.at(s);
    }

    void set_accepting(state_type s, bool value) {
      _accepting.at(s) = value;
    }

    // Throws unless every transition is defined.
    void validate() const {
      if (number_of_states() == 0) {
        throw Error("Dfa: no states");
      }
      for (auto t : _delta) {
        if (t == undefined || t >= number_of_states()) {
          throw Error("Dfa: transition function is not total");
        }
      }
    }

    state_type run(input_type const& w) const {
      state_type s = _start;
      for (auto a : w) {
        s = next(s, a);
      }
      return s;
    }

    bool accepts(input_type const& w) const {
      return accepting(run(w));
    }

   private:
    std::size_t              _k = 0;
    std::vector<std::string> _labels;
    std::vector<state_type>  _delta;
    std::vector<bool>        _accepting;
    state_type               _start = 0;
  };

  // Nondeterministic automaton with epsilon moves, used for projections.
  class Nfa {
   public:
    using state_type  = std::uint32_t;
    using symbol_type = std::size_t;

    explicit Nfa(std::size_t alphabet_size) : _k(alphabet_size) {}

    std::size_t alphabet_size() const noexcept {
      return _k;
    }

    std::size_t number_of_states() const noexcept {
      return _accepting.size();
    }

    state_type add_state(bool accepting = false) {
      _accepting.push_back(accepting);
      _delta.emplace_back(_k);
      _epsilon.emplace_back();
      return static_cast<state_type>(_accepting.size() - 1);
    }

    void add_transition(state_type s, symbol_type a, state_type t) {
      _delta.at(s).at(a).push_back(t);
    }

    void add_epsilon(state_type s, state_type t) {
      _epsilon.at(s).push_back(t);
    }

    void add_start(state_type s) {
      _start.push_back(s);
    }

    bool accepting(state_type s) const {
      return _accepting[s];
    }

    std::vector<state_type> closure(std::vector<state_type> states) const {
      std::vector<bool> in(number_of_states(), false);
      for (auto s : states) {
        in[s] = true;
      }
      for (std::size_t i = 0; i < states.size(); ++i) {
        for (auto t : _epsilon[states[i]]) {
          if (!in[t]) {
            in[t] = true;
            states.push_back(t);
          }
        }
      }
      std::sort(states.begin(), states.end());
      return states;
    }

    std::vector<state_type> start_set() const {
      return closure(_start);
    }

    std::vector<state_type> step(std::vector<state_type> const& states,
                                 symbol_type                    a) const {
      std::vector<state_type> result;
      std::vector<bool>       in(number_of_states(), false);
      for (auto s : states) {
        for (auto t : _delta[s][a]) {
          if (!in[t]) {
            in[t] = true;
            result.push_back(t);
          }
        }
      }
      return closure(std::move(result));
    }

    bool accepts(std::vector<symbol_type> const& w) const {
      auto states = start_set();
      for (auto a : w) {
        states = step(states, a);
      }
      for (auto s : states) {
        if (accepting(s)) {
          return true;
        }
      }
      return false;
    }

   private:
    std::size_t                                  _k;
    std::vector<std::vector<std::vector<state_type>>> _delta;
    std::vector<std::vector<state_type>>         _epsilon;
    std::vector<bool>                            _accepting;
    std::vector<state_type>                      _start;
  };

  // Subset construction over the reachable subsets.
  inline Dfa determinize(Nfa const& nfa, std::vector<std::string> labels = {}) {
    Dfa                                                      d(nfa.alphabet_size(), std::move(labels));
    std::map<std::vector<Nfa::state_type>, Dfa::state_type> ids;
    std::deque<std::vector<Nfa::state_type>>                queue;
    auto id_of = [&](std::vector<Nfa::state_type> const& set) {
      auto it = ids.find(set);
      if (it != ids.end()) {
        return it->second;
      }
      bool acc = false;
      for (auto s : set) {
        acc = acc || nfa.accepting(s);
      }
      auto id = d.add_state(acc);
      ids.emplace(set, id);
      queue.push_back(set);
      return id;
    };
    d.set_start(id_of(nfa.start_set()));
    while (!queue.empty()) {
      auto set = std::move(queue.front());
      queue.pop_front();
      auto from = ids.at(set);
      for (std::size_t a = 0; a < nfa.alphabet_size(); ++a) {
        auto to = id_of(nfa.step(set, a));
        d.set_transition(from, a, to);
      }
    }
    return d;
  }

  namespace detail {
    inline void check_compatible(Dfa const& d1, Dfa const& d2) {
      if (d1.alphabet_size() != d2.alphabet_size()) {
        throw Error("alphabet mismatch: " + std::to_string(d1.alphabet_size())
                    + " and " + std::to_string(d2.alphabet_size())
                    + " symbols");
      }
    }

    // Reachable part of the product, with acceptance combined by `op`.
    template <typename Op>
    Dfa product(Dfa const& d1, Dfa const& d2, Op op) {
      check_compatible(d1, d2);
      std::size_t const k = d1.alphabet_size();
      Dfa               d(k, d1.labels());
      std::map<std::pair<Dfa::state_type, Dfa::state_type>, Dfa::state_type> ids;
      std::deque<std::pair<Dfa::state_type, Dfa::state_type>> queue;
      auto id_of = [&](std::pair<Dfa::state_type, Dfa::state_type> p) {
        auto it = ids.find(p);
        if (it != ids.end()) {
          return it->second;
        }
        auto id = d.add_state(op(d1.accepting(p.first), d2.accepting(p.second)));
        ids.emplace(p, id);
        queue.push_back(p);
        return id;
      };
      d.set_start(id_of({d1.start(), d2.start()}));
      while (!queue.empty()) {
        auto p = queue.front();
        queue.pop_front();
        auto from = ids.at(p);
        for (std::size_t a = 0; a < k; ++a) {
          d.set_transition(
              from, a, id_of({d1.next(p.first, a), d2.next(p.second, a)}));
        }
      }
      return d;
    }
  }  // namespace detail

  inline Dfa intersect(Dfa const& d1, Dfa const& d2) {
    return detail::product(d1, d2, [](bool x, bool y) { return x && y; });
  }

  inline Dfa unite(Dfa const& d1, Dfa const& d2) {
    return detail::product(d1, d2, [](bool x, bool y) { return x || y; });
  }

  inline Dfa symmetric_difference(Dfa const& d1, Dfa const& d2) {
    return detail::product(d1, d2, [](bool x, bool y) { return x != y; });
  }

  inline Dfa complement(Dfa d) {
    for (Dfa::state_type s = 0; s < d.number_of_states(); ++s) {
      d.set_accepting(s, !d.accepting(s));
    }
    return d;
  }

  // A shortest accepted word, if any.
  inline std::optional<Dfa::input_type> shortest_accepted(Dfa const& d) {
    std::vector<Dfa::state_type> parent(d.number_of_states(), Dfa::undefined);
    std::vector<Dfa::symbol_type> via(d.number_of_states(), 0);
    std::vector<bool>            seen(d.number_of_states(), false);
    std::deque<Dfa::state_type>  queue{d.start()};
    seen[d.start()] = true;
    while (!queue.empty()) {
      auto s = queue.front();
      queue.pop_front();
      if (d.accepting(s)) {
        Dfa::input_type w;
        for (auto t = s; t != d.start(); t = parent[t]) {
          w.push_back(via[t]);
        }
        std::reverse(w.begin(), w.end());
        return w;
      }
      for (std::size_t a = 0; a < d.alphabet_size(); ++a) {
        auto t = d.next(s, a);
        if (!seen[t]) {
          seen[t]   = true;
          parent[t] = s;
          via[t]    = a;
          queue.push_back(t);
        }
      }
    }
    return std::nullopt;
  }

  struct EmptinessResult {
    bool                           empty = true;
    std::optional<Dfa::input_type> witness;
  };

  inline EmptinessResult dfa_empty(Dfa const& d) {
    auto w = shortest_accepted(d);
    return {!w.has_value(), w};
  }

  struct EquivalenceResult {
    bool                           equivalent = true;
    std::optional<Dfa::input_type> counterexample;
  };

  inline EquivalenceResult dfa_equivalent(Dfa const& d1, Dfa const& d2) {
    auto w = shortest_accepted(symmetric_difference(d1, d2));
    return {!w.has_value(), w};
  }

  // Moore partition refinement on the reachable part.
  inline Dfa minimize(Dfa const& d) {
    std::size_t const k = d.alphabet_size();
    std::vector<Dfa::state_type> order;
    std::vector<Dfa::state_type> reach(d.number_of_states(), Dfa::undefined);
    reach[d.start()] = 0;
    order.push_back(d.start());
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t a = 0; a < k; ++a) {
        auto t = d.next(order[i], a);
        if (reach[t] == Dfa::undefined) {
          reach[t] = static_cast<Dfa::state_type>(order.size());
          order.push_back(t);
        }
      }
    }
    std::size_t const      n = order.size();
    std::vector<std::size_t> block(n);
    for (std::size_t i = 0; i < n; ++i) {
      block[i] = d.accepting(order[i]) ? 1 : 0;
    }
    std::size_t count = 0;
    while (true) {
      std::map<std::vector<std::size_t>, std::size_t> sig;
      std::vector<std::size_t>                        next_block(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> key{block[i]};
        for (std::size_t a = 0; a < k; ++a) {
          key.push_back(block[reach[d.next(order[i], a)]]);
        }
        auto it = sig.emplace(std::move(key), sig.size()).first;
        next_block[i] = it->second;
      }
      block.swap(next_block);
      if (sig.size() == count) {
        break;
      }
      count = sig.size();
    }
    Dfa result(k, d.labels());
    for (std::size_t b = 0; b < count; ++b) {
      result.add_state();
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto b = static_cast<Dfa::state_type>(block[i]);
      result.set_accepting(b, d.accepting(order[i]));
      for (std::size_t a = 0; a < k; ++a) {
        result.set_transition(
            b, a, static_cast<Dfa::state_type>(block[reach[d.next(order[i], a)]]));
      }
    }
    result.set_start(static_cast<Dfa::state_type>(block[0]));
    return result;
  }

  // Accepts exactly the given words.
  inline Dfa from_words(std::size_t                         k,
                        std::vector<Dfa::input_type> const& words) {
    Dfa  d(k);
    auto dead = d.add_state(false);
    auto root = d.add_state(false);
    for (std::size_t a = 0; a < k; ++a) {
      d.set_transition(dead, a, dead);
      d.set_transition(root, a, dead);
    }
    d.set_start(root);
    for (auto const& w : words) {
      auto s = root;
      for (auto a : w) {
        auto t = d.next(s, a);
        if (t == dead) {
          t = d.add_state(false);
          for (std::size_t b = 0; b < k; ++b) {
            d.set_transition(t, b, dead);
          }
          d.set_transition(s, a, t);
        }
        s = t;
      }
      d.set_accepting(s, true);
    }
    return d;
  }

  // Accepts every word.
  inline Dfa all_words(std::size_t k) {
    Dfa  d(k);
    auto s = d.add_state(true);
    for (std::size_t a = 0; a < k; ++a) {
      d.set_transition(s, a, s);
    }
    return d;
  }

  // Accepts the words of length at most n.
  inline Dfa bounded_length(std::size_t k, std::size_t n) {
    Dfa d(k);
    for (std::size_t i = 0; i <= n + 1; ++i) {
      d.add_state(i <= n);
    }
    for (std::size_t i = 0; i <= n + 1; ++i) {
      for (std::size_t a = 0; a < k; ++a) {
        d.set_transition(static_cast<Dfa::state_type>(i),
                         a,
                         static_cast<Dfa::state_type>(std::min(i + 1, n + 1)));
      }
    }
    return d;
  }

  // Calls f on every word of length at most n over k symbols, shortlex.
  template <typename F>
  void for_each_word(std::size_t k, std::size_t n, F&& f) {
    Dfa::input_type w;
    for (std::size_t len = 0; len <= n; ++len) {
      w.assign(len, 0);
      while (true) {
        f(static_cast<Dfa::input_type const&>(w));
        std::size_t i = len;
        while (i > 0 && w[i - 1] + 1 == k) {
          w[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          break;
        }
        ++w[i - 1];
      }
    }
  }

  inline std::string to_dot(Dfa const& d, std::string const& name = "dfa") {
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=LR;\n";
    out << "  start [shape=point];\n";
    for (Dfa::state_type s = 0; s < d.number_of_states(); ++s) {
      out << "  " << s << " [label=\"" << s << "\", shape="
          << (d.accepting(s) ? "doublecircle" : "circle") << "];\n";
    }
    out << "  start -> " << d.start() << ";\n";
    for (Dfa::state_type s = 0; s < d.number_of_states(); ++s) {
      std::map<Dfa::state_type, std::vector<std::string>> edges;
      for (std::size_t a = 0; a < d.alphabet_size(); ++a) {
        edges[d.next(s, a)].push_back(d.label(a));
      }
      for (auto const& [t, ls] : edges) {
        out << "  " << s << " -> " << t << " [label=\"";
        for (std::size_t i = 0; i < ls.size(); ++i) {
          out << (i ? "," : "") << ls[i];
        }
        out << "\"];\n";
      }
    }
    out << "}\n";
    return out.str();
  }

}  // namespace overlap_auto

#endif  // OVERLAP_AUTO_DFA_HPP_
