#ifndef OVERLAP_AUTO_EXPORT_HPP_
#define OVERLAP_AUTO_EXPORT_HPP_

#include <string>  // for string

#include "dfa.hpp"
#include "json.hpp"

namespace overlap_auto {

  inline nlohmann::json to_json(Dfa const& d) {
    nlohmann::json j;
    j["states"] = d.number_of_states();
    auto& alphabet = j["alphabet"] = nlohmann::json::array();
    for (std::size_t a = 0; a < d.alphabet_size(); ++a) {
      alphabet.push_back(d.label(a));
    }
    auto& delta = j["delta"] = nlohmann::json::array();
    for (Dfa::state_type s = 0; s < d.number_of_states(); ++s) {
      auto row = nlohmann::json::array();
      for (std::size_t a = 0; a < d.alphabet_size(); ++a) {
        row.push_back(d.next(s, a));
      }
      delta.push_back(std::move(row));
    }
    j["start"]     = d.start();
    auto& accepting = j["accepting"] = nlohmann::json::array();
    for (Dfa::state_type s = 0; s < d.number_of_states(); ++s) {
      if (d.accepting(s)) {
        accepting.push_back(s);
      }
    }
    return j;
  }

}  // namespace overlap_auto

#endif  // OVERLAP_AUTO_EXPORT_HPP_
