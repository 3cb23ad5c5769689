#ifndef OVERLAP_AUTO_TESTS_FIXTURES_HPP_
#define OVERLAP_AUTO_TESTS_FIXTURES_HPP_

#include <string>

#include "overlap_auto/presentation.hpp"

namespace fixtures {

  inline constexpr char const* example4 = "name: example4\n"
                                          "generators: a b c\n"
                                          "relation: abcc = cba\n";

  inline overlap_auto::Presentation presentation(std::string const& text) {
    return overlap_auto::parse_presentation(text);
  }

  inline overlap_auto::Presentation example() {
    return presentation(example4);
  }

}  // namespace fixtures

#endif  // OVERLAP_AUTO_TESTS_FIXTURES_HPP_
