#ifndef OVERLAP_AUTO_OVERLAP_AUTO_HPP_
#define OVERLAP_AUTO_OVERLAP_AUTO_HPP_

#include "automata.hpp"
#include "dfa.hpp"
#include "group.hpp"
#include "kappa.hpp"
#include "oracle.hpp"
#include "phi.hpp"
#include "presentation.hpp"
#include "refute.hpp"
#include "rewriting.hpp"
#include "word.hpp"

#endif  // OVERLAP_AUTO_OVERLAP_AUTO_HPP_
