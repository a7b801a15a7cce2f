// selfsim - computations with self-similar and automatic groups
//
// Convenience header including every module.

#ifndef SELFSIM_SELFSIM_HPP_
#define SELFSIM_SELFSIM_HPP_

#include "action.hpp"
#include "analysis.hpp"
#include "autostruct.hpp"
#include "error.hpp"
#include "fsa.hpp"
#include "geometry.hpp"
#include "io.hpp"
#include "mealy.hpp"
#include "types.hpp"
#include "words.hpp"
#include "zoo.hpp"

#endif  // SELFSIM_SELFSIM_HPP_
