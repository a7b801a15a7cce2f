// selfsim - computations with self-similar and automatic groups
//
// Basic index types used throughout the library.

#ifndef SELFSIM_TYPES_HPP_
#define SELFSIM_TYPES_HPP_

#include <cstdint>
#include <limits>
#include <vector>

namespace selfsim {

  using letter_t = std::uint32_t;
  using state_t  = std::uint32_t;

  // A word over a finite alphabet, as a sequence of letter indices.
  using Word = std::vector<letter_t>;

  inline constexpr state_t  UNDEFINED_STATE = std::numeric_limits<state_t>::max();
  inline constexpr letter_t EPSILON         = std::numeric_limits<letter_t>::max();

}  // namespace selfsim

#endif  // SELFSIM_TYPES_HPP_
