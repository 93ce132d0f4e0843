#pragma once

#include <functional>

#include "rr/constraints.hpp"
#include "rr/numeric.hpp"

namespace rr::oracle {

// Reference implementations used to cross-check the fast paths. They favor
// clarity over speed: exhaustive enumeration and direct dynamic programming.

using WindowPredicate = std::function<bool(unsigned, unsigned, unsigned)>;

// All admissible words of the given length in ascending lexicographic order.
// Guarded to alphabet^m <= 2^24 candidates.
std::vector<std::vector<uint8_t>> enumerate_words(unsigned alphabet, unsigned m,
                                                  const WindowPredicate& forbidden);
std::vector<std::vector<uint8_t>> enumerate_binary(unsigned m);
std::vector<std::vector<uint8_t>> enumerate_quaternary(unsigned m);

// Exact word counts by pair-state dynamic programming.
BigInt count_words(unsigned alphabet, unsigned n, const WindowPredicate& forbidden);
BigInt count_binary_words(unsigned n);
BigInt count_quaternary_words(unsigned n);
BigInt count_level_sequences(Variant variant, unsigned q, unsigned n);

// Pair-state transfer matrix: state index a*alphabet + b stands for the pair
// (a, b); the entry [a*alphabet + b][b*alphabet + c] is 1 when the window
// (a, b, c) is admissible. Its spectral radius is the per-symbol growth rate.
Matrix pair_state_matrix(unsigned alphabet, const WindowPredicate& forbidden);
Matrix pair_state_matrix_binary();
Matrix pair_state_matrix_quaternary();
Matrix pair_state_matrix_levels(Variant variant, unsigned q);

} // namespace rr::oracle
