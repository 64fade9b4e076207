#pragma once

#include <cstddef>

#include "braidkit/braid_word.hpp"
#include "braidkit/free_word.hpp"

namespace braidkit {

struct OracleLimits {
    std::size_t max_free_len = 1'000'000; // cap on any intermediate free word
    std::size_t max_steps = 10'000'000;   // cap on handle reduction steps
};

// Faithful action of the braid group on the free group F_n:
//   s_i:    x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i
//   s_i^-1: x_i -> x_{i+1},              x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
// Words act left to right: artin_action(concat(u, v)) is
// compose(artin_action(u), artin_action(v)).
FreeAutomorphism artin_action(const BraidWord& u, const OracleLimits& limits = {});

// Word problem via the free-group action (primary oracle).
bool is_trivial(const BraidWord& u, const OracleLimits& limits = {});
bool equal(const BraidWord& u, const BraidWord& v, const OracleLimits& limits = {});

// Handle reduction: repeatedly rewrites the leftmost-closing handle
// s_k^e v s_k^-e (v using only indices > k) until no handle remains.
// The result is freely equal-as-a-braid to the input and is empty iff the
// braid is trivial; otherwise the smallest index occurs with one sign only.
BraidWord handle_reduce(const BraidWord& u, const OracleLimits& limits = {});
bool is_trivial_dehornoy(const BraidWord& u, const OracleLimits& limits = {});

// True if the word contains a handle (scan only, no rewriting).
bool has_handle(const BraidWord& u);

} // namespace braidkit
