#pragma once

#include <cstdint>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/pure_braid.hpp"
#include "braidkit/word_oracle.hpp"

namespace braidkit {

// All samplers are deterministic functions of (params, salt).
struct SamplerParams {
    std::uint64_t seed = 0;
    int max_conjugator_len = 4;  // cap on conjugator length (0 = trivial conjugators)
    int commutator_depth = 1;    // permutation terms per symmetric-commutator sample
    int factors_per_closure = 2; // cap on conjugate factors per normal-closure sample
};

// True iff deleting any one strand yields the trivial braid.
// Requires a pure input; throws std::invalid_argument otherwise.
bool is_brunnian(const BraidWord& u, const OracleLimits& limits = {});

// Brunnian and killed by del (the twisted deletion applied to comb(u)).
// Requires a pure input.
bool in_Z(const BraidWord& u, const OracleLimits& limits = {});

// Random element of the normal closure of g in the pure braid group:
// a product of conjugates b^-1 g^(+-1) b with random pure conjugators b.
BraidWord sample_closure(const PureWord& g, int n, const SamplerParams& params,
                         std::uint64_t salt = 0);

// Random element of the symmetric commutator subgroup of the normal
// closures of gens: for each of commutator_depth random orderings tau,
// a left-normed commutator [[x_1, x_2], x_3] ... with x_t drawn from the
// closure of gens[tau(t)].
BraidWord sample_symmetric_commutator(const std::vector<PureWord>& gens, int n,
                                      const SamplerParams& params, std::uint64_t salt = 0);

// Brunnian sampler: symmetric commutators over the closures of
// A[1,n] .. A[n-1,n].
BraidWord sample_brun(int n, const SamplerParams& params, std::uint64_t salt = 0);

// Boundary-Brunnian sampler: del applied to combed Brunnian samples one
// level up.
BraidWord sample_bd(int n, const SamplerParams& params, std::uint64_t salt = 0,
                    const OracleLimits& limits = {});

// Cheap 3-strand Brunnian sampler: commutators of random pure words
// (on 3 strands every pure-braid commutator is Brunnian).
BraidWord sample_brun3_alt(const SamplerParams& params, std::uint64_t salt = 0);

} // namespace braidkit
