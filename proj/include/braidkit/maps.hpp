#pragma once

#include <string>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/pure_braid.hpp"

namespace braidkit {

// Removes the strand that starts at position k, tracking its position p
// through the word: a crossing involving p is dropped (and moves p);
// any other s_i^e survives as s_i^e if i+1 < p, or s_{i-1}^e if i > p.
// A homomorphism on the subgroup of braids whose strand k returns to k
// (in particular on pure braids).
BraidWord delete_strand(const BraidWord& u, int k);

// Endomorphism of the pure braid group given by images of the standard
// letters.  Images may use zero-row letters.
struct GeneratorMap {
    GeneratorMap(std::string name, int strands);

    std::string name;
    int strands;
    std::vector<PureWord> images; // indexed by AbelianVector::index_of(i,j)

    const PureWord& image(int i, int j) const;
    PureWord& image(int i, int j);
};

GeneratorMap identity_map(int n);

// theta:  A[1,j] -> A[1,j]^-1 A[0,j] A[1,j];  A[i,j] -> A[i,j]  (i >= 2).
// Sends A[0,j] to A[1,j] for j >= 2.
GeneratorMap theta_map(int n);

// Inverse of theta:  A[1,j] -> A[0,j];  A[i,j] -> A[i,j]  (i >= 2).
GeneratorMap theta_inv_map(int n);

// Twist automorphism (n >= 3):
//   A[i,j] -> A[i,j]                                  (j <= n-1)
//   A[i,n] -> (A[i,n] A[1,i] .. A[i-1,i] A[i,i+1] .. A[i,n-1])^-1
//           = A[i,n] A[0,i] A[i,n]^-1.
// Sends A[0,j] to A[j,n] for j < n, A[0,n] to A[0,n] z^2, and z to z^-1.
GeneratorMap w_twist_map(int n);

// Applies the map letterwise; zero-row letters are expanded through
// a0(j, n) first.
PureWord apply_map(const GeneratorMap& m, const PureWord& w);

PureWord theta(const PureWord& w);
PureWord theta_inv(const PureWord& w);
PureWord w_map(const PureWord& w);

// del = delete_strand(theta(.), 1): kills every zero-row letter except
// A[0,1], which it sends to the squared full twist on n-1 strands.
BraidWord del(const PureWord& w);

// del on a pure sigma-word, via combing.
BraidWord del_braid(const BraidWord& u, const OracleLimits& limits = {});

// conjugate(x, b) = b^-1 x b.
BraidWord conjugate(const BraidWord& x, const BraidWord& b);

// commutator(x, y) = x^-1 y^-1 x y.
BraidWord commutator(const BraidWord& x, const BraidWord& y);

} // namespace braidkit
