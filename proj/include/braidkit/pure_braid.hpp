#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/word_oracle.hpp"

namespace braidkit {

// Letter of the pure braid alphabet.  Standard letters are A[i,j] with
// 1 <= i < j <= n; the derived zero-row letters A[0,j] abbreviate the
// product a0(j, n) and are macro-expanded wherever a standard-alphabet
// word is required.  A[j,i] is normalized to A[i,j]; A[i,i] is rejected.
struct PureLetter {
    int i;
    int j;
    int sign;
};

PureLetter pure_letter(int i, int j, int sign = +1);

class PureWord {
public:
    explicit PureWord(int strands);
    PureWord(int strands, std::vector<PureLetter> letters);

    static PureWord trivial(int strands) { return PureWord(strands); }
    static PureWord single(int strands, int i, int j, int sign = +1);

    int strands() const { return strands_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const PureLetter& letter(std::size_t t) const { return letters_[t]; }
    const std::vector<PureLetter>& letters() const { return letters_; }

    void push(const PureLetter& l) { letters_.push_back(l); }
    void append(const PureWord& w);

private:
    int strands_;
    std::vector<PureLetter> letters_;
};

PureWord concat(const PureWord& u, const PureWord& v);
PureWord invert(const PureWord& u);
PureWord pow(const PureWord& u, int k);
PureWord commutator_pure(const PureWord& x, const PureWord& y); // x^-1 y^-1 x y

// A[i,j] = s_{j-1} s_{j-2} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1.
BraidWord expand_letter(int i, int j, int n);

// Zero-row product  a0(j, n) = A[j,n]^-1 A[j,n-1]^-1 ... A[j,j+1]^-1
//                              A[j-1,j]^-1 ... A[1,j]^-1
// written over the standard alphabet.
PureWord a0(int j, int n);

// Full twist  z_n = A[1,2] (A[1,3] A[2,3]) ... (A[1,n] ... A[n-1,n]).
PureWord full_twist(int n);

BraidWord expand(const PureWord& w);

// Exponent vector over the standard letters, ordered (1,2), (1,3), (2,3),
// (1,4), ...: pairs sorted by j, then i.  Zero-row letters contribute
// through their expansion.
class AbelianVector {
public:
    explicit AbelianVector(int strands);

    int strands() const { return strands_; }
    std::size_t dim() const { return e_.size(); }
    std::int64_t at(int i, int j) const;
    std::int64_t& at(int i, int j);
    const std::vector<std::int64_t>& entries() const { return e_; }
    bool is_zero() const;

    static std::size_t index_of(int i, int j); // (1,2)->0, (1,3)->1, (2,3)->2, ...

    friend bool operator==(const AbelianVector& a, const AbelianVector& b) {
        return a.strands_ == b.strands_ && a.e_ == b.e_;
    }
    friend bool operator!=(const AbelianVector& a, const AbelianVector& b) { return !(a == b); }

private:
    int strands_;
    std::vector<std::int64_t> e_;
};

AbelianVector abelianize(const PureWord& w);

// Half the signed crossing count between each pair of strands (named by
// their start positions); defined for pure words.
AbelianVector linking_vector(const BraidWord& u);

std::int64_t exponent_sum(const PureWord& w, int i, int j);

// Rewrites a pure sigma-word over the standard pure alphabet by peeling
// strands off from the right: the motion of the last strand is read as a
// word in the free generators A[1,n] .. A[n-1,n], then the remaining
// braid on n-1 strands is processed the same way.  The output is equal
// to the input as a braid but is not a canonical form.
PureWord comb(const BraidWord& u, const OracleLimits& limits = {});

std::string to_text(const PureLetter& l);
std::string to_text(const PureWord& w);
std::string to_text(const AbelianVector& v);

} // namespace braidkit
