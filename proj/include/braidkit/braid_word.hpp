#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "braidkit/permutation.hpp"

namespace braidkit {

// Word in the Artin generators of the braid group on `strands` strands.
// Letters are signed generator indices: +k means s_k, -k means s_k^-1,
// with 1 <= k <= strands-1.  Words are plain sequences; no normalization
// is applied implicitly.
class BraidWord {
public:
    explicit BraidWord(int strands) : strands_(strands) { validate_(); }
    BraidWord(int strands, std::vector<int> letters);

    static BraidWord trivial(int strands) { return BraidWord(strands); }

    int strands() const { return strands_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int letter(std::size_t t) const { return letters_[t]; }
    const std::vector<int>& letters() const { return letters_; }

    friend bool operator==(const BraidWord& a, const BraidWord& b) {
        return a.strands_ == b.strands_ && a.letters_ == b.letters_;
    }
    friend bool operator!=(const BraidWord& a, const BraidWord& b) { return !(a == b); }

private:
    void validate_() const;

    int strands_;
    std::vector<int> letters_;
};

BraidWord concat(const BraidWord& u, const BraidWord& v);
BraidWord invert(const BraidWord& u);
BraidWord pow(const BraidWord& u, int k);

// Cancels adjacent s_k s_k^-1 pairs until none remain.
BraidWord free_cancel(const BraidWord& u);
std::vector<int> free_cancel_letters(std::vector<int> letters);

// Strand permutation; braids are read left to right, so
// perm(concat(u, v)) == compose(perm(u), perm(v)).
Permutation perm(const BraidWord& u);
bool is_pure(const BraidWord& u);

// Mirror image: flips every crossing (s_k -> s_k^-1, order kept).
// A group automorphism, unlike inversion.
BraidWord reflect(const BraidWord& u);

// Compact text form, e.g. "s1^2 s2^-1"; the trivial word prints as "1".
std::string to_text(const BraidWord& u);

} // namespace braidkit
