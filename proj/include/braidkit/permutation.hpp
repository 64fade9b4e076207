#pragma once

#include <vector>

namespace braidkit {

// Permutation of {1..n}.  image(k) is where k is sent; for a braid this is
// the end position of the strand that starts at position k.
class Permutation {
public:
    explicit Permutation(int n);
    static Permutation transposition(int n, int i); // swaps i and i+1

    int size() const { return static_cast<int>(img_.size()); }
    int image(int k) const { return img_[static_cast<std::size_t>(k - 1)]; }
    bool is_identity() const;
    Permutation inverse() const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

    // apply p first, then q
    friend Permutation compose(const Permutation& p, const Permutation& q);

private:
    std::vector<int> img_;
};

} // namespace braidkit
