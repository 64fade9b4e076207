#pragma once

#include <cstddef>
#include <vector>

namespace braidkit {

// Freely reduced word in a free group of given rank.  Letters are signed
// generator indices (+g / -g, 1 <= g <= rank); reduction is maintained as
// a class invariant by the appending operations.
class FreeWord {
public:
    explicit FreeWord(int rank) : rank_(rank) {}
    static FreeWord generator(int rank, int g, int sign = +1);

    int rank() const { return rank_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int letter(std::size_t t) const { return letters_[t]; }
    const std::vector<int>& letters() const { return letters_; }

    void push(int signed_gen); // appends one letter, cancelling if possible
    void append(const FreeWord& w);
    void append_inverse(const FreeWord& w);
    FreeWord inverse() const;

    friend bool operator==(const FreeWord& a, const FreeWord& b) {
        return a.rank_ == b.rank_ && a.letters_ == b.letters_;
    }
    friend bool operator!=(const FreeWord& a, const FreeWord& b) { return !(a == b); }

private:
    int rank_;
    std::vector<int> letters_;
};

// Endomorphism of a free group given by generator images; equality of
// images decides equality of the maps on reduced words.
struct FreeAutomorphism {
    explicit FreeAutomorphism(int rank);

    int rank;
    std::vector<FreeWord> images; // images[g-1] = image of generator g

    bool is_identity() const;

    friend bool operator==(const FreeAutomorphism& a, const FreeAutomorphism& b) {
        return a.rank == b.rank && a.images == b.images;
    }
    friend bool operator!=(const FreeAutomorphism& a, const FreeAutomorphism& b) { return !(a == b); }
};

// Substitutes f's generator images into w.
FreeWord apply(const FreeAutomorphism& f, const FreeWord& w);

// compose(f, g) applies g first, then f.
FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& g);

} // namespace braidkit
