#include "braidkit/free_word.hpp"

#include <cstdlib>
#include <stdexcept>

namespace braidkit {

FreeWord FreeWord::generator(int rank, int g, int sign) {
    FreeWord w(rank);
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    w.push(sign * g);
    return w;
}

void FreeWord::push(int signed_gen) {
    int g = std::abs(signed_gen);
    if (g < 1 || g > rank_) throw std::invalid_argument("free generator out of range");
    if (!letters_.empty() && letters_.back() == -signed_gen)
        letters_.pop_back();
    else
        letters_.push_back(signed_gen);
}

void FreeWord::append(const FreeWord& w) {
    if (w.rank_ != rank_) throw std::invalid_argument("free group rank mismatch");
    if (&w == this) {
        FreeWord copy = w;
        for (int l : copy.letters_) push(l);
        return;
    }
    for (int l : w.letters_) push(l);
}

void FreeWord::append_inverse(const FreeWord& w) {
    if (w.rank_ != rank_) throw std::invalid_argument("free group rank mismatch");
    if (&w == this) {
        FreeWord copy = w;
        for (auto it = copy.letters_.rbegin(); it != copy.letters_.rend(); ++it) push(-*it);
        return;
    }
    for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) push(-*it);
}

FreeWord FreeWord::inverse() const {
    FreeWord r(rank_);
    r.append_inverse(*this);
    return r;
}

FreeAutomorphism::FreeAutomorphism(int rank_in) : rank(rank_in) {
    if (rank < 0) throw std::invalid_argument("rank must be nonnegative");
    images.reserve(static_cast<std::size_t>(rank));
    for (int g = 1; g <= rank; ++g) images.push_back(FreeWord::generator(rank, g));
}

bool FreeAutomorphism::is_identity() const {
    for (int g = 1; g <= rank; ++g) {
        const FreeWord& im = images[static_cast<std::size_t>(g - 1)];
        if (im.size() != 1 || im.letter(0) != g) return false;
    }
    return true;
}

FreeWord apply(const FreeAutomorphism& f, const FreeWord& w) {
    if (f.rank != w.rank()) throw std::invalid_argument("free group rank mismatch");
    FreeWord out(w.rank());
    for (int l : w.letters()) {
        const FreeWord& im = f.images[static_cast<std::size_t>(std::abs(l) - 1)];
        if (l > 0)
            out.append(im);
        else
            out.append_inverse(im);
    }
    return out;
}

FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& g) {
    if (f.rank != g.rank) throw std::invalid_argument("free group rank mismatch");
    FreeAutomorphism r(f.rank);
    for (int gen = 1; gen <= f.rank; ++gen)
        r.images[static_cast<std::size_t>(gen - 1)] =
            apply(f, g.images[static_cast<std::size_t>(gen - 1)]);
    return r;
}

} // namespace braidkit
