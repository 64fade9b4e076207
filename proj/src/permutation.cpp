#include "braidkit/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace braidkit {

Permutation::Permutation(int n) {
    if (n < 1) throw std::invalid_argument("permutation size must be positive");
    img_.resize(static_cast<std::size_t>(n));
    std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::transposition(int n, int i) {
    if (i < 1 || i + 1 > n) throw std::invalid_argument("transposition index out of range");
    Permutation p(n);
    std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(i)]);
    return p;
}

bool Permutation::is_identity() const {
    for (int k = 1; k <= size(); ++k)
        if (image(k) != k) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation r(size());
    for (int k = 1; k <= size(); ++k) r.img_[static_cast<std::size_t>(image(k) - 1)] = k;
    return r;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("permutation size mismatch");
    Permutation r(p.size());
    for (int k = 1; k <= p.size(); ++k)
        r.img_[static_cast<std::size_t>(k - 1)] = q.image(p.image(k));
    return r;
}

} // namespace braidkit
