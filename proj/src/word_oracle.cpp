#include "braidkit/word_oracle.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "braidkit/errors.hpp"

namespace braidkit {

namespace {

void check_len(std::size_t len, const OracleLimits& limits) {
    if (len > limits.max_free_len)
        throw resource_limit_error("intermediate word exceeds max_free_len");
}

} // namespace

FreeAutomorphism artin_action(const BraidWord& u, const OracleLimits& limits) {
    const int rank = u.strands();
    FreeAutomorphism acc(rank);
    // Left-to-right accumulation: after the prefix w, acc = action(w); the
    // next letter l updates acc to acc . action(l), i.e. every generator
    // image of action(l) is rewritten through the current images.
    for (int l : u.letters()) {
        const std::size_t i = static_cast<std::size_t>(std::abs(l) - 1); // x_i slot
        FreeWord& a = acc.images[i];
        FreeWord& b = acc.images[i + 1];
        if (l > 0) {
            // action(s_i): x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
            FreeWord na(rank);
            na.append(a);
            na.append(b);
            na.append_inverse(a);
            b = std::move(a);
            a = std::move(na);
        } else {
            // action(s_i^-1): x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
            FreeWord nb(rank);
            nb.append_inverse(b);
            nb.append(a);
            nb.append(b);
            a = std::move(b);
            b = std::move(nb);
        }
        check_len(acc.images[i].size(), limits);
        check_len(acc.images[i + 1].size(), limits);
    }
    return acc;
}

bool is_trivial(const BraidWord& u, const OracleLimits& limits) {
    const BraidWord cu = free_cancel(u);
    if (cu.empty()) return true;
    return artin_action(cu, limits).is_identity();
}

bool equal(const BraidWord& u, const BraidWord& v, const OracleLimits& limits) {
    if (u.strands() != v.strands()) throw std::invalid_argument("strand count mismatch");
    const BraidWord cu = free_cancel(u);
    const BraidWord cv = free_cancel(v);
    if (cu == cv) return true;
    return artin_action(cu, limits) == artin_action(cv, limits);
}

namespace {

struct Pending {
    std::size_t pos;
    int sign;
};

struct Handle {
    std::size_t open;  // position of s_j^e
    std::size_t close; // position of s_j^-e
    int index;         // j
    int sign;          // e
};

// Leftmost-closing handle: the first position at which some s_j^e ... s_j^-e
// pair closes with no intervening letter of index <= j.  Such a handle has
// no complete handle inside it (one would have closed earlier), so reducing
// it is always a permitted step.
std::optional<Handle> find_handle(const std::vector<int>& w, int strands) {
    std::vector<std::optional<Pending>> pending(static_cast<std::size_t>(strands));
    for (std::size_t t = 0; t < w.size(); ++t) {
        const int j = std::abs(w[t]);
        const int d = w[t] > 0 ? 1 : -1;
        for (int k = j + 1; k < strands; ++k) pending[static_cast<std::size_t>(k)].reset();
        auto& pj = pending[static_cast<std::size_t>(j)];
        if (pj && pj->sign == -d) return Handle{pj->pos, t, j, pj->sign};
        pj = Pending{t, d};
    }
    return std::nullopt;
}

} // namespace

bool has_handle(const BraidWord& u) {
    return find_handle(u.letters(), u.strands()).has_value();
}

BraidWord handle_reduce(const BraidWord& u, const OracleLimits& limits) {
    std::vector<int> cur = free_cancel_letters(u.letters());
    std::size_t steps = 0;
    while (auto h = find_handle(cur, u.strands())) {
        if (++steps > limits.max_steps)
            throw resource_limit_error("handle reduction exceeds max_steps");
        const int j = h->index;
        const int e = h->sign;
        std::vector<int> next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(h->open));
        for (std::size_t t = h->open + 1; t < h->close; ++t) {
            const int m = std::abs(cur[t]);
            if (m == j + 1) {
                // s_{j+1}^d -> s_{j+1}^-e s_j^d s_{j+1}^e
                next.push_back(-e * (j + 1));
                next.push_back(cur[t] > 0 ? j : -j);
                next.push_back(e * (j + 1));
            } else {
                next.push_back(cur[t]); // only indices > j+1 remain
            }
        }
        next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(h->close) + 1,
                    cur.end());
        cur = free_cancel_letters(std::move(next));
        check_len(cur.size(), limits);
    }
    return BraidWord(u.strands(), std::move(cur));
}

bool is_trivial_dehornoy(const BraidWord& u, const OracleLimits& limits) {
    return handle_reduce(u, limits).empty();
}

} // namespace braidkit
