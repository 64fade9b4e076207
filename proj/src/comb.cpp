#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include "braidkit/errors.hpp"
#include "braidkit/free_word.hpp"
#include "braidkit/pure_braid.hpp"

namespace braidkit {

namespace {

void check_len(std::size_t len, const OracleLimits& limits) {
    if (len > limits.max_free_len)
        throw resource_limit_error("combing exceeds max_free_len");
}

// One peeling level: splits a pure word on n strands as f . B where f is a
// word in g_i = A[i,n] and B uses only indices <= n-2.  The running prefix
// is kept in the form f . B . T_p with T_p = s_{n-1} s_{n-2} ... s_p; the
// conjugation action Phi_B(g) = B g B^-1 is carried along as generator
// images so emissions can be written over the g's directly.
std::vector<int> peel(const std::vector<int>& cur, int n, FreeWord& f,
                      const OracleLimits& limits) {
    const int rank = n - 1;
    std::vector<FreeWord> img;
    img.reserve(static_cast<std::size_t>(rank));
    for (int g = 1; g <= rank; ++g) img.push_back(FreeWord::generator(rank, g));
    std::vector<int> bg;
    int p = n;

    auto push_bg = [&](int letter) {
        bg.push_back(letter);
        const std::size_t k = static_cast<std::size_t>(std::abs(letter) - 1);
        FreeWord& a = img[k];
        FreeWord& b = img[k + 1];
        if (letter > 0) {
            // Phi gains s_k on the right:  g_k -> g_{k+1},
            // g_{k+1} -> g_{k+1}^-1 g_k g_{k+1}, rewritten through img.
            FreeWord nb(rank);
            nb.append_inverse(b);
            nb.append(a);
            nb.append(b);
            a = std::move(b);
            b = std::move(nb);
        } else {
            // s_k^-1:  g_k -> g_k g_{k+1} g_k^-1,  g_{k+1} -> g_k.
            FreeWord na(rank);
            na.append(a);
            na.append(b);
            na.append_inverse(a);
            b = std::move(a);
            a = std::move(na);
        }
        check_len(img[k].size(), limits);
        check_len(img[k + 1].size(), limits);
    };

    for (int l : cur) {
        const int i = std::abs(l);
        const int e = l > 0 ? 1 : -1;
        if (i + 1 < p) {
            push_bg(l); // s_i commutes with T_p
        } else if (i > p) {
            push_bg(e * (i - 1)); // T_p s_i^e = s_{i-1}^e T_p
        } else if (p == i + 1) {
            if (e > 0) {
                p = i; // T_{i+1} s_i = T_i
            } else {
                // T_{i+1} s_i^-1 = g_i^-1 T_i
                f.append_inverse(img[static_cast<std::size_t>(i - 1)]);
                p = i;
            }
        } else { // p == i
            if (e > 0) {
                // T_i s_i = g_i T_{i+1}
                f.append(img[static_cast<std::size_t>(i - 1)]);
            }
            p = i + 1; // T_i s_i^-1 = T_{i+1}
        }
        check_len(f.size(), limits);
    }
    if (p != n) throw std::logic_error("combing left a nontrivial coset on a pure input");
    return free_cancel_letters(std::move(bg));
}

} // namespace

PureWord comb(const BraidWord& u, const OracleLimits& limits) {
    if (!is_pure(u)) throw std::invalid_argument("comb requires a pure braid");
    PureWord out(u.strands());
    std::vector<int> cur = free_cancel_letters(u.letters());
    for (int n = u.strands(); n >= 2; --n) {
        FreeWord f(n - 1);
        cur = peel(cur, n, f, limits);
        for (int l : f.letters())
            out.push(PureLetter{std::abs(l), n, l > 0 ? 1 : -1});
    }
    return out;
}

} // namespace braidkit
