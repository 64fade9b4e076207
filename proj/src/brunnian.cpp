#include "braidkit/brunnian.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

#include "braidkit/maps.hpp"

namespace braidkit {

bool is_brunnian(const BraidWord& u, const OracleLimits& limits) {
    if (!is_pure(u)) throw std::invalid_argument("brunnian test requires a pure braid");
    for (int k = 1; k <= u.strands(); ++k)
        if (!is_trivial(delete_strand(u, k), limits)) return false;
    return true;
}

bool in_Z(const BraidWord& u, const OracleLimits& limits) {
    return is_brunnian(u, limits) && is_trivial(del_braid(u, limits), limits);
}

namespace {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t salt, std::uint32_t tag) {
    std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                     static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32),
                     tag};
    return std::mt19937_64(ss);
}

constexpr std::uint32_t TAG_CLOSURE = 0xC105u;
constexpr std::uint32_t TAG_SYMCOMM = 0x5CC0u;
constexpr std::uint32_t TAG_BRUN3 = 0xB3A1u;

// Letters uniform over the standard alphabet with both signs; length decays
// geometrically (ratio 1/2) and is capped, so a cap of 0 forces the trivial
// word.
PureWord random_pure_word(int n, int max_len, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) pairs.emplace_back(i, j);
    std::uniform_int_distribution<std::size_t> pair_dist(0, pairs.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    int len = 0;
    while (len < max_len && coin(rng) == 1) ++len;
    PureWord w(n);
    for (int t = 0; t < len; ++t) {
        auto [i, j] = pairs[pair_dist(rng)];
        w.push(pure_letter(i, j, coin(rng) == 0 ? 1 : -1));
    }
    return w;
}

BraidWord closure_sample(const PureWord& g, int n, const SamplerParams& params,
                         std::mt19937_64& rng) {
    if (g.strands() != n) throw std::invalid_argument("strand count mismatch");
    if (params.max_conjugator_len < 0 || params.factors_per_closure < 1)
        throw std::invalid_argument("sampler bounds out of range");
    const BraidWord gb = expand(g);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> count_dist(1, params.factors_per_closure);
    const int factors = count_dist(rng);
    BraidWord out = BraidWord::trivial(n);
    for (int t = 0; t < factors; ++t) {
        const BraidWord b = expand(random_pure_word(n, params.max_conjugator_len, rng));
        // first factor keeps the positive sign so a length-0 conjugator
        // reproduces the generator itself
        const BraidWord x = (t == 0 || coin(rng) == 0) ? gb : invert(gb);
        out = concat(out, conjugate(x, b));
    }
    return free_cancel(out);
}

BraidWord symmetric_commutator_sample(const std::vector<PureWord>& gens, int n,
                                      const SamplerParams& params, std::mt19937_64& rng) {
    if (gens.size() < 2)
        throw std::invalid_argument("symmetric commutator needs at least two generators");
    for (const PureWord& g : gens)
        if (g.strands() != n) throw std::invalid_argument("strand count mismatch");
    if (params.commutator_depth < 1)
        throw std::invalid_argument("sampler bounds out of range");
    BraidWord out = BraidWord::trivial(n);
    std::vector<std::size_t> order(gens.size());
    for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
    for (int term = 0; term < params.commutator_depth; ++term) {
        std::shuffle(order.begin(), order.end(), rng);
        BraidWord c = closure_sample(gens[order[0]], n, params, rng);
        for (std::size_t t = 1; t < order.size(); ++t)
            c = free_cancel(commutator(c, closure_sample(gens[order[t]], n, params, rng)));
        out = concat(out, c);
    }
    return free_cancel(out);
}

} // namespace

BraidWord sample_closure(const PureWord& g, int n, const SamplerParams& params,
                         std::uint64_t salt) {
    auto rng = make_rng(params.seed, salt, TAG_CLOSURE);
    return closure_sample(g, n, params, rng);
}

BraidWord sample_symmetric_commutator(const std::vector<PureWord>& gens, int n,
                                      const SamplerParams& params, std::uint64_t salt) {
    auto rng = make_rng(params.seed, salt, TAG_SYMCOMM);
    return symmetric_commutator_sample(gens, n, params, rng);
}

BraidWord sample_brun(int n, const SamplerParams& params, std::uint64_t salt) {
    if (n < 3) throw std::invalid_argument("brunnian sampler needs at least three strands");
    std::vector<PureWord> gens;
    gens.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) gens.push_back(PureWord::single(n, i, n));
    return sample_symmetric_commutator(gens, n, params, salt);
}

BraidWord sample_bd(int n, const SamplerParams& params, std::uint64_t salt,
                    const OracleLimits& limits) {
    return free_cancel(del_braid(sample_brun(n + 1, params, salt), limits));
}

BraidWord sample_brun3_alt(const SamplerParams& params, std::uint64_t salt) {
    auto rng = make_rng(params.seed, salt, TAG_BRUN3);
    const BraidWord u = expand(random_pure_word(3, std::max(2, params.max_conjugator_len), rng));
    const BraidWord v = expand(random_pure_word(3, std::max(2, params.max_conjugator_len), rng));
    return free_cancel(commutator(u, v));
}

} // namespace braidkit
