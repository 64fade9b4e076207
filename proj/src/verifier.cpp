#include "braidkit/verifier.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "braidkit/errors.hpp"
#include "braidkit/maps.hpp"
#include "braidkit/pure_braid.hpp"

namespace braidkit {

namespace {

// Raised by check bodies on the first violated instance; run_check turns it
// into a fail report whose witness names the offending words.
struct Failure {
    std::string text;
};

std::string show(const BraidWord& u) { return to_text(free_cancel(u)); }

void require(bool cond, const std::string& label) {
    if (!cond) throw Failure{label};
}

void require_equal(const BraidWord& lhs, const BraidWord& rhs, const std::string& label,
                   const OracleLimits& limits) {
    if (!equal(lhs, rhs, limits))
        throw Failure{label + ": expected equal braids, got " + show(lhs) + " vs " + show(rhs)};
}

void require_distinct(const BraidWord& lhs, const BraidWord& rhs, const std::string& label,
                      const OracleLimits& limits) {
    if (equal(lhs, rhs, limits))
        throw Failure{label + ": expected distinct braids, both equal " + show(lhs)};
}

void require_trivial(const BraidWord& u, const std::string& label, const OracleLimits& limits) {
    if (!is_trivial(u, limits))
        throw Failure{label + ": expected the trivial braid, got " + show(u)};
}

BraidWord sigma(int n, int k) { return BraidWord(n, {k}); }

PureWord letter(int n, int i, int j, int sign = +1) { return PureWord::single(n, i, j, sign); }

BraidWord twist_pow(int n, int k) { return expand(pow(full_twist(n), k)); }

std::mt19937_64 check_rng(const SamplerParams& params, int n, std::uint32_t tag) {
    std::seed_seq ss{static_cast<std::uint32_t>(params.seed),
                     static_cast<std::uint32_t>(params.seed >> 32),
                     static_cast<std::uint32_t>(n), tag};
    return std::mt19937_64(ss);
}

BraidWord random_pure_expansion(int n, int max_len, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) pairs.emplace_back(i, j);
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<std::size_t> pair_dist(0, pairs.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    PureWord w(n);
    const int len = len_dist(rng);
    for (int t = 0; t < len; ++t) {
        auto [i, j] = pairs[pair_dist(rng)];
        w.push(pure_letter(i, j, coin(rng) == 0 ? 1 : -1));
    }
    return expand(w);
}

BraidWord random_braid(int n, int max_len, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> idx_dist(1, n - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<int> ls;
    const int len = len_dist(rng);
    for (int t = 0; t < len; ++t) {
        const int k = idx_dist(rng);
        ls.push_back(coin(rng) == 0 ? k : -k);
    }
    return BraidWord(n, std::move(ls));
}

// --- check bodies -------------------------------------------------------

std::string check_c0(int n, const SamplerParams&, const OracleLimits& limits) {
    for (int j = 1; j <= n; ++j) {
        PureWord ascending(n);
        for (int m = 1; m <= n; ++m) {
            if (m == j) continue;
            ascending.push(pure_letter(m, j));
        }
        std::ostringstream label;
        label << "zero-row letter A[0," << j << "] vs inverted ascending product";
        require_equal(expand(a0(j, n)), invert(expand(ascending)), label.str(), limits);
    }
    return "both expressions of every zero-row letter agree";
}

std::string check_c1(int n, const SamplerParams&, const OracleLimits& limits) {
    for (int k = 1; k + 1 <= n - 1; ++k) {
        const BraidWord lhs(n, {k, k + 1, k});
        const BraidWord rhs(n, {k + 1, k, k + 1});
        std::ostringstream label;
        label << "adjacent relation at k=" << k;
        require_equal(lhs, rhs, label.str(), limits);
        require(is_trivial_dehornoy(concat(lhs, invert(rhs)), limits),
                label.str() + ": handle reduction disagrees");
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j) {
            const BraidWord lhs(n, {i, j});
            const BraidWord rhs(n, {j, i});
            std::ostringstream label;
            label << "commuting relation at (" << i << ',' << j << ")";
            require_equal(lhs, rhs, label.str(), limits);
            require(is_trivial_dehornoy(concat(lhs, invert(rhs)), limits),
                    label.str() + ": handle reduction disagrees");
        }
    return "all defining relations hold under both oracles";
}

std::string check_c2(int n, const SamplerParams&, const OracleLimits& limits) {
    for (int k = 1; k <= n; ++k)
        for (int j = 2; j <= n; ++j)
            for (int i = 1; i < j; ++i) {
                if (i != k && j != k) continue;
                std::ostringstream label;
                label << "deleting strand " << k << " must kill A[" << i << ',' << j << "]";
                require_trivial(delete_strand(expand_letter(i, j, n), k), label.str(), limits);
            }
    return "strand deletion kills every letter through the deleted strand";
}

std::string check_c3(int n, const SamplerParams& params, const OracleLimits& limits) {
    for (std::uint64_t salt = 0; salt < 8; ++salt) {
        const BraidWord u = sample_brun(n, params, salt);
        std::ostringstream label;
        label << "brunnian sample (salt " << salt << ") has linking vector "
              << to_text(linking_vector(u));
        require(linking_vector(u).is_zero(), label.str());
        if (n == 3) {
            const BraidWord v = sample_brun3_alt(params, salt);
            require(linking_vector(v).is_zero(), label.str() + " [commutator sampler]");
        }
    }
    (void)limits;
    return "all sampled brunnian words abelianize to zero";
}

std::string check_c4(int n, const SamplerParams& params, const OracleLimits& limits) {
    for (std::uint64_t salt = 0; salt < 8; ++salt) {
        const BraidWord u = sample_brun(n, params, salt);
        std::ostringstream label;
        label << "sampler output (salt " << salt << ") is not brunnian: " << show(u);
        require(is_brunnian(u, limits), label.str());
    }
    return "all sampler outputs are brunnian";
}

std::string check_c5(int n, const SamplerParams& params, const OracleLimits& limits) {
    auto rng = check_rng(params, n, 0xC5u);
    std::uniform_int_distribution<int> strand_dist(1, n);
    for (int trial = 0; trial < 8; ++trial) {
        const int k = strand_dist(rng);
        int other = strand_dist(rng);
        while (other == k) other = strand_dist(rng);
        const PureWord g = letter(n, std::min(other, k), std::max(other, k));
        const BraidWord x =
            sample_closure(g, n, params, static_cast<std::uint64_t>(trial) * 977u + 11u);
        const BraidWord beta = random_braid(n, 6, rng);
        const int target = perm(beta).image(k);
        std::ostringstream label;
        label << "conjugate of a kernel element (deleted strand " << k
              << ") must die after deleting strand " << target;
        require_trivial(delete_strand(conjugate(x, beta), target), label.str(), limits);
    }
    return "conjugation carries deletion kernels onto the permuted kernels";
}

std::string check_c6(int n, const SamplerParams& params, const OracleLimits& limits) {
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i)
            for (std::uint64_t salt = 0; salt < 3; ++salt) {
                const BraidWord x = sample_closure(letter(n, i, j), n, params,
                                                   salt * 131u + static_cast<std::uint64_t>(
                                                                     i * 17 + j));
                std::ostringstream label;
                label << "closure sample of A[" << i << ',' << j << "] (salt " << salt << ")";
                require_trivial(delete_strand(x, i), label.str() + " survives deleting " +
                                                         std::to_string(i),
                                limits);
                require_trivial(delete_strand(x, j), label.str() + " survives deleting " +
                                                         std::to_string(j),
                                limits);
            }
    return "closure samples die under both of their strand deletions";
}

std::string check_c7(int n, const SamplerParams&, const OracleLimits& limits) {
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            std::vector<int> bl;
            for (int t = n - 1; t >= j; --t) bl.push_back(t);
            const BraidWord beta(n, std::move(bl));
            std::ostringstream label;
            label << "descending transversal conjugation sends A[" << i << ',' << n
                  << "] to A[" << i << ',' << j << "]";
            require_equal(conjugate(expand_letter(i, n, n), beta), expand_letter(i, j, n),
                          label.str(), limits);
        }
    return "transversal conjugation relabels last-strand letters as expected";
}

std::string check_c8(int n, const SamplerParams& params, const OracleLimits& limits) {
    for (std::uint64_t salt = 0; salt < 8; ++salt) {
        const BraidWord u = sample_bd(n, params, salt, limits);
        std::ostringstream label;
        label << "boundary sample (salt " << salt << ") fails the in-Z predicate: " << show(u);
        require(in_Z(u, limits), label.str());
    }
    return "all boundary samples are brunnian and killed by the twisted deletion";
}

std::string check_c9(int n, const SamplerParams&, const OracleLimits& limits) {
    for (int j = 1; j < n; ++j) {
        std::ostringstream label;
        label << "twist image of A[0," << j << "] vs A[" << j << ',' << n << "]";
        require_equal(expand(w_map(letter(n, 0, j))), expand_letter(j, n, n), label.str(),
                      limits);
    }
    require_equal(expand(w_map(letter(n, 0, n))),
                  concat(expand(letter(n, 0, n)), twist_pow(n, 2)),
                  "twist image of A[0,n] vs A[0,n] times the squared full twist", limits);
    require_equal(expand(w_map(full_twist(n))), twist_pow(n, -1),
                  "twist image of the full twist vs its inverse", limits);
    return "twist action on the zero row and the full twist verified";
}

std::string check_c10(int n, const SamplerParams&, const OracleLimits& limits) {
    PureWord prod(n);
    for (int j = 1; j <= n; ++j) prod.push(pure_letter(0, j));
    require_equal(expand(prod), twist_pow(n, -2),
                  "product of all zero-row letters vs inverse squared full twist", limits);
    const BraidWord z = twist_pow(n, 1);
    for (int i = 1; i <= n - 1; ++i) {
        std::ostringstream label;
        label << "full twist must commute with s" << i;
        require_trivial(commutator(sigma(n, i), z), label.str(), limits);
    }
    return "zero-row product equals the inverse squared full twist, which is central";
}

BraidWord corrupted_or_true_c11(int n, int exponent, const OracleLimits& limits,
                                std::string& note) {
    std::ostringstream os;
    os << "twisted deletion of A[0,1] vs full twist on " << (n - 1) << " strands to the power "
       << exponent;
    note = os.str();
    require_equal(del(letter(n, 0, 1)), twist_pow(n - 1, exponent), note, limits);
    return BraidWord::trivial(n);
}

std::string check_c11(int n, const SamplerParams&, const OracleLimits& limits) {
    std::string note;
    corrupted_or_true_c11(n, 2, limits, note);
    return note + ": equal";
}

std::string check_x11(int n, const SamplerParams&, const OracleLimits& limits) {
    std::string note;
    corrupted_or_true_c11(n, 3, limits, note);
    return note + ": equal (unexpected for the negative control)";
}

std::string check_c12(int n, const SamplerParams&, const OracleLimits& limits) {
    for (int j = 2; j <= n; ++j) {
        std::ostringstream label;
        label << "theta image of A[0," << j << "] vs A[1," << j << "]";
        require_equal(expand(theta(letter(n, 0, j))), expand_letter(1, j, n), label.str(),
                      limits);
    }
    return "theta turns zero-row letters into first-row letters";
}

std::string check_c13(int n, const SamplerParams&, const OracleLimits& limits) {
    for (int j = 2; j <= n; ++j) {
        std::ostringstream label;
        label << "twisted deletion must kill A[0," << j << "]";
        require_trivial(del(letter(n, 0, j)), label.str(), limits);
    }
    return "twisted deletion kills every zero-row letter beyond the first";
}

std::string check_c14(int n, const SamplerParams&, const OracleLimits& limits) {
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n - 1; ++k) {
            const BraidWord lhs =
                conjugate(expand(letter(n, 0, j)), BraidWord(n, {-k}));
            PureWord expected(n);
            if (k == j - 1) {
                expected.push(pure_letter(0, j, -1));
                expected.push(pure_letter(0, j - 1));
                expected.push(pure_letter(0, j));
            } else if (k == j) {
                expected.push(pure_letter(0, j + 1));
            } else {
                expected.push(pure_letter(0, j));
            }
            std::ostringstream label;
            label << "conjugating A[0," << j << "] by the inverse crossing s" << k << "^-1";
            require_equal(lhs, expand(expected), label.str(), limits);
        }
    return "the zero-row conjugation table holds for every crossing";
}

std::string check_c15(int n, const SamplerParams&, const OracleLimits& limits) {
    const BraidWord inner_twisted = del(letter(n, 1, 2)); // on n-1 strands
    const BraidWord inner_plain = delete_strand(expand_letter(1, 2, n), 1);
    const BraidWord lhs = del_braid(inner_plain, limits);    // twisted after plain
    const BraidWord rhs = del_braid(inner_twisted, limits);  // twisted after twisted
    require_trivial(lhs, "twisted-after-plain deletion of A[1,2]", limits);
    require_equal(rhs, twist_pow(n - 2, 2),
                  "twisted-after-twisted deletion of A[1,2] vs squared full twist on n-2 strands",
                  limits);
    require_distinct(lhs, rhs, "the two double deletions of A[1,2]", limits);
    return "double deletions differ on A[1,2]: trivial vs the squared full twist "
           "(exponent index confirmed as n-2)";
}

std::string check_c16(int n, const SamplerParams&, const OracleLimits& limits) {
    require_equal(conjugate(expand_letter(1, 2, n), sigma(n, 1)), expand_letter(1, 2, n),
                  "conjugation by s1 must fix A[1,2]", limits);
    require_equal(del(letter(n, 1, 2)), expand(letter(n - 1, 0, 1)),
                  "twisted deletion of A[1,2] vs A[0,1] one strand down", limits);
    const PureWord a01(n - 1, {pure_letter(0, 1)});
    require_distinct(expand(a01), expand(theta(a01)),
                     "A[0,1] vs its theta image one strand down", limits);
    if (n >= 4) {
        require_trivial(delete_strand(expand(a01), 1),
                        "plain first-strand deletion of A[0,1]", limits);
        require_equal(del(a01), twist_pow(n - 2, 2),
                      "twisted deletion of A[0,1] vs squared full twist two strands down",
                      limits);
    } else {
        require_equal(expand(a01), invert(expand_letter(1, 2, 2)),
                      "on two strands A[0,1] equals A[1,2]^-1", limits);
        require_equal(expand(theta(a01)), expand_letter(1, 2, 2),
                      "on two strands the theta image of A[0,1] equals A[1,2]", limits);
    }
    return "the deletion image of A[1,2] is separated from its theta image";
}

std::string check_c17(int n, const SamplerParams&, const OracleLimits& limits) {
    auto face = [&](const BraidWord& w, int idx) {
        if (idx == 0) return del_braid(w, limits);
        return delete_strand(w, idx);
    };
    for (int k = 1; k <= n; ++k) {
        const BraidWord x = expand_letter(k, n + 1, n + 1);
        for (int i = 0; i <= n - 1; ++i)
            for (int j = i; j <= n - 1; ++j) {
                const BraidWord lhs = face(face(x, i), j);
                const BraidWord rhs = face(face(x, j + 1), i);
                std::ostringstream label;
                label << "face exchange (j=" << j << " after i=" << i << ") vs (i=" << i
                      << " after " << (j + 1) << ") on A[" << k << ',' << (n + 1) << "]";
                require_equal(lhs, rhs, label.str(), limits);
            }
    }
    return "all face-map exchange identities hold on the last-column letters";
}

std::string check_c18(int n, const SamplerParams&, const OracleLimits& limits) {
    (void)n; // fixed three-strand suite
    const BraidWord a = expand_letter(1, 2, 3);
    const BraidWord b = expand_letter(2, 3, 3);
    const BraidWord c = expand_letter(1, 3, 3);
    const BraidWord a01 = expand(a0(1, 3));
    const BraidWord a02 = expand(a0(2, 3));
    const BraidWord s1 = sigma(3, 1);
    const BraidWord s2 = sigma(3, 2);

    require_equal(conjugate(a, c), concat(concat(b, a), invert(b)),
                  "c^-1 a c vs b a b^-1", limits);
    require_equal(concat(concat(c, a), invert(c)),
                  concat(concat(concat(concat(invert(a), invert(b)), a), b), a),
                  "c a c^-1 vs a^-1 b^-1 a b a", limits);
    require_equal(conjugate(b, c),
                  concat(concat(concat(concat(b, a), b), invert(a)), invert(b)),
                  "c^-1 b c vs b a b a^-1 b^-1", limits);
    require_equal(concat(concat(c, b), invert(c)), concat(concat(invert(a), b), a),
                  "c b c^-1 vs a^-1 b a", limits);
    require_equal(conjugate(b, s1), c, "s1^-1 b s1 vs c", limits);
    require_equal(conjugate(a, s2), concat(concat(invert(b), c), b),
                  "s2^-1 a s2 vs b^-1 c b", limits);

    require_equal(commutator(commutator(a, b), a01),
                  concat(pow(commutator(b, a), 2), commutator(a, pow(b, 2))),
                  "[[a,b],A[0,1]] vs [b,a]^2 [a,b^2]", limits);

    const BraidWord com = commutator(a, b);
    require_equal(conjugate(com, s1), commutator(a, c),
                  "s1-conjugate of [a,b] vs [a,c]", limits);
    require_equal(conjugate(com, s1), commutator(a, invert(b)),
                  "s1-conjugate of [a,b] vs [a,b^-1]", limits);
    require_equal(conjugate(com, s2), commutator(invert(a), b),
                  "s2-conjugate of [a,b] vs [a^-1,b]", limits);

    require_equal(expand(w_map(letter(3, 1, 2))), a, "twist image of a vs a", limits);
    BraidWord wb = expand(w_map(letter(3, 2, 3)));
    require_equal(wb, concat(concat(b, a02), invert(b)),
                  "twist image of b vs b A[0,2] b^-1", limits);
    require_equal(wb, concat(invert(a), invert(b)), "twist image of b vs a^-1 b^-1", limits);

    const BraidWord wcom = expand(w_map(commutator_pure(letter(3, 1, 2), letter(3, 2, 3))));
    require_equal(wcom, commutator(a, invert(b)), "twist image of [a,b] vs [a,b^-1]", limits);
    const BraidWord variant =
        concat(concat(concat(concat(a, b), a), invert(b)), pow(a, -2));
    require_equal(variant,
                  concat(commutator(invert(a), invert(b)),
                         invert(commutator(pow(a, -2), invert(b)))),
                  "a b a b^-1 a^-2 vs [a^-1,b^-1][a^-2,b^-1]^-1", limits);
    require_distinct(wcom, variant,
                     "twist image of [a,b] vs the variant a b a b^-1 a^-2", limits);
    require_equal(variant, conjugate(wcom, pow(a, -2)),
                  "the variant vs the a^2-conjugate of the twist image", limits);

    const BraidWord refl = reflect(com);
    const BraidWord reflrhs = commutator(invert(a), invert(b));
    require_equal(refl, reflrhs, "reflection of [a,b] vs [a^-1,b^-1]", limits);
    require(free_cancel(refl) == free_cancel(reflrhs),
            "reflection of [a,b] must equal [a^-1,b^-1] letter for letter");

    const BraidWord half(3, {1, 2, 1});
    require_equal(conjugate(a, half), b, "half-twist conjugate of a vs b", limits);
    require_equal(conjugate(b, half), a, "half-twist conjugate of b vs a", limits);

    return "all three-strand identities hold; the commutator twist image equals [a,b^-1], "
           "and the variant a b a b^-1 a^-2 is a distinct braid (its a^2-conjugate); "
           "the swap items use the half twist s1 s2 s1, the only three-strand reading "
           "of the four-strand conjugator written s1 s2 s3";
}

std::string check_c19(int n, const SamplerParams&, const OracleLimits& limits) {
    const GeneratorMap m = w_twist_map(n);
    for (int i = 1; i < n; ++i) {
        PureWord alt(n);
        alt.push(pure_letter(i, n));
        alt.append(a0(i, n));
        alt.push(pure_letter(i, n, -1));
        const BraidWord lhs = free_cancel(expand(m.image(i, n)));
        const BraidWord rhs = free_cancel(expand(alt));
        std::ostringstream label;
        label << "two twist-image forms of A[" << i << ',' << n << "]";
        require(lhs == rhs, label.str() + ": expected letterwise agreement, got " + show(lhs) +
                                " vs " + show(rhs));
        require_equal(lhs, rhs, label.str(), limits);
    }
    return "inverted-product and conjugated forms of the twist images agree letterwise";
}

std::string check_c20(int n, const SamplerParams& params, const OracleLimits& limits) {
    auto rng = check_rng(params, n, 0xC20u);
    std::uniform_int_distribution<int> exp_dist(-2, 2);
    for (int trial = 0; trial < 8; ++trial) {
        const BraidWord x = random_pure_expansion(n, 4, rng);
        const BraidWord y = random_pure_expansion(n, 4, rng);
        const int s = exp_dist(rng);
        const int t = exp_dist(rng);
        const BraidWord lhs =
            commutator(concat(x, twist_pow(n, s)), concat(y, twist_pow(n, t)));
        std::ostringstream label;
        label << "central twist factors (powers " << s << ',' << t
              << ") must cancel in the commutator";
        require_equal(lhs, commutator(x, y), label.str(), limits);
    }
    return "commutators ignore central full-twist factors";
}

std::string check_c21(int n, const SamplerParams& params, const OracleLimits& limits) {
    (void)n; // fixed three-strand content
    for (std::uint64_t salt = 0; salt < 6; ++salt) {
        const BraidWord u = sample_brun(3, params, salt);
        std::ostringstream label;
        label << "middle deletion of a brunnian sample (salt " << salt << ")";
        require_trivial(delete_strand(u, 2), label.str(), limits);
        const BraidWord v = sample_brun3_alt(params, salt);
        require_trivial(delete_strand(v, 2), label.str() + " [commutator sampler]", limits);
    }
    auto rng = check_rng(params, 3, 0xC21u);
    std::uniform_int_distribution<int> exp_dist(1, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 6; ++trial) {
        const int p = exp_dist(rng) * (coin(rng) == 0 ? 1 : -1);
        const int q = exp_dist(rng) * (coin(rng) == 0 ? 1 : -1);
        const BraidWord u =
            commutator(pow(expand_letter(1, 2, 3), p), pow(expand_letter(2, 3, 3), q));
        std::ostringstream label;
        label << "power commutator [a^" << p << ",b^" << q << "] must be brunnian";
        require(is_brunnian(u, limits), label.str());
    }
    return "three-strand brunnian samples die under the middle deletion; "
           "power commutators of the two free letters are brunnian";
}

struct Body {
    std::function<std::string(int, const SamplerParams&, const OracleLimits&)> fn;
};

const std::map<std::string, Body>& bodies() {
    static const std::map<std::string, Body> m = {
        {"C0", {check_c0}},   {"C1", {check_c1}},   {"C2", {check_c2}},
        {"C3", {check_c3}},   {"C4", {check_c4}},   {"C5", {check_c5}},
        {"C6", {check_c6}},   {"C7", {check_c7}},   {"C8", {check_c8}},
        {"C9", {check_c9}},   {"C10", {check_c10}}, {"C11", {check_c11}},
        {"C12", {check_c12}}, {"C13", {check_c13}}, {"C14", {check_c14}},
        {"C15", {check_c15}}, {"C16", {check_c16}}, {"C17", {check_c17}},
        {"C18", {check_c18}}, {"C19", {check_c19}}, {"C20", {check_c20}},
        {"C21", {check_c21}}, {"X11", {check_x11}},
    };
    return m;
}

} // namespace

const std::vector<CheckInfo>& check_catalog() {
    static const std::vector<CheckInfo> catalog = {
        {"C0", "zero-row letters equal the inverted ascending products", 3, 6, false},
        {"C1", "defining relations of the braid presentation", 3, 7, false},
        {"C2", "strand deletion kills the letters through the deleted strand", 3, 6, false},
        {"C3", "brunnian samples have zero linking vector", 3, 4, false},
        {"C4", "brunnian sampler outputs are brunnian", 3, 4, false},
        {"C5", "conjugation carries deletion kernels to the permuted kernels", 3, 4, false},
        {"C6", "closure samples die under both of their strand deletions", 3, 4, false},
        {"C7", "transversal conjugation relabels last-strand letters", 3, 5, false},
        {"C8", "boundary samples satisfy the in-Z predicate", 3, 3, false},
        {"C9", "twist-map action on zero-row letters and the full twist", 3, 5, false},
        {"C10", "zero-row product equals the inverse squared full twist; centrality", 3, 6,
         false},
        {"C11", "twisted deletion sends A[0,1] to the squared full twist", 3, 5, false},
        {"C12", "theta sends zero-row letters to first-row letters", 3, 5, false},
        {"C13", "twisted deletion kills zero-row letters A[0,j] for j >= 2", 3, 5, false},
        {"C14", "conjugation table for zero-row letters under inverse crossings", 3, 5, false},
        {"C15", "the two double deletions of A[1,2] differ", 4, 5, false},
        {"C16", "deletion image of A[1,2] separates from its theta image", 3, 5, false},
        {"C17", "face-map exchange identities on last-column letters", 3, 4, false},
        {"C18", "three-strand identity suite", 3, 3, false},
        {"C19", "two forms of the twist-map images agree letterwise", 3, 5, false},
        {"C20", "central full-twist factors cancel in commutators", 3, 4, false},
        {"C21", "three-strand brunnian words and power commutators", 3, 3, false},
        {"X11", "negative control: cubed-twist corruption of C11 must fail", 3, 5, true},
    };
    return catalog;
}

bool check_exists(const std::string& id) {
    for (const CheckInfo& c : check_catalog())
        if (c.id == id) return true;
    return false;
}

CheckReport run_check(const std::string& id, int n, const SamplerParams& params,
                      const OracleLimits& limits) {
    const CheckInfo* info = nullptr;
    for (const CheckInfo& c : check_catalog())
        if (c.id == id) info = &c;
    if (info == nullptr) throw std::invalid_argument("unknown check id: " + id);

    CheckReport r;
    r.check = id;
    r.n = n;
    r.seed = params.seed;
    const auto t0 = std::chrono::steady_clock::now();
    if (n < info->min_n || n > info->max_n) {
        r.status = "skip";
        std::ostringstream os;
        os << "strand count " << n << " outside the supported range [" << info->min_n << ".."
           << info->max_n << "]";
        r.witness = os.str();
    } else {
        try {
            r.witness = bodies().at(id).fn(n, params, limits);
            r.status = "pass";
        } catch (const Failure& f) {
            r.status = "fail";
            r.witness = f.text;
        } catch (const resource_limit_error& e) {
            r.status = "skip";
            r.witness = std::string("resource limit: ") + e.what();
        }
    }
    const auto t1 = std::chrono::steady_clock::now();
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return r;
}

std::vector<CheckReport> run_all(int n_lo, int n_hi, const SamplerParams& params,
                                 const OracleLimits& limits) {
    std::vector<CheckReport> out;
    for (const CheckInfo& c : check_catalog()) {
        if (c.negative_control) continue;
        for (int n = n_lo; n <= n_hi; ++n) out.push_back(run_check(c.id, n, params, limits));
    }
    return out;
}

nlohmann::json report_to_json(const CheckReport& r) {
    return nlohmann::json{{"check", r.check},     {"n", r.n},
                          {"seed", r.seed},       {"status", r.status},
                          {"witness", r.witness}, {"elapsed_ms", r.elapsed_ms}};
}

nlohmann::json reports_to_json(const std::vector<CheckReport>& rs) {
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    nlohmann::json items = nlohmann::json::array();
    for (const CheckReport& r : rs) {
        if (r.status == "pass") ++passed;
        else if (r.status == "fail") ++failed;
        else ++skipped;
        items.push_back(report_to_json(r));
    }
    return nlohmann::json{{"version", "1"},
                          {"total", rs.size()},
                          {"passed", passed},
                          {"failed", failed},
                          {"skipped", skipped},
                          {"reports", items}};
}

std::string report_to_text(const CheckReport& r) {
    std::ostringstream os;
    os << r.check << " n=" << r.n << " seed=" << r.seed << " " << r.status << " ("
       << r.elapsed_ms << " ms): " << r.witness;
    return os.str();
}

} // namespace braidkit
