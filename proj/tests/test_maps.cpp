#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "braidkit/maps.hpp"
#include "braidkit/word_oracle.hpp"

using namespace braidkit;

namespace {

PureWord random_pure(int n, int len, std::mt19937_64& rng, bool allow_zero_row = false) {
    std::vector<PureLetter> alphabet;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) alphabet.push_back(pure_letter(i, j));
    if (allow_zero_row)
        for (int j = 1; j <= n; ++j) alphabet.push_back(pure_letter(0, j));
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    PureWord w(n);
    for (int t = 0; t < len; ++t) {
        PureLetter l = alphabet[pick(rng)];
        l.sign = coin(rng) == 0 ? 1 : -1;
        w.push(l);
    }
    return w;
}

bool same_letters(const PureWord& u, const PureWord& v) {
    if (u.strands() != v.strands() || u.size() != v.size()) return false;
    for (std::size_t t = 0; t < u.size(); ++t) {
        const PureLetter& a = u.letter(t);
        const PureLetter& b = v.letter(t);
        if (a.i != b.i || a.j != b.j || a.sign != b.sign) return false;
    }
    return true;
}

} // namespace

TEST_CASE("deleting the strand of a conjugated square kills it") {
    CHECK(free_cancel(delete_strand(expand_letter(1, 3, 3), 3)).empty());
    CHECK(free_cancel(delete_strand(expand_letter(1, 3, 3), 1)).empty());
    CHECK(free_cancel(delete_strand(expand_letter(1, 2, 3), 1)).empty());
    CHECK(free_cancel(delete_strand(expand_letter(1, 2, 3), 2)).empty());
}

TEST_CASE("deleting a bystander strand relabels") {
    CHECK(delete_strand(expand_letter(1, 3, 3), 2) == BraidWord(2, {1, 1}));
    CHECK(delete_strand(expand_letter(1, 2, 3), 3) == BraidWord(2, {1, 1}));
    CHECK(delete_strand(expand_letter(2, 3, 3), 1) == BraidWord(2, {1, 1}));
    CHECK(delete_strand(expand_letter(1, 4, 4), 2) == expand_letter(1, 3, 3));
    CHECK(delete_strand(expand_letter(1, 4, 4), 3) == expand_letter(1, 3, 3));
    CHECK(delete_strand(expand_letter(2, 4, 4), 1) == expand_letter(1, 3, 3));
}

TEST_CASE("strand deletion validates its arguments") {
    CHECK_THROWS_AS(delete_strand(BraidWord(3), 0), std::invalid_argument);
    CHECK_THROWS_AS(delete_strand(BraidWord(3), 4), std::invalid_argument);
    CHECK_THROWS_AS(delete_strand(BraidWord(1), 1), std::invalid_argument);
    CHECK(delete_strand(BraidWord(2), 1) == BraidWord(1));
}

TEST_CASE("strand deletion is a homomorphism on pure words") {
    std::mt19937_64 rng(10001);
    for (int t = 0; t < 80; ++t) {
        const int n = 3 + t % 3;
        const BraidWord u = expand(random_pure(n, 4, rng));
        const BraidWord v = expand(random_pure(n, 4, rng));
        for (int k = 1; k <= n; ++k)
            CHECK(delete_strand(concat(u, v), k) ==
                  concat(delete_strand(u, k), delete_strand(v, k)));
    }
}

TEST_CASE("the full twist deletes to the full twist one strand down") {
    for (int n = 3; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(equal(delete_strand(expand(full_twist(n)), k),
                        expand(full_twist(n - 1))));
}

TEST_CASE("identity map leaves standard letters alone") {
    std::mt19937_64 rng(10002);
    const GeneratorMap id = identity_map(4);
    for (int t = 0; t < 20; ++t) {
        const PureWord w = random_pure(4, 6, rng);
        CHECK(same_letters(apply_map(id, w), w));
    }
}

TEST_CASE("generator map lookup validates indices") {
    const GeneratorMap id = identity_map(3);
    CHECK_NOTHROW(id.image(1, 3));
    CHECK_NOTHROW(id.image(3, 2)); // normalized to (2,3)
    CHECK_THROWS_AS(id.image(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(id.image(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(GeneratorMap("too-small", 1), std::invalid_argument);
}

TEST_CASE("theta fixes letters outside the first row") {
    const PureWord w = theta(PureWord::single(3, 2, 3));
    CHECK(same_letters(w, PureWord::single(3, 2, 3)));
}

TEST_CASE("theta twists first-row letters through the zero row") {
    const PureWord w = theta(PureWord::single(3, 1, 2));
    PureWord expected(3);
    expected.push(pure_letter(1, 2, -1));
    expected.push(pure_letter(0, 2));
    expected.push(pure_letter(1, 2));
    CHECK(same_letters(w, expected));
}

TEST_CASE("theta sends zero-row letters to first-row letters") {
    for (int n = 3; n <= 5; ++n)
        for (int j = 2; j <= n; ++j)
            CHECK(equal(expand(theta(PureWord::single(n, 0, j))), expand_letter(1, j, n)));
    CHECK(equal(expand(theta(a0(2, 3))), expand_letter(1, 2, 3)));
}

TEST_CASE("theta-inv sends first-row letters to zero-row letters") {
    const PureWord w = theta_inv(PureWord::single(3, 1, 3));
    REQUIRE(w.size() == 1);
    CHECK(w.letter(0).i == 0);
    CHECK(w.letter(0).j == 3);
    CHECK(w.letter(0).sign == 1);
}

TEST_CASE("theta and theta-inv are mutually inverse up to braid equality") {
    std::mt19937_64 rng(10003);
    for (int t = 0; t < 60; ++t) {
        const int n = 3 + t % 3;
        const PureWord w = random_pure(n, 5, rng, true);
        CHECK(equal(expand(theta(theta_inv(w))), expand(w)));
        CHECK(equal(expand(theta_inv(theta(w))), expand(w)));
    }
}

TEST_CASE("twisted deletion on zero-row letters") {
    CHECK(is_trivial(del(a0(2, 3))));
    CHECK(is_trivial(del(PureWord::single(3, 0, 2))));
    CHECK(is_trivial(del(PureWord::single(3, 0, 3))));
    CHECK(equal(del(a0(1, 3)), BraidWord(2, {1, 1, 1, 1})));
    CHECK(equal(del(PureWord::single(3, 0, 1)), BraidWord(2, {1, 1, 1, 1})));
}

TEST_CASE("twisted deletion sends A[1,2] to the zero-row letter one strand down") {
    for (int n = 3; n <= 4; ++n)
        CHECK(equal(del(PureWord::single(n, 1, 2)),
                    expand(PureWord::single(n - 1, 0, 1))));
}

TEST_CASE("twisted deletion via combing matches the alphabet-level map") {
    std::mt19937_64 rng(10004);
    for (int t = 0; t < 40; ++t) {
        const int n = 3 + t % 2;
        const PureWord w = random_pure(n, 4, rng, true);
        CHECK(equal(del_braid(expand(w)), del(w)));
    }
}

TEST_CASE("twist map on three strands") {
    CHECK(same_letters(w_map(PureWord::single(3, 1, 2)), PureWord::single(3, 1, 2)));
    PureWord expected13(3);
    expected13.push(pure_letter(1, 2, -1));
    expected13.push(pure_letter(1, 3, -1));
    CHECK(same_letters(w_map(PureWord::single(3, 1, 3)), expected13));
    PureWord expected23(3);
    expected23.push(pure_letter(1, 2, -1));
    expected23.push(pure_letter(2, 3, -1));
    CHECK(same_letters(w_map(PureWord::single(3, 2, 3)), expected23));
}

TEST_CASE("twist map on the last zero-row letter and the full twist") {
    const BraidWord lhs = expand(w_map(PureWord::single(3, 0, 3)));
    PureWord rhs(3);
    rhs.push(pure_letter(0, 3));
    rhs.append(pow(full_twist(3), 2));
    CHECK(equal(lhs, expand(rhs)));
    CHECK(equal(expand(w_map(full_twist(3))), invert(expand(full_twist(3)))));
}

TEST_CASE("twist map needs at least three strands") {
    CHECK_THROWS_AS(w_twist_map(2), std::invalid_argument);
    CHECK_NOTHROW(w_twist_map(3));
}

TEST_CASE("maps reject words on the wrong strand count") {
    const GeneratorMap m = theta_map(3);
    CHECK_THROWS_AS(apply_map(m, PureWord::single(4, 1, 2)), std::invalid_argument);
}

TEST_CASE("homomorphism property of letterwise maps") {
    std::mt19937_64 rng(10005);
    const GeneratorMap th = theta_map(4);
    for (int t = 0; t < 30; ++t) {
        const PureWord u = random_pure(4, 3, rng, true);
        const PureWord v = random_pure(4, 3, rng, true);
        CHECK(equal(expand(apply_map(th, concat(u, v))),
                    concat(expand(apply_map(th, u)), expand(apply_map(th, v)))));
        CHECK(equal(expand(apply_map(th, invert(u))), invert(expand(apply_map(th, u)))));
    }
}

TEST_CASE("conjugation by the trivial word is the identity") {
    const BraidWord x(3, {1, 1, -2});
    CHECK(conjugate(x, BraidWord::trivial(3)) == x);
}

TEST_CASE("conjugation moves letters along the permutation") {
    CHECK(equal(conjugate(expand_letter(2, 3, 3), BraidWord(3, {1})),
                expand_letter(1, 3, 3)));
    CHECK(equal(conjugate(expand_letter(1, 2, 3), BraidWord(3, {1, 2, 1})),
                expand_letter(2, 3, 3)));
}

TEST_CASE("commutator of a word with itself cancels freely") {
    const BraidWord x(3, {1, 2, -1});
    CHECK(free_cancel(commutator(x, x)).empty());
    CHECK(commutator(x, x).size() == 4 * x.size());
}

TEST_CASE("commutator shape") {
    const BraidWord x(3, {1});
    const BraidWord y(3, {2});
    CHECK(commutator(x, y) == BraidWord(3, {-1, -2, 1, 2}));
}
