#include <doctest.h>

#include "braidfloor/braid.hpp"
#include "braidfloor/burau.hpp"
#include "braidfloor/order.hpp"
#include "braidfloor/sampling.hpp"

using namespace braidfloor;

namespace {

BraidWord w(int n, std::vector<Letter> letters) { return {n, std::move(letters)}; }

// Dehornoy floor in B_2 straight from the definition: B_2 is infinite
// cyclic, sigma_1^p <_D sigma_1^q iff p < q, and Delta = sigma_1. This is
// the independent oracle for the B_2 floor values.
long b2_floor_oracle(const BraidWord& word) {
    REQUIRE(word.strands() == 2);
    const long p = exponent_sum(word);
    long m = 0;
    while (!(-2 * m - 2 < p && p < 2 * m + 2)) ++m;
    return m;
}

}  // namespace

TEST_CASE("sigma_classify examples") {
    CHECK(sigma_classify(BraidWord(4)) == SigmaClass{SigmaKind::Empty, 0});
    CHECK(sigma_classify(w(3, {{1, -1}, {2, 1}})) == SigmaClass{SigmaKind::Negative, 1});
    CHECK(sigma_classify(w(4, {{2, 1}, {3, -1}})) == SigmaClass{SigmaKind::Positive, 2});
    CHECK_THROWS_AS(sigma_classify(w(3, {{1, 1}, {2, 1}, {1, -1}})), unreduced_word);
}

TEST_CASE("handle_reduce examples") {
    CHECK(handle_reduce(w(2, {{1, 1}, {1, -1}})) == BraidWord(2));
    CHECK(handle_reduce(w(3, {{1, 1}, {2, 1}, {1, -1}})) == w(3, {{2, -1}, {1, 1}, {2, 1}}));

    const BraidWord input = w(3, {{1, -1}, {2, -1}, {1, 1}});
    const BraidWord reduced = handle_reduce(input);
    CHECK(sigma_classify(reduced) == SigmaClass{SigmaKind::Negative, 1});
    CHECK(permutation(reduced) == permutation(input));
    CHECK(burau_matrix(reduced) == burau_matrix(input));
}

TEST_CASE("handle_reduce output is handle-free and element-preserving") {
    for (std::uint64_t i = 0; i < 2000; ++i) {
        SplitMix64 rng(derive_seed(17, 0, i));
        const int n = static_cast<int>(rng.range(2, 5));
        const BraidWord word = random_braid(n, 20, rng.next());
        const BraidWord reduced = handle_reduce(word);
        CHECK_NOTHROW(sigma_classify(reduced));  // empty or sign-definite
        CHECK(permutation(reduced) == permutation(word));
        CHECK(burau_matrix(reduced) == burau_matrix(word));
    }
}

TEST_CASE("handle_reduce respects the step limit valve") {
    CHECK_THROWS_AS(handle_reduce(w(3, {{1, 1}, {2, 1}, {1, -1}}), ReduceOptions{0}),
                    step_limit_exceeded);
}

TEST_CASE("compare examples") {
    const BraidWord lhs = w(3, {{1, 1}, {2, 1}, {1, 1}});
    const BraidWord rhs = w(3, {{2, 1}, {1, 1}, {2, 1}});
    CHECK(compare(lhs, lhs) == OrderResult::Equal);
    CHECK(compare(lhs, rhs) == OrderResult::Equal);  // braid relation
    CHECK(compare(w(3, {{1, 1}}), w(3, {{2, 1}})) == OrderResult::Greater);  // sigma_2 <_D sigma_1
    CHECK_THROWS_AS(compare(BraidWord(2), BraidWord(3)), strand_mismatch);
}

TEST_CASE("trichotomy and antisymmetry") {
    for (std::uint64_t i = 0; i < 2000; ++i) {
        SplitMix64 rng(derive_seed(19, 0, i));
        const int n = static_cast<int>(rng.range(2, 5));
        const BraidWord a = random_braid(n, 20, rng.next());
        const BraidWord b = random_braid(n, 20, rng.next());
        const OrderResult ab = compare(a, b);
        const OrderResult ba = compare(b, a);
        switch (ab) {
            case OrderResult::Less: CHECK(ba == OrderResult::Greater); break;
            case OrderResult::Greater: CHECK(ba == OrderResult::Less); break;
            case OrderResult::Equal: CHECK(ba == OrderResult::Equal); break;
        }
    }
}

TEST_CASE("transitivity on random triples") {
    long applicable = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        SplitMix64 rng(derive_seed(23, 0, i));
        const int n = static_cast<int>(rng.range(2, 5));
        const BraidWord a = random_braid(n, 20, rng.next());
        const BraidWord b = random_braid(n, 20, rng.next());
        const BraidWord c = random_braid(n, 20, rng.next());
        if (compare(a, b) == OrderResult::Less && compare(b, c) == OrderResult::Less) {
            ++applicable;
            CHECK(compare(a, c) == OrderResult::Less);
        }
    }
    CHECK(applicable > 0);
}

TEST_CASE("left invariance") {
    for (std::uint64_t i = 0; i < 1000; ++i) {
        SplitMix64 rng(derive_seed(29, 0, i));
        const int n = static_cast<int>(rng.range(2, 5));
        const BraidWord g = random_braid(n, 15, rng.next());
        const BraidWord a = random_braid(n, 15, rng.next());
        const BraidWord b = random_braid(n, 15, rng.next());
        CHECK(compare(concat(g, a), concat(g, b)) == compare(a, b));
    }
}

TEST_CASE("subword property") {
    for (std::uint64_t i = 0; i < 500; ++i) {
        SplitMix64 rng(derive_seed(31, 0, i));
        const int n = static_cast<int>(rng.range(2, 5));
        const BraidWord word = random_braid(n, 15, rng.next());
        for (int g = 1; g < n; ++g)
            CHECK(compare(word, concat(word, w(n, {{g, 1}}))) == OrderResult::Less);
    }
}

TEST_CASE("Delta^2 is central") {
    for (std::uint64_t i = 0; i < 300; ++i) {
        SplitMix64 rng(derive_seed(37, 0, i));
        const int n = static_cast<int>(rng.range(2, 5));
        const BraidWord word = random_braid(n, 15, rng.next());
        const BraidWord delta2 = delta_power(n, 2);
        CHECK(compare(concat(delta2, word), concat(word, delta2)) == OrderResult::Equal);
    }
}

TEST_CASE("is_trivial") {
    CHECK(is_trivial(BraidWord(3)));
    CHECK(is_trivial(concat(w(3, {{1, 1}, {2, 1}, {1, 1}}), inverse(w(3, {{2, 1}, {1, 1}, {2, 1}})))));
    CHECK_FALSE(is_trivial(w(3, {{1, 1}})));
}

TEST_CASE("dehornoy_floor of the identity and of Delta powers") {
    for (int n = 2; n <= 5; ++n) CHECK(dehornoy_floor(BraidWord(n)).floor == 0);
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= 8; ++k) {
            const FloorResult result = dehornoy_floor(delta_power(n, k));
            CHECK(result.floor == k / 2);
            CHECK(result.lower_witness == OrderResult::Less);
            CHECK(result.upper_witness == OrderResult::Less);
        }
}

TEST_CASE("dehornoy_floor in B_2 matches the exponent-sum oracle") {
    CHECK(dehornoy_floor(w(2, {{1, 1}, {1, 1}, {1, 1}})).floor == 1);
    CHECK(dehornoy_floor(w(2, {{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}})).floor == 2);
    for (std::uint64_t i = 0; i < 300; ++i) {
        const BraidWord word = random_braid(2, 25, derive_seed(41, 0, i));
        CHECK(dehornoy_floor(word).floor == b2_floor_oracle(word));
    }
}

TEST_CASE("floor minimality witnesses") {
    // At floor m >= 1, the bracketing fails at m - 1 in at least one direction.
    for (std::uint64_t i = 0; i < 60; ++i) {
        SplitMix64 rng(derive_seed(43, 0, i));
        const int n = static_cast<int>(rng.range(2, 4));
        const BraidWord word = concat(delta_power(n, static_cast<int>(rng.range(2, 5))),
                                      random_braid(n, 6, rng.next()));
        const long m = dehornoy_floor(word).floor;
        if (m == 0) continue;
        const int k = static_cast<int>(2 * (m - 1) + 2);
        const bool lower_ok = compare(delta_power(n, -k), word) == OrderResult::Less;
        const bool upper_ok = compare(word, delta_power(n, k)) == OrderResult::Less;
        CHECK_FALSE((lower_ok && upper_ok));
    }
}
