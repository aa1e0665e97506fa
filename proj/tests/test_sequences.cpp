#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <string>

#include "dhtrand/sequences.hpp"

using namespace dhtrand;

namespace {

std::string bits_to_string(const BitSequence& seq) {
    std::string s;
    for (auto b : seq.bits) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

// Independent oracle: straight modular exponentiation per bit.
std::string dseq_oracle(std::uint64_t p, std::size_t length) {
    std::string s;
    for (std::size_t i = 1; i <= length; ++i) {
        std::uint64_t pow = 1;
        for (std::size_t j = 0; j < i; ++j) {
            pow = (pow * 2) % p;
        }
        s.push_back(static_cast<char>('0' + pow % 2));
    }
    return s;
}

} // namespace

TEST_CASE("d-sequences") {
    SUBCASE("1/19 matches the published 18-bit expansion") {
        CHECK(bits_to_string(dsequence(19, 18)) == "000011010111100101");
        CHECK(bits_to_string(dsequence(19)) == "000011010111100101");
    }
    SUBCASE("1/7 and 1/13") {
        CHECK(bits_to_string(dsequence(7, 3)) == "001");
        CHECK(bits_to_string(dsequence(13, 12)) == dseq_oracle(13, 12));
        CHECK(bits_to_string(dsequence(13, 12)) == "000100111011");
    }
    SUBCASE("periodic extension beyond one period") {
        const auto seq = dsequence(7, 10);
        const std::uint64_t t = period(7);
        for (std::size_t i = 0; i + t < seq.size(); ++i) {
            CHECK(seq.bits[i] == seq.bits[i + t]);
        }
    }
    SUBCASE("invalid primes rejected") {
        CHECK_THROWS_AS(dsequence(2), std::invalid_argument);
        CHECK_THROWS_AS(dsequence(1), std::invalid_argument);
        CHECK_THROWS_AS(dsequence(9), std::invalid_argument);
        CHECK_THROWS_AS(dsequence(21), std::invalid_argument);
        CHECK_THROWS_AS(period(4), std::invalid_argument);
    }
    SUBCASE("period values") {
        CHECK(period(7) == 3);
        CHECK(period(19) == 18);
        CHECK(period(13) == 12);
    }
    SUBCASE("balance over one full period when the period is even") {
        // Only primes where 2 has even order; e.g. period(151) = 15 is odd
        // and that expansion cannot be balanced.
        for (std::uint64_t p : {13ULL, 67ULL, 331ULL, 557ULL, 821ULL}) {
            const auto seq = dsequence(p);
            REQUIRE(seq.size() % 2 == 0);
            CHECK(seq.ones_count() == seq.size() / 2);
        }
    }
}

TEST_CASE("base switch sequence") {
    CHECK(bits_to_string(base_switch_sequence(4)) == "0011");
    CHECK(bits_to_string(base_switch_sequence(2)) == "01");
    const auto seq = base_switch_sequence(100);
    CHECK(seq.ones_count() == 50);
    CHECK(std::all_of(seq.bits.begin(), seq.bits.begin() + 50,
                      [](std::uint8_t b) { return b == 0; }));
    CHECK_THROWS_AS(base_switch_sequence(3), std::invalid_argument);
    CHECK_THROWS_AS(base_switch_sequence(0), std::invalid_argument);
}

TEST_CASE("apply_switches") {
    SUBCASE("the published two-switch example: positions 5, 36, 56, 70") {
        const auto base = base_switch_sequence(100);
        const auto seq =
            apply_switches(base, SwitchSpec::explicit_positions({5, 36, 56, 70}));
        CHECK(seq.bits[4] == 1);
        CHECK(seq.bits[35] == 1);
        CHECK(seq.bits[55] == 0);
        CHECK(seq.bits[69] == 0);
        CHECK(seq.ones_count() == 50);
        // Everything else untouched.
        std::size_t diffs = 0;
        for (std::size_t i = 0; i < 100; ++i) {
            diffs += seq.bits[i] != base.bits[i];
        }
        CHECK(diffs == 4);
    }
    SUBCASE("zero switches is the identity") {
        const auto base = base_switch_sequence(100);
        const auto seq = apply_switches(base, SwitchSpec::random(0, 99));
        CHECK(seq.bits == base.bits);
    }
    SUBCASE("random mode forces the half counts") {
        const auto seq =
            apply_switches(base_switch_sequence(100), SwitchSpec::random(13, 42));
        const auto first_half_ones = static_cast<std::size_t>(
            std::count(seq.bits.begin(), seq.bits.begin() + 50, std::uint8_t{1}));
        const auto second_half_ones = static_cast<std::size_t>(
            std::count(seq.bits.begin() + 50, seq.bits.end(), std::uint8_t{1}));
        CHECK(first_half_ones == 13);
        CHECK(second_half_ones == 37);
    }
    SUBCASE("switch conservation and determinism") {
        std::mt19937_64 rng(5);
        for (int rep = 0; rep < 50; ++rep) {
            const std::size_t length = 2 * (1 + rng() % 100);
            const std::size_t s = rng() % (length / 2 + 1);
            const std::uint64_t seed = rng();
            const auto base = base_switch_sequence(length);
            const auto a = apply_switches(base, SwitchSpec::random(s, seed));
            const auto b = apply_switches(base, SwitchSpec::random(s, seed));
            CHECK(a.bits == b.bits);
            CHECK(a.ones_count() == length / 2);
        }
    }
    SUBCASE("error paths") {
        const auto base = base_switch_sequence(100);
        CHECK_THROWS_AS(apply_switches(base, SwitchSpec::random(51, 1)), std::invalid_argument);
        // A lone second-half position is a legal 1 -> 0 flip.
        CHECK(apply_switches(base, SwitchSpec::explicit_positions({60})).bits[59] == 0);
        CHECK_THROWS_AS(apply_switches(base, SwitchSpec::explicit_positions({5, 5})),
                        std::invalid_argument);
        CHECK_THROWS_AS(apply_switches(base, SwitchSpec::explicit_positions({0})),
                        std::invalid_argument);
        CHECK_THROWS_AS(apply_switches(base, SwitchSpec::explicit_positions({101})),
                        std::invalid_argument);
        BitSequence not_base;
        not_base.bits = {1, 0, 0, 1};
        CHECK_THROWS_AS(apply_switches(not_base, SwitchSpec::random(1, 1)),
                        std::invalid_argument);
    }
}

TEST_CASE("prng bits") {
    SUBCASE("empty") {
        CHECK(prng_bits(1, 0).size() == 0);
    }
    SUBCASE("golden eight bits for seed 0") {
        CHECK(bits_to_string(prng_bits(0, 8)) == "10010001");
    }
    SUBCASE("ones count is near balanced") {
        const auto seq = prng_bits(12345, 10000);
        const std::size_t ones = seq.ones_count();
        CHECK(ones >= 4700);
        CHECK(ones <= 5300);
    }
    SUBCASE("deterministic per seed") {
        CHECK(prng_bits(987, 4096).bits == prng_bits(987, 4096).bits);
        CHECK(prng_bits(987, 64).bits != prng_bits(988, 64).bits);
    }
}

TEST_CASE("uniform_index") {
    SUBCASE("bound 1 always yields 0") {
        SplitMix64 gen(17);
        for (int i = 0; i < 100; ++i) {
            CHECK(uniform_index(gen, 1) == 0);
        }
    }
    SUBCASE("frequencies for bound 50 stay within 15%") {
        SplitMix64 gen(1);
        std::vector<std::size_t> counts(50, 0);
        const std::size_t draws = 100000;
        for (std::size_t i = 0; i < draws; ++i) {
            ++counts[uniform_index(gen, 50)];
        }
        for (std::size_t c : counts) {
            CHECK(c > 1700);
            CHECK(c < 2300);
        }
    }
    SUBCASE("huge bound exercises the rejection path") {
        SplitMix64 gen(2);
        const std::uint64_t bound = (std::uint64_t{1} << 63) + 1;
        for (int i = 0; i < 1000; ++i) {
            CHECK(uniform_index(gen, bound) < bound);
        }
    }
    SUBCASE("bound 0 rejected") {
        SplitMix64 gen(3);
        CHECK_THROWS_AS(uniform_index(gen, 0), std::invalid_argument);
    }
}

TEST_CASE("bitstring parsing and formatting") {
    SUBCASE("basic parse") {
        const auto seq = parse_bitstring("01\n");
        CHECK(seq.bits == std::vector<std::uint8_t>{0, 1});
    }
    SUBCASE("the 1/19 string") {
        const auto seq = parse_bitstring("000011010111100101");
        CHECK(bits_to_string(seq) == bits_to_string(dsequence(19)));
    }
    SUBCASE("parse error carries the offset") {
        try {
            parse_bitstring("0a1");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.offset == 1);
        }
        CHECK_THROWS_AS(parse_bitstring("01\n0"), ParseError);
    }
    SUBCASE("format appends exactly one newline") {
        BitSequence seq;
        seq.bits = {0, 1, 1};
        CHECK(format_bitstring(seq) == "011\n");
    }
    SUBCASE("parse of format is the identity") {
        std::mt19937_64 rng(9);
        for (int rep = 0; rep < 30; ++rep) {
            BitSequence seq;
            const std::size_t n = 1 + rng() % 500;
            for (std::size_t i = 0; i < n; ++i) {
                seq.bits.push_back(static_cast<std::uint8_t>(rng() % 2));
            }
            CHECK(parse_bitstring(format_bitstring(seq)).bits == seq.bits);
        }
    }
}
