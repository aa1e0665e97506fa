#ifndef DHTRAND_SEQUENCES_HPP
#define DHTRAND_SEQUENCES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dhtrand/transform.hpp"

namespace dhtrand {

/// Where a bit sequence came from. `param` is the prime for d-sequences
/// and the seed for generated sequences; zero otherwise.
struct Provenance {
    enum class Kind { DSequence, Switch, Prng, External };
    Kind kind = Kind::External;
    std::uint64_t param = 0;
};

struct BitSequence {
    std::vector<std::uint8_t> bits; // each element is 0 or 1
    Provenance provenance;

    std::size_t size() const { return bits.size(); }
    std::size_t ones_count() const;
    /// 0/1 bits as doubles, the encoding fed to the transform.
    RealSequence as_reals() const;
};

struct ParseError : std::runtime_error {
    ParseError(std::string message, std::size_t offset_);
    std::size_t offset;
};

/// Counter-based 64-bit mixing generator. The update is a fixed additive
/// constant followed by a finalizer, so every stream is a pure function
/// of its seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// The stateless finalizer, also used to derive independent seeds.
    static std::uint64_t mix(std::uint64_t z);

private:
    std::uint64_t state_;
};

/// Uniform draw in [0, bound) by rejection, free of modulo bias.
std::uint64_t uniform_index(SplitMix64& gen, std::uint64_t bound);

bool is_odd_prime(std::uint64_t p);

/// Multiplicative order of 2 mod p: the period of the binary expansion of 1/p.
std::uint64_t period(std::uint64_t p);

/// Binary d-sequence of 1/p: bit i (1-indexed) is (2^i mod p) mod 2.
/// length = 0 means one full period.
BitSequence dsequence(std::uint64_t p, std::size_t length = 0);

/// The switch-sequence starting point: length/2 zeros followed by length/2 ones.
BitSequence base_switch_sequence(std::size_t length);

/// Which bits of a base switch sequence to flip. One switch flips one bit
/// in each half: 0 -> 1 in the first half, 1 -> 0 in the second.
struct SwitchSpec {
    /// Distinct 1-indexed positions; first-half entries must hold 0 and
    /// second-half entries must hold 1 in the base sequence.
    static SwitchSpec explicit_positions(std::vector<std::size_t> positions);
    static SwitchSpec random(std::size_t switch_count, std::uint64_t seed);

    std::optional<std::vector<std::size_t>> positions;
    std::size_t switch_count = 0;
    std::uint64_t seed = 0;
};

BitSequence apply_switches(const BitSequence& base, const SwitchSpec& spec);

/// `length` bits from the seeded generator; each bit is the top bit of one
/// 64-bit output.
BitSequence prng_bits(std::uint64_t seed, std::size_t length);

/// Bitstring file format: a single line of '0'/'1' characters with an
/// optional trailing newline, at most 2^24 bits.
BitSequence parse_bitstring(std::string_view text);
std::string format_bitstring(const BitSequence& seq);

constexpr std::size_t kMaxBitstringLength = std::size_t{1} << 24;

} // namespace dhtrand

#endif
