#include "dhtrand/sequences.hpp"

#include <algorithm>
#include <unordered_set>

namespace dhtrand {

std::size_t BitSequence::ones_count() const {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

RealSequence BitSequence::as_reals() const {
    RealSequence out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        out[i] = static_cast<double>(bits[i]);
    }
    return out;
}

ParseError::ParseError(std::string message, std::size_t offset_)
    : std::runtime_error(std::move(message)), offset(offset_) {}

std::uint64_t SplitMix64::mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
}

std::uint64_t uniform_index(SplitMix64& gen, std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("uniform_index bound must be positive");
    }
    // threshold = 2^64 mod bound; values below it form the biased tail.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t z = gen.next();
        if (z >= threshold) {
            return z % bound;
        }
    }
}

bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) {
        return false;
    }
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

namespace {
void require_odd_prime(std::uint64_t p) {
    if (!is_odd_prime(p)) {
        throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
    }
}
} // namespace

std::uint64_t period(std::uint64_t p) {
    require_odd_prime(p);
    std::uint64_t t = 1;
    std::uint64_t x = 2 % p;
    while (x != 1) {
        x = (x * 2) % p;
        ++t;
    }
    return t;
}

BitSequence dsequence(std::uint64_t p, std::size_t length) {
    require_odd_prime(p);
    if (length == 0) {
        length = period(p);
    }
    BitSequence seq;
    seq.provenance = {Provenance::Kind::DSequence, p};
    seq.bits.resize(length);
    std::uint64_t x = 1;
    for (std::size_t i = 0; i < length; ++i) {
        x = (x * 2) % p;
        seq.bits[i] = static_cast<std::uint8_t>(x % 2);
    }
    return seq;
}

BitSequence base_switch_sequence(std::size_t length) {
    if (length == 0 || length % 2 != 0) {
        throw std::invalid_argument("switch sequence length must be even and positive");
    }
    BitSequence seq;
    seq.provenance = {Provenance::Kind::Switch, 0};
    seq.bits.assign(length, 0);
    std::fill(seq.bits.begin() + static_cast<std::ptrdiff_t>(length / 2), seq.bits.end(),
              std::uint8_t{1});
    return seq;
}

SwitchSpec SwitchSpec::explicit_positions(std::vector<std::size_t> positions) {
    SwitchSpec spec;
    spec.positions = std::move(positions);
    return spec;
}

SwitchSpec SwitchSpec::random(std::size_t switch_count, std::uint64_t seed) {
    SwitchSpec spec;
    spec.switch_count = switch_count;
    spec.seed = seed;
    return spec;
}

namespace {

void check_base(const BitSequence& base) {
    const std::size_t n = base.size();
    if (n == 0 || n % 2 != 0) {
        throw std::invalid_argument("base must have even positive length");
    }
    const std::size_t half = n / 2;
    for (std::size_t i = 0; i < n; ++i) {
        if (base.bits[i] != (i < half ? 0 : 1)) {
            throw std::invalid_argument("base is not a 0-block/1-block switch sequence");
        }
    }
}

// s distinct indices in [0, half), redrawing on collision.
std::vector<std::size_t> draw_distinct(SplitMix64& gen, std::size_t half, std::size_t s) {
    std::unordered_set<std::size_t> chosen;
    chosen.reserve(s);
    while (chosen.size() < s) {
        chosen.insert(static_cast<std::size_t>(uniform_index(gen, half)));
    }
    return {chosen.begin(), chosen.end()};
}

} // namespace

BitSequence apply_switches(const BitSequence& base, const SwitchSpec& spec) {
    check_base(base);
    const std::size_t n = base.size();
    const std::size_t half = n / 2;
    BitSequence out = base;
    out.provenance = {Provenance::Kind::Switch, spec.positions ? 0 : spec.seed};

    if (spec.positions) {
        std::unordered_set<std::size_t> seen;
        for (std::size_t pos : *spec.positions) {
            if (pos < 1 || pos > n) {
                throw std::invalid_argument("switch position " + std::to_string(pos) +
                                            " out of range [1, " + std::to_string(n) + "]");
            }
            if (!seen.insert(pos).second) {
                throw std::invalid_argument("duplicate switch position " + std::to_string(pos));
            }
            const std::size_t idx = pos - 1;
            if (idx < half) {
                if (out.bits[idx] != 0) {
                    throw std::invalid_argument("first-half position " + std::to_string(pos) +
                                                " does not hold 0");
                }
                out.bits[idx] = 1;
            } else {
                if (out.bits[idx] != 1) {
                    throw std::invalid_argument("second-half position " + std::to_string(pos) +
                                                " does not hold 1");
                }
                out.bits[idx] = 0;
            }
        }
        return out;
    }

    if (spec.switch_count > half) {
        throw std::invalid_argument("switch count " + std::to_string(spec.switch_count) +
                                    " exceeds half length " + std::to_string(half));
    }
    SplitMix64 gen(spec.seed);
    for (std::size_t idx : draw_distinct(gen, half, spec.switch_count)) {
        out.bits[idx] = 1;
    }
    for (std::size_t idx : draw_distinct(gen, half, spec.switch_count)) {
        out.bits[half + idx] = 0;
    }
    return out;
}

BitSequence prng_bits(std::uint64_t seed, std::size_t length) {
    BitSequence seq;
    seq.provenance = {Provenance::Kind::Prng, seed};
    seq.bits.resize(length);
    SplitMix64 gen(seed);
    for (std::size_t i = 0; i < length; ++i) {
        seq.bits[i] = static_cast<std::uint8_t>(gen.next() >> 63);
    }
    return seq;
}

BitSequence parse_bitstring(std::string_view text) {
    // Tolerate one trailing newline only.
    if (!text.empty() && text.back() == '\n') {
        text.remove_suffix(1);
    }
    if (text.size() > kMaxBitstringLength) {
        throw ParseError("bitstring exceeds maximum length of 2^24 bits", kMaxBitstringLength);
    }
    BitSequence seq;
    seq.provenance = {Provenance::Kind::External, 0};
    seq.bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1') {
            throw ParseError("invalid character '" + std::string(1, c) + "' at offset " +
                                 std::to_string(i),
                             i);
        }
        seq.bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return seq;
}

std::string format_bitstring(const BitSequence& seq) {
    std::string out;
    out.reserve(seq.size() + 1);
    for (std::uint8_t b : seq.bits) {
        out.push_back(b ? '1' : '0');
    }
    out.push_back('\n');
    return out;
}

} // namespace dhtrand
