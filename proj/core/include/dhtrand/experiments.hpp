#ifndef DHTRAND_EXPERIMENTS_HPP
#define DHTRAND_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dhtrand/measure.hpp"
#include "dhtrand/sequences.hpp"

namespace dhtrand {

/// One aggregated result line: param1/param2 identify the row
/// (length/switches, prime/period, or length/0 depending on the table).
struct TableRow {
    std::uint64_t param1 = 0;
    std::uint64_t param2 = 0;
    std::size_t trials = 0;
    double mean_R = 0.0;
    double std_R = 0.0;
    double mean_R_prime = 0.0;
};

struct FigureSeries {
    std::string label;
    BitSequence original;
    RealSequence transformed;
};

/// Independent per-row seed: the master seed and a row key pushed through
/// the generator's finalizer.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t key);

constexpr std::uint64_t kDefaultMasterSeed = 0x5EED5EED5EED5EEDULL;

/// Mean/std of R over seeded random-switch trials for each (length, s)
/// pair. jobs = 0 means one worker per hardware thread.
std::vector<TableRow> switch_table(const std::vector<std::size_t>& lengths,
                                   const std::vector<std::size_t>& switch_counts,
                                   std::size_t trials, std::uint64_t seed,
                                   std::size_t jobs = 0);

/// One deterministic row per prime, full-period d-sequences.
std::vector<TableRow> dseq_table(const std::vector<std::uint64_t>& primes, DhtKernel kernel);

/// Mean/std of R over fresh seeded generator bitstreams per length.
std::vector<TableRow> prng_table(const std::vector<std::size_t>& lengths, std::size_t trials,
                                 std::uint64_t seed, std::size_t jobs = 0);

FigureSeries figure_series(const BitSequence& source, std::string label);

/// R for the 1/331 d-sequence against mean R of length-300 switch
/// sequences at 13 and 20 switches.
std::string comparison_report(std::size_t trials = 100,
                              std::uint64_t seed = kDefaultMasterSeed);

/// Computed d-sequence R values side by side with the published column,
/// with per-row deviations.
std::string dseq_deviation_report(DhtKernel kernel = DhtKernel::FastConvolution);

/// The published tables' parameter sets.
extern const std::vector<std::uint64_t> kPaperPrimes;
extern const std::vector<double> kPaperPrimeR;
extern const std::vector<std::size_t> kPaperSwitchLengths;
extern const std::vector<std::size_t> kPaperSwitchCounts;
extern const std::vector<std::size_t> kPaperPrngLengths;

std::string table_csv(const std::vector<TableRow>& rows);
std::string figure_csv(const FigureSeries& series);
std::string figure_svg(const FigureSeries& series);

} // namespace dhtrand

#endif
