#ifndef DHTRAND_MEASURE_HPP
#define DHTRAND_MEASURE_HPP

#include <string>

#include "dhtrand/sequences.hpp"
#include "dhtrand/transform.hpp"

namespace dhtrand {

struct RandomnessReport {
    std::size_t n = 0;
    double r = 0.0;       // mean of the transform values, signed
    double R = 0.0;       // 1 - |r|
    double r_prime = 0.0; // mean of the absolute transform values
    double R_prime = 0.0; // 1 - r_prime
    DhtKernel kernel = DhtKernel::Matrix;
};

/// Transform the 0/1 view of f and reduce: r is the mean of the outputs,
/// r' the mean of their absolute values, R = 1 - |r|, R' = 1 - r'.
RandomnessReport measure(const BitSequence& f, DhtKernel kernel);

/// r alone in O(n) via the precomputed column-sum weights; matches
/// measure(f, Matrix).r within 1e-9.
double measure_fast_r(const BitSequence& f);

/// One key=value per line: n, r, R, r_prime, R_prime, kernel.
/// Reals carry 6 decimals, or 17 significant digits in machine mode.
std::string format_report(const RandomnessReport& report, bool machine = false);

} // namespace dhtrand

#endif
