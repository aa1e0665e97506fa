#include "dhtrand/measure.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dhtrand {

RandomnessReport measure(const BitSequence& f, DhtKernel kernel) {
    if (f.size() == 0) {
        throw std::invalid_argument("cannot measure an empty sequence");
    }
    const RealSequence g = dht(f.as_reals(), kernel);
    const double n = static_cast<double>(g.size());
    double sum = 0.0;
    double abs_sum = 0.0;
    for (double v : g) {
        sum += v;
        abs_sum += std::abs(v);
    }
    RandomnessReport report;
    report.n = f.size();
    report.r = sum / n;
    report.R = 1.0 - std::abs(report.r);
    // The outer absolute value in the variant definition is a no-op: the
    // inner sum is already non-negative.
    report.r_prime = std::abs(abs_sum / n);
    report.R_prime = 1.0 - report.r_prime;
    report.kernel = kernel;
    return report;
}

double measure_fast_r(const BitSequence& f) {
    if (f.size() == 0) {
        throw std::invalid_argument("cannot measure an empty sequence");
    }
    const RealSequence w = measure_weights(f.size());
    double sum = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (f.bits[j]) {
            sum += w[j];
        }
    }
    return sum / static_cast<double>(f.size());
}

std::string format_report(const RandomnessReport& report, bool machine) {
    const char* real_fmt = machine ? "%.17g" : "%.6f";
    char buf[64];
    std::string out;
    out += "n=" + std::to_string(report.n) + "\n";
    const auto emit = [&](const char* key, double value) {
        std::snprintf(buf, sizeof(buf), real_fmt, value);
        out += std::string(key) + "=" + buf + "\n";
    };
    emit("r", report.r);
    emit("R", report.R);
    emit("r_prime", report.r_prime);
    emit("R_prime", report.R_prime);
    out += "kernel=" + kernel_name(report.kernel) + "\n";
    return out;
}

} // namespace dhtrand
