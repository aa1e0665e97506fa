#include "dhtrand/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace dhtrand {

const std::vector<std::uint64_t> kPaperPrimes = {13,  67,  127, 151, 223, 331,
                                                 463, 557, 631, 821, 991};
// Published R column for the primes above, kept for the deviation report.
const std::vector<double> kPaperPrimeR = {0.7054, 0.8794, 0.9724, 0.9547, 0.9690, 0.9727,
                                          0.9739, 0.9743, 0.9884, 0.9890, 0.9992};
const std::vector<std::size_t> kPaperSwitchLengths = {100, 200, 300};
const std::vector<std::size_t> kPaperSwitchCounts = {1, 3, 4, 5, 7, 10, 11, 13, 20};
const std::vector<std::size_t> kPaperPrngLengths = {100, 200, 300, 400, 500, 600, 700, 800};

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t key) {
    return SplitMix64::mix(master ^ key);
}

namespace {

DhtKernel pick_kernel(std::size_t n) {
    return n <= 64 ? DhtKernel::Matrix : DhtKernel::FastConvolution;
}

// Runs `trials` independent evaluations and writes each result into its
// own slot, so scheduling cannot change the output.
template <typename TrialFn>
void run_trials(std::size_t trials, std::size_t jobs, std::vector<RandomnessReport>& out,
                TrialFn&& trial) {
    out.resize(trials);
    if (jobs == 0) {
        jobs = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }
    jobs = std::min(jobs, trials);
    if (jobs <= 1) {
        for (std::size_t t = 0; t < trials; ++t) {
            out[t] = trial(t);
        }
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            for (std::size_t t = w; t < trials; t += jobs) {
                out[t] = trial(t);
            }
        });
    }
    for (auto& th : workers) {
        th.join();
    }
}

TableRow aggregate(std::uint64_t param1, std::uint64_t param2,
                   const std::vector<RandomnessReport>& reports) {
    TableRow row;
    row.param1 = param1;
    row.param2 = param2;
    row.trials = reports.size();
    double sum_R = 0.0, sum_Rp = 0.0;
    for (const auto& rep : reports) {
        sum_R += rep.R;
        sum_Rp += rep.R_prime;
    }
    const double n = static_cast<double>(reports.size());
    row.mean_R = sum_R / n;
    row.mean_R_prime = sum_Rp / n;
    if (reports.size() > 1) {
        double ss = 0.0;
        for (const auto& rep : reports) {
            const double d = rep.R - row.mean_R;
            ss += d * d;
        }
        row.std_R = std::sqrt(ss / (n - 1.0));
    }
    return row;
}

std::uint64_t switch_row_key(std::size_t length, std::size_t switches) {
    return static_cast<std::uint64_t>(length) * 100000 + switches;
}

} // namespace

std::vector<TableRow> switch_table(const std::vector<std::size_t>& lengths,
                                   const std::vector<std::size_t>& switch_counts,
                                   std::size_t trials, std::uint64_t seed, std::size_t jobs) {
    if (trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
    for (std::size_t length : lengths) {
        if (length == 0 || length % 2 != 0) {
            throw std::invalid_argument("switch table lengths must be even and positive");
        }
        for (std::size_t s : switch_counts) {
            if (s > length / 2) {
                throw std::invalid_argument("switch count " + std::to_string(s) +
                                            " exceeds half of length " + std::to_string(length));
            }
        }
    }
    std::vector<TableRow> rows;
    rows.reserve(lengths.size() * switch_counts.size());
    for (std::size_t length : lengths) {
        const BitSequence base = base_switch_sequence(length);
        const DhtKernel kernel = pick_kernel(length);
        for (std::size_t s : switch_counts) {
            const std::uint64_t row_seed = derive_seed(seed, switch_row_key(length, s));
            std::vector<RandomnessReport> reports;
            run_trials(trials, jobs, reports, [&](std::size_t t) {
                const auto spec = SwitchSpec::random(s, derive_seed(row_seed, t));
                return measure(apply_switches(base, spec), kernel);
            });
            rows.push_back(aggregate(length, s, reports));
        }
    }
    return rows;
}

std::vector<TableRow> dseq_table(const std::vector<std::uint64_t>& primes, DhtKernel kernel) {
    std::vector<TableRow> rows;
    rows.reserve(primes.size());
    for (std::uint64_t p : primes) {
        if (!is_odd_prime(p)) {
            throw std::invalid_argument("dseq table entry " + std::to_string(p) +
                                        " is not an odd prime");
        }
        const BitSequence seq = dsequence(p);
        const RandomnessReport rep = measure(seq, kernel);
        rows.push_back(aggregate(p, seq.size(), {rep}));
    }
    return rows;
}

std::vector<TableRow> prng_table(const std::vector<std::size_t>& lengths, std::size_t trials,
                                 std::uint64_t seed, std::size_t jobs) {
    if (trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
    for (std::size_t length : lengths) {
        if (length == 0) {
            throw std::invalid_argument("prng table lengths must be positive");
        }
    }
    std::vector<TableRow> rows;
    rows.reserve(lengths.size());
    for (std::size_t length : lengths) {
        const std::uint64_t row_seed = derive_seed(seed, length);
        const DhtKernel kernel = pick_kernel(length);
        std::vector<RandomnessReport> reports;
        run_trials(trials, jobs, reports, [&](std::size_t t) {
            return measure(prng_bits(derive_seed(row_seed, t), length), kernel);
        });
        rows.push_back(aggregate(length, 0, reports));
    }
    return rows;
}

FigureSeries figure_series(const BitSequence& source, std::string label) {
    if (source.size() == 0) {
        throw std::invalid_argument("figure source must be non-empty");
    }
    FigureSeries series;
    series.label = std::move(label);
    series.original = source;
    series.transformed = dht(source.as_reals(), pick_kernel(source.size()));
    return series;
}

std::string comparison_report(std::size_t trials, std::uint64_t seed) {
    const auto rows = switch_table({300}, {13, 20}, trials, seed);
    const double mean_13 = rows[0].mean_R;
    const double mean_20 = rows[1].mean_R;
    const double r_331 = measure(dsequence(331), pick_kernel(period(331))).R;

    char buf[160];
    std::string out = "comparison of 1/331 d-sequence against length-300 switch sequences\n";
    std::snprintf(buf, sizeof(buf), "trials=%zu\n", trials);
    out += buf;
    std::snprintf(buf, sizeof(buf), "mean_R_switch_13=%.6f\n", mean_13);
    out += buf;
    std::snprintf(buf, sizeof(buf), "R_dseq_331=%.6f\n", r_331);
    out += buf;
    std::snprintf(buf, sizeof(buf), "mean_R_switch_20=%.6f\n", mean_20);
    out += buf;
    const bool lower = mean_13 < r_331;
    const bool upper = r_331 < mean_20;
    std::snprintf(buf, sizeof(buf), "ordering: mean_R(s=13) %s R(1/331) %s mean_R(s=20)\n",
                  lower ? "<" : ">=", upper ? "<" : ">=");
    out += buf;
    return out;
}

std::string dseq_deviation_report(DhtKernel kernel) {
    const auto rows = dseq_table(kPaperPrimes, kernel);
    std::string out = "prime,period,computed_R,published_R,deviation\n";
    char buf[128];
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%llu,%llu,%.6f,%.4f,%+.6f\n",
                      static_cast<unsigned long long>(rows[i].param1),
                      static_cast<unsigned long long>(rows[i].param2), rows[i].mean_R,
                      kPaperPrimeR[i], rows[i].mean_R - kPaperPrimeR[i]);
        out += buf;
    }
    return out;
}

std::string table_csv(const std::vector<TableRow>& rows) {
    std::string out = "param1,param2,trials,mean_R,std_R,mean_R_prime\n";
    char buf[160];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof(buf), "%llu,%llu,%zu,%.6f,%.6f,%.6f\n",
                      static_cast<unsigned long long>(row.param1),
                      static_cast<unsigned long long>(row.param2), row.trials, row.mean_R,
                      row.std_R, row.mean_R_prime);
        out += buf;
    }
    return out;
}

std::string figure_csv(const FigureSeries& series) {
    std::string out = "index,original,dht\n";
    char buf[96];
    for (std::size_t i = 0; i < series.original.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%zu,%d,%.6f\n", i,
                      static_cast<int>(series.original.bits[i]), series.transformed[i]);
        out += buf;
    }
    return out;
}

namespace {

std::string polyline(const std::vector<std::pair<double, double>>& pts) {
    std::string s = "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\" points=\"";
    char buf[64];
    for (const auto& [x, y] : pts) {
        std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", x, y);
        s += buf;
    }
    s += "\"/>\n";
    return s;
}

} // namespace

std::string figure_svg(const FigureSeries& series) {
    const std::size_t n = series.original.size();
    const double width = 800.0, panel = 200.0, margin = 20.0;
    const double plot_w = width - 2 * margin;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"440\">\n";
    svg << "<text x=\"20\" y=\"14\" font-size=\"12\">" << series.label << "</text>\n";

    // Top panel: bits, step interpolation.
    std::vector<std::pair<double, double>> pts;
    const auto xpos = [&](std::size_t i) {
        return margin + plot_w * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(n - 1, 1));
    };
    for (std::size_t i = 0; i < n; ++i) {
        const double y = 20.0 + panel - panel * 0.8 * series.original.bits[i] - panel * 0.1;
        if (i > 0) {
            pts.emplace_back(xpos(i), pts.back().second);
        }
        pts.emplace_back(xpos(i), y);
    }
    svg << "<g>\n" << polyline(pts) << "</g>\n";

    // Bottom panel: transform values, linear interpolation.
    double lo = series.transformed[0], hi = series.transformed[0];
    for (double v : series.transformed) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi == lo) {
        hi = lo + 1.0;
    }
    pts.clear();
    for (std::size_t i = 0; i < n; ++i) {
        const double frac = (series.transformed[i] - lo) / (hi - lo);
        pts.emplace_back(xpos(i), 240.0 + panel - panel * 0.8 * frac - panel * 0.1);
    }
    svg << "<g>\n" << polyline(pts) << "</g>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace dhtrand
