// dhtrand: generate bit sequences, transform them, and compute the
// DHT-based randomness measures R and R'.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dhtrand/experiments.hpp"
#include "dhtrand/measure.hpp"
#include "dhtrand/sequences.hpp"
#include "dhtrand/transform.hpp"

namespace {

using namespace dhtrand;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open input file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    out << content;
}

std::string format_real_sequence(const RealSequence& values) {
    std::string out;
    char buf[40];
    for (double v : values) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", v);
        out += buf;
    }
    return out;
}

// Default kernel: the fast path, with the matrix path for short inputs
// where the O(n^2) constant factor wins.
DhtKernel resolve_kernel(const std::string& name, std::size_t n) {
    if (name == "auto") {
        return n <= 64 ? DhtKernel::Matrix : DhtKernel::FastConvolution;
    }
    return kernel_from_name(name);
}

std::vector<std::size_t> to_sizes(const std::vector<std::uint64_t>& v) {
    return {v.begin(), v.end()};
}

// Flat key = value config for `table`: lengths, switches, primes, trials.
struct TableConfig {
    std::vector<std::size_t> lengths;
    std::vector<std::size_t> switch_counts;
    std::vector<std::uint64_t> primes;
    std::size_t trials = 0;
};

TableConfig parse_table_config(const std::string& text) {
    TableConfig cfg;
    std::istringstream lines(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected key = value");
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        std::vector<std::uint64_t> nums;
        std::istringstream items(value);
        std::string item;
        while (std::getline(items, item, ',')) {
            nums.push_back(std::stoull(trim(item)));
        }
        if (key == "lengths") {
            cfg.lengths = to_sizes(nums);
        } else if (key == "switches") {
            cfg.switch_counts = to_sizes(nums);
        } else if (key == "primes") {
            cfg.primes = nums;
        } else if (key == "trials") {
            cfg.trials = nums.at(0);
        } else {
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"DHT-based randomness measure toolkit"};
    app.set_version_flag("--version", "dhtrand 1.0.0");
    app.require_subcommand(1);

    std::string out_path;
    std::string in_path;
    std::string kernel_name_opt = "auto";

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a bit sequence");
    gen->require_subcommand(1);

    std::uint64_t prime = 0;
    std::size_t length = 0;
    auto* gen_dseq = gen->add_subcommand("dseq", "Prime-reciprocal d-sequence");
    gen_dseq->add_option("--prime", prime, "Odd prime p for 1/p")->required();
    gen_dseq->add_option("--length", length, "Bit count (default: one full period)");
    gen_dseq->add_option("--out", out_path, "Output file (default: stdout)");

    std::size_t switches = 0;
    std::uint64_t seed = kDefaultMasterSeed;
    std::string positions_csv;
    auto* gen_switch = gen->add_subcommand("switch", "Random-switch sequence");
    gen_switch->add_option("--length", length, "Even sequence length")->required();
    gen_switch->add_option("--switches", switches, "Switch count s (2s bits flip)");
    gen_switch->add_option("--seed", seed, "Seed for random switch positions");
    gen_switch->add_option("--positions", positions_csv,
                           "Explicit 1-indexed positions, comma separated");
    gen_switch->add_option("--out", out_path, "Output file (default: stdout)");

    auto* gen_prng = gen->add_subcommand("prng", "Seeded generator bitstream");
    gen_prng->add_option("--length", length, "Bit count")->required();
    gen_prng->add_option("--seed", seed, "Generator seed")->required();
    gen_prng->add_option("--out", out_path, "Output file (default: stdout)");

    // dht
    auto* dht_cmd = app.add_subcommand("dht", "Transform a bitstring file");
    dht_cmd->add_option("--in", in_path, "Bitstring file, or - for stdin")->required();
    dht_cmd->add_option("--kernel", kernel_name_opt, "direct|matrix|fast (default: auto)")
        ->check(CLI::IsMember({"auto", "direct", "matrix", "fast"}));
    dht_cmd->add_option("--out", out_path, "Output file (default: stdout)");

    // measure
    bool machine = false;
    auto* measure_cmd = app.add_subcommand("measure", "Randomness report for a bitstring file");
    measure_cmd->add_option("--in", in_path, "Bitstring file, or - for stdin")->required();
    measure_cmd->add_option("--kernel", kernel_name_opt, "direct|matrix|fast (default: auto)")
        ->check(CLI::IsMember({"auto", "direct", "matrix", "fast"}));
    measure_cmd->add_flag("--machine", machine, "17-significant-digit output");
    measure_cmd->add_option("--out", out_path, "Output file (default: stdout)");

    // table
    std::size_t trials = 100;
    std::size_t jobs = 0;
    std::string config_path;
    auto* table_cmd = app.add_subcommand("table", "Reproduce a results table as CSV");
    table_cmd->require_subcommand(1);
    auto* table_switch = table_cmd->add_subcommand("switch", "Random-switch table");
    auto* table_dseq = table_cmd->add_subcommand("dseq", "D-sequence table");
    auto* table_prng = table_cmd->add_subcommand("prng", "Generator table");
    for (auto* sub : {table_switch, table_dseq, table_prng}) {
        sub->add_option("--trials", trials, "Trials per row (default 100)");
        sub->add_option("--seed", seed, "Master seed");
        sub->add_option("--config", config_path, "key = value config file");
        sub->add_option("--jobs", jobs, "Worker cap (default: all cores)");
        sub->add_option("--out", out_path, "Output file (default: stdout)");
    }

    // plot
    bool svg = false;
    auto* plot_cmd = app.add_subcommand("plot", "Emit figure data (CSV, or SVG with --svg)");
    plot_cmd->require_subcommand(1);
    auto* plot_dseq = plot_cmd->add_subcommand("dseq", "D-sequence figure");
    plot_dseq->add_option("--prime", prime, "Odd prime p for 1/p")->required();
    auto* plot_switch = plot_cmd->add_subcommand("switch", "Random-switch figure");
    plot_switch->add_option("--length", length, "Even sequence length")->required();
    plot_switch->add_option("--switches", switches, "Switch count")->required();
    plot_switch->add_option("--seed", seed, "Seed")->required();
    auto* plot_file = plot_cmd->add_subcommand("file", "Figure from a bitstring file");
    plot_file->add_option("--in", in_path, "Bitstring file, or - for stdin")->required();
    for (auto* sub : {plot_dseq, plot_switch, plot_file}) {
        sub->add_flag("--svg", svg, "Emit SVG instead of CSV");
        sub->add_option("--out", out_path, "Output file (default: stdout)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen_dseq->parsed()) {
            write_output(out_path, format_bitstring(dsequence(prime, length)));
        } else if (gen_switch->parsed()) {
            const BitSequence base = base_switch_sequence(length);
            SwitchSpec spec = SwitchSpec::random(switches, seed);
            if (!positions_csv.empty()) {
                std::vector<std::size_t> positions;
                std::istringstream items(positions_csv);
                std::string item;
                while (std::getline(items, item, ',')) {
                    positions.push_back(std::stoull(item));
                }
                spec = SwitchSpec::explicit_positions(std::move(positions));
            }
            write_output(out_path, format_bitstring(apply_switches(base, spec)));
        } else if (gen_prng->parsed()) {
            write_output(out_path, format_bitstring(prng_bits(seed, length)));
        } else if (dht_cmd->parsed()) {
            const BitSequence seq = parse_bitstring(read_input(in_path));
            const DhtKernel kernel = resolve_kernel(kernel_name_opt, seq.size());
            write_output(out_path, format_real_sequence(dht(seq.as_reals(), kernel)));
        } else if (measure_cmd->parsed()) {
            const BitSequence seq = parse_bitstring(read_input(in_path));
            const DhtKernel kernel = resolve_kernel(kernel_name_opt, seq.size());
            write_output(out_path, format_report(measure(seq, kernel), machine));
        } else if (table_cmd->parsed()) {
            TableConfig cfg;
            if (!config_path.empty()) {
                cfg = parse_table_config(read_input(config_path));
            }
            if (cfg.trials != 0) {
                trials = cfg.trials;
            }
            std::vector<TableRow> rows;
            if (table_switch->parsed()) {
                const auto lengths = cfg.lengths.empty() ? kPaperSwitchLengths : cfg.lengths;
                const auto counts =
                    cfg.switch_counts.empty() ? kPaperSwitchCounts : cfg.switch_counts;
                rows = switch_table(lengths, counts, trials, seed, jobs);
            } else if (table_dseq->parsed()) {
                const auto primes = cfg.primes.empty() ? kPaperPrimes : cfg.primes;
                rows = dseq_table(primes, DhtKernel::FastConvolution);
            } else {
                const auto lengths = cfg.lengths.empty() ? kPaperPrngLengths : cfg.lengths;
                rows = prng_table(lengths, trials, seed, jobs);
            }
            write_output(out_path, table_csv(rows));
        } else if (plot_cmd->parsed()) {
            FigureSeries series;
            if (plot_dseq->parsed()) {
                series = figure_series(dsequence(prime), "1/" + std::to_string(prime));
            } else if (plot_switch->parsed()) {
                const BitSequence base = base_switch_sequence(length);
                const auto seq = apply_switches(base, SwitchSpec::random(switches, seed));
                series = figure_series(seq, "length " + std::to_string(length) + ", " +
                                                std::to_string(switches) + " switches");
            } else {
                series = figure_series(parse_bitstring(read_input(in_path)), "external");
            }
            write_output(out_path, svg ? figure_svg(series) : figure_csv(series));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
