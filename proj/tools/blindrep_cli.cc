// Copyright 2026 The blindrep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver for the blind-mode repeater simulator.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "blindrep/css_code.h"
#include "blindrep/harness.h"
#include "blindrep/repeater_chain.h"

using namespace blindrep;

namespace {

int cmd_validate_code(const std::string &path) {
    CssCode code = load_code_file(path);
    std::cout << "valid CSS code: n=" << code.n() << " t=" << code.t() << " bit_checks=" << code.h1().rows()
              << " (rank " << code.h1().rank() << ") phase_checks=" << code.h2().rows() << " (rank "
              << code.h2().rank() << ") g2_rows=" << code.g2().rows() << "\n";
    return 0;
}

int cmd_schedule(size_t gamma) {
    std::cout << build_schedule(gamma).table();
    return 0;
}

int cmd_simulate(const std::string &config_path, const std::string &out_path, const std::string &format_name) {
    ExperimentConfig exp = load_experiment_config(config_path);
    ReportFormat format = parse_report_format(format_name);
    ChainConfig chain = chain_from_experiment(exp);
    SweepStats stats = monte_carlo(chain, exp.grid, exp.trials, exp.decoders, exp.seed);
    if (out_path.empty()) {
        if (format == ReportFormat::Csv) {
            write_csv(stats, std::cout);
        } else {
            std::cout << sweep_to_json(stats);
        }
    } else {
        emit_report(stats, format, out_path);
    }
    return 0;
}

int cmd_enumerate(const std::string &config_path, size_t max_weight, const std::string &out_path, bool random_es) {
    ExperimentConfig exp = load_experiment_config(config_path);
    ChainConfig chain = chain_from_experiment(exp);
    std::optional<uint64_t> es_seed;
    if (random_es) {
        es_seed = exp.seed;
    }
    EnumerationTable table = enumerate_bounded(chain, max_weight, es_seed);

    size_t post_exact = 0;
    size_t conv_exact = 0;
    for (const auto &row : table.rows) {
        post_exact += row.posterior == Judgment::ExactSuccess;
        conv_exact += row.conventional == Judgment::ExactSuccess;
    }
    std::cout << "gamma=" << chain.gamma << " n=" << chain.code.n() << " t=" << chain.code.t()
              << " max_weight=" << max_weight << " patterns=" << table.rows.size() << "\n";
    std::cout << "posterior exact: " << post_exact << "/" << table.rows.size() << "\n";
    std::cout << "conventional exact: " << conv_exact << "/" << table.rows.size() << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot open '" + out_path + "' for writing");
        }
        write_enumeration_csv(table, out);
        if (!out.flush()) {
            throw std::runtime_error("failed writing '" + out_path + "'");
        }
    }
    return 0;
}

int cmd_resources(size_t gamma, size_t n) {
    if (gamma >= 63) {
        throw std::invalid_argument("gamma too large");
    }
    ResourceReport r = resource_count(size_t{1} << gamma, n, gamma);
    std::cout << "N=" << r.segments << " n=" << r.n << " gamma=" << r.gamma << "\n";
    std::cout << "pairs_single=" << r.pairs_single << "\n";
    std::cout << "pairs_concatenated=" << r.pairs_concatenated << "\n";
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Blind-mode quantum repeater simulator with posterior syndrome decoding"};
    app.require_subcommand(1);

    std::string code_path;
    auto *validate = app.add_subcommand("validate-code", "Check a CSS code file and its decoding tables");
    validate->add_option("codefile", code_path, "Code file")->required();

    size_t gamma = 1;
    auto *schedule = app.add_subcommand("schedule", "Print the command table (relay_id, time, op)");
    schedule->add_option("--gamma", gamma, "Nesting depth; N = 2^gamma segments")->required();

    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    auto *simulate = app.add_subcommand("simulate", "Monte Carlo sweep over the config's noise grid");
    simulate->add_option("--config", config_path, "JSON experiment config")->required();
    simulate->add_option("--out", out_path, "Report path (stdout when omitted)");
    simulate->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    size_t max_weight = 1;
    bool random_es = false;
    auto *enumerate = app.add_subcommand("enumerate", "Exhaustive bounded-weight injection sweep");
    enumerate->add_option("--config", config_path, "JSON experiment config")->required();
    enumerate->add_option("--max-weight", max_weight, "Largest per-interval error weight")->required();
    enumerate->add_option("--out", out_path, "Write the full pattern table as CSV");
    enumerate->add_flag("--random-es", random_es, "Draw swap outcomes per pattern from the config seed");

    size_t n = 1;
    auto *resources = app.add_subcommand("resources", "Pair counts for single vs concatenated encoding");
    resources->add_option("--gamma", gamma, "Nesting depth")->required();
    resources->add_option("--n", n, "Code length")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) {
            return cmd_validate_code(code_path);
        }
        if (*schedule) {
            return cmd_schedule(gamma);
        }
        if (*simulate) {
            return cmd_simulate(config_path, out_path, format);
        }
        if (*enumerate) {
            return cmd_enumerate(config_path, max_weight, out_path, random_es);
        }
        if (*resources) {
            return cmd_resources(gamma, n);
        }
    } catch (const std::exception &ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
