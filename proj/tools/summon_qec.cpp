// Copyright 2026 The summon-qec Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// Command line front end for the summoning code library.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "summon/circuits/synth.hpp"
#include "summon/circuits/text_format.hpp"
#include "summon/code/resources.hpp"
#include "summon/code/stabilizer_code.hpp"
#include "summon/code/verify.hpp"
#include "summon/error.hpp"
#include "summon/protocol/report_json.hpp"
#include "summon/protocol/summon.hpp"
#include "summon/sim/rng.hpp"
#include "summon/spacetime/config_json.hpp"

namespace {

namespace fs = std::filesystem;
using namespace summon;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

/// Raised for bad flag values that CLI11 cannot catch on its own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::size_t n = 0;
    std::string config;
    std::size_t request = 0;
    std::uint64_t seed = 0;
    std::size_t shots = 1;
    std::string out;
    std::string inject_fault;
    bool request_all = false;
    std::string order;
};

void emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        throw UsageError("cannot write " + out_path);
    }
    f << text;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15f", v);
    return buf;
}

std::size_t order_for(std::size_t n) {
    if (n < 3) {
        throw UsageError("--n must be at least 3");
    }
    return code::even_order(n);
}

fs::path goldens_dir() {
    if (const char *env = std::getenv("SUMMON_QEC_GOLDENS"); env != nullptr && *env != '\0') {
        return env;
    }
    return SUMMON_QEC_DEFAULT_GOLDENS;
}

/// Compares `text` against a golden file when one exists. Returns false on mismatch.
bool check_golden(const std::string &text, const std::string &name) {
    const fs::path path = goldens_dir() / name;
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "golden " << name << ": none\n";
        return true;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (buf.str() != text) {
        std::cerr << "golden " << name << ": MISMATCH (" << path.string() << ")\n";
        return false;
    }
    std::cerr << "golden " << name << ": match\n";
    return true;
}

std::string row_string(const gf2::BitVector &z, const gf2::BitVector &x) {
    return z.to_string() + "|" + x.to_string();
}

int cmd_build(const Options &o) {
    const std::size_t n_tilde = order_for(o.n);
    const code::StabilizerCode c = code::build_css(n_tilde);
    const auto edges = c.edges();
    std::ostringstream out;
    out << "# summoning code N=" << o.n << " N_tilde=" << n_tilde;
    if (n_tilde != o.n) {
        out << " (odd N extended)";
    }
    out << "\nqubits " << c.n_qubits() << "\nlabels";
    for (std::size_t q = 0; q < c.n_qubits(); ++q) {
        out << ' ' << edges.label(q);
    }
    out << "\nstabilizers " << c.n_generators() << '\n';
    for (const auto &g : c.generators()) {
        out << row_string(g.z_part(), g.x_part()) << '\n';
    }
    out << "logical_x " << row_string(c.logical_x().z_part(), c.logical_x().x_part()) << '\n';
    out << "logical_z " << row_string(c.logical_z().z_part(), c.logical_z().x_part()) << '\n';
    emit(out.str(), o.out);
    return kOk;
}

code::StabilizerCode apply_fault(const code::StabilizerCode &c, const std::string &fault) {
    const auto colon = fault.find(':');
    std::size_t row = 0;
    std::size_t qubit = 0;
    try {
        if (colon == std::string::npos) {
            throw std::invalid_argument(fault);
        }
        row = std::stoul(fault.substr(0, colon));
        qubit = std::stoul(fault.substr(colon + 1));
    } catch (const std::logic_error &) {
        throw UsageError("--inject-fault expects <row>:<qubit>");
    }
    try {
        return c.with_flipped_bit(row, qubit);
    } catch (const InvalidParameter &e) {
        throw UsageError(e.what());
    }
}

int cmd_verify(const Options &o) {
    const std::size_t n_tilde = order_for(o.n);
    code::StabilizerCode c = code::build_css(n_tilde);
    if (!o.inject_fault.empty()) {
        c = apply_fault(c, o.inject_fault);
    }
    bool ok = true;
    std::ostringstream out;
    for (const auto &check : code::verify_summoning_code(c)) {
        ok = ok && check.passed;
        out << (check.passed ? "PASS " : "FAIL ") << check.name;
        if (!check.detail.empty()) {
            out << "  " << check.detail;
        }
        out << '\n';
    }
    emit(out.str(), o.out);
    std::cerr << "verify N=" << o.n << ": " << (ok ? "all checks passed" : "FAILED") << '\n';
    return ok ? kOk : kFailed;
}

int cmd_encode_circuit(const Options &o) {
    const std::size_t n_tilde = order_for(o.n);
    const std::string text = circuits::to_text(circuits::synth_encoder(code::build_css(n_tilde)));
    emit(text, o.out);
    return check_golden(text, "encoder_n" + std::to_string(n_tilde) + ".txt") ? kOk : kFailed;
}

int cmd_decode_circuit(const Options &o) {
    const std::size_t n_tilde = order_for(o.n);
    if (o.request < 1 || o.request > n_tilde) {
        throw UsageError("--request must lie in [1, " + std::to_string(n_tilde) + "]");
    }
    const std::string text =
        circuits::to_text(circuits::synth_decoder(code::build_css(n_tilde), o.request));
    emit(text, o.out);
    return check_golden(text, "decoder_n" + std::to_string(n_tilde) + "_r" +
                                  std::to_string(o.request) + ".txt")
               ? kOk
               : kFailed;
}

int cmd_resources(const Options &o) {
    if (o.n < 3) {
        throw UsageError("--n (largest N) must be at least 3");
    }
    std::ostringstream out;
    out << "N,N_tilde,q_css,q_cws,css_h,css_cnot,css_total,cws_h,cws_cz,cws_word_cz,cws_total,"
           "q_ratio\n";
    for (std::size_t n = 3; n <= o.n; ++n) {
        const auto r = code::resource_counts(n);
        char ratio[32];
        std::snprintf(ratio, sizeof ratio, "%.6f",
                      static_cast<double>(r.q_cws) / static_cast<double>(r.q_css));
        out << r.n << ',' << r.n_tilde << ',' << r.q_css << ',' << r.q_cws << ',' << r.css_h << ','
            << r.css_cnot << ',' << r.css_total() << ',' << r.cws_h << ',' << r.cws_cz << ','
            << r.cws_word_cz << ',' << r.cws_total() << ',' << ratio << '\n';
    }
    emit(out.str(), o.out);
    return kOk;
}

spacetime::Configuration load_config(const Options &o) {
    if (o.config.empty()) {
        throw UsageError("--config is required");
    }
    try {
        return spacetime::load_configuration(o.config);
    } catch (const InvalidConfiguration &e) {
        throw UsageError(e.what());
    }
}

int cmd_config_check(const Options &o) {
    const auto c = load_config(o);
    const auto report = spacetime::validate(c);
    if (report.valid()) {
        std::cout << "valid: " << c.size() << " diamonds, dim " << c.dim << '\n';
        return kOk;
    }
    std::cout << "invalid\n" << report.to_string();
    return kFailed;
}

int cmd_export_dot(const Options &o) {
    emit(spacetime::to_dot(load_config(o)), o.out);
    return kOk;
}

std::vector<std::size_t> parse_order(const std::string &text, std::size_t n) {
    std::vector<std::size_t> order;
    if (text.empty()) {
        for (std::size_t k = 1; k <= n; ++k) {
            order.push_back(k);
        }
        return order;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            order.push_back(std::stoul(item));
        } catch (const std::logic_error &) {
            throw UsageError("--order expects comma-separated diamond ids");
        }
    }
    return order;
}

int cmd_simulate(const Options &o) {
    const auto c = load_config(o);
    const auto report = spacetime::validate(c);
    if (!report.valid()) {
        std::cerr << "invalid configuration\n" << report.to_string();
        return kUsage;
    }
    if (!o.request_all && (o.request < 1 || o.request > c.size())) {
        throw UsageError("--request must lie in [1, " + std::to_string(c.size()) + "]");
    }
    if (o.shots == 0) {
        throw UsageError("--shots must be positive");
    }
    std::vector<std::size_t> all;
    for (std::size_t k = 1; k <= c.size(); ++k) {
        all.push_back(k);
    }
    const auto order = parse_order(o.order, c.size());

    nlohmann::ordered_json runs = nlohmann::ordered_json::array();
    double min_fidelity = 1.0;
    for (std::size_t shot = 0; shot < o.shots; ++shot) {
        const std::uint64_t seed = o.seed + shot;
        const auto [alpha, beta] = sim::random_qubit_state(seed);
        protocol::SummoningRun run;
        try {
            run = o.request_all
                      ? protocol::simulate_multi_request(c, all, order, alpha, beta, seed)
                      : protocol::simulate_summon(c, alpha, beta, o.request, seed);
        } catch (const InvalidParameter &e) {
            throw UsageError(e.what());
        } catch (const InvalidConfiguration &e) {
            throw UsageError(e.what());
        }
        min_fidelity = std::min(min_fidelity, run.fidelity);
        std::cout << "shot " << shot << " seed " << seed << " r " << run.requested << " fidelity "
                  << format_double(run.fidelity) << " outcomes";
        for (const int v : run.record.outcomes) {
            std::cout << ' ' << (v > 0 ? "+1" : "-1");
        }
        std::cout << " messages " << run.messages.size() << " delivered";
        for (const auto &label : run.delivered_labels) {
            std::cout << ' ' << label;
        }
        std::cout << '\n';
        runs.push_back(protocol::run_to_json(c, run));
    }
    if (!o.out.empty()) {
        emit(runs.dump(2) + "\n", o.out);
    }
    std::cerr << "simulate: " << o.shots << " shots, min fidelity " << format_double(min_fidelity)
              << '\n';
    return min_fidelity >= 1.0 - 1e-10 ? kOk : kFailed;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Summoning-code construction, verification and simulation"};
    app.require_subcommand(1);
    Options o;

    auto add_n = [&](CLI::App *sub, bool required) {
        auto *opt = sub->add_option("--n", o.n, "number of diamonds N");
        if (required) {
            opt->required();
        }
    };
    auto add_out = [&](CLI::App *sub) { sub->add_option("--out", o.out, "output path"); };

    auto *build = app.add_subcommand("build", "write the stabilizer matrix and logicals");
    add_n(build, true);
    add_out(build);

    auto *verify = app.add_subcommand("verify", "check every structural property of the code");
    add_n(verify, true);
    add_out(verify);
    verify->add_option("--inject-fault", o.inject_fault, "flip generator bit <row>:<qubit>");

    auto *encode = app.add_subcommand("encode-circuit", "print the encoder circuit");
    add_n(encode, true);
    add_out(encode);

    auto *decode = app.add_subcommand("decode-circuit", "print the decoder for one request");
    add_n(decode, true);
    add_out(decode);
    decode->add_option("--request", o.request, "requested diamond r")->required();

    auto *simulate = app.add_subcommand("simulate", "run the summoning protocol end to end");
    simulate->add_option("--config", o.config, "configuration JSON")->required();
    auto *req = simulate->add_option("--request", o.request, "requested diamond r");
    auto *all = simulate->add_flag("--request-all", o.request_all,
                                   "send the request to every diamond");
    req->excludes(all);
    simulate->add_option("--order", o.order, "causal order for --request-all, e.g. 1,2,3,4")
        ->needs(all);
    simulate->add_option("--seed", o.seed, "base seed (shot k uses seed + k)");
    simulate->add_option("--shots", o.shots, "number of runs");
    add_out(simulate);

    auto *resources = app.add_subcommand("resources", "CSS vs CWS resource table (CSV)");
    add_n(resources, true);
    add_out(resources);

    auto *check = app.add_subcommand("config-check", "validate a configuration");
    check->add_option("--config", o.config, "configuration JSON")->required();

    auto *dot = app.add_subcommand("export-dot", "causal graph of a configuration as DOT");
    dot->add_option("--config", o.config, "configuration JSON")->required();
    add_out(dot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*build) return cmd_build(o);
        if (*verify) return cmd_verify(o);
        if (*encode) return cmd_encode_circuit(o);
        if (*decode) return cmd_decode_circuit(o);
        if (*simulate) {
            if (!o.request_all && req->count() == 0) {
                throw UsageError("simulate needs --request or --request-all");
            }
            return cmd_simulate(o);
        }
        if (*resources) return cmd_resources(o);
        if (*check) return cmd_config_check(o);
        if (*dot) return cmd_export_dot(o);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const summon::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}
