/**
 * Copyright 2026 The qosc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <qosc/cli_support.hpp>
#include <qosc/verify.hpp>

namespace {

using qosc::cli::ConfigError;

int run_verify_command(bool appendix, const std::vector<std::string>& tol_specs,
                       const std::string& out_path) {
    qosc::verify::Options opts;
    opts.appendix = appendix;
    for (const std::string& spec : tol_specs) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigError("tol", "expected NAME=VALUE, got '" + spec + "'");
        try {
            opts.tolerance_overrides[spec.substr(0, eq)] = std::stod(spec.substr(eq + 1));
        } catch (const std::exception&) {
            throw ConfigError("tol", "'" + spec.substr(eq + 1) + "' is not a number");
        }
    }
    std::vector<qosc::verify::CheckResult> results = qosc::verify::run_checks(opts);
    for (const auto& r : results) {
        std::printf("%-4s %-32s measured %-13.6g %s %-10.4g%s%s\n", r.pass ? "ok" : "FAIL",
                    r.name.c_str(), r.measured, r.greater_is_better ? ">=" : "<=", r.bound,
                    r.detail.empty() ? "" : "  ", r.detail.c_str());
    }
    const std::string report = qosc::verify::to_json(results);
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw ConfigError("out", "cannot open '" + out_path + "' for writing");
        f << report << '\n';
    }
    const bool ok = qosc::verify::all_passed(results);
    std::printf("%s\n", ok ? "all checks passed" : "verification FAILED");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coupled quantum harmonic oscillators: closed-form dynamics,"
                 " entanglement measures and brute-force verification"};
    app.require_subcommand(1);

    // entangle
    auto* entangle = app.add_subcommand("entangle", "lambda, S_N and K over an R grid");
    qosc::cli::EntangleConfig ecfg;
    std::string e_grid = "0:1:101", e_branch = "+", e_format = "csv";
    entangle->add_option("--s1", ecfg.s1, "initial quantum number of oscillator 1");
    entangle->add_option("--s2", ecfg.s2, "initial quantum number of oscillator 2");
    entangle->add_option("--r-grid", e_grid, "R grid as start:stop:count");
    entangle->add_option("--epsilon", ecfg.epsilon, "dimensionless detuning");
    entangle->add_option("--branch", e_branch, "sin(phi) branch, + or -");
    entangle->add_option("--format", e_format, "csv or json");
    entangle->add_option("--out", ecfg.out_path, "output path (default stdout)");

    // evolve
    auto* evolve = app.add_subcommand("evolve", "S_N and K along a time grid from"
                                                " physical parameters");
    qosc::cli::EvolveConfig vcfg;
    std::string v_grid = "0:10:101", v_branch = "+", v_format = "csv";
    evolve->add_option("--s1", vcfg.s1, "initial quantum number of oscillator 1");
    evolve->add_option("--s2", vcfg.s2, "initial quantum number of oscillator 2");
    evolve->add_option("--t-grid", v_grid, "time grid as start:stop:count");
    evolve->add_option("--m1", vcfg.params.m1, "mass of oscillator 1");
    evolve->add_option("--m2", vcfg.params.m2, "mass of oscillator 2");
    evolve->add_option("--omega1", vcfg.params.omega1, "frequency of oscillator 1");
    evolve->add_option("--omega2", vcfg.params.omega2, "frequency of oscillator 2");
    evolve->add_option("--k1", vcfg.params.k1, "x1 p2 coupling constant");
    evolve->add_option("--k2", vcfg.params.k2, "x2 p1 coupling constant");
    evolve->add_option("--k3", vcfg.params.k3, "x1 x2 coupling constant");
    evolve->add_option("--k4", vcfg.params.k4, "p1 p2 coupling constant");
    evolve->add_option("--hbar", vcfg.params.hbar, "action quantum");
    evolve->add_option("--branch", v_branch, "sin(phi) branch, + or -");
    evolve->add_option("--format", v_format, "csv or json");
    evolve->add_option("--out", vcfg.out_path, "output path (default stdout)");

    // figure2
    auto* figure2 = app.add_subcommand("figure2", "emit the entropy/Schmidt-number curve"
                                                  " files over R");
    std::string f_dir = "figure2", f_pairs;
    figure2->add_option("--out", f_dir, "output directory");
    figure2->add_option("--pairs", f_pairs, "state pairs as 's1,s2;s1,s2;...'");

    // verify
    auto* verify = app.add_subcommand("verify", "run the verification battery");
    bool w_appendix = false;
    std::vector<std::string> w_tols;
    std::string w_out;
    verify->add_flag("--appendix", w_appendix, "include the appendix diagnostics");
    verify->add_option("--tol", w_tols, "override a check bound as NAME=VALUE");
    verify->add_option("--out", w_out, "write the JSON report here");

    // flat key = value configuration; entries are injected before the real
    // flags, and TakeLast makes explicit flags override the file
    std::string config_path;
    for (CLI::App* sub : {entangle, evolve, figure2, verify}) {
        sub->add_option("--config", config_path, "flat key = value configuration file;"
                                                 " flags override");
        for (CLI::Option* opt : sub->get_options())
            if (opt->get_name() != "--tol" && opt->get_name() != "--help")
                opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    }

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        std::string early_config;
        for (size_t i = 0; i < args.size(); ++i) {
            if (args[i] == "--config" && i + 1 < args.size()) early_config = args[i + 1];
            else if (args[i].rfind("--config=", 0) == 0) early_config = args[i].substr(9);
        }
        size_t sub_pos = 0;
        while (sub_pos < args.size() && args[sub_pos].rfind("-", 0) == 0) ++sub_pos;
        if (!early_config.empty() && sub_pos < args.size()) {
            std::vector<std::string> merged(args.begin(),
                                            args.begin() + static_cast<long>(sub_pos) + 1);
            for (const auto& [key, value] : qosc::cli::parse_flat_config(early_config))
                merged.push_back("--" + key + "=" + value);
            merged.insert(merged.end(), args.begin() + static_cast<long>(sub_pos) + 1, args.end());
            args = std::move(merged);
        }
    } catch (const ConfigError& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 2;
    }

    std::vector<const char*> argv2;
    argv2.push_back(argv[0]);
    for (const std::string& a : args) argv2.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv2.size()), argv2.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (entangle->parsed()) {
            ecfg.r_grid = qosc::cli::GridSpec::parse(e_grid, "r-grid");
            ecfg.branch = qosc::cli::parse_branch(e_branch);
            ecfg.format = qosc::cli::parse_format(e_format);
            return qosc::cli::run_entangle(ecfg, std::cout, std::cerr);
        }
        if (evolve->parsed()) {
            vcfg.t_grid = qosc::cli::GridSpec::parse(v_grid, "t-grid");
            vcfg.branch = qosc::cli::parse_branch(v_branch);
            vcfg.format = qosc::cli::parse_format(v_format);
            return qosc::cli::run_evolve(vcfg, std::cout, std::cerr);
        }
        if (figure2->parsed()) {
            qosc::cli::Figure2Config fcfg;
            fcfg.out_dir = f_dir;
            if (!f_pairs.empty()) fcfg.pairs = qosc::cli::parse_pairs(f_pairs);
            std::vector<std::string> written = qosc::cli::run_figure2(fcfg);
            for (const std::string& name : written)
                std::printf("wrote %s/%s\n", f_dir.c_str(), name.c_str());
            return 0;
        }
        if (verify->parsed()) return run_verify_command(w_appendix, w_tols, w_out);
    } catch (const ConfigError& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 2;
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 2;
    }
    return 2;
}
