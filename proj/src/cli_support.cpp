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
#include <qosc/cli_support.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <system_error>

#include <json.hpp>

#include <qosc/dynamics.hpp>
#include <qosc/entanglement.hpp>

namespace qosc::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string::size_type start = 0;
    while (start <= text.size()) {
        std::string::size_type pos = text.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(text.substr(start));
            break;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

double parse_number(const std::string& text, const std::string& field) {
    try {
        size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(field, "'" + text + "' is not a number");
    }
}

void validate_state(int s1, int s2) {
    if (s1 < 0) throw ConfigError("s1", "must be a nonnegative integer");
    if (s2 < 0) throw ConfigError("s2", "must be a nonnegative integer");
    if (s1 + s2 > dynamics::max_total_excitation)
        throw ConfigError("s1/s2", "s1 + s2 must not exceed 60");
}

struct Row {
    std::vector<std::pair<std::string, double>> scalars;
    std::vector<double> lambdas;
};

void emit_rows(const std::vector<std::string>& scalar_names, const std::vector<Row>& rows,
               int lambda_count, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::csv) {
        std::string header;
        for (const std::string& n : scalar_names) {
            if (!header.empty()) header += ',';
            header += n;
        }
        for (int i = 0; i < lambda_count; ++i) header += ",lambda_" + std::to_string(i);
        out << header << '\n';
        for (const Row& r : rows) {
            std::string line;
            for (const auto& [name, value] : r.scalars) {
                if (!line.empty()) line += ',';
                line += format_double(value);
            }
            for (double v : r.lambdas) line += ',' + format_double(v);
            out << line << '\n';
        }
        return;
    }
    nlohmann::json doc;
    doc["rows"] = nlohmann::json::array();
    for (const Row& r : rows) {
        nlohmann::json jr;
        for (const auto& [name, value] : r.scalars) jr[name] = value;
        if (lambda_count > 0) jr["lambda"] = r.lambdas;
        doc["rows"].push_back(std::move(jr));
    }
    out << doc.dump(2) << '\n';
}

void emit_to_sink(const std::string& out_path, const std::vector<std::string>& names,
                  const std::vector<Row>& rows, int lambda_count, OutputFormat format,
                  std::ostream& fallback) {
    if (out_path.empty()) {
        emit_rows(names, rows, lambda_count, format, fallback);
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw ConfigError("out", "cannot open '" + out_path + "' for writing");
    emit_rows(names, rows, lambda_count, format, file);
}

}  // namespace

GridSpec GridSpec::parse(const std::string& text, const std::string& field) {
    std::vector<std::string> parts = split(text, ':');
    if (parts.size() != 3)
        throw ConfigError(field, "expected start:stop:count, got '" + text + "'");
    GridSpec g;
    g.start = parse_number(parts[0], field);
    g.stop = parse_number(parts[1], field);
    double count = parse_number(parts[2], field);
    g.count = static_cast<int>(count);
    if (count != g.count) throw ConfigError(field, "count must be an integer");
    g.validate(field);
    return g;
}

void GridSpec::validate(const std::string& field) const {
    if (count < 1) throw ConfigError(field, "count must be at least 1");
    if (count == 1) {
        if (stop != start) throw ConfigError(field, "a single-point grid needs stop == start");
        return;
    }
    if (!(stop > start)) throw ConfigError(field, "grid must be strictly increasing");
}

std::vector<double> GridSpec::points() const {
    std::vector<double> p(static_cast<size_t>(count));
    if (count == 1) {
        p[0] = start;
        return p;
    }
    for (int i = 0; i < count; ++i)
        p[static_cast<size_t>(i)] = start + (stop - start) * i / (count - 1);
    p.back() = stop;
    return p;
}

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (ec != std::errc()) return "nan";
    return std::string(buf, end);
}

OutputFormat parse_format(const std::string& text) {
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    throw ConfigError("format", "must be 'csv' or 'json'");
}

model::Branch parse_branch(const std::string& text) {
    if (text == "+") return model::Branch::plus;
    if (text == "-") return model::Branch::minus;
    throw ConfigError("branch", "must be '+' or '-'");
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    for (const std::string& token : split(text, ';')) {
        if (token.empty()) continue;
        std::vector<std::string> nums = split(token, ',');
        if (nums.size() != 2) throw ConfigError("pairs", "expected 's1,s2' entries");
        int s1 = static_cast<int>(parse_number(nums[0], "pairs"));
        int s2 = static_cast<int>(parse_number(nums[1], "pairs"));
        validate_state(s1, s2);
        out.emplace_back(s1, s2);
    }
    if (out.empty()) throw ConfigError("pairs", "list is empty");
    return out;
}

std::vector<std::pair<std::string, std::string>> parse_flat_config(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ConfigError("config", "cannot read '" + path + "'");
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    auto trim = [](std::string s) {
        const char* ws = " \t\r";
        const auto a = s.find_first_not_of(ws);
        if (a == std::string::npos) return std::string();
        const auto b = s.find_last_not_of(ws);
        return s.substr(a, b - a + 1);
    };
    int lineno = 0;
    while (std::getline(file, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config", "line " + std::to_string(lineno) + " is not 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config", "line " + std::to_string(lineno) + " has an empty key");
        if (key == "config")
            throw ConfigError("config", "nested config files are not supported");
        out.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

int run_entangle(const EntangleConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    validate_state(cfg.s1, cfg.s2);
    cfg.r_grid.validate("r-grid");
    const double r_max = 1.0 / (1.0 + cfg.epsilon * cfg.epsilon);
    dynamics::SpectrumEvaluator ev(dynamics::InitialState(cfg.s1, cfg.s2), cfg.epsilon, cfg.branch);
    std::vector<Row> rows;
    for (double r : cfg.r_grid.points()) {
        if (r < 0.0 || r > r_max + 1e-12)
            throw ConfigError("r-grid", "R = " + format_double(r) +
                                            " outside [0, 1/(1+epsilon^2)] = [0, " +
                                            format_double(r_max) + "]");
        dynamics::SchmidtSpectrum s = ev.spectrum_at_r(std::min(r, r_max));
        Row row;
        row.scalars = {{"R", r},
                       {"S_N", entanglement::von_neumann(s)},
                       {"K", entanglement::schmidt_number(s)}};
        row.lambdas = s.lambda;
        rows.push_back(std::move(row));
    }
    emit_to_sink(cfg.out_path, {"R", "S_N", "K"}, rows, cfg.s1 + cfg.s2 + 1, cfg.format, out);
    return 0;
}

int run_evolve(const EvolveConfig& cfg, std::ostream& out, std::ostream& err) {
    validate_state(cfg.s1, cfg.s2);
    cfg.t_grid.validate("t-grid");
    model::CouplingSet couplings;
    try {
        couplings = model::reduce_physical(cfg.params);
    } catch (const std::domain_error& ex) {
        throw ConfigError("physical parameters", ex.what());
    }
    if (!couplings.weak_coupling_ok)
        err << "warning: couplings exceed " << format_double(model::weak_coupling_ratio)
            << " of hbar*omega (ratio " << format_double(couplings.coupling_ratio)
            << "); the closed form degrades there, see `qosc verify`\n";
    model::RabiParams rabi = model::rabi_params(couplings, cfg.params.omega1, cfg.params.omega2);
    if (rabi.degenerate)
        err << "warning: the coupling channels compensate exactly (Omega = 0); "
               "every row is the identity point\n";
    dynamics::InitialState st(cfg.s1, cfg.s2);
    std::vector<Row> rows;
    for (double t : cfg.t_grid.points()) {
        model::EvolutionPoint e = model::evolution_point(rabi, t, cfg.branch);
        dynamics::SchmidtSpectrum s = dynamics::schmidt_modes(dynamics::amplitudes(st, e));
        Row row;
        row.scalars = {{"t", t},
                       {"R", e.r},
                       {"S_N", entanglement::von_neumann(s)},
                       {"K", entanglement::schmidt_number(s)}};
        rows.push_back(std::move(row));
    }
    emit_to_sink(cfg.out_path, {"t", "R", "S_N", "K"}, rows, 0, cfg.format, out);
    return 0;
}

std::vector<std::string> run_figure2(const Figure2Config& cfg) {
    if (cfg.out_dir.empty()) throw ConfigError("out", "figure2 needs an output directory");
    if (cfg.grid_points < 2) throw ConfigError("grid", "needs at least 2 points");
    if (cfg.pairs.empty()) throw ConfigError("pairs", "list is empty");
    for (const auto& [s1, s2] : cfg.pairs) validate_state(s1, s2);

    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);

    const size_t split_at = (cfg.pairs.size() + 1) / 2;
    std::vector<std::vector<std::pair<int, int>>> groups = {
        {cfg.pairs.begin(), cfg.pairs.begin() + static_cast<long>(split_at)},
        {cfg.pairs.begin() + static_cast<long>(split_at), cfg.pairs.end()}};

    const std::vector<std::string> names = {"figure2a_entropy.csv", "figure2b_entropy.csv",
                                            "figure2c_schmidt.csv", "figure2d_schmidt.csv"};
    std::vector<std::string> written;
    for (int panel = 0; panel < 2; ++panel) {
        const auto& group = groups[static_cast<size_t>(panel)];
        if (group.empty()) continue;
        std::vector<dynamics::SpectrumEvaluator> evs;
        evs.reserve(group.size());
        for (const auto& [s1, s2] : group)
            evs.emplace_back(dynamics::InitialState(s1, s2), 0.0, model::Branch::plus);

        std::vector<std::string> lines_s(static_cast<size_t>(cfg.grid_points)),
            lines_k(static_cast<size_t>(cfg.grid_points));
        for (int i = 0; i < cfg.grid_points; ++i) {
            const double r = static_cast<double>(i) / (cfg.grid_points - 1);
            std::string s_line = format_double(r), k_line = format_double(r);
            for (const dynamics::SpectrumEvaluator& ev : evs) {
                dynamics::SchmidtSpectrum s = ev.spectrum_at_r(r);
                s_line += ',' + format_double(entanglement::von_neumann(s));
                k_line += ',' + format_double(entanglement::schmidt_number(s));
            }
            lines_s[static_cast<size_t>(i)] = std::move(s_line);
            lines_k[static_cast<size_t>(i)] = std::move(k_line);
        }

        std::string header_s = "R", header_k = "R";
        for (const auto& [s1, s2] : group) {
            const std::string tag = std::to_string(s1) + "_" + std::to_string(s2);
            header_s += ",SN_" + tag;
            header_k += ",K_" + tag;
        }
        const std::string file_s = names[static_cast<size_t>(panel)];
        const std::string file_k = names[static_cast<size_t>(panel) + 2];
        {
            std::ofstream f(fs::path(cfg.out_dir) / file_s, std::ios::binary);
            if (!f) throw ConfigError("out", "cannot write into '" + cfg.out_dir + "'");
            f << header_s << '\n';
            for (const std::string& line : lines_s) f << line << '\n';
        }
        {
            std::ofstream f(fs::path(cfg.out_dir) / file_k, std::ios::binary);
            if (!f) throw ConfigError("out", "cannot write into '" + cfg.out_dir + "'");
            f << header_k << '\n';
            for (const std::string& line : lines_k) f << line << '\n';
        }
        written.push_back(file_s);
        written.push_back(file_k);
    }
    return written;
}

}  // namespace qosc::cli
