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
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <qosc/model.hpp>

namespace qosc::cli {

/// Configuration violation; the message names the offending field and maps
/// to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_name(field) {}
    std::string field_name;
};

enum class OutputFormat { csv, json };

/// "a:b:n" grid: n points from a to b inclusive; n = 1 collapses to {a}.
struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;

    static GridSpec parse(const std::string& text, const std::string& field);
    void validate(const std::string& field) const;
    std::vector<double> points() const;
};

/// Round-trip-safe number formatting (17 significant digits, locale
/// independent, byte deterministic).
std::string format_double(double v);

OutputFormat parse_format(const std::string& text);
model::Branch parse_branch(const std::string& text);

struct EntangleConfig {
    int s1 = 0;
    int s2 = 1;
    GridSpec r_grid{0.0, 1.0, 101};
    double epsilon = 0.0;
    model::Branch branch = model::Branch::plus;
    OutputFormat format = OutputFormat::csv;
    std::string out_path;  // empty: stdout
};

/// Rows (R, S_N, K, lambda_0..lambda_N) over the R grid.
int run_entangle(const EntangleConfig& cfg, std::ostream& out, std::ostream& err);

struct EvolveConfig {
    model::PhysicalParams params;
    int s1 = 0;
    int s2 = 1;
    GridSpec t_grid{0.0, 10.0, 101};
    model::Branch branch = model::Branch::plus;
    OutputFormat format = OutputFormat::csv;
    std::string out_path;
};

/// Rows (t, R, S_N, K) through the physical-parameter reduction.
int run_evolve(const EvolveConfig& cfg, std::ostream& out, std::ostream& err);

struct Figure2Config {
    std::string out_dir;
    // small-quantum-number panel first, larger second; the first half of the
    // list feeds panels a/c and the rest panels b/d
    std::vector<std::pair<int, int>> pairs = {{0, 1}, {1, 1}, {0, 2}, {2, 2}, {1, 9}, {5, 5}};
    int grid_points = 1001;
};

/// Emits the four figure-data files (entropy and Schmidt number vs R for the
/// two panel groups).  Returns the written file names (relative to out_dir).
std::vector<std::string> run_figure2(const Figure2Config& cfg);

/// Parses "0,1;1,1;5,5" into state pairs.
std::vector<std::pair<int, int>> parse_pairs(const std::string& text);

/// Reads a flat `key = value` configuration file ('#' comments allowed) and
/// returns the entries in file order.  Nested config keys are rejected.
std::vector<std::pair<std::string, std::string>> parse_flat_config(const std::string& path);

}  // namespace qosc::cli
