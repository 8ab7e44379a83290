// Copyright 2026 The adjsup Authors
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

#ifndef ADJSUP_TOOLS_RECORD_HPP
#define ADJSUP_TOOLS_RECORD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace adjsup_cli {

struct McColumns {
    double survival;
    std::optional<double> error;
    std::uint64_t trials;
    std::uint64_t seed;
};

/// One serialized row. Column order is fixed by kCsvHeader / kMcCsvHeader.
struct RunRecord {
    std::uint32_t n_qubits;
    double p;
    std::uint32_t k;
    std::uint32_t marked;
    double epsilon_analytic;
    double log10_epsilon;
    std::optional<double> epsilon_sim;
    double zeta;
    double expected_runs;
    double survival_sim;
    std::optional<McColumns> mc;
};

inline constexpr std::string_view kCsvHeader =
    "N,p,k,y,epsilon_analytic,log10_epsilon,epsilon_sim,zeta,expected_runs,survival_sim";
inline constexpr std::string_view kMcCsvColumns = ",mc_survival,mc_error,trials,seed";

enum class Format { Csv, Json };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

std::string csv_header(bool with_mc);
std::string to_csv_row(const RunRecord &record);

/// Records as CSV (header + rows, LF endings) or JSON. JSON is an array when
/// `as_array`, otherwise the single object.
std::string render(const std::vector<RunRecord> &records, Format format, bool as_array);

/// Parses a JSON record back; render({parse_json_record(s)}, Json, false) == s.
RunRecord parse_json_record(std::string_view text);

/// "1-30" / "1,2,3,5" / "1-3,7" into integers, in the written order.
std::vector<std::uint32_t> parse_int_list(std::string_view text);
/// "0.1,0.5" into doubles.
std::vector<double> parse_double_list(std::string_view text);

}  // namespace adjsup_cli

#endif
