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

#include "record.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>
#include <sstream>

namespace adjsup_cli {

namespace {

using Json = nlohmann::ordered_json;

Json number_or_null(double v) {
    return std::isfinite(v) ? Json(v) : Json(nullptr);
}

Json optional_number(const std::optional<double> &v) {
    return v ? number_or_null(*v) : Json(nullptr);
}

Json to_json(const RunRecord &r) {
    Json j;
    j["N"] = r.n_qubits;
    j["p"] = r.p;
    j["k"] = r.k;
    j["y"] = r.marked;
    j["epsilon_analytic"] = number_or_null(r.epsilon_analytic);
    j["log10_epsilon"] = number_or_null(r.log10_epsilon);
    j["epsilon_sim"] = optional_number(r.epsilon_sim);
    j["zeta"] = number_or_null(r.zeta);
    j["expected_runs"] = number_or_null(r.expected_runs);
    j["survival_sim"] = number_or_null(r.survival_sim);
    if (r.mc) {
        j["mc_survival"] = r.mc->survival;
        j["mc_error"] = optional_number(r.mc->error);
        j["trials"] = r.mc->trials;
        j["seed"] = r.mc->seed;
    }
    return j;
}

std::optional<double> read_optional(const Json &j, const char *key) {
    const Json &v = j.at(key);
    if (v.is_null()) {
        return std::nullopt;
    }
    return v.get<double>();
}

double read_number(const Json &j, const char *key, double null_value) {
    return read_optional(j, key).value_or(null_value);
}

std::string cell(const std::optional<double> &v) {
    return v ? format_double(*v) : std::string{};
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

std::string csv_header(bool with_mc) {
    std::string out(kCsvHeader);
    if (with_mc) {
        out += kMcCsvColumns;
    }
    return out;
}

std::string to_csv_row(const RunRecord &r) {
    std::ostringstream out;
    out << r.n_qubits << ',' << format_double(r.p) << ',' << r.k << ',' << r.marked << ','
        << format_double(r.epsilon_analytic) << ',' << format_double(r.log10_epsilon) << ',' << cell(r.epsilon_sim)
        << ',' << format_double(r.zeta) << ',' << format_double(r.expected_runs) << ','
        << format_double(r.survival_sim);
    if (r.mc) {
        out << ',' << format_double(r.mc->survival) << ',' << cell(r.mc->error) << ',' << r.mc->trials << ','
            << r.mc->seed;
    }
    return out.str();
}

std::string render(const std::vector<RunRecord> &records, Format format, bool as_array) {
    if (format == Format::Csv) {
        bool with_mc = !records.empty() && records.front().mc.has_value();
        std::string out = csv_header(with_mc) + "\n";
        for (const RunRecord &r : records) {
            out += to_csv_row(r);
            out += '\n';
        }
        return out;
    }
    if (as_array) {
        Json arr = Json::array();
        for (const RunRecord &r : records) {
            arr.push_back(to_json(r));
        }
        return arr.dump(2) + "\n";
    }
    if (records.size() != 1) {
        throw UsageError("single-object JSON needs exactly one record");
    }
    return to_json(records.front()).dump(2) + "\n";
}

RunRecord parse_json_record(std::string_view text) {
    Json j = Json::parse(text);
    const double nan = std::nan("");
    RunRecord r{};
    r.n_qubits = j.at("N").get<std::uint32_t>();
    r.p = j.at("p").get<double>();
    r.k = j.at("k").get<std::uint32_t>();
    r.marked = j.at("y").get<std::uint32_t>();
    r.epsilon_analytic = read_number(j, "epsilon_analytic", nan);
    r.log10_epsilon = read_number(j, "log10_epsilon", -INFINITY);
    r.epsilon_sim = read_optional(j, "epsilon_sim");
    r.zeta = read_number(j, "zeta", nan);
    r.expected_runs = read_number(j, "expected_runs", INFINITY);
    r.survival_sim = read_number(j, "survival_sim", nan);
    if (j.contains("mc_survival")) {
        r.mc = McColumns{
            j.at("mc_survival").get<double>(),
            read_optional(j, "mc_error"),
            j.at("trials").get<std::uint64_t>(),
            j.at("seed").get<std::uint64_t>(),
        };
    }
    return r;
}

namespace {

std::vector<std::string_view> split(std::string_view text) {
    std::vector<std::string_view> parts;
    while (true) {
        auto comma = text.find(',');
        parts.push_back(text.substr(0, comma));
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return parts;
}

template <typename T>
T parse_number(std::string_view s) {
    T value{};
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) {
        throw UsageError("not a number: '" + std::string(s) + "'");
    }
    return value;
}

}  // namespace

std::vector<std::uint32_t> parse_int_list(std::string_view text) {
    std::vector<std::uint32_t> out;
    for (std::string_view part : split(text)) {
        auto dash = part.find('-');
        if (dash == std::string_view::npos) {
            out.push_back(parse_number<std::uint32_t>(part));
            continue;
        }
        auto lo = parse_number<std::uint32_t>(part.substr(0, dash));
        auto hi = parse_number<std::uint32_t>(part.substr(dash + 1));
        if (hi < lo) {
            throw UsageError("empty range '" + std::string(part) + "'");
        }
        for (std::uint32_t v = lo; v <= hi; ++v) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<double> parse_double_list(std::string_view text) {
    std::vector<double> out;
    for (std::string_view part : split(text)) {
        out.push_back(parse_number<double>(part));
    }
    return out;
}

}  // namespace adjsup_cli
