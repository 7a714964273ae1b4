// Copyright 2026 The dcnet Authors
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

#ifndef DCNET_REPORT_HPP
#define DCNET_REPORT_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "dcnet/common.hpp"
#include "dcnet/run_config.hpp"

namespace dcnet {

/// One output value. monostate renders as an empty CSV cell / JSON null.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string,
                          std::vector<std::string>>;

using Record = std::vector<std::pair<std::string, Cell>>;

inline std::vector<std::string> warning_codes(const Warnings &warnings) {
    std::vector<std::string> out;
    out.reserve(warnings.size());
    for (const auto &w : warnings) {
        out.push_back(std::string(to_string(w.kind)) + ": " + w.message);
    }
    return out;
}

namespace detail {

inline std::string six_digits(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string csv_cell(const Cell &cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(double v) const { return six_digits(v); }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string &v) const { return csv_escape(v); }
        std::string operator()(const std::vector<std::string> &v) const {
            std::string joined;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) joined += " | ";
                joined += v[i];
            }
            return csv_escape(joined);
        }
    };
    return std::visit(Visitor{}, cell);
}

inline nlohmann::ordered_json json_cell(const Cell &cell) {
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(double v) const {
            if (!std::isfinite(v)) return nullptr;
            return std::stod(six_digits(v));
        }
        nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
        nlohmann::ordered_json operator()(bool v) const { return v; }
        nlohmann::ordered_json operator()(const std::string &v) const { return v; }
        nlohmann::ordered_json operator()(const std::vector<std::string> &v) const {
            return v;
        }
    };
    return std::visit(Visitor{}, cell);
}

}  // namespace detail

/// Writes records as CSV (header + one line per record) or JSON.
///
/// In JSON a lone record is written as an object unless `force_array`.
inline void write_records(std::ostream &out, const std::vector<Record> &records,
                          OutputFormat format, bool force_array = false) {
    if (format == OutputFormat::Csv) {
        if (records.empty()) {
            return;
        }
        const Record &first = records.front();
        for (std::size_t i = 0; i < first.size(); ++i) {
            out << (i ? "," : "") << detail::csv_escape(first[i].first);
        }
        out << '\n';
        for (const Record &r : records) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                out << (i ? "," : "") << detail::csv_cell(r[i].second);
            }
            out << '\n';
        }
        return;
    }
    auto to_object = [](const Record &r) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (const auto &[key, cell] : r) {
            obj[key] = detail::json_cell(cell);
        }
        return obj;
    };
    if (records.size() == 1 && !force_array) {
        out << to_object(records.front()).dump(2) << '\n';
        return;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Record &r : records) {
        arr.push_back(to_object(r));
    }
    out << arr.dump(2) << '\n';
}

}  // namespace dcnet

#endif  // DCNET_REPORT_HPP
