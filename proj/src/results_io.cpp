// Copyright 2026 The quftisim Authors
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

#include "quftisim/results_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace qufti {

const char kCsvHeader[] =
    "method,M,N,d,r,phi,noise_sigma,realizations,L1,L2,seed,Q_mean,Q_stderr,Q_imag,wall_time_s";

namespace {

// 17 significant digits: enough to reproduce the exact double on re-parse.
std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double parse_double(const std::string& s) {
    // stod and friends throw invalid_argument / out_of_range of their own;
    // fold every conversion failure into the reader's runtime_error class.
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (pos != s.size()) {
        throw std::runtime_error("results csv: malformed number '" + s + "'");
    }
    return v;
}

long long parse_int(const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (pos != s.size()) {
        throw std::runtime_error("results csv: malformed integer '" + s + "'");
    }
    return v;
}

std::uint64_t parse_u64(const std::string& s) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (pos != s.size()) {
        throw std::runtime_error("results csv: malformed seed '" + s + "'");
    }
    return v;
}

} // namespace

void write_csv(const std::vector<ScanRow>& rows, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const ScanRow& r : rows) {
        out << method_name(r.method) << ',' << r.modes << ',' << r.order << ',' << r.d << ','
            << format_double(r.radius) << ',' << format_double(r.phi) << ','
            << format_double(r.noise_sigma) << ',' << r.realizations << ',' << r.l1 << ','
            << r.l2 << ',' << r.seed << ',' << format_double(r.q_mean) << ','
            << format_double(r.q_stderr) << ',' << format_double(r.q_imag) << ','
            << format_double(r.wall_time_s) << '\n';
    }
}

void write_jsonl(const std::vector<ScanRow>& rows, std::ostream& out) {
    for (const ScanRow& r : rows) {
        nlohmann::ordered_json j;
        j["method"] = method_name(r.method);
        j["M"] = r.modes;
        j["N"] = r.order;
        j["d"] = r.d;
        j["r"] = r.radius;
        j["phi"] = r.phi;
        j["noise_sigma"] = r.noise_sigma;
        j["realizations"] = r.realizations;
        j["L1"] = r.l1;
        j["L2"] = r.l2;
        j["seed"] = r.seed;
        j["Q_mean"] = r.q_mean;
        j["Q_stderr"] = r.q_stderr;
        j["Q_imag"] = r.q_imag;
        j["wall_time_s"] = r.wall_time_s;
        out << j.dump() << '\n';
    }
}

void write_results(const std::vector<ScanRow>& rows, OutputFormat format,
                   const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    if (format == OutputFormat::kCsv) {
        write_csv(rows, out);
    } else {
        write_jsonl(rows, out);
    }
    out.flush();
    if (!out) {
        throw std::runtime_error("failed while writing output file: " + path);
    }
}

std::vector<ScanRow> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("results csv: missing header row");
    }
    if (line != kCsvHeader) {
        throw std::runtime_error("results csv: unexpected header '" + line + "'");
    }
    std::vector<ScanRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (line.back() == ',') {
            fields.emplace_back();
        }
        if (fields.size() != 15) {
            throw std::runtime_error("results csv: expected 15 fields, got " +
                                     std::to_string(fields.size()));
        }
        ScanRow r;
        try {
            r.method = method_from_name(fields[0]);
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("results csv: unknown method '" + fields[0] + "'");
        }
        r.modes = static_cast<int>(parse_int(fields[1]));
        r.order = static_cast<int>(parse_int(fields[2]));
        r.d = static_cast<int>(parse_int(fields[3]));
        r.radius = parse_double(fields[4]);
        r.phi = parse_double(fields[5]);
        r.noise_sigma = parse_double(fields[6]);
        r.realizations = static_cast<int>(parse_int(fields[7]));
        r.l1 = parse_int(fields[8]);
        r.l2 = parse_int(fields[9]);
        r.seed = parse_u64(fields[10]);
        r.q_mean = parse_double(fields[11]);
        r.q_stderr = parse_double(fields[12]);
        r.q_imag = parse_double(fields[13]);
        r.wall_time_s = parse_double(fields[14]);
        rows.push_back(r);
    }
    return rows;
}

} // namespace qufti
