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
#include <vector>

#include "doctest.h"
#include "quftisim/experiments.hpp"

namespace {

std::vector<qufti::ScanRow> sample_rows() {
    qufti::ScanRow a;
    a.method = qufti::Method::kQcp;
    a.modes = 20;
    a.order = 20;
    a.d = 2;
    a.radius = 0.1;
    a.phi = -0.031415926535897931;
    a.noise_sigma = 0.2;
    a.realizations = 20;
    a.l1 = 200;
    a.l2 = 10000;
    a.seed = 18446744073709551615ULL;  // extreme seed must survive the trip
    a.q_mean = 0.12345678901234567;
    a.q_stderr = 9.87654321e-7;
    a.q_imag = -3.3306690738754696e-16;
    a.wall_time_s = 0.0;

    qufti::ScanRow b;
    b.method = qufti::Method::kVcp;
    b.modes = 4;
    b.order = 3;
    b.d = 2;
    b.radius = 0.8;
    b.phi = 0.2;
    b.noise_sigma = 0.0;
    b.realizations = 1;
    b.l1 = 2;
    b.l2 = 1;
    b.seed = 0;
    b.q_mean = 1e-300;  // denormal-adjacent values must round-trip too
    b.q_stderr = 1.7976931348623157e308;
    b.q_imag = 0.0;
    b.wall_time_s = 1.5;
    return {a, b};
}

void check_equal(const qufti::ScanRow& x, const qufti::ScanRow& y) {
    CHECK(x.method == y.method);
    CHECK(x.modes == y.modes);
    CHECK(x.order == y.order);
    CHECK(x.d == y.d);
    CHECK(x.radius == y.radius);
    CHECK(x.phi == y.phi);
    CHECK(x.noise_sigma == y.noise_sigma);
    CHECK(x.realizations == y.realizations);
    CHECK(x.l1 == y.l1);
    CHECK(x.l2 == y.l2);
    CHECK(x.seed == y.seed);
    CHECK(x.q_mean == y.q_mean);
    CHECK(x.q_stderr == y.q_stderr);
    CHECK(x.q_imag == y.q_imag);
    CHECK(x.wall_time_s == y.wall_time_s);
}

TEST_CASE("csv round-trip recovers every field exactly") {
    const std::vector<qufti::ScanRow> rows = sample_rows();
    std::stringstream ss;
    qufti::write_csv(rows, ss);
    const std::vector<qufti::ScanRow> back = qufti::read_csv(ss);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        check_equal(rows[i], back[i]);
    }
}

TEST_CASE("empty scans produce a header-only file") {
    std::stringstream ss;
    qufti::write_csv({}, ss);
    CHECK(ss.str() == std::string(qufti::kCsvHeader) + "\n");
    std::stringstream parse(ss.str());
    CHECK(qufti::read_csv(parse).empty());
}

TEST_CASE("header text is the pinned schema") {
    CHECK(std::string(qufti::kCsvHeader) ==
          "method,M,N,d,r,phi,noise_sigma,realizations,L1,L2,seed,"
          "Q_mean,Q_stderr,Q_imag,wall_time_s");
}

TEST_CASE("reader rejects malformed input") {
    std::stringstream empty;
    CHECK_THROWS_AS(qufti::read_csv(empty), std::runtime_error);

    std::stringstream wrong_header("a,b,c\n");
    CHECK_THROWS_AS(qufti::read_csv(wrong_header), std::runtime_error);

    std::stringstream short_row(std::string(qufti::kCsvHeader) + "\nqcp,1,2\n");
    CHECK_THROWS_AS(qufti::read_csv(short_row), std::runtime_error);

    std::stringstream bad_number(std::string(qufti::kCsvHeader) +
                                 "\nqcp,2,2,2,x,0,0,1,2,1,0,0,0,0,0\n");
    CHECK_THROWS_AS(qufti::read_csv(bad_number), std::runtime_error);

    std::stringstream bad_method(std::string(qufti::kCsvHeader) +
                                 "\nnope,2,2,2,0.1,0,0,1,2,1,0,0,0,0,0\n");
    CHECK_THROWS_AS(qufti::read_csv(bad_method), std::runtime_error);
}

TEST_CASE("jsonl holds one record per row with all fields") {
    const std::vector<qufti::ScanRow> rows = sample_rows();
    std::stringstream ss;
    qufti::write_jsonl(rows, ss);
    std::string line;
    int count = 0;
    while (std::getline(ss, line)) {
        CHECK(line.find("\"method\"") != std::string::npos);
        CHECK(line.find("\"Q_mean\"") != std::string::npos);
        CHECK(line.find("\"seed\"") != std::string::npos);
        CHECK(line.front() == '{');
        CHECK(line.back() == '}');
        ++count;
    }
    CHECK(count == 2);
}

TEST_CASE("write_results writes files and reports unwritable paths") {
    const std::string path = "/tmp/quftisim_io_test.csv";
    qufti::write_results(sample_rows(), qufti::OutputFormat::kCsv, path);
    std::ifstream in(path);
    REQUIRE(in.good());
    const std::vector<qufti::ScanRow> back = qufti::read_csv(in);
    CHECK(back.size() == 2);
    std::remove(path.c_str());

    CHECK_THROWS_AS(qufti::write_results(sample_rows(), qufti::OutputFormat::kCsv,
                                         "/nonexistent_dir_zz/out.csv"),
                    std::runtime_error);
}

TEST_CASE("method names map both ways") {
    using qufti::Method;
    CHECK(qufti::method_name(Method::kVcp) == std::string("vcp"));
    CHECK(qufti::method_name(Method::kQcp) == std::string("qcp"));
    CHECK(qufti::method_name(Method::kExact) == std::string("exact"));
    CHECK(qufti::method_name(Method::kConjecture) == std::string("conjecture"));
    CHECK(qufti::method_from_name("vcp") == Method::kVcp);
    CHECK(qufti::method_from_name("qcp") == Method::kQcp);
    CHECK(qufti::method_from_name("exact") == Method::kExact);
    CHECK(qufti::method_from_name("conjecture") == Method::kConjecture);
    CHECK_THROWS_AS(qufti::method_from_name("fancy"), std::invalid_argument);
}

} // namespace
