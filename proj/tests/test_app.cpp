// Copyright 2026 The radpair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <sstream>

#include "doctest.h"

#include "radpair/app/commands.hpp"
#include "radpair/app/csv.hpp"
#include "radpair/app/run_config.hpp"
#include "radpair/errors.hpp"
#include "radpair/oracle.hpp"
#include "test_support.hpp"

using namespace radpair;
using namespace radpair::app;
using radpair::testing::parse_csv;
using radpair::testing::read_file;
using radpair::testing::scratch_dir;
using radpair::testing::write_file;
using nlohmann::json;

TEST_CASE("config defaults and round trip")
{
    const RunConfig c = RunConfig::from_json(json{{"theory", "jones-hore"}});
    CHECK(c.theory == Theory::JonesHore);
    CHECK(c.k_s == 1.0);
    CHECK(c.k_t == 0.0);
    CHECK(c.omega == 0.0);
    CHECK(c.initial == InitialState::CoherentST);
    CHECK(c.t_end == 10.0);
    CHECK(c.dt == 1e-3);
    CHECK(c.n_traj == 0);
    CHECK(c.seed == 0);
    CHECK_FALSE(c.recombination);
    CHECK(c.conditioning == Conditioning::All);

    const json full = {{"theory", "kominis"}, {"k_s", 2.0},       {"k_t", 0.5},
                       {"omega", 3.0},        {"initial", "singlet"}, {"t_end", 4.0},
                       {"dt", 1e-3},          {"n_traj", 12},     {"seed", 99},
                       {"recombination", "on"}, {"conditioning", "non-reacted"}};
    const RunConfig k = RunConfig::from_json(full);
    CHECK(k.theory == Theory::Kominis);
    CHECK(k.initial == InitialState::Singlet);
    CHECK(k.recombination);
    CHECK(k.conditioning == Conditioning::NonReacted);
    CHECK(k.seed == 99);
    CHECK(k.to_json() == full);
    CHECK(RunConfig::from_json(k.to_json()).to_json() == full);

    const Scenario s = k.scenario();
    CHECK(s.k_s == 2.0);
    CHECK(s.k_t == 0.5);
    CHECK(s.hamiltonian.mat()(0, 1).real() == doctest::Approx(1.5)); // omega/2
    CHECK(std::abs(s.rho0.mat(0, 0).real() - 1.0) < 1e-15);
    CHECK(k.ensemble().n_traj == 12);
    CHECK(k.ensemble().recombination_enabled);
}

TEST_CASE("config errors")
{
    auto bad = [](const json& doc) { CHECK_THROWS_AS(RunConfig::from_json(doc), ConfigError); };
    bad(json::array());
    bad(json{{"k_s", 1.0}});
    bad(json{{"theory", "lindblad"}});
    bad(json{{"theory", "kominis"}, {"ks", 1.0}});
    bad(json{{"theory", "kominis"}, {"k_s", "1"}});
    bad(json{{"theory", "kominis"}, {"k_s", -1.0}});
    bad(json{{"theory", "kominis"}, {"dt", 0.0}});
    bad(json{{"theory", "kominis"}, {"dt", 0.2}});
    bad(json{{"theory", "kominis"}, {"t_end", 0.0}});
    bad(json{{"theory", "kominis"}, {"t_end", 0.01}, {"dt", 0.02}});
    bad(json{{"theory", "kominis"}, {"n_traj", -3}});
    bad(json{{"theory", "kominis"}, {"n_traj", 2.5}});
    bad(json{{"theory", "kominis"}, {"initial", "doublet"}});
    bad(json{{"theory", "kominis"}, {"recombination", true}});
    bad(json{{"theory", "kominis"}, {"conditioning", "reacted"}});

    const auto dir = scratch_dir("config_errors");
    CHECK_THROWS_AS(RunConfig::load((dir / "missing.json").string()), ConfigError);
    write_file(dir / "broken.json", "{\"theory\": ");
    CHECK_THROWS_AS(RunConfig::load((dir / "broken.json").string()), ConfigError);
}

TEST_CASE("csv formatting and decimation")
{
    CHECK(format_value(std::nullopt) == "NA");
    CHECK(format_value(-0.0) == "0");
    CHECK(format_value(0.5) == "0.5");
    CHECK(format_value(1.0 / 3.0) == "0.333333333333");
    CHECK(format_value(1e-20) == "1e-20");

    CHECK(decimate(1).size() == 1);
    const auto small = decimate(2001);
    CHECK(small.size() == 2001);
    CHECK(small.back() == 2000);

    const auto ten = decimate(10001);
    CHECK(ten.size() == 2001);
    CHECK(ten[1] == 5);
    CHECK(ten.back() == 10000);

    const auto odd = decimate(10003);
    CHECK(odd.size() <= 2001);
    CHECK(odd.back() == 10002);
    CHECK(odd[1] == 6);

    std::ostringstream os;
    write_events(os, {{}, {{0.25, EventKind::Recombine, Channel::Singlet}},
                      {{0.5, EventKind::ProjectTriplet, std::nullopt}}});
    CHECK(os.str() == "traj_index,time,kind,channel\n1,0.25,Recombine,singlet\n2,0.5,ProjectTriplet,NA\n");
}

TEST_CASE("evolve command writes the full schema")
{
    const auto dir = scratch_dir("evolve");
    write_file(dir / "jh.json", R"({"theory": "jones-hore", "t_end": 2.0})");
    CommandOptions options;
    options.out = (dir / "jh.csv").string();
    std::ostringstream out, err;
    REQUIRE(cmd_evolve((dir / "jh.json").string(), options, out, err) == kOk);
    CHECK(out.str().empty());

    const auto csv = parse_csv(read_file(dir / "jh.csv"));
    std::string header;
    for (std::size_t i = 0; i < csv.header.size(); ++i)
        header += (i ? "," : "") + csv.header[i];
    CHECK(header == kDiagnosticHeader);
    REQUIRE(csv.rows.size() == 2001);
    for (std::size_t r = 0; r < csv.rows.size(); r += 250) {
        const double t = csv.num(r, "t");
        const DensityMatrix exact = oracle::jh_closed_form(t, 1.0);
        CHECK(std::abs(csv.num(r, "qs") - exact.mat(0, 0).real()) < 1e-9);
        CHECK(std::abs(csv.num(r, "trace") - exact.trace()) < 1e-9);
        CHECK(std::abs(csv.num(r, "info_gain") - oracle::jh_information_gain(t, 1.0)) < 1e-6);
    }

    // Kominis: no information-gain column values
    write_file(dir / "k.json", R"({"theory": "kominis", "t_end": 1.0})");
    std::ostringstream kout;
    REQUIRE(cmd_evolve((dir / "k.json").string(), CommandOptions{}, kout, err) == kOk);
    const auto k = parse_csv(kout.str());
    CHECK(k.rows.size() == 1001);
    CHECK(k.cell(500, "info_gain") == "NA");
    CHECK(k.num(1000, "trace") == doctest::Approx(1.0));
}

TEST_CASE("command exit codes and messages")
{
    const auto dir = scratch_dir("exit_codes");
    std::ostringstream out, err;

    CHECK(cmd_evolve((dir / "nope.json").string(), {}, out, err) == kConfigError);
    CHECK(err.str().rfind("config: ", 0) == 0);

    write_file(dir / "coarse.json", R"({"theory": "kominis", "dt": 0.2})");
    err.str("");
    CHECK(cmd_evolve((dir / "coarse.json").string(), {}, out, err) == kConfigError);
    CHECK(err.str().rfind("config: ", 0) == 0);

    write_file(dir / "no_traj.json", R"({"theory": "kominis", "t_end": 1.0})");
    err.str("");
    CommandOptions options;
    options.events = (dir / "e.csv").string();
    CHECK(cmd_trajectories((dir / "no_traj.json").string(), options, out, err) == kConfigError);

    // every trajectory reacts well before t = 40 at k_s = 1
    write_file(dir / "empty.json",
               R"({"theory": "jones-hore", "initial": "singlet", "t_end": 40.0, "dt": 0.01,
                   "n_traj": 20, "seed": 1, "conditioning": "non-reacted"})");
    err.str("");
    CHECK(cmd_trajectories((dir / "empty.json").string(), options, out, err) == kConfigError);
    CHECK(err.str().rfind("ensemble: ", 0) == 0);
    CHECK(err.str().find("empty from t=") != std::string::npos);

    err.str("");
    CHECK(cmd_figure(5, {}, out, err) == kConfigError);
    CHECK(err.str().rfind("config: ", 0) == 0);
}

TEST_CASE("trajectory command is thread independent")
{
    const auto dir = scratch_dir("trajectories");
    write_file(dir / "k.json", R"({"theory": "kominis", "omega": 2.0, "initial": "singlet",
        "t_end": 3.0, "n_traj": 300, "seed": 11, "recombination": "on"})");

    std::string first_csv, first_events;
    for (int threads : {1, 2, 3}) {
        CommandOptions options;
        options.out = (dir / ("out" + std::to_string(threads) + ".csv")).string();
        options.threads = threads;
        options.quiet = true;
        std::ostringstream out, err;
        REQUIRE(cmd_trajectories((dir / "k.json").string(), options, out, err) == kOk);
        CHECK(err.str().empty());
        const std::string csv = read_file(options.out);
        const std::string events = read_file(dir / ("out" + std::to_string(threads) + ".events.csv"));
        if (threads == 1) {
            first_csv = csv;
            first_events = events;
        } else {
            CHECK(csv == first_csv);
            CHECK(events == first_events);
        }
    }
    const auto events = parse_csv(first_events);
    CHECK(events.header == std::vector<std::string>{"traj_index", "time", "kind", "channel"});
    CHECK(events.rows.size() > 100);
    const auto rows = parse_csv(first_csv);
    CHECK(rows.cell(10, "info_gain") == "NA");
}

TEST_CASE("figure command writes every panel")
{
    const auto dir = scratch_dir("figures");
    CommandOptions options;
    options.out = dir.string();
    options.quiet = true;
    std::ostringstream log, err;
    for (int id : {1, 2, 3, 4, 7})
        REQUIRE(cmd_figure(id, options, log, err) == kOk);
    CHECK(err.str().empty());

    const char* files[] = {"fig1a.csv", "fig1b.csv", "fig1c.csv", "fig1d.csv", "fig1_config.json",
                           "fig2a.csv", "fig2b.csv", "fig2c.csv", "fig2_config.json",
                           "fig3a.csv", "fig3b.csv", "fig3_events.csv", "fig3_config.json",
                           "fig4.csv",  "fig4_config.json", "fig7.csv", "fig7_events.csv",
                           "fig7_config.json"};
    for (const char* f : files)
        CHECK_MESSAGE(std::filesystem::exists(dir / f), f);

    const auto d = parse_csv(read_file(dir / "fig1d.csv"));
    CHECK(d.header == std::vector<std::string>{"t", "purity"});
    CHECK(d.rows.size() == 2001);
    CHECK(d.num(2000, "t") == doctest::Approx(10.0));

    const auto c2 = parse_csv(read_file(dir / "fig2c.csv"));
    CHECK(c2.rows.size() == 1876); // stride 8 over 15001 points
    CHECK(c2.num(c2.rows.size() - 1, "t") == doctest::Approx(15.0));

    const auto f4 = parse_csv(read_file(dir / "fig4.csv"));
    CHECK(f4.header == std::vector<std::string>{"t", "svn", "info_gain"});
    CHECK(f4.num(2000, "t") == doctest::Approx(20.0));

    // 3a reacts: trace falls to zero; 3b locks into the triplet
    const auto a = parse_csv(read_file(dir / "fig3a.csv"));
    const auto b = parse_csv(read_file(dir / "fig3b.csv"));
    CHECK(a.num(a.rows.size() - 1, "trace") == 0.0);
    CHECK(b.num(b.rows.size() - 1, "trace") == 1.0);
    CHECK(b.num(b.rows.size() - 1, "qs") == 0.0);

    const json cfg = json::parse(read_file(dir / "fig7_config.json"));
    CHECK(cfg.at("theory") == "kominis");
    CHECK(cfg.at("recombination") == "on");
    CHECK(RunConfig::from_json(cfg).omega == 5.0);
}

TEST_CASE("verify command")
{
    std::ostringstream out, err;
    CHECK(cmd_verify({}, out, err) == kOk);
    CHECK(out.str().find("FAIL") == std::string::npos);

    std::ostringstream fout, ferr;
    VerifyOptions faulty;
    faulty.inject_kominis_sign_fault = true;
    CHECK(cmd_verify(faulty, fout, ferr) == kNumericError);
    CHECK(fout.str().find("FAIL") != std::string::npos);
    CHECK(ferr.str().rfind("numeric: ", 0) == 0);
}
