// SPDX-License-Identifier: Apache-2.0
//
// dofregion: exact DoF regions of the two-user MIMO broadcast channel
// Copyright (C) 2026 dofregion authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <catch_amalgamated.hpp>

#include <dofregion/cli.hpp>

#include <cstdio>
#include <filesystem>
#include <sstream>

using namespace dofregion;
using Json = nlohmann::ordered_json;

namespace
{
struct Run
{
    int status;
    std::string out, err;
};

Run run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "dofregion_cli");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = cli::run(int(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::string> point(std::string cmd, std::string a1, std::string a2, std::string m = "4",
                               std::string n1 = "2", std::string n2 = "3")
{
    return {cmd, "--m", m, "--n1", n1, "--n2", n2, "--alpha1", a1, "--alpha2", a2};
}
} // namespace

TEST_CASE("region - JSON document", "[cli]")
{
    auto r = run_cli(point("region", "4/5", "2/5"));
    REQUIRE(r.status == 0);
    auto j = Json::parse(r.out);
    REQUIRE(j["command"] == "region");
    REQUIRE(j["model"] == "imperfect");
    REQUIRE(j["config"]["alpha1"] == "4/5");
    REQUIRE(j["config"]["alpha1_decimal"] == "0.8");
    REQUIRE(j["normalized"]["case"] == "CASE1");
    REQUIRE(j["halfspaces"].size() == 5);
    REQUIRE(j["vertices"].size() == j["vertices_decimal"].size());
    REQUIRE(std::find(j["vertices"].begin(), j["vertices"].end(), Json::array({"2/5", "7/5", "8/5"})) !=
            j["vertices"].end());
}

TEST_CASE("region - exact values round-trip through JSON", "[cli]")
{
    auto r = run_cli(point("region", "1/3", "2/7", "5", "2", "4"));
    REQUIRE(r.status == 0);
    auto j = Json::parse(r.out);
    const auto expected = enumerate_vertices(region_theorem1({5, 2, 4}, {Rational(1, 3), Rational(2, 7)}));
    REQUIRE(j["vertices"].size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
    {
        const auto &v = j["vertices"][i];
        DofPoint p{Rational::parse(v[0].get<std::string>()), Rational::parse(v[1].get<std::string>()),
                   Rational::parse(v[2].get<std::string>())};
        REQUIRE(p == expected[i]);
    }
    // 1/3 has no finite decimal form
    REQUIRE(j["config"]["alpha1_decimal"].get<std::string>().front() == '~');
}

TEST_CASE("region - receiver swap is reported", "[cli]")
{
    auto j = Json::parse(run_cli(point("region", "2/5", "4/5", "4", "3", "2")).out);
    REQUIRE(j["normalized"]["receivers_swapped"] == true);
    REQUIRE(j["normalized"]["n1"] == 2);
    REQUIRE(j["normalized"]["alpha1"] == "4/5");
}

TEST_CASE("corners - verdicts", "[cli]")
{
    auto r = run_cli(point("corners", "3/5", "2/5"));
    REQUIRE(r.status == 0);
    auto j = Json::parse(r.out);
    REQUIRE(j["normalized"]["case"] == "CASE4");
    bool seen123 = false, seen234 = false;
    for (const auto &c : j["corners"])
    {
        if (c["label"] == "P123")
        {
            seen123 = true;
            REQUIRE(c["exists"] == false);
            REQUIRE_FALSE(c["condition"].get<std::string>().empty());
        }
        if (c["label"] == "P234")
        {
            seen234 = true;
            REQUIRE(c["exists"] == true);
            REQUIRE(c["point"] == Json::array({"3/10", "3/2", "3/2"}));
            REQUIRE(c["point_decimal"] == Json::array({"0.3", "1.5", "1.5"}));
        }
    }
    REQUIRE((seen123 && seen234));
}

TEST_CASE("sumdof - JSON and CSV", "[cli]")
{
    auto j = Json::parse(run_cli(point("sumdof", "0.8", "0.4")).out);
    REQUIRE(j["formula"] == "17/5");
    REQUIRE(j["lp"] == "17/5");
    REQUIRE(j["private_only"] == "17/5");
    REQUIRE(j["case"] == "CASE1");

    auto args = point("sumdof", "1/2", "1/2", "2", "1", "1");
    args.insert(args.end(), {"--format", "csv"});
    auto r = run_cli(args);
    REQUIRE(r.out == "case,formula,lp,private_only\nCASE1,3/2,3/2,3/2\n");
}

TEST_CASE("recipe - space-time corner", "[cli]")
{
    auto args = point("recipe", "3/5", "2/5");
    args.insert(args.end(), {"--label", "P234"});
    auto r = run_cli(args);
    REQUIRE(r.status == 0);
    auto j = Json::parse(r.out)["recipe"];
    REQUIRE(j["mode"] == "space-time");
    REQUIRE(j["allocation"]["rho"] == "1/4");
    REQUIRE(j["achieved"] == Json::array({"3/10", "3/2", "3/2"}));
    REQUIRE(j["dc_to_user1"] == "0");
}

TEST_CASE("recipe - label errors", "[cli]")
{
    auto args = point("recipe", "3/5", "2/5");
    args.insert(args.end(), {"--label", "P123"});
    auto r = run_cli(args);
    REQUIRE(r.status == 1);
    REQUIRE(r.err.find("--label") != std::string::npos);

    r = run_cli(point("recipe", "3/5", "2/5"));
    REQUIRE(r.status == 1);
    REQUIRE(r.err.find("--label") != std::string::npos);
}

TEST_CASE("delayed - region and corners", "[cli]")
{
    auto j = Json::parse(run_cli(point("delayed", "1/2", "1/2", "2", "1", "1")).out);
    REQUIRE(j["model"] == "delayed");
    bool found = false;
    for (const auto &c : j["corners"])
        if (c["label"] == "P12" && c["exists"] == true)
            found = c["point"] == Json::array({"3/5", "3/5", "0"});
    REQUIRE(found);

    auto args = point("region", "1/2", "1/2", "2", "1", "1");
    args.insert(args.end(), {"--model", "delayed"});
    REQUIRE(Json::parse(run_cli(args).out)["vertices"] == j["vertices"]);
}

TEST_CASE("audit - exit status", "[cli]")
{
    auto ok = run_cli(point("audit", "4/5", "2/5"));
    REQUIRE(ok.status == 0);
    auto j = Json::parse(ok.out);
    REQUIRE(j["audits"].size() == 5);
    for (const auto &a : j["audits"])
        REQUIRE(a["passed"] == true);

    auto bad = run_cli(point("audit", "1/4", "1/4", "4", "3", "3"));
    REQUIRE(bad.status == 2);
    REQUIRE(Json::parse(bad.out)["audits"][2]["passed"] == false);
}

TEST_CASE("sweep - CSV is deterministic", "[cli]")
{
    const std::vector<std::string> args{"sweep", "--m", "2", "--n1", "1", "--n2", "1", "--grid-step", "1/4",
                                        "--format", "csv"};
    auto a = run_cli(args), b = run_cli(args);
    REQUIRE(a.status == 0);
    REQUIRE(a.out == b.out);
    std::istringstream lines(a.out);
    std::string first, second;
    std::getline(lines, first);
    std::getline(lines, second);
    REQUIRE(first == "alpha1,alpha2,case,sum_dof,sum_dof_lp,corner_count,audits_passed,delayed_contained");
    REQUIRE(second.rfind("0,0,", 0) == 0);
    REQUIRE(std::count(a.out.begin(), a.out.end(), '\n') == 26);
}

TEST_CASE("sweep - JSON rows", "[cli]")
{
    auto j = Json::parse(run_cli({"sweep", "--m", "4", "--n1", "2", "--n2", "3", "--grid-step", "1/2"}).out);
    REQUIRE(j["grid_step"] == "1/2");
    REQUIRE(j["rows"].size() == 9);
    REQUIRE_FALSE(j.contains("normalized"));
}

TEST_CASE("usage errors name the offending flag", "[cli]")
{
    auto r = run_cli(point("region", "abc", "0"));
    REQUIRE(r.status == 1);
    REQUIRE(r.err.find("--alpha1") != std::string::npos);

    r = run_cli(point("region", "0", "3/2"));
    REQUIRE(r.status == 1);
    REQUIRE(r.err.find("--alpha2") != std::string::npos);

    r = run_cli(point("region", "0", "0", "0"));
    REQUIRE(r.status == 1);
    REQUIRE(r.err.find("--m") != std::string::npos);

    r = run_cli({"sweep", "--m", "2", "--n1", "1", "--n2", "1", "--grid-step", "2/5"});
    REQUIRE(r.status == 1);
    REQUIRE(r.err.find("--grid-step") != std::string::npos);

    auto args = point("region", "0", "0");
    args.insert(args.end(), {"--model", "perfect"});
    r = run_cli(args);
    REQUIRE(r.status == 1);
    REQUIRE(r.err.find("--model") != std::string::npos);

    r = run_cli({"region", "--m", "2"});
    REQUIRE(r.status == 1);
    r = run_cli({"frobnicate"});
    REQUIRE(r.status == 1);
    REQUIRE(run_cli({"--help"}).status == 0);
}

TEST_CASE("--output writes to a file", "[cli]")
{
    const auto path = std::filesystem::temp_directory_path() / "dofregion_cli_test.json";
    auto args = point("sumdof", "4/5", "2/5");
    args.insert(args.end(), {"--output", path.string()});
    auto r = run_cli(args);
    REQUIRE(r.status == 0);
    REQUIRE(r.out.empty());
    std::ifstream in(path);
    REQUIRE(Json::parse(in)["formula"] == "17/5");
    in.close();
    std::filesystem::remove(path);

    args = point("sumdof", "4/5", "2/5");
    args.insert(args.end(), {"--output", "/nonexistent-dir/x.json"});
    REQUIRE(run_cli(args).status == 1);
}
