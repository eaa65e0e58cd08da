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

#include <dofregion/analysis.hpp>

#include <algorithm>

using namespace dofregion;

namespace
{
Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

Rational formula(AntennaConfig c, Rational a1, Rational a2)
{
    auto [n, q] = normalize(c, {a1, a2});
    return sum_dof_formula(n, q);
}
} // namespace

TEST_CASE("sum_dof_formula - examples", "[analysis]")
{
    REQUIRE(formula({4, 2, 3}, R(4, 5), R(2, 5)) == R(17, 5));
    REQUIRE(formula({2, 1, 1}, R(1, 2), R(1, 2)) == R(3, 2));
    REQUIRE(formula({2, 1, 1}, 0, 0) == 1);
    REQUIRE(formula({2, 1, 1}, 1, 1) == 2);
    REQUIRE(formula({4, 2, 3}, 0, 0) == 3);
    REQUIRE(formula({4, 2, 3}, 1, 1) == 4);
    REQUIRE(formula({2, 2, 2}, R(1, 3), R(2, 3)) == 2);
    REQUIRE(formula({4, 2, 3}, R(3, 5), R(2, 5)) == formula({4, 3, 2}, R(2, 5), R(3, 5)));
}

TEST_CASE("sum_dof_lp and sum_dof_private - examples", "[analysis]")
{
    REQUIRE(sum_dof_lp({4, 2, 3}, {R(4, 5), R(2, 5)}) == R(17, 5));
    REQUIRE(sum_dof_private({4, 2, 3}, {R(4, 5), R(2, 5)}) == R(17, 5));
    REQUIRE(sum_dof_lp({4, 2, 3}, {R(3, 5), R(2, 5)}) == sum_dof_private({4, 2, 3}, {R(3, 5), R(2, 5)}));
}

TEST_CASE("run_audits - all pass at representative points", "[analysis]")
{
    const std::vector<std::pair<AntennaConfig, CsitQuality>> points{
        {{4, 2, 3}, {R(4, 5), R(2, 5)}}, {{4, 2, 3}, {R(3, 5), R(2, 5)}}, {{4, 2, 3}, {R(3, 5), R(1, 2)}},
        {{4, 2, 3}, {R(2, 5), R(4, 5)}}, {{5, 2, 4}, {R(1, 10), R(1, 10)}}, {{2, 1, 1}, {R(1, 2), R(1, 2)}},
        {{2, 2, 2}, {R(1, 2), R(1, 2)}}, {{4, 3, 2}, {R(2, 5), R(3, 5)}}};
    for (const auto &[c, q] : points)
        for (const auto &r : run_audits(c, q))
        {
            CAPTURE(c.str(), q.alpha1, q.alpha2, r.name);
            REQUIRE(r.passed());
        }
}

TEST_CASE("run_audits - report names and order", "[analysis]")
{
    auto reports = run_audits({4, 2, 3}, {R(1, 2), R(1, 2)});
    REQUIRE(reports.size() == 5);
    REQUIRE(reports[0].name == "corners");
    REQUIRE(reports[1].name == "converse");
    REQUIRE(reports[2].name == "delayed containment");
    REQUIRE(reports[3].name == "recipes");
    REQUIRE(reports[4].name == "delayed corners");
}

TEST_CASE("audit_containment_delayed - documented counterexample", "[analysis]")
{
    // The delayed region sticks out of the imperfect region here: (5/3, 5/3, 0) has sum 10/3 > 13/4
    const AntennaConfig c{4, 3, 3};
    const CsitQuality q{R(1, 4), R(1, 4)};
    auto r = audit_containment_delayed(c, q);
    REQUIRE_FALSE(r.passed());
    const std::string witness = "delayed vertex " + DofPoint{R(5, 3), R(5, 3), 0}.str();
    REQUIRE(std::any_of(r.mismatches.begin(), r.mismatches.end(),
                        [&](const Mismatch &m) { return m.subject == witness; }));
    REQUIRE(sum_dof_lp(c, q) == R(13, 4));
    REQUIRE_FALSE(contains(region_theorem1(c, q), DofPoint{R(5, 3), R(5, 3), 0}));
}

TEST_CASE("audit_containment_delayed - figure parameter sets", "[analysis]")
{
    for (auto c : {AntennaConfig{2, 1, 1}, AntennaConfig{4, 2, 3}})
        for (auto q : {CsitQuality{R(1, 2), R(1, 2)}, CsitQuality{R(1, 4), R(3, 4)}})
            REQUIRE(audit_containment_delayed(c, q).passed());
}

TEST_CASE("uniform_grid - shape and errors", "[analysis]")
{
    auto g = uniform_grid(R(1, 4));
    REQUIRE(g.size() == 25);
    REQUIRE(g[1].alpha1 == 0);
    REQUIRE(g[1].alpha2 == R(1, 4));
    REQUIRE(g[5].alpha1 == R(1, 4));
    REQUIRE(uniform_grid(1).size() == 4);
    REQUIRE_THROWS_AS(uniform_grid(R(2, 5)), std::invalid_argument);
    REQUIRE_THROWS_AS(uniform_grid(0), std::invalid_argument);
    REQUIRE_THROWS_AS(uniform_grid(R(3, 2)), std::invalid_argument);
}

TEST_CASE("sweep - diagonal of the symmetric two-antenna setup", "[analysis]")
{
    const std::vector<Rational> expected{1, R(5, 4), R(3, 2), R(7, 4), 2};
    for (int i = 0; i <= 4; ++i)
    {
        auto row = sweep_point({2, 1, 1}, {R(i, 4), R(i, 4)});
        REQUIRE(row.sum_dof_formula == expected[i]);
        REQUIRE(row.sum_dof_lp == expected[i]);
        REQUIRE(row.audits_passed);
    }
    REQUIRE(sweep({2, 1, 1}, {}).empty());
}

TEST_CASE("sweep - full audits on an 11 x 11 grid", "[analysis]")
{
    auto rows = sweep({4, 2, 3}, uniform_grid(R(1, 10)));
    REQUIRE(rows.size() == 121);
    for (const auto &row : rows)
    {
        CAPTURE(row.alpha1, row.alpha2);
        REQUIRE(row.audits_passed);
        REQUIRE(row.sum_dof_formula == row.sum_dof_lp);
        REQUIRE(row.corner_count >= 4);
    }
}

TEST_CASE("Property - hybrid messages do not raise the sum-DoF", "[analysis][property]")
{
    for (auto c : {AntennaConfig{2, 1, 1}, AntennaConfig{3, 2, 2}, AntennaConfig{4, 2, 3}, AntennaConfig{5, 2, 4},
                   AntennaConfig{6, 2, 3}, AntennaConfig{4, 3, 2}})
        for (const auto &q : uniform_grid(R(1, 10)))
        {
            CAPTURE(c.str(), q.alpha1, q.alpha2);
            REQUIRE(sum_dof_lp(c, q) == sum_dof_private(c, q));
        }
}
