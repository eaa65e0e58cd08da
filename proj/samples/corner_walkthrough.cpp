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

// Walks through one parameter point: region, corner catalog, and the recipe
// that reaches each existing corner.
//
//   corner_walkthrough [M N1 N2 alpha1 alpha2]      (default: 4 2 3 3/5 2/5)

#include <dofregion/dofregion.hpp>

#include <iostream>
#include <string>

using namespace dofregion;

int main(int argc, char **argv)
{
    AntennaConfig c(4, 2, 3);
    CsitQuality q(Rational(3, 5), Rational(2, 5));
    if (argc == 6)
    {
        c = AntennaConfig(std::stoi(argv[1]), std::stoi(argv[2]), std::stoi(argv[3]));
        q = CsitQuality(Rational::parse(argv[4]), Rational::parse(argv[5]));
    }

    auto [n, nq] = normalize(c, q);
    std::cout << "config " << c.str() << ", alpha = (" << q.alpha1 << ", " << q.alpha2 << ")\n";
    std::cout << "case " << to_string(classify_case(n, nq)) << "\n\n";

    std::cout << "region:\n";
    for (const auto &h : region_theorem1(c, q).halfspaces)
        std::cout << "  " << h.label << ": " << h.str() << "\n";

    std::cout << "\ncorners:\n";
    for (const auto &cp : corner_catalog(n, nq))
    {
        std::cout << "  " << cp.label << (cp.exists ? "  " : "  (absent) ");
        if (cp.point)
            std::cout << n.to_original(*cp.point).str();
        if (!cp.exists && !cp.condition.empty())
            std::cout << "  fails: " << cp.condition;
        std::cout << "\n";
        if (!cp.exists)
            continue;
        const Recipe r = recipe_for_corner(cp.label, n, nq);
        std::cout << "      ";
        if (const auto *a = std::get_if<PowerAllocation>(&r.allocation))
            std::cout << "A1 = " << a->A1 << ", A2 = " << a->A2;
        else
            std::cout << "space-time, rho = " << std::get<SpaceTimeAllocation>(r.allocation).rho;
        std::cout << ", d0 = " << r.d0 << ", dc -> (" << r.dc_to_user1 << ", " << r.dc_to_user2 << ")\n";
    }

    std::cout << "\nsum-DoF " << sum_dof_formula(n, nq) << "\n";
    return 0;
}
