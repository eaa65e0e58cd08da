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

#ifndef DOFREGION_ALLOCATION_HPP
#define DOFREGION_ALLOCATION_HPP

#include <dofregion/corners.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <variant>

namespace dofregion
{

// Power exponents of the zero-forced unicast streams: A1 for user 1 (in
// [0, alpha2]) and A2 for user 2 (in [0, 1])
struct PowerAllocation
{
    Rational A1, A2;

    friend bool operator==(const PowerAllocation &, const PowerAllocation &) = default;
};

// Time sharing: a fraction rho of the slots uses phase1, the rest phase2
struct SpaceTimeAllocation
{
    Rational rho;
    PowerAllocation phase1, phase2;

    friend bool operator==(const SpaceTimeAllocation &, const SpaceTimeAllocation &) = default;
};

// dc1 / dc2: what receivers 1 / 2 can decode of the composite multicast
// symbol (common message plus split-off parts); dp*_max: unicast DoF
struct AchievabilityBounds
{
    Rational dc1, dc2, dp1_max, dp2_max;

    Rational budget() const { return std::min(dc1, dc2); }
    friend bool operator==(const AchievabilityBounds &, const AchievabilityBounds &) = default;
};

enum class RecipeMode
{
    Single,
    SpaceTime
};

// Achieved tuple: (dp1_max + dc_to_user1, dp2_max + dc_to_user2, d0)
struct Recipe
{
    std::variant<PowerAllocation, SpaceTimeAllocation> allocation;
    Rational d0, dc_to_user1, dc_to_user2;

    RecipeMode mode() const { return allocation.index() == 0 ? RecipeMode::Single : RecipeMode::SpaceTime; }
};

class InfeasibleRecipe : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline void validate(const CsitQuality &q, const PowerAllocation &a)
{
    if (a.A1 < 0 || a.A1 > q.alpha2)
        throw std::invalid_argument("A1 = " + a.A1.str() + " lies outside [0, alpha2 = " + q.alpha2.str() + "]");
    if (a.A2 < 0 || a.A2 > 1)
        throw std::invalid_argument("A2 = " + a.A2.str() + " lies outside [0, 1]");
}

inline AchievabilityBounds bounds_single(const NormalizedConfig &n, const CsitQuality &q, const PowerAllocation &a)
{
    validate(q, a);
    const Rational e = pos(a.A2 - q.alpha1);
    AchievabilityBounds r;
    r.dc1 = n.n1 - n.null2() * std::max(a.A1, e) - n.overlap() * e;
    r.dp1_max = n.null2() * pos(a.A1 - e);
    r.dc2 = n.n2 - n.null1() * a.A2 - n.overlap() * e;
    r.dp2_max = n.null1() * a.A2 + n.overlap() * e;
    return r;
}

inline Rational sum_dof_single(const NormalizedConfig &n, const CsitQuality &q, const PowerAllocation &a)
{
    const auto r = bounds_single(n, q, a);
    const Rational e = pos(a.A2 - q.alpha1);
    const Rational s1 = n.n1 + n.null1() * a.A2 - n.null2() * e;
    const Rational s2 = n.n2 + n.null2() * pos(a.A1 - e);
    const Rational s = std::min(s1, s2);
    if (s != r.dp1_max + r.dp2_max + r.budget())
        throw std::logic_error("sum_dof_single: closed form " + s.str() + " disagrees with the bound system");
    return s;
}

inline PowerAllocation optimal_exponents_case1(const NormalizedConfig &n, const CsitQuality &q)
{
    if (classify_case(n, q) != CaseId::Case1)
        throw std::invalid_argument("optimal_exponents_case1: configuration is " + to_string(classify_case(n, q)));
    Rational a2 = (n.gap() + n.null2() * q.alpha2) / n.null1();
    if (n.gap().sign() > 0)
        a2 = std::max(a2, 1 - n.null2() / n.gap() * q.alpha1);
    else if (q.alpha1.sign() == 0)
        a2 = 1;
    return {q.alpha2, a2};
}

inline SpaceTimeAllocation space_time_allocation(const NormalizedConfig &n, const CsitQuality &q)
{
    const CaseId k = classify_case(n, q);
    if (k != CaseId::Case4)
        throw std::invalid_argument("space_time_allocation: configuration is " + to_string(k));
    const Rational delta = case4_delta(n, q);
    if (delta.sign() == 0)
        throw std::domain_error("space_time_allocation: (M-N2)a2 + (N2-N1)(1-a1) vanishes");
    Rational rho = (n.gap() - n.null1() * q.alpha1 + n.null2() * q.alpha2) / delta;
    rho = std::clamp(rho, Rational(0), Rational(1));
    return {rho, {q.alpha2, 1}, {q.alpha2, q.alpha1}};
}

// Each receiver's bounds are the rho-weighted average of the two phases
inline AchievabilityBounds bounds_space_time(const NormalizedConfig &n, const CsitQuality &q,
                                             const SpaceTimeAllocation &st)
{
    if (st.rho < 0 || st.rho > 1)
        throw std::invalid_argument("rho = " + st.rho.str() + " lies outside [0, 1]");
    const auto x = bounds_single(n, q, st.phase1);
    const auto y = bounds_single(n, q, st.phase2);
    const Rational r = st.rho, s = 1 - st.rho;
    return {r * x.dc1 + s * y.dc1, r * x.dc2 + s * y.dc2, r * x.dp1_max + s * y.dp1_max,
            r * x.dp2_max + s * y.dp2_max};
}

inline AchievabilityBounds recipe_bounds(const Recipe &r, const NormalizedConfig &n, const CsitQuality &q)
{
    if (const auto *a = std::get_if<PowerAllocation>(&r.allocation))
        return bounds_single(n, q, *a);
    return bounds_space_time(n, q, std::get<SpaceTimeAllocation>(r.allocation));
}

// Result is in normalized coordinates, like the corner catalog
inline DofPoint evaluate_recipe(const Recipe &r, const NormalizedConfig &n, const CsitQuality &q)
{
    const auto b = recipe_bounds(r, n, q);
    if (r.d0 < 0 || r.dc_to_user1 < 0 || r.dc_to_user2 < 0)
        throw InfeasibleRecipe("recipe assigns a negative multicast share");
    const Rational used = r.d0 + r.dc_to_user1 + r.dc_to_user2;
    if (used > b.dc1)
        throw InfeasibleRecipe("d0 + dc = " + used.str() + " exceeds dc1 = " + b.dc1.str() + " at receiver 1");
    if (used > b.dc2)
        throw InfeasibleRecipe("d0 + dc = " + used.str() + " exceeds dc2 = " + b.dc2.str() + " at receiver 2");
    return {b.dp1_max + r.dc_to_user1, b.dp2_max + r.dc_to_user2, r.d0};
}

namespace detail
{
enum class Spend
{
    None,
    Common,
    User1,
    User2
};

inline Recipe spend_budget(Recipe r, const NormalizedConfig &n, const CsitQuality &q, Spend how)
{
    const Rational budget = recipe_bounds(r, n, q).budget();
    switch (how)
    {
    case Spend::Common:
        r.d0 = budget;
        break;
    case Spend::User1:
        r.dc_to_user1 = budget;
        break;
    case Spend::User2:
        r.dc_to_user2 = budget;
        break;
    case Spend::None:
        break;
    }
    return r;
}
} // namespace detail

// Exponents and multicast split reaching an existing catalog corner
inline Recipe recipe_for_corner(const std::string &label, const NormalizedConfig &n, const CsitQuality &q)
{
    using detail::Spend;
    const auto catalog = corner_catalog(n, q);
    auto it = std::find_if(catalog.begin(), catalog.end(), [&](const CornerPoint &c) { return c.label == label; });
    if (it == catalog.end())
        throw std::invalid_argument("unknown corner label '" + label + "'");
    if (!it->exists)
        throw std::invalid_argument("corner " + label + " does not exist here: " + it->condition);

    auto single = [&](Rational A1, Rational A2, Spend how)
    { return detail::spend_budget(Recipe{PowerAllocation{A1, A2}, 0, 0, 0}, n, q, how); };

    if (label == "O")
        return single(0, 0, Spend::None);
    if (label == "P1")
        return single(0, 0, Spend::User1);
    if (label == "P0")
        return single(0, 0, Spend::Common);
    if (label == "P2")
        return single(0, 1, Spend::User2);

    const CaseId k = classify_case(n, q);
    const Rational a = n.null1(), b = n.null2(), c = n.gap();
    const Rational a1 = q.alpha1, a2 = q.alpha2;

    if (label == "P12")
        return single(0, c / a, Spend::Common);
    if (label == "P14'")
        return single(0, a1, Spend::Common);
    if (label == "P24")
        return single(0, 1 - b / c * a1, Spend::Common);
    if (label == "P124" || label == "P14")
    {
        Rational A1 = (b.sign() > 0 && a * a1 >= c) ? (a * a1 - c) / b : Rational(0);
        return single(A1, a1, label == "P124" ? Spend::Common : Spend::User1);
    }

    const Rational z = alpha0(n, q);
    const Spend how = label == "P13" || label == "P34" ? Spend::User1
                      : label == "P23"                 ? Spend::User2
                                                       : Spend::Common;
    if (label == "P123" || label == "P13" || (label == "P23" && k == CaseId::Case1))
        return single(z, (c + b * z) / a, how);
    if (label == "P234" || label == "P34" || label == "P23")
    {
        if (k == CaseId::Case4)
        {
            Recipe r{space_time_allocation(n, q), 0, 0, 0};
            return detail::spend_budget(r, n, q, how);
        }
        return single(a2, (c + b * a2) / a, how);
    }
    throw std::invalid_argument("no recipe for corner '" + label + "'");
}

} // namespace dofregion

#endif
