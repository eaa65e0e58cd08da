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

#ifndef DOFREGION_ANALYSIS_HPP
#define DOFREGION_ANALYSIS_HPP

#include <dofregion/allocation.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace dofregion
{

struct Mismatch
{
    std::string subject, expected, actual;
};

struct AuditReport
{
    std::string name;
    AntennaConfig config;
    CsitQuality csit;
    std::vector<Mismatch> mismatches;

    bool passed() const { return mismatches.empty(); }
};

// Closed-form sum-DoF, one branch per case threshold
inline Rational sum_dof_formula(const NormalizedConfig &n, const CsitQuality &q)
{
    const Rational n1 = n.n1, n2 = n.n2, a = n.null1(), b = n.null2(), c = n.gap();
    const Rational &a1 = q.alpha1, &a2 = q.alpha2;
    switch (classify_case(n, q))
    {
    case CaseId::Case1:
        return n2 + b * a2;
    case CaseId::Case2:
    case CaseId::Case3:
        return std::max(n1 + a * a1, n2 + b * (-c / a + c / a * a2 + a1));
    case CaseId::Case4:
        return std::max(b * b * a1 * a2 / case4_delta(n, q) + n2, a * a1 + n1);
    case CaseId::Degenerate:
        break;
    }
    return std::min(n.m, n.n2);
}

inline Rational sum_dof_lp(const AntennaConfig &c, const CsitQuality &q)
{
    return maximize_linear(region_theorem1(c, q), {1, 1, 1});
}

// Best d1 + d2 with the common message switched off
inline Rational sum_dof_private(const AntennaConfig &c, const CsitQuality &q)
{
    Polytope p = region_theorem1(c, q);
    p.halfspaces.emplace_back(0, 0, 1, 0, "no common message");
    return maximize_linear(p, {1, 1, 0});
}

namespace detail
{
inline const Halfspace *find_face(const std::vector<Halfspace> &rows, const std::string &label)
{
    for (const auto &h : rows)
        if (h.label == label)
            return &h;
    return nullptr;
}

inline void compare_vertex_sets(AuditReport &r, const std::vector<DofPoint> &expected,
                                const std::vector<DofPoint> &actual, const std::string &what)
{
    for (const auto &v : expected)
        if (!std::binary_search(actual.begin(), actual.end(), v))
            r.mismatches.push_back({"vertex " + v.str(), "present in " + what, "missing"});
    for (const auto &v : actual)
        if (!std::binary_search(expected.begin(), expected.end(), v))
            r.mismatches.push_back({"vertex " + v.str(), "absent", "reported by " + what});
}
} // namespace detail

// Labeled catalog against brute-force vertex enumeration
inline AuditReport audit_corners(const AntennaConfig &c, const CsitQuality &q)
{
    AuditReport r{"corners", c, q, {}};
    auto [n, nq] = normalize(c, q);
    const auto oracle = enumerate_vertices(region_theorem1(c, q));
    const auto catalog = corner_catalog(n, nq);

    // the normalized config is its own normalization, so face labels line up
    const auto rows = region_theorem1(AntennaConfig(n.m, n.n1, n.n2), nq).constraints();
    const Polytope local{std::vector<Halfspace>(rows.begin(), rows.end() - 3)};

    std::vector<DofPoint> claimed;
    for (const auto &cp : catalog)
        if (cp.exists)
            claimed.push_back(n.to_original(*cp.point));
    std::sort(claimed.begin(), claimed.end());
    claimed.erase(std::unique(claimed.begin(), claimed.end()), claimed.end());
    detail::compare_vertex_sets(r, oracle, claimed, "the corner catalog");

    for (const auto &cp : catalog)
    {
        const Halfspace *f[3];
        for (int i = 0; i < 3; ++i)
            if (!(f[i] = detail::find_face(rows, cp.faces[i])))
                r.mismatches.push_back({cp.label, "face " + cp.faces[i] + " in the region", "no such face"});
        if (!f[0] || !f[1] || !f[2])
            continue;
        const bool singular = !independent(*f[0], *f[1], *f[2]);
        if (cp.exists)
        {
            const DofPoint &p = *cp.point;
            if (singular)
                r.mismatches.push_back({cp.label, "independent defining faces", "singular"});
            for (auto *h : f)
                if (!h->active(p))
                    r.mismatches.push_back({cp.label, h->label + " active at " + p.str(), "slack"});
        }
        else if (cp.point && !singular && contains(local, *cp.point) &&
                 !std::binary_search(claimed.begin(), claimed.end(), n.to_original(*cp.point)))
        {
            r.mismatches.push_back({cp.label, "infeasible (" + cp.condition + ")", "feasible at " + cp.point->str()});
        }
    }
    return r;
}

// Intersection of both relaxed outer bounds against the achievable region
inline AuditReport audit_converse(const AntennaConfig &c, const CsitQuality &q)
{
    AuditReport r{"converse", c, q, {}};
    const auto outer = enumerate_vertices(combine_outer(outer_d1(c, q), outer_d2(c, q)));
    detail::compare_vertex_sets(r, enumerate_vertices(region_theorem1(c, q)), outer, "the combined outer bound");
    return r;
}

inline AuditReport audit_containment_delayed(const AntennaConfig &c, const CsitQuality &q)
{
    AuditReport r{"delayed containment", c, q, {}};
    const Polytope full = region_theorem1(c, q);
    for (const auto &v : enumerate_vertices(region_delayed(c, q)))
        if (!contains(full, v))
            r.mismatches.push_back({"delayed vertex " + v.str(), "inside the imperfect-CSIT region", "outside"});
    return r;
}

// Delayed-CSIT corner list against the oracle
inline AuditReport audit_delayed_corners(const AntennaConfig &c, const CsitQuality &q)
{
    AuditReport r{"delayed corners", c, q, {}};
    std::vector<DofPoint> claimed;
    for (const auto &cp : delayed_corners(c, q))
        if (cp.exists)
            claimed.push_back(*cp.point);
    std::sort(claimed.begin(), claimed.end());
    claimed.erase(std::unique(claimed.begin(), claimed.end()), claimed.end());
    detail::compare_vertex_sets(r, enumerate_vertices(region_delayed(c, q)), claimed, "delayed_corners");
    return r;
}

// Every existing corner is reached exactly by its recipe, strictly positive
// corners without splitting the private messages
inline AuditReport audit_recipes(const AntennaConfig &c, const CsitQuality &q)
{
    AuditReport r{"recipes", c, q, {}};
    auto [n, nq] = normalize(c, q);
    for (const auto &cp : corner_catalog(n, nq))
    {
        if (!cp.exists)
            continue;
        try
        {
            const Recipe rec = recipe_for_corner(cp.label, n, nq);
            const DofPoint got = evaluate_recipe(rec, n, nq);
            if (got != *cp.point)
                r.mismatches.push_back({cp.label, cp.point->str(), got.str()});
            const bool positive = cp.label == "P123" || cp.label == "P124" || cp.label == "P234";
            if (positive && (rec.dc_to_user1.sign() != 0 || rec.dc_to_user2.sign() != 0))
                r.mismatches.push_back({cp.label, "no private-message split", "dc split is nonzero"});
        }
        catch (const std::exception &e)
        {
            r.mismatches.push_back({cp.label, "a feasible recipe", e.what()});
        }
    }
    return r;
}

inline std::vector<AuditReport> run_audits(const AntennaConfig &c, const CsitQuality &q)
{
    return {audit_corners(c, q), audit_converse(c, q), audit_containment_delayed(c, q), audit_recipes(c, q),
            audit_delayed_corners(c, q)};
}

struct SweepRow
{
    Rational alpha1, alpha2;
    CaseId which;
    Rational sum_dof_formula, sum_dof_lp;
    int corner_count = 0;
    bool audits_passed = false;
    bool delayed_contained = false;
};

// Grid {0, step, 2 step, ..., 1}^2 with alpha1 as the outer index
inline std::vector<CsitQuality> uniform_grid(const Rational &step)
{
    if (step <= 0 || step > 1 || (1 / step).den() != 1)
        throw std::invalid_argument("grid step " + step.str() + " does not divide 1");
    const std::int64_t k = (1 / step).num();
    std::vector<CsitQuality> grid;
    for (std::int64_t i = 0; i <= k; ++i)
        for (std::int64_t j = 0; j <= k; ++j)
            grid.emplace_back(Rational(i, k), Rational(j, k));
    return grid;
}

inline SweepRow sweep_point(const AntennaConfig &c, const CsitQuality &q)
{
    auto [n, nq] = normalize(c, q);
    SweepRow row;
    row.alpha1 = q.alpha1;
    row.alpha2 = q.alpha2;
    row.which = classify_case(n, nq);
    row.sum_dof_formula = sum_dof_formula(n, nq);
    row.sum_dof_lp = sum_dof_lp(c, q);
    row.corner_count = int(enumerate_vertices(region_theorem1(c, q)).size());
    row.audits_passed = audit_corners(c, q).passed() && audit_converse(c, q).passed() &&
                        audit_recipes(c, q).passed() && audit_delayed_corners(c, q).passed() &&
                        row.sum_dof_formula == row.sum_dof_lp;
    row.delayed_contained = audit_containment_delayed(c, q).passed();
    return row;
}

inline std::vector<SweepRow> sweep(const AntennaConfig &c, const std::vector<CsitQuality> &grid)
{
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (const auto &q : grid)
        rows.push_back(sweep_point(c, q));
    return rows;
}

} // namespace dofregion

#endif
