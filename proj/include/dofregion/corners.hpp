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

#ifndef DOFREGION_CORNERS_HPP
#define DOFREGION_CORNERS_HPP

#include <dofregion/regions.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dofregion
{

// Labeled candidate vertex. `point` is absent when the defining faces have no
// unique intersection; `faces` names the three constraints meeting there
// (labels as in Polytope::constraints()).
struct CornerPoint
{
    std::string label;
    std::optional<DofPoint> point;
    bool exists = false;
    std::string condition;
    std::array<std::string, 3> faces;
};

namespace detail
{
struct Verdict
{
    bool ok = true;
    std::string text;
};

inline Verdict le(const Rational &lhs, const Rational &rhs, const std::string &what)
{
    return {lhs <= rhs, what + " [" + lhs.str() + " <= " + rhs.str() + "]"};
}

inline Verdict lt(const Rational &lhs, const Rational &rhs, const std::string &what)
{
    return {lhs < rhs, what + " [" + lhs.str() + " < " + rhs.str() + "]"};
}

inline Verdict operator&&(const Verdict &x, const Verdict &y)
{
    if (x.text.empty())
        return y;
    if (y.text.empty())
        return x;
    return {x.ok && y.ok, x.text + " and " + y.text};
}

inline Verdict never(const std::string &why) { return {false, why}; }

const std::string D1 = "d1 >= 0", D2 = "d2 >= 0", D0 = "d0 >= 0";

// Symbols shared by every formula, in normalized coordinates
struct Terms
{
    Rational n1, n2, a, b, c, k, a1, a2, a0, s, sum;
    CaseId which;

    Terms(const NormalizedConfig &n, const CsitQuality &q)
        : n1(n.n1), n2(n.n2), a(n.null1()), b(n.null2()), c(n.gap()), k(n.overlap()),
          a1(q.alpha1), a2(q.alpha2), which(classify_case(n, q))
    {
        a0 = alpha0(n, q);
        s = b * a0;
        sum = n2 + s;
    }

    Rational delta() const { return b * a2 + c * (1 - a1); }
};

// Intersections of the faces written with s = (M-N2) alpha0; valid in every case
struct GenericCorners
{
    const Terms &t;

    DofPoint p123() const { return {t.s, t.c + t.s, t.n1 - t.s}; }
    DofPoint p13() const { return {t.n1, t.c + t.s, 0}; }
    DofPoint p23() const { return {t.s, t.n2, 0}; }
    DofPoint p12() const { return {0, t.c, t.n1}; }
    DofPoint p124() const { return {t.a * t.a1 - t.c, t.a * t.a1, t.n2 - t.a * t.a1}; }
    DofPoint p14() const { return {t.n1, t.a * t.a1, 0}; }
    DofPoint p14p() const { return {0, t.a * t.a1, t.n1}; }
    std::optional<DofPoint> p234() const
    {
        if (t.c.sign() == 0)
            return std::nullopt;
        Rational d0 = (t.n1 * t.a * t.a1 - t.n2 * t.s) / t.c;
        return DofPoint{t.s, t.n2 - d0, d0};
    }
    std::optional<DofPoint> p24() const
    {
        if (t.c.sign() == 0)
            return std::nullopt;
        Rational d0 = t.a * t.n1 / t.c * t.a1;
        return DofPoint{0, t.n2 - d0, d0};
    }
    std::optional<DofPoint> p34() const
    {
        if (t.c.sign() == 0)
            return std::nullopt;
        Rational d1 = t.n1 * (t.a * t.a1 - t.s) / t.c;
        return DofPoint{d1, t.sum - d1, 0};
    }
};

// Closed forms exactly as printed for CASE2/CASE3 (common denominator M-N1)
struct Case2Corners
{
    const Terms &t;

    DofPoint p234() const
    {
        const Rational &a = t.a, &b = t.b, &c = t.c, &n1 = t.n1, &n2 = t.n2, &a1 = t.a1, &a2 = t.a2;
        const Rational m = n2 + b;
        return {b * (n1 - n2 + a * a1 + c * a2) / a,
                ((m * m + n1 * n1 - 2 * m * n1 - m * n2 + n1 * n2) * a1 + (m * n2 - n2 * n2) * a2 + n2 * n2 - n1 * n2) / a,
                ((2 * m * n1 + m * n2 - n1 * n2 - m * m - n1 * n1) * a1 + (n2 * n2 - m * n2) * a2 + m * n2 - n2 * n2) / a};
    }
    DofPoint p34() const
    {
        const Rational &a = t.a, &b = t.b, &c = t.c, &n1 = t.n1, &n2 = t.n2, &a1 = t.a1, &a2 = t.a2;
        return {n1 * a1 - n1 * b / a * a2 + n1 * b / a, -t.k * a1 + n2 * b / a * a2 + n2 * c / a, 0};
    }
    DofPoint p23() const
    {
        const Rational &a = t.a, &b = t.b, &c = t.c;
        return {b * t.a1 + b * c / a * t.a2 - b * c / a, t.n2, 0};
    }
};

// Closed forms exactly as printed for CASE4 (common denominator Delta)
struct Case4Corners
{
    const Terms &t;

    Rational shared_d2() const
    {
        const Rational &a = t.a, &b = t.b, &n1 = t.n1, &n2 = t.n2, &a1 = t.a1, &a2 = t.a2;
        const Rational m = n2 + b;
        return (a * n1 * a1 * a1 + (b * (m - n1 - n2) * a2 + n1 * n1 - n2 * n2 - m * n1 + n1 * n2) * a1 +
                b * n2 * a2 + n2 * n2 - n1 * n2) /
               t.delta();
    }
    Rational lead() const { return t.b * t.b * t.a1 * t.a2 / t.delta(); }

    DofPoint p234() const
    {
        return {lead(), shared_d2(), (t.b * t.k * t.a2 + t.a * t.n1 * (1 - t.a1)) * t.a1 / t.delta()};
    }
    DofPoint p123() const { return {lead(), t.c + lead(), t.n1 - lead()}; }
    DofPoint p34() const
    {
        return {t.n1 * t.a1 * (t.a - t.a * t.a1 + t.b * t.a2) / t.delta(), shared_d2(), 0};
    }
    DofPoint p23() const { return {lead(), t.n2, 0}; }
};
} // namespace detail

// Full candidate list for a normalized config, points in normalized coordinates
// (map through NormalizedConfig::to_original for the user's receiver order).
// Every case lists the same candidates; the verdicts differ.
inline std::vector<CornerPoint> corner_catalog(const NormalizedConfig &n, const CsitQuality &q)
{
    using namespace detail;
    std::vector<CornerPoint> out;
    auto add = [&out](std::string label, std::optional<DofPoint> p, const Verdict &v,
                      std::array<std::string, 3> faces)
    {
        bool exists = v.ok && p.has_value();
        out.push_back({std::move(label), p, exists, v.text, std::move(faces)});
    };

    const Rational n1 = n.n1, n2 = n.n2;
    add("O", DofPoint{0, 0, 0}, {}, {D1, D2, D0});
    add("P1", DofPoint{n1, 0, 0}, {}, {"l1", D2, D0});
    add("P2", DofPoint{0, n2, 0}, {}, {"l2", D1, D0});
    add("P0", DofPoint{0, 0, n1}, {}, {"l1", D1, D2});
    if (n.degenerate())
        return out;

    const Terms t(n, q);
    const GenericCorners g{t};
    const Rational za = t.a * t.a1; // (M-N1) alpha1

    const Verdict wide_gap = lt(0, t.c, "N2-N1 > 0");
    const Verdict p12_ok = le(t.c, za, "N2-N1 <= (M-N1)a1");
    const Verdict face_d1 = le(za, t.c, "(M-N1)a1 <= N2-N1");
    const Verdict p123_ok = le(t.c + t.s, za, "N2-N1 + (M-N2)a0 <= (M-N1)a1");
    const Verdict never134 = never("faces l1, l3, l4 have dependent normals");

    switch (t.which)
    {
    case CaseId::Case1:
    {
        const Verdict l3_tight = le(za - t.c, t.b * t.a2, "(M-N1)a1 - (N2-N1) <= (M-N2)a2");
        add("P123", g.p123(), {}, {"l1", "l2", "l3"});
        add("P13", g.p13(), {}, {"l1", "l3", D0});
        add("P23", g.p23(), {}, {"l2", "l3", D0});
        add("P12", g.p12(), {}, {"l1", "l2", D1});
        add("P124", g.p124(), l3_tight, {"l1", "l2", "l4"});
        add("P14", g.p14(), l3_tight, {"l1", "l4", D0});
        add("P234", g.p234(), wide_gap && l3_tight, {"l2", "l3", "l4"});
        add("P34", g.p34(), wide_gap && l3_tight, {"l3", "l4", D0});
        add("P14'", g.p14p(), face_d1, {"l1", "l4", D1});
        add("P24", g.p24(), wide_gap && face_d1, {"l2", "l4", D1});
        break;
    }
    case CaseId::Case2:
    case CaseId::Case3:
    {
        const Case2Corners p{t};
        const bool three = t.which == CaseId::Case3;
        add("P234", p.p234(), three ? Verdict{} : wide_gap, {"l2", "l3", "l4"});
        add("P34", p.p34(), three ? Verdict{} : wide_gap, {"l3", "l4", D0});
        add("P23", p.p23(), {}, {"l2", "l3", D0});
        add("P14", g.p14(), {}, {"l1", "l4", D0});
        add("P124", g.p124(), three ? p12_ok : Verdict{}, {"l1", "l2", "l4"});
        add("P12", g.p12(), three ? p12_ok : Verdict{}, {"l1", "l2", D1});
        add("P14'", g.p14p(), three ? Verdict{} : face_d1, {"l1", "l4", D1});
        add("P24", g.p24(), three ? Verdict{} : wide_gap && face_d1, {"l2", "l4", D1});
        add("P123", g.p123(), p123_ok, {"l1", "l2", "l3"});
        add("P13", g.p13(), p123_ok, {"l1", "l3", D0});
        break;
    }
    case CaseId::Case4:
    {
        const Case4Corners p{t};
        const Verdict l1_slack = le(za, t.c + t.b * t.a2, "(M-N1)a1 <= N2-N1 + (M-N2)a2");
        add("P234", p.p234(), wide_gap && l1_slack, {"l2", "l3", "l4"});
        add("P123", p.p123(), le(p.lead(), za - t.c, "(M-N2)^2 a1 a2/Delta <= (M-N1)a1 - (N2-N1)") &&
                                  le(p.lead(), t.n1, "(M-N2)^2 a1 a2/Delta <= N1"),
            {"l1", "l2", "l3"});
        add("P124", g.p124(), le(za - t.c, p.lead(), "(M-N1)a1 - (N2-N1) <= (M-N2)^2 a1 a2/Delta") && p12_ok &&
                                  le(za, t.n2, "(M-N1)a1 <= N2"),
            {"l1", "l2", "l4"});
        add("P34", p.p34(), wide_gap, {"l3", "l4", D0});
        add("P23", p.p23(), {}, {"l2", "l3", D0});
        add("P14", g.p14(), {}, {"l1", "l4", D0});
        add("P14'", g.p14p(), face_d1, {"l1", "l4", D1});
        add("P24", g.p24(), wide_gap && face_d1, {"l2", "l4", D1});
        add("P12", g.p12(), p12_ok, {"l1", "l2", D1});
        add("P13", g.p13(), p123_ok, {"l1", "l3", D0});
        break;
    }
    default:
        break;
    }
    add("P134", std::nullopt, never134, {"l1", "l3", "l4"});
    return out;
}

inline std::vector<CornerPoint> corner_catalog(const AntennaConfig &c, const CsitQuality &q)
{
    auto [n, nq] = normalize(c, q);
    return corner_catalog(n, nq);
}

// Vertices of the delayed-CSIT region, in the user's coordinates. Besides the
// axis points and the d0 = 0 corner P12, the two faces also meet on the d1 = 0
// face (P12') when min{M,N1} < min{M,N2}, or on the d2 = 0 face (P12'') in the
// mirrored situation.
inline std::vector<CornerPoint> delayed_corners(const AntennaConfig &c, const CsitQuality &q)
{
    using namespace detail;
    const Rational m = c.m;
    const Rational m1 = std::min(Rational(c.n1), m), m2 = std::min(Rational(c.n2), m);
    const Rational g1 = std::min(c.n1 + q.alpha2 * c.n2, m);
    const Rational g2 = std::min(c.n2 + q.alpha1 * c.n1, m);
    const std::string f1 = "delayed rx1", f2 = "delayed rx2";

    std::vector<CornerPoint> out;
    out.push_back({"O", DofPoint{0, 0, 0}, true, "", {D1, D2, D0}});
    out.push_back({"P1", DofPoint{m1, 0, 0}, true, "", {f1, D2, D0}});
    out.push_back({"P2", DofPoint{0, m2, 0}, true, "", {f2, D1, D0}});
    out.push_back({"P0", DofPoint{0, 0, std::min(m1, m2)}, true, "", {m1 <= m2 ? f1 : f2, D1, D2}});

    const Rational den = g1 * g2 - m1 * m2;
    CornerPoint p12{"P12", std::nullopt, false, "", {f1, f2, D0}};
    Verdict v = lt(0, den, "min{N1+a2 N2,M} min{N2+a1 N1,M} - min{N1,M} min{N2,M} > 0");
    p12.condition = v.text;
    if (v.ok)
    {
        p12.point = DofPoint{g1 * m1 * (g2 - m2) / den, g2 * m2 * (g1 - m1) / den, 0};
        p12.exists = true;
    }
    out.push_back(p12);

    v = lt(m1, m2, "min{N1,M} < min{N2,M}");
    CornerPoint side1{"P12'", std::nullopt, v.ok, v.text, {f1, f2, D1}};
    if (v.ok)
        side1.point = DofPoint{0, (m2 - m1) * g2 / (g2 - m1), m1 * (g2 - m2) / (g2 - m1)};
    out.push_back(side1);

    v = lt(m2, m1, "min{N2,M} < min{N1,M}");
    CornerPoint side2{"P12''", std::nullopt, v.ok, v.text, {f1, f2, D2}};
    if (v.ok)
        side2.point = DofPoint{(m1 - m2) * g1 / (g1 - m2), 0, m2 * (g1 - m1) / (g1 - m2)};
    out.push_back(side2);
    return out;
}

} // namespace dofregion

#endif
