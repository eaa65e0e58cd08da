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

#ifndef DOFREGION_REGIONS_HPP
#define DOFREGION_REGIONS_HPP

#include <dofregion/geometry.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace dofregion
{

// (M, N1, N2): transmit antennas and the antennas at receivers 1 and 2
struct AntennaConfig
{
    int m = 1, n1 = 1, n2 = 1;

    AntennaConfig() = default;
    AntennaConfig(int m_, int n1_, int n2_) : m(m_), n1(n1_), n2(n2_)
    {
        if (m < 1 || n1 < 1 || n2 < 1)
            throw std::invalid_argument("antenna counts must be positive, got (" + std::to_string(m) + ", " +
                                        std::to_string(n1) + ", " + std::to_string(n2) + ")");
    }

    friend bool operator==(const AntennaConfig &, const AntennaConfig &) = default;
    std::string str() const
    {
        return "(" + std::to_string(m) + ", " + std::to_string(n1) + ", " + std::to_string(n2) + ")";
    }
};

// CSIT quality exponents toward receivers 1 and 2, each in [0, 1]
struct CsitQuality
{
    Rational alpha1, alpha2;

    CsitQuality() = default;
    CsitQuality(Rational a1, Rational a2) : alpha1(a1), alpha2(a2)
    {
        auto check = [](const Rational &a, const char *name)
        {
            if (a < 0 || a > 1)
                throw std::invalid_argument(std::string(name) + " = " + a.str() + " lies outside [0, 1]");
        };
        check(alpha1, "alpha1");
        check(alpha2, "alpha2");
    }

    friend bool operator==(const CsitQuality &, const CsitQuality &) = default;
    CsitQuality swapped() const { return CsitQuality(alpha2, alpha1); }
};

// Config after switching off redundant antennas and ordering N1 <= N2.
// The helpers name the recurring antenna differences.
struct NormalizedConfig
{
    int m = 1, n1 = 1, n2 = 1;
    bool receivers_swapped = false;
    AntennaConfig original;

    Rational null1() const { return m - n1; }       // M - N1
    Rational null2() const { return m - n2; }       // M - N2
    Rational gap() const { return n2 - n1; }        // N2 - N1
    Rational overlap() const { return n1 + n2 - m; } // N1 + N2 - M
    bool degenerate() const { return m <= n1; }

    // Maps a point between the normalized and the original receiver order
    DofPoint to_original(const DofPoint &x) const
    {
        return receivers_swapped ? DofPoint{x.d2, x.d1, x.d0} : x;
    }
    DofPoint to_normalized(const DofPoint &x) const { return to_original(x); }
};

struct Normalization
{
    NormalizedConfig config;
    CsitQuality csit;
};

inline Normalization normalize(const AntennaConfig &c, const CsitQuality &q)
{
    NormalizedConfig n;
    n.original = c;
    n.m = std::min(c.m, c.n1 + c.n2);
    n.n1 = std::min(c.n1, n.m);
    n.n2 = std::min(c.n2, n.m);
    CsitQuality nq = q;
    if (n.n1 > n.n2)
    {
        std::swap(n.n1, n.n2);
        n.receivers_swapped = true;
        nq = q.swapped();
    }
    return {n, nq};
}

enum class CaseId
{
    Case1,
    Case2,
    Case3,
    Case4,
    Degenerate
};

inline std::string to_string(CaseId k)
{
    switch (k)
    {
    case CaseId::Case1:
        return "CASE1";
    case CaseId::Case2:
        return "CASE2";
    case CaseId::Case3:
        return "CASE3";
    case CaseId::Case4:
        return "CASE4";
    case CaseId::Degenerate:
        return "DEGENERATE";
    }
    return "?";
}

// On a shared boundary the neighbouring cases describe the same region. CASE1
// is tested first, then CASE4 (alpha1 <= 1 - alpha2), then CASE2 / CASE3.
inline CaseId classify_case(const NormalizedConfig &n, const CsitQuality &q)
{
    if (n.degenerate())
        return CaseId::Degenerate;
    const Rational a = n.null1(), b = n.null2(), c = n.gap();
    if (a * q.alpha1 >= c + b * q.alpha2)
        return CaseId::Case1;
    if (q.alpha1 <= 1 - q.alpha2)
        return CaseId::Case4;
    if (a * q.alpha1 >= c)
        return CaseId::Case2;
    return CaseId::Case3;
}

// Delta = (M-N2) alpha2 + (N2-N1)(1 - alpha1)
inline Rational case4_delta(const NormalizedConfig &n, const CsitQuality &q)
{
    return n.null2() * q.alpha2 + n.gap() * (1 - q.alpha1);
}

// The case formula for alpha0 evaluated as written, whatever case (n, q) is in
inline Rational alpha0_formula(CaseId k, const NormalizedConfig &n, const CsitQuality &q)
{
    switch (k)
    {
    case CaseId::Case1:
        return q.alpha2;
    case CaseId::Case2:
    case CaseId::Case3:
        return q.alpha1 - n.gap() * (1 - q.alpha2) / n.null1();
    case CaseId::Case4:
    {
        Rational delta = case4_delta(n, q);
        if (delta.sign() == 0)
            throw std::domain_error("alpha0: vanishing CASE4 denominator");
        return n.null2() * q.alpha1 * q.alpha2 / delta;
    }
    case CaseId::Degenerate:
        break;
    }
    throw std::domain_error("alpha0 is undefined for a degenerate config (M <= N1)");
}

inline Rational alpha0(const NormalizedConfig &n, const CsitQuality &q)
{
    if (n.degenerate())
        throw std::domain_error("alpha0 is undefined for a degenerate config (M <= N1)");
    if (n.m == n.n2)
        return 0;
    return alpha0_formula(classify_case(n, q), n, q);
}

namespace detail
{
inline Polytope to_original(const NormalizedConfig &n, Polytope p)
{
    if (n.receivers_swapped)
        for (auto &h : p.halfspaces)
            h = h.swapped();
    return p;
}
} // namespace detail

// Five faces l1..l5 in normalized coordinates, then mapped back to the user's
// receiver order. A degenerate config keeps l1..l3 only.
inline Polytope region_theorem1(const AntennaConfig &c, const CsitQuality &q)
{
    auto [n, nq] = normalize(c, q);
    const Rational n1 = n.n1, n2 = n.n2;
    Polytope p;
    p.halfspaces.emplace_back(1, 0, 1, n1, "l1");
    p.halfspaces.emplace_back(0, 1, 1, n2, "l2");
    if (n.degenerate())
    {
        p.halfspaces.emplace_back(1, 1, 1, std::min(n.m, n.n2), "l3");
        return detail::to_original(n, p);
    }
    const Rational r = 1 + n.null1() / n2 * nq.alpha1;
    p.halfspaces.emplace_back(1, 1, 1, n2 + n.null2() * alpha0(n, nq), "l3");
    p.halfspaces.emplace_back(1 / n1, 1 / n2, 1 / n1, r, "l4");
    p.halfspaces.emplace_back(1 / n1, 1 / n2, 1 / n2, r, "l5");
    return detail::to_original(n, p);
}

// Delayed plus imperfect CSIT: two weighted-sum faces
inline Polytope region_delayed(const AntennaConfig &c, const CsitQuality &q)
{
    const Rational m = c.m, n1 = c.n1, n2 = c.n2;
    const Rational m1 = std::min(n1, m), m2 = std::min(n2, m);
    const Rational g1 = std::min(n1 + q.alpha2 * n2, m);
    const Rational g2 = std::min(n2 + q.alpha1 * n1, m);
    Polytope p;
    p.halfspaces.emplace_back(1 / g1, 1 / m2, 1 / m2, 1, "delayed rx2");
    p.halfspaces.emplace_back(1 / m1, 1 / g2, 1 / m1, 1, "delayed rx1");
    return p;
}

namespace detail
{
// Outer bound in which W0 is merged into the private message of one receiver.
// The min{} terms use the un-capped antenna counts; receivers are put in
// N1 <= N2 order first so the ordering-dependent face matches the region.
inline Polytope outer_bound(const AntennaConfig &c, const CsitQuality &q, int merged_into)
{
    const bool swap = c.n1 > c.n2;
    const int lo = swap ? c.n2 : c.n1, hi = swap ? c.n1 : c.n2;
    const Rational alpha1 = swap ? q.alpha2 : q.alpha1;
    if (swap)
        merged_into = 3 - merged_into;

    const Rational m1 = std::min(c.m, lo), m2 = std::min(c.m, hi), ms = std::min(c.m, lo + hi);
    auto [n, nq] = normalize(c, q);
    const Rational a0 = n.degenerate() ? Rational(0) : alpha0(n, nq);
    const Rational sum_bound = m2 + (ms - m2) * a0;
    const Rational r = 1 + (ms - m1) / m2 * alpha1;

    Polytope p;
    if (merged_into == 1)
    {
        p.halfspaces.emplace_back(1, 0, 1, m1, "d1+d0");
        p.halfspaces.emplace_back(0, 1, 0, m2, "d2");
        p.halfspaces.emplace_back(1, 1, 1, sum_bound, "sum");
        p.halfspaces.emplace_back(1 / m1, 1 / m2, 1 / m1, r, "weighted (d1+d0)");
        p.halfspaces.emplace_back(1 / m1, 1 / m2, 0, r, "weighted private");
    }
    else
    {
        p.halfspaces.emplace_back(1, 0, 0, m1, "d1");
        p.halfspaces.emplace_back(0, 1, 1, m2, "d2+d0");
        p.halfspaces.emplace_back(1, 1, 1, sum_bound, "sum");
        p.halfspaces.emplace_back(1 / m1, 1 / m2, 0, r, "weighted private");
        p.halfspaces.emplace_back(1 / m1, 1 / m2, 1 / m2, r, "weighted (d2+d0)");
    }
    if (swap)
        for (auto &h : p.halfspaces)
            h = h.swapped();
    return p;
}
} // namespace detail

// W0 treated as part of W1
inline Polytope outer_d1(const AntennaConfig &c, const CsitQuality &q) { return detail::outer_bound(c, q, 1); }

// W0 treated as part of W2
inline Polytope outer_d2(const AntennaConfig &c, const CsitQuality &q) { return detail::outer_bound(c, q, 2); }

// Intersection of both bounds, then each halfspace whose removal leaves the
// vertex set unchanged is dropped (greedily, in list order)
inline Polytope combine_outer(const Polytope &a, const Polytope &b)
{
    Polytope p = a;
    p.halfspaces.insert(p.halfspaces.end(), b.halfspaces.begin(), b.halfspaces.end());
    const auto vertices = enumerate_vertices(p);
    for (std::size_t i = 0; i < p.halfspaces.size();)
    {
        Polytope trial = p;
        trial.halfspaces.erase(trial.halfspaces.begin() + std::ptrdiff_t(i));
        bool redundant = false;
        try
        {
            redundant = enumerate_vertices(trial) == vertices;
        }
        catch (const UnboundedRegion &)
        {
        }
        if (redundant)
            p = std::move(trial);
        else
            ++i;
    }
    return p;
}

} // namespace dofregion

#endif
