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

#ifndef DOFREGION_GEOMETRY_HPP
#define DOFREGION_GEOMETRY_HPP

#include <dofregion/rational.hpp>

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dofregion
{

// DoF triple (d1, d2, d0) of the private messages W1, W2 and the common message W0
struct DofPoint
{
    Rational d1, d2, d0;

    friend bool operator==(const DofPoint &, const DofPoint &) = default;
    friend auto operator<=>(const DofPoint &, const DofPoint &) = default;

    bool nonnegative() const { return d1.sign() >= 0 && d2.sign() >= 0 && d0.sign() >= 0; }
    std::string str() const { return "(" + d1.str() + ", " + d2.str() + ", " + d0.str() + ")"; }
};

// a1*d1 + a2*d2 + a0*d0 <= b
struct Halfspace
{
    Rational a1, a2, a0, b;
    std::string label;

    Halfspace() = default;
    Halfspace(Rational a1_, Rational a2_, Rational a0_, Rational b_, std::string label_ = {})
        : a1(a1_), a2(a2_), a0(a0_), b(b_), label(std::move(label_))
    {
        if (a1.sign() == 0 && a2.sign() == 0 && a0.sign() == 0)
            throw std::invalid_argument("Halfspace '" + label + "': zero normal vector");
    }

    Rational lhs(const DofPoint &x) const { return a1 * x.d1 + a2 * x.d2 + a0 * x.d0; }
    bool holds(const DofPoint &x) const { return lhs(x) <= b; }
    bool active(const DofPoint &x) const { return lhs(x) == b; }

    // Same halfspace with the roles of d1 and d2 exchanged
    Halfspace swapped() const { return Halfspace(a2, a1, a0, b, label); }

    std::string str() const;
};

inline std::string Halfspace::str() const
{
    std::string s;
    auto term = [&s](const Rational &c, const char *var)
    {
        if (c.sign() == 0)
            return;
        if (!s.empty())
            s += c.sign() > 0 ? " + " : " - ";
        else if (c.sign() < 0)
            s += "-";
        Rational m = abs(c);
        if (m != 1)
            s += m.str() + "*";
        s += var;
    };
    term(a1, "d1");
    term(a2, "d2");
    term(a0, "d0");
    return s + " <= " + b.str();
}

// Bounded region {x >= 0 : h(x) for every halfspace h}; the three
// nonnegativity constraints are implicit
struct Polytope
{
    std::vector<Halfspace> halfspaces;

    // Explicit halfspaces followed by -d1 <= 0, -d2 <= 0, -d0 <= 0
    std::vector<Halfspace> constraints() const
    {
        std::vector<Halfspace> rows = halfspaces;
        rows.emplace_back(-1, 0, 0, 0, "d1 >= 0");
        rows.emplace_back(0, -1, 0, 0, "d2 >= 0");
        rows.emplace_back(0, 0, -1, 0, "d0 >= 0");
        return rows;
    }
};

// Thrown when a constraint set admits a feasible ray
class UnboundedRegion : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail
{
inline Rational det3(const Rational &a, const Rational &b, const Rational &c,
                     const Rational &d, const Rational &e, const Rational &f,
                     const Rational &g, const Rational &h, const Rational &i)
{
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}
} // namespace detail

// Unique solution of the three rows taken as equalities, or nothing when singular
inline std::optional<DofPoint> solve3(const Halfspace &r, const Halfspace &s, const Halfspace &t)
{
    using detail::det3;
    Rational det = det3(r.a1, r.a2, r.a0, s.a1, s.a2, s.a0, t.a1, t.a2, t.a0);
    if (det.sign() == 0)
        return std::nullopt;
    return DofPoint{det3(r.b, r.a2, r.a0, s.b, s.a2, s.a0, t.b, t.a2, t.a0) / det,
                    det3(r.a1, r.b, r.a0, s.a1, s.b, s.a0, t.a1, t.b, t.a0) / det,
                    det3(r.a1, r.a2, r.b, s.a1, s.a2, s.b, t.a1, t.a2, t.b) / det};
}

inline std::optional<DofPoint> solve3(const std::array<Halfspace, 3> &rows)
{
    return solve3(rows[0], rows[1], rows[2]);
}

// True when the normals of the three rows are linearly independent
inline bool independent(const Halfspace &r, const Halfspace &s, const Halfspace &t)
{
    return detail::det3(r.a1, r.a2, r.a0, s.a1, s.a2, s.a0, t.a1, t.a2, t.a0).sign() != 0;
}

inline bool contains(const Polytope &p, const DofPoint &x)
{
    if (!x.nonnegative())
        return false;
    return std::all_of(p.halfspaces.begin(), p.halfspaces.end(),
                       [&x](const Halfspace &h) { return h.holds(x); });
}

// Throws UnboundedRegion if the recession cone {r >= 0 : a.r <= 0} has a
// nonzero member. Any such cone meets the plane r1+r2+r3 = 1 in a polytope,
// whose vertices lie on that plane and two further rows.
inline void require_bounded(const std::vector<Halfspace> &rows)
{
    std::vector<Halfspace> cone;
    cone.reserve(rows.size());
    for (const auto &h : rows)
        cone.emplace_back(h.a1, h.a2, h.a0, 0, h.label);
    const Halfspace simplex(1, 1, 1, 1, "ray normalization");
    for (std::size_t i = 0; i < cone.size(); ++i)
        for (std::size_t j = i + 1; j < cone.size(); ++j)
        {
            auto r = solve3(cone[i], cone[j], simplex);
            if (!r)
                continue;
            bool feasible = std::all_of(cone.begin(), cone.end(),
                                        [&](const Halfspace &h) { return h.holds(*r); });
            if (feasible)
                throw UnboundedRegion("region is unbounded along direction " + r->str());
        }
}

// Brute force over every triple of constraints (halfspaces and the three
// coordinate planes). Output is deduplicated and sorted by (d1, d2, d0).
inline std::vector<DofPoint> enumerate_vertices(const Polytope &p)
{
    const std::vector<Halfspace> rows = p.constraints();
    require_bounded(rows);

    std::vector<DofPoint> out;
    const std::size_t k = rows.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (std::size_t l = j + 1; l < k; ++l)
            {
                auto x = solve3(rows[i], rows[j], rows[l]);
                if (!x)
                    continue;
                bool feasible = std::all_of(rows.begin(), rows.end(),
                                            [&](const Halfspace &h) { return h.holds(*x); });
                if (feasible)
                    out.push_back(*x);
            }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Weights (w1, w2, w0) of a linear objective over DoF triples
struct Weights
{
    Rational w1, w2, w0;
};

inline Rational maximize_linear(const Polytope &p, const Weights &w)
{
    auto vertices = enumerate_vertices(p);
    if (vertices.empty())
        throw std::invalid_argument("maximize_linear: region is empty");
    Rational best = w.w1 * vertices[0].d1 + w.w2 * vertices[0].d2 + w.w0 * vertices[0].d0;
    for (const auto &v : vertices)
        best = std::max(best, w.w1 * v.d1 + w.w2 * v.d2 + w.w0 * v.d0);
    return best;
}

inline bool polytopes_equal(const Polytope &a, const Polytope &b)
{
    return enumerate_vertices(a) == enumerate_vertices(b);
}

// A point of p is a vertex iff its active constraints have rank three
inline bool is_vertex(const Polytope &p, const DofPoint &x)
{
    if (!contains(p, x))
        return false;
    std::vector<Halfspace> act;
    for (const auto &h : p.constraints())
        if (h.active(x))
            act.push_back(h);
    for (std::size_t i = 0; i < act.size(); ++i)
        for (std::size_t j = i + 1; j < act.size(); ++j)
            for (std::size_t l = j + 1; l < act.size(); ++l)
                if (independent(act[i], act[j], act[l]))
                    return true;
    return false;
}

} // namespace dofregion

#endif
