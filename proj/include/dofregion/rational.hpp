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

#ifndef DOFREGION_RATIONAL_HPP
#define DOFREGION_RATIONAL_HPP

#include <charconv>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace dofregion
{

// Exact rational number in canonical form (den > 0, gcd(|num|, den) = 1).
// Products and sums are formed in 128 bits and reduced; a result that does not
// fit back into 64 bits throws std::overflow_error instead of wrapping.
class Rational
{
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {} // NOLINT: implicit on purpose, lets "r + 1" read naturally
    Rational(std::int64_t n, std::int64_t d) { *this = reduce(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    int sign() const { return (num_ > 0) - (num_ < 0); }
    double to_double() const { return double(num_) / double(den_); }

    // "p/q", or just "p" for integers
    std::string str() const
    {
        std::string s = std::to_string(num_);
        if (den_ != 1)
            s += "/" + std::to_string(den_);
        return s;
    }

    // Decimal rendering: exact when the denominator only has factors 2 and 5,
    // otherwise 12 significant digits with the second member set to false
    std::pair<std::string, bool> decimal() const;

    // Accepts "p", "p/q" and finite decimals such as "-0.25" (converted exactly)
    static Rational parse(std::string_view text);

    Rational operator-() const
    {
        if (num_ == std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("Rational: negation overflows");
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational &x, const Rational &y)
    {
        if (x.den_ == 1 && y.den_ == 1)
            return reduce(wide(x.num_) + y.num_, 1);
        return reduce(wide(x.num_) * y.den_ + wide(y.num_) * x.den_, wide(x.den_) * y.den_);
    }
    friend Rational operator-(const Rational &x, const Rational &y)
    {
        if (x.den_ == 1 && y.den_ == 1)
            return reduce(wide(x.num_) - y.num_, 1);
        return reduce(wide(x.num_) * y.den_ - wide(y.num_) * x.den_, wide(x.den_) * y.den_);
    }
    friend Rational operator*(const Rational &x, const Rational &y)
    {
        return reduce(wide(x.num_) * y.num_, wide(x.den_) * y.den_);
    }
    friend Rational operator/(const Rational &x, const Rational &y)
    {
        if (y.num_ == 0)
            throw std::domain_error("Rational: division by zero");
        return reduce(wide(x.num_) * y.den_, wide(x.den_) * y.num_);
    }

    Rational &operator+=(const Rational &y) { return *this = *this + y; }
    Rational &operator-=(const Rational &y) { return *this = *this - y; }
    Rational &operator*=(const Rational &y) { return *this = *this * y; }
    Rational &operator/=(const Rational &y) { return *this = *this / y; }

    friend bool operator==(const Rational &, const Rational &) = default;
    friend std::strong_ordering operator<=>(const Rational &x, const Rational &y)
    {
        if (x.den_ == y.den_)
            return x.num_ <=> y.num_;
        return wide(x.num_) * y.den_ <=> wide(y.num_) * x.den_;
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

private:
    using i128 = __int128;
    using u128 = unsigned __int128;

    static i128 wide(std::int64_t v) { return i128(v); }

    static u128 gcd128(u128 a, u128 b)
    {
        constexpr u128 lim = std::numeric_limits<std::uint64_t>::max();
        while (b != 0)
        {
            if (a <= lim && b <= lim)
                return std::gcd(std::uint64_t(a), std::uint64_t(b));
            u128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational reduce(i128 n, i128 d)
    {
        if (d == 0)
            throw std::domain_error("Rational: zero denominator");
        if (d < 0)
            n = -n, d = -d;
        u128 g = gcd128(n < 0 ? u128(-n) : u128(n), u128(d));
        if (g > 1)
            n /= i128(g), d /= i128(g);
        constexpr i128 lo = std::numeric_limits<std::int64_t>::min();
        constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("Rational: result exceeds 64-bit range");
        Rational r;
        r.num_ = std::int64_t(n);
        r.den_ = std::int64_t(d);
        return r;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational abs(const Rational &r) { return r.sign() < 0 ? -r : r; }

// [x]^+ = max{x, 0}
inline Rational pos(const Rational &r) { return r.sign() < 0 ? Rational(0) : r; }

inline std::pair<std::string, bool> Rational::decimal() const
{
    std::int64_t d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0)
        d /= 2, ++twos;
    while (d % 5 == 0)
        d /= 5, ++fives;
    int digits = std::max(twos, fives);
    if (d == 1 && digits <= 18)
    {
        i128 scale = 1;
        for (int i = 0; i < digits; ++i)
            scale *= 10;
        i128 scaled = wide(num_) * (scale / den_);
        if (scaled >= -wide(std::numeric_limits<std::int64_t>::max()) &&
            scaled <= wide(std::numeric_limits<std::int64_t>::max()))
        {
            std::int64_t v = std::int64_t(scaled);
            bool neg = v < 0;
            std::string body = std::to_string(neg ? -v : v);
            if (digits > 0)
            {
                if (int(body.size()) <= digits)
                    body.insert(0, std::size_t(digits + 1 - int(body.size())), '0');
                body.insert(body.size() - std::size_t(digits), ".");
                while (body.back() == '0')
                    body.pop_back();
                if (body.back() == '.')
                    body.pop_back();
            }
            return {(neg ? "-" : "") + body, true};
        }
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", to_double());
    return {buf, false};
}

inline Rational Rational::parse(std::string_view text)
{
    auto fail = [&]() -> Rational
    { throw std::invalid_argument("malformed rational '" + std::string(text) + "'"); };

    auto parse_int = [&](std::string_view s, std::int64_t &out) -> bool
    {
        if (!s.empty() && s.front() == '+')
            s.remove_prefix(1);
        if (s.empty())
            return false;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc() && ptr == s.data() + s.size();
    };

    if (text.empty())
        return fail();

    if (auto slash = text.find('/'); slash != std::string_view::npos)
    {
        std::int64_t n = 0, d = 0;
        if (!parse_int(text.substr(0, slash), n) || !parse_int(text.substr(slash + 1), d))
            return fail();
        if (d == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(n, d);
    }

    auto dot = text.find('.');
    if (dot == std::string_view::npos)
    {
        std::int64_t n = 0;
        if (!parse_int(text, n))
            return fail();
        return Rational(n);
    }

    std::string_view whole = text.substr(0, dot), frac = text.substr(dot + 1);
    bool neg = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+'))
    {
        neg = whole.front() == '-';
        whole.remove_prefix(1);
    }
    if ((whole.empty() && frac.empty()) || frac.size() > 18)
        return fail();
    for (char ch : whole)
        if (ch < '0' || ch > '9')
            return fail();
    for (char ch : frac)
        if (ch < '0' || ch > '9')
            return fail();

    std::int64_t w = 0, f = 0, scale = 1;
    if (!whole.empty() && !parse_int(whole, w))
        return fail();
    if (!frac.empty() && !parse_int(frac, f))
        return fail();
    for (std::size_t i = 0; i < frac.size(); ++i)
        scale *= 10;
    Rational r = Rational(w) + Rational(f, scale);
    return neg ? -r : r;
}

} // namespace dofregion

#endif
