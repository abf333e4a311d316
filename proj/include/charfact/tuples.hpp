#pragma once

// Builders for the specializations that characters are evaluated at, and a
// small left-to-right text language naming them ("X(2) twist(3) +1").

#include "partition.hpp"
#include "polyring.hpp"

#include <cctype>
#include <numeric>
#include <string>
#include <string_view>

namespace charfact {

/// Every atom multiplied by the unit c.
inline ValueTuple scaled(const ValueTuple& v, const CycInt& c) {
    int t = std::lcm(v.modulus(), c.modulus());
    CycInt u = c.embed(t);
    ValueTuple base = v.embed(t);
    ValueTuple out(v.arity(), t);
    for (const auto& a : base.atoms())
        out.push_back({a.coeff * u, a.mono});
    return out;
}

inline ValueTuple neg(const ValueTuple& v) { return scaled(v, CycInt(v.modulus(), -1)); }

/// Atom-wise inverses: X -> X-bar. Coefficients must be roots of unity
/// (possibly negated), whose inverse is the complex conjugate.
inline ValueTuple bars(const ValueTuple& v) {
    ValueTuple out(v.arity(), v.modulus());
    for (const auto& a : v.atoms()) {
        CycInt inv = a.coeff.conjugate();
        if (!(inv * a.coeff == CycInt(v.modulus(), 1)))
            throw std::invalid_argument("bars: atom coefficient is not a root of unity");
        out.push_back({std::move(inv), a.mono.inverse()});
    }
    return out;
}

/// (X, X-bar).
inline ValueTuple with_bars(const ValueTuple& v) { return concat(v, bars(v)); }

/// (X, wX, ..., w^{t-1}X), w a primitive t-th root of unity.
inline ValueTuple twist(const ValueTuple& v, int t) {
    if (t < 1)
        throw std::invalid_argument("twist: t must be positive");
    int ring_t = std::lcm(v.modulus(), t);
    ValueTuple base = v.embed(ring_t);
    ValueTuple out(v.arity(), ring_t);
    int step = ring_t / t;
    for (int k = 0; k < t; ++k)
        for (const auto& a : base.atoms())
            out.push_back({a.coeff * CycInt::omega_pow(ring_t, static_cast<long long>(k) * step), a.mono});
    return out;
}

/// X^k atom-wise, coefficients included.
inline ValueTuple power(const ValueTuple& v, int k) {
    if (k < 0)
        return power(bars(v), -k);
    ValueTuple out(v.arity(), v.modulus());
    for (const auto& a : v.atoms())
        out.push_back({a.coeff.pow(k), a.mono.power(k)});
    return out;
}

inline ValueTuple append_constant(const ValueTuple& v, const CycInt& c) {
    int t = std::lcm(v.modulus(), c.modulus());
    ValueTuple out = v.embed(t);
    out.push_back({c.embed(t), Monomial{}});
    return out;
}

inline ValueTuple append_constant(const ValueTuple& v, long long c) {
    return append_constant(v, CycInt(v.modulus(), c));
}

/// (wX, w^3X, ..., w^{t-1}X, w, w^3, ..., w^{t/2-1}) for 4 | t.
inline ValueTuple x_omega(const ValueTuple& x, int t) {
    if (t <= 0 || t % 4 != 0)
        throw ArityViolation("x_omega: t must be a positive multiple of 4");
    int ring_t = std::lcm(x.modulus(), t);
    int step = ring_t / t;
    ValueTuple base = x.embed(ring_t);
    ValueTuple out(x.arity(), ring_t);
    for (int k = 1; k < t; k += 2)
        for (const auto& a : base.atoms())
            out.push_back({a.coeff * CycInt::omega_pow(ring_t, static_cast<long long>(k) * step), a.mono});
    for (int k = 1; k < t / 2; k += 2)
        out.push_back({CycInt::omega_pow(ring_t, static_cast<long long>(k) * step), Monomial{}});
    return out;
}

inline ValueTuple x_omega_bar(const ValueTuple& x, int t) { return bars(x_omega(x, t)); }

/// Multiset comparison of atoms (order-insensitive).
inline bool same_atoms(const ValueTuple& a, const ValueTuple& b) {
    if (a.size() != b.size())
        return false;
    auto [x, y] = harmonize(a, b);
    std::vector<bool> used(y.size(), false);
    for (const auto& atom : x.atoms()) {
        bool found = false;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (!used[j] && y[j] == atom) {
                used[j] = found = true;
                break;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Tuple text language. Tokens are applied left to right:
//   X(n)        start from (x_1, ..., x_n)
//   bar         V -> (V, V-bar)
//   twist(t)    V -> (V, wV, ..., w^{t-1}V)
//   xomega(t)   V -> the odd-power specialization, 4 | t
//   pow(k)      V -> V^k
//   neg         V -> -V
//   +c          append a constant: +1, +(-1), +w^k, +(-w^k)
// A tuple must start with X(n).

namespace detail {

inline int parse_int_token(std::string_view s, const std::string& context) {
    if (s.empty())
        throw ParseError("tuple spec: missing integer in " + context);
    std::size_t i = 0;
    bool negative = false;
    if (s[0] == '-' || s[0] == '+') {
        negative = s[0] == '-';
        i = 1;
    }
    if (i == s.size())
        throw ParseError("tuple spec: bad integer in " + context);
    long long value = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("tuple spec: bad integer in " + context);
        value = value * 10 + (s[i] - '0');
        if (value > 1000000)
            throw ParseError("tuple spec: integer too large in " + context);
    }
    return static_cast<int>(negative ? -value : value);
}

inline std::string_view strip_parens(std::string_view s) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
        return s.substr(1, s.size() - 2);
    return s;
}

inline int call_argument(std::string_view token, std::string_view name) {
    std::string_view rest = token.substr(name.size());
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
        throw ParseError("tuple spec: expected " + std::string(name) + "(k), got '" + std::string(token) + "'");
    return parse_int_token(rest.substr(1, rest.size() - 2), std::string(token));
}

/// Constant after '+': integer, w^k, or either negated, optionally parenthesized.
inline CycInt parse_constant(std::string_view s, int t, const std::string& token) {
    s = strip_parens(s);
    bool negative = false;
    if (!s.empty() && s[0] == '-') {
        negative = true;
        s.remove_prefix(1);
    }
    if (!s.empty() && s[0] == 'w') {
        int k = 1;
        if (s.size() > 1) {
            if (s[1] != '^')
                throw ParseError("tuple spec: bad constant '" + token + "'");
            k = parse_int_token(s.substr(2), token);
        }
        if (t <= 1)
            throw ParseError("tuple spec: w used before any root of unity is in scope ('" + token + "')");
        CycInt c = CycInt::omega_pow(t, k);
        return negative ? -c : c;
    }
    int v = parse_int_token(s, token);
    return CycInt(t, negative ? -v : v);
}

}  // namespace detail

inline ValueTuple parse_tuple(std::string_view spec) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < spec.size()) {
        while (i < spec.size() && std::isspace(static_cast<unsigned char>(spec[i])))
            ++i;
        std::size_t start = i;
        int depth = 0;
        while (i < spec.size() && (depth > 0 || !std::isspace(static_cast<unsigned char>(spec[i])))) {
            if (spec[i] == '(')
                ++depth;
            else if (spec[i] == ')')
                --depth;
            ++i;
        }
        if (i > start)
            tokens.push_back(spec.substr(start, i - start));
    }
    if (tokens.empty())
        throw ParseError("tuple spec: empty");

    std::optional<ValueTuple> v;
    for (auto token : tokens) {
        std::string tok(token);
        if (token.starts_with("X(")) {
            if (v)
                throw ParseError("tuple spec: X(n) may only appear first");
            int n = detail::call_argument(token, "X");
            if (n < 0 || n > kMaxVariables)
                throw ParseError("tuple spec: X(n) needs 0 <= n <= " + std::to_string(kMaxVariables));
            v = ValueTuple::base(n);
            continue;
        }
        if (!v)
            throw ParseError("tuple spec: must start with X(n)");
        if (token == "bar") {
            v = with_bars(*v);
        } else if (token == "neg") {
            v = neg(*v);
        } else if (token.starts_with("twist(")) {
            int t = detail::call_argument(token, "twist");
            if (t < 1 || t > 24)
                throw ParseError("tuple spec: twist(t) needs 1 <= t <= 24");
            v = twist(*v, t);
        } else if (token.starts_with("xomega(")) {
            int t = detail::call_argument(token, "xomega");
            if (t < 4 || t > 24 || t % 4 != 0)
                throw ParseError("tuple spec: xomega(t) needs t a multiple of 4, at most 24");
            v = x_omega(*v, t);
        } else if (token.starts_with("pow(")) {
            int k = detail::call_argument(token, "pow");
            if (k < -64 || k > 64)
                throw ParseError("tuple spec: pow(k) needs |k| <= 64");
            v = power(*v, k);
        } else if (token.starts_with("+")) {
            v = append_constant(*v, detail::parse_constant(token.substr(1), v->modulus(), tok));
        } else {
            throw ParseError("tuple spec: unknown token '" + tok + "'");
        }
    }
    return *v;
}

}  // namespace charfact
