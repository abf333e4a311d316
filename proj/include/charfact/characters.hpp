#pragma once

// Characters as Jacobi-Trudi style determinants in complete homogeneous
// polynomials of a value tuple.

#include "partition.hpp"
#include "polyring.hpp"
#include "tuples.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace charfact {

namespace detail {

/// Determinant size used for every character: l(lambda), at least 1.
inline int padding(const Partition& lambda) { return std::max(lambda.length(), 1); }

/// det(entry(i, j)), 1-based i, j <= n.
template <class Entry>
LaurentPoly det_by(int n, const HSeries& h, Entry&& entry) {
    PolyMatrix m(static_cast<std::size_t>(n), std::vector<LaurentPoly>(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = entry(i, j);
    return det(m, h.arity(), h.modulus());
}

/// det(h_{l_i - i + j} + sign * h_{l_i - i - j + shift}), the shared shape of
/// the orthogonal and symplectic determinants.
inline LaurentPoly folded_det(const Partition& lambda, int n, const HSeries& h, int sign, int shift) {
    return det_by(n, h, [&](int i, int j) {
        int a = lambda[i] - i;
        LaurentPoly e = h(a + j);
        if (sign > 0)
            e += h(a - j + shift);
        else
            e -= h(a - j + shift);
        return e;
    });
}

}  // namespace detail

/// s_lambda(V) = det(h_{lambda_i - i + j}(V)).
inline LaurentPoly schur(const Partition& lambda, const HSeries& h) {
    int n = detail::padding(lambda);
    return detail::det_by(n, h, [&](int i, int j) { return h(lambda[i] - i + j); });
}

inline LaurentPoly schur(const Partition& lambda, const ValueTuple& v) {
    return schur(lambda, HSeries(v, lambda[1] + detail::padding(lambda) - 1));
}

/// s_{lambda/mu}(V) = det(h_{lambda_i - mu_j - i + j}(V)); zero unless mu is inside lambda.
inline LaurentPoly skew_schur(const Partition& lambda, const Partition& mu, const HSeries& h) {
    if (!lambda.contains(mu))
        return LaurentPoly(h.arity(), h.modulus());
    int n = detail::padding(lambda);
    return detail::det_by(n, h, [&](int i, int j) { return h(lambda[i] - mu[j] - i + j); });
}

inline LaurentPoly skew_schur(const Partition& lambda, const Partition& mu, const ValueTuple& v) {
    return skew_schur(lambda, mu, HSeries(v, lambda[1] + detail::padding(lambda) - 1));
}

/// Universal orthogonal character: det(h_{l_i-i+j} - h_{l_i-i-j}).
inline LaurentPoly univ_o(const Partition& lambda, const ValueTuple& v) {
    int n = detail::padding(lambda);
    return detail::folded_det(lambda, n, HSeries(v, lambda[1] + n - 1), -1, 0);
}

/// Universal symplectic character: half of det(h_{l_i-i+j} + h_{l_i-i-j+2}).
inline LaurentPoly univ_sp(const Partition& lambda, const ValueTuple& v) {
    int n = detail::padding(lambda);
    return exact_div_int(detail::folded_det(lambda, n, HSeries(v, lambda[1] + n - 1), +1, 2), 2);
}

/// Universal odd orthogonal character: det(h_{l_i-i+j} + h_{l_i-i-j+1}).
inline LaurentPoly univ_so(const Partition& lambda, const ValueTuple& v) {
    int n = detail::padding(lambda);
    return detail::folded_det(lambda, n, HSeries(v, lambda[1] + n - 1), +1, 1);
}

/// Negative twin of univ_so: det(h_{l_i-i+j} - h_{l_i-i-j+1}).
inline LaurentPoly univ_so_minus(const Partition& lambda, const ValueTuple& v) {
    int n = detail::padding(lambda);
    return detail::folded_det(lambda, n, HSeries(v, lambda[1] + n - 1), -1, 1);
}

/// sp_lambda(X) = univ_sp over (X, X-bar).
inline LaurentPoly symplectic(const Partition& lambda, const ValueTuple& x) { return univ_sp(lambda, with_bars(x)); }

/// oe_lambda(X) = univ_o over (X, X-bar).
inline LaurentPoly even_orth(const Partition& lambda, const ValueTuple& x) { return univ_o(lambda, with_bars(x)); }

/// oo_lambda(X) = det(h_{l_i-i+j} - h_{l_i-i-j}) over (X, X-bar, 1).
inline LaurentPoly odd_orth(const Partition& lambda, const ValueTuple& x) {
    return univ_o(lambda, append_constant(with_bars(x), 1));
}

/// rs_{lambda,mu}(V) = sum over nu of (-1)^{|nu|} s_{lambda/nu}(V) s_{mu/nu'}(V).
inline LaurentPoly rs(const Partition& lambda, const Partition& mu, const ValueTuple& v) {
    int degree = std::max(lambda[1] + detail::padding(lambda), mu[1] + detail::padding(mu));
    HSeries h(v, degree);
    LaurentPoly total(v.arity(), v.modulus());
    for (const auto& nu : subpartitions(lambda)) {
        Partition nu_t = conjugate(nu);
        if (!mu.contains(nu_t))
            continue;
        LaurentPoly left = skew_schur(lambda, nu, h);
        if (left.is_zero())
            continue;
        LaurentPoly term = left * skew_schur(mu, nu_t, h);
        if (nu.size() % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

/// hs_lambda(X/Y) = sum over mu inside lambda of s_mu(X) s_{lambda'/mu'}(Y).
inline LaurentPoly hook_schur(const Partition& lambda, const ValueTuple& x, const ValueTuple& y) {
    auto [xx, yy] = harmonize(x, y);
    Partition lambda_t = conjugate(lambda);
    HSeries hx(xx, lambda[1] + detail::padding(lambda));
    HSeries hy(yy, lambda_t[1] + detail::padding(lambda_t));
    LaurentPoly total(xx.arity(), xx.modulus());
    for (const auto& mu : subpartitions(lambda)) {
        LaurentPoly left = schur(mu, hx);
        if (left.is_zero())
            continue;
        total += left * skew_schur(lambda_t, conjugate(mu), hy);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Named kinds for the command line.

enum class CharacterKind { Schur, Skew, Symplectic, OddOrth, EvenOrth, UnivO, UnivSp, UnivSo, UnivSoMinus, Rs, Hook };

struct CharacterKindName {
    CharacterKind kind;
    std::string_view name;
};

inline constexpr std::array<CharacterKindName, 11> kCharacterKinds{{
    {CharacterKind::Schur, "schur"},
    {CharacterKind::Skew, "skew"},
    {CharacterKind::Symplectic, "sp"},
    {CharacterKind::OddOrth, "so-odd"},
    {CharacterKind::EvenOrth, "o-even"},
    {CharacterKind::UnivO, "univ-o"},
    {CharacterKind::UnivSp, "univ-sp"},
    {CharacterKind::UnivSo, "univ-so"},
    {CharacterKind::UnivSoMinus, "univ-so-minus"},
    {CharacterKind::Rs, "rs"},
    {CharacterKind::Hook, "hook"},
}};

inline std::optional<CharacterKind> parse_character_kind(std::string_view name) {
    for (const auto& k : kCharacterKinds)
        if (k.name == name)
            return k.kind;
    return std::nullopt;
}

/// Kinds taking a second partition (skew: the inner shape; rs: mu).
inline bool needs_second_partition(CharacterKind k) { return k == CharacterKind::Skew || k == CharacterKind::Rs; }
/// Kinds taking a second tuple (hook: the Y variables).
inline bool needs_second_tuple(CharacterKind k) { return k == CharacterKind::Hook; }

inline LaurentPoly evaluate_character(CharacterKind kind, const Partition& lambda, const ValueTuple& v,
                                      const Partition& mu = {}, const std::optional<ValueTuple>& y = std::nullopt) {
    switch (kind) {
        case CharacterKind::Schur: return schur(lambda, v);
        case CharacterKind::Skew: return skew_schur(lambda, mu, v);
        case CharacterKind::Symplectic: return symplectic(lambda, v);
        case CharacterKind::OddOrth: return odd_orth(lambda, v);
        case CharacterKind::EvenOrth: return even_orth(lambda, v);
        case CharacterKind::UnivO: return univ_o(lambda, v);
        case CharacterKind::UnivSp: return univ_sp(lambda, v);
        case CharacterKind::UnivSo: return univ_so(lambda, v);
        case CharacterKind::UnivSoMinus: return univ_so_minus(lambda, v);
        case CharacterKind::Rs: return rs(lambda, mu, v);
        case CharacterKind::Hook:
            if (!y)
                throw std::invalid_argument("hook: second tuple required");
            return hook_schur(lambda, v, *y);
    }
    throw std::logic_error("evaluate_character: unknown kind");
}

}  // namespace charfact
