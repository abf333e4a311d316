#pragma once

// Independent reference implementations used only by the tests. None of
// these share code paths with the library routines they check.

#include <charfact/characters.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using charfact::CycInt;
using charfact::LaurentPoly;
using charfact::Monomial;
using charfact::Partition;
using charfact::ValueTuple;

/// Conjugate by transposing the set of cells.
inline Partition conjugate_by_cells(const Partition& lambda) {
    std::vector<int> cols;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda[i]; ++j) {
            if (static_cast<int>(cols.size()) < j)
                cols.push_back(0);
            cols[static_cast<std::size_t>(j - 1)]++;
        }
    return Partition(cols);
}

/// True when lambda/mu is a connected skew shape with no 2x2 square.
inline bool is_border_strip(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu))
        return false;
    std::set<std::pair<int, int>> cells;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = mu[i] + 1; j <= lambda[i]; ++j)
            cells.insert({i, j});
    if (cells.empty())
        return false;
    for (auto [i, j] : cells)
        if (cells.count({i + 1, j}) && cells.count({i, j + 1}) && cells.count({i + 1, j + 1}))
            return false;
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> stack{*cells.begin()};
    while (!stack.empty()) {
        auto c = stack.back();
        stack.pop_back();
        if (!cells.count(c) || !seen.insert(c).second)
            continue;
        stack.push_back({c.first + 1, c.second});
        stack.push_back({c.first - 1, c.second});
        stack.push_back({c.first, c.second + 1});
        stack.push_back({c.first, c.second - 1});
    }
    return seen.size() == cells.size();
}

/// t-core by repeatedly removing any rim hook of size t.
inline Partition core_by_rim_hooks(Partition lambda, int t) {
    for (;;) {
        bool removed = false;
        int target = lambda.size() - t;
        if (target < 0)
            return lambda;
        for (const auto& mu : charfact::partitions_of(target)) {
            if (is_border_strip(lambda, mu)) {
                lambda = mu;
                removed = true;
                break;
            }
        }
        if (!removed)
            return lambda;
    }
}

/// Sum over permutations of signed products.
inline LaurentPoly permutation_det(const charfact::PolyMatrix& m, int arity, int t) {
    std::size_t n = m.size();
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = static_cast<int>(i);
    LaurentPoly total(arity, t);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        LaurentPoly prod = LaurentPoly::one(arity, t);
        for (std::size_t i = 0; i < n; ++i)
            prod *= m[i][static_cast<std::size_t>(perm[i])];
        if (inversions % 2)
            total -= prod;
        else
            total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline LaurentPoly atom_poly(const ValueTuple& v, std::size_t i) {
    return LaurentPoly::term(v.arity(), v[i].coeff, v[i].mono);
}

/// e_k(V) as the sum over k-subsets.
inline LaurentPoly elementary(int k, const ValueTuple& v) {
    LaurentPoly total(v.arity(), v.modulus());
    std::function<void(std::size_t, int, LaurentPoly)> rec = [&](std::size_t start, int left, LaurentPoly acc) {
        if (left == 0) {
            total += acc;
            return;
        }
        for (std::size_t i = start; i < v.size(); ++i)
            rec(i + 1, left - 1, acc * atom_poly(v, i));
    };
    rec(0, k, LaurentPoly::one(v.arity(), v.modulus()));
    return total;
}

/// h_k(V) as the sum over weakly increasing index sequences.
inline LaurentPoly complete_by_multisets(int k, const ValueTuple& v) {
    LaurentPoly total(v.arity(), v.modulus());
    if (k < 0)
        return total;
    std::function<void(std::size_t, int, LaurentPoly)> rec = [&](std::size_t start, int left, LaurentPoly acc) {
        if (left == 0) {
            total += acc;
            return;
        }
        for (std::size_t i = start; i < v.size(); ++i)
            rec(i, left - 1, acc * atom_poly(v, i));
    };
    rec(0, k, LaurentPoly::one(v.arity(), v.modulus()));
    return total;
}

/// Skew Schur polynomial as a sum over semistandard tableaux of shape
/// lambda/mu with entries indexing the atoms of V.
inline LaurentPoly schur_by_tableaux(const Partition& lambda, const Partition& mu, const ValueTuple& v) {
    LaurentPoly total(v.arity(), v.modulus());
    if (!lambda.contains(mu))
        return total;
    std::vector<std::pair<int, int>> cells;  // row-major order
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = mu[i] + 1; j <= lambda[i]; ++j)
            cells.push_back({i, j});
    std::map<std::pair<int, int>, int> filling;
    int nv = static_cast<int>(v.size());
    std::function<void(std::size_t, LaurentPoly)> rec = [&](std::size_t idx, LaurentPoly acc) {
        if (idx == cells.size()) {
            total += acc;
            return;
        }
        auto [i, j] = cells[idx];
        int lo = 0;
        if (auto it = filling.find({i, j - 1}); it != filling.end())
            lo = std::max(lo, it->second);  // rows weakly increase
        if (auto it = filling.find({i - 1, j}); it != filling.end())
            lo = std::max(lo, it->second + 1);  // columns strictly increase
        for (int a = lo; a < nv; ++a) {
            filling[{i, j}] = a;
            rec(idx + 1, acc * atom_poly(v, static_cast<std::size_t>(a)));
        }
        filling.erase({i, j});
    };
    rec(0, LaurentPoly::one(v.arity(), v.modulus()));
    return total;
}

inline LaurentPoly schur_by_tableaux(const Partition& lambda, const ValueTuple& v) {
    return schur_by_tableaux(lambda, Partition{}, v);
}

}  // namespace oracle
