#pragma once

// Specialization tuples, complete homogeneous polynomials over them, and
// division-free determinants of Laurent-polynomial matrices.

#include "laurent_poly.hpp"

#include <atomic>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace charfact {

class NonDivisible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// One specialized variable value: a cyclotomic coefficient times a monomial.
struct Atom {
    CycInt coeff;
    Monomial mono;
    friend bool operator==(const Atom&, const Atom&) = default;
};

/// Ordered list of atoms, all over the same variables x_1..x_arity and the
/// same coefficient ring Z[w_t].
class ValueTuple {
public:
    ValueTuple() = default;
    ValueTuple(int arity, int t) : arity_(arity), t_(t) {
        if (arity < 0 || arity > kMaxVariables)
            throw std::invalid_argument("ValueTuple: arity out of range");
        if (t < 1)
            throw std::invalid_argument("ValueTuple: modulus must be positive");
    }

    /// (x_{first+1}, ..., x_{first+count}) inside a polynomial ring of the given arity.
    static ValueTuple variables(int arity, int first, int count, int t = 1) {
        if (first < 0 || first + count > arity)
            throw std::invalid_argument("ValueTuple::variables: range exceeds arity");
        ValueTuple v(arity, t);
        for (int i = 0; i < count; ++i)
            v.atoms_.push_back({CycInt(t, 1), Monomial::variable(first + i)});
        return v;
    }
    static ValueTuple base(int n, int t = 1) { return variables(n, 0, n, t); }

    int arity() const noexcept { return arity_; }
    int modulus() const noexcept { return t_; }
    std::size_t size() const noexcept { return atoms_.size(); }
    bool empty() const noexcept { return atoms_.empty(); }
    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    const Atom& operator[](std::size_t i) const { return atoms_[i]; }

    void push_back(Atom a) {
        if (a.coeff.modulus() != t_)
            throw std::invalid_argument("ValueTuple: atom ring mismatch");
        if (a.mono.span() > arity_)
            throw std::invalid_argument("ValueTuple: atom exceeds arity");
        atoms_.push_back(std::move(a));
    }

    /// Coefficients moved to Z[w_T], t | T.
    ValueTuple embed(int target) const {
        ValueTuple v(arity_, target);
        for (const auto& a : atoms_)
            v.atoms_.push_back({a.coeff.embed(target), a.mono});
        return v;
    }

    ValueTuple with_arity(int arity) const {
        ValueTuple v(arity, t_);
        for (const auto& a : atoms_)
            v.push_back(a);
        return v;
    }

    friend bool operator==(const ValueTuple&, const ValueTuple&) = default;

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
            if (i)
                out += ", ";
            out += LaurentPoly::term(arity_, atoms_[i].coeff, atoms_[i].mono).to_string();
        }
        return out + ")";
    }

private:
    int arity_ = 0;
    int t_ = 1;
    std::vector<Atom> atoms_;
};

/// Bring two tuples to a common arity and coefficient ring.
inline std::pair<ValueTuple, ValueTuple> harmonize(const ValueTuple& a, const ValueTuple& b) {
    int t = std::lcm(a.modulus(), b.modulus());
    int arity = std::max(a.arity(), b.arity());
    return {a.embed(t).with_arity(arity), b.embed(t).with_arity(arity)};
}

/// Concatenation (A, B).
inline ValueTuple concat(const ValueTuple& a, const ValueTuple& b) {
    auto [x, y] = harmonize(a, b);
    for (const auto& atom : y.atoms())
        x.push_back(atom);
    return x;
}

/// Polynomial value of an atom.
inline LaurentPoly atom_value(const ValueTuple& v, const Atom& a) {
    return LaurentPoly::term(v.arity(), a.coeff, a.mono);
}

/// Counts every exact division performed by exact_div_int; lets callers
/// confirm that the symplectic halving ran and never failed.
inline std::atomic<long long>& exact_division_count() {
    static std::atomic<long long> count{0};
    return count;
}

/// p / k, requiring every coefficient (in the power basis of Z[w_t]) to be divisible by k.
inline LaurentPoly exact_div_int(const LaurentPoly& p, const Integer& k) {
    if (k == 0)
        throw std::invalid_argument("exact_div_int: division by zero");
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(p.size());
    for (const auto& term : p.terms()) {
        auto q = term.coeff.divided_by(k);
        if (!q)
            throw NonDivisible("exact_div_int: coefficient " + term.coeff.to_string() + " not divisible by " +
                               k.str());
        terms.push_back({term.mono, std::move(*q)});
    }
    exact_division_count().fetch_add(1, std::memory_order_relaxed);
    return LaurentPoly::from_terms(p.arity(), p.modulus(), std::move(terms));
}

/// h_0, ..., h_D of a tuple: coefficients of prod_a 1/(1 - a q).
class HSeries {
public:
    HSeries(const ValueTuple& v, int max_degree) : arity_(v.arity()), t_(v.modulus()) {
        int d = std::max(max_degree, 0);
        h_.assign(static_cast<std::size_t>(d) + 1, LaurentPoly(arity_, t_));
        h_[0] = LaurentPoly::one(arity_, t_);
        // One atom at a time: H'[k] = H[k] + a H'[k-1].
        for (const auto& a : v.atoms())
            for (std::size_t k = 1; k < h_.size(); ++k)
                h_[k] += h_[k - 1].times_term(a.coeff, a.mono);
    }

    int arity() const noexcept { return arity_; }
    int modulus() const noexcept { return t_; }
    int max_degree() const noexcept { return static_cast<int>(h_.size()) - 1; }

    /// h_k; zero for k < 0.
    const LaurentPoly& operator()(int k) const {
        if (k < 0)
            return zero_;
        if (k > max_degree())
            throw std::out_of_range("HSeries: degree " + std::to_string(k) + " beyond computed range");
        return h_[static_cast<std::size_t>(k)];
    }

private:
    int arity_;
    int t_;
    std::vector<LaurentPoly> h_;
    LaurentPoly zero_{arity_, t_};
};

inline LaurentPoly complete_homogeneous(int m, const ValueTuple& v) {
    if (m < 0)
        return LaurentPoly(v.arity(), v.modulus());
    return HSeries(v, m)(m);
}

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// Determinant by first-row Laplace expansion, memoized on the set of
/// columns still available. Rows are consumed top to bottom, so a minor is
/// determined by its column mask alone.
inline LaurentPoly det(const PolyMatrix& m, int arity, int t) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("det: matrix is not square");
    if (n == 0)
        return LaurentPoly::one(arity, t);
    if (n > 24)
        throw std::invalid_argument("det: matrix too large");
    for (const auto& row : m)
        for (const auto& e : row)
            if (e.arity() != arity || e.modulus() != t)
                throw std::invalid_argument("det: entries disagree in arity or ring");

    using Mask = std::uint32_t;
    std::unordered_map<Mask, LaurentPoly> memo;
    auto minor = [&](auto&& self, Mask cols) -> LaurentPoly {
        int row = static_cast<int>(n) - std::popcount(cols);
        if (cols == 0)
            return LaurentPoly::one(arity, t);
        if (auto it = memo.find(cols); it != memo.end())
            return it->second;
        LaurentPoly total(arity, t);
        for (std::size_t j = 0; j < n; ++j) {
            Mask bit = Mask{1} << j;
            if (!(cols & bit))
                continue;
            const LaurentPoly& entry = m[static_cast<std::size_t>(row)][j];
            if (entry.is_zero())
                continue;
            LaurentPoly sub = self(self, cols & ~bit);
            if (sub.is_zero())
                continue;
            bool odd = std::popcount(cols & (bit - 1)) % 2 == 1;
            LaurentPoly prod = entry * sub;
            if (odd)
                total -= prod;
            else
                total += prod;
        }
        memo.emplace(cols, total);
        return total;
    };
    Mask all = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
    return minor(minor, all);
}

/// Renames variables: x_{i+1} -> x_{perm[i]+1} (0-based permutation).
inline LaurentPoly permute_vars(const LaurentPoly& p, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != p.arity())
        throw std::invalid_argument("permute_vars: permutation size differs from arity");
    std::vector<bool> seen(perm.size(), false);
    for (int j : perm) {
        if (j < 0 || j >= p.arity() || seen[static_cast<std::size_t>(j)])
            throw std::invalid_argument("permute_vars: not a permutation");
        seen[static_cast<std::size_t>(j)] = true;
    }
    return p.map_monomials([&](const Monomial& m) {
        Monomial out;
        for (int i = 0; i < p.arity(); ++i)
            out.set(perm[static_cast<std::size_t>(i)], m[i]);
        return out;
    });
}

/// x_{i+1} -> 1/x_{i+1} (0-based index).
inline LaurentPoly invert_var(const LaurentPoly& p, int i) {
    if (i < 0 || i >= p.arity())
        throw std::invalid_argument("invert_var: index out of range");
    return p.map_monomials([i](Monomial m) {
        m.set(i, -m[i]);
        return m;
    });
}

/// Every x_i -> x_i^k.
inline LaurentPoly power_vars(const LaurentPoly& p, int k) {
    return p.map_monomials([k](const Monomial& m) { return m.power(k); });
}

/// Substitutes the atoms of v for x_1..x_arity(p). Used by tests to
/// cross-check tuple-built characters against evaluated polynomials.
inline LaurentPoly substitute(const LaurentPoly& p, const ValueTuple& v) {
    if (static_cast<int>(v.size()) != p.arity())
        throw std::invalid_argument("substitute: tuple size differs from arity");
    int t = std::lcm(p.modulus(), v.modulus());
    ValueTuple w = v.embed(t);
    LaurentPoly result(w.arity(), t);
    for (const auto& term : p.terms()) {
        CycInt c = term.coeff.embed(t);
        Monomial mono;
        for (int i = 0; i < p.arity(); ++i) {
            int e = term.mono[i];
            if (e == 0)
                continue;
            const Atom& a = w[static_cast<std::size_t>(i)];
            // Atoms are units times monomials; negative powers need the
            // coefficient inverse, which for a root of unity is its conjugate.
            CycInt base = e > 0 ? a.coeff : a.coeff.conjugate();
            if (e < 0 && !(base * a.coeff == CycInt(t, 1)))
                throw std::invalid_argument("substitute: negative power of a non-unit atom");
            c *= base.pow(e > 0 ? e : -e);
            mono = mono * a.mono.power(e);
        }
        result += LaurentPoly::term(w.arity(), c, mono);
    }
    return result;
}

}  // namespace charfact
