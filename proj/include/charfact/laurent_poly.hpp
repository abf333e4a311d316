#pragma once

// Sparse multivariate Laurent polynomials with coefficients in Z[w_t].

#include "cyclotomic.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace charfact {

inline constexpr int kMaxVariables = 8;

/// Exponent vector over x_1..x_k (k <= kMaxVariables); unused slots are zero.
class Monomial {
public:
    using Exponent = std::int16_t;

    Monomial() { exps_.fill(0); }

    static Monomial variable(int index, int power = 1) {
        check_index(index);
        Monomial m;
        m.exps_[static_cast<std::size_t>(index)] = static_cast<Exponent>(power);
        return m;
    }

    int operator[](int i) const noexcept { return exps_[static_cast<std::size_t>(i)]; }
    void set(int i, int e) {
        check_index(i);
        exps_[static_cast<std::size_t>(i)] = static_cast<Exponent>(e);
    }

    int degree() const noexcept {
        int d = 0;
        for (auto e : exps_)
            d += e;
        return d;
    }

    bool is_one() const noexcept {
        for (auto e : exps_)
            if (e != 0)
                return false;
        return true;
    }

    /// Highest variable index used plus one.
    int span() const noexcept {
        for (int i = kMaxVariables; i-- > 0;)
            if (exps_[static_cast<std::size_t>(i)] != 0)
                return i + 1;
        return 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (std::size_t i = 0; i < a.exps_.size(); ++i)
            m.exps_[i] = static_cast<Exponent>(a.exps_[i] + b.exps_[i]);
        return m;
    }

    Monomial inverse() const {
        Monomial m;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            m.exps_[i] = static_cast<Exponent>(-exps_[i]);
        return m;
    }

    Monomial power(int k) const {
        Monomial m;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            m.exps_[i] = static_cast<Exponent>(exps_[i] * k);
        return m;
    }

    /// Graded lexicographic order: total degree first, then exponents of
    /// x_1, x_2, ... in turn.
    friend bool graded_lex_less(const Monomial& a, const Monomial& b) noexcept {
        int da = a.degree(), db = b.degree();
        if (da != db)
            return da < db;
        return a.exps_ < b.exps_;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::size_t hash() const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto e : exps_) {
            h ^= static_cast<std::uint16_t>(e);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }

    std::string to_string(int arity) const {
        std::string out;
        for (int i = 0; i < arity; ++i) {
            int e = (*this)[i];
            if (e == 0)
                continue;
            if (!out.empty())
                out += '*';
            out += "x" + std::to_string(i + 1);
            if (e != 1)
                out += "^" + std::to_string(e);
        }
        return out;
    }

private:
    static void check_index(int i) {
        if (i < 0 || i >= kMaxVariables)
            throw std::out_of_range("monomial: variable index out of range");
    }
    std::array<Exponent, kMaxVariables> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Canonical sparse Laurent polynomial: terms sorted by decreasing graded-lex
/// monomial, no zero coefficients. All coefficients live in Z[w_t] for one t.
class LaurentPoly {
public:
    struct Term {
        Monomial mono;
        CycInt coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    LaurentPoly() : LaurentPoly(0, 1) {}
    LaurentPoly(int arity, int t) : arity_(arity), t_(t) {
        if (arity < 0 || arity > kMaxVariables)
            throw std::invalid_argument("LaurentPoly: arity out of range");
    }

    static LaurentPoly constant(int arity, const CycInt& c) {
        LaurentPoly p(arity, c.modulus());
        if (!c.is_zero())
            p.terms_.push_back({Monomial{}, c});
        return p;
    }
    static LaurentPoly constant(int arity, int t, long long c) { return constant(arity, CycInt(t, c)); }
    static LaurentPoly one(int arity, int t) { return constant(arity, t, 1); }

    static LaurentPoly term(int arity, const CycInt& c, const Monomial& m) {
        LaurentPoly p(arity, c.modulus());
        if (m.span() > arity)
            throw std::invalid_argument("LaurentPoly: monomial exceeds arity");
        if (!c.is_zero())
            p.terms_.push_back({m, c});
        return p;
    }

    /// x_{index+1} (0-based index).
    static LaurentPoly variable(int arity, int t, int index, int power = 1) {
        return term(arity, CycInt(t, 1), Monomial::variable(index, power));
    }

    /// Builds from arbitrary (monomial, coefficient) pairs; like terms merge.
    static LaurentPoly from_terms(int arity, int t, std::vector<Term> terms) {
        LaurentPoly p(arity, t);
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    int arity() const noexcept { return arity_; }
    int modulus() const noexcept { return t_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Constant term as an element of Z[w_t] when the polynomial is constant.
    std::optional<CycInt> as_constant() const {
        if (terms_.empty())
            return CycInt(t_);
        if (terms_.size() == 1 && terms_[0].mono.is_one())
            return terms_[0].coeff;
        return std::nullopt;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = merge(*this, o, false); }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = merge(*this, o, true); }
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, false); }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, true); }

    LaurentPoly operator-() const {
        LaurentPoly out(*this);
        for (auto& term : out.terms_)
            term.coeff = -term.coeff;
        return out;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check(b);
        LaurentPoly out(a.arity_, a.t_);
        if (a.is_zero() || b.is_zero())
            return out;
        if (a.size() == 1)
            return b.times_term(a.terms_[0].coeff, a.terms_[0].mono);
        if (b.size() == 1)
            return a.times_term(b.terms_[0].coeff, b.terms_[0].mono);
        std::unordered_map<Monomial, CycInt, MonomialHash> acc;
        acc.reserve(a.size() + b.size() * 4);
        for (const auto& x : a.terms_) {
            for (const auto& y : b.terms_) {
                auto [it, inserted] = acc.try_emplace(x.mono * y.mono, a.t_);
                it->second.add_product(x.coeff, y.coeff);
            }
        }
        out.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!c.is_zero())
                out.terms_.push_back({m, std::move(c)});
        out.sort_terms();
        return out;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly times_scalar(const CycInt& c) const {
        return times_term(c, Monomial{});
    }

    /// Multiplication by c * m; order is preserved since the monomial order
    /// is compatible with multiplication.
    LaurentPoly times_term(const CycInt& c, const Monomial& m) const {
        LaurentPoly out(arity_, t_);
        if (c.modulus() != t_)
            throw std::invalid_argument("LaurentPoly: coefficient ring mismatch");
        if (c.is_zero())
            return out;
        out.terms_.reserve(terms_.size());
        bool unit = c == CycInt(t_, 1);
        for (const auto& term : terms_) {
            CycInt coeff = unit ? term.coeff : term.coeff * c;
            if (!coeff.is_zero())
                out.terms_.push_back({term.mono * m, std::move(coeff)});
        }
        return out;
    }

    LaurentPoly pow(int e) const {
        if (e < 0)
            throw std::invalid_argument("LaurentPoly::pow: negative exponent");
        LaurentPoly result = one(arity_, t_);
        for (int i = 0; i < e; ++i)
            result *= *this;
        return result;
    }

    /// Applies f to every monomial and re-canonicalizes.
    template <class F>
    LaurentPoly map_monomials(F&& f, int new_arity = -1) const {
        int arity = new_arity < 0 ? arity_ : new_arity;
        std::vector<Term> terms;
        terms.reserve(terms_.size());
        for (const auto& term : terms_)
            terms.push_back({f(term.mono), term.coeff});
        for (const auto& term : terms)
            if (term.mono.span() > arity)
                throw std::invalid_argument("LaurentPoly: monomial exceeds arity");
        return from_terms(arity, t_, std::move(terms));
    }

    /// Applies f to every coefficient (e.g. a ring embedding) and re-canonicalizes.
    template <class F>
    LaurentPoly map_coefficients(F&& f, int new_modulus) const {
        std::vector<Term> terms;
        terms.reserve(terms_.size());
        for (const auto& term : terms_)
            terms.push_back({term.mono, f(term.coeff)});
        return from_terms(arity_, new_modulus, std::move(terms));
    }

    /// Same polynomial viewed in more variables.
    LaurentPoly with_arity(int new_arity) const {
        if (new_arity < arity_) {
            for (const auto& term : terms_)
                if (term.mono.span() > new_arity)
                    throw std::invalid_argument("LaurentPoly: cannot drop a variable that occurs");
        }
        LaurentPoly out(*this);
        out.arity_ = new_arity;
        return out;
    }

    LaurentPoly embed(int target) const {
        return map_coefficients([target](const CycInt& c) { return c.embed(target); }, target);
    }

    /// Deterministic text rendering, e.g. "x1^2 + (1 - w)*x1*x2 - 3".
    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& term : terms_) {
            std::string mono = term.mono.to_string(arity_);
            const CycInt& c = term.coeff;
            bool first = out.empty();
            if (c.is_integer()) {
                const Integer& v = c.constant_term();
                bool neg = v < 0;
                Integer mag = neg ? Integer(-v) : v;
                out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
                if (mono.empty())
                    out += mag.str();
                else if (mag == 1)
                    out += mono;
                else
                    out += mag.str() + "*" + mono;
            } else {
                out += first ? "" : " + ";
                out += "(" + c.to_string() + ")";
                if (!mono.empty())
                    out += "*" + mono;
            }
        }
        return out;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.arity_ == b.arity_ && a.t_ == b.t_ && a.terms_ == b.terms_;
    }

private:
    void check(const LaurentPoly& o) const {
        if (o.arity_ != arity_)
            throw std::invalid_argument("LaurentPoly: arity mismatch (" + std::to_string(arity_) + " vs " +
                                        std::to_string(o.arity_) + ")");
        if (o.t_ != t_)
            throw std::invalid_argument("LaurentPoly: coefficient ring mismatch");
    }

    static bool term_greater(const Term& a, const Term& b) { return graded_lex_less(b.mono, a.mono); }

    void sort_terms() { std::sort(terms_.begin(), terms_.end(), term_greater); }

    void canonicalize() {
        for (const auto& term : terms_)
            if (term.coeff.modulus() != t_)
                throw std::invalid_argument("LaurentPoly: coefficient ring mismatch");
        sort_terms();
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (auto& term : terms_) {
            if (!merged.empty() && merged.back().mono == term.mono)
                merged.back().coeff += term.coeff;
            else
                merged.push_back(std::move(term));
        }
        std::erase_if(merged, [](const Term& term) { return term.coeff.is_zero(); });
        terms_ = std::move(merged);
    }

    static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
        a.check(b);
        LaurentPoly out(a.arity_, a.t_);
        out.terms_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && term_greater(a.terms_[i], b.terms_[j]))) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || term_greater(b.terms_[j], a.terms_[i])) {
                const Term& y = b.terms_[j++];
                out.terms_.push_back({y.mono, subtract ? -y.coeff : y.coeff});
            } else {
                CycInt c = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
                if (!c.is_zero())
                    out.terms_.push_back({a.terms_[i].mono, std::move(c)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    int arity_;
    int t_;
    std::vector<Term> terms_;
};

}  // namespace charfact
