#pragma once

// Exact arithmetic in Z[w], w a primitive t-th root of unity. Elements are
// integer polynomials in w of degree below phi(t), always reduced modulo the
// t-th cyclotomic polynomial.

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace charfact {

using Integer = boost::multiprecision::cpp_int;

/// Coefficients of Phi_t, lowest degree first, via
/// Phi_t(q) = (q^t - 1) / prod_{d | t, d < t} Phi_d(q).
inline std::vector<long long> cyclotomic_polynomial(int t) {
    if (t < 1)
        throw std::invalid_argument("cyclotomic_polynomial: t must be positive");
    std::vector<long long> num(static_cast<std::size_t>(t) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(t)] = 1;
    for (int d = 1; d < t; ++d) {
        if (t % d != 0)
            continue;
        std::vector<long long> den = cyclotomic_polynomial(d);
        // Exact division by a monic polynomial.
        std::size_t dn = den.size() - 1;
        std::vector<long long> quot(num.size() - dn, 0);
        for (std::size_t k = num.size(); k-- > dn;) {
            long long c = num[k];
            quot[k - dn] = c;
            for (std::size_t j = 0; j <= dn; ++j)
                num[k - dn + j] -= c * den[j];
        }
        for (std::size_t k = 0; k < dn; ++k)
            if (num[k] != 0)
                throw std::logic_error("cyclotomic_polynomial: inexact division");
        num = std::move(quot);
    }
    return num;
}

namespace detail {

/// Per-modulus data shared by all elements of Z[w_t].
struct CyclotomicRing {
    int t = 1;
    int degree = 1;                              // phi(t)
    std::vector<long long> phi;                  // Phi_t coefficients
    std::vector<std::vector<int>> omega_powers;  // w^k reduced, k = 0..t-1
};

inline std::vector<int> reduce_small(std::vector<long long> poly, const std::vector<long long>& phi) {
    std::size_t deg = phi.size() - 1;
    for (std::size_t k = poly.size(); k-- > deg;) {
        long long c = poly[k];
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= deg; ++j)
            poly[k - deg + j] -= c * phi[j];
    }
    std::vector<int> out(deg, 0);
    for (std::size_t k = 0; k < deg && k < poly.size(); ++k)
        out[k] = static_cast<int>(poly[k]);
    return out;
}

inline const CyclotomicRing& ring_slow(int t) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CyclotomicRing>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it != cache.end())
        return *it->second;
    if (t < 1)
        throw std::invalid_argument("cyclotomic ring: t must be positive");
    auto r = std::make_unique<CyclotomicRing>();
    r->t = t;
    r->phi = cyclotomic_polynomial(t);
    r->degree = static_cast<int>(r->phi.size()) - 1;
    for (int k = 0; k < t; ++k) {
        std::vector<long long> mono(static_cast<std::size_t>(k) + 1, 0);
        mono[static_cast<std::size_t>(k)] = 1;
        r->omega_powers.push_back(reduce_small(std::move(mono), r->phi));
    }
    return *cache.emplace(t, std::move(r)).first->second;
}

/// Lock-free lookup after the first use of a modulus on each thread.
inline const CyclotomicRing& ring(int t) {
    thread_local std::vector<const CyclotomicRing*> seen;
    if (t >= 1 && static_cast<std::size_t>(t) < seen.size() && seen[static_cast<std::size_t>(t)])
        return *seen[static_cast<std::size_t>(t)];
    const CyclotomicRing& r = ring_slow(t);
    if (seen.size() <= static_cast<std::size_t>(t))
        seen.resize(static_cast<std::size_t>(t) + 1, nullptr);
    seen[static_cast<std::size_t>(t)] = &r;
    return r;
}

}  // namespace detail

class CycInt {
public:
    using Coeffs = boost::container::small_vector<Integer, 4>;

    CycInt() : CycInt(1) {}
    explicit CycInt(int t) : t_(t), coeffs_(static_cast<std::size_t>(detail::ring(t).degree)) {}
    CycInt(int t, const Integer& value) : CycInt(t) { coeffs_[0] = value; }
    CycInt(int t, long long value) : CycInt(t, Integer(value)) {}

    /// From coefficients of 1, w, w^2, ... (any length; reduced here).
    static CycInt from_coefficients(int t, const std::vector<Integer>& coeffs) {
        CycInt out(t);
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (coeffs[k] != 0)
                out += omega_pow(t, static_cast<int>(k)) * CycInt(t, coeffs[k]);
        return out;
    }

    static CycInt omega_pow(int t, long long k) {
        const auto& r = detail::ring(t);
        CycInt out(t);
        const auto& pw = r.omega_powers[static_cast<std::size_t>(((k % t) + t) % t)];
        for (std::size_t i = 0; i < pw.size(); ++i)
            out.coeffs_[i] = pw[i];
        return out;
    }

    int modulus() const noexcept { return t_; }
    const Coeffs& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const noexcept {
        for (const auto& c : coeffs_)
            if (!c.is_zero())
                return false;
        return true;
    }

    /// True when the element lies in Z (all higher coefficients vanish).
    bool is_integer() const noexcept {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero())
                return false;
        return true;
    }

    const Integer& constant_term() const noexcept { return coeffs_[0]; }

    CycInt& operator+=(const CycInt& o) {
        check(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    CycInt& operator-=(const CycInt& o) {
        check(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    CycInt operator-() const {
        CycInt out(*this);
        for (auto& c : out.coeffs_)
            c = -c;
        return out;
    }
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }

    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        CycInt out(a.t_);
        out.add_product(a, b);
        return out;
    }
    CycInt& operator*=(const CycInt& o) { return *this = *this * o; }

    /// *this += a * b without a temporary for the product.
    void add_product(const CycInt& a, const CycInt& b) {
        a.check(b);
        check(a);
        std::size_t d = coeffs_.size();
        if (d == 1) {
            coeffs_[0] += a.coeffs_[0] * b.coeffs_[0];
            return;
        }
        boost::container::small_vector<Integer, 8> full(2 * d - 1);
        for (std::size_t i = 0; i < d; ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < d; ++j)
                if (!b.coeffs_[j].is_zero())
                    full[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        const auto& phi = detail::ring(t_).phi;
        for (std::size_t k = full.size(); k-- > d;) {
            if (full[k].is_zero())
                continue;
            Integer c = full[k];
            for (std::size_t j = 0; j <= d; ++j)
                if (phi[j] != 0)
                    full[k - d + j] -= c * phi[j];
        }
        for (std::size_t i = 0; i < d; ++i)
            coeffs_[i] += full[i];
    }

    /// Multiplication by w^k.
    CycInt times_omega(long long k) const {
        if (((k % t_) + t_) % t_ == 0)
            return *this;
        return *this * omega_pow(t_, k);
    }

    /// Galois conjugate w -> w^{-1}; complex conjugation.
    CycInt conjugate() const {
        CycInt out(t_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero())
                out += omega_pow(t_, -static_cast<long long>(i)) * CycInt(t_, coeffs_[i]);
        return out;
    }

    /// Image under Z[w_t] -> Z[w_T], w_t -> w_T^{T/t}, for t | T.
    CycInt embed(int target) const {
        if (target == t_)
            return *this;
        if (target % t_ != 0)
            throw std::invalid_argument("CycInt::embed: " + std::to_string(t_) + " does not divide " +
                                        std::to_string(target));
        int step = target / t_;
        CycInt out(target);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero())
                out += omega_pow(target, static_cast<long long>(i) * step) * CycInt(target, coeffs_[i]);
        return out;
    }

    CycInt pow(int e) const {
        if (e < 0)
            throw std::invalid_argument("CycInt::pow: negative exponent");
        CycInt result(t_, 1);
        CycInt base(*this);
        while (e > 0) {
            if (e & 1)
                result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    /// Exact division of every coefficient by k; nullopt when some coefficient
    /// is not divisible.
    std::optional<CycInt> divided_by(const Integer& k) const {
        CycInt out(t_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] % k != 0)
                return std::nullopt;
            out.coeffs_[i] = coeffs_[i] / k;
        }
        return out;
    }

    /// Debug rendering as an integer polynomial in w, e.g. "1 - w + w^2".
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Integer& c = coeffs_[i];
            if (c.is_zero())
                continue;
            bool neg = c < 0;
            Integer mag = neg ? Integer(-c) : c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            std::string power = i == 0 ? "" : (i == 1 ? "w" : "w^" + std::to_string(i));
            if (i == 0)
                out += mag.str();
            else if (mag == 1)
                out += power;
            else
                out += mag.str() + "*" + power;
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const CycInt& a, const CycInt& b) {
        return a.t_ == b.t_ && a.coeffs_ == b.coeffs_;
    }

private:
    void check(const CycInt& o) const {
        if (o.t_ != t_)
            throw std::invalid_argument("CycInt: mixing Z[w_" + std::to_string(t_) + "] and Z[w_" +
                                        std::to_string(o.t_) + "]");
    }

    int t_;
    Coeffs coeffs_;
};

}  // namespace charfact
