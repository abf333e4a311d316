#pragma once

// Integer partitions: conjugation, Frobenius coordinates, beta-sets,
// residue counts, the residue-sorting permutation and its sign, t-cores,
// t-quotients and the Littlewood bijection, plus the composite shapes
// (lambda, -mu)_n and duals used by the factorization theorems.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace charfact {

class ArityViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Weakly decreasing sequence of positive parts. Trailing zeros are never
/// stored, so (4,2) and (4,2,0) compare equal.
class Partition {
public:
    Partition() = default;

    /// Accepts any weakly decreasing nonnegative sequence; zeros are dropped.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0)
                throw std::invalid_argument("partition: negative part");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition: parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// 1-based part access; zero beyond the length.
    int operator[](int i) const noexcept {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    /// Parts padded with zeros to exactly n entries (n >= length()).
    std::vector<int> padded(int n) const {
        if (n < length())
            throw ArityViolation("partition longer than requested padding");
        std::vector<int> out(parts_);
        out.resize(static_cast<std::size_t>(n), 0);
        return out;
    }

    /// Young-diagram containment mu ⊆ *this.
    bool contains(const Partition& mu) const noexcept {
        if (mu.length() > length())
            return false;
        for (int i = 1; i <= mu.length(); ++i)
            if (mu[i] > (*this)[i])
                return false;
        return true;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
};

/// Comma-separated rendering, "" for the empty partition.
inline std::string to_string(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

/// Parenthesized rendering used in reports, e.g. "(4,1)" and "()".
inline std::string to_display(const Partition& p) { return "(" + to_string(p) + ")"; }

inline Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    std::string token;
    auto flush = [&](bool allow_empty) {
        std::size_t b = token.find_first_not_of(" \t");
        std::size_t e = token.find_last_not_of(" \t");
        std::string trimmed = b == std::string::npos ? "" : token.substr(b, e - b + 1);
        token.clear();
        if (trimmed.empty()) {
            if (allow_empty)
                return;
            throw ParseError("partition: empty part");
        }
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(trimmed, &used);
        } catch (const std::exception&) {
            throw ParseError("partition: bad part '" + trimmed + "'");
        }
        if (used != trimmed.size())
            throw ParseError("partition: bad part '" + trimmed + "'");
        parts.push_back(v);
    };
    std::string_view body = text;
    if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    if (body.find_first_not_of(" \t") == std::string_view::npos)
        return {};
    for (char c : body) {
        if (c == ',')
            flush(false);
        else
            token += c;
    }
    flush(false);
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline Partition conjugate(const Partition& lambda) {
    if (lambda.empty())
        return {};
    std::vector<int> out(static_cast<std::size_t>(lambda[1]), 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j)
            ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

inline bool is_self_conjugate(const Partition& lambda) { return lambda == conjugate(lambda); }

// ---------------------------------------------------------------------------
// Frobenius coordinates

struct FrobeniusCoords {
    std::vector<int> alpha;  // lambda_i - i
    std::vector<int> beta;   // lambda'_i - i
    int rank() const noexcept { return static_cast<int>(alpha.size()); }
    friend bool operator==(const FrobeniusCoords&, const FrobeniusCoords&) = default;
};

inline int frobenius_rank(const Partition& lambda) {
    int k = 0;
    while (lambda[k + 1] >= k + 1)
        ++k;
    return k;
}

inline FrobeniusCoords frobenius(const Partition& lambda) {
    Partition conj = conjugate(lambda);
    FrobeniusCoords fc;
    int r = frobenius_rank(lambda);
    for (int i = 1; i <= r; ++i) {
        fc.alpha.push_back(lambda[i] - i);
        fc.beta.push_back(conj[i] - i);
    }
    return fc;
}

/// Inverse of frobenius(): rebuilds the diagram from its arm and leg lengths.
inline Partition from_frobenius(const FrobeniusCoords& fc) {
    int r = fc.rank();
    if (static_cast<int>(fc.beta.size()) != r)
        throw std::invalid_argument("frobenius: alpha and beta lengths differ");
    if (r == 0)
        return {};
    for (int i = 0; i < r; ++i) {
        if (fc.alpha[static_cast<std::size_t>(i)] < 0 || fc.beta[static_cast<std::size_t>(i)] < 0)
            throw std::invalid_argument("frobenius: negative coordinate");
        if (i > 0 && (fc.alpha[static_cast<std::size_t>(i)] >= fc.alpha[static_cast<std::size_t>(i - 1)] ||
                      fc.beta[static_cast<std::size_t>(i)] >= fc.beta[static_cast<std::size_t>(i - 1)]))
            throw std::invalid_argument("frobenius: coordinates must be strictly decreasing");
    }
    int rows = fc.beta[0] + 1;
    std::vector<int> parts(static_cast<std::size_t>(rows), 0);
    for (int i = 0; i < r; ++i)
        parts[static_cast<std::size_t>(i)] = fc.alpha[static_cast<std::size_t>(i)] + i + 1;
    // Row j > r has one cell in each column c <= r whose leg reaches it.
    for (int j = r + 1; j <= rows; ++j) {
        int cells = 0;
        for (int c = 1; c <= r; ++c)
            if (fc.beta[static_cast<std::size_t>(c - 1)] + c >= j)
                ++cells;
        parts[static_cast<std::size_t>(j - 1)] = cells;
    }
    return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Beta-sets and residues

struct BetaSet {
    std::vector<int> entries;  // strictly decreasing, length m
    int m = 0;
};

inline BetaSet beta_set(const Partition& lambda, int m) {
    if (m < lambda.length())
        throw ArityViolation("beta_set: m = " + std::to_string(m) + " is smaller than the length of " +
                             to_display(lambda));
    BetaSet b;
    b.m = m;
    b.entries.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i)
        b.entries.push_back(lambda[i] + m - i);
    return b;
}

inline Partition from_beta_set(std::vector<int> entries) {
    std::sort(entries.begin(), entries.end(), std::greater<>());
    int m = static_cast<int>(entries.size());
    std::vector<int> parts;
    for (int i = 1; i <= m; ++i)
        parts.push_back(entries[static_cast<std::size_t>(i - 1)] - m + i);
    if (!parts.empty() && parts.back() < 0)
        throw std::invalid_argument("beta-set entries must be distinct and nonnegative");
    return Partition(std::move(parts));
}

inline int residue(int value, int t) { return ((value % t) + t) % t; }

inline std::vector<int> residue_counts(const Partition& lambda, int m, int t) {
    if (t < 1)
        throw std::invalid_argument("residue_counts: t must be positive");
    std::vector<int> counts(static_cast<std::size_t>(t), 0);
    for (int b : beta_set(lambda, m).entries)
        ++counts[static_cast<std::size_t>(residue(b, t))];
    return counts;
}

/// Order in which residue classes are listed by sigma. Absent: 0,1,...,t-1.
/// Present: the given strictly decreasing classes first, then the remaining
/// classes in increasing order.
inline std::vector<int> residue_order(int t, const std::optional<std::vector<int>>& leading) {
    std::vector<int> order;
    std::vector<bool> used(static_cast<std::size_t>(t), false);
    if (leading) {
        for (std::size_t i = 0; i < leading->size(); ++i) {
            int e = (*leading)[i];
            if (e < 0 || e >= t)
                throw std::invalid_argument("sigma: residue class out of range");
            if (i > 0 && e >= (*leading)[i - 1])
                throw std::invalid_argument("sigma: residue order must be strictly decreasing");
            order.push_back(e);
            used[static_cast<std::size_t>(e)] = true;
        }
    }
    for (int e = 0; e < t; ++e)
        if (!used[static_cast<std::size_t>(e)])
            order.push_back(e);
    return order;
}

/// One-line notation (1-based) of the permutation that lists beta(lambda, m)
/// class by class in the given residue order, each class decreasing.
inline std::vector<int> sigma_permutation(const Partition& lambda, int m, int t,
                                          const std::optional<std::vector<int>>& order = std::nullopt) {
    BetaSet b = beta_set(lambda, m);
    std::vector<int> perm;
    perm.reserve(static_cast<std::size_t>(m));
    for (int cls : residue_order(t, order))
        for (int i = 0; i < m; ++i)  // entries already decreasing
            if (residue(b.entries[static_cast<std::size_t>(i)], t) == cls)
                perm.push_back(i + 1);
    return perm;
}

namespace detail {
// Merge sort counting inversions.
inline long long count_inversions(std::vector<int>& a, std::vector<int>& scratch, std::size_t lo, std::size_t hi) {
    if (hi - lo < 2)
        return 0;
    std::size_t mid = (lo + hi) / 2;
    long long inv = count_inversions(a, scratch, lo, mid) + count_inversions(a, scratch, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (a[j] < a[i]) {
            inv += static_cast<long long>(mid - i);
            scratch[k++] = a[j++];
        } else {
            scratch[k++] = a[i++];
        }
    }
    while (i < mid)
        scratch[k++] = a[i++];
    while (j < hi)
        scratch[k++] = a[j++];
    std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo), scratch.begin() + static_cast<std::ptrdiff_t>(hi),
              a.begin() + static_cast<std::ptrdiff_t>(lo));
    return inv;
}
}  // namespace detail

inline long long inversion_count(std::vector<int> perm) {
    std::vector<int> scratch(perm.size());
    return detail::count_inversions(perm, scratch, 0, perm.size());
}

inline int permutation_sign(const std::vector<int>& perm) { return inversion_count(perm) % 2 == 0 ? 1 : -1; }

inline int sigma_sign(const Partition& lambda, int m, int t,
                      const std::optional<std::vector<int>>& order = std::nullopt) {
    return permutation_sign(sigma_permutation(lambda, m, t, order));
}

// ---------------------------------------------------------------------------
// Cores, quotients, Littlewood bijection

struct CoreQuotient {
    Partition core;
    std::vector<Partition> quotient;
    int t = 0;
    int m = 0;
};

/// Smallest multiple of t that is at least the length of lambda.
inline int default_beta_length(const Partition& lambda, int t) {
    return t * ((lambda.length() + t - 1) / t);
}

inline CoreQuotient core_quotient(const Partition& lambda, int t, int m) {
    if (t < 1)
        throw std::invalid_argument("core_quotient: t must be positive");
    BetaSet b = beta_set(lambda, m);
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(t));
    for (int e : b.entries)
        classes[static_cast<std::size_t>(residue(e, t))].push_back(e);  // decreasing within class

    CoreQuotient cq;
    cq.t = t;
    cq.m = m;
    std::vector<int> slid;
    for (int i = 0; i < t; ++i) {
        const auto& cls = classes[static_cast<std::size_t>(i)];
        int ni = static_cast<int>(cls.size());
        std::vector<int> q;
        for (int j = 1; j <= ni; ++j) {
            int reduced = (cls[static_cast<std::size_t>(j - 1)] - i) / t;
            q.push_back(reduced - ni + j);
        }
        cq.quotient.emplace_back(std::move(q));
        for (int j = 0; j < ni; ++j)
            slid.push_back(t * j + i);
    }
    cq.core = from_beta_set(std::move(slid));
    return cq;
}

inline Partition t_core(const Partition& lambda, int t) {
    return core_quotient(lambda, t, default_beta_length(lambda, t)).core;
}

inline std::vector<Partition> t_quotient(const Partition& lambda, int t, int m) {
    return core_quotient(lambda, t, m).quotient;
}

inline std::vector<Partition> t_quotient(const Partition& lambda, int t) {
    return t_quotient(lambda, t, default_beta_length(lambda, t));
}

inline bool is_t_core(const Partition& lambda, int t) { return t_core(lambda, t) == lambda; }

/// Rebuilds lambda from its core and its quotient, the quotient being
/// labelled with respect to a beta-set of length m (m >= length of the
/// result). Throws if no such lambda exists.
inline Partition littlewood_inverse(const Partition& core, const std::vector<Partition>& quotient, int t, int m) {
    if (static_cast<int>(quotient.size()) != t)
        throw std::invalid_argument("littlewood_inverse: quotient must have t entries");
    if (!is_t_core(core, t))
        throw std::invalid_argument("littlewood_inverse: " + to_display(core) + " is not a " + std::to_string(t) +
                                    "-core");
    if (m < core.length())
        throw ArityViolation("littlewood_inverse: beta length too small for the core");
    std::vector<int> counts = residue_counts(core, m, t);
    std::vector<int> entries;
    for (int i = 0; i < t; ++i) {
        const Partition& q = quotient[static_cast<std::size_t>(i)];
        int ni = counts[static_cast<std::size_t>(i)];
        if (q.length() > ni)
            throw ArityViolation("littlewood_inverse: beta length too small for the quotient");
        for (int j = 1; j <= ni; ++j)
            entries.push_back(t * (q[j] + ni - j) + i);
    }
    return from_beta_set(std::move(entries));
}

/// Inverse with the canonical labelling (beta length a multiple of t); the
/// beta length is grown until every quotient entry fits.
inline Partition littlewood_inverse(const Partition& core, const std::vector<Partition>& quotient, int t) {
    if (static_cast<int>(quotient.size()) != t)
        throw std::invalid_argument("littlewood_inverse: quotient must have t entries");
    int m = default_beta_length(core, t);
    for (;;) {
        std::vector<int> counts = residue_counts(core, m, t);
        bool fits = true;
        for (int i = 0; i < t; ++i)
            fits = fits && quotient[static_cast<std::size_t>(i)].length() <= counts[static_cast<std::size_t>(i)];
        if (fits)
            return littlewood_inverse(core, quotient, t, m);
        m += t;
    }
}

/// lambda = (alpha | alpha + 1) in Frobenius coordinates.
inline bool is_symplectic_shape(const Partition& lambda) {
    FrobeniusCoords fc = frobenius(lambda);
    for (int i = 0; i < fc.rank(); ++i)
        if (fc.beta[static_cast<std::size_t>(i)] != fc.alpha[static_cast<std::size_t>(i)] + 1)
            return false;
    return true;
}

/// lambda = (alpha + 1 | alpha) in Frobenius coordinates.
inline bool is_orthogonal_shape(const Partition& lambda) {
    FrobeniusCoords fc = frobenius(lambda);
    for (int i = 0; i < fc.rank(); ++i)
        if (fc.alpha[static_cast<std::size_t>(i)] != fc.beta[static_cast<std::size_t>(i)] + 1)
            return false;
    return true;
}

inline bool is_symplectic_core(const Partition& lambda, int t) { return is_symplectic_shape(t_core(lambda, t)); }
inline bool is_orthogonal_core(const Partition& lambda, int t) { return is_orthogonal_shape(t_core(lambda, t)); }
inline bool is_self_conjugate_core(const Partition& lambda, int t) { return is_self_conjugate(t_core(lambda, t)); }

// ---------------------------------------------------------------------------
// Composite shapes

/// (lambda, -mu)_n = mu_1 + (lambda, 0, ..., 0, -rev(mu)) with n entries.
inline Partition concat_neg(const Partition& lambda, const Partition& mu, int n) {
    if (n < lambda.length() + mu.length())
        throw ArityViolation("concat_neg: n = " + std::to_string(n) + " is too small for " + to_display(lambda) +
                             " and " + to_display(mu));
    std::vector<int> parts(static_cast<std::size_t>(n), mu[1]);
    for (int i = 1; i <= lambda.length(); ++i)
        parts[static_cast<std::size_t>(i - 1)] += lambda[i];
    for (int j = 1; j <= mu.length(); ++j)
        parts[static_cast<std::size_t>(n - j)] -= mu[j];
    return Partition(std::move(parts));
}

inline Partition plus_minus(const Partition& lambda, int n) { return concat_neg(lambda, lambda, n); }

/// Dual with respect to GL_n: (c - lambda_n, ..., c - lambda_1), c = lambda_1.
inline Partition dual(const Partition& lambda, int n) {
    if (lambda.length() > n)
        throw ArityViolation("dual: partition longer than n");
    std::vector<int> parts;
    int c = lambda[1];
    for (int i = n; i >= 1; --i)
        parts.push_back(c - lambda[i]);
    return Partition(std::move(parts));
}

inline Partition staircase(int n) {
    if (n < 0)
        throw std::invalid_argument("staircase: negative size");
    std::vector<int> parts;
    for (int i = n; i >= 1; --i)
        parts.push_back(i);
    return Partition(std::move(parts));
}

/// Whether lambda is (k, k-1, ..., 1) for some k >= 0.
inline bool is_staircase(const Partition& lambda) { return lambda == staircase(lambda.length()); }

inline Partition scale(const Partition& lambda, int k) {
    std::vector<int> parts(lambda.parts());
    for (int& p : parts)
        p *= k;
    return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Bounded enumeration

/// All partitions of n with at most max_length parts and largest part at most
/// max_part, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n, int max_length = -1, int max_part = -1) {
    std::vector<Partition> out;
    if (n < 0)
        return out;
    if (max_part < 0 || max_part > n)
        max_part = n;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (max_length >= 0 && static_cast<int>(cur.size()) >= max_length)
            return;
        for (int p = std::min(cap, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, max_part);
    return out;
}

/// All partitions with size <= max_size and length <= max_length (-1: no bound),
/// ordered by size then reverse lexicographically.
inline std::vector<Partition> partitions_up_to(int max_size, int max_length = -1) {
    std::vector<Partition> out;
    for (int s = 0; s <= max_size; ++s) {
        auto level = partitions_of(s, max_length);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

/// All mu ⊆ lambda, ordered by size.
inline std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row) -> void {
        if (row > lambda.length()) {
            out.emplace_back(cur);
            return;
        }
        int cap = std::min(lambda[row], row == 1 ? lambda[row] : cur.back());
        for (int p = 0; p <= cap; ++p) {
            cur.push_back(p);
            if (p == 0) {
                out.emplace_back(cur);
            } else {
                self(self, row + 1);
            }
            cur.pop_back();
        }
    };
    if (lambda.empty())
        return {Partition{}};
    rec(rec, 1);
    std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a.size() < b.size(); });
    return out;
}

}  // namespace charfact
