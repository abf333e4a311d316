#pragma once

// Exhaustive sweeps over the registry, their bounds record, and the JSON
// rendering shared by the command-line front end and the tests.

#include "factorizations.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

namespace charfact {

/// Every enumeration limit of a sweep in one place. Empty lists fall back to
/// per-theorem defaults, except t and n: an empty t list (for entries indexed
/// by t) or n list (for the rest) means nothing is enumerated.
struct SweepBounds {
    int max_size = -1;  // -1: unset, enumerates nothing
    std::vector<int> t_values;
    std::vector<int> n_values;
    std::vector<int> m_values;
    std::vector<int> arity_values;
    std::vector<std::string> families;
    int threads = 0;  // 0: CHARFACT_THREADS, then the hardware
};

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text, const std::string& key) {
    std::vector<int> out;
    std::string item;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ParseError("sweep bounds: bad integer '" + item + "' for " + key);
        }
        if (used != item.size())
            throw ParseError("sweep bounds: bad integer '" + item + "' for " + key);
        out.push_back(v);
    }
    return out;
}

inline std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace detail

/// Parses "size<=8;t=2,3,4;n=1;m=0,1;arity=2;family=s,sp".
inline SweepBounds parse_sweep_bounds(std::string_view text) {
    SweepBounds b;
    std::stringstream ss{std::string(text)};
    std::string clause;
    while (std::getline(ss, clause, ';')) {
        clause = detail::trim(clause);
        if (clause.empty())
            continue;
        if (clause.rfind("size<=", 0) == 0) {
            auto v = detail::parse_int_list(clause.substr(6), "size");
            if (v.size() != 1 || v[0] < 0)
                throw ParseError("sweep bounds: size needs one nonnegative integer");
            b.max_size = v[0];
            continue;
        }
        auto eq = clause.find('=');
        if (eq == std::string::npos)
            throw ParseError("sweep bounds: cannot read clause '" + clause + "'");
        std::string key = detail::trim(clause.substr(0, eq));
        std::string value = clause.substr(eq + 1);
        if (key == "t")
            b.t_values = detail::parse_int_list(value, key);
        else if (key == "n")
            b.n_values = detail::parse_int_list(value, key);
        else if (key == "m")
            b.m_values = detail::parse_int_list(value, key);
        else if (key == "arity")
            b.arity_values = detail::parse_int_list(value, key);
        else if (key == "family") {
            std::stringstream fs(value);
            std::string f;
            while (std::getline(fs, f, ','))
                if (!detail::trim(f).empty())
                    b.families.push_back(detail::trim(f));
        } else if (key == "threads") {
            auto v = detail::parse_int_list(value, key);
            if (v.size() != 1 || v[0] < 0)
                throw ParseError("sweep bounds: threads needs one nonnegative integer");
            b.threads = v[0];
        } else {
            throw ParseError("sweep bounds: unknown key '" + key + "'");
        }
    }
    return b;
}

namespace detail {

inline bool uses_t(TheoremId id) {
    switch (id) {
        case TheoremId::Facx:
        case TheoremId::Facx1:
        case TheoremId::RelSoSp:
        case TheoremId::RelSpOo:
        case TheoremId::RelOOo:
        case TheoremId::RelSomOe:
        case TheoremId::SplitBranching:
        case TheoremId::StaircaseSkew:
        case TheoremId::HookEq:
        case TheoremId::HookFac:
        case TheoremId::StaircaseFac:
        case TheoremId::Compid:
        case TheoremId::Rseval:
        case TheoremId::LemmaEq: return false;
        default: return true;
    }
}

inline std::vector<int> or_default(const std::vector<int>& v, std::vector<int> fallback) {
    return v.empty() ? fallback : v;
}

inline std::vector<Partition> bounded(int max_size, int max_length) {
    if (max_size < 0 || max_length < 0)
        return {};
    return partitions_up_to(max_size, max_length);
}

}  // namespace detail

/// All parameter sets a sweep visits, in a fixed order.
inline std::vector<Params> enumerate_params(TheoremId id, const SweepBounds& b) {
    using namespace detail;
    std::vector<Params> out;
    const int S = b.max_size;
    if (S < 0)
        return out;
    const bool needs_t = uses_t(id);
    if (needs_t && b.t_values.empty())
        return out;
    std::vector<int> ns = needs_t ? or_default(b.n_values, {1}) : b.n_values;
    if (!needs_t && ns.empty() && id != TheoremId::Rseval && id != TheoremId::LemmaEq)
        return out;

    auto with = [](Params p, auto&& f) {
        f(p);
        return p;
    };

    switch (id) {
        case TheoremId::RootsOfUnity:
        case TheoremId::UnivRootsSp:
        case TheoremId::UnivRootsO:
        case TheoremId::UnivRootsSo:
        case TheoremId::UnivRootsSom:
        case TheoremId::ClassRootsSp:
        case TheoremId::ClassRootsOe:
        case TheoremId::ClassRootsOo:
            for (int t : b.t_values)
                for (const auto& l : bounded(S, t))
                    out.push_back(with(Params{}, [&](Params& p) { p.lambda = l; p.t = t; }));
            break;
        case TheoremId::SchurFac:
            for (int t : b.t_values)
                for (int n : ns)
                    for (const auto& l : bounded(S, t * n))
                        out.push_back(with(Params{}, [&](Params& p) { p.lambda = l; p.t = t; p.n = n; }));
            break;
        case TheoremId::UnivSpFac:
        case TheoremId::UnivOFac:
        case TheoremId::UnivSoFac:
            for (int t : b.t_values)
                for (int n : ns)
                    for (int a : or_default(b.arity_values, {2}))
                        for (const auto& l : bounded(S, t * n))
                            out.push_back(with(Params{}, [&](Params& p) { p.lambda = l; p.t = t; p.n = n; p.arity = a; }));
            break;
        case TheoremId::SchurK:
            for (int t : b.t_values)
                for (int n : ns) {
                    std::vector<int> ms;
                    for (int m = 0; m < t; ++m)
                        ms.push_back(m);
                    for (int m : or_default(b.m_values, ms)) {
                        if (m < 0 || m >= t)
                            continue;
                        for (const auto& l : bounded(S, t * n + m))
                            out.push_back(with(Params{}, [&](Params& p) { p.lambda = l; p.t = t; p.n = n; p.m = m; }));
                    }
                }
            break;
        case TheoremId::Evenfac1:
            for (int t : b.t_values)
                for (int n : ns)
                    for (const auto& l : bounded(S, t * n + 1))
                        out.push_back(with(Params{}, [&](Params& p) { p.lambda = l; p.t = t; p.n = n; }));
            break;
        case TheoremId::Facx:
        case TheoremId::Facx1:
        case TheoremId::RelSoSp:
        case TheoremId::RelOOo:
        case TheoremId::RelSpOo:
        case TheoremId::RelSomOe: {
            bool wide = id == TheoremId::RelSpOo || id == TheoremId::RelSomOe;
            for (int n : ns)
                for (const auto& l : bounded(S, wide ? n + 1 : n))
                    out.push_back(with(Params{}, [&](Params& p) { p.lambda = l; p.n = n; }));
            break;
        }
        case TheoremId::SchurKS:
        case TheoremId::SympXomega:
        case TheoremId::EvenXomega:
        case TheoremId::OddXomega:
            for (int t : b.t_values) {
                if (t < 4 || t % 4 != 0)
                    continue;
                for (int n : ns)
                    for (const auto& l : bounded(S, t * n / 2 + t / 4))
                        out.push_back(with(Params{}, [&](Params& p) { p.lambda = l; p.t = t; p.n = n; }));
            }
            break;
        case TheoremId::Eqqq:
            for (int t : b.t_values)
                for (int n : ns)
                    for (const auto& mu : bounded(S, t * n))
                        for (int pp = 0; pp < t; ++pp)
                            for (int qq = pp + 1; qq < t; ++qq)
                                out.push_back(with(Params{}, [&](Params& p) {
                                    p.mu = mu; p.t = t; p.n = n; p.p = pp; p.q = qq;
                                }));
            break;
        case TheoremId::OeSpPair:
        case TheoremId::SpGlNonzero:
        case TheoremId::QuoStructure:
        case TheoremId::SpGl:
        case TheoremId::SelParts:
        case TheoremId::OoGlNonzero:
        case TheoremId::QuoeqStructure:
        case TheoremId::OoGl:
        case TheoremId::OSpImplication:
            for (int t : b.t_values) {
                if (id == TheoremId::OeSpPair && t % 2 == 0)
                    continue;
                for (int n : ns)
                    for (const auto& mu : bounded(S, t * n))
                        out.push_back(with(Params{}, [&](Params& p) { p.mu = mu; p.t = t; p.n = n; }));
            }
            break;
        case TheoremId::SplitBranching:
            for (const auto& f : b.families.empty() ? std::vector<std::string>{"s", "o", "sp"} : b.families)
                for (int n : ns)
                    for (int m : or_default(b.m_values, {1}))
                        for (const auto& l : bounded(S, S))
                            out.push_back(with(Params{}, [&](Params& p) { p.lambda = l; p.n = n; p.m = m; p.family = f; }));
            break;
        case TheoremId::SkewTwist:
            for (int t : b.t_values)
                for (int n : ns)
                    for (const auto& l : bounded(S, t * n))
                        for (const auto& mu : subpartitions(l))
                            out.push_back(with(Params{}, [&](Params& p) { p.lambda = l; p.mu = mu; p.t = t; p.n = n; }));
            break;
        case TheoremId::IffCoreVanish:
            for (int t : b.t_values)
                for (int n : ns)
                    for (const auto& l : bounded(S, t * n))
                        out.push_back(with(Params{}, [&](Params& p) { p.lambda = l; p.t = t; p.n = n; }));
            break;
        case TheoremId::Independence:
        case TheoremId::IndependenceClassical: {
            std::vector<std::string> fams = b.families;
            if (fams.empty())
                fams = id == TheoremId::Independence ? std::vector<std::string>{"s", "sp", "o"}
                                                     : std::vector<std::string>{"sp", "oo", "oe"};
            for (int t : b.t_values)
                for (int m : or_default(b.m_values, {1}))
                    for (int a : or_default(b.arity_values, {1, 2}))
                        for (const auto& f : fams)
                            for (const auto& l : bounded(S, a))
                                out.push_back(with(Params{}, [&](Params& p) {
                                    p.lambda = l; p.t = t; p.m = m; p.arity = a; p.family = f;
                                }));
            break;
        }
        case TheoremId::CompleteIndependence:
            for (int t : b.t_values)
                for (int m : or_default(b.m_values, {1}))
                    for (int a : or_default(b.arity_values, {1, 2})) {
                        if (a < 1)
                            continue;
                        for (int r = 0; r <= S; ++r)
                            out.push_back(with(Params{}, [&](Params& p) {
                                p.lambda = r ? Partition{r} : Partition{}; p.t = t; p.m = m; p.arity = a;
                            }));
                    }
            break;
        case TheoremId::StaircaseSkew:
            for (int k : ns)
                for (int a : or_default(b.arity_values, {3}))
                    for (const auto& mu : subpartitions(staircase(k)))
                        if (mu.size() <= S)
                            out.push_back(with(Params{}, [&](Params& p) { p.mu = mu; p.n = k; p.arity = a; }));
            break;
        case TheoremId::HookEq:
        case TheoremId::HookFac:
            for (int n : ns)
                for (int m : or_default(b.m_values, ns))
                    for (const auto& l : bounded(S, S))
                        out.push_back(with(Params{}, [&](Params& p) { p.lambda = l; p.n = n; p.m = m; }));
            break;
        case TheoremId::StaircaseFac:
            for (int n : ns)
                for (int m : or_default(b.m_values, ns))
                    out.push_back(with(Params{}, [&](Params& p) { p.n = n; p.m = m; }));
            break;
        case TheoremId::Compid:
            for (int n : ns)
                for (int k = 0; k <= S; ++k)
                    out.push_back(with(Params{}, [&](Params& p) { p.n = n; p.m = k; }));
            break;
        case TheoremId::Rseval:
            for (const auto& l : bounded(S, 2))
                for (const auto& mu : bounded(S, 2 - l.length()))
                    out.push_back(with(Params{}, [&](Params& p) { p.lambda = l; p.mu = mu; }));
            break;
        case TheoremId::LemmaEq:
            for (int k = 0; k <= S; ++k)
                out.push_back(with(Params{}, [&](Params& p) { p.lambda = k ? Partition{k} : Partition{}; }));
            break;
    }
    return out;
}

/// Worker count: explicit request, then CHARFACT_THREADS, then the hardware.
inline int resolve_threads(int requested) {
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("CHARFACT_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v > 0)
                return v;
        } catch (const std::exception&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Verifies every enumerated instance. Results land in enumeration order
/// whatever the thread count.
inline std::vector<VerificationReport> sweep(TheoremId id, const SweepBounds& bounds) {
    std::vector<Params> work = enumerate_params(id, bounds);
    std::vector<VerificationReport> out(work.size());
    int threads = std::min<int>(resolve_threads(bounds.threads), static_cast<int>(std::max<std::size_t>(work.size(), 1)));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    auto worker = [&](int slot) {
        try {
            for (std::size_t i = next++; i < work.size(); i = next++)
                out[i] = verify(id, work[i]);
        } catch (...) {
            errors[static_cast<std::size_t>(slot)] = std::current_exception();
            next = work.size();
        }
    };
    if (threads <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < threads; ++k)
            pool.emplace_back(worker, k);
        for (auto& th : pool)
            th.join();
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

/// Verdict counts, keyed by verdict name so the order is fixed.
inline std::map<std::string, long long> summarize(const std::vector<VerificationReport>& reports) {
    std::map<std::string, long long> counts;
    for (const auto& r : reports)
        ++counts[std::string(verdict_name(r.verdict))];
    return counts;
}

inline bool any_failure(const std::vector<VerificationReport>& reports) {
    return std::any_of(reports.begin(), reports.end(), is_failure);
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json to_json(const Params& p) {
    nlohmann::json j = nlohmann::json::object();
    if (p.lambda)
        j["lambda"] = to_string(*p.lambda);
    if (p.mu)
        j["mu"] = to_string(*p.mu);
    if (p.t)
        j["t"] = *p.t;
    if (p.n)
        j["n"] = *p.n;
    if (p.m)
        j["m"] = *p.m;
    if (p.arity)
        j["arity"] = *p.arity;
    if (p.p)
        j["p"] = *p.p;
    if (p.q)
        j["q"] = *p.q;
    if (p.family)
        j["family"] = *p.family;
    return j;
}

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j = {
        {"theorem", std::string(theorem_name(r.theorem))},
        {"params", to_json(r.params)},
        {"applicable", r.applicable},
        {"verdict", std::string(verdict_name(r.verdict))},
        {"epsilon", r.epsilon},
        {"sigma_sign", r.sigma_sign},
        {"lhs", r.lhs},
        {"rhs", r.rhs},
    };
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

inline nlohmann::json to_json(const SweepBounds& b) {
    nlohmann::json j = {{"max_size", b.max_size}, {"t", b.t_values}, {"n", b.n_values},
                        {"m", b.m_values},       {"arity", b.arity_values}, {"family", b.families}};
    j["threads"] = b.threads;  // 0 means resolved at run time
    return j;
}

}  // namespace charfact
