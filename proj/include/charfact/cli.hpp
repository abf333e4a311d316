#pragma once

// Command-line front end: partition invariants, character evaluation and
// registry verification. Kept in a header so tests can drive it in-process.

#include "sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <ostream>

namespace charfact::cli {

enum ExitCode : int { kSuccess = 0, kMismatch = 1, kUsage = 2 };

namespace detail {

inline nlohmann::json partition_json(const Partition& p) { return to_string(p); }

inline nlohmann::json quotient_json(const std::vector<Partition>& q) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& part : q)
        j.push_back(to_string(part));
    return j;
}

inline nlohmann::json describe_partition(const Partition& lambda, std::optional<int> t, std::optional<int> m) {
    nlohmann::json j;
    j["partition"] = partition_json(lambda);
    j["size"] = lambda.size();
    j["length"] = lambda.length();
    j["conjugate"] = partition_json(conjugate(lambda));
    FrobeniusCoords fc = frobenius(lambda);
    j["frobenius"] = {{"alpha", fc.alpha}, {"beta", fc.beta}, {"rank", fc.rank()}};
    int beta_len = m ? *m : (t ? default_beta_length(lambda, *t) : lambda.length());
    if (beta_len < lambda.length())
        throw ArityViolation("m = " + std::to_string(beta_len) + " is shorter than the partition");
    j["m"] = beta_len;
    j["beta"] = beta_set(lambda, beta_len).entries;
    if (t) {
        if (*t < 1)
            throw ArityViolation("t must be positive");
        j["t"] = *t;
        j["counts"] = residue_counts(lambda, beta_len, *t);
        j["sigma"] = sigma_permutation(lambda, beta_len, *t);
        j["sigma_sign"] = sigma_sign(lambda, beta_len, *t);
        CoreQuotient cq = core_quotient(lambda, *t, beta_len);
        j["core"] = partition_json(cq.core);
        j["quotient"] = quotient_json(cq.quotient);
    }
    return j;
}

/// Human-readable "key: value" lines; nested values stay compact JSON.
inline void print_table(std::ostream& os, const nlohmann::json& j) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        os << it.key() << ": ";
        if (it->is_string())
            os << it->get<std::string>();
        else
            os << it->dump();
        os << '\n';
    }
}

inline void print_report_line(std::ostream& os, const VerificationReport& r) {
    os << theorem_name(r.theorem) << ' ' << to_json(r.params).dump() << ' ' << verdict_name(r.verdict);
    if (r.verdict == Verdict::Mismatch) {
        os << "\n  lhs: " << r.lhs << "\n  rhs: " << r.rhs;
        if (!r.note.empty())
            os << "\n  note: " << r.note;
    }
    os << '\n';
}

}  // namespace detail

/// Runs the tool on argv-style arguments (without the program name).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Characters of classical groups at twisted arguments"};
    app.require_subcommand(1);
    bool as_json = false;
    std::string out_path;
    int threads = 0;
    app.add_flag("--json", as_json, "Emit JSON");
    app.add_option("--out", out_path, "Write output to this file");
    app.add_option("--threads", threads, "Worker threads for sweeps")->check(CLI::NonNegativeNumber);

    auto* part_cmd = app.add_subcommand("partition", "Partition invariants");
    part_cmd->fallthrough();
    std::string part_text;
    std::optional<int> part_t, part_m;
    part_cmd->add_option("lambda", part_text, "Partition, e.g. 5,2,2,1,1")->required();
    part_cmd->add_option("--t", part_t, "Modulus t for residues, core and quotient");
    part_cmd->add_option("--m", part_m, "Beta-set length");

    auto* char_cmd = app.add_subcommand("char", "Evaluate a character at a tuple");
    char_cmd->fallthrough();
    std::string kind_text, char_lambda, tuple_text, mu_text, tuple2_text;
    char_cmd->add_option("kind", kind_text, "Character kind")->required();
    char_cmd->add_option("lambda", char_lambda, "Partition")->required();
    char_cmd->add_option("tuple", tuple_text, "Tuple, e.g. \"X(2) twist(3) +1\"")->required();
    char_cmd->add_option("--mu", mu_text, "Inner shape (skew) or second partition (rs)");
    char_cmd->add_option("--tuple2", tuple2_text, "Second tuple (hook)");

    auto* verify_cmd = app.add_subcommand("verify", "Verify a registry entry or sweep it");
    verify_cmd->fallthrough();
    std::string theorem_text;
    std::optional<std::string> sweep_text;
    std::optional<std::string> v_lambda, v_mu, v_family;
    std::optional<int> v_t, v_n, v_m, v_arity, v_p, v_q;
    verify_cmd->add_option("theorem", theorem_text, "Registry name, e.g. SCHUR_FAC")->required();
    verify_cmd->add_option("--lambda", v_lambda, "Partition lambda");
    verify_cmd->add_option("--mu", v_mu, "Partition mu");
    verify_cmd->add_option("--t", v_t, "Root-of-unity order t");
    verify_cmd->add_option("--n", v_n, "Variable count n");
    verify_cmd->add_option("--m", v_m, "Second count m");
    verify_cmd->add_option("--arity", v_arity, "Base arity");
    verify_cmd->add_option("--p", v_p, "Residue p");
    verify_cmd->add_option("--q", v_q, "Residue q");
    verify_cmd->add_option("--family", v_family, "Character family (s, o, sp, oo, oe)");
    verify_cmd->add_option("--sweep", sweep_text, "Sweep bounds, e.g. \"size<=8;t=2,3,4\"");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    std::ofstream file;
    std::ostream* os = &out;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            err << "error: cannot open " << out_path << '\n';
            return kUsage;
        }
        os = &file;
    }

    try {
        if (*part_cmd) {
            nlohmann::json j = detail::describe_partition(parse_partition(part_text), part_t, part_m);
            if (as_json)
                *os << j.dump() << '\n';
            else
                detail::print_table(*os, j);
            return kSuccess;
        }

        if (*char_cmd) {
            auto kind = parse_character_kind(kind_text);
            if (!kind) {
                err << "error: unknown character kind '" << kind_text << "'\n";
                return kUsage;
            }
            Partition lambda = parse_partition(char_lambda);
            Partition mu = mu_text.empty() ? Partition{} : parse_partition(mu_text);
            ValueTuple v = parse_tuple(tuple_text);
            std::optional<ValueTuple> y;
            if (!tuple2_text.empty())
                y = parse_tuple(tuple2_text);
            if (needs_second_tuple(*kind) && !y) {
                err << "error: " << kind_text << " needs --tuple2\n";
                return kUsage;
            }
            LaurentPoly value = evaluate_character(*kind, lambda, v, mu, y);
            if (as_json) {
                nlohmann::json j = {{"kind", kind_text},      {"lambda", to_string(lambda)},
                                    {"tuple", tuple_text},    {"value", value.to_string()}};
                if (needs_second_partition(*kind))
                    j["mu"] = to_string(mu);
                if (y)
                    j["tuple2"] = tuple2_text;
                *os << j.dump() << '\n';
            } else {
                *os << value.to_string() << '\n';
            }
            return kSuccess;
        }

        auto id = parse_theorem_id(theorem_text);
        if (!id) {
            err << "error: unknown theorem '" << theorem_text << "'\n";
            return kUsage;
        }
        if (sweep_text) {
            SweepBounds bounds = parse_sweep_bounds(*sweep_text);
            if (threads > 0)
                bounds.threads = threads;
            std::vector<VerificationReport> reports = sweep(*id, bounds);
            auto counts = summarize(reports);
            bool failed = any_failure(reports);
            if (as_json) {
                nlohmann::json list = nlohmann::json::array();
                for (const auto& r : reports)
                    list.push_back(to_json(r));
                nlohmann::json j = {{"theorem", theorem_text},
                                    {"bounds", to_json(bounds)},
                                    {"summary", counts},
                                    {"total", reports.size()},
                                    {"reports", list}};
                *os << j.dump() << '\n';
            } else {
                for (const auto& r : reports)
                    if (r.verdict == Verdict::Mismatch)
                        detail::print_report_line(*os, r);
                *os << theorem_text << ": " << reports.size() << " instances";
                for (const auto& [name, count] : counts)
                    *os << ", " << name << "=" << count;
                *os << '\n';
            }
            return failed ? kMismatch : kSuccess;
        }

        Params params;
        if (v_lambda)
            params.lambda = parse_partition(*v_lambda);
        if (v_mu)
            params.mu = parse_partition(*v_mu);
        params.t = v_t;
        params.n = v_n;
        params.m = v_m;
        params.arity = v_arity;
        params.p = v_p;
        params.q = v_q;
        params.family = v_family;
        VerificationReport r = verify(*id, params);
        if (as_json) {
            *os << to_json(r).dump() << '\n';
        } else {
            *os << "theorem: " << theorem_name(r.theorem) << "\nparams: " << to_json(r.params).dump()
                << "\napplicable: " << (r.applicable ? "true" : "false") << "\nverdict: " << verdict_name(r.verdict)
                << "\nepsilon: " << r.epsilon << "\nsigma_sign: " << r.sigma_sign << "\nlhs: " << r.lhs
                << "\nrhs: " << r.rhs << '\n';
            if (!r.note.empty())
                *os << "note: " << r.note << '\n';
        }
        return is_failure(r) ? kMismatch : kSuccess;
    } catch (const std::invalid_argument& e) {
        // ParseError and ArityViolation derive from invalid_argument.
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NotApplicable& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace charfact::cli
