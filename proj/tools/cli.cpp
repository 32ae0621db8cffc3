/* Copyright 2026 The expfactor Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "expfactor/algebras.hpp"
#include "expfactor/cbh.hpp"
#include "expfactor/config.hpp"
#include "expfactor/factor.hpp"
#include "expfactor/pbw.hpp"
#include "expfactor/serialize.hpp"

namespace expfactor::cli {

namespace {

struct Flags {
    std::string algebra;
    std::optional<int> order;
    std::vector<std::string> support;
    bool support_given = false;
    std::string format;
    std::string config;
    std::string out;
    std::string split = "minus|zero_plus";
    std::string schedule = "total";
    std::optional<int> degree;
    int window = 6;
    std::string result;
};

using Row = std::vector<std::string>;

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
    return out;
}

std::string table(const std::string& title, const Row& header, const std::vector<Row>& rows) {
    std::ostringstream os;
    os << title << "  (" << rows.size() << (rows.size() == 1 ? " term)\n" : " terms)\n");
    if (rows.empty()) return os.str();
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
        width[i] = header[i].size();
        for (const auto& r : rows) width[i] = std::max(width[i], r[i].size());
    }
    auto line = [&](const Row& r) {
        os << " ";
        for (std::size_t i = 0; i < r.size(); ++i)
            os << " " << r[i] << (i + 1 < r.size() ? std::string(width[i] - r[i].size() + 1, ' ') : "");
        os << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
}

// Sorted by (basis degree, monomial), then basis.
template <class S>
std::string series_table(const std::string& title, const LieSeries<S>& x) {
    using Entry = std::pair<typename LieSeries<S>::Key, S>;
    std::vector<Entry> entries(x.terms().begin(), x.terms().end());
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& p, const Entry& q) {
        if (p.first.first.degree != q.first.first.degree) return p.first.first.degree < q.first.first.degree;
        if (p.first.second != q.first.second) return p.first.second < q.first.second;
        return p.first.first < q.first.first;
    });
    std::vector<Row> rows;
    for (const auto& [k, c] : entries) rows.push_back({x.plugin()->format(k.first), k.second.to_string(), scalar_string(c)});
    return table(title, {"basis", "monomial", "coeff"}, rows);
}

std::string header_line(const std::string& command, const RunConfig& cfg) {
    return command + ": algebra " + cfg.algebra + ", order " + std::to_string(cfg.order) + ", support " +
           support_string(cfg) + "\n";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw DomainError(std::string("cannot read ") + what + " '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed ") + what + " '" + path + "': " + e.what());
    }
}

RunConfig resolve_config(const Flags& f) {
    json j = f.config.empty() ? json::object() : read_json_file(f.config, "config file");
    if (!f.algebra.empty()) j["algebra"] = f.algebra;
    RunConfig cfg;
    apply_json(j, cfg);
    if (f.order) cfg.order = *f.order;
    if (!f.format.empty()) cfg.format = f.format;
    if (f.support_given) parse_support(join(f.support), cfg);
    cfg.check();
    return cfg;
}

FactorOptions factor_options(const Flags& f) {
    if (f.schedule == "total") return {SweepSchedule::by_total_order};
    if (f.schedule == "bidegree") return {SweepSchedule::by_bidegree};
    throw DomainError("schedule must be total or bidegree");
}

SplitSpec parse_split(const std::string& text) {
    const auto bar = text.find('|');
    if (bar == std::string::npos) throw DomainError("split looks like minus|zero_plus: '" + text + "'");
    SplitSpec s{parse_part(text.substr(0, bar)), parse_part(text.substr(bar + 1))};
    s.check();
    return s;
}

template <class S>
std::string run_factor(const RunConfig& cfg, const PluginPtr& plugin, const Flags& f) {
    const auto [gp, gm] = build_generators<S>(cfg, plugin);
    const SplitSpec split = parse_split(f.split);
    const auto r = factorize(gm, gp, split, cfg.order, factor_options(f));
    if (cfg.format == "json") {
        return dump({{"command", "factor"},
                     {"config", to_json(cfg)},
                     {"split", split.to_string()},
                     {"g_minus", to_json(r.left)},
                     {"g_plus", to_json(r.right)},
                     {"diagnostics",
                      {{"order", cfg.order},
                       {"sweeps", r.sweeps},
                       {"terms", {{"g_minus", r.left.size()}, {"g_plus", r.right.size()}}}}}});
    }
    return header_line("factor", cfg) + "split " + split.to_string() + "\n\n" + series_table("Gm", r.left) + "\n" +
           series_table("Gp", r.right);
}

template <class S>
std::string run_uniformize(const RunConfig& cfg, const PluginPtr& plugin, const Flags& f) {
    const auto [gp, gm] = build_generators<S>(cfg, plugin);
    const SplitSpec split = parse_split(f.split);
    const auto r = uniformize(gp, gm, split, cfg.order, factor_options(f));
    if (cfg.format == "json") {
        return dump({{"command", "uniformize"},
                     {"config", to_json(cfg)},
                     {"split", split.to_string()},
                     {"psi_left", to_json(r.left)},
                     {"psi_right", to_json(r.right)},
                     {"diagnostics",
                      {{"order", cfg.order},
                       {"sweeps", r.sweeps},
                       {"terms", {{"psi_left", r.left.size()}, {"psi_right", r.right.size()}}}}}});
    }
    return header_line("uniformize", cfg) + "split " + split.to_string() + "\n\n" + series_table("PsiL", r.left) +
           "\n" + series_table("PsiR", r.right);
}

template <class S>
std::string run_triple(const RunConfig& cfg, const PluginPtr& plugin, const Flags& f) {
    const auto [gp, gm] = build_generators<S>(cfg, plugin);
    const auto r = triple_factorize(gp, gm, cfg.order, factor_options(f));
    const auto [zero, gamma] = split_central(r.psi_zero);
    if (cfg.format == "json") {
        return dump({{"command", "triple"},
                     {"config", to_json(cfg)},
                     {"psi_minus", to_json(r.psi_minus)},
                     {"psi_plus", to_json(r.psi_plus)},
                     {"psi_zero", to_json(zero)},
                     {"gamma", to_json(gamma)},
                     {"diagnostics", to_json(r.diagnostics)}});
    }
    return header_line("triple", cfg) + "\n" + series_table("Psi-", r.psi_minus) + "\n" +
           series_table("Psi+", r.psi_plus) + "\n" + series_table("Psi0", zero) + "\n" +
           series_table("Gamma", gamma) + "\nsweeps " + std::to_string(r.diagnostics.sweeps) + "\n";
}

std::string report_text(const std::string& what, const RunConfig& cfg, int order, const VerificationReport& r) {
    std::ostringstream os;
    os << "verify " << what << ": algebra " << cfg.algebra << ", order " << order << ": "
       << (r.ok ? "PASS" : "FAIL") << "\n";
    os << "  lhs terms " << r.lhs_terms << ", rhs terms " << r.rhs_terms << ", rewrites " << r.rewrites << "\n";
    if (!r.ok) {
        std::vector<Row> rows;
        for (const auto& m : r.mismatches) rows.push_back({m.monomial + " " + m.word, m.lhs, m.rhs});
        os << table("mismatches, lowest order first, " + std::to_string(r.mismatch_count) + " in total", {"term", "lhs", "rhs"},
                    rows);
    }
    return os.str();
}

template <class S>
LieSeries<S> load_series(const json& result, const char* key, const PluginPtr& plugin, int order) {
    if (!result.contains(key)) throw DomainError(std::string("result file has no '") + key + "' entry");
    return series_from_json<S>(result.at(key), plugin, Truncation{order, true});
}

// Verifies a stored result when `stored` is given, else a fresh triple run.
template <class S>
std::pair<std::string, bool> run_verify(const RunConfig& cfg, const PluginPtr& plugin, const Flags& f,
                                        const json* stored) {
    const auto [gp, gm] = build_generators<S>(cfg, plugin);
    int order = cfg.order;
    std::string what = "triple";
    std::vector<LieSeries<S>> lhs, rhs;
    if (stored) {
        what = stored->value("command", std::string("triple"));
        if (f.order) {
            if (*f.order > cfg.order)
                throw DomainError("cannot verify at order " + std::to_string(*f.order) + ": result computed to order " +
                                  std::to_string(cfg.order));
            if (*f.order < 1) throw DomainError("order must be >= 1");
            order = *f.order;
        }
        auto load = [&](const char* key) { return load_series<S>(*stored, key, plugin, cfg.order); };
        if (what == "triple") {
            lhs = {gp, gm};
            rhs = {load("psi_minus"), load("psi_plus"), load("psi_zero") + load("gamma")};
        } else if (what == "uniformize") {
            lhs = {gp, gm};
            rhs = {load("psi_left"), load("psi_right")};
        } else if (what == "factor") {
            lhs = {gm + gp};
            rhs = {load("g_minus"), load("g_plus")};
        } else {
            throw DomainError("result file has unknown command '" + what + "'");
        }
    } else {
        const auto r = triple_factorize(gp, gm, order);
        lhs = {gp, gm};
        rhs = {r.psi_minus, r.psi_plus, r.psi_zero};
    }
    const VerificationReport report = verify_products(lhs, rhs, order);
    if (cfg.format == "json") {
        json j = to_json(report);
        j["command"] = what;
        return {dump(j), report.ok};
    }
    return {report_text(what, cfg, order, report), report.ok};
}

std::string run_schema(const Flags& f) {
    const std::optional<int> n = f.degree ? f.degree : f.order;
    if (!n) throw DomainError("schema needs --degree N");
    if (*n < 1 || *n > max_schema_degree())
        throw DomainError("schema degree must be between 1 and " + std::to_string(max_schema_degree()));
    const auto schema = cbh_schema(*n);
    const std::string format = f.format.empty() ? "text" : f.format;
    if (format == "json") return dump({{"max_degree", *n}, {"degrees", to_json(*schema, *n)}});
    if (format != "text") throw DomainError("format must be text or json");
    std::ostringstream os;
    for (int d = 1; d <= *n; ++d) {
        std::vector<Row> rows;
        for (const auto& t : schema->degree(d)) rows.push_back({t.pattern, t.coeff.to_string()});
        os << table("degree " + std::to_string(d), {"pattern", "coeff"}, rows);
    }
    return os.str();
}

std::pair<std::string, bool> run_validate(const Flags& f) {
    const RunConfig cfg = resolve_config(f);
    if (f.window < 0) throw DomainError("window must be >= 0");
    const PluginPtr plugin = make_plugin_unchecked(cfg);
    const ValidationReport r = validate_plugin(*plugin, f.window);
    if (cfg.format == "json") {
        json j = {{"ok", r.ok},
                  {"algebra", cfg.algebra},
                  {"window", f.window},
                  {"pairs_checked", r.pairs_checked},
                  {"triples_checked", r.triples_checked},
                  {"failures", r.failures}};
        j["jacobi_witness"] = r.jacobi_witness ? json(*r.jacobi_witness) : json(nullptr);
        return {dump(j), r.ok};
    }
    std::ostringstream os;
    os << "validate-algebra: " << cfg.algebra << ", window |degree| <= " << f.window << ": " << (r.ok ? "PASS" : "FAIL")
       << "\n  pairs " << r.pairs_checked << ", triples " << r.triples_checked << "\n";
    if (r.jacobi_witness) {
        os << "  Jacobi witness:";
        for (const auto& x : *r.jacobi_witness) os << " " << x;
        os << "\n";
    }
    for (const auto& failure : r.failures) os << "  " << failure << "\n";
    return {os.str(), r.ok};
}

template <class Fn>
auto dispatch(const PluginPtr& plugin, Fn&& fn) {
    if (plugin->scalar_ring() == ScalarRing::grassmann) return fn(GrassmannScalar());
    return fn(Rational());
}

void emit(const Flags& f, const std::string& text, std::ostream& out) {
    if (f.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(f.out, std::ios::binary);
    if (!file || !(file << text)) throw DomainError("cannot write '" + f.out + "'");
}

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--algebra", f.algebra, "virasoro, affine-sl2, affine-custom or ns1");
    cmd->add_option("--order", f.order, "truncation order N >= 1");
    cmd->add_option("--support", f.support,
                    "active variables, e.g. A=1,2 B=-1,-2 (ns1 indices are doubled: A=1 is A_1/2)")
        ->expected(0, 2)
        ->each([&f](const std::string&) { f.support_given = true; });
    cmd->add_option("--format", f.format, "text or json");
    cmd->add_option("--config", f.config, "JSON configuration file; flags override its keys");
    cmd->add_option("--out", f.out, "write output to this file");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Factorization of products of formal exponentials over graded Lie algebras", "expfactor"};
    app.require_subcommand(1);
    Flags f;

    auto* schema = app.add_subcommand("schema", "print the CBH bracket schema");
    schema->add_option("--degree", f.degree, "highest degree");
    schema->add_option("--order", f.order, "alias of --degree");
    schema->add_option("--format", f.format, "text or json");
    schema->add_option("--out", f.out, "write output to this file");

    auto* factor = app.add_subcommand("factor", "solve C(Gm, Gp) = Hm + Hp with Hm = g-, Hp = g+");
    auto* unif = app.add_subcommand("uniformize", "rewrite e^{g+} e^{g-} as e^{PsiL} e^{PsiR}");
    auto* triple = app.add_subcommand("triple", "rewrite e^{g+} e^{g-} as e^{Psi-} e^{Psi+} e^{Psi0}");
    auto* verify = app.add_subcommand("verify", "check a result by PBW straightening");
    auto* validate = app.add_subcommand("validate-algebra", "check the algebra axioms on a degree window");
    for (auto* cmd : {factor, unif, triple, verify, validate}) add_common(cmd, f);
    for (auto* cmd : {factor, unif}) cmd->add_option("--split", f.split, "left|right parts, default minus|zero_plus");
    for (auto* cmd : {factor, unif, triple})
        cmd->add_option("--schedule", f.schedule, "total (default) or bidegree (audit replay)");
    verify->add_option("result", f.result, "JSON result of factor, uniformize or triple; omit to recompute");
    validate->add_option("--window", f.window, "largest |degree| checked, in mode units (default 6)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ExitCode::ok : ExitCode::usage;
    }

    try {
        std::string text;
        bool passed = true;
        if (schema->parsed()) {
            text = run_schema(f);
        } else if (validate->parsed()) {
            std::tie(text, passed) = run_validate(f);
        } else if (verify->parsed()) {
            json stored;
            RunConfig cfg;
            if (!f.result.empty()) {
                stored = read_json_file(f.result, "result file");
                if (!stored.is_object() || !stored.contains("config")) throw DomainError("result file has no config");
                apply_json(stored.at("config"), cfg);
                if (!f.format.empty()) cfg.format = f.format;
                cfg.check();
            } else {
                cfg = resolve_config(f);
            }
            const PluginPtr plugin = make_plugin(cfg);
            const json* s = f.result.empty() ? nullptr : &stored;
            std::tie(text, passed) =
                dispatch(plugin, [&](auto tag) { return run_verify<decltype(tag)>(cfg, plugin, f, s); });
        } else {
            const RunConfig cfg = resolve_config(f);
            const PluginPtr plugin = make_plugin(cfg);
            text = dispatch(plugin, [&](auto tag) {
                using S = decltype(tag);
                if (factor->parsed()) return run_factor<S>(cfg, plugin, f);
                if (unif->parsed()) return run_uniformize<S>(cfg, plugin, f);
                return run_triple<S>(cfg, plugin, f);
            });
        }
        emit(f, text, out);
        return passed ? ExitCode::ok : ExitCode::mismatch;
    } catch (const InternalConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return ExitCode::residual;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::usage;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::usage;
    }
}

} // namespace expfactor::cli
