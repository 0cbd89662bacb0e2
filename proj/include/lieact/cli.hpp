#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lieact/catalog.hpp"
#include "lieact/engine.hpp"
#include "lieact/liefile.hpp"
#include "lieact/report.hpp"

namespace lieact {

// Command line front end.  run_cli is the whole program: main() hands it
// argv and streams, tests call it directly with captured streams.
//
//   lieact validate   --algebra EXPR | --algebra-file PATH
//   lieact invariants --algebra ... [--format text|json] [numeric knobs]
//   lieact analyze    --algebra ... --manifold M [--regularity R] [--mode Q]
//                     [--format text|json] [--strict] [numeric knobs]
//   lieact catalog list [--format text|json]
//
// --manifold takes an inline JSON descriptor, @path to a JSON file, or a
// bare surface kind name like torus as shorthand for the obvious closed or
// open surface.  Numeric knobs: --seed, --samples, --precision (bits),
// --height-bound.
//
// Exit codes: 0 success, 1 any input or validation error, 2 the rule
// engine derived a contradiction (which means a broken rule table, so it
// is separated from ordinary bad input).

namespace detail {

struct CliOptions {
    std::string algebra_text;
    std::string algebra_file;
    std::string manifold_arg;
    std::string regularity = "all";
    std::string mode = "effective";
    std::string format = "text";
    std::uint64_t seed = 20260401;
    int samples = 0;  // 0 keeps the per-config defaults
    unsigned precision = 256;
    long long height_bound = 1000000;
    bool strict = false;
};

struct LoadedAlgebra {
    LieAlgebra L;
    AlgebraProfile profile;
};

inline LieAlgebra load_algebra_raw(const CliOptions& o) {
    if (o.algebra_text.empty() == o.algebra_file.empty())
        throw Error("exactly one of --algebra and --algebra-file is required");
    if (!o.algebra_text.empty()) return build(parse_expression(o.algebra_text));
    LieAlgebra L = load_lie_file(o.algebra_file);
    validate(L);
    return L;
}

inline LoadedAlgebra load_algebra(const CliOptions& o, const ClassifyConfig& ccfg,
                                  const SpectralConfig& scfg) {
    LoadedAlgebra out;
    if (o.algebra_text.empty() == o.algebra_file.empty())
        throw Error("exactly one of --algebra and --algebra-file is required");
    if (!o.algebra_text.empty()) {
        AlgebraExpr e = parse_expression(o.algebra_text);
        out.L = build(e);
        out.profile = profile_expression(e, ccfg, scfg);
    } else {
        out.L = load_lie_file(o.algebra_file);
        validate(out.L);
        out.profile = profile_algebra(out.L, ccfg, scfg);
    }
    return out;
}

inline ManifoldDescriptor parse_manifold_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::string path = arg.substr(1);
        std::ifstream in(path);
        if (!in) throw Error("cannot open manifold file '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    std::size_t b = text.find_first_not_of(" \t\r\n");
    std::string trimmed = b == std::string::npos ? "" : text.substr(b);
    if (trimmed.empty())
        throw Error("--manifold needs a JSON descriptor, @file, or surface kind name");

    if (trimmed[0] != '{') {
        std::size_t e = trimmed.find_last_not_of(" \t\r\n");
        std::string name = trimmed.substr(0, e + 1);
        auto kind = surface_kind_from(name);
        if (!kind)
            throw Error("unknown manifold shorthand '" + name +
                        "'; pass a surface kind name, inline JSON, or @file");
        if (*kind == SurfaceKind::closed_orientable_genus ||
            *kind == SurfaceKind::closed_nonorientable_genus || *kind == SurfaceKind::other)
            throw Error("surface kind '" + name +
                        "' is parametric; pass a JSON descriptor with genus");
        ManifoldDescriptor m;
        m.dim = 2;
        m.surface_kind = *kind;
        m.compact = *kind == SurfaceKind::sphere || *kind == SurfaceKind::torus ||
                    *kind == SurfaceKind::projective_plane ||
                    *kind == SurfaceKind::klein_bottle;
        return m;
    }

    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("manifold JSON: ") + e.what());
    }
    return manifold_from_json(j);
}

inline int count_constants(const LieAlgebra& L) {
    int n = 0;
    for (const auto& [pair, coeffs] : L.constants) n += static_cast<int>(coeffs.size());
    return n;
}

inline int cmd_validate(const CliOptions& o, std::ostream& out) {
    LieAlgebra L = load_algebra_raw(o);
    validate(L);
    out << "OK: " << (L.origin.empty() ? "algebra" : L.origin) << " is a Lie algebra (dim "
        << L.dim << ", " << count_constants(L) << " nonzero structure constants";
    if (L.has_rep()) out << ", matrix representation consistent";
    if (L.has_grading()) out << ", grading consistent";
    out << ")\n";
    return 0;
}

inline int cmd_invariants(const CliOptions& o, const ClassifyConfig& ccfg,
                          const SpectralConfig& scfg, std::ostream& out) {
    LoadedAlgebra a = load_algebra(o, ccfg, scfg);
    if (o.format == "json") {
        out << make_report(a.L, a.profile, nullptr, {}, ccfg, scfg, o.strict).dump(2)
            << "\n";
    } else {
        render_invariants_text(out, a.L, a.profile);
    }
    return 0;
}

inline int cmd_analyze(const CliOptions& o, const ClassifyConfig& ccfg,
                       const SpectralConfig& scfg, std::ostream& out) {
    LoadedAlgebra a = load_algebra(o, ccfg, scfg);
    ManifoldDescriptor m = manifold_validate(parse_manifold_arg(o.manifold_arg));

    std::vector<Regularity> regs;
    if (o.regularity == "all") {
        regs = {Regularity::continuous, Regularity::smooth, Regularity::analytic};
    } else {
        auto r = regularity_from(o.regularity);
        if (!r) throw Error("unknown regularity '" + o.regularity + "'");
        regs = {*r};
    }
    std::vector<QueryMode> modes;
    if (o.mode == "all") {
        modes = {QueryMode::effective, QueryMode::fixed_point_free, QueryMode::transitive,
                 QueryMode::compact_homogeneous};
    } else {
        auto q = mode_from(o.mode);
        if (!q) throw Error("unknown mode '" + o.mode + "'");
        modes = {*q};
    }

    EngineOptions eopts;
    eopts.strict = o.strict;
    std::vector<VerdictRecord> verdicts;
    for (QueryMode mode : modes)
        for (Regularity reg : regs) {
            Query q;
            q.regularity = reg;
            q.mode = mode;
            verdicts.push_back({q, analyze(a.profile, m, q, eopts)});
        }

    if (o.format == "json") {
        out << make_report(a.L, a.profile, &m, verdicts, ccfg, scfg, o.strict).dump(2)
            << "\n";
        return 0;
    }

    out << "algebra: "
        << (a.profile.expression.empty() ? a.L.origin : a.profile.expression) << " (dim "
        << a.profile.dim << ")\n";
    out << "manifold: dim " << m.dim << (m.compact ? ", compact" : ", noncompact")
        << (m.has_boundary ? ", with boundary" : "");
    if (m.euler) out << ", χ = " << *m.euler;
    if (m.surface_kind) out << ", " << surface_kind_str(*m.surface_kind);
    out << "\n";
    for (const VerdictRecord& r : verdicts) render_verdict_text(out, r.query, r.verdict);
    for (const std::string& n : discrepancy_notes(a.profile)) out << "note: " << n << "\n";
    return 0;
}

inline int cmd_catalog_list(const CliOptions& o, std::ostream& out) {
    const auto& entries = catalog_entries();
    if (o.format == "json") {
        Json j;
        j["atoms"] = Json::array();
        for (const CatalogEntry& e : entries) {
            Json row;
            row["form"] = e.form;
            row["dimension"] = e.dimension;
            row["constraints"] = e.constraints;
            row["note"] = e.note;
            j["atoms"].push_back(std::move(row));
        }
        j["combinators"] = Json::array({"expr x expr (direct product)",
                                        "derived(expr) (commutator subalgebra)"});
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "catalog atoms:\n";
    for (const CatalogEntry& e : entries) {
        out << "  " << e.form;
        for (std::size_t pad = e.form.size(); pad < 12; ++pad) out << ' ';
        out << "dim " << e.dimension;
        for (std::size_t pad = e.dimension.size(); pad < 14; ++pad) out << ' ';
        out << e.constraints;
        for (std::size_t pad = e.constraints.size(); pad < 16; ++pad) out << ' ';
        out << e.note << "\n";
    }
    out << "combinators: expr x expr (direct product), derived(expr) (commutator "
           "subalgebra)\n";
    return 0;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lie algebra catalog, invariants, and action feasibility analyzer"};
    app.name("lieact");
    app.require_subcommand(1);

    detail::CliOptions o;

    auto add_algebra_opts = [&](CLI::App* cmd) {
        cmd->add_option("--algebra", o.algebra_text,
                        "catalog expression, e.g. \"st(3,R) x abelian(2)\"");
        cmd->add_option("--algebra-file", o.algebra_file,
                        "path to a .lie structure-constant file");
    };
    auto add_numeric_opts = [&](CLI::App* cmd) {
        cmd->add_option("--seed", o.seed, "seed for randomized sampling");
        cmd->add_option("--samples", o.samples, "sample count for randomized checks")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--precision", o.precision, "working precision in bits")
            ->check(CLI::Range(32u, 1u << 20));
        cmd->add_option("--height-bound", o.height_bound,
                        "height bound for integer relation detection")
            ->check(CLI::PositiveNumber);
    };
    auto add_format_opt = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* vcmd = app.add_subcommand("validate", "check that the input is a Lie algebra");
    add_algebra_opts(vcmd);

    CLI::App* icmd = app.add_subcommand("invariants", "print the invariant profile");
    add_algebra_opts(icmd);
    add_numeric_opts(icmd);
    add_format_opt(icmd);

    CLI::App* acmd =
        app.add_subcommand("analyze", "decide action feasibility against a manifold");
    add_algebra_opts(acmd);
    add_numeric_opts(acmd);
    add_format_opt(acmd);
    acmd->add_option("--manifold", o.manifold_arg,
                     "manifold: inline JSON, @file, or a surface kind name")
        ->required();
    acmd->add_option("--regularity", o.regularity, "continuous|smooth|analytic|all")
        ->check(CLI::IsMember({"continuous", "smooth", "analytic", "all"}));
    acmd->add_option("--mode", o.mode,
                     "effective|fixed-point-free|transitive|homogeneous|all")
        ->check(CLI::IsMember(
            {"effective", "fixed-point-free", "transitive", "homogeneous", "all"}));
    acmd->add_flag("--strict", o.strict, "suppress heuristic-grade rule firings");

    CLI::App* ccmd = app.add_subcommand("catalog", "catalog information");
    ccmd->require_subcommand(1);
    CLI::App* lcmd = ccmd->add_subcommand("list", "list the built-in atom families");
    add_format_opt(lcmd);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        ClassifyConfig ccfg;
        SpectralConfig scfg;
        ccfg.seed = o.seed;
        scfg.seed = o.seed;
        if (o.samples > 0) {
            ccfg.samples = o.samples;
            scfg.samples = o.samples;
        }
        scfg.precision_bits = o.precision;
        scfg.height_bound = BigInt(o.height_bound);

        if (vcmd->parsed()) return detail::cmd_validate(o, out);
        if (icmd->parsed()) return detail::cmd_invariants(o, ccfg, scfg, out);
        if (acmd->parsed()) return detail::cmd_analyze(o, ccfg, scfg, out);
        if (lcmd->parsed()) return detail::cmd_catalog_list(o, out);
        err << "error: no subcommand selected\n";
        return 1;
    } catch (const ContradictionError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace lieact
