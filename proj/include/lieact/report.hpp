#pragma once

#include <json.hpp>

#include <cstdint>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "lieact/catalog.hpp"
#include "lieact/engine.hpp"
#include "lieact/liefile.hpp"
#include "lieact/manifold.hpp"
#include "lieact/structure.hpp"

namespace lieact {

using Json = nlohmann::ordered_json;

inline constexpr const char* lieact_version = "0.1.0";

// Report schema, version report_v = 1.  Top level:
//
//   {
//     "report_v": 1,
//     "tool":     { name, version, seed, classify_samples, spectral_samples,
//                   precision_bits, height_bound, strict },
//     "algebra":  { expression, origin, dim, flags{...}, center_dim,
//                   derived_dims, derived_in_center, killing_det_sign,
//                   rank{r, r_nonreal, method, certainty, witness},
//                   ac{status, reason, spectrum}, factors[...] },
//     "manifold": { dim, compact, boundary, orientable, euler, genus,
//                   pi1_finite, parallelizable, surface_kind } | null,
//     "verdicts": [ { mode, regularity, status, citations[...], trace[...],
//                     notes[...] } ],
//     "notes":    [ ... ]
//   }
//
// Key order is fixed by construction and every numeric input is either
// exact or derived from the pinned seed and precision, so two runs with the
// same inputs produce byte-identical dumps.

namespace detail {

inline Json tri_json(TriState t) {
    if (t == TriState::unknown) return nullptr;
    return t == TriState::yes;
}

inline TriState tri_from_json(const Json& v, const char* key) {
    if (v.is_null()) return TriState::unknown;
    if (!v.is_boolean())
        throw DescriptorError(std::string("manifold JSON: '") + key +
                              "' must be a boolean or null");
    return v.get<bool>() ? TriState::yes : TriState::no;
}

inline Json rationals_json(const std::vector<Rational>& v) {
    if (v.empty()) return nullptr;
    Json a = Json::array();
    for (const Rational& q : v) a.push_back(rat_str(q));
    return a;
}

inline const char* atom_kind_str(AtomKind k) {
    switch (k) {
        case AtomKind::st: return "st";
        case AtomKind::nt: return "nt";
        case AtomKind::sl: return "sl";
        case AtomKind::abelian: return "abelian";
        default: return "other";
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Manifold descriptors <-> JSON

inline Json manifold_to_json(const ManifoldDescriptor& m) {
    Json j;
    j["dim"] = m.dim;
    j["compact"] = m.compact;
    j["boundary"] = m.has_boundary;
    j["orientable"] = detail::tri_json(m.orientable);
    j["euler"] = m.euler ? Json(*m.euler) : Json(nullptr);
    j["genus"] = m.genus ? Json(*m.genus) : Json(nullptr);
    j["pi1_finite"] = detail::tri_json(m.pi1_finite);
    j["parallelizable"] = detail::tri_json(m.parallelizable);
    j["surface_kind"] = m.surface_kind ? Json(surface_kind_str(*m.surface_kind)) : Json(nullptr);
    return j;
}

inline ManifoldDescriptor manifold_from_json(const Json& j) {
    if (!j.is_object())
        throw DescriptorError("manifold JSON: expected an object");
    static const std::set<std::string> known = {
        "dim",   "compact", "boundary",   "orientable",     "euler",
        "genus", "pi1_finite", "parallelizable", "surface_kind"};
    for (const auto& item : j.items())
        if (!known.count(item.key()))
            throw DescriptorError("manifold JSON: unknown key '" + item.key() + "'");

    ManifoldDescriptor m;
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw DescriptorError("manifold JSON: 'dim' is required and must be an integer");
    m.dim = j["dim"].get<int>();

    auto get_bool = [&](const char* key, bool dflt) {
        if (!j.contains(key) || j[key].is_null()) return dflt;
        if (!j[key].is_boolean())
            throw DescriptorError(std::string("manifold JSON: '") + key +
                                  "' must be a boolean");
        return j[key].get<bool>();
    };
    m.compact = get_bool("compact", false);
    m.has_boundary = get_bool("boundary", false);

    if (j.contains("orientable")) m.orientable = detail::tri_from_json(j["orientable"], "orientable");
    if (j.contains("pi1_finite")) m.pi1_finite = detail::tri_from_json(j["pi1_finite"], "pi1_finite");
    if (j.contains("parallelizable"))
        m.parallelizable = detail::tri_from_json(j["parallelizable"], "parallelizable");

    if (j.contains("euler") && !j["euler"].is_null()) {
        if (!j["euler"].is_number_integer())
            throw DescriptorError("manifold JSON: 'euler' must be an integer or null");
        m.euler = j["euler"].get<long long>();
    }
    if (j.contains("genus") && !j["genus"].is_null()) {
        if (!j["genus"].is_number_integer() || j["genus"].get<long long>() < 0)
            throw DescriptorError("manifold JSON: 'genus' must be a nonnegative integer or null");
        m.genus = j["genus"].get<int>();
    }
    if (j.contains("surface_kind") && !j["surface_kind"].is_null()) {
        if (!j["surface_kind"].is_string())
            throw DescriptorError("manifold JSON: 'surface_kind' must be a string or null");
        std::string name = j["surface_kind"].get<std::string>();
        auto kind = surface_kind_from(name);
        if (!kind)
            throw DescriptorError("manifold JSON: unknown surface_kind '" + name + "'");
        m.surface_kind = *kind;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Discrepancy notes

// The quoted terminology includes a derived-length formula that the
// computed series contradicts from m = 4 on (the length grows like
// 1 + log2 m, not m).  Whenever a report touches such an atom the computed
// value wins and this note says so next to the citation.
inline std::vector<std::string> discrepancy_notes(const AlgebraProfile& p) {
    std::vector<std::string> notes;
    if (!p.pattern_known) return notes;
    std::set<std::string> done;
    for (const FactorInfo& f : p.factors) {
        if (f.kind != AtomKind::st || f.param < 4) continue;
        if (!done.insert(f.text).second) continue;
        LieAlgebra atom = detail::build_st_or_nt(f.param, true, f.complex_field);
        int ell = derived_series(atom).length;
        const RuleText& dl = rule_text("DL");
        notes.push_back(f.text + ": the " + dl.theorem + " entry reads \"" + dl.quote +
                        "\", which would give " + std::to_string(f.param) +
                        " here, but the derived series computed for this atom has length " +
                        std::to_string(ell) + "; the computed value is authoritative.");
    }
    return notes;
}

// ---------------------------------------------------------------------------
// Algebra and verdict JSON

inline Json algebra_json(const LieAlgebra& L, const AlgebraProfile& p) {
    Json j;
    j["expression"] = p.expression.empty() ? Json(nullptr) : Json(p.expression);
    j["origin"] = L.origin;
    j["dim"] = p.dim;

    const ClassificationFlags& f = p.flags;
    Json fj;
    fj["abelian"] = f.abelian;
    fj["nilpotent"] = f.nilpotent;
    fj["nilpotency_class"] = f.nilpotent ? Json(f.nilpotency_class) : Json(nullptr);
    fj["solvable"] = f.solvable;
    fj["derived_length"] = f.solvable ? Json(f.derived_length) : Json(nullptr);
    fj["supersoluble"] = f.supersoluble;
    fj["supersoluble_certainty"] = certainty_str(f.supersoluble_certainty);
    fj["supersoluble_witness"] = detail::rationals_json(f.supersoluble_witness);
    fj["semisimple"] = f.semisimple;
    fj["semisimple_rank"] = f.semisimple ? Json(f.semisimple_rank) : Json(nullptr);
    fj["scalar_free"] = detail::tri_json(f.scalar_free);
    j["flags"] = std::move(fj);

    j["center_dim"] = p.center_dim;
    j["derived_dims"] = p.derived_dims;
    j["derived_in_center"] = p.derived_in_center;
    j["killing_det_sign"] = p.dim > 0 ? sign_of(det(killing_form(L))) : 0;

    Json rj;
    rj["r"] = p.rank.rank;
    rj["r_nonreal"] = p.rank.rank_nonreal;
    rj["method"] = p.rank.method;
    rj["certainty"] = p.rank.certainty == Certainty::exact ? "exact" : "heuristic";
    rj["witness"] = detail::rationals_json(p.rank.witness);
    j["rank"] = std::move(rj);

    Json aj;
    aj["status"] = ac_str(p.ac.status);
    aj["reason"] = p.ac.reason;
    if (p.ac.spectrum.empty()) {
        aj["spectrum"] = nullptr;
    } else {
        Json sp = Json::array();
        for (const auto& [value, mult] : p.ac.spectrum)
            sp.push_back(Json::array({rat_str(value), mult}));
        aj["spectrum"] = std::move(sp);
    }
    j["ac"] = std::move(aj);

    if (p.pattern_known) {
        Json fs = Json::array();
        for (const FactorInfo& fac : p.factors) {
            Json e;
            e["text"] = fac.text;
            e["kind"] = detail::atom_kind_str(fac.kind);
            e["param"] = fac.param;
            e["complex_field"] = fac.complex_field;
            e["dim"] = fac.dim;
            e["rep_dim"] = fac.rep_dim;
            e["scalar_free"] = detail::tri_json(fac.scalar_free);
            e["ac"] = ac_str(fac.ac);
            fs.push_back(std::move(e));
        }
        j["factors"] = std::move(fs);
    } else {
        j["factors"] = nullptr;
    }
    return j;
}

inline Json verdict_json(const Query& q, const Verdict& v) {
    Json j;
    j["mode"] = mode_str(q.mode);
    j["regularity"] = regularity_str(q.regularity);
    j["status"] = verdict_str(v.status);
    Json cites = Json::array();
    for (const Citation& c : v.citations) {
        Json e;
        e["theorem"] = c.theorem;
        e["quote"] = c.quote;
        e["tag"] = c.tag.empty() ? Json(nullptr) : Json(c.tag);
        cites.push_back(std::move(e));
    }
    j["citations"] = std::move(cites);
    Json trace = Json::array();
    for (const Firing& f : v.trace) {
        Json e;
        e["rule"] = f.rule;
        e["status"] = verdict_str(f.status);
        e["detail"] = f.detail;
        trace.push_back(std::move(e));
    }
    j["trace"] = std::move(trace);
    j["notes"] = v.notes;
    return j;
}

inline Json tool_json(const ClassifyConfig& ccfg, const SpectralConfig& scfg, bool strict) {
    Json j;
    j["name"] = "lieact";
    j["version"] = lieact_version;
    j["seed"] = scfg.seed;
    j["classify_samples"] = ccfg.samples;
    j["spectral_samples"] = scfg.samples;
    j["precision_bits"] = scfg.precision_bits;
    j["height_bound"] = scfg.height_bound.convert_to<long long>();
    j["strict"] = strict;
    return j;
}

struct VerdictRecord {
    Query query;
    Verdict verdict;
};

inline Json make_report(const LieAlgebra& L, const AlgebraProfile& p,
                        const ManifoldDescriptor* manifold,
                        const std::vector<VerdictRecord>& verdicts,
                        const ClassifyConfig& ccfg, const SpectralConfig& scfg,
                        bool strict) {
    Json j;
    j["report_v"] = 1;
    j["tool"] = tool_json(ccfg, scfg, strict);
    j["algebra"] = algebra_json(L, p);
    j["manifold"] = manifold ? manifold_to_json(*manifold) : Json(nullptr);
    Json vs = Json::array();
    for (const VerdictRecord& r : verdicts) vs.push_back(verdict_json(r.query, r.verdict));
    j["verdicts"] = std::move(vs);
    j["notes"] = discrepancy_notes(p);
    return j;
}

// ---------------------------------------------------------------------------
// Text renderers, shared by the CLI subcommands and their tests.

inline void render_invariants_text(std::ostream& out, const LieAlgebra& L,
                                   const AlgebraProfile& p) {
    out << "algebra: " << (p.expression.empty() ? L.origin : p.expression) << "\n";
    out << "dim: " << p.dim << "\n";
    const ClassificationFlags& f = p.flags;
    out << "abelian: " << (f.abelian ? "yes" : "no") << "\n";
    out << "nilpotent: " << (f.nilpotent ? "yes" : "no");
    if (f.nilpotent) out << " (class " << f.nilpotency_class << ")";
    out << "\n";
    out << "solvable: " << (f.solvable ? "yes" : "no") << "\n";
    if (f.solvable) out << "derived length: " << f.derived_length << "\n";
    out << "derived series dims:";
    for (int d : p.derived_dims) out << " " << d;
    out << "\n";
    out << "center dim: " << p.center_dim << "\n";
    out << "killing det sign: " << (p.dim > 0 ? sign_of(det(killing_form(L))) : 0) << "\n";
    out << "supersoluble: " << (f.supersoluble ? "yes" : "no") << " ("
        << certainty_str(f.supersoluble_certainty) << ")";
    if (!f.supersoluble && !f.supersoluble_witness.empty()) {
        out << " witness:";
        for (const Rational& q : f.supersoluble_witness) out << " " << rat_str(q);
    }
    out << "\n";
    out << "semisimple: " << (f.semisimple ? "yes" : "no");
    if (f.semisimple) out << " (rank " << f.semisimple_rank << ")";
    out << "\n";
    out << "scalar-free rep: " << tri_str(f.scalar_free) << "\n";
    out << "r: " << p.rank.rank << " (" << p.rank.method << ", "
        << (p.rank.certainty == Certainty::exact ? "exact" : "heuristic") << ")\n";
    out << "r_NR: " << p.rank.rank_nonreal << "\n";
    out << "AC: " << ac_str(p.ac.status);
    if (!p.ac.reason.empty()) out << " (" << p.ac.reason << ")";
    out << "\n";
    for (const std::string& n : discrepancy_notes(p)) out << "note: " << n << "\n";
}

inline void render_verdict_text(std::ostream& out, const Query& q, const Verdict& v) {
    out << "[mode=" << mode_str(q.mode) << " regularity=" << regularity_str(q.regularity)
        << "] " << verdict_str(v.status) << "\n";
    for (const Firing& f : v.trace)
        out << "  rule " << f.rule << " (" << verdict_str(f.status) << "): " << f.detail
            << "\n";
    for (const Citation& c : v.citations) {
        out << "  cite " << c.theorem << ": \"" << c.quote << "\"";
        if (!c.tag.empty()) out << " [" << c.tag << "]";
        out << "\n";
    }
    for (const std::string& n : v.notes) out << "  note: " << n << "\n";
}

}  // namespace lieact
