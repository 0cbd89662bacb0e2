#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lieact/classify.hpp"
#include "lieact/errors.hpp"
#include "lieact/lie_algebra.hpp"
#include "lieact/manifold.hpp"
#include "lieact/spectral.hpp"
#include "lieact/structure.hpp"
#include "lieact/tristate.hpp"

namespace lieact {

// Rule engine for action obstructions.  An AlgebraProfile bundles every
// invariant the rules consume; analyze() matches the cited rule table
// against (profile, manifold, query) and returns a verdict that names its
// theorems and quotes them verbatim, so reports are self-citing.
//
// Negative rules are verified facts about the algebra and manifold, so an
// IMPOSSIBLE at some smoothness class propagates to every stronger class.
// Positive rules come from explicit constructions, so a POSSIBLE at some
// class propagates to every weaker class.  Positive rules match on the
// syntactic catalog expression (recorded as a factor list), never on
// isomorphism class: a familiar algebra presented in a scrambled basis
// gets UNKNOWN where a pattern rule would have applied.

enum class Regularity { continuous, smooth, analytic };

inline const char* regularity_str(Regularity r) {
    switch (r) {
        case Regularity::continuous: return "continuous";
        case Regularity::smooth: return "smooth";
        default: return "analytic";
    }
}

inline std::optional<Regularity> regularity_from(const std::string& name) {
    if (name == "continuous") return Regularity::continuous;
    if (name == "smooth") return Regularity::smooth;
    if (name == "analytic") return Regularity::analytic;
    return std::nullopt;
}

enum class QueryMode { effective, fixed_point_free, transitive, compact_homogeneous };

inline const char* mode_str(QueryMode m) {
    switch (m) {
        case QueryMode::effective: return "effective";
        case QueryMode::fixed_point_free: return "fixed_point_free";
        case QueryMode::transitive: return "transitive";
        default: return "compact_homogeneous";
    }
}

inline std::optional<QueryMode> mode_from(const std::string& name) {
    if (name == "effective") return QueryMode::effective;
    if (name == "fixed-point-free" || name == "fixed_point_free")
        return QueryMode::fixed_point_free;
    if (name == "transitive") return QueryMode::transitive;
    if (name == "homogeneous" || name == "compact_homogeneous")
        return QueryMode::compact_homogeneous;
    return std::nullopt;
}

struct Query {
    Regularity regularity = Regularity::analytic;
    QueryMode mode = QueryMode::effective;
};

enum class VerdictStatus { impossible, possible, unknown };

inline const char* verdict_str(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::impossible: return "IMPOSSIBLE";
        case VerdictStatus::possible: return "POSSIBLE";
        default: return "UNKNOWN";
    }
}

// One theorem reference: the anchor name, its statement fragment, and an
// optional caveat tag (set when a firing rests on sampled evidence).
struct Citation {
    std::string theorem;
    std::string quote;
    std::string tag;
};

struct Firing {
    std::string rule;
    VerdictStatus status = VerdictStatus::unknown;
    std::string detail;
};

struct Verdict {
    VerdictStatus status = VerdictStatus::unknown;
    std::vector<Citation> citations;
    std::vector<Firing> trace;
    std::vector<std::string> notes;
};

struct EngineOptions {
    // Drop every firing that rests on sampled (uncertified) invariants
    // instead of tagging it.
    bool strict = false;
};

// Syntactic factor of the catalog expression the algebra was built from.
enum class AtomKind { st, nt, sl, abelian, other };

struct FactorInfo {
    std::string text;  // printed atom, e.g. "st(3,R)"
    AtomKind kind = AtomKind::other;
    int param = 0;  // the m in st(m,F) / nt(m,R) / sl(m,F) / abelian(m)
    bool complex_field = false;
    int dim = 0;
    int rep_dim = 0;  // 0 when no matrix realization is attached
    TriState scalar_free = TriState::unknown;
    ACState ac = ACState::unknown;
};

struct AlgebraProfile {
    std::string expression;  // printed catalog expression; empty for file input
    int dim = 0;
    ClassificationFlags flags;
    AlgebraRank rank;
    ACStatus ac;
    int center_dim = 0;
    std::vector<int> derived_dims;        // dims of g^(0), g^(1), ...
    std::vector<bool> derived_in_center;  // g^(j) ⊆ center, same indexing
    bool pattern_known = false;           // factors describe the build expression
    std::vector<FactorInfo> factors;
};

// Computes every profile field derivable from the structure constants.
// Factor data is syntactic and must be supplied by whoever built the
// algebra (see profile_factor).
inline AlgebraProfile profile_algebra(const LieAlgebra& L, const ClassifyConfig& ccfg = {},
                                      const SpectralConfig& scfg = {}) {
    AlgebraProfile p;
    p.dim = L.dim;
    p.flags = classify(L, ccfg);
    p.rank = algebra_spectral_rank(L, scfg);
    p.ac = ac_status(L, ccfg);
    Subspace c = center(L);
    p.center_dim = c.dim();
    SeriesResult ds = derived_series(L);
    p.derived_dims = ds.dims;
    p.derived_in_center.reserve(ds.terms.size());
    for (const Subspace& term : ds.terms) p.derived_in_center.push_back(c.contains(term));
    return p;
}

inline FactorInfo profile_factor(std::string text, AtomKind kind, int param, bool complex_field,
                                 const LieAlgebra& factor, const ClassifyConfig& cfg = {}) {
    FactorInfo f;
    f.text = std::move(text);
    f.kind = kind;
    f.param = param;
    f.complex_field = complex_field;
    f.dim = factor.dim;
    f.rep_dim = factor.has_rep() ? factor.rep.front().rows() : 0;
    f.scalar_free = scalar_free_rep(factor);
    f.ac = ac_status(factor, cfg).status;
    return f;
}

// Single source of truth for theorem anchors and their verbatim statement
// fragments.  Rule firings and informational notes both cite entries from
// this table; the CLI prints the same strings.
struct RuleText {
    const char* id;
    const char* theorem;
    const char* quote;
};

inline const std::vector<RuleText>& engine_rule_table() {
    static const std::vector<RuleText> table = {
        {"R1", "Thm ET", "n ≥ ℓ(g) − 1, and n ≥ ℓ(g) if g is nilpotent"},
        {"R2", "Thm ET", "n ≥ ℓ(g) − 1, and n ≥ ℓ(g) if g is nilpotent"},
        {"R3", "Thm ETcor(ii)(c)", "if α is nondegenerate then dim 𝔠 = 1"},
        {"R3n", "Terminology", "Effective analytic actions are nondegenerate"},
        {"R3i", "Thm ETcor(i)",
         "There is an open orbit. If α is nondegenerate the union of the open orbits is dense."},
        {"R3iia", "Thm ETcor(ii)(a)",
         "each nontrivial orbit of g^(n−1) lies in an open orbit of g and has dimension 1"},
        {"R3iib", "Thm ETcor(ii)(b)", "the number of open orbits is ≥ dim g^(n−1)"},
        {"R4", "Cor. estker", "dim 𝔨 ≥ max{r(g) − n, r_NR(g) − ⌊n/2⌋}"},
        {"R5", "Cor. estker", "dim 𝔨 ≥ max{r(g) − n, r_NR(g) − ⌊n/2⌋}"},
        {"R6", "Cor. smoothanal(b)", "χ(Mⁿ) = #Fix X^α ≥ #Fix α"},
        {"R7", "Thm hr", "effective analytic actions on Mⁿ if m ≥ 1, n ≥ 2"},
        {"R8", "Thm poly", "acts effectively on every manifold of positive dimension"},
        {"R9", "Thm st3r", "effective analytic actions on all compact surfaces"},
        {"R10", "Cor. ACcorfaith", "effective smooth actions on all n-manifolds"},
        {"R11", "Cor. noncompactcor", "Every noncompact M² supports effective analytic actions"},
        {"R12", "Cor. noncompactcor", "Every parallelizable noncompact Mⁿ"},
        {"F1", "Prop. fixedpts(d)", "If G is nilpotent and acts without fixed point, χ(M²) = 0"},
        {"F2", "Prop. fixedpts(c)", "If G acts analytically without fixed point, χ(M²) ≥ 0"},
        {"F3", "Prop. fixedpts(e)",
         "If G is supersoluble and acts analytically without fixed point, χ(M²) = 0"},
        {"F4", "Poincaré–Hopf",
         "R acts effectively without fixed point on a compact Mⁿ ⟺ χ(Mⁿ) = 0"},
        {"F5", "Prop. fixedpts(a)",
         "effective, fixed-point free C∞ actions on all compact surfaces"},
        {"F6", "Bonatti", "every analytic action of R² on Mⁿ has a fixed point"},
        {"T1", "Thm mostow",
         "plane, sphere, cylinder, torus, projective plane, Möbius strip or Klein bottle"},
        {"T2", "Thm mostow",
         "plane, sphere, cylinder, torus, projective plane, Möbius strip or Klein bottle"},
        {"H1", "Thm higher", "χ(M) ≥ 0, and if χ(M) > 0 then M has finite fundamental group"},
        {"XA", "Example exA",
         "st(n+1,R) × st(n+1,R) does not have an effective analytic action on any compact "
         "n-manifold"},
        {"DL", "Terminology", "For example, ℓ(st(m,F)) = m"},
    };
    return table;
}

inline const RuleText& rule_text(const std::string& id) {
    for (const RuleText& r : engine_rule_table())
        if (id == r.id) return r;
    throw Error("unknown rule id: " + id);
}

namespace detail {

struct RuleEval {
    std::vector<Firing> firings;
    std::vector<Citation> citations;
    std::vector<std::string> notes;

    void cite(const char* id, const char* tag = "") {
        const RuleText& r = rule_text(id);
        for (const Citation& c : citations)
            if (c.theorem == r.theorem && c.quote == r.quote && c.tag == tag) return;
        citations.push_back({r.theorem, r.quote, tag});
    }

    void fire(const char* id, VerdictStatus status, std::string detail, const char* tag = "") {
        firings.push_back({id, status, std::move(detail)});
        cite(id, tag);
    }

    void note(std::string text) {
        if (std::find(notes.begin(), notes.end(), text) == notes.end())
            notes.push_back(std::move(text));
    }
};

inline bool factor_is(const FactorInfo& f, AtomKind kind, int param, bool complex_field = false) {
    return f.kind == kind && f.param == param && f.complex_field == complex_field;
}

inline bool all_abelian(const AlgebraProfile& g) {
    if (!g.pattern_known || g.factors.empty()) return false;
    for (const FactorInfo& f : g.factors)
        if (f.kind != AtomKind::abelian) return false;
    return true;
}

inline bool poly_pattern(const AlgebraProfile& g) {
    if (!g.pattern_known || g.factors.empty()) return false;
    for (const FactorInfo& f : g.factors) {
        bool ok = f.kind == AtomKind::abelian ||
                  factor_is(f, AtomKind::sl, 2) ||
                  factor_is(f, AtomKind::st, 2);
        if (!ok) return false;
    }
    return true;
}

inline bool single_factor(const AlgebraProfile& g, AtomKind kind, int param,
                          bool complex_field = false) {
    return g.pattern_known && g.factors.size() == 1 &&
           factor_is(g.factors.front(), kind, param, complex_field);
}

inline std::string show(long long v) { return std::to_string(v); }

// Negative rules for effective actions (R1..R6).  Shared with the
// fixed-point-free mode: an algebra with no effective action at all has no
// effective fixed-point-free action either.
inline void eval_effective_negative(const AlgebraProfile& g, const ManifoldDescriptor& m,
                                    Regularity reg, const EngineOptions& opt, RuleEval& ev) {
    const int n = m.dim;
    const ClassificationFlags& fl = g.flags;
    const bool chi_known = m.euler.has_value();
    const long long chi = chi_known ? *m.euler : 0;

    if (fl.solvable && n < fl.derived_length - 1)
        ev.fire("R1", VerdictStatus::impossible,
                "solvable, ℓ = " + show(fl.derived_length) + ", n = " + show(n) + " < ℓ − 1");
    if (fl.nilpotent && fl.solvable && n < fl.derived_length)
        ev.fire("R2", VerdictStatus::impossible,
                "nilpotent, ℓ = " + show(fl.derived_length) + ", n = " + show(n) + " < ℓ");

    if (reg == Regularity::analytic && fl.solvable) {
        bool critical = n == fl.derived_length - 1 ||
                        (fl.nilpotent && n == fl.derived_length);
        if (critical && n >= 1 && n - 1 < static_cast<int>(g.derived_in_center.size()) &&
            g.derived_in_center[n - 1] && g.center_dim >= 2) {
            ev.fire("R3", VerdictStatus::impossible,
                    "critical dimension n = " + show(n) + ", g^(" + show(n - 1) +
                        ") ⊆ center, dim center = " + show(g.center_dim) + " ≥ 2");
            ev.cite("R3n");
            const RuleText& i = rule_text("R3i");
            const RuleText& iia = rule_text("R3iia");
            const RuleText& iib = rule_text("R3iib");
            ev.note(std::string(i.theorem) + " (for a hypothetical action): \"" + i.quote + "\"");
            ev.note(std::string(iia.theorem) + " (for a hypothetical action): \"" + iia.quote +
                    "\"");
            ev.note(std::string(iib.theorem) + " (for a hypothetical action): \"" + iib.quote +
                    "\"");
        }
    }

    const bool rank_heuristic = g.rank.certainty == Certainty::heuristic;
    const char* rank_tag = rank_heuristic ? "spectral rank heuristic" : "";
    const bool rank_usable = !(opt.strict && rank_heuristic);
    if (reg == Regularity::analytic && m.compact && chi_known && rank_usable) {
        if (chi != 0 && g.rank.rank > n)
            ev.fire("R4", VerdictStatus::impossible,
                    "compact, χ = " + show(chi) + " ≠ 0, r = " + show(g.rank.rank) +
                        " > n = " + show(n),
                    rank_tag);
        if (chi != 0 && g.rank.rank_nonreal > n / 2)
            ev.fire("R5", VerdictStatus::impossible,
                    "compact, χ = " + show(chi) + " ≠ 0, r_NR = " + show(g.rank.rank_nonreal) +
                        " > ⌊n/2⌋ = " + show(n / 2),
                    rank_tag);
        if (chi < 0 && 2 * g.rank.rank_nonreal == n)
            ev.fire("R6", VerdictStatus::impossible,
                    "compact, χ = " + show(chi) + " < 0, 2·r_NR = n = " + show(n), rank_tag);
    }
}

inline void eval_effective_positive(const AlgebraProfile& g, const ManifoldDescriptor& m,
                                    Regularity reg, RuleEval& ev) {
    const int n = m.dim;

    if (all_abelian(g) && g.dim >= 1 && n >= 2 && !m.has_boundary)
        ev.fire("R7", VerdictStatus::possible,
                "vector group of dimension " + show(g.dim) + " on n = " + show(n) + " ≥ 2");

    if (reg == Regularity::continuous && poly_pattern(g) && n >= 1)
        ev.fire("R8", VerdictStatus::possible,
                "product of sl(2,R), st(2,R) and vector factors, n = " + show(n) + " ≥ 1");

    if (single_factor(g, AtomKind::st, 3) && m.compact && n == 2 && !m.has_boundary)
        ev.fire("R9", VerdictStatus::possible, "st(3,R) on a compact surface");

    if (reg != Regularity::analytic && g.pattern_known && !g.factors.empty()) {
        bool eligible = true;
        int max_rep = 0;
        for (const FactorInfo& f : g.factors) {
            eligible = eligible && f.ac == ACState::ac && f.scalar_free == TriState::yes &&
                       f.rep_dim >= 1;
            max_rep = std::max(max_rep, f.rep_dim);
        }
        // Factors of rep dimension d give actions on all n-manifolds for
        // n ≥ d − 1 (Example exA's range m ≤ n, with rep padding covering
        // every larger n).
        if (eligible && n >= max_rep - 1 && n >= 1)
            ev.fire("R10", VerdictStatus::possible,
                    "every factor AC and scalar-free, max rep dimension " + show(max_rep) +
                        ", n = " + show(n) + " ≥ " + show(max_rep - 1));
    }

    if (!m.compact && n == 2 && !m.has_boundary &&
        (single_factor(g, AtomKind::sl, 3) || single_factor(g, AtomKind::sl, 2, true)))
        ev.fire("R11", VerdictStatus::possible, "noncompact surface");

    if (!m.compact && m.parallelizable == TriState::yes && !m.has_boundary &&
        single_factor(g, AtomKind::sl, n + 1))
        ev.fire("R12", VerdictStatus::possible,
                "parallelizable noncompact, sl(" + show(n + 1) + ",R) with n = " + show(n));
}

// The last exA bullet is strictly stronger than the mechanized rules: it
// rules out st(n+1,R)² on ALL compact n-manifolds, while Cor. estker only
// reaches the χ ≠ 0 ones.  Flag the gap instead of asserting it.
inline void eval_exa_gap_note(const AlgebraProfile& g, const ManifoldDescriptor& m,
                              Regularity reg, RuleEval& ev) {
    if (reg != Regularity::analytic || !m.compact) return;
    if (!g.pattern_known || g.factors.size() != 2) return;
    const FactorInfo& a = g.factors[0];
    const FactorInfo& b = g.factors[1];
    if (!factor_is(a, AtomKind::st, m.dim + 1) || !factor_is(b, AtomKind::st, m.dim + 1)) return;
    if (m.euler && *m.euler != 0) return;  // the χ ≠ 0 case is covered by R4/R5
    const RuleText& xa = rule_text("XA");
    ev.note(std::string(xa.theorem) + " asserts more than the encoded rules: \"" + xa.quote +
            "\" (at n = " + show(m.dim) + "); only the χ ≠ 0 part is mechanized, so this "
            "query is left UNKNOWN.");
}

inline void eval_effective(const AlgebraProfile& g, const ManifoldDescriptor& m, Regularity reg,
                           const EngineOptions& opt, RuleEval& ev) {
    eval_effective_negative(g, m, reg, opt, ev);
    eval_effective_positive(g, m, reg, ev);
    eval_exa_gap_note(g, m, reg, ev);
}

inline void eval_fixed_point_free(const AlgebraProfile& g, const ManifoldDescriptor& m,
                                  Regularity reg, const EngineOptions& opt, RuleEval& ev) {
    const int n = m.dim;
    const ClassificationFlags& fl = g.flags;
    const bool chi_known = m.euler.has_value();
    const long long chi = chi_known ? *m.euler : 0;

    if (m.compact && n == 2 && chi_known) {
        if (fl.nilpotent && chi != 0)
            ev.fire("F1", VerdictStatus::impossible,
                    "nilpotent on a compact surface with χ = " + show(chi) + " ≠ 0");
        if (reg == Regularity::analytic && chi < 0)
            ev.fire("F2", VerdictStatus::impossible,
                    "compact surface with χ = " + show(chi) + " < 0");
        const bool ss_sampled =
            fl.supersoluble_certainty == SupersolubleCertainty::exact_per_sample;
        if (reg == Regularity::analytic && fl.supersoluble && chi != 0 &&
            !(opt.strict && ss_sampled))
            ev.fire("F3", VerdictStatus::impossible,
                    "supersoluble on a compact surface with χ = " + show(chi) + " ≠ 0",
                    ss_sampled ? "supersolubility sampled, not certified" : "");
    }

    if (reg == Regularity::analytic && m.compact && chi_known && chi != 0 &&
        (n == 3 || n == 4) && all_abelian(g) && g.dim == 2)
        ev.fire("F6", VerdictStatus::impossible,
                "R² on a compact " + show(n) + "-manifold with χ = " + show(chi) + " ≠ 0");

    if (all_abelian(g) && g.dim == 1 && m.compact && chi_known) {
        if (chi == 0 && !m.has_boundary)
            ev.fire("F4", VerdictStatus::possible, "χ = 0: flow along a nonvanishing field");
        if (chi != 0)
            ev.fire("F4", VerdictStatus::impossible, "χ = " + show(chi) + " ≠ 0 forces a zero");
    }

    // Vector groups of higher dimension on closed χ = 0 surfaces: one
    // fixed-point free flow (F4) extended by commuting analytic
    // reparametrizations, in the spirit of Thm hr's constructions.
    if (all_abelian(g) && g.dim >= 2 && m.compact && !m.has_boundary && n == 2 && chi_known &&
        chi == 0) {
        ev.fire("F4", VerdictStatus::possible,
                "χ = 0 closed surface: fixed-point free flow extended to the vector group of "
                "dimension " + show(g.dim));
        ev.cite("R7");
        ev.note("composed verdict: the Poincaré–Hopf direction supplies a fixed-point free "
                "flow, and commuting analytic reparametrizations of it realize the full "
                "vector group effectively.");
    }

    if (reg != Regularity::analytic && single_factor(g, AtomKind::st, 2) && m.compact && n == 2 &&
        !m.has_boundary)
        ev.fire("F5", VerdictStatus::possible, "st(2,R) on a compact surface");

    // An algebra with no effective action at all cannot act effectively
    // without fixed points either.
    RuleEval sub;
    eval_effective_negative(g, m, reg, opt, sub);
    for (Firing& f : sub.firings) {
        f.detail += " (rules out every effective action)";
        ev.firings.push_back(std::move(f));
    }
    for (const Citation& c : sub.citations) {
        bool seen = false;
        for (const Citation& have : ev.citations)
            seen = seen || (have.theorem == c.theorem && have.quote == c.quote &&
                            have.tag == c.tag);
        if (!seen) ev.citations.push_back(c);
    }
    for (std::string& note : sub.notes) ev.note(std::move(note));
}

inline void eval_transitive(const ManifoldDescriptor& m, RuleEval& ev) {
    ev.note("transitive verdicts answer whether SOME Lie group acts transitively; the algebra "
            "input is not consulted.");
    if (m.dim != 2 || m.has_boundary) return;

    if (m.surface_kind && *m.surface_kind != SurfaceKind::other) {
        if (is_mostow_kind(*m.surface_kind))
            ev.fire("T1", VerdictStatus::possible,
                    std::string(surface_kind_str(*m.surface_kind)) + " is on the Mostow list");
        else
            ev.fire("T2", VerdictStatus::impossible,
                    std::string(surface_kind_str(*m.surface_kind)) +
                        (m.genus ? " " + show(*m.genus) : "") + " is not on the Mostow list");
        return;
    }

    // No usable kind: for closed surfaces χ still decides, because every
    // closed surface with χ ≥ 0 is a sphere, torus, projective plane or
    // Klein bottle, all on the list.
    if (m.compact && m.euler) {
        if (*m.euler >= 0)
            ev.fire("T1", VerdictStatus::possible,
                    "closed surface with χ = " + show(*m.euler) + " ≥ 0 is on the Mostow list");
        else
            ev.fire("T2", VerdictStatus::impossible,
                    "closed surface with χ = " + show(*m.euler) + " < 0 is not on the Mostow "
                    "list");
    }
}

inline void eval_compact_homogeneous(const ManifoldDescriptor& m, RuleEval& ev) {
    ev.note("compact_homogeneous verdicts answer whether the manifold is a compact homogeneous "
            "space of SOME Lie group; the algebra input is not consulted.");
    if (!m.compact || m.has_boundary || !m.euler) return;
    if (*m.euler < 0)
        ev.fire("H1", VerdictStatus::impossible, "χ = " + show(*m.euler) + " < 0");
    else if (*m.euler > 0 && m.pi1_finite == TriState::no)
        ev.fire("H1", VerdictStatus::impossible,
                "χ = " + show(*m.euler) + " > 0 with infinite fundamental group");
}

}  // namespace detail

// Evaluates every applicable rule and assembles the verdict.  A positive
// and a negative rule firing together is a bug in the rule table or an
// out-of-contract profile, never a tie to break, so it throws.
inline Verdict analyze(const AlgebraProfile& g, const ManifoldDescriptor& m_in, const Query& q,
                       const EngineOptions& opt = {}) {
    ManifoldDescriptor m = manifold_validate(m_in);
    detail::RuleEval ev;
    switch (q.mode) {
        case QueryMode::effective:
            detail::eval_effective(g, m, q.regularity, opt, ev);
            break;
        case QueryMode::fixed_point_free:
            detail::eval_fixed_point_free(g, m, q.regularity, opt, ev);
            break;
        case QueryMode::transitive:
            detail::eval_transitive(m, ev);
            break;
        case QueryMode::compact_homogeneous:
            detail::eval_compact_homogeneous(m, ev);
            break;
    }

    bool any_pos = false, any_neg = false;
    for (const Firing& f : ev.firings) {
        any_pos = any_pos || f.status == VerdictStatus::possible;
        any_neg = any_neg || f.status == VerdictStatus::impossible;
    }
    if (any_pos && any_neg) {
        std::string ids;
        for (const Firing& f : ev.firings) ids += (ids.empty() ? "" : ", ") + f.rule;
        throw ContradictionError("rule engine contradiction, fired: " + ids);
    }

    Verdict v;
    v.status = any_neg ? VerdictStatus::impossible
                       : (any_pos ? VerdictStatus::possible : VerdictStatus::unknown);
    v.trace = std::move(ev.firings);
    v.notes = std::move(ev.notes);
    if (v.status != VerdictStatus::unknown) v.citations = std::move(ev.citations);
    return v;
}

}  // namespace lieact
