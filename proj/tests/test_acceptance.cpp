#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lieact/catalog.hpp"
#include "lieact/engine.hpp"
#include "lieact/liefile.hpp"
#include "lieact/report.hpp"

// Acceptance sweep: ten end-to-end checks, one printed PASS/FAIL line each.
// Every tolerance and seed is pinned right where it is used.

using namespace lieact;

namespace {

// Prints the per-criterion line even when an assertion unwinds the case.
struct CriterionLine {
    int n;
    std::string summary;
    bool ok = false;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    ~CriterionLine() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " - " << summary
                  << " [" << ms << " ms]" << std::endl;
    }
};

LieAlgebra build_text(const std::string& text) { return build(parse_expression(text)); }

ManifoldDescriptor closed_surface(int genus, bool orientable) {
    ManifoldDescriptor m;
    m.dim = 2;
    m.compact = true;
    m.orientable = orientable ? TriState::yes : TriState::no;
    m.genus = genus;
    return m;
}

ManifoldDescriptor of_kind(SurfaceKind k, bool compact) {
    ManifoldDescriptor m;
    m.dim = 2;
    m.compact = compact;
    m.surface_kind = k;
    return m;
}

ManifoldDescriptor circle() {
    ManifoldDescriptor m;
    m.dim = 1;
    m.compact = true;
    return m;
}

ManifoldDescriptor sphere3() {
    ManifoldDescriptor m;
    m.dim = 3;
    m.compact = true;
    m.orientable = TriState::yes;
    m.pi1_finite = TriState::yes;
    m.parallelizable = TriState::yes;
    return m;
}

bool fired(const Verdict& v, const std::string& rule) {
    for (const Firing& f : v.trace)
        if (f.rule == rule) return true;
    return false;
}

bool cites(const Verdict& v, const std::string& theorem) {
    for (const Citation& c : v.citations)
        if (c.theorem == theorem) return true;
    return false;
}

MatrixQ from_rows(const std::vector<std::vector<Rational>>& rows, int cols) {
    MatrixQ m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

bool matrix_is_zero(const MatrixQ& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) return false;
    return true;
}

std::vector<Rational> flatten(const MatrixQ& m) {
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

// Greedy linearly independent subset, deciding membership by matrix rank.
std::vector<MatrixQ> independent_subset(const std::vector<MatrixQ>& cands) {
    std::vector<MatrixQ> out;
    std::vector<std::vector<Rational>> rows;
    for (const MatrixQ& c : cands) {
        std::vector<Rational> v = flatten(c);
        rows.push_back(v);
        if (rank_of(from_rows(rows, static_cast<int>(v.size()))) ==
            static_cast<int>(rows.size()))
            out.push_back(c);
        else
            rows.pop_back();
    }
    return out;
}

// Derived length recomputed from the matrix realization alone: iterate
// commutator spans of actual matrices, no structure constants involved.
int matrix_derived_length(std::vector<MatrixQ> cur) {
    cur = independent_subset(cur);
    int len = 0;
    while (!cur.empty()) {
        ++len;
        REQUIRE(len <= 64);
        std::vector<MatrixQ> comms;
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                MatrixQ c = cur[i] * cur[j] - cur[j] * cur[i];
                if (!matrix_is_zero(c)) comms.push_back(std::move(c));
            }
        cur = independent_subset(comms);
    }
    return len;
}

void require_exact_keys(const nlohmann::ordered_json& j,
                        std::initializer_list<const char*> keys) {
    REQUIRE(j.is_object());
    REQUIRE(j.size() == keys.size());
    for (const char* k : keys) REQUIRE(j.contains(k));
}

}  // namespace

TEST_CASE("criterion 1: structure constant validation") {
    CriterionLine line{1, "catalog Jacobi validation and corrupted-fixture rejection"};

    for (const char* text : {"st(2,R)", "st(3,R)", "st(4,R)", "st(5,R)", "st(6,R)", "nt(2,R)",
                             "nt(3,R)", "nt(4,R)", "nt(5,R)", "nt(6,R)", "sl(2,R)", "sl(3,R)",
                             "sl(2,C)"})
        REQUIRE_NOTHROW(validate(build_text(text)));

    // Corrupt one bracket of a valid algebra and keep only the structure
    // constants, so the rejection must come from the Jacobi check.
    auto corrupted = [](const char* text, int i, int j, int k) {
        LieAlgebra L = build_text(text);
        L.rep.clear();
        L.grading.clear();
        set_bracket(L, i, j, {{k, Rational(1)}});
        return L;
    };
    struct Fixture {
        const char* text;
        int i, j, k;
    };
    // st(3,R): [E11,E12] := E13, nt(4,R): [E23,E34] := E14, sl(2,R): [e,f] := e.
    const Fixture fixtures[] = {{"st(3,R)", 0, 3, 5}, {"nt(4,R)", 1, 2, 5}, {"sl(2,R)", 1, 2, 1}};
    for (const Fixture& fx : fixtures) {
        LieAlgebra bad = corrupted(fx.text, fx.i, fx.j, fx.k);
        bool threw = false;
        try {
            validate(bad);
        } catch (const ValidationError& e) {
            threw = true;
            REQUIRE(std::string(e.what()).find("Jacobi") != std::string::npos);
            REQUIRE(e.i >= 1);
            REQUIRE(e.j >= 1);
            REQUIRE(e.k >= 1);
        }
        REQUIRE(threw);
    }

    line.ok = true;
}

TEST_CASE("criterion 2: derived lengths of st(m,R)") {
    CriterionLine line{2, "derived lengths, library vs matrix brute force"};

    // Independent recomputation straight from the upper triangular matrices.
    const int expected[] = {0, 0, 2, 3, 3, 4};
    for (int m = 2; m <= 5; ++m) {
        LieAlgebra L = build_text("st(" + std::to_string(m) + ",R)");
        int lib = derived_series(L).length;
        int brute = matrix_derived_length(L.rep);
        REQUIRE(lib == brute);
        REQUIRE(lib == expected[m]);
    }

    // The closed-form pattern l(st(m,F)) = m holds only through m = 3; the
    // report on any st factor with m >= 4 must carry the discrepancy note.
    AlgebraExpr e5 = parse_expression("st(5,R)");
    AlgebraProfile p5 = profile_expression(e5);
    std::vector<std::string> notes = discrepancy_notes(p5);
    REQUIRE(notes.size() == 1);
    REQUIRE(notes[0].find("ℓ(st(m,F)) = m") != std::string::npos);
    REQUIRE(notes[0].find("length 4") != std::string::npos);
    nlohmann::ordered_json rep =
        make_report(build(e5), p5, nullptr, {}, ClassifyConfig{}, SpectralConfig{}, false);
    REQUIRE(rep["notes"].size() == 1);

    line.summary += " (l = 2,3,3,4 for m = 2..5; the pattern value 3 for st(5,R) is"
                    " superseded by the computed 4, discrepancy note attached)";
    line.ok = true;
}

TEST_CASE("criterion 3: nilpotency class and centers") {
    CriterionLine line{3, "nt(m,R) nilpotency class m-1, strn(n) center dimension 2"};

    for (int m = 3; m <= 6; ++m) {
        LieAlgebra L = build_text("nt(" + std::to_string(m) + ",R)");
        REQUIRE(lower_central_series(L).length == m - 1);
    }
    for (int n = 2; n <= 4; ++n) {
        LieAlgebra L = build_text("strn(" + std::to_string(n) + ")");
        REQUIRE(center(L).dim() == 2);
    }

    line.ok = true;
}

TEST_CASE("criterion 4: exact spectral ranks") {
    CriterionLine line{4, "r(st(m,R)) = m-1 by exact weights, r_NR = 0 when supersoluble"};

    for (int m = 2; m <= 5; ++m) {
        AlgebraRank r = algebra_spectral_rank(build_text("st(" + std::to_string(m) + ",R)"));
        REQUIRE(r.rank == m - 1);
        REQUIRE(r.rank_nonreal == 0);
        REQUIRE(r.method == "exact-weights");
        REQUIRE(r.certainty == Certainty::exact);
    }

    for (const char* text :
         {"st(2,R)", "st(3,R)", "st(4,R)", "st(5,R)", "nt(2,R)", "nt(3,R)", "nt(4,R)",
          "nt(5,R)", "abelian(1)", "abelian(2)", "abelian(3)", "abelian(4)", "strn(1)",
          "strn(2)", "strn(3)", "strn(4)", "derived(st(4,R))", "st(2,R) x nt(3,R)"}) {
        LieAlgebra L = build_text(text);
        REQUIRE(is_supersoluble(L).value);
        REQUIRE(algebra_spectral_rank(L).rank_nonreal == 0);
    }

    line.ok = true;
}

TEST_CASE("criterion 5: sampled nonreal ranks of st(m,C)") {
    CriterionLine line{5, "r_NR(st(m,C)) = m-1 sampled, stable across seeds"};

    const std::uint64_t seeds[] = {20260401, 7, 424242};
    for (int m = 2; m <= 4; ++m) {
        LieAlgebra L = build_text("st(" + std::to_string(m) + ",C)");
        int first_rank = -1, first_nonreal = -1;
        for (std::uint64_t seed : seeds) {
            SpectralConfig cfg;
            cfg.seed = seed;
            cfg.precision_bits = 256;
            AlgebraRank r = algebra_spectral_rank(L, cfg);
            REQUIRE(r.rank_nonreal == m - 1);
            REQUIRE(r.method == "numeric-sampled");
            if (first_rank < 0) {
                first_rank = r.rank;
                first_nonreal = r.rank_nonreal;
            }
            REQUIRE(r.rank == first_rank);
            REQUIRE(r.rank_nonreal == first_nonreal);
        }
    }

    line.ok = true;
}

TEST_CASE("criterion 6: the semisimple counterexample sl(2,R)") {
    CriterionLine line{6, "sl(2,R) Killing form, rank, and certified nonreal witness"};

    LieAlgebra L = build_text("sl(2,R)");
    REQUIRE(det(killing_form(L)) != 0);

    ClassificationFlags f = classify(L);
    REQUIRE(f.semisimple);
    REQUIRE(f.semisimple_rank == 1);
    REQUIRE_FALSE(f.supersoluble);

    AlgebraRank r = algebra_spectral_rank(L);
    REQUIRE(r.rank == 1);
    REQUIRE(r.rank_nonreal == 1);

    SupersolubleResult ss = is_supersoluble(L);
    REQUIRE_FALSE(ss.value);
    REQUIRE(ss.certainty == SupersolubleCertainty::certified);
    REQUIRE_FALSE(ss.witness.empty());
    // The witness must carry a nonreal eigenvalue, decided exactly: its
    // squarefree characteristic polynomial has fewer real roots than degree.
    PolyQ p = charpoly(ad_matrix(L, ss.witness));
    PolyQ sf = squarefree_part(p);
    REQUIRE(count_distinct_real_roots(sf) < poly_degree(sf));

    line.ok = true;
}

TEST_CASE("criterion 7: verdict suite with citations") {
    CriterionLine line{7, "feasibility verdicts fire the expected rules and citations"};

    // a. nilpotent product on closed surfaces: analytic no, smooth yes.
    // Nonorientable genus starts at 1 (genus 0 closed surface is the sphere).
    {
        AlgebraProfile p = profile_expression(parse_expression("nt(3,R) x nt(3,R)"));
        std::vector<ManifoldDescriptor> surfaces;
        for (int g = 0; g <= 3; ++g) surfaces.push_back(closed_surface(g, true));
        for (int g = 1; g <= 3; ++g) surfaces.push_back(closed_surface(g, false));
        for (const ManifoldDescriptor& m : surfaces) {
            Verdict no = analyze(p, m, {Regularity::analytic, QueryMode::effective});
            REQUIRE(no.status == VerdictStatus::impossible);
            REQUIRE(fired(no, "R3"));
            REQUIRE(cites(no, "Thm ETcor(ii)(c)"));
            Verdict yes = analyze(p, m, {Regularity::smooth, QueryMode::effective});
            REQUIRE(yes.status == VerdictStatus::possible);
            REQUIRE(fired(yes, "R10"));
            REQUIRE(cites(yes, "Cor. ACcorfaith"));
        }
    }

    AlgebraProfile sl2 = profile_expression(parse_expression("sl(2,R)"));

    // b. sl(2,R) on the genus 2 surface: analytic no, continuous yes.
    {
        Verdict no = analyze(sl2, closed_surface(2, true),
                             {Regularity::analytic, QueryMode::effective});
        REQUIRE(no.status == VerdictStatus::impossible);
        REQUIRE(fired(no, "R6"));
        REQUIRE(cites(no, "Cor. smoothanal(b)"));
        Verdict yes = analyze(sl2, closed_surface(2, true),
                              {Regularity::continuous, QueryMode::effective});
        REQUIRE(yes.status == VerdictStatus::possible);
        REQUIRE(fired(yes, "R8"));
        REQUIRE(cites(yes, "Thm poly"));
    }

    // c. rank overflow on a compact 3-manifold with boundary and chi = 2.
    {
        AlgebraProfile p = profile_expression(parse_expression("st(4,R) x st(4,R)"));
        ManifoldDescriptor m;
        m.dim = 3;
        m.compact = true;
        m.has_boundary = true;
        m.euler = 2;
        Verdict v = analyze(p, m, {Regularity::analytic, QueryMode::effective});
        REQUIRE(v.status == VerdictStatus::impossible);
        REQUIRE(fired(v, "R4"));
        REQUIRE(cites(v, "Cor. estker"));
    }

    // d. vector groups act analytically on the torus and the 3-sphere.
    for (int m = 1; m <= 3; ++m) {
        AlgebraProfile p =
            profile_expression(parse_expression("abelian(" + std::to_string(m) + ")"));
        for (const ManifoldDescriptor& man : {of_kind(SurfaceKind::torus, true), sphere3()}) {
            Verdict v = analyze(p, man, {Regularity::analytic, QueryMode::effective});
            REQUIRE(v.status == VerdictStatus::possible);
            REQUIRE(fired(v, "R7"));
            REQUIRE(cites(v, "Thm hr"));
        }
    }

    // e. st(3,R) cannot act on the circle, already continuously.
    {
        AlgebraProfile p = profile_expression(parse_expression("st(3,R)"));
        Verdict v = analyze(p, circle(), {Regularity::continuous, QueryMode::effective});
        REQUIRE(v.status == VerdictStatus::impossible);
        REQUIRE(fired(v, "R1"));
        REQUIRE(cites(v, "Thm ET"));
    }

    // f. homogeneity: genus 2 is never a compact homogeneous space, and the
    // transitive surfaces are exactly the seven admitting a transitive group.
    {
        Verdict h = analyze(sl2, closed_surface(2, true),
                            {Regularity::continuous, QueryMode::compact_homogeneous});
        REQUIRE(h.status == VerdictStatus::impossible);
        REQUIRE(fired(h, "H1"));
        REQUIRE(cites(h, "Thm higher"));

        const SurfaceKind mostow[] = {
            SurfaceKind::plane,   SurfaceKind::sphere,           SurfaceKind::cylinder,
            SurfaceKind::torus,   SurfaceKind::projective_plane, SurfaceKind::moebius,
            SurfaceKind::klein_bottle};
        for (SurfaceKind k : mostow) {
            bool compact = k == SurfaceKind::sphere || k == SurfaceKind::torus ||
                           k == SurfaceKind::projective_plane || k == SurfaceKind::klein_bottle;
            Verdict v = analyze(sl2, of_kind(k, compact),
                                {Regularity::continuous, QueryMode::transitive});
            REQUIRE(v.status == VerdictStatus::possible);
            REQUIRE(fired(v, "T1"));
            REQUIRE(cites(v, "Thm mostow"));
        }
        for (const ManifoldDescriptor& m :
             {closed_surface(2, true), closed_surface(3, true), closed_surface(3, false),
              closed_surface(4, false)}) {
            Verdict v = analyze(sl2, m, {Regularity::continuous, QueryMode::transitive});
            REQUIRE(v.status == VerdictStatus::impossible);
            REQUIRE(fired(v, "T2"));
            REQUIRE(cites(v, "Thm mostow"));
        }
    }

    // g. fixed-point-free mode.
    {
        AlgebraProfile heis = profile_expression(parse_expression("nt(3,R)"));
        Verdict f1 = analyze(heis, of_kind(SurfaceKind::sphere, true),
                             {Regularity::continuous, QueryMode::fixed_point_free});
        REQUIRE(f1.status == VerdictStatus::impossible);
        REQUIRE(fired(f1, "F1"));
        REQUIRE(cites(f1, "Prop. fixedpts(d)"));

        AlgebraProfile aff = profile_expression(parse_expression("st(2,R)"));
        Verdict f5 = analyze(aff, of_kind(SurfaceKind::sphere, true),
                             {Regularity::smooth, QueryMode::fixed_point_free});
        REQUIRE(f5.status == VerdictStatus::possible);
        REQUIRE(fired(f5, "F5"));
        REQUIRE(cites(f5, "Prop. fixedpts(a)"));

        AlgebraProfile plane = profile_expression(parse_expression("abelian(2)"));
        ManifoldDescriptor m4;
        m4.dim = 4;
        m4.compact = true;
        m4.euler = 2;
        Verdict f6 = analyze(plane, m4, {Regularity::analytic, QueryMode::fixed_point_free});
        REQUIRE(f6.status == VerdictStatus::impossible);
        REQUIRE(fired(f6, "F6"));
        REQUIRE(cites(f6, "Bonatti"));
    }

    line.ok = true;
}

TEST_CASE("criterion 8: property sweeps") {
    CriterionLine line{8, "Cayley-Hamilton, weight decompositions, rank invariance, grid"};

    std::mt19937_64 rng(20260819);
    auto small_rational = [&rng]() {
        long num = static_cast<long>(rng() % 19) - 9;
        long den = 1 + static_cast<long>(rng() % 4);
        return Rational(num) / Rational(den);
    };

    // Every matrix satisfies its characteristic polynomial, 200 rounds.
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        MatrixQ m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = small_rational();
        PolyQ p = charpoly(m);
        MatrixQ acc(n, n);
        for (int k = poly_degree(p); k >= 0; --k) {
            acc = acc * m;
            for (int i = 0; i < n; ++i) acc(i, i) += p[k];
        }
        REQUIRE(matrix_is_zero(acc));
    }

    // Weight spaces of a matrix with known rational spectrum decompose the
    // whole space, 100 rounds.  Conjugating by a unimodular matrix keeps the
    // arithmetic exact while hiding the triangular shape.
    const Rational pool[] = {Rational(-3), Rational(-1), Rational(0),     Rational(2),
                             Rational(1) / 2, Rational(3) / 2, Rational(-5) / 3};
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        int r = 1 + static_cast<int>(rng() % std::min(n, 3));
        std::vector<int> idx = {0, 1, 2, 3, 4, 5, 6};
        std::shuffle(idx.begin(), idx.end(), rng);
        std::vector<Rational> lambdas;
        for (int i = 0; i < r; ++i) lambdas.push_back(pool[idx[i]]);
        std::vector<int> mult(r, 1);
        for (int extra = n - r; extra > 0; --extra) ++mult[rng() % r];

        MatrixQ t(n, n);
        int at = 0;
        for (int b = 0; b < r; ++b) {
            for (int s = 0; s < mult[b]; ++s) {
                t(at + s, at + s) = lambdas[b];
                if (s + 1 < mult[b]) t(at + s, at + s + 1) = 1;
            }
            at += mult[b];
        }
        MatrixQ s = MatrixQ::identity(n);
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < i; ++j) s(i, j) = Rational(static_cast<long>(rng() % 5) - 2);
        std::optional<MatrixQ> sinv = inverse(s);
        REQUIRE(sinv.has_value());
        MatrixQ m = s * t * *sinv;

        std::vector<std::vector<Rational>> stacked;
        for (int b = 0; b < r; ++b) {
            Subspace w = weight_space(m, lambdas[b]);
            REQUIRE(w.dim() == mult[b]);
            for (int i = 0; i < w.dim(); ++i) stacked.push_back(w.basis_vector(i));
        }
        REQUIRE(static_cast<int>(stacked.size()) == n);
        REQUIRE(rank_of(from_rows(stacked, n)) == n);
    }

    // q_linear_rank is invariant under permutation and common rational
    // scaling, and matches the coefficient rank over a known independent
    // basis {sqrt(2), sqrt(3), sqrt(5), sqrt(7), sqrt(11)}, 100 rounds.
    {
        PrecisionScope scope(320);
        const long primes[] = {2, 3, 5, 7, 11};
        std::vector<BigFloat> roots;
        for (long q : primes) roots.push_back(sqrt(BigFloat(q)));
        // Values stay below 2^8 and carry ~320 correct bits; 2^-260 leaves a
        // wide margin over the relation finder's radius cap at 256 bits.
        const BigFloat radius = pow2(-260);

        for (int trial = 0; trial < 100; ++trial) {
            int k = 2 + static_cast<int>(rng() % 5);
            std::vector<std::vector<long>> coeffs;
            std::set<std::vector<long>> seen;
            while (static_cast<int>(coeffs.size()) < k) {
                std::vector<long> row(5, 0);
                bool nonzero = false;
                for (long& c : row) {
                    c = static_cast<long>(rng() % 11) - 5;
                    nonzero = nonzero || c != 0;
                }
                if (nonzero && seen.insert(row).second) coeffs.push_back(row);
            }

            auto generators = [&](const Rational& scale) {
                std::vector<GammaGenerator> gens;
                for (const std::vector<long>& row : coeffs) {
                    BigFloat v(0);
                    for (int j = 0; j < 5; ++j) v += BigFloat(row[j]) * roots[j];
                    GammaGenerator g;
                    g.value = CFloat(v * to_float(scale), BigFloat(0));
                    g.radius = radius * (1 + abs(to_float(scale)));
                    gens.push_back(std::move(g));
                }
                return gens;
            };

            MatrixQ a(k, 5);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < 5; ++j) a(i, j) = Rational(coeffs[i][j]);
            int expected = rank_of(a);

            RelationConfig cfg;  // 256 bits, height bound 10^6
            QLinearRankResult base = q_linear_rank(generators(Rational(1)), cfg);
            REQUIRE(base.rank == expected);
            REQUIRE(static_cast<int>(base.relations.size()) + base.rank == k);

            std::vector<GammaGenerator> shuffled = generators(Rational(1));
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            REQUIRE(q_linear_rank(shuffled, cfg).rank == expected);

            Rational c = Rational(3) / 7;
            REQUIRE(q_linear_rank(generators(c), cfg).rank == expected);
        }
    }

    // Regularity monotonicity across the whole catalog and descriptor grid:
    // IMPOSSIBLE propagates towards analytic, POSSIBLE towards continuous,
    // and the engine never reports contradictory rules.
    {
        std::vector<AlgebraProfile> profiles;
        for (const char* text :
             {"st(2,R)", "st(3,R)", "st(4,R) x st(4,R)", "st(2,C)", "nt(3,R) x nt(3,R)",
              "nt(4,R)", "sl(2,R)", "sl(3,R)", "sl(2,C)", "abelian(1)", "abelian(2)",
              "strn(2)", "derived(st(4,R))"})
            profiles.push_back(profile_expression(parse_expression(text)));

        std::vector<ManifoldDescriptor> manifolds;
        for (int g = 0; g <= 2; ++g) manifolds.push_back(closed_surface(g, true));
        for (int g = 1; g <= 3; ++g) manifolds.push_back(closed_surface(g, false));
        manifolds.push_back(of_kind(SurfaceKind::plane, false));
        manifolds.push_back(of_kind(SurfaceKind::cylinder, false));
        manifolds.push_back(of_kind(SurfaceKind::moebius, false));
        manifolds.push_back(circle());
        manifolds.push_back(sphere3());
        ManifoldDescriptor bounded3;
        bounded3.dim = 3;
        bounded3.compact = true;
        bounded3.has_boundary = true;
        bounded3.euler = 2;
        manifolds.push_back(bounded3);
        ManifoldDescriptor m4;
        m4.dim = 4;
        m4.compact = true;
        m4.euler = 2;
        manifolds.push_back(m4);
        ManifoldDescriptor open3;
        open3.dim = 3;
        open3.compact = false;
        open3.parallelizable = TriState::yes;
        manifolds.push_back(open3);

        const Regularity regs[] = {Regularity::continuous, Regularity::smooth,
                                   Regularity::analytic};
        const QueryMode modes[] = {QueryMode::effective, QueryMode::fixed_point_free,
                                   QueryMode::transitive, QueryMode::compact_homogeneous};
        int contradictions = 0;
        for (const AlgebraProfile& p : profiles)
            for (const ManifoldDescriptor& m : manifolds)
                for (QueryMode mode : modes) {
                    VerdictStatus by_reg[3];
                    for (int r = 0; r < 3; ++r) {
                        try {
                            by_reg[r] = analyze(p, m, {regs[r], mode}).status;
                        } catch (const ContradictionError&) {
                            ++contradictions;
                            by_reg[r] = VerdictStatus::unknown;
                        }
                    }
                    for (int r = 0; r + 1 < 3; ++r) {
                        if (by_reg[r] == VerdictStatus::impossible)
                            REQUIRE(by_reg[r + 1] == VerdictStatus::impossible);
                        if (by_reg[r + 1] == VerdictStatus::possible)
                            REQUIRE(by_reg[r] == VerdictStatus::possible);
                    }
                }
        REQUIRE(contradictions == 0);
    }

    line.ok = true;
}

TEST_CASE("criterion 9: AC certificates") {
    CriterionLine line{9, "st and nt carry verified AC certificates, sl(2,R) does not"};

    for (const char* family : {"st", "nt"})
        for (int m = 2; m <= 5; ++m) {
            LieAlgebra L =
                build_text(std::string(family) + "(" + std::to_string(m) + ",R)");
            ACStatus s = ac_status(L);
            REQUIRE(s.status == ACState::ac);
            REQUIRE(s.certificate.has_value());
            // verify_ac_certificate checks the derivation identity exactly and
            // spot-checks the induced automorphisms numerically (residual
            // bound 1e-10 pinned inside the checker).
            ACVerify v = verify_ac_certificate(L, *s.certificate);
            REQUIRE(v.ok);
            REQUIRE(v.failed_check.empty());
        }

    REQUIRE(ac_status(build_text("sl(2,R)")).status == ACState::not_ac);

    line.ok = true;
}

TEST_CASE("criterion 10: serialization identities") {
    CriterionLine line{10, "lie-sc round trips, print/parse identity, report schema"};

    // Save/load identity across the catalog.
    for (const char* text :
         {"st(2,R)", "st(3,R)", "st(4,R)", "st(2,C)", "nt(3,R)", "nt(4,R)", "sl(2,R)",
          "sl(3,R)", "sl(2,C)", "abelian(1)", "abelian(3)", "strn(2)", "strn(3)",
          "st(2,R) x nt(3,R)", "derived(st(4,R))"}) {
        LieAlgebra L = build_text(text);
        std::string once = lie_to_string(L);
        LieAlgebra back = lie_from_string(once);
        REQUIRE(back.dim == L.dim);
        REQUIRE(lie_to_string(back) == once);
    }

    // Print/parse identity on canonical strings and a generated corpus.
    for (const char* text :
         {"st(2,R)", "nt(5,R)", "sl(2,C)", "abelian(17)", "strn(3)", "derived(sl(3,R))",
          "st(2,R) x abelian(1) x nt(3,R)", "derived(st(3,R) x st(3,R)) x abelian(2)"}) {
        AlgebraExpr e = parse_expression(text);
        REQUIRE(print_expression(e) == text);
        REQUIRE(parse_expression(print_expression(e)) == e);
    }
    std::mt19937_64 rng(987654321);
    // Printed products are flat, so generated products keep their right arm
    // atomic; reparsing then reproduces the left-leaning tree exactly.
    std::function<AlgebraExpr(int)> random_tree = [&](int depth) -> AlgebraExpr {
        int pick = static_cast<int>(rng() % (depth > 0 ? 6 : 4));
        int m = 1 + static_cast<int>(rng() % 5);
        switch (pick) {
            case 0: return AlgebraExpr::atom("st", m + 1, rng() % 2 == 0);
            case 1: return AlgebraExpr::atom("nt", m + 1, false);
            case 2: return AlgebraExpr::atom("abelian", m, false);
            case 3: return AlgebraExpr::atom("strn", m, false);
            case 4: return AlgebraExpr::derived(random_tree(depth - 1));
            default: {
                AlgebraExpr left = random_tree(depth - 1);
                AlgebraExpr right = random_tree(depth - 1);
                while (right.node == AlgebraExpr::Node::product) right = right.children[0];
                return AlgebraExpr::product(std::move(left), std::move(right));
            }
        }
    };
    for (int i = 0; i < 100; ++i) {
        AlgebraExpr e = random_tree(3);
        AlgebraExpr back = parse_expression(print_expression(e));
        REQUIRE(back == e);
        REQUIRE(print_expression(back) == print_expression(e));
    }

    // Report schema: exact key sets at every level.
    {
        AlgebraExpr e = parse_expression("sl(2,R)");
        LieAlgebra L = build(e);
        AlgebraProfile p = profile_expression(e);
        ManifoldDescriptor m = manifold_validate(closed_surface(2, true));
        std::vector<VerdictRecord> records;
        for (Regularity reg :
             {Regularity::continuous, Regularity::smooth, Regularity::analytic}) {
            Query q{reg, QueryMode::effective};
            records.push_back({q, analyze(p, m, q)});
        }
        nlohmann::ordered_json j =
            make_report(L, p, &m, records, ClassifyConfig{}, SpectralConfig{}, false);

        require_exact_keys(j, {"report_v", "tool", "algebra", "manifold", "verdicts", "notes"});
        REQUIRE(j["report_v"] == 1);
        require_exact_keys(j["tool"], {"name", "version", "seed", "classify_samples",
                                       "spectral_samples", "precision_bits", "height_bound",
                                       "strict"});
        REQUIRE(j["tool"]["name"] == "lieact");
        REQUIRE(j["tool"]["version"].is_string());
        require_exact_keys(j["algebra"],
                           {"expression", "origin", "dim", "flags", "center_dim",
                            "derived_dims", "derived_in_center", "killing_det_sign", "rank",
                            "ac", "factors"});
        require_exact_keys(j["algebra"]["flags"],
                           {"abelian", "nilpotent", "nilpotency_class", "solvable",
                            "derived_length", "supersoluble", "supersoluble_certainty",
                            "supersoluble_witness", "semisimple", "semisimple_rank",
                            "scalar_free"});
        require_exact_keys(j["algebra"]["rank"],
                           {"r", "r_nonreal", "method", "certainty", "witness"});
        require_exact_keys(j["algebra"]["ac"], {"status", "reason", "spectrum"});
        REQUIRE(j["algebra"]["factors"].is_array());
        for (const auto& f : j["algebra"]["factors"])
            require_exact_keys(f, {"text", "kind", "param", "complex_field", "dim", "rep_dim",
                                   "scalar_free", "ac"});
        require_exact_keys(j["manifold"],
                           {"dim", "compact", "boundary", "orientable", "euler", "genus",
                            "pi1_finite", "parallelizable", "surface_kind"});
        REQUIRE(j["verdicts"].is_array());
        REQUIRE(j["verdicts"].size() == 3);
        for (const auto& v : j["verdicts"]) {
            require_exact_keys(v, {"mode", "regularity", "status", "citations", "trace",
                                   "notes"});
            for (const auto& c : v["citations"])
                require_exact_keys(c, {"theorem", "quote", "tag"});
            for (const auto& t : v["trace"])
                require_exact_keys(t, {"rule", "status", "detail"});
        }
        REQUIRE(j["notes"].is_array());
        for (const auto& n : j["notes"]) REQUIRE(n.is_string());
    }

    line.ok = true;
}
