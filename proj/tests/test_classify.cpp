#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "lieact/classify.hpp"

using namespace lieact;

namespace {

// Basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra make_sl2() {
    LieAlgebra L = make_abelian_constants(3);
    L.labels = {"h", "e", "f"};
    set_bracket(L, 0, 1, {{1, Rational(2)}});
    set_bracket(L, 0, 2, {{2, Rational(-2)}});
    set_bracket(L, 1, 2, {{0, Rational(1)}});
    return L;
}

// Heisenberg, basis (x, y, z): [x,y] = z.  Carries the strictly triangular
// 3x3 realization and its natural grading when asked for.
LieAlgebra make_nt3(bool with_extras = false) {
    LieAlgebra L = make_abelian_constants(3);
    L.labels = {"x", "y", "z"};
    set_bracket(L, 0, 1, {{2, Rational(1)}});
    if (with_extras) {
        auto unit = [](int r, int c) {
            MatrixQ m(3, 3);
            m(r, c) = 1;
            return m;
        };
        L.rep = {unit(0, 1), unit(1, 2), unit(0, 2)};
        L.grading = {Rational(1), Rational(1), Rational(2)};
    }
    return L;
}

// Upper triangular 2x2, basis (d1, d2, x): [d1,x] = x, [d2,x] = -x.
LieAlgebra make_st2(bool with_extras = false) {
    LieAlgebra L = make_abelian_constants(3);
    L.labels = {"d1", "d2", "x"};
    set_bracket(L, 0, 2, {{2, Rational(1)}});
    set_bracket(L, 1, 2, {{2, Rational(-1)}});
    if (with_extras) {
        auto unit = [](int r, int c) {
            MatrixQ m(2, 2);
            m(r, c) = 1;
            return m;
        };
        L.rep = {unit(0, 0), unit(1, 1), unit(0, 1)};
        L.grading = {Rational(0), Rational(0), Rational(1)};
    }
    return L;
}

// Upper triangular 3x3, basis (x1, x2, x3, E12, E23, E13).
LieAlgebra make_st3(bool with_extras = false) {
    LieAlgebra L = make_abelian_constants(6);
    L.labels = {"x1", "x2", "x3", "E12", "E23", "E13"};
    set_bracket(L, 0, 3, {{3, Rational(1)}});
    set_bracket(L, 1, 3, {{3, Rational(-1)}});
    set_bracket(L, 1, 4, {{4, Rational(1)}});
    set_bracket(L, 2, 4, {{4, Rational(-1)}});
    set_bracket(L, 0, 5, {{5, Rational(1)}});
    set_bracket(L, 2, 5, {{5, Rational(-1)}});
    set_bracket(L, 3, 4, {{5, Rational(1)}});
    if (with_extras) {
        auto unit = [](int r, int c) {
            MatrixQ m(3, 3);
            m(r, c) = 1;
            return m;
        };
        L.rep = {unit(0, 0), unit(1, 1), unit(2, 2), unit(0, 1), unit(1, 2), unit(0, 2)};
        L.grading = {Rational(0), Rational(0), Rational(0),
                     Rational(1), Rational(1), Rational(2)};
    }
    return L;
}

// Real form of the complex line [d, x] = (1+i) x, basis (d, id, x, ix).
LieAlgebra make_complex_line() {
    LieAlgebra L = make_abelian_constants(4);
    L.labels = {"d", "id", "x", "ix"};
    set_bracket(L, 0, 2, {{2, Rational(1)}, {3, Rational(1)}});
    set_bracket(L, 0, 3, {{2, Rational(-1)}, {3, Rational(1)}});
    set_bracket(L, 1, 2, {{2, Rational(-1)}, {3, Rational(1)}});
    set_bracket(L, 1, 3, {{2, Rational(-1)}, {3, Rational(-1)}});
    return L;
}

// Basis (d, x, y): [d,x] = y, [d,y] = 2x.  ad(d) has spectrum {0, +-sqrt 2},
// real but irrational, so it is supersoluble without any rational flag.
LieAlgebra make_sqrt2_line() {
    LieAlgebra L = make_abelian_constants(3);
    L.labels = {"d", "x", "y"};
    set_bracket(L, 0, 1, {{2, Rational(1)}});
    set_bracket(L, 0, 2, {{1, Rational(2)}});
    return L;
}

MatrixQ diag(const std::vector<Rational>& d) {
    MatrixQ m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i)
        m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

}  // namespace

TEST_CASE("supersolubility", "[classify]") {
    SECTION("abelian and triangular algebras are certified") {
        for (const LieAlgebra& L :
             {make_abelian_constants(3), make_nt3(), make_st2(), make_st3()}) {
            SupersolubleResult r = is_supersoluble(L);
            REQUIRE(r.value);
            REQUIRE(r.certainty == SupersolubleCertainty::certified);
            REQUIRE(r.witness.empty());
        }
    }

    SECTION("zero algebra") {
        REQUIRE(is_supersoluble(make_abelian_constants(0)).value);
    }

    SECTION("real irrational weights pass per sample only") {
        SupersolubleResult r = is_supersoluble(make_sqrt2_line());
        REQUIRE(r.value);
        REQUIRE(r.certainty == SupersolubleCertainty::exact_per_sample);
    }

    SECTION("sl2 is refuted by e - f") {
        SupersolubleResult r = is_supersoluble(make_sl2());
        REQUIRE_FALSE(r.value);
        REQUIRE(r.certainty == SupersolubleCertainty::certified);
        REQUIRE(r.witness == std::vector<Rational>{Rational(0), Rational(1), Rational(-1)});
        // The witness spectrum is {0, +-2i}: charpoly t^3 + 4t with one
        // distinct real root out of three.
        PolyQ p = charpoly(ad_matrix(make_sl2(), r.witness));
        REQUIRE(p == PolyQ{Rational(0), Rational(4), Rational(0), Rational(1)});
        REQUIRE(count_distinct_real_roots(p) == 1);
    }

    SECTION("realified complex weights are refuted") {
        SupersolubleResult r = is_supersoluble(make_complex_line());
        REQUIRE_FALSE(r.value);
        REQUIRE_FALSE(r.witness.empty());
        REQUIRE_FALSE(detail::all_roots_real(charpoly(ad_matrix(make_complex_line(), r.witness))));
    }

    SECTION("a non-solvable summand is found inside a product") {
        LieAlgebra L = direct_sum(make_st2(), make_sl2());
        SupersolubleResult r = is_supersoluble(L);
        REQUIRE_FALSE(r.value);
        REQUIRE(r.certainty == SupersolubleCertainty::certified);
        REQUIRE_FALSE(r.witness.empty());
    }
}

TEST_CASE("scalar-free representations", "[classify]") {
    SECTION("triangular with diagonal contains the identity") {
        REQUIRE(scalar_free_rep(make_st2(true)) == TriState::no);
        REQUIRE(scalar_free_rep(make_st3(true)) == TriState::no);
    }
    SECTION("strictly triangular misses the scalars") {
        REQUIRE(scalar_free_rep(make_nt3(true)) == TriState::yes);
    }
    SECTION("no realization stored") {
        REQUIRE(scalar_free_rep(make_nt3(false)) == TriState::unknown);
    }
}

TEST_CASE("certificate verification", "[classify][ac]") {
    SECTION("identity on an abelian algebra") {
        LieAlgebra L = make_abelian_constants(2);
        REQUIRE(static_cast<bool>(verify_ac_certificate(L, MatrixQ::identity(2))));
    }

    SECTION("heisenberg grading derivation") {
        REQUIRE(static_cast<bool>(
            verify_ac_certificate(make_nt3(), diag({Rational(1), Rational(1), Rational(2)}))));
    }

    SECTION("wrong weights break the derivation identity") {
        ACVerify v =
            verify_ac_certificate(make_nt3(), diag({Rational(1), Rational(1), Rational(1)}));
        REQUIRE_FALSE(v.ok);
        REQUIRE(v.failed_check == "derivation identity");
    }

    SECTION("negative spectrum is rejected") {
        ACVerify v = verify_ac_certificate(
            make_nt3(), diag({Rational(-1), Rational(-1), Rational(-2)}));
        REQUIRE_FALSE(v.ok);
        REQUIRE(v.failed_check == "negative eigenvalue");
    }

    SECTION("zero block must be a genuine eigenspace") {
        LieAlgebra L = make_abelian_constants(2);
        MatrixQ d(2, 2);
        d(0, 1) = 1;  // nilpotent, spectrum {0,0}, but ker d != ker d^2
        ACVerify v = verify_ac_certificate(L, d);
        REQUIRE_FALSE(v.ok);
        REQUIRE(v.failed_check == "kernel not semisimple");
    }

    SECTION("zero block must be abelian") {
        ACVerify v = verify_ac_certificate(make_nt3(), MatrixQ(3, 3));
        REQUIRE_FALSE(v.ok);
        REQUIRE(v.failed_check == "kernel not abelian");
    }

    SECTION("nonreal spectrum is rejected") {
        LieAlgebra L = make_abelian_constants(2);
        MatrixQ d(2, 2);
        d(0, 1) = -1;
        d(1, 0) = 1;
        ACVerify v = verify_ac_certificate(L, d);
        REQUIRE_FALSE(v.ok);
        REQUIRE(v.failed_check == "spectrum not rational");
    }

    SECTION("shape mismatch") {
        ACVerify v = verify_ac_certificate(make_nt3(), MatrixQ::identity(2));
        REQUIRE_FALSE(v.ok);
        REQUIRE(v.failed_check == "certificate shape");
    }

    SECTION("triangular grading with zero weights passes via the kernel rule") {
        REQUIRE(static_cast<bool>(
            verify_ac_certificate(make_st2(), diag({Rational(0), Rational(0), Rational(1)}))));
    }
}

TEST_CASE("contractibility status", "[classify][ac]") {
    SECTION("zero algebra") {
        ACStatus st = ac_status(make_abelian_constants(0));
        REQUIRE(st.status == ACState::ac);
        REQUIRE(st.certificate.has_value());
    }

    SECTION("abelian: identity from the diagonal search") {
        ACStatus st = ac_status(make_abelian_constants(2));
        REQUIRE(st.status == ACState::ac);
        REQUIRE(st.certificate == MatrixQ::identity(2));
        REQUIRE(st.spectrum == std::vector<std::pair<Rational, int>>{{Rational(1), 2}});
    }

    SECTION("heisenberg with stored grading uses it") {
        ACStatus st = ac_status(make_nt3(true));
        REQUIRE(st.status == ACState::ac);
        REQUIRE(st.certificate == diag({Rational(1), Rational(1), Rational(2)}));
        REQUIRE(st.reason.find("grading") != std::string::npos);
    }

    SECTION("heisenberg without grading finds a positive diagonal") {
        ACStatus st = ac_status(make_nt3(false));
        REQUIRE(st.status == ACState::ac);
        REQUIRE(st.certificate.has_value());
        REQUIRE(static_cast<bool>(verify_ac_certificate(make_nt3(false), *st.certificate)));
        for (const auto& [root, mult] : st.spectrum) REQUIRE(root > 0);
    }

    SECTION("triangular with stored grading is certified through the kernel rule") {
        ACStatus st = ac_status(make_st3(true));
        REQUIRE(st.status == ACState::ac);
        REQUIRE(st.certificate ==
                diag({Rational(0), Rational(0), Rational(0), Rational(1), Rational(1),
                      Rational(2)}));
    }

    SECTION("triangular without grading still lands a certificate") {
        // No stored grading, and no strictly positive diagonal derivation
        // exists (the diagonal subalgebra forces zero weights), so the
        // search has to fall through to the sampled semisimple parts.
        ACStatus st = ac_status(make_st2(false));
        REQUIRE(st.status == ACState::ac);
        REQUIRE(st.certificate.has_value());
        REQUIRE(static_cast<bool>(verify_ac_certificate(make_st2(false), *st.certificate)));
    }

    SECTION("sl2 is refused for non-solvability") {
        ACStatus st = ac_status(make_sl2());
        REQUIRE(st.status == ACState::not_ac);
        REQUIRE(st.reason.find("not solvable") != std::string::npos);
        REQUIRE_FALSE(st.certificate.has_value());
    }

    SECTION("products of certified algebras stay certified") {
        ACStatus st = ac_status(direct_sum(make_nt3(true), make_st2(true)));
        REQUIRE(st.status == ACState::ac);
    }

    SECTION("produced certificates satisfy the real-rootedness property") {
        for (const LieAlgebra& L : {make_nt3(true), make_st3(true), make_abelian_constants(3)}) {
            ACStatus st = ac_status(L);
            REQUIRE(st.status == ACState::ac);
            PolyQ p = charpoly(*st.certificate);
            PolyQ sf = squarefree_part(p);
            REQUIRE(count_distinct_real_roots(p) == poly_degree(sf));
            for (const auto& [root, mult] : st.spectrum) REQUIRE(root >= 0);
        }
    }
}

TEST_CASE("unipotence probe", "[classify][ac]") {
    // Strictly upper triangular sample space: every combination is
    // nilpotent, so the probe must report unipotence.
    auto unit = [](int r, int c) {
        MatrixQ m(3, 3);
        m(r, c) = 1;
        return m;
    };
    ClassifyConfig cfg;
    REQUIRE(detail::derivations_sampled_nilpotent({unit(0, 1), unit(1, 2), unit(0, 2)}, 3, cfg));
    // Adding a diagonal direction makes generic combinations non-nilpotent.
    REQUIRE_FALSE(detail::derivations_sampled_nilpotent(
        {unit(0, 1), unit(1, 2), MatrixQ::identity(3)}, 3, cfg));
    // A non-nilpotent direction is caught even when it vanishes from the
    // first sampled combination.
    REQUIRE_FALSE(detail::derivations_sampled_nilpotent({unit(0, 0)}, 3, cfg));
}

TEST_CASE("diagonal derivation search", "[classify][ac]") {
    SECTION("heisenberg solves to the grading weights") {
        auto d = detail::positive_diagonal_derivation(make_nt3());
        REQUIRE(d.has_value());
        REQUIRE(is_derivation(make_nt3(), diag(*d)));
        for (const Rational& w : *d) REQUIRE(w >= 1);
    }
    SECTION("diagonal blocks force zero weights: infeasible") {
        REQUIRE_FALSE(detail::positive_diagonal_derivation(make_st2()).has_value());
        REQUIRE_FALSE(detail::positive_diagonal_derivation(make_st3()).has_value());
    }
    SECTION("no constraints at all") {
        auto d = detail::positive_diagonal_derivation(make_abelian_constants(4));
        REQUIRE(d.has_value());
        REQUIRE(*d == std::vector<Rational>(4, Rational(1)));
    }
}

TEST_CASE("classification flags", "[classify]") {
    SECTION("triangular 3x3") {
        ClassificationFlags f = classify(make_st3(true));
        REQUIRE_FALSE(f.abelian);
        REQUIRE_FALSE(f.nilpotent);
        REQUIRE(f.solvable);
        REQUIRE(f.derived_length == 3);
        REQUIRE(f.supersoluble);
        REQUIRE(f.supersoluble_certainty == SupersolubleCertainty::certified);
        REQUIRE_FALSE(f.semisimple);
        REQUIRE(f.scalar_free == TriState::no);
    }

    SECTION("heisenberg times a line") {
        LieAlgebra L = direct_sum(make_nt3(), make_abelian_constants(1));
        ClassificationFlags f = classify(L);
        REQUIRE(f.nilpotent);
        REQUIRE(f.nilpotency_class == 2);
        REQUIRE(f.derived_length == 2);
        REQUIRE(center(L).dim() == 2);
    }

    SECTION("sl2") {
        ClassificationFlags f = classify(make_sl2());
        REQUIRE_FALSE(f.solvable);
        REQUIRE_FALSE(f.supersoluble);
        REQUIRE(f.semisimple);
        REQUIRE(f.semisimple_rank == 1);
        REQUIRE_FALSE(f.supersoluble_witness.empty());
    }

    SECTION("zero algebra") {
        ClassificationFlags f = classify(make_abelian_constants(0));
        REQUIRE(f.abelian);
        REQUIRE(f.nilpotent);
        REQUIRE(f.nilpotency_class == 0);
        REQUIRE(f.solvable);
        REQUIRE(f.derived_length == 0);
        REQUIRE(f.supersoluble);
        REQUIRE(f.semisimple);
        REQUIRE(f.semisimple_rank == 0);
    }

    SECTION("implications hold on randomized direct sums") {
        std::vector<LieAlgebra> pool = {make_nt3(),         make_st2(), make_st3(),
                                        make_abelian_constants(2), make_sl2(),
                                        make_sqrt2_line(),  make_complex_line()};
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 10; ++trial) {
            LieAlgebra L = pool[rng() % pool.size()];
            int extra = 1 + static_cast<int>(rng() % 2);
            for (int k = 0; k < extra; ++k) L = direct_sum(L, pool[rng() % pool.size()]);
            ClassificationFlags f = classify(L);
            if (f.abelian) REQUIRE(f.nilpotent);
            if (f.nilpotent) REQUIRE(f.solvable);
            if (f.supersoluble) REQUIRE(f.solvable);
            if (f.semisimple && L.dim > 0) REQUIRE_FALSE(f.solvable);
            ACStatus st = ac_status(L);
            if (st.status == ACState::ac) {
                REQUIRE(f.solvable);
                REQUIRE(st.certificate.has_value());
            }
        }
    }
}
