#include <catch2/catch_amalgamated.hpp>

#include "lieact/relations.hpp"
#include "lieact/roots.hpp"

using namespace lieact;

namespace {

GammaGenerator approx(double re, double im, long rad_exp = -250) {
    GammaGenerator g;
    g.value = CFloat(BigFloat(re), BigFloat(im));
    g.radius = pow2(rad_exp);
    return g;
}

// Certified generator from a root of the given polynomial, selected as the
// one nearest (re, im).
GammaGenerator from_root(const PolyQ& p, double re, double im) {
    RootConfig rc;
    rc.precision_bits = 512;
    auto roots = complex_roots(p, rc);
    const ApproxRoot* best = nullptr;
    BigFloat bd;
    for (const auto& r : roots) {
        BigFloat d = (r.value - CFloat(BigFloat(re), BigFloat(im))).abs();
        if (!best || d < bd) { best = &r; bd = d; }
    }
    REQUIRE(best != nullptr);
    GammaGenerator g;
    g.value = best->value;
    g.radius = best->radius;
    g.exact = best->exact;
    return g;
}

}  // namespace

TEST_CASE("exact rational generators") {
    SECTION("1, 2, 3") {
        std::vector<GammaGenerator> gens{GammaGenerator::of(Rational(1)),
                                         GammaGenerator::of(Rational(2)),
                                         GammaGenerator::of(Rational(3))};
        auto res = q_linear_rank(gens);
        REQUIRE(res.rank == 1);
        REQUIRE(res.certainty == Certainty::exact);
        REQUIRE(res.relations.size() == 2);
        REQUIRE(res.relations[0] == std::vector<BigInt>{2, -1, 0});
        REQUIRE(res.relations[1] == std::vector<BigInt>{3, 0, -1});
    }

    SECTION("fractions") {
        std::vector<GammaGenerator> gens{GammaGenerator::of(Rational(1, 2)),
                                         GammaGenerator::of(Rational(1, 3))};
        auto res = q_linear_rank(gens);
        REQUIRE(res.rank == 1);
        REQUIRE(res.relations.size() == 1);
        REQUIRE(res.relations[0] == std::vector<BigInt>{2, -3});
    }

    SECTION("zeros contribute unit relations") {
        std::vector<GammaGenerator> gens{GammaGenerator::of(Rational(0)),
                                         GammaGenerator::of(Rational(5))};
        auto res = q_linear_rank(gens);
        REQUIRE(res.rank == 1);
        REQUIRE(res.relations.size() == 1);
        REQUIRE(res.relations[0] == std::vector<BigInt>{1, 0});
        REQUIRE(res.certainty == Certainty::exact);
    }

    SECTION("all zeros") {
        std::vector<GammaGenerator> gens{GammaGenerator::of(Rational(0)),
                                         GammaGenerator::of(Rational(0))};
        auto res = q_linear_rank(gens);
        REQUIRE(res.rank == 0);
        REQUIRE(res.relations.size() == 2);
    }

    SECTION("empty input") {
        auto res = q_linear_rank({});
        REQUIRE(res.rank == 0);
        REQUIRE(res.relations.empty());
    }

    SECTION("relation count plus rank is generator count") {
        std::vector<GammaGenerator> gens;
        for (long v : {6, 10, 15, 0, 7}) gens.push_back(GammaGenerator::of(Rational(v)));
        auto res = q_linear_rank(gens);
        REQUIRE(res.rank + static_cast<int>(res.relations.size()) == 5);
        REQUIRE(res.rank == 1);
        // every reported relation really vanishes
        for (const auto& rel : res.relations) {
            Rational s = 0;
            for (int i = 0; i < 5; ++i) s += Rational(rel[i]) * *gens[i].exact;
            REQUIRE(s == 0);
        }
    }
}

TEST_CASE("heuristic generators through LLL") {
    PrecisionScope scope(400);

    SECTION("sqrt2 and sqrt8") {
        auto g1 = from_root(poly_make({-2, 0, 1}), 1.41, 0);
        auto g2 = from_root(poly_make({-8, 0, 1}), 2.83, 0);
        auto res = q_linear_rank({g1, g2});
        REQUIRE(res.rank == 1);
        REQUIRE(res.certainty == Certainty::heuristic);
        REQUIRE(res.relations.size() == 1);
        REQUIRE(res.relations[0] == std::vector<BigInt>{2, -1});
    }

    SECTION("sqrt2 and sqrt3 are independent") {
        auto g1 = from_root(poly_make({-2, 0, 1}), 1.41, 0);
        auto g2 = from_root(poly_make({-3, 0, 1}), 1.73, 0);
        auto res = q_linear_rank({g1, g2});
        REQUIRE(res.rank == 2);
        REQUIRE(res.relations.empty());
    }

    SECTION("conjugate pair") {
        auto g1 = from_root(poly_make({2, 0, 1}), 0, 1.41);
        auto g2 = from_root(poly_make({2, 0, 1}), 0, -1.41);
        auto res = q_linear_rank({g1, g2});
        REQUIRE(res.rank == 1);
        REQUIRE(res.relations.size() == 1);
        REQUIRE(res.relations[0] == std::vector<BigInt>{1, 1});
    }

    SECTION("purely imaginary multiples") {
        auto res = q_linear_rank({approx(0, 2), approx(0, 3)});
        REQUIRE(res.rank == 1);
        REQUIRE(res.relations.size() == 1);
        REQUIRE(res.relations[0] == std::vector<BigInt>{3, -2});
    }

    SECTION("Pisot powers") {
        // theta = real root of t^4 - t - 1; {1, theta, theta^4} has the
        // relation x2 = x0 + x1, while {1, theta, theta^2, theta^3} is free.
        RootConfig rc;
        rc.precision_bits = 512;
        auto roots = complex_roots(poly_make({-1, -1, 0, 0, 1}), rc);
        const ApproxRoot* theta = nullptr;
        for (const auto& r : roots)
            if (r.is_real && r.value.re > 1) theta = &r;
        REQUIRE(theta != nullptr);
        CFloat t1 = theta->value;
        CFloat t2 = t1 * t1, t3 = t2 * t1, t4 = t3 * t1;
        BigFloat rad = theta->radius * 40;  // crude power amplification bound

        GammaGenerator one = GammaGenerator::of(Rational(1));
        GammaGenerator gt{t1, theta->radius, std::nullopt};
        GammaGenerator gt2{t2, rad, std::nullopt};
        GammaGenerator gt3{t3, rad, std::nullopt};
        GammaGenerator gt4{t4, rad, std::nullopt};

        auto free4 = q_linear_rank({one, gt, gt2, gt3});
        REQUIRE(free4.rank == 4);
        REQUIRE(free4.relations.empty());

        auto rel3 = q_linear_rank({one, gt, gt4});
        REQUIRE(rel3.rank == 2);
        REQUIRE(rel3.relations.size() == 1);
        REQUIRE(rel3.relations[0] == std::vector<BigInt>{1, 1, -1});
    }

    SECTION("zero-straddling disk is treated as zero, heuristically") {
        GammaGenerator z;
        z.value = CFloat(pow2(-300), BigFloat(0));
        z.radius = pow2(-260);
        auto res = q_linear_rank({z, GammaGenerator::of(Rational(3))});
        REQUIRE(res.rank == 1);
        REQUIRE(res.relations.size() == 1);
        REQUIRE(res.relations[0] == std::vector<BigInt>{1, 0});
        REQUIRE(res.certainty == Certainty::heuristic);
    }
}

TEST_CASE("q_linear_rank guards") {
    SECTION("precision too low for height bound") {
        RelationConfig cfg;
        cfg.precision_bits = 64;
        REQUIRE_THROWS_AS(q_linear_rank({GammaGenerator::of(Rational(1))}, cfg),
                          PrecisionError);
    }

    SECTION("overlapping approximate disks") {
        auto a = approx(1.5, 0, -100);
        auto b = approx(1.5, 0, -100);
        REQUIRE_THROWS_AS(q_linear_rank({a, b}), std::invalid_argument);
    }

    SECTION("oversized radii") {
        auto a = approx(1.5, 0, -60);
        auto b = approx(2.5, 0, -60);
        REQUIRE_THROWS_AS(q_linear_rank({a, b}), PrecisionError);
    }
}
