#include "gkz/poly.hpp"
#include "gkz/series.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace gkz;

namespace {

SparsePoly term(size_t n, const std::string& label, std::vector<int> e, const std::string& c) {
    return SparsePoly::from_monomial(Monomial(std::move(e)), parse_rational(c), label);
}

SparsePoly random_poly(std::mt19937_64& rng, size_t nvars, const std::string& label, int maxdeg,
                       int nterms) {
    std::uniform_int_distribution<int> exp(0, maxdeg);
    std::uniform_int_distribution<int> coef(-4, 4);
    SparsePoly p(nvars, label);
    for (int t = 0; t < nterms; ++t) {
        std::vector<int> e(nvars, 0);
        int budget = maxdeg;
        for (auto& x : e) {
            x = std::uniform_int_distribution<int>(0, budget)(rng);
            budget -= x;
        }
        p.add_term(Monomial(e), coef(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    SparsePoly s1 = SparsePoly::variable(2, "s", 0);
    SparsePoly s2 = SparsePoly::variable(2, "s", 1);
    SparsePoly p = (s1 + s2) * (s1 - s2);
    SparsePoly expected = term(2, "s", {2, 0}, "1") + term(2, "s", {0, 2}, "-1");
    REQUIRE(p == expected);
    REQUIRE((p - p).is_zero());
    REQUIRE(p.total_degree() == 2);
    REQUIRE(p.is_homogeneous());
}

TEST_CASE("rings with different ambient variables do not mix") {
    SparsePoly a(2, "s"), b(3, "s"), c(2, "x");
    REQUIRE_THROWS_AS(a + b, Error);
    REQUIRE_THROWS_AS(a * c, Error);
}

TEST_CASE("substitution by linear forms") {
    // theta_j -> (Bs)_j for the five-column example basis
    std::vector<QVec> bs = {
        {1, 0}, {0, 1}, {1, 0}, {0, 1}, {-2, -2},
    };
    SECTION("theta_1 theta_3 maps to s_1^2") {
        SparsePoly t13 = term(5, "theta", {1, 0, 1, 0, 0}, "1");
        REQUIRE(substitute_linear_forms(t13, bs, 2, "s") == term(2, "s", {2, 0}, "1"));
    }
    SECTION("identity matrix substitutes to the identity map") {
        std::vector<QVec> id = {{1, 0}, {0, 1}};
        std::mt19937_64 rng(5);
        for (int t = 0; t < 20; ++t) {
            SparsePoly p = random_poly(rng, 2, "s", 3, 4);
            REQUIRE(substitute_linear_forms(p, id, 2, "s") == p);
        }
    }
    SECTION("ds_k -> (xB)_k realizes the dual substitution") {
        std::vector<QVec> xb = {
            {1, 0, 1, 0, -2},  // x g1
            {0, 1, 0, 1, -2},  // x g2
        };
        SparsePoly q = term(2, "ds", {1, 1}, "1");
        SparsePoly img = substitute_linear_forms(q, xb, 5, "x");
        SparsePoly xg1 = term(5, "x", {1, 0, 0, 0, 0}, "1") + term(5, "x", {0, 0, 1, 0, 0}, "1") +
                         term(5, "x", {0, 0, 0, 0, 1}, "-2");
        SparsePoly xg2 = term(5, "x", {0, 1, 0, 0, 0}, "1") + term(5, "x", {0, 0, 0, 1, 0}, "1") +
                         term(5, "x", {0, 0, 0, 0, 1}, "-2");
        REQUIRE(img == xg1 * xg2);
    }
    SECTION("substitution is a ring homomorphism") {
        std::mt19937_64 rng(17);
        std::vector<QVec> forms = {{1, 2, 0}, {0, 1, -1}};
        for (int t = 0; t < 30; ++t) {
            SparsePoly f = random_poly(rng, 2, "s", 2, 3);
            SparsePoly g = random_poly(rng, 2, "s", 2, 3);
            SparsePoly lhs = substitute_linear_forms(f * g, forms, 3, "x");
            SparsePoly rhs =
                substitute_linear_forms(f, forms, 3, "x") * substitute_linear_forms(g, forms, 3, "x");
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("differential operator action") {
    SECTION("del^2 on s^2 gives 2") {
        SparsePoly op = term(1, "s", {2}, "1");
        SparsePoly f = term(1, "s", {2}, "1");
        REQUIRE(apply_diffop(op, f) == SparsePoly::constant(1, "s", 2));
    }
    SECTION("mixed operator annihilates s1^2 + s3 s4") {
        SparsePoly op = term(4, "s", {0, 0, 1, 1}, "1") + term(4, "s", {2, 0, 0, 0}, "-1/2") +
                        term(4, "s", {0, 2, 0, 0}, "-1/2");
        SparsePoly f = term(4, "s", {2, 0, 0, 0}, "1") + term(4, "s", {0, 0, 1, 1}, "1");
        REQUIRE(apply_diffop(op, f).is_zero());
    }
    SECTION("del_1 on s1 s2^3") {
        SparsePoly op = term(2, "s", {1, 0}, "1");
        SparsePoly f = term(2, "s", {1, 3}, "1");
        REQUIRE(apply_diffop(op, f) == term(2, "s", {0, 3}, "1"));
    }
    SECTION("monomial rule against a combinatorial oracle") {
        std::mt19937_64 rng(23);
        std::uniform_int_distribution<int> exp(0, 3);
        for (int t = 0; t < 200; ++t) {
            std::vector<int> mu(3), nu(3);
            for (auto& x : mu) x = exp(rng);
            for (auto& x : nu) x = exp(rng);
            SparsePoly op = term(3, "s", mu, "1");
            SparsePoly f = term(3, "s", nu, "1");
            SparsePoly got = apply_diffop(op, f);
            // oracle: [nu]_mu s^(nu-mu), zero unless mu <= nu
            bool le = true;
            Rational c = 1;
            std::vector<int> diff(3);
            for (int j = 0; j < 3; ++j) {
                if (mu[j] > nu[j]) le = false;
                diff[j] = nu[j] - mu[j];
                for (int k = 0; k < mu[j]; ++k) c *= nu[j] - k;
            }
            if (!le) REQUIRE(got.is_zero());
            else REQUIRE(got == SparsePoly::from_monomial(Monomial(diff), c, "s"));
        }
    }
    SECTION("bilinearity") {
        std::mt19937_64 rng(29);
        for (int t = 0; t < 50; ++t) {
            SparsePoly u = random_poly(rng, 2, "s", 2, 3);
            SparsePoly v = random_poly(rng, 2, "s", 2, 3);
            SparsePoly f = random_poly(rng, 2, "s", 3, 4);
            REQUIRE(apply_diffop(u + v, f) == apply_diffop(u, f) + apply_diffop(v, f));
            REQUIRE(apply_diffop(u, f + v) == apply_diffop(u, f) + apply_diffop(u, v));
        }
    }
}

TEST_CASE("pairing at zero extracts factorial-weighted coefficients") {
    SparsePoly q = term(2, "s", {1, 1}, "1") + term(2, "s", {2, 0}, "1/2");
    SparsePoly h = term(2, "s", {1, 1}, "3") + term(2, "s", {2, 0}, "5") + term(2, "s", {0, 1}, "7");
    // 1*1!1!*3 + 1/2*2!*5 = 3 + 5
    REQUIRE(pair_at_zero(q, h) == Rational(8));
}

TEST_CASE("truncated series inversion") {
    SECTION("geometric expansion of 1 + s") {
        TruncatedSeries f(term(1, "s", {0}, "1") + term(1, "s", {1}, "1"), 2);
        TruncatedSeries inv = series_invert(f);
        SparsePoly expected =
            term(1, "s", {0}, "1") + term(1, "s", {1}, "-1") + term(1, "s", {2}, "1");
        REQUIRE(inv.p == expected);
    }
    SECTION("constants invert to reciprocals") {
        TruncatedSeries f(SparsePoly::constant(2, "s", 2), 3);
        REQUIRE(series_invert(f).p == SparsePoly::constant(2, "s", parse_rational("1/2")));
    }
    SECTION("two-variable inverse at cap 1") {
        SparsePoly p = term(2, "s", {0, 0}, "1") + term(2, "s", {1, 0}, "-2") +
                       term(2, "s", {0, 1}, "-2");
        TruncatedSeries f(p, 1);
        TruncatedSeries inv = series_invert(f);
        SparsePoly expected =
            term(2, "s", {0, 0}, "1") + term(2, "s", {1, 0}, "2") + term(2, "s", {0, 1}, "2");
        REQUIRE(inv.p == expected);
        REQUIRE((f * inv).p == SparsePoly::constant(2, "s", 1));
    }
    SECTION("product with the inverse is 1 up to the cap") {
        std::mt19937_64 rng(31);
        for (int t = 0; t < 30; ++t) {
            SparsePoly p = random_poly(rng, 2, "s", 3, 4);
            p.add_term(Monomial(2), 1 - p.constant_term());  // force unit
            TruncatedSeries f(p, 4);
            REQUIRE((f * series_invert(f)).p == SparsePoly::constant(2, "s", 1));
        }
    }
    SECTION("zero constant term is not a unit") {
        TruncatedSeries f(term(2, "s", {1, 0}, "1"), 3);
        REQUIRE_THROWS_AS(series_invert(f), MathError);
    }
}
