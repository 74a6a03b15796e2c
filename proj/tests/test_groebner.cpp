#include "gkz/groebner.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace gkz;

namespace {

SparsePoly term(size_t n, const std::string& label, std::vector<int> e, const std::string& c) {
    return SparsePoly::from_monomial(Monomial(std::move(e)), parse_rational(c), label);
}

SparsePoly linear(size_t n, const std::string& label, const QVec& coeffs) {
    SparsePoly p(n, label);
    for (size_t j = 0; j < n; ++j)
        if (coeffs[j] != 0) p.add_term(Monomial::unit(n, j), coeffs[j]);
    return p;
}

// generators of the 11-term ideal whose reduced lex basis is pinned below
std::vector<SparsePoly> pinned_six_variable_ideal() {
    auto lf = [&](QVec c) { return linear(6, "s", c); };
    SparsePoly f14 = lf({1, 0, 0, 1, -1, 0});  // s1+s4-s5
    SparsePoly f13 = lf({1, 0, 1, 0, 0, -1});  // s1+s3-s6
    SparsePoly f23 = lf({0, 1, 1, 0, -1, 0});  // s2+s3-s5
    SparsePoly f24 = lf({0, 1, 0, 1, 0, -1});  // s2+s4-s6
    SparsePoly s1 = lf({1, 0, 0, 0, 0, 0});
    SparsePoly s2 = lf({0, 1, 0, 0, 0, 0});
    SparsePoly s5 = lf({0, 0, 0, 0, 1, 0});
    SparsePoly s6 = lf({0, 0, 0, 0, 0, 1});
    return {f14 * f13, f23 * f24, f23 * f13, f14 * f24, s5,      s6,
            s2 * f14,  s1 * f23,  s1 * s2,   s2 * f13,  s1 * f24};
}

}  // namespace

TEST_CASE("reduced basis of a zero-dimensional two-variable ideal") {
    // generators s1(-2s1+s2), s1(2s1-3s2), (-2s1+s2)(-s1+2s2)
    SparsePoly s1 = SparsePoly::variable(2, "s", 0);
    SparsePoly s2 = SparsePoly::variable(2, "s", 1);
    SparsePoly g1 = s1 * (s2 - s1.scaled(2));
    SparsePoly g2 = s1 * (s1.scaled(2) - s2.scaled(3));
    SparsePoly g3 = (s2 - s1.scaled(2)) * (s2.scaled(2) - s1);
    TermOrder o = TermOrder::grevlex(2);
    std::vector<SparsePoly> gb = reduced_groebner({g1, g2, g3}, o);
    std::vector<SparsePoly> expected = {term(2, "s", {0, 2}, "1"), term(2, "s", {1, 1}, "1"),
                                        term(2, "s", {2, 0}, "1")};
    std::sort(expected.begin(), expected.end(), [&](const SparsePoly& a, const SparsePoly& b) {
        return o.less(a.leading_term(o).first, b.leading_term(o).first);
    });
    REQUIRE(gb == expected);
}

TEST_CASE("duplicate generators collapse") {
    SparsePoly s1 = SparsePoly::variable(2, "s", 0);
    std::vector<SparsePoly> gb = reduced_groebner({s1, s1}, TermOrder::grevlex(2));
    REQUIRE(gb.size() == 1);
    REQUIRE(gb[0] == s1);
}

TEST_CASE("reduced lex basis of the pinned six-variable ideal") {
    TermOrder o = TermOrder::lex(6);
    std::vector<SparsePoly> gb = reduced_groebner(pinned_six_variable_ideal(), o);

    std::vector<SparsePoly> expected = {
        term(6, "s", {1, 1, 0, 0, 0, 0}, "1"),
        term(6, "s", {1, 0, 1, 0, 0, 0}, "1"),
        term(6, "s", {1, 0, 0, 1, 0, 0}, "1"),
        term(6, "s", {0, 1, 1, 0, 0, 0}, "1"),
        term(6, "s", {0, 1, 0, 1, 0, 0}, "1"),
        term(6, "s", {0, 0, 2, 0, 0, 0}, "1"),
        term(6, "s", {0, 0, 0, 2, 0, 0}, "1"),
        term(6, "s", {2, 0, 0, 0, 0, 0}, "1") + term(6, "s", {0, 0, 1, 1, 0, 0}, "1"),
        term(6, "s", {0, 2, 0, 0, 0, 0}, "1") + term(6, "s", {0, 0, 1, 1, 0, 0}, "1"),
        term(6, "s", {0, 0, 0, 0, 1, 0}, "1"),
        term(6, "s", {0, 0, 0, 0, 0, 1}, "1"),
    };
    REQUIRE(gb.size() == expected.size());
    for (const auto& e : expected)
        REQUIRE(std::find(gb.begin(), gb.end(), e) != gb.end());
}

TEST_CASE("normal forms against the pinned basis") {
    TermOrder o = TermOrder::lex(6);
    std::vector<SparsePoly> gb = reduced_groebner(pinned_six_variable_ideal(), o);
    SECTION("standard monomial is untouched") {
        SparsePoly s3s4 = term(6, "s", {0, 0, 1, 1, 0, 0}, "1");
        REQUIRE(normal_form(s3s4, gb, o) == s3s4);
    }
    SECTION("basis members reduce to zero") {
        for (const auto& g : gb) REQUIRE(normal_form(g, gb, o).is_zero());
    }
    SECTION("s1^2 reduces to -s3 s4") {
        SparsePoly s1sq = term(6, "s", {2, 0, 0, 0, 0, 0}, "1");
        REQUIRE(normal_form(s1sq, gb, o) == term(6, "s", {0, 0, 1, 1, 0, 0}, "-1"));
    }
}

TEST_CASE("Groebner properties on random ideals") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> exp(0, 2);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<SparsePoly> gens;
        for (int k = 0; k < 3; ++k) {
            SparsePoly p(3, "s");
            for (int t = 0; t < 3; ++t) {
                std::vector<int> e = {exp(rng), exp(rng), exp(rng)};
                p.add_term(Monomial(e), coef(rng));
            }
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        TermOrder o = TermOrder::grevlex(3);
        std::vector<SparsePoly> gb = reduced_groebner(gens, o);

        // every S-polynomial reduces to zero
        for (size_t i = 0; i < gb.size(); ++i)
            for (size_t j = i + 1; j < gb.size(); ++j)
                REQUIRE(normal_form(detail::s_polynomial(gb[i], gb[j], o), gb, o).is_zero());

        // reducedness: no term of any member divisible by another member's lead
        for (size_t i = 0; i < gb.size(); ++i)
            for (const auto& [m, c] : gb[i].terms())
                for (size_t j = 0; j < gb.size(); ++j)
                    if (j != i) REQUIRE_FALSE(gb[j].leading_term(o).first.divides(m));

        // normal form is idempotent, generators vanish
        for (const auto& g : gens) {
            SparsePoly nf = normal_form(g, gb, o);
            REQUIRE(nf == normal_form(nf, gb, o));
            REQUIRE(nf.is_zero());
        }

        // permuting the generators does not change the reduced basis
        std::vector<SparsePoly> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        REQUIRE(reduced_groebner(shuffled, o) == gb);
    }
}

TEST_CASE("artinian detection and standard monomials") {
    std::vector<Monomial> gens = {Monomial({2, 0}), Monomial({0, 2})};
    REQUIRE(is_artinian(gens, 2));
    std::vector<Monomial> sm = standard_monomials(gens, 2);
    REQUIRE(sm.size() == 4);
    std::vector<Monomial> open = {Monomial({2, 0})};
    REQUIRE_FALSE(is_artinian(open, 2));
    REQUIRE(standard_monomials(open, 2, 2).size() == 5);  // 1, s2, s2^2, s1, s1 s2
}
