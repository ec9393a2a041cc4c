#include <doctest.h>

#include <random>

#include "uvb/geompoly.hpp"

using namespace uvb;

namespace {

GeomPoly T() { return GeomPoly::T(); }
GeomPoly U() { return GeomPoly::U(); }
GeomPoly V() { return GeomPoly::V(); }

// random polynomial in T,U,V with up to two unknowns in the coefficients
GeomPoly random_poly(std::mt19937& rng, bool with_unknowns = false) {
    std::uniform_int_distribution<int> exp(0, 3), coef(-4, 4), nterms(1, 5),
        which(0, 3);
    GeomPoly p;
    int m = nterms(rng);
    for (int i = 0; i < m; ++i) {
        CoefPoly c(Int(coef(rng)));
        if (with_unknowns && which(rng) == 0)
            c = c + CoefPoly::variable(which(rng) % 2);
        p += GeomPoly::term(exp(rng), exp(rng), exp(rng), c);
    }
    return p;
}

}  // namespace

TEST_CASE("add: cancellation, identity, symmetric coefficient build") {
    CHECK((T() + U()) + (T() - U()) == GeomPoly::T() * Int(2));
    CHECK(((GeomPoly::U(2) + GeomPoly::V(2)) + U() * V()).to_string() ==
          "U^2+UV+V^2");

    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        GeomPoly p = random_poly(rng);
        CHECK(p + GeomPoly() == p);
    }
}

TEST_CASE("mul: paper products, absorbing and unit elements") {
    GeomPoly lhs = (T() + U()) * (T() - V());
    CHECK(lhs.to_string() == "T^2+(U-V)T-UV");

    GeomPoly cube = (T() + U()) * (T() + U()) * (T() - V());
    CHECK(cube.to_string() == "T^3+(2U-V)T^2+(U^2-2UV)T-U^2V");

    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        GeomPoly p = random_poly(rng);
        CHECK((p * GeomPoly()).is_zero());
        CHECK(p * GeomPoly(Int(1)) == p);
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(23);
    for (int i = 0; i < 1000; ++i) {
        GeomPoly a = random_poly(rng, true), b = random_poly(rng, true),
                 c = random_poly(rng, true);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("canonical form is construction-order independent") {
    std::mt19937 rng(31);
    for (int i = 0; i < 200; ++i) {
        GeomPoly parts[4] = {random_poly(rng, true), random_poly(rng, true),
                             random_poly(rng, true), random_poly(rng, true)};
        GeomPoly fwd = parts[0] + parts[1] + parts[2] + parts[3];
        GeomPoly rev = parts[3] + parts[2] + parts[1] + parts[0];
        CHECK(fwd == rev);
        CHECK(fwd.to_string() == rev.to_string());
    }
}

TEST_CASE("shift_T: binomial expansion and homomorphism laws") {
    CHECK(GeomPoly::T(3).shift_T(1).to_string() == "T^3+3UT^2+3U^2T+U^3");
    CHECK(T().shift_T(2).to_string() == "T+2U");

    std::mt19937 rng(43);
    std::uniform_int_distribution<int> small(-3, 3);
    for (int i = 0; i < 200; ++i) {
        GeomPoly p = random_poly(rng, true), q = random_poly(rng, true);
        CHECK(p.shift_T(0) == p);
        int a = small(rng), b = small(rng);
        CHECK(p.shift_T(a).shift_T(b) == p.shift_T(a + b));
        CHECK((p * q).shift_T(a) == p.shift_T(a) * q.shift_T(a));
    }
}

TEST_CASE("eval_unknowns: total, paper value, absorbing partial") {
    // S_1 of the (2;3,3) ansatz at the zero assignment collapses to T^3
    GeomPoly s1 = GeomPoly::T(3) +
                  GeomPoly::T(2) * ((U() + V()) * CoefPoly::variable(0)) +
                  T() * ((GeomPoly::U(2) + GeomPoly::V(2)) * CoefPoly::variable(1));
    std::vector<std::optional<Int>> zero{Int(0), Int(0)};
    CHECK(s1.eval_unknowns(zero, false) == GeomPoly::T(3));

    GeomPoly line = T() + (U() + V()) * CoefPoly::variable(0);
    std::vector<std::optional<Int>> minus2{Int(-2)};
    CHECK(line.eval_unknowns(minus2, false).to_string() == "T-2U-2V");

    // partial evaluation with an absorbing zero factor
    GeomPoly prod = GeomPoly::term(1, 0, 0, CoefPoly::variable(0) * CoefPoly::variable(1));
    std::vector<std::optional<Int>> partial{Int(0), std::nullopt};
    CHECK(prod.eval_unknowns(partial, true).is_zero());

    std::vector<std::optional<Int>> missing{std::nullopt, Int(1)};
    CHECK_THROWS_AS(prod.eval_unknowns(std::vector<std::optional<Int>>{}, false),
                    MissingAssignment);

    // eval commutes with add and mul
    std::mt19937 rng(57);
    std::uniform_int_distribution<int> val(-3, 3);
    for (int i = 0; i < 200; ++i) {
        GeomPoly p = random_poly(rng, true), q = random_poly(rng, true);
        std::vector<std::optional<Int>> a{Int(val(rng)), Int(val(rng))};
        CHECK((p + q).eval_unknowns(a, false) ==
              p.eval_unknowns(a, false) + q.eval_unknowns(a, false));
        CHECK((p * q).eval_unknowns(a, false) ==
              p.eval_unknowns(a, false) * q.eval_unknowns(a, false));
    }
}

TEST_CASE("coefficient_of reads stored entries and zero elsewhere") {
    GeomPoly sq = (T() + U()) * (T() + U());
    CHECK(sq.coefficient_of(1, 1, 0).constant_term() == 2);
    GeomPoly p = (T() + U()) * (T() - V());
    CHECK(p.coefficient_of(1, 0, 1).constant_term() == -1);
    CHECK(p.coefficient_of(0, 3, 3).is_zero());

    // sum over all stored triples reconstructs the polynomial
    GeomPoly back;
    for (auto& [e, c] : p.terms()) back += GeomPoly::term(e[0], e[1], e[2], c);
    CHECK(back == p);
}

TEST_CASE("degree queries") {
    GeomPoly p = GeomPoly::T(5) + GeomPoly::term(2, 3, 1, CoefPoly(Int(7)));
    CHECK(p.deg_T() == 5);
    CHECK(p.deg_U() == 3);
    CHECK(p.deg_V() == 1);
    CHECK(!p.is_V_free());
    CHECK((GeomPoly::T(2) + U()).is_V_free());
}
