#include <doctest.h>

#include "uvb/constraints.hpp"

using namespace uvb;

namespace {

GeomPoly swap_uv(const GeomPoly& p) {
    GeomPoly r;
    for (auto& [e, c] : p.terms()) r += GeomPoly::term(e[0], e[2], e[1], c);
    return r;
}

std::vector<Int> tuple_of(std::initializer_list<int> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("symmetric_basis: full below n, gauge-fixed at and above") {
    auto b2 = symmetric_basis(2, 4);
    REQUIRE(b2.retained.size() == 2);
    CHECK(b2.retained[0] == GeomPoly::U(2) + GeomPoly::V(2));
    CHECK(b2.retained[1] == GeomPoly::U() * GeomPoly::V());

    auto b3 = symmetric_basis(3, 4);
    REQUIRE(b3.retained.size() == 2);
    CHECK(b3.retained[0] == GeomPoly::U(3) + GeomPoly::V(3));
    CHECK(b3.retained[1] ==
          GeomPoly::term(0, 2, 1, CoefPoly(Int(1))) +
              GeomPoly::term(0, 1, 2, CoefPoly(Int(1))));

    // degree 4: R^4 spans the kernel, the U^4+V^4 direction is deleted
    auto b4 = symmetric_basis(4, 4);
    CHECK(b4.full_size == 3);
    REQUIRE(b4.retained.size() == 2);
    REQUIRE(b4.deleted.size() == 1);
    CHECK(b4.deleted[0] == GeomPoly::U(4) + GeomPoly::V(4));

    // higher degrees collapse further; degree 7 dies entirely on F(1,2,5)
    CHECK(symmetric_basis(5, 4).retained.size() == 1);
    CHECK(symmetric_basis(6, 4).retained.size() == 1);
    CHECK(symmetric_basis(7, 4).retained.size() == 0);
}

TEST_CASE("build_system: unknown counts match the ansatz displays") {
    auto s33 = build_system(SplittingType::parse("2;3,3;1,0"), 4);
    CHECK(s33.unknown_count() == 10);
    CHECK(s33.unknown_names() ==
          std::vector<std::string>{"a1", "a2_0", "a2_1", "a3_0", "a3_1", "b1",
                                   "b2_0", "b2_1", "b3_0", "b3_1"});

    auto s123 = build_system(SplittingType::parse("3;1,2,3;2,1,0"), 4);
    CHECK(s123.unknown_count() == 9);

    // quartic factor: two hidden gauge coordinates at degree 4
    auto s114 = build_system(SplittingType::parse("3;1,1,4;2,1,0"), 4);
    CHECK(s114.unknown_count() == 9);
}

TEST_CASE("build_system rejects gap types") {
    CHECK_THROWS_AS(build_system(SplittingType::parse("2;3,3;2,0"), 4),
                    ReducibleType);
}

TEST_CASE("factors are U-V symmetric") {
    for (const char* t : {"2;3,3;1,0", "3;1,2,3;2,1,0", "2;2,4;1,0"}) {
        auto sys = build_system(SplittingType::parse(t), 4);
        for (auto& S : sys.factors()) CHECK(swap_uv(S) == S);
    }
}

TEST_CASE("check_solution on the (2;3,3) table") {
    auto sys = build_system(SplittingType::parse("2;3,3;1,0"), 4);
    CHECK(sys.check_solution(tuple_of({0, 0, 0, 0, 0, 0, 0, 0, 0, 0})));
    CHECK(sys.check_solution(tuple_of({-1, 1, 1, -1, -1, 1, 0, 0, 0, 0})));
    CHECK(sys.check_solution(tuple_of({-1, 0, 0, 0, 0, 1, 1, 1, 1, 1})));
    CHECK(sys.check_solution(tuple_of({-2, 2, 3, 0, -1, 2, 2, 3, 0, 1})));
    CHECK(!sys.check_solution(tuple_of({1, 0, 0, 0, 0, 0, 0, 0, 0, 0})));
    CHECK_THROWS_AS(sys.check_solution(tuple_of({1, 2, 3})), MissingAssignment);
}

TEST_CASE("all-zero assignment solves every system") {
    for (const char* t : {"2;3,3;1,0", "3;1,2,3;2,1,0", "2;2,4;1,0",
                          "4;1,1,1,3;3,2,1,0"}) {
        auto sys = build_system(SplittingType::parse(t), 4);
        CHECK(sys.check_solution(std::vector<Int>(sys.unknown_count(), 0)));
    }
}

TEST_CASE("residual_chern") {
    // (2;3,3) zero tuple: (T+U)^3 T^3 = T^6 + 3UT^5 + 3U^2T^4 + U^3T^3
    auto s33 = build_system(SplittingType::parse("2;3,3;1,0"), 4);
    auto cv = s33.residual_chern(std::vector<Int>(10, 0));
    CHECK(cv.c == std::vector<Int>{1, 3, 3, 1, 0});

    // (3;1,2,3) zero tuple: expand (T+2U)(T+U)^2 T^3 by hand
    auto s123 = build_system(SplittingType::parse("3;1,2,3;2,1,0"), 4);
    auto cv2 = s123.residual_chern(std::vector<Int>(9, 0));
    CHECK(cv2.c == std::vector<Int>{1, 4, 5, 2, 0});

    CHECK_THROWS_AS(s33.residual_chern(tuple_of({1, 0, 0, 0, 0, 0, 0, 0, 0, 0})),
                    InvalidSolution);
}

TEST_CASE("gauge soundness: deleted directions change nothing") {
    // adding R^4-multiples to a factor coefficient leaves the reduced
    // product in the same ideal class
    auto sys = build_system(SplittingType::parse("2;2,4;1,0"), 4);
    GeomPoly shifted = sys.factors()[1] + chow_relation(4) * Int(5);
    GeomPoly prod_a = sys.factors()[0].shift_T(1) * sys.factors()[1];
    GeomPoly prod_b = sys.factors()[0].shift_T(1) * shifted;
    CHECK(chow_equal(prod_a, prod_b, 4));
}

TEST_CASE("equation list is deterministic") {
    auto a = build_system(SplittingType::parse("3;1,2,3;2,1,0"), 4);
    auto b = build_system(SplittingType::parse("3;1,2,3;2,1,0"), 4);
    REQUIRE(a.equations().size() == b.equations().size());
    for (size_t i = 0; i < a.equations().size(); ++i) {
        CHECK(a.equations()[i].source == b.equations()[i].source);
        CHECK(a.equations()[i].poly == b.equations()[i].poly);
    }
    // ordered by T-degree descending, then U,V lexicographic
    for (size_t i = 1; i < a.equations().size(); ++i) {
        auto& p = a.equations()[i - 1].source;
        auto& q = a.equations()[i].source;
        CHECK((p[0] > q[0] ||
               (p[0] == q[0] && std::pair(p[1], p[2]) < std::pair(q[1], q[2]))));
    }
}
