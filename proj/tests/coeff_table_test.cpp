#include <doctest.h>

#include <stdexcept>

#include "sigma/coeff_table.hpp"

using namespace sigma;

TEST_CASE("weight of an index") {
    CHECK(weight({0, 0}) == 0);
    CHECK(weight({1, 1}) == 5);
    CHECK(weight({10, 10}) == 50);
}

TEST_CASE("seed and first coefficients of the expansion") {
    const CoeffTable table = compute_rectangle(2, 2);
    CHECK(table.coefficient({0, 0}) == 1);
    CHECK(table.coefficient({1, 0}) == -1);
    CHECK(table.coefficient({0, 1}) == -3);
    CHECK(table.coefficient({2, 0}) == -9);
    CHECK(table.coefficient({1, 1}) == -18);
}

TEST_CASE("frozen values further out") {
    // Re-derivable by hand from the recursion:
    //   3 a(3,0) = 16 a(1,1) - 55 a(2,0)          = -288 + 495 = 207
    //   3 a(0,2) = 9 a(1,1)                       = -162
    //   3 a(2,1) = 27 a(3,0) + 32 a(0,2) - 78 a(1,1) = 1539
    const CoeffTable table = compute_rectangle(3, 2);
    CHECK(table.coefficient({3, 0}) == 69);
    CHECK(table.coefficient({0, 2}) == -54);
    CHECK(table.coefficient({2, 1}) == 513);
}

TEST_CASE("out-of-quadrant lookups are zero, absent lookups throw") {
    const CoeffTable table = compute_rectangle(2, 2);
    CHECK(table.coefficient({-1, 5}) == 0);
    CHECK(table.coefficient({3, -2}) == 0);
    CHECK_THROWS_AS((void)table.coefficient({100, 100}), NotComputed);

    CoeffTable empty(2, 2);
    CHECK_THROWS_AS((void)empty.coefficient({1, 0}), NotComputed);
    CHECK(!empty.contains({1, 0}));
    CHECK(empty.completed_weight() == -1);
}

TEST_CASE("rectangle request computes the dependency closure") {
    const CoeffTable table = compute_rectangle(1, 1);
    CHECK(table.weight_cap() == 5);
    // (2, 0) lies outside the rectangle but feeds a(1, 1).
    CHECK(table.contains({2, 0}));
    CHECK(table.size() == 5);  // (0,0) (1,0) (0,1) (2,0) (1,1)
    CHECK(table.complete());
    CHECK(table.completed_weight() == 5);
}

TEST_CASE("degenerate rectangle") {
    const CoeffTable table = compute_rectangle(0, 0);
    CHECK(table.size() == 1);
    CHECK(table.coefficient({0, 0}) == 1);
    CHECK(table.complete());
}

TEST_CASE("recursion self-consistency post hoc") {
    const CoeffTable table = compute_rectangle(6, 6);
    long checked = 0;
    table.for_each([&](Index idx, const mpz_class& value) {
        if (idx == Index{0, 0}) return;
        const long i = idx.i;
        const long j = idx.j;
        const mpz_class residue =
            3 * value - 9 * (i + 1) * table.coefficient({i + 1, j - 1}) -
            16 * (j + 1) * table.coefficient({i - 2, j + 1}) +
            (4 * i + 6 * j - 1) * (2 * i + 3 * j - 1) *
                table.coefficient({i - 1, j});
        CHECK(residue == 0);
        ++checked;
    });
    CHECK(checked == static_cast<long>(table.size()) - 1);
}

TEST_CASE("worker count does not change the result") {
    const CoeffTable one = compute_rectangle(8, 5, 1);
    const CoeffTable three = compute_rectangle(8, 5, 3);
    const CoeffTable many = compute_rectangle(8, 5, 16);
    CHECK(one == three);
    CHECK(one == many);
}

TEST_CASE("diagonal enumeration is sorted by i") {
    const CoeffTable table(4, 4);
    const auto d6 = table.diagonal(6);
    REQUIRE(d6.size() == 2);
    CHECK(d6[0] == Index{0, 2});
    CHECK(d6[1] == Index{3, 0});
    CHECK(table.diagonal(1).empty());  // 2i + 3j = 1 has no solutions
}

TEST_CASE("invalid requests are rejected") {
    CHECK_THROWS_AS(compute_rectangle(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(compute_rectangle(0, -2), std::invalid_argument);
    CHECK_THROWS_AS(compute_rectangle(2, 2, 0), std::invalid_argument);
}
