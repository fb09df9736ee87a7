#include <doctest.h>

#include <random>

#include "linkchroma/exactlin.hpp"
#include "oracles.hpp"

using namespace linkchroma;

TEST_CASE("det: basics") {
    CHECK(det(IntMatrix::identity(3)) == 1);
    IntMatrix m(2, 2, {2, 4, 6, 8});
    CHECK(det(m) == -8);
    CHECK(det(IntMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("det agrees with cofactor expansion on random matrices") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> size(0, 5);
    for (int iter = 0; iter < 400; ++iter) {
        int n = size(rng);
        IntMatrix m = oracles::random_matrix(rng, n, n, -3, 3);
        CHECK(det(m) == oracles::naive_det(m));
    }
}

TEST_CASE("rank: basics") {
    CHECK(rank(IntMatrix(2, 3)) == 0);
    CHECK(rank(IntMatrix::identity(4)) == 4);
    IntMatrix hopf(2, 2, {-2, 2, 2, -2});
    CHECK(rank(hopf) == 1);
}

TEST_CASE("first_minor_abs: basics") {
    IntMatrix hopf(2, 2, {-2, 2, 2, -2});
    CHECK(first_minor_abs(hopf, 1, 1) == 2);
    IntMatrix kink(1, 1, {0});
    CHECK(first_minor_abs(kink, 0, 0) == 1);
    IntMatrix trefoil(3, 3, {1, 1, -2, -2, 1, 1, 1, -2, 1});
    CHECK(first_minor_abs(trefoil, 2, 2) == 3);
    CHECK_THROWS_AS(first_minor_abs(hopf, 2, 0), std::out_of_range);
}

TEST_CASE("smith_normal_form: basics") {
    SUBCASE("identity") {
        SnfResult r = smith_normal_form(IntMatrix::identity(3));
        CHECK(r.diagonal == std::vector<Int>{1, 1, 1});
    }
    SUBCASE("hand example") {
        SnfResult r = smith_normal_form(IntMatrix(2, 2, {2, 4, 6, 8}));
        CHECK(r.diagonal == std::vector<Int>{2, 4});
    }
    SUBCASE("zero matrix") {
        SnfResult r = smith_normal_form(IntMatrix(2, 3));
        CHECK(r.diagonal.empty());
    }
}

TEST_CASE("smith_normal_form: randomized property suite") {
    std::mt19937 rng(911);
    std::uniform_int_distribution<int> size(0, 5);
    for (int iter = 0; iter < 1000; ++iter) {
        int r = size(rng), c = size(rng);
        IntMatrix m = oracles::random_matrix(rng, r, c, -9, 9);
        SnfResult snf = smith_normal_form(m);

        for (std::size_t i = 0; i + 1 < snf.diagonal.size(); ++i) {
            CHECK(snf.diagonal[i] > 0);
            CHECK(snf.diagonal[i + 1] % snf.diagonal[i] == 0);
        }
        CHECK(abs(det(snf.left)) == 1);
        CHECK(abs(det(snf.right)) == 1);
        CHECK(snf.left.times(m).times(snf.right) == snf.diagonal_matrix());
        if (r == c) {
            Int prod = 1;
            for (const Int& d : snf.diagonal) prod *= d;
            if (static_cast<int>(snf.diagonal.size()) == r) CHECK(prod == abs(det(m)));
            else CHECK(det(m) == 0);
        }
    }
}

TEST_CASE("solve_mod_n: counts on the trefoil matrix") {
    IntMatrix trefoil(3, 3, {1, 1, -2, -2, 1, 1, 1, -2, 1});
    CHECK(solve_mod_n(trefoil, 3).solution_count() == 9);
    CHECK(solve_mod_n(trefoil, 2).solution_count() == 2);
}

TEST_CASE("solve_mod_n: zero vector always a solution, solutions stream in order") {
    IntMatrix m(2, 3, {1, -4, 2, 0, 5, -1});
    ModKernel k = solve_mod_n(m, 6);
    auto it = k.iterate();
    std::vector<Int> x;
    REQUIRE(it.next(x));
    CHECK(x == std::vector<Int>(3, 0));
    Int count = 1;
    while (it.next(x)) ++count;
    CHECK(count == k.solution_count());
}

TEST_CASE("solve_mod_n equals the brute-force kernel") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> rows(1, 4), cols(1, 4), mod(2, 8);
    for (int iter = 0; iter < 250; ++iter) {
        IntMatrix m = oracles::random_matrix(rng, rows(rng), cols(rng), -2, 2);
        Int n = mod(rng);
        ModKernel k = solve_mod_n(m, n);
        std::set<std::vector<Int>> got;
        auto it = k.iterate();
        std::vector<Int> x;
        while (it.next(x)) got.insert(x);
        CHECK(got.size() == k.solution_count());
        CHECK(got == oracles::brute_kernel(m, n));
    }
}

TEST_CASE("carry_transform: worked examples") {
    SUBCASE("add a column multiple") {
        IntMatrix m(1, 2, {-2, 2});
        // col 2 += col 1; solution entry 1 absorbs the change
        auto [m2, x2] = carry_transform(m, {1, 2}, 2, {TransformKind::AddColMultiple, 1, 0, 1});
        CHECK(m2 == IntMatrix(1, 2, {-2, 0}));
        CHECK(oracles::mod(x2[0], 2) == 1);
        CHECK(oracles::mod(x2[1], 2) == 0);
        for (const Int& v : m2.apply(x2)) CHECK(v % 2 == 0);
    }
    SUBCASE("swap columns") {
        IntMatrix m(1, 2, {1, -1});
        auto [m2, x2] = carry_transform(m, {1, 1}, 3, {TransformKind::SwapCols, 0, 1, 0});
        CHECK(m2 == IntMatrix(1, 2, {-1, 1}));
        CHECK(x2 == std::vector<Int>{1, 1});
    }
    SUBCASE("negate a column") {
        IntMatrix m(1, 1, {2});
        auto [m2, x2] = carry_transform(m, {1}, 2, {TransformKind::NegateCol, 0, 0, 0});
        CHECK(m2 == IntMatrix(1, 1, {-2}));
        CHECK(oracles::mod(x2[0], 2) == 1);
    }
    SUBCASE("drop a zero column requires a zero solution entry") {
        IntMatrix m(1, 2, {3, 0});
        auto [m2, x2] = carry_transform(m, {0, 0}, 3, {TransformKind::DropZeroCol, 1, 0, 0});
        CHECK(m2 == IntMatrix(1, 1, {3}));
        CHECK(x2 == std::vector<Int>{0});
        CHECK_THROWS_AS(carry_transform(m, {0, 1}, 3, {TransformKind::DropZeroCol, 1, 0, 0}),
                        std::invalid_argument);
    }
    SUBCASE("non-solution is rejected") {
        IntMatrix m(1, 2, {1, 1});
        CHECK_THROWS_AS(carry_transform(m, {1, 1}, 3, {TransformKind::SwapCols, 0, 1, 0}),
                        std::invalid_argument);
    }
}

TEST_CASE("carry_transform: randomized solution-carriage suite") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> mod(2, 12), dim(2, 5), rcount(1, 4), lam(-3, 3), pick(0, 99);
    int effective_checked = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        Int n = mod(rng);
        int k = dim(rng);
        // random solution vector, then rows exactly orthogonal to it:
        // x[b]*e_a - x[a]*e_b annihilates x over the integers.
        std::vector<Int> x(k);
        std::uniform_int_distribution<int> val(0, static_cast<int>(n.get_si()) - 1);
        for (auto& v : x) v = val(rng);
        int rows = rcount(rng);
        IntMatrix m(rows, k);
        for (int r = 0; r < rows; ++r) {
            int a = pick(rng) % k, b = pick(rng) % k;
            if (a == b) b = (b + 1) % k;
            m.at(r, a) += x[b];
            m.at(r, b) -= x[a];
        }
        bool was_effective = classify({n, x}).is_effective;

        Transform t;
        switch (pick(rng) % 6) {
            case 0: t = {TransformKind::AddRowMultiple, pick(rng) % rows, pick(rng) % rows, lam(rng)}; break;
            case 1: t = {TransformKind::SwapRows, pick(rng) % rows, pick(rng) % rows, 0}; break;
            case 2: t = {TransformKind::NegateRow, pick(rng) % rows, 0, 0}; break;
            case 3: t = {TransformKind::SwapCols, pick(rng) % k, pick(rng) % k, 0}; break;
            case 4: t = {TransformKind::DropRow, pick(rng) % rows, 0, 0}; break;
            default: {
                // add a multiple of a column into one whose solution entry is
                // 0 mod n; the contragradient update x[j] -= lambda*x[i] then
                // leaves every residue unchanged
                int i = -1;
                for (int c = 0; c < k; ++c)
                    if (x[c] % n == 0) i = c;
                if (i < 0) {
                    t = {TransformKind::SwapCols, 0, k - 1, 0};
                } else {
                    int j = pick(rng) % k;
                    if (j == i) j = (j + 1) % k;
                    t = {TransformKind::AddColMultiple, i, j, lam(rng)};
                }
                break;
            }
        }
        if (t.kind == TransformKind::AddRowMultiple && t.i == t.j) t.j = (t.j + 1) % rows;
        if (t.kind == TransformKind::AddRowMultiple && t.i == t.j) continue;

        CarriedSystem out = carry_transform(m, x, n, t);
        for (const Int& v : out.matrix.apply(out.solution)) CHECK(v % n == 0);
        if (was_effective) {
            // every transform drawn above preserves the residue multiset or
            // permutes it, so effectiveness must survive
            CHECK(classify({n, out.solution}).is_effective);
            ++effective_checked;
        }
    }
    CHECK(effective_checked > 100);
}
