#include <doctest.h>

#include <algorithm>
#include <random>

#include "linkchroma/coloring.hpp"
#include "linkchroma/tables.hpp"
#include "oracles.hpp"

using namespace linkchroma;

static LinkDiagram trefoil() { return build_diagram(parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]")); }
static LinkDiagram hopf() { return build_diagram(parse_pd("PD[X[1,3,2,4],X[3,1,4,2]]")); }
static LinkDiagram fig8() { return build_diagram(parse_pd("PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]")); }
static LinkDiagram kink() { return build_diagram(parse_pd("PD[X[1,2,2,1]]")); }

TEST_CASE("coloring_matrix: trefoil rows are permutations of (1,1,-2)") {
    IntMatrix m = coloring_matrix(trefoil());
    REQUIRE(m.rows() == 3);
    REQUIRE(m.cols() == 3);
    for (int i = 0; i < 3; ++i) {
        std::vector<Int> row = m.row_vector(i);
        std::sort(row.begin(), row.end());
        CHECK(row == std::vector<Int>{-2, 1, 1});
    }
}

TEST_CASE("coloring_matrix: Hopf link accumulates the doubled under arc") {
    IntMatrix m = coloring_matrix(hopf());
    REQUIRE(m.rows() == 2);
    for (int i = 0; i < 2; ++i) {
        std::vector<Int> row = m.row_vector(i);
        std::sort(row.begin(), row.end());
        CHECK(row == std::vector<Int>{-2, 2});
    }
}

TEST_CASE("coloring_matrix: kink collapses to [[0]]") {
    IntMatrix m = coloring_matrix(kink());
    CHECK(m == IntMatrix(1, 1, {0}));
}

TEST_CASE("determinant: hand values") {
    CHECK(determinant(trefoil()) == 3);
    CHECK(determinant(fig8()) == 5);
    CHECK(determinant(hopf()) == 2);
    CHECK(determinant(kink()) == 1);
}

TEST_CASE("row sums are zero and first minors agree for all bundled diagrams") {
    for (const char* file : {"knots8.jsonl", "links.jsonl"}) {
        auto entries = load_table(std::filesystem::path(LINKCHROMA_DATA_DIR) / file);
        for (const auto& e : entries) {
            LinkDiagram d = build_diagram(e.pd);
            IntMatrix m = coloring_matrix(d);
            Int expect = determinant(d);
            for (int i = 0; i < m.rows(); ++i) {
                Int sum = 0;
                for (int j = 0; j < m.cols(); ++j) sum += m.at(i, j);
                CHECK(sum == 0);
                for (int j = 0; j < m.cols(); ++j) CHECK(first_minor_abs(m, i, j) == expect);
            }
        }
    }
}

TEST_CASE("classify: worked examples") {
    SUBCASE("2-trivial mod 6") {
        ColoringClass c = classify({6, {0, 2, 4}});
        CHECK_FALSE(c.is_trivial);
        CHECK(c.p_trivial_primes == std::vector<Int>{2});
        CHECK_FALSE(c.is_effective);
    }
    SUBCASE("constant vector") {
        ColoringClass c = classify({5, {0, 0, 0}});
        CHECK(c.is_trivial);
        CHECK(c.palette_size == 1);
        CHECK_FALSE(c.is_effective);
    }
    SUBCASE("effective trefoil coloring") {
        ColoringClass c = classify({3, {0, 1, 2}});
        CHECK(c.is_effective);
        CHECK(c.palette_size == 3);
    }
}

TEST_CASE("enumerate_colorings: trefoil examples") {
    auto d = trefoil();
    SUBCASE("n=3 nontrivial") {
        auto got = enumerate_colorings(d, 3, {Filter::Nontrivial, 1000, false});
        CHECK(got.size() == 6);
        for (const auto& [c, cls] : got) CHECK(cls.palette_size == 3);
    }
    SUBCASE("n=2 nontrivial is empty") {
        CHECK(enumerate_colorings(d, 2, {Filter::Nontrivial, 1000, false}).empty());
    }
    SUBCASE("filter=all contains the n trivial colorings") {
        auto got = enumerate_colorings(d, 3, {Filter::All, 1000, false});
        int trivial = 0;
        for (const auto& [c, cls] : got) trivial += cls.is_trivial;
        CHECK(trivial == 3);
        CHECK(got.size() == 9);
    }
}

TEST_CASE("enumerate_colorings matches brute force") {
    std::vector<LinkDiagram> diagrams{trefoil(), hopf(), fig8(), kink()};
    for (const auto& d : diagrams)
        for (int n = 2; n <= 5; ++n) {
            std::set<std::vector<Int>> got;
            for (const auto& [c, cls] : enumerate_colorings(d, n, {Filter::All, 1'000'000, false}))
                got.insert(c.values);
            CHECK(got == oracles::brute_colorings(d, n));
        }
}

TEST_CASE("enumeration cap is an explicit signal") {
    CHECK_THROWS_AS(enumerate_colorings(trefoil(), 3, {Filter::All, 5, false}), CapExceededError);
}

TEST_CASE("min_colors_on_diagram: hand values") {
    CHECK(min_colors_on_diagram(trefoil(), 3, Filter::Effective, 1'000'000) == 3);
    CHECK(min_colors_on_diagram(fig8(), 5, Filter::Effective, 1'000'000) == 4);
    CHECK_FALSE(min_colors_on_diagram(trefoil(), 2, Filter::Nontrivial, 1'000'000).has_value());
}

TEST_CASE("theorem_lower_bound values") {
    CHECK(theorem_lower_bound(2) == 2);
    CHECK(theorem_lower_bound(3) == 3);
    CHECK(theorem_lower_bound(4) == 3);
    CHECK(theorem_lower_bound(5) == 4);
    CHECK(theorem_lower_bound(6) == 4);
    CHECK(theorem_lower_bound(9) == 5);
}

TEST_CASE("affine maps preserve classification and palette size") {
    std::mt19937 rng(7);
    auto d = fig8();
    for (const auto& [c, cls] : enumerate_colorings(d, 10, {Filter::All, 1'000'000, false})) {
        for (int trial = 0; trial < 2; ++trial) {
            Int a = std::uniform_int_distribution<int>(1, 9)(rng);
            if (gcd(a, Int(10)) != 1) continue;
            Int b = std::uniform_int_distribution<int>(0, 9)(rng);
            std::vector<Int> mapped;
            for (const Int& v : c.values) mapped.push_back((a * v + b) % 10);
            ColoringClass mc = classify({10, mapped});
            CHECK(mc.is_trivial == cls.is_trivial);
            CHECK(mc.is_effective == cls.is_effective);
            CHECK(mc.palette_size == cls.palette_size);
        }
    }
}

TEST_CASE("canonical enumeration picks exactly one representative per orbit with values[0]=0") {
    auto d = trefoil();
    auto canon = enumerate_colorings(d, 3, {Filter::Effective, 1'000'000, true});
    REQUIRE(canon.size() == 1);
    CHECK(canon[0].first.values[0] == 0);
    CHECK(is_affine_canonical(canon[0].first.values, 3));
}

TEST_CASE("counting identity against the SNF diagonal") {
    for (const auto& d : {trefoil(), fig8(), kink()}) {
        if (d.arc_count > 4) continue;
        for (int n = 2; n <= 8; ++n) {
            SnfResult snf = smith_normal_form(coloring_matrix(d));
            Int count = n;
            // knot diagram: rank k-1, one free column contributes the factor n
            for (const Int& di : snf.diagonal) count *= gcd(di, Int(n));
            CHECK(count == oracles::brute_colorings(d, n).size());
        }
    }
}

TEST_CASE("coprimality criterion on bundled diagrams, n <= 12") {
    for (const char* file : {"knots8.jsonl", "links.jsonl"}) {
        auto entries = load_table(std::filesystem::path(LINKCHROMA_DATA_DIR) / file);
        for (const auto& e : entries) {
            LinkDiagram d = build_diagram(e.pd);
            Int det_val = determinant(d);
            if (det_val == 0) continue;
            for (int n = 2; n <= 12; ++n) {
                bool nontrivial =
                    !enumerate_colorings(d, n, {Filter::Nontrivial, 10'000'000, false}).empty();
                CHECK(nontrivial == (gcd(det_val, Int(n)) > 1));
            }
        }
    }
}
