#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hurwitz/candidate.hpp"
#include "hurwitz/orbifold.hpp"
#include "hurwitz/partition.hpp"

using namespace hurwitz;

TEST_CASE("partition stats") {
    PartitionStats st = partition_stats(Partition({5, 2, 1}));
    CHECK(st.sum == 8);
    CHECK(st.length == 3);
    CHECK(st.lcm == 10);
    CHECK(st.defect == 3);

    st = partition_stats(Partition({4, 4}));
    CHECK(st.sum == 8);
    CHECK(st.length == 2);
    CHECK(st.lcm == 4);
    CHECK(st.defect == 0);

    st = partition_stats(Partition({7}));
    CHECK(st.sum == 7);
    CHECK(st.length == 1);
    CHECK(st.lcm == 7);
    CHECK(st.defect == 0);
}

TEST_CASE("lcm divisibility and defect definition") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> parts;
        int rest = 1 + static_cast<int>(rng() % 20);
        while (rest > 0) {
            int e = 1 + static_cast<int>(rng() % static_cast<unsigned>(rest));
            parts.push_back(e);
            rest -= e;
        }
        Partition p(parts);
        long long l = p.lcm();
        int defect = 0;
        for (int e : p.parts()) {
            CHECK(l % e == 0);
            if (e != l) ++defect;
        }
        CHECK(p.defect() == defect);
        CHECK(p.defect() <= p.length());
    }
}

TEST_CASE("parse_candidate accepts the grammar") {
    CandidateCover c = parse_candidate("8: (5,1,1,1)(4,4)(2,2,2,2)");
    CHECK(c.degree == 8);
    CHECK(c.num_branch_points() == 3);
    CHECK(c.base_genus == 0);
    CHECK(c.cover_genus == 0);

    c = parse_candidate("2: (2)(2)");
    CHECK(c.degree == 2);
    CHECK(c.num_branch_points() == 2);
    CHECK(c.cover_genus == 0);

    // whitespace is insignificant
    c = parse_candidate("  8 :(4,4) ( 5 , 1 ,1,1)(2,2,2,2) ");
    CHECK(format_candidate(c) == "8: (5,1,1,1)(4,4)(2,2,2,2)");

    // torus cover of the sphere: derived genus 1
    c = parse_candidate("4: (2,2)(2,2)(2,2)(2,2)");
    CHECK(c.cover_genus == 1);

    // explicit genera
    c = parse_candidate("g=1 -> g=0 4: (2,2)(2,2)(2,2)(2,2)");
    CHECK(c.cover_genus == 1);
    CHECK(c.base_genus == 0);
    c = parse_candidate("g=1 2: (2)(2)");
    CHECK(c.base_genus == 1);
    CHECK(c.cover_genus == 2);
}

TEST_CASE("parse_candidate rejections") {
    // Riemann-Hurwitz gives chi = 4 > 2
    CHECK_THROWS_AS(parse_candidate("4: (2,2)(3,1)"), CandidateError);
    // partition of all ones
    CHECK_THROWS_AS(parse_candidate("3: (1,1,1)(3)"), CandidateError);
    // sum mismatch
    CHECK_THROWS_AS(parse_candidate("5: (2,2)(5)"), CandidateError);
    // odd cover characteristic
    CHECK_THROWS_AS(parse_candidate("3: (2,1)(3)"), CandidateError);
    // cover genus disagrees
    CHECK_THROWS_AS(parse_candidate("g=2 -> 2: (2)(2)"), CandidateError);
    // syntax
    CHECK_THROWS_AS(parse_candidate("8: 5,1,1,1"), ParseError);
    CHECK_THROWS_AS(parse_candidate("(2)(2)"), ParseError);
    CHECK_THROWS_AS(parse_candidate("8: (5,1,1,1)(4,4)(2,2,2,2) junk"), ParseError);
}

TEST_CASE("canonical form orders partitions") {
    CandidateCover c = parse_candidate("8:(4,4)(5,1,1,1)(2,2,2,2)");
    CHECK(format_candidate(c) == "8: (5,1,1,1)(4,4)(2,2,2,2)");
    // ties on the largest entry break by length, shortest first
    c = parse_candidate("8: (4,2,1,1)(4,4)(2,2,2,2)");
    CHECK(format_candidate(c) == "8: (4,4)(4,2,1,1)(2,2,2,2)");

    CHECK(format_candidate(parse_candidate("6: (5,1)(4,1,1)(2,2,2)")) ==
          "6: (5,1)(4,1,1)(2,2,2)");
    CHECK(format_candidate(parse_candidate("2: (2)(2)")) == "2: (2)(2)");
}

TEST_CASE("parse-format round trip on random candidates") {
    std::mt19937_64 rng(123);
    int built = 0;
    while (built < 400) {
        int d = 2 + static_cast<int>(rng() % 29);
        int n = 1 + static_cast<int>(rng() % 4);
        std::vector<Partition> parts;
        for (int i = 0; i < n; ++i) {
            std::vector<int> p;
            int rest = d;
            while (rest > 0) {
                int e = 1 + static_cast<int>(rng() % static_cast<unsigned>(rest));
                p.push_back(e);
                rest -= e;
            }
            parts.emplace_back(std::move(p));
        }
        try {
            CandidateCover c = make_candidate(0, std::nullopt, d, std::move(parts));
            ++built;
            CHECK(parse_candidate(format_candidate(c)) == c);
        } catch (const CandidateError&) {
        }
    }
}

TEST_CASE("orbifold parsing") {
    Orbifold x = parse_orbifold("S(2,3,6)");
    CHECK(x.genus == 0);
    CHECK(x.cone_orders == std::vector<int>{2, 3, 6});

    x = parse_orbifold("T");
    CHECK(x.genus == 1);
    CHECK(x.cone_orders.empty());

    x = parse_orbifold("S");
    CHECK(x.genus == 0);
    CHECK(x.cone_orders.empty());

    x = parse_orbifold("G2(3,3)");
    CHECK(x.genus == 2);
    CHECK(x.cone_orders == std::vector<int>{3, 3});

    CHECK_THROWS_AS(parse_orbifold("S(1,3)"), CandidateError);
    CHECK_THROWS_AS(parse_orbifold("Q(2)"), ParseError);

    CHECK(format_orbifold(parse_orbifold("S(6,2,3)")) == "S(2,3,6)");
    CHECK(format_orbifold(parse_orbifold("T")) == "T");
}
