#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hurwitz/decide.hpp"
#include "hurwitz/enumerate.hpp"
#include "hurwitz/euler.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/quadform.hpp"

using namespace hurwitz;

namespace {

Decision dec(const std::string& text) { return decide(parse_candidate(text)); }

/// The twelve bad-source families instantiated over d <= dmax: the eleven
/// sporadic candidates plus (2...2),(2...2),(h,2k-h).
std::vector<CandidateCover> bad_source_list(int dmax) {
    std::vector<CandidateCover> out;
    auto add = [&](int d, std::vector<std::vector<int>> parts) {
        if (d > dmax) return;
        std::vector<Partition> ps;
        for (auto& v : parts) ps.emplace_back(std::move(v));
        out.push_back(make_candidate(0, std::nullopt, d, std::move(ps)));
    };
    auto rep = [](int v, int cnt, std::vector<int> tail = {}) {
        std::vector<int> p(static_cast<size_t>(cnt), v);
        p.insert(p.end(), tail.begin(), tail.end());
        return p;
    };
    add(9, {rep(2, 4, {1}), rep(3, 3), rep(3, 3)});
    add(9, {rep(2, 4, {1}), rep(3, 3), {4, 4, 1}});
    add(10, {rep(2, 5), {3, 3, 3, 1}, {4, 4, 2}});
    add(16, {rep(2, 8), rep(3, 5, {1}), rep(4, 4)});
    add(16, {rep(2, 8), rep(3, 5, {1}), {5, 5, 5, 1}});
    add(18, {rep(2, 9), rep(3, 6), rep(4, 4, {2})});
    add(21, {rep(2, 10, {1}), rep(3, 7), rep(5, 4, {1})});
    add(25, {rep(2, 12, {1}), rep(3, 8, {1}), rep(5, 5)});
    add(36, {rep(2, 18), rep(3, 12), rep(5, 7, {1})});
    add(40, {rep(2, 20), rep(3, 13, {1}), rep(5, 8)});
    add(45, {rep(2, 22, {1}), rep(3, 15), rep(5, 9)});
    for (int k = 2; 2 * k <= dmax; ++k)
        for (int h = 1; h < k; ++h)
            add(2 * k, {rep(2, k), rep(2, k), {h, 2 * k - h}});
    return out;
}

}  // namespace

TEST_CASE("positive chi dispatch") {
    Decision d = dec("4: (2,2)(2,2)(3,1)");
    CHECK(d.verdict == Verdict::Exceptional);
    CHECK(d.reason == "POS_BAD_OVER_SPHERICAL");

    d = dec("5: (2,2,1)(3,1,1)(5)");
    CHECK(d.verdict == Verdict::Realizable);
    CHECK(d.reason == "POS_REALIZABLE");

    d = dec("g=1 2: (2)(2)");
    CHECK(d.verdict == Verdict::Realizable);
    CHECK(d.reason == "BASE_CHI_NONPOSITIVE");

    // universal cover of the football
    d = dec("5: (5)(5)");
    CHECK(d.verdict == Verdict::Realizable);

    // the first bad-source item
    d = dec("9: (2,2,2,2,1)(3,3,3)(3,3,3)");
    CHECK(d.verdict == Verdict::Exceptional);

    // good source over spherical: realizable
    d = dec("4: (2,2)(3,1)(3,1)");
    CHECK(d.verdict == Verdict::Realizable);
}

TEST_CASE("decide_positive directly") {
    OrbifoldCover oc = induced_orbifold_cover(parse_candidate("9: (2,2,2,2,1)(3,3,3)(3,3,3)"));
    CHECK(decide_positive(oc).verdict == Verdict::Exceptional);

    oc = induced_orbifold_cover(parse_candidate("4: (2,2)(3,1)(3,1)"));
    CHECK(decide_positive(oc).verdict == Verdict::Realizable);

    oc = induced_orbifold_cover(parse_candidate("5: (5)(5)"));
    CHECK(decide_positive(oc).verdict == Verdict::Realizable);

    // precondition violated
    oc = induced_orbifold_cover(parse_candidate("5: (2,2,1)(4,1)(4,1)"));
    CHECK_THROWS_AS(decide_positive(oc), CandidateError);
}

TEST_CASE("euclidean family matching") {
    EuclideanFamily fam = match_euclidean_family(parse_candidate("5: (2,2,1)(4,1)(4,1)"));
    CHECK(fam.case_id == 1);
    CHECK(fam.family_index == 1);
    CHECK(fam.k == 1);

    fam = match_euclidean_family(parse_candidate("9: (3,3,3)(3,3,3)(3,3,3)"));
    CHECK(fam.case_id == 0);
    CHECK(fam.family_index == 3);
    CHECK(fam.k == 3);

    fam = match_euclidean_family(parse_candidate("6: (2,1,1,1,1)(2,2,2)(2,2,2)(2,2,2)"));
    CHECK(fam.case_id == 4);
    CHECK(fam.family_index == 3);
    CHECK(fam.k == 1);

    fam = match_euclidean_family(parse_candidate("7: (2,2,2,1)(3,3,1)(6,1)"));
    CHECK(fam.case_id == 2);
    CHECK(fam.family_index == 1);

    // the k=0 boundary instance of the fourth self-cover family
    fam = match_euclidean_family(parse_candidate("6: (3,3)(3,2,1)(2,2,2)"));
    CHECK(fam.case_id == 2);
    CHECK(fam.family_index == 4);
    CHECK(fam.k == 0);
    CHECK(decide(parse_candidate("6: (3,3)(3,2,1)(2,2,2)")).verdict == Verdict::Exceptional);

    CHECK_THROWS_AS(match_euclidean_family(parse_candidate("4: (2,2)(3,1)(3,1)")),
                    NoFamilyMatch);
}

TEST_CASE("every euclidean candidate matches exactly one family") {
    for (const auto& c : euclidean_candidates(30)) {
        int matches = 0;
        EuclideanFamily matched{};
        OrbifoldCover oc = induced_orbifold_cover(c);
        (void)oc;
        for (int case_id = 0; case_id <= 7; ++case_id) {
            for (const auto& fam : euclidean_families_for_degree(case_id, c.degree)) {
                auto tmpl = euclidean_family_partitions(fam.case_id, fam.family_index, fam.k);
                std::sort(tmpl.begin(), tmpl.end(), canonical_partition_before);
                if (tmpl == c.partitions) {
                    ++matches;
                    matched = fam;
                }
            }
        }
        CHECK(matches == 1);
        EuclideanFamily via_op = match_euclidean_family(c);
        CHECK(via_op.case_id == matched.case_id);
        CHECK(via_op.family_index == matched.family_index);
        CHECK(via_op.k == matched.k);
    }
}

TEST_CASE("euclidean criteria") {
    Decision d = dec("5: (2,2,1)(4,1)(4,1)");
    CHECK(d.verdict == Verdict::Realizable);
    CHECK(d.reason == "EUCL_C1F1_SUM2SQ");
    REQUIRE(d.xy.has_value());
    CHECK(*d.xy == std::make_pair(1LL, 2LL));

    // 21 = 4*5+1 is not a sum of two squares
    auto parts = euclidean_family_partitions(1, 1, 5);
    CandidateCover c21 = make_candidate(0, std::nullopt, 21, parts);
    Decision d21 = decide(c21);
    CHECK(d21.verdict == Verdict::Exceptional);
    CHECK(d21.reason == "EUCL_C1F1_SUM2SQ");

    d = dec("7: (2,2,2,1)(3,3,1)(6,1)");
    CHECK(d.verdict == Verdict::Realizable);
    CHECK(d.reason == "EUCL_C2F1_LOESCHIAN");
    REQUIRE(d.xy.has_value());
    CHECK(*d.xy == std::make_pair(1LL, 2LL));

    // case 0: always realizable
    d = dec("9: (3,3,3)(3,3,3)(3,3,3)");
    CHECK(d.verdict == Verdict::Realizable);
    CHECK(d.reason == "EUCL_C0F3_ALWAYS");

    // case 4 family 3: multiples of 4 only
    d = dec("6: (2,1,1,1,1)(2,2,2)(2,2,2)(2,2,2)");
    CHECK(d.verdict == Verdict::Exceptional);
    CHECK(d.reason == "EUCL_C4F3_MOD4");
    d = dec("8: (2,2,1,1,1,1)(2,2,2,2)(2,2,2,2)(2,2,2,2)");
    CHECK(d.verdict == Verdict::Realizable);

    // never-realizable families
    auto never = euclidean_family_partitions(5, 3, 1);  // d = 10
    Decision dn = decide(make_candidate(0, std::nullopt, 10, never));
    CHECK(dn.verdict == Verdict::Exceptional);
    CHECK(dn.reason == "EUCL_C5F3_NEVER");

    never = euclidean_family_partitions(6, 5, 1);  // d = 10
    dn = decide(make_candidate(0, std::nullopt, 10, never));
    CHECK(dn.verdict == Verdict::Exceptional);
    CHECK(dn.reason == "EUCL_C6F5_NEVER");

    never = euclidean_family_partitions(7, 4, 1);  // d = 15
    dn = decide(make_candidate(0, std::nullopt, 15, never));
    CHECK(dn.verdict == Verdict::Exceptional);
    CHECK(dn.reason == "EUCL_C7F4_NEVER");

    // case 6 family 6: multiples of 8
    auto f66 = euclidean_family_partitions(6, 6, 2);  // d = 16
    CHECK(decide(make_candidate(0, std::nullopt, 16, f66)).verdict == Verdict::Realizable);
    f66 = euclidean_family_partitions(6, 6, 1);  // d = 12
    CHECK(decide(make_candidate(0, std::nullopt, 12, f66)).verdict == Verdict::Exceptional);

    // case 7 family 5: multiples of 12
    auto f75 = euclidean_family_partitions(7, 5, 2);  // d = 24
    CHECK(decide(make_candidate(0, std::nullopt, 24, f75)).verdict == Verdict::Realizable);
    f75 = euclidean_family_partitions(7, 5, 1);  // d = 18
    CHECK(decide(make_candidate(0, std::nullopt, 18, f75)).verdict == Verdict::Exceptional);
}

TEST_CASE("hyperbolic triangular table") {
    Decision d = dec("6: (5,1)(4,1,1)(2,2,2)");
    CHECK(d.verdict == Verdict::Realizable);
    CHECK(d.reason == "HYP_ROW_1");

    d = dec("8: (5,1,1,1)(4,4)(2,2,2,2)");
    CHECK(d.verdict == Verdict::Exceptional);
    CHECK(d.reason == "HYP_ROW_2");

    d = dec("16: (7,7,1,1)(3,3,3,3,3,1)(2,2,2,2,2,2,2,2)");
    CHECK(d.verdict == Verdict::Exceptional);
    CHECK(d.reason == "HYP_ROW_8");

    d = dec("24: (7,7,7,1,1,1)(3,3,3,3,3,3,3,3)(2,2,2,2,2,2,2,2,2,2,2,2)");
    CHECK(d.verdict == Verdict::Realizable);
    CHECK(d.reason == "HYP_ROW_9");
}

TEST_CASE("hyperbolic non-triangular is undecided") {
    // d=6 over S(2,3,7)-like targets does not exist; use a quadrilateral
    // hyperbolic target instead: four branching points, negative chi
    CandidateCover c = parse_candidate("6: (2,2,1,1)(3,3)(3,3)(3,3)");
    OrbifoldCover oc = induced_orbifold_cover(c);
    REQUIRE(orbifold_euler_characteristic(oc.target).sign() < 0);
    Decision d = decide(c);
    CHECK(d.verdict == Verdict::Undecided);
    CHECK(d.reason == "HYPERBOLIC_NONRIGID");
}

TEST_CASE("decide never returns undecided on nonnegative chi") {
    for (const auto& c : positive_chi_candidates(20)) CHECK(decide(c).verdict != Verdict::Undecided);
    for (const auto& c : euclidean_candidates(20)) CHECK(decide(c).verdict != Verdict::Undecided);
}

TEST_CASE("exceptional positive-chi candidates are exactly the bad-source list") {
    int dmax = 30;
    std::set<std::string> expected;
    for (const auto& c : bad_source_list(dmax)) expected.insert(format_candidate(c));

    std::set<std::string> got;
    for (const auto& c : positive_chi_candidates(dmax))
        if (decide(c).verdict == Verdict::Exceptional) got.insert(format_candidate(c));
    CHECK(got == expected);
}

TEST_CASE("oracle agrees with decide on every classified candidate up to degree 13") {
    std::vector<CandidateCover> pool = positive_chi_candidates(13);
    for (const auto& c : euclidean_candidates(13)) pool.push_back(c);
    for (const auto& c : hyperbolic_table())
        if (c.degree <= 13) pool.push_back(c);
    for (const auto& c : pool) {
        Decision dec = decide(c);
        REQUIRE(dec.verdict != Verdict::Undecided);
        SearchBudget budget;
        OracleResult r = exhaustive_decide(c, budget);
        REQUIRE(r.status != OracleStatus::BudgetExceeded);
        CHECK((dec.verdict == Verdict::Realizable) == (r.status == OracleStatus::Realizable));
    }
}

TEST_CASE("exact tuple counts confirm every classified verdict up to degree 22") {
    // both directions: exceptional means literally zero transitive tuples
    std::vector<CandidateCover> pool = positive_chi_candidates(22);
    for (const auto& c : euclidean_candidates(22)) pool.push_back(c);
    for (const auto& c : hyperbolic_table())
        if (c.degree <= 22) pool.push_back(c);
    for (const auto& c : pool) {
        Decision dec = decide(c);
        REQUIRE(dec.verdict != Verdict::Undecided);
        bool has_tuples = count_transitive(c.partitions, c.degree) > 0;
        if (has_tuples != (dec.verdict == Verdict::Realizable)) {
            CAPTURE(format_candidate(c));
            CHECK(has_tuples == (dec.verdict == Verdict::Realizable));
        }
    }
}

TEST_CASE("no exceptional candidate of prime degree below 31") {
    std::set<int> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    for (const auto& c : positive_chi_candidates(31))
        if (primes.count(c.degree)) CHECK(decide(c).verdict != Verdict::Exceptional);
    for (const auto& c : euclidean_candidates(31))
        if (primes.count(c.degree)) CHECK(decide(c).verdict != Verdict::Exceptional);
}
