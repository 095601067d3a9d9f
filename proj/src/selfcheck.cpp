#include "hurwitz/selfcheck.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "hurwitz/decide.hpp"
#include "hurwitz/enumerate.hpp"
#include "hurwitz/euler.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/quadform.hpp"
#include "hurwitz/witness.hpp"

namespace hurwitz {

namespace {

/// Random valid candidate: random degree, random partitions until
/// Riemann-Hurwitz admits a non-negative even cover characteristic.
CandidateCover random_candidate(std::mt19937_64& rng, int dmax) {
    for (;;) {
        int d = 2 + static_cast<int>(rng() % static_cast<unsigned>(dmax - 1));
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
            return make_candidate(0, std::nullopt, d, std::move(parts));
        } catch (const CandidateError&) {
            continue;
        }
    }
}

}  // namespace

bool run_selfcheck(bool quick, std::ostream& out) {
    bool all_ok = true;
    auto suite = [&](const std::string& name, bool ok) {
        out << (ok ? "ok   " : "FAIL ") << name << "\n";
        all_ok = all_ok && ok;
    };
    std::mt19937_64 rng(0);

    // parse/format round trip
    {
        bool ok = true;
        int trials = quick ? 100 : 1000;
        for (int i = 0; i < trials && ok; ++i) {
            CandidateCover c = random_candidate(rng, 30);
            ok = parse_candidate(format_candidate(c)) == c;
        }
        suite("model: parse(format(c)) == c", ok);
    }

    // induced cover multiplicativity
    {
        bool ok = true;
        int trials = quick ? 100 : 1000;
        for (int i = 0; i < trials && ok; ++i) {
            CandidateCover c = random_candidate(rng, 30);
            ok = validate_orbifold_cover(induced_orbifold_cover(c)).ok;
        }
        suite("euler: chi_orb multiplicativity of induced covers", ok);
    }

    // geometry classification vs sign, and the two closed geometry lists
    {
        bool ok = true;
        for (int genus = 0; genus <= 2 && ok; ++genus) {
            std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& cones,
                                                                  int next) {
                if (!ok) return;
                if (genus > 0 || cones.size() != 1) {
                    bool bad_pair = genus == 0 && cones.size() == 2 && cones[0] != cones[1];
                    Orbifold x = make_orbifold(genus, cones);
                    GeometryClass g = geometry_class(x);
                    int sign = orbifold_euler_characteristic(x).sign();
                    if (genus == 0 && (cones.size() == 1 || bad_pair)) {
                        if (g != GeometryClass::Bad) ok = false;
                    } else if ((sign > 0) != (g == GeometryClass::Spherical) ||
                               (sign == 0) != (g == GeometryClass::Euclidean) ||
                               (sign < 0) != (g == GeometryClass::Hyperbolic)) {
                        ok = false;
                    }
                }
                if (cones.size() == 5) return;
                for (int p = next; p <= 12; ++p) {
                    cones.push_back(p);
                    rec(cones, p);
                    cones.pop_back();
                }
            };
            std::vector<int> cones;
            rec(cones, 2);
        }
        suite("euler: geometry matches chi_orb sign (genus<=2, orders<=12)", ok);
    }
    {
        // Euclidean orbifolds are exactly T, S(2,4,4), S(2,3,6), S(3,3,3), S(2,2,2,2)
        bool ok = true;
        std::vector<Orbifold> found;
        int max_order = quick ? 30 : 100;
        for (int genus = 0; genus <= 1; ++genus) {
            std::function<void(std::vector<int>&, int, Rational)> rec =
                [&](std::vector<int>& cones, int next, Rational deficit) {
                    // deficit = chi - sum(1 - 1/p), stop when it can't reach 0
                    if (deficit.sign() < 0 || cones.size() > 4) return;
                    if (deficit.sign() == 0 && !(genus == 0 && cones.size() < 3))
                        found.push_back(make_orbifold(genus, cones));
                    for (int p = next; p <= max_order; ++p) {
                        cones.push_back(p);
                        rec(cones, p, deficit - (Rational(1) - Rational(1, p)));
                        cones.pop_back();
                    }
                };
            std::vector<int> cones;
            rec(cones, 2, Rational(2 - 2 * genus));
        }
        std::vector<Orbifold> expected = {
            make_orbifold(1, {}), make_orbifold(0, {2, 2, 2, 2}), make_orbifold(0, {2, 3, 6}),
            make_orbifold(0, {2, 4, 4}), make_orbifold(0, {3, 3, 3})};
        std::sort(found.begin(), found.end());
        std::sort(expected.begin(), expected.end());
        ok = found == expected;
        suite("euler: Euclidean orbifold list scan", ok);
    }

    // representability: re-evaluation and box-search completeness
    {
        bool ok = true;
        int trials = quick ? 300 : 3000;
        long long cap = quick ? 20000 : 1000000;
        for (int i = 0; i < trials && ok; ++i) {
            long long t = static_cast<long long>(rng() % static_cast<unsigned long long>(cap));
            for (FormId f : {FormId::X2_Y2, FormId::X2_XY_Y2, FormId::X2_3XY_3Y2}) {
                auto xy = represent(f, t);
                if (xy && form_value(f, xy->first, xy->second) != t) ok = false;
                bool brute = false;
                for (long long x = 0; form_value(f, x, 0) <= t; ++x)
                    for (long long y = 0; form_value(f, x, y) <= t; ++y)
                        if (form_value(f, x, y) == t) brute = true;
                if (brute != xy.has_value()) ok = false;
            }
        }
        suite("quadform: represent matches brute-force box search", ok);
    }
    {
        // product of two sums of two squares is one (norm form closure)
        bool ok = true;
        int cap = quick ? 100 : 500;
        std::vector<bool> mark = representable_sieve(FormId::X2_Y2,
                                                     static_cast<long long>(cap) * cap);
        for (int a = 1; a <= cap && ok; ++a)
            for (int b = 1; b <= cap && ok; ++b)
                if (mark[static_cast<size_t>(a)] && mark[static_cast<size_t>(b)] &&
                    !mark[static_cast<size_t>(a) * static_cast<size_t>(b)])
                    ok = false;
        suite("quadform: x2+y2 closed under products", ok);
    }

    // decide: no exceptional candidate of prime degree with chi_orb(target) >= 0
    {
        bool ok = true;
        int dmax = quick ? 13 : 31;
        std::vector<CandidateCover> pool = positive_chi_candidates(dmax);
        for (const auto& c : euclidean_candidates(dmax)) pool.push_back(c);
        auto is_prime = [](int v) {
            if (v < 2) return false;
            for (int p = 2; p * p <= v; ++p)
                if (v % p == 0) return false;
            return true;
        };
        for (const auto& c : pool) {
            if (!is_prime(c.degree)) continue;
            if (decide(c).verdict == Verdict::Exceptional) ok = false;
        }
        suite("decide: no prime-degree exception in the classified range", ok);
    }

    // witness: every realizable Euclidean family instance yields a verified witness
    {
        bool ok = true;
        int kmax = quick ? 4 : 12;
        for (int case_id = 1; case_id <= 7 && ok; ++case_id) {
            for (int fam = 1; fam <= euclidean_family_count(case_id) && ok; ++fam) {
                for (int k = 1; k <= kmax && ok; ++k) {
                    auto parts = euclidean_family_partitions(case_id, fam, k);
                    CandidateCover c =
                        make_candidate(0, std::nullopt, parts[0].sum(), parts);
                    Decision dec = decide_euclidean(c);
                    auto w = construct_witness(c);
                    if ((dec.verdict == Verdict::Realizable) != w.has_value()) ok = false;
                    if (w && !verify_witness(c, *w).ok) ok = false;
                }
            }
        }
        suite("witness: construct+verify on Euclidean families", ok);
    }

    // oracle: Frobenius counting against exhaustive search
    {
        bool ok = true;
        int dmax = quick ? 6 : 8;
        for (int d = 2; d <= dmax && ok; ++d) {
            for (const auto& c : all_candidates_n3(d, true)) {
                SearchBudget budget;
                budget.max_nodes = 100'000'000;
                OracleResult r = exhaustive_decide(c, budget);
                if (r.status == OracleStatus::BudgetExceeded) {
                    ok = false;
                    break;
                }
                bool realizable = r.status == OracleStatus::Realizable;
                if ((count_transitive(c.partitions, c.degree) > 0) != realizable) {
                    ok = false;
                    break;
                }
                if (realizable && !verify_permutation_witness(c, *r.witness)) ok = false;
            }
        }
        suite("oracle: transitive count vs exhaustive search", ok);
    }

    out << (all_ok ? "selfcheck passed\n" : "selfcheck FAILED\n");
    return all_ok;
}

}  // namespace hurwitz
