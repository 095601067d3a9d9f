// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion carries its runtime bound.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "hurwitz/decide.hpp"
#include "hurwitz/enumerate.hpp"
#include "hurwitz/euler.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/quadform.hpp"
#include "hurwitz/witness.hpp"

using namespace hurwitz;

namespace {

int failures = 0;

void criterion(int index, const std::string& name, double limit_seconds,
               const std::function<bool(std::string&)>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs <= limit_seconds;
    bool pass = ok && in_time;
    if (!pass) ++failures;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << index << ": " << name << " ("
              << secs << "s, limit " << limit_seconds << "s)";
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    if (ok && !in_time) std::cout << " -- over time budget";
    std::cout << std::endl;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

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

/// Expected verdict per Euclidean family, stated independently of decide's
/// internal criterion table.
Verdict expected_euclidean_verdict(int case_id, int fam, int d) {
    Constraint none{}, par{true, false, false}, nbe{false, true, false},
        mod3{false, false, true}, nbe3{false, true, true};
    auto rep = [&](FormId f, long long scale, long long off, Constraint con) {
        long long v = d - off;
        if (v < 0 || v % scale != 0) return Verdict::Exceptional;
        return represent(f, v / scale, con) ? Verdict::Realizable : Verdict::Exceptional;
    };
    switch (case_id * 10 + fam) {
        case 2: case 3: case 4: case 5:
        case 41: case 42:
        case 61: case 62: case 63: case 64:
        case 71: case 72: case 73:
            return Verdict::Realizable;
        case 53: case 65: case 74:
            return Verdict::Exceptional;
        case 43: return d % 4 == 0 ? Verdict::Realizable : Verdict::Exceptional;
        case 66: return d % 8 == 0 ? Verdict::Realizable : Verdict::Exceptional;
        case 75: return d % 12 == 0 ? Verdict::Realizable : Verdict::Exceptional;
        case 11: return rep(FormId::X2_Y2, 1, 0, par);
        case 12: return rep(FormId::X2_Y2, 2, 0, par);
        case 13: return rep(FormId::X2_Y2, 4, 0, none);
        case 21: return rep(FormId::X2_XY_Y2, 1, 0, nbe3);
        case 22: return rep(FormId::X2_3XY_3Y2, 3, 0, nbe);
        case 23: return rep(FormId::X2_XY_Y2, 4, 0, mod3);  // corrected criterion
        case 24: return rep(FormId::X2_3XY_3Y2, 12, 0, none);
        case 31: return rep(FormId::X2_XY_Y2, 1, 0, mod3);
        case 32: return rep(FormId::X2_3XY_3Y2, 3, 0, none);
        case 51: return rep(FormId::X2_3XY_3Y2, 6, 0, none);
        case 52: return rep(FormId::X2_XY_Y2, 2, 0, mod3);
        case 54: return rep(FormId::X2_3XY_3Y2, 6, 0, none);
    }
    return Verdict::Undecided;
}

/// Direct tuple enumeration over S_d (independent of the character path).
std::pair<long long, long long> brute_force_counts(const std::vector<std::vector<int>>& types,
                                                   int d) {
    std::vector<std::vector<int>> all;
    {
        std::vector<int> p(static_cast<size_t>(d));
        std::iota(p.begin(), p.end(), 0);
        do {
            all.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    auto type_of = [](const std::vector<int>& perm) {
        std::vector<bool> seen(perm.size(), false);
        std::vector<int> type;
        for (size_t x = 0; x < perm.size(); ++x) {
            if (seen[x]) continue;
            int len = 0;
            size_t y = x;
            while (!seen[y]) {
                seen[y] = true;
                y = static_cast<size_t>(perm[y]);
                ++len;
            }
            type.push_back(len);
        }
        std::sort(type.rbegin(), type.rend());
        return type;
    };
    std::vector<std::vector<const std::vector<int>*>> pool(types.size());
    for (size_t i = 0; i < types.size(); ++i)
        for (const auto& p : all)
            if (type_of(p) == types[i]) pool[i].push_back(&p);

    long long count_all = 0, count_trans = 0;
    std::vector<const std::vector<int>*> chosen(types.size(), nullptr);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i + 1 == types.size()) {
            std::vector<int> prod(static_cast<size_t>(d));
            std::iota(prod.begin(), prod.end(), 0);
            for (size_t j = i; j-- > 0;) {
                std::vector<int> next(static_cast<size_t>(d));
                for (int x = 0; x < d; ++x)
                    next[static_cast<size_t>(x)] =
                        (*chosen[j])[static_cast<size_t>(prod[static_cast<size_t>(x)])];
                prod = next;
            }
            std::vector<int> last(static_cast<size_t>(d));
            for (int x = 0; x < d; ++x) last[static_cast<size_t>(prod[static_cast<size_t>(x)])] = x;
            if (type_of(last) != types[i]) return;
            ++count_all;
            // transitivity over all factors
            std::vector<int> root(static_cast<size_t>(d));
            std::iota(root.begin(), root.end(), 0);
            std::function<int(int)> find = [&](int x) {
                while (root[static_cast<size_t>(x)] != x) x = root[static_cast<size_t>(x)];
                return x;
            };
            auto join = [&](const std::vector<int>& p) {
                for (int x = 0; x < d; ++x) {
                    int a = find(x), b = find(p[static_cast<size_t>(x)]);
                    if (a != b) root[static_cast<size_t>(a)] = b;
                }
            };
            for (size_t j = 0; j < i; ++j) join(*chosen[j]);
            join(last);
            bool trans = true;
            for (int x = 1; x < d; ++x)
                if (find(x) != find(0)) trans = false;
            if (trans) ++count_trans;
            return;
        }
        for (const auto* p : pool[i]) {
            chosen[i] = p;
            rec(i + 1);
        }
    };
    rec(0);
    return {count_all, count_trans};
}

}  // namespace

int main(int argc, char** argv) {
    std::string golden_dir = argc > 1 ? argv[1] : "tests/golden";

    criterion(1, "table reproduction byte-matches the golden files", 1.0, [&](std::string& why) {
        std::string t1 = read_file(golden_dir + "/table1.txt");
        std::string t2 = read_file(golden_dir + "/table2.txt");
        if (t1.empty() || t2.empty()) {
            why = "golden files missing under " + golden_dir;
            return false;
        }
        if (render_table1() != t1) {
            why = "table 1 mismatch";
            return false;
        }
        if (render_table2() != t2) {
            why = "table 2 mismatch";
            return false;
        }
        return true;
    });

    criterion(2, "hyperbolic census: nine candidates, rows 2 and 8 exceptional", 5.0,
              [&](std::string& why) {
                  std::vector<CandidateCover> census = hyperbolic_triangular_census();
                  if (census.size() != 9) {
                      why = "census size " + std::to_string(census.size());
                      return false;
                  }
                  std::vector<int> degrees;
                  for (const auto& c : census) degrees.push_back(c.degree);
                  if (degrees != std::vector<int>{6, 8, 8, 9, 10, 12, 12, 16, 24}) {
                      why = "degree multiset mismatch";
                      return false;
                  }
                  for (size_t i = 0; i < census.size(); ++i) {
                      Decision dec = decide(census[i]);
                      bool exceptional = i + 1 == 2 || i + 1 == 8;
                      if ((dec.verdict == Verdict::Exceptional) != exceptional) {
                          why = "row " + std::to_string(i + 1) + " verdict wrong";
                          return false;
                      }
                      if (dec.verdict == Verdict::Undecided) return false;
                  }
                  return true;
              });

    criterion(3, "oracle confirms the census verdicts", 120.0, [&](std::string& why) {
        std::vector<CandidateCover> census = hyperbolic_triangular_census();
        // find_witness on the seven realizable rows, 1e7 nodes, seed 0
        for (size_t i = 0; i < census.size(); ++i) {
            if (i + 1 == 2 || i + 1 == 8) continue;
            SearchBudget budget;
            budget.max_nodes = 10'000'000;
            budget.seed = 0;
            budget.mode = SearchMode::Randomized;
            OracleResult r = find_witness(census[i], budget);
            if (r.status != OracleStatus::Realizable ||
                !verify_permutation_witness(census[i], *r.witness)) {
                why = "row " + std::to_string(i + 1) + " witness search failed";
                return false;
            }
        }
        // exhaustive refutation of row 2 (d = 8)
        auto t0 = std::chrono::steady_clock::now();
        SearchBudget budget;
        OracleResult r = exhaustive_decide(census[1], budget);
        double refute_secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (r.status != OracleStatus::Exceptional) {
            why = "row 2 not refuted";
            return false;
        }
        if (refute_secs > 10.0) {
            why = "row 2 refutation took " + std::to_string(refute_secs) + "s";
            return false;
        }
        // character counting: row 8 empty, realizable rows of degree >= 16 positive
        if (count_transitive(census[7].partitions, census[7].degree) != 0) {
            why = "row 8 transitive count nonzero";
            return false;
        }
        if (count_transitive(census[8].partitions, census[8].degree) <= 0) {
            why = "row 9 transitive count not positive";
            return false;
        }
        return true;
    });

    criterion(4, "positive-chi classification at degree <= 30, oracle-checked <= 10", 300.0,
              [&](std::string& why) {
                  std::set<std::string> expected;
                  for (const auto& c : bad_source_list(30)) expected.insert(format_candidate(c));
                  std::vector<CandidateCover> pool = positive_chi_candidates(30);
                  std::set<std::string> got;
                  for (const auto& c : pool)
                      if (decide(c).verdict == Verdict::Exceptional)
                          got.insert(format_candidate(c));
                  if (got != expected) {
                      why = "exceptional subset differs from the bad-source list";
                      return false;
                  }
                  for (const auto& c : pool) {
                      if (c.degree > 10) continue;
                      SearchBudget budget;
                      OracleResult r = exhaustive_decide(c, budget);
                      if (r.status == OracleStatus::BudgetExceeded) {
                          why = "oracle budget exceeded on " + format_candidate(c);
                          return false;
                      }
                      bool realizable = decide(c).verdict == Verdict::Realizable;
                      if (realizable != (r.status == OracleStatus::Realizable)) {
                          why = "oracle disagrees on " + format_candidate(c);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(5, "euclidean families k <= 12: criteria, witnesses, oracle <= 13", 600.0,
              [&](std::string& why) {
                  for (int case_id = 0; case_id <= 7; ++case_id) {
                      for (int fam = 1; fam <= euclidean_family_count(case_id); ++fam) {
                          if (case_id == 0 && fam == 1) continue;  // torus self-cover
                          for (long long k = 1; k <= 12; ++k) {
                              auto parts = euclidean_family_partitions(case_id, fam, k);
                              int d = parts[0].sum();
                              CandidateCover c = make_candidate(0, std::nullopt, d, parts);
                              Decision dec = decide(c);
                              Verdict want = expected_euclidean_verdict(case_id, fam, d);
                              if (dec.verdict != want) {
                                  why = "verdict mismatch on " + format_candidate(c);
                                  return false;
                              }
                              auto w = construct_witness(c);
                              if (w.has_value() != (want == Verdict::Realizable)) {
                                  why = "witness existence mismatch on " + format_candidate(c);
                                  return false;
                              }
                              if (w && !verify_witness(c, *w).ok) {
                                  why = "witness verification failed on " + format_candidate(c);
                                  return false;
                              }
                              if (d <= 13) {
                                  SearchBudget budget;
                                  OracleResult r = exhaustive_decide(c, budget);
                                  if (r.status == OracleStatus::BudgetExceeded ||
                                      (r.status == OracleStatus::Realizable) !=
                                          (want == Verdict::Realizable)) {
                                      why = "oracle disagrees on " + format_candidate(c);
                                      return false;
                                  }
                              }
                          }
                      }
                  }
                  return true;
              });

    criterion(6, "headline sweeps to degree 61", 10.0, [&](std::string& why) {
        std::set<int> expect_realizable = {5, 9, 13, 17, 25};
        std::set<int> expect_exceptional = {21, 33, 57};
        for (int k = 1; 4 * k + 1 <= 61; ++k) {
            int d = 4 * k + 1;
            auto parts = euclidean_family_partitions(1, 1, k);
            CandidateCover c = make_candidate(0, std::nullopt, d, parts);
            bool realizable = decide(c).verdict == Verdict::Realizable;
            if (realizable != represent(FormId::X2_Y2, d).has_value()) {
                why = "sum-of-squares sweep fails at d=" + std::to_string(d);
                return false;
            }
            if (expect_realizable.count(d) && !realizable) return false;
            if (expect_exceptional.count(d) && realizable) return false;
        }
        for (int k = 1; 6 * k + 1 <= 61; ++k) {
            int d = 6 * k + 1;
            auto parts = euclidean_family_partitions(2, 1, k);
            CandidateCover c = make_candidate(0, std::nullopt, d, parts);
            bool realizable = decide(c).verdict == Verdict::Realizable;
            if (realizable != represent(FormId::X2_XY_Y2, d).has_value()) {
                why = "hexagonal sweep fails at d=" + std::to_string(d);
                return false;
            }
        }
        for (int k = 1; 3 * k + 1 <= 61; ++k) {
            int d = 3 * k + 1;
            auto parts = euclidean_family_partitions(3, 1, k);
            CandidateCover c = make_candidate(0, std::nullopt, d, parts);
            bool realizable = decide(c).verdict == Verdict::Realizable;
            if (realizable != represent(FormId::X2_XY_Y2, d).has_value()) {
                why = "triangular sweep fails at d=" + std::to_string(d);
                return false;
            }
        }
        return true;
    });

    criterion(7, "congruence identities to 10^4", 5.0, [&](std::string& why) {
        Constraint par{true, false, false}, nbe3{false, true, true}, mod3{false, false, true};
        if (!congruence_equivalence(FormId::X2_Y2, par, 1, 4, 10000).empty()) {
            why = "x2+y2 identity fails";
            return false;
        }
        if (!congruence_equivalence(FormId::X2_XY_Y2, nbe3, 1, 6, 10000).empty()) {
            why = "x2+xy+y2 mod-6 identity fails";
            return false;
        }
        if (!congruence_equivalence(FormId::X2_XY_Y2, mod3, 1, 3, 10000).empty()) {
            why = "x2+xy+y2 mod-3 identity fails";
            return false;
        }
        return true;
    });

    criterion(8, "prime support empty to 10^5; prime degrees <= 11 all realizable", 600.0,
              [&](std::string& why) {
                  if (!prime_support(FormId::X2_Y2, 1, 4, 100000).empty() ||
                      !prime_support(FormId::X2_XY_Y2, 1, 6, 100000).empty() ||
                      !prime_support(FormId::X2_XY_Y2, 1, 3, 100000).empty()) {
                      why = "prime support not empty";
                      return false;
                  }
                  for (int d : {2, 3, 5, 7, 11}) {
                      for (const auto& c : all_candidates_n3(d, true)) {
                          SearchBudget budget;
                          budget.mode = SearchMode::Randomized;
                          OracleResult r = find_witness(c, budget);
                          if (r.status != OracleStatus::Realizable) {
                              why = "no witness for prime-degree " + format_candidate(c);
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(9, "representable densities strictly decrease over 10^2..10^6", 60.0,
              [&](std::string& why) {
                  for (FormId f : {FormId::X2_Y2, FormId::X2_XY_Y2}) {
                      Rational prev(2);  // above any density
                      long long limit = 100;
                      for (int j = 2; j <= 6; ++j, limit *= 10) {
                          Rational dj = density(f, limit);
                          if (!(dj < prev)) {
                              why = "density not decreasing at 10^" + std::to_string(j);
                              return false;
                          }
                          prev = dj;
                      }
                  }
                  return true;
              });

    criterion(10, "oracle self-consistency at small degree", 600.0, [&](std::string& why) {
        for (int d = 2; d <= 8; ++d) {
            for (const auto& c : all_candidates_n3(d, true)) {
                SearchBudget budget;
                OracleResult r = exhaustive_decide(c, budget);
                if (r.status == OracleStatus::BudgetExceeded) {
                    why = "budget exceeded on " + format_candidate(c);
                    return false;
                }
                mpz_class n = count_transitive(c.partitions, c.degree);
                if ((n > 0) != (r.status == OracleStatus::Realizable)) {
                    why = "count/search mismatch on " + format_candidate(c);
                    return false;
                }
            }
        }
        for (int d = 2; d <= 6; ++d) {
            std::vector<Partition> parts = all_partitions(d);
            for (size_t i = 0; i < parts.size(); ++i)
                for (size_t j = i; j < parts.size(); ++j)
                    for (size_t k = j; k < parts.size(); ++k) {
                        auto [all, trans] = brute_force_counts(
                            {parts[i].parts(), parts[j].parts(), parts[k].parts()}, d);
                        std::vector<Partition> types = {parts[i], parts[j], parts[k]};
                        if (count_tuples(types, d) != mpz_class(static_cast<long>(all)) ||
                            count_transitive(types, d) != mpz_class(static_cast<long>(trans))) {
                            why = "count mismatch at degree " + std::to_string(d);
                            return false;
                        }
                    }
        }
        return true;
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << std::endl;
    return failures == 0 ? 0 : 1;
}
