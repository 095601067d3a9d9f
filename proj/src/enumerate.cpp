#include "hurwitz/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "hurwitz/euler.hpp"

namespace hurwitz {

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        acc.push_back(part);
        partitions_rec(remaining - part, part, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> all_partitions(int d) {
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(d, d, acc, out);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return a.parts() > b.parts();
    });
    return out;
}

std::vector<Partition> partitions_defect_at_most(int d, int cmax) {
    std::set<std::vector<int>> seen;

    // Shape 1: at most cmax parts in total (defect <= length <= cmax).
    for (int len = 1; len <= cmax; ++len) {
        std::vector<int> stack;
        std::function<void(int, int, int)> rec = [&](int remaining, int max_part, int slots) {
            if (slots == 0) {
                if (remaining == 0) seen.insert(stack);
                return;
            }
            for (int part = std::min(remaining - (slots - 1), max_part); part >= 1; --part) {
                stack.push_back(part);
                rec(remaining - part, part, slots - 1);
                stack.pop_back();
            }
        };
        rec(d, d, len);
    }

    // Shape 2: r >= 1 copies of the lcm value g plus at most cmax entries
    // that are proper divisors of g.
    for (int g = 2; g <= d; ++g) {
        std::vector<int> divisors;
        for (int e = 1; e < g; ++e)
            if (g % e == 0) divisors.push_back(e);
        std::sort(divisors.rbegin(), divisors.rend());
        for (int r = 1; g * r <= d; ++r) {
            int rest = d - g * r;
            std::vector<int> extras;
            std::function<void(int, size_t, int)> rec = [&](int remaining, size_t idx, int count) {
                if (remaining == 0) {
                    std::vector<int> parts(static_cast<size_t>(r), g);
                    parts.insert(parts.end(), extras.begin(), extras.end());
                    std::sort(parts.rbegin(), parts.rend());
                    seen.insert(parts);
                    return;
                }
                if (count == cmax || idx >= divisors.size()) return;
                for (size_t j = idx; j < divisors.size(); ++j) {
                    if (divisors[j] > remaining) continue;
                    extras.push_back(divisors[j]);
                    rec(remaining - divisors[j], j, count + 1);
                    extras.pop_back();
                }
            };
            rec(rest, 0, 0);
        }
    }
    // g = 1 case: (1,1,...,1) has lcm 1 and defect 0.
    if (cmax >= 0) seen.insert(std::vector<int>(static_cast<size_t>(d), 1));

    std::vector<Partition> out;
    for (const auto& parts : seen) {
        Partition p{std::vector<int>(parts)};
        if (p.defect() <= cmax) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return a.parts() > b.parts();
    });
    return out;
}

std::vector<CandidateCover> triangular_candidates(int d) {
    std::vector<CandidateCover> out;
    if (d < 2) return out;
    std::vector<Partition> pool = partitions_defect_at_most(d, 3);
    pool.erase(std::remove_if(pool.begin(), pool.end(),
                              [](const Partition& p) { return !p.has_entry_above_one(); }),
               pool.end());

    // Bucket by (length, defect) so the third member of a triple is a lookup.
    std::map<std::pair<int, int>, std::vector<size_t>> bucket;
    for (size_t i = 0; i < pool.size(); ++i)
        bucket[{pool[i].length(), pool[i].defect()}].push_back(i);

    std::set<CandidateCover> found;
    for (size_t i = 0; i < pool.size(); ++i) {
        int ci = pool[i].defect(), li = pool[i].length();
        if (ci > 3) continue;
        for (size_t j = i; j < pool.size(); ++j) {
            int cj = pool[j].defect(), lj = pool[j].length();
            if (ci + cj > 3) continue;
            int need_l = d + 2 - li - lj;
            int need_c = 3 - ci - cj;
            if (need_l < 1) continue;
            auto it = bucket.find({need_l, need_c});
            if (it == bucket.end()) continue;
            for (size_t k : it->second) {
                if (k < j) continue;  // unordered triples once
                found.insert(make_candidate(0, std::nullopt, d,
                                            {pool[i], pool[j], pool[k]}));
            }
        }
    }
    out.assign(found.begin(), found.end());
    return out;
}

std::vector<CandidateCover> hyperbolic_triangular_census(int dmax, int jobs) {
    std::vector<std::vector<CandidateCover>> per_degree(static_cast<size_t>(dmax) + 1);
    auto scan = [&](int d) {
        for (auto& c : triangular_candidates(d)) {
            OrbifoldCover oc = induced_orbifold_cover(c);
            if (geometry_class(oc.source) == GeometryClass::Hyperbolic &&
                geometry_class(oc.target) == GeometryClass::Hyperbolic)
                per_degree[static_cast<size_t>(d)].push_back(std::move(c));
        }
    };
    if (jobs <= 1) {
        for (int d = 2; d <= dmax; ++d) scan(d);
    } else {
        std::vector<std::thread> threads;
        std::atomic<int> next(2);
        for (int t = 0; t < jobs; ++t)
            threads.emplace_back([&] {
                for (int d = next++; d <= dmax; d = next++) scan(d);
            });
        for (auto& th : threads) th.join();
    }
    std::vector<CandidateCover> out;
    for (auto& bucket : per_degree)
        for (auto& c : bucket) out.push_back(std::move(c));
    return out;
}

namespace {

/// Partitions of d whose entries all divide `order` and whose lcm is exactly
/// `order`, with an entry above 1.
std::vector<Partition> partitions_with_lcm(int d, int order) {
    std::vector<int> divisors;
    for (int e = 1; e <= order; ++e)
        if (order % e == 0) divisors.push_back(e);
    std::sort(divisors.rbegin(), divisors.rend());
    std::vector<Partition> out;
    std::vector<int> acc;
    std::function<void(int, size_t)> rec = [&](int remaining, size_t idx) {
        if (remaining == 0) {
            Partition p{std::vector<int>(acc)};
            if (p.lcm() == order && p.has_entry_above_one()) out.push_back(std::move(p));
            return;
        }
        for (size_t j = idx; j < divisors.size(); ++j) {
            if (divisors[j] > remaining) continue;
            acc.push_back(divisors[j]);
            rec(remaining - divisors[j], j);
            acc.pop_back();
        }
    };
    rec(d, 0);
    return out;
}

void collect_triples_with_targets(int d, const std::vector<std::vector<int>>& target_sets,
                                  const std::vector<int>& total_lengths,
                                  std::set<CandidateCover>& found) {
    // target_sets: admissible multisets of target cone orders; partitions are
    // chosen per slot with exact lcm, total length constrained.
    for (const auto& targets : target_sets) {
        std::vector<std::vector<Partition>> per_slot;
        for (int order : targets) per_slot.push_back(partitions_with_lcm(d, order));
        std::vector<size_t> idx(targets.size(), 0);
        std::function<void(size_t, int, std::vector<Partition>&)> rec =
            [&](size_t slot, int length_so_far, std::vector<Partition>& acc) {
                if (slot == per_slot.size()) {
                    if (std::find(total_lengths.begin(), total_lengths.end(), length_so_far) !=
                        total_lengths.end()) {
                        found.insert(make_candidate(0, std::nullopt, d, acc));
                    }
                    return;
                }
                for (const auto& p : per_slot[slot]) {
                    // avoid duplicate unordered choices for equal target orders
                    if (slot > 0 && targets[slot] == targets[slot - 1] && p < acc.back()) continue;
                    acc.push_back(p);
                    rec(slot + 1, length_so_far + p.length(), acc);
                    acc.pop_back();
                }
            };
        std::vector<Partition> acc;
        rec(0, 0, acc);
    }
}

}  // namespace

std::vector<CandidateCover> positive_chi_candidates(int dmax) {
    std::set<CandidateCover> found;
    for (int d = 2; d <= dmax; ++d) {
        // n = 2: only (d),(d), the football target S(d,d).
        found.insert(make_candidate(0, std::nullopt, d, {Partition({d}), Partition({d})}));

        // n = 3: spherical triangle targets. S(2,2,p) accepts every third
        // lcm; the platonic targets fix all three.
        for (const auto& a : partitions_with_lcm(d, 2)) {
            for (const auto& b : partitions_with_lcm(d, 2)) {
                if (b < a) continue;
                int need_l = d + 2 - a.length() - b.length();
                if (need_l < 1) continue;
                for (const auto& c : all_partitions(d)) {
                    if (c.length() != need_l || !c.has_entry_above_one()) continue;
                    found.insert(make_candidate(0, std::nullopt, d, {a, b, c}));
                }
            }
        }
        std::vector<std::vector<int>> platonic = {{2, 3, 3}, {2, 3, 4}, {2, 3, 5}};
        collect_triples_with_targets(d, platonic, {d + 2}, found);
    }

    std::vector<CandidateCover> out;
    for (const auto& c : found) {
        OrbifoldCover oc = induced_orbifold_cover(c);
        if (orbifold_euler_characteristic(oc.target).sign() > 0) out.push_back(c);
    }
    return out;
}

std::vector<CandidateCover> euclidean_candidates(int dmax) {
    std::set<CandidateCover> found;
    for (int d = 2; d <= dmax; ++d) {
        std::vector<std::vector<int>> targets3 = {{2, 4, 4}, {2, 3, 6}, {3, 3, 3}};
        // genus-0 cover: total length d+2; torus cover: total length d.
        collect_triples_with_targets(d, targets3, {d + 2, d}, found);
        std::vector<std::vector<int>> targets4 = {{2, 2, 2, 2}};
        collect_triples_with_targets(d, targets4, {2 * d + 2, 2 * d}, found);
    }
    std::vector<CandidateCover> out;
    for (const auto& c : found) {
        OrbifoldCover oc = induced_orbifold_cover(c);
        if (geometry_class(oc.source) == GeometryClass::Euclidean &&
            geometry_class(oc.target) == GeometryClass::Euclidean)
            out.push_back(c);
    }
    return out;
}

std::vector<CandidateCover> all_candidates_n3(int d, bool include_higher_genus) {
    std::vector<CandidateCover> out;
    if (d < 2) return out;
    std::vector<Partition> pool = all_partitions(d);
    pool.erase(std::remove_if(pool.begin(), pool.end(),
                              [](const Partition& p) { return !p.has_entry_above_one(); }),
               pool.end());
    std::map<int, std::vector<size_t>> by_length;
    for (size_t i = 0; i < pool.size(); ++i) by_length[pool[i].length()].push_back(i);

    std::set<CandidateCover> found;
    for (size_t i = 0; i < pool.size(); ++i) {
        for (size_t j = i; j < pool.size(); ++j) {
            int base = pool[i].length() + pool[j].length();
            for (int genus = 0;; ++genus) {
                int need = d + 2 - 2 * genus - base;
                if (need < 1) break;
                auto it = by_length.find(need);
                if (it != by_length.end()) {
                    for (size_t k : it->second) {
                        if (k < j) continue;
                        found.insert(
                            make_candidate(0, std::nullopt, d, {pool[i], pool[j], pool[k]}));
                    }
                }
                if (!include_higher_genus) break;
            }
        }
    }
    out.assign(found.begin(), found.end());
    return out;
}

std::string render_table1() {
    std::string out;
    for (const auto& p : partitions_defect_at_most(8, 3)) {
        if (!p.has_entry_above_one()) continue;  // no branching, not in the table
        PartitionStats st = partition_stats(p);
        out += p.to_string() + " l=" + std::to_string(st.length) +
               " c=" + std::to_string(st.defect) + "\n";
    }
    return out;
}

std::string render_table2() {
    std::string out;
    for (const auto& c : triangular_candidates(8)) {
        OrbifoldCover oc = induced_orbifold_cover(c);
        std::string geo;
        switch (geometry_class(oc.target)) {
            case GeometryClass::Euclidean: geo = "E"; break;
            case GeometryClass::Hyperbolic: geo = "H"; break;
            case GeometryClass::Spherical: geo = "S"; break;
            case GeometryClass::Bad: geo = "bad"; break;
        }
        out += format_candidate(c) + " | " + format_orbifold(oc.source) + " -> " +
               format_orbifold(oc.target) + " | " + geo + "\n";
    }
    return out;
}

}  // namespace hurwitz
