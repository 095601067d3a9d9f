#include "hurwitz/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

namespace hurwitz {

namespace {

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> out(f.size());
    for (size_t x = 0; x < f.size(); ++x) out[x] = f[static_cast<size_t>(g[x])];
    return out;
}

std::vector<int> inverse(const std::vector<int>& f) {
    std::vector<int> out(f.size());
    for (size_t x = 0; x < f.size(); ++x) out[static_cast<size_t>(f[x])] = static_cast<int>(x);
    return out;
}

std::vector<int> cycle_type(const std::vector<int>& f) {
    std::vector<bool> seen(f.size(), false);
    std::vector<int> type;
    for (size_t x = 0; x < f.size(); ++x) {
        if (seen[x]) continue;
        int len = 0;
        size_t y = x;
        while (!seen[y]) {
            seen[y] = true;
            y = static_cast<size_t>(f[y]);
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

/// Canonical permutation of a cycle type: consecutive blocks, parts descending.
std::vector<int> canonical_of_type(const std::vector<int>& parts, int d) {
    std::vector<int> perm(static_cast<size_t>(d));
    int at = 0;
    for (int len : parts) {
        for (int j = 0; j < len; ++j)
            perm[static_cast<size_t>(at + j)] = at + (j + 1) % len;
        at += len;
    }
    return perm;
}

}  // namespace

std::string format_cycles(const std::vector<int>& perm) {
    std::string out;
    std::vector<bool> seen(perm.size(), false);
    for (size_t x = 0; x < perm.size(); ++x) {
        if (seen[x] || perm[x] == static_cast<int>(x)) {
            seen[x] = true;
            continue;
        }
        out += '(';
        size_t y = x;
        bool first = true;
        while (!seen[y]) {
            seen[y] = true;
            if (!first) out += ' ';
            out += std::to_string(y + 1);
            first = false;
            y = static_cast<size_t>(perm[y]);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

std::string format_witness(const PermutationWitness& w) {
    std::string out;
    for (const auto& p : w.perms) {
        out += format_cycles(p);
        out += '\n';
    }
    return out;
}

std::string to_string(OracleStatus s) {
    switch (s) {
        case OracleStatus::Realizable: return "REALIZABLE";
        case OracleStatus::Exceptional: return "EXCEPTIONAL";
        case OracleStatus::BudgetExceeded: return "BUDGET_EXCEEDED";
    }
    return "?";
}

bool verify_permutation_witness(const CandidateCover& c, const PermutationWitness& w) {
    int d = c.degree;
    if (w.degree != d) throw CandidateError("witness degree mismatch");
    if (w.perms.size() != c.partitions.size()) return false;
    for (const auto& p : w.perms) {
        if (static_cast<int>(p.size()) != d) return false;
        std::vector<bool> hit(p.size(), false);
        for (int v : p) {
            if (v < 0 || v >= d || hit[static_cast<size_t>(v)]) return false;
            hit[static_cast<size_t>(v)] = true;
        }
    }
    for (size_t i = 0; i < w.perms.size(); ++i)
        if (cycle_type(w.perms[i]) != c.partitions[i].parts()) return false;

    // product, applying the last permutation first
    std::vector<int> prod(static_cast<size_t>(d));
    std::iota(prod.begin(), prod.end(), 0);
    for (auto it = w.perms.rbegin(); it != w.perms.rend(); ++it) prod = compose(*it, prod);
    for (int x = 0; x < d; ++x)
        if (prod[static_cast<size_t>(x)] != x) return false;

    // transitivity
    std::vector<int> root(static_cast<size_t>(d));
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (root[static_cast<size_t>(x)] != x) {
            root[static_cast<size_t>(x)] = root[static_cast<size_t>(root[static_cast<size_t>(x)])];
            x = root[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const auto& p : w.perms)
        for (int x = 0; x < d; ++x) {
            int a = find(x), b = find(p[static_cast<size_t>(x)]);
            if (a != b) root[static_cast<size_t>(a)] = b;
        }
    int r0 = find(0);
    for (int x = 1; x < d; ++x)
        if (find(x) != r0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Backtracking tuple search

namespace {

using Clock = std::chrono::steady_clock;

struct SearchDeadline {
    long long max_nodes;
    Clock::time_point deadline;
    long long nodes = 0;
    bool out_of_budget = false;

    bool tick() {
        if (out_of_budget) return false;
        ++nodes;
        if (nodes > max_nodes || ((nodes & 8191) == 0 && Clock::now() > deadline)) {
            out_of_budget = true;
            return false;
        }
        return true;
    }
};

/// Union-find with explicit rollback (union by size, no path compression).
struct RollbackDSU {
    std::vector<int> parent, size;
    // per-component counts of points that can still take part in a future
    // edge of the searched permutation
    std::vector<int> free_args, free_imgs;
    struct Undo {
        int child, parent, d_args, d_imgs;
    };
    std::vector<Undo> trail;

    void init(int d) {
        parent.resize(static_cast<size_t>(d));
        std::iota(parent.begin(), parent.end(), 0);
        size.assign(static_cast<size_t>(d), 1);
        free_args.assign(static_cast<size_t>(d), 1);
        free_imgs.assign(static_cast<size_t>(d), 1);
        trail.clear();
    }
    int find(int x) const {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    }
    // merge without bookkeeping of free slots (setup edges)
    void raw_union(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[static_cast<size_t>(a)] < size[static_cast<size_t>(b)]) std::swap(a, b);
        parent[static_cast<size_t>(b)] = a;
        size[static_cast<size_t>(a)] += size[static_cast<size_t>(b)];
        free_args[static_cast<size_t>(a)] += free_args[static_cast<size_t>(b)];
        free_imgs[static_cast<size_t>(a)] += free_imgs[static_cast<size_t>(b)];
    }
    size_t mark() const { return trail.size(); }
    void union_edge(int x, int y) {
        int a = find(x), b = find(y);
        if (a != b) {
            if (size[static_cast<size_t>(a)] < size[static_cast<size_t>(b)]) std::swap(a, b);
            trail.push_back({b, a, free_args[static_cast<size_t>(b)],
                             free_imgs[static_cast<size_t>(b)]});
            parent[static_cast<size_t>(b)] = a;
            size[static_cast<size_t>(a)] += size[static_cast<size_t>(b)];
            free_args[static_cast<size_t>(a)] += free_args[static_cast<size_t>(b)];
            free_imgs[static_cast<size_t>(a)] += free_imgs[static_cast<size_t>(b)];
        } else {
            trail.push_back({-1, a, 0, 0});
        }
        int r = find(x);
        free_args[static_cast<size_t>(r)] -= 1;
        free_imgs[static_cast<size_t>(r)] -= 1;
    }
    void rollback(size_t m) {
        while (trail.size() > m) {
            Undo u = trail.back();
            trail.pop_back();
            if (u.child < 0) {
                free_args[static_cast<size_t>(u.parent)] += 1;
                free_imgs[static_cast<size_t>(u.parent)] += 1;
            } else {
                int r = u.parent;
                free_args[static_cast<size_t>(r)] += 1;
                free_imgs[static_cast<size_t>(r)] += 1;
                size[static_cast<size_t>(r)] -= size[static_cast<size_t>(u.child)];
                free_args[static_cast<size_t>(r)] -= u.d_args;
                free_imgs[static_cast<size_t>(r)] -= u.d_imgs;
                parent[static_cast<size_t>(u.child)] = u.child;
            }
        }
    }
    bool component_dead(int x, int d) const {
        int r = find(x);
        return size[static_cast<size_t>(r)] < d && free_args[static_cast<size_t>(r)] == 0 &&
               free_imgs[static_cast<size_t>(r)] == 0;
    }
};

/// Open-chain bookkeeping for the running product rho while the last
/// searched permutation is being assigned. Cycles of rho must close at
/// lengths available in the derived type.
struct ChainTracker {
    std::vector<int> start_of;  // valid at chain ends
    std::vector<int> end_of;    // valid at chain starts
    std::vector<int> len;       // edges, valid at chain starts
    std::vector<int> avail;     // avail[L]: remaining cycles of length L to close
    int max_avail = 0;
    struct Undo {
        int x, z, closed_len, old_end, old_len, old_max;
        bool merged;
    };
    std::vector<Undo> trail;

    void init(int d, const std::vector<int>& derived_type) {
        start_of.resize(static_cast<size_t>(d));
        end_of.resize(static_cast<size_t>(d));
        len.assign(static_cast<size_t>(d), 0);
        std::iota(start_of.begin(), start_of.end(), 0);
        std::iota(end_of.begin(), end_of.end(), 0);
        avail.assign(static_cast<size_t>(d) + 1, 0);
        max_avail = 0;
        for (int L : derived_type) {
            avail[static_cast<size_t>(L)] += 1;
            max_avail = std::max(max_avail, L);
        }
        trail.clear();
    }
    size_t mark() const { return trail.size(); }
    void lower_max() {
        while (max_avail > 0 && avail[static_cast<size_t>(max_avail)] == 0) --max_avail;
    }
    // add rho-edge x -> z; x is the end of its chain, z the start of its own
    bool add_edge(int x, int z) {
        int s = start_of[static_cast<size_t>(x)];
        if (s == z) {
            int cyc = len[static_cast<size_t>(s)] + 1;
            if (cyc >= static_cast<int>(avail.size()) || avail[static_cast<size_t>(cyc)] == 0)
                return false;
            avail[static_cast<size_t>(cyc)] -= 1;
            trail.push_back({x, z, cyc, 0, 0, max_avail, false});
            lower_max();
            return true;
        }
        int e = end_of[static_cast<size_t>(z)];
        int merged_len = len[static_cast<size_t>(s)] + 1 + len[static_cast<size_t>(z)];
        // the open chain can only close at a length >= edges + 1
        if (merged_len + 1 > max_avail) return false;
        trail.push_back({x, z, 0, end_of[static_cast<size_t>(s)], len[static_cast<size_t>(s)],
                         max_avail, true});
        end_of[static_cast<size_t>(s)] = e;
        start_of[static_cast<size_t>(e)] = s;
        len[static_cast<size_t>(s)] = merged_len;
        return true;
    }
    void rollback(size_t m) {
        while (trail.size() > m) {
            Undo u = trail.back();
            trail.pop_back();
            max_avail = u.old_max;
            if (!u.merged) {
                avail[static_cast<size_t>(u.closed_len)] += 1;
            } else {
                int s = start_of[static_cast<size_t>(u.x)];
                len[static_cast<size_t>(s)] = u.old_len;
                end_of[static_cast<size_t>(s)] = u.old_end;
                start_of[static_cast<size_t>(u.old_end)] = s;
                start_of[static_cast<size_t>(end_of[static_cast<size_t>(u.z)])] =
                    u.z;  // restore z's chain start
            }
        }
    }
};

struct TupleSearch {
    int d = 0;
    int n = 0;
    std::vector<std::vector<int>> role_types;  // role order
    std::vector<int> original_of_role;
    SearchDeadline budget;
    std::mt19937_64 rng;
    std::vector<int> value_order;

    // state for the last searched permutation
    std::vector<int> pre;  // product of all earlier roles
    std::vector<int> pre_inv;
    std::vector<int> sigma;
    std::vector<bool> used;
    RollbackDSU dsu;
    ChainTracker chains;
    std::vector<int> part_avail;  // multiset of remaining sigma cycle lengths

    bool run_last_phase();
    bool extend_cycle(int anchor, int prev, int remaining);
    bool open_new_cycle();
    bool try_edge(int x, int y, int anchor, int remaining);
};

bool TupleSearch::try_edge(int x, int y, int anchor, int remaining) {
    if (!budget.tick()) return false;
    size_t cm = chains.mark();
    if (!chains.add_edge(x, pre[static_cast<size_t>(y)])) {
        chains.rollback(cm);
        return false;
    }
    size_t dm = dsu.mark();
    dsu.union_edge(x, y);
    if (dsu.component_dead(x, d)) {
        dsu.rollback(dm);
        chains.rollback(cm);
        return false;
    }
    sigma[static_cast<size_t>(x)] = y;
    bool ok;
    if (remaining == 0)
        ok = open_new_cycle();
    else
        ok = extend_cycle(anchor, y, remaining);
    if (!ok) {
        sigma[static_cast<size_t>(x)] = -1;
        dsu.rollback(dm);
        chains.rollback(cm);
    }
    return ok;
}

bool TupleSearch::extend_cycle(int anchor, int prev, int remaining) {
    if (budget.out_of_budget) return false;
    if (remaining == 1) {
        // close the sigma-cycle back to its anchor
        return try_edge(prev, anchor, anchor, 0);
    }
    // fail-first: the image that closes prev's rho-chain is the most
    // constrained choice, so branch on it before the rest
    int closing = pre_inv[static_cast<size_t>(
        chains.start_of[static_cast<size_t>(prev)])];
    if (closing != anchor && !used[static_cast<size_t>(closing)]) {
        used[static_cast<size_t>(closing)] = true;
        if (try_edge(prev, closing, anchor, remaining - 1)) return true;
        used[static_cast<size_t>(closing)] = false;
        if (budget.out_of_budget) return false;
    }
    for (int idx = 0; idx < d; ++idx) {
        int y = value_order[static_cast<size_t>(idx)];
        if (y == closing || used[static_cast<size_t>(y)]) continue;
        used[static_cast<size_t>(y)] = true;
        if (try_edge(prev, y, anchor, remaining - 1)) return true;
        used[static_cast<size_t>(y)] = false;
        if (budget.out_of_budget) return false;
    }
    return false;
}

bool TupleSearch::open_new_cycle() {
    int anchor = -1;
    for (int x = 0; x < d; ++x)
        if (!used[static_cast<size_t>(x)]) {
            anchor = x;
            break;
        }
    if (anchor < 0) return true;  // every point placed, every rho-cycle closed
    used[static_cast<size_t>(anchor)] = true;
    int prev_len = 0;
    for (size_t li = 0; li < part_avail.size(); ++li) {
        int L = part_avail[li];
        if (L == prev_len) continue;  // distinct lengths once
        prev_len = L;
        part_avail[li] = 0;
        bool ok;
        if (L == 1)
            ok = try_edge(anchor, anchor, anchor, 0);
        else
            ok = extend_cycle(anchor, anchor, L);  // L edges remain, closing included
        part_avail[li] = L;
        if (ok) return true;
        if (budget.out_of_budget) break;
    }
    used[static_cast<size_t>(anchor)] = false;
    return false;
}

bool TupleSearch::run_last_phase() {
    sigma.assign(static_cast<size_t>(d), -1);
    used.assign(static_cast<size_t>(d), false);
    chains.init(d, role_types[static_cast<size_t>(n - 1)]);
    part_avail = role_types[static_cast<size_t>(n - 2)];
    std::sort(part_avail.begin(), part_avail.end());
    return open_new_cycle();
}

}  // namespace

namespace {

/// roles: 0 fixed canonical, n-1 derived from the product, in between
/// searched; middle roles before the last are enumerated recursively.
struct RoleOrder {
    std::vector<int> role_to_original;
};

double log_class_size(const std::vector<int>& parts, int d) {
    // log of d! / (prod j^mj mj!)
    std::vector<int> mult(static_cast<size_t>(d) + 1, 0);
    for (int p : parts) mult[static_cast<size_t>(p)] += 1;
    double v = 0;
    for (int j = 2; j <= d; ++j) v += std::log(static_cast<double>(j));
    for (int j = 1; j <= d; ++j) {
        for (int l = 1; l <= mult[static_cast<size_t>(j)]; ++l)
            v -= std::log(static_cast<double>(j) * l);
    }
    return v;
}

RoleOrder choose_roles(const CandidateCover& c) {
    int n = c.num_branch_points();
    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);

    // fixed: largest conjugacy class (kills the most conjugation symmetry)
    int fixed = 0;
    double best = -1;
    for (int i = 0; i < n; ++i) {
        double v = log_class_size(c.partitions[static_cast<size_t>(i)].parts(), c.degree);
        if (v > best) {
            best = v;
            fixed = i;
        }
    }
    // derived: the most parts among the rest (cycle closures prune hardest)
    int derived = -1;
    int most_parts = -1;
    for (int i = 0; i < n; ++i) {
        if (i == fixed) continue;
        if (c.partitions[static_cast<size_t>(i)].length() > most_parts) {
            most_parts = c.partitions[static_cast<size_t>(i)].length();
            derived = i;
        }
    }
    RoleOrder ro;
    ro.role_to_original.push_back(fixed);
    std::vector<std::pair<double, int>> middle;
    for (int i = 0; i < n; ++i)
        if (i != fixed && i != derived)
            middle.push_back({log_class_size(c.partitions[static_cast<size_t>(i)].parts(),
                                             c.degree), i});
    std::sort(middle.begin(), middle.end());
    for (auto& [v, i] : middle) ro.role_to_original.push_back(i);
    if (derived >= 0) ro.role_to_original.push_back(derived);
    return ro;
}

/// Enumerate permutations of the given cycle type, canonical cycle order
/// (each new cycle anchored at the smallest unused point, images tried in
/// the given order), invoking f on each; f returns true to stop.
bool enumerate_of_type(std::vector<int> parts, int d, SearchDeadline& budget,
                       const std::vector<int>& value_order,
                       const std::function<bool(const std::vector<int>&)>& f) {
    std::sort(parts.begin(), parts.end());
    std::vector<int> perm(static_cast<size_t>(d), -1);
    std::vector<bool> used(static_cast<size_t>(d), false);
    std::vector<int> avail = parts;

    std::function<bool()> new_cycle = [&]() -> bool {
        int anchor = -1;
        for (int x = 0; x < d; ++x)
            if (!used[static_cast<size_t>(x)]) {
                anchor = x;
                break;
            }
        if (anchor < 0) return f(perm);
        used[static_cast<size_t>(anchor)] = true;
        int prev = 0;
        bool stop = false;
        std::function<bool(int, int)> extend = [&](int last, int remaining) -> bool {
            if (!budget.tick()) return true;
            if (remaining == 0) {
                perm[static_cast<size_t>(last)] = anchor;
                bool s = new_cycle();
                perm[static_cast<size_t>(last)] = -1;
                return s;
            }
            for (int idx = 0; idx < d; ++idx) {
                int y = value_order[static_cast<size_t>(idx)];
                if (used[static_cast<size_t>(y)]) continue;
                used[static_cast<size_t>(y)] = true;
                perm[static_cast<size_t>(last)] = y;
                if (extend(y, remaining - 1)) {
                    return true;
                }
                perm[static_cast<size_t>(last)] = -1;
                used[static_cast<size_t>(y)] = false;
            }
            return false;
        };
        for (size_t li = 0; li < avail.size() && !stop; ++li) {
            int L = avail[li];
            if (L == prev) continue;
            prev = L;
            avail[li] = 0;
            stop = extend(anchor, L - 1) || budget.out_of_budget;
            avail[li] = L;
            if (stop) break;
        }
        used[static_cast<size_t>(anchor)] = false;
        return stop;
    };
    return new_cycle();
}

OracleResult run_search(const CandidateCover& c, const SearchBudget& budget, bool randomized) {
    OracleResult result;
    if (c.base_genus >= 1) {
        result.status = OracleStatus::Realizable;
        result.known_result = true;
        return result;
    }
    int d = c.degree;
    int n = c.num_branch_points();

    RoleOrder ro = choose_roles(c);
    std::vector<std::vector<int>> role_types;
    for (int orig : ro.role_to_original)
        role_types.push_back(c.partitions[static_cast<size_t>(orig)].parts());

    TupleSearch search;
    search.d = d;
    search.n = n;
    search.role_types = role_types;
    search.budget.max_nodes = budget.max_nodes;
    search.budget.deadline =
        Clock::now() + std::chrono::microseconds(static_cast<long long>(budget.max_seconds * 1e6));
    search.rng.seed(budget.seed + 0x9e3779b97f4a7c15ULL);
    search.value_order.resize(static_cast<size_t>(d));
    std::iota(search.value_order.begin(), search.value_order.end(), 0);
    if (randomized)
        std::shuffle(search.value_order.begin(), search.value_order.end(), search.rng);

    std::vector<std::vector<int>> placed;
    placed.push_back(canonical_of_type(role_types[0], d));

    // n == 2: the derived permutation is the inverse of the fixed one.
    if (n == 2) {
        search.budget.tick();
        std::vector<int> second = inverse(placed[0]);
        PermutationWitness w;
        w.degree = d;
        w.perms = {placed[0], second};
        if (cycle_type(second) == role_types[1] && verify_permutation_witness(c, w)) {
            result.status = OracleStatus::Realizable;
            result.witness = std::move(w);
        } else {
            result.status = OracleStatus::Exceptional;
        }
        result.nodes = search.budget.nodes;
        return result;
    }

    // recursive enumeration of middle roles 1..n-3, then the pruned last phase
    bool found = false;
    std::vector<std::vector<int>> solution_prefix;
    std::function<bool(int)> enumerate_role = [&](int role) -> bool {
        if (role == n - 2) {
            // last searched role: build pre-product and prune with chains/UF
            std::vector<int> pre(static_cast<size_t>(d));
            std::iota(pre.begin(), pre.end(), 0);
            for (auto it = placed.rbegin(); it != placed.rend(); ++it) pre = compose(*it, pre);
            search.pre = pre;
            search.pre_inv = inverse(pre);
            search.dsu.init(d);
            for (const auto& p : placed)
                for (int x = 0; x < d; ++x) search.dsu.raw_union(x, p[static_cast<size_t>(x)]);
            if (search.run_last_phase()) {
                found = true;
                solution_prefix = placed;
                return true;
            }
            return false;
        }
        return enumerate_of_type(role_types[static_cast<size_t>(role)], d, search.budget,
                                 search.value_order,
                                 [&](const std::vector<int>& perm) -> bool {
                                     placed.push_back(perm);
                                     bool stop = enumerate_role(role + 1);
                                     placed.pop_back();
                                     return stop || search.budget.out_of_budget;
                                 });
    };
    enumerate_role(1);

    result.nodes = search.budget.nodes;
    if (found) {
        // assemble in role order: the enumerated prefix, the searched
        // permutation, and the derived inverse of the running product
        std::vector<int> rho(static_cast<size_t>(d));
        for (int x = 0; x < d; ++x)
            rho[static_cast<size_t>(x)] =
                search.pre[static_cast<size_t>(search.sigma[static_cast<size_t>(x)])];
        std::vector<std::vector<int>> tuple = solution_prefix;
        tuple.push_back(search.sigma);
        tuple.push_back(inverse(rho));

        // move back to the candidate's partition order by adjacent swaps,
        // conjugating so the product stays the identity
        std::vector<std::pair<int, std::vector<int>>> tagged;
        for (int r = 0; r < n; ++r)
            tagged.push_back({ro.role_to_original[static_cast<size_t>(r)],
                              tuple[static_cast<size_t>(r)]});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j + 1 < n; ++j)
                if (tagged[static_cast<size_t>(j)].first > tagged[static_cast<size_t>(j + 1)].first) {
                    std::vector<int> u = tagged[static_cast<size_t>(j)].second;
                    std::vector<int> v = tagged[static_cast<size_t>(j + 1)].second;
                    int orig_u = tagged[static_cast<size_t>(j)].first;
                    int orig_v = tagged[static_cast<size_t>(j + 1)].first;
                    // (u, v) -> (u v u^-1, u) keeps the product and the types
                    tagged[static_cast<size_t>(j)] = {orig_v, compose(u, compose(v, inverse(u)))};
                    tagged[static_cast<size_t>(j + 1)] = {orig_u, std::move(u)};
                }
        PermutationWitness w;
        w.degree = d;
        for (auto& [orig, perm] : tagged) w.perms.push_back(std::move(perm));
        if (!verify_permutation_witness(c, w))
            throw std::logic_error("search produced an invalid witness");
        result.status = OracleStatus::Realizable;
        result.witness = std::move(w);
        return result;
    }
    result.status = search.budget.out_of_budget ? OracleStatus::BudgetExceeded
                                                : OracleStatus::Exceptional;
    return result;
}

}  // namespace

OracleResult find_witness(const CandidateCover& c, const SearchBudget& budget) {
    if (budget.mode != SearchMode::Randomized) return run_search(c, budget, false);

    // randomized restarts with growing node slices, deterministic in the seed
    OracleResult last;
    long long remaining = budget.max_nodes;
    long long slice = std::max<long long>(100'000, budget.max_nodes / 32);
    std::uint64_t seed = budget.seed;
    auto deadline = Clock::now() +
                    std::chrono::microseconds(static_cast<long long>(budget.max_seconds * 1e6));
    long long total_nodes = 0;
    while (remaining > 0 && Clock::now() < deadline) {
        SearchBudget sub = budget;
        sub.max_nodes = std::min(slice, remaining);
        sub.seed = seed++;
        sub.max_seconds =
            std::chrono::duration<double>(deadline - Clock::now()).count();
        OracleResult r = run_search(c, sub, true);
        total_nodes += r.nodes;
        r.nodes = total_nodes;
        if (r.status != OracleStatus::BudgetExceeded) return r;
        remaining -= sub.max_nodes;
        slice *= 2;
        last = r;
    }
    last.status = OracleStatus::BudgetExceeded;
    last.nodes = total_nodes;
    return last;
}

OracleResult exhaustive_decide(const CandidateCover& c, const SearchBudget& budget) {
    SearchBudget full = budget;
    full.mode = SearchMode::Backtracking;
    return run_search(c, full, false);
}

// ---------------------------------------------------------------------------
// Characters and exact counting

namespace {

std::vector<int> chi_key(const std::vector<int>& lambda, const std::vector<int>& alpha) {
    std::vector<int> key = lambda;
    key.push_back(-1);
    key.insert(key.end(), alpha.begin(), alpha.end());
    return key;
}

}  // namespace

const mpz_class& CharacterTable::chi(const std::vector<int>& lambda,
                                     const std::vector<int>& alpha) {
    std::vector<int> key = chi_key(lambda, alpha);
    auto it = chi_memo_.find(key);
    if (it != chi_memo_.end()) return it->second;

    mpz_class value = 0;
    if (alpha.empty()) {
        value = 1;  // empty partition of 0
    } else {
        int t = alpha[0];
        std::vector<int> rest(alpha.begin() + 1, alpha.end());
        int len = static_cast<int>(lambda.size());
        // first-column hook lengths (beta set), strictly decreasing
        std::vector<long long> beta(static_cast<size_t>(len));
        for (int i = 0; i < len; ++i)
            beta[static_cast<size_t>(i)] = lambda[static_cast<size_t>(i)] + (len - 1 - i);
        for (int i = 0; i < len; ++i) {
            long long target = beta[static_cast<size_t>(i)] - t;
            if (target < 0) continue;
            bool occupied = false;
            int crossings = 0;
            for (int j = 0; j < len; ++j) {
                if (j == i) continue;
                if (beta[static_cast<size_t>(j)] == target) occupied = true;
                if (beta[static_cast<size_t>(j)] > target &&
                    beta[static_cast<size_t>(j)] < beta[static_cast<size_t>(i)])
                    ++crossings;
            }
            if (occupied) continue;
            std::vector<long long> nb = beta;
            nb[static_cast<size_t>(i)] = target;
            std::sort(nb.rbegin(), nb.rend());
            std::vector<int> mu;
            for (int j = 0; j < len; ++j) {
                long long part = nb[static_cast<size_t>(j)] - (len - 1 - j);
                if (part > 0) mu.push_back(static_cast<int>(part));
            }
            const mpz_class& sub = chi(mu, rest);
            if (crossings % 2 == 0)
                value += sub;
            else
                value -= sub;
        }
    }
    return chi_memo_.emplace(std::move(key), std::move(value)).first->second;
}

const mpz_class& CharacterTable::dimension(const std::vector<int>& lambda) {
    auto it = dim_memo_.find(lambda);
    if (it != dim_memo_.end()) return it->second;
    int dsum = 0;
    for (int p : lambda) dsum += p;
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(dsum));
    mpz_class hooks = 1;
    int rows = static_cast<int>(lambda.size());
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < lambda[static_cast<size_t>(i)]; ++j) {
            int arm = lambda[static_cast<size_t>(i)] - j - 1;
            int leg = 0;
            for (int r = i + 1; r < rows; ++r)
                if (lambda[static_cast<size_t>(r)] > j) ++leg;
            hooks *= arm + leg + 1;
        }
    }
    mpz_class dim = num / hooks;
    return dim_memo_.emplace(lambda, std::move(dim)).first->second;
}

namespace {

void gen_partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                        std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

const std::vector<std::vector<int>>& partitions_of(int d) {
    static std::map<int, std::vector<std::vector<int>>> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    gen_partitions_rec(d, d, acc, out);
    return cache.emplace(d, std::move(out)).first->second;
}

mpz_class conjugacy_class_size(const std::vector<int>& type, int d) {
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(d));
    std::vector<int> mult(static_cast<size_t>(d) + 1, 0);
    for (int p : type) mult[static_cast<size_t>(p)] += 1;
    mpz_class z = 1;
    for (int j = 1; j <= d; ++j)
        for (int l = 1; l <= mult[static_cast<size_t>(j)]; ++l) z *= j * l;
    return fact / z;
}

std::vector<int> types_key(const std::vector<std::vector<int>>& types, int d) {
    std::vector<std::vector<int>> sorted = types;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> key{d};
    for (const auto& t : sorted) {
        key.push_back(-1);
        key.insert(key.end(), t.begin(), t.end());
    }
    return key;
}

/// all sub-multisets of `type` with the given sum, as sorted-descending part
/// lists; the complement comes along for free
void submultisets_rec(const std::vector<std::pair<int, int>>& groups, size_t gi, int sum_left,
                      std::vector<int>& acc, std::vector<std::vector<int>>& out) {
    if (sum_left == 0 || gi == groups.size()) {
        if (sum_left == 0) out.push_back(acc);
        return;
    }
    auto [val, mult] = groups[gi];
    for (int take = 0; take <= mult && take * val <= sum_left; ++take) {
        for (int t = 0; t < take; ++t) acc.push_back(val);
        submultisets_rec(groups, gi + 1, sum_left - take * val, acc, out);
        for (int t = 0; t < take; ++t) acc.pop_back();
    }
}

std::vector<std::vector<int>> submultisets_with_sum(const std::vector<int>& type, int s) {
    std::vector<std::pair<int, int>> groups;
    for (int p : type) {
        if (!groups.empty() && groups.back().first == p)
            groups.back().second += 1;
        else
            groups.push_back({p, 1});
    }
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    submultisets_rec(groups, 0, s, acc, out);
    return out;
}

std::vector<int> multiset_difference(const std::vector<int>& whole, const std::vector<int>& part) {
    std::vector<int> out;
    size_t pi = 0;
    for (int v : whole) {
        if (pi < part.size() && part[pi] == v)
            ++pi;
        else
            out.push_back(v);
    }
    return out;
}

}  // namespace

mpz_class TupleCounter::count_tuples_raw(const std::vector<std::vector<int>>& types, int d) {
    std::vector<int> key = types_key(types, d);
    auto it = tuples_memo_.find(key);
    if (it != tuples_memo_.end()) return it->second;

    int n = static_cast<int>(types.size());
    mpz_class class_product = 1;
    for (const auto& t : types) class_product *= conjugacy_class_size(t, d);

    mpq_class sum = 0;
    for (const auto& lambda : partitions_of(d)) {
        mpz_class prod = 1;
        for (const auto& t : types) prod *= chars_.chi(lambda, t);
        if (prod == 0) continue;
        const mpz_class& dim = chars_.dimension(lambda);
        if (n >= 2) {
            mpz_class den;
            mpz_pow_ui(den.get_mpz_t(), dim.get_mpz_t(), static_cast<unsigned long>(n - 2));
            mpq_class term(prod, den);
            term.canonicalize();
            sum += term;
        } else {
            sum += mpq_class(prod * dim);
        }
    }
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(d));
    mpq_class total = mpq_class(class_product, fact) * sum;
    total.canonicalize();
    if (total.get_den() != 1)
        throw std::logic_error("Frobenius sum is not an integer; character bug");
    mpz_class value = total.get_num();
    tuples_memo_.emplace(std::move(key), value);
    return value;
}

mpz_class TupleCounter::count_transitive_raw(const std::vector<std::vector<int>>& types, int d) {
    std::vector<int> key = types_key(types, d);
    auto it = transitive_memo_.find(key);
    if (it != transitive_memo_.end()) return it->second;

    mpz_class total = count_tuples_raw(types, d);
    int n = static_cast<int>(types.size());
    for (int s = 1; s < d && total != 0; ++s) {
        // orbit of the first point has size s: split every type
        std::vector<std::vector<std::vector<int>>> subs(static_cast<size_t>(n));
        bool feasible = true;
        for (int i = 0; i < n && feasible; ++i) {
            subs[static_cast<size_t>(i)] = submultisets_with_sum(types[static_cast<size_t>(i)], s);
            if (subs[static_cast<size_t>(i)].empty()) feasible = false;
        }
        if (!feasible) continue;
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d - 1),
                     static_cast<unsigned long>(s - 1));

        std::vector<std::vector<int>> chosen(static_cast<size_t>(n));
        std::function<void(int, mpz_class&)> rec = [&](int i, mpz_class& acc) {
            if (i == n) {
                std::vector<std::vector<int>> comp(static_cast<size_t>(n));
                for (int j = 0; j < n; ++j)
                    comp[static_cast<size_t>(j)] = multiset_difference(
                        types[static_cast<size_t>(j)], chosen[static_cast<size_t>(j)]);
                mpz_class inner = count_transitive_raw(chosen, s);
                if (inner != 0) inner *= count_tuples_raw(comp, d - s);
                acc += inner;
                return;
            }
            for (const auto& sub : subs[static_cast<size_t>(i)]) {
                chosen[static_cast<size_t>(i)] = sub;
                rec(i + 1, acc);
            }
        };
        mpz_class acc = 0;
        rec(0, acc);
        total -= binom * acc;
    }
    if (total < 0) throw std::logic_error("transitive sieve went negative");
    transitive_memo_.emplace(std::move(key), total);
    return total;
}

mpz_class TupleCounter::count_tuples(const std::vector<Partition>& types, int d) {
    std::vector<std::vector<int>> raw;
    for (const auto& t : types) raw.push_back(t.parts());
    return count_tuples_raw(raw, d);
}

mpz_class TupleCounter::count_transitive(const std::vector<Partition>& types, int d) {
    std::vector<std::vector<int>> raw;
    for (const auto& t : types) raw.push_back(t.parts());
    return count_transitive_raw(raw, d);
}

mpz_class count_tuples(const std::vector<Partition>& types, int d) {
    thread_local TupleCounter counter;
    return counter.count_tuples(types, d);
}

mpz_class count_transitive(const std::vector<Partition>& types, int d) {
    thread_local TupleCounter counter;
    return counter.count_transitive(types, d);
}

}  // namespace hurwitz
