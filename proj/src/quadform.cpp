#include "hurwitz/quadform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace hurwitz {

long long form_value(FormId f, long long x, long long y) {
    switch (f) {
        case FormId::X2_Y2: return x * x + y * y;
        case FormId::X2_XY_Y2: return x * x + x * y + y * y;
        case FormId::X2_3XY_3Y2: return x * x + 3 * x * y + 3 * y * y;
    }
    return 0;
}

std::string to_string(FormId f) {
    switch (f) {
        case FormId::X2_Y2: return "x2+y2";
        case FormId::X2_XY_Y2: return "x2+xy+y2";
        case FormId::X2_3XY_3Y2: return "x2+3xy+3y2";
    }
    return "?";
}

std::optional<FormId> form_from_string(const std::string& s) {
    if (s == "x2+y2") return FormId::X2_Y2;
    if (s == "x2+xy+y2") return FormId::X2_XY_Y2;
    if (s == "x2+3xy+3y2") return FormId::X2_3XY_3Y2;
    return std::nullopt;
}

std::string Constraint::to_string() const {
    std::string out;
    auto append = [&](const char* name) {
        if (!out.empty()) out += ',';
        out += name;
    };
    if (different_parity) append("different-parity");
    if (not_both_even) append("not-both-even");
    if (incongruent_mod_3) append("mod3");
    return out.empty() ? "none" : out;
}

std::optional<std::pair<long long, long long>> represent(FormId f, long long target,
                                                         Constraint constraint) {
    if (target < 0) return std::nullopt;
    long long bound = static_cast<long long>(std::ceil(std::sqrt(static_cast<double>(target)))) + 1;
    for (long long x = 0; x <= bound; ++x) {
        if (form_value(f, x, 0) > target && x > 0) break;
        for (long long y = 0; y <= bound; ++y) {
            long long v = form_value(f, x, y);
            if (v > target) break;
            if (v == target && constraint.satisfied(x, y)) return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

std::vector<long long> congruence_equivalence(FormId f, Constraint constraint,
                                              long long residue, long long modulus,
                                              long long limit) {
    if (limit < 1 || modulus < 1) throw std::invalid_argument("bad limit or modulus");
    std::vector<long long> counterexamples;
    for (long long d = 1; d <= limit; ++d) {
        bool constrained = represent(f, d, constraint).has_value();
        bool plain = d % modulus == residue % modulus && represent(f, d).has_value();
        if (constrained != plain) counterexamples.push_back(d);
    }
    return counterexamples;
}

std::vector<bool> representable_sieve(FormId f, long long limit) {
    std::vector<bool> mark(static_cast<size_t>(limit) + 1, false);
    for (long long x = 0; form_value(f, x, 0) <= limit; ++x) {
        for (long long y = 0;; ++y) {
            long long v = form_value(f, x, y);
            if (v > limit) break;
            mark[static_cast<size_t>(v)] = true;
        }
    }
    return mark;
}

Rational density(FormId f, long long limit, int jobs) {
    if (limit < 1) throw std::invalid_argument("limit must be positive");
    std::vector<bool> mark = representable_sieve(f, limit);
    long long count = 0;
    if (jobs <= 1) {
        for (long long d = 1; d <= limit; ++d)
            if (mark[static_cast<size_t>(d)]) ++count;
    } else {
        std::vector<long long> partial(static_cast<size_t>(jobs), 0);
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) {
            threads.emplace_back([&, t] {
                long long lo = 1 + t * limit / jobs;
                long long hi = (t + 1) * limit / jobs;
                long long c = 0;
                for (long long d = lo; d <= hi; ++d)
                    if (mark[static_cast<size_t>(d)]) ++c;
                partial[static_cast<size_t>(t)] = c;
            });
        }
        for (auto& th : threads) th.join();
        for (long long c : partial) count += c;
    }
    return Rational(count, limit);
}

namespace {

std::vector<bool> prime_sieve(long long limit) {
    std::vector<bool> is_prime(static_cast<size_t>(limit) + 1, true);
    if (limit >= 0) is_prime[0] = false;
    if (limit >= 1) is_prime[1] = false;
    for (long long p = 2; p * p <= limit; ++p)
        if (is_prime[static_cast<size_t>(p)])
            for (long long q = p * p; q <= limit; q += p) is_prime[static_cast<size_t>(q)] = false;
    return is_prime;
}

}  // namespace

std::vector<long long> prime_support(FormId f, long long residue, long long modulus,
                                     long long limit, int jobs) {
    if (limit < 2 || modulus < 1) throw std::invalid_argument("bad limit or modulus");
    std::vector<bool> is_prime = prime_sieve(limit);
    std::vector<bool> mark = representable_sieve(f, limit);

    auto scan = [&](long long lo, long long hi, std::vector<long long>& out) {
        for (long long p = lo; p <= hi; ++p)
            if (is_prime[static_cast<size_t>(p)] && p % modulus == residue % modulus &&
                !mark[static_cast<size_t>(p)])
                out.push_back(p);
    };

    if (jobs <= 1) {
        std::vector<long long> out;
        scan(2, limit, out);
        return out;
    }
    std::vector<std::vector<long long>> partial(static_cast<size_t>(jobs));
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) {
        threads.emplace_back([&, t] {
            long long lo = std::max<long long>(2, 1 + t * limit / jobs);
            long long hi = (t + 1) * limit / jobs;
            scan(lo, hi, partial[static_cast<size_t>(t)]);
        });
    }
    for (auto& th : threads) th.join();
    std::vector<long long> out;
    for (auto& part : partial) out.insert(out.end(), part.begin(), part.end());
    return out;
}

}  // namespace hurwitz
