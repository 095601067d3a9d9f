#include "hurwitz/euler.hpp"

#include <algorithm>

namespace hurwitz {

long long cover_euler_characteristic(const CandidateCover& c) {
    long long chi_base = 2 - 2LL * c.base_genus;
    long long n = c.num_branch_points();
    return c.total_length() + static_cast<long long>(c.degree) * (chi_base - n);
}

ValidationReport validate_candidate(const CandidateCover& c) {
    ValidationReport r;
    r.add("degree", c.degree >= 2, "d=" + std::to_string(c.degree));

    bool sums_ok = true;
    for (const auto& p : c.partitions)
        if (p.sum() != c.degree) sums_ok = false;
    r.add("partition-sums", sums_ok);

    bool nontrivial = true;
    for (const auto& p : c.partitions)
        if (!p.has_entry_above_one()) nontrivial = false;
    r.add("entry-above-1", nontrivial,
          nontrivial ? "" : "some partition consists of 1s only");

    long long chi = cover_euler_characteristic(c);
    r.add("riemann-hurwitz-parity", chi % 2 == 0, "chi_cover=" + std::to_string(chi));
    r.add("riemann-hurwitz-bound", chi <= 2, "chi_cover=" + std::to_string(chi));
    if (chi % 2 == 0 && chi <= 2) {
        int derived = static_cast<int>((2 - chi) / 2);
        r.add("cover-genus", derived == c.cover_genus,
              "derived genus " + std::to_string(derived));
    }
    if (c.base_genus == 0 && c.num_branch_points() == 3) {
        r.add("sphere-three-points", c.total_length() == c.degree + 2,
              "total length " + std::to_string(c.total_length()) + " vs d+2=" +
                  std::to_string(c.degree + 2));
    }
    return r;
}

Rational orbifold_euler_characteristic(const Orbifold& x) {
    Rational chi(2 - 2LL * x.genus);
    for (int p : x.cone_orders) chi = chi - (Rational(1) - Rational(1, p));
    return chi;
}

GeometryClass geometry_class(const Orbifold& x) {
    if (x.genus == 0) {
        if (x.cone_orders.size() == 1) return GeometryClass::Bad;
        if (x.cone_orders.size() == 2 && x.cone_orders[0] != x.cone_orders[1])
            return GeometryClass::Bad;
    }
    int s = orbifold_euler_characteristic(x).sign();
    if (s > 0) return GeometryClass::Spherical;
    if (s == 0) return GeometryClass::Euclidean;
    return GeometryClass::Hyperbolic;
}

OrbifoldCover induced_orbifold_cover(const CandidateCover& c) {
    OrbifoldCover oc;
    oc.degree = c.degree;

    std::vector<int> target_cones;
    std::vector<int> source_cones;
    for (const auto& part : c.partitions) {
        long long p = part.lcm();
        CoveringInstruction ins;
        ins.target_order = static_cast<int>(p);
        for (int dij : part.parts()) {
            int pij = static_cast<int>(p / dij);
            ins.source_orders.push_back(pij);
            if (pij >= 2) source_cones.push_back(pij);
        }
        std::sort(ins.source_orders.begin(), ins.source_orders.end());
        if (p >= 2) target_cones.push_back(static_cast<int>(p));
        oc.instructions.push_back(std::move(ins));
    }
    oc.target = make_orbifold(c.base_genus, std::move(target_cones));
    oc.source = make_orbifold(c.cover_genus, std::move(source_cones));
    return oc;
}

ValidationReport validate_orbifold_cover(const OrbifoldCover& oc) {
    ValidationReport r;

    bool div_ok = true;
    for (const auto& ins : oc.instructions)
        for (int pij : ins.source_orders)
            if (pij < 1 || ins.target_order % pij != 0) div_ok = false;
    r.add("instruction-divisibility", div_ok);

    bool deg_ok = true;
    for (const auto& ins : oc.instructions) {
        long long total = 0;
        for (int pij : ins.source_orders) total += ins.target_order / pij;
        if (total != oc.degree) deg_ok = false;
    }
    r.add("instruction-degree-sums", deg_ok);

    // Source cones must be exactly the instruction entries above 1.
    std::vector<int> from_instructions;
    for (const auto& ins : oc.instructions)
        for (int pij : ins.source_orders)
            if (pij >= 2) from_instructions.push_back(pij);
    std::sort(from_instructions.begin(), from_instructions.end());
    r.add("source-cones-match", from_instructions == oc.source.cone_orders);

    Rational lhs = orbifold_euler_characteristic(oc.source);
    Rational rhs = orbifold_euler_characteristic(oc.target) * Rational(oc.degree);
    r.add("chi-orb-multiplicative", lhs == rhs,
          lhs.to_string() + " vs " + std::to_string(oc.degree) + " * chi_orb(target)");
    return r;
}

}  // namespace hurwitz
