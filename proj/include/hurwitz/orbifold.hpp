#pragma once

#include <string>
#include <vector>

#include "hurwitz/candidate.hpp"

namespace hurwitz {

/// Closed orientable 2-orbifold: genus plus cone orders (each >= 2),
/// kept sorted non-decreasing.
struct Orbifold {
    int genus = 0;
    std::vector<int> cone_orders;

    int num_cones() const { return static_cast<int>(cone_orders.size()); }
    bool operator==(const Orbifold& o) const {
        return genus == o.genus && cone_orders == o.cone_orders;
    }
    bool operator<(const Orbifold& o) const {
        if (genus != o.genus) return genus < o.genus;
        return cone_orders < o.cone_orders;
    }
};

Orbifold make_orbifold(int genus, std::vector<int> cone_orders);

/// Grammar: "S" ["(" INT {"," INT} ")"] | "T" | "G" INT ["(" INT {"," INT} ")"].
Orbifold parse_orbifold(const std::string& text);

/// "S", "S(2,3,6)", "T", "G2(3,3)".
std::string format_orbifold(const Orbifold& x);

enum class GeometryClass { Bad, Spherical, Euclidean, Hyperbolic };

std::string to_string(GeometryClass g);

/// Covering instruction above one target cone point: the list of source
/// cone orders (p_{i1},...,p_{im_i}), 1-entries retained, mapping to p_i.
struct CoveringInstruction {
    int target_order = 1;
    std::vector<int> source_orders;  // ascending, length m_i
};

/// Candidate 2-orbifold cover with covering instructions, one instruction
/// per branching point of the inducing surface candidate (same order).
struct OrbifoldCover {
    Orbifold source;
    Orbifold target;
    int degree = 0;
    std::vector<CoveringInstruction> instructions;
};

/// "S(2) -> S(2,3,3)  d=9  (1,1,1,1,2)->2 (1,1,1)->3 (1,1,1)->3"
std::string format_orbifold_cover(const OrbifoldCover& oc);

}  // namespace hurwitz
