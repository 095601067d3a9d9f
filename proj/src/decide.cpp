#include "hurwitz/decide.hpp"

#include <algorithm>

#include "hurwitz/euler.hpp"
#include "hurwitz/quadform.hpp"

namespace hurwitz {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Realizable: return "REALIZABLE";
        case Verdict::Exceptional: return "EXCEPTIONAL";
        case Verdict::Undecided: return "UNDECIDED";
    }
    return "?";
}

std::string Decision::to_string() const {
    std::string out = hurwitz::to_string(verdict) + " " + reason;
    if (xy) out += " x=" + std::to_string(xy->first) + " y=" + std::to_string(xy->second);
    if (hyp_row) out += " row=" + std::to_string(*hyp_row);
    if (family && !hyp_row)
        out += " case=" + std::to_string(family->case_id) +
               " family=" + std::to_string(family->family_index) +
               " k=" + std::to_string(family->k);
    return out;
}

// ---------------------------------------------------------------------------
// Euclidean family templates

namespace {

Partition rep_with_tail(int part, int count, std::vector<int> tail) {
    if (count < 0) throw CandidateError("negative repetition in family template");
    std::vector<int> parts(static_cast<size_t>(count), part);
    parts.insert(parts.end(), tail.begin(), tail.end());
    return Partition(std::move(parts));
}

}  // namespace

std::vector<Partition> euclidean_family_partitions(int case_id, int family_index, long long kk) {
    int k = static_cast<int>(kk);
    switch (case_id * 10 + family_index) {
        // torus source; family 1 is the self-cover of the torus, which no
        // base-S candidate induces
        case 2: return {rep_with_tail(2, k, {}), rep_with_tail(2, k, {}),
                        rep_with_tail(2, k, {}), rep_with_tail(2, k, {})};
        case 3: return {rep_with_tail(3, k, {}), rep_with_tail(3, k, {}),
                        rep_with_tail(3, k, {})};
        case 4: return {rep_with_tail(2, 2 * k, {}), rep_with_tail(4, k, {}),
                        rep_with_tail(4, k, {})};
        case 5: return {rep_with_tail(2, 3 * k, {}), rep_with_tail(3, 2 * k, {}),
                        rep_with_tail(6, k, {})};

        case 11: return {rep_with_tail(2, 2 * k, {1}), rep_with_tail(4, k, {1}),
                         rep_with_tail(4, k, {1})};
        case 12: return {rep_with_tail(2, 2 * k + 1, {}), rep_with_tail(4, k, {2}),
                         rep_with_tail(4, k, {1, 1})};
        case 13: return {rep_with_tail(2, 2 * k + 2, {}), rep_with_tail(4, k + 1, {}),
                         rep_with_tail(4, k, {2, 1, 1})};

        case 21: return {rep_with_tail(2, 3 * k, {1}), rep_with_tail(3, 2 * k, {1}),
                         rep_with_tail(6, k, {1})};
        case 22: return {rep_with_tail(2, 3 * k + 1, {1}), rep_with_tail(3, 2 * k + 1, {}),
                         rep_with_tail(6, k, {2, 1})};
        case 23: return {rep_with_tail(2, 3 * k + 2, {}), rep_with_tail(3, 2 * k + 1, {1}),
                         rep_with_tail(6, k, {3, 1})};
        case 24: return {rep_with_tail(2, 3 * k + 3, {}), rep_with_tail(3, 2 * k + 2, {}),
                         rep_with_tail(6, k, {3, 2, 1})};

        case 31: return {rep_with_tail(3, k, {1}), rep_with_tail(3, k, {1}),
                         rep_with_tail(3, k, {1})};
        case 32: return {rep_with_tail(3, k + 1, {}), rep_with_tail(3, k + 1, {}),
                         rep_with_tail(3, k, {1, 1, 1})};

        case 41: return {rep_with_tail(2, k, {1}), rep_with_tail(2, k, {1}),
                         rep_with_tail(2, k, {1}), rep_with_tail(2, k, {1})};
        case 42: return {rep_with_tail(2, k, {1, 1}), rep_with_tail(2, k, {1, 1}),
                         rep_with_tail(2, k + 1, {}), rep_with_tail(2, k + 1, {})};
        case 43: return {rep_with_tail(2, k, {1, 1, 1, 1}), rep_with_tail(2, k + 2, {}),
                         rep_with_tail(2, k + 2, {}), rep_with_tail(2, k + 2, {})};

        case 51: return {rep_with_tail(2, 3 * k, {}), rep_with_tail(3, 2 * k - 1, {1, 1, 1}),
                         rep_with_tail(6, k, {})};
        case 52: return {rep_with_tail(2, 3 * k + 1, {}), rep_with_tail(3, 2 * k, {1, 1}),
                         rep_with_tail(6, k, {2})};
        case 53: return {rep_with_tail(2, 3 * k + 2, {}), rep_with_tail(3, 2 * k + 1, {1}),
                         rep_with_tail(6, k, {2, 2})};
        case 54: return {rep_with_tail(2, 3 * k + 3, {}), rep_with_tail(3, 2 * k + 2, {}),
                         rep_with_tail(6, k, {2, 2, 2})};

        case 61: return {rep_with_tail(2, 2 * k, {1, 1, 1, 1}), rep_with_tail(4, k + 1, {}),
                         rep_with_tail(4, k + 1, {})};
        case 62: return {rep_with_tail(2, 2 * k + 1, {1, 1}), rep_with_tail(4, k, {2, 2}),
                         rep_with_tail(4, k + 1, {})};
        case 63: return {rep_with_tail(2, 2 * k, {1, 1}), rep_with_tail(4, k, {2}),
                         rep_with_tail(4, k, {2})};
        case 64: return {rep_with_tail(2, 2 * k + 2, {}), rep_with_tail(4, k, {2, 2}),
                         rep_with_tail(4, k, {2, 2})};
        case 65: return {rep_with_tail(2, 2 * k + 3, {}), rep_with_tail(4, k, {2, 2, 2}),
                         rep_with_tail(4, k + 1, {2})};
        case 66: return {rep_with_tail(2, 2 * k + 4, {}), rep_with_tail(4, k, {2, 2, 2, 2}),
                         rep_with_tail(4, k + 2, {})};

        case 71: return {rep_with_tail(2, 3 * k - 2, {1, 1, 1, 1}), rep_with_tail(3, 2 * k, {}),
                         rep_with_tail(6, k, {})};
        case 72: return {rep_with_tail(2, 3 * k, {1, 1, 1}), rep_with_tail(3, 2 * k + 1, {}),
                         rep_with_tail(6, k, {3})};
        case 73: return {rep_with_tail(2, 3 * k + 2, {1, 1}), rep_with_tail(3, 2 * k + 2, {}),
                         rep_with_tail(6, k, {3, 3})};
        case 74: return {rep_with_tail(2, 3 * k + 4, {1}), rep_with_tail(3, 2 * k + 3, {}),
                         rep_with_tail(6, k, {3, 3, 3})};
        case 75: return {rep_with_tail(2, 3 * k + 6, {}), rep_with_tail(3, 2 * k + 4, {}),
                         rep_with_tail(6, k, {3, 3, 3, 3})};
    }
    throw NoFamilyMatch("unknown euclidean case/family " + std::to_string(case_id) + "/" +
                        std::to_string(family_index));
}

int euclidean_family_count(int case_id) {
    switch (case_id) {
        case 0: return 5;
        case 1: return 3;
        case 2: return 4;
        case 3: return 2;
        case 4: return 3;
        case 5: return 4;
        case 6: return 6;
        case 7: return 5;
    }
    return 0;
}

namespace {

/// A template instance is admissible when its partitions are genuine (no
/// empty or all-1 partition) and the induced cover still lies in the case's
/// orbifold pair. The displayed families carry k >= 1; the k = 0 instance
/// survives this check exactly once (fourth family of the S(2,3,6)
/// self-cover at degree 6, where the tail (3,2,1) keeps lcm 6), and that
/// boundary candidate is as real as the rest of its family.
bool valid_family_instance(int case_id, int family_index, long long k);

}  // namespace

std::vector<EuclideanFamily> euclidean_families_for_degree(int case_id, int d) {
    std::vector<EuclideanFamily> out;
    auto push = [&](int family, long long k) {
        if (k >= 0 && valid_family_instance(case_id, family, k))
            out.push_back({case_id, family, k});
    };
    switch (case_id) {
        case 0:
            if (d % 2 == 0) push(2, d / 2);
            if (d % 3 == 0) push(3, d / 3);
            if (d % 4 == 0) push(4, d / 4);
            if (d % 6 == 0) push(5, d / 6);
            break;
        case 1:
            if (d % 4 == 1) push(1, (d - 1) / 4);
            if (d % 4 == 2) push(2, (d - 2) / 4);
            if (d % 4 == 0) push(3, (d - 4) / 4);
            break;
        case 2:
            if (d % 6 == 1) push(1, (d - 1) / 6);
            if (d % 6 == 3) push(2, (d - 3) / 6);
            if (d % 6 == 4) push(3, (d - 4) / 6);
            if (d % 6 == 0) push(4, (d - 6) / 6);
            break;
        case 3:
            if (d % 3 == 1) push(1, (d - 1) / 3);
            if (d % 3 == 0) push(2, (d - 3) / 3);
            break;
        case 4:
            if (d % 2 == 1) push(1, (d - 1) / 2);
            if (d % 2 == 0) push(2, (d - 2) / 2);
            if (d % 2 == 0) push(3, (d - 4) / 2);
            break;
        case 5:
            if (d % 6 == 0) push(1, d / 6);
            if (d % 6 == 2) push(2, (d - 2) / 6);
            if (d % 6 == 4) push(3, (d - 4) / 6);
            if (d % 6 == 0) push(4, (d - 6) / 6);
            break;
        case 6:
            if (d % 4 == 0) push(1, (d - 4) / 4);
            if (d % 4 == 0) push(2, (d - 4) / 4);
            if (d % 4 == 2) push(3, (d - 2) / 4);
            if (d % 4 == 0) push(4, (d - 4) / 4);
            if (d % 4 == 2) push(5, (d - 6) / 4);
            if (d % 4 == 0) push(6, (d - 8) / 4);
            break;
        case 7:
            if (d % 6 == 0) push(1, d / 6);
            if (d % 6 == 3) push(2, (d - 3) / 6);
            if (d % 6 == 0) push(3, (d - 6) / 6);
            if (d % 6 == 3) push(4, (d - 9) / 6);
            if (d % 6 == 0) push(5, (d - 12) / 6);
            break;
    }
    return out;
}

namespace {

int euclidean_case_of(const OrbifoldCover& oc);

bool valid_family_instance(int case_id, int family_index, long long k) {
    if (k >= 1) return true;
    try {
        std::vector<Partition> parts = euclidean_family_partitions(case_id, family_index, k);
        int d = parts[0].sum();
        CandidateCover c = make_candidate(0, std::nullopt, d, std::move(parts));
        OrbifoldCover oc = induced_orbifold_cover(c);
        if (case_id == 0)
            return oc.source.genus == 1 && oc.source.cone_orders.empty();
        return euclidean_case_of(oc) == case_id;
    } catch (const std::exception&) {
        return false;
    }
}

int euclidean_case_of(const OrbifoldCover& oc) {
    const std::vector<int>& src = oc.source.cone_orders;
    const std::vector<int>& tgt = oc.target.cone_orders;
    if (oc.source.genus == 1 && src.empty()) return 0;
    if (oc.source.genus != 0 || oc.target.genus != 0) return -1;
    const std::vector<int> s244 = {2, 4, 4}, s236 = {2, 3, 6}, s333 = {3, 3, 3},
                           s2222 = {2, 2, 2, 2};
    if (src == s244 && tgt == s244) return 1;
    if (src == s236 && tgt == s236) return 2;
    if (src == s333 && tgt == s333) return 3;
    if (src == s2222 && tgt == s2222) return 4;
    if (src == s333 && tgt == s236) return 5;
    if (src == s2222 && tgt == s244) return 6;
    if (src == s2222 && tgt == s236) return 7;
    return -1;
}

bool same_partition_multiset(const std::vector<Partition>& a, std::vector<Partition> b) {
    if (a.size() != b.size()) return false;
    std::sort(b.begin(), b.end(), canonical_partition_before);
    return a == b;  // `a` comes from a canonical candidate
}

}  // namespace

EuclideanFamily match_euclidean_family(const CandidateCover& c) {
    OrbifoldCover oc = induced_orbifold_cover(c);
    if (geometry_class(oc.source) != GeometryClass::Euclidean ||
        geometry_class(oc.target) != GeometryClass::Euclidean)
        throw NoFamilyMatch("induced cover is not between Euclidean orbifolds: " +
                            format_candidate(c));
    int case_id = euclidean_case_of(oc);
    if (case_id < 0)
        throw NoFamilyMatch("no Euclidean case for " + format_orbifold_cover(oc));
    for (const EuclideanFamily& fam : euclidean_families_for_degree(case_id, c.degree)) {
        std::vector<Partition> tmpl =
            euclidean_family_partitions(fam.case_id, fam.family_index, fam.k);
        if (same_partition_multiset(c.partitions, std::move(tmpl))) return fam;
    }
    throw NoFamilyMatch("no family template matches " + format_candidate(c) +
                        " in case " + std::to_string(case_id));
}

// ---------------------------------------------------------------------------
// Euclidean criteria

namespace {

struct FamilyCriterion {
    std::string tag;
    std::string citation;
    // Realizable iff eval returns true; xy filled for form criteria.
    bool always = false;
    bool never = false;
    long long modulus = 0;  // realizable iff d % modulus == 0, when set
    FormId form = FormId::X2_Y2;
    long long scale = 1;    // d = scale * form + offset
    long long offset = 0;
    bool use_form = false;
    Constraint constraint;
};

FamilyCriterion criterion_for(int case_id, int family_index) {
    FamilyCriterion cr;
    auto form = [&](FormId f, long long scale, long long offset, Constraint con,
                    std::string tag, std::string citation) {
        cr.use_form = true;
        cr.form = f;
        cr.scale = scale;
        cr.offset = offset;
        cr.constraint = con;
        cr.tag = std::move(tag);
        cr.citation = std::move(citation);
    };
    Constraint none{}, par{true, false, false}, nbe{false, true, false},
        mod3{false, false, true}, nbe_mod3{false, true, true};
    switch (case_id * 10 + family_index) {
        case 2: case 3: case 4: case 5:
            cr.always = true;
            cr.tag = "ALWAYS";
            cr.citation = "torus covers every Euclidean orbifold in every admissible degree";
            break;
        case 11:
            form(FormId::X2_Y2, 1, 0, par, "SUM2SQ",
                 "d = x^2+y^2 with x,y natural of different parity");
            break;
        case 12:
            form(FormId::X2_Y2, 2, 0, par, "2SUM2SQ",
                 "d = 2(x^2+y^2) with x,y natural of different parity");
            break;
        case 13:
            form(FormId::X2_Y2, 4, 0, none, "4SUM2SQ", "d = 4(x^2+y^2) with x,y natural");
            break;
        case 21:
            form(FormId::X2_XY_Y2, 1, 0, nbe_mod3, "LOESCHIAN",
                 "d = x^2+xy+y^2 with x,y natural, not both even, x != y mod 3");
            break;
        case 22:
            form(FormId::X2_3XY_3Y2, 3, 0, nbe, "3Q336",
                 "d = 3(x^2+3xy+3y^2) with x,y natural not both even");
            break;
        case 23:
            // Derived from the cone-lift congruences: lambda = n + w m with
            // n, m even and (n-m)/2 = 2 mod 3, so d = 4(a^2+ab+b^2) with
            // a != b mod 3. (The displayed 12(x^2+3xy+3y^2)+16 parametrizes
            // only the m-n=8 slice of that set; they first differ at d=76.)
            form(FormId::X2_XY_Y2, 4, 0, mod3, "4LOESCHIAN",
                 "d = 4(x^2+xy+y^2) with x,y natural, x != y mod 3");
            break;
        case 24:
            form(FormId::X2_3XY_3Y2, 12, 0, none, "12Q336",
                 "d = 12(x^2+3xy+3y^2) with x,y natural");
            break;
        case 31:
            form(FormId::X2_XY_Y2, 1, 0, mod3, "LOESCHIAN",
                 "d = x^2+xy+y^2 with x,y natural, x != y mod 3");
            break;
        case 32:
            form(FormId::X2_3XY_3Y2, 3, 0, none, "3Q336",
                 "d = 3(x^2+3xy+3y^2) with x,y natural");
            break;
        case 41: case 42:
            cr.always = true;
            cr.tag = "ALWAYS";
            cr.citation = "realizable for every admissible degree";
            break;
        case 43:
            cr.modulus = 4;
            cr.tag = "MOD4";
            cr.citation = "realizable iff d is a multiple of 4";
            break;
        case 51:
            form(FormId::X2_3XY_3Y2, 6, 0, none, "6Q336",
                 "d = 6(x^2+3xy+3y^2) with x,y natural");
            break;
        case 52:
            form(FormId::X2_XY_Y2, 2, 0, mod3, "2LOESCHIAN",
                 "d = 2(x^2+xy+y^2) with x,y natural, x != y mod 3");
            break;
        case 53:
            cr.never = true;
            cr.tag = "NEVER";
            cr.citation = "never realizable: the cone images force an impossible congruence";
            break;
        case 54:
            form(FormId::X2_3XY_3Y2, 6, 0, none, "6Q336",
                 "d = 6(x^2+3xy+3y^2) with x,y natural");
            break;
        case 61: case 62: case 63: case 64:
            cr.always = true;
            cr.tag = "ALWAYS";
            cr.citation = "realizable for every admissible degree";
            break;
        case 65:
            cr.never = true;
            cr.tag = "NEVER";
            cr.citation = "never realizable: two of three lattice pairs would need to be even "
                          "and the third odd";
            break;
        case 66:
            cr.modulus = 8;
            cr.tag = "MOD8";
            cr.citation = "realizable iff d is a multiple of 8";
            break;
        case 71: case 72: case 73:
            cr.always = true;
            cr.tag = "ALWAYS";
            cr.citation = "realizable for every admissible degree";
            break;
        case 74:
            cr.never = true;
            cr.tag = "NEVER";
            cr.citation = "never realizable: the cone images force an impossible parity split";
            break;
        case 75:
            cr.modulus = 12;
            cr.tag = "MOD12";
            cr.citation = "realizable iff d is a multiple of 12";
            break;
        default:
            throw NoFamilyMatch("no criterion for case/family");
    }
    return cr;
}

}  // namespace

Decision decide_euclidean(const CandidateCover& c) {
    EuclideanFamily fam = match_euclidean_family(c);
    FamilyCriterion cr = criterion_for(fam.case_id, fam.family_index);
    Decision dec;
    dec.family = fam;
    dec.reason = "EUCL_C" + std::to_string(fam.case_id) + "F" +
                 std::to_string(fam.family_index) + "_" + cr.tag;
    dec.citation = cr.citation;

    if (cr.always) {
        dec.verdict = Verdict::Realizable;
        return dec;
    }
    if (cr.never) {
        dec.verdict = Verdict::Exceptional;
        return dec;
    }
    if (cr.modulus) {
        dec.verdict = c.degree % cr.modulus == 0 ? Verdict::Realizable : Verdict::Exceptional;
        return dec;
    }
    long long value = c.degree - cr.offset;
    if (value < 0 || value % cr.scale != 0) {
        dec.verdict = Verdict::Exceptional;
        return dec;
    }
    auto xy = represent(cr.form, value / cr.scale, cr.constraint);
    if (xy) {
        dec.verdict = Verdict::Realizable;
        dec.xy = *xy;
    } else {
        dec.verdict = Verdict::Exceptional;
    }
    return dec;
}

// ---------------------------------------------------------------------------
// Positive chi and hyperbolic routes

Decision decide_positive(const OrbifoldCover& oc) {
    Rational chi = orbifold_euler_characteristic(oc.target);
    if (chi.sign() <= 0)
        throw CandidateError("decide_positive requires positive target Euler characteristic");
    Decision dec;
    if (geometry_class(oc.source) == GeometryClass::Bad &&
        geometry_class(oc.target) == GeometryClass::Spherical) {
        dec.verdict = Verdict::Exceptional;
        dec.reason = "POS_BAD_OVER_SPHERICAL";
        dec.citation = "bad orbifolds cover no good orbifold, so " + format_orbifold(oc.source) +
                       " admits no cover onto spherical " + format_orbifold(oc.target);
    } else {
        dec.verdict = Verdict::Realizable;
        dec.reason = "POS_REALIZABLE";
        dec.citation = "good positive-chi covers are realized by explicit sphere isometries";
    }
    return dec;
}

const std::vector<CandidateCover>& hyperbolic_table() {
    static const std::vector<CandidateCover> table = [] {
        auto mk = [](int d, std::vector<std::vector<int>> parts) {
            std::vector<Partition> ps;
            for (auto& v : parts) ps.emplace_back(std::move(v));
            return make_candidate(0, std::nullopt, d, std::move(ps));
        };
        std::vector<CandidateCover> t;
        t.push_back(mk(6, {{5, 1}, {4, 1, 1}, {2, 2, 2}}));
        t.push_back(mk(8, {{5, 1, 1, 1}, {4, 4}, {2, 2, 2, 2}}));
        t.push_back(mk(8, {{7, 1}, {3, 3, 1, 1}, {2, 2, 2, 2}}));
        t.push_back(mk(9, {{7, 1, 1}, {3, 3, 3}, {2, 2, 2, 2, 1}}));
        t.push_back(mk(10, {{8, 1, 1}, {3, 3, 3, 1}, {2, 2, 2, 2, 2}}));
        t.push_back(mk(12, {{8, 2, 1, 1}, {3, 3, 3, 3}, {2, 2, 2, 2, 2, 2}}));
        t.push_back(mk(12, {{9, 1, 1, 1}, {3, 3, 3, 3}, {2, 2, 2, 2, 2, 2}}));
        t.push_back(mk(16, {{7, 7, 1, 1}, {3, 3, 3, 3, 3, 1}, {2, 2, 2, 2, 2, 2, 2, 2}}));
        t.push_back(mk(24, {{7, 7, 7, 1, 1, 1}, {3, 3, 3, 3, 3, 3, 3, 3},
                            {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}}));
        return t;
    }();
    return table;
}

Decision decide_hyperbolic_triangular(const CandidateCover& c) {
    const auto& table = hyperbolic_table();
    Decision dec;
    for (size_t i = 0; i < table.size(); ++i) {
        if (table[i] == c) {
            int row = static_cast<int>(i) + 1;
            dec.hyp_row = row;
            dec.reason = "HYP_ROW_" + std::to_string(row);
            if (row == 2 || row == 8) {
                dec.verdict = Verdict::Exceptional;
                dec.citation = "census row " + std::to_string(row) +
                               " admits no compatible dessin";
            } else {
                dec.verdict = Verdict::Realizable;
                dec.citation = "census row " + std::to_string(row) +
                               " is realized by an explicit dessin";
            }
            return dec;
        }
    }
    dec.verdict = Verdict::Undecided;
    dec.reason = "HYP_TRIANGULAR_UNLISTED";
    dec.citation = "not one of the nine triangular hyperbolic candidates";
    return dec;
}

Decision decide(const CandidateCover& c) {
    if (c.base_genus >= 1) {
        Decision dec;
        dec.verdict = Verdict::Realizable;
        dec.reason = "BASE_CHI_NONPOSITIVE";
        dec.citation = "every candidate over a base of non-positive Euler characteristic "
                       "is realizable";
        return dec;
    }
    OrbifoldCover oc = induced_orbifold_cover(c);
    int sign = orbifold_euler_characteristic(oc.target).sign();
    if (sign > 0) return decide_positive(oc);
    if (sign == 0) return decide_euclidean(c);
    bool triangular = oc.source.genus == 0 && oc.source.num_cones() == 3 &&
                      oc.target.genus == 0 && oc.target.num_cones() == 3;
    if (triangular) return decide_hyperbolic_triangular(c);
    Decision dec;
    dec.verdict = Verdict::Undecided;
    dec.reason = "HYPERBOLIC_NONRIGID";
    dec.citation = "hyperbolic non-triangular orbifolds are flexible; no criterion applies";
    return dec;
}

}  // namespace hurwitz
