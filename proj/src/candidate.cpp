#include "hurwitz/candidate.hpp"

#include <algorithm>
#include <cctype>

#include "hurwitz/euler.hpp"

namespace hurwitz {

int CandidateCover::total_length() const {
    int t = 0;
    for (const auto& p : partitions) t += p.length();
    return t;
}

bool CandidateCover::operator==(const CandidateCover& o) const {
    return base_genus == o.base_genus && cover_genus == o.cover_genus &&
           degree == o.degree && partitions == o.partitions;
}

bool CandidateCover::operator<(const CandidateCover& o) const {
    if (degree != o.degree) return degree < o.degree;
    if (base_genus != o.base_genus) return base_genus < o.base_genus;
    if (cover_genus != o.cover_genus) return cover_genus < o.cover_genus;
    return partitions < o.partitions;
}

bool canonical_partition_before(const Partition& a, const Partition& b) {
    if (a.max_part() != b.max_part()) return a.max_part() > b.max_part();
    if (a.length() != b.length()) return a.length() < b.length();
    return a.parts() > b.parts();
}

CandidateCover make_candidate(int base_genus, std::optional<int> cover_genus,
                              int degree, std::vector<Partition> partitions) {
    if (degree < 2) throw CandidateError("degree must be at least 2");
    if (base_genus < 0) throw CandidateError("negative base genus");
    if (partitions.empty()) throw CandidateError("candidate needs at least one partition");
    for (const auto& p : partitions) {
        if (p.sum() != degree)
            throw CandidateError("partition " + p.to_string() + " does not sum to " +
                                 std::to_string(degree));
        if (!p.has_entry_above_one())
            throw CandidateError("partition " + p.to_string() + " has no entry above 1");
    }
    std::sort(partitions.begin(), partitions.end(), canonical_partition_before);

    CandidateCover c;
    c.base_genus = base_genus;
    c.degree = degree;
    c.partitions = std::move(partitions);

    long long chi_cover = cover_euler_characteristic(c);
    if (chi_cover % 2 != 0)
        throw CandidateError("Riemann-Hurwitz gives odd cover Euler characteristic " +
                             std::to_string(chi_cover));
    if (chi_cover > 2)
        throw CandidateError("Riemann-Hurwitz gives cover Euler characteristic " +
                             std::to_string(chi_cover) + " > 2");
    int derived = static_cast<int>((2 - chi_cover) / 2);
    if (cover_genus && *cover_genus != derived)
        throw CandidateError("supplied cover genus " + std::to_string(*cover_genus) +
                             " disagrees with Riemann-Hurwitz genus " + std::to_string(derived));
    c.cover_genus = derived;
    return c;
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool peek_is(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }
    bool try_keyword(const std::string& kw) {
        skip_ws();
        if (s.compare(i, kw.size(), kw) == 0) {
            i += kw.size();
            return true;
        }
        return false;
    }
    int read_int() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError("expected integer at position " + std::to_string(start));
        long long v = 0;
        for (size_t j = start; j < i; ++j) {
            v = v * 10 + (s[j] - '0');
            if (v > 1'000'000'000) throw ParseError("integer too large");
        }
        return static_cast<int>(v);
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
};

std::vector<int> read_int_list(Cursor& cur) {
    std::vector<int> out;
    if (!cur.eat('(')) throw ParseError("expected '('");
    out.push_back(cur.read_int());
    while (cur.eat(',')) out.push_back(cur.read_int());
    if (!cur.eat(')')) throw ParseError("expected ')' or ','");
    return out;
}

}  // namespace

namespace {

struct RawCandidate {
    std::optional<int> cover_genus;
    int base_genus = 0;
    int degree = 0;
    std::vector<Partition> partitions;
};

RawCandidate parse_raw(const std::string& text) {
    Cursor cur{text};
    RawCandidate raw;

    if (cur.try_keyword("g=")) {
        int g = cur.read_int();
        cur.skip_ws();
        if (cur.try_keyword("->")) {
            raw.cover_genus = g;
            if (cur.try_keyword("g=")) raw.base_genus = cur.read_int();
        } else {
            raw.base_genus = g;
        }
    }

    raw.degree = cur.read_int();
    if (!cur.eat(':')) throw ParseError("expected ':' after degree");

    while (cur.peek_is('(')) {
        std::vector<int> entries = read_int_list(cur);
        for (int e : entries)
            if (e < 1) throw ParseError("partition entry below 1");
        raw.partitions.emplace_back(std::move(entries));
    }
    if (!cur.done()) throw ParseError("trailing input at position " + std::to_string(cur.i));
    if (raw.partitions.empty()) throw ParseError("expected at least one partition");
    return raw;
}

}  // namespace

CandidateCover parse_candidate(const std::string& text) {
    RawCandidate raw = parse_raw(text);
    return make_candidate(raw.base_genus, raw.cover_genus, raw.degree,
                          std::move(raw.partitions));
}

CandidateCover parse_candidate_unchecked(const std::string& text) {
    RawCandidate raw = parse_raw(text);
    CandidateCover c;
    c.base_genus = raw.base_genus;
    c.degree = raw.degree;
    c.partitions = std::move(raw.partitions);
    std::sort(c.partitions.begin(), c.partitions.end(), canonical_partition_before);
    if (raw.cover_genus) {
        c.cover_genus = *raw.cover_genus;
    } else {
        long long chi = cover_euler_characteristic(c);
        c.cover_genus = (chi % 2 == 0 && chi <= 2) ? static_cast<int>((2 - chi) / 2) : 0;
    }
    return c;
}

std::string format_candidate(const CandidateCover& c) {
    std::string out;
    if (c.base_genus != 0) {
        out += "g=" + std::to_string(c.cover_genus) + " -> g=" +
               std::to_string(c.base_genus) + " ";
    }
    out += std::to_string(c.degree) + ": ";
    for (const auto& p : c.partitions) out += p.to_string();
    return out;
}

}  // namespace hurwitz
