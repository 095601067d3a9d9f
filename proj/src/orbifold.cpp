#include "hurwitz/orbifold.hpp"

#include <algorithm>
#include <cctype>

namespace hurwitz {

Orbifold make_orbifold(int genus, std::vector<int> cone_orders) {
    if (genus < 0) throw CandidateError("negative genus");
    for (int p : cone_orders)
        if (p < 2) throw CandidateError("cone order below 2");
    std::sort(cone_orders.begin(), cone_orders.end());
    return Orbifold{genus, std::move(cone_orders)};
}

namespace {

std::vector<int> parse_cone_list(const std::string& s, size_t& i) {
    std::vector<int> cones;
    if (i >= s.size() || s[i] != '(') return cones;
    ++i;
    while (true) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError("expected cone order");
        cones.push_back(std::stoi(s.substr(start, i - start)));
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i < s.size() && s[i] == ',') {
            ++i;
            continue;
        }
        if (i < s.size() && s[i] == ')') {
            ++i;
            return cones;
        }
        throw ParseError("expected ',' or ')' in cone list");
    }
}

}  // namespace

Orbifold parse_orbifold(const std::string& text) {
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i >= text.size()) throw ParseError("empty orbifold");

    int genus;
    char c = text[i];
    if (c == 'S') {
        genus = 0;
        ++i;
    } else if (c == 'T') {
        genus = 1;
        ++i;
    } else if (c == 'G') {
        ++i;
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw ParseError("expected genus after 'G'");
        genus = std::stoi(text.substr(start, i - start));
    } else {
        throw ParseError("expected 'S', 'T' or 'G<k>'");
    }
    skip();
    std::vector<int> cones = parse_cone_list(text, i);
    skip();
    if (i != text.size()) throw ParseError("trailing input in orbifold");
    return make_orbifold(genus, std::move(cones));
}

std::string format_orbifold(const Orbifold& x) {
    std::string out;
    if (x.genus == 0)
        out = "S";
    else if (x.genus == 1 && x.cone_orders.empty())
        return "T";
    else
        out = "G" + std::to_string(x.genus);
    if (!x.cone_orders.empty()) {
        out += '(';
        for (size_t i = 0; i < x.cone_orders.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(x.cone_orders[i]);
        }
        out += ')';
    }
    return out;
}

std::string to_string(GeometryClass g) {
    switch (g) {
        case GeometryClass::Bad: return "bad";
        case GeometryClass::Spherical: return "spherical";
        case GeometryClass::Euclidean: return "euclidean";
        case GeometryClass::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

std::string format_orbifold_cover(const OrbifoldCover& oc) {
    std::string out = format_orbifold(oc.source) + " -> " + format_orbifold(oc.target) +
                      "  d=" + std::to_string(oc.degree);
    for (const auto& ins : oc.instructions) {
        out += "  (";
        for (size_t j = 0; j < ins.source_orders.size(); ++j) {
            if (j) out += ',';
            out += std::to_string(ins.source_orders[j]);
        }
        out += ")->" + std::to_string(ins.target_order);
    }
    return out;
}

}  // namespace hurwitz
