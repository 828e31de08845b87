#pragma once

#include <sstream>
#include <string>

#include "sweights/delta_cube.hpp"
#include "sweights/lpb.hpp"

namespace sweights {

namespace detail {

inline std::string mask_string(int n, std::uint32_t mask) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) s[i] = '1';
    return s;
}

}  // namespace detail

// Vertices grouped bottom-up by Hamming weight, arcs labeled by their value.
inline std::string cube_to_dot(const DeltaCube& cube) {
    if (cube.n > 16) throw DomainError("cube too large to render");
    std::ostringstream out;
    out << "digraph delta_cube {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (int h = 0; h <= cube.n; ++h) {
        out << "  { rank=same;";
        for (std::uint32_t m = 0; m < static_cast<std::uint32_t>(cube.vertices()); ++m)
            if (__builtin_popcount(m) == h) out << " \"" << detail::mask_string(cube.n, m) << "\";";
        out << " }\n";
    }
    for (std::uint32_t m = 0; m < static_cast<std::uint32_t>(cube.vertices()); ++m)
        for (int i = 0; i < cube.n; ++i)
            if (cube.has_arc(m, i))
                out << "  \"" << detail::mask_string(cube.n, m) << "\" -> \""
                    << detail::mask_string(cube.n, m | 1u << i) << "\" [label=\"" << cube.at(m, i) << "\"];\n";
    out << "}\n";
    return out.str();
}

// Hasse diagram with per-element label and block size.
inline std::string lpb_to_dot(const LpbStructure& s) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int b = 0; b < s.m(); ++b)
        out << "  v" << (b + 1) << " [label=\"" << (b + 1) << ": L=" << s.labels[b]
            << ", k=" << s.block_size(b) << "\"];\n";
    for (auto [a, b] : s.poset.cover_relations()) out << "  v" << a << " -> v" << b << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string poset_to_dot(const Poset& p) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (int a = 1; a <= p.m(); ++a) out << "  v" << a << " [label=\"" << a << "\"];\n";
    for (auto [a, b] : p.cover_relations()) out << "  v" << a << " -> v" << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace sweights
