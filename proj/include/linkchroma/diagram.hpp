#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace linkchroma {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

struct DiagramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Planar diagram code: one 4-tuple of edge labels per crossing, listed
/// counterclockwise from the incoming under-edge. Labels are 1..2k and each
/// appears exactly twice.
struct PDCode {
    std::vector<std::array<int, 4>> crossings;

    bool operator==(const PDCode&) const = default;
};

/// Parses "PD[X[a,b,c,d],...]" (whitespace-insensitive). Throws ParseError on
/// malformed syntax and DiagramError on label violations or an empty diagram.
PDCode parse_pd(std::string_view text);

/// Inverse of parse_pd, canonical spacing.
std::string to_text(const PDCode& pd);

/// One crossing in arc terms. For a kink the over arc may coincide with an
/// under arc.
struct Crossing {
    int over;
    int under_in;
    int under_out;
};

/// Fox-coloring view of a diagram: arcs break only at undercrossings, so the
/// two over-edges of each PD crossing are fused into one arc.
struct LinkDiagram {
    int arc_count = 0;
    std::vector<Crossing> crossings;
    int component_count = 0;

    bool has_kink() const;
};

LinkDiagram build_diagram(const PDCode& pd);

}  // namespace linkchroma
