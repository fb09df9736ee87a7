#pragma once

#include <optional>

#include "linkchroma/diagram.hpp"
#include "linkchroma/exactlin.hpp"

namespace linkchroma {

/// Residues mod n assigned to arcs.
struct Coloring {
    Int modulus;
    std::vector<Int> values;
};

struct ColoringClass {
    bool is_trivial = false;
    std::vector<Int> p_trivial_primes;  // prime factors p of n with all values equal mod p
    bool is_effective = false;
    int palette_size = 0;  // distinct residues used
};

enum class Filter { All, Nontrivial, Effective };

/// Crossing-by-arc matrix of the coloring equations: -2 on the over arc's
/// column, +1 on each under arc's, accumulated when arcs coincide. Every row
/// sums to zero.
IntMatrix coloring_matrix(const LinkDiagram& d);

/// |first minor| of the coloring matrix (last row and column dropped).
Int determinant(const LinkDiagram& d);

std::vector<Int> prime_factors(const Int& n);

ColoringClass classify(const Coloring& c);

/// Smallest l with 2^(l-1) >= n.
int theorem_lower_bound(const Int& n);

/// True when values[0] == 0 and the vector is lexicographically minimal over
/// multiplication by units mod n: one representative per affine orbit
/// a*x + b among nontrivial colorings.
bool is_affine_canonical(const std::vector<Int>& values, const Int& n);

struct EnumOptions {
    Filter filter = Filter::All;
    long long cap = 1'000'000;   // max kernel solutions walked; exceeding throws
    bool canonical_only = false;
};

/// Streams (coloring, classification) pairs for solutions of the coloring
/// system mod n, in the deterministic kernel order. Throws CapExceededError
/// up front if the kernel holds more than `cap` solutions.
class ColoringEnumerator {
public:
    ColoringEnumerator(const LinkDiagram& d, const Int& n, const EnumOptions& opts);
    bool next(Coloring& c, ColoringClass& cls);

private:
    Int n_;
    EnumOptions opts_;
    ModKernel kernel_;
    ModKernel::Iterator it_;
};

std::vector<std::pair<Coloring, ColoringClass>> enumerate_colorings(const LinkDiagram& d, const Int& n,
                                                                    const EnumOptions& opts);

/// Minimal palette size over colorings of this diagram passing the filter;
/// nullopt when none qualifies. Only affine-canonical representatives are
/// examined (palette size is affine-invariant).
std::optional<int> min_colors_on_diagram(const LinkDiagram& d, const Int& n, Filter filter,
                                         long long cap = 1'000'000);

}  // namespace linkchroma
