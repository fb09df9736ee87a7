#include "linkchroma/coloring.hpp"

#include <algorithm>
#include <set>

namespace linkchroma {

IntMatrix coloring_matrix(const LinkDiagram& d) {
    const int k = static_cast<int>(d.crossings.size());
    IntMatrix m(k, d.arc_count);
    for (int i = 0; i < k; ++i) {
        const Crossing& c = d.crossings[i];
        m.at(i, c.over) += -2;
        m.at(i, c.under_in) += 1;
        m.at(i, c.under_out) += 1;
    }
    return m;
}

Int determinant(const LinkDiagram& d) {
    IntMatrix m = coloring_matrix(d);
    return first_minor_abs(m, m.rows() - 1, m.cols() - 1);
}

std::vector<Int> prime_factors(const Int& n) {
    std::vector<Int> out;
    Int m = n;
    for (Int p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) out.push_back(m);
    return out;
}

ColoringClass classify(const Coloring& c) {
    ColoringClass cls;
    const Int& n = c.modulus;
    std::set<Int> palette;
    for (const Int& v : c.values) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        palette.insert(r);
    }
    cls.palette_size = static_cast<int>(palette.size());
    cls.is_trivial = cls.palette_size <= 1;
    for (const Int& p : prime_factors(n)) {
        bool ptriv = true;
        for (const Int& v : c.values)
            if ((v - c.values[0]) % p != 0) {
                ptriv = false;
                break;
            }
        if (ptriv) cls.p_trivial_primes.push_back(p);
    }
    cls.is_effective = !cls.is_trivial && cls.p_trivial_primes.empty();
    return cls;
}

int theorem_lower_bound(const Int& n) {
    int l = 1;
    Int pow = 1;  // 2^(l-1)
    while (pow < n) {
        pow *= 2;
        ++l;
    }
    return l;
}

bool is_affine_canonical(const std::vector<Int>& values, const Int& n) {
    if (values.empty() || values[0] != 0) return false;
    for (Int a = 2; a < n; ++a) {
        if (gcd(a, n) != 1) continue;
        // compare a*values against values lexicographically
        for (const Int& v : values) {
            Int w;
            Int av = a * v;
            mpz_fdiv_r(w.get_mpz_t(), av.get_mpz_t(), n.get_mpz_t());
            if (w < v) return false;
            if (w > v) break;
        }
    }
    return true;
}

ColoringEnumerator::ColoringEnumerator(const LinkDiagram& d, const Int& n, const EnumOptions& opts)
    : n_(n), opts_(opts), kernel_(solve_mod_n(coloring_matrix(d), n)), it_(kernel_.iterate()) {
    if (opts.cap >= 0 && kernel_.solution_count() > static_cast<long>(opts.cap))
        throw CapExceededError("kernel holds " + kernel_.solution_count().get_str() +
                               " solutions, cap is " + std::to_string(opts.cap));
}

bool ColoringEnumerator::next(Coloring& c, ColoringClass& cls) {
    std::vector<Int> x;
    while (it_.next(x)) {
        if (opts_.canonical_only && !is_affine_canonical(x, n_)) continue;
        Coloring cand{n_, x};
        ColoringClass k = classify(cand);
        if (opts_.filter == Filter::Nontrivial && k.is_trivial) continue;
        if (opts_.filter == Filter::Effective && !k.is_effective) continue;
        c = std::move(cand);
        cls = std::move(k);
        return true;
    }
    return false;
}

std::vector<std::pair<Coloring, ColoringClass>> enumerate_colorings(const LinkDiagram& d, const Int& n,
                                                                    const EnumOptions& opts) {
    ColoringEnumerator e(d, n, opts);
    std::vector<std::pair<Coloring, ColoringClass>> out;
    Coloring c;
    ColoringClass cls;
    while (e.next(c, cls)) out.emplace_back(c, cls);
    return out;
}

std::optional<int> min_colors_on_diagram(const LinkDiagram& d, const Int& n, Filter filter,
                                         long long cap) {
    if (filter == Filter::All) filter = Filter::Nontrivial;
    EnumOptions opts{filter, cap, /*canonical_only=*/true};
    ColoringEnumerator e(d, n, opts);
    std::optional<int> best;
    Coloring c;
    ColoringClass cls;
    while (e.next(c, cls))
        if (!best || cls.palette_size < *best) best = cls.palette_size;
    return best;
}

}  // namespace linkchroma
