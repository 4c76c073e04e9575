// Test-only oracles, deliberately independent of the library's computation
// paths: plain pairwise scans and direct lattice counting, no marking, no
// recursion, no memoization.
#ifndef BRCALC_TESTS_ORACLES_HPP
#define BRCALC_TESTS_ORACLES_HPP

#include <vector>

#include "brcalc/monomial_ideal.hpp"

namespace brcalc::oracles {

inline std::vector<Monomial> naive_minimal(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < gens.size() && keep; ++j) {
            if (i == j) continue;
            if (gens[j].divides(gens[i]) && !(gens[i].divides(gens[j]) && j > i)) keep = false;
        }
        if (keep) out.push_back(gens[i]);
    }
    return out;
}

inline bool naive_in_ideal(const MonomialIdeal& I, const Monomial& m) {
    for (const Monomial& g : I.gens())
        if (g.divides(m)) return true;
    for (const Monomial& q : I.ring()->relations())
        if (q.divides(m)) return true;
    return false;
}

// Counts standard monomials by scanning the full pure-power box and testing
// each point against every generator.
inline long naive_colength(const MonomialIdeal& I) {
    const int d = I.dim();
    std::vector<int> bound(static_cast<size_t>(d), -1);
    auto absorb = [&](const std::vector<Monomial>& gens) {
        for (const Monomial& g : gens) {
            int nz = 0, axis = -1;
            for (int j = 0; j < d; ++j)
                if (g[j] > 0) {
                    ++nz;
                    axis = j;
                }
            if (nz == 1 && (bound[static_cast<size_t>(axis)] < 0 ||
                            g[axis] < bound[static_cast<size_t>(axis)]))
                bound[static_cast<size_t>(axis)] = g[axis];
            if (nz == 0)
                for (int j = 0; j < d; ++j) bound[static_cast<size_t>(j)] = 0;
        }
    };
    absorb(I.gens());
    absorb(I.ring()->relations());
    for (int b : bound)
        if (b < 0) throw std::runtime_error("naive_colength: infinite");
    long count = 0;
    std::vector<int> p(static_cast<size_t>(d), 0);
    while (true) {
        if (!naive_in_ideal(I, Monomial(p))) ++count;
        int j = d - 1;
        while (j >= 0) {
            if (++p[static_cast<size_t>(j)] < bound[static_cast<size_t>(j)]) break;
            p[static_cast<size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
        // skip nothing: any point with a coordinate >= bound is inside
    }
    return count;
}

} // namespace brcalc::oracles

#endif
