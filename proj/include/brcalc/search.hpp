#ifndef BRCALC_SEARCH_HPP
#define BRCALC_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "brcalc/brim.hpp"
#include "brcalc/reesmod.hpp"

namespace brcalc {

/// Controls the random m-primary ideals drawn by `search`.
struct GeneratorProfile {
    int min_gens = 2;
    int max_gens = 4;
    int min_deg = 1;
    int max_deg = 5;
    bool equal_ideals = false; // one ideal repeated r times
    bool parameter = false;    // pure-power parameter ideals only
};

/// Deterministic in the rng state: pure powers on every axis (m-primary by
/// construction) plus extra random monomials per the profile.
MonomialIdeal random_mprimary_ideal(const RingPtr& ring, std::mt19937_64& rng,
                                    const GeneratorProfile& profile);

struct SearchRecord {
    long trial = 0;
    uint64_t trial_seed = 0;
    std::string tuple;
    int d = 0;
    int r = 0;
    Int br0, br1, colength_FM, slack;
    std::string flag; // violation | equality | strict | error
    std::optional<bool> reduction_le1;
    std::string error;
};

struct SearchOptions {
    int dim = 2;
    std::vector<Monomial> relations;
    int rank = 2;
    long trials = 0;
    uint64_t seed = 0;
    GeneratorProfile profile;
    /// For every trial also test whether a random minimal reduction has
    /// reduction number <= 1 (the equality criterion).
    bool verify_reductions = false;
    FitOptions fit;
    ReesOptions rees;
};

/// Seeded randomized sweep over tuples; per-trial failures are recorded, not
/// propagated. Trials are independent and run on the worker pool; records
/// come back in trial order.
std::vector<SearchRecord> search(const SearchOptions& opts);

bool any_violation(const std::vector<SearchRecord>& records);

} // namespace brcalc

#endif
