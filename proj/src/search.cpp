#include "brcalc/search.hpp"

#include <algorithm>

#include "brcalc/parallel.hpp"
#include "brcalc/parse.hpp"

namespace brcalc {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

long rng_between(std::mt19937_64& rng, long lo, long hi) {
    // Plain modulo keeps the stream portable; the bias is irrelevant here.
    return lo + static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

} // namespace

MonomialIdeal random_mprimary_ideal(const RingPtr& ring, std::mt19937_64& rng,
                                    const GeneratorProfile& profile) {
    const int d = ring->dim();
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<Monomial> gens;
        for (int j = 0; j < d; ++j) {
            int a = static_cast<int>(rng_between(rng, profile.min_deg, profile.max_deg));
            gens.push_back(Monomial::var_power(d, j, std::max(a, 1)));
        }
        if (!profile.parameter) {
            int target = static_cast<int>(rng_between(rng, profile.min_gens, profile.max_gens));
            int extra = std::max(0, target - d);
            for (int k = 0; k < extra; ++k) {
                int deg = static_cast<int>(rng_between(rng, std::max(profile.min_deg, 1),
                                                       profile.max_deg));
                std::vector<int> exps(static_cast<size_t>(d), 0);
                int remaining = deg;
                for (int j = 0; j + 1 < d; ++j) {
                    int e = static_cast<int>(rng_between(rng, 0, remaining));
                    exps[static_cast<size_t>(j)] = e;
                    remaining -= e;
                }
                exps[static_cast<size_t>(d - 1)] = remaining;
                gens.emplace_back(exps);
            }
        }
        MonomialIdeal I(ring, std::move(gens));
        if (!I.is_zero() && !I.is_unit() && is_finite_colength(I)) return I;
    }
    throw ComputeError("random_mprimary_ideal: could not draw an m-primary ideal "
                       "(relations too restrictive?)");
}

std::vector<SearchRecord> search(const SearchOptions& opts) {
    if (opts.dim < 2) throw std::invalid_argument("search: requires dim >= 2");
    RingPtr ring = make_ring(opts.dim, opts.relations);
    std::vector<SearchRecord> records(static_cast<size_t>(std::max<long>(opts.trials, 0)));

    parallel_for(records.size(), [&](size_t t) {
        SearchRecord& rec = records[t];
        rec.trial = static_cast<long>(t);
        rec.trial_seed = splitmix64(opts.seed ^ splitmix64(static_cast<uint64_t>(t)));
        std::mt19937_64 rng(rec.trial_seed);
        try {
            std::vector<MonomialIdeal> ideals;
            if (opts.profile.equal_ideals) {
                MonomialIdeal I = random_mprimary_ideal(ring, rng, opts.profile);
                for (int i = 0; i < opts.rank; ++i) ideals.push_back(I);
            } else {
                for (int i = 0; i < opts.rank; ++i)
                    ideals.push_back(random_mprimary_ideal(ring, rng, opts.profile));
            }
            IdealTuple tuple(std::move(ideals));
            rec.tuple = to_string(tuple);
            rec.d = tuple.ring()->krull_dim();
            rec.r = tuple.rank();

            NorthcottOptions nopts;
            nopts.fit = opts.fit;
            NorthcottReport report = northcott_report(tuple, std::nullopt, nopts);
            rec.br0 = report.br0();
            rec.br1 = report.br1();
            rec.colength_FM = report.colength_FM;
            rec.slack = report.slack;
            rec.flag = report.slack < 0 ? "violation" : (report.slack == 0 ? "equality" : "strict");

            if (opts.verify_reductions) {
                GeneratorMatrix M = direct_sum_matrix(tuple);
                // Red(M) <= 1 is witnessed by any one generic reduction; a
                // few draws smooth over unlucky coefficient choices.
                bool le1 = false;
                const int draws = rec.flag == "equality" ? 4 : 2;
                const int target = tuple.ring()->krull_dim() + tuple.rank() - 1;
                for (int k = 0; k < draws && !le1; ++k) {
                    uint64_t cand_seed = splitmix64(rec.trial_seed + 1 + static_cast<uint64_t>(k));
                    std::mt19937_64 cand_rng(cand_seed);
                    std::vector<std::vector<Poly>> cols;
                    for (int c = 0; c < target; ++c) {
                        std::vector<Poly> col(static_cast<size_t>(M.rank()), Poly::zero(M.ring()));
                        for (int j = 0; j < M.cols(); ++j) {
                            Rat coeff(rng_between(cand_rng, -9, 9));
                            if (coeff == 0) continue;
                            for (int i = 0; i < M.rank(); ++i)
                                col[static_cast<size_t>(i)] =
                                    col[static_cast<size_t>(i)] + M.entry(i, j) * coeff;
                        }
                        cols.push_back(std::move(col));
                    }
                    try {
                        GeneratorMatrix N(M.ring(), M.rank(), std::move(cols));
                        auto rn = reduction_number(N, M, 1, opts.rees);
                        le1 = rn.has_value();
                    } catch (const ComputeError&) {
                        // degenerate draw (infinite colength); try again
                    }
                }
                rec.reduction_le1 = le1;
            }
        } catch (const std::exception& e) {
            rec.flag = "error";
            rec.error = e.what();
        }
    });
    return records;
}

bool any_violation(const std::vector<SearchRecord>& records) {
    for (const SearchRecord& r : records)
        if (r.flag == "violation") return true;
    return false;
}

} // namespace brcalc
