#ifndef BRCALC_REESMOD_HPP
#define BRCALC_REESMOD_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "brcalc/brim.hpp"
#include "brcalc/sym_span.hpp"

namespace brcalc {

struct ReesOptions {
    FieldKind field = FieldKind::rationals;
    long c_max = 256;
    size_t product_cap = 2000000;
    std::optional<int> force_trunc; // testing knob: pin the truncation level
};

/// ell of the degree-n piece W modulo the R-module generated by `span`,
/// computed by Nakayama-certified truncated elimination. `input_maxdeg` seeds
/// the truncation schedule (max generator degree across the inputs).
Int certified_colength(RingPtr ring, int r, long n, const std::vector<SymElem>& span,
                       int input_maxdeg, const ReesOptions& opts = {});

/// BF(n) = ell(S_n(F) / R_n(M)) for a matrix-given module.
Int bf_general(const GeneratorMatrix& A, long n, const ReesOptions& opts = {});

/// Least s <= s_max with R_{s+1}(M) = N R_s(M), decided by certified-length
/// equality of nested spans; nullopt when no such s exists in range. For
/// direct-sum M every equality test is double-checked against the
/// per-component Nakayama span test. Throws when N is not inside M.
std::optional<int> reduction_number(const GeneratorMatrix& N, const GeneratorMatrix& M,
                                    int s_max, const ReesOptions& opts = {});

/// ell(R_{n+1}(M) / M R_n(N)); N must be a reduction of M (caller-checked).
Int sally_length(const GeneratorMatrix& M, const GeneratorMatrix& N, long n,
                 const ReesOptions& opts = {});

struct SallyTable {
    std::vector<Int> values; // ell(S_n) for n = 0..n_max
    bool all_zero() const;
};

SallyTable sally_table(const GeneratorMatrix& M, const GeneratorMatrix& N, long n_max,
                       const ReesOptions& opts = {});

struct SallyIdentity {
    Int lhs; // BF(n)
    Int rhs; // br_0 C(n+r, r+1) + [ell(F/M) - br_0] C(n+r-1, r) - ell(S_{n-1})
    bool equal = false;
};

/// The exact length identity tying BF to the Sally module (dim R = 2, N a
/// minimal reduction with r+1 columns).
SallyIdentity verify_sally_identity(const IdealTuple& T, const GeneratorMatrix& N, long n,
                                    const ReesOptions& opts = {}, const FitOptions& fit = {});

/// Checks BF(n+1) = ell(F/N) C(n+r+1, r+1) - ell(M/N) C(n+r, r), the
/// reduction-number-one closed form.
bool verify_rn1_formula(const GeneratorMatrix& M, const GeneratorMatrix& N, long n,
                        const ReesOptions& opts = {});

/// a J + b I = I J for a in I, b in J (joint reduction number zero witness).
/// Monomial a, b compare staircases; general elements go through the
/// certified truncated comparison.
bool verify_joint_reduction(const Poly& a, const Poly& b, const MonomialIdeal& I,
                            const MonomialIdeal& J, const ReesOptions& opts = {});

struct RandomReductionOptions {
    int s_max = 6;
    int retries = 8;
    ReesOptions rees;
};

/// d + r - 1 random integer combinations of the columns of M, retried until
/// reduction_number confirms a reduction. Deterministic in the seed.
GeneratorMatrix random_minimal_reduction(const GeneratorMatrix& M, uint64_t seed,
                                         const RandomReductionOptions& opts = {});

/// Direct-sum fast path: do the images of `gens` generate
/// (+_w I^w) / m (+_w I^w) in degree n? Requires gens inside R_n(M).
bool spans_degree_mod_m(const IdealTuple& T, long n, const std::vector<SymElem>& gens,
                        FieldKind field = FieldKind::rationals);

} // namespace brcalc

#endif
