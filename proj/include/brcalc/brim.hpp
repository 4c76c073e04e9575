#ifndef BRCALC_BRIM_HPP
#define BRCALC_BRIM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brcalc/fields.hpp"
#include "brcalc/generator_matrix.hpp"
#include "brcalc/ideal_tuple.hpp"
#include "brcalc/multiplicity.hpp"

namespace brcalc {

/// Buchsbaum-Rim function of M = I_1 + ... + I_r in F = R^r via the identity
/// BF(n) = sum over |u| = n of ell(R/I^u). The per-u colengths are
/// independent jobs; aggregation is in lexicographic u order.
Int bf_direct_sum(const IdealTuple& T, long n);

/// Cached BF evaluator for fitting loops.
class BuchsbaumRimFunction {
public:
    explicit BuchsbaumRimFunction(const IdealTuple& T) : ev_(T) {}
    Int operator()(long n);

private:
    BhattEvaluator ev_;
};

/// Buchsbaum-Rim polynomial of degree d + r - 1 by slide-and-verify fitting
/// of BF samples; coeff(i) = br_i.
std::pair<BinomialPoly, FitDiagnostics>
bp_polynomial(const IdealTuple& T, const FitOptions& opts = {});

/// (br_0, br_1) = (E_d, (d-1) E_d - E_{d-1}) from the Bhattacharya
/// coefficients.
std::pair<Int, Int> br_prop23(const IdealTuple& T, const FitOptions& opts = {});

/// Closed form for M = I + ... + I (r copies): the fitted Hilbert-Samuel
/// polynomial times C(n+r-1, r-1), re-expanded in the binomial basis.
BinomialPoly bp_equal_ideal(const MonomialIdeal& I, int r, const FitOptions& opts = {});

/// (br_0, br_1) = (e_0 C(d+r-1, r-1), e_0 (d-1) C(d+r-2, r-2) + e_1 C(d+r-2, r-1)).
std::pair<Int, Int> br_thm41(const MonomialIdeal& I, int r, const FitOptions& opts = {});

struct ReductionEvidence {
    GeneratorMatrix matrix;
    std::optional<int> reduction_number; // empty: not a reduction within s_max
    int s_max = 0;
};

/// Everything the Northcott verdict rests on, cross-checked across the
/// independent routes to (br_0, br_1).
struct NorthcottReport {
    int d = 0; // Krull dimension
    int r = 0;
    Int colength_FM;
    BinomialPoly br{0, {Int(0)}};
    Int slack;
    bool inequality_holds = false;
    bool equality = false;
    std::optional<ReductionEvidence> reduction_evidence;
    FitDiagnostics diagnostics;
    std::vector<std::string> warnings;

    Int br0() const { return br.coeff(0); }
    Int br1() const { return br.degree() >= 1 ? br.coeff(1) : Int(0); }
};

struct NorthcottOptions {
    FitOptions fit;
    int s_max = 6;
    long c_max = 256;
    FieldKind field = FieldKind::rationals;
};

NorthcottReport northcott_report(const IdealTuple& T,
                                 const std::optional<GeneratorMatrix>& with_reduction = {},
                                 const NorthcottOptions& opts = {});

} // namespace brcalc

#endif
