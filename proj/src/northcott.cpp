#include "brcalc/brim.hpp"
#include "brcalc/reesmod.hpp"

namespace brcalc {

NorthcottReport northcott_report(const IdealTuple& T,
                                 const std::optional<GeneratorMatrix>& with_reduction,
                                 const NorthcottOptions& opts) {
    NorthcottReport report;
    report.d = T.ring()->krull_dim();
    report.r = T.rank();
    report.colength_FM = T.colength_FM();

    auto [bp, diag] = bp_polynomial(T, opts.fit);
    report.br = bp;
    report.diagnostics = diag;

    // The verdict rests on (br_0, br_1); every independent route must agree.
    MultiBinomialPoly bhatt = bhatt_polynomial(T, opts.fit).first;
    Int Ed = mixed_E(bhatt, report.d);
    Int Ed1 = report.d >= 1 ? mixed_E(bhatt, report.d - 1) : Int(0);
    Int p23_br0 = Ed;
    Int p23_br1 = Int(report.d - 1) * Ed - Ed1;
    if (p23_br0 != bp.coeff(0) || p23_br1 != bp.coeff(1))
        throw std::logic_error("northcott_report: fitted Buchsbaum-Rim coefficients (" +
                               bp.coeff(0).str() + ", " + bp.coeff(1).str() +
                               ") disagree with the mixed-multiplicity route (" + p23_br0.str() +
                               ", " + p23_br1.str() + ")");
    if (T.equal_ideals()) {
        auto [t41_br0, t41_br1] = br_thm41(T.ideal(0), report.r, opts.fit);
        if (t41_br0 != bp.coeff(0) || t41_br1 != bp.coeff(1))
            throw std::logic_error("northcott_report: fitted Buchsbaum-Rim coefficients "
                                   "disagree with the equal-ideal closed form (" +
                                   t41_br0.str() + ", " + t41_br1.str() + ")");
        BinomialPoly closed = bp_equal_ideal(T.ideal(0), report.r, opts.fit);
        if (!(closed == bp))
            throw std::logic_error("northcott_report: fitted polynomial disagrees with the "
                                   "equal-ideal product closed form");
    }

    report.slack = report.colength_FM - (bp.coeff(0) - bp.coeff(1));
    report.inequality_holds = report.slack >= 0;
    report.equality = report.slack == 0;

    if (report.d == 1)
        report.warnings.push_back("dim R = 1: the inequality br_0 - br_1 <= l(F/M) can fail "
                                  "in dimension one");
    else if (report.d != 2)
        report.warnings.push_back("dim R = " + std::to_string(report.d) +
                                  ": whether br_0 - br_1 <= l(F/M) always holds is open "
                                  "beyond dimension two");

    // Mixed multiplicities of a genuine Bhattacharya polynomial should be
    // non-negative in the top layer; surface violations, never hide them.
    for (const auto& [alpha, e] : bhatt.coeffs) {
        int total = 0;
        for (int a : alpha) total += a;
        if (total == report.d && e < 0) {
            std::string key;
            for (int a : alpha) key += std::to_string(a);
            report.warnings.push_back("negative mixed multiplicity e_" + key + " = " + e.str());
        }
    }

    if (with_reduction) {
        ReesOptions rees;
        rees.field = opts.field;
        rees.c_max = opts.c_max;
        ReductionEvidence evidence{*with_reduction, std::nullopt, opts.s_max};
        evidence.reduction_number =
            reduction_number(*with_reduction, direct_sum_matrix(T), opts.s_max, rees);
        if (!evidence.reduction_number)
            report.warnings.push_back("supplied matrix is not a reduction of M within s_max = " +
                                      std::to_string(opts.s_max));
        report.reduction_evidence = std::move(evidence);
    }
    return report;
}

} // namespace brcalc
