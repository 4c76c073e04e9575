#include "brcalc/brim.hpp"

#include <stdexcept>

#include "brcalc/compositions.hpp"
#include "brcalc/parallel.hpp"

namespace brcalc {

Int BuchsbaumRimFunction::operator()(long n) {
    if (n < 0) throw std::invalid_argument("bf_direct_sum: n must be >= 0");
    if (n == 0) return 0;
    const int r = ev_.tuple().rank();
    auto grid = compositions_of(static_cast<int>(n), r);
    // Build the product ideals serially (they share the memo), then count in
    // parallel and fold in grid order.
    for (const auto& u : grid) ev_.power_product(u);
    std::vector<Int> parts(grid.size());
    parallel_for(grid.size(), [&](size_t i) {
        parts[i] = colength(ev_.power_product(grid[i]));
    });
    Int total = 0;
    for (size_t i = 0; i < grid.size(); ++i) {
        ev_.note_value(grid[i], parts[i]);
        total += parts[i];
    }
    return total;
}

Int bf_direct_sum(const IdealTuple& T, long n) {
    BuchsbaumRimFunction bf(T);
    return bf(n);
}

std::pair<BinomialPoly, FitDiagnostics>
bp_polynomial(const IdealTuple& T, const FitOptions& opts) {
    const int degree = T.ring()->krull_dim() + T.rank() - 1;
    BuchsbaumRimFunction bf(T);
    return fit_stable([&](long n) { return bf(n); }, degree, opts);
}

std::pair<Int, Int> br_prop23(const IdealTuple& T, const FitOptions& opts) {
    const int d = T.ring()->krull_dim();
    MultiBinomialPoly p = bhatt_polynomial(T, opts).first;
    Int Ed = mixed_E(p, d);
    Int Ed1 = d >= 1 ? mixed_E(p, d - 1) : Int(0);
    return {Ed, Int(d - 1) * Ed - Ed1};
}

BinomialPoly bp_equal_ideal(const MonomialIdeal& I, int r, const FitOptions& opts) {
    if (r < 1) throw std::invalid_argument("bp_equal_ideal: rank must be >= 1");
    const int d = I.ring()->krull_dim();
    BinomialPoly hs = hs_polynomial(I, opts).first;
    const int degree = d + r - 1;
    // The product with C(n+r-1, r-1) is a polynomial identity, so any
    // degree+1 consecutive values pin it down exactly.
    std::vector<std::pair<long, Int>> values;
    for (long n = 1; n <= degree + 1; ++n)
        values.emplace_back(n, hs.eval(n) * binomial(n + r - 1, r - 1));
    return fit_univariate(values, degree);
}

std::pair<Int, Int> br_thm41(const MonomialIdeal& I, int r, const FitOptions& opts) {
    if (r < 1) throw std::invalid_argument("br_thm41: rank must be >= 1");
    const int d = I.ring()->krull_dim();
    BinomialPoly hs = hs_polynomial(I, opts).first;
    const Int& e0 = hs.coeff(0);
    Int e1 = d >= 1 ? hs.coeff(1) : Int(0);
    Int br0 = e0 * binomial(d + r - 1, r - 1);
    Int br1 = e0 * (d - 1) * binomial(d + r - 2, r - 2) + e1 * binomial(d + r - 2, r - 1);
    return {br0, br1};
}

} // namespace brcalc
