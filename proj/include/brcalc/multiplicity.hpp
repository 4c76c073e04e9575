#ifndef BRCALC_MULTIPLICITY_HPP
#define BRCALC_MULTIPLICITY_HPP

#include <map>
#include <utility>
#include <vector>

#include "brcalc/binomial_poly.hpp"
#include "brcalc/ideal_tuple.hpp"
#include "brcalc/monomial_ideal.hpp"

namespace brcalc {

/// Hilbert-Samuel polynomial of an m-primary ideal: samples ell(R/I^n) and
/// slide-fits at degree = Krull dimension. coeff(i) is e_i in the alternating
/// convention e_0 C(n+d-1,d) - e_1 C(n+d-2,d-1) + ...
std::pair<BinomialPoly, FitDiagnostics>
hs_polynomial(const MonomialIdeal& I, const FitOptions& opts = {});

/// ell(R/I_1^{u_1} ... I_r^{u_r}).
Int bhatt_function(const IdealTuple& T, const std::vector<int>& u);

/// Caches power products I^u along the lattice walk so that grid evaluations
/// share work. colength values are memoized as well.
class BhattEvaluator {
public:
    explicit BhattEvaluator(IdealTuple T) : tuple_(std::move(T)) {}

    const IdealTuple& tuple() const { return tuple_; }
    const MonomialIdeal& power_product(const std::vector<int>& u);
    Int value(const std::vector<int>& u);
    /// Record a value computed elsewhere (e.g. by a parallel worker).
    void note_value(const std::vector<int>& u, Int v) { values_.emplace(u, std::move(v)); }

private:
    IdealTuple tuple_;
    std::map<std::vector<int>, MonomialIdeal> products_;
    std::map<std::vector<int>, Int> values_;
};

/// Bhattacharya polynomial: total degree = Krull dimension, fitted by layer
/// peeling of iterated forward differences on a shifted grid, slid upward
/// until two consecutive shifts agree and extra grid points verify.
std::pair<MultiBinomialPoly, FitDiagnostics>
bhatt_polynomial(const IdealTuple& T, const FitOptions& opts = {});

/// E_i = sum of e_alpha over |alpha| = i.
Int mixed_E(const MultiBinomialPoly& p, int i);
Int mixed_E(const IdealTuple& T, int i);

} // namespace brcalc

#endif
