#ifndef BRCALC_BINOMIAL_POLY_HPP
#define BRCALC_BINOMIAL_POLY_HPP

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "brcalc/numeric.hpp"

namespace brcalc {

/// Integer polynomial in the alternating binomial basis
///   P(n) = sum_i (-1)^i b_i C(n + D - i - 1, D - i),
/// the shape Hilbert-Samuel and Buchsbaum-Rim polynomials are written in.
/// coeff(0), coeff(1), ... are e_0, e_1, ... (resp. br_0, br_1, ...).
class BinomialPoly {
public:
    BinomialPoly(int degree, std::vector<Int> coeffs);

    int degree() const { return degree_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }
    Int eval(long n) const;

    bool operator==(const BinomialPoly& other) const {
        return degree_ == other.degree_ && coeffs_ == other.coeffs_;
    }

private:
    int degree_;
    std::vector<Int> coeffs_; // size degree_+1
};

/// Polynomial in r variables in the product-binomial basis
///   P(u) = sum_alpha e_alpha C(u_1, alpha_1) ... C(u_r, alpha_r),
/// |alpha| <= maxdeg. Houses Bhattacharya polynomials.
struct MultiBinomialPoly {
    int nvars = 0;
    int maxdeg = 0;
    std::map<std::vector<int>, Int> coeffs; // only nonzero entries

    Int eval(const std::vector<int>& u) const;
    Int coeff(const std::vector<int>& alpha) const;
    bool operator==(const MultiBinomialPoly& other) const {
        return nvars == other.nvars && maxdeg == other.maxdeg && coeffs == other.coeffs;
    }
};

/// Evidence that a fitted polynomial really is the eventual polynomial: the
/// window it was solved on and how far beyond it the fit was re-checked.
struct FitDiagnostics {
    long window_start = 0;
    long window_len = 0;
    long verified_through = 0;
    bool stable = false;
};

struct FitOptions {
    long n_max = 24;  // largest sample index tried before giving up
    int extra = 3;    // verification points beyond the window
};

/// The fit window sits below the postulation number; sliding it up is the
/// recovery. Distinct from ComputeError so callers can retry.
struct NonIntegerFit : ComputeError {
    using ComputeError::ComputeError;
};

/// Exact solve of the (D+1)x(D+1) system through D+1 samples at consecutive
/// n. Throws NonIntegerFit when the solution is not integral.
BinomialPoly fit_univariate(const std::vector<std::pair<long, Int>>& values, int degree);

/// Slide-and-verify driver shared by every univariate fit in the toolkit:
/// fits on [n0, n0+D], re-checks `extra` further samples, and slides n0
/// upward until both succeed. Throws ComputeError past n_max.
std::pair<BinomialPoly, FitDiagnostics>
fit_stable(const std::function<Int(long)>& f, int degree, const FitOptions& opts = {});

} // namespace brcalc

#endif
