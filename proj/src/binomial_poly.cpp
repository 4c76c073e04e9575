#include "brcalc/binomial_poly.hpp"

#include <stdexcept>

namespace brcalc {

BinomialPoly::BinomialPoly(int degree, std::vector<Int> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree_ < 0) throw std::invalid_argument("binomial poly: negative degree");
    if (coeffs_.size() != static_cast<size_t>(degree_) + 1)
        throw std::invalid_argument("binomial poly: need degree+1 coefficients");
}

Int BinomialPoly::eval(long n) const {
    Int v = 0;
    for (int i = 0; i <= degree_; ++i) {
        Int term = coeffs_[static_cast<size_t>(i)] * binomial(n + degree_ - i - 1, degree_ - i);
        if (i % 2 == 0)
            v += term;
        else
            v -= term;
    }
    return v;
}

Int MultiBinomialPoly::eval(const std::vector<int>& u) const {
    if (static_cast<int>(u.size()) != nvars)
        throw std::invalid_argument("multi binomial poly: wrong number of variables");
    Int v = 0;
    for (const auto& [alpha, e] : coeffs) {
        Int term = e;
        for (int j = 0; j < nvars; ++j)
            term *= binomial(u[static_cast<size_t>(j)], alpha[static_cast<size_t>(j)]);
        v += term;
    }
    return v;
}

Int MultiBinomialPoly::coeff(const std::vector<int>& alpha) const {
    auto it = coeffs.find(alpha);
    return it == coeffs.end() ? Int(0) : it->second;
}

BinomialPoly fit_univariate(const std::vector<std::pair<long, Int>>& values, int degree) {
    const int D = degree;
    const size_t m = static_cast<size_t>(D) + 1;
    if (values.size() < m)
        throw std::invalid_argument("fit_univariate: need at least degree+1 samples");
    for (size_t k = 1; k < m; ++k)
        if (values[k].first != values[k - 1].first + 1)
            throw std::invalid_argument("fit_univariate: samples must be at consecutive n");

    // Augmented system over the rationals for c_i = (-1)^i b_i.
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m + 1));
    for (size_t row = 0; row < m; ++row) {
        long n = values[row].first;
        for (size_t i = 0; i < m; ++i) {
            Int basis = binomial(n + D - static_cast<long>(i) - 1, D - static_cast<long>(i));
            a[row][i] = (i % 2 == 0) ? Rat(basis) : Rat(-basis);
        }
        a[row][m] = Rat(values[row].second);
    }
    for (size_t col = 0; col < m; ++col) {
        size_t piv = col;
        while (piv < m && a[piv][col] == 0) ++piv;
        // Consecutive sample points make the system nonsingular.
        if (piv == m) throw std::logic_error("fit_univariate: singular system at consecutive n");
        std::swap(a[col], a[piv]);
        for (size_t row = 0; row < m; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rat f = a[row][col] / a[col][col];
            for (size_t j = col; j <= m; ++j) a[row][j] -= f * a[col][j];
        }
    }
    std::vector<Int> coeffs(m);
    for (size_t i = 0; i < m; ++i) {
        Rat c = a[i][m] / a[i][i];
        if (!is_integer(c))
            throw NonIntegerFit("fit_univariate: non-integer coefficient b_" + std::to_string(i) +
                                " = " + c.str() + " (window below the postulation number?)");
        coeffs[i] = numerator(c);
    }
    return BinomialPoly(D, std::move(coeffs));
}

std::pair<BinomialPoly, FitDiagnostics>
fit_stable(const std::function<Int(long)>& f, int degree, const FitOptions& opts) {
    const long span = degree + 1 + opts.extra;
    std::vector<Int> cache;
    auto sample = [&](long n) -> const Int& {
        while (static_cast<long>(cache.size()) <= n) cache.push_back(f(static_cast<long>(cache.size())));
        return cache[static_cast<size_t>(n)];
    };
    for (long n0 = 1; n0 + span - 1 <= opts.n_max; ++n0) {
        std::vector<std::pair<long, Int>> window;
        for (long n = n0; n <= n0 + degree; ++n) window.emplace_back(n, sample(n));
        BinomialPoly p(0, {Int(0)});
        try {
            p = fit_univariate(window, degree);
        } catch (const NonIntegerFit&) {
            continue;
        }
        bool verified = true;
        for (long n = n0 + degree + 1; n <= n0 + span - 1; ++n)
            if (p.eval(n) != sample(n)) {
                verified = false;
                break;
            }
        if (!verified) continue;
        FitDiagnostics diag;
        diag.window_start = n0;
        diag.window_len = degree + 1;
        diag.verified_through = n0 + span - 1;
        diag.stable = true;
        return {p, diag};
    }
    throw ComputeError("fit_stable: no stable degree-" + std::to_string(degree) +
                       " fit up to n_max = " + std::to_string(opts.n_max));
}

} // namespace brcalc
