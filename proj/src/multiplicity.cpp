#include "brcalc/multiplicity.hpp"

#include <optional>

#include "brcalc/compositions.hpp"
#include <stdexcept>

namespace brcalc {

std::pair<BinomialPoly, FitDiagnostics>
hs_polynomial(const MonomialIdeal& I, const FitOptions& opts) {
    if (!is_finite_colength(I))
        throw std::invalid_argument("hs_polynomial: ideal must have finite colength");
    const int d = I.ring()->krull_dim();
    // Incremental powers so the slide never recomputes I^n from scratch.
    std::vector<MonomialIdeal> powers{MonomialIdeal::unit(I.ring())};
    auto sample = [&](long n) -> Int {
        while (static_cast<long>(powers.size()) <= n)
            powers.push_back(ideal_product(powers.back(), I));
        return colength(powers[static_cast<size_t>(n)]);
    };
    return fit_stable(sample, d, opts);
}

Int bhatt_function(const IdealTuple& T, const std::vector<int>& u) {
    BhattEvaluator ev(T);
    return ev.value(u);
}

const MonomialIdeal& BhattEvaluator::power_product(const std::vector<int>& u) {
    if (static_cast<int>(u.size()) != tuple_.rank())
        throw std::invalid_argument("bhatt: exponent vector length must equal the tuple rank");
    for (int v : u)
        if (v < 0) throw std::invalid_argument("bhatt: negative exponent");
    auto it = products_.find(u);
    if (it != products_.end()) return it->second;
    MonomialIdeal result = MonomialIdeal::unit(tuple_.ring());
    // Walk down the lattice: I^u = I^(u - e_j) * I_j for the first j with u_j > 0.
    for (size_t j = 0; j < u.size(); ++j) {
        if (u[j] > 0) {
            std::vector<int> prev(u);
            --prev[j];
            result = ideal_product(power_product(prev), tuple_.ideal(static_cast<int>(j)));
            break;
        }
    }
    return products_.emplace(u, std::move(result)).first->second;
}

Int BhattEvaluator::value(const std::vector<int>& u) {
    auto it = values_.find(u);
    if (it != values_.end()) return it->second;
    Int v = colength(power_product(u));
    values_.emplace(u, v);
    return v;
}

namespace {

std::vector<int> grid_point(const std::vector<int>& u0, const std::vector<int>& v) {
    std::vector<int> u(u0);
    for (size_t j = 0; j < u.size(); ++j) u[j] += v[j];
    return u;
}

// Layer-peeling interpolation on the grid u0 + [0..d]^r. Top total-degree
// coefficients are iterated forward differences; each layer is subtracted
// before the next is read off. Returns nothing when the residual does not
// vanish, i.e. the data is not a total-degree-d polynomial on this grid.
std::optional<std::map<std::vector<int>, Int>>
peel_grid(BhattEvaluator& ev, const std::vector<int>& u0, int d, int r) {
    const auto grid = compositions_up_to(r, d);
    std::map<std::vector<int>, Int> residual;
    for (const auto& v : grid) residual[v] = ev.value(grid_point(u0, v));

    std::map<std::vector<int>, Int> coeffs;
    for (int layer = d; layer >= 0; --layer) {
        for (const auto& alpha : grid) {
            int total = 0;
            for (int a : alpha) total += a;
            if (total != layer) continue;
            // e_alpha = Delta^alpha residual at the grid origin.
            Int e = 0;
            for (const auto& beta : grid) {
                bool ok = true;
                for (size_t j = 0; j < beta.size(); ++j)
                    if (beta[j] > alpha[j]) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                Int w = 1;
                int parity = 0;
                for (size_t j = 0; j < beta.size(); ++j) {
                    w *= binomial(alpha[j], beta[j]);
                    parity += alpha[j] - beta[j];
                }
                Int contribution = w * residual[beta];
                if (parity % 2 == 0)
                    e += contribution;
                else
                    e -= contribution;
            }
            if (e != 0) coeffs[alpha] = e;
        }
        for (const auto& v : grid) {
            Int drop = 0;
            for (const auto& [alpha, e] : coeffs) {
                int total = 0;
                for (int a : alpha) total += a;
                if (total != layer) continue;
                Int w = e;
                for (size_t j = 0; j < alpha.size(); ++j)
                    w *= binomial(u0[j] + v[j], alpha[j]);
                drop += w;
            }
            residual[v] -= drop;
        }
    }
    for (const auto& [v, rem] : residual)
        if (rem != 0) return std::nullopt;
    return coeffs;
}

} // namespace

std::pair<MultiBinomialPoly, FitDiagnostics>
bhatt_polynomial(const IdealTuple& T, const FitOptions& opts) {
    const int d = T.ring()->krull_dim();
    const int r = T.rank();
    BhattEvaluator ev(T);
    for (int s = d; s + d + 1 <= opts.n_max; s += 2) {
        std::vector<int> u0(static_cast<size_t>(r), s);
        auto fit = peel_grid(ev, u0, d, r);
        if (!fit) continue;
        std::vector<int> u1(static_cast<size_t>(r), s + 1);
        auto fit_shifted = peel_grid(ev, u1, d, r);
        if (!fit_shifted || *fit != *fit_shifted) continue;

        MultiBinomialPoly poly;
        poly.nvars = r;
        poly.maxdeg = d;
        poly.coeffs = *fit;
        // Extra grid points beyond both windows.
        bool verified = true;
        std::vector<std::vector<int>> checks;
        for (int j = 0; j < r; ++j) {
            std::vector<int> u(u0);
            u[static_cast<size_t>(j)] += d + 1;
            checks.push_back(std::move(u));
        }
        checks.push_back(std::vector<int>(static_cast<size_t>(r), s + d + 1));
        for (const auto& u : checks)
            if (poly.eval(u) != ev.value(u)) {
                verified = false;
                break;
            }
        if (!verified) continue;

        FitDiagnostics diag;
        diag.window_start = s;
        diag.window_len = d + 1;
        diag.verified_through = s + d + 1;
        diag.stable = true;
        return {poly, diag};
    }
    throw ComputeError("bhatt_polynomial: no stable fit with shifts up to n_max = " +
                       std::to_string(opts.n_max));
}

Int mixed_E(const MultiBinomialPoly& p, int i) {
    if (i < 0 || i > p.maxdeg)
        throw std::invalid_argument("mixed_E: index outside 0..d");
    Int total = 0;
    for (const auto& [alpha, e] : p.coeffs) {
        int sum = 0;
        for (int a : alpha) sum += a;
        if (sum == i) total += e;
    }
    return total;
}

Int mixed_E(const IdealTuple& T, int i) {
    return mixed_E(bhatt_polynomial(T).first, i);
}

} // namespace brcalc
