#include "brcalc/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace brcalc {

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    if (e_.empty()) throw std::invalid_argument("monomial: ambient dimension must be >= 1");
    for (int v : e_)
        if (v < 0) throw std::invalid_argument("monomial: negative exponent");
}

Monomial Monomial::var_power(int dim, int var, int k) {
    std::vector<int> e(static_cast<size_t>(dim), 0);
    e.at(static_cast<size_t>(var)) = k;
    return Monomial(std::move(e));
}

int Monomial::degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0);
}

bool Monomial::is_one() const {
    for (int v : e_)
        if (v != 0) return false;
    return true;
}

bool Monomial::divides(const Monomial& m) const {
    if (dim() != m.dim()) throw std::invalid_argument("monomial: dimension mismatch");
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > m.e_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
    if (dim() != m.dim()) throw std::invalid_argument("monomial: dimension mismatch");
    std::vector<int> e(e_);
    for (size_t i = 0; i < e.size(); ++i) e[i] += m.e_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::colon(const Monomial& m) const {
    if (dim() != m.dim()) throw std::invalid_argument("monomial: dimension mismatch");
    std::vector<int> e(e_);
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i] - m.e_[i], 0);
    return Monomial(std::move(e));
}

Monomial Monomial::times_var(int var, int k) const {
    std::vector<int> e(e_);
    e.at(static_cast<size_t>(var)) += k;
    return Monomial(std::move(e));
}

Monomial Monomial::drop_var(int var) const {
    std::vector<int> e;
    e.reserve(e_.size() - 1);
    for (size_t i = 0; i < e_.size(); ++i)
        if (static_cast<int>(i) != var) e.push_back(e_[i]);
    return Monomial(std::move(e));
}

bool Monomial::supported_on(uint32_t var_mask) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && !(var_mask & (1u << i))) return false;
    return true;
}

bool lex_less(const Monomial& a, const Monomial& b) {
    return a.exponents() < b.exponents();
}

bool deglex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents() < b.exponents();
}

std::vector<Monomial> divisibility_minimal(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), MonoDegLexLess{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    // Sorted by degree, so only earlier entries can divide later ones.
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& h : out)
            if (h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    std::sort(out.begin(), out.end(), MonoLexGreater{});
    return out;
}

} // namespace brcalc
