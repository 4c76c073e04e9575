#include "brcalc/poly.hpp"

#include <stdexcept>

namespace brcalc {

Poly::Poly(RingPtr ring, const Monomial& m, Rat coeff) : ring_(std::move(ring)) {
    add_term(m, coeff);
}

bool Poly::is_monic_monomial() const {
    return terms_.size() == 1 && terms_.begin()->second == 1;
}

int Poly::max_degree() const {
    int m = 0;
    for (const auto& [mono, c] : terms_) m = std::max(m, mono.degree());
    return m;
}

int Poly::min_degree() const {
    if (terms_.empty()) return 0;
    int m = terms_.begin()->first.degree();
    for (const auto& [mono, c] : terms_) m = std::min(m, mono.degree());
    return m;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (m.dim() != ring_->dim()) throw std::invalid_argument("poly: monomial dimension mismatch");
    if (c == 0 || ring_->in_relations(m)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly out(*this);
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    Poly out(*this);
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    Poly out(ring_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
    return out;
}

Poly Poly::operator*(const Rat& c) const {
    Poly out(ring_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.add_term(m, k * c);
    return out;
}

} // namespace brcalc
