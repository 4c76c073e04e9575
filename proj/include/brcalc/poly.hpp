#ifndef BRCALC_POLY_HPP
#define BRCALC_POLY_HPP

#include <map>

#include "brcalc/monomial.hpp"
#include "brcalc/numeric.hpp"
#include "brcalc/ring.hpp"

namespace brcalc {

/// Element of the ambient quotient ring: a finite rational combination of
/// monomials, kept reduced against the relations ideal. Terms sit in
/// descending deg-lex order; zero coefficients are never stored.
class Poly {
public:
    using TermMap = std::map<Monomial, Rat, MonoDegLexGreater>;

    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    Poly(RingPtr ring, const Monomial& m, Rat coeff = Rat(1));

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Single term with coefficient 1?
    bool is_monic_monomial() const;
    int max_degree() const;
    int min_degree() const;

    void add_term(const Monomial& m, const Rat& c);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

private:
    RingPtr ring_;
    TermMap terms_;
};

} // namespace brcalc

#endif
