#ifndef BRCALC_MONOMIAL_IDEAL_HPP
#define BRCALC_MONOMIAL_IDEAL_HPP

#include <string>
#include <vector>

#include "brcalc/monomial.hpp"
#include "brcalc/numeric.hpp"
#include "brcalc/ring.hpp"

namespace brcalc {

/// A monomial ideal of the ambient (quotient) ring, held by its minimal
/// generators. Generators are always an antichain under divisibility, reduced
/// against the relations ideal, and canonically sorted, so equal ideals
/// compare equal as vectors.
class MonomialIdeal {
public:
    MonomialIdeal(RingPtr ring, std::vector<Monomial> gens);

    static MonomialIdeal unit(RingPtr ring);
    static MonomialIdeal zero(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    int dim() const { return ring_->dim(); }
    bool is_unit() const;
    bool is_zero() const { return gens_.empty(); }
    int max_gen_degree() const;

    bool operator==(const MonomialIdeal& other) const;

private:
    RingPtr ring_;
    std::vector<Monomial> gens_;
};

/// Divisibility-minimal ideal from an arbitrary generating set.
MonomialIdeal minimalize(RingPtr ring, std::vector<Monomial> gens);

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal ideal_power(const MonomialIdeal& I, long n);
/// (I : m), the colon ideal by a single monomial.
MonomialIdeal ideal_colon(const MonomialIdeal& I, const Monomial& m);

/// True iff some generator of I or of the relations ideal divides m.
bool contains_monomial(const MonomialIdeal& I, const Monomial& m);

/// True iff ell(R/I) is finite: every variable admits a pure power inside
/// I + relations.
bool is_finite_colength(const MonomialIdeal& I);

/// Number of standard monomials of the quotient ring outside I, counted by
/// bounding-box enumeration. Throws ComputeError on infinite colength.
Int colength_box(const MonomialIdeal& I);
/// The same count by recursive pivot splitting with memoization.
Int colength_split(const MonomialIdeal& I);
/// ell(R/I). Runs both routes and insists they agree.
Int colength(const MonomialIdeal& I);

} // namespace brcalc

#endif
