#ifndef BRCALC_IDEAL_TUPLE_HPP
#define BRCALC_IDEAL_TUPLE_HPP

#include <vector>

#include "brcalc/monomial_ideal.hpp"

namespace brcalc {

/// An ordered tuple I_1, ..., I_r of m-primary ideals over one ambient ring,
/// standing for the module M = I_1 + ... + I_r (direct sum) inside F = R^r.
class IdealTuple {
public:
    explicit IdealTuple(std::vector<MonomialIdeal> ideals);

    const RingPtr& ring() const { return ring_; }
    int rank() const { return static_cast<int>(ideals_.size()); }
    const std::vector<MonomialIdeal>& ideals() const { return ideals_; }
    const MonomialIdeal& ideal(int i) const { return ideals_.at(static_cast<size_t>(i)); }
    int max_gen_degree() const;
    bool equal_ideals() const;

    /// ell(F/M) = sum of the colengths.
    Int colength_FM() const;

private:
    RingPtr ring_;
    std::vector<MonomialIdeal> ideals_;
};

} // namespace brcalc

#endif
