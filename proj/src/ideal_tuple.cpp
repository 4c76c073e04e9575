#include "brcalc/ideal_tuple.hpp"

#include <algorithm>
#include <stdexcept>

namespace brcalc {

IdealTuple::IdealTuple(std::vector<MonomialIdeal> ideals) : ideals_(std::move(ideals)) {
    if (ideals_.empty()) throw std::invalid_argument("ideal tuple: rank must be >= 1");
    ring_ = ideals_.front().ring();
    for (const MonomialIdeal& I : ideals_) {
        if (!I.ring()->same_ambient(*ring_))
            throw std::invalid_argument("ideal tuple: ambient ring mismatch");
        if (!is_finite_colength(I))
            throw std::invalid_argument("ideal tuple: every ideal must be m-primary (finite colength)");
    }
}

int IdealTuple::max_gen_degree() const {
    int m = 0;
    for (const MonomialIdeal& I : ideals_) m = std::max(m, I.max_gen_degree());
    return m;
}

bool IdealTuple::equal_ideals() const {
    return std::all_of(ideals_.begin(), ideals_.end(),
                       [&](const MonomialIdeal& I) { return I == ideals_.front(); });
}

Int IdealTuple::colength_FM() const {
    Int total = 0;
    for (const MonomialIdeal& I : ideals_) total += colength(I);
    return total;
}

} // namespace brcalc
