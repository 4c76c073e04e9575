#ifndef BRCALC_GENERATOR_MATRIX_HPP
#define BRCALC_GENERATOR_MATRIX_HPP

#include <optional>
#include <vector>

#include "brcalc/ideal_tuple.hpp"
#include "brcalc/poly.hpp"

namespace brcalc {

/// An r x s matrix of ring elements whose columns generate a submodule of
/// F = R^r.
class GeneratorMatrix {
public:
    GeneratorMatrix(RingPtr ring, int rank, std::vector<std::vector<Poly>> columns);

    const RingPtr& ring() const { return ring_; }
    int rank() const { return rank_; }
    int cols() const { return static_cast<int>(columns_.size()); }
    const std::vector<Poly>& column(int j) const { return columns_.at(static_cast<size_t>(j)); }
    const Poly& entry(int i, int j) const { return columns_.at(static_cast<size_t>(j)).at(static_cast<size_t>(i)); }
    int max_entry_degree() const;

private:
    RingPtr ring_;
    int rank_;
    std::vector<std::vector<Poly>> columns_; // each of length rank_
};

/// One column per (row i, minimal generator of I_i): the direct-sum module
/// I_1 + ... + I_r embedded by its obvious generators.
GeneratorMatrix direct_sum_matrix(const IdealTuple& T);

enum class BandVariant { rank2, rank3 };

/// The staggered parameter-reduction matrices: for a parameter ideal
/// I = (a_1..a_d) the 2 x (d+1) band [[a_1..a_d, 0], [0, a_1..a_d]]; the
/// rank-3 variant is the 3 x 5 band over the maximal ideal of a 3-variable
/// ring.
GeneratorMatrix band_matrix(const MonomialIdeal& I, BandVariant variant = BandVariant::rank2);

/// Recognizes matrices of direct_sum_matrix shape (each column one monic
/// monomial in one row) and recovers the tuple.
std::optional<IdealTuple> as_direct_sum(const GeneratorMatrix& A);

} // namespace brcalc

#endif
