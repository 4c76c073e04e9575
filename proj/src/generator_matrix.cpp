#include "brcalc/generator_matrix.hpp"

#include <stdexcept>

namespace brcalc {

GeneratorMatrix::GeneratorMatrix(RingPtr ring, int rank, std::vector<std::vector<Poly>> columns)
    : ring_(std::move(ring)), rank_(rank), columns_(std::move(columns)) {
    if (rank_ < 1) throw std::invalid_argument("generator matrix: rank must be >= 1");
    if (columns_.empty()) throw std::invalid_argument("generator matrix: need at least one column");
    for (const auto& col : columns_) {
        if (static_cast<int>(col.size()) != rank_)
            throw std::invalid_argument("generator matrix: column length must equal the rank");
        for (const Poly& p : col)
            if (!p.ring()->same_ambient(*ring_))
                throw std::invalid_argument("generator matrix: entry ring mismatch");
    }
}

int GeneratorMatrix::max_entry_degree() const {
    int m = 0;
    for (const auto& col : columns_)
        for (const Poly& p : col) m = std::max(m, p.max_degree());
    return m;
}

GeneratorMatrix direct_sum_matrix(const IdealTuple& T) {
    const int r = T.rank();
    std::vector<std::vector<Poly>> cols;
    for (int i = 0; i < r; ++i) {
        for (const Monomial& g : T.ideal(i).gens()) {
            std::vector<Poly> col(static_cast<size_t>(r), Poly::zero(T.ring()));
            col[static_cast<size_t>(i)] = Poly(T.ring(), g);
            cols.push_back(std::move(col));
        }
    }
    return GeneratorMatrix(T.ring(), r, std::move(cols));
}

GeneratorMatrix band_matrix(const MonomialIdeal& I, BandVariant variant) {
    const RingPtr& ring = I.ring();
    const auto& gens = I.gens();
    const int d = static_cast<int>(gens.size());
    if (variant == BandVariant::rank2) {
        if (d != ring->krull_dim())
            throw std::invalid_argument("band_matrix: ideal must be a parameter ideal "
                                        "(exactly dim R generators)");
        std::vector<std::vector<Poly>> cols;
        for (int j = 0; j <= d; ++j) {
            std::vector<Poly> col{Poly::zero(ring), Poly::zero(ring)};
            if (j < d) col[0] = Poly(ring, gens[static_cast<size_t>(j)]);
            if (j > 0) col[1] = Poly(ring, gens[static_cast<size_t>(j - 1)]);
            cols.push_back(std::move(col));
        }
        return GeneratorMatrix(ring, 2, std::move(cols));
    }
    // rank3: the 3 x 5 staggered matrix over m = (x, y, z).
    if (ring->dim() != 3 || d != 3)
        throw std::invalid_argument("band_matrix rank3: requires the maximal ideal of a "
                                    "3-variable ring");
    for (int j = 0; j < 3; ++j)
        if (!(gens[static_cast<size_t>(j)].degree() == 1))
            throw std::invalid_argument("band_matrix rank3: ideal must be (x, y, z)");
    std::vector<std::vector<Poly>> cols;
    for (int j = 0; j < 5; ++j) {
        std::vector<Poly> col(3, Poly::zero(ring));
        for (int i = 0; i < 3; ++i) {
            int k = j - i; // column j carries generator a_{j-i+1} in row i
            if (k >= 0 && k < 3) col[static_cast<size_t>(i)] = Poly(ring, gens[static_cast<size_t>(k)]);
        }
        cols.push_back(std::move(col));
    }
    return GeneratorMatrix(ring, 3, std::move(cols));
}

std::optional<IdealTuple> as_direct_sum(const GeneratorMatrix& A) {
    const int r = A.rank();
    std::vector<std::vector<Monomial>> gens(static_cast<size_t>(r));
    for (int j = 0; j < A.cols(); ++j) {
        int row = -1;
        for (int i = 0; i < r; ++i) {
            if (A.entry(i, j).is_zero()) continue;
            if (row != -1) return std::nullopt;
            row = i;
        }
        if (row == -1 || !A.entry(row, j).is_monic_monomial()) return std::nullopt;
        gens[static_cast<size_t>(row)].push_back(A.entry(row, j).terms().begin()->first);
    }
    std::vector<MonomialIdeal> ideals;
    for (int i = 0; i < r; ++i) {
        if (gens[static_cast<size_t>(i)].empty()) return std::nullopt;
        MonomialIdeal I(A.ring(), gens[static_cast<size_t>(i)]);
        // Minimalization must not have dropped anything, or the matrix has
        // redundant columns and is not literally of direct-sum shape.
        if (I.gens().size() != gens[static_cast<size_t>(i)].size()) return std::nullopt;
        if (!is_finite_colength(I)) return std::nullopt;
        ideals.push_back(std::move(I));
    }
    return IdealTuple(std::move(ideals));
}

} // namespace brcalc
