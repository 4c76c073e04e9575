#ifndef BRCALC_SPARSE_LINALG_HPP
#define BRCALC_SPARSE_LINALG_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "brcalc/fields.hpp"

namespace brcalc {

/// Sparse coordinate vector: (index, coefficient) pairs with ascending
/// indices and no zero coefficients.
template <class F>
using SparseVec = std::vector<std::pair<int32_t, F>>;

/// a -= c * b, merged in one pass.
template <class F>
SparseVec<F> sub_scaled(const SparseVec<F>& a, const F& c, const SparseVec<F>& b) {
    SparseVec<F> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else if (a[i].first > b[j].first) {
            out.emplace_back(b[j].first, -(c * b[j].second));
            ++j;
        } else {
            F v = a[i].second - c * b[j].second;
            if (!field_is_zero(v)) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.emplace_back(b[j].first, -(c * b[j].second));
    return out;
}

/// Incremental echelon basis over an exact field. Each stored row is monic
/// with a unique leading (lowest) index; coordinates are ordered so that low
/// index means low degree, which keeps truncation-level rank counting a
/// pivot scan.
template <class F>
class EchelonBasis {
public:
    /// Eliminates leading coordinates of v against the basis until the lead
    /// has no pivot row (or v is zero).
    void reduce(SparseVec<F>& v) const {
        while (!v.empty()) {
            auto it = rows_.find(v.front().first);
            if (it == rows_.end()) return;
            v = sub_scaled(v, v.front().second, it->second);
        }
    }

    /// Reduce and, if nonzero, normalize and adopt as a new pivot row.
    /// Returns the stored row, or nullptr when v reduced to zero.
    const SparseVec<F>* insert(SparseVec<F> v) {
        reduce(v);
        if (v.empty()) return nullptr;
        F lead = v.front().second;
        if (!(lead == F(1))) {
            F inv = F(1) / lead;
            for (auto& [idx, c] : v) c = c * inv;
        }
        int32_t pivot = v.front().first;
        auto [it, fresh] = rows_.emplace(pivot, std::move(v));
        (void)fresh;
        return &it->second;
    }

    bool contains(SparseVec<F> v) const {
        reduce(v);
        return v.empty();
    }

    size_t rank() const { return rows_.size(); }
    const std::map<int32_t, SparseVec<F>>& rows() const { return rows_; }

private:
    std::map<int32_t, SparseVec<F>> rows_;
};

} // namespace brcalc

#endif
