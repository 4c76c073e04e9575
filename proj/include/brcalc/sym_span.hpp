#ifndef BRCALC_SYM_SPAN_HPP
#define BRCALC_SYM_SPAN_HPP

#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "brcalc/compositions.hpp"
#include "brcalc/generator_matrix.hpp"
#include "brcalc/sparse_linalg.hpp"

namespace brcalc {

/// Term key of a degree-n element of Sym(F): the t-monomial w (|w| = n over
/// r slots) and a ring monomial.
using SymKey = std::pair<std::vector<int>, Monomial>;

struct SymKeyLess {
    bool operator()(const SymKey& a, const SymKey& b) const {
        if (a.first != b.first) return a.first < b.first;
        return deglex_less(a.second, b.second);
    }
};

/// Degree-n element of the symmetric algebra of F with rational coefficients.
using SymElem = std::map<SymKey, Rat, SymKeyLess>;

void sym_add_term(SymElem& e, std::vector<int> w, const Monomial& m, const Rat& c, const Ring& ring);

/// The product-of-one-more-column step of symmetric-algebra multiplication:
/// multiplies e by column j of A, distributing over the rows.
SymElem sym_times_column(const SymElem& e, const GeneratorMatrix& A, int j);

/// The empty product: 1 in Sym_0(F).
SymElem sym_unit(const Ring& ring, int r);

/// Spanning set of R_n(M) as an R-module: all multiset products of n columns.
/// Zero products are dropped. Throws ComputeError when the multiset count
/// exceeds `cap`.
std::vector<SymElem> graded_generators(const GeneratorMatrix& A, long n, size_t cap = 2000000);

/// {column * g : column of A, g in gens}; used for N R_s(M) and M R_n(N).
std::vector<SymElem> module_times(const GeneratorMatrix& A, const std::vector<SymElem>& gens);

/// Exact coordinates for the degree-n graded piece of Sym(F) truncated at
/// ring degree < trunc: one block of standard monomials per t-monomial w.
class TruncatedSpace {
public:
    TruncatedSpace(RingPtr ring, int r, long n, int trunc);

    int trunc() const { return trunc_; }
    size_t component_count() const { return components_.size(); }
    size_t mono_count() const { return monomials_.size(); }
    size_t dim() const { return components_.size() * monomials_.size(); }
    /// Coordinates of degree < deg form a per-component prefix.
    size_t dim_below(int deg) const;
    int degree_of(int32_t flat) const;

    int32_t flat_index(const std::vector<int>& w, const Monomial& m) const; // -1 when truncated away
    /// Index of x_var * mono, or -1 when the product leaves the truncation.
    int32_t var_shift(int var, int32_t flat) const;

    template <class F>
    SparseVec<F> vectorize(const SymElem& e) const {
        SparseVec<F> v;
        for (const auto& [key, c] : e) {
            int32_t idx = flat_index(key.first, key.second);
            if (idx >= 0) v.emplace_back(idx, field_from_rat<F>(c));
        }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    }

    SparseVec<Rat> unit_vector(int32_t flat) const { return {{flat, Rat(1)}}; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    const std::vector<std::vector<int>>& components() const { return components_; }

private:
    RingPtr ring_;
    int trunc_;
    std::vector<std::vector<int>> components_;
    std::vector<Monomial> monomials_;              // (degree, lex) ascending
    std::vector<size_t> mono_prefix_by_degree_;    // #monomials of degree < d
    std::map<std::vector<int>, int> comp_index_;
    std::map<Monomial, int, MonoDegLexLess> mono_index_;
    std::vector<std::vector<int32_t>> var_shift_mono_; // [var][mono] -> mono or -1
};

struct SpanOptions {
    long c_max = 256;
    std::optional<int> force_trunc; // pin the truncation level (testing knob)
};

/// R-module span of degree-n elements of Sym(F), with Nakayama-certified
/// truncation: once every degree-c monomial of every component is seen to lie
/// in the span modulo m^{c+1}, the quotient is swept out below degree c and
/// ell(W/span) = dim of the truncated complement. The schedule starts at
/// c = (n+1) * input_maxdeg + 2 and doubles to c_max before giving up.
template <class F>
class SymSpan {
public:
    SymSpan(RingPtr ring, int r, long n, std::vector<SymElem> gens, int input_maxdeg,
            SpanOptions opts = {});

    const Int& certified_length();
    /// Membership in the localized span; valid after certification for
    /// elements of degree below the certified truncation.
    bool contains(const SymElem& e);
    int certified_trunc();

private:
    bool attempt(int c);

    RingPtr ring_;
    int r_;
    long n_;
    std::vector<SymElem> gens_;
    int input_maxdeg_;
    SpanOptions opts_;

    bool done_ = false;
    Int length_;
    int cert_c_ = 0;
    std::optional<TruncatedSpace> space_;
    EchelonBasis<F> basis_;
};

} // namespace brcalc

#endif
