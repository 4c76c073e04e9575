#include "brcalc/reesmod.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace brcalc {

namespace {

SpanOptions span_options(const ReesOptions& opts) {
    SpanOptions s;
    s.c_max = opts.c_max;
    s.force_trunc = opts.force_trunc;
    return s;
}

std::vector<SymElem> columns_as_sym(const GeneratorMatrix& A) {
    std::vector<SymElem> cols;
    SymElem unit = sym_unit(*A.ring(), A.rank());
    for (int j = 0; j < A.cols(); ++j) {
        SymElem col = sym_times_column(unit, A, j);
        if (!col.empty()) cols.push_back(std::move(col));
    }
    return cols;
}

int pair_maxdeg(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    return std::max(a.max_entry_degree(), b.max_entry_degree());
}

template <class F>
Int certified_colength_impl(RingPtr ring, int r, long n, const std::vector<SymElem>& span,
                            int input_maxdeg, const ReesOptions& opts) {
    SymSpan<F> s(std::move(ring), r, n, span, input_maxdeg, span_options(opts));
    return s.certified_length();
}

// Per-step state for the reduction-number scan.
template <class F>
struct ReductionScan {
    const GeneratorMatrix& N;
    const GeneratorMatrix& M;
    const ReesOptions& opts;
    int maxdeg;
    std::optional<IdealTuple> direct_sum;

    ReductionScan(const GeneratorMatrix& N_, const GeneratorMatrix& M_, const ReesOptions& o)
        : N(N_), M(M_), opts(o), maxdeg(pair_maxdeg(N_, M_)), direct_sum(as_direct_sum(M_)) {}

    Int span_length(long n, std::vector<SymElem> gens) const {
        SymSpan<F> s(M.ring(), M.rank(), n, std::move(gens), maxdeg, span_options(opts));
        return s.certified_length();
    }

    // Does N R_s(M) fill R_{s+1}(M)? Certified-length equality, cross-checked
    // on direct sums by the per-component Nakayama span test.
    bool step_equal(int s, const std::vector<SymElem>& gens_M_s,
                    const std::vector<SymElem>& gens_M_s1) const {
        std::vector<SymElem> a = module_times(N, gens_M_s);
        Int len_b = span_length(s + 1, gens_M_s1);
        Int len_a = span_length(s + 1, a);
        if (len_a < len_b)
            throw std::logic_error("reduction_number: N R_s(M) reported smaller colength than "
                                   "R_{s+1}(M)");
        bool equal = (len_a == len_b);
        if (direct_sum) {
            bool nakayama = spans_degree_mod_m(*direct_sum, s + 1, a, opts.field);
            if (nakayama != equal)
                throw std::logic_error("reduction_number: certified-length route and Nakayama "
                                       "span route disagree at s = " + std::to_string(s));
        }
        return equal;
    }
};

template <class F>
std::optional<int> reduction_number_impl(const GeneratorMatrix& N, const GeneratorMatrix& M,
                                         int s_max, const ReesOptions& opts) {
    if (!N.ring()->same_ambient(*M.ring()) || N.rank() != M.rank())
        throw std::invalid_argument("reduction_number: N and M must sit in the same free module");
    ReductionScan<F> scan(N, M, opts);

    // Containment of N in M, checked at degree 1 inside a certified span.
    std::vector<SymElem> m_cols = columns_as_sym(M);
    SymSpan<F> span_m1(M.ring(), M.rank(), 1, m_cols, scan.maxdeg, span_options(opts));
    Int len_m1 = span_m1.certified_length();
    std::vector<SymElem> n_cols = columns_as_sym(N);
    for (const SymElem& col : n_cols)
        if (!span_m1.contains(col))
            throw std::invalid_argument("reduction_number: N is not a submodule of M");

    if (scan.span_length(1, n_cols) == len_m1) return 0;

    std::vector<SymElem> gens_s = m_cols; // R_1(M)
    for (int s = 1; s <= s_max; ++s) {
        std::vector<SymElem> gens_s1 = graded_generators(M, s + 1, opts.product_cap);
        if (scan.step_equal(s, gens_s, gens_s1)) return s;
        gens_s = std::move(gens_s1);
    }
    return std::nullopt;
}

template <class F>
Int sally_length_impl(const GeneratorMatrix& M, const GeneratorMatrix& N, long n,
                      const ReesOptions& opts) {
    if (n < 0) throw std::invalid_argument("sally_length: n must be >= 0");
    const int maxdeg = pair_maxdeg(N, M);
    std::vector<SymElem> numerator = module_times(M, graded_generators(N, n, opts.product_cap));
    std::vector<SymElem> denominator = graded_generators(M, n + 1, opts.product_cap);
    SymSpan<F> span_mn(M.ring(), M.rank(), n + 1, std::move(numerator), maxdeg, span_options(opts));
    SymSpan<F> span_m(M.ring(), M.rank(), n + 1, std::move(denominator), maxdeg, span_options(opts));
    Int value = span_mn.certified_length() - span_m.certified_length();
    if (value < 0)
        throw std::logic_error("sally_length: negative length at n = " + std::to_string(n) +
                               " (is N a reduction of M?)");
    return value;
}

template <class F>
bool joint_reduction_span_impl(const Poly& a, const Poly& b, const MonomialIdeal& I,
                               const MonomialIdeal& J, const ReesOptions& opts) {
    // Rank-1 module comparison: span{a h, b g} versus span{g h} inside R.
    const RingPtr& ring = I.ring();
    auto as_elem = [&](const Poly& p) {
        SymElem e;
        for (const auto& [m, c] : p.terms()) sym_add_term(e, {1}, m, c, *ring);
        return e;
    };
    std::vector<SymElem> lhs;
    for (const Monomial& h : J.gens()) lhs.push_back(as_elem(a * Poly(ring, h)));
    for (const Monomial& g : I.gens()) lhs.push_back(as_elem(b * Poly(ring, g)));
    std::vector<SymElem> rhs;
    for (const Monomial& g : I.gens())
        for (const Monomial& h : J.gens()) rhs.push_back(as_elem(Poly(ring, g * h)));
    int maxdeg = std::max({I.max_gen_degree(), J.max_gen_degree(), a.max_degree(), b.max_degree()});
    SymSpan<F> span_lhs(ring, 1, 1, std::move(lhs), 2 * maxdeg, span_options(opts));
    SymSpan<F> span_rhs(ring, 1, 1, std::move(rhs), 2 * maxdeg, span_options(opts));
    return span_lhs.certified_length() == span_rhs.certified_length();
}

template <class F>
bool spans_degree_mod_m_impl(const IdealTuple& T, long n, const std::vector<SymElem>& gens) {
    // Components of R_n(M) are the products I^w; their minimal generators are
    // a basis of (+_w I^w) / m (+_w I^w). Vectorize each generator there.
    BhattEvaluator ev(T);
    auto comps = compositions_of(static_cast<int>(n), T.rank());
    std::map<std::vector<int>, std::pair<size_t, const MonomialIdeal*>> info;
    size_t offset = 0;
    for (const auto& w : comps) {
        const MonomialIdeal& Jw = ev.power_product(w);
        info.emplace(w, std::make_pair(offset, &Jw));
        offset += Jw.gens().size();
    }
    EchelonBasis<F> basis;
    for (const SymElem& g : gens) {
        SparseVec<F> v;
        for (const auto& [key, c] : g) {
            auto it = info.find(key.first);
            if (it == info.end())
                throw std::logic_error("spans_degree_mod_m: component of the wrong degree");
            const MonomialIdeal& Jw = *it->second.second;
            const auto& mins = Jw.gens();
            auto pos = std::find(mins.begin(), mins.end(), key.second);
            if (pos != mins.end()) {
                v.emplace_back(static_cast<int32_t>(it->second.first +
                                                    static_cast<size_t>(pos - mins.begin())),
                               field_from_rat<F>(c));
            } else if (!contains_monomial(Jw, key.second)) {
                throw std::invalid_argument("spans_degree_mod_m: generator leaves R_n(M)");
            }
            // non-minimal monomials of I^w lie in m I^w and vanish
        }
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        // merge duplicates (two terms can map to the same coordinate only if
        // keys coincide, which the map rules out, but stay defensive)
        basis.insert(std::move(v));
    }
    return basis.rank() == offset;
}

} // namespace

Int certified_colength(RingPtr ring, int r, long n, const std::vector<SymElem>& span,
                       int input_maxdeg, const ReesOptions& opts) {
    switch (opts.field) {
        case FieldKind::fp32003:
            return certified_colength_impl<Fp>(std::move(ring), r, n, span, input_maxdeg, opts);
        case FieldKind::rationals:
        default:
            return certified_colength_impl<Rat>(std::move(ring), r, n, span, input_maxdeg, opts);
    }
}

Int bf_general(const GeneratorMatrix& A, long n, const ReesOptions& opts) {
    if (n < 0) throw std::invalid_argument("bf_general: n must be >= 0");
    std::vector<SymElem> span = graded_generators(A, n, opts.product_cap);
    return certified_colength(A.ring(), A.rank(), n, span, A.max_entry_degree(), opts);
}

std::optional<int> reduction_number(const GeneratorMatrix& N, const GeneratorMatrix& M,
                                    int s_max, const ReesOptions& opts) {
    switch (opts.field) {
        case FieldKind::fp32003:
            return reduction_number_impl<Fp>(N, M, s_max, opts);
        case FieldKind::rationals:
        default:
            return reduction_number_impl<Rat>(N, M, s_max, opts);
    }
}

Int sally_length(const GeneratorMatrix& M, const GeneratorMatrix& N, long n,
                 const ReesOptions& opts) {
    switch (opts.field) {
        case FieldKind::fp32003:
            return sally_length_impl<Fp>(M, N, n, opts);
        case FieldKind::rationals:
        default:
            return sally_length_impl<Rat>(M, N, n, opts);
    }
}

bool SallyTable::all_zero() const {
    return std::all_of(values.begin(), values.end(), [](const Int& v) { return v == 0; });
}

SallyTable sally_table(const GeneratorMatrix& M, const GeneratorMatrix& N, long n_max,
                       const ReesOptions& opts) {
    SallyTable table;
    for (long n = 0; n <= n_max; ++n) table.values.push_back(sally_length(M, N, n, opts));
    return table;
}

SallyIdentity verify_sally_identity(const IdealTuple& T, const GeneratorMatrix& N, long n,
                                    const ReesOptions& opts, const FitOptions& fit) {
    if (T.ring()->krull_dim() != 2)
        throw std::invalid_argument("verify_sally_identity: requires dim R = 2");
    const int r = T.rank();
    if (N.cols() != r + 1)
        throw std::invalid_argument("verify_sally_identity: N must have r + 1 columns "
                                    "(a minimal reduction)");
    GeneratorMatrix M = direct_sum_matrix(T);
    Int br0 = bp_polynomial(T, fit).first.coeff(0);
    Int lfm = T.colength_FM();
    SallyIdentity out;
    out.lhs = bf_direct_sum(T, n);
    Int sally = (n >= 1) ? sally_length(M, N, n - 1, opts) : Int(0);
    out.rhs = br0 * binomial(n + r, r + 1) + (lfm - br0) * binomial(n + r - 1, r) - sally;
    out.equal = (out.lhs == out.rhs);
    return out;
}

bool verify_rn1_formula(const GeneratorMatrix& M, const GeneratorMatrix& N, long n,
                        const ReesOptions& opts) {
    if (n < 0) throw std::invalid_argument("verify_rn1_formula: n must be >= 0");
    const int r = M.rank();
    const int maxdeg = pair_maxdeg(N, M);
    Int len_fn = certified_colength(M.ring(), r, 1, columns_as_sym(N), maxdeg, opts);
    Int len_fm = certified_colength(M.ring(), r, 1, columns_as_sym(M), maxdeg, opts);
    Int len_mn = len_fn - len_fm;
    Int lhs = bf_general(M, n + 1, opts);
    Int rhs = len_fn * binomial(n + r + 1, r + 1) - len_mn * binomial(n + r, r);
    return lhs == rhs;
}

bool verify_joint_reduction(const Poly& a, const Poly& b, const MonomialIdeal& I,
                            const MonomialIdeal& J, const ReesOptions& opts) {
    if (!I.ring()->same_ambient(*J.ring()) || !a.ring()->same_ambient(*I.ring()) ||
        !b.ring()->same_ambient(*I.ring()))
        throw std::invalid_argument("verify_joint_reduction: ambient ring mismatch");
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("verify_joint_reduction: a and b must be nonzero");
    // Membership in a monomial ideal is term-by-term divisibility.
    for (const auto& [m, c] : a.terms())
        if (!contains_monomial(I, m))
            throw std::invalid_argument("verify_joint_reduction: a does not lie in I");
    for (const auto& [m, c] : b.terms())
        if (!contains_monomial(J, m))
            throw std::invalid_argument("verify_joint_reduction: b does not lie in J");

    if (a.terms().size() == 1 && b.terms().size() == 1) {
        // Monomial witnesses: exact staircase identity a J + b I = I J.
        const Monomial& ma = a.terms().begin()->first;
        const Monomial& mb = b.terms().begin()->first;
        std::vector<Monomial> lhs;
        for (const Monomial& h : J.gens()) lhs.push_back(ma * h);
        for (const Monomial& g : I.gens()) lhs.push_back(mb * g);
        return MonomialIdeal(I.ring(), std::move(lhs)) == ideal_product(I, J);
    }
    switch (opts.field) {
        case FieldKind::fp32003:
            return joint_reduction_span_impl<Fp>(a, b, I, J, opts);
        case FieldKind::rationals:
        default:
            return joint_reduction_span_impl<Rat>(a, b, I, J, opts);
    }
}

GeneratorMatrix random_minimal_reduction(const GeneratorMatrix& M, uint64_t seed,
                                         const RandomReductionOptions& opts) {
    const int d = M.ring()->krull_dim();
    const int r = M.rank();
    const int target = d + r - 1;
    if (M.cols() == target) return M;
    if (M.cols() < target)
        throw std::invalid_argument("random_minimal_reduction: M has fewer than d + r - 1 columns");
    std::mt19937_64 rng(seed);
    auto draw_coeff = [&]() {
        return static_cast<long>(rng() % 19) - 9; // uniform enough over {-9..9}
    };
    for (int attempt = 0; attempt < opts.retries; ++attempt) {
        std::vector<std::vector<Poly>> cols;
        for (int k = 0; k < target; ++k) {
            std::vector<Poly> col(static_cast<size_t>(r), Poly::zero(M.ring()));
            for (int j = 0; j < M.cols(); ++j) {
                Rat c(draw_coeff());
                if (c == 0) continue;
                for (int i = 0; i < r; ++i)
                    col[static_cast<size_t>(i)] = col[static_cast<size_t>(i)] + M.entry(i, j) * c;
            }
            cols.push_back(std::move(col));
        }
        GeneratorMatrix candidate(M.ring(), r, std::move(cols));
        try {
            if (reduction_number(candidate, M, opts.s_max, opts.rees)) return candidate;
        } catch (const ComputeError&) {
            // certificate never reached: candidate not of finite colength; redraw
        }
    }
    throw ComputeError("random_minimal_reduction: retries exhausted (seed " +
                       std::to_string(seed) + ", retries " + std::to_string(opts.retries) + ")");
}

bool spans_degree_mod_m(const IdealTuple& T, long n, const std::vector<SymElem>& gens,
                        FieldKind field) {
    switch (field) {
        case FieldKind::fp32003:
            return spans_degree_mod_m_impl<Fp>(T, n, gens);
        case FieldKind::rationals:
        default:
            return spans_degree_mod_m_impl<Rat>(T, n, gens);
    }
}

} // namespace brcalc
