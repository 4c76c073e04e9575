#include "brcalc/sym_span.hpp"

#include <algorithm>
#include <stdexcept>

namespace brcalc {

void sym_add_term(SymElem& e, std::vector<int> w, const Monomial& m, const Rat& c, const Ring& ring) {
    if (c == 0 || ring.in_relations(m)) return;
    SymKey key{std::move(w), m};
    auto [it, inserted] = e.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) e.erase(it);
    }
}

SymElem sym_unit(const Ring& ring, int r) {
    (void)ring;
    SymElem e;
    e.emplace(SymKey{std::vector<int>(static_cast<size_t>(r), 0), Monomial::one(ring.dim())}, Rat(1));
    return e;
}

SymElem sym_times_column(const SymElem& e, const GeneratorMatrix& A, int j) {
    const Ring& ring = *A.ring();
    SymElem out;
    for (const auto& [key, c] : e) {
        for (int i = 0; i < A.rank(); ++i) {
            const Poly& entry = A.entry(i, j);
            if (entry.is_zero()) continue;
            std::vector<int> w(key.first);
            ++w[static_cast<size_t>(i)];
            for (const auto& [m2, c2] : entry.terms())
                sym_add_term(out, w, key.second * m2, c * c2, ring);
        }
    }
    return out;
}

std::vector<SymElem> graded_generators(const GeneratorMatrix& A, long n, size_t cap) {
    if (n < 0) throw std::invalid_argument("graded_generators: n must be >= 0");
    const Ring& ring = *A.ring();
    if (n == 0) return {sym_unit(ring, A.rank())};
    if (binomial(A.cols() + n - 1, n) > Int(cap))
        throw ComputeError("graded_generators: multiset product count exceeds cap " +
                           std::to_string(cap));
    std::vector<SymElem> out;
    // Multisets of n columns, built as prefix products along the recursion.
    auto rec = [&](auto&& self, int j0, long k, const SymElem& acc) -> void {
        if (acc.empty()) return;
        if (k == 0) {
            out.push_back(acc);
            return;
        }
        for (int j = j0; j < A.cols(); ++j) self(self, j, k - 1, sym_times_column(acc, A, j));
    };
    rec(rec, 0, n, sym_unit(ring, A.rank()));
    return out;
}

std::vector<SymElem> module_times(const GeneratorMatrix& A, const std::vector<SymElem>& gens) {
    std::vector<SymElem> out;
    out.reserve(gens.size() * static_cast<size_t>(A.cols()));
    for (const SymElem& g : gens)
        for (int j = 0; j < A.cols(); ++j) {
            SymElem prod = sym_times_column(g, A, j);
            if (!prod.empty()) out.push_back(std::move(prod));
        }
    return out;
}

namespace {

void enumerate_monomials(const Ring& ring, int trunc, std::vector<Monomial>& out) {
    std::vector<int> exps(static_cast<size_t>(ring.dim()), 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == ring.dim() - 1) {
            for (int k = 0; k <= remaining; ++k) {
                exps[static_cast<size_t>(var)] = k;
                Monomial m(exps);
                if (!ring.in_relations(m)) out.push_back(std::move(m));
            }
            exps[static_cast<size_t>(var)] = 0;
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            exps[static_cast<size_t>(var)] = k;
            self(self, var + 1, remaining - k);
        }
        exps[static_cast<size_t>(var)] = 0;
    };
    rec(rec, 0, trunc - 1);
}

} // namespace

TruncatedSpace::TruncatedSpace(RingPtr ring, int r, long n, int trunc)
    : ring_(std::move(ring)), trunc_(trunc) {
    if (trunc < 1) throw std::invalid_argument("truncated space: trunc must be >= 1");
    components_ = compositions_of(static_cast<int>(n), r);
    for (size_t i = 0; i < components_.size(); ++i)
        comp_index_.emplace(components_[i], static_cast<int>(i));

    enumerate_monomials(*ring_, trunc, monomials_);
    std::sort(monomials_.begin(), monomials_.end(), MonoDegLexLess{});
    for (size_t i = 0; i < monomials_.size(); ++i)
        mono_index_.emplace(monomials_[i], static_cast<int>(i));

    mono_prefix_by_degree_.assign(static_cast<size_t>(trunc) + 1, 0);
    for (const Monomial& m : monomials_)
        for (int deg = m.degree() + 1; deg <= trunc; ++deg)
            ++mono_prefix_by_degree_[static_cast<size_t>(deg)];

    const int d = ring_->dim();
    var_shift_mono_.assign(static_cast<size_t>(d), std::vector<int32_t>(monomials_.size(), -1));
    for (size_t mi = 0; mi < monomials_.size(); ++mi)
        for (int var = 0; var < d; ++var) {
            Monomial shifted = monomials_[mi].times_var(var);
            auto it = mono_index_.find(shifted);
            if (it != mono_index_.end())
                var_shift_mono_[static_cast<size_t>(var)][mi] = it->second;
        }
}

size_t TruncatedSpace::dim_below(int deg) const {
    if (deg < 0) return 0;
    if (deg > trunc_) deg = trunc_;
    return components_.size() * mono_prefix_by_degree_[static_cast<size_t>(deg)];
}

int TruncatedSpace::degree_of(int32_t flat) const {
    return monomials_[static_cast<size_t>(flat) % monomials_.size()].degree();
}

int32_t TruncatedSpace::flat_index(const std::vector<int>& w, const Monomial& m) const {
    auto mit = mono_index_.find(m);
    if (mit == mono_index_.end()) return -1;
    auto cit = comp_index_.find(w);
    if (cit == comp_index_.end())
        throw std::logic_error("truncated space: element has a component of the wrong degree");
    return static_cast<int32_t>(static_cast<size_t>(cit->second) * monomials_.size() +
                                static_cast<size_t>(mit->second));
}

int32_t TruncatedSpace::var_shift(int var, int32_t flat) const {
    size_t mono = static_cast<size_t>(flat) % monomials_.size();
    int32_t target = var_shift_mono_[static_cast<size_t>(var)][mono];
    if (target < 0) return -1;
    return flat - static_cast<int32_t>(mono) + target;
}

template <class F>
SymSpan<F>::SymSpan(RingPtr ring, int r, long n, std::vector<SymElem> gens, int input_maxdeg,
                    SpanOptions opts)
    : ring_(std::move(ring)), r_(r), n_(n), gens_(std::move(gens)),
      input_maxdeg_(std::max(input_maxdeg, 1)), opts_(opts) {}

template <class F>
bool SymSpan<F>::attempt(int c) {
    space_.emplace(ring_, r_, n_, c + 1);
    basis_ = EchelonBasis<F>{};
    const int d = ring_->dim();

    std::deque<SparseVec<F>> queue;
    for (const SymElem& g : gens_) {
        SparseVec<F> v = space_->template vectorize<F>(g);
        if (!v.empty()) queue.push_back(std::move(v));
    }
    // Saturate: the span of an R-module is closed under the variables, so
    // multiplying each fresh pivot row by every variable reaches all
    // monomial multiples of the generators.
    while (!queue.empty()) {
        SparseVec<F> v = std::move(queue.front());
        queue.pop_front();
        const SparseVec<F>* row = basis_.insert(std::move(v));
        if (!row) continue;
        for (int var = 0; var < d; ++var) {
            SparseVec<F> shifted;
            shifted.reserve(row->size());
            for (const auto& [idx, coeff] : *row) {
                int32_t target = space_->var_shift(var, idx);
                if (target >= 0) shifted.emplace_back(target, coeff);
            }
            if (!shifted.empty()) queue.push_back(std::move(shifted));
        }
    }

    // Nakayama certificate: every degree-c monomial of every component must
    // lie in the span modulo m^{c+1}.
    const size_t mono_lo = space_->dim_below(c) / space_->component_count();
    const size_t mono_hi = space_->dim_below(c + 1) / space_->component_count();
    for (size_t comp = 0; comp < space_->component_count(); ++comp)
        for (size_t mono = mono_lo; mono < mono_hi; ++mono) {
            int32_t flat = static_cast<int32_t>(comp * space_->mono_count() + mono);
            SparseVec<F> v{{flat, F(1)}};
            if (!basis_.contains(std::move(v))) return false;
        }

    size_t rank_below = 0;
    for (const auto& [pivot, row] : basis_.rows())
        if (space_->degree_of(pivot) < c) ++rank_below;
    length_ = Int(space_->dim_below(c) - rank_below);
    cert_c_ = c;
    return true;
}

template <class F>
const Int& SymSpan<F>::certified_length() {
    if (done_) return length_;
    if (opts_.force_trunc) {
        if (!attempt(*opts_.force_trunc))
            throw ComputeError("certified_colength: Nakayama certificate failed at forced "
                               "truncation c = " + std::to_string(*opts_.force_trunc));
        done_ = true;
        return length_;
    }
    long c = (n_ + 1) * input_maxdeg_ + 2;
    if (c > opts_.c_max)
        throw ComputeError("certified_colength: truncation schedule starts at c = " +
                           std::to_string(c) + " beyond c_max = " + std::to_string(opts_.c_max) +
                           "; raise c_max");
    while (true) {
        if (attempt(static_cast<int>(c))) {
            done_ = true;
            return length_;
        }
        if (c >= opts_.c_max)
            throw ComputeError("certified_colength: Nakayama certificate not achieved up to "
                               "c_max = " + std::to_string(opts_.c_max) +
                               " (infinite colength, or c_max too small)");
        c = std::min(c * 2, opts_.c_max);
    }
}

template <class F>
bool SymSpan<F>::contains(const SymElem& e) {
    certified_length();
    for (const auto& [key, c] : e)
        if (key.second.degree() >= cert_c_ && !ring_->in_relations(key.second))
            throw std::logic_error("sym span: membership query above the certified truncation");
    return basis_.contains(space_->template vectorize<F>(e));
}

template <class F>
int SymSpan<F>::certified_trunc() {
    certified_length();
    return cert_c_;
}

template class SymSpan<Rat>;
template class SymSpan<Fp>;

} // namespace brcalc
