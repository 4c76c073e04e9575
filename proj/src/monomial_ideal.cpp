#include "brcalc/monomial_ideal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace brcalc {

namespace {

void check_same_ambient(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (!I.ring()->same_ambient(*J.ring()))
        throw std::invalid_argument("monomial ideal: ambient ring mismatch");
}

// Per-axis exponent bound: the least k with x_j^k in I + relations, i.e. the
// least pure-power generator exponent on that axis.
std::vector<int> pure_power_bounds(const MonomialIdeal& I) {
    const int d = I.dim();
    std::vector<int> bound(static_cast<size_t>(d), -1);
    auto scan = [&](const std::vector<Monomial>& gens) {
        for (const Monomial& g : gens) {
            int support = -1;
            for (int j = 0; j < d; ++j)
                if (g[j] > 0) {
                    support = (support == -1) ? j : -2;
                    if (support == -2) break;
                }
            if (support >= 0) {
                int k = g[support];
                if (bound[support] < 0 || k < bound[support]) bound[support] = k;
            } else if (support == -1) {
                // unit generator: everything is in the ideal
                for (int j = 0; j < d; ++j) bound[j] = 0;
            }
        }
    };
    scan(I.gens());
    scan(I.ring()->relations());
    return bound;
}

} // namespace

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
    for (const Monomial& g : gens)
        if (g.dim() != ring_->dim())
            throw std::invalid_argument("monomial ideal: generator dimension mismatch");
    // Generators inside the relations ideal are zero in the quotient.
    std::vector<Monomial> kept;
    kept.reserve(gens.size());
    for (Monomial& g : gens)
        if (!ring_->in_relations(g)) kept.push_back(std::move(g));
    gens_ = divisibility_minimal(std::move(kept));
}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
    int d = ring->dim();
    return MonomialIdeal(std::move(ring), {Monomial::one(d)});
}

MonomialIdeal MonomialIdeal::zero(RingPtr ring) {
    return MonomialIdeal(std::move(ring), {});
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && gens_[0].is_one();
}

int MonomialIdeal::max_gen_degree() const {
    int m = 0;
    for (const Monomial& g : gens_) m = std::max(m, g.degree());
    return m;
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    return ring_->same_ambient(*other.ring_) && gens_ == other.gens_;
}

MonomialIdeal minimalize(RingPtr ring, std::vector<Monomial> gens) {
    return MonomialIdeal(std::move(ring), std::move(gens));
}

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_ambient(I, J);
    std::vector<Monomial> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_ambient(I, J);
    if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.ring());
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size() * J.gens().size());
    for (const Monomial& g : I.gens())
        for (const Monomial& h : J.gens()) gens.push_back(g * h);
    return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal ideal_power(const MonomialIdeal& I, long n) {
    if (n < 0) throw std::invalid_argument("ideal_power: negative exponent");
    MonomialIdeal acc = MonomialIdeal::unit(I.ring());
    for (long i = 0; i < n; ++i) acc = ideal_product(acc, I);
    return acc;
}

MonomialIdeal ideal_colon(const MonomialIdeal& I, const Monomial& m) {
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size() + I.ring()->relations().size());
    for (const Monomial& g : I.gens()) gens.push_back(g.colon(m));
    // Relations contribute too: (I + Q : m) restricted back to the quotient.
    for (const Monomial& q : I.ring()->relations()) gens.push_back(q.colon(m));
    return MonomialIdeal(I.ring(), std::move(gens));
}

bool contains_monomial(const MonomialIdeal& I, const Monomial& m) {
    if (m.dim() != I.dim()) throw std::invalid_argument("contains_monomial: dimension mismatch");
    if (I.ring()->in_relations(m)) return true;
    for (const Monomial& g : I.gens())
        if (g.divides(m)) return true;
    return false;
}

bool is_finite_colength(const MonomialIdeal& I) {
    for (int b : pure_power_bounds(I))
        if (b < 0) return false;
    return true;
}

Int colength_box(const MonomialIdeal& I) {
    std::vector<int> bound = pure_power_bounds(I);
    const int d = I.dim();
    size_t total = 1;
    for (int b : bound) {
        if (b < 0) throw ComputeError("colength: ideal does not have finite colength");
        total *= static_cast<size_t>(b);
    }
    if (total == 0) return 0;
    std::vector<char> inside(total, 0);
    std::vector<size_t> stride(static_cast<size_t>(d));
    size_t s = 1;
    for (int j = d - 1; j >= 0; --j) {
        stride[static_cast<size_t>(j)] = s;
        s *= static_cast<size_t>(bound[static_cast<size_t>(j)]);
    }
    // Mark the sub-box of multiples of each generator.
    auto mark = [&](const Monomial& g) {
        for (int j = 0; j < d; ++j)
            if (g[j] >= bound[static_cast<size_t>(j)]) return;
        std::vector<int> p(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) p[static_cast<size_t>(j)] = g[j];
        while (true) {
            size_t idx = 0;
            for (int j = 0; j < d; ++j) idx += stride[static_cast<size_t>(j)] * static_cast<size_t>(p[static_cast<size_t>(j)]);
            inside[idx] = 1;
            int j = d - 1;
            while (j >= 0) {
                if (++p[static_cast<size_t>(j)] < bound[static_cast<size_t>(j)]) break;
                p[static_cast<size_t>(j)] = g[j];
                --j;
            }
            if (j < 0) break;
        }
    };
    for (const Monomial& g : I.gens()) mark(g);
    for (const Monomial& q : I.ring()->relations()) mark(q);
    size_t outside = 0;
    for (char c : inside)
        if (!c) ++outside;
    return Int(outside);
}

namespace {

// Pivot-splitting recursion over plain generator lists (relations already
// merged in). Key for memoization is the canonical generator list.
struct SplitCounter {
    std::map<std::vector<std::vector<int>>, Int> memo;

    Int count(std::vector<Monomial> gens) {
        if (gens.empty()) throw ComputeError("colength: ideal does not have finite colength");
        const int d = gens.front().dim();
        for (const Monomial& g : gens)
            if (g.is_one()) return 0;
        if (d == 1) {
            int k = gens.front()[0];
            for (const Monomial& g : gens) k = std::min(k, g[0]);
            return Int(k);
        }
        std::vector<std::vector<int>> key;
        key.reserve(gens.size());
        for (const Monomial& g : gens) key.push_back(g.exponents());
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        // Slice x_d = 0 lives in one fewer variable; the rest is (I : x_d).
        const int pivot = d - 1;
        std::vector<Monomial> slice;
        std::vector<Monomial> colon;
        colon.reserve(gens.size());
        Monomial xd = Monomial::var_power(d, pivot, 1);
        for (const Monomial& g : gens) {
            if (g[pivot] == 0) slice.push_back(g.drop_var(pivot));
            colon.push_back(g.colon(xd));
        }
        if (slice.empty()) throw ComputeError("colength: ideal does not have finite colength");
        Int result = count(divisibility_minimal(std::move(slice))) +
                     count(divisibility_minimal(std::move(colon)));
        memo.emplace(std::move(key), result);
        return result;
    }
};

} // namespace

Int colength_split(const MonomialIdeal& I) {
    std::vector<Monomial> gens = I.gens();
    gens.insert(gens.end(), I.ring()->relations().begin(), I.ring()->relations().end());
    gens = divisibility_minimal(std::move(gens));
    if (!is_finite_colength(I)) throw ComputeError("colength: ideal does not have finite colength");
    SplitCounter counter;
    return counter.count(std::move(gens));
}

Int colength(const MonomialIdeal& I) {
    Int box = colength_box(I);
    Int split = colength_split(I);
    if (box != split)
        throw std::logic_error("colength: box enumeration (" + box.str() +
                               ") and pivot splitting (" + split.str() + ") disagree");
    return box;
}

} // namespace brcalc
