#include "brcalc/ring.hpp"

#include <stdexcept>

namespace brcalc {

namespace {

int quotient_krull_dim(int dim, const std::vector<Monomial>& relations) {
    if (relations.empty()) return dim;
    if (dim > 16) throw std::invalid_argument("ring: quotient rings supported up to 16 variables");
    // dim k[x]/Q = max size of a variable set meeting the support of no
    // generator of Q.
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << dim); ++mask) {
        bool independent = true;
        for (const Monomial& q : relations)
            if (q.supported_on(mask)) {
                independent = false;
                break;
            }
        if (independent) {
            int size = __builtin_popcount(mask);
            if (size > best) best = size;
        }
    }
    return best;
}

} // namespace

Ring::Ring(int dim, std::vector<Monomial> relations) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("ring: dimension must be >= 1");
    for (const Monomial& q : relations) {
        if (q.dim() != dim) throw std::invalid_argument("ring: relation dimension mismatch");
        if (q.is_one()) throw std::invalid_argument("ring: relations contain 1 (zero ring)");
    }
    relations_ = divisibility_minimal(std::move(relations));
    krull_ = quotient_krull_dim(dim_, relations_);
}

bool Ring::in_relations(const Monomial& m) const {
    for (const Monomial& q : relations_)
        if (q.divides(m)) return true;
    return false;
}

bool Ring::same_ambient(const Ring& other) const {
    return dim_ == other.dim_ &&
           relations_.size() == other.relations_.size() &&
           std::equal(relations_.begin(), relations_.end(), other.relations_.begin());
}

std::string Ring::var_name(int i) const {
    static const char* xyz[] = {"x", "y", "z"};
    if (dim_ <= 3) return xyz[i];
    return "x" + std::to_string(i + 1);
}

RingPtr make_ring(int dim, std::vector<Monomial> relations) {
    return std::make_shared<Ring>(dim, std::move(relations));
}

} // namespace brcalc
