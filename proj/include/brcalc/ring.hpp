#ifndef BRCALC_RING_HPP
#define BRCALC_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "brcalc/monomial.hpp"

namespace brcalc {

/// Ambient ring descriptor: a polynomial ring k[x1..xd] together with an
/// optional monomial relations ideal Q, so that the ring is k[x1..xd]/Q.
/// Lengths computed against it are lengths over the local ring at (x1..xd).
class Ring {
public:
    explicit Ring(int dim, std::vector<Monomial> relations = {});

    int dim() const { return dim_; }
    /// Krull dimension of k[x]/Q: the largest set of variables supporting
    /// no relation generator.
    int krull_dim() const { return krull_; }
    const std::vector<Monomial>& relations() const { return relations_; }
    bool has_relations() const { return !relations_.empty(); }

    /// True if the monomial is zero in the quotient (divisible by a relation).
    bool in_relations(const Monomial& m) const;
    bool same_ambient(const Ring& other) const;

    std::string var_name(int i) const;

private:
    int dim_;
    std::vector<Monomial> relations_; // minimal, canonically sorted
    int krull_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(int dim, std::vector<Monomial> relations = {});

} // namespace brcalc

#endif
