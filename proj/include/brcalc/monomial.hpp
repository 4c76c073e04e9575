#ifndef BRCALC_MONOMIAL_HPP
#define BRCALC_MONOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace brcalc {

/// A monomial in a fixed number of variables, stored as its exponent vector.
/// Exponents are non-negative; the vector length is the ambient dimension.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps);
    Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}

    static Monomial one(int dim) { return Monomial(std::vector<int>(dim, 0)); }
    static Monomial var_power(int dim, int var, int k);

    int dim() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    int degree() const;
    bool is_one() const;
    const std::vector<int>& exponents() const { return e_; }

    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    /// Componentwise max(this - m, 0): the generator image under (I : m).
    Monomial colon(const Monomial& m) const;
    Monomial times_var(int var, int k = 1) const;
    /// The same monomial with variable `var` removed (slice onto var = 0).
    Monomial drop_var(int var) const;
    /// True if the monomial involves only variables inside `vars` (bitmask).
    bool supported_on(uint32_t var_mask) const;

    bool operator==(const Monomial& m) const { return e_ == m.e_; }

private:
    std::vector<int> e_;
};

/// Lexicographic order with x1 > x2 > ... (a < b when a is lex-smaller).
bool lex_less(const Monomial& a, const Monomial& b);
/// Degree first, ties broken lexicographically.
bool deglex_less(const Monomial& a, const Monomial& b);

struct MonoLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_less(a, b); }
};
struct MonoDegLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return deglex_less(a, b); }
};
// Descending lex: the canonical display/serialization order for generators.
struct MonoLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_less(b, a); }
};
// Descending deg-lex: the canonical term order for ring elements.
struct MonoDegLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return deglex_less(b, a); }
};

/// Deduplicate, drop every monomial divisible by another one, and sort into
/// the canonical (descending lex) order.
std::vector<Monomial> divisibility_minimal(std::vector<Monomial> gens);

} // namespace brcalc

#endif
