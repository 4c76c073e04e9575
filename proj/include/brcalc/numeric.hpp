#ifndef BRCALC_NUMERIC_HPP
#define BRCALC_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace brcalc {

// All lengths, multiplicities and fitted coefficients are exact; nothing in
// the toolkit ever rounds.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Binomial coefficient with the combinatorial convention used by the
// binomial-basis polynomials: C(n,0) = 1 for every n, C(n,k) = 0 for n < k.
inline Int binomial(long long n, long long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n < k) return 0;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline Int to_int(const Rat& q) {
    if (!is_integer(q)) throw std::logic_error("to_int: rational " + q.str() + " is not an integer");
    return numerator(q);
}

// Raised when an exact computation cannot be completed with the configured
// bounds (fit instability, truncation cap, product cap, infinite colength).
struct ComputeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace brcalc

#endif
