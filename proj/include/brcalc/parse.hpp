#ifndef BRCALC_PARSE_HPP
#define BRCALC_PARSE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "brcalc/generator_matrix.hpp"
#include "brcalc/ideal_tuple.hpp"
#include "brcalc/poly.hpp"

namespace brcalc {

/// Reported with 1-based line/column into the offending input.
struct ParseError : std::runtime_error {
    size_t line;
    size_t col;
    ParseError(const std::string& msg, size_t line_, size_t col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ")"),
          line(line_), col(col_) {}
};

/// Monomial / polynomial grammar: variables are x, y, z for dim <= 3 and
/// x1..xd otherwise; factors juxtaposed or separated by '*' or whitespace;
/// terms carry signed integer or rational coefficients ("2x^2y - 3y^3",
/// "1/2x", "0").
Poly parse_poly(std::string_view text, const RingPtr& ring);

/// Comma-separated monomial generators; "1" is the unit ideal, "0" the zero
/// ideal. Coefficients on generators are tolerated and discarded.
MonomialIdeal parse_ideal(std::string_view text, const RingPtr& ring);

/// '|'-separated ideals forming the direct sum I_1 + ... + I_r.
IdealTuple parse_tuple(std::string_view text, const RingPtr& ring);

/// Either the bare bracket form "[[x,y,0],[0,x,y]]" (rows of column entries)
/// or the JSON document {"rank": r, "entries": [[...], ...]}.
GeneratorMatrix parse_matrix(std::string_view text, const RingPtr& ring);

std::string to_string(const Monomial& m, const Ring& ring);
std::string to_string(const Poly& p);
std::string to_string(const MonomialIdeal& I);
std::string to_string(const IdealTuple& T);
std::string to_string(const GeneratorMatrix& A);

} // namespace brcalc

#endif
