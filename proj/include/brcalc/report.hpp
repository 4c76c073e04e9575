#ifndef BRCALC_REPORT_HPP
#define BRCALC_REPORT_HPP

#include <nlohmann/json.hpp>

#include "brcalc/brim.hpp"
#include "brcalc/reesmod.hpp"

namespace brcalc {

/// JSON views of the report types. Integers are serialized as decimal
/// strings so arbitrary-precision values survive round trips.
nlohmann::json to_json(const Int& v);
nlohmann::json to_json(const FitDiagnostics& d);
nlohmann::json to_json(const BinomialPoly& p);
nlohmann::json to_json(const MultiBinomialPoly& p);
nlohmann::json to_json(const Ring& ring);
nlohmann::json to_json(const NorthcottReport& report);
nlohmann::json to_json(const SallyTable& table);

/// Pretty binomial-basis rendering, e.g. "4C(n+2,3) - 1C(n+1,2)".
std::string binomial_string(const BinomialPoly& p);

} // namespace brcalc

#endif
