#ifndef BRCALC_VERSION_HPP
#define BRCALC_VERSION_HPP

namespace brcalc {

inline constexpr const char* kToolName = "brcalc";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "brcalc/report/v1";

} // namespace brcalc

#endif
