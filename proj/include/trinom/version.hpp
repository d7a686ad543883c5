#pragma once

#include <string_view>

namespace trinom {

inline constexpr std::string_view kVersion = "1.0.0";

// Advertised arithmetic envelope: any modulus below 2^63 is accepted, and
// products are carried out in 128 bits so no intermediate ever wraps.
inline constexpr std::string_view kCapabilities =
    "moduli up to 2^63-1; products exact via 128-bit intermediates";

}  // namespace trinom
