#pragma once

namespace bct {

inline constexpr const char* kVersion = "0.1.0";

// Random source used by the simulator: std::mt19937_64 (bit-exact per the
// C++ standard) with 53-bit uniforms and CDF inversion. Reports embed this
// string so sequences can be regenerated anywhere.
inline constexpr const char* kGeneratorId = "mt19937_64/u53-cdf";

}  // namespace bct
