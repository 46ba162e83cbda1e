#pragma once

// Central numeric thresholds. Every comparison tolerance used by the library
// lives here so tests and implementation agree on one set of constants.

namespace spinnet::tol {

inline constexpr double hermitian = 1e-12;     // max |M - M^dag| at construction
inline constexpr double unitary = 1e-10;       // max |U^dag U - I|
inline constexpr double state = 1e-10;         // pure norm / density trace and hermiticity
inline constexpr double eig_clamp = 1e-10;     // negative eigenvalues above -eig_clamp snap to 0
inline constexpr double trace_keep = 1e-12;    // partial trace preserves total trace
inline constexpr double degenerate = 1e-12;    // measurement branch below this is zero-probability
inline constexpr double time_refine = 1e-8;    // optimizer bracket width |dt|
inline constexpr double tie_break = 1e-12;     // grid maxima within this are tied
inline constexpr double commensurate = 1e-9;   // eigenvalue-ratio rationality test
inline constexpr double spectral_noise = 1e-12; // eigenvalues below this fraction of the
                                                // largest are treated as exact zeros

}  // namespace spinnet::tol
