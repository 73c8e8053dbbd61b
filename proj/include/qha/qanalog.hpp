#pragma once

#include "qha/laurent.hpp"

namespace qha {

/// Quantum integer [r] = (q^r - q^{-r})/(q - q^{-1}).  For r >= 0 this is
/// q^{r-1} + q^{r-3} + ... + q^{-r+1}; negative r by antisymmetry
/// [-r] = -[r], which is what the closed form forces.
LaurentPoly quantum_integer(long r);

/// [n]! = [n][n-1]...[1].
LaurentPoly quantum_factorial(long n);

/// [n choose k] = [n]!/([k]![n-k]!), computed by exact polynomial division.
/// Bar-symmetric (invariant under q -> q^{-1}).  Requires 0 <= k <= n.
LaurentPoly quantum_binomial(long n, long k);

}  // namespace qha
