#include "qha/qanalog.hpp"

#include <stdexcept>

namespace qha {

LaurentPoly quantum_integer(long r) {
    if (r < 0)
        return -quantum_integer(-r);
    LaurentPoly p;
    for (long e = r - 1; e >= -r + 1; e -= 2)
        p += LaurentPoly::q_power(e);
    return p;
}

LaurentPoly quantum_factorial(long n) {
    if (n < 0)
        throw std::invalid_argument("quantum_factorial: n must be >= 0");
    LaurentPoly p = LaurentPoly::one();
    for (long r = 2; r <= n; ++r)
        p *= quantum_integer(r);
    return p;
}

LaurentPoly quantum_binomial(long n, long k) {
    if (k < 0 || k > n)
        throw std::invalid_argument("quantum_binomial: need 0 <= k <= n");
    LaurentPoly num = quantum_factorial(n);
    LaurentPoly den = quantum_factorial(k) * quantum_factorial(n - k);
    return num.divide_exact(den);
}

}  // namespace qha
