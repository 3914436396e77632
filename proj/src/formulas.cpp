#include "signed_spectra/formulas.hpp"

#include <cmath>
#include <stdexcept>

namespace signed_spectra {

IntPolynomial charpoly_double_star(int n, int s, int t) {
    if (s < 1 || t < 1 || n < s + t + 2)
        throw std::invalid_argument("charpoly_double_star: need s,t >= 1 and n >= s+t+2");
    const long k = s + t + 1;
    const long u = n - s - t - 2;
    const long st = static_cast<long>(s) * t;
    IntPolynomial quintic = IntPolynomial::from_coeffs({
        BigInt(4 * k * u + 8 * st - 16 * st * u + 1 - n),
        BigInt(8 * k * u + 16 * st - 4 * n + 5),
        BigInt(4 * k * u + 8 * st - 6 * n + 10),
        BigInt(10 - 4 * n),
        BigInt(5 - n),
        BigInt(1),
    });
    if (n >= 5) return linear_power(1, n - 5) * quintic;
    // n = 4 (s = t = 1): the quintic carries a surplus (x+1) factor.
    auto q = divide_exact(quintic, linear_power(1, 5 - n));
    if (!q) throw std::logic_error("charpoly_double_star: expected (x+1) factor");
    return *q;
}

IntPolynomial charpoly_linked_stars(int n, int a, int b, ClosedFormVariant variant) {
    if (a + b != n || n < 6 || b < 2 || b > n / 2)
        throw std::invalid_argument("charpoly_linked_stars: need a+b = n >= 6 and 2 <= b <= n/2");
    const long ab = static_cast<long>(a) * b;
    IntPolynomial quintic =
        variant == ClosedFormVariant::as_printed
            ? IntPolynomial::from_coeffs({BigInt(-24 * ab + 89 * n - 323),
                                          BigInt(16 * ab - 26 * n - 3),
                                          BigInt(8 * ab - 24 * n + 58), BigInt(34 - 6 * n),
                                          BigInt(9 - n), BigInt(1)})
            : IntPolynomial::from_coeffs({BigInt(-24 * ab + 65 * n - 169),
                                          BigInt(16 * ab - 10 * n - 39),
                                          BigInt(8 * ab - 16 * n + 18), BigInt(22 - 6 * n),
                                          BigInt(7 - n), BigInt(1)});
    return linear_power(1, n - 6) * IntPolynomial::from_coeffs({BigInt(-1), BigInt(1)}) * quintic;
}

IntPolynomial charpoly_s_plus(int n, int tri_sign, ClosedFormVariant variant) {
    if (n < 5) throw std::invalid_argument("charpoly_s_plus: n >= 5 required");
    if (tri_sign != 1 && tri_sign != -1)
        throw std::invalid_argument("charpoly_s_plus: tri_sign must be +1 or -1");
    IntPolynomial quadratic, cubic;
    if (tri_sign == 1) {
        quadratic = IntPolynomial::from_coeffs({BigInt(2), BigInt(4), BigInt(1)});
        cubic = IntPolynomial::from_coeffs({BigInt(2 * n - 20), BigInt(-(2 * n + 6)),
                                            BigInt(6 - 2 * n), BigInt(1)});
    } else {
        quadratic = IntPolynomial::from_coeffs({BigInt(-6), BigInt(-4), BigInt(1)});
        cubic = variant == ClosedFormVariant::as_printed
                    ? IntPolynomial::from_coeffs({BigInt(8 * n - 100), BigInt(-(18 * n - 8)),
                                                  BigInt(14 - 2 * n), BigInt(1)})
                    : IntPolynomial::from_coeffs({BigInt(44 - 10 * n), BigInt(82 - 18 * n),
                                                  BigInt(14 - 2 * n), BigInt(1)});
    }
    return linear_power(2, n - 5) * quadratic * cubic;
}

double distance_bound(int d) {
    if (d < 2) throw std::invalid_argument("distance_bound: d >= 2 required");
    if (d == 2) return -2.0;
    if (d == 3) return -2.0 - std::sqrt(2.0);
    return -4.0 * (d - 1) / 3.0;
}

double balanced_distance_bound(int d) {
    if (d < 4) throw std::invalid_argument("balanced_distance_bound: d >= 4 required");
    return -2.0 * d + 3.0;
}

}  // namespace signed_spectra
