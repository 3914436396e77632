#include "signed_spectra/charpoly.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <stdexcept>

namespace signed_spectra {

namespace {

using BigRat = boost::multiprecision::cpp_rational;

void trim(std::vector<BigInt>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IntPolynomial IntPolynomial::constant(BigInt v) {
    IntPolynomial p;
    if (v != 0) p.c.push_back(std::move(v));
    return p;
}

IntPolynomial IntPolynomial::linear(BigInt a) {
    IntPolynomial p;
    p.c = {std::move(a), 1};
    return p;
}

IntPolynomial IntPolynomial::from_coeffs(std::vector<BigInt> coeffs) {
    IntPolynomial p;
    p.c = std::move(coeffs);
    trim(p.c);
    return p;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    IntPolynomial d;
    for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * static_cast<int>(i));
    trim(d.c);
    return d;
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (c[i] == 0) continue;
        BigInt a = c[i];
        if (!out.empty()) {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        } else if (a < 0) {
            out += "-";
            a = -a;
        }
        if (a != 1 || i == 0) out += a.str();
        if (i >= 1) {
            if (a != 1) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    trim(r.c);
    return r;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    trim(r.c);
    return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial::zero();
    IntPolynomial r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

IntPolynomial linear_power(BigInt a, int k) {
    if (k < 0) throw std::invalid_argument("linear_power: negative exponent");
    IntPolynomial r = IntPolynomial::constant(1);
    IntPolynomial base = IntPolynomial::linear(std::move(a));
    for (int i = 0; i < k; ++i) r = r * base;
    return r;
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return IntPolynomial::zero();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<BigRat> rem(a.c.begin(), a.c.end());
    std::vector<BigRat> quot(a.degree() - b.degree() + 1, 0);
    const BigRat lead = BigRat(b.leading());
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        BigRat q = rem[k + b.degree()] / lead;
        quot[k] = q;
        for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= q * BigRat(b.c[i]);
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    IntPolynomial out;
    out.c.reserve(quot.size());
    for (const auto& q : quot) {
        if (boost::multiprecision::denominator(q) != 1) return std::nullopt;
        out.c.push_back(boost::multiprecision::numerator(q));
    }
    trim(out.c);
    return out;
}

IntPolynomial char_poly_exact(const IntMatrix& m) {
    const int n = static_cast<int>(m.rows());
    if (m.cols() != n) throw std::invalid_argument("char_poly_exact: matrix must be square");
    using BigMat = std::vector<std::vector<BigInt>>;
    BigMat a(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m(i, j);

    std::vector<BigInt> coeff(n + 1, 0);
    coeff[n] = 1;
    BigMat nk(n, std::vector<BigInt>(n, 0));  // N_0 = 0
    BigInt ck = 1;                            // c_n
    for (int k = 1; k <= n; ++k) {
        // N_k = A * (N_{k-1} + c_{n-k+1} I); shift by the previous coefficient.
        BigMat next(n, std::vector<BigInt>(n, 0));
        for (int i = 0; i < n; ++i) nk[i][i] += ck;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                for (int j = 0; j < n; ++j) next[i][j] += a[i][l] * nk[l][j];
            }
        BigInt tr = 0;
        for (int i = 0; i < n; ++i) tr += next[i][i];
        ck = -tr / k;  // exact by the recurrence
        coeff[n - k] = ck;
        nk = std::move(next);
    }
    return IntPolynomial::from_coeffs(std::move(coeff));
}

// --- root finding ----------------------------------------------------------

namespace {

// Polynomials over rationals, ascending; used only for gcd/square-free work.
using RatPoly = std::vector<BigRat>;

void rtrim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPolynomial& p) { return RatPoly(p.c.begin(), p.c.end()); }

RatPoly rat_derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
    rtrim(d);
    return d;
}

RatPoly rat_monic(RatPoly p) {
    rtrim(p);
    if (p.empty()) return p;
    BigRat lead = p.back();
    for (auto& x : p) x /= lead;
    return p;
}

RatPoly rat_mod(RatPoly a, const RatPoly& b) {
    rtrim(a);
    while (a.size() >= b.size() && !a.empty()) {
        BigRat q = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        rtrim(a);
    }
    return a;
}

RatPoly rat_div_exact(RatPoly a, const RatPoly& b) {
    rtrim(a);
    RatPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size() && !a.empty()) {
        BigRat q = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        quot[off] = q;
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        rtrim(a);
    }
    if (!a.empty()) throw std::logic_error("rat_div_exact: nonzero remainder");
    rtrim(quot);
    return quot;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
    rtrim(a);
    rtrim(b);
    while (!b.empty()) {
        RatPoly r = rat_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return rat_monic(std::move(a));
}

IntPolynomial primitive_int(const RatPoly& p) {
    // clear denominators, divide by integer content, keep leading > 0
    BigInt lcm_den = 1;
    for (const auto& x : p)
        lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(x));
    std::vector<BigInt> c;
    c.reserve(p.size());
    for (const auto& x : p)
        c.push_back(boost::multiprecision::numerator(x) *
                    (lcm_den / boost::multiprecision::denominator(x)));
    BigInt g = 0;
    for (const auto& x : c) g = boost::multiprecision::gcd(g, x);
    if (g != 0)
        for (auto& x : c) x /= g;
    if (!c.empty() && c.back() < 0)
        for (auto& x : c) x = -x;
    return IntPolynomial::from_coeffs(std::move(c));
}

/// Yun's square-free decomposition: p ~ prod factors[i].poly^factors[i].mult.
struct SquareFreeFactor {
    IntPolynomial poly;
    int mult;
};

std::vector<SquareFreeFactor> square_free(const IntPolynomial& p) {
    std::vector<SquareFreeFactor> out;
    RatPoly f = rat_monic(to_rat(p));
    if (f.size() <= 1) return out;
    RatPoly fp = rat_derivative(f);
    RatPoly g = rat_gcd(f, fp);
    if (g.size() <= 1) {
        out.push_back({primitive_int(f), 1});
        return out;
    }
    RatPoly w = rat_div_exact(f, g);
    RatPoly y = rat_div_exact(fp, g);
    RatPoly z;
    {
        RatPoly wd = rat_derivative(w);
        z = y;
        z.resize(std::max(z.size(), wd.size()), 0);
        for (std::size_t i = 0; i < wd.size(); ++i) z[i] -= wd[i];
        rtrim(z);
    }
    int i = 1;
    while (w.size() > 1) {
        RatPoly gi = rat_gcd(w, z);
        if (gi.size() > 1) out.push_back({primitive_int(gi), i});
        w = rat_div_exact(w, gi);
        y = rat_div_exact(z, gi);
        RatPoly wd = rat_derivative(w);
        z = y;
        z.resize(std::max(z.size(), wd.size()), 0);
        for (std::size_t j = 0; j < wd.size(); ++j) z[j] -= wd[j];
        rtrim(z);
        ++i;
    }
    return out;
}

/// Sign of p at the dyadic point num/2^shift, computed exactly.
int sign_at_dyadic(const IntPolynomial& p, const BigInt& num, int shift) {
    BigInt acc = 0;
    const int d = p.degree();
    for (int i = d; i >= 0; --i) {
        acc = acc * num + (p.c[i] << (shift * (d - i)));
    }
    if (acc > 0) return 1;
    if (acc < 0) return -1;
    return 0;
}

double to_double(const BigInt& num, int shift) {
    return static_cast<double>(num) / std::ldexp(1.0, shift);
}

/// Roots of a square-free polynomial with all-real roots, ascending.
std::vector<double> roots_square_free(const IntPolynomial& p) {
    const int d = p.degree();
    if (d <= 0) return {};
    if (d == 1) {
        return {-static_cast<double>(p.c[0]) / static_cast<double>(p.c[1])};
    }
    // Critical points from the derivative (made square-free recursively).
    std::vector<double> crit;
    for (const auto& f : square_free(p.derivative())) {
        auto r = roots_square_free(f.poly);
        crit.insert(crit.end(), r.begin(), r.end());
    }
    std::sort(crit.begin(), crit.end());

    constexpr int kShift = 64;  // dyadic grid 2^-64

    // Cauchy bound (exact): all roots lie strictly inside (-B, B).
    BigInt maxc = 0;
    for (int i = 0; i < d; ++i) maxc = std::max(maxc, BigInt(boost::multiprecision::abs(p.c[i])));
    BigInt lead = BigInt(boost::multiprecision::abs(p.c[d]));
    BigInt bound = maxc / lead + 2;

    std::vector<BigInt> cuts;
    cuts.push_back(-(bound << kShift));
    for (double x : crit) {
        // critical points are tame (between extreme roots); 2^32 scaling is exact enough
        cuts.push_back(BigInt(std::llround(std::ldexp(x, 32))) << (kShift - 32));
    }
    cuts.push_back(bound << kShift);

    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        BigInt lo = cuts[i] - 1;  // nudge off critical points
        BigInt hi = cuts[i + 1] + 1;
        int slo = sign_at_dyadic(p, lo, kShift);
        int shi = sign_at_dyadic(p, hi, kShift);
        if (slo == 0) {
            roots.push_back(to_double(lo, kShift));
            continue;
        }
        if (shi == 0) continue;  // owned by the next bracket's lo probe
        if (slo * shi > 0) continue;
        while (hi - lo > 1) {
            // cpp_int >> misbehaves on negative values; shift the width instead
            BigInt mid = lo + (BigInt(hi - lo) >> 1);
            int sm = sign_at_dyadic(p, mid, kShift);
            if (sm == 0) {
                lo = hi = mid;
                break;
            }
            (sm == slo ? lo : hi) = mid;
        }
        roots.push_back(0.5 * (to_double(lo, kShift) + to_double(hi, kShift)));
    }
    if (static_cast<int>(roots.size()) != d)
        throw std::logic_error("roots_square_free: expected all-real simple roots");
    return roots;
}

}  // namespace

std::vector<double> real_roots(const IntPolynomial& p) {
    std::vector<double> out;
    for (const auto& f : square_free(p)) {
        auto r = roots_square_free(f.poly);
        for (double x : r)
            for (int k = 0; k < f.mult; ++k) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace signed_spectra
