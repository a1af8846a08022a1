#include "maclaurin/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace maclaurin {

Int div_floor(const Int& a, const Int& b) {
    if (b <= 0) throw std::domain_error("div_floor: divisor must be positive");
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

Int div_ceil(const Int& a, const Int& b) {
    if (b <= 0) throw std::domain_error("div_ceil: divisor must be positive");
    Int q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

Int int_pow(Int base, unsigned exp) {
    Int result = 1;
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

Rat rat_pow(const Rat& base, unsigned exp) {
    return Rat(int_pow(numerator(base), exp), int_pow(denominator(base), exp));
}

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact at each step
    }
    return result;
}

Int iroot_floor(const Int& x, unsigned n) {
    if (n == 0) throw std::domain_error("iroot_floor: zeroth root");
    if (x < 0) throw std::domain_error("iroot_floor: negative radicand");
    if (x == 0 || x == 1 || n == 1) return x;

    // Newton from an upper bound; integer division keeps iterates >= floor root.
    long bl = bit_length(x);
    Int r = Int(1) << static_cast<unsigned>((bl + n - 1) / n);
    while (true) {
        Int next = ((n - 1) * r + x / int_pow(r, n - 1)) / n;
        if (next >= r) break;
        r = next;
    }
    while (int_pow(r, n) > x) --r;
    while (int_pow(r + 1, n) <= x) ++r;
    return r;
}

bool exact_nth_root(const Rat& x, unsigned n, Rat& root) {
    if (x < 0) throw std::domain_error("exact_nth_root: negative radicand");
    Int num = numerator(x), den = denominator(x);
    Int rn = iroot_floor(num, n);
    if (int_pow(rn, n) != num) return false;
    Int rd = iroot_floor(den, n);
    if (int_pow(rd, n) != den) return false;
    root = Rat(rn, rd);
    return true;
}

Rat parse_rational(std::string_view token) {
    auto slash = token.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rat(Int(std::string(token)));
        }
        Int num{std::string(token.substr(0, slash))};
        Int den{std::string(token.substr(slash + 1))};
        if (den == 0) throw std::domain_error("zero denominator");
        return Rat(num, den);
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid rational token: '" + std::string(token) + "'");
    }
}

std::string rat_to_string(const Rat& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

Rat rational_from_double(double v, long long max_den) {
    if (!std::isfinite(v)) throw std::domain_error("rational_from_double: non-finite input");
    bool neg = v < 0;
    double x = neg ? -v : v;
    // Continued fraction expansion with bounded denominator.
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = x;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(frac);
        if (fl > 9e17) break;
        long long a = static_cast<long long>(fl);
        if (q0 != 0 && a != 0 && q1 > (max_den - q0) / a) break;
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-18) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return Rat(0);
    Rat r(p1, q1);
    return neg ? -r : r;
}

}  // namespace maclaurin
