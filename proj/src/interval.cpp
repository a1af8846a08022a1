#include "maclaurin/interval.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace maclaurin {

namespace {

Int shift_left(const Int& m, long k) { return m << static_cast<unsigned>(k); }

// floor(m / 2^k) and ceil(m / 2^k), valid for negative m.
Int shift_floor(const Int& m, long k) { return div_floor(m, Int(1) << static_cast<unsigned>(k)); }
Int shift_ceil(const Int& m, long k) { return div_ceil(m, Int(1) << static_cast<unsigned>(k)); }

}  // namespace

Rat dyadic_to_rat(const Dyadic& d) {
    if (d.exp >= 0) return Rat(shift_left(d.mant, d.exp));
    return Rat(d.mant, Int(1) << static_cast<unsigned>(-d.exp));
}

int dyadic_cmp(const Dyadic& a, const Dyadic& b) {
    long e = std::min(a.exp, b.exp);
    Int am = shift_left(a.mant, a.exp - e);
    Int bm = shift_left(b.mant, b.exp - e);
    if (am < bm) return -1;
    if (am > bm) return 1;
    return 0;
}

Dyadic dyadic_add(const Dyadic& a, const Dyadic& b) {
    long e = std::min(a.exp, b.exp);
    return {shift_left(a.mant, a.exp - e) + shift_left(b.mant, b.exp - e), e};
}

Dyadic dyadic_mul(const Dyadic& a, const Dyadic& b) {
    return {a.mant * b.mant, a.exp + b.exp};
}

Dyadic dyadic_neg(const Dyadic& d) { return {-d.mant, d.exp}; }

Dyadic dyadic_round_down(const Dyadic& d, unsigned prec) {
    long bits = bit_length(d.mant);
    if (bits <= static_cast<long>(prec)) return d;
    long k = bits - static_cast<long>(prec);
    return {shift_floor(d.mant, k), d.exp + k};
}

Dyadic dyadic_round_up(const Dyadic& d, unsigned prec) {
    long bits = bit_length(d.mant);
    if (bits <= static_cast<long>(prec)) return d;
    long k = bits - static_cast<long>(prec);
    return {shift_ceil(d.mant, k), d.exp + k};
}

namespace {

Dyadic dyadic_from_rat(const Rat& r, unsigned prec, bool round_up) {
    Int p = numerator(r), q = denominator(r);
    if (p == 0) return Dyadic::zero();
    long k = static_cast<long>(prec) + 1 - (bit_length(p) - bit_length(q));
    Int num = k >= 0 ? shift_left(p, k) : p;
    Int den = k >= 0 ? q : shift_left(q, -k);
    Int m = round_up ? div_ceil(num, den) : div_floor(num, den);
    return {m, -k};
}

}  // namespace

Dyadic dyadic_from_rat_down(const Rat& r, unsigned prec) { return dyadic_from_rat(r, prec, false); }
Dyadic dyadic_from_rat_up(const Rat& r, unsigned prec) { return dyadic_from_rat(r, prec, true); }

namespace {

// Rewrites d = M * 2^(n*E) with M having at least n*(prec+2) bits, so that
// iroot_floor(M)^(1/1) carries prec+2 significant bits of the root.
void root_prepare(const Dyadic& d, unsigned n, unsigned prec, Int& M, long& E) {
    long t = std::max<long>(0, static_cast<long>(n) * (static_cast<long>(prec) + 2) - bit_length(d.mant));
    long rem = ((d.exp - t) % static_cast<long>(n) + static_cast<long>(n)) % static_cast<long>(n);
    t += rem;
    M = shift_left(d.mant, t);
    E = (d.exp - t) / static_cast<long>(n);
}

}  // namespace

Dyadic dyadic_root_down(const Dyadic& d, unsigned n, unsigned prec) {
    if (d.mant < 0) throw std::domain_error("dyadic_root_down: negative radicand");
    if (d.mant == 0) return Dyadic::zero();
    Int M;
    long E;
    root_prepare(d, n, prec, M, E);
    return {iroot_floor(M, n), E};
}

Dyadic dyadic_root_up(const Dyadic& d, unsigned n, unsigned prec) {
    if (d.mant < 0) throw std::domain_error("dyadic_root_up: negative radicand");
    if (d.mant == 0) return Dyadic::zero();
    Int M;
    long E;
    root_prepare(d, n, prec, M, E);
    Int r = iroot_floor(M, n);
    if (int_pow(r, n) != M) ++r;
    return {r, E};
}

Interval::Interval(Dyadic lo, Dyadic hi, unsigned prec)
    : lo_(std::move(lo)), hi_(std::move(hi)), prec_(prec) {
    if (dyadic_cmp(lo_, hi_) > 0) throw std::invalid_argument("Interval: lo > hi");
}

Interval Interval::from_rat(const Rat& r, unsigned prec) {
    return Interval(dyadic_from_rat_down(r, prec), dyadic_from_rat_up(r, prec), prec);
}

Interval Interval::hull(const Rat& lo, const Rat& hi, unsigned prec) {
    if (lo > hi) throw std::invalid_argument("Interval::hull: lo > hi");
    return Interval(dyadic_from_rat_down(lo, prec), dyadic_from_rat_up(hi, prec), prec);
}

double Interval::mid_double() const {
    return static_cast<double>((lo_rat() + hi_rat()) / 2);
}

Interval operator+(const Interval& a, const Interval& b) {
    unsigned prec = std::max(a.prec_, b.prec_);
    return Interval(dyadic_round_down(dyadic_add(a.lo_, b.lo_), prec),
                    dyadic_round_up(dyadic_add(a.hi_, b.hi_), prec), prec);
}

Interval operator-(const Interval& a, const Interval& b) {
    unsigned prec = std::max(a.prec_, b.prec_);
    return Interval(dyadic_round_down(dyadic_add(a.lo_, dyadic_neg(b.hi_)), prec),
                    dyadic_round_up(dyadic_add(a.hi_, dyadic_neg(b.lo_)), prec), prec);
}

Interval operator*(const Interval& a, const Interval& b) {
    unsigned prec = std::max(a.prec_, b.prec_);
    Dyadic c[4] = {dyadic_mul(a.lo_, b.lo_), dyadic_mul(a.lo_, b.hi_),
                   dyadic_mul(a.hi_, b.lo_), dyadic_mul(a.hi_, b.hi_)};
    Dyadic lo = c[0], hi = c[0];
    for (int i = 1; i < 4; ++i) {
        if (dyadic_cmp(c[i], lo) < 0) lo = c[i];
        if (dyadic_cmp(c[i], hi) > 0) hi = c[i];
    }
    return Interval(dyadic_round_down(lo, prec), dyadic_round_up(hi, prec), prec);
}

Interval Interval::scaled(const Rat& c) const {
    Dyadic lo = dyadic_from_rat_down(lo_rat() * c, prec_);
    Dyadic hi = dyadic_from_rat_up(hi_rat() * c, prec_);
    if (c < 0) std::swap(lo, hi);
    return Interval(lo, hi, prec_);
}

Interval Interval::pow(unsigned k) const {
    if (k == 0) return Interval(Dyadic{Int(1), 0}, Dyadic{Int(1), 0}, prec_);
    Interval acc = *this;
    // Square-and-multiply; each interval product is outward rounded.
    Interval result = Interval(Dyadic{Int(1), 0}, Dyadic{Int(1), 0}, prec_);
    unsigned e = k;
    while (e > 0) {
        if (e & 1) result = result * acc;
        e >>= 1;
        if (e) acc = acc * acc;
    }
    return result;
}

Interval Interval::nth_root(unsigned n) const {
    if (n == 0) throw std::domain_error("Interval::nth_root: zeroth root");
    if (dyadic_cmp(lo_, Dyadic::zero()) < 0)
        throw std::domain_error("Interval::nth_root: negative lower bound");
    if (n == 1) return *this;
    return Interval(dyadic_root_down(lo_, n, prec_), dyadic_root_up(hi_, n, prec_), prec_);
}

bool Interval::strictly_less(const Interval& a, const Interval& b) {
    return dyadic_cmp(a.hi_, b.lo_) < 0;
}

bool Interval::overlap(const Interval& a, const Interval& b) {
    return dyadic_cmp(a.lo_, b.hi_) <= 0 && dyadic_cmp(b.lo_, a.hi_) <= 0;
}

double CertifiedValue::approx() const {
    if (is_exact()) return static_cast<double>(exact_value());
    return interval().mid_double();
}

Interval CertifiedValue::to_interval(unsigned prec) const {
    if (is_exact()) return Interval::from_rat(exact_value(), prec);
    return interval();
}

CertifiedValue cv_add(const CertifiedValue& a, const CertifiedValue& b, unsigned prec) {
    if (a.is_exact() && b.is_exact())
        return CertifiedValue::exact(a.exact_value() + b.exact_value());
    return CertifiedValue::enclosure(a.to_interval(prec) + b.to_interval(prec));
}

CertifiedValue cv_mul(const CertifiedValue& a, const CertifiedValue& b, unsigned prec) {
    if (a.is_exact() && b.is_exact())
        return CertifiedValue::exact(a.exact_value() * b.exact_value());
    if (a.is_exact()) return CertifiedValue::enclosure(b.interval().scaled(a.exact_value()));
    if (b.is_exact()) return CertifiedValue::enclosure(a.interval().scaled(b.exact_value()));
    return CertifiedValue::enclosure(a.interval() * b.interval());
}

CertifiedValue cv_scale(const CertifiedValue& a, const Rat& c, unsigned prec) {
    (void)prec;
    if (a.is_exact()) return CertifiedValue::exact(a.exact_value() * c);
    return CertifiedValue::enclosure(a.interval().scaled(c));
}

CertifiedValue cv_pow(const CertifiedValue& a, unsigned k, unsigned prec) {
    if (a.is_exact()) return CertifiedValue::exact(rat_pow(a.exact_value(), k));
    (void)prec;
    return CertifiedValue::enclosure(a.interval().pow(k));
}

CertifiedValue cv_nth_root(const CertifiedValue& a, unsigned n, unsigned prec) {
    if (a.is_exact()) {
        Rat root;
        if (exact_nth_root(a.exact_value(), n, root)) return CertifiedValue::exact(root);
        return CertifiedValue::enclosure(Interval::from_rat(a.exact_value(), prec).nth_root(n));
    }
    return CertifiedValue::enclosure(a.interval().nth_root(n));
}

PrecisionSchedule parse_precision_schedule(const std::string& text) {
    PrecisionSchedule schedule;
    schedule.bits.clear();
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        long v = std::stol(tok);
        if (v < 8 || v > 1 << 20)
            throw std::invalid_argument("precision schedule entry out of range: " + tok);
        schedule.bits.push_back(static_cast<unsigned>(v));
    }
    if (schedule.bits.empty())
        throw std::invalid_argument("precision schedule is empty");
    for (size_t i = 1; i < schedule.bits.size(); ++i)
        if (schedule.bits[i] <= schedule.bits[i - 1])
            throw std::invalid_argument("precision schedule must be strictly increasing");
    return schedule;
}

PrecisionSchedule default_precision_schedule() {
    if (const char* env = std::getenv("MACLAURIN_PRECISION"); env && *env)
        return parse_precision_schedule(env);
    return PrecisionSchedule{};
}

}  // namespace maclaurin
