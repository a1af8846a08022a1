#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "maclaurin/rational.hpp"

namespace maclaurin {

// Dyadic rational mant * 2^exp.  Exact value type for interval endpoints.
struct Dyadic {
    Int mant;
    long exp = 0;

    static Dyadic zero() { return {Int(0), 0}; }
    bool is_zero() const { return mant == 0; }
};

Rat dyadic_to_rat(const Dyadic& d);
int dyadic_cmp(const Dyadic& a, const Dyadic& b);
Dyadic dyadic_add(const Dyadic& a, const Dyadic& b);
Dyadic dyadic_mul(const Dyadic& a, const Dyadic& b);
Dyadic dyadic_neg(const Dyadic& d);

// Keep at most `prec` significant bits, rounding toward -inf / +inf.
Dyadic dyadic_round_down(const Dyadic& d, unsigned prec);
Dyadic dyadic_round_up(const Dyadic& d, unsigned prec);

Dyadic dyadic_from_rat_down(const Rat& r, unsigned prec);
Dyadic dyadic_from_rat_up(const Rat& r, unsigned prec);

// Directed n-th root, d >= 0; relative gap between the two bounds is at most
// 2^-(prec+1).
Dyadic dyadic_root_down(const Dyadic& d, unsigned n, unsigned prec);
Dyadic dyadic_root_up(const Dyadic& d, unsigned n, unsigned prec);

// Outward-rounded enclosure with dyadic endpoints.  Every operation returns
// an interval containing the exact real result.
class Interval {
public:
    Interval() : lo_(Dyadic::zero()), hi_(Dyadic::zero()), prec_(64) {}
    Interval(Dyadic lo, Dyadic hi, unsigned prec);

    static Interval from_rat(const Rat& r, unsigned prec);
    static Interval hull(const Rat& lo, const Rat& hi, unsigned prec);

    const Dyadic& lo() const { return lo_; }
    const Dyadic& hi() const { return hi_; }
    unsigned precision_bits() const { return prec_; }

    Rat lo_rat() const { return dyadic_to_rat(lo_); }
    Rat hi_rat() const { return dyadic_to_rat(hi_); }
    Rat width() const { return hi_rat() - lo_rat(); }
    bool contains(const Rat& r) const { return lo_rat() <= r && r <= hi_rat(); }
    bool is_point() const { return dyadic_cmp(lo_, hi_) == 0; }
    double mid_double() const;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    Interval scaled(const Rat& c) const;  // exact rational factor
    Interval pow(unsigned k) const;
    Interval nth_root(unsigned n) const;  // requires lo >= 0

    // a.hi < b.lo, certifying a < b.
    static bool strictly_less(const Interval& a, const Interval& b);
    static bool overlap(const Interval& a, const Interval& b);

private:
    Dyadic lo_, hi_;
    unsigned prec_;
};

// Exact rational or a directed-rounded enclosure; result type of every
// weighted-polynomial evaluation.
class CertifiedValue {
public:
    CertifiedValue() : value_(Rat(0)) {}

    static CertifiedValue exact(Rat r) { return CertifiedValue(std::move(r)); }
    static CertifiedValue enclosure(Interval i) { return CertifiedValue(std::move(i)); }

    bool is_exact() const { return std::holds_alternative<Rat>(value_); }
    const Rat& exact_value() const { return std::get<Rat>(value_); }
    const Interval& interval() const { return std::get<Interval>(value_); }

    Rat lower() const { return is_exact() ? exact_value() : interval().lo_rat(); }
    Rat upper() const { return is_exact() ? exact_value() : interval().hi_rat(); }
    Rat width() const { return upper() - lower(); }
    bool contains(const Rat& r) const { return lower() <= r && r <= upper(); }
    double approx() const;

    Interval to_interval(unsigned prec) const;

private:
    explicit CertifiedValue(Rat r) : value_(std::move(r)) {}
    explicit CertifiedValue(Interval i) : value_(std::move(i)) {}
    std::variant<Rat, Interval> value_;
};

CertifiedValue cv_add(const CertifiedValue& a, const CertifiedValue& b, unsigned prec);
CertifiedValue cv_mul(const CertifiedValue& a, const CertifiedValue& b, unsigned prec);
CertifiedValue cv_scale(const CertifiedValue& a, const Rat& c, unsigned prec);
CertifiedValue cv_pow(const CertifiedValue& a, unsigned k, unsigned prec);
// Falls back to an enclosure when `a` is not an exact n-th power.
CertifiedValue cv_nth_root(const CertifiedValue& a, unsigned n, unsigned prec);

// Escalating working precisions plus the relative-width threshold (2^-tight)
// below which an undecided comparison is reported as tight.
struct PrecisionSchedule {
    std::vector<unsigned> bits{64, 256, 1024};
    unsigned tight_exponent = 40;

    unsigned max_bits() const { return bits.empty() ? 64 : bits.back(); }
    Rat tight_tolerance() const { return Rat(1, Int(1) << tight_exponent); }
};

// Parses "64,256,1024" (strictly increasing).
PrecisionSchedule parse_precision_schedule(const std::string& text);
// Default schedule, honouring the MACLAURIN_PRECISION environment override.
PrecisionSchedule default_precision_schedule();

}  // namespace maclaurin
