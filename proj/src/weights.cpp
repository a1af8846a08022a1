#include "maclaurin/weights.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace maclaurin {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
}

void require_sq(int s, int q) {
    if (s < 1 || q < s)
        throw std::domain_error("requires 1 <= s <= q");
}

}  // namespace

void WeightVector::validate(int n) const {
    if (size() != n)
        throw std::invalid_argument("weight vector dimension " + std::to_string(size()) +
                                    " does not match vertex count " + std::to_string(n));
    for (const Rat& v : values)
        if (v < 0) throw std::invalid_argument("negative weight " + rat_to_string(v));
}

bool WeightVector::strictly_positive() const {
    for (const Rat& v : values)
        if (v <= 0) return false;
    return true;
}

Bitset WeightVector::support(int n) const {
    Bitset s(n);
    for (int v = 0; v < n && v < size(); ++v)
        if (values[static_cast<size_t>(v)] != 0) s.set(v);
    return s;
}

Rat WeightVector::product_over(const Bitset& verts) const {
    Rat prod(1);
    verts.for_each([&](int v) { prod *= values[static_cast<size_t>(v)]; });
    return prod;
}

WeightVector parse_weights(const std::string& text, int expected_n) {
    WeightVector x;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            Rat v;
            try {
                v = parse_rational(tok);
            } catch (const std::exception& e) {
                throw std::invalid_argument("weights line " + std::to_string(lineno) + ": " + e.what());
            }
            x.values.push_back(v);
        }
    }
    x.validate(expected_n);
    return x;
}

CertifiedValue extension_weight(int s, int q, int t, unsigned precision_bits) {
    require_sq(s, q);
    if (t < q) throw std::domain_error("extension_weight: requires t >= q");
    Int cts = binomial(t, s);
    Int ctq = binomial(t, q);
    if (q % s == 0)
        return CertifiedValue::exact(Rat(int_pow(cts, static_cast<unsigned>(q / s)), ctq));
    // (C(t,s)^q)^(1/s) / C(t,q): one rounding site at the root.
    Interval base = Interval::from_rat(Rat(int_pow(cts, static_cast<unsigned>(q))), precision_bits);
    return CertifiedValue::enclosure(base.nth_root(static_cast<unsigned>(s)).scaled(Rat(1, ctq)));
}

bool extension_weight_decreasing(int s, int q, int t1, int t2) {
    require_sq(s, q);
    if (t1 < q || t2 < t1) throw std::domain_error("extension_weight_decreasing: requires q <= t1 <= t2");
    Int lhs = int_pow(binomial(t2, s), static_cast<unsigned>(q)) *
              int_pow(binomial(t1, q), static_cast<unsigned>(s));
    Int rhs = int_pow(binomial(t1, s), static_cast<unsigned>(q)) *
              int_pow(binomial(t2, q), static_cast<unsigned>(s));
    return lhs <= rhs;
}

Rat clique_mass(const Graph& g, int s, const WeightVector& x) {
    if (s < 1) throw std::domain_error("clique_mass: s must be >= 1");
    x.validate(g.vertex_count());
    Rat total(0);
    for_each_clique(g, s, [&](const Clique& c) { total += x.product_over(c); });
    return total;
}

namespace {

// Aggregated monomial mass per extension number: A_t = sum over sigma(I)=t.
std::map<int, Rat> sigma_aggregates(const ExtensionMap& sigma, const WeightVector& x) {
    std::map<int, Rat> agg;
    for (const auto& [clique, t] : sigma.entries) agg[t] += x.product_over(clique);
    return agg;
}

CertifiedValue localized_mass_from_aggregates(const std::map<int, Rat>& agg, int s, int q,
                                              unsigned precision_bits) {
    if (agg.empty()) return CertifiedValue::exact(Rat(0));
    if (q % s == 0) {
        Rat total(0);
        for (const auto& [t, mass] : agg)
            total += extension_weight(s, q, t, precision_bits).exact_value() * mass;
        return CertifiedValue::exact(total);
    }
    Interval total = Interval::from_rat(Rat(0), precision_bits);
    for (const auto& [t, mass] : agg) {
        if (mass == 0) continue;
        total = total + extension_weight(s, q, t, precision_bits).interval().scaled(mass);
    }
    return CertifiedValue::enclosure(total);
}

}  // namespace

CertifiedValue localized_clique_mass(const Graph& g, const ExtensionMap& sigma, int s,
                                     const WeightVector& x, unsigned precision_bits) {
    require_sq(s, sigma.q);
    x.validate(g.vertex_count());
    return localized_mass_from_aggregates(sigma_aggregates(sigma, x), s, sigma.q, precision_bits);
}

CertifiedValue localized_clique_mass(const Graph& g, int s, int q, const WeightVector& x,
                                     unsigned precision_bits) {
    require_sq(s, q);
    return localized_clique_mass(g, extension_map(g, q), s, x, precision_bits);
}

namespace {

Verdict exact_verdict(const Rat& lhs, const Rat& rhs) {
    Verdict v;
    if (lhs < rhs) {
        v.kind = VerdictKind::CertifiedHolds;
        v.gap = CertifiedValue::exact(rhs - lhs);
    } else if (lhs == rhs) {
        v.kind = VerdictKind::ExactEquality;
        v.gap = CertifiedValue::exact(Rat(0));
    } else {
        v.kind = VerdictKind::CertifiedViolation;
        v.gap = CertifiedValue::exact(lhs - rhs);
    }
    return v;
}

}  // namespace

const char* to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::CertifiedHolds: return "certified_holds";
        case VerdictKind::ExactEquality: return "exact_equality";
        case VerdictKind::TightWithin: return "tight_within";
        case VerdictKind::CertifiedViolation: return "certified_violation";
        case VerdictKind::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

VerificationReport verify_localized(const Graph& g, int s, int q, const WeightVector& x,
                                    const VerifyOptions& options) {
    auto start = Clock::now();
    require_sq(s, q);
    x.validate(g.vertex_count());

    VerificationReport report;
    report.graph_id = options.graph_id;
    report.s = s;
    report.q = q;

    ExtensionMap sigma = extension_map(g, q);
    report.sigma_histogram = sigma.histogram();
    auto agg = sigma_aggregates(sigma, x);
    Rat h = clique_mass(g, s, x);

    unsigned top_bits = options.schedule.max_bits();
    bool exact_path = q % s == 0 && !options.force_enclosure;
    if (agg.empty()) {
        // No q-clique: f == 0 and the inequality is vacuous.
        report.lhs = CertifiedValue::exact(Rat(0));
        if (h == 0) {
            report.rhs = CertifiedValue::exact(Rat(0));
            report.verdict = exact_verdict(Rat(0), Rat(0));
        } else if (exact_path) {
            report.rhs = CertifiedValue::exact(rat_pow(h, static_cast<unsigned>(q / s)));
            report.verdict = exact_verdict(Rat(0), report.rhs.exact_value());
        } else {
            Interval rhs = Interval::from_rat(rat_pow(h, static_cast<unsigned>(q)), top_bits)
                               .nth_root(static_cast<unsigned>(s));
            report.rhs = CertifiedValue::enclosure(rhs);
            report.verdict.kind = VerdictKind::CertifiedHolds;
            report.verdict.gap = report.rhs;
        }
    } else if (exact_path) {
        Rat f = localized_mass_from_aggregates(agg, s, q, top_bits).exact_value();
        Rat rhs = rat_pow(h, static_cast<unsigned>(q / s));
        report.lhs = CertifiedValue::exact(f);
        report.rhs = CertifiedValue::exact(rhs);
        report.verdict = exact_verdict(f, rhs);
    } else {
        // h^q is exact; the s-th root is the single rounded step per side.
        Rat h_pow = rat_pow(h, static_cast<unsigned>(q));
        for (size_t stage = 0; stage < options.schedule.bits.size(); ++stage) {
            unsigned prec = options.schedule.bits[stage];
            Interval f = Interval::from_rat(Rat(0), prec);
            for (const auto& [tval, mass] : agg) {
                if (mass == 0) continue;
                f = f + extension_weight(s, q, tval, prec).to_interval(prec).scaled(mass);
            }
            Interval rhs = Interval::from_rat(h_pow, prec).nth_root(static_cast<unsigned>(s));
            report.lhs = CertifiedValue::enclosure(f);
            report.rhs = CertifiedValue::enclosure(rhs);
            if (Interval::strictly_less(f, rhs)) {
                report.verdict.kind = VerdictKind::CertifiedHolds;
                report.verdict.gap = CertifiedValue::enclosure(rhs - f);
                break;
            }
            if (Interval::strictly_less(rhs, f)) {
                report.verdict.kind = VerdictKind::CertifiedViolation;
                report.verdict.gap = CertifiedValue::enclosure(f - rhs);
                break;
            }
            if (stage + 1 == options.schedule.bits.size()) {
                Rat scale = rhs.hi_rat();
                if (scale < 1) scale = 1;
                Rat rel_width = (f.width() + rhs.width()) / scale;
                report.verdict.kind = rel_width <= options.schedule.tight_tolerance()
                                          ? VerdictKind::TightWithin
                                          : VerdictKind::Inconclusive;
                report.verdict.width = rel_width;
            }
        }
    }

    if (options.with_structure && s < q) {
        try {
            report.structure_check = diagnose_equality(g, s, q, x);
        } catch (const std::domain_error&) {
            // q beyond the clique number: no characterisation applies.
        }
    }
    report.elapsed_ns = elapsed_since(start);
    return report;
}

namespace {

void require_clique_number_at_most(const Graph& g, int r, const char* who) {
    int omega = clique_number(g);
    if (omega > r) {
        auto witness = enumerate_cliques(g, r + 1);
        std::ostringstream msg;
        msg << who << ": graph has a " << (r + 1) << "-clique {";
        bool first = true;
        witness.front().for_each([&](int v) {
            if (!first) msg << ",";
            msg << v;
            first = false;
        });
        msg << "}";
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

VerificationReport verify_zykov(const Graph& g, int r, int q, const std::string& graph_id) {
    auto start = Clock::now();
    if (r < 1 || q < 1 || q > r) throw std::domain_error("verify_zykov: requires 1 <= q <= r");
    require_clique_number_at_most(g, r, "verify_zykov");

    VerificationReport report;
    report.graph_id = graph_id;
    report.s = 1;
    report.q = q;
    Rat kq(clique_count(g, q));
    Rat bound = Rat(binomial(r, q)) * rat_pow(Rat(g.vertex_count(), r), static_cast<unsigned>(q));
    report.lhs = CertifiedValue::exact(kq);
    report.rhs = CertifiedValue::exact(bound);
    report.verdict = exact_verdict(kq, bound);
    if (kq != 0) report.sigma_histogram = extension_map(g, q).histogram();
    report.elapsed_ns = elapsed_since(start);
    return report;
}

std::vector<VerificationReport> verify_chain(const Graph& g, int r, const WeightVector& x,
                                             const std::string& graph_id) {
    if (r < 1) throw std::domain_error("verify_chain: requires r >= 1");
    require_clique_number_at_most(g, r, "verify_chain");
    x.validate(g.vertex_count());

    std::vector<VerificationReport> links;
    Rat h_prev = clique_mass(g, 1, x);
    for (int s = 1; s < r; ++s) {
        auto start = Clock::now();
        Rat h_next = clique_mass(g, s + 1, x);
        // lhs <= rhs form of the cross-multiplied link.
        Rat lhs = rat_pow(h_next, static_cast<unsigned>(s)) *
                  rat_pow(Rat(binomial(r, s)), static_cast<unsigned>(s + 1));
        Rat rhs = rat_pow(h_prev, static_cast<unsigned>(s + 1)) *
                  rat_pow(Rat(binomial(r, s + 1)), static_cast<unsigned>(s));
        VerificationReport report;
        report.graph_id = graph_id;
        report.s = s;
        report.q = s + 1;
        report.lhs = CertifiedValue::exact(lhs);
        report.rhs = CertifiedValue::exact(rhs);
        report.verdict = exact_verdict(lhs, rhs);
        report.elapsed_ns = elapsed_since(start);
        links.push_back(std::move(report));
        h_prev = h_next;
    }
    return links;
}

}  // namespace maclaurin
