#include "maclaurin/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace maclaurin {

SimplexPoint normalize(const Graph& g, int s, const WeightVector& x, unsigned precision_bits) {
    x.validate(g.vertex_count());
    Rat h = clique_mass(g, s, x);
    if (h == 0) throw std::invalid_argument("normalize: no s-clique mass");

    SimplexPoint point;
    point.s = s;
    Rat lambda;
    if (exact_nth_root(Rat(1) / h, static_cast<unsigned>(s), lambda)) {
        point.weights = x;
        for (Rat& v : point.weights.values) v *= lambda;
        point.direction_mass = 1;
        point.scale = CertifiedValue::exact(Rat(1));
        point.mass = CertifiedValue::exact(Rat(1));
    } else {
        point.weights = x;
        point.direction_mass = h;
        Interval scale = Interval::from_rat(Rat(1) / h, precision_bits)
                             .nth_root(static_cast<unsigned>(s));
        point.scale = CertifiedValue::enclosure(scale);
        point.mass = CertifiedValue::enclosure(scale.pow(static_cast<unsigned>(s)).scaled(h));
    }
    return point;
}

Rat partial_clique_mass(const Graph& g, int s, const WeightVector& x, int w) {
    if (s < 1) throw std::domain_error("partial_clique_mass: s must be >= 1");
    x.validate(g.vertex_count());
    if (w < 0 || w >= g.vertex_count())
        throw std::out_of_range("partial_clique_mass: vertex out of range");
    Rat total(0);
    for_each_clique(g, s, [&](const Clique& c) {
        if (!c.test(w)) return;
        Clique rest = c;
        rest.reset(w);
        total += x.product_over(rest);
    });
    return total;
}

CertifiedValue localized_mass_at(const Graph& g, int q, const SimplexPoint& point,
                                 unsigned precision_bits) {
    CertifiedValue f_dir = localized_clique_mass(g, point.s, q, point.weights, precision_bits);
    if (point.direction_mass == 1) return f_dir;
    // Scale factor direction_mass^(-q/s): exact when s | q, one root otherwise.
    if (q % point.s == 0) {
        Rat factor = rat_pow(Rat(1) / point.direction_mass, static_cast<unsigned>(q / point.s));
        return cv_scale(f_dir, factor, precision_bits);
    }
    Interval factor =
        Interval::from_rat(rat_pow(Rat(1) / point.direction_mass, static_cast<unsigned>(q)),
                           precision_bits)
            .nth_root(static_cast<unsigned>(point.s));
    return cv_mul(f_dir, CertifiedValue::enclosure(factor), precision_bits);
}

ShiftOutcome symmetrize_shift(const Graph& g, int s, int q, const SimplexPoint& x, int u, int v,
                              unsigned precision_bits) {
    if (s != x.s) throw std::invalid_argument("symmetrize_shift: s mismatch with the point");
    if (u == v) throw std::invalid_argument("symmetrize_shift: u == v");
    if (g.has_edge(u, v)) throw std::invalid_argument("symmetrize_shift: uv is an edge");
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw std::out_of_range("symmetrize_shift: vertex out of range");

    Rat du = partial_clique_mass(g, s, x.weights, u);
    Rat dv = partial_clique_mass(g, s, x.weights, v);
    if (dv == 0)
        throw std::invalid_argument("symmetrize_shift: target vertex lies in no s-clique of the support");

    ShiftOutcome outcome;
    outcome.xi_u = -x.weights[u];
    outcome.xi_v = x.weights[u] * du / dv;

    outcome.point = x;
    outcome.point.weights[u] = 0;
    outcome.point.weights[v] += outcome.xi_v;

    // No s-clique contains both u and v, so the multilinear expansion of h
    // has no cross term and invariance is exact.
    if (clique_mass(g, s, outcome.point.weights) != x.direction_mass)
        throw std::logic_error("symmetrize_shift: clique mass changed");

    outcome.f_before = localized_mass_at(g, q, x, precision_bits);
    outcome.f_after = localized_mass_at(g, q, outcome.point, precision_bits);
    if (outcome.f_before.is_exact() && outcome.f_after.is_exact()) {
        outcome.f_preserved = outcome.f_before.exact_value() == outcome.f_after.exact_value();
    } else {
        outcome.f_preserved =
            Interval::overlap(outcome.f_before.to_interval(precision_bits),
                              outcome.f_after.to_interval(precision_bits));
    }
    return outcome;
}

namespace {

// Doubles view of the scaled point (midpoint scale when the root is inexact).
std::vector<double> scaled_doubles(const SimplexPoint& point) {
    double scale = point.scale.approx();
    std::vector<double> x(point.weights.values.size());
    for (size_t i = 0; i < x.size(); ++i)
        x[i] = scale * static_cast<double>(point.weights.values[i]);
    return x;
}

struct CliqueTerm {
    std::vector<int> verts;
    double weight;
};

double term_product(const CliqueTerm& term, const std::vector<double>& x) {
    double p = term.weight;
    for (int v : term.verts) p *= x[static_cast<size_t>(v)];
    return p;
}

void add_gradient(const CliqueTerm& term, const std::vector<double>& x, std::vector<double>& grad) {
    for (size_t skip = 0; skip < term.verts.size(); ++skip) {
        double p = term.weight;
        for (size_t j = 0; j < term.verts.size(); ++j)
            if (j != skip) p *= x[static_cast<size_t>(term.verts[j])];
        grad[static_cast<size_t>(term.verts[skip])] += p;
    }
}

std::vector<CliqueTerm> f_terms(const Graph& g, int s, int q, unsigned precision_bits) {
    std::vector<CliqueTerm> terms;
    for (const auto& [clique, t] : extension_map(g, q).entries)
        terms.push_back({clique.to_vector(), extension_weight(s, q, t, precision_bits).approx()});
    return terms;
}

std::vector<CliqueTerm> h_terms(const Graph& g, int s) {
    std::vector<CliqueTerm> terms;
    for_each_clique(g, s, [&](const Clique& c) { terms.push_back({c.to_vector(), 1.0}); });
    return terms;
}

double poly_value(const std::vector<CliqueTerm>& terms, const std::vector<double>& x) {
    double total = 0;
    for (const auto& t : terms) total += term_product(t, x);
    return total;
}

}  // namespace

CriticalityCheck check_criticality(const Graph& g, int s, int q, const SimplexPoint& point) {
    std::vector<double> x = scaled_doubles(point);
    std::vector<double> grad_f(x.size(), 0.0), grad_h(x.size(), 0.0);
    for (const auto& t : f_terms(g, s, q, 64)) add_gradient(t, x, grad_f);
    for (const auto& t : h_terms(g, s)) add_gradient(t, x, grad_h);

    double dot_fh = 0, dot_hh = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0) continue;
        dot_fh += grad_f[i] * grad_h[i];
        dot_hh += grad_h[i] * grad_h[i];
    }
    CriticalityCheck check;
    check.lambda = dot_hh > 0 ? dot_fh / dot_hh : 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0) continue;
        check.residual = std::max(check.residual, std::abs(grad_f[i] - check.lambda * grad_h[i]));
    }
    return check;
}

DescentResult descend_support(const Graph& g, int s, int q, const SimplexPoint& x,
                              const OptimizeConfig& config) {
    DescentResult result;
    result.point = x;
    result.criticality = check_criticality(g, s, q, x);
    if (config.require_critical && result.criticality.residual > config.critical_residual_tol)
        throw std::invalid_argument("descend_support: point is not critical (residual " +
                                    std::to_string(result.criticality.residual) + ")");

    int n = g.vertex_count();
    while (true) {
        Bitset support = result.point.weights.support(n);
        // Drop support vertices in no s-clique of the support; they carry no
        // h or f mass, so the point is unchanged as a function input.
        std::vector<int> old_ids;
        Graph inside = induced_subgraph(g, support, &old_ids);
        Bitset active_local = clique_support(inside, s);
        bool dropped_any = false;
        for (int local = 0; local < inside.vertex_count(); ++local) {
            if (!active_local.test(local)) {
                int orig = old_ids[static_cast<size_t>(local)];
                result.point.weights[orig] = 0;
                result.dropped.push_back(orig);
                dropped_any = true;
            }
        }
        if (dropped_any) continue;

        // Lexicographically smallest non-edge inside the support.
        int pick_u = -1, pick_v = -1;
        std::vector<int> members = support.to_vector();
        for (size_t i = 0; i < members.size() && pick_u < 0; ++i)
            for (size_t j = i + 1; j < members.size(); ++j)
                if (!g.has_edge(members[i], members[j])) {
                    pick_u = members[i];
                    pick_v = members[j];
                    break;
                }
        if (pick_u < 0) break;  // support induces a clique

        result.shifts.push_back(
            symmetrize_shift(g, s, q, result.point, pick_u, pick_v, config.precision_bits));
        result.point = result.shifts.back().point;
    }
    return result;
}

namespace {

struct AscentOutcome {
    std::vector<double> x;
    double value = 0;
    int iterations = 0;
    bool converged = false;
};

// Multiplicative ascent of F under the constraint H = 1, restricted to the
// listed vertices.  Falls back to blending toward the multiplicative step
// whenever the full step does not improve F.
AscentOutcome ascend(const std::vector<CliqueTerm>& f, const std::vector<CliqueTerm>& h,
                     const std::vector<int>& verts, int n, int s, double seed_scale,
                     const OptimizeConfig& config) {
    AscentOutcome out;
    out.x.assign(static_cast<size_t>(n), 0.0);
    for (int v : verts) out.x[static_cast<size_t>(v)] = seed_scale;

    auto renormalize = [&](std::vector<double>& x) {
        double hv = poly_value(h, x);
        if (hv <= 0) return false;
        double factor = std::pow(hv, -1.0 / s);
        for (int v : verts) x[static_cast<size_t>(v)] *= factor;
        return true;
    };
    if (!renormalize(out.x)) return out;
    out.value = poly_value(f, out.x);

    for (out.iterations = 0; out.iterations < config.max_iterations; ++out.iterations) {
        std::vector<double> grad(out.x.size(), 0.0);
        for (const auto& t : f) add_gradient(t, out.x, grad);
        std::vector<double> stepped = out.x;
        for (int v : verts) stepped[static_cast<size_t>(v)] *= std::max(grad[static_cast<size_t>(v)], 0.0);
        if (!renormalize(stepped)) break;

        double beta = 1.0;
        double best_value = out.value;
        std::vector<double> best_point;
        for (int tries = 0; tries < 30; ++tries) {
            std::vector<double> blend(out.x.size(), 0.0);
            for (int v : verts) {
                size_t i = static_cast<size_t>(v);
                blend[i] = (1 - beta) * out.x[i] + beta * stepped[i];
            }
            if (renormalize(blend)) {
                double value = poly_value(f, blend);
                if (value > best_value) {
                    best_value = value;
                    best_point = std::move(blend);
                    break;
                }
            }
            beta /= 2;
        }
        if (best_point.empty()) {
            out.converged = true;  // no uphill direction left
            break;
        }
        double improvement = (best_value - out.value) / std::max(out.value, 1e-300);
        out.x = std::move(best_point);
        out.value = best_value;
        if (improvement < config.rel_tol) {
            out.converged = true;
            break;
        }
    }
    return out;
}

}  // namespace

OptimizationResult maximize(const Graph& g, int s, int q, const OptimizeConfig& config) {
    if (s < 1 || q < s) throw std::domain_error("maximize: requires 1 <= s <= q");
    int omega = clique_number(g);
    if (q > omega) throw std::invalid_argument("maximize: no q-clique");

    std::vector<Clique> candidates;
    for (const auto& c : maximal_cliques(g))
        if (c.count() >= q) candidates.push_back(c);

    std::vector<CliqueTerm> f_poly, h_poly_terms;
    bool have_terms = false;

    OptimizationResult best;
    bool best_set = false;
    double best_mid = -1;

    auto consider = [&](const SimplexPoint& point, int iterations, bool converged) {
        CertifiedValue value = localized_mass_at(g, q, point, config.precision_bits);
        double mid = value.approx();
        if (!best_set || mid > best_mid) {
            best_set = true;
            best_mid = mid;
            best.best = value;
            best.argmax = point;
            best.support = point.weights.support(g.vertex_count());
            best.iterations = iterations;
            best.converged = converged;
        }
    };

    for (const auto& clique : candidates) {
        // Uniform seed: exact value 1 on a maximum clique when s | q.
        WeightVector uniform(std::vector<Rat>(static_cast<size_t>(g.vertex_count()), Rat(0)));
        clique.for_each([&](int v) { uniform[v] = Rat(1); });
        consider(normalize(g, s, uniform, config.precision_bits), 0, true);

        if (!config.refine || s == q) continue;  // f == h == 1 on the surface when s == q
        if (!have_terms) {
            f_poly = f_terms(g, s, q, 64);
            h_poly_terms = h_terms(g, s);
            have_terms = true;
        }
        AscentOutcome ascent = ascend(f_poly, h_poly_terms, clique.to_vector(), g.vertex_count(),
                                      s, static_cast<double>(config.seed_scale), config);
        if (ascent.value <= 0) continue;
        WeightVector refined(std::vector<Rat>(static_cast<size_t>(g.vertex_count()), Rat(0)));
        bool usable = false;
        clique.for_each([&](int v) {
            double value = ascent.x[static_cast<size_t>(v)];
            if (value > 1e-13) {
                refined[v] = rational_from_double(value);
                usable = true;
            }
        });
        if (!usable || clique_mass(g, s, refined) == 0) continue;
        consider(normalize(g, s, refined, config.precision_bits), ascent.iterations,
                 ascent.converged);
    }
    return best;
}

}  // namespace maclaurin
