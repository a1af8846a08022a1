#pragma once

#include <vector>

#include "maclaurin/weights.hpp"

namespace maclaurin {

// Point of the constraint surface h_s = 1, stored as an exact rational
// direction plus the normalizing scale s-th root.  When the root is rational
// the scale is folded into the direction and direction_mass == 1.
struct SimplexPoint {
    int s = 1;
    WeightVector weights;   // direction, >= 0
    Rat direction_mass;     // h_s(weights), > 0
    CertifiedValue scale;   // direction_mass^(-1/s)
    CertifiedValue mass;    // h_s at the scaled point; contains (or equals) 1

    bool exactly_normalized() const { return direction_mass == 1; }
};

SimplexPoint normalize(const Graph& g, int s, const WeightVector& x,
                       unsigned precision_bits = 256);

// d h_s / d x_w: mass of the s-cliques through w, each without w's factor.
Rat partial_clique_mass(const Graph& g, int s, const WeightVector& x, int w);

// f at the scaled point: direction_mass^(-q/s) * f(direction), exact when
// s | q.
CertifiedValue localized_mass_at(const Graph& g, int q, const SimplexPoint& point,
                                 unsigned precision_bits = 256);

// Zero-out shift across a non-edge uv: moves all of u's weight onto v at the
// exchange rate of the h partials, keeping h exactly invariant.
struct ShiftOutcome {
    SimplexPoint point;
    Rat xi_u, xi_v;  // offsets applied in direction coordinates
    CertifiedValue f_before, f_after;
    bool f_preserved = false;  // exact equality, or overlapping enclosures
};

ShiftOutcome symmetrize_shift(const Graph& g, int s, int q, const SimplexPoint& x, int u, int v,
                              unsigned precision_bits = 256);

struct OptimizeConfig {
    double rel_tol = 1e-12;
    int max_iterations = 10000;
    unsigned precision_bits = 256;
    bool refine = true;
    // Gradient-proportionality gate for descend_support.
    bool require_critical = false;
    double critical_residual_tol = 1e-9;
    // Pre-scales ascent seeds; the argmax support must not depend on it.
    Rat seed_scale = Rat(1);
};

struct CriticalityCheck {
    double lambda = 0.0;    // least-squares fit of grad f = lambda * grad h
    double residual = 0.0;  // max-norm residual over the support
};

CriticalityCheck check_criticality(const Graph& g, int s, int q, const SimplexPoint& point);

// Applies shifts across non-edges inside the support until it induces a
// clique.  Support vertices in no s-clique of the support are dropped.
struct DescentResult {
    SimplexPoint point;
    std::vector<ShiftOutcome> shifts;
    std::vector<int> dropped;
    CriticalityCheck criticality;
};

DescentResult descend_support(const Graph& g, int s, int q, const SimplexPoint& x,
                              const OptimizeConfig& config = {});

struct OptimizationResult {
    CertifiedValue best;
    SimplexPoint argmax;
    Bitset support;
    int iterations = 0;
    bool converged = false;
};

// Maximises f over the surface h_s = 1: uniform seeds on maximal cliques,
// each refined by projected multiplicative ascent, best candidate wins.
OptimizationResult maximize(const Graph& g, int s, int q, const OptimizeConfig& config = {});

}  // namespace maclaurin
