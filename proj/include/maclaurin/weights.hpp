#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "maclaurin/cliques.hpp"
#include "maclaurin/interval.hpp"
#include "maclaurin/structure.hpp"

namespace maclaurin {

// Nonnegative exact rational weight per vertex.
struct WeightVector {
    std::vector<Rat> values;

    WeightVector() = default;
    explicit WeightVector(std::vector<Rat> v) : values(std::move(v)) {}

    static WeightVector ones(int n) { return WeightVector(std::vector<Rat>(static_cast<size_t>(n), Rat(1))); }

    int size() const { return static_cast<int>(values.size()); }
    const Rat& operator[](int v) const { return values[static_cast<size_t>(v)]; }
    Rat& operator[](int v) { return values[static_cast<size_t>(v)]; }

    // Throws unless dimension matches and every entry is >= 0.
    void validate(int n) const;
    bool strictly_positive() const;
    Bitset support(int n) const;

    // Product of entries over a vertex set.
    Rat product_over(const Bitset& verts) const;
};

// One rational per vertex line, "p/q" or integer; '#' starts a comment.
WeightVector parse_weights(const std::string& text, int expected_n);

// rho weight C(t,s)^{q/s} / C(t,q): exact when s | q, else an enclosure at
// the given precision.  Requires 1 <= s <= q <= t.
CertifiedValue extension_weight(int s, int q, int t, unsigned precision_bits = 256);

// Exact integer form of "rho is decreasing in t":
// C(t2,s)^q * C(t1,q)^s <= C(t1,s)^q * C(t2,q)^s for q <= t1 <= t2.
bool extension_weight_decreasing(int s, int q, int t1, int t2);

// Clique mass h: sum of weight products over all s-cliques (exact).
Rat clique_mass(const Graph& g, int s, const WeightVector& x);

// Localized clique mass f: sum over q-cliques of rho(sigma(I)) * x_I.
// Aggregates by extension number first, so each irrational coefficient is
// used once.
CertifiedValue localized_clique_mass(const Graph& g, int s, int q, const WeightVector& x,
                                     unsigned precision_bits = 256);
CertifiedValue localized_clique_mass(const Graph& g, const ExtensionMap& sigma, int s,
                                     const WeightVector& x, unsigned precision_bits);

enum class VerdictKind {
    CertifiedHolds,
    ExactEquality,
    TightWithin,
    CertifiedViolation,
    Inconclusive,
};

const char* to_string(VerdictKind kind);

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    // rhs - lhs for holds, lhs - rhs for violations.
    std::optional<CertifiedValue> gap;
    // Relative enclosure width for TightWithin / Inconclusive.
    std::optional<Rat> width;

    bool holds_or_tight() const {
        return kind == VerdictKind::CertifiedHolds || kind == VerdictKind::ExactEquality ||
               kind == VerdictKind::TightWithin;
    }
};

struct VerificationReport {
    std::string graph_id;
    int s = 0;
    int q = 0;
    CertifiedValue lhs;
    CertifiedValue rhs;
    Verdict verdict;
    std::map<int, long long> sigma_histogram;
    std::optional<EqualityDiagnosis> structure_check;
    std::int64_t elapsed_ns = 0;
};

struct VerifyOptions {
    PrecisionSchedule schedule = default_precision_schedule();
    bool with_structure = false;
    // Run the enclosure path even when s | q (exact/interval cross-check).
    bool force_enclosure = false;
    std::string graph_id = "-";
};

// Localized inequality f_{s,q}(x) <= h_s(x)^{q/s}.  Exact comparison when
// s | q; otherwise escalates enclosure precision until the sides separate,
// reporting TightWithin when they never do.
VerificationReport verify_localized(const Graph& g, int s, int q, const WeightVector& x,
                                    const VerifyOptions& options = {});

// Clique-count bound for graphs with clique number at most r:
// k_q <= C(r,q) (k_1/r)^q, exact rational comparison.
VerificationReport verify_zykov(const Graph& g, int r, int q, const std::string& graph_id = "-");

// Chain links (h_s/C(r,s))^{1/s} >= (h_{s+1}/C(r,s+1))^{1/(s+1)} for
// s = 1..r-1, via the exponent-free cross-multiplied form in exact rationals.
// Each report stores lhs <= rhs with lhs = h_{s+1}^s C(r,s)^{s+1}.
std::vector<VerificationReport> verify_chain(const Graph& g, int r, const WeightVector& x,
                                             const std::string& graph_id = "-");

}  // namespace maclaurin
