#include "maclaurin/blowup.hpp"

#include <numeric>
#include <stdexcept>

namespace maclaurin {

BlowupResult blowup(const BlowupSpec& spec) {
    int n = spec.base.vertex_count();
    if (static_cast<int>(spec.multiplicities.size()) != n)
        throw std::invalid_argument("blowup: multiplicity count does not match base");
    long long total = 0;
    for (long long m : spec.multiplicities) {
        if (m < 0) throw std::invalid_argument("blowup: negative multiplicity");
        total += m;
    }
    if (total > Graph::kMaxVertices)
        throw std::length_error("blowup: result exceeds the vertex limit");

    BlowupResult result{Graph(static_cast<int>(total)), {}};
    result.origin.reserve(static_cast<size_t>(total));
    std::vector<long long> offset(static_cast<size_t>(n), 0);
    long long next = 0;
    for (int v = 0; v < n; ++v) {
        offset[static_cast<size_t>(v)] = next;
        for (long long i = 0; i < spec.multiplicities[static_cast<size_t>(v)]; ++i)
            result.origin.push_back(v);
        next += spec.multiplicities[static_cast<size_t>(v)];
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!spec.base.has_edge(u, v)) continue;
            for (long long i = 0; i < spec.multiplicities[static_cast<size_t>(u)]; ++i)
                for (long long j = 0; j < spec.multiplicities[static_cast<size_t>(v)]; ++j)
                    result.graph.add_edge(static_cast<int>(offset[static_cast<size_t>(u)] + i),
                                          static_cast<int>(offset[static_cast<size_t>(v)] + j));
        }
    }
    return result;
}

std::vector<long long> integerize_weights(const WeightVector& x) {
    Int lcm_den = 1;
    for (const Rat& v : x.values) {
        if (v < 0) throw std::invalid_argument("integerize_weights: negative weight");
        Int d = denominator(v);
        lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, d) * d;
    }
    std::vector<Int> scaled;
    Int common = 0;
    for (const Rat& v : x.values) {
        Int value = numerator(v) * (lcm_den / denominator(v));
        common = boost::multiprecision::gcd(common, value);
        scaled.push_back(value);
    }
    if (common == 0) common = 1;
    std::vector<long long> out;
    for (const Int& value : scaled) {
        Int reduced = value / common;
        if (reduced > (Int(1) << 62))
            throw std::overflow_error("integerize_weights: entry exceeds 2^62");
        out.push_back(static_cast<long long>(reduced));
    }
    return out;
}

BlowupCheckReport check_blowup_equivalence(const Graph& base, int s, int q,
                                           const std::vector<long long>& multiplicities,
                                           unsigned precision_bits) {
    if (s < 1 || q < s) throw std::domain_error("check_blowup_equivalence: requires 1 <= s <= q");
    BlowupResult blown = blowup({base, multiplicities});

    WeightVector x;
    for (long long m : multiplicities) x.values.emplace_back(m);

    BlowupCheckReport report;
    report.s = s;
    report.q = q;
    report.blowup_clique_count = clique_count(blown.graph, s);
    report.base_mass = clique_mass(base, s, x);
    report.count_identity = Rat(report.blowup_clique_count) == report.base_mass;

    // Every q-clique of the blowup picks at most one vertex per block, so its
    // provenance image is a base q-clique; sigma must match entry by entry.
    report.sigma_preserved = true;
    ExtensionMap blown_sigma = extension_map(blown.graph, q);
    ExtensionMap base_sigma = extension_map(base, q);
    for (const auto& [clique, sigma_value] : blown_sigma.entries) {
        Bitset image(base.vertex_count());
        clique.for_each([&](int v) { image.set(blown.origin[static_cast<size_t>(v)]); });
        if (image.count() != q || base_sigma.at(image) != sigma_value) {
            report.sigma_preserved = false;
            break;
        }
        ++report.cliques_checked;
    }

    report.f_blowup = localized_clique_mass(blown.graph, s, q,
                                            WeightVector::ones(blown.graph.vertex_count()),
                                            precision_bits);
    report.f_base = localized_clique_mass(base, s, q, x, precision_bits);
    if (report.f_blowup.is_exact() && report.f_base.is_exact()) {
        report.f_consistent = report.f_blowup.exact_value() == report.f_base.exact_value();
    } else {
        report.f_consistent = Interval::overlap(report.f_blowup.to_interval(precision_bits),
                                                report.f_base.to_interval(precision_bits));
    }
    report.ok = report.count_identity && report.sigma_preserved && report.f_consistent;
    return report;
}

}  // namespace maclaurin
