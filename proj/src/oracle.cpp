#include "maclaurin/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace maclaurin {

int brute_extension_number(const Graph& g, const Bitset& clique) {
    int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("brute_extension_number: graph too large (n > 20)");
    if (clique.empty()) throw std::invalid_argument("brute_extension_number: empty vertex set");

    std::vector<int> members = clique.to_vector();
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            if (!g.has_edge(members[i], members[j]))
                throw std::invalid_argument("brute_extension_number: input is not a clique");

    std::vector<int> others;
    for (int v = 0; v < n; ++v)
        if (!clique.test(v)) others.push_back(v);

    int best = static_cast<int>(members.size());
    for (unsigned long mask = 1; mask < (1ul << others.size()); ++mask) {
        std::vector<int> candidate = members;
        for (size_t i = 0; i < others.size(); ++i)
            if (mask & (1ul << i)) candidate.push_back(others[i]);
        if (static_cast<int>(candidate.size()) <= best) continue;
        bool ok = true;
        for (size_t i = 0; i < candidate.size() && ok; ++i)
            for (size_t j = i + 1; j < candidate.size() && ok; ++j)
                if (!g.has_edge(candidate[i], candidate[j])) ok = false;
        if (ok) best = static_cast<int>(candidate.size());
    }
    return best;
}

namespace {

// Index-combination walk, deliberately separate from the bitset enumerator.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> pick(static_cast<size_t>(k));
    auto rec = [&](auto&& self, int depth, int start) -> void {
        if (depth == k) {
            fn(pick);
            return;
        }
        for (int v = start; v <= n - (k - depth); ++v) {
            pick[static_cast<size_t>(depth)] = v;
            self(self, depth + 1, v + 1);
        }
    };
    if (k >= 0 && k <= n) rec(rec, 0, 0);
}

bool pairwise_adjacent(const Graph& g, const std::vector<int>& verts) {
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (!g.has_edge(verts[i], verts[j])) return false;
    return true;
}

}  // namespace

VerificationReport brute_verify(const Graph& g, int s, int q, const PrecisionSchedule& schedule) {
    if (g.vertex_count() > 10)
        throw std::invalid_argument("brute_verify: graph too large (n > 10)");
    if (s < 1 || q < s) throw std::domain_error("brute_verify: requires 1 <= s <= q");

    long long ks = 0;
    for_each_subset(g.vertex_count(), s, [&](const std::vector<int>& verts) {
        if (pairwise_adjacent(g, verts)) ++ks;
    });
    std::vector<int> sigmas;
    for_each_subset(g.vertex_count(), q, [&](const std::vector<int>& verts) {
        if (!pairwise_adjacent(g, verts)) return;
        Bitset b(g.vertex_count());
        for (int v : verts) b.set(v);
        sigmas.push_back(brute_extension_number(g, b));
    });

    VerificationReport report;
    report.graph_id = "brute";
    report.s = s;
    report.q = q;
    for (int t : sigmas) ++report.sigma_histogram[t];

    if (q % s == 0) {
        Rat f(0);
        for (int t : sigmas)
            f += Rat(int_pow(binomial(t, s), static_cast<unsigned>(q / s)), binomial(t, q));
        Rat rhs = rat_pow(Rat(ks), static_cast<unsigned>(q));
        Rat root;
        if (!exact_nth_root(rhs, static_cast<unsigned>(s), root))
            throw std::logic_error("brute_verify: integer power must have an exact root");
        report.lhs = CertifiedValue::exact(f);
        report.rhs = CertifiedValue::exact(root);
        if (f < root) {
            report.verdict.kind = VerdictKind::CertifiedHolds;
            report.verdict.gap = CertifiedValue::exact(root - f);
        } else if (f == root) {
            report.verdict.kind = VerdictKind::ExactEquality;
            report.verdict.gap = CertifiedValue::exact(Rat(0));
        } else {
            report.verdict.kind = VerdictKind::CertifiedViolation;
            report.verdict.gap = CertifiedValue::exact(f - root);
        }
        return report;
    }

    // Fixed-point bounds with frac fractional bits, 4x the main precision.
    unsigned frac = 4 * schedule.max_bits();
    Int unit = Int(1) << frac;
    auto root_floor = [&](const Int& value) {  // floor(value^(1/s) * 2^frac)
        return iroot_floor(value << (frac * static_cast<unsigned>(s)), static_cast<unsigned>(s));
    };
    auto root_ceil = [&](const Int& value) {
        Int scaled = value << (frac * static_cast<unsigned>(s));
        Int r = iroot_floor(scaled, static_cast<unsigned>(s));
        if (int_pow(r, static_cast<unsigned>(s)) != scaled) ++r;
        return r;
    };

    Int f_lo = 0, f_hi = 0;
    for (int t : sigmas) {
        Int power = int_pow(binomial(t, s), static_cast<unsigned>(q));
        Int ctq = binomial(t, q);
        f_lo += div_floor(root_floor(power), ctq);
        f_hi += div_ceil(root_ceil(power), ctq);
    }
    Int r_lo = root_floor(int_pow(Int(ks), static_cast<unsigned>(q)));
    Int r_hi = root_ceil(int_pow(Int(ks), static_cast<unsigned>(q)));

    report.lhs = CertifiedValue::enclosure(Interval::hull(Rat(f_lo, unit), Rat(f_hi, unit), frac));
    report.rhs = CertifiedValue::enclosure(Interval::hull(Rat(r_lo, unit), Rat(r_hi, unit), frac));
    if (f_hi < r_lo) {
        report.verdict.kind = VerdictKind::CertifiedHolds;
        report.verdict.gap = CertifiedValue::enclosure(
            Interval::hull(Rat(r_lo - f_hi, unit), Rat(r_hi - f_lo, unit), frac));
    } else if (f_lo > r_hi) {
        report.verdict.kind = VerdictKind::CertifiedViolation;
        report.verdict.gap = CertifiedValue::enclosure(
            Interval::hull(Rat(f_lo - r_hi, unit), Rat(f_hi - r_lo, unit), frac));
    } else {
        Rat scale = Rat(r_hi, unit);
        if (scale < 1) scale = 1;
        Rat width = Rat((f_hi - f_lo) + (r_hi - r_lo), unit) / scale;
        report.verdict.kind = width <= schedule.tight_tolerance() ? VerdictKind::TightWithin
                                                                  : VerdictKind::Inconclusive;
        report.verdict.width = width;
    }
    return report;
}

namespace {

std::string trimmed(const std::string& line) {
    size_t begin = line.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    size_t end = line.find_last_not_of(" \t\r\n");
    return line.substr(begin, end - begin + 1);
}

}  // namespace

std::vector<SurveyRecord> survey(const std::vector<std::string>& lines,
                                 const SurveyOptions& options) {
    struct Item {
        long long line_index;
        const Graph* graph;
        std::string graph6;
        int s, q;
    };

    std::vector<SurveyRecord> records;
    std::vector<Graph> graphs;
    graphs.reserve(lines.size());
    std::vector<Item> items;

    for (size_t i = 0; i < lines.size(); ++i) {
        std::string text = trimmed(lines[i]);
        SurveyRecord base;
        base.line_index = static_cast<long long>(i);
        base.graph6 = text;
        try {
            graphs.push_back(parse_graph6(text));
        } catch (const std::exception& e) {
            base.error = e.what();
            records.push_back(base);
            continue;
        }
        const Graph& g = graphs.back();
        int omega = clique_number(g);
        for (int q = 1; q <= omega; ++q) {
            if (options.fixed_q > 0 && q != options.fixed_q) continue;
            if (options.max_q > 0 && q > options.max_q) continue;
            for (int s = 1; s <= q; ++s) {
                if (options.fixed_s > 0 && s != options.fixed_s) continue;
                if (options.only_divisible && q % s != 0) continue;
                items.push_back({static_cast<long long>(i), &g, text, s, q});
            }
        }
    }

    std::vector<SurveyRecord> item_records(items.size());
    auto run_item = [&](size_t idx) {
        const Item& item = items[idx];
        SurveyRecord rec;
        rec.line_index = item.line_index;
        rec.graph6 = item.graph6;
        rec.n = item.graph->vertex_count();
        rec.s = item.s;
        rec.q = item.q;
        VerifyOptions vo;
        vo.schedule = options.schedule;
        vo.graph_id = item.graph6;
        WeightVector ones = WeightVector::ones(item.graph->vertex_count());
        VerificationReport report = verify_localized(*item.graph, item.s, item.q, ones, vo);
        rec.verdict = report.verdict.kind;
        rec.tight = rec.verdict == VerdictKind::ExactEquality ||
                    rec.verdict == VerdictKind::TightWithin;
        if (item.s == item.q) {
            rec.predicted_tight = true;  // f == h identically
        } else {
            rec.predicted_tight = diagnose_equality(*item.graph, item.s, item.q, ones).predicted ==
                                  EqualityPrediction::Tight;
        }
        rec.discrepancy = rec.tight != rec.predicted_tight;
        item_records[idx] = std::move(rec);
    };

    int workers = std::max(1, options.parallelism);
    if (workers == 1 || items.size() <= 1) {
        for (size_t i = 0; i < items.size(); ++i) run_item(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1))
                    run_item(i);
            });
        for (auto& t : pool) t.join();
    }

    // Merge parse-error records (already in input order) with item records.
    std::vector<SurveyRecord> out;
    out.reserve(records.size() + item_records.size());
    size_t err_pos = 0, item_pos = 0;
    while (err_pos < records.size() || item_pos < item_records.size()) {
        bool take_error =
            err_pos < records.size() &&
            (item_pos >= item_records.size() ||
             records[err_pos].line_index < item_records[item_pos].line_index);
        if (take_error)
            out.push_back(records[err_pos++]);
        else
            out.push_back(item_records[item_pos++]);
    }
    return out;
}

}  // namespace maclaurin
