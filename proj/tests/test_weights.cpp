#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "maclaurin/json_io.hpp"
#include "maclaurin/weights.hpp"
#include "testutil.hpp"

using namespace maclaurin;
using namespace testutil;

namespace {

WeightVector weights(std::vector<Rat> values) { return WeightVector(std::move(values)); }

}  // namespace

TEST_CASE("extension weight rho") {
    CertifiedValue r123 = extension_weight(1, 2, 3);
    REQUIRE(r123.is_exact());
    CHECK(r123.exact_value() == Rat(3));  // 3^2 / 3

    for (auto [s, t] : {std::pair{1, 1}, {2, 5}, {3, 3}, {4, 9}}) {
        CertifiedValue unit = extension_weight(s, s, t);
        REQUIRE(unit.is_exact());
        CHECK(unit.exact_value() == Rat(1));
    }

    CHECK_THROWS_AS(extension_weight(2, 3, 2), std::domain_error);  // t < q
    CHECK_THROWS_AS(extension_weight(3, 2, 5), std::domain_error);  // s > q

    // rho(2,3,9) is rational (C(9,2) = 36 is a square): 216/84 = 18/7.
    CertifiedValue r239 = extension_weight(2, 3, 9, 128);
    CHECK(r239.contains(Rat(18, 7)));
    CHECK(r239.width() < Rat(1, Int(1) << 100));
}

TEST_CASE("extension weight is decreasing in t (exact integer form)") {
    for (int q = 1; q <= 12; ++q)
        for (int s = 1; s <= q; ++s)
            for (int t1 = q; t1 <= 12; ++t1)
                for (int t2 = t1; t2 <= 12; ++t2)
                    CHECK(extension_weight_decreasing(s, q, t1, t2));
}

TEST_CASE("clique mass h") {
    CHECK(clique_mass(complete_graph(2), 2, weights({Rat(2), Rat(3)})) == Rat(6));
    CHECK(clique_mass(path_graph(3), 2, WeightVector::ones(3)) == Rat(2));
    CHECK(clique_mass(complete_graph(4), 2, WeightVector::ones(4)) == Rat(6));
    CHECK(clique_mass(path_graph(3), 3, WeightVector::ones(3)) == Rat(0));
    CHECK_THROWS_AS(clique_mass(path_graph(3), 2, WeightVector::ones(2)), std::invalid_argument);
    CHECK_THROWS_AS(clique_mass(path_graph(3), 2, weights({Rat(1), Rat(-1), Rat(1)})),
                    std::invalid_argument);
}

TEST_CASE("localized clique mass f") {
    CertifiedValue k3 = localized_clique_mass(complete_graph(3), 1, 2, WeightVector::ones(3));
    REQUIRE(k3.is_exact());
    CHECK(k3.exact_value() == Rat(9));  // 3 * rho(1,2,3)

    CertifiedValue p3 = localized_clique_mass(path_graph(3), 1, 2, WeightVector::ones(3));
    REQUIRE(p3.is_exact());
    CHECK(p3.exact_value() == Rat(8));  // 2 * rho(1,2,2)

    // K_4, s=2, q=3 at x=1: 4 * rho(2,3,4) = 6^{3/2}; bracket by squaring.
    CertifiedValue k4 = localized_clique_mass(complete_graph(4), 2, 3, WeightVector::ones(4));
    REQUIRE(!k4.is_exact());
    CHECK(rat_pow(k4.lower(), 2) <= Rat(216));
    CHECK(rat_pow(k4.upper(), 2) >= Rat(216));

    CertifiedValue none = localized_clique_mass(cycle_graph(5), 1, 3, WeightVector::ones(5));
    REQUIRE(none.is_exact());
    CHECK(none.exact_value() == Rat(0));
}

TEST_CASE("f collapses to h when q == s") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(rng, 6, 0.5);
        WeightVector x = random_weights(rng, 6, true);
        for (int s = 1; s <= 4; ++s) {
            CertifiedValue f = localized_clique_mass(g, s, s, x);
            REQUIRE(f.is_exact());
            CHECK(f.exact_value() == clique_mass(g, s, x));
        }
    }
}

TEST_CASE("homogeneity") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = random_graph(rng, 6, 0.6);
        WeightVector x = random_weights(rng, 6);
        Rat lambda(3, 7);
        WeightVector scaled = x;
        for (Rat& v : scaled.values) v *= lambda;

        CHECK(clique_mass(g, 2, scaled) == rat_pow(lambda, 2) * clique_mass(g, 2, x));

        int omega = clique_number(g);
        if (omega >= 2) {
            CertifiedValue direct = localized_clique_mass(g, 1, 2, scaled);
            CertifiedValue routed = cv_scale(localized_clique_mass(g, 1, 2, x), rat_pow(lambda, 2), 256);
            REQUIRE(direct.is_exact());
            REQUIRE(routed.is_exact());
            CHECK(direct.exact_value() == routed.exact_value());
        }
        if (omega >= 3) {
            // Interval path: both enclosures contain the common true value.
            CertifiedValue direct = localized_clique_mass(g, 2, 3, scaled);
            CertifiedValue routed = cv_scale(localized_clique_mass(g, 2, 3, x), rat_pow(lambda, 3), 256);
            CHECK(direct.lower() <= routed.upper());
            CHECK(routed.lower() <= direct.upper());
        }
    }
}

TEST_CASE("localized weights dominate the global constant") {
    // For every sigma value t <= r the exact monotonicity rho(r) <= rho(t)
    // holds, so the global bound follows term by term.
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(rng, 7, 0.5);
        int r = clique_number(g);
        if (r < 2) continue;
        for (int q = 2; q <= r; ++q)
            for (int s = 1; s <= q; ++s)
                for (const auto& [t, count] : extension_map(g, q).histogram()) {
                    (void)count;
                    CHECK(t <= r);
                    CHECK(extension_weight_decreasing(s, q, t, r));
                }
    }
}

TEST_CASE("verify_localized on the worked examples") {
    VerificationReport eq = verify_localized(complete_graph(3), 1, 2, WeightVector::ones(3));
    CHECK(eq.verdict.kind == VerdictKind::ExactEquality);
    CHECK(eq.lhs.exact_value() == Rat(9));
    CHECK(eq.rhs.exact_value() == Rat(9));
    CHECK(eq.sigma_histogram == std::map<int, long long>{{3, 3}});

    VerificationReport strict = verify_localized(path_graph(3), 1, 2, WeightVector::ones(3));
    CHECK(strict.verdict.kind == VerdictKind::CertifiedHolds);
    CHECK(strict.lhs.exact_value() == Rat(8));
    CHECK(strict.rhs.exact_value() == Rat(9));
    CHECK(strict.verdict.gap->exact_value() == Rat(1));

    VerificationReport tight = verify_localized(complete_graph(4), 2, 3, WeightVector::ones(4));
    CHECK(tight.verdict.kind == VerdictKind::TightWithin);
    REQUIRE(tight.verdict.width.has_value());
    CHECK(*tight.verdict.width <= Rat(1, Int(1) << 40));

    // Vacuous: no q-clique means f = 0.
    VerificationReport vacuous = verify_localized(cycle_graph(5), 1, 3, WeightVector::ones(5));
    CHECK(vacuous.verdict.kind == VerdictKind::CertifiedHolds);
    CHECK(vacuous.lhs.exact_value() == Rat(0));

    VerificationReport empty = verify_localized(Graph(3), 2, 2, WeightVector::ones(3));
    CHECK(empty.verdict.kind == VerdictKind::ExactEquality);
}

TEST_CASE("exact and enclosure paths agree on the verdict (s | q)") {
    for (const Graph& g : corpus_graphs("graphs_n1_n6.g6", 5)) {
        int omega = clique_number(g);
        WeightVector ones = WeightVector::ones(g.vertex_count());
        for (int q = 1; q <= omega; ++q)
            for (int s = 1; s <= q; ++s) {
                if (q % s != 0) continue;
                VerifyOptions forced;
                forced.force_enclosure = true;
                VerdictKind exact = verify_localized(g, s, q, ones).verdict.kind;
                VerdictKind boxed = verify_localized(g, s, q, ones, forced).verdict.kind;
                if (exact == VerdictKind::ExactEquality)
                    CHECK(boxed == VerdictKind::TightWithin);
                else
                    CHECK(boxed == exact);
            }
    }
}

TEST_CASE("verify_zykov") {
    VerificationReport c5 = verify_zykov(cycle_graph(5), 2, 2);
    CHECK(c5.verdict.kind == VerdictKind::CertifiedHolds);
    CHECK(c5.lhs.exact_value() == Rat(5));
    CHECK(c5.rhs.exact_value() == Rat(25, 4));

    VerificationReport kr = verify_zykov(complete_graph(3), 3, 3);
    CHECK(kr.verdict.kind == VerdictKind::ExactEquality);

    VerificationReport balanced = verify_zykov(complete_multipartite({2, 2}), 2, 2);
    CHECK(balanced.verdict.kind == VerdictKind::ExactEquality);
    CHECK(balanced.lhs.exact_value() == Rat(4));

    try {
        verify_zykov(complete_graph(3), 2, 2);
        FAIL("expected a precondition error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("3-clique") != std::string::npos);
    }
    CHECK_THROWS_AS(verify_zykov(cycle_graph(5), 2, 3), std::domain_error);
}

TEST_CASE("verify_chain") {
    auto kr = verify_chain(complete_graph(4), 4, WeightVector::ones(4));
    REQUIRE(kr.size() == 3);
    for (const auto& link : kr) CHECK(link.verdict.kind == VerdictKind::ExactEquality);

    auto c5 = verify_chain(cycle_graph(5), 2, WeightVector::ones(5));
    REQUIRE(c5.size() == 1);
    CHECK(c5[0].verdict.kind == VerdictKind::CertifiedHolds);
    CHECK(c5[0].lhs.exact_value() == Rat(20));  // h_2 * C(2,1)^2
    CHECK(c5[0].rhs.exact_value() == Rat(25));  // h_1^2 * C(2,2)

    // k_{s+1} = 0 makes the link vacuous (rhs side of the root chain is 0).
    auto edgeless = verify_chain(Graph(3), 2, WeightVector::ones(3));
    REQUIRE(edgeless.size() == 1);
    CHECK(edgeless[0].verdict.kind == VerdictKind::CertifiedHolds);
    CHECK(edgeless[0].lhs.exact_value() == Rat(0));

    CHECK_THROWS_AS(verify_chain(complete_graph(4), 3, WeightVector::ones(4)),
                    std::invalid_argument);
}

TEST_CASE("weights file parsing") {
    WeightVector x = parse_weights("1/2\n3\n# comment\n0\n", 3);
    CHECK(x.values == std::vector<Rat>{Rat(1, 2), Rat(3), Rat(0)});
    CHECK_THROWS_AS(parse_weights("1\n-2\n", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_weights("1\n2\n", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_weights("1\nabc\n", 2), std::invalid_argument);
}

TEST_CASE("report JSON schema") {
    VerifyOptions options;
    options.with_structure = true;
    options.graph_id = "Bw";
    VerificationReport report = verify_localized(complete_graph(3), 1, 2,
                                                 WeightVector::ones(3), options);
    nlohmann::json j = to_json(report);
    for (const char* key : {"graph", "s", "q", "lhs", "rhs", "verdict", "sigma_histogram",
                            "structure", "elapsed_ns"})
        CHECK(j.contains(key));
    CHECK(j["lhs"]["exact"] == "9");
    CHECK(j["verdict"]["kind"] == "exact_equality");
    CHECK(j["sigma_histogram"]["3"] == 3);
}
