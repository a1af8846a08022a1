#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "maclaurin/structure.hpp"
#include "maclaurin/weights.hpp"
#include "testutil.hpp"

using namespace maclaurin;
using namespace testutil;

TEST_CASE("diagnose_equality on the worked examples") {
    EqualityDiagnosis k4 = diagnose_equality(complete_graph(4), 2, 3, WeightVector::ones(4));
    CHECK(k4.applicable);
    CHECK(k4.complete_multipartite);
    CHECK(k4.part_count == 4);
    CHECK(k4.balanced);
    CHECK(k4.predicted == EqualityPrediction::Tight);
    for (const Rat& z : k4.part_mass) CHECK(z == Rat(1));

    EqualityDiagnosis p3 = diagnose_equality(path_graph(3), 1, 2, WeightVector::ones(3));
    CHECK(p3.complete_multipartite);
    REQUIRE(p3.part_mass.size() == 2);
    CHECK(p3.part_mass[0] == Rat(2));  // part {0,2}
    CHECK(p3.part_mass[1] == Rat(1));  // part {1}
    CHECK(!p3.balanced);
    CHECK(p3.predicted == EqualityPrediction::Strict);

    EqualityDiagnosis k22 = diagnose_equality(complete_multipartite({2, 2}), 1, 2,
                                              WeightVector::ones(4));
    CHECK(k22.balanced);
    CHECK(k22.predicted == EqualityPrediction::Tight);
    // Cross-check with the verifier: 4 * rho(1,2,2) = 16 = k_1^2.
    VerificationReport report = verify_localized(complete_multipartite({2, 2}), 1, 2,
                                                 WeightVector::ones(4));
    CHECK(report.verdict.kind == VerdictKind::ExactEquality);
    CHECK(report.lhs.exact_value() == Rat(16));
}

TEST_CASE("diagnose_equality boundary weights are undecided") {
    WeightVector x(std::vector<Rat>{Rat(0), Rat(1), Rat(1), Rat(1)});
    EqualityDiagnosis diag = diagnose_equality(complete_multipartite({2, 2}), 1, 2, x);
    CHECK(!diag.applicable);
    CHECK(diag.predicted == EqualityPrediction::Undecided);
}

TEST_CASE("diagnose_equality domain errors") {
    CHECK_THROWS_AS(diagnose_equality(complete_graph(3), 2, 2, WeightVector::ones(3)),
                    std::domain_error);
    CHECK_THROWS_AS(diagnose_equality(complete_graph(3), 3, 2, WeightVector::ones(3)),
                    std::domain_error);
    CHECK_THROWS_AS(diagnose_equality(path_graph(3), 1, 3, WeightVector::ones(3)),
                    std::domain_error);  // q beyond the clique number
}

TEST_CASE("diagnosis ignores weights outside the support") {
    // Support of s = 2 excludes the isolated vertex; its weight must not
    // affect the prediction.
    Graph g(5);  // K_4 plus an isolated vertex
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
    WeightVector x(std::vector<Rat>{Rat(1), Rat(1), Rat(1), Rat(1), Rat(0)});
    EqualityDiagnosis diag = diagnose_equality(g, 2, 3, x);
    CHECK(diag.applicable);  // zero sits off the support
    CHECK(diag.support.to_vector() == std::vector<int>{0, 1, 2, 3});
    CHECK(diag.predicted == EqualityPrediction::Tight);
}

TEST_CASE("canonical cliques") {
    Graph k3 = complete_graph(3);
    MultipartitePartition parts{{Bitset::of(3, {0, 1}), Bitset::of(3, {2})}};
    auto canon2 = canonical_cliques(k3, parts, 2);
    REQUIRE(canon2.size() == 2);  // {0,2} and {1,2}; {0,1} hits a part twice
    CHECK(canon2[0].to_vector() == std::vector<int>{0, 2});
    CHECK(canon2[1].to_vector() == std::vector<int>{1, 2});

    CHECK(canonical_cliques(k3, parts, 1).size() == 3);

    // In a genuine complete multipartite graph every clique is canonical.
    Graph cm = complete_multipartite({2, 1, 3});
    auto decomposition = complete_multipartite_decomposition(cm);
    REQUIRE(decomposition.has_value());
    for (int k = 1; k <= 3; ++k)
        CHECK(canonical_cliques(cm, *decomposition, k).size() ==
              enumerate_cliques(cm, k).size());
}

TEST_CASE("reduce_multipartite") {
    Graph k23 = complete_multipartite({2, 3});
    auto parts = complete_multipartite_decomposition(k23);
    REQUIRE(parts.has_value());
    ReducedGraph reduced = reduce_multipartite(k23, *parts, WeightVector::ones(5));
    CHECK(reduced.part_count == 2);
    CHECK(reduced.mass == std::vector<Rat>{Rat(2), Rat(3)});

    Graph k22 = complete_multipartite({2, 2});
    ReducedGraph r22 = reduce_multipartite(k22, *complete_multipartite_decomposition(k22),
                                           WeightVector::ones(4));
    CHECK(r22.mass == std::vector<Rat>{Rat(2), Rat(2)});

    // Singleton parts: z = x.
    Graph k3 = complete_graph(3);
    WeightVector x(std::vector<Rat>{Rat(1, 2), Rat(2, 3), Rat(5)});
    ReducedGraph r3 = reduce_multipartite(k3, *complete_multipartite_decomposition(k3), x);
    CHECK(r3.mass == x.values);

    // Invalid part structure.
    MultipartitePartition bogus{{Bitset::of(4, {0, 1}), Bitset::of(4, {2, 3})}};
    CHECK_THROWS_AS(reduce_multipartite(path_graph(4), bogus, WeightVector::ones(4)),
                    std::invalid_argument);
}

TEST_CASE("reduced identity holds for random multipartite graphs") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> part_size(1, 3);
    std::uniform_int_distribution<int> part_count(2, 4);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> sizes;
        for (int i = 0; i < part_count(rng); ++i) sizes.push_back(part_size(rng));
        Graph g = complete_multipartite(sizes);
        auto parts = complete_multipartite_decomposition(g);
        REQUIRE(parts.has_value());
        WeightVector x = random_weights(rng, g.vertex_count());
        // reduce_multipartite verifies h_{s,G}(x) = e_s(z) internally for
        // every s; reaching here means the identity chain held.
        ReducedGraph reduced = reduce_multipartite(g, *parts, x);
        CHECK(reduced.part_count == static_cast<int>(sizes.size()));
    }
}

TEST_CASE("sigma is omega everywhere in complete multipartite graphs") {
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> part_size(1, 3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> sizes{part_size(rng), part_size(rng), part_size(rng)};
        Graph g = complete_multipartite(sizes);
        int omega = clique_number(g);
        CHECK(omega == 3);
        for (int q = 1; q <= omega; ++q)
            for (const auto& [clique, sigma] : extension_map(g, q).entries) {
                (void)clique;
                CHECK(sigma == omega);
            }
    }
}
