#include <vector>

#include <doctest.h>

#include "superperm/bounds.hpp"
#include "superperm/cycle_census.hpp"
#include "superperm/pathfinder.hpp"

using namespace spm;

TEST_CASE("greedy cycle walk") {
    CHECK(greedy_cycle_path(1).word.str() == "1");
    CHECK(greedy_cycle_path(2).word.str() == "12");
    CHECK(greedy_cycle_path(3).word.str() == "12321");
    const SearchResult g4 = greedy_cycle_path(4);
    CHECK(g4.word.str() == "123421342143");
    CHECK(g4.length == 12);
    CHECK(g4.weight == 8);

    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        const SearchResult g = greedy_cycle_path(n);
        CHECK(g.length == g.weight + n);
        CHECK(verify_universal_word(g.word).ok);
        CHECK(BigInt(g.length) <= bound_B(n));
        if (n >= 2) CHECK(BigInt(g.length) >= bound_C(n));
        CHECK(g.path.covers_all());
    }

    SUBCASE("regression lengths") {
        CHECK(greedy_cycle_path(5).length == 41);
        CHECK(greedy_cycle_path(6).length == 164);
    }
    SUBCASE("deterministic") {
        CHECK(greedy_cycle_path(5).word == greedy_cycle_path(5).word);
    }
}

TEST_CASE("nearest neighbor walk") {
    CHECK(nearest_neighbor_path(2).word.str() == "12");
    const SearchResult nn4 = nearest_neighbor_path(4, inc_class(Permutation::parse("1234")));
    CHECK(nn4.length == 12);
    CHECK(nn4.word.str() == "123421342143");

    for (int n = 2; n <= 6; ++n) {
        CAPTURE(n);
        const SearchResult nn = nearest_neighbor_path(n);
        CHECK(nn.length == nn.weight + n);
        CHECK(verify_universal_word(nn.word).ok);
        CHECK(BigInt(nn.length) <= bound_S(n));
    }

    const SearchResult nn5 = nearest_neighbor_path(5);
    CHECK(BigInt(nn5.length) >= bound_C(5));
    CHECK(BigInt(nn5.length) <= bound_B(5));
    CHECK(nn5.length == 41);

    SUBCASE("non-default start") {
        const SearchResult r = nearest_neighbor_path(5, inc_class(Permutation::parse("15432")));
        CHECK(verify_universal_word(r.word).ok);
        CHECK(BigInt(r.length) <= bound_S(5));
        CHECK(r.path.vertices.front() ==
              canonical_rep_rank(Permutation::parse("15432")));
    }
    CHECK_THROWS(nearest_neighbor_path(4, inc_class(Permutation::parse("123"))));
}

TEST_CASE("exact search small n") {
    const SearchResult r1 = exact_min_word(1);
    CHECK(r1.length == 1);
    CHECK(r1.optimal);

    const SearchResult r3 = exact_min_word(3);
    CHECK(r3.length == 5);
    CHECK(r3.optimal);
    CHECK(verify_universal_word(r3.word).ok);

    const SearchResult r4 = exact_min_word(4);
    CHECK(r4.length == 12);
    CHECK(r4.optimal);
    CHECK(r4.nodes_expanded > 0);
    CHECK(verify_universal_word(r4.word).ok);

    SUBCASE("deterministic") {
        const SearchResult again = exact_min_word(4);
        CHECK(again.word == r4.word);
        CHECK(again.nodes_expanded == r4.nodes_expanded);
    }
    SUBCASE("parallel mode finds the same optimum") {
        SearchBudget b;
        b.threads = 2;
        const SearchResult par = exact_min_word(4, b);
        CHECK(par.optimal);
        CHECK(par.length == 12);
    }
}

TEST_CASE("exact search anytime behaviour") {
    SUBCASE("tiny node budget falls back to the greedy seed") {
        SearchBudget b;
        b.node_limit = 1;
        const SearchResult r = exact_min_word(5, b);
        CHECK_FALSE(r.optimal);
        CHECK(r.length == greedy_cycle_path(5).length);
        CHECK(verify_universal_word(r.word).ok);
    }
    SUBCASE("a few million nodes beat the seed at n = 5") {
        SearchBudget b;
        b.node_limit = 4'000'000;
        const SearchResult r = exact_min_word(5, b);
        CHECK(r.length <= 39);
        CHECK(verify_universal_word(r.word).ok);
        CHECK(r.length == r.weight + 5);
    }
}

TEST_CASE("budgeted exact runs stay valid at n = 6, 7") {
    for (int n : {6, 7}) {
        CAPTURE(n);
        SearchBudget b;
        b.node_limit = 200'000;
        const SearchResult r = exact_min_word(n, b);
        CHECK_FALSE(r.optimal);
        CHECK(verify_universal_word(r.word).ok);
        CHECK(r.length == r.weight + n);
        CHECK(BigInt(r.length) >= bound_C(n));
        CHECK(BigInt(r.length) <= bound_B(n));
    }
}

TEST_CASE("five-letter optimum is 38") {
    // The default budget exhausts the n = 5 space (about 19M nodes), so the
    // 38-letter witness below is minimal, one shorter than the widely
    // circulated best of 39.
    const SearchResult r5 = exact_min_word(5);
    CHECK(r5.optimal);
    CHECK(r5.length == 38);
    CHECK(r5.word.str() == "12345213452413254132154231542531245312");
    CHECK(verify_universal_word(r5.word).ok);
    CHECK(BigInt(r5.length) >= bound_C(5));
    CHECK(BigInt(r5.length) <= bound_B(5));
}

TEST_CASE("pruning potential is admissible on the optimal 4-letter path") {
    const SearchResult r4 = exact_min_word(4);
    REQUIRE(r4.optimal);
    const auto cycles = enumerate_one_cycles(4);
    std::vector<std::size_t> cycle_of(canonical_class_count(4));
    for (std::size_t ci = 0; ci < cycles.size(); ++ci)
        for (std::uint64_t v : cycles[ci]) cycle_of[v] = ci;

    std::vector<bool> visited(canonical_class_count(4), false);
    std::vector<bool> touched(cycles.size(), false);
    int weight_so_far = 0;
    std::size_t unvisited = canonical_class_count(4);
    std::size_t untouched = cycles.size();
    for (std::size_t i = 0; i < r4.path.vertices.size(); ++i) {
        const std::uint64_t v = r4.path.vertices[i];
        if (i > 0) weight_so_far += r4.path.step_weights[i - 1];
        if (!visited[v]) {
            visited[v] = true;
            --unvisited;
        }
        if (!touched[cycle_of[v]]) {
            touched[cycle_of[v]] = true;
            --untouched;
        }
        const int potential =
            static_cast<int>(unvisited) + static_cast<int>(untouched) - (unvisited ? 1 : 0);
        CHECK(weight_so_far + potential <= r4.weight);
    }
    CHECK(weight_so_far == r4.weight);
}

TEST_CASE("search result bookkeeping") {
    const SearchResult g = greedy_cycle_path(4);
    CHECK(method_name(g.method) == "greedy-cycle");
    CHECK(method_name(SearchMethod::NearestNeighbor) == "nearest-neighbor");
    CHECK(method_name(SearchMethod::Exact) == "exact");
    CHECK(g.elapsed.count() >= 0.0);
}
