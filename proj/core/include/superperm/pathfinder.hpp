#ifndef SUPERPERM_PATHFINDER_HPP
#define SUPERPERM_PATHFINDER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "superperm/transition_graph.hpp"

// Constructions of short universal words as covering paths in H_n.
//
//   greedy-cycle      walk the current 1-cycle to the end via weight-1
//                     edges, then jump to the nearest vertex of an unvisited
//                     1-cycle; length <= B(n).
//   nearest-neighbor  always move to the cheapest unvisited vertex;
//                     length <= S(n).
//   exact             depth-first branch and bound; optimal when the space
//                     is exhausted, best-so-far otherwise.
//
// Ties everywhere break toward the lexicographically smallest canonical
// representative, so every method is reproducible bit for bit.

namespace spm {

enum class SearchMethod { GreedyCycle, NearestNeighbor, Exact };

std::string method_name(SearchMethod m);

struct SearchBudget {
    std::optional<double> time_limit_seconds;
    std::uint64_t node_limit = 50'000'000;
    int threads = 1;
};

struct SearchResult {
    int n = 0;
    SearchMethod method = SearchMethod::GreedyCycle;
    UniversalWord word{std::vector<Letter>{}, 1};
    int length = 0;  // = weight + n
    int weight = 0;
    bool optimal = false;
    std::chrono::duration<double> elapsed{0};
    std::uint64_t nodes_expanded = 0;  // exact only
    CoveringPath path;
};

SearchResult greedy_cycle_path(int n, const GraphBuildOptions& opts = {});
SearchResult nearest_neighbor_path(int n, const IncClass& start,
                                   const GraphBuildOptions& opts = {});
SearchResult nearest_neighbor_path(int n, const GraphBuildOptions& opts = {});

// Branch and bound over covering paths, every start vertex considered.
// Pruning uses the admissible potential
//     remaining weight >= unvisited + untouched 1-cycles - 1
// and the incumbent is seeded with the greedy-cycle result. Edge weights
// obey w(a,c) <= w(a,b) + w(b,c) (append the two column batches in turn),
// so a walk through an already-visited vertex is never needed and the
// search branches over unvisited successors only, in increasing weight.
// optimal is true iff the space was exhausted within budget.
SearchResult exact_min_word(int n, const SearchBudget& budget = {},
                            const GraphBuildOptions& opts = {});

// Callback form: invoked on every incumbent improvement.
SearchResult exact_min_word(int n, const SearchBudget& budget,
                            const GraphBuildOptions& opts,
                            void (*on_incumbent)(const SearchResult&, void*),
                            void* user);

}  // namespace spm

#endif
