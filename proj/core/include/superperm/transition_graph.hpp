#ifndef SUPERPERM_TRANSITION_GRAPH_HPP
#define SUPERPERM_TRANSITION_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "superperm/permutation.hpp"
#include "superperm/toric_matrix.hpp"

// The weighted complete digraphs on the (n-1)! equivalence classes:
//
//   H_n  vertices: value-shift classes. w(a,b) is the least number of
//        columns appended on the right of a member of a (dropping as many on
//        the left) that lands in b.
//   K_n  vertices: rotation classes. w(a,b) is the analogous count of rows
//        appended at the bottom (dropping at the top).
//
// Vertices are canonical representatives (words starting with 1) in
// lexicographic order in both graphs. Weights are 0 on the diagonal and lie
// in 1..n-1 off it. A covering path in H_n (every vertex visited at least
// once) corresponds to a universal word of length weight + n.

namespace spm {

enum class GraphKind { H, K };

// Least k >= 1 with the length-(n-k) suffix of a.rep equal to the prefix of
// the value shift of b.rep forced by the first suffix letter; 0 when a == b.
int edge_weight_H(const IncClass& a, const IncClass& b);

// Computed through the identity w_K(a,b) = w_H(inc(a.rep^-1), inc(b.rep^-1))
// (transposing a permutation matrix inverts the permutation and swaps the
// roles of rows and columns).
int edge_weight_K(const RotClass& a, const RotClass& b);

// Independent route: matches row words of class members directly. Kept
// separate from edge_weight_K so the two can be compared.
int edge_weight_K_rowscan(const RotClass& a, const RotClass& b);

// inc(pi * sigma): the unique weight-1 target, possibly the class itself.
IncClass weight1_successor(const IncClass& a);

struct GraphBuildOptions {
    int materialize_max_n = 7;  // full (n-1)!^2 weight table up to here
    int budget_max_n = 9;       // refuse to build beyond this
};

class TransitionGraph {
public:
    static TransitionGraph build(int n, GraphKind kind, const GraphBuildOptions& opts = {});

    int n() const { return n_; }
    GraphKind kind() const { return kind_; }
    std::uint64_t vertex_count() const { return reps_.size(); }
    bool materialized() const { return !weights_.empty(); }

    const Permutation& vertex_rep(std::uint64_t v) const { return reps_[v]; }
    std::uint64_t index_of(const Permutation& canonical_rep) const;

    // Edge weight by vertex index; table lookup when materialized, computed
    // on the fly otherwise.
    int weight(std::uint64_t from, std::uint64_t to) const;

    // Index of the weight-1 successor (may equal v).
    std::uint64_t weight1_successor_index(std::uint64_t v) const;

    std::string to_csv() const;
    // Vertices labelled with representative words; edges with weight <=
    // cutoff (default: the weight-1 skeleton).
    std::string to_dot(int cutoff = 1) const;

private:
    TransitionGraph() = default;
    int compute_weight(std::uint64_t from, std::uint64_t to) const;

    int n_ = 0;
    GraphKind kind_ = GraphKind::H;
    std::vector<Permutation> reps_;
    std::vector<std::uint8_t> weights_;  // V*V when materialized
};

TransitionGraph build_graph(int n, GraphKind kind, const GraphBuildOptions& opts = {});

// A walk through the graph covering every vertex. step_weights[i] is the
// realized cost of edge vertices[i] -> vertices[i+1]; for paths recovered
// from words it is the letter gap, which can exceed the graph weight.
struct CoveringPath {
    int n = 0;
    GraphKind kind = GraphKind::H;
    std::vector<std::uint64_t> vertices;
    std::vector<int> step_weights;

    int total_weight() const;
    bool covers_all() const;
};

// Moving from the concrete window `current` along an edge of weight k into
// the class of target_rep: returns the k appended letters and the new
// window (the shifted class member, pinned by the overlap).
std::pair<std::vector<Letter>, std::vector<Letter>> advance_window(
    const std::vector<Letter>& current, const Permutation& target_rep, int k);

// Realizes a covering path in H_n as a word: starts from the first vertex's
// representative and appends, per edge, the trailing letters of the concrete
// shifted member reached. Length = total graph weight + n.
UniversalWord path_to_word(const CoveringPath& p, const TransitionGraph& g);

// Scans the length-n windows of u that are permutations, in order, merging
// consecutive windows of equal class. Total step weight is |u| - n. Throws
// std::invalid_argument when u is not universal.
CoveringPath word_to_path(const UniversalWord& u, const TransitionGraph& g);

struct WordCheckReport {
    bool ok = false;
    std::vector<Permutation> missing;  // canonical reps of absent classes
};

// True iff every value-shift class has a member among the length-n factors.
WordCheckReport verify_universal_word(const UniversalWord& u);

}  // namespace spm

#endif
