#include "superperm/transition_graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spm {

namespace {

// Least k >= 1 turning `a` into a value shift of `b` by appending k letters
// on the right and dropping k on the left. Both words canonical (first
// letter 1). The shift is forced by the first compared letter, so each k
// costs one linear scan. k = n-1 always succeeds, because a length-1 suffix
// only constrains the shift.
int weight_between_words(const std::vector<Letter>& a, const std::vector<Letter>& b) {
    const int n = static_cast<int>(a.size());
    if (a == b) return 0;
    for (int k = 1; k < n - 1; ++k) {
        const int s = a[static_cast<std::size_t>(k)] - 1;
        bool match = true;
        for (int i = 1; i < n - k; ++i) {
            const int want = (b[static_cast<std::size_t>(i)] - 1 + s) % n + 1;
            if (a[static_cast<std::size_t>(k + i)] != want) {
                match = false;
                break;
            }
        }
        if (match) return k;
    }
    return n - 1;
}

std::vector<Letter> canonical_word(const Permutation& p) { return IncClass(p).rep().word(); }

}  // namespace

int edge_weight_H(const IncClass& a, const IncClass& b) {
    if (a.size() != b.size()) throw std::invalid_argument("size mismatch in edge_weight_H");
    return weight_between_words(a.rep().word(), b.rep().word());
}

int edge_weight_K(const RotClass& a, const RotClass& b) {
    if (a.size() != b.size()) throw std::invalid_argument("size mismatch in edge_weight_K");
    return weight_between_words(canonical_word(inverse(a.rep())),
                                canonical_word(inverse(b.rep())));
}

int edge_weight_K_rowscan(const RotClass& a, const RotClass& b) {
    if (a.size() != b.size()) throw std::invalid_argument("size mismatch in edge_weight_K");
    if (a == b) return 0;
    const int n = a.size();
    // Row words of M(pi) and of every member of rot(b), matched literally.
    const std::vector<Letter> u = inverse(a.rep()).word();
    std::vector<std::vector<Letter>> targets;
    for (const auto& m : b.members()) targets.push_back(inverse(m).word());
    for (int k = 1; k < n; ++k) {
        for (const auto& v : targets) {
            bool match = true;
            for (int i = 0; i < n - k; ++i) {
                if (u[static_cast<std::size_t>(k + i)] != v[static_cast<std::size_t>(i)]) {
                    match = false;
                    break;
                }
            }
            if (match) return k;
        }
    }
    return n - 1;
}

IncClass weight1_successor(const IncClass& a) {
    return IncClass(rotate_word(a.rep(), 1));
}

TransitionGraph TransitionGraph::build(int n, GraphKind kind, const GraphBuildOptions& opts) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > opts.budget_max_n)
        throw std::invalid_argument("graph budget exceeded: n > " +
                                    std::to_string(opts.budget_max_n));
    TransitionGraph g;
    g.n_ = n;
    g.kind_ = kind;
    const std::uint64_t V = canonical_class_count(n);
    g.reps_.reserve(V);
    for (std::uint64_t r = 0; r < V; ++r) g.reps_.push_back(canonical_rep_unrank(n, r));
    if (n <= opts.materialize_max_n) {
        g.weights_.assign(V * V, 0);
        for (std::uint64_t i = 0; i < V; ++i)
            for (std::uint64_t j = 0; j < V; ++j)
                g.weights_[i * V + j] =
                    static_cast<std::uint8_t>(i == j ? 0 : g.compute_weight(i, j));
    }
    return g;
}

TransitionGraph build_graph(int n, GraphKind kind, const GraphBuildOptions& opts) {
    return TransitionGraph::build(n, kind, opts);
}

std::uint64_t TransitionGraph::index_of(const Permutation& canonical_rep) const {
    return canonical_rep_rank(canonical_rep);
}

int TransitionGraph::compute_weight(std::uint64_t from, std::uint64_t to) const {
    const Permutation& a = reps_[from];
    const Permutation& b = reps_[to];
    if (kind_ == GraphKind::H) return weight_between_words(a.word(), b.word());
    return weight_between_words(inverse(a).word(), inverse(b).word());
}

int TransitionGraph::weight(std::uint64_t from, std::uint64_t to) const {
    if (from == to) return 0;
    if (!weights_.empty()) return weights_[from * reps_.size() + to];
    return compute_weight(from, to);
}

std::uint64_t TransitionGraph::weight1_successor_index(std::uint64_t v) const {
    const Permutation succ_word = [&] {
        if (kind_ == GraphKind::H)
            return IncClass(rotate_word(reps_[v], 1)).rep();
        // K: rotate the inverse word (itself canonical since rep(1)=1), then
        // map back through inversion.
        return inverse(IncClass(rotate_word(inverse(reps_[v]), 1)).rep());
    }();
    return canonical_rep_rank(succ_word);
}

std::string TransitionGraph::to_csv() const {
    std::string out;
    const std::uint64_t V = vertex_count();
    for (std::uint64_t i = 0; i < V; ++i) {
        for (std::uint64_t j = 0; j < V; ++j) {
            if (j) out.push_back(',');
            out += std::to_string(weight(i, j));
        }
        out.push_back('\n');
    }
    return out;
}

std::string TransitionGraph::to_dot(int cutoff) const {
    std::ostringstream out;
    out << "digraph " << (kind_ == GraphKind::H ? "H" : "K") << n_ << " {\n";
    const std::uint64_t V = vertex_count();
    for (std::uint64_t i = 0; i < V; ++i)
        out << "  \"" << reps_[i].str() << "\";\n";
    for (std::uint64_t i = 0; i < V; ++i) {
        for (std::uint64_t j = 0; j < V; ++j) {
            if (i == j) continue;
            const int w = weight(i, j);
            if (w <= cutoff)
                out << "  \"" << reps_[i].str() << "\" -> \"" << reps_[j].str()
                    << "\" [label=" << w << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

int CoveringPath::total_weight() const {
    int s = 0;
    for (int w : step_weights) s += w;
    return s;
}

bool CoveringPath::covers_all() const {
    const std::uint64_t V = canonical_class_count(n);
    std::vector<bool> seen(V, false);
    std::uint64_t distinct = 0;
    for (std::uint64_t v : vertices) {
        if (v >= V) return false;
        if (!seen[v]) {
            seen[v] = true;
            ++distinct;
        }
    }
    return distinct == V;
}

std::pair<std::vector<Letter>, std::vector<Letter>> advance_window(
    const std::vector<Letter>& current, const Permutation& target_rep, int k) {
    const int n = static_cast<int>(current.size());
    const int s = current[static_cast<std::size_t>(k)] - 1;
    const Permutation shifted = shift_values(target_rep, s);
    for (int i = 0; i < n - k; ++i) {
        if (shifted(i + 1) != current[static_cast<std::size_t>(k + i)])
            throw std::logic_error("window transition does not overlap");
    }
    std::vector<Letter> appended(shifted.word().end() - k, shifted.word().end());
    return {appended, shifted.word()};
}

UniversalWord path_to_word(const CoveringPath& p, const TransitionGraph& g) {
    if (p.kind != GraphKind::H || g.kind() != GraphKind::H)
        throw std::invalid_argument("words correspond to H-graph paths");
    if (p.vertices.empty()) throw std::invalid_argument("malformed path: empty");
    if (p.n != g.n()) throw std::invalid_argument("path/graph size mismatch");
    std::vector<Letter> word = g.vertex_rep(p.vertices[0]).word();
    std::vector<Letter> window = word;
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        const std::uint64_t from = p.vertices[i - 1];
        const std::uint64_t to = p.vertices[i];
        if (from == to) throw std::invalid_argument("malformed path: repeated vertex");
        const int k = g.weight(from, to);
        auto [appended, next_window] = advance_window(window, g.vertex_rep(to), k);
        word.insert(word.end(), appended.begin(), appended.end());
        window = std::move(next_window);
    }
    return UniversalWord(std::move(word), p.n);
}

namespace {

bool window_is_permutation(const std::vector<Letter>& w, std::size_t at, int n) {
    unsigned seen = 0;
    for (int i = 0; i < n; ++i) {
        const Letter v = w[at + static_cast<std::size_t>(i)];
        if (v > n) return false;
        const unsigned bit = 1u << v;
        if (seen & bit) return false;
        seen |= bit;
    }
    return true;
}

}  // namespace

CoveringPath word_to_path(const UniversalWord& u, const TransitionGraph& g) {
    if (g.kind() != GraphKind::H)
        throw std::invalid_argument("words correspond to H-graph paths");
    if (u.n() != g.n()) throw std::invalid_argument("word/graph size mismatch");
    const int n = u.n();
    const auto& letters = u.letters();
    if (u.length() < n) throw std::invalid_argument("word is not universal: too short");

    CoveringPath path;
    path.n = n;
    path.kind = GraphKind::H;
    int last_pos = -1;
    for (std::size_t at = 0; at + static_cast<std::size_t>(n) <= letters.size(); ++at) {
        if (!window_is_permutation(letters, at, n)) continue;
        std::vector<Letter> w(letters.begin() + static_cast<std::ptrdiff_t>(at),
                              letters.begin() + static_cast<std::ptrdiff_t>(at) + n);
        const std::uint64_t v = canonical_rep_rank(IncClass(Permutation(std::move(w))).rep());
        if (!path.vertices.empty() && path.vertices.back() == v) {
            // Same class again: fold the gap into the next real step.
            continue;
        }
        if (!path.vertices.empty())
            path.step_weights.push_back(static_cast<int>(at) - last_pos);
        path.vertices.push_back(v);
        last_pos = static_cast<int>(at);
    }
    if (!path.covers_all())
        throw std::invalid_argument("word is not universal for the value-shift classes");
    return path;
}

WordCheckReport verify_universal_word(const UniversalWord& u) {
    const int n = u.n();
    if (n > 12)
        throw std::invalid_argument("verification budget: (n-1)! classes, n <= 12");
    const std::uint64_t V = canonical_class_count(n);
    std::vector<bool> covered(V, false);
    const auto& letters = u.letters();
    if (u.length() >= n) {
        for (std::size_t at = 0; at + static_cast<std::size_t>(n) <= letters.size(); ++at) {
            if (!window_is_permutation(letters, at, n)) continue;
            std::vector<Letter> w(letters.begin() + static_cast<std::ptrdiff_t>(at),
                                  letters.begin() + static_cast<std::ptrdiff_t>(at) + n);
            covered[canonical_rep_rank(IncClass(Permutation(std::move(w))).rep())] = true;
        }
    }
    WordCheckReport report;
    for (std::uint64_t r = 0; r < V; ++r)
        if (!covered[r]) report.missing.push_back(canonical_rep_unrank(n, r));
    report.ok = report.missing.empty();
    return report;
}

}  // namespace spm
