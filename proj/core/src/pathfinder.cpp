#include "superperm/pathfinder.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstring>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace spm {

std::string method_name(SearchMethod m) {
    switch (m) {
        case SearchMethod::GreedyCycle: return "greedy-cycle";
        case SearchMethod::NearestNeighbor: return "nearest-neighbor";
        case SearchMethod::Exact: return "exact";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct CycleInfo {
    std::vector<std::uint32_t> cycle_of;
    std::uint32_t cycle_count = 0;
};

CycleInfo cycle_info(const TransitionGraph& g) {
    const std::uint64_t V = g.vertex_count();
    CycleInfo info;
    info.cycle_of.assign(V, std::numeric_limits<std::uint32_t>::max());
    for (std::uint64_t v = 0; v < V; ++v) {
        if (info.cycle_of[v] != std::numeric_limits<std::uint32_t>::max()) continue;
        std::uint64_t cur = v;
        do {
            info.cycle_of[cur] = info.cycle_count;
            cur = g.weight1_successor_index(cur);
        } while (cur != v);
        ++info.cycle_count;
    }
    return info;
}

SearchResult finish(int n, SearchMethod method, const TransitionGraph& g, CoveringPath path,
                    Clock::time_point t0, bool optimal, std::uint64_t nodes) {
    SearchResult r;
    r.n = n;
    r.method = method;
    r.path = std::move(path);
    r.word = path_to_word(r.path, g);
    r.weight = r.path.total_weight();
    r.length = r.word.length();
    r.optimal = optimal;
    r.nodes_expanded = nodes;
    r.elapsed = Clock::now() - t0;
    if (r.length != r.weight + n) throw std::logic_error("length != weight + n");
    return r;
}

}  // namespace

SearchResult greedy_cycle_path(int n, const GraphBuildOptions& opts) {
    const auto t0 = Clock::now();
    const TransitionGraph g = TransitionGraph::build(n, GraphKind::H, opts);
    const CycleInfo info = cycle_info(g);
    const std::uint64_t V = g.vertex_count();

    std::vector<char> visited(V, 0);
    std::vector<char> cycle_visited(info.cycle_count, 0);
    CoveringPath path;
    path.n = n;
    std::uint64_t cur = 0;  // identity representative
    std::uint64_t covered = 1;
    visited[cur] = 1;
    cycle_visited[info.cycle_of[cur]] = 1;
    path.vertices.push_back(cur);

    auto walk_own_cycle = [&] {
        for (;;) {
            const std::uint64_t nxt = g.weight1_successor_index(cur);
            if (nxt == cur || visited[nxt]) return;
            visited[nxt] = 1;
            ++covered;
            path.vertices.push_back(nxt);
            path.step_weights.push_back(1);
            cur = nxt;
        }
    };

    walk_own_cycle();
    while (covered < V) {
        int best_w = std::numeric_limits<int>::max();
        std::uint64_t best_v = V;
        for (std::uint64_t v = 0; v < V; ++v) {
            if (visited[v] || cycle_visited[info.cycle_of[v]]) continue;
            const int w = g.weight(cur, v);
            if (w < best_w) {  // ties keep the lexicographically first vertex
                best_w = w;
                best_v = v;
            }
        }
        visited[best_v] = 1;
        cycle_visited[info.cycle_of[best_v]] = 1;
        ++covered;
        path.vertices.push_back(best_v);
        path.step_weights.push_back(best_w);
        cur = best_v;
        walk_own_cycle();
    }
    return finish(n, SearchMethod::GreedyCycle, g, std::move(path), t0, false, 0);
}

SearchResult nearest_neighbor_path(int n, const IncClass& start, const GraphBuildOptions& opts) {
    if (start.size() != n) throw std::invalid_argument("start class has the wrong size");
    const auto t0 = Clock::now();
    const TransitionGraph g = TransitionGraph::build(n, GraphKind::H, opts);
    const std::uint64_t V = g.vertex_count();

    std::vector<char> visited(V, 0);
    CoveringPath path;
    path.n = n;
    std::uint64_t cur = g.index_of(start.rep());
    visited[cur] = 1;
    path.vertices.push_back(cur);

    for (std::uint64_t covered = 1; covered < V; ++covered) {
        int best_w = std::numeric_limits<int>::max();
        std::uint64_t best_v = V;
        for (std::uint64_t v = 0; v < V; ++v) {
            if (visited[v]) continue;
            const int w = g.weight(cur, v);
            if (w < best_w) {
                best_w = w;
                best_v = v;
            }
        }
        visited[best_v] = 1;
        path.vertices.push_back(best_v);
        path.step_weights.push_back(best_w);
        cur = best_v;
    }
    return finish(n, SearchMethod::NearestNeighbor, g, std::move(path), t0, false, 0);
}

SearchResult nearest_neighbor_path(int n, const GraphBuildOptions& opts) {
    return nearest_neighbor_path(n, IncClass(Permutation::identity(n)), opts);
}

namespace {

struct SharedSearchState {
    std::atomic<int> best_weight;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> next_start{0};
    std::atomic<bool> aborted{false};
    std::mutex best_mutex;
    CoveringPath best_path;
    void (*on_incumbent)(const SearchResult&, void*) = nullptr;
    void* user = nullptr;
};

class ExactWorker {
public:
    ExactWorker(const TransitionGraph& g, const CycleInfo& info, const SearchBudget& budget,
                Clock::time_point t0, SharedSearchState& shared)
        : g_(g), info_(info), budget_(budget), t0_(t0), shared_(shared),
          V_(g.vertex_count()) {
        visited_.assign(V_, 0);
        cycle_visits_.assign(info.cycle_count, 0);
        if (g_.materialized()) {
            succ_.reserve(V_ * (V_ - 1));
            std::vector<std::uint32_t> row;
            for (std::uint64_t v = 0; v < V_; ++v) {
                row.clear();
                for (std::uint64_t t = 0; t < V_; ++t)
                    if (t != v) row.push_back(static_cast<std::uint32_t>(t));
                std::sort(row.begin(), row.end(), [&](std::uint32_t a, std::uint32_t b) {
                    const int wa = g_.weight(v, a), wb = g_.weight(v, b);
                    return wa != wb ? wa < wb : a < b;
                });
                succ_.insert(succ_.end(), row.begin(), row.end());
            }
        }
    }

    void run() {
        for (;;) {
            const std::uint64_t s = shared_.next_start.fetch_add(1, std::memory_order_relaxed);
            if (s >= V_ || shared_.aborted.load(std::memory_order_relaxed)) break;
            std::fill(visited_.begin(), visited_.end(), 0);
            std::fill(cycle_visits_.begin(), cycle_visits_.end(), 0);
            path_.assign(1, s);
            visited_[s] = 1;
            cycle_visits_[info_.cycle_of[s]] = 1;
            unvisited_ = V_ - 1;
            untouched_ = info_.cycle_count - 1;
            dfs(s, 0);
            flush_nodes();
            if (out_of_budget_) break;
        }
    }

private:
    void flush_nodes() {
        shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed);
        local_nodes_ = 0;
    }

    bool budget_exceeded() {
        if (budget_.node_limit &&
            shared_.nodes.load(std::memory_order_relaxed) + local_nodes_ > budget_.node_limit)
            return true;
        if (budget_.time_limit_seconds && (local_nodes_ & 1023) == 0) {
            const std::chrono::duration<double> dt = Clock::now() - t0_;
            if (dt.count() > *budget_.time_limit_seconds) return true;
        }
        return false;
    }

    void record_improvement(int weight) {
        std::lock_guard<std::mutex> lock(shared_.best_mutex);
        if (weight >= shared_.best_weight.load(std::memory_order_relaxed)) return;
        shared_.best_weight.store(weight, std::memory_order_relaxed);
        CoveringPath p;
        p.n = g_.n();
        p.vertices.assign(path_.begin(), path_.end());
        p.step_weights.clear();
        for (std::size_t i = 1; i < path_.size(); ++i)
            p.step_weights.push_back(g_.weight(path_[i - 1], path_[i]));
        shared_.best_path = p;
        if (shared_.on_incumbent) {
            SearchResult r;
            r.n = g_.n();
            r.method = SearchMethod::Exact;
            r.path = std::move(p);
            r.word = path_to_word(r.path, g_);
            r.weight = weight;
            r.length = r.word.length();
            r.optimal = false;
            r.elapsed = Clock::now() - t0_;
            r.nodes_expanded = shared_.nodes.load(std::memory_order_relaxed) + local_nodes_;
            shared_.on_incumbent(r, shared_.user);
        }
    }

    void dfs(std::uint64_t v, int weight) {
        if (++local_nodes_ >= 8192) flush_nodes();
        if (budget_exceeded()) {
            out_of_budget_ = true;
            shared_.aborted.store(true, std::memory_order_relaxed);
            return;
        }
        const int best = shared_.best_weight.load(std::memory_order_relaxed);
        if (unvisited_ == 0) {
            if (weight < best) record_improvement(weight);
            return;
        }
        // Admissible: each unvisited vertex costs >= 1 and each untouched
        // 1-cycle is entered over an edge of weight >= 2, minus the slack of
        // the step we are standing on.
        if (weight + static_cast<int>(unvisited_) + static_cast<int>(untouched_) - 1 >= best)
            return;

        auto try_move = [&](std::uint64_t t, int w) -> bool {
            // Successors ascend by weight: when even the most optimistic
            // continuation through an edge of weight w is beaten, the rest
            // of the row is too.
            const int best_now = shared_.best_weight.load(std::memory_order_relaxed);
            const int untouched_after = untouched_ > 0 ? static_cast<int>(untouched_) - 1 : 0;
            if (weight + w + static_cast<int>(unvisited_) - 1 + untouched_after - 1 >= best_now)
                return false;
            const std::uint32_t c = info_.cycle_of[t];
            visited_[t] = 1;
            --unvisited_;
            const bool new_cycle = cycle_visits_[c]++ == 0;
            if (new_cycle) --untouched_;
            path_.push_back(t);
            dfs(t, weight + w);
            path_.pop_back();
            if (new_cycle) ++untouched_;
            --cycle_visits_[c];
            ++unvisited_;
            visited_[t] = 0;
            return !out_of_budget_;
        };

        if (!succ_.empty()) {
            const std::uint32_t* row = succ_.data() + v * (V_ - 1);
            for (std::uint64_t i = 0; i < V_ - 1; ++i) {
                const std::uint64_t t = row[i];
                if (visited_[t]) continue;
                if (!try_move(t, g_.weight(v, t))) break;
            }
        } else {
            const int n = g_.n();
            for (int w = 1; w <= n - 1; ++w) {
                bool keep_going = true;
                for (std::uint64_t t = 0; t < V_ && keep_going; ++t) {
                    if (visited_[t] || g_.weight(v, t) != w) continue;
                    keep_going = try_move(t, w);
                }
                if (!keep_going) break;
            }
        }
    }

    const TransitionGraph& g_;
    const CycleInfo& info_;
    const SearchBudget& budget_;
    Clock::time_point t0_;
    SharedSearchState& shared_;
    std::uint64_t V_;
    std::vector<char> visited_;
    std::vector<std::uint32_t> cycle_visits_;
    std::vector<std::uint64_t> path_;
    std::vector<std::uint32_t> succ_;
    std::uint64_t unvisited_ = 0;
    std::uint32_t untouched_ = 0;
    std::uint64_t local_nodes_ = 0;
    bool out_of_budget_ = false;
};

}  // namespace

SearchResult exact_min_word(int n, const SearchBudget& budget, const GraphBuildOptions& opts,
                            void (*on_incumbent)(const SearchResult&, void*), void* user) {
    const auto t0 = Clock::now();
    const TransitionGraph g = TransitionGraph::build(n, GraphKind::H, opts);
    const CycleInfo info = cycle_info(g);

    SearchResult seed = greedy_cycle_path(n, opts);

    SharedSearchState shared;
    shared.best_weight.store(seed.weight);
    shared.best_path = seed.path;
    shared.on_incumbent = on_incumbent;
    shared.user = user;

    const int threads = std::max(1, budget.threads);
    if (threads == 1) {
        ExactWorker worker(g, info, budget, t0, shared);
        worker.run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i)
            pool.emplace_back([&] { ExactWorker(g, info, budget, t0, shared).run(); });
        for (auto& th : pool) th.join();
    }

    const bool exhausted = !shared.aborted.load() &&
                           shared.next_start.load() >= g.vertex_count();
    SearchResult result = finish(n, SearchMethod::Exact, g, shared.best_path, t0, exhausted,
                                 shared.nodes.load());
    return result;
}

SearchResult exact_min_word(int n, const SearchBudget& budget, const GraphBuildOptions& opts) {
    return exact_min_word(n, budget, opts, nullptr, nullptr);
}

}  // namespace spm
