#include "clustered/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <limits>
#include <string>
#include <thread>

#include "clustered/error.hpp"

namespace clustered {

namespace {

using Mask = std::uint64_t;
constexpr int kMaxBitVertices = 64;

Mask bit(int v) { return Mask{1} << v; }

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    return adj;
}

// Component of `start` inside `allowed` (which must contain start).
Mask component_of(const std::vector<Mask>& adj, Mask allowed, int start) {
    Mask reach = bit(start), frontier = reach;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1)
            next |= adj[std::countr_zero(f)];
        next &= allowed & ~reach;
        reach |= next;
        frontier = next;
    }
    return reach;
}

// Eccentricity of `start` within the component `comp`.
int eccentricity(const std::vector<Mask>& adj, Mask comp, int start) {
    Mask reach = bit(start), frontier = reach;
    int radius = 0;
    while (true) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1)
            next |= adj[std::countr_zero(f)];
        next &= comp & ~reach;
        if (!next)
            return radius;
        reach |= next;
        frontier = next;
        ++radius;
    }
}

// Runs task(i) for i in [0, count) on `threads` workers, handing out indices
// in increasing order.
void run_tasks(std::size_t count, int threads, const std::function<void(std::size_t)>& task) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
            task(i);
    };
    const int extra = std::max(0, std::min<int>(threads, static_cast<int>(count)) - 1);
    std::vector<std::jthread> pool;
    pool.reserve(extra);
    for (int t = 0; t < extra; ++t)
        pool.emplace_back(worker);
    worker();
}

void lower_to(std::atomic<int>& target, int value) {
    int current = target.load();
    while (value < current && !target.compare_exchange_weak(current, value)) {
    }
}

void lower_to(std::atomic<std::size_t>& target, std::size_t value) {
    std::size_t current = target.load();
    while (value < current && !target.compare_exchange_weak(current, value)) {
    }
}

// ---------------------------------------------------------------------------
// Exact min-max search

class MinMaxSearch {
public:
    MinMaxSearch(const Graph& g, int k, const std::vector<int>& fixed)
        : adj_(adjacency_masks(g)), n_(g.vertex_count()), k_(k), fixed_(fixed) {
        std::vector<char> color_fixed(k + 1, 0);
        std::vector<char> seen(n_, 0);
        for (Vertex v = 0; v < n_; ++v)
            if (fixed_[v]) {
                color_fixed[fixed_[v]] = 1;
                order_seed_.push_back(v);
                seen[v] = 1;
            }
        for (int c = 1; c <= k; ++c)
            (color_fixed[c] ? fixed_colors_ : free_colors_).push_back(c);

        // BFS from the precolored set, then from each untouched component.
        std::vector<Vertex> queue = order_seed_;
        auto drain = [&](std::size_t head) {
            for (; head < queue.size(); ++head)
                for (Vertex w : g.neighbors(queue[head]))
                    if (!seen[w]) {
                        seen[w] = 1;
                        queue.push_back(w);
                        free_order_.push_back(w);
                    }
        };
        drain(0);
        for (Vertex s = 0; s < n_; ++s)
            if (!seen[s]) {
                seen[s] = 1;
                queue.push_back(s);
                free_order_.push_back(s);
                drain(queue.size() - 1);
            }
    }

    int solve(int threads) {
        State root = initial_state();
        floor_ = std::max(1, root.max);
        best_.store(n_ + 1);
        if (free_order_.empty()) {
            best_.store(root.max);
            return root.max;
        }

        // Fixed-depth prefixes keep the task list independent of thread count.
        std::vector<std::vector<int>> prefixes;
        std::size_t depth = 0;
        for (std::size_t width = 1; depth < free_order_.size() && width * k_ <= 4096; width *= k_)
            ++depth;
        collect_prefixes(root, 0, depth, {}, prefixes);
        run_tasks(prefixes.size(), threads, [&](std::size_t i) {
            State s = root;
            for (std::size_t j = 0; j < prefixes[i].size(); ++j)
                apply(s, free_order_[j], prefixes[i][j]);
            descend(s, prefixes[i].size());
        });
        return best_.load();
    }

    // Lexicographically least coloring (in vertex order) whose components
    // all have at most `limit` vertices.
    std::vector<int> least_witness(int limit) const {
        std::vector<int> colors(n_, 0);
        std::vector<Mask> masks(k_ + 1, 0);
        std::function<bool(int)> place = [&](int v) -> bool {
            if (v == n_)
                return true;
            const int lo = fixed_[v] ? fixed_[v] : 1;
            const int hi = fixed_[v] ? fixed_[v] : k_;
            for (int c = lo; c <= hi; ++c) {
                const Mask comp = component_of(adj_, masks[c] | bit(v), v);
                if (std::popcount(comp) > limit)
                    continue;
                masks[c] |= bit(v);
                colors[v] = c;
                if (place(v + 1))
                    return true;
                masks[c] &= ~bit(v);
            }
            return false;
        };
        if (!place(0))
            throw std::logic_error("no coloring attains the computed optimum");
        return colors;
    }

private:
    struct State {
        std::vector<Mask> masks;
        int max = 0;
        int used_free = 0;
    };

    State initial_state() const {
        State s{std::vector<Mask>(k_ + 1, 0), 0, 0};
        for (Vertex v : order_seed_)
            apply(s, v, fixed_[v]);
        return s;
    }

    void apply(State& s, Vertex v, int c) const {
        s.masks[c] |= bit(v);
        s.max = std::max(s.max, std::popcount(component_of(adj_, s.masks[c], v)));
        if (!free_colors_.empty() && s.used_free < static_cast<int>(free_colors_.size()) &&
            c == free_colors_[s.used_free])
            ++s.used_free;
    }

    std::vector<int> allowed(const State& s) const {
        std::vector<int> colors = fixed_colors_;
        const int open = std::min<int>(s.used_free + 1, static_cast<int>(free_colors_.size()));
        colors.insert(colors.end(), free_colors_.begin(), free_colors_.begin() + open);
        std::sort(colors.begin(), colors.end());
        return colors;
    }

    void collect_prefixes(const State& s, std::size_t idx, std::size_t depth, std::vector<int> prefix,
                          std::vector<std::vector<int>>& out) const {
        if (idx == depth) {
            out.push_back(std::move(prefix));
            return;
        }
        for (int c : allowed(s)) {
            State next = s;
            apply(next, free_order_[idx], c);
            prefix.push_back(c);
            collect_prefixes(next, idx + 1, depth, prefix, out);
            prefix.pop_back();
        }
    }

    void descend(State& s, std::size_t idx) {
        if (s.max >= best_.load() || best_.load() <= floor_)
            return;
        if (idx == free_order_.size()) {
            lower_to(best_, s.max);
            return;
        }
        const Vertex v = free_order_[idx];
        for (int c : allowed(s)) {
            State next = s;
            apply(next, v, c);
            if (next.max < best_.load())
                descend(next, idx + 1);
        }
    }

    std::vector<Mask> adj_;
    int n_;
    int k_;
    std::vector<int> fixed_;
    std::vector<Vertex> order_seed_;
    std::vector<Vertex> free_order_;
    std::vector<int> fixed_colors_;
    std::vector<int> free_colors_;
    int floor_ = 1;
    std::atomic<int> best_{0};
};

// ---------------------------------------------------------------------------
// Universal check over canonical colorings

class ForallSearch {
public:
    ForallSearch(const Graph& g, int k, ComponentPredicate predicate)
        : adj_(adjacency_masks(g)), n_(g.vertex_count()), k_(k), predicate_(predicate) {}

    ForallResult run(int threads) {
        ForallResult result;
        if (n_ == 0) {
            // The empty coloring has no component at all.
            result.holds = false;
            result.counterexample = Coloring{k_, {}};
            return result;
        }
        // Fixed prefix depth: the smallest with at least 256 canonical prefixes.
        int depth = 1;
        while (depth < n_ && canonical_coloring_count(depth, k_) < 256)
            ++depth;
        std::vector<Frame> prefixes;
        Frame root{std::vector<int>(n_, 0), std::vector<Mask>(k_ + 1, 0), 0, 0};
        collect(root, 0, depth, prefixes);

        const std::size_t none = std::numeric_limits<std::size_t>::max();
        std::atomic<std::size_t> first_failure{none};
        std::vector<std::uint64_t> leaves(prefixes.size(), 0);
        std::vector<std::optional<std::vector<int>>> failures(prefixes.size());
        run_tasks(prefixes.size(), threads, [&](std::size_t i) {
            if (first_failure.load() < i)
                return;
            Frame f = prefixes[i];
            Task t{i, &first_failure, 0, {}};
            if (!walk(f, depth, t))
                return;
            leaves[i] = t.leaves;
            if (t.failure) {
                failures[i] = std::move(t.failure);
                lower_to(first_failure, i);
            }
        });

        const std::size_t stop = first_failure.load();
        for (std::size_t i = 0; i < prefixes.size() && i <= stop; ++i)
            result.leaves_examined += leaves[i];
        if (stop != none) {
            result.holds = false;
            result.counterexample = Coloring{k_, *failures[stop]};
        }
        return result;
    }

private:
    struct Frame {
        std::vector<int> colors;
        std::vector<Mask> masks;
        int used = 0;      // highest color used so far
        int max_size = 0;  // largest component among colored vertices
    };

    struct Task {
        std::size_t index;
        std::atomic<std::size_t>* first_failure;
        std::uint64_t leaves;
        std::optional<std::vector<int>> failure;
    };

    bool satisfied_early(const Frame& f) const {
        return predicate_.kind == ComponentPredicate::Kind::MinSize && f.max_size >= predicate_.value;
    }

    bool satisfied_at_leaf(const Frame& f) const {
        if (predicate_.kind == ComponentPredicate::Kind::MinSize)
            return f.max_size >= predicate_.value;
        for (int c = 1; c <= f.used; ++c) {
            Mask rest = f.masks[c];
            while (rest) {
                const Mask comp = component_of(adj_, f.masks[c], std::countr_zero(rest));
                rest &= ~comp;
                for (Mask m = comp; m; m &= m - 1)
                    if (eccentricity(adj_, comp, std::countr_zero(m)) > predicate_.value)
                        return true;
            }
        }
        return false;
    }

    void assign(Frame& f, int v, int c) const {
        f.colors[v] = c;
        f.masks[c] |= bit(v);
        f.used = std::max(f.used, c);
        f.max_size = std::max(f.max_size, std::popcount(component_of(adj_, f.masks[c], v)));
    }

    void unassign(Frame& f, int v, int c, int used, int max_size) const {
        f.colors[v] = 0;
        f.masks[c] &= ~bit(v);
        f.used = used;
        f.max_size = max_size;
    }

    void collect(Frame& f, int v, int depth, std::vector<Frame>& out) const {
        if (v == depth) {
            out.push_back(f);
            return;
        }
        const int top = std::min(k_, f.used + 1);
        for (int c = 1; c <= top; ++c) {
            const int used = f.used, max_size = f.max_size;
            assign(f, v, c);
            collect(f, v + 1, depth, out);
            unassign(f, v, c, used, max_size);
        }
    }

    // Returns false if the task was abandoned because an earlier task failed.
    bool walk(Frame& f, int v, Task& t) const {
        if (satisfied_early(f))
            return true;
        if (v == n_) {
            ++t.leaves;
            if (!satisfied_at_leaf(f))
                t.failure = f.colors;
            return true;
        }
        if ((t.leaves & 0xfff) == 0 && t.first_failure->load() < t.index)
            return false;
        const int top = std::min(k_, f.used + 1);
        for (int c = 1; c <= top && !t.failure; ++c) {
            const int used = f.used, max_size = f.max_size;
            assign(f, v, c);
            const bool alive = walk(f, v + 1, t);
            unassign(f, v, c, used, max_size);
            if (!alive)
                return false;
        }
        return true;
    }

    std::vector<Mask> adj_;
    int n_;
    int k_;
    ComponentPredicate predicate_;
};

} // namespace

MinMaxResult exact_min_max_mono(const Graph& g, int k, const std::optional<PartialColoring>& precolored,
                                ExactOptions options) {
    const int n = g.vertex_count();
    if (k < 1)
        throw InvalidArgument("need at least one color");
    const int limit = std::min(options.max_vertices, kMaxBitVertices);
    if (n > limit)
        throw LimitExceeded("exact min-max search limited to " + std::to_string(limit) + " vertices, graph has " +
                            std::to_string(n));
    std::vector<int> fixed(n, 0);
    if (precolored) {
        if (static_cast<int>(precolored->colors.size()) != n)
            throw InvalidArgument("precoloring covers " + std::to_string(precolored->colors.size()) +
                                  " vertices, graph has " + std::to_string(n));
        for (Vertex v = 0; v < n; ++v) {
            const int c = precolored->colors[v];
            if (c < 0 || c > k)
                throw InvalidArgument("precolored vertex " + std::to_string(v) + " has color " + std::to_string(c) +
                                      " outside 1.." + std::to_string(k));
            fixed[v] = c;
        }
    }
    MinMaxResult result;
    result.witness.k = k;
    if (n == 0)
        return result;
    MinMaxSearch search(g, k, fixed);
    result.optimum = search.solve(std::max(1, options.threads));
    result.witness.colors = search.least_witness(result.optimum);
    return result;
}

BigInt canonical_coloring_count(int n, int k) {
    if (n < 0 || k < 0)
        throw InvalidArgument("canonical_coloring_count: negative argument");
    if (n == 0)
        return 1;
    // Row of Stirling numbers S(i, j), j = 0..k.
    std::vector<BigInt> row(k + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j)
            row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    BigInt total = 0;
    for (int j = 1; j <= k; ++j)
        total += row[j];
    return total;
}

ForallResult forall_colorings_check(const Graph& g, int k, ComponentPredicate predicate,
                                    EnumerationOptions options) {
    const int n = g.vertex_count();
    if (k < 1)
        throw InvalidArgument("need at least one color");
    if (n > kMaxBitVertices)
        throw LimitExceeded("exhaustive check limited to 64 vertices, graph has " + std::to_string(n));
    const BigInt total = canonical_coloring_count(n, k);
    if (total > options.budget)
        throw LimitExceeded("exhaustive check needs " + total.str() + " canonical colorings, budget is " +
                            std::to_string(options.budget));
    ForallSearch search(g, k, predicate);
    ForallResult result = search.run(std::max(1, options.threads));
    result.canonical_total = total;
    return result;
}

} // namespace clustered
