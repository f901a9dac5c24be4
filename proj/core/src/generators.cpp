#include "clustered/generators.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "clustered/error.hpp"

namespace clustered {

namespace {

// True iff some a<b<c<d has {a,c} in one clique and {b,d} in the other.
bool cliques_cross(const VertexSet& x, const VertexSet& y) {
    auto interleaves = [](const VertexSet& outer, const VertexSet& inner) {
        for (std::size_t i = 0; i < outer.size(); ++i)
            for (std::size_t j = i + 1; j < outer.size(); ++j) {
                int a = std::min(outer[i], outer[j]);
                int c = std::max(outer[i], outer[j]);
                bool inside = false, beyond = false;
                for (int b : inner) {
                    if (a < b && b < c)
                        inside = true;
                    else if (b > c)
                        beyond = true;
                }
                if (inside && beyond)
                    return true;
            }
        return false;
    };
    return interleaves(x, y) || interleaves(y, x);
}

int shared_vertices(const VertexSet& x, const VertexSet& y) {
    int count = 0;
    for (int v : x)
        count += static_cast<int>(std::count(y.begin(), y.end(), v));
    return count;
}

bool compatible(const VertexSet& candidate, const std::vector<VertexSet>& accepted) {
    for (const auto& other : accepted)
        if (shared_vertices(candidate, other) >= 2 || cliques_cross(candidate, other))
            return false;
    return true;
}

std::uint64_t moore_bound(int degree, int girth) {
    // Fewest vertices a degree-regular graph of this girth can have.
    std::uint64_t total = 0, layer = 1;
    const int radius = (girth - 1) / 2;
    if (girth % 2 == 1) {
        total = 1;
        layer = degree;
        for (int i = 0; i < radius; ++i) {
            total += layer;
            layer *= degree - 1;
        }
    } else {
        for (int i = 0; i < girth / 2; ++i) {
            total += 2 * layer;
            layer *= degree - 1;
        }
    }
    return total;
}

// BFS distance from u to v, giving up beyond `limit`; returns limit+1 if farther.
int bounded_distance(const std::vector<std::vector<Vertex>>& adj, Vertex u, Vertex v, int limit,
                     std::vector<int>& dist) {
    if (u == v)
        return 0;
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<Vertex> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        if (dist[x] >= limit)
            break;
        for (Vertex y : adj[x]) {
            if (dist[y] >= 0)
                continue;
            dist[y] = dist[x] + 1;
            if (y == v)
                return dist[y];
            queue.push_back(y);
        }
    }
    return limit + 1;
}

// Replaces a random edge (a, b) by (u, a) when that keeps girth >= girth_min;
// returns b, whose stub is now open again.
std::optional<Vertex> switch_edge(std::vector<std::vector<Vertex>>& adj, std::vector<Edge>& edges, Vertex u,
                                  int girth_min, std::mt19937_64& rng, std::vector<int>& dist) {
    auto unlink = [&](Vertex x, Vertex y) {
        adj[x].erase(std::find(adj[x].begin(), adj[x].end(), y));
        adj[y].erase(std::find(adj[y].begin(), adj[y].end(), x));
    };
    for (std::size_t sample = 0; sample < 4 * edges.size(); ++sample) {
        const auto index = static_cast<std::size_t>(uniform_below(rng, edges.size()));
        auto [a, b] = edges[index];
        if (uniform_below(rng, 2))
            std::swap(a, b);
        if (a == u || b == u)
            continue;
        unlink(a, b);
        if (bounded_distance(adj, u, a, girth_min - 2, dist) >= girth_min - 1) {
            adj[u].push_back(a);
            adj[a].push_back(u);
            edges[index] = edges.back();
            edges.pop_back();
            edges.emplace_back(u, a);
            return b;
        }
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return std::nullopt;
}

std::optional<Graph> try_constrained_pairing(int n, int degree, int girth_min, std::mt19937_64& rng) {
    std::vector<int> stubs(n, degree);
    std::vector<std::vector<Vertex>> adj(n);
    std::vector<int> dist(n);
    std::vector<Edge> edges;
    long remaining = static_cast<long>(n) * degree;
    long repairs = 0;

    while (remaining > 0) {
        // Pick a uniformly random open stub.
        auto ticket = uniform_below(rng, static_cast<std::uint64_t>(remaining));
        Vertex u = 0;
        for (; u < n; ++u) {
            if (ticket < static_cast<std::uint64_t>(stubs[u]))
                break;
            ticket -= stubs[u];
        }
        std::vector<Vertex> candidates;
        std::uint64_t weight = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (v == u || stubs[v] == 0)
                continue;
            if (bounded_distance(adj, u, v, girth_min - 2, dist) < girth_min - 1)
                continue;
            candidates.push_back(v);
            weight += stubs[v];
        }
        if (candidates.empty()) {
            // Dead end: free a stub by moving a far edge onto u.
            if (++repairs > 20L * n * degree)
                return std::nullopt;
            auto freed = switch_edge(adj, edges, u, girth_min, rng, dist);
            if (!freed)
                return std::nullopt;
            --stubs[u];
            ++stubs[*freed];
            continue;
        }
        auto pick = uniform_below(rng, weight);
        Vertex v = candidates.back();
        for (Vertex c : candidates) {
            if (pick < static_cast<std::uint64_t>(stubs[c])) {
                v = c;
                break;
            }
            pick -= stubs[c];
        }
        adj[u].push_back(v);
        adj[v].push_back(u);
        edges.emplace_back(u, v);
        --stubs[u];
        --stubs[v];
        remaining -= 2;
    }
    return Graph(n, edges);
}

} // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0)
        throw InvalidArgument("uniform_below: empty range");
    const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % bound + 1) % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x > limit);
    return x % bound;
}

Graph path_graph(int n) {
    if (n < 0)
        throw InvalidArgument("path length must be nonnegative");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw InvalidArgument("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    if (n < 0)
        throw InvalidArgument("vertex count must be nonnegative");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, edges);
}

Graph line_graph(const Graph& g) {
    if (g.edge_count() == 0)
        throw InvalidArgument("line graph of an edgeless graph");
    const auto& e = g.edges();
    // Edges incident to each vertex, as indices into the canonical edge list.
    std::vector<std::vector<int>> incident(g.vertex_count());
    for (int i = 0; i < static_cast<int>(e.size()); ++i) {
        incident[e[i].first].push_back(i);
        incident[e[i].second].push_back(i);
    }
    std::vector<Edge> edges;
    for (const auto& list : incident)
        for (std::size_t a = 0; a < list.size(); ++a)
            for (std::size_t b = a + 1; b < list.size(); ++b)
                edges.emplace_back(list[a], list[b]);
    return Graph(static_cast<int>(e.size()), edges);
}

Graph triangular_grid(int k) {
    if (k < 1)
        throw InvalidArgument("grid size must be positive");
    auto id = [k](int i, int j) { return i * k + j; };
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i + 1 < k)
                edges.emplace_back(id(i, j), id(i + 1, j));
            if (j + 1 < k)
                edges.emplace_back(id(i, j), id(i, j + 1));
            if (i + 1 < k && j + 1 < k)
                edges.emplace_back(id(i, j), id(i + 1, j + 1));
        }
    return Graph(k * k, edges);
}

void validate_necklace_spec(const NecklaceSpec& spec) {
    if (spec.n < 1)
        throw InvalidArgument("necklace chain length must be positive");
    if (spec.q < 1)
        throw InvalidArgument("necklace clique cap q must be positive");
    for (std::size_t i = 0; i < spec.cliques.size(); ++i) {
        const auto& clique = spec.cliques[i];
        if (static_cast<int>(clique.size()) > spec.q)
            throw InvalidArgument("clique " + std::to_string(i) + " has " +
                                  std::to_string(clique.size()) + " vertices, more than q = " +
                                  std::to_string(spec.q));
        VertexSet sorted = clique;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidArgument("clique " + std::to_string(i) + " repeats a vertex");
        for (int v : sorted)
            if (v < 0 || v >= spec.n)
                throw InvalidArgument("clique " + std::to_string(i) + " has vertex " +
                                      std::to_string(v) + " outside the chain");
    }
    for (std::size_t i = 0; i < spec.cliques.size(); ++i)
        for (std::size_t j = i + 1; j < spec.cliques.size(); ++j) {
            if (shared_vertices(spec.cliques[i], spec.cliques[j]) >= 2)
                throw InvalidArgument("cliques " + std::to_string(i) + " and " + std::to_string(j) +
                                      " share an edge");
            if (cliques_cross(spec.cliques[i], spec.cliques[j]))
                throw InvalidArgument("cliques " + std::to_string(i) + " and " + std::to_string(j) +
                                      " cross");
        }
}

Graph necklace_graph(const NecklaceSpec& spec) {
    validate_necklace_spec(spec);
    std::vector<Edge> edges;
    if (spec.n >= 2)
        for (int i = 0; i < spec.n; ++i)
            if ((i + 1) % spec.n != i)
                edges.emplace_back(i, (i + 1) % spec.n);
    for (const auto& clique : spec.cliques)
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b)
                edges.emplace_back(clique[a], clique[b]);
    return Graph(spec.n, edges);
}

NecklaceSpec random_necklace_spec(int n, int q, std::mt19937_64& rng) {
    if (n < 1 || q < 1)
        throw InvalidArgument("random necklace needs n >= 1 and q >= 1");
    NecklaceSpec spec{n, q, {}};
    if (q < 2 || n < 2)
        return spec;
    // Candidate cliques are drawn from a random cyclic window so that nested,
    // non-crossing configurations are reasonably likely.
    const int tries = 3 * n;
    for (int t = 0; t < tries; ++t) {
        const int size = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(std::min(q, n) - 1)));
        const int start = static_cast<int>(uniform_below(rng, n));
        const int span = size + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - size + 1)));
        std::set<int> chosen{start};
        while (static_cast<int>(chosen.size()) < size)
            chosen.insert((start + static_cast<int>(uniform_below(rng, span))) % n);
        VertexSet candidate(chosen.begin(), chosen.end());
        if (compatible(candidate, spec.cliques))
            spec.cliques.push_back(std::move(candidate));
    }
    return spec;
}

Graph random_regular_with_girth(int degree, int girth_min, std::uint64_t seed,
                                RegularGraphOptions options) {
    if (degree < 1)
        throw InvalidArgument("degree must be positive");
    if (girth_min < 3)
        throw InvalidArgument("girth bound must be at least 3");
    if (degree == 1)
        return Graph(2, {{0, 1}});
    if (degree == 2)
        return cycle_graph(girth_min);
    if (girth_min <= 3)
        return complete_graph(degree + 1);
    if (degree == 3 && girth_min <= 5)
        return petersen_graph();

    std::mt19937_64 rng(seed);
    std::uint64_t n = std::max<std::uint64_t>(degree + 1, moore_bound(degree, girth_min));
    if ((n * degree) % 2 != 0)
        ++n;
    int attempts_here = 0;
    for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
        if (auto g = try_constrained_pairing(static_cast<int>(n), degree, girth_min, rng))
            return *std::move(g);
        if (++attempts_here >= options.attempts_per_size) {
            attempts_here = 0;
            n += ((n + 1) * degree) % 2 == 0 ? 1 : 2;
        }
    }
    throw GenerationFailed("no " + std::to_string(degree) + "-regular graph with girth >= " +
                           std::to_string(girth_min) + " found in " +
                           std::to_string(options.max_attempts) + " attempts (last size " +
                           std::to_string(n) + ")");
}

} // namespace clustered
