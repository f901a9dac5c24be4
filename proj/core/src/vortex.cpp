#include "clustered/vortex.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <tuple>

#include "clustered/error.hpp"

namespace clustered {

namespace {

// Unit-capacity flow network with each vertex v split into in(v)=2v and
// out(v)=2v+1, plus a super source and sink.
class SplitNetwork {
public:
    SplitNetwork(const Graph& g, std::span<const Vertex> sources, std::span<const Vertex> sinks)
        : n_(g.vertex_count()), source_(2 * n_), sink_(2 * n_ + 1), head_(2 * n_ + 2, -1) {
        for (Vertex v = 0; v < n_; ++v)
            add_arc(2 * v, 2 * v + 1);
        for (auto [u, v] : g.edges()) {
            add_arc(2 * u + 1, 2 * v);
            add_arc(2 * v + 1, 2 * u);
        }
        for (Vertex s : sources)
            add_arc(source_, 2 * s);
        for (Vertex t : sinks)
            add_arc(2 * t + 1, sink_);
    }

    bool augment() {
        std::vector<int> via(head_.size(), -1);
        std::deque<int> queue{source_};
        std::vector<char> seen(head_.size(), 0);
        seen[source_] = 1;
        while (!queue.empty() && !seen[sink_]) {
            int x = queue.front();
            queue.pop_front();
            for (int a = head_[x]; a >= 0; a = next_[a]) {
                int y = to_[a];
                if (cap_[a] > 0 && !seen[y]) {
                    seen[y] = 1;
                    via[y] = a;
                    queue.push_back(y);
                }
            }
        }
        if (!seen[sink_])
            return false;
        for (int y = sink_; y != source_; y = to_[via[y] ^ 1]) {
            --cap_[via[y]];
            ++cap_[via[y] ^ 1];
        }
        return true;
    }

    // Walks saturated forward arcs from the source to recover vertex paths.
    std::vector<VertexSet> paths() {
        std::vector<VertexSet> out;
        for (int a = head_[source_]; a >= 0; a = next_[a]) {
            if (a % 2 != 0 || cap_[a] != 0)
                continue;
            VertexSet path;
            int node = to_[a];
            while (node != sink_) {
                if (node % 2 == 0)
                    path.push_back(node / 2);
                int step = -1;
                for (int b = head_[node]; b >= 0; b = next_[b])
                    if (b % 2 == 0 && cap_[b] == 0 && used_[b] == 0) {
                        step = b;
                        break;
                    }
                used_[step] = 1;
                node = to_[step];
            }
            out.push_back(std::move(path));
        }
        return out;
    }

private:
    void add_arc(int from, int to) {
        for (auto [x, y, c] : {std::tuple{from, to, 1}, std::tuple{to, from, 0}}) {
            to_.push_back(y);
            cap_.push_back(c);
            next_.push_back(head_[x]);
            used_.push_back(0);
            head_[x] = static_cast<int>(to_.size()) - 1;
        }
    }

    int n_, source_, sink_;
    std::vector<int> head_, to_, cap_, next_;
    std::vector<char> used_;
};

// Trims a flow path so it starts at its last source vertex and ends at the
// first sink vertex after that.
VertexSet trim(const VertexSet& path, const std::vector<char>& is_source, const std::vector<char>& is_sink) {
    std::size_t begin = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (is_source[path[i]])
            begin = i;
        if (is_sink[path[i]])
            break;
    }
    std::size_t end = begin;
    while (!is_sink[path[end]])
        ++end;
    return VertexSet(path.begin() + static_cast<long>(begin), path.begin() + static_cast<long>(end) + 1);
}

} // namespace

void validate_society(const Society& society) {
    const int n = society.graph.vertex_count();
    std::vector<char> hit(n, 0);
    for (Vertex v : society.omega) {
        if (v < 0 || v >= n)
            throw InvalidArgument("boundary vertex " + std::to_string(v) + " is not in the graph");
        if (hit[v])
            throw InvalidArgument("boundary vertex " + std::to_string(v) + " repeats");
        hit[v] = 1;
    }
}

TreeDecomposition as_tree_decomposition(const VorticalDecomposition& vd) {
    const int m = static_cast<int>(vd.bags.size());
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < m; ++i)
        edges.emplace_back(i, i + 1);
    TreeDecomposition td{Graph(m, edges), vd.bags};
    normalize(td);
    return td;
}

DisjointPaths max_vertex_disjoint_paths(const Graph& g, std::span<const Vertex> sources,
                                        std::span<const Vertex> sinks, int stop_after) {
    const int n = g.vertex_count();
    std::vector<char> is_source(n, 0), is_sink(n, 0);
    for (Vertex s : sources)
        is_source.at(s) = 1;
    for (Vertex t : sinks)
        is_sink.at(t) = 1;

    // A vertex in both sets is its own path; it is removed from the network
    // so no other path may use it.
    DisjointPaths result;
    VertexSet shared;
    for (Vertex v = 0; v < n; ++v)
        if (is_source[v] && is_sink[v])
            shared.push_back(v);
    for (Vertex v : shared) {
        if (result.count >= stop_after)
            return result;
        result.paths.push_back({v});
        ++result.count;
    }

    std::vector<char> removed(n, 0);
    for (Vertex v : shared)
        removed[v] = 1;
    std::vector<Edge> kept;
    for (auto [u, v] : g.edges())
        if (!removed[u] && !removed[v])
            kept.emplace_back(u, v);
    Graph rest(n, kept);
    VertexSet src, dst;
    for (Vertex v = 0; v < n; ++v) {
        if (removed[v])
            continue;
        if (is_source[v])
            src.push_back(v);
        if (is_sink[v])
            dst.push_back(v);
    }

    SplitNetwork net(rest, src, dst);
    while (result.count < stop_after && net.augment())
        ++result.count;
    for (const auto& p : net.paths())
        result.paths.push_back(trim(p, is_source, is_sink));
    return result;
}

VortexCheck vortex_order_check(const Society& society, int rho) {
    validate_society(society);
    if (rho < 0)
        throw InvalidArgument("vortex order must be nonnegative");
    const auto& omega = society.omega;
    const int m = static_cast<int>(omega.size());
    if (m < 2)
        throw InvalidArgument("vortex check needs at least 2 boundary vertices");

    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b)
                continue;
            VertexSet from{omega[a]}, to{omega[b]};
            for (int i = (a + 1) % m; i != b; i = (i + 1) % m)
                from.push_back(omega[i]);
            for (int i = (b + 1) % m; i != a; i = (i + 1) % m)
                to.push_back(omega[i]);
            auto flow = max_vertex_disjoint_paths(society.graph, from, to, rho + 1);
            if (flow.count > rho)
                return VortexCheck{false, VortexWitness{omega[a], omega[b], std::move(flow.paths)}};
        }
    return VortexCheck{};
}

std::vector<Violation> validate_vortical(const Society& society, const VorticalDecomposition& vd,
                                         int rho) {
    validate_society(society);
    std::vector<Violation> out;
    const auto& omega = society.omega;
    if (vd.bags.size() != omega.size()) {
        out.push_back({ViolationKind::MalformedTree,
                       "vortical decomposition has " + std::to_string(vd.bags.size()) +
                           " bags for a boundary of length " + std::to_string(omega.size()),
                       {}});
        return out;
    }
    if (vd.bags.empty()) {
        if (society.graph.vertex_count() > 0)
            out.push_back({ViolationKind::VertexUncovered, "no bags for a nonempty graph", {}});
        return out;
    }
    auto td = as_tree_decomposition(vd);
    out = validate_td(society.graph, td);
    for (std::size_t i = 0; i < omega.size(); ++i)
        if (!std::binary_search(td.bags[i].begin(), td.bags[i].end(), omega[i]))
            out.push_back({ViolationKind::BoundaryNotInBag,
                           "bag " + std::to_string(i) + " does not contain boundary vertex " +
                               std::to_string(omega[i]),
                           {omega[i]}});
    if (int a = adhesion(td); a > rho)
        out.push_back({ViolationKind::AdhesionTooLarge,
                       "adhesion " + std::to_string(a) + " exceeds " + std::to_string(rho), {}});
    return out;
}

} // namespace clustered
