#include "clustered/necklace.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <stdexcept>
#include <string>

#include "clustered/error.hpp"

namespace clustered {

namespace {

class NecklaceBuilder {
public:
    // Decomposes the necklace whose chain is `cycle` (vertex ids in cyclic
    // order) and whose cliques all lie inside it.
    void build(const VertexSet& cycle, const std::vector<VertexSet>& cliques) {
        if (cliques.empty()) {
            fan(cycle);
            return;
        }

        std::vector<int> position(max_vertex(cycle) + 1, -1);
        for (int i = 0; i < static_cast<int>(cycle.size()); ++i)
            position[cycle[i]] = i;

        // Clique with the lowest chain position, ties broken lexicographically.
        std::size_t pick = 0;
        std::vector<int> best;
        for (std::size_t c = 0; c < cliques.size(); ++c) {
            std::vector<int> pos;
            for (Vertex v : cliques[c])
                pos.push_back(position.at(v));
            std::sort(pos.begin(), pos.end());
            if (c == 0 || pos < best) {
                best = std::move(pos);
                pick = c;
            }
        }

        // Rotate so the chosen clique starts at position 0.
        const int m = static_cast<int>(cycle.size());
        const int shift = best.front();
        VertexSet rotated(m);
        for (int i = 0; i < m; ++i)
            rotated[i] = cycle[(i + shift) % m];
        std::vector<int> cuts;
        for (int p : best)
            cuts.push_back(p - shift);
        cuts.push_back(m);

        VertexSet central;
        for (int p : best)
            central.push_back(cycle[p]);
        const int hub = add_node(central);

        std::vector<char> placed(cliques.size(), 0);
        placed[pick] = 1;
        for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
            VertexSet segment;
            for (int i = cuts[j]; i <= cuts[j + 1]; ++i)
                segment.push_back(rotated[i % m]);
            std::set<Vertex> members(segment.begin(), segment.end());
            std::vector<VertexSet> inner;
            for (std::size_t c = 0; c < cliques.size(); ++c) {
                if (placed[c])
                    continue;
                if (std::all_of(cliques[c].begin(), cliques[c].end(),
                                [&](Vertex v) { return members.count(v) > 0; })) {
                    placed[c] = 1;
                    inner.push_back(cliques[c]);
                }
            }
            const int first = node_count();
            build(segment, inner);
            tree_edges_.emplace_back(hub, node_holding(first, segment.front(), segment.back()));
        }
        if (std::find(placed.begin(), placed.end(), 0) != placed.end())
            throw std::logic_error("necklace clique spans two segments; spec should have been rejected");
    }

    TreeDecomposition finish() && {
        TreeDecomposition td{Graph(node_count(), tree_edges_), std::move(bags_)};
        normalize(td);
        return td;
    }

private:
    static Vertex max_vertex(const VertexSet& vs) { return *std::max_element(vs.begin(), vs.end()); }

    int node_count() const { return static_cast<int>(bags_.size()); }

    int add_node(VertexSet bag) {
        bags_.push_back(std::move(bag));
        return node_count() - 1;
    }

    // Fan decomposition of a plain cycle: bags {w0, wi, wi+1} along a path.
    void fan(const VertexSet& cycle) {
        const int m = static_cast<int>(cycle.size());
        if (m <= 3) {
            add_node(cycle);
            return;
        }
        int previous = -1;
        for (int i = 1; i + 1 < m; ++i) {
            int node = add_node({cycle[0], cycle[i], cycle[i + 1]});
            if (previous >= 0)
                tree_edges_.emplace_back(previous, node);
            previous = node;
        }
    }

    int node_holding(int first, Vertex a, Vertex b) const {
        for (int t = first; t < node_count(); ++t) {
            const auto& bag = bags_[t];
            if (std::find(bag.begin(), bag.end(), a) != bag.end() &&
                std::find(bag.begin(), bag.end(), b) != bag.end())
                return t;
        }
        throw std::logic_error("segment decomposition has no bag holding both segment ends");
    }

    std::vector<VertexSet> bags_;
    std::vector<Edge> tree_edges_;
};

} // namespace

TreeDecomposition necklace_td(const NecklaceSpec& spec) {
    validate_necklace_spec(spec);
    VertexSet cycle(spec.n);
    for (int i = 0; i < spec.n; ++i)
        cycle[i] = i;
    // Cliques with fewer than two vertices contribute no edges.
    std::vector<VertexSet> cliques;
    for (const auto& c : spec.cliques)
        if (c.size() >= 2)
            cliques.push_back(c);
    NecklaceBuilder builder;
    builder.build(cycle, cliques);
    return std::move(builder).finish();
}

CombinedDecomposition combine_necklace_vortex(const Graph& necklace, const TreeDecomposition& necklace_td,
                                              int q, const Society& society,
                                              const VorticalDecomposition& vd) {
    if (q < 3)
        throw InvalidArgument("necklace-vortex combination requires q >= 3, got " + std::to_string(q));
    validate_society(society);
    const auto& omega = society.omega;
    if (static_cast<std::size_t>(necklace.vertex_count()) != omega.size())
        throw InvalidArgument("necklace chain has " + std::to_string(necklace.vertex_count()) +
                              " vertices but the boundary has " + std::to_string(omega.size()));
    if (auto v = validate_td(necklace, necklace_td); !v.empty())
        throw InvalidArgument("necklace decomposition is invalid: " + v.front().message);
    if (width(necklace_td) > q - 1)
        throw InvalidArgument("necklace decomposition has width " + std::to_string(width(necklace_td)) +
                              ", more than q-1 = " + std::to_string(q - 1));
    if (auto v = validate_vortical(society, vd, INT_MAX); !v.empty())
        throw InvalidArgument("vortical decomposition is invalid: " + v.front().message);

    std::vector<Edge> edges(society.graph.edges().begin(), society.graph.edges().end());
    for (auto [a, b] : necklace.edges())
        edges.emplace_back(omega[a], omega[b]);
    Graph merged(society.graph.vertex_count(), edges);

    std::vector<VertexSet> bags;
    bags.reserve(necklace_td.bags.size());
    for (const auto& bag : necklace_td.bags) {
        VertexSet lifted;
        for (Vertex u : bag) {
            lifted.push_back(omega[u]);
            lifted.insert(lifted.end(), vd.bags[u].begin(), vd.bags[u].end());
        }
        bags.push_back(std::move(lifted));
    }
    TreeDecomposition td{necklace_td.tree, std::move(bags)};
    normalize(td);
    return CombinedDecomposition{std::move(merged), std::move(td)};
}

} // namespace clustered
