#include "clustered/extremal.hpp"

#include <string>

#include "clustered/error.hpp"

namespace clustered {

BigInt predicted_gadget_size(const GadgetParams& p) {
    if (p.level < 1 || p.d < 1 || p.base_length() < 1)
        throw InvalidArgument("gadget level, d and base path length must be positive");
    BigInt n = p.base_length();
    for (int i = 2; i <= p.level; ++i) {
        BigInt nodes = 0, layer = 1;
        for (int depth = 0; depth <= p.d; ++depth) {
            nodes += layer;
            layer *= n;
        }
        n = 1 + nodes * n;
        // Past a trillion vertices nothing is buildable; stop growing the numbers.
        if (n > BigInt(1) << 40)
            return n;
    }
    return n;
}

Graph build_gadget(const GadgetParams& p) {
    const BigInt predicted = predicted_gadget_size(p);
    if (predicted > p.size_cap)
        throw LimitExceeded("gadget level " + std::to_string(p.level) + " with d=" + std::to_string(p.d) +
                            " needs " + (predicted > BigInt(1) << 40 ? std::string("over 2^40") : predicted.str()) +
                            " vertices, cap is " + std::to_string(p.size_cap));

    Graph current = path_graph(p.base_length());
    for (int level = 2; level <= p.level; ++level) {
        const int n = current.vertex_count();
        long nodes = 0, layer = 1, internal = 0;
        for (int depth = 0; depth <= p.d; ++depth) {
            if (depth < p.d)
                internal += layer;
            nodes += layer;
            layer *= n;
        }
        auto copy_start = [n](long t) { return static_cast<int>(1 + t * n); };

        std::vector<Edge> edges;
        for (long t = 0; t < nodes; ++t)
            for (auto [a, b] : current.edges())
                edges.emplace_back(copy_start(t) + a, copy_start(t) + b);
        for (int j = 0; j < n; ++j)
            edges.emplace_back(0, copy_start(0) + j);
        for (long t = 0; t < internal; ++t)
            for (int j = 0; j < n; ++j) {
                const long child = t * n + j + 1;
                for (int x = 0; x < n; ++x)
                    edges.emplace_back(copy_start(t) + j, copy_start(child) + x);
            }
        current = Graph(static_cast<int>(1 + nodes * n), edges);
    }
    return current;
}

ForallResult verify_gadget(const Graph& g, int level, int d, EnumerationOptions options) {
    if (level < 1 || d < 0)
        throw InvalidArgument("gadget verification needs level >= 1 and d >= 0");
    return forall_colorings_check(g, level, ComponentPredicate::diameter_above(d), options);
}

ForallResult hex_check(int k, EnumerationOptions options) {
    return forall_colorings_check(triangular_grid(k), 2, ComponentPredicate::size_at_least(k), options);
}

LineFamily build_line_family(int k, int n_min, std::uint64_t seed, RegularGraphOptions options) {
    if (k < 1 || n_min < 3)
        throw InvalidArgument("line family needs k >= 1 and N >= 3");
    LineFamily family;
    family.root = random_regular_with_girth(2 * k, n_min, seed, options);
    family.line = line_graph(family.root);
    family.root_girth = girth(family.root).value_or(0);
    return family;
}

ForallResult verify_line_family(const Graph& g, int k, int n_min, EnumerationOptions options) {
    return forall_colorings_check(g, k, ComponentPredicate::size_at_least(n_min), options);
}

} // namespace clustered
