#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "clustered/decomposition.hpp"
#include "clustered/error.hpp"
#include "clustered/io.hpp"
#include "clustered/treewidth.hpp"

namespace clustered::cli {

Params::Params(std::string context, const std::vector<std::string>& tokens) : context_(std::move(context)) {
    for (const auto& token : tokens) {
        const auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0)
            throw InvalidArgument(context_ + ": expected key=value, got '" + token + "'");
        const std::string key = token.substr(0, eq);
        if (values_.count(key))
            throw InvalidArgument(context_ + ": parameter '" + key + "' given twice");
        values_[key] = token.substr(eq + 1);
    }
}

std::optional<std::string> Params::raw(const std::string& key) {
    asked_.push_back(key);
    auto it = values_.find(key);
    if (it == values_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::int64_t> Params::maybe_integer(const std::string& key) {
    auto value = raw(key);
    if (!value)
        return std::nullopt;
    std::int64_t parsed = 0;
    std::size_t used = 0;
    try {
        parsed = std::stoll(*value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != value->size())
        throw InvalidArgument(context_ + ": parameter '" + key + "' must be an integer, got '" + *value + "'");
    resolved_[key] = parsed;
    return parsed;
}

std::int64_t Params::integer(const std::string& key) {
    auto v = maybe_integer(key);
    if (!v)
        throw InvalidArgument(context_ + ": missing required parameter " + key + "=<integer>");
    return *v;
}

std::int64_t Params::integer(const std::string& key, std::int64_t fallback) {
    auto v = maybe_integer(key);
    if (!v)
        resolved_[key] = fallback;
    return v.value_or(fallback);
}

std::optional<std::string> Params::maybe_text(const std::string& key) {
    auto v = raw(key);
    if (v)
        resolved_[key] = *v;
    return v;
}

std::string Params::text(const std::string& key) {
    auto v = maybe_text(key);
    if (!v)
        throw InvalidArgument(context_ + ": missing required parameter " + key + "=<value>");
    return *v;
}

std::string Params::text(const std::string& key, const std::string& fallback) {
    auto v = maybe_text(key);
    if (!v)
        resolved_[key] = fallback;
    return v.value_or(fallback);
}

void Params::finish() const {
    for (const auto& [key, value] : values_) {
        if (std::find(asked_.begin(), asked_.end(), key) != asked_.end())
            continue;
        std::string expected;
        for (const auto& a : asked_)
            if (expected.find(a) == std::string::npos)
                expected += (expected.empty() ? "" : ", ") + a;
        throw InvalidArgument(context_ + ": unknown parameter '" + key + "'" +
                              (expected.empty() ? " (takes none)" : " (expected one of: " + expected + ")"));
    }
}

std::string read_file(const std::string& path) {
    if (path.empty())
        throw InvalidArgument("no input file given (use --in)");
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidArgument("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw InvalidArgument("cannot write " + path);
    out << text;
}

Graph read_graph(const std::string& path) { return io::graph_from_json(read_file(path)); }

std::string render_graph(const Graph& g, const std::string& format) {
    if (format == "dot")
        return io::graph_to_dot(g);
    return io::graph_to_json(g);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void emit_artifact(json& report, const std::string& key, const std::string& text, const GlobalOptions& opts) {
    if (opts.out.empty())
        report[key] = json::parse(text);
    else
        write_output(opts.out, text);
}

json graph_summary(const Graph& g) {
    json s;
    s["n"] = g.vertex_count();
    s["m"] = g.edge_count();
    s["max_degree"] = max_degree(g);
    auto gi = girth(g);
    s["girth"] = gi ? json(*gi) : json(nullptr);
    if (g.vertex_count() <= 16) {
        s["treewidth"] = exact_treewidth(g).treewidth;
    } else {
        s["treewidth_upper"] = width(min_degree_decomposition(g));
    }
    return s;
}

} // namespace clustered::cli
