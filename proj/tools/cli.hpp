#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "clustered/graph.hpp"

namespace clustered::cli {

using nlohmann::json;

// Exit codes are part of the interface.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kError = 2;

struct GlobalOptions {
    std::uint64_t seed = 0;
    std::uint64_t budget = std::uint64_t{1} << 26;
    int threads = 1;
    std::string in;
    std::string out;
    std::string format = "json";
};

/// key=value parameters. Every lookup is recorded so the report can echo the
/// resolved values, and finish() rejects keys nobody asked for.
class Params {
public:
    Params(std::string context, const std::vector<std::string>& tokens);

    std::int64_t integer(const std::string& key);
    std::int64_t integer(const std::string& key, std::int64_t fallback);
    std::optional<std::int64_t> maybe_integer(const std::string& key);
    std::string text(const std::string& key);
    std::string text(const std::string& key, const std::string& fallback);
    std::optional<std::string> maybe_text(const std::string& key);

    void finish() const;
    const json& resolved() const { return resolved_; }

private:
    std::optional<std::string> raw(const std::string& key);

    std::string context_;
    std::map<std::string, std::string> values_;
    std::vector<std::string> asked_;
    json resolved_ = json::object();
};

std::string read_file(const std::string& path);
/// Writes to `path`, or to stdout when the path is empty.
void write_output(const std::string& path, const std::string& text);
Graph read_graph(const std::string& path);
std::string render_graph(const Graph& g, const std::string& format);
std::string dump(const json& j);
/// Writes a JSON artifact to --out, or embeds it in the report under `key`.
void emit_artifact(json& report, const std::string& key, const std::string& text, const GlobalOptions& opts);

/// Basic invariants for reports; treewidth is exact up to 16 vertices.
json graph_summary(const Graph& g);

int run_gen(const std::string& family, Params& params, const GlobalOptions& opts);
int run_td(const std::string& mode, Params& params, const GlobalOptions& opts);
int run_check(const std::string& kind, Params& params, const GlobalOptions& opts);
int run_color(Params& params, const GlobalOptions& opts);
int run_export(Params& params, const GlobalOptions& opts);
int run_bounds(Params& params, const GlobalOptions& opts);

} // namespace clustered::cli
