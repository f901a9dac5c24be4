#include <sstream>

#include "cli.hpp"
#include "clustered/bounds.hpp"
#include "clustered/error.hpp"

namespace clustered::cli {

namespace {

struct Row {
    std::string name;
    json inputs;
    std::optional<BigInt> value;
    std::string symbolic;  // short exact form for huge values, if there is one
    std::string note;
};

BigInt parse_big(const std::string& key, const std::string& text) {
    bool digits = !text.empty();
    for (char c : text)
        digits = digits && c >= '0' && c <= '9';
    if (!digits)
        throw InvalidArgument(key + " must be a nonnegative decimal integer, got '" + text + "'");
    return BigInt(text);
}

std::string ej_symbolic(std::int64_t delta, std::int64_t g) {
    if (g > 62)
        return {};
    const std::int64_t two_g = std::int64_t{1} << g;
    std::ostringstream out;
    if (two_g - 1 > 0)
        out << 5 * delta << "^" << two_g - 1 << " * ";
    out << 15 * delta << "^" << (32 * delta + 8) * two_g;
    return out.str();
}

// Leading digits and exponent, for values too long to print in a table.
std::string scientific(const BigInt& v) {
    const std::string s = v.str();
    return "~" + s.substr(0, 1) + "." + s.substr(1, 5) + "e+" + std::to_string(s.size() - 1);
}

std::string render_value(const Row& row, bool full) {
    if (!row.value)
        return "n/a";
    const std::size_t digits = digit_count(*row.value);
    if (full || digits <= 40)
        return row.value->str();
    return row.symbolic.empty() ? scientific(*row.value) : row.symbolic;
}

std::string render_inputs(const json& inputs) {
    std::string out;
    for (const auto& [key, value] : inputs.items())
        out += (out.empty() ? "" : " ") + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
    return out;
}

} // namespace

int run_bounds(Params& params, const GlobalOptions& opts) {
    const std::int64_t delta = params.integer("delta", 3);
    const std::int64_t g = params.integer("g", 0);
    const std::int64_t w = params.integer("w", 1);
    const std::int64_t q = params.integer("q", 3);
    const std::int64_t rho = params.integer("rho", 0);
    const std::int64_t theta = params.integer("theta", 1);
    const std::int64_t k = params.integer("k", 1);
    const std::int64_t z = params.integer("z", 0);
    const bool full = params.integer("full", 0) != 0;
    ConstantOverrides overrides;
    if (auto d = params.maybe_text("d"))
        overrides.d = parse_big("d", *d);
    if (auto m = params.maybe_text("M"))
        overrides.m = parse_big("M", *m);
    params.finish();
    if (opts.format != "text" && opts.format != "json")
        throw InvalidArgument("bounds: --format must be text or json");

    const auto constants = main_constants(rho, theta, delta, g, overrides);
    std::vector<Row> rows;
    rows.push_back({"ej", {{"delta", delta}, {"g", g}}, ej_bound(delta, g), ej_symbolic(delta, g), ""});
    rows.push_back({"adov", {{"w", w}, {"delta", delta}}, adov_bound(w, delta), "", ""});
    rows.push_back({"necklace", {{"q", q}}, necklace_bound(q), "", ""});
    if (q >= 3)
        rows.push_back({"combine", {{"q", q}, {"w", w}}, combine_bound(q, w), "", ""});
    else
        rows.push_back({"combine", {{"q", q}, {"w", w}}, std::nullopt, "", "requires q >= 3"});
    rows.push_back({"outgrowth", {{"d", overrides.d ? "override" : "ej"}, {"w", w}, {"delta", delta}},
                    outgrowth_bound(constants.d, w, delta), "", ""});
    rows.push_back({"recolor", {{"z", z}, {"delta", delta}, {"k", k}}, recolor_budget(z, delta, k), "", ""});
    rows.push_back({"d", {{"source", overrides.d ? "override" : "ej"}}, constants.d,
                    overrides.d ? "" : ej_symbolic(delta, g), ""});
    rows.push_back({"M", {{"d", overrides.d ? "override" : "ej"}, {"rho", rho}, {"delta", delta}}, constants.m,
                    "", ""});
    rows.push_back({"eta", {{"M", overrides.m ? "override" : "formula"}, {"rho", rho}, {"theta", theta},
                            {"delta", delta}},
                    constants.eta, "", ""});

    std::string text;
    if (opts.format == "json") {
        json table;
        table["params"] = params.resolved();
        table["rows"] = json::array();
        for (const auto& row : rows) {
            json r{{"name", row.name}, {"inputs", row.inputs}};
            r["value"] = row.value ? json(row.value->str()) : json(nullptr);
            r["digits"] = row.value ? json(digit_count(*row.value)) : json(nullptr);
            if (!row.note.empty())
                r["note"] = row.note;
            table["rows"].push_back(r);
        }
        text = dump(table);
    } else {
        for (const auto& row : rows) {
            text += row.name + " " + render_value(row, full);
            if (row.value) {
                const auto digits = digit_count(*row.value);
                text += " (" + std::to_string(digits) + (digits == 1 ? " digit)" : " digits)");
            } else {
                text += " (" + row.note + ")";
            }
            text += "  [" + render_inputs(row.inputs) + "]\n";
        }
    }
    if (!opts.out.empty())
        write_output(opts.out, text);
    write_output("", text);
    return kPass;
}

} // namespace clustered::cli
