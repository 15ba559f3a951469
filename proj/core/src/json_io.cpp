#include "wsat/json_io.hpp"

#include <json.hpp>

namespace wsat {

namespace {

using nlohmann::json;

json count_json(const Count& c) {
    if (c.fits_slong_p()) return static_cast<std::int64_t>(c.get_si());
    return c.get_str();
}

json edge_json(const Mask& e, const VertexUniverse& u) {
    json arr = json::array();
    e.for_each_bit([&](int pos) {
        auto [color, index] = u.vertex(pos);
        arr.push_back(json::array({index + 1, color + 1}));
    });
    return arr;
}

Mask edge_from(const json& arr, const VertexUniverse& u) {
    Mask e;
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2)
            throw InvalidInput("edge entries must be [a, i] pairs");
        const int a = pair[0].get<int>(), i = pair[1].get<int>();
        if (i < 1 || i > u.dim() || a < 1 || a > u.sizes[static_cast<std::size_t>(i - 1)])
            throw InvalidInput("vertex [" + std::to_string(a) + "," + std::to_string(i) +
                               "] outside the universe");
        e.set(u.bit(i - 1, a - 1));
    }
    return e;
}

json edges_json(const EdgeSet& edges, const VertexUniverse& u) {
    json arr = json::array();
    for (const Mask& e : edges) arr.push_back(edge_json(e, u));
    return arr;
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InvalidInput("malformed JSON document");
    return j;
}

json family_json(const std::vector<ParamVec>& fam) {
    json arr = json::array();
    for (const auto& v : fam) arr.push_back(v);
    return arr;
}

json witness_json(const PercolationStep& step, CopyMode mode, const VertexUniverse& u) {
    json arr = json::array();
    if (mode == CopyMode::colored) {
        for (std::size_t i = 0; i < step.parts.size(); ++i) {
            json part = json::array();
            step.parts[i].for_each_bit(
                [&](int pos) { part.push_back(pos - u.offsets[i] + 1); });
            arr.push_back(std::move(part));
        }
    } else {
        for (const Mask& p : step.parts) arr.push_back(edge_json(p, u));
    }
    return arr;
}

std::vector<Mask> witness_from(const json& arr, CopyMode mode, const VertexUniverse& u) {
    std::vector<Mask> parts;
    if (mode == CopyMode::colored) {
        if (static_cast<int>(arr.size()) != u.dim())
            throw InvalidInput("colored witness must list one part per color");
        for (int i = 0; i < u.dim(); ++i) {
            Mask part;
            for (const auto& av : arr[static_cast<std::size_t>(i)]) {
                const int a = av.get<int>();
                if (a < 1 || a > u.sizes[static_cast<std::size_t>(i)])
                    throw InvalidInput("witness index out of range");
                part.set(u.bit(i, a - 1));
            }
            parts.push_back(part);
        }
    } else {
        for (const auto& pv : arr) parts.push_back(edge_from(pv, u));
    }
    return parts;
}

json trace_json_obj(const PercolationTrace& trace, const VertexUniverse& u) {
    json j;
    j["mode"] = trace.mode == CopyMode::colored ? "colored" : "uncolored";
    j["fallback"] = trace.fallback;
    j["start"] = edges_json(trace.start, u);
    json steps = json::array();
    for (const auto& step : trace.steps) {
        json s;
        s["edge"] = edge_json(step.edge, u);
        s["r"] = step.pattern;
        s["witness"] = witness_json(step, trace.mode, u);
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    return j;
}

} // namespace

const char* tight_case_name(TightCase c) {
    switch (c) {
        case TightCase::min_r: return "min_r";
        case TightCase::max_s: return "max_s";
        default: return "none";
    }
}

std::string hypergraph_to_json(const ColoredHypergraph& g) {
    json j;
    j["d"] = g.universe.dim();
    j["n"] = g.universe.sizes;
    j["edges"] = edges_json(g.edges, g.universe);
    return j.dump();
}

ColoredHypergraph hypergraph_from_json(const std::string& text) {
    const json j = parse_text(text);
    if (!j.contains("n") || !j.contains("edges"))
        throw InvalidInput("hypergraph document needs 'n' and 'edges'");
    ParamVec n = j.at("n").get<ParamVec>();
    if (j.contains("d") && j.at("d").get<int>() != static_cast<int>(n.size()))
        throw InvalidInput("hypergraph 'd' does not match |n|");
    VertexUniverse u(n);
    EdgeSet edges;
    for (const auto& ev : j.at("edges")) edges.push_back(edge_from(ev, u));
    sort_edge_set(edges);
    return ColoredHypergraph{std::move(u), std::move(edges)};
}

EdgeSet edges_from_json(const std::string& text, const VertexUniverse& u) {
    const json j = parse_text(text);
    if (!j.contains("edges")) throw InvalidInput("document needs an 'edges' array");
    EdgeSet edges;
    for (const auto& ev : j.at("edges")) edges.push_back(edge_from(ev, u));
    sort_edge_set(edges);
    return edges;
}

std::string trace_to_json(const PercolationTrace& trace, const VertexUniverse& u) {
    return trace_json_obj(trace, u).dump();
}

PercolationTrace trace_from_json(const std::string& text, const VertexUniverse& u) {
    const json j = parse_text(text);
    PercolationTrace trace;
    const std::string mode = j.value("mode", "colored");
    if (mode != "colored" && mode != "uncolored")
        throw InvalidInput("trace mode must be 'colored' or 'uncolored'");
    trace.mode = mode == "colored" ? CopyMode::colored : CopyMode::uncolored;
    trace.fallback = j.value("fallback", false);
    for (const auto& ev : j.value("start", json::array())) trace.start.push_back(edge_from(ev, u));
    sort_edge_set(trace.start);
    for (const auto& sv : j.value("steps", json::array())) {
        PercolationStep step;
        step.edge = edge_from(sv.at("edge"), u);
        step.pattern = sv.at("r").get<ParamVec>();
        step.parts = witness_from(sv.at("witness"), trace.mode, u);
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

std::string formula_to_json(const ParamVec& n, const std::vector<ParamVec>& S,
                            const std::vector<ParamVec>& R, const FormulaResult& result) {
    json j;
    j["n"] = n;
    j["S"] = family_json(S);
    j["R"] = family_json(R);
    j["q"] = count_json(result.q);
    j["cwsat"] = count_json(result.cwsat);
    j["tight_guaranteed"] = result.tight_guaranteed;
    return j.dump();
}

std::string construction_to_json(const ConstructionResult& result, const VertexUniverse& u) {
    json j = trace_json_obj(result.order, u);
    j["removed_count"] = static_cast<std::int64_t>(result.removed.size());
    j["formula"] = count_json(result.formula);
    return j.dump();
}

std::string certificate_to_json(const CertificateReport& report) {
    json j;
    j["edge_count"] = count_json(report.edge_count);
    j["dim_U"] = report.dim_u;
    j["q"] = count_json(report.q);
    j["bound"] = count_json(report.bound);
    j["formula_cwsat"] = count_json(report.formula_cwsat);
    j["support_ok"] = report.support_ok;
    j["tight_case"] = tight_case_name(report.tight_case);
    j["dim_equals_q"] = report.dim_equals_q;
    j["seed"] = report.seed;
    return j.dump();
}

std::string basis_to_json(const ColorfulBasis& basis) {
    json blocks = json::array();
    for (const auto& block : basis.blocks) {
        json rows = json::array();
        for (int r = 0; r < block.rows; ++r) {
            json row = json::array();
            for (int c = 0; c < block.cols; ++c) row.push_back(block.at(r, c).get_str());
            rows.push_back(std::move(row));
        }
        blocks.push_back(std::move(rows));
    }
    json j;
    j["blocks"] = std::move(blocks);
    j["seed"] = basis.seed;
    j["verified_minors"] = basis.verified_minors;
    return j.dump();
}

} // namespace wsat
