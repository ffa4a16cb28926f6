#include "symcol/report.hpp"

#include <sstream>

#include "symcol/errors.hpp"
#include "symcol/graph6.hpp"

namespace symcol {

namespace {

EdgeId edge_of(const Graph& g, const json& item) {
    if (!item.is_object() || !item.contains("u") || !item.contains("v"))
        throw InputError("colouring entry needs u and v");
    const auto id = g.edge_id(item.at("u").get<int>(), item.at("v").get<int>());
    if (!id) throw InputError("colouring names a non-edge {" + item.at("u").dump() + "," + item.at("v").dump() + "}");
    return *id;
}

json edge_list(const Graph& g, const EdgeSet& edges) {
    json out = json::array();
    for (EdgeId e : edges) out.push_back({g.edge(e).u, g.edge(e).v});
    return out;
}

} // namespace

json colouring_to_json(const Graph& g, const EdgeColouring& c) {
    json out = json::array();
    for (EdgeId e = 0; e < g.size(); ++e)
        if (auto col = c.at(e))
            out.push_back({{"u", g.edge(e).u}, {"v", g.edge(e).v}, {"colour", std::string(colour_name(*col))}});
    return out;
}

EdgeColouring colouring_from_json(const Graph& g, const json& j) {
    if (!j.is_array()) throw InputError("colouring must be a JSON array");
    EdgeColouring c(g.size());
    for (const auto& item : j) {
        const EdgeId e = edge_of(g, item);
        if (c.is_coloured(e)) throw InputError("edge coloured twice");
        c.set(e, parse_colour(item.at("colour").get<std::string>()));
    }
    return c;
}

json labels_to_json(const Graph& g, const std::vector<int>& labels) {
    if (labels.size() != g.size()) throw std::invalid_argument("labels_to_json: one label per edge required");
    json out = json::array();
    for (EdgeId e = 0; e < g.size(); ++e) {
        json colour = labels[e] < kColourCount ? json(std::string(colour_name(static_cast<Colour>(labels[e]))))
                                               : json(labels[e]);
        out.push_back({{"u", g.edge(e).u}, {"v", g.edge(e).v}, {"colour", colour}});
    }
    return out;
}

std::vector<int> labels_from_json(const Graph& g, const json& j) {
    if (!j.is_array()) throw InputError("colouring must be a JSON array");
    std::vector<int> labels(g.size(), -1);
    for (const auto& item : j) {
        const EdgeId e = edge_of(g, item);
        if (labels[e] >= 0) throw InputError("edge coloured twice");
        const auto& colour = item.at("colour");
        labels[e] = colour.is_string() ? static_cast<int>(parse_colour(colour.get<std::string>())) : colour.get<int>();
        if (labels[e] < 0) throw InputError("negative colour label");
    }
    for (int l : labels)
        if (l < 0) throw InputError("colouring does not cover every edge");
    return labels;
}

json permutation_to_json(const Permutation& p) { return p.images(); }

json decoration_to_json(const Graph& g, const Decoration& d) {
    return {{"forward", edge_list(g, d.forward)}, {"back", edge_list(g, d.back)}};
}

json step_to_json(const Graph& g, const StepRecord& s) {
    json decorations = json::array();
    for (const auto& [component, d] : s.decorations) {
        json item = decoration_to_json(g, d);
        item["component"] = component;
        decorations.push_back(std::move(item));
    }
    json out = {{"layer", s.layer},
                {"rule", std::string(rule_name(s.rule))},
                {"fbh", {s.f, s.b, s.h}},
                {"decorations", std::move(decorations)},
                {"fallback", s.fallback}};
    if (s.fallback) out["fallback_reason"] = s.fallback_reason;
    if (!s.violations.empty()) {
        json v = json::array();
        for (const auto& x : s.violations) v.push_back({{"property", x.property}, {"detail", x.detail}});
        out["violations"] = std::move(v);
    }
    return out;
}

json audit_to_json(const Graph& g, const std::vector<StepRecord>& audit) {
    json out = json::array();
    for (const auto& s : audit) out.push_back(step_to_json(g, s));
    return out;
}

json stats_to_json(const ColourStats& s) {
    return {{"layered_runs", s.layered_runs},   {"layers", s.layers},
            {"fallback_layers", s.fallback_layers}, {"global_fallbacks", s.global_fallbacks},
            {"steps_checked", s.steps_checked}, {"violations", s.violations},
            {"claim_checks", s.claim_checks},   {"claim_failures", s.claim_failures}};
}

std::string scan_entry_to_jsonl(const ScanEntry& e) {
    json out = {{"graph6", e.graph6}, {"n", e.n}};
    out["degree"] = e.degree ? json(*e.degree) : json(nullptr);
    if (e.dprime) {
        if (e.dprime->not_distinguishable) {
            out["dprime"] = "NotDistinguishable";
        } else {
            out["dprime"] = e.dprime->value;
            if (!e.dprime->witness.empty())
                out["witness_colouring"] = labels_to_json(parse_graph6(e.graph6), e.dprime->witness);
        }
    } else {
        out["dprime"] = nullptr;
    }
    out["status"] = std::string(scan_status_name(e.status));
    if (!e.note.empty()) out["note"] = e.note;
    return out.dump();
}

ScanEntry scan_entry_from_jsonl(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& err) {
        throw InputError(std::string("report line is not JSON: ") + err.what());
    }
    try {
        ScanEntry e;
        e.graph6 = j.at("graph6").get<std::string>();
        const Graph g = parse_graph6(e.graph6);
        e.n = j.value("n", g.order());
        if (e.n != g.order()) throw InputError("report n disagrees with graph6");
        if (j.contains("degree") && !j["degree"].is_null()) e.degree = j["degree"].get<int>();
        const auto& d = j.at("dprime");
        if (d.is_string()) {
            if (d.get<std::string>() != "NotDistinguishable") throw InputError("unknown dprime marker");
            e.dprime = DPrimeResult::make_not_distinguishable();
        } else if (d.is_number_integer()) {
            DPrimeResult r;
            r.value = d.get<int>();
            if (j.contains("witness_colouring")) r.witness = labels_from_json(g, j["witness_colouring"]);
            e.dprime = r;
        }
        if (j.contains("note")) e.note = j["note"].get<std::string>();
        const auto status = j.value("status", std::string("ok"));
        for (auto s : {ScanStatus::Ok, ScanStatus::KnownException, ScanStatus::UnexpectedException,
                       ScanStatus::BudgetExceeded, ScanStatus::InputError})
            if (scan_status_name(s) == status) e.status = s;
        return e;
    } catch (const json::exception& err) {
        throw InputError(std::string("malformed report line: ") + err.what());
    }
}

std::string to_dot(const Graph& g, const EdgeColouring* c) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (EdgeId e = 0; e < g.size(); ++e) {
        out << "  " << g.edge(e).u << " -- " << g.edge(e).v;
        if (c && c->at(e)) out << " [color=" << colour_name(*c->at(e)) << "]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string colouring_to_text(const Graph& g, const EdgeColouring& c) {
    std::ostringstream out;
    for (EdgeId e = 0; e < g.size(); ++e) {
        out << g.edge(e).u << ' ' << g.edge(e).v << ' ';
        if (auto col = c.at(e)) out << colour_name(*col);
        else out << '-';
        out << '\n';
    }
    return out.str();
}

} // namespace symcol
