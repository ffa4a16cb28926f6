#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "symcol/aut_search.hpp"
#include "symcol/colouring.hpp"
#include "symcol/distinguishing.hpp"
#include "symcol/graph.hpp"
#include "symcol/layered.hpp"

namespace symcol {

using nlohmann::json;

/// [{u, v, colour}] in edge-id order; uncoloured edges are skipped.
json colouring_to_json(const Graph& g, const EdgeColouring& c);
/// Inverse of colouring_to_json. Throws InputError on unknown edges,
/// duplicates or bad colour names.
EdgeColouring colouring_from_json(const Graph& g, const json& j);

/// Integer labels per edge; names are used for labels 0..2.
json labels_to_json(const Graph& g, const std::vector<int>& labels);
std::vector<int> labels_from_json(const Graph& g, const json& j);

json permutation_to_json(const Permutation& p);

json decoration_to_json(const Graph& g, const Decoration& d);
json step_to_json(const Graph& g, const StepRecord& s);
json audit_to_json(const Graph& g, const std::vector<StepRecord>& audit);
json stats_to_json(const ColourStats& s);

/// One scan report line (without trailing newline).
std::string scan_entry_to_jsonl(const ScanEntry& e);
/// Parses a line written by scan_entry_to_jsonl. The status field is read
/// but callers re-derive it from dprime when re-evaluating a report.
ScanEntry scan_entry_from_jsonl(const std::string& line);

/// Graphviz rendering with edges coloured by name; uncoloured edges black.
std::string to_dot(const Graph& g, const EdgeColouring* c = nullptr);

/// "u v colour" per line.
std::string colouring_to_text(const Graph& g, const EdgeColouring& c);

} // namespace symcol
