#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcol/colouring.hpp"
#include "symcol/graph.hpp"

namespace symcol {

/// Limits for the exhaustive colouring searches.
struct SearchBudget {
    /// Colour assignments the exhaustive phase may make before giving up.
    std::uint64_t max_assignments = 100'000'000;
    /// Random colourings tried before the exhaustive phase starts. Only a
    /// found witness ends the search early; exhaustion is still exhaustive.
    std::uint32_t probe_attempts = 4096;
    std::uint64_t seed = 0x5eed;
};

/// True iff the identity is the only automorphism preserving c. Throws
/// std::invalid_argument when c is partial or sized for another graph.
bool is_distinguishing(const Graph& g, const EdgeColouring& c);

/// Integer-labelled variant used when more than three colours are needed.
bool is_distinguishing_labels(const Graph& g, std::span<const int> labels);

/// Some nontrivial automorphism fixes every edge setwise, so no colouring
/// can distinguish (K2 among connected graphs).
bool has_edge_fixing_automorphism(const Graph& g);

struct DPrimeResult {
    bool not_distinguishable = false;
    int value = 0;
    /// One colour index per edge; set whenever value is.
    std::vector<int> witness;

    static DPrimeResult make_not_distinguishable() { return {true, 0, {}}; }
    /// Witness as an EdgeColouring; only valid for value <= 3.
    std::optional<EdgeColouring> witness_colouring() const;
};

/// Least k <= max_colours admitting a distinguishing k-colouring. Throws
/// InputError for disconnected input, BudgetExceeded, or
/// ColourLimitExceeded when every k <= max_colours fails.
DPrimeResult distinguishing_index(const Graph& g, int max_colours, const SearchBudget& budget = {});

/// Distinguishing colouring with at most k colours from {Red, Green,
/// Blue}. With star_constraint set the result has at most one all-Blue
/// vertex, and none when g is complete. nullopt when an exhaustive search
/// proves none exists; BudgetExceeded when it cannot finish.
std::optional<EdgeColouring> search_colouring(const Graph& g, int k, bool star_constraint,
                                              const SearchBudget& budget = {});

/// Colouring of the canonical cycle(n): for n >= 6 Red on the edges at
/// cyclic positions 0, 1 and 3 (position p is {p, p+1 mod n}) and Green
/// elsewhere; for n <= 5 a searched 3-colouring satisfying the star rule.
EdgeColouring cycle_colouring(int n);

class NoSuitableChord : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The asymmetric spanning spider built from a Hamiltonian path.
struct Spider {
    Edge chord;
    Edge removed;
    Vertex centre = -1;
    /// Leg lengths in the order (chord leg, leg back along the path,
    /// leg forward along the path).
    std::array<int, 3> legs{};
    EdgeColouring colouring;
};

/// Throws InputError when `path` is not a Hamiltonian path of g or
/// g.order() < 7, NoSuitableChord when neither endpoint has a usable chord.
Spider hamiltonian_spider(const Graph& g, std::span<const Vertex> path);
EdgeColouring hamiltonian_colouring(const Graph& g, std::span<const Vertex> path);

// Corpus scan against the two-colour conjecture for regular graphs.

enum class ScanStatus { Ok, KnownException, UnexpectedException, BudgetExceeded, InputError };

std::string_view scan_status_name(ScanStatus s);

/// Name of the graph if it is one of the expected exceptions (K2, C3, C4,
/// C5, K4, K5, K3,3), matched up to isomorphism.
std::optional<std::string> known_exception_name(const Graph& g);

/// Status of a graph given its (possibly externally supplied) D' value.
ScanStatus classify_scan_result(const Graph& g, const DPrimeResult& result);

struct ScanEntry {
    std::size_t index = 0;
    std::string graph6;
    int n = 0;
    std::optional<int> degree;
    std::optional<DPrimeResult> dprime;
    ScanStatus status = ScanStatus::Ok;
    std::string note;
};

struct ScanOptions {
    int max_n = 10;
    int max_colours = 4;
    int jobs = 1;
    SearchBudget budget;
};

struct ScanReport {
    std::vector<ScanEntry> entries;
    std::vector<std::string> exception_names() const;
    bool has_unexpected() const;
};

/// D' for every graph; entries are reported to `on_entry` as they finish
/// (serialised, possibly out of order when jobs > 1) and returned in input
/// order.
ScanReport scan_conjecture(std::span<const Graph> corpus, const ScanOptions& options,
                           const std::function<void(const ScanEntry&)>& on_entry = {});

} // namespace symcol
