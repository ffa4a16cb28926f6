#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcol/aut_search.hpp"
#include "symcol/colouring.hpp"
#include "symcol/distinguishing.hpp"
#include "symcol/graph.hpp"

namespace symcol {

/// Orbits of Aut(G, r) ordered by (distance from r, least vertex), with
/// the incident and closed edge sets the construction works layer by layer.
struct OrbitLayering {
    Vertex root = 0;
    std::vector<VertexSet> layers;
    /// Layer index of every vertex.
    std::vector<int> layer_of;
    std::vector<int> distance;
    /// incident[i]: edges with an endpoint in layers[i].
    std::vector<EdgeSet> incident;
    /// reach[i]: largest j such that some layer k <= i shares an edge with
    /// layer j.
    std::vector<int> reach;
    /// closed[i]: edges with both endpoints in layers 0..reach[i].
    std::vector<EdgeSet> closed;

    int size() const { return static_cast<int>(layers.size()); }
    /// Vertices of layers 0..i-1.
    VertexSet before(int i) const;
};

/// Throws InputError for disconnected graphs; std::logic_error if the
/// layering invariants fail (which would indicate an orbit bug).
OrbitLayering build_layering(const Graph& g, Vertex r);

struct LayerEdgeClasses {
    EdgeSet back;
    EdgeSet forward;
    EdgeSet horizontal;
    int f = 0;
    int b = 0;
    int h = 0;
};

/// Partition of incident[i]; throws std::logic_error when the per-vertex
/// counts are not uniform over the layer or a later layer has no back edge.
LayerEdgeClasses classify_layer(const Graph& g, const OrbitLayering& layering, int i);

/// Connected component of the horizontal subgraph of one layer.
struct Component {
    VertexSet vertices;
    EdgeSet edges;

    friend bool operator==(const Component&, const Component&) = default;
};

/// Components ordered by least vertex; a layer without horizontal edges
/// yields one singleton component per vertex.
std::vector<Component> horizontal_components(const Graph& g, const OrbitLayering& layering, int i);

/// Recolouring recipe for a component: forward edges in F turn Red (the
/// other forward edges of the component Green), back edges in B turn Blue.
struct Decoration {
    EdgeSet forward;
    EdgeSet back;

    bool empty() const { return forward.empty() && back.empty(); }
    friend bool operator==(const Decoration&, const Decoration&) = default;
};

enum class HorizontalRule { H0, H1, H2Plus };
std::string_view rule_name(HorizontalRule r);

struct Violation {
    std::string property;
    int layer = 0;
    std::string detail;
};

struct ClaimCheck {
    VertexSet component;
    /// Asymmetric, pairwise non-similar decorations found (counting stops
    /// once `reachable` is met).
    int available = 0;
    /// Components reachable from this one by persistent automorphisms.
    int reachable = 0;
    bool holds() const { return available >= reachable; }
};

struct StepRecord {
    int layer = 0;
    HorizontalRule rule = HorizontalRule::H0;
    int f = 0, b = 0, h = 0;
    std::vector<std::pair<VertexSet, Decoration>> decorations;
    std::vector<ClaimCheck> claims;
    bool fallback = false;
    std::string fallback_reason;
    std::vector<Violation> violations;
};

struct StepState {
    int layer = 0;
    EdgeColouring colouring;
    /// c_{i-1}; absent for layer 0.
    std::optional<EdgeColouring> previous;
    std::vector<StepRecord> audit;
};

/// Thrown when some component has fewer usable decorations than the
/// components its orbit must tell apart.
class DecorationShortage : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ColourOptions {
    std::optional<Vertex> root;
    /// Run check_step_properties after every step.
    bool verify = true;
    SearchBudget budget;
    /// Leaves the per-layer exhaustive recolouring may evaluate.
    std::uint64_t layer_fallback_leaves = 4000;
    /// Treat every generic step at degree 3 or 4 as failed, so the fallback
    /// ladder runs on every layer.
    bool force_fallback = false;
};

/// Counters accumulated over a run, including recursive component runs.
struct ColourStats {
    int layered_runs = 0;
    int layers = 0;
    int fallback_layers = 0;
    int global_fallbacks = 0;
    int steps_checked = 0;
    int violations = 0;
    int claim_checks = 0;
    int claim_failures = 0;

    ColourStats& operator+=(const ColourStats& o);
};

struct ColourResult {
    EdgeColouring colouring;
    /// "complete-search", "cycle", "layered" or "global-search".
    std::string method;
    OrbitLayering layering;
    std::vector<StepRecord> audit;
    ColourStats stats;
};

StepState initial_colouring(const Graph& g, const OrbitLayering& layering);

/// Colours the horizontal edges of layers[i] in place (H0/H1/H2+ rules).
HorizontalRule colour_horizontal(const Graph& g, const OrbitLayering& layering, StepState& state, int i,
                                 const ColourOptions& options, ColourStats& stats);

/// Subgroup of automorphisms fixing layers 0..i-1 pointwise and preserving
/// the current horizontal colouring of layer i.
AutConstraint persistent_constraint(const Graph& g, const OrbitLayering& layering, const StepState& state,
                                    int i);

/// Persistent automorphism meeting `extra` as well. `extra` must not carry
/// its own colour_preserve.
std::optional<Permutation> persistent_exists(const Graph& g, const OrbitLayering& layering,
                                             const StepState& state, int i, const AutConstraint& extra);

std::vector<Decoration> enumerate_decorations(const Graph& g, const OrbitLayering& layering,
                                              const StepState& state, int i, const Component& k);

bool decoration_is_asymmetric(const Graph& g, const OrbitLayering& layering, const StepState& state, int i,
                              const Component& k, const Decoration& d);

bool decorations_similar(const Graph& g, const OrbitLayering& layering, const StepState& state, int i,
                         const Component& k, const Decoration& d, const Component& k2, const Decoration& d2);

/// Greedy decoration of every component of layer i, then recolouring of its
/// forward and back edges. Appends claim checks to `record`. Throws
/// DecorationShortage.
void assign_decorations(const Graph& g, const OrbitLayering& layering, StepState& state, int i,
                        StepRecord& record);

/// Violations of the step invariants for state.colouring at state.layer:
/// I   the root is the only all-Blue vertex,
/// II  only edges incident to the current layer changed,
/// III automorphisms fixing r and preserving the colouring on closed[j]
///     fix layers[j] pointwise, for every j <= layer,
/// IV  edges not yet reached are Green,
/// V   Blue edges reaching later layers are incident to r.
std::vector<Violation> check_step_properties(const Graph& g, const OrbitLayering& layering,
                                             const StepState& state);

/// Distinguishing 3-colouring with the star property for a connected
/// regular graph other than K2. Throws NotColourable for K2, InputError for
/// disconnected or irregular input, VerificationFailure if the result fails
/// its final check.
ColourResult colour_regular(const Graph& g, const ColourOptions& options = {});

} // namespace symcol
