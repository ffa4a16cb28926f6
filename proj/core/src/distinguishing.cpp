#include "symcol/distinguishing.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "rng.hpp"
#include "symcol/aut_search.hpp"
#include "symcol/errors.hpp"
#include "symcol/graph6.hpp"

namespace symcol {

namespace {

VertexSet all_vertices(const Graph& g) {
    VertexSet v(g.order());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

EdgeColouring to_colouring(std::span<const int> labels) {
    EdgeColouring c(labels.size());
    for (std::size_t e = 0; e < labels.size(); ++e) c.set(e, static_cast<Colour>(labels[e]));
    return c;
}

// Nontrivial automorphism preserving the coloured edges' classes and fixing
// every still-uncoloured edge setwise: it survives every completion.
bool symmetric_for_every_completion(const Graph& g, std::span<const int> labels, int k) {
    AutConstraint c;
    std::vector<EdgeSet> classes(k);
    for (EdgeId e = 0; e < labels.size(); ++e) {
        if (labels[e] < 0) c.edge_setwise_pairs.push_back({{e}, {e}});
        else classes[labels[e]].push_back(e);
    }
    for (auto& cls : classes)
        if (!cls.empty()) c.edge_setwise_pairs.emplace_back(cls, cls);
    c.nontrivial_on = all_vertices(g);
    return find_automorphism(g, c).has_value();
}

class ColouringSearch {
public:
    ColouringSearch(const Graph& g, int k, bool star, const SearchBudget& budget)
        : g_(g), k_(k), star_(star && k >= 3), complete_(is_complete(g)), budget_(budget),
          labels_(g.size(), -1), coloured_(g.order(), 0), blue_(g.order(), 0) {}

    std::optional<std::vector<int>> run() {
        if (g_.size() == 0) {
            if (is_distinguishing_labels(g_, labels_)) return labels_;
            return std::nullopt;
        }
        if (auto found = probe()) return found;
        if (dfs(0)) return labels_;
        return std::nullopt;
    }

private:
    static constexpr int kBlue = static_cast<int>(Colour::Blue);

    int allowed_all_blue() const { return complete_ ? 0 : 1; }

    bool star_ok(std::span<const int> labels) const {
        if (!star_) return true;
        int count = 0;
        for (Vertex v = 0; v < g_.order(); ++v) {
            const auto& inc = g_.incident_edges(v);
            if (inc.empty()) continue;
            bool all = true;
            for (EdgeId e : inc) all = all && labels[e] == kBlue;
            count += all ? 1 : 0;
        }
        return count <= allowed_all_blue();
    }

    bool accept(std::span<const int> labels) const {
        return star_ok(labels) && is_distinguishing_labels(g_, labels);
    }

    std::optional<std::vector<int>> probe() {
        if (k_ < 2) return std::nullopt;
        detail::SplitMix rng(budget_.seed ^ (static_cast<std::uint64_t>(g_.size()) << 32) ^
                             static_cast<std::uint64_t>(k_));
        std::vector<int> labels(g_.size());
        for (std::uint32_t attempt = 0; attempt < budget_.probe_attempts; ++attempt) {
            for (auto& l : labels) l = static_cast<int>(rng.below(static_cast<std::uint64_t>(k_)));
            if (accept(labels)) return labels;
        }
        return std::nullopt;
    }

    // Colour names are interchangeable, so colours are introduced in order of
    // first use. With the star rule Blue is special and only Red/Green are
    // interchangeable.
    std::vector<int> choices() const {
        std::vector<int> out;
        if (!star_) {
            for (int c = 0; c <= std::min(k_ - 1, max_used_ + 1); ++c) out.push_back(c);
        } else {
            out.push_back(0);
            if (red_green_used_ >= 1) out.push_back(1);
            out.push_back(kBlue);
        }
        return out;
    }

    void assign(EdgeId e, int colour) {
        labels_[e] = colour;
        for (Vertex v : {g_.edge(e).u, g_.edge(e).v}) {
            ++coloured_[v];
            if (colour == kBlue) ++blue_[v];
            if (coloured_[v] == g_.degree(v) && blue_[v] == g_.degree(v)) ++all_blue_;
        }
    }

    void unassign(EdgeId e) {
        const int colour = labels_[e];
        for (Vertex v : {g_.edge(e).u, g_.edge(e).v}) {
            if (coloured_[v] == g_.degree(v) && blue_[v] == g_.degree(v)) --all_blue_;
            --coloured_[v];
            if (colour == kBlue) --blue_[v];
        }
        labels_[e] = -1;
    }

    bool dfs(EdgeId depth) {
        const std::size_t m = g_.size();
        if (depth == m) return is_distinguishing_labels(g_, labels_);
        for (int colour : choices()) {
            if (++assignments_ > budget_.max_assignments)
                throw BudgetExceeded("colouring search exceeded " +
                                     std::to_string(budget_.max_assignments) + " assignments");
            const int saved_max = max_used_;
            const int saved_rg = red_green_used_;
            assign(depth, colour);
            max_used_ = std::max(max_used_, colour);
            if (colour != kBlue) red_green_used_ = std::max(red_green_used_, colour);
            bool viable = !star_ || all_blue_ <= allowed_all_blue();
            const std::size_t remaining = m - depth - 1;
            if (viable && remaining > 0 && 2 * remaining <= m)
                viable = !symmetric_for_every_completion(g_, labels_, k_);
            if (viable && dfs(depth + 1)) return true;
            unassign(depth);
            max_used_ = saved_max;
            red_green_used_ = saved_rg;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    bool star_;
    bool complete_;
    SearchBudget budget_;
    std::vector<int> labels_;
    std::vector<int> coloured_;
    std::vector<int> blue_;
    int all_blue_ = 0;
    int max_used_ = -1;
    int red_green_used_ = -1;
    std::uint64_t assignments_ = 0;
};

} // namespace

bool is_distinguishing(const Graph& g, const EdgeColouring& c) {
    if (c.edge_count() != g.size()) throw std::invalid_argument("is_distinguishing: colouring sized for another graph");
    if (!c.is_total()) throw std::invalid_argument("is_distinguishing: colouring is partial");
    AutConstraint constraint;
    constraint.colour_preserve = c;
    constraint.nontrivial_on = all_vertices(g);
    return !find_automorphism(g, constraint).has_value();
}

bool is_distinguishing_labels(const Graph& g, std::span<const int> labels) {
    if (labels.size() != g.size()) throw std::invalid_argument("is_distinguishing_labels: size mismatch");
    const int k = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    if (k <= kColourCount) {
        if (std::any_of(labels.begin(), labels.end(), [](int l) { return l < 0; }))
            throw std::invalid_argument("is_distinguishing_labels: colouring is partial");
        return is_distinguishing(g, to_colouring(labels));
    }
    AutConstraint constraint;
    std::vector<EdgeSet> classes(k);
    for (EdgeId e = 0; e < labels.size(); ++e) {
        if (labels[e] < 0) throw std::invalid_argument("is_distinguishing_labels: colouring is partial");
        classes[labels[e]].push_back(e);
    }
    for (auto& cls : classes)
        if (!cls.empty()) constraint.edge_setwise_pairs.emplace_back(cls, cls);
    constraint.nontrivial_on = all_vertices(g);
    return !find_automorphism(g, constraint).has_value();
}

bool has_edge_fixing_automorphism(const Graph& g) {
    AutConstraint c;
    for (EdgeId e = 0; e < g.size(); ++e) c.edge_setwise_pairs.push_back({{e}, {e}});
    c.nontrivial_on = all_vertices(g);
    return find_automorphism(g, c).has_value();
}

std::optional<EdgeColouring> DPrimeResult::witness_colouring() const {
    if (not_distinguishable || value > kColourCount) return std::nullopt;
    return to_colouring(witness);
}

DPrimeResult distinguishing_index(const Graph& g, int max_colours, const SearchBudget& budget) {
    if (max_colours < 1) throw std::invalid_argument("distinguishing_index: max_colours must be positive");
    if (!is_connected(g)) throw InputError("distinguishing_index: graph is disconnected");
    if (has_edge_fixing_automorphism(g)) return DPrimeResult::make_not_distinguishable();
    for (int k = 1; k <= max_colours; ++k) {
        ColouringSearch search(g, k, false, budget);
        if (auto labels = search.run()) return {false, k, std::move(*labels)};
    }
    throw ColourLimitExceeded("distinguishing_index: no distinguishing colouring with " +
                              std::to_string(max_colours) + " colours");
}

std::optional<EdgeColouring> search_colouring(const Graph& g, int k, bool star_constraint,
                                              const SearchBudget& budget) {
    if (k < 1 || k > kColourCount) throw std::invalid_argument("search_colouring: k must be 1, 2 or 3");
    if (has_edge_fixing_automorphism(g)) return std::nullopt;
    ColouringSearch search(g, k, star_constraint, budget);
    auto labels = search.run();
    if (!labels) return std::nullopt;
    return to_colouring(*labels);
}

EdgeColouring cycle_colouring(int n) {
    if (n < 3) throw InputError("cycle_colouring needs n >= 3");
    const Graph g = cycle(n);
    if (n <= 5) {
        auto found = search_colouring(g, 3, true);
        if (!found) throw VerificationFailure("no star-compliant 3-colouring of C" + std::to_string(n));
        return *found;
    }
    EdgeColouring c(g.size(), Colour::Green);
    for (int position : {0, 1, 3}) c.set(*g.edge_id(position, (position + 1) % n), Colour::Red);
    return c;
}

Spider hamiltonian_spider(const Graph& g, std::span<const Vertex> path) {
    const int n = g.order();
    if (n < 7) throw InputError("hamiltonian_colouring needs at least 7 vertices");
    if (static_cast<int>(path.size()) != n) throw InputError("path does not visit every vertex");
    std::vector<bool> seen(n, false);
    for (Vertex v : path) {
        if (v < 0 || v >= n || seen[v]) throw InputError("path repeats or leaves the vertex set");
        seen[v] = true;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.adjacent(path[i], path[i + 1])) throw InputError("consecutive path vertices are not adjacent");

    std::vector<Vertex> order(path.begin(), path.end());
    for (int attempt = 0; attempt < 2; ++attempt) {
        // 1-based position k of the chord's far end
        for (int k = 4; k <= n - 2; ++k) {
            if (2 * k == n + 2 || !g.adjacent(order[0], order[k - 1])) continue;
            Spider s;
            s.chord = Edge(order[0], order[k - 1]);
            s.removed = Edge(order[0], order[1]);
            s.centre = order[k - 1];
            s.legs = {1, k - 2, n - k};
            s.colouring = EdgeColouring(g.size(), Colour::Green);
            for (std::size_t i = 1; i + 1 < order.size(); ++i)
                s.colouring.set(*g.edge_id(order[i], order[i + 1]), Colour::Red);
            s.colouring.set(*g.edge_id(s.chord.u, s.chord.v), Colour::Red);
            if (!is_distinguishing(g, s.colouring))
                throw VerificationFailure("spanning spider colouring is not distinguishing");
            return s;
        }
        std::reverse(order.begin(), order.end());
    }
    throw NoSuitableChord("no chord v1-vk with 4 <= k <= n-2 and 2k != n+2 at either path end");
}

EdgeColouring hamiltonian_colouring(const Graph& g, std::span<const Vertex> path) {
    return hamiltonian_spider(g, path).colouring;
}

std::string_view scan_status_name(ScanStatus s) {
    switch (s) {
    case ScanStatus::Ok: return "ok";
    case ScanStatus::KnownException: return "known_exception";
    case ScanStatus::UnexpectedException: return "unexpected_exception";
    case ScanStatus::BudgetExceeded: return "budget_exceeded";
    case ScanStatus::InputError: return "input_error";
    }
    return "?";
}

std::optional<std::string> known_exception_name(const Graph& g) {
    static const std::vector<std::pair<std::string, Graph>> known = {
        {"K2", complete(2)}, {"C3", cycle(3)}, {"C4", cycle(4)},           {"C5", cycle(5)},
        {"K4", complete(4)}, {"K5", complete(5)}, {"K3,3", complete_bipartite(3, 3)},
    };
    for (const auto& [name, ref] : known)
        if (ref.order() == g.order() && ref.size() == g.size() && are_isomorphic(ref, g)) return name;
    return std::nullopt;
}

ScanStatus classify_scan_result(const Graph& g, const DPrimeResult& result) {
    if (!result.not_distinguishable && result.value <= 2) return ScanStatus::Ok;
    return known_exception_name(g) ? ScanStatus::KnownException : ScanStatus::UnexpectedException;
}

std::vector<std::string> ScanReport::exception_names() const {
    std::vector<std::string> out;
    for (const auto& e : entries)
        if (e.status == ScanStatus::KnownException || e.status == ScanStatus::UnexpectedException)
            out.push_back(e.note.empty() ? e.graph6 : e.note);
    return out;
}

bool ScanReport::has_unexpected() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const ScanEntry& e) { return e.status == ScanStatus::UnexpectedException; });
}

namespace {

ScanEntry scan_one(const Graph& g, std::size_t index, const ScanOptions& options) {
    ScanEntry entry;
    entry.index = index;
    entry.graph6 = serialize_graph6(g);
    entry.n = g.order();
    entry.degree = regularity(g);
    if (g.order() > options.max_n) {
        entry.status = ScanStatus::InputError;
        entry.note = "order exceeds max_n";
        return entry;
    }
    if (!entry.degree || !is_connected(g)) {
        entry.status = ScanStatus::InputError;
        entry.note = "graph is not connected and regular";
        return entry;
    }
    try {
        entry.dprime = distinguishing_index(g, options.max_colours, options.budget);
        entry.status = classify_scan_result(g, *entry.dprime);
        if (entry.status != ScanStatus::Ok) entry.note = known_exception_name(g).value_or("");
    } catch (const BudgetExceeded& e) {
        entry.status = ScanStatus::BudgetExceeded;
        entry.note = e.what();
    } catch (const ColourLimitExceeded& e) {
        entry.status = ScanStatus::UnexpectedException;
        entry.note = e.what();
    }
    return entry;
}

} // namespace

ScanReport scan_conjecture(std::span<const Graph> corpus, const ScanOptions& options,
                           const std::function<void(const ScanEntry&)>& on_entry) {
    ScanReport report;
    report.entries.resize(corpus.size());
    std::mutex emit;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) {
            auto entry = scan_one(corpus[i], i, options);
            std::lock_guard lock(emit);
            if (on_entry) on_entry(entry);
            report.entries[i] = std::move(entry);
        }
    };
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return report;
}

} // namespace symcol
