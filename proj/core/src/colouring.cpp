#include "symcol/colouring.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "symcol/errors.hpp"
#include "symcol/permutation.hpp"

namespace symcol {

std::string_view colour_name(Colour c) {
    switch (c) {
    case Colour::Red: return "red";
    case Colour::Green: return "green";
    case Colour::Blue: return "blue";
    }
    return "?";
}

Colour parse_colour(std::string_view name) {
    if (name == "red") return Colour::Red;
    if (name == "green") return Colour::Green;
    if (name == "blue") return Colour::Blue;
    throw InputError("unknown colour '" + std::string(name) + "'");
}

bool EdgeColouring::is_total() const {
    for (const auto& s : slots_)
        if (!s) return false;
    return true;
}

int EdgeColouring::colours_used() const {
    std::array<bool, kColourCount> seen{};
    for (const auto& s : slots_)
        if (s) seen[static_cast<int>(*s)] = true;
    int count = 0;
    for (bool b : seen) count += b ? 1 : 0;
    return count;
}

EdgeColouring EdgeColouring::restricted_to(const std::vector<EdgeId>& keep) const {
    EdgeColouring out(slots_.size());
    for (EdgeId e : keep) out.slots_.at(e) = slots_.at(e);
    return out;
}

std::vector<Vertex> all_blue_vertices(const Graph& g, const EdgeColouring& c) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& inc = g.incident_edges(v);
        if (inc.empty()) continue;
        bool all_blue = true;
        for (EdgeId e : inc)
            if (c.at(e) != Colour::Blue) {
                all_blue = false;
                break;
            }
        if (all_blue) out.push_back(v);
    }
    return out;
}

bool satisfies_star(const Graph& g, const EdgeColouring& c) {
    const auto blue = all_blue_vertices(g, c);
    return is_complete(g) ? blue.empty() : blue.size() <= 1;
}

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (Vertex v : images_) {
        if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || hit[v])
            throw std::invalid_argument("permutation images are not a bijection");
        hit[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<Vertex> images(n);
    for (int i = 0; i < n; ++i) images[i] = i;
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<Vertex>(i)) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<Vertex> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Vertex>(i);
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    std::vector<Vertex> out(b.images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.images_[b.images_[i]];
    Permutation p;
    p.images_ = std::move(out);
    return p;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
    if (p.degree() != g.order()) return false;
    for (const auto& e : g.edges())
        if (!g.adjacent(p(e.u), p(e.v))) return false;
    return true;
}

} // namespace symcol
