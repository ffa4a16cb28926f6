#pragma once

#include <vector>

#include "symcol/graph.hpp"

namespace symcol {

/// Bijection on {0..n-1}, stored as its image sequence.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument when `images` is not a bijection.
    explicit Permutation(std::vector<Vertex> images);

    static Permutation identity(int n);

    int degree() const noexcept { return static_cast<int>(images_.size()); }
    Vertex operator()(Vertex v) const { return images_[v]; }
    Edge operator()(const Edge& e) const { return Edge(images_[e.u], images_[e.v]); }

    const std::vector<Vertex>& images() const noexcept { return images_; }

    bool is_identity() const;
    Permutation inverse() const;
    /// (a * b)(v) = a(b(v)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<Vertex> images_;
};

bool is_automorphism(const Graph& g, const Permutation& p);

} // namespace symcol
