#pragma once

#include "spor/graph.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace spor {

// 128-bit accumulator for per-edge 64-bit tie values; sums over any path
// that fits in memory cannot wrap.
using TieSum = unsigned __int128;

// Exact path length under deterministic tie-breaking: true weight first,
// accumulated edge ties second. Addition is componentwise; comparison is
// lexicographic. Infinity is the explicit unreachable sentinel.
struct PerturbedLength {
    double base = 0.0;
    TieSum tie = 0;

    static PerturbedLength zero() { return {0.0, 0}; }
    static PerturbedLength infinity() {
        return {std::numeric_limits<double>::infinity(), 0};
    }
    bool is_infinite() const { return base == std::numeric_limits<double>::infinity(); }

    friend PerturbedLength operator+(const PerturbedLength& a, const PerturbedLength& b) {
        if (a.is_infinite() || b.is_infinite())
            return infinity();
        return {a.base + b.base, a.tie + b.tie};
    }
    friend bool operator==(const PerturbedLength& a, const PerturbedLength& b) {
        return a.base == b.base && a.tie == b.tie;
    }
    friend bool operator!=(const PerturbedLength& a, const PerturbedLength& b) {
        return !(a == b);
    }
    friend bool operator<(const PerturbedLength& a, const PerturbedLength& b) {
        if (a.base != b.base)
            return a.base < b.base;
        return a.tie < b.tie;
    }
    friend bool operator>(const PerturbedLength& a, const PerturbedLength& b) { return b < a; }
    friend bool operator<=(const PerturbedLength& a, const PerturbedLength& b) { return !(b < a); }
    friend bool operator>=(const PerturbedLength& a, const PerturbedLength& b) { return !(a < b); }
};

// Graph plus one pre-assigned tie value per edge. Ties are keyed by
// (seed, min endpoint, max endpoint), so neither edge insertion order nor
// thread schedule can change them.
struct PerturbedGraph {
    Graph graph;
    std::vector<std::uint64_t> ties; // parallel to graph.edges()
    std::uint64_t seed = 0;

    PerturbedLength arc_length(const Arc& a) const { return {a.w, ties[a.edge]}; }
};

PerturbedGraph perturb(const Graph& g, std::uint64_t seed);

} // namespace spor
