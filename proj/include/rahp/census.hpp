#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rahp/canonical.hpp"
#include "rahp/generators.hpp"
#include "rahp/polyhedron.hpp"

namespace rahp {

struct CensusOptions {
    int jobs = 1;
    // Largest accepted n_max; 0 selects 21 (ideal) or 34 (compact).
    int n_limit = 0;
    std::size_t max_nodes = 4'000'000;
};

struct CensusStats {
    std::map<int, std::size_t> generated;  // candidates produced per target n
    std::map<int, std::size_t> rejected;   // candidates failing the realizability test
    std::size_t dedup_hits = 0;
};

struct CensusResult {
    Kind kind = Kind::ideal;
    int n_max = 0;
    // Sorted codes per vertex count; every admissible n in range is present.
    std::map<int, std::vector<CanonicalCode>> codes;
    // code text -> log whose replay reproduces that code
    std::map<std::string, ReplayLog> provenance;
    // compact only: volumes obtainable by additive gluing of isometric faces
    std::map<std::string, double> volumes;
    CensusStats stats;

    std::map<int, std::size_t> counts() const;
};

// Closure of the antiprisms A(m), 2m <= n_max, under edge twists.
CensusResult ideal_census(int n_max, const CensusOptions& options = {});

// Closure of the Lobell polyhedra L(m), 4m <= n_max, under edge addition and
// connected sums, keeping only compact right-angled results.
CensusResult compact_census(int n_max, const CensusOptions& options = {});

struct GrowthNode {
    CanonicalCode code;
    int generation = 0;
    ReplayLog log;
};

struct GrowthGraph {
    std::vector<GrowthNode> nodes;         // by generation, then by code
    std::vector<std::pair<int, int>> edges;  // (parent, child) node indices, sorted

    std::vector<std::size_t> generation_sizes() const;
};

// Breadth-first growth from seed by vertex-increasing moves (twist and/or
// addition); nodes are deduplicated across all generations.
GrowthGraph growth_graph(const AbstractPolyhedron& seed, const std::vector<MoveKind>& moves, int depth,
                         const CensusOptions& options = {});

} // namespace rahp
