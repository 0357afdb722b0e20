#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rahp/polyhedron.hpp"

namespace rahp {

struct PrismaticCircuit {
    int k = 0;
    std::vector<int> dual_cycle;     // faces, starting at the smallest
    std::vector<int> crossed_edges;  // edge ids, crossed_edges[i] between dual_cycle[i] and [i+1]
};

// Simple dual k-cycles whose crossed edges are pairwise vertex-disjoint,
// each listed once, in lexicographic order of their face sequences.
std::vector<PrismaticCircuit> prismatic_circuits(const AbstractPolyhedron& P, int k);

struct ValidityWitness {
    std::vector<int> faces;                  // offending face triple or the circuit's faces
    std::optional<PrismaticCircuit> circuit;
    std::optional<int> vertex;               // vertex of bad valency
    std::string reason;
};

struct ValidityReport {
    bool steinitz_ok = false;
    bool cond_faces_ge6 = false;
    bool cond_valency = false;
    bool cond_triples = false;
    bool cond_no_prismatic4 = false;
    Kind kind = Kind::non_right_angled;
    std::optional<ValidityWitness> witness;

    bool valid() const
    {
        return steinitz_ok && cond_faces_ge6 && cond_valency && cond_triples && cond_no_prismatic4;
    }
};

// Right-angled realizability test: Steinitz, at least six faces, valencies
// 3 or 4, the face-triple condition and absence of prismatic 4-circuits.
ValidityReport andreev_check(const AbstractPolyhedron& P);

} // namespace rahp
