#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rahp/andreev.hpp"
#include "rahp/polyhedron.hpp"

namespace rahp {

// Two n-gon bases joined by 2n triangles; vertices 0..n-1 on the top base.
AbstractPolyhedron antiprism(int n);

// Two n-gon bases joined by two rings of n pentagons. Faces carry tags:
// "L5" on every face of L(5); otherwise "L<n>:base" and "L<n>:lateral"
// anchored at the lateral face's base edge.
AbstractPolyhedron lobell(int n);

// k copies of L(n) glued successively along their bases.
AbstractPolyhedron tower(int n, int k);

struct TwistCandidate {
    int face = -1;
    Edge e1;  // both edges in traversal order of the face
    Edge e2;
};

// Pairs of vertex-disjoint edges on a common face with all four endpoints
// 4-valent, ordered by face and then by edge position.
std::vector<TwistCandidate> edge_twist_candidates(const AbstractPolyhedron& P);

// Removes e1 and e2 and joins their endpoints to a new vertex V.
AbstractPolyhedron edge_twist(const AbstractPolyhedron& P, Edge e1, Edge e2);

enum class EdgeClass { good, very_good };

struct ClassifiedEdge {
    Edge edge;
    EdgeClass cls = EdgeClass::good;
};

// Edges whose end faces (the faces at its endpoints not containing it) are
// distinct, non-adjacent and have at least six sides; very good edges also
// cross no prismatic 5-circuit.
std::vector<ClassifiedEdge> good_edges(const AbstractPolyhedron& P);

// Deletes a very good edge and dissolves its endpoints.
AbstractPolyhedron edge_surgery(const AbstractPolyhedron& P, Edge e);

struct AdditionCandidate {
    int face = -1;
    Edge ea;
    Edge eb;
};

// Unordered pairs of vertex-disjoint boundary edges of every face.
std::vector<AdditionCandidate> edge_addition_candidates(const AbstractPolyhedron& P);

struct AdditionResult {
    AbstractPolyhedron polyhedron;
    ValidityReport report;
};

// Subdivides ea and eb (new vertices V and V+1) and joins the subdivision
// points across the face.
AdditionResult edge_addition(const AbstractPolyhedron& P, int face, Edge ea, Edge eb);

// Identifies boundary vertex F1[i] with F2[(offset + direction * i) mod k].
struct Matching {
    int direction = 1;
    int offset = 0;

    bool operator==(const Matching&) const = default;
};

// Ideal summands glue along triangles, identifying vertices; compact
// summands glue along k-gons whose boundary vertices then dissolve.
AbstractPolyhedron connect_sum(const AbstractPolyhedron& P1, int F1, const AbstractPolyhedron& P2,
                               int F2, Matching matching);

// True when the gluing is known to be isometric, so volumes add: any
// triangle gluing of ideal summands, or equal face tags with anchors matched.
bool gluing_is_isometric(const AbstractPolyhedron& P1, int F1, const AbstractPolyhedron& P2, int F2,
                         Matching matching);

struct ComposeResult {
    AbstractPolyhedron polyhedron;
    Matching matching;
    bool isometric = false;
};

// All 2k matchings, one result per isomorphism class (first matching wins,
// preferring isometric gluings).
std::vector<ComposeResult> connect_sum_all(const AbstractPolyhedron& P1, int F1,
                                           const AbstractPolyhedron& P2, int F2);

enum class MoveKind { twist, surgery, addition, compose };

struct ReplayLog;

struct MoveDescriptor {
    MoveKind kind = MoveKind::twist;
    int face = -1;  // addition face, or the first summand's face for compose
    Edge e1{-1, -1};
    Edge e2{-1, -1};
    int other_face = -1;
    Matching matching;
    std::shared_ptr<const ReplayLog> other;
};

struct ReplayLog {
    std::string seed;  // RA1: code, decoded to the starting labelling
    std::vector<MoveDescriptor> moves;
};

AbstractPolyhedron apply_move(const AbstractPolyhedron& P, const MoveDescriptor& move);
AbstractPolyhedron replay(const ReplayLog& log);

nlohmann::json to_json(const MoveDescriptor& move);
nlohmann::json to_json(const ReplayLog& log);
MoveDescriptor move_from_json(const nlohmann::json& j);
ReplayLog replay_log_from_json(const nlohmann::json& j);

} // namespace rahp
