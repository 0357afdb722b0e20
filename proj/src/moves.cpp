#include <algorithm>

#include "rahp/canonical.hpp"
#include "rahp/error.hpp"
#include "rahp/generators.hpp"

namespace rahp {

namespace {

int index_in(const std::vector<int>& seq, int value)
{
    auto it = std::find(seq.begin(), seq.end(), value);
    return it == seq.end() ? -1 : static_cast<int>(it - seq.begin());
}

void replace_neighbour(std::vector<std::vector<int>>& rot, int v, int old_w, int new_w)
{
    const int i = index_in(rot[v], old_w);
    if (i < 0) throw Error(ErrorCode::BadOperands, "vertices are not adjacent");
    rot[v][i] = new_w;
}

bool disjoint(Edge a, Edge b)
{
    return a.first != b.first && a.first != b.second && a.second != b.first && a.second != b.second;
}

// Position i of the directed edge face[i] -> face[i+1] that carries e, or -1.
int edge_position(const std::vector<int>& face, Edge e)
{
    const int n = static_cast<int>(face.size());
    for (int i = 0; i < n; ++i) {
        const int a = face[i];
        const int b = face[(i + 1) % n];
        if ((a == e.first && b == e.second) || (a == e.second && b == e.first)) return i;
    }
    return -1;
}

Edge directed_at(const std::vector<int>& face, int i)
{
    return {face[i], face[(i + 1) % face.size()]};
}

int third_face(const AbstractPolyhedron& P, int x, int y)
{
    const int l = P.face_left(x, y);
    const int r = P.face_left(y, x);
    for (int f : P.faces_at(x))
        if (f != l && f != r) return f;
    return -1;
}

nlohmann::json edge_json(Edge e) { return nlohmann::json::array({e.first, e.second}); }

Edge edge_from_json(const nlohmann::json& j)
{
    if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::BadInput, "edge must be [u, v]");
    return {j[0].get<int>(), j[1].get<int>()};
}

} // namespace

std::vector<TwistCandidate> edge_twist_candidates(const AbstractPolyhedron& P)
{
    std::vector<TwistCandidate> out;
    for (int f = 0; f < P.face_count(); ++f) {
        const auto& c = P.face(f);
        const int n = static_cast<int>(c.size());
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const Edge e1 = directed_at(c, i);
                const Edge e2 = directed_at(c, j);
                if (!disjoint(e1, e2)) continue;
                if (P.degree(e1.first) != 4 || P.degree(e1.second) != 4 || P.degree(e2.first) != 4 ||
                    P.degree(e2.second) != 4)
                    continue;
                out.push_back({f, e1, e2});
            }
    }
    return out;
}

AbstractPolyhedron edge_twist(const AbstractPolyhedron& P, Edge e1, Edge e2)
{
    if (!P.adjacent(e1.first, e1.second) || !P.adjacent(e2.first, e2.second))
        throw Error(ErrorCode::BadOperands, "twist operands must be edges");
    if (!disjoint(e1, e2)) throw Error(ErrorCode::BadOperands, "twist edges must be vertex-disjoint");
    for (int v : {e1.first, e1.second, e2.first, e2.second})
        if (P.degree(v) != 4) throw Error(ErrorCode::BadOperands, "twist endpoints must be 4-valent");
    int face = -1;
    for (int f : {P.face_left(e1.first, e1.second), P.face_left(e1.second, e1.first)})
        if (edge_position(P.face(f), e2) >= 0) face = f;
    if (face < 0) throw Error(ErrorCode::BadOperands, "twist edges do not share a face");
    const auto& c = P.face(face);
    const auto [p, q] = directed_at(c, edge_position(c, e1));
    const auto [s, r] = directed_at(c, edge_position(c, e2));
    const int x = P.vertex_count();
    auto rot = P.rotations();
    replace_neighbour(rot, p, q, x);
    replace_neighbour(rot, q, p, x);
    replace_neighbour(rot, s, r, x);
    replace_neighbour(rot, r, s, x);
    rot.push_back({q, s, r, p});
    return AbstractPolyhedron::from_rotation(rot);
}

std::vector<ClassifiedEdge> good_edges(const AbstractPolyhedron& P)
{
    if (P.kind() != Kind::compact)
        throw Error(ErrorCode::WrongKind, "good edges are defined for compact polyhedra");
    std::vector<char> on_circuit(P.edge_count(), 0);
    for (const auto& c : prismatic_circuits(P, 5))
        for (int e : c.crossed_edges) on_circuit[e] = 1;
    std::vector<ClassifiedEdge> out;
    for (int e = 0; e < P.edge_count(); ++e) {
        const auto [x, y] = P.edges()[e];
        const int f1 = third_face(P, x, y);
        const int f4 = third_face(P, y, x);
        if (f1 < 0 || f4 < 0 || f1 == f4 || P.faces_adjacent(f1, f4)) continue;
        if (P.face_size(f1) < 6 || P.face_size(f4) < 6) continue;
        out.push_back({P.edges()[e], on_circuit[e] ? EdgeClass::good : EdgeClass::very_good});
    }
    return out;
}

AbstractPolyhedron edge_surgery(const AbstractPolyhedron& P, Edge e)
{
    const int id = P.edge_id(e.first, e.second);
    if (id < 0) throw Error(ErrorCode::BadOperands, "surgery operand is not an edge");
    const auto good = good_edges(P);
    const bool very_good = std::any_of(good.begin(), good.end(), [&](const ClassifiedEdge& c) {
        return c.edge == P.edges()[id] && c.cls == EdgeClass::very_good;
    });
    if (!very_good) throw Error(ErrorCode::NotVeryGood, "edge is not very good");
    const int x = e.first;
    const int y = e.second;
    auto rot = P.rotations();
    for (const auto& [v, other] : {std::pair{x, y}, std::pair{y, x}}) {
        std::vector<int> rest;
        for (int w : rot[v])
            if (w != other) rest.push_back(w);
        replace_neighbour(rot, rest[0], v, rest[1]);
        replace_neighbour(rot, rest[1], v, rest[0]);
    }
    std::vector<int> renumber(P.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < P.vertex_count(); ++v)
        if (v != x && v != y) renumber[v] = next++;
    std::vector<std::vector<int>> out;
    for (int v = 0; v < P.vertex_count(); ++v) {
        if (renumber[v] < 0) continue;
        std::vector<int> r;
        for (int w : rot[v]) r.push_back(renumber[w]);
        out.push_back(std::move(r));
    }
    return AbstractPolyhedron::from_rotation(out);
}

std::vector<AdditionCandidate> edge_addition_candidates(const AbstractPolyhedron& P)
{
    std::vector<AdditionCandidate> out;
    for (int f = 0; f < P.face_count(); ++f) {
        const auto& c = P.face(f);
        const int n = static_cast<int>(c.size());
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const Edge a = directed_at(c, i);
                const Edge b = directed_at(c, j);
                if (disjoint(a, b)) out.push_back({f, a, b});
            }
    }
    return out;
}

AdditionResult edge_addition(const AbstractPolyhedron& P, int face, Edge ea, Edge eb)
{
    if (face < 0 || face >= P.face_count()) throw Error(ErrorCode::BadOperands, "face index out of range");
    const auto& c = P.face(face);
    const int ia = edge_position(c, ea);
    const int ib = edge_position(c, eb);
    if (ia < 0 || ib < 0) throw Error(ErrorCode::BadOperands, "edges must lie on the face");
    if (ia == ib || !disjoint(ea, eb))
        throw Error(ErrorCode::BadOperands, "edges must be distinct and non-adjacent");
    const auto [a1, a2] = directed_at(c, ia);
    const auto [b1, b2] = directed_at(c, ib);
    const int x = P.vertex_count();
    const int y = x + 1;
    auto rot = P.rotations();
    replace_neighbour(rot, a1, a2, x);
    replace_neighbour(rot, a2, a1, x);
    replace_neighbour(rot, b1, b2, y);
    replace_neighbour(rot, b2, b1, y);
    rot.push_back({a1, a2, y});
    rot.push_back({b1, b2, x});
    AdditionResult result{AbstractPolyhedron::from_rotation(rot), {}};
    result.report = andreev_check(result.polyhedron);
    return result;
}

AbstractPolyhedron apply_move(const AbstractPolyhedron& P, const MoveDescriptor& move)
{
    switch (move.kind) {
    case MoveKind::twist: return edge_twist(P, move.e1, move.e2);
    case MoveKind::surgery: return edge_surgery(P, move.e1);
    case MoveKind::addition: return edge_addition(P, move.face, move.e1, move.e2).polyhedron;
    case MoveKind::compose:
        if (!move.other) throw Error(ErrorCode::BadInput, "compose move needs a second summand");
        return connect_sum(P, move.face, replay(*move.other), move.other_face, move.matching);
    }
    throw Error(ErrorCode::BadInput, "unknown move kind");
}

AbstractPolyhedron replay(const ReplayLog& log)
{
    AbstractPolyhedron P = decode(log.seed);
    for (const auto& m : log.moves) P = apply_move(P, m);
    return P;
}

nlohmann::json to_json(const MoveDescriptor& move)
{
    switch (move.kind) {
    case MoveKind::twist:
        return {{"kind", "twist"}, {"e1", edge_json(move.e1)}, {"e2", edge_json(move.e2)}};
    case MoveKind::surgery: return {{"kind", "surgery"}, {"edge", edge_json(move.e1)}};
    case MoveKind::addition:
        return {{"kind", "addition"},
                {"face", move.face},
                {"ea", edge_json(move.e1)},
                {"eb", edge_json(move.e2)}};
    case MoveKind::compose:
        return {{"kind", "compose"},
                {"face1", move.face},
                {"face2", move.other_face},
                {"direction", move.matching.direction},
                {"offset", move.matching.offset},
                {"other", move.other ? to_json(*move.other) : nlohmann::json(nullptr)}};
    }
    return nullptr;
}

nlohmann::json to_json(const ReplayLog& log)
{
    nlohmann::json moves = nlohmann::json::array();
    for (const auto& m : log.moves) moves.push_back(to_json(m));
    return {{"seed", log.seed}, {"moves", moves}};
}

MoveDescriptor move_from_json(const nlohmann::json& j)
{
    try {
        const std::string kind = j.at("kind").get<std::string>();
        MoveDescriptor m;
        if (kind == "twist") {
            m.kind = MoveKind::twist;
            m.e1 = edge_from_json(j.at("e1"));
            m.e2 = edge_from_json(j.at("e2"));
        } else if (kind == "surgery") {
            m.kind = MoveKind::surgery;
            m.e1 = edge_from_json(j.at("edge"));
        } else if (kind == "addition") {
            m.kind = MoveKind::addition;
            m.face = j.at("face").get<int>();
            m.e1 = edge_from_json(j.at("ea"));
            m.e2 = edge_from_json(j.at("eb"));
        } else if (kind == "compose") {
            m.kind = MoveKind::compose;
            m.face = j.at("face1").get<int>();
            m.other_face = j.at("face2").get<int>();
            m.matching.direction = j.at("direction").get<int>();
            m.matching.offset = j.at("offset").get<int>();
            m.other = std::make_shared<const ReplayLog>(replay_log_from_json(j.at("other")));
        } else {
            throw Error(ErrorCode::BadInput, "unknown move kind '" + kind + "'");
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::BadInput, std::string("malformed move: ") + e.what());
    }
}

ReplayLog replay_log_from_json(const nlohmann::json& j)
{
    try {
        ReplayLog log;
        log.seed = j.at("seed").get<std::string>();
        for (const auto& m : j.at("moves")) log.moves.push_back(move_from_json(m));
        return log;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::BadInput, std::string("malformed replay log: ") + e.what());
    }
}

} // namespace rahp
