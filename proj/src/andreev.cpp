#include "rahp/andreev.hpp"

#include <algorithm>
#include <tuple>

#include "rahp/error.hpp"

namespace rahp {

namespace {

bool edges_disjoint(const AbstractPolyhedron& P, int e1, int e2)
{
    const auto [a, b] = P.edges()[e1];
    const auto [c, d] = P.edges()[e2];
    return a != c && a != d && b != c && b != d;
}

// For each face, (neighbour face, shared edge id) in boundary order.
std::vector<std::vector<std::pair<int, int>>> dual_adjacency(const AbstractPolyhedron& P)
{
    std::vector<std::vector<std::pair<int, int>>> adj(P.face_count());
    for (int e = 0; e < P.edge_count(); ++e) {
        const auto [f, g] = P.edge_faces(e);
        adj[f].emplace_back(g, e);
        adj[g].emplace_back(f, e);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

struct CircuitSearch {
    const AbstractPolyhedron& P;
    const std::vector<std::vector<std::pair<int, int>>>& adj;
    int k;
    int start = 0;
    std::vector<int> faces;
    std::vector<int> crossed;
    std::vector<char> on_path;
    std::vector<PrismaticCircuit> out;

    bool disjoint_from_path(int e) const
    {
        for (int c : crossed)
            if (!edges_disjoint(P, c, e)) return false;
        return true;
    }

    void extend()
    {
        const int last = faces.back();
        if (static_cast<int>(faces.size()) == k) {
            if (faces[1] > faces[k - 1]) return;
            for (const auto& [g, e] : adj[last]) {
                if (g != start || !disjoint_from_path(e)) continue;
                crossed.push_back(e);
                out.push_back(PrismaticCircuit{k, faces, crossed});
                crossed.pop_back();
            }
            return;
        }
        for (const auto& [g, e] : adj[last]) {
            if (g <= start || on_path[g] || !disjoint_from_path(e)) continue;
            on_path[g] = 1;
            faces.push_back(g);
            crossed.push_back(e);
            extend();
            crossed.pop_back();
            faces.pop_back();
            on_path[g] = 0;
        }
    }
};

} // namespace

std::vector<PrismaticCircuit> prismatic_circuits(const AbstractPolyhedron& P, int k)
{
    if (k < 3) throw Error(ErrorCode::BadParameter, "circuit length must be at least 3");
    const auto adj = dual_adjacency(P);
    CircuitSearch search{P, adj, k, 0, {}, {}, {}, {}};
    search.on_path.assign(P.face_count(), 0);
    for (int s = 0; s < P.face_count(); ++s) {
        search.start = s;
        search.faces = {s};
        search.on_path[s] = 1;
        search.extend();
        search.on_path[s] = 0;
    }
    std::sort(search.out.begin(), search.out.end(), [](const auto& x, const auto& y) {
        return std::tie(x.dual_cycle, x.crossed_edges) < std::tie(y.dual_cycle, y.crossed_edges);
    });
    return std::move(search.out);
}

ValidityReport andreev_check(const AbstractPolyhedron& P)
{
    ValidityReport r;
    r.kind = P.kind();
    auto note = [&r](ValidityWitness w) {
        if (!r.witness) r.witness = std::move(w);
    };

    r.steinitz_ok = is_steinitz(P);
    if (!r.steinitz_ok) note({{}, std::nullopt, std::nullopt, "1-skeleton is not 3-connected"});

    r.cond_faces_ge6 = P.face_count() >= 6;
    if (!r.cond_faces_ge6) note({{}, std::nullopt, std::nullopt, "fewer than six faces"});

    r.cond_valency = true;
    for (int v = 0; v < P.vertex_count(); ++v) {
        if (P.degree(v) != 3 && P.degree(v) != 4) {
            r.cond_valency = false;
            note({{}, std::nullopt, v, "vertex valency is not 3 or 4"});
            break;
        }
    }

    // Faces F_i, F_j, F_k where F_i meets F_j and F_j meets F_k in vertex-disjoint
    // edges must have F_i and F_k disjoint.
    r.cond_triples = true;
    for (int j = 0; j < P.face_count() && r.cond_triples; ++j) {
        const auto& c = P.face(j);
        const std::size_t n = c.size();
        const auto across = P.face_neighbours(j);
        for (std::size_t x = 0; x < n && r.cond_triples; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                if (x == y) continue;
                const int e1 = P.edge_id(c[x], c[(x + 1) % n]);
                const int e2 = P.edge_id(c[y], c[(y + 1) % n]);
                if (!edges_disjoint(P, e1, e2)) continue;
                const int i = across[x];
                const int k = across[y];
                if (i == k || P.faces_share_vertex(i, k)) {
                    r.cond_triples = false;
                    note({{i, j, k}, std::nullopt, std::nullopt, "face triple condition fails"});
                    break;
                }
            }
        }
    }

    const auto circuits = prismatic_circuits(P, 4);
    r.cond_no_prismatic4 = circuits.empty();
    if (!r.cond_no_prismatic4)
        note({circuits.front().dual_cycle, circuits.front(), std::nullopt, "prismatic 4-circuit"});
    return r;
}

} // namespace rahp
