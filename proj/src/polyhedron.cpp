#include "rahp/polyhedron.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "rahp/error.hpp"

namespace rahp {

std::string to_string(Kind kind)
{
    switch (kind) {
    case Kind::ideal: return "ideal";
    case Kind::compact: return "compact";
    case Kind::mixed: return "mixed";
    case Kind::non_right_angled: return "non-right-angled";
    }
    return "unknown";
}

Kind kind_from_string(const std::string& name)
{
    if (name == "ideal") return Kind::ideal;
    if (name == "compact") return Kind::compact;
    if (name == "mixed") return Kind::mixed;
    if (name == "non-right-angled") return Kind::non_right_angled;
    throw Error(ErrorCode::BadParameter, "unknown kind '" + name + "'");
}

namespace {

int index_in(const std::vector<int>& seq, int value)
{
    auto it = std::find(seq.begin(), seq.end(), value);
    return it == seq.end() ? -1 : static_cast<int>(it - seq.begin());
}

bool connected_without(const std::vector<std::vector<int>>& rot, int skip_a, int skip_b)
{
    const int n = static_cast<int>(rot.size());
    int start = -1;
    int alive = 0;
    for (int v = 0; v < n; ++v) {
        if (v == skip_a || v == skip_b) continue;
        ++alive;
        if (start < 0) start = v;
    }
    if (alive == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : rot[v]) {
            if (w == skip_a || w == skip_b || seen[w]) continue;
            seen[w] = 1;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == alive;
}

} // namespace

int AbstractPolyhedron::edge_id(int u, int v) const
{
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return -1;
    const Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::vector<int> AbstractPolyhedron::incident_edges(int v) const
{
    std::vector<int> out;
    out.reserve(rotation_[v].size());
    for (int w : rotation_[v]) out.push_back(edge_id(v, w));
    return out;
}

int AbstractPolyhedron::face_left(int u, int v) const
{
    const int i = index_in(rotation_[u], v);
    if (i < 0) throw Error(ErrorCode::BadOperands, "vertices are not adjacent");
    return left_[u][i];
}

std::pair<int, int> AbstractPolyhedron::edge_faces(int e) const
{
    const auto [u, v] = edges_[e];
    return {face_left(u, v), face_left(v, u)};
}

std::vector<int> AbstractPolyhedron::faces_at(int v) const { return left_[v]; }

std::vector<int> AbstractPolyhedron::face_neighbours(int f) const
{
    const auto& c = faces_[f];
    std::vector<int> out;
    out.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int a = c[i];
        const int b = c[(i + 1) % c.size()];
        out.push_back(face_left(b, a));
    }
    return out;
}

bool AbstractPolyhedron::faces_adjacent(int f, int g) const
{
    const auto nb = face_neighbours(f);
    return std::find(nb.begin(), nb.end(), g) != nb.end();
}

bool AbstractPolyhedron::faces_share_vertex(int f, int g) const
{
    for (int v : faces_[f])
        if (index_in(faces_[g], v) >= 0) return true;
    return false;
}

AbstractPolyhedron AbstractPolyhedron::with_tags(std::vector<FaceTag> tags) const
{
    if (!tags.empty() && tags.size() != faces_.size())
        throw Error(ErrorCode::BadInput, "tag count must match face count");
    AbstractPolyhedron out = *this;
    out.tags_ = tags.empty() ? std::vector<FaceTag>(faces_.size()) : std::move(tags);
    return out;
}

AbstractPolyhedron AbstractPolyhedron::without_tags() const { return with_tags({}); }

Kind AbstractPolyhedron::kind() const
{
    bool all3 = true;
    bool all4 = true;
    bool all34 = true;
    for (const auto& r : rotation_) {
        const auto d = r.size();
        all3 = all3 && d == 3;
        all4 = all4 && d == 4;
        all34 = all34 && (d == 3 || d == 4);
    }
    if (all4) return Kind::ideal;
    if (all3) return Kind::compact;
    if (all34) return Kind::mixed;
    return Kind::non_right_angled;
}

void AbstractPolyhedron::derive()
{
    const int n = vertex_count();
    edges_.clear();
    for (int v = 0; v < n; ++v)
        for (int w : rotation_[v])
            if (v < w) edges_.emplace_back(v, w);
    std::sort(edges_.begin(), edges_.end());
    left_.assign(n, {});
    for (int v = 0; v < n; ++v) left_[v].assign(rotation_[v].size(), -1);
}

AbstractPolyhedron AbstractPolyhedron::from_rotation(const std::vector<std::vector<int>>& rotation)
{
    const int n = static_cast<int>(rotation.size());
    if (n == 0) throw Error(ErrorCode::BadInput, "empty rotation system");
    for (int v = 0; v < n; ++v) {
        std::set<int> seen;
        for (int w : rotation[v]) {
            if (w < 0 || w >= n) throw Error(ErrorCode::BadInput, "neighbour index out of range");
            if (w == v) throw Error(ErrorCode::NotSimple, "loop at vertex " + std::to_string(v));
            if (!seen.insert(w).second)
                throw Error(ErrorCode::NotSimple, "parallel edges at vertex " + std::to_string(v));
            if (index_in(rotation[w], v) < 0)
                throw Error(ErrorCode::InconsistentEdgeUse, "adjacency is not symmetric");
        }
        if (rotation[v].empty())
            throw Error(ErrorCode::Disconnected, "isolated vertex " + std::to_string(v));
    }
    if (!connected_without(rotation, -1, -1))
        throw Error(ErrorCode::Disconnected, "graph is disconnected");

    AbstractPolyhedron P;
    P.rotation_ = rotation;
    P.derive();
    for (int u = 0; u < n; ++u) {
        for (std::size_t i = 0; i < rotation[u].size(); ++i) {
            if (P.left_[u][i] >= 0) continue;
            const int f = static_cast<int>(P.faces_.size());
            std::vector<int> cycle;
            int a = u;
            int ia = static_cast<int>(i);
            while (P.left_[a][ia] < 0) {
                P.left_[a][ia] = f;
                cycle.push_back(a);
                const int b = rotation[a][ia];
                const int d = static_cast<int>(rotation[b].size());
                const int back = index_in(rotation[b], a);
                ia = (back - 1 + d) % d;
                a = b;
            }
            P.faces_.push_back(std::move(cycle));
        }
    }
    for (const auto& [u, v] : P.edges_)
        if (P.face_left(u, v) == P.face_left(v, u))
            throw Error(ErrorCode::InconsistentEdgeUse, "edge lies twice on one face");
    const int euler = P.vertex_count() - P.edge_count() + P.face_count();
    if (euler != 2)
        throw Error(ErrorCode::NotASphere, "Euler characteristic is " + std::to_string(euler));
    P.tags_.assign(P.faces_.size(), FaceTag{});
    return P;
}

AbstractPolyhedron AbstractPolyhedron::from_faces(const std::vector<std::vector<int>>& faces,
                                                  std::vector<FaceTag> tags)
{
    if (faces.empty()) throw Error(ErrorCode::BadInput, "no faces given");
    if (!tags.empty() && tags.size() != faces.size())
        throw Error(ErrorCode::BadInput, "tag count must match face count");
    int n = 0;
    for (const auto& f : faces) {
        if (f.size() < 3) throw Error(ErrorCode::BadInput, "face with fewer than three vertices");
        for (int v : f) {
            if (v < 0) throw Error(ErrorCode::BadInput, "negative vertex index");
            n = std::max(n, v + 1);
        }
        std::set<int> distinct(f.begin(), f.end());
        if (distinct.size() != f.size())
            throw Error(ErrorCode::NotSimple, "face repeats a vertex");
    }
    {
        std::vector<char> used(n, 0);
        for (const auto& f : faces)
            for (int v : f) used[v] = 1;
        if (std::find(used.begin(), used.end(), 0) != used.end())
            throw Error(ErrorCode::BadInput, "vertex indices are not dense");
        std::set<std::vector<int>> sets;
        for (const auto& f : faces) {
            std::vector<int> s = f;
            std::sort(s.begin(), s.end());
            if (!sets.insert(s).second)
                throw Error(ErrorCode::InconsistentEdgeUse, "two faces share the same vertex cycle");
        }
    }

    // Uses of each undirected edge: (face, forward?) where forward means the
    // face traverses it from the smaller to the larger endpoint.
    std::map<Edge, std::vector<std::pair<int, bool>>> uses;
    const int nf = static_cast<int>(faces.size());
    for (int f = 0; f < nf; ++f) {
        const auto& c = faces[f];
        for (std::size_t i = 0; i < c.size(); ++i) {
            const int a = c[i];
            const int b = c[(i + 1) % c.size()];
            uses[{std::min(a, b), std::max(a, b)}].emplace_back(f, a < b);
        }
    }
    std::vector<std::vector<std::pair<int, int>>> face_graph(nf);  // (neighbour, same-direction)
    for (const auto& [e, list] : uses) {
        if (list.size() != 2 || list[0].first == list[1].first)
            throw Error(ErrorCode::InconsistentEdgeUse,
                        "edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                            "} is not on exactly two faces");
        const int same = list[0].second == list[1].second ? 1 : 0;
        face_graph[list[0].first].emplace_back(list[1].first, same);
        face_graph[list[1].first].emplace_back(list[0].first, same);
    }

    std::vector<int> flip(nf, -1);
    flip[0] = 0;
    std::queue<int> queue;
    queue.push(0);
    while (!queue.empty()) {
        const int f = queue.front();
        queue.pop();
        for (const auto& [g, same] : face_graph[f]) {
            const int want = flip[f] ^ same;
            if (flip[g] < 0) {
                flip[g] = want;
                queue.push(g);
            } else if (flip[g] != want) {
                throw Error(ErrorCode::NotASphere, "face orientations cannot be made coherent");
            }
        }
    }
    if (std::find(flip.begin(), flip.end(), -1) != flip.end())
        throw Error(ErrorCode::Disconnected, "face complex is disconnected");

    std::vector<std::vector<int>> oriented(faces);
    for (int f = 0; f < nf; ++f)
        if (flip[f]) std::reverse(oriented[f].begin(), oriented[f].end());

    // Corner prev -> v -> next forces next to precede prev in rotation(v).
    std::vector<std::map<int, int>> succ(n);
    for (const auto& c : oriented) {
        const std::size_t k = c.size();
        for (std::size_t i = 0; i < k; ++i) {
            const int prev = c[(i + k - 1) % k];
            const int v = c[i];
            const int next = c[(i + 1) % k];
            succ[v][next] = prev;
        }
    }
    std::vector<std::vector<int>> rotation(n);
    for (int v = 0; v < n; ++v) {
        const auto& s = succ[v];
        int w = s.begin()->first;
        const int first = w;
        do {
            rotation[v].push_back(w);
            auto it = s.find(w);
            if (it == s.end()) throw Error(ErrorCode::NotASphere, "vertex link is not a cycle");
            w = it->second;
        } while (w != first && rotation[v].size() <= s.size());
        if (rotation[v].size() != s.size() || w != first)
            throw Error(ErrorCode::NotASphere,
                        "vertex " + std::to_string(v) + " has a pinched neighbourhood");
    }
    if (!connected_without(rotation, -1, -1))
        throw Error(ErrorCode::Disconnected, "graph is disconnected");

    AbstractPolyhedron P;
    P.rotation_ = std::move(rotation);
    P.derive();
    P.faces_ = std::move(oriented);
    for (int f = 0; f < nf; ++f) {
        const auto& c = P.faces_[f];
        for (std::size_t i = 0; i < c.size(); ++i) {
            const int a = c[i];
            const int b = c[(i + 1) % c.size()];
            P.left_[a][index_in(P.rotation_[a], b)] = f;
        }
    }
    const int euler = P.vertex_count() - P.edge_count() + P.face_count();
    if (euler != 2)
        throw Error(ErrorCode::NotASphere, "Euler characteristic is " + std::to_string(euler));
    P.tags_ = tags.empty() ? std::vector<FaceTag>(nf) : std::move(tags);
    return P;
}

CountsProfile counts(const AbstractPolyhedron& P)
{
    CountsProfile c;
    c.V = P.vertex_count();
    c.E = P.edge_count();
    c.F = P.face_count();
    for (const auto& f : P.faces()) ++c.p[static_cast<int>(f.size())];
    return c;
}

bool is_steinitz(const AbstractPolyhedron& P)
{
    const int n = P.vertex_count();
    if (n < 4) return false;
    const auto& rot = P.rotations();
    if (!connected_without(rot, -1, -1)) return false;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!connected_without(rot, a, b)) return false;
    return true;
}

AbstractPolyhedron dual(const AbstractPolyhedron& P)
{
    std::vector<std::vector<int>> faces;
    faces.reserve(P.vertex_count());
    for (int v = 0; v < P.vertex_count(); ++v) faces.push_back(P.faces_at(v));
    return AbstractPolyhedron::from_faces(faces);
}

AbstractPolyhedron relabeled(const AbstractPolyhedron& P, const std::vector<int>& perm, bool mirror)
{
    const int n = P.vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw Error(ErrorCode::BadInput, "permutation size mismatch");
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        auto& r = rot[perm[v]];
        for (int w : P.rotation(v)) r.push_back(perm[w]);
        if (mirror) std::reverse(r.begin(), r.end());
    }
    AbstractPolyhedron Q = AbstractPolyhedron::from_rotation(rot);
    return Q.with_tags(mapped_tags(P, Q, perm, mirror));
}

std::vector<FaceTag> mapped_tags(const AbstractPolyhedron& P, const AbstractPolyhedron& Q,
                                 const std::vector<int>& perm, bool mirror)
{
    std::vector<FaceTag> tags(Q.face_count());
    for (int f = 0; f < P.face_count(); ++f) {
        const FaceTag& t = P.face_tag(f);
        if (t.empty()) continue;
        const int a = P.face(f)[0];
        const int b = P.face(f)[1];
        const int g = mirror ? Q.face_left(perm[b], perm[a]) : Q.face_left(perm[a], perm[b]);
        FaceTag mapped = t;
        if (t.has_anchor()) {
            mapped.anchor_u = perm[t.anchor_u];
            mapped.anchor_v = perm[t.anchor_v];
        }
        tags[g] = mapped;
    }
    return tags;
}

} // namespace rahp
