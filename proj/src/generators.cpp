#include "rahp/generators.hpp"

#include <algorithm>
#include <set>

#include "rahp/canonical.hpp"
#include "rahp/error.hpp"

namespace rahp {

namespace {

int index_in(const std::vector<int>& seq, int value)
{
    auto it = std::find(seq.begin(), seq.end(), value);
    return it == seq.end() ? -1 : static_cast<int>(it - seq.begin());
}

int mod(int a, int k) { return ((a % k) + k) % k; }

// Path from `from` to `to` along the cycle, not using the direct edge between them.
std::vector<int> long_path(const std::vector<int>& cycle, int from, int to)
{
    const int n = static_cast<int>(cycle.size());
    const int i = index_in(cycle, from);
    const int j = index_in(cycle, to);
    if (i < 0 || j < 0) throw Error(ErrorCode::BadOperands, "vertex missing from face");
    const int step = cycle[mod(i + 1, n)] == to ? -1 : 1;
    std::vector<int> path;
    for (int p = i;; p = mod(p + step, n)) {
        path.push_back(cycle[p]);
        if (p == j) break;
    }
    return path;
}

int other_face(const AbstractPolyhedron& P, int a, int b, int f)
{
    const int e = P.edge_id(a, b);
    const auto [x, y] = P.edge_faces(e);
    return x == f ? y : x;
}

} // namespace

AbstractPolyhedron antiprism(int n)
{
    if (n < 3) throw Error(ErrorCode::BadParameter, "antiprism needs n >= 3");
    std::vector<std::vector<int>> faces;
    std::vector<int> top(n), bottom(n);
    for (int i = 0; i < n; ++i) {
        top[i] = i;
        bottom[n - 1 - i] = n + i;
    }
    faces.push_back(top);
    faces.push_back(bottom);
    for (int i = 0; i < n; ++i) {
        const int t0 = i, t1 = (i + 1) % n;
        const int b0 = n + i, b1 = n + (i + 1) % n;
        faces.push_back({t1, t0, b0});
        faces.push_back({b0, b1, t1});
    }
    return AbstractPolyhedron::from_faces(faces);
}

AbstractPolyhedron lobell(int n)
{
    if (n < 5) throw Error(ErrorCode::BadParameter, "Lobell polyhedron needs n >= 5");
    auto t = [n](int i) { return mod(i, n); };
    auto u = [n](int i) { return n + mod(i, n); };
    auto w = [n](int i) { return 2 * n + mod(i, n); };
    auto b = [n](int i) { return 3 * n + mod(i, n); };
    std::vector<std::vector<int>> faces;
    std::vector<FaceTag> tags;
    const std::string name = "L" + std::to_string(n);
    const bool regular = n == 5;
    std::vector<int> top, bottom;
    for (int i = 0; i < n; ++i) {
        top.push_back(t(i));
        bottom.push_back(b(n - 1 - i));
    }
    faces.push_back(top);
    faces.push_back(bottom);
    tags.push_back({regular ? name : name + ":base"});
    tags.push_back({regular ? name : name + ":base"});
    for (int i = 0; i < n; ++i) {
        faces.push_back({t(i + 1), t(i), u(i), w(i), u(i + 1)});
        tags.push_back(regular ? FaceTag{name} : FaceTag{name + ":lateral", t(i), t(i + 1)});
    }
    for (int i = 0; i < n; ++i) {
        faces.push_back({u(i), w(i - 1), b(i - 1), b(i), w(i)});
        tags.push_back(regular ? FaceTag{name} : FaceTag{name + ":lateral", b(i - 1), b(i)});
    }
    return AbstractPolyhedron::from_faces(faces, std::move(tags));
}

AbstractPolyhedron tower(int n, int k)
{
    if (n < 5 || k < 1) throw Error(ErrorCode::BadParameter, "tower needs n >= 5 and k >= 1");
    const AbstractPolyhedron block = lobell(n);
    AbstractPolyhedron T = block;
    int top = 0;
    for (int i = 1; i < k; ++i) {
        const int before = T.face_count();
        T = connect_sum(T, top, block, 1, Matching{});
        // The new copy's faces follow the old ones; its top base is its first face.
        top = before - 1;
    }
    return T;
}

AbstractPolyhedron connect_sum(const AbstractPolyhedron& P1, int F1, const AbstractPolyhedron& P2,
                               int F2, Matching matching)
{
    if (F1 < 0 || F1 >= P1.face_count() || F2 < 0 || F2 >= P2.face_count())
        throw Error(ErrorCode::BadOperands, "face index out of range");
    const auto& c1 = P1.face(F1);
    const auto& c2 = P2.face(F2);
    const int k = static_cast<int>(c1.size());
    if (static_cast<int>(c2.size()) != k)
        throw Error(ErrorCode::SizeMismatch, "glued faces have different sizes");
    if (matching.direction != 1 && matching.direction != -1)
        throw Error(ErrorCode::BadOperands, "matching direction must be +1 or -1");
    const Kind k1 = P1.kind();
    const Kind k2 = P2.kind();
    bool ideal = false;
    if (k1 == Kind::ideal && k2 == Kind::ideal) {
        if (k != 3)
            throw Error(ErrorCode::UnsupportedIdealGluing, "ideal summands glue along triangles only");
        ideal = true;
    } else if (k1 != Kind::compact || k2 != Kind::compact) {
        throw Error(ErrorCode::BadOperands, "summands must both be ideal or both compact");
    }
    const int offset = mod(matching.offset, k);
    auto partner = [&](int i) { return mod(offset + matching.direction * i, k); };

    // Glued id space: P1 keeps its ids, P2's free vertices follow, and P2's
    // boundary vertices take the ids of their partners on F1.
    const int v1 = P1.vertex_count();
    std::vector<int> map2(P2.vertex_count(), -1);
    for (int i = 0; i < k; ++i) map2[c2[partner(i)]] = c1[i];
    int next = v1;
    for (int w = 0; w < P2.vertex_count(); ++w)
        if (map2[w] < 0) map2[w] = next++;
    const int total = next;

    std::vector<int> replaced1(P1.face_count(), -1);
    std::vector<char> dropped2(P2.face_count(), 0);
    dropped2[F2] = 1;
    std::vector<std::vector<int>> merged(k);
    for (int i = 0; i < k; ++i) {
        const int a = c1[i];
        const int b = c1[(i + 1) % k];
        const int g1 = other_face(P1, a, b, F1);
        const int g2 = other_face(P2, c2[partner(i)], c2[partner(i + 1)], F2);
        if (replaced1[g1] >= 0 || dropped2[g2])
            throw Error(ErrorCode::BadOperands, "a face meets the glued face along two edges");
        replaced1[g1] = i;
        dropped2[g2] = 1;
        std::vector<int> g2m;
        for (int w : P2.face(g2)) g2m.push_back(map2[w]);
        std::vector<int> p1 = long_path(P1.face(g1), b, a);
        std::vector<int> p2 = long_path(g2m, a, b);
        std::vector<int>& m = merged[i];
        if (ideal) {
            m = p1;
            m.insert(m.end(), p2.begin() + 1, p2.end() - 1);
        } else {
            m.assign(p1.begin() + 1, p1.end() - 1);
            m.insert(m.end(), p2.begin() + 1, p2.end() - 1);
        }
    }

    std::vector<std::vector<int>> faces;
    std::vector<FaceTag> tags;
    for (int f = 0; f < P1.face_count(); ++f) {
        if (f == F1) continue;
        if (replaced1[f] >= 0) {
            faces.push_back(merged[replaced1[f]]);
            tags.emplace_back();
        } else {
            faces.push_back(P1.face(f));
            tags.push_back(P1.face_tag(f));
        }
    }
    for (int f = 0; f < P2.face_count(); ++f) {
        if (dropped2[f]) continue;
        std::vector<int> c;
        for (int w : P2.face(f)) c.push_back(map2[w]);
        faces.push_back(c);
        FaceTag t = P2.face_tag(f);
        if (t.has_anchor()) {
            t.anchor_u = map2[t.anchor_u];
            t.anchor_v = map2[t.anchor_v];
        }
        tags.push_back(t);
    }

    if (!ideal) {
        std::vector<int> renumber(total, -1);
        std::vector<char> gone(total, 0);
        for (int v : c1) gone[v] = 1;
        int id = 0;
        for (int v = 0; v < total; ++v)
            if (!gone[v]) renumber[v] = id++;
        for (auto& c : faces)
            for (int& v : c) {
                if (renumber[v] < 0) throw Error(ErrorCode::BadOperands, "dissolved vertex left on a face");
                v = renumber[v];
            }
        for (auto& t : tags)
            if (t.has_anchor()) {
                t.anchor_u = renumber[t.anchor_u];
                t.anchor_v = renumber[t.anchor_v];
            }
    }
    return AbstractPolyhedron::from_faces(faces, std::move(tags));
}

bool gluing_is_isometric(const AbstractPolyhedron& P1, int F1, const AbstractPolyhedron& P2, int F2,
                         Matching matching)
{
    const int k = P1.face_size(F1);
    if (k != P2.face_size(F2)) return false;
    if (P1.kind() == Kind::ideal && P2.kind() == Kind::ideal) return k == 3;
    const FaceTag& t1 = P1.face_tag(F1);
    const FaceTag& t2 = P2.face_tag(F2);
    if (t1.empty() || t1.cls != t2.cls) return false;
    if (!t1.has_anchor()) return true;
    const auto& c1 = P1.face(F1);
    const auto& c2 = P2.face(F2);
    const int i = index_in(c1, t1.anchor_u);
    const int j = index_in(c1, t1.anchor_v);
    if (i < 0 || j < 0) return false;
    const int pi = c2[mod(matching.offset + matching.direction * i, k)];
    const int pj = c2[mod(matching.offset + matching.direction * j, k)];
    return std::set<int>{pi, pj} == std::set<int>{t2.anchor_u, t2.anchor_v};
}

std::vector<ComposeResult> connect_sum_all(const AbstractPolyhedron& P1, int F1,
                                           const AbstractPolyhedron& P2, int F2)
{
    const int k = P1.face_size(F1);
    std::vector<ComposeResult> candidates;
    for (int direction : {1, -1})
        for (int offset = 0; offset < k; ++offset) {
            const Matching m{direction, offset};
            candidates.push_back({connect_sum(P1, F1, P2, F2, m), m, gluing_is_isometric(P1, F1, P2, F2, m)});
        }
    std::vector<ComposeResult> out;
    std::vector<CanonicalCode> codes;
    for (auto& c : candidates) {
        const CanonicalCode code = canonical_code(c.polyhedron);
        auto it = std::find(codes.begin(), codes.end(), code);
        if (it == codes.end()) {
            codes.push_back(code);
            out.push_back(std::move(c));
        } else if (c.isometric && !out[it - codes.begin()].isometric) {
            out[it - codes.begin()] = std::move(c);
        }
    }
    return out;
}

} // namespace rahp
