#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rahp {

enum class Kind { ideal, compact, mixed, non_right_angled };

std::string to_string(Kind kind);
Kind kind_from_string(const std::string& name);

// Provenance tag on a face. Faces of equal class are isometric once
// realized; when an anchor edge is present the isometry must also carry
// anchor to anchor.
struct FaceTag {
    std::string cls;
    int anchor_u = -1;
    int anchor_v = -1;

    bool empty() const { return cls.empty(); }
    bool has_anchor() const { return anchor_u >= 0; }
    bool operator==(const FaceTag&) const = default;
};

using Edge = std::pair<int, int>;  // u < v

// Combinatorial sphere given by a rotation system. rotation(v) lists the
// neighbours of v counter-clockwise; the face to the left of the directed
// edge u->v continues with v->w where w precedes u in rotation(v).
class AbstractPolyhedron {
public:
    AbstractPolyhedron() = default;

    // Faces are vertex cycles over dense indices 0..V-1; their orientations
    // are made coherent. Tags, if given, align with faces.
    static AbstractPolyhedron from_faces(const std::vector<std::vector<int>>& faces,
                                         std::vector<FaceTag> tags = {});

    // Rotation lists are neighbour vertices in cyclic order. Faces are traced
    // in order of their smallest directed edge.
    static AbstractPolyhedron from_rotation(const std::vector<std::vector<int>>& rotation);

    int vertex_count() const { return static_cast<int>(rotation_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const std::vector<int>& rotation(int v) const { return rotation_[v]; }
    const std::vector<std::vector<int>>& rotations() const { return rotation_; }
    int degree(int v) const { return static_cast<int>(rotation_[v].size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    // Index into edges(), or -1 when u and v are not adjacent.
    int edge_id(int u, int v) const;
    bool adjacent(int u, int v) const { return edge_id(u, v) >= 0; }
    // Incident edge identifiers of v in rotation order.
    std::vector<int> incident_edges(int v) const;

    const std::vector<std::vector<int>>& faces() const { return faces_; }
    const std::vector<int>& face(int f) const { return faces_[f]; }
    int face_size(int f) const { return static_cast<int>(faces_[f].size()); }
    // Face on the left of the directed edge u->v.
    int face_left(int u, int v) const;
    // The two faces on either side of an edge: (left of u->v, left of v->u) with u < v.
    std::pair<int, int> edge_faces(int e) const;
    // Faces around v in rotation order: face_left(v, rotation(v)[i]).
    std::vector<int> faces_at(int v) const;
    // Faces sharing an edge with f, one entry per shared edge, in boundary order.
    std::vector<int> face_neighbours(int f) const;
    bool faces_adjacent(int f, int g) const;
    bool faces_share_vertex(int f, int g) const;

    const std::vector<FaceTag>& face_tags() const { return tags_; }
    const FaceTag& face_tag(int f) const { return tags_[f]; }
    AbstractPolyhedron with_tags(std::vector<FaceTag> tags) const;
    AbstractPolyhedron without_tags() const;

    Kind kind() const;

private:
    void derive();

    std::vector<std::vector<int>> rotation_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> faces_;
    std::vector<FaceTag> tags_;
    // left_[v][i] is the face on the left of v -> rotation_[v][i].
    std::vector<std::vector<int>> left_;
};

struct CountsProfile {
    int V = 0;
    int E = 0;
    int F = 0;
    std::map<int, int> p;

    int p_k(int k) const
    {
        auto it = p.find(k);
        return it == p.end() ? 0 : it->second;
    }
};

CountsProfile counts(const AbstractPolyhedron& P);

// 3-connected 1-skeleton with at least four vertices.
bool is_steinitz(const AbstractPolyhedron& P);

AbstractPolyhedron dual(const AbstractPolyhedron& P);

// Relabels vertices by perm (old -> new); mirror reverses every rotation.
AbstractPolyhedron relabeled(const AbstractPolyhedron& P, const std::vector<int>& perm,
                             bool mirror = false);

// Tags of P carried to Q, where Q is P relabeled by perm (and mirrored if requested).
std::vector<FaceTag> mapped_tags(const AbstractPolyhedron& P, const AbstractPolyhedron& Q,
                                 const std::vector<int>& perm, bool mirror);

} // namespace rahp
