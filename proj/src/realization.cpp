#include "rahp/realization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

#include <Eigen/Dense>

#include "rahp/andreev.hpp"
#include "rahp/error.hpp"
#include "rahp/numerics.hpp"

namespace rahp {

namespace {

constexpr double kPi = std::numbers::pi;

// Point of the extended plane.
struct HPoint {
    Complex z;
    bool infinite = false;
};

HPoint apply(const Mobius& m, const HPoint& p)
{
    if (p.infinite) {
        if (std::abs(m.c) == 0.0) return {{}, true};
        return {m.a / m.c, false};
    }
    const Complex den = m.c * p.z + m.d;
    if (std::abs(den) == 0.0) return {{}, true};
    return {(m.a * p.z + m.b) / den, false};
}

// Kite closure error of every face: sum of centre angles minus 2 pi.
struct PatternSystem {
    const AbstractPolyhedron& P;
    std::vector<char> is_line;
    std::vector<int> unknown;  // face -> unknown index, -1 for lines and the reference face
    int reference = -1;
    int count = 0;
    std::vector<std::pair<int, int>> inner_edges;  // interior face pairs
    std::vector<int> line_edges;                   // interior face touching a line, once per edge

    explicit PatternSystem(const AbstractPolyhedron& poly, int infinite_vertex) : P(poly)
    {
        is_line.assign(P.face_count(), 0);
        for (int f : P.faces_at(infinite_vertex)) is_line[f] = 1;
        unknown.assign(P.face_count(), -1);
        for (int f = 0; f < P.face_count(); ++f) {
            if (is_line[f]) continue;
            if (reference < 0)
                reference = f;
            else
                unknown[f] = count++;
        }
        for (int e = 0; e < P.edge_count(); ++e) {
            const auto [f, g] = P.edge_faces(e);
            if (!is_line[f] && !is_line[g])
                inner_edges.emplace_back(f, g);
            else if (!is_line[f])
                line_edges.push_back(f);
            else if (!is_line[g])
                line_edges.push_back(g);
        }
    }

    // Convex potential whose gradient is minus the closure error.
    double potential(const std::vector<double>& rho) const
    {
        const double catalan = inverse_tangent_integral(1.0);
        double e = 0.0;
        for (auto [f, g] : inner_edges) {
            const double x = rho[g] - rho[f];
            e += kPi * rho[g] - 2.0 * (inverse_tangent_integral(std::exp(x)) - catalan);
        }
        for (int f : line_edges) e += kPi * rho[f];
        for (int f = 0; f < P.face_count(); ++f)
            if (!is_line[f]) e -= 2.0 * kPi * rho[f];
        return -e;
    }

    std::vector<double> closure(const std::vector<double>& rho) const
    {
        std::vector<double> F(P.face_count(), 0.0);
        for (int f = 0; f < P.face_count(); ++f)
            if (!is_line[f]) F[f] = -2.0 * kPi;
        for (auto [f, g] : inner_edges) {
            const double x = rho[g] - rho[f];
            const double t = 2.0 * std::atan(std::exp(x));
            F[f] += t;
            F[g] += kPi - t;
        }
        for (int f : line_edges) F[f] += kPi;
        return F;
    }

    Eigen::MatrixXd hessian(const std::vector<double>& rho) const
    {
        Eigen::MatrixXd H = Eigen::MatrixXd::Zero(count, count);
        for (auto [f, g] : inner_edges) {
            const double w = 1.0 / std::cosh(rho[g] - rho[f]);
            const int i = unknown[f];
            const int j = unknown[g];
            if (i >= 0) H(i, i) += w;
            if (j >= 0) H(j, j) += w;
            if (i >= 0 && j >= 0) {
                H(i, j) -= w;
                H(j, i) -= w;
            }
        }
        return H;
    }
};

double max_abs(const std::vector<double>& v)
{
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// Damped Newton on log radii; falls back to gradient steps if the Newton
// direction fails to descend.
std::vector<double> solve_radii(const PatternSystem& S, int max_iterations, int& iterations)
{
    std::vector<double> rho(S.P.face_count(), 0.0);
    auto F = S.closure(rho);
    double phi = S.potential(rho);
    for (iterations = 0; iterations < max_iterations; ++iterations) {
        if (max_abs(F) < 1e-14) return rho;
        Eigen::VectorXd g(S.count);  // gradient of the potential
        for (int f = 0; f < S.P.face_count(); ++f)
            if (S.unknown[f] >= 0) g(S.unknown[f]) = -F[f];
        Eigen::VectorXd step = S.hessian(rho).ldlt().solve(-g);
        if (!step.allFinite() || step.dot(g) >= 0.0) step = -g;
        const double slope = step.dot(g);
        double t = 1.0;
        std::vector<double> trial = rho;
        bool accepted = false;
        for (int k = 0; k < 60; ++k, t *= 0.5) {
            for (int f = 0; f < S.P.face_count(); ++f)
                if (S.unknown[f] >= 0) trial[f] = rho[f] + t * step(S.unknown[f]);
            const double phi_t = S.potential(trial);
            const auto F_t = S.closure(trial);
            if (phi_t <= phi + 1e-4 * t * slope || max_abs(F_t) < max_abs(F)) {
                rho = trial;
                phi = phi_t;
                F = F_t;
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
    }
    if (max_abs(F) < 1e-11) return rho;
    throw Error(ErrorCode::NoConvergence, "circle pattern solver stalled after " + std::to_string(iterations) +
                                              " iterations (closure error " + std::to_string(max_abs(F)) + ")");
}

struct Layout {
    std::vector<HPoint> vertices;
    std::vector<GeneralizedCircle> faces;
};

// Places circles by kites, the infinite vertex at infinity and its faces as lines.
Layout lay_out(const PatternSystem& S, const std::vector<double>& rho, int infinite_vertex)
{
    const auto& P = S.P;
    const int F = P.face_count();
    std::vector<double> r(F, 0.0);
    for (int f = 0; f < F; ++f)
        if (!S.is_line[f]) r[f] = std::exp(rho[f]);
    auto centre_angle = [&](int f, int g) { return S.is_line[g] ? kPi : 2.0 * std::atan(r[g] / r[f]); };

    Layout out;
    out.vertices.assign(P.vertex_count(), HPoint{{}, false});
    std::vector<char> placed_vertex(P.vertex_count(), 0);
    out.vertices[infinite_vertex].infinite = true;
    placed_vertex[infinite_vertex] = 1;
    out.faces.assign(F, {});

    std::vector<Complex> centre(F);
    std::vector<double> start(F, 0.0);  // angle of the face's first vertex
    std::vector<char> placed(F, 0);
    std::queue<int> queue;
    placed[S.reference] = 1;
    queue.push(S.reference);
    while (!queue.empty()) {
        const int f = queue.front();
        queue.pop();
        const auto& cyc = P.face(f);
        const int m = static_cast<int>(cyc.size());
        double alpha = start[f];
        for (int i = 0; i < m; ++i) {
            const int u = cyc[i];
            const int w = cyc[(i + 1) % m];
            if (!placed_vertex[u]) {
                out.vertices[u] = {centre[f] + r[f] * std::polar(1.0, alpha), false};
                placed_vertex[u] = 1;
            }
            const int g = P.face_left(w, u);
            const double beta = centre_angle(f, g);
            if (!S.is_line[g] && !placed[g]) {
                centre[g] = centre[f] + std::sqrt(r[f] * r[f] + r[g] * r[g]) * std::polar(1.0, alpha + beta / 2.0);
                const Complex wpos = centre[f] + r[f] * std::polar(1.0, alpha + beta);
                const auto& gc = P.face(g);
                const int k = static_cast<int>(std::find(gc.begin(), gc.end(), w) - gc.begin());
                double before = 0.0;
                for (int j = 0; j < k; ++j)
                    before += centre_angle(g, P.face_left(gc[(j + 1) % gc.size()], gc[j]));
                start[g] = std::arg(wpos - centre[g]) - before;
                placed[g] = 1;
                queue.push(g);
            }
            alpha += beta;
        }
    }
    for (int f = 0; f < F; ++f) {
        if (S.is_line[f]) continue;
        if (!placed[f]) throw Error(ErrorCode::InconsistentPattern, "pattern layout did not reach every face");
        out.faces[f] = GeneralizedCircle::circle(centre[f], r[f]);
    }
    for (int v = 0; v < P.vertex_count(); ++v)
        if (!placed_vertex[v]) throw Error(ErrorCode::InconsistentPattern, "pattern layout missed a vertex");
    for (int f = 0; f < F; ++f) {
        if (!S.is_line[f]) continue;
        std::vector<Complex> pts;
        for (int v : P.face(f))
            if (!out.vertices[v].infinite) pts.push_back(out.vertices[v].z);
        if (pts.size() < 2) throw Error(ErrorCode::InconsistentPattern, "line face with too few vertices");
        out.faces[f] = GeneralizedCircle::line(pts.front(), pts.back() - pts.front());
    }
    return out;
}

std::optional<Complex> tangency(const GeneralizedCircle& g1, const GeneralizedCircle& g2)
{
    if (g1.is_line() && g2.is_line()) return std::nullopt;
    if (g1.is_line()) return tangency(g2, g1);
    const Complex c1 = g1.center();
    if (g2.is_line()) {
        const Complex p = g2.line_point();
        const Complex d = g2.line_direction();
        return p + d * std::real(std::conj(d) * (c1 - p));
    }
    const Complex delta = g2.center() - c1;
    if (std::abs(delta) == 0.0) throw Error(ErrorCode::InconsistentPattern, "concentric tangent faces");
    const Complex u = delta / std::abs(delta);
    const Complex p = c1 + g1.radius() * u;
    const Complex q = c1 - g1.radius() * u;
    return g2.distance(p) <= g2.distance(q) ? p : q;
}

struct Placement {
    std::vector<std::optional<Complex>> vertices;
    double incidence = 0.0;
};

// Vertices at tangency points of opposite faces, with the incidence error.
Placement place_vertices(const AbstractPolyhedron& P, const std::vector<GeneralizedCircle>& faces)
{
    Placement out;
    out.vertices.assign(P.vertex_count(), std::nullopt);
    for (int v = 0; v < P.vertex_count(); ++v) {
        const auto around = P.faces_at(v);
        if (around.size() != 4) throw Error(ErrorCode::NotIdealKind, "ideal vertices are 4-valent");
        const auto p = tangency(faces[around[0]], faces[around[2]]);
        const auto q = tangency(faces[around[1]], faces[around[3]]);
        if (!p || !q) continue;
        const Complex z = (*p + *q) / 2.0;
        out.vertices[v] = z;
        const double scale = 1.0 + std::abs(z);
        double err = std::abs(*p - *q) / scale;
        for (int f : around) err = std::max(err, faces[f].distance(z) / scale);
        out.incidence = std::max(out.incidence, err);
    }
    return out;
}

double orthogonality_error(const AbstractPolyhedron& P, const std::vector<GeneralizedCircle>& faces)
{
    double err = 0.0;
    for (int e = 0; e < P.edge_count(); ++e) {
        const auto [f, g] = P.edge_faces(e);
        err = std::max(err, std::abs(faces[f].inversive_product(faces[g])));
    }
    return err;
}

// Moves the pattern into the reporting gauge, trying vertices of the outer
// face until every vertex is finite.
std::vector<GeneralizedCircle> normalize_gauge(const AbstractPolyhedron& P, const Layout& L, int outer)
{
    for (int v : P.face(outer)) {
        const auto around = P.faces_at(v);
        const int j = static_cast<int>(std::find(around.begin(), around.end(), outer) - around.begin());
        const int tangent = around[(j + 2) % 4];
        const int side = around[(j + 1) % 4];

        Mobius S;  // v -> infinity
        if (!L.vertices[v].infinite) S = Mobius{{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, -L.vertices[v].z};
        auto image = [&](int face, int skip) {
            std::vector<Complex> pts;
            for (int x : P.face(face)) {
                if (x == skip) continue;
                const HPoint h = apply(S, L.vertices[x]);
                if (!h.infinite) pts.push_back(h.z);
            }
            return pts;
        };
        const auto o = image(outer, v);
        const auto t = image(tangent, v);
        const auto a = image(side, v);
        if (o.size() < 2 || t.empty() || a.empty()) continue;
        const Complex d = (o.back() - o.front()) / std::abs(o.back() - o.front());
        const Complex offset = t.front() - o.front();
        const Complex perp = offset - d * std::real(std::conj(d) * offset);
        if (std::abs(perp) == 0.0) continue;
        const Complex nu = perp / std::abs(perp);
        const Complex k = Complex(0.0, -1.0) * std::conj(nu) / (2.0 * std::abs(perp));
        const double shift = -0.5 - std::real(k * (a.front() - o.front()));
        const Mobius affine{k, shift - k * o.front(), {0.0, 0.0}, {1.0, 0.0}};
        const Mobius flip{{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}};
        const Mobius M = flip * affine * S;

        std::vector<GeneralizedCircle> faces;
        for (const auto& g : L.faces) faces.push_back(M(g));
        faces[outer].a = 0.0;
        if (std::abs(faces[outer].b) > 0.0) {
            // The outer face is the real axis exactly.
            faces[outer] = GeneralizedCircle::line({0.0, 0.0}, {1.0, 0.0});
        }
        const auto placement = place_vertices(P, faces);
        if (std::all_of(placement.vertices.begin(), placement.vertices.end(),
                        [](const auto& z) { return z.has_value(); }))
            return faces;
    }
    throw Error(ErrorCode::InconsistentPattern, "no gauge keeps every vertex finite");
}

} // namespace

GeneralizedCircle GeneralizedCircle::circle(Complex center, double radius)
{
    return {1.0, -center, std::norm(center) - radius * radius};
}

GeneralizedCircle GeneralizedCircle::line(Complex point, Complex direction)
{
    const Complex n = Complex(0.0, 1.0) * direction / std::abs(direction);
    return {0.0, n, -2.0 * std::real(std::conj(n) * point)};
}

Complex GeneralizedCircle::center() const { return -b / a; }

double GeneralizedCircle::radius() const { return std::sqrt(std::max(0.0, std::norm(b) / (a * a) - c / a)); }

Complex GeneralizedCircle::line_point() const { return -c * b / (2.0 * std::norm(b)); }

Complex GeneralizedCircle::line_direction() const { return Complex(0.0, -1.0) * b / std::abs(b); }

double GeneralizedCircle::inversive_product(const GeneralizedCircle& o) const
{
    const double d1 = std::norm(b) - a * c;
    const double d2 = std::norm(o.b) - o.a * o.c;
    if (d1 <= 0.0 || d2 <= 0.0) throw Error(ErrorCode::InconsistentPattern, "degenerate circle");
    return (a * o.c + o.a * c - 2.0 * std::real(b * std::conj(o.b))) / (2.0 * std::sqrt(d1 * d2));
}

double GeneralizedCircle::distance(Complex z) const
{
    if (is_line()) return std::abs(2.0 * std::real(std::conj(b) * z) + c) / (2.0 * std::abs(b));
    return std::abs(std::abs(z - center()) - radius());
}

Complex Mobius::operator()(Complex z) const { return (a * z + b) / (c * z + d); }

GeneralizedCircle Mobius::operator()(const GeneralizedCircle& g) const
{
    // H' = N^* H N with N the inverse matrix.
    const Mobius n = inverse();
    const Complex h00 = g.a;
    const Complex h01 = g.b;
    const Complex h10 = std::conj(g.b);
    const Complex h11 = g.c;
    const Complex t00 = h00 * n.a + h01 * n.c;
    const Complex t01 = h00 * n.b + h01 * n.d;
    const Complex t10 = h10 * n.a + h11 * n.c;
    const Complex t11 = h10 * n.b + h11 * n.d;
    GeneralizedCircle out;
    out.a = std::real(std::conj(n.a) * t00 + std::conj(n.c) * t10);
    out.b = std::conj(n.a) * t01 + std::conj(n.c) * t11;
    out.c = std::real(std::conj(n.b) * t01 + std::conj(n.d) * t11);
    const double scale = std::max({std::abs(out.a), std::abs(out.b), std::abs(out.c)});
    const double sign = out.a < 0.0 ? -1.0 : 1.0;
    out.a *= sign / scale;
    out.b *= sign / scale;
    out.c *= sign / scale;
    return out;
}

Mobius Mobius::operator*(const Mobius& r) const
{
    return {a * r.a + b * r.c, a * r.b + b * r.d, c * r.a + d * r.c, c * r.b + d * r.d};
}

Mobius Mobius::inverse() const
{
    const Complex det = a * d - b * c;
    if (std::abs(det) == 0.0) throw Error(ErrorCode::BadInput, "singular Mobius transformation");
    return {d / det, -b / det, -c / det, a / det};
}

CirclePattern solve_pattern(const AbstractPolyhedron& P, double tol, int max_iterations)
{
    if (!(tol > 0.0)) throw Error(ErrorCode::BadParameter, "tolerance must be positive");
    const auto report = andreev_check(P);
    if (report.kind != Kind::ideal) throw Error(ErrorCode::NotIdealKind, "circle patterns need an ideal polyhedron");
    if (!report.valid()) throw Error(ErrorCode::BadInput, "polyhedron is not right-angled realizable");
    const int infinite_vertex = 0;
    const PatternSystem S(P, infinite_vertex);
    CirclePattern pattern;
    const auto rho = solve_radii(S, max_iterations, pattern.iterations);
    const Layout layout = lay_out(S, rho, infinite_vertex);
    pattern.outer_face = 0;
    pattern.faces = normalize_gauge(P, layout, pattern.outer_face);
    pattern.tol = tol;
    pattern.residual = pattern_residual(P, pattern);
    if (!(pattern.residual < tol))
        throw Error(ErrorCode::NoConvergence, "pattern residual " + std::to_string(pattern.residual) +
                                                  " above tolerance after " +
                                                  std::to_string(pattern.iterations) + " iterations");
    return pattern;
}

double pattern_residual(const AbstractPolyhedron& P, const CirclePattern& pattern)
{
    if (static_cast<int>(pattern.faces.size()) != P.face_count())
        throw Error(ErrorCode::InconsistentPattern, "pattern does not match the polyhedron");
    const auto placement = place_vertices(P, pattern.faces);
    return std::max(orthogonality_error(P, pattern.faces), placement.incidence);
}

RealizedPolyhedron realize(const AbstractPolyhedron& P, const CirclePattern& pattern)
{
    const double residual = pattern_residual(P, pattern);
    if (!(residual < pattern.tol))
        throw Error(ErrorCode::InconsistentPattern, "pattern residual " + std::to_string(residual) +
                                                        " exceeds tolerance");
    const auto placement = place_vertices(P, pattern.faces);
    RealizedPolyhedron out;
    for (const auto& z : placement.vertices) {
        if (!z) throw Error(ErrorCode::InconsistentPattern, "vertex at infinity");
        out.vertices.push_back(*z);
    }
    for (std::size_t i = 0; i < out.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < out.vertices.size(); ++j)
            if (std::abs(out.vertices[i] - out.vertices[j]) < 1e3 * pattern.tol)
                throw Error(ErrorCode::InconsistentPattern, "vertices coincide");
    out.pattern = pattern;
    out.apex = 0;
    return out;
}

double volume_from_positions(const AbstractPolyhedron& P, const std::vector<Complex>& vertices, int apex,
                             double tol)
{
    if (apex < 0 || apex >= P.vertex_count()) throw Error(ErrorCode::BadParameter, "apex out of range");
    if (static_cast<int>(vertices.size()) != P.vertex_count())
        throw Error(ErrorCode::BadInput, "one position per vertex required");
    const Mobius to_infinity{{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, -vertices[apex]};
    std::vector<Complex> w(vertices.size());
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (static_cast<int>(v) != apex) w[v] = to_infinity(vertices[v]);
    std::vector<double> parts;
    for (int f = 0; f < P.face_count(); ++f) {
        const auto& cyc = P.face(f);
        if (std::find(cyc.begin(), cyc.end(), apex) != cyc.end()) continue;
        const int m = static_cast<int>(cyc.size());
        const int s = static_cast<int>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
        const Complex a = w[cyc[s]];
        for (int i = 1; i + 1 < m; ++i) {
            const Complex b = w[cyc[(s + i) % m]];
            const Complex c = w[cyc[(s + i + 1) % m]];
            parts.push_back(signed_tet_volume((c - a) / (b - a)));
        }
    }
    double total = 0.0;
    for (double x : parts) total += x;
    const double sign = total < 0.0 ? -1.0 : 1.0;
    for (double x : parts)
        if (sign * x < -10.0 * tol)
            throw Error(ErrorCode::InconsistentPattern, "negatively oriented tetrahedron in the apex fan");
    return sign * total;
}

VolumeValue ideal_volume(const AbstractPolyhedron& P, double tol, int apex)
{
    const auto pattern = solve_pattern(P, tol);
    const auto R = realize(P, pattern);
    VolumeValue v;
    v.value = volume_from_positions(P, R.vertices, apex < 0 ? R.apex : apex, tol);
    v.method = VolumeMethod::realized;
    v.digits = std::clamp(static_cast<int>(std::floor(-std::log10(tol))), 1, 15);
    return v;
}

nlohmann::json pattern_to_json(const AbstractPolyhedron& P, const CirclePattern& pattern)
{
    nlohmann::json faces = nlohmann::json::array();
    for (const auto& g : pattern.faces) {
        if (g.is_line()) {
            const Complex p = g.line_point();
            const Complex d = g.line_direction();
            faces.push_back({{"line", true},
                             {"point", {to_decimal(p.real(), 15), to_decimal(p.imag(), 15)}},
                             {"direction", {to_decimal(d.real(), 15), to_decimal(d.imag(), 15)}}});
        } else {
            const Complex c = g.center();
            faces.push_back({{"center", {to_decimal(c.real(), 15), to_decimal(c.imag(), 15)}},
                             {"radius", to_decimal(g.radius(), 15)}});
        }
    }
    nlohmann::json vertices = nlohmann::json::array();
    for (const auto& z : realize(P, pattern).vertices)
        vertices.push_back({to_decimal(z.real(), 15), to_decimal(z.imag(), 15)});
    return {{"faces", faces},
            {"vertices", vertices},
            {"iterations", pattern.iterations},
            {"residual", to_decimal(pattern.residual, 18)}};
}

} // namespace rahp
