#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <json.hpp>

#include "rahp/polyhedron.hpp"
#include "rahp/volumes.hpp"

namespace rahp {

using Complex = std::complex<double>;

// a|z|^2 + conj(b) z + b conj(z) + c = 0; a = 0 is a straight line.
struct GeneralizedCircle {
    double a = 0.0;
    Complex b;
    double c = 0.0;

    static GeneralizedCircle circle(Complex center, double radius);
    static GeneralizedCircle line(Complex point, Complex direction);

    bool is_line() const { return a == 0.0; }
    Complex center() const;
    double radius() const;
    // A point on a line and its unit direction.
    Complex line_point() const;
    Complex line_direction() const;

    // Cosine of the intersection angle: 0 for orthogonal, +-1 for tangent.
    double inversive_product(const GeneralizedCircle& other) const;
    // Euclidean distance from z to the circle or line.
    double distance(Complex z) const;
};

// z -> (a z + b) / (c z + d).
struct Mobius {
    Complex a{1.0, 0.0};
    Complex b;
    Complex c;
    Complex d{1.0, 0.0};

    // Points at infinity are not representable; callers keep vertices finite.
    Complex operator()(Complex z) const;
    GeneralizedCircle operator()(const GeneralizedCircle& g) const;
    Mobius operator*(const Mobius& rhs) const;  // (this * rhs)(z) = this(rhs(z))
    Mobius inverse() const;
};

// One generalized circle per face of the polyhedron. Gauge: the outer face is
// the real axis, the face tangent to it at the outer face's first vertex is
// the unit circle centred at i, and that vertex sits at 0.
struct CirclePattern {
    std::vector<GeneralizedCircle> faces;
    int outer_face = 0;
    int iterations = 0;
    double residual = 0.0;  // max orthogonality and incidence error
    double tol = 0.0;
};

struct RealizedPolyhedron {
    std::vector<Complex> vertices;
    CirclePattern pattern;
    int apex = 0;
};

// Orthogonal circle pattern of an ideal right-angled polyhedron.
CirclePattern solve_pattern(const AbstractPolyhedron& P, double tol = 1e-10, int max_iterations = 200);

// Largest orthogonality or incidence error of pattern against P, with the
// vertex positions it implies.
double pattern_residual(const AbstractPolyhedron& P, const CirclePattern& pattern);

// Vertices at the tangency points of opposite faces; apex is vertex 0.
RealizedPolyhedron realize(const AbstractPolyhedron& P, const CirclePattern& pattern);

// Cones the fan triangulation of every face avoiding the apex to the apex and
// sums ideal tetrahedron volumes.
double volume_from_positions(const AbstractPolyhedron& P, const std::vector<Complex>& vertices, int apex,
                             double tol = 1e-10);

// apex < 0 selects vertex 0.
VolumeValue ideal_volume(const AbstractPolyhedron& P, double tol = 1e-10, int apex = -1);

// {"faces": [{"center": [re, im], "radius": r} | {"line": true, ...}], "vertices": [[re, im], ...]}
nlohmann::json pattern_to_json(const AbstractPolyhedron& P, const CirclePattern& pattern);

} // namespace rahp
