#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "rahp/numerics.hpp"
#include "rahp/polyhedron.hpp"

namespace rahp {

enum class VolumeMethod { closed_form, additive, realized };

std::string to_string(VolumeMethod method);

struct VolumeValue {
    double value = 0.0;
    VolumeMethod method = VolumeMethod::closed_form;
    int digits = 15;
    // Present when more than double precision was requested.
    std::optional<HighReal> high;
};

// 2n [Lambda(pi/4 + pi/2n) + Lambda(pi/4 - pi/2n)].
VolumeValue antiprism_volume(int n, PrecisionSpec prec = {});

// pi/2 - arccos(1 / (2 cos(pi/n))), in (0, pi/2) for n >= 5.
double lobell_theta(int n);

// (n/2) [2 Lambda(t) + Lambda(t + pi/n) + Lambda(t - pi/n) - Lambda(2t - pi/2)], t = lobell_theta(n).
VolumeValue lobell_volume(int n, PrecisionSpec prec = {});

// k copies of L(n) glued along isometric bases.
VolumeValue tower_volume(int n, int k, PrecisionSpec prec = {});

struct NormalizedVolume {
    double omega = 0.0;
    // vol / (ver - 3) for ideal, vol / (ver - 10) for compact; absent otherwise.
    std::optional<double> omega_tilde;
    int ver = 0;
    Kind kind = Kind::ideal;
};

// Vertices discounted by the modified count: 3 (ideal) or 10 (compact).
int modified_offset(Kind kind);

NormalizedVolume normalized(double volume, int ver, Kind kind);
NormalizedVolume normalized(const VolumeValue& volume, int ver, Kind kind);

// Lower and upper volume bounds in terms of the vertex count.
std::pair<double, double> atkinson_bounds(int ver, Kind kind);

double vd_from_omega(double omega);

// Keys a, b, c, d, e, f, g, h, k in increasing order of value.
std::map<char, double> landmark_constants();
std::map<char, HighReal> landmark_constants(PrecisionSpec prec);

} // namespace rahp
