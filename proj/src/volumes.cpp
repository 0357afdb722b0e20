#include "rahp/volumes.hpp"

#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "rahp/error.hpp"

namespace rahp {

namespace {

template <class Real>
Real pi_of()
{
    if constexpr (std::is_same_v<Real, double>)
        return boost::math::constants::pi<double>();
    else
        return pi_high();
}

template <class Real>
Real antiprism_formula(int n)
{
    const Real pi = pi_of<Real>();
    const Real a = pi / 4;
    const Real b = pi / (2 * n);
    return 2 * n * (lobachevsky(Real(a + b)) + lobachevsky(Real(a - b)));
}

template <class Real>
Real lobell_formula(int n)
{
    using std::acos;
    using std::cos;
    const Real pi = pi_of<Real>();
    const Real t = pi / 2 - acos(Real(1) / (2 * cos(pi / n)));
    if (!(t > 0 && t < pi / 2)) throw Error(ErrorCode::BadParameter, "angle outside (0, pi/2)");
    const Real s = pi / n;
    const Real sum = 2 * lobachevsky(t) + lobachevsky(Real(t + s)) + lobachevsky(Real(t - s)) -
                     lobachevsky(Real(2 * t - pi / 2));
    return Real(n) / 2 * sum;
}

template <class F>
VolumeValue evaluate(PrecisionSpec prec, VolumeMethod method, F&& formula)
{
    validate(prec);
    VolumeValue v;
    v.method = method;
    v.digits = prec.decimal_digits;
    if (prec.decimal_digits <= 15) {
        v.value = formula(double{});
    } else {
        v.high = formula(HighReal{});
        v.value = static_cast<double>(*v.high);
    }
    return v;
}

} // namespace

std::string to_string(VolumeMethod method)
{
    switch (method) {
    case VolumeMethod::closed_form: return "closed_form";
    case VolumeMethod::additive: return "additive";
    case VolumeMethod::realized: return "realized";
    }
    return "unknown";
}

VolumeValue antiprism_volume(int n, PrecisionSpec prec)
{
    if (n < 3) throw Error(ErrorCode::BadParameter, "antiprism needs n >= 3");
    return evaluate(prec, VolumeMethod::closed_form,
                    [n](auto tag) { return antiprism_formula<decltype(tag)>(n); });
}

double lobell_theta(int n)
{
    if (n < 5) throw Error(ErrorCode::BadParameter, "Lobell polyhedron needs n >= 5");
    const double pi = boost::math::constants::pi<double>();
    return pi / 2 - std::acos(1.0 / (2.0 * std::cos(pi / n)));
}

VolumeValue lobell_volume(int n, PrecisionSpec prec)
{
    if (n < 5) throw Error(ErrorCode::BadParameter, "Lobell polyhedron needs n >= 5");
    return evaluate(prec, VolumeMethod::closed_form,
                    [n](auto tag) { return lobell_formula<decltype(tag)>(n); });
}

VolumeValue tower_volume(int n, int k, PrecisionSpec prec)
{
    if (n < 5 || k < 1) throw Error(ErrorCode::BadParameter, "tower needs n >= 5 and k >= 1");
    return evaluate(prec, VolumeMethod::additive,
                    [n, k](auto tag) { return decltype(tag)(k * lobell_formula<decltype(tag)>(n)); });
}

int modified_offset(Kind kind)
{
    switch (kind) {
    case Kind::ideal: return 3;
    case Kind::compact: return 10;
    default: throw Error(ErrorCode::WrongKind, "normalized volumes need ideal or compact kind");
    }
}

NormalizedVolume normalized(double volume, int ver, Kind kind)
{
    if (ver <= 0) throw Error(ErrorCode::BadParameter, "vertex count must be positive");
    if (!(volume >= 0.0)) throw Error(ErrorCode::BadParameter, "volume must be non-negative");
    const int offset = modified_offset(kind);
    NormalizedVolume out;
    out.omega = volume / ver;
    if (ver > offset) out.omega_tilde = volume / (ver - offset);
    out.ver = ver;
    out.kind = kind;
    return out;
}

NormalizedVolume normalized(const VolumeValue& volume, int ver, Kind kind)
{
    return normalized(volume.value, ver, kind);
}

std::pair<double, double> atkinson_bounds(int ver, Kind kind)
{
    const double vo = v_oct();
    if (kind == Kind::ideal) {
        if (ver < 6) throw Error(ErrorCode::BadParameter, "ideal bounds need ver >= 6");
        return {vo * (ver - 2) / 4.0, vo * (ver - 4) / 2.0};
    }
    if (kind == Kind::compact) {
        if (ver < 20) throw Error(ErrorCode::BadParameter, "compact bounds need ver >= 20");
        return {vo * (ver - 8) / 32.0, 5.0 * v_tet() * (ver - 10) / 8.0};
    }
    throw Error(ErrorCode::WrongKind, "bounds need ideal or compact kind");
}

double vd_from_omega(double omega)
{
    if (!(omega >= 0.0)) throw Error(ErrorCode::BadParameter, "omega must be non-negative");
    return 6.0 * omega;
}

std::map<char, HighReal> landmark_constants(PrecisionSpec prec)
{
    const HighReal vo = v_oct(prec);
    const HighReal vt = v_tet(prec);
    return {{'a', 5 * vo / 192}, {'b', vo / 32}, {'c', 5 * vt / 16},
            {'d', vo / 6},       {'e', 5 * vt / 8}, {'f', vo / 4},
            {'g', vo / 3},       {'h', 5 * vt / 3}, {'k', vo / 2}};
}

std::map<char, double> landmark_constants()
{
    const double vo = v_oct();
    const double vt = v_tet();
    return {{'a', 5 * vo / 192}, {'b', vo / 32}, {'c', 5 * vt / 16},
            {'d', vo / 6},       {'e', 5 * vt / 8}, {'f', vo / 4},
            {'g', vo / 3},       {'h', 5 * vt / 3}, {'k', vo / 2}};
}

} // namespace rahp
