#pragma once

#include <complex>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace rahp {

// Working type for high-precision evaluation. All high-precision results are
// computed at the full width of this type; PrecisionSpec only bounds what may
// be requested.
using HighReal = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<130>,
                                               boost::multiprecision::et_off>;

// Largest digit count that may be requested, leaving room for 10 guard digits
// and cancellation in identity checks.
inline constexpr int kMaxDigits = 110;

struct Angle {
    double radians = 0.0;
};

struct PrecisionSpec {
    int decimal_digits = 15;
};

// Throws PrecisionUnattainable or BadParameter for out-of-range digit counts.
void validate(PrecisionSpec prec);

HighReal pi_high();

// Lobachevsky function, odd and pi-periodic. Arguments are reduced to
// (-pi/2, pi/2] before the power series is summed.
double lobachevsky(double theta);
double lobachevsky(Angle theta);
HighReal lobachevsky(const HighReal& theta);
HighReal lobachevsky(const HighReal& theta, PrecisionSpec prec);

// Independent double-precision evaluator from the Fourier expansion
// sum sin(2 n theta) / (2 n^2), with an asymptotic tail correction.
double lobachevsky_fourier(double theta);

// Ti_2(x) for x > 0 via the Lobachevsky function.
double inverse_tangent_integral(double x);

double v_oct();
double v_tet();
HighReal v_oct(PrecisionSpec prec);
HighReal v_tet(PrecisionSpec prec);

// Signed volume of the ideal tetrahedron with shape z: positive when Im z > 0.
double signed_tet_volume(std::complex<double> z);

struct TetVolume {
    double value = 0.0;
    bool degenerate = false;
};

// Unsigned volume; real shapes give 0 and are flagged. z = 0 and z = 1 are rejected.
TetVolume ideal_tet_volume(std::complex<double> z);

// Fixed-point decimal rendering with the given number of fractional digits.
std::string to_decimal(const HighReal& x, int digits);
std::string to_decimal(double x, int digits);

struct IdentityVerdict {
    HighReal lhs;
    HighReal rhs;
    int requested_digits = 0;
    int agree_digits = 0;
    bool agree = false;
};

// Both sides of the conjectured equality vol L(6) = vol A(4), written through
// theta_6 = pi/2 - arccos(1/sqrt 3) on the left and Lambda(3pi/8), Lambda(pi/8)
// on the right.
IdentityVerdict check_lobell_antiprism_identity(int digits);

// Cuboctahedron decomposition with phi = arctan(sqrt 2) against the same
// right-hand side.
IdentityVerdict check_cuboctahedron_identity(int digits);

} // namespace rahp
