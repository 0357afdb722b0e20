#include "rahp/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "rahp/error.hpp"

namespace rahp {

namespace {

// a_n = zeta(2n) / pi^(2n) = |B_2n| 2^(2n-1) / (2n)!, generated by the
// Bernoulli convolution recurrence (n + 1/2) a_n = sum_{k=1}^{n-1} a_k a_{n-k}.
// All terms are positive, so the recurrence is numerically stable.
template <class Real>
std::vector<Real> zeta_ratio_table(int count)
{
    std::vector<Real> a(static_cast<std::size_t>(count) + 1, Real(0));
    a[1] = Real(1) / Real(6);
    for (int n = 2; n <= count; ++n) {
        Real s = 0;
        for (int k = 1; k < n; ++k) s += a[k] * a[n - k];
        a[n] = s / (Real(n) + Real(0.5));
    }
    return a;
}

template <class Real>
const std::vector<Real>& coefficient_cache();

template <>
const std::vector<double>& coefficient_cache<double>()
{
    static const std::vector<double> table = zeta_ratio_table<double>(64);
    return table;
}

template <>
const std::vector<HighReal>& coefficient_cache<HighReal>()
{
    static const std::vector<HighReal> table = zeta_ratio_table<HighReal>(260);
    return table;
}

template <class Real>
Real lobachevsky_reduced(const Real& theta)
{
    using std::abs;
    using std::log;
    using boost::multiprecision::abs;
    using boost::multiprecision::log;
    if (theta == 0) return Real(0);
    const auto& a = coefficient_cache<Real>();
    const Real eps = std::numeric_limits<Real>::epsilon();
    const Real t2 = theta * theta;
    Real sum = theta - theta * log(abs(Real(2) * theta));
    Real power = theta;
    for (std::size_t n = 1; n < a.size(); ++n) {
        power *= t2;
        const Real term = a[n] * power / Real((n) * (2 * n + 1));
        sum += term;
        if (abs(term) <= eps * (abs(sum) + abs(theta)) * Real(1e-2)) break;
    }
    return sum;
}

HighReal reduce(const HighReal& theta)
{
    const HighReal pi = pi_high();
    HighReal r = theta - pi * boost::multiprecision::round(theta / pi);
    if (r <= -pi / 2) r += pi;
    if (r > pi / 2) r -= pi;
    return r;
}

double reduce(double theta)
{
    double r = std::remainder(theta, std::numbers::pi);
    if (r <= -std::numbers::pi / 2) r += std::numbers::pi;
    return r;
}

// Stirling numbers of the second kind S(n, k) for n, k <= size.
std::vector<std::vector<double>> stirling2(int size)
{
    std::vector<std::vector<double>> s(size + 1, std::vector<double>(size + 1, 0.0));
    s[0][0] = 1.0;
    for (int n = 1; n <= size; ++n)
        for (int k = 1; k <= n; ++k) s[n][k] = k * s[n - 1][k] + s[n - 1][k - 1];
    return s;
}

} // namespace

void validate(PrecisionSpec prec)
{
    if (prec.decimal_digits < 1)
        throw Error(ErrorCode::BadParameter, "digit count must be positive");
    if (prec.decimal_digits > kMaxDigits)
        throw Error(ErrorCode::PrecisionUnattainable,
                    "at most " + std::to_string(kMaxDigits) + " digits are supported");
}

HighReal pi_high()
{
    static const HighReal pi = boost::math::constants::pi<HighReal>();
    return pi;
}

double lobachevsky(double theta)
{
    if (!std::isfinite(theta)) throw Error(ErrorCode::BadParameter, "angle must be finite");
    return lobachevsky_reduced(reduce(theta));
}

double lobachevsky(Angle theta) { return lobachevsky(theta.radians); }

HighReal lobachevsky(const HighReal& theta)
{
    if (!boost::multiprecision::isfinite(theta))
        throw Error(ErrorCode::BadParameter, "angle must be finite");
    return lobachevsky_reduced(reduce(theta));
}

HighReal lobachevsky(const HighReal& theta, PrecisionSpec prec)
{
    validate(prec);
    return lobachevsky(theta);
}

double lobachevsky_fourier(double theta)
{
    if (!std::isfinite(theta)) throw Error(ErrorCode::BadParameter, "angle must be finite");
    double r = std::fmod(theta, std::numbers::pi);
    if (r < 0) r += std::numbers::pi;
    const double s = std::abs(2.0 * std::sin(r));
    if (s < 1e-300) return 0.0;

    // Direct partial sum of z^n / n^2 with z = exp(2 i theta).
    const long m = std::clamp(static_cast<long>(std::ceil(60.0 / s)), 2000L, 4000000L);
    std::complex<double> head = 0.0;
    for (long n = m - 1; n >= 1; --n) {
        const double nn = static_cast<double>(n);
        head += std::polar(1.0 / (nn * nn), 2.0 * nn * r);
    }

    // Tail sum_{n >= m} z^n / n^2 = z^m sum_k c_k Li_{-k}-type sums, with
    // 1/(m+j)^2 expanded in j and sum_j j^k z^j written through w = z/(1-z).
    const std::complex<double> z = std::polar(1.0, 2.0 * r);
    const std::complex<double> w = z / (1.0 - z);
    constexpr int kTerms = 10;
    static const auto s2 = stirling2(kTerms + 2);
    std::complex<double> tail = 0.0;
    const double md = static_cast<double>(m);
    double factorial_j = 1.0;
    std::vector<std::complex<double>> wpow(kTerms + 2, 1.0);
    for (int j = 1; j <= kTerms + 1; ++j) wpow[j] = wpow[j - 1] * w;
    for (int k = 0; k <= kTerms; ++k) {
        // sum_{j>=0} j^k z^j: k = 0 gives 1/(1-z); otherwise the Eulerian form.
        std::complex<double> moment;
        if (k == 0) {
            moment = 1.0 / (1.0 - z);
        } else {
            moment = 0.0;
            factorial_j = 1.0;
            for (int j = 0; j <= k; ++j) {
                if (j > 0) factorial_j *= j;
                moment += factorial_j * s2[k + 1][j + 1] * wpow[j + 1];
            }
        }
        const double coeff = ((k % 2 == 0) ? 1.0 : -1.0) * (k + 1) / std::pow(md, k + 2);
        tail += coeff * moment;
    }
    tail *= std::polar(1.0, 2.0 * md * r);
    return 0.5 * (head + tail).imag();
}

double inverse_tangent_integral(double x)
{
    if (!(x > 0)) throw Error(ErrorCode::BadParameter, "argument must be positive");
    const double theta = std::atan(x);
    return theta * std::log(x) + lobachevsky(theta) + lobachevsky(std::numbers::pi / 2 - theta);
}

double v_oct()
{
    static const double value = static_cast<double>(v_oct(PrecisionSpec{}));
    return value;
}

double v_tet()
{
    static const double value = static_cast<double>(v_tet(PrecisionSpec{}));
    return value;
}

HighReal v_oct(PrecisionSpec prec)
{
    validate(prec);
    static const HighReal value = 8 * lobachevsky(pi_high() / 4);
    return value;
}

HighReal v_tet(PrecisionSpec prec)
{
    validate(prec);
    static const HighReal value = 3 * lobachevsky(pi_high() / 3);
    return value;
}

double signed_tet_volume(std::complex<double> z)
{
    if (z == std::complex<double>(0.0, 0.0) || z == std::complex<double>(1.0, 0.0))
        throw Error(ErrorCode::DegenerateShape, "shape parameter must avoid 0 and 1");
    if (z.imag() == 0.0) return 0.0;
    return lobachevsky(std::arg(z)) + lobachevsky(std::arg(1.0 / (1.0 - z))) +
           lobachevsky(std::arg(1.0 - 1.0 / z));
}

TetVolume ideal_tet_volume(std::complex<double> z)
{
    const double v = signed_tet_volume(z);
    return TetVolume{std::abs(v), z.imag() == 0.0};
}

std::string to_decimal(const HighReal& x, int digits)
{
    return x.str(digits, std::ios_base::fixed);
}

std::string to_decimal(double x, int digits)
{
    std::ostringstream out;
    out.precision(digits);
    out << std::fixed << x;
    return out.str();
}

namespace {

IdentityVerdict compare(const HighReal& lhs, const HighReal& rhs, int digits)
{
    IdentityVerdict v;
    v.lhs = lhs;
    v.rhs = rhs;
    v.requested_digits = digits;
    const HighReal scale = std::max(HighReal(1), HighReal(abs(lhs)));
    const HighReal rel = abs(lhs - rhs) / scale;
    const HighReal limit = pow(HighReal(10), -digits);
    v.agree = rel < limit;
    if (rel == 0) {
        v.agree_digits = digits;
    } else {
        const int measured = static_cast<int>(floor(-log10(rel)));
        v.agree_digits = std::clamp(measured, 0, digits);
    }
    return v;
}

HighReal antiprism4_side()
{
    const HighReal pi = pi_high();
    return 8 * lobachevsky(3 * pi / 8) + 8 * lobachevsky(pi / 8);
}

} // namespace

IdentityVerdict check_lobell_antiprism_identity(int digits)
{
    validate(PrecisionSpec{digits});
    const HighReal pi = pi_high();
    const HighReal theta = pi / 2 - acos(1 / sqrt(HighReal(3)));
    const HighReal lhs = 3 * (2 * lobachevsky(theta) + lobachevsky(theta + pi / 6) +
                              lobachevsky(theta - pi / 6) + lobachevsky(pi / 2 - 2 * theta));
    return compare(lhs, antiprism4_side(), digits);
}

IdentityVerdict check_cuboctahedron_identity(int digits)
{
    validate(PrecisionSpec{digits});
    const HighReal pi = pi_high();
    const HighReal phi = atan(sqrt(HighReal(2)));
    const HighReal lhs = 4 * lobachevsky(pi / 2 - phi) + 8 * lobachevsky(phi) -
                         3 * lobachevsky(2 * phi) + lobachevsky(4 * phi) / 2;
    return compare(lhs, antiprism4_side(), digits);
}

} // namespace rahp
