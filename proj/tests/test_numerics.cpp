#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <doctest.h>

#include "rahp/error.hpp"
#include "rahp/numerics.hpp"
#include "test_support.hpp"

using namespace rahp;
using rahp::testing::matches_printed;

namespace {

constexpr double pi = std::numbers::pi;

// Direct quadrature of -log|2 sin t| over [0, theta], 0 < theta < pi.
double lobachevsky_by_quadrature(double theta)
{
    boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate([](double t) { return -std::log(2.0 * std::sin(t)); }, 0.0, theta);
}

HighReal parse(const char* s) { return HighReal(s); }

} // namespace

TEST_CASE("lobachevsky vanishes at multiples of pi/2")
{
    CHECK(lobachevsky(0.0) == 0.0);
    CHECK(std::abs(lobachevsky(pi / 2)) < 1e-15);
    CHECK(std::abs(lobachevsky(pi)) < 1e-15);
    CHECK(std::abs(lobachevsky(-3 * pi / 2)) < 1e-15);
}

TEST_CASE("lobachevsky at pi/4 and pi/3")
{
    CHECK(matches_printed(lobachevsky(Angle{pi / 4}), 0.457983));
    CHECK(matches_printed(lobachevsky(Angle{pi / 3}), 0.338314));
    CHECK(std::abs(lobachevsky(pi / 3) - lobachevsky_by_quadrature(pi / 3)) < 1e-13);
    CHECK(std::abs(lobachevsky(1.0) - lobachevsky_by_quadrature(1.0)) < 1e-13);
    CHECK(std::abs(lobachevsky(2.9) - lobachevsky_by_quadrature(2.9)) < 1e-12);
}

TEST_CASE("high precision values against an independent Clausen evaluation")
{
    const HighReal tol = pow(HighReal(10), -75);
    const HighReal p = pi_high();
    CHECK(abs(lobachevsky(p / 3) -
              parse("0.33831386880321787500706751809150676198056310251009993067249636892553249208608134")) < tol);
    CHECK(abs(lobachevsky(HighReal(1)) -
              parse("0.36357302543163962371491912730417908806013500241556049402875745552500928696634979")) < tol);
    CHECK(abs(lobachevsky(HighReal("0.3")) -
              parse("0.45475039820840901210518177633200927022191069559123642001972057220999047884155156")) < tol);
    CHECK(abs(lobachevsky(HighReal("-2.5")) -
              parse("0.49641006627347835935462773006280933279537730121616958331186888487990190635889587")) < tol);
    CHECK(abs(v_oct(PrecisionSpec{70}) -
              parse("3.6638623767088760602184140597295364430965974971266885370659924784870520791050191")) < tol);
    CHECK(abs(v_tet(PrecisionSpec{70}) -
              parse("1.014941606409653625021202554274520285941689307530299792017489106776597476258244")) < tol);
}

TEST_CASE("lobachevsky is odd and pi-periodic")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-20.0, 20.0);
    for (int i = 0; i < 10000; ++i) {
        const double t = dist(rng);
        CHECK(std::abs(lobachevsky(-t) + lobachevsky(t)) < 1e-14);
        CHECK(std::abs(lobachevsky(t + pi) - lobachevsky(t)) < 1e-13);
    }
}

TEST_CASE("duplication identity")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-4.0, 4.0);
    for (int i = 0; i < 2000; ++i) {
        const double t = dist(rng);
        const double lhs = lobachevsky(2 * t);
        const double rhs = 2 * lobachevsky(t) + 2 * lobachevsky(t + pi / 2);
        CHECK(std::abs(lhs - rhs) < 1e-13);
    }
    const HighReal t("0.7123");
    const HighReal p = pi_high();
    CHECK(abs(lobachevsky(2 * t) - 2 * lobachevsky(t) - 2 * lobachevsky(t + p / 2)) <
          pow(HighReal(10), -110));
}

TEST_CASE("series and Fourier evaluators agree on a 1000-point grid")
{
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double t = 0.02 + (pi - 0.04) * i / 999.0;
        worst = std::max(worst, std::abs(lobachevsky(t) - lobachevsky_fourier(t)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("inverse tangent integral at 1 is Catalan's constant")
{
    CHECK(std::abs(inverse_tangent_integral(1.0) - 0.915965594177219015054603514932384110774) < 1e-14);
}

TEST_CASE("constants")
{
    CHECK(matches_printed(v_oct(), 3.663862));
    CHECK(matches_printed(v_tet(), 1.014941));
    CHECK(matches_printed(v_oct() / 2, 1.831931));
    CHECK(std::abs(v_oct() - 8 * lobachevsky(pi / 4)) < 1e-15);
    CHECK(std::abs(v_tet() - 3 * lobachevsky(pi / 3)) < 1e-15);
}

TEST_CASE("ideal tetrahedron volumes")
{
    CHECK(std::abs(ideal_tet_volume(std::polar(1.0, pi / 3)).value - v_tet()) < 1e-14);
    const auto flat = ideal_tet_volume({2.0, 0.0});
    CHECK(flat.value == 0.0);
    CHECK(flat.degenerate);
    CHECK(std::abs(ideal_tet_volume({0.0, 1.0}).value - v_oct() / 4) < 1e-14);
    CHECK(signed_tet_volume({0.3, -0.8}) < 0.0);
    CHECK(std::abs(signed_tet_volume({0.3, -0.8}) + signed_tet_volume({0.3, 0.8})) < 1e-15);
    CHECK_THROWS_AS(ideal_tet_volume({1.0, 0.0}), Error);

    // The shape is invariant under z -> 1/(1-z) -> 1 - 1/z.
    const std::complex<double> z(0.4, 1.3);
    CHECK(std::abs(signed_tet_volume(z) - signed_tet_volume(1.0 / (1.0 - z))) < 1e-14);

    double best = 0.0;
    double best_angle = 0.0;
    for (int i = 1; i < 3600; ++i) {
        const double a = pi * i / 3600.0;
        const double v = ideal_tet_volume(std::polar(1.0, a)).value;
        if (v > best) {
            best = v;
            best_angle = a;
        }
    }
    CHECK(std::abs(best_angle - pi / 3) < 1e-9);
}

TEST_CASE("antiprism-Lobell identity")
{
    const auto v6 = check_lobell_antiprism_identity(6);
    CHECK(v6.agree);
    CHECK(to_decimal(v6.lhs, 6) == "6.023046");

    const auto v2 = check_lobell_antiprism_identity(2);
    CHECK(v2.agree);
    CHECK(v2.agree_digits == 2);

    const auto v50 = check_lobell_antiprism_identity(50);
    CHECK(v50.agree);
    CHECK(v50.agree_digits == 50);
    const std::string printed = "6.02304602004718882363418931461679711549802902472249";
    CHECK(to_decimal(v50.lhs, 60).substr(0, printed.size()) == printed);
}

TEST_CASE("cuboctahedron identity")
{
    CHECK(check_cuboctahedron_identity(6).agree);
    const auto v30 = check_cuboctahedron_identity(30);
    CHECK(v30.agree);
    CHECK(v30.agree_digits == 30);
    CHECK(to_decimal(v30.rhs, 6) == "6.023046");
}

TEST_CASE("precision limits")
{
    CHECK_THROWS_AS(check_lobell_antiprism_identity(kMaxDigits + 1), Error);
    try {
        lobachevsky(HighReal(1), PrecisionSpec{500});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PrecisionUnattainable);
    }
}
