#include <cmath>
#include <numbers>

#include <doctest.h>

#include "rahp/error.hpp"
#include "rahp/volumes.hpp"
#include "test_support.hpp"

using namespace rahp;
using namespace rahp::testing;

TEST_CASE("closed-form family volumes")
{
    CHECK(matches_printed(antiprism_volume(3).value, 3.663862));
    CHECK(matches_printed(antiprism_volume(4).value, 6.023046));
    CHECK(matches_printed(lobell_volume(6).value, 6.023046));
    CHECK(antiprism_volume(3).method == VolumeMethod::closed_form);
    CHECK(std::abs(antiprism_volume(3).value - v_oct()) < 1e-12);
    CHECK(std::abs(lobell_volume(6).value - antiprism_volume(4).value) < 1e-12);
    // Independent evaluation of the octahedron: 8 Lambda(pi/4) through the Fourier series.
    CHECK(std::abs(antiprism_volume(3).value - 8 * lobachevsky_fourier(std::numbers::pi / 4)) < 1e-12);
}

TEST_CASE("the Lobell volume of L(5) lies within printed rounding")
{
    // The reference value is 4.306210; the formula gives 4.3062076...
    CHECK(std::abs(lobell_volume(5).value - 4.306210) < 5e-6);
    CHECK(std::abs(tower_volume(5, 2).value - 8.612420) < 1e-5);
    CHECK(tower_volume(5, 2).method == VolumeMethod::additive);
    CHECK(tower_volume(5, 1).value == doctest::Approx(lobell_volume(5).value).epsilon(1e-15));
}

TEST_CASE("lobell angle range")
{
    for (int n = 5; n <= 200; ++n) {
        const double t = lobell_theta(n);
        CHECK(t > 0);
        CHECK(t < std::numbers::pi / 2);
    }
    CHECK_THROWS_AS(lobell_theta(4), Error);
}

TEST_CASE("large-n limits")
{
    CHECK(std::abs(antiprism_volume(1000).value / 1000 - v_oct() / 2) < 1e-3);
    CHECK(std::abs(lobell_volume(10000).value / 40000 - 5 * v_tet() / 16) < 1e-3);
    const int n = 2000;
    const int k = 3;
    const double omega = tower_volume(n, k).value / (2.0 * n * (k + 1));
    CHECK(std::abs(omega - 0.75 * 5 * v_tet() / 8) < 1e-3);
}

TEST_CASE("high precision volumes")
{
    const auto v = antiprism_volume(3, PrecisionSpec{60});
    REQUIRE(v.high);
    CHECK(v.digits == 60);
    CHECK(to_decimal(*v.high, 50) == to_decimal(HighReal(v_oct(PrecisionSpec{60})), 50));
    const auto a4 = antiprism_volume(4, PrecisionSpec{60});
    const auto l6 = lobell_volume(6, PrecisionSpec{60});
    CHECK(to_decimal(*a4.high, 50) == to_decimal(*l6.high, 50));
    CHECK(std::abs(static_cast<double>(*a4.high) - a4.value) < 1e-14);
}

TEST_CASE("volume parameter errors")
{
    CHECK_THROWS_AS(antiprism_volume(2), Error);
    CHECK_THROWS_AS(lobell_volume(4), Error);
    CHECK_THROWS_AS(tower_volume(5, 0), Error);
    try {
        antiprism_volume(2);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadParameter);
    }
}

TEST_CASE("normalized volumes")
{
    const auto oct = normalized(3.663862, 6, Kind::ideal);
    CHECK(matches_printed(oct.omega, 0.610643));
    CHECK(oct.omega_tilde);
    const auto twin = normalized(7.327725, 9, Kind::ideal);
    CHECK(matches_printed(twin.omega, 0.814191));
    CHECK(*twin.omega_tilde == doctest::Approx(7.327725 / 6).epsilon(1e-15));
    const auto l6 = normalized(6.023046, 24, Kind::compact);
    CHECK(matches_printed(l6.omega, 0.250960));
    CHECK(*l6.omega_tilde == doctest::Approx(6.023046 / 14).epsilon(1e-15));
    CHECK(!normalized(5.0, 10, Kind::compact).omega_tilde);
    CHECK(modified_offset(Kind::ideal) == 3);
    CHECK(modified_offset(Kind::compact) == 10);
    const auto via_value = normalized(antiprism_volume(3), 6, Kind::ideal);
    CHECK(via_value.omega == doctest::Approx(v_oct() / 6).epsilon(1e-15));
    CHECK_THROWS_AS(normalized(1.0, 0, Kind::ideal), Error);
}

TEST_CASE("vertex-count bounds")
{
    const auto [lo6, hi6] = atkinson_bounds(6, Kind::ideal);
    CHECK(lo6 == doctest::Approx(v_oct()).epsilon(1e-15));
    CHECK(hi6 == doctest::Approx(v_oct()).epsilon(1e-15));
    const auto [lo8, hi8] = atkinson_bounds(8, Kind::ideal);
    CHECK(lo8 == doctest::Approx(v_oct() * 6 / 4).epsilon(1e-15));
    CHECK(hi8 == doctest::Approx(2 * v_oct()).epsilon(1e-15));
    CHECK(lo8 < antiprism_volume(4).value);
    CHECK(antiprism_volume(4).value < hi8);
    const auto [lo20, hi20] = atkinson_bounds(20, Kind::compact);
    CHECK(lo20 == doctest::Approx(12 * v_oct() / 32).epsilon(1e-15));
    CHECK(matches_printed(lo20, 1.373948));
    CHECK(hi20 == doctest::Approx(5 * v_tet() * 10 / 8).epsilon(1e-15));
    CHECK(lo20 < lobell_volume(5).value);
    CHECK(lobell_volume(5).value < hi20);
    CHECK_THROWS_AS(atkinson_bounds(5, Kind::ideal), Error);
    CHECK_THROWS_AS(atkinson_bounds(19, Kind::compact), Error);
}

TEST_CASE("family volumes respect the vertex bounds")
{
    for (int n = 4; n <= 50; ++n) {
        const auto [lo, hi] = atkinson_bounds(2 * n, Kind::ideal);
        const double v = antiprism_volume(n).value;
        CHECK(lo < v);
        CHECK(v < hi);
    }
    for (int n = 5; n <= 30; ++n)
        for (int k = 1; k <= 4; ++k) {
            const int ver = 2 * n * (k + 1);
            const auto [lo, hi] = atkinson_bounds(ver, Kind::compact);
            const double v = tower_volume(n, k).value;
            CHECK(lo <= v);
            CHECK(v <= hi);
        }
}

TEST_CASE("normalized volume grows with n")
{
    for (int n = 3; n < 50; ++n)
        CHECK(antiprism_volume(n).value / (2 * n) < antiprism_volume(n + 1).value / (2 * (n + 1)));
    for (int n = 5; n < 50; ++n)
        CHECK(lobell_volume(n).value / (4 * n) < lobell_volume(n + 1).value / (4 * (n + 1)));
}

TEST_CASE("vd conversion")
{
    CHECK(vd_from_omega(0) == 0);
    CHECK(vd_from_omega(v_oct() / 6) == doctest::Approx(v_oct()).epsilon(1e-15));
    const double h = landmark_constants().at('h');
    CHECK(vd_from_omega(h / 6) == doctest::Approx(h).epsilon(1e-15));
}

TEST_CASE("landmark constants")
{
    const auto L = landmark_constants();
    REQUIRE(L.size() == 9);
    double previous = 0;
    for (const auto& [key, value] : L) {
        CHECK(value > previous);
        previous = value;
    }
    const double vo = v_oct();
    const double vt = v_tet();
    CHECK(L.at('a') == doctest::Approx(5 * vo / 192).epsilon(1e-15));
    CHECK(L.at('b') == doctest::Approx(vo / 32).epsilon(1e-15));
    CHECK(L.at('c') == doctest::Approx(5 * vt / 16).epsilon(1e-15));
    CHECK(L.at('d') == doctest::Approx(vo / 6).epsilon(1e-15));
    CHECK(L.at('e') == doctest::Approx(5 * vt / 8).epsilon(1e-15));
    CHECK(L.at('f') == doctest::Approx(vo / 4).epsilon(1e-15));
    CHECK(L.at('g') == doctest::Approx(vo / 3).epsilon(1e-15));
    CHECK(L.at('h') == doctest::Approx(5 * vt / 3).epsilon(1e-15));
    CHECK(L.at('k') == doctest::Approx(vo / 2).epsilon(1e-15));
    for (auto [key, printed] : {std::pair{'b', 0.114495}, {'c', 0.317169}, {'d', 0.610643}, {'e', 0.634338},
                                {'f', 0.915965}, {'g', 1.221287}, {'k', 1.831931}})
        CHECK(matches_printed(L.at(key), printed));
    const auto H = landmark_constants(PrecisionSpec{40});
    for (const auto& [key, value] : H) CHECK(std::abs(static_cast<double>(value) - L.at(key)) < 1e-15);
}
