#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rahp/canonical.hpp"
#include "rahp/census.hpp"
#include "rahp/polyhedron.hpp"
#include "rahp/volumes.hpp"

namespace rahp {

// Volumes closer than this count as one normalized volume.
inline constexpr double kDistinctOmegaTolerance = 1e-6;

// Modified vertex count and modified normalized volume of one summand.
struct SummandStats {
    double ver_tilde = 0.0;
    double omega_tilde = 0.0;
};

SummandStats summand_stats(double volume, int ver, Kind kind);

struct SpectrumPoint {
    CanonicalCode code;
    int ver = 0;
    std::optional<VolumeValue> vol;
    std::optional<double> omega;
    std::optional<double> omega_tilde;
};

// Ordered by omega, ties and volume-less points broken by code.
bool operator<(const SpectrumPoint& a, const SpectrumPoint& b);

struct SpectrumRow {
    Kind kind = Kind::ideal;
    int n = 0;
    std::size_t count = 0;
    std::size_t with_volume = 0;
    std::size_t distinct_omega = 0;
    std::optional<double> min_omega;
    std::optional<double> max_omega;
    // Some member has no volume; min and max are then witnesses only.
    bool partial = false;
};

// Number of clusters of the sorted values whose neighbours differ by more than tol.
std::size_t count_distinct(std::vector<double> values, double tol = kDistinctOmegaTolerance);

std::vector<SpectrumPoint> spectrum_points(Kind kind, int n, const std::vector<CanonicalCode>& members,
                                           const std::map<std::string, double>& volumes);

// Ideal rows require every volume (MissingVolumes); compact rows are flagged partial.
SpectrumRow spectrum_table(Kind kind, int n, const std::vector<CanonicalCode>& members,
                           const std::map<std::string, double>& volumes);

// Realized volume of every member of an ideal census, keyed by code text.
std::map<std::string, double> realized_volumes(const CensusResult& census, int jobs = 1, double tol = 1e-10);

// (v1 w1 + v2 w2) / (v1 + v2): the modified normalized volume of a connected sum.
double weighted_average_check(const SummandStats& p1, const SummandStats& p2);

// Largest vertex count of a polyhedron of this kind with omega <= C.
int discreteness_bound(double C, Kind kind);

struct GluingSchedule {
    SummandStats p1;
    SummandStats p2;
    double target = 0.0;
    double eps = 0.0;
    // Weight of p1 in the target: (B - t) / (B - A).
    double alpha = 0.0;
    // (k, m): k copies of p1 and m copies of p2; coprime, from successive convergents.
    std::vector<std::pair<long long, long long>> pairs;
    double predicted = 0.0;
};

// (k v1 A + m v2 B) / (k v1 + m v2).
double schedule_value(const SummandStats& p1, const SummandStats& p2, long long k, long long m);

GluingSchedule approximation_schedule(double t, const SummandStats& p1, const SummandStats& p2, double eps,
                                      int max_terms = 64);

// Summands bracketing an ideal target t in (v_oct/4, v_oct/2]: the first
// antiprism A(n) with modified normalized volume below t, and a stand-in for
// the high-volume family at the supremum v_oct/2 with the same modified count.
std::pair<SummandStats, SummandStats> ideal_density_summands(double t, int max_n = 100000);

// omega of the m-fold connected sum: omega_tilde m v / (m v + offset).
double repeated_sum_omega(const SummandStats& p, Kind kind, long long m);

// repeated_sum_omega for m = 1..m_max.
std::vector<double> repeated_sum_convergence(const SummandStats& p, Kind kind, int m_max);

enum class Region { below, discrete, unknown_gap, dense, above };

std::string to_string(Region region);

Region classify(double omega, Kind kind);

} // namespace rahp
