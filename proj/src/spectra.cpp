#include "rahp/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <utility>

#include "rahp/error.hpp"
#include "rahp/parallel.hpp"
#include "rahp/realization.hpp"

namespace rahp {

SummandStats summand_stats(double volume, int ver, Kind kind)
{
    const int ver_tilde = ver - modified_offset(kind);
    if (ver_tilde <= 0 || !(volume > 0))
        throw Error(ErrorCode::BadParameter, "summand needs a positive volume and a positive modified vertex count");
    return {static_cast<double>(ver_tilde), volume / ver_tilde};
}

bool operator<(const SpectrumPoint& a, const SpectrumPoint& b)
{
    const double inf = std::numeric_limits<double>::infinity();
    return std::tuple(a.omega.value_or(inf), a.code.text) < std::tuple(b.omega.value_or(inf), b.code.text);
}

std::size_t count_distinct(std::vector<double> values, double tol)
{
    if (values.empty()) return 0;
    std::sort(values.begin(), values.end());
    std::size_t clusters = 1;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] - values[i - 1] > tol) ++clusters;
    return clusters;
}

std::vector<SpectrumPoint> spectrum_points(Kind kind, int n, const std::vector<CanonicalCode>& members,
                                           const std::map<std::string, double>& volumes)
{
    const VolumeMethod method = kind == Kind::ideal ? VolumeMethod::realized : VolumeMethod::additive;
    std::vector<SpectrumPoint> points;
    points.reserve(members.size());
    for (const auto& code : members) {
        SpectrumPoint p;
        p.code = code;
        p.ver = n;
        if (auto it = volumes.find(code.text); it != volumes.end()) {
            p.vol = VolumeValue{it->second, method, 15, std::nullopt};
            const auto nv = normalized(it->second, n, kind);
            p.omega = nv.omega;
            p.omega_tilde = nv.omega_tilde;
        }
        points.push_back(std::move(p));
    }
    std::sort(points.begin(), points.end());
    return points;
}

SpectrumRow spectrum_table(Kind kind, int n, const std::vector<CanonicalCode>& members,
                           const std::map<std::string, double>& volumes)
{
    SpectrumRow row;
    row.kind = kind;
    row.n = n;
    row.count = members.size();
    std::vector<double> omegas;
    for (const auto& p : spectrum_points(kind, n, members, volumes))
        if (p.omega) omegas.push_back(*p.omega);
    row.with_volume = omegas.size();
    row.partial = row.with_volume < row.count;
    if (row.partial && kind == Kind::ideal)
        throw Error(ErrorCode::MissingVolumes, std::to_string(row.count - row.with_volume) + " of " +
                                                   std::to_string(row.count) + " members at n=" + std::to_string(n) +
                                                   " have no volume");
    row.distinct_omega = count_distinct(omegas);
    if (!omegas.empty()) {
        row.min_omega = *std::min_element(omegas.begin(), omegas.end());
        row.max_omega = *std::max_element(omegas.begin(), omegas.end());
    }
    return row;
}

std::map<std::string, double> realized_volumes(const CensusResult& census, int jobs, double tol)
{
    if (census.kind != Kind::ideal) throw Error(ErrorCode::NotIdealKind, "realized volumes need an ideal census");
    std::vector<const CanonicalCode*> all;
    for (const auto& [n, codes] : census.codes)
        for (const auto& c : codes) all.push_back(&c);
    std::vector<double> values(all.size());
    parallel_for(all.size(), jobs, [&](std::size_t i) { values[i] = ideal_volume(decode(all[i]->text), tol).value; });
    std::map<std::string, double> out;
    for (std::size_t i = 0; i < all.size(); ++i) out.emplace(all[i]->text, values[i]);
    return out;
}

double weighted_average_check(const SummandStats& p1, const SummandStats& p2)
{
    return (p1.ver_tilde * p1.omega_tilde + p2.ver_tilde * p2.omega_tilde) / (p1.ver_tilde + p2.ver_tilde);
}

int discreteness_bound(double C, Kind kind)
{
    const double vo = v_oct();
    double bound = 0;
    if (kind == Kind::ideal) {
        if (!(C >= vo / 6 && C < vo / 4))
            throw Error(ErrorCode::OutOfRange, "ideal discreteness bound needs v_oct/6 <= C < v_oct/4");
        bound = 2 * vo / (vo - 4 * C);
    } else {
        if (!(C >= 5 * vo / 192 && C < vo / 32))
            throw Error(ErrorCode::OutOfRange, "compact discreteness bound needs 5 v_oct/192 <= C < v_oct/32");
        bound = 8 * vo / (vo - 32 * C);
    }
    // Absorb rounding at exact integer bounds such as C = v_oct/6.
    bound *= 1 + 1e-12;
    if (bound >= static_cast<double>(std::numeric_limits<int>::max()))
        throw Error(ErrorCode::OutOfRange, "discreteness bound exceeds the integer range");
    return static_cast<int>(std::floor(bound));
}

double schedule_value(const SummandStats& p1, const SummandStats& p2, long long k, long long m)
{
    const double w1 = static_cast<double>(k) * p1.ver_tilde;
    const double w2 = static_cast<double>(m) * p2.ver_tilde;
    return (w1 * p1.omega_tilde + w2 * p2.omega_tilde) / (w1 + w2);
}

GluingSchedule approximation_schedule(double t, const SummandStats& p1, const SummandStats& p2, double eps,
                                      int max_terms)
{
    if (!(eps > 0)) throw Error(ErrorCode::BadParameter, "eps must be positive");
    if (max_terms < 1) throw Error(ErrorCode::BadParameter, "max_terms must be positive");
    if (!(p1.ver_tilde > 0 && p2.ver_tilde > 0))
        throw Error(ErrorCode::BadParameter, "modified vertex counts must be positive");
    const double A = p1.omega_tilde;
    const double B = p2.omega_tilde;
    if (!(t >= std::min(A, B) && t <= std::max(A, B)))
        throw Error(ErrorCode::Unreachable, "target lies outside the interval spanned by the summands");

    GluingSchedule s;
    s.p1 = p1;
    s.p2 = p2;
    s.target = t;
    s.eps = eps;
    s.alpha = A == B ? 1.0 : (B - t) / (B - A);
    auto finish = [&](long long k, long long m) {
        s.pairs.emplace_back(k, m);
        s.predicted = schedule_value(p1, p2, k, m);
        return s;
    };
    if (t == A) return finish(1, 0);
    if (t == B) return finish(0, 1);

    // k/m must approach alpha v2 / ((1 - alpha) v1) = v2 (B - t) / (v1 (t - A)).
    double x = p2.ver_tilde * (B - t) / (p1.ver_tilde * (t - A));
    const double cap = 9007199254740992.0;  // 2^53
    long long h2 = 0, h1 = 1;  // numerators of the two previous convergents
    long long q2 = 1, q1 = 0;  // denominators
    while (true) {
        const double a = std::floor(x);
        const double h_next = a * static_cast<double>(h1) + static_cast<double>(h2);
        const double q_next = a * static_cast<double>(q1) + static_cast<double>(q2);
        if (h_next > cap || q_next > cap) break;
        h2 = std::exchange(h1, static_cast<long long>(h_next));
        q2 = std::exchange(q1, static_cast<long long>(q_next));
        if (h1 > 0) {
            if (static_cast<int>(s.pairs.size()) == max_terms)
                throw Error(ErrorCode::TermBudget, "no convergent within " + std::to_string(max_terms) + " terms");
            s.pairs.emplace_back(h1, q1);
            s.predicted = schedule_value(p1, p2, h1, q1);
            if (std::abs(s.predicted - t) <= eps) return s;
        }
        const double frac = x - a;
        if (frac <= 0) break;
        x = 1 / frac;
    }
    throw Error(ErrorCode::TermBudget, "continued fraction exhausted before reaching the requested accuracy");
}

std::pair<SummandStats, SummandStats> ideal_density_summands(double t, int max_n)
{
    const double lo = v_oct() / 4;
    const double hi = v_oct() / 2;
    if (!(t > lo && t <= hi))
        throw Error(ErrorCode::Unreachable, "target must lie in (v_oct/4, v_oct/2]");
    // omega_tilde(A(n)) decreases towards v_oct/4, so bisect for the first n below t.
    auto stats = [](int n) { return summand_stats(antiprism_volume(n).value, 2 * n, Kind::ideal); };
    if (stats(max_n).omega_tilde >= t)
        throw Error(ErrorCode::Unreachable, "no antiprism up to n=" + std::to_string(max_n) + " lies below the target");
    int a = 3;
    int b = max_n;
    if (stats(a).omega_tilde < t) b = a;
    while (b - a > 1) {
        const int mid = a + (b - a) / 2;
        (stats(mid).omega_tilde < t ? b : a) = mid;
    }
    const auto p1 = stats(b);
    return {p1, SummandStats{p1.ver_tilde, hi}};
}

double repeated_sum_omega(const SummandStats& p, Kind kind, long long m)
{
    if (m < 1) throw Error(ErrorCode::BadParameter, "m must be at least 1");
    const double mv = static_cast<double>(m) * p.ver_tilde;
    return p.omega_tilde * mv / (mv + modified_offset(kind));
}

std::vector<double> repeated_sum_convergence(const SummandStats& p, Kind kind, int m_max)
{
    if (m_max < 1) throw Error(ErrorCode::BadParameter, "m_max must be at least 1");
    std::vector<double> out;
    out.reserve(m_max);
    for (int m = 1; m <= m_max; ++m) out.push_back(repeated_sum_omega(p, kind, m));
    return out;
}

std::string to_string(Region region)
{
    switch (region) {
    case Region::below: return "below";
    case Region::discrete: return "discrete";
    case Region::unknown_gap: return "unknown_gap";
    case Region::dense: return "dense";
    case Region::above: return "above";
    }
    return "unknown";
}

Region classify(double omega, Kind kind)
{
    if (!(omega >= 0)) throw Error(ErrorCode::BadParameter, "omega must be non-negative");
    const auto L = landmark_constants();
    if (kind == Kind::ideal) {
        if (omega < L.at('d')) return Region::below;
        if (omega < L.at('f')) return Region::discrete;
        if (omega <= L.at('k')) return Region::dense;
        return Region::above;
    }
    if (omega < L.at('a')) return Region::below;
    if (omega < L.at('b')) return Region::discrete;
    if (omega < L.at('c')) return Region::unknown_gap;
    if (omega <= L.at('e')) return Region::dense;
    return Region::above;
}

} // namespace rahp
