#include "rahp/census.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>

#include "rahp/andreev.hpp"
#include "rahp/error.hpp"
#include "rahp/parallel.hpp"
#include "rahp/volumes.hpp"

namespace rahp {

namespace {


using LogPtr = std::shared_ptr<const ReplayLog>;

struct Member {
    CanonicalCode code;
    AbstractPolyhedron poly;
    LogPtr log;
    std::optional<double> volume;
    int n = 0;
};

struct Candidate {
    CanonicalCode code;
    AbstractPolyhedron poly;
    LogPtr log;
    std::optional<double> volume;
    bool admissible = false;
};

LogPtr extend(const LogPtr& parent, MoveDescriptor move)
{
    auto log = std::make_shared<ReplayLog>(*parent);
    log->moves.push_back(std::move(move));
    return log;
}

Candidate make_candidate(AbstractPolyhedron Q, LogPtr log, Kind kind, std::optional<double> volume = {})
{
    Candidate c;
    const auto report = andreev_check(Q);
    c.admissible = report.valid() && report.kind == kind;
    if (c.admissible) c.code = canonical_code(Q);
    c.poly = std::move(Q);
    c.log = std::move(log);
    c.volume = volume;
    return c;
}

Candidate seed_candidate(const AbstractPolyhedron& P, std::optional<double> volume)
{
    Candidate c;
    c.poly = canonical_form(P);
    c.code = canonical_code(P);
    c.admissible = true;
    c.log = std::make_shared<ReplayLog>(ReplayLog{c.code.text, {}});
    c.volume = volume;
    return c;
}

std::vector<Candidate> twist_children(const Member& m, Kind kind)
{
    std::vector<Candidate> out;
    for (const auto& t : edge_twist_candidates(m.poly)) {
        MoveDescriptor move;
        move.kind = MoveKind::twist;
        move.e1 = t.e1;
        move.e2 = t.e2;
        out.push_back(make_candidate(edge_twist(m.poly, t.e1, t.e2), extend(m.log, move), kind));
    }
    return out;
}

std::vector<Candidate> addition_children(const Member& m, Kind kind)
{
    std::vector<Candidate> out;
    for (const auto& a : edge_addition_candidates(m.poly)) {
        MoveDescriptor move;
        move.kind = MoveKind::addition;
        move.face = a.face;
        move.e1 = a.ea;
        move.e2 = a.eb;
        out.push_back(make_candidate(edge_addition(m.poly, a.face, a.ea, a.eb).polyhedron,
                                     extend(m.log, move), kind));
    }
    return out;
}

std::vector<Candidate> compositions(const Member& m1, const Member& m2, int n)
{
    std::vector<Candidate> out;
    const int k = (m1.n + m2.n - n) / 2;
    if (k < 3 || m1.n + m2.n - 2 * k != n) return out;
    for (int f1 = 0; f1 < m1.poly.face_count(); ++f1) {
        if (m1.poly.face_size(f1) != k) continue;
        for (int f2 = 0; f2 < m2.poly.face_count(); ++f2) {
            if (m2.poly.face_size(f2) != k) continue;
            std::vector<ComposeResult> sums;
            try {
                sums = connect_sum_all(m1.poly, f1, m2.poly, f2);
            } catch (const Error&) {
                continue;
            }
            for (auto& r : sums) {
                MoveDescriptor move;
                move.kind = MoveKind::compose;
                move.face = f1;
                move.other_face = f2;
                move.matching = r.matching;
                move.other = m2.log;
                std::optional<double> volume;
                if (r.isometric && m1.volume && m2.volume) volume = *m1.volume + *m2.volume;
                out.push_back(make_candidate(std::move(r.polyhedron), extend(m1.log, move), Kind::compact, volume));
            }
        }
    }
    return out;
}

class Store {
public:
    Store(Kind kind, const CensusOptions& options) : kind_(kind), options_(options) {}

    // Serial insert-if-absent; a later candidate replaces an entry only by
    // supplying a volume the entry lacks.
    void merge(std::vector<Candidate>& batch, int n, CensusStats& stats)
    {
        for (auto& c : batch) {
            ++stats.generated[n];
            if (!c.admissible) {
                ++stats.rejected[n];
                continue;
            }
            auto it = index_.find(c.code.text);
            if (it != index_.end()) {
                ++stats.dedup_hits;
                Member& m = members_[it->second];
                if (!m.volume && c.volume) {
                    m.poly = std::move(c.poly);
                    m.log = std::move(c.log);
                    m.volume = c.volume;
                }
                continue;
            }
            if (members_.size() >= options_.max_nodes)
                throw Error(ErrorCode::BudgetExceeded, "census node cap reached");
            index_.emplace(c.code.text, members_.size());
            levels_[n].push_back(members_.size());
            members_.push_back({std::move(c.code), std::move(c.poly), std::move(c.log), c.volume, n});
        }
        auto& level = levels_[n];
        std::sort(level.begin(), level.end(),
                  [&](std::size_t a, std::size_t b) { return members_[a].code < members_[b].code; });
    }

    const std::vector<std::size_t>& level(int n)
    {
        return levels_[n];
    }
    const Member& member(std::size_t i) const { return members_[i]; }

    CensusResult result(int n_max, const std::vector<int>& ns, CensusStats stats) const
    {
        CensusResult r;
        r.kind = kind_;
        r.n_max = n_max;
        for (int n : ns) {
            auto& codes = r.codes[n];
            auto it = levels_.find(n);
            if (it == levels_.end()) continue;
            for (std::size_t i : it->second) {
                const Member& m = members_[i];
                codes.push_back(m.code);
                r.provenance.emplace(m.code.text, *m.log);
                if (m.volume) r.volumes.emplace(m.code.text, *m.volume);
            }
        }
        r.stats = std::move(stats);
        return r;
    }

private:
    Kind kind_;
    CensusOptions options_;
    std::vector<Member> members_;
    std::unordered_map<std::string, std::size_t> index_;
    std::map<int, std::vector<std::size_t>> levels_;
};

void check_budget(int n_max, int minimum, int default_limit, const CensusOptions& options)
{
    if (n_max < minimum)
        throw Error(ErrorCode::BadParameter, "n_max must be at least " + std::to_string(minimum));
    const int limit = options.n_limit > 0 ? options.n_limit : default_limit;
    if (n_max > limit)
        throw Error(ErrorCode::BudgetExceeded,
                    "n_max " + std::to_string(n_max) + " exceeds the budget of " + std::to_string(limit));
}

template <class Expand>
std::vector<Candidate> expand_level(Store& store, int parent_n, int jobs, Expand&& expand)
{
    const auto parents = store.level(parent_n);
    std::vector<std::vector<Candidate>> per(parents.size());
    parallel_for(parents.size(), jobs, [&](std::size_t i) { per[i] = expand(store.member(parents[i])); });
    std::vector<Candidate> out;
    for (auto& v : per)
        for (auto& c : v) out.push_back(std::move(c));
    return out;
}

} // namespace

std::map<int, std::size_t> CensusResult::counts() const
{
    std::map<int, std::size_t> out;
    for (const auto& [n, list] : codes) out[n] = list.size();
    return out;
}

CensusResult ideal_census(int n_max, const CensusOptions& options)
{
    check_budget(n_max, 6, 21, options);
    Store store(Kind::ideal, options);
    CensusStats stats;
    std::vector<int> ns;
    for (int n = 6; n <= n_max; ++n) {
        ns.push_back(n);
        std::vector<Candidate> batch;
        if (n % 2 == 0) batch.push_back(seed_candidate(antiprism(n / 2), std::nullopt));
        auto children = expand_level(store, n - 1, options.jobs,
                                     [](const Member& m) { return twist_children(m, Kind::ideal); });
        for (auto& c : children) batch.push_back(std::move(c));
        store.merge(batch, n, stats);
    }
    return store.result(n_max, ns, std::move(stats));
}

CensusResult compact_census(int n_max, const CensusOptions& options)
{
    check_budget(n_max, 20, 34, options);
    Store store(Kind::compact, options);
    CensusStats stats;
    std::vector<int> ns;
    std::vector<std::size_t> earlier;  // members of completed levels in (n, code) order
    for (int n = 20; n <= n_max; n += 2) {
        ns.push_back(n);
        std::vector<Candidate> batch;
        if (n % 4 == 0) batch.push_back(seed_candidate(lobell(n / 4), lobell_volume(n / 4).value));

        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < earlier.size(); ++i)
            for (std::size_t j = i; j < earlier.size(); ++j)
                if (store.member(earlier[i]).n + store.member(earlier[j]).n > n) pairs.emplace_back(i, j);
        std::vector<std::vector<Candidate>> per(pairs.size());
        parallel_for(pairs.size(), options.jobs, [&](std::size_t p) {
            per[p] = compositions(store.member(earlier[pairs[p].first]), store.member(earlier[pairs[p].second]), n);
        });
        for (auto& v : per)
            for (auto& c : v) batch.push_back(std::move(c));

        auto children = expand_level(store, n - 2, options.jobs,
                                     [](const Member& m) { return addition_children(m, Kind::compact); });
        for (auto& c : children) batch.push_back(std::move(c));
        store.merge(batch, n, stats);
        for (std::size_t i : store.level(n)) earlier.push_back(i);
    }
    return store.result(n_max, ns, std::move(stats));
}

std::vector<std::size_t> GrowthGraph::generation_sizes() const
{
    std::vector<std::size_t> sizes;
    for (const auto& node : nodes) {
        if (static_cast<int>(sizes.size()) <= node.generation) sizes.resize(node.generation + 1, 0);
        ++sizes[node.generation];
    }
    return sizes;
}

GrowthGraph growth_graph(const AbstractPolyhedron& seed, const std::vector<MoveKind>& moves, int depth,
                         const CensusOptions& options)
{
    if (depth < 0) throw Error(ErrorCode::BadParameter, "depth must be non-negative");
    for (MoveKind m : moves)
        if (m != MoveKind::twist && m != MoveKind::addition)
            throw Error(ErrorCode::BadParameter, "growth graphs use twist and addition moves only");
    const Kind kind = seed.kind();
    struct Node {
        Member member;
        int generation;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::string, int> index;
    {
        Candidate s = seed_candidate(seed, std::nullopt);
        index.emplace(s.code.text, 0);
        nodes.push_back({{s.code, s.poly, s.log, std::nullopt, seed.vertex_count()}, 0});
    }
    std::vector<std::pair<int, int>> edges;
    std::vector<int> frontier{0};
    for (int g = 1; g <= depth && !frontier.empty(); ++g) {
        std::vector<std::vector<Candidate>> per(frontier.size());
        parallel_for(frontier.size(), options.jobs, [&](std::size_t i) {
            const Member& m = nodes[frontier[i]].member;
            for (MoveKind mk : moves) {
                auto kids = mk == MoveKind::twist ? twist_children(m, kind) : addition_children(m, kind);
                for (auto& c : kids) per[i].push_back(std::move(c));
            }
        });
        std::vector<int> next;
        for (std::size_t i = 0; i < frontier.size(); ++i)
            for (auto& c : per[i]) {
                if (!c.admissible) continue;
                auto it = index.find(c.code.text);
                int child;
                if (it == index.end()) {
                    if (nodes.size() >= options.max_nodes)
                        throw Error(ErrorCode::BudgetExceeded, "growth graph node cap reached");
                    child = static_cast<int>(nodes.size());
                    index.emplace(c.code.text, child);
                    const int nv = c.poly.vertex_count();
                    nodes.push_back({{c.code, std::move(c.poly), c.log, std::nullopt, nv}, g});
                    next.push_back(child);
                } else {
                    child = it->second;
                }
                if (nodes[child].generation == g) edges.emplace_back(frontier[i], child);
            }
        std::sort(next.begin(), next.end(),
                  [&](int a, int b) { return nodes[a].member.code < nodes[b].member.code; });
        frontier = std::move(next);
    }

    // Renumber by (generation, code).
    std::vector<int> order(nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (nodes[a].generation != nodes[b].generation) return nodes[a].generation < nodes[b].generation;
        return nodes[a].member.code < nodes[b].member.code;
    });
    std::vector<int> rank(nodes.size());
    GrowthGraph out;
    for (std::size_t r = 0; r < order.size(); ++r) {
        rank[order[r]] = static_cast<int>(r);
        const Node& node = nodes[order[r]];
        out.nodes.push_back({node.member.code, node.generation, *node.member.log});
    }
    for (auto [a, b] : edges) out.edges.emplace_back(rank[a], rank[b]);
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
    return out;
}

} // namespace rahp
