#include <algorithm>
#include <functional>
#include <set>

#include <doctest.h>

#include "rahp/andreev.hpp"
#include "rahp/census.hpp"
#include "rahp/error.hpp"

using namespace rahp;

namespace {

std::map<int, std::size_t> expected(std::initializer_list<std::pair<const int, std::size_t>> list)
{
    return std::map<int, std::size_t>(list);
}

// Edges of the printed five-generation growth graph from A(4), nodes 1..24.
const std::vector<std::pair<int, int>> kPrintedGrowth = {
    {1, 2},   {2, 3},   {3, 4},   {3, 5},   {4, 6},   {4, 7},   {4, 8},   {4, 9},   {4, 10},  {4, 11},
    {5, 8},   {5, 9},   {5, 11},  {5, 12},  {5, 13},  {6, 14},  {6, 16},  {6, 17},  {6, 18},  {6, 19},
    {6, 20},  {6, 21},  {7, 18},  {8, 17},  {8, 18},  {8, 21},  {8, 22},  {9, 15},  {9, 17},  {9, 18},
    {9, 19},  {9, 21},  {9, 22},  {9, 23},  {9, 24},  {10, 16}, {10, 18}, {10, 21}, {10, 23}, {11, 17},
    {11, 20}, {11, 21}, {11, 22}, {11, 23}, {11, 24}, {12, 22}, {12, 24}, {13, 24}};
const std::vector<int> kPrintedGeneration = {0, 1, 2, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4,
                                             5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5};

// Backtracking search for a generation-preserving graph isomorphism.
bool layered_isomorphic(const std::vector<int>& gen_a, const std::set<std::pair<int, int>>& edges_a,
                        const std::vector<int>& gen_b, const std::set<std::pair<int, int>>& edges_b)
{
    const int n = static_cast<int>(gen_a.size());
    if (static_cast<int>(gen_b.size()) != n || edges_a.size() != edges_b.size()) return false;
    auto has = [](const std::set<std::pair<int, int>>& e, int u, int v) {
        return e.count({std::min(u, v), std::max(u, v)}) > 0;
    };
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> rec = [&](int a) {
        if (a == n) return true;
        for (int b = 0; b < n; ++b) {
            if (used[b] || gen_b[b] != gen_a[a]) continue;
            bool ok = true;
            for (int p = 0; p < a && ok; ++p) ok = has(edges_a, p, a) == has(edges_b, map[p], b);
            if (!ok) continue;
            map[a] = b;
            used[b] = 1;
            if (rec(a + 1)) return true;
            used[b] = 0;
        }
        map[a] = -1;
        return false;
    };
    return rec(0);
}

} // namespace

TEST_CASE("ideal census counts")
{
    CHECK(ideal_census(6).counts() == expected({{6, 1}}));
    CHECK(ideal_census(12).counts() ==
          expected({{6, 1}, {7, 0}, {8, 1}, {9, 1}, {10, 2}, {11, 2}, {12, 9}}));
    const auto r = ideal_census(15);
    CHECK(r.counts().at(14) == 37);
    CHECK(r.counts().at(15) == 79);
    // Restricting n_max truncates.
    const auto small = ideal_census(12).codes;
    for (const auto& [n, codes] : small) CHECK(r.codes.at(n) == codes);
}

TEST_CASE("compact census counts")
{
    CHECK(compact_census(26).counts() == expected({{20, 1}, {22, 0}, {24, 1}, {26, 1}}));
    const auto r = compact_census(32);
    CHECK(r.counts().at(28) == 3);
    CHECK(r.counts().at(30) == 4);
    CHECK(r.counts().at(32) == 12);
    const auto small = compact_census(28).codes;
    for (const auto& [n, codes] : small) CHECK(r.codes.at(n) == codes);
}

TEST_CASE("census members and provenance")
{
    for (const auto& r : {ideal_census(13), compact_census(32)}) {
        for (const auto& [n, codes] : r.codes) {
            CHECK(std::is_sorted(codes.begin(), codes.end()));
            CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
            for (const auto& code : codes) {
                const auto P = decode(code.text);
                CHECK(P.vertex_count() == n);
                const auto rep = andreev_check(P);
                CHECK(rep.valid());
                CHECK(rep.kind == r.kind);
                CHECK(canonical_code(replay(r.provenance.at(code.text))) == code);
                const auto log = to_json(r.provenance.at(code.text));
                CHECK(canonical_code(replay(replay_log_from_json(log))) == code);
            }
        }
    }
}

TEST_CASE("compact census is closed under its moves")
{
    const int n_max = 30;
    const auto r = compact_census(n_max);
    std::set<CanonicalCode> all;
    for (const auto& [n, codes] : r.codes) all.insert(codes.begin(), codes.end());
    std::vector<AbstractPolyhedron> members;
    for (const auto& code : all) members.push_back(decode(code.text));
    for (const auto& P : members) {
        if (P.vertex_count() + 2 > n_max) continue;
        for (const auto& a : edge_addition_candidates(P)) {
            const auto res = edge_addition(P, a.face, a.ea, a.eb);
            if (res.report.valid()) CHECK(all.count(canonical_code(res.polyhedron)) == 1);
        }
    }
    for (const auto& P : members)
        for (const auto& Q : members)
            for (int f = 0; f < P.face_count(); ++f)
                for (int g = 0; g < Q.face_count(); ++g) {
                    const int k = P.face_size(f);
                    if (Q.face_size(g) != k || P.vertex_count() + Q.vertex_count() - 2 * k > n_max) continue;
                    for (const auto& s : connect_sum_all(P, f, Q, g)) {
                        const auto rep = andreev_check(s.polyhedron);
                        if (rep.valid() && rep.kind == Kind::compact)
                            CHECK(all.count(canonical_code(s.polyhedron)) == 1);
                    }
                }
}

TEST_CASE("additive compact volumes")
{
    const auto r = compact_census(30);
    const auto l5 = canonical_code(lobell(5)).text;
    const auto two = canonical_code(tower(5, 2)).text;
    REQUIRE(r.volumes.count(l5) == 1);
    REQUIRE(r.volumes.count(two) == 1);
    CHECK(r.volumes.at(two) == doctest::Approx(2 * r.volumes.at(l5)).epsilon(1e-14));
}

TEST_CASE("census parameters and budgets")
{
    CHECK_THROWS_AS(ideal_census(5), Error);
    CHECK_THROWS_AS(compact_census(18), Error);
    try {
        ideal_census(22);
        FAIL("budget not enforced");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BudgetExceeded);
    }
    try {
        compact_census(36);
        FAIL("budget not enforced");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BudgetExceeded);
    }
    CensusOptions tight;
    tight.max_nodes = 5;
    CHECK_THROWS_AS(ideal_census(12, tight), Error);
}

TEST_CASE("census output does not depend on the worker count")
{
    CensusOptions one;
    CensusOptions eight;
    eight.jobs = 8;
    const auto a = ideal_census(14, one);
    const auto b = ideal_census(14, eight);
    CHECK(a.codes == b.codes);
    for (const auto& [code, log] : a.provenance) CHECK(to_json(log) == to_json(b.provenance.at(code)));
    const auto c = compact_census(30, one);
    const auto d = compact_census(30, eight);
    CHECK(c.codes == d.codes);
    CHECK(c.volumes == d.volumes);
}

TEST_CASE("growth graph from A(4)")
{
    CHECK(growth_graph(antiprism(4), {MoveKind::twist}, 0).generation_sizes() == std::vector<std::size_t>{1});
    const auto g = growth_graph(antiprism(4), {MoveKind::twist}, 5);
    CHECK(g.generation_sizes() == std::vector<std::size_t>{1, 1, 1, 2, 8, 11});
    for (auto [a, b] : g.edges) CHECK(g.nodes[b].generation == g.nodes[a].generation + 1);
    CHECK(g.nodes[1].code == canonical_code(edge_twist(antiprism(4), {0, 1}, {2, 3})));

    std::vector<int> gen;
    for (const auto& node : g.nodes) gen.push_back(node.generation);
    std::set<std::pair<int, int>> mine(g.edges.begin(), g.edges.end());
    std::set<std::pair<int, int>> printed;
    for (auto [a, b] : kPrintedGrowth) printed.insert({a - 1, b - 1});
    CHECK(layered_isomorphic(kPrintedGeneration, printed, gen, mine));

    for (const auto& node : g.nodes) CHECK(canonical_code(replay(node.log)) == node.code);
}

TEST_CASE("growth graph from L(6)")
{
    const auto one = growth_graph(lobell(6), {MoveKind::addition}, 1);
    CHECK(one.generation_sizes() == std::vector<std::size_t>{1, 1});
    const auto l6 = lobell(6);
    const auto& top = l6.face(0);
    const auto plus = edge_addition(l6, 0, {top[0], top[1]}, {top[3], top[4]}).polyhedron;
    CHECK(one.nodes[1].code == canonical_code(plus));
    const auto g = growth_graph(lobell(6), {MoveKind::addition}, 4);
    CHECK(g.generation_sizes() == std::vector<std::size_t>{1, 1, 2, 3, 10});
    CHECK_THROWS_AS(growth_graph(lobell(6), {MoveKind::surgery}, 1), Error);
}
