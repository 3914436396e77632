#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "signed_spectra/signed_graph.hpp"
#include "signed_spectra/trees.hpp"

using namespace signed_spectra;

TEST_CASE("complete graph with negative subgraph") {
    SignedGraph k3 = complete_with_negative_subgraph(3, {});
    CHECK(k3.size() == 3);
    for (const auto& e : k3.edges()) CHECK(e.sign == 1);

    SignedGraph k3n = complete_with_negative_subgraph(3, {{0, 1}});
    CHECK(cycle_sign(k3n, {0, 1, 2}) == -1);

    CHECK_THROWS_AS(complete_with_negative_subgraph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(complete_with_negative_subgraph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(complete_with_negative_subgraph(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("double star construction") {
    LabeledTree p2 = double_star(0, 0);
    CHECK(p2.n == 2);
    CHECK(p2.edges == std::vector<std::pair<int, int>>{{0, 1}});

    LabeledTree t12 = double_star(1, 2);
    CHECK(t12.n == 5);
    std::vector<int> deg = t12.degrees();
    CHECK(deg == std::vector<int>{2, 3, 1, 1, 1});
}

TEST_CASE("linked stars construction") {
    // two K_{1,1} joined pendant-to-pendant form P4
    LabeledTree p4 = linked_stars(2, 2);
    CHECK(tree_canonical_form(p4) ==
          tree_canonical_form(LabeledTree::checked(4, {{0, 1}, {1, 2}, {2, 3}})));

    // two K_{1,2} joined pendant-to-pendant degenerate to P6
    LabeledTree t22 = linked_stars(3, 3);
    CHECK(tree_canonical_form(t22) ==
          tree_canonical_form(LabeledTree::checked(
              6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}})));

    // first non-degenerate case: centers of degree 3, two adjacent
    // degree-2 vertices (the linked pendants), centers non-adjacent
    LabeledTree t33 = linked_stars(4, 4);
    std::vector<int> deg = t33.degrees();
    std::vector<int> sorted_deg = deg;
    std::sort(sorted_deg.begin(), sorted_deg.end(), std::greater<>());
    CHECK(sorted_deg == std::vector<int>{3, 3, 2, 2, 1, 1, 1, 1});
    SignedGraph g(8, [&] {
        std::vector<SignedEdge> se;
        for (auto [u, v] : t33.edges) se.push_back({u, v, 1});
        return se;
    }());
    std::vector<int> deg2;
    for (int v = 0; v < 8; ++v)
        if (deg[v] == 2) deg2.push_back(v);
    REQUIRE(deg2.size() == 2);
    CHECK(g.has_edge(deg2[0], deg2[1]));
    CHECK(!g.has_edge(0, 4));  // centers

    CHECK_THROWS_AS(linked_stars(1, 3), std::invalid_argument);
}

TEST_CASE("s_plus_graph structure and signature freedom") {
    CHECK_THROWS_AS(s_plus_graph(4, 1, 0), std::invalid_argument);

    SignedGraph g = s_plus_graph(6, 1, 0);
    CHECK(g.order() == 6);
    CHECK(g.size() == 7);
    // triangles {1,2,i} all positive
    for (int i = 4; i < 6; ++i)
        CHECK(g.edge_sign(1, 2) * g.edge_sign(1, i) * g.edge_sign(2, i) == 1);
    SignedGraph h = s_plus_graph(6, -1, 3);
    for (int i = 4; i < 6; ++i)
        CHECK(h.edge_sign(1, 2) * h.edge_sign(1, i) * h.edge_sign(2, i) == -1);
}

TEST_CASE("all negative complete multipartite") {
    SignedGraph g = all_negative_complete_multipartite({1, 2, 2});
    CHECK(g.order() == 5);
    CHECK(g.size() == 8);
    for (const auto& e : g.edges()) CHECK(e.sign == -1);
    CHECK(!g.has_edge(1, 2));
    CHECK(!g.has_edge(3, 4));
    CHECK_THROWS_AS(all_negative_complete_multipartite({3}), std::invalid_argument);
}

TEST_CASE("balance detection") {
    SignedGraph k5 = complete_with_negative_subgraph(5, {});
    SwitchingCertificate cert = is_balanced(k5);
    REQUIRE(cert.balanced);
    for (int t : cert.theta) CHECK(t == 1);

    SignedGraph k3n = complete_with_negative_subgraph(3, {{0, 1}});
    cert = is_balanced(k3n);
    REQUIRE(!cert.balanced);
    CHECK(cert.negative_cycle.size() == 3);
    CHECK(cycle_sign(k3n, cert.negative_cycle) == -1);

    // (K_n, T^-) is unbalanced for every non-star spanning tree; the star
    // leaves the graph balanced (switch at its center).
    for (int n = 4; n <= 6; ++n) {
        std::mt19937_64 rng(7u * n);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> seq(n - 2);
            for (auto& x : seq) x = static_cast<int>(rng() % n);
            LabeledTree t = prufer_decode(seq, n);
            auto deg = t.degrees();
            bool star = *std::max_element(deg.begin(), deg.end()) == n - 1;
            SignedGraph g = complete_with_negative_subgraph(n, t.edges);
            CHECK(is_balanced(g).balanced == star);
        }
    }

    SignedGraph two(2, {});
    CHECK_THROWS_AS(is_balanced(two), std::invalid_argument);
}

TEST_CASE("balance witness switches to all-positive") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        // random balanced graph: random theta, sigma = theta_u theta_v
        std::vector<int> theta(n);
        for (auto& t : theta) t = rng() % 2 ? 1 : -1;
        std::vector<SignedEdge> se;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (u == v - 1 || rng() % 2) se.push_back({u, v, theta[u] * theta[v]});
        SignedGraph g(n, se);
        SwitchingCertificate cert = is_balanced(g);
        REQUIRE(cert.balanced);
        std::vector<int> u_set;
        for (int v = 0; v < n; ++v)
            if (cert.theta[v] == -1) u_set.push_back(v);
        SignedGraph switched = switch_at(g, u_set);
        for (const auto& e : switched.edges()) CHECK(e.sign == 1);
    }
}

TEST_CASE("switching basics and cycle-sign invariance") {
    SignedGraph g = complete_with_negative_subgraph(5, {{0, 1}, {2, 3}});
    CHECK(switch_at(g, {}).edges() == g.edges());
    CHECK(switch_at(g, {0, 1, 2, 3, 4}).edges() == g.edges());
    std::vector<int> u{1, 3};
    CHECK(switch_at(switch_at(g, u), u).edges() == g.edges());

    std::vector<int> cyc{0, 2, 4, 1};
    int before = cycle_sign(g, cyc);
    CHECK(cycle_sign(switch_at(g, u), cyc) == before);
    CHECK_THROWS_AS(switch_at(g, {9}), std::invalid_argument);
}

TEST_CASE("reverse_sign_pair") {
    SignedGraph g = complete_with_negative_subgraph(4, {{0, 1}});
    SignedGraph flipped = reverse_sign_pair(g, {2, 3}, {0, 1});
    CHECK(flipped.edge_sign(2, 3) == -1);
    CHECK(flipped.edge_sign(0, 1) == 1);
    SignedGraph back = reverse_sign_pair(flipped, {0, 1}, {2, 3});
    CHECK(back.edges() == g.edges());

    CHECK_THROWS_AS(reverse_sign_pair(g, {0, 1}, {2, 3}), std::invalid_argument);  // wrong signs
}

TEST_CASE("cycle_sign") {
    SignedGraph g = complete_with_negative_subgraph(4, {{0, 1}, {1, 2}});
    CHECK(cycle_sign(g, {0, 2, 3}) == 1);
    CHECK(cycle_sign(g, {0, 1, 2}) == 1);       // two negative edges
    CHECK(cycle_sign(g, {0, 1, 2, 3}) == 1);    // 01-, 12-, 23+, 30+
    CHECK(cycle_sign(g, {0, 1, 3, 2}) == -1);   // 01-, 13+, 32+, 20+
    CHECK_THROWS_AS(cycle_sign(g, {0, 1, 0}), std::invalid_argument);
    SignedGraph path(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK_THROWS_AS(cycle_sign(path, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("prufer decode examples") {
    LabeledTree t = prufer_decode({}, 2);
    CHECK(t.edges == std::vector<std::pair<int, int>>{{0, 1}});

    t = prufer_decode({0}, 3);
    CHECK(t.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});

    CHECK_THROWS_AS(prufer_decode({0, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(prufer_decode({3}, 3), std::invalid_argument);
}

TEST_CASE("prufer bijection on all n=6 sequences") {
    std::set<std::string> trees;
    std::vector<int> seq(4);
    int count = 0;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c)
                for (int d = 0; d < 6; ++d) {
                    seq = {a, b, c, d};
                    LabeledTree t = prufer_decode(seq, 6);
                    CHECK(prufer_encode(t) == seq);
                    std::string key;
                    for (auto [u, v] : t.edges) key += std::to_string(u) + "," + std::to_string(v) + ";";
                    trees.insert(key);
                    ++count;
                }
    CHECK(count == 1296);
    CHECK(trees.size() == 1296);  // Cayley: 6^4 distinct labeled trees
}

TEST_CASE("prufer round-trip on random trees") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(rng() % 11);
        std::vector<int> seq(n - 2);
        for (auto& x : seq) x = static_cast<int>(rng() % n);
        LabeledTree t = prufer_decode(seq, n);
        CHECK(prufer_encode(t) == seq);
        LabeledTree t2 = prufer_decode(prufer_encode(t), n);
        CHECK(t2.edges == t.edges);
    }
}

TEST_CASE("tree canonical form") {
    LabeledTree p4 = LabeledTree::checked(4, {{0, 1}, {1, 2}, {2, 3}});
    LabeledTree p4r = LabeledTree::checked(4, {{2, 0}, {0, 3}, {3, 1}});  // relabeled path
    CHECK(tree_canonical_form(p4) == tree_canonical_form(p4r));

    LabeledTree t12 = double_star(1, 2);
    LabeledTree p5 = LabeledTree::checked(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(tree_canonical_form(t12) != tree_canonical_form(p5));
}

TEST_CASE("balance equals all-cycles-positive, exhaustively to n=5") {
    for (int n = 3; n <= 5; ++n) {
        int mpairs = n * (n - 1) / 2;
        for (std::uint32_t gm = 0; gm < (1u << mpairs); ++gm) {
            std::vector<std::pair<int, int>> pairs;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
            std::vector<std::pair<int, int>> el;
            for (int i = 0; i < mpairs; ++i)
                if (gm >> i & 1u) el.push_back(pairs[i]);
            if (el.size() < 3) continue;
            // one mixed signature per graph keeps this quick; cycles are what matter
            std::vector<SignedEdge> se;
            for (std::size_t i = 0; i < el.size(); ++i)
                se.push_back({el[i].first, el[i].second, (i * 2654435761u >> 3) % 2 ? 1 : -1});
            SignedGraph g(n, se);
            if (!g.connected()) continue;
            bool all_pos = true;
            for (const auto& cyc : oracles::all_simple_cycles(g))
                if (cycle_sign(g, cyc) == -1) all_pos = false;
            CHECK(is_balanced(g).balanced == all_pos);
        }
    }
}

TEST_CASE("unbalanced signed complete graphs contain a negative triangle") {
    for (int n = 4; n <= 5; ++n) {
        int m = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        for (std::uint32_t sig = 0; sig < (1u << m); ++sig) {
            std::vector<SignedEdge> se;
            for (int i = 0; i < m; ++i)
                se.push_back({pairs[i].first, pairs[i].second, (sig >> i & 1u) ? -1 : 1});
            SignedGraph g(n, se);
            if (is_balanced(g).balanced) continue;
            bool neg_triangle = false;
            for (int a = 0; a < n && !neg_triangle; ++a)
                for (int b = a + 1; b < n && !neg_triangle; ++b)
                    for (int c = b + 1; c < n && !neg_triangle; ++c)
                        if (g.edge_sign(a, b) * g.edge_sign(a, c) * g.edge_sign(b, c) < 0)
                            neg_triangle = true;
            CHECK(neg_triangle);
        }
    }
}

TEST_CASE("canonical form matches brute-force isomorphism on n=6") {
    // the 1296 labeled trees on 6 vertices fall into exactly 6 classes
    std::map<std::string, LabeledTree> reps;
    std::vector<int> seq(4);
    for (int idx = 0; idx < 1296; ++idx) {
        int x = idx;
        for (int k = 0; k < 4; ++k) {
            seq[k] = x % 6;
            x /= 6;
        }
        LabeledTree t = prufer_decode(seq, 6);
        std::string c = tree_canonical_form(t);
        auto [it, fresh] = reps.emplace(c, t);
        if (!fresh) CHECK(oracles::trees_isomorphic(it->second, t));
    }
    CHECK(reps.size() == 6);
    // distinct encodings really are non-isomorphic
    for (auto a = reps.begin(); a != reps.end(); ++a)
        for (auto b = std::next(a); b != reps.end(); ++b)
            CHECK(!oracles::trees_isomorphic(a->second, b->second));
}
