// Test-only brute-force oracles, independent of the library's index-driven
// matcher: pattern matching by full |V|^k enumeration over an edge set built
// by scanning the edge table, and confidence counting on top of it.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "kgqa/graph.hpp"
#include "kgqa/pattern.hpp"
#include "kgqa/rules.hpp"

namespace oracle {

using kgqa::Binding;
using kgqa::Direction;
using kgqa::NodeId;

inline std::set<std::tuple<NodeId, std::string, NodeId>> edge_set(const kgqa::PropertyGraph& g) {
    std::set<std::tuple<NodeId, std::string, NodeId>> edges;
    for (const auto& e : g.edges()) {
        edges.insert({e.src, g.relation_name(e.relation), e.dst});
    }
    return edges;
}

// Enumerates every assignment of pattern variables to nodes and filters.
inline std::vector<Binding> brute_force_match(const kgqa::PropertyGraph& g,
                                              const kgqa::PathPattern& pattern,
                                              const std::map<std::string, NodeId>& seed = {}) {
    auto edges = edge_set(g);
    const auto& vars = pattern.variables();
    std::size_t k = vars.size();
    std::size_t n = g.node_count();
    std::vector<Binding> results;
    if (n == 0) return results;

    Binding assignment(k, 0);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
            for (std::size_t j = i + 1; j < k && ok; ++j) {
                if (assignment[i] == assignment[j]) ok = false;
            }
        }
        for (const auto& [var, node] : seed) {
            if (!ok) break;
            if (assignment[pattern.variable_index(var)] != node) ok = false;
        }
        for (const auto& atom : pattern.atoms()) {
            if (!ok) break;
            NodeId from = assignment[pattern.variable_index(atom.from)];
            NodeId to = assignment[pattern.variable_index(atom.to)];
            NodeId src = atom.direction == Direction::Forward ? from : to;
            NodeId dst = atom.direction == Direction::Forward ? to : from;
            if (!edges.contains({src, atom.relation, dst})) ok = false;
        }
        if (ok) results.push_back(assignment);

        // advance the odometer
        std::size_t pos = 0;
        while (pos < k) {
            if (++assignment[pos] < n) break;
            assignment[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
    }
    std::sort(results.begin(), results.end());
    return results;
}

struct Counts {
    std::size_t support = 0;
    std::size_t body_count = 0;
    std::size_t pca_body_count = 0;
};

inline Counts brute_force_confidence(const kgqa::PropertyGraph& g,
                                     const kgqa::AssociationRule& rule) {
    auto edges = edge_set(g);
    auto assignments = brute_force_match(g, rule.body);
    std::size_t ui = rule.body.variable_index(rule.head.from);
    std::size_t wi = rule.body.variable_index(rule.head.to);

    std::set<std::pair<NodeId, NodeId>> pairs;
    for (const auto& a : assignments) pairs.insert({a[ui], a[wi]});

    Counts counts;
    counts.body_count = pairs.size();
    for (const auto& [u, w] : pairs) {
        if (edges.contains({u, rule.head.relation, w})) ++counts.support;
        for (NodeId other = 0; other < g.node_count(); ++other) {
            if (edges.contains({u, rule.head.relation, other})) {
                ++counts.pca_body_count;
                break;
            }
        }
    }
    return counts;
}

// Random graph over n nodes and the given relation labels; each directed
// (src, rel, dst) edge is present with probability p.
inline kgqa::PropertyGraph random_graph(std::mt19937& rng, std::size_t n,
                                        const std::vector<std::string>& relations, double p) {
    kgqa::PropertyGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_node("n" + std::to_string(i));
    std::bernoulli_distribution flip(p);
    for (NodeId src = 0; src < n; ++src) {
        for (NodeId dst = 0; dst < n; ++dst) {
            if (src == dst) continue;
            for (const auto& rel : relations) {
                if (flip(rng)) g.add_edge(src, rel, dst);
            }
        }
    }
    g.finalize();
    return g;
}

inline kgqa::AssociationRule random_rule(std::mt19937& rng, std::size_t body_len,
                                         const std::vector<std::string>& relations) {
    static const std::vector<std::string> vars = {"a", "b", "c", "d", "e"};
    std::uniform_int_distribution<std::size_t> pick_rel(0, relations.size() - 1);
    std::bernoulli_distribution flip(0.5);

    std::vector<kgqa::EdgeAtom> atoms;
    for (std::size_t i = 0; i < body_len; ++i) {
        atoms.push_back(kgqa::EdgeAtom{vars[i], relations[pick_rel(rng)], vars[i + 1],
                                       flip(rng) ? Direction::Forward : Direction::Backward});
    }
    kgqa::PathPattern body(std::move(atoms));

    std::uniform_int_distribution<std::size_t> pick_var(0, body_len);
    std::size_t ui = pick_var(rng);
    std::size_t wi = pick_var(rng);
    while (wi == ui) wi = pick_var(rng);
    kgqa::EdgeAtom head{vars[ui], relations[pick_rel(rng)], vars[wi], Direction::Forward};
    return kgqa::AssociationRule{std::move(body), std::move(head), ""};
}

}  // namespace oracle
