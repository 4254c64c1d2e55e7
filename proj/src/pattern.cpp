#include "kgqa/pattern.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace kgqa {

namespace {
constexpr NodeId kUnbound = std::numeric_limits<NodeId>::max();
}

PathPattern::PathPattern(std::vector<EdgeAtom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty() || atoms_.size() > 4) {
        throw std::invalid_argument("path pattern must have 1 to 4 atoms");
    }
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        const auto& atom = atoms_[i];
        bool from_known = has_variable(atom.from);
        bool to_known = has_variable(atom.to);
        if (i > 0 && !from_known && !to_known) {
            throw std::invalid_argument("pattern atoms must form a connected chain");
        }
        if (!from_known) variables_.push_back(atom.from);
        if (!to_known && atom.to != atom.from) variables_.push_back(atom.to);
    }
}

std::size_t PathPattern::variable_index(std::string_view var) const {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (variables_[i] == var) return i;
    }
    throw std::invalid_argument("unknown pattern variable: " + std::string(var));
}

bool PathPattern::has_variable(std::string_view var) const {
    return std::find(variables_.begin(), variables_.end(), var) != variables_.end();
}

std::string PathPattern::text() const {
    std::string out;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        const auto& atom = atoms_[i];
        if (i == 0) out += "(" + atom.from + ")";
        if (atom.direction == Direction::Forward) {
            out += "-[" + atom.relation + "]->";
        } else {
            out += "<-[" + atom.relation + "]-";
        }
        out += "(" + atom.to + ")";
    }
    return out;
}

namespace {

struct Matcher {
    const PropertyGraph& graph;
    const PathPattern& pattern;
    std::vector<Binding>& out;
    Binding binding;

    bool node_in_use(NodeId node) const {
        return std::find(binding.begin(), binding.end(), node) != binding.end();
    }

    void solve(std::size_t atom_idx) {
        if (atom_idx == pattern.atoms().size()) {
            out.push_back(binding);
            return;
        }
        const EdgeAtom& atom = pattern.atoms()[atom_idx];
        auto rel = graph.relation_id(atom.relation);
        if (!rel) return;

        std::size_t fi = pattern.variable_index(atom.from);
        std::size_t ti = pattern.variable_index(atom.to);
        bool forward = atom.direction == Direction::Forward;
        NodeId from = binding[fi];
        NodeId to = binding[ti];

        if (from != kUnbound && to != kUnbound) {
            bool ok = forward ? graph.has_edge(from, *rel, to) : graph.has_edge(to, *rel, from);
            if (ok) solve(atom_idx + 1);
        } else if (from != kUnbound) {
            auto candidates =
                forward ? graph.out_neighbors(from, *rel) : graph.in_neighbors(from, *rel);
            for (NodeId c : candidates) {
                if (node_in_use(c)) continue;
                binding[ti] = c;
                solve(atom_idx + 1);
                binding[ti] = kUnbound;
            }
        } else if (to != kUnbound) {
            auto candidates =
                forward ? graph.in_neighbors(to, *rel) : graph.out_neighbors(to, *rel);
            for (NodeId c : candidates) {
                if (node_in_use(c)) continue;
                binding[fi] = c;
                solve(atom_idx + 1);
                binding[fi] = kUnbound;
            }
        } else {
            for (std::uint32_t edge_idx : graph.edges_with_relation(*rel)) {
                const Edge& e = graph.edges()[edge_idx];
                NodeId f = forward ? e.src : e.dst;
                NodeId t = forward ? e.dst : e.src;
                if (fi == ti) {
                    if (f != t || node_in_use(f)) continue;
                    binding[fi] = f;
                    solve(atom_idx + 1);
                    binding[fi] = kUnbound;
                    continue;
                }
                if (f == t || node_in_use(f) || node_in_use(t)) continue;
                binding[fi] = f;
                binding[ti] = t;
                solve(atom_idx + 1);
                binding[fi] = kUnbound;
                binding[ti] = kUnbound;
            }
        }
    }
};

}  // namespace

std::vector<Binding> match_pattern(const PropertyGraph& graph, const PathPattern& pattern,
                                   const std::map<std::string, NodeId>& seed) {
    std::vector<Binding> results;
    Matcher matcher{graph, pattern, results,
                    Binding(pattern.variables().size(), kUnbound)};
    for (const auto& [var, node] : seed) {
        std::size_t idx = pattern.variable_index(var);  // throws on unknown var
        if (matcher.node_in_use(node)) return {};       // seed itself violates injectivity
        matcher.binding[idx] = node;
    }
    matcher.solve(0);
    std::sort(results.begin(), results.end());
    results.erase(std::unique(results.begin(), results.end()), results.end());
    return results;
}

}  // namespace kgqa
