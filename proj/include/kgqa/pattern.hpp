#pragma once

#include <map>
#include <string>
#include <vector>

#include "kgqa/graph.hpp"

namespace kgqa {

enum class Direction { Forward, Backward };

// One edge atom of a path: (from)-[relation]->(to) when Forward,
// (from)<-[relation]-(to) when Backward.
struct EdgeAtom {
    std::string from;
    std::string relation;
    std::string to;
    Direction direction = Direction::Forward;
};

// A connected chain of 1..4 edge atoms with variable endpoints.
class PathPattern {
public:
    // Validates connectivity and length; throws std::invalid_argument.
    explicit PathPattern(std::vector<EdgeAtom> atoms);

    const std::vector<EdgeAtom>& atoms() const { return atoms_; }
    // Variables in order of first appearance.
    const std::vector<std::string>& variables() const { return variables_; }
    std::size_t variable_index(std::string_view var) const;
    bool has_variable(std::string_view var) const;

    std::string text() const;

private:
    std::vector<EdgeAtom> atoms_;
    std::vector<std::string> variables_;
};

// One complete assignment, aligned with PathPattern::variables().
using Binding = std::vector<NodeId>;

// Enumerates every injective assignment of pattern variables to nodes such
// that each atom's edge exists in the stated direction. Results are sorted
// lexicographically by node id in variable order. Seed variables must occur
// in the pattern.
std::vector<Binding> match_pattern(const PropertyGraph& graph, const PathPattern& pattern,
                                   const std::map<std::string, NodeId>& seed = {});

}  // namespace kgqa
