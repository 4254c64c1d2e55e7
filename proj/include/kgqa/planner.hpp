#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kgqa/graph.hpp"
#include "kgqa/pattern.hpp"
#include "kgqa/templates.hpp"

namespace kgqa {

// Graph components, one variant per pattern class.
struct NodeEdge {
    std::string node_name;
    std::string edge_label;
};
struct NodeProperty {
    std::string node_name;
    std::string property_key;
};
struct NodePair {
    std::string node_name_1;
    std::string node_name_2;
};
using GraphComponent = std::variant<NodeEdge, NodeProperty, NodePair>;

// Executable queries compiled from the components.
struct FindObjects {
    std::string subject_name;
    std::string relation;
};
struct FindProperty {
    std::string subject_name;
    std::string key;
};
struct FindRelations {
    std::string name_1;
    std::string name_2;
};
using GraphQuery = std::variant<FindObjects, FindProperty, FindRelations>;

// One relation label between the two nodes of a FindRelations query;
// Backward means the edge runs name_2 -> name_1.
struct RelationHit {
    std::string relation;
    Direction direction = Direction::Forward;

    bool operator==(const RelationHit&) const = default;
};

struct QueryResult {
    std::vector<std::string> objects;        // FindObjects
    std::optional<std::string> literal;      // FindProperty
    std::vector<RelationHit> relations;      // FindRelations

    bool empty() const { return objects.empty() && !literal.has_value() && relations.empty(); }
};

// Table-driven mappings: pattern class -> component -> query.
GraphComponent to_graph_component(const ParsedQuestion& q);
GraphQuery to_query(const GraphComponent& c);

// Unknown subject names yield an empty result, not an error.
QueryResult execute(const PropertyGraph& graph, const GraphQuery& query);

}  // namespace kgqa
