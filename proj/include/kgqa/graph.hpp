#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kgqa {

using NodeId = std::uint32_t;
using RelationId = std::uint32_t;

struct Node {
    NodeId id = 0;
    std::string name;
    std::string label = "owl_Thing";
    std::map<std::string, std::string> properties;
};

struct Edge {
    NodeId src = 0;
    NodeId dst = 0;
    RelationId relation = 0;
};

// Controls how triples are routed at load time: predicates listed in
// literal_predicates become node properties, everything else becomes an edge.
struct IngestConfig {
    std::set<std::string> literal_predicates = {"diedOnDate", "wasBornOnDate"};
    bool strip_angle_brackets = true;
};

// Immutable in-memory property graph. Built once by load_triples (or by hand
// through the mutators followed by finalize()); read-only afterwards, safe for
// any number of concurrent readers.
class PropertyGraph {
public:
    NodeId add_node(const std::string& name);
    // Returns false when the triple was a duplicate.
    bool add_edge(NodeId src, const std::string& relation, NodeId dst);
    void set_property(NodeId node, const std::string& key, const std::string& value);
    // Sorts adjacency lists so every traversal order is deterministic.
    void finalize();

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const Node& node(NodeId id) const { return nodes_[id]; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::optional<NodeId> node_by_name(std::string_view name) const;

    std::optional<RelationId> relation_id(std::string_view relation) const;
    const std::string& relation_name(RelationId id) const { return relation_names_[id]; }
    // All relation labels present in the graph, sorted.
    std::vector<std::string> relations() const;

    // Neighbor ids are sorted ascending after finalize().
    std::span<const NodeId> out_neighbors(NodeId node, RelationId relation) const;
    std::span<const NodeId> in_neighbors(NodeId node, RelationId relation) const;
    std::span<const NodeId> out_neighbors(NodeId node, std::string_view relation) const;
    std::span<const NodeId> in_neighbors(NodeId node, std::string_view relation) const;

    bool has_edge(NodeId src, RelationId relation, NodeId dst) const;
    bool has_edge(NodeId src, std::string_view relation, NodeId dst) const;

    // Indexes of edges carrying the relation, in insertion order.
    std::span<const std::uint32_t> edges_with_relation(RelationId relation) const;

private:
    RelationId intern_relation(const std::string& relation);

    static std::uint64_t adjacency_key(NodeId node, RelationId relation) {
        return (static_cast<std::uint64_t>(node) << 32) | relation;
    }

    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::string> relation_names_;
    std::unordered_map<std::string, RelationId> relation_ids_;
    std::unordered_map<std::string, NodeId> by_name_;
    std::unordered_map<std::uint64_t, std::vector<NodeId>> out_index_;
    std::unordered_map<std::uint64_t, std::vector<NodeId>> in_index_;
    std::vector<std::vector<std::uint32_t>> edges_by_relation_;
    bool finalized_ = false;
};

// Parses tab-separated subject/predicate/object lines into a graph.
// Blank lines and lines starting with '#' are skipped; CRLF endings accepted.
// Throws IngestError on malformed lines or conflicting property values.
PropertyGraph load_triples(std::istream& source, const IngestConfig& config = {});

}  // namespace kgqa
