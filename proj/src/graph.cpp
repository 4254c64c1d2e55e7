#include "kgqa/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "kgqa/errors.hpp"

namespace kgqa {

NodeId PropertyGraph::add_node(const std::string& name) {
    auto it = by_name_.find(name);
    if (it != by_name_.end()) return it->second;
    NodeId id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back(Node{id, name, "owl_Thing", {}});
    by_name_.emplace(name, id);
    return id;
}

RelationId PropertyGraph::intern_relation(const std::string& relation) {
    auto it = relation_ids_.find(relation);
    if (it != relation_ids_.end()) return it->second;
    RelationId id = static_cast<RelationId>(relation_names_.size());
    relation_names_.push_back(relation);
    relation_ids_.emplace(relation, id);
    edges_by_relation_.emplace_back();
    return id;
}

bool PropertyGraph::add_edge(NodeId src, const std::string& relation, NodeId dst) {
    RelationId rel = intern_relation(relation);
    auto& out = out_index_[adjacency_key(src, rel)];
    if (std::find(out.begin(), out.end(), dst) != out.end()) return false;
    out.push_back(dst);
    in_index_[adjacency_key(dst, rel)].push_back(src);
    edges_by_relation_[rel].push_back(static_cast<std::uint32_t>(edges_.size()));
    edges_.push_back(Edge{src, dst, rel});
    finalized_ = false;
    return true;
}

void PropertyGraph::set_property(NodeId node, const std::string& key, const std::string& value) {
    nodes_[node].properties[key] = value;
}

void PropertyGraph::finalize() {
    for (auto& [key, neighbors] : out_index_) std::sort(neighbors.begin(), neighbors.end());
    for (auto& [key, neighbors] : in_index_) std::sort(neighbors.begin(), neighbors.end());
    finalized_ = true;
}

std::optional<NodeId> PropertyGraph::node_by_name(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

std::optional<RelationId> PropertyGraph::relation_id(std::string_view relation) const {
    auto it = relation_ids_.find(std::string(relation));
    if (it == relation_ids_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> PropertyGraph::relations() const {
    std::vector<std::string> names = relation_names_;
    std::sort(names.begin(), names.end());
    return names;
}

std::span<const NodeId> PropertyGraph::out_neighbors(NodeId node, RelationId relation) const {
    auto it = out_index_.find(adjacency_key(node, relation));
    if (it == out_index_.end()) return {};
    return it->second;
}

std::span<const NodeId> PropertyGraph::in_neighbors(NodeId node, RelationId relation) const {
    auto it = in_index_.find(adjacency_key(node, relation));
    if (it == in_index_.end()) return {};
    return it->second;
}

std::span<const NodeId> PropertyGraph::out_neighbors(NodeId node, std::string_view relation) const {
    auto rel = relation_id(relation);
    if (!rel) return {};
    return out_neighbors(node, *rel);
}

std::span<const NodeId> PropertyGraph::in_neighbors(NodeId node, std::string_view relation) const {
    auto rel = relation_id(relation);
    if (!rel) return {};
    return in_neighbors(node, *rel);
}

bool PropertyGraph::has_edge(NodeId src, RelationId relation, NodeId dst) const {
    auto neighbors = out_neighbors(src, relation);
    if (finalized_) return std::binary_search(neighbors.begin(), neighbors.end(), dst);
    return std::find(neighbors.begin(), neighbors.end(), dst) != neighbors.end();
}

bool PropertyGraph::has_edge(NodeId src, std::string_view relation, NodeId dst) const {
    auto rel = relation_id(relation);
    if (!rel) return false;
    return has_edge(src, *rel, dst);
}

std::span<const std::uint32_t> PropertyGraph::edges_with_relation(RelationId relation) const {
    if (relation >= edges_by_relation_.size()) return {};
    return edges_by_relation_[relation];
}

namespace {

std::string strip_brackets(std::string field) {
    if (field.size() >= 2 && field.front() == '<' && field.back() == '>') {
        field = field.substr(1, field.size() - 2);
    }
    return field;
}

}  // namespace

PropertyGraph load_triples(std::istream& source, const IngestConfig& config) {
    PropertyGraph graph;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(source, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;

        auto first = line.find('\t');
        auto second = first == std::string::npos ? std::string::npos : line.find('\t', first + 1);
        if (first == std::string::npos || second == std::string::npos ||
            line.find('\t', second + 1) != std::string::npos) {
            throw IngestError(line_no, "expected 3 tab-separated fields");
        }

        std::string subject = line.substr(0, first);
        std::string predicate = line.substr(first + 1, second - first - 1);
        std::string object = line.substr(second + 1);
        if (config.strip_angle_brackets) {
            subject = strip_brackets(std::move(subject));
            predicate = strip_brackets(std::move(predicate));
            object = strip_brackets(std::move(object));
        }
        if (subject.empty() || predicate.empty() || object.empty()) {
            throw IngestError(line_no, "empty field");
        }

        NodeId subject_id = graph.add_node(subject);
        if (config.literal_predicates.contains(predicate)) {
            const auto& existing = graph.node(subject_id).properties;
            auto it = existing.find(predicate);
            if (it != existing.end() && it->second != object) {
                throw IngestError(line_no, "conflicting value for property '" + predicate +
                                               "' of node '" + subject + "'");
            }
            graph.set_property(subject_id, predicate, object);
        } else {
            NodeId object_id = graph.add_node(object);
            graph.add_edge(subject_id, predicate, object_id);
        }
    }
    graph.finalize();
    return graph;
}

}  // namespace kgqa
