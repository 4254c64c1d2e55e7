#include "kgqa/planner.hpp"

#include <algorithm>

#include "kgqa/errors.hpp"

namespace kgqa {

GraphComponent to_graph_component(const ParsedQuestion& q) {
    switch (q.pattern_class) {
        case PatternClass::I:
            if (q.v1.empty() || !q.rel || q.rel->empty() || q.v2 || q.prop) {
                throw PlannerError("class I question must carry exactly (v1, rel)");
            }
            return NodeEdge{q.v1, *q.rel};
        case PatternClass::II:
            if (q.v1.empty() || !q.prop || q.prop->empty() || q.v2 || q.rel) {
                throw PlannerError("class II question must carry exactly (v1, prop)");
            }
            return NodeProperty{q.v1, *q.prop};
        case PatternClass::III:
            if (q.v1.empty() || !q.v2 || q.v2->empty() || q.rel || q.prop) {
                throw PlannerError("class III question must carry exactly (v1, v2)");
            }
            return NodePair{q.v1, *q.v2};
    }
    throw PlannerError("unknown pattern class");
}

GraphQuery to_query(const GraphComponent& c) {
    return std::visit(
        [](const auto& component) -> GraphQuery {
            using T = std::decay_t<decltype(component)>;
            if constexpr (std::is_same_v<T, NodeEdge>) {
                return FindObjects{component.node_name, component.edge_label};
            } else if constexpr (std::is_same_v<T, NodeProperty>) {
                return FindProperty{component.node_name, component.property_key};
            } else {
                return FindRelations{component.node_name_1, component.node_name_2};
            }
        },
        c);
}

namespace {

QueryResult run(const PropertyGraph& graph, const FindObjects& q) {
    QueryResult result;
    auto subject = graph.node_by_name(q.subject_name);
    if (!subject) return result;
    for (NodeId neighbor : graph.out_neighbors(*subject, q.relation)) {
        result.objects.push_back(graph.node(neighbor).name);
    }
    std::sort(result.objects.begin(), result.objects.end());
    return result;
}

QueryResult run(const PropertyGraph& graph, const FindProperty& q) {
    QueryResult result;
    auto subject = graph.node_by_name(q.subject_name);
    if (!subject) return result;
    const auto& props = graph.node(*subject).properties;
    auto it = props.find(q.key);
    if (it != props.end()) result.literal = it->second;
    return result;
}

QueryResult run(const PropertyGraph& graph, const FindRelations& q) {
    QueryResult result;
    auto first = graph.node_by_name(q.name_1);
    auto second = graph.node_by_name(q.name_2);
    if (!first || !second) return result;
    for (const std::string& relation : graph.relations()) {
        if (graph.has_edge(*first, relation, *second)) {
            result.relations.push_back({relation, Direction::Forward});
        }
        if (graph.has_edge(*second, relation, *first)) {
            result.relations.push_back({relation, Direction::Backward});
        }
    }
    return result;
}

}  // namespace

QueryResult execute(const PropertyGraph& graph, const GraphQuery& query) {
    return std::visit([&](const auto& q) { return run(graph, q); }, query);
}

}  // namespace kgqa
