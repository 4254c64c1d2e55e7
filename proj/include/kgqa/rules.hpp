#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "kgqa/graph.hpp"
#include "kgqa/pattern.hpp"

namespace kgqa {

// A path-shaped body of 1..4 edge atoms implying a single head edge whose
// variables both occur in the body. The head is stored in forward
// orientation: head.from is the rule subject.
struct AssociationRule {
    PathPattern body;
    EdgeAtom head;
    std::string name;

    std::string text() const;
};

// Counts are over distinct (head-subject, head-object) node pairs.
struct ConfidenceReport {
    std::size_t support = 0;         // pairs satisfying body and head
    std::size_t body_count = 0;      // pairs satisfying the body
    std::size_t pca_body_count = 0;  // body pairs whose subject has some head-relation edge
    double std_conf = 0.0;           // support / body_count (0 when empty)
    double pca_conf = 0.0;           // support / pca_body_count (0 when empty)
};

// A head edge absent from the graph but implied by a rule.
struct Prediction {
    std::string subject;
    std::string object;
    std::string rule;
    double std_conf = 0.0;
    double pca_conf = 0.0;
};

// Grammar: [name:] (v)-[rel]->(v) { -[rel]->(v) | <-[rel]-(v) } => head-segment
// Throws RuleParseError on syntax errors, unsafe heads, or bodies of length
// 0 or more than 4.
AssociationRule parse_rule(const std::string& text);

// One rule per line, '#' comments and blank lines skipped.
std::vector<AssociationRule> load_rules(std::istream& source);

ConfidenceReport evaluate_confidence(const PropertyGraph& graph, const AssociationRule& rule);

// Applies the rule with its head subject pinned to `subject`; yields one
// prediction per implied head object whose edge is missing from the graph,
// sorted by object node id. The rule's graph-wide confidences are attached.
std::vector<Prediction> predict(const PropertyGraph& graph, const AssociationRule& rule,
                                const std::string& subject, const std::string& relation);

struct MineParams {
    std::size_t max_body = 2;  // 1..4
    std::size_t min_support = 1;
    double min_std_conf = 0.0;
    double min_pca_conf = 0.0;
};

struct MinedRule {
    AssociationRule rule;
    ConfidenceReport report;
};

// Level-wise enumeration of connected path bodies over the relations present
// in the graph, each paired with every safe head anchoring (tautological
// heads that restate a body atom are skipped). Bodies without any match are
// not extended to the next level.
// Output sorted by (pca_conf desc, std_conf desc, rule text asc).
std::vector<MinedRule> mine(const PropertyGraph& graph, const MineParams& params);

}  // namespace kgqa
