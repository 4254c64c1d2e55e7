#include "kgqa/rules.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "kgqa/errors.hpp"

namespace kgqa {

std::string AssociationRule::text() const {
    return body.text() + " => (" + head.from + ")-[" + head.relation + "]->(" + head.to + ")";
}

namespace {

// Hand-rolled scanner for the rule grammar.
struct RuleScanner {
    const std::string& input;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < input.size() && std::isspace(static_cast<unsigned char>(input[pos]))) ++pos;
    }

    bool accept(std::string_view token) {
        skip_ws();
        if (input.compare(pos, token.size(), token) == 0) {
            pos += token.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view token) {
        if (!accept(token)) {
            throw RuleParseError("expected '" + std::string(token) + "' at position " +
                                 std::to_string(pos) + " in rule: " + input);
        }
    }

    std::string until(char delim) {
        std::string out;
        while (pos < input.size() && input[pos] != delim) out += input[pos++];
        if (pos == input.size()) {
            throw RuleParseError("unterminated token, expected '" + std::string(1, delim) +
                                 "' in rule: " + input);
        }
        std::string trimmed = out;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
            trimmed.pop_back();
        }
        std::size_t start = 0;
        while (start < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[start]))) {
            ++start;
        }
        trimmed = trimmed.substr(start);
        if (trimmed.empty()) throw RuleParseError("empty name in rule: " + input);
        return trimmed;
    }

    std::string variable() {
        expect("(");
        std::string var = until(')');
        expect(")");
        return var;
    }

    bool at_end() {
        skip_ws();
        return pos == input.size();
    }
};

// Parses one "-[rel]->(v)" or "<-[rel]-(v)" step; returns false at chain end.
bool parse_step(RuleScanner& scanner, std::string& relation, std::string& var, Direction& dir) {
    scanner.skip_ws();
    if (scanner.accept("<-[")) {
        relation = scanner.until(']');
        scanner.expect("]");
        scanner.expect("-");
        var = scanner.variable();
        dir = Direction::Backward;
        return true;
    }
    if (scanner.accept("-[")) {
        relation = scanner.until(']');
        scanner.expect("]");
        scanner.expect("->");
        var = scanner.variable();
        dir = Direction::Forward;
        return true;
    }
    return false;
}

std::vector<EdgeAtom> parse_chain(RuleScanner& scanner) {
    std::vector<EdgeAtom> atoms;
    std::string prev = scanner.variable();
    std::string relation, var;
    Direction dir;
    while (parse_step(scanner, relation, var, dir)) {
        atoms.push_back(EdgeAtom{prev, relation, var, dir});
        prev = var;
    }
    if (atoms.empty()) throw RuleParseError("empty atom chain in rule: " + scanner.input);
    return atoms;
}

}  // namespace

AssociationRule parse_rule(const std::string& text) {
    std::string name;
    std::string rule_text = text;
    auto paren = text.find('(');
    auto colon = text.find(':');
    if (colon != std::string::npos && (paren == std::string::npos || colon < paren)) {
        name = text.substr(0, colon);
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) {
            name.pop_back();
        }
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) {
            name.erase(name.begin());
        }
        rule_text = text.substr(colon + 1);
    }

    RuleScanner scanner{rule_text};
    std::vector<EdgeAtom> body_atoms = parse_chain(scanner);
    scanner.expect("=>");
    std::vector<EdgeAtom> head_atoms = parse_chain(scanner);
    if (head_atoms.size() != 1) {
        throw RuleParseError("rule head must be a single edge atom: " + text);
    }
    if (!scanner.at_end()) {
        throw RuleParseError("trailing input after rule head: " + text);
    }

    if (body_atoms.size() > 4) {
        throw RuleParseError("rule body exceeds 4 atoms: " + text);
    }
    PathPattern body = [&] {
        try {
            return PathPattern(std::move(body_atoms));
        } catch (const std::invalid_argument& e) {
            throw RuleParseError(std::string(e.what()) + " in rule: " + text);
        }
    }();

    // Normalize the head so head.from is the edge source.
    EdgeAtom head = head_atoms.front();
    if (head.direction == Direction::Backward) {
        std::swap(head.from, head.to);
        head.direction = Direction::Forward;
    }
    if (!body.has_variable(head.from) || !body.has_variable(head.to)) {
        throw RuleParseError("head variables must occur in the body: " + text);
    }
    if (head.from == head.to) {
        throw RuleParseError("head variables must be distinct: " + text);
    }
    return AssociationRule{std::move(body), std::move(head), std::move(name)};
}

std::vector<AssociationRule> load_rules(std::istream& source) {
    std::vector<AssociationRule> rules;
    std::string line;
    while (std::getline(source, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos || line[begin] == '#') continue;
        rules.push_back(parse_rule(line));
    }
    return rules;
}

namespace {

struct PairCounts {
    std::size_t support = 0;
    std::size_t body_count = 0;
    std::size_t pca_body_count = 0;
};

ConfidenceReport to_report(const PairCounts& counts) {
    ConfidenceReport report;
    report.support = counts.support;
    report.body_count = counts.body_count;
    report.pca_body_count = counts.pca_body_count;
    report.std_conf =
        counts.body_count == 0 ? 0.0 : static_cast<double>(counts.support) / counts.body_count;
    report.pca_conf = counts.pca_body_count == 0
                          ? 0.0
                          : static_cast<double>(counts.support) / counts.pca_body_count;
    return report;
}

PairCounts count_pairs(const PropertyGraph& graph, const std::vector<Binding>& bindings,
                       std::size_t subject_idx, std::size_t object_idx,
                       const std::string& head_relation) {
    std::set<std::pair<NodeId, NodeId>> pairs;
    for (const Binding& b : bindings) pairs.insert({b[subject_idx], b[object_idx]});

    PairCounts counts;
    counts.body_count = pairs.size();
    auto rel = graph.relation_id(head_relation);
    for (const auto& [u, w] : pairs) {
        if (!rel) continue;
        if (graph.has_edge(u, *rel, w)) ++counts.support;
        if (!graph.out_neighbors(u, *rel).empty()) ++counts.pca_body_count;
    }
    return counts;
}

}  // namespace

ConfidenceReport evaluate_confidence(const PropertyGraph& graph, const AssociationRule& rule) {
    auto bindings = match_pattern(graph, rule.body);
    auto counts = count_pairs(graph, bindings, rule.body.variable_index(rule.head.from),
                              rule.body.variable_index(rule.head.to), rule.head.relation);
    return to_report(counts);
}

std::vector<Prediction> predict(const PropertyGraph& graph, const AssociationRule& rule,
                                const std::string& subject, const std::string& relation) {
    if (rule.head.relation != relation) {
        throw std::invalid_argument("rule head relation '" + rule.head.relation +
                                    "' does not match requested relation '" + relation + "'");
    }
    auto subject_id = graph.node_by_name(subject);
    if (!subject_id) return {};

    auto bindings = match_pattern(graph, rule.body, {{rule.head.from, *subject_id}});
    std::size_t object_idx = rule.body.variable_index(rule.head.to);
    std::set<NodeId> objects;
    for (const Binding& b : bindings) objects.insert(b[object_idx]);

    ConfidenceReport report = evaluate_confidence(graph, rule);
    std::vector<Prediction> predictions;
    for (NodeId object : objects) {
        if (graph.has_edge(*subject_id, relation, object)) continue;
        predictions.push_back(Prediction{subject, graph.node(object).name,
                                         rule.name.empty() ? rule.text() : rule.name,
                                         report.std_conf, report.pca_conf});
    }
    return predictions;
}

namespace {

// A mined body: the (relation, direction) sequence along the path.
using BodySeq = std::vector<std::pair<std::string, Direction>>;

BodySeq reversed_flipped(const BodySeq& body) {
    BodySeq out(body.rbegin(), body.rend());
    for (auto& [rel, dir] : out) {
        dir = dir == Direction::Forward ? Direction::Backward : Direction::Forward;
    }
    return out;
}

BodySeq canonical(const BodySeq& body) {
    BodySeq flipped = reversed_flipped(body);
    return std::min(body, flipped);
}

PathPattern to_pattern(const BodySeq& body) {
    static const std::vector<std::string> var_names = {"a", "b", "c", "d", "e"};
    std::vector<EdgeAtom> atoms;
    for (std::size_t i = 0; i < body.size(); ++i) {
        atoms.push_back(EdgeAtom{var_names[i], body[i].first, var_names[i + 1], body[i].second});
    }
    return PathPattern(std::move(atoms));
}

}  // namespace

std::vector<MinedRule> mine(const PropertyGraph& graph, const MineParams& params) {
    if (params.max_body < 1 || params.max_body > 4) {
        throw std::invalid_argument("max_body must be between 1 and 4");
    }

    std::vector<std::string> relations = graph.relations();
    std::vector<MinedRule> mined;

    std::set<BodySeq> level;
    for (const std::string& rel : relations) {
        level.insert(canonical({{rel, Direction::Forward}}));
    }

    for (std::size_t depth = 1; depth <= params.max_body && !level.empty(); ++depth) {
        std::set<BodySeq> next_level;
        for (const BodySeq& body_seq : level) {
            PathPattern body = to_pattern(body_seq);
            auto bindings = match_pattern(graph, body);
            // A body with no matches cannot support any rule, nor can any of
            // its extensions (their bindings project onto this body's).
            if (bindings.empty()) continue;

            bool palindrome = body_seq == reversed_flipped(body_seq);
            std::size_t var_count = body.variables().size();
            for (std::size_t i = 0; i < var_count; ++i) {
                for (std::size_t j = 0; j < var_count; ++j) {
                    if (i == j) continue;
                    if (palindrome) {
                        // The reversal automorphism maps anchoring (i, j) to
                        // the mirrored pair; keep only the smaller of the two.
                        std::pair<std::size_t, std::size_t> mirrored{var_count - 1 - i,
                                                                     var_count - 1 - j};
                        if (mirrored < std::pair<std::size_t, std::size_t>{i, j}) continue;
                    }
                    for (const std::string& head_rel : relations) {
                        // Skip tautologies: a head that restates a body atom
                        // can never predict a missing fact.
                        bool tautology = false;
                        for (std::size_t t = 0; t < body_seq.size(); ++t) {
                            if (body_seq[t].first != head_rel) continue;
                            bool fwd = body_seq[t].second == Direction::Forward;
                            if ((fwd && i == t && j == t + 1) ||
                                (!fwd && i == t + 1 && j == t)) {
                                tautology = true;
                                break;
                            }
                        }
                        if (tautology) continue;
                        auto counts = count_pairs(graph, bindings, i, j, head_rel);
                        if (counts.body_count == 0 || counts.support < params.min_support) {
                            continue;
                        }
                        ConfidenceReport report = to_report(counts);
                        if (report.std_conf < params.min_std_conf ||
                            report.pca_conf < params.min_pca_conf) {
                            continue;
                        }
                        AssociationRule rule{to_pattern(body_seq),
                                             EdgeAtom{body.variables()[i], head_rel,
                                                      body.variables()[j], Direction::Forward},
                                             ""};
                        mined.push_back(MinedRule{std::move(rule), report});
                    }
                }
            }

            if (depth < params.max_body) {
                for (const std::string& rel : relations) {
                    for (Direction dir : {Direction::Forward, Direction::Backward}) {
                        BodySeq extended = body_seq;
                        extended.emplace_back(rel, dir);
                        next_level.insert(canonical(extended));
                    }
                }
            }
        }
        level = std::move(next_level);
    }

    std::stable_sort(mined.begin(), mined.end(), [](const MinedRule& a, const MinedRule& b) {
        if (a.report.pca_conf != b.report.pca_conf) return a.report.pca_conf > b.report.pca_conf;
        if (a.report.std_conf != b.report.std_conf) return a.report.std_conf > b.report.std_conf;
        return a.rule.text() < b.rule.text();
    });
    return mined;
}

}  // namespace kgqa
