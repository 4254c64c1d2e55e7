#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kgqa/graph.hpp"
#include "kgqa/planner.hpp"
#include "kgqa/rules.hpp"
#include "kgqa/templates.hpp"

namespace kgqa {

struct AnswerOptions {
    bool use_rules = false;
    double min_std_conf = 0.5;
    double min_pca_conf = 0.5;
};

enum class AnswerStatus { Direct, Inferred, NoAnswer };

std::string to_string(AnswerStatus s);

struct AnswerValue {
    std::string value;
    std::optional<Prediction> provenance;        // set for inferred values
    std::optional<Direction> direction;          // set for class III relation hits
};

struct Answer {
    AnswerStatus status = AnswerStatus::NoAnswer;
    std::vector<AnswerValue> values;
    PatternClass question_class = PatternClass::I;
};

// Relation/property keyed sentence templates with <subject>, <object> and
// <value> placeholders. Missing keys fall back to "<subject> <relation>
// <object>".
class SentenceTemplates {
public:
    SentenceTemplates();  // ships with templates for the common YAGO relations
    void set(const std::string& key, const std::string& sentence);
    std::optional<std::string> get(const std::string& key) const;

private:
    std::map<std::string, std::string> templates_;
};

// Lines of the form key|sentence, '#' comments allowed; merged over defaults.
SentenceTemplates load_sentence_templates(std::istream& source);

// Runs the full pipeline: classify, plan, execute, and for class I questions
// with an empty direct result fall back to rule predictions (use_rules on),
// keeping only predictions whose confidences meet both thresholds.
// Throws NoTemplateMatch when the question matches no template.
Answer answer(const PropertyGraph& graph, const TemplateRegistry& registry,
              const std::vector<AssociationRule>& rules, const std::string& question,
              const AnswerOptions& options);

// Same, for an already classified question.
Answer answer_parsed(const PropertyGraph& graph, const std::vector<AssociationRule>& rules,
                     const ParsedQuestion& parsed, const AnswerOptions& options);

// Renders the answer as natural-language sentences, one per value, joined
// with newlines. Underscored entity names are shown with spaces.
std::string format_answer(const Answer& a, const ParsedQuestion& parsed,
                          const SentenceTemplates& sentences = SentenceTemplates());

}  // namespace kgqa
