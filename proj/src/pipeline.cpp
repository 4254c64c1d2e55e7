#include "kgqa/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "kgqa/errors.hpp"

namespace kgqa {

std::string to_string(AnswerStatus s) {
    switch (s) {
        case AnswerStatus::Direct: return "direct";
        case AnswerStatus::Inferred: return "inferred";
        case AnswerStatus::NoAnswer: return "no_answer";
    }
    return "?";
}

SentenceTemplates::SentenceTemplates() {
    templates_ = {
        {"isMarriedTo", "<subject> is married to <object>"},
        {"hasChild", "<subject> has child <object>"},
        {"actedIn", "<subject> acted in <object>"},
        {"directed", "<subject> directed <object>"},
        {"diedIn", "<subject> died in <object>"},
        {"wasBornIn", "<subject> was born in <object>"},
        {"diedOnDate", "<subject> died on <value>"},
        {"wasBornOnDate", "<subject> was born on <value>"},
    };
}

void SentenceTemplates::set(const std::string& key, const std::string& sentence) {
    templates_[key] = sentence;
}

std::optional<std::string> SentenceTemplates::get(const std::string& key) const {
    auto it = templates_.find(key);
    if (it == templates_.end()) return std::nullopt;
    return it->second;
}

SentenceTemplates load_sentence_templates(std::istream& source) {
    SentenceTemplates sentences;
    std::string line;
    while (std::getline(source, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        auto sep = line.find('|');
        if (sep == std::string::npos) continue;
        sentences.set(line.substr(0, sep), line.substr(sep + 1));
    }
    return sentences;
}

Answer answer(const PropertyGraph& graph, const TemplateRegistry& registry,
              const std::vector<AssociationRule>& rules, const std::string& question,
              const AnswerOptions& options) {
    ParsedQuestion parsed = registry.classify(question);  // throws NoTemplateMatch
    return answer_parsed(graph, rules, parsed, options);
}

Answer answer_parsed(const PropertyGraph& graph, const std::vector<AssociationRule>& rules,
                     const ParsedQuestion& parsed, const AnswerOptions& options) {
    Answer result;
    result.question_class = parsed.pattern_class;

    QueryResult direct = execute(graph, to_query(to_graph_component(parsed)));
    switch (parsed.pattern_class) {
        case PatternClass::I:
            for (const std::string& object : direct.objects) {
                result.values.push_back(AnswerValue{object, std::nullopt, std::nullopt});
            }
            break;
        case PatternClass::II:
            if (direct.literal) {
                result.values.push_back(AnswerValue{*direct.literal, std::nullopt, std::nullopt});
            }
            break;
        case PatternClass::III:
            for (const RelationHit& hit : direct.relations) {
                result.values.push_back(AnswerValue{hit.relation, std::nullopt, hit.direction});
            }
            break;
    }
    if (!result.values.empty()) {
        result.status = AnswerStatus::Direct;
        return result;
    }

    // Pattern-I fallback: try rules with a matching head relation, highest
    // PCA confidence first.
    if (parsed.pattern_class == PatternClass::I && options.use_rules) {
        struct Scored {
            const AssociationRule* rule;
            ConfidenceReport report;
        };
        std::vector<Scored> scored;
        for (const AssociationRule& rule : rules) {
            if (rule.head.relation != *parsed.rel) continue;
            scored.push_back(Scored{&rule, evaluate_confidence(graph, rule)});
        }
        std::stable_sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
            if (a.report.pca_conf != b.report.pca_conf) {
                return a.report.pca_conf > b.report.pca_conf;
            }
            if (a.report.std_conf != b.report.std_conf) {
                return a.report.std_conf > b.report.std_conf;
            }
            return a.rule->text() < b.rule->text();
        });

        std::set<std::string> seen;
        for (const Scored& s : scored) {
            if (s.report.std_conf < options.min_std_conf ||
                s.report.pca_conf < options.min_pca_conf) {
                continue;
            }
            for (Prediction& p : predict(graph, *s.rule, parsed.v1, *parsed.rel)) {
                if (!seen.insert(p.object).second) continue;
                std::string object = p.object;
                result.values.push_back(AnswerValue{object, std::move(p), std::nullopt});
            }
        }
        if (!result.values.empty()) {
            result.status = AnswerStatus::Inferred;
            return result;
        }
    }

    result.status = AnswerStatus::NoAnswer;
    return result;
}

namespace {

std::string display(const std::string& name) {
    std::string out = name;
    std::replace(out.begin(), out.end(), '_', ' ');
    return out;
}

void substitute(std::string& sentence, std::string_view placeholder, const std::string& value) {
    auto pos = sentence.find(placeholder);
    if (pos != std::string::npos) sentence.replace(pos, placeholder.size(), value);
}

std::string render(const SentenceTemplates& sentences, const std::string& key,
                   const std::string& subject, const std::string& object_or_value,
                   bool is_literal) {
    std::string sentence =
        sentences.get(key).value_or(is_literal ? "<subject> " + key + " <value>"
                                               : "<subject> " + key + " <object>");
    substitute(sentence, "<subject>", display(subject));
    substitute(sentence, "<object>", display(object_or_value));
    substitute(sentence, "<value>", object_or_value);  // literals rendered verbatim
    return sentence;
}

std::string format_confidence(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    return buf;
}

}  // namespace

std::string format_answer(const Answer& a, const ParsedQuestion& parsed,
                          const SentenceTemplates& sentences) {
    if (a.status == AnswerStatus::NoAnswer) return "no answer";

    std::vector<std::string> lines;
    for (const AnswerValue& value : a.values) {
        std::string line;
        switch (a.question_class) {
            case PatternClass::I:
                line = render(sentences, *parsed.rel, parsed.v1, value.value, false);
                if (value.provenance) {
                    line += " (inferred by rule " + value.provenance->rule +
                            ", PCA confidence " + format_confidence(value.provenance->pca_conf) +
                            ")";
                }
                break;
            case PatternClass::II:
                line = render(sentences, *parsed.prop, parsed.v1, value.value, true);
                break;
            case PatternClass::III: {
                bool reversed = value.direction == Direction::Backward;
                const std::string& subject = reversed ? *parsed.v2 : parsed.v1;
                const std::string& object = reversed ? parsed.v1 : *parsed.v2;
                line = render(sentences, value.value, subject, object, false);
                break;
            }
        }
        lines.push_back(std::move(line));
    }

    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) out += '\n';
        out += lines[i];
    }
    return out;
}

}  // namespace kgqa
