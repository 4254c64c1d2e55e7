#pragma once

#include <istream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

namespace kgqa {

enum class PatternClass { I, II, III };

std::string to_string(PatternClass c);

// One slot template, e.g. "Who did (*p) marry?" with target isMarriedTo.
// Class I templates carry a relation target, class II a property key,
// class III no target at all (two slots, the relation is the answer).
struct QuestionTemplate {
    PatternClass pattern_class = PatternClass::I;
    std::string surface;
    std::string target;

    // Fills the slots with raw (spaced) strings; used by round-trip tests.
    std::string instantiate(const std::string& filler1, const std::string& filler2 = "") const;
};

// The classified question (one of the three pattern classes). Exactly the
// fields for the class are populated: I -> (v1, rel); II -> (v1, prop);
// III -> (v1, v2).
struct ParsedQuestion {
    PatternClass pattern_class = PatternClass::I;
    std::string v1;
    std::optional<std::string> v2;
    std::optional<std::string> rel;
    std::optional<std::string> prop;
};

class TemplateRegistry {
public:
    void add(QuestionTemplate tmpl);  // throws TemplateError(0, ...) on bad template
    const std::vector<QuestionTemplate>& templates() const { return templates_; }
    std::size_t size() const { return templates_.size(); }

    // First template in file order whose surface matches wins. Fixed text is
    // matched case-insensitively; slot captures keep their case and get
    // internal spaces replaced with underscores. Throws NoTemplateMatch.
    ParsedQuestion classify(const std::string& question) const;

private:
    struct Compiled {
        std::regex regex;
        // For each capture group, true when it is the (*p1) slot.
        std::vector<bool> group_is_p1;
    };

    std::vector<QuestionTemplate> templates_;
    std::vector<Compiled> compiled_;
};

// Lines of the form class|surface|target, '#' comments and blank lines
// skipped. Throws TemplateError with the offending line number.
TemplateRegistry load_templates(std::istream& source);

}  // namespace kgqa
