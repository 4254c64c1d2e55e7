#include "kgqa/templates.hpp"

#include <algorithm>
#include <cctype>

#include "kgqa/errors.hpp"

namespace kgqa {

std::string to_string(PatternClass c) {
    switch (c) {
        case PatternClass::I: return "I";
        case PatternClass::II: return "II";
        case PatternClass::III: return "III";
    }
    return "?";
}

namespace {

constexpr std::string_view kSlotP = "(*p)";
constexpr std::string_view kSlotP1 = "(*p1)";

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t");
    auto end = s.find_last_not_of(" \t");
    if (begin == std::string::npos) return "";
    return s.substr(begin, end - begin + 1);
}

// Trailing '?' is optional on both template and question.
std::string normalize(const std::string& s) {
    std::string out = trim(s);
    while (!out.empty() && (out.back() == '?' || out.back() == ' ' || out.back() == '\t')) {
        out.pop_back();
    }
    return out;
}

std::string regex_escape(const std::string& s) {
    static const std::string special = R"(\^$.|?*+()[]{})";
    std::string out;
    for (char c : s) {
        if (special.find(c) != std::string::npos) out += '\\';
        out += c;
    }
    return out;
}

// Splits a surface into fixed text and slot markers.
struct SurfacePart {
    std::string fixed;  // empty for slots
    bool is_slot = false;
    bool is_p1 = false;
};

std::vector<SurfacePart> split_surface(const std::string& surface) {
    std::vector<SurfacePart> parts;
    std::size_t pos = 0;
    while (pos < surface.size()) {
        std::size_t p = surface.find("(*p", pos);
        if (p == std::string::npos) {
            parts.push_back({surface.substr(pos), false, false});
            break;
        }
        bool p1 = surface.compare(p, kSlotP1.size(), kSlotP1) == 0;
        bool plain = !p1 && surface.compare(p, kSlotP.size(), kSlotP) == 0;
        if (!p1 && !plain) {
            // "(*p..." that is neither slot: treat as fixed text.
            parts.push_back({surface.substr(pos, p + 3 - pos), false, false});
            pos = p + 3;
            continue;
        }
        if (p > pos) parts.push_back({surface.substr(pos, p - pos), false, false});
        parts.push_back({"", true, p1});
        pos = p + (p1 ? kSlotP1.size() : kSlotP.size());
    }
    return parts;
}

std::string underscore(const std::string& s) {
    std::string out = trim(s);
    std::replace(out.begin(), out.end(), ' ', '_');
    return out;
}

}  // namespace

std::string QuestionTemplate::instantiate(const std::string& filler1,
                                          const std::string& filler2) const {
    std::string out = surface;
    auto p1 = out.find(kSlotP1);
    if (p1 != std::string::npos) out.replace(p1, kSlotP1.size(), filler2);
    auto p = out.find(kSlotP);
    if (p != std::string::npos) out.replace(p, kSlotP.size(), filler1);
    return out;
}

void TemplateRegistry::add(QuestionTemplate tmpl) {
    std::size_t slots_p = 0;
    std::size_t slots_p1 = 0;
    for (const auto& part : split_surface(tmpl.surface)) {
        if (!part.is_slot) continue;
        if (part.is_p1) ++slots_p1; else ++slots_p;
    }
    if (tmpl.pattern_class == PatternClass::III) {
        if (slots_p != 1 || slots_p1 != 1) {
            throw TemplateError(0, "class III template needs one (*p) and one (*p1) slot");
        }
        if (!tmpl.target.empty()) {
            throw TemplateError(0, "class III template takes no target");
        }
    } else {
        if (slots_p != 1 || slots_p1 != 0) {
            throw TemplateError(0, "class I/II template needs exactly one (*p) slot");
        }
        if (tmpl.target.empty()) {
            throw TemplateError(0, "class I/II template needs a target");
        }
    }
    for (const auto& existing : templates_) {
        if (existing.surface == tmpl.surface) {
            throw TemplateError(0, "duplicate template surface: " + tmpl.surface);
        }
    }

    Compiled compiled;
    std::string pattern = "^";
    for (const auto& part : split_surface(normalize(tmpl.surface))) {
        if (part.is_slot) {
            pattern += "(.+)";
            compiled.group_is_p1.push_back(part.is_p1);
        } else {
            pattern += regex_escape(part.fixed);
        }
    }
    pattern += "$";
    compiled.regex = std::regex(pattern, std::regex::icase);

    templates_.push_back(std::move(tmpl));
    compiled_.push_back(std::move(compiled));
}

ParsedQuestion TemplateRegistry::classify(const std::string& question) const {
    std::string normalized = normalize(question);
    for (std::size_t i = 0; i < templates_.size(); ++i) {
        std::smatch match;
        if (!std::regex_match(normalized, match, compiled_[i].regex)) continue;

        std::string v1, v2;
        bool empty_slot = false;
        for (std::size_t g = 0; g < compiled_[i].group_is_p1.size(); ++g) {
            std::string value = underscore(match[g + 1].str());
            if (value.empty()) {
                empty_slot = true;
                break;
            }
            (compiled_[i].group_is_p1[g] ? v2 : v1) = value;
        }
        if (empty_slot) continue;

        const QuestionTemplate& tmpl = templates_[i];
        ParsedQuestion parsed;
        parsed.pattern_class = tmpl.pattern_class;
        parsed.v1 = v1;
        switch (tmpl.pattern_class) {
            case PatternClass::I: parsed.rel = tmpl.target; break;
            case PatternClass::II: parsed.prop = tmpl.target; break;
            case PatternClass::III: parsed.v2 = v2; break;
        }
        return parsed;
    }
    throw NoTemplateMatch(question);
}

TemplateRegistry load_templates(std::istream& source) {
    TemplateRegistry registry;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(source, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty() || line.front() == '#') continue;

        auto first = line.find('|');
        auto second = first == std::string::npos ? std::string::npos : line.find('|', first + 1);
        if (first == std::string::npos || second == std::string::npos) {
            throw TemplateError(line_no, "expected class|surface|target");
        }
        std::string class_str = trim(line.substr(0, first));
        QuestionTemplate tmpl;
        if (class_str == "I") tmpl.pattern_class = PatternClass::I;
        else if (class_str == "II") tmpl.pattern_class = PatternClass::II;
        else if (class_str == "III") tmpl.pattern_class = PatternClass::III;
        else throw TemplateError(line_no, "unknown pattern class: " + class_str);
        tmpl.surface = trim(line.substr(first + 1, second - first - 1));
        tmpl.target = trim(line.substr(second + 1));
        try {
            registry.add(std::move(tmpl));
        } catch (const TemplateError& e) {
            std::string what = e.what();
            if (what.rfind("line 0: ", 0) == 0) what = what.substr(8);
            throw TemplateError(line_no, what);
        }
    }
    return registry;
}

}  // namespace kgqa
