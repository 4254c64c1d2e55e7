#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kgqa {

// Error raised while ingesting a triple file; carries the 1-based line number.
class IngestError : public std::runtime_error {
public:
    IngestError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Error raised while loading a question-template file.
class TemplateError : public std::runtime_error {
public:
    TemplateError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A question matched no registered template. Distinct from "no answer":
// the question is rejected before any query runs.
class NoTemplateMatch : public std::runtime_error {
public:
    explicit NoTemplateMatch(const std::string& question)
        : std::runtime_error("question matches no template: " + question) {}
};

class RuleParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PlannerError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace kgqa
