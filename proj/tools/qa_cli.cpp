// Command-line front end: load a triple file, question templates, and rules,
// then answer questions (one-shot or REPL), report rule confidences, or mine
// rules from the graph.
//
// Exit codes: 0 success (including "no answer"), 1 config/parse errors,
// 2 question matched no template.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kgqa/errors.hpp"
#include "kgqa/graph.hpp"
#include "kgqa/pipeline.hpp"
#include "kgqa/rules.hpp"
#include "kgqa/templates.hpp"

namespace {

using nlohmann::json;

struct Config {
    std::string graph_path;
    std::string templates_path;
    std::string rules_path;
    std::string sentences_path;
    bool use_rules = false;
    double min_std_conf = 0.5;
    double min_pca_conf = 0.5;
    std::string output = "text";
};

std::ifstream open_or_throw(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(std::string("cannot open ") + what + " file: " + path);
    return in;
}

std::string format_conf(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    return buf;
}

json value_to_json(const kgqa::AnswerValue& value) {
    json v;
    v["value"] = value.value;
    if (value.provenance) {
        v["rule"] = value.provenance->rule;
        v["std_conf"] = value.provenance->std_conf;
        v["pca_conf"] = value.provenance->pca_conf;
    }
    if (value.direction) {
        v["direction"] = *value.direction == kgqa::Direction::Forward ? "forward" : "backward";
    }
    return v;
}

void print_answer(const Config& config, const kgqa::Answer& answer,
                  const kgqa::ParsedQuestion& parsed, const kgqa::SentenceTemplates& sentences) {
    std::string text = kgqa::format_answer(answer, parsed, sentences);
    if (config.output == "json") {
        json out;
        out["status"] = kgqa::to_string(answer.status);
        out["question_class"] = kgqa::to_string(answer.question_class);
        out["values"] = json::array();
        for (const auto& value : answer.values) out["values"].push_back(value_to_json(value));
        out["text"] = text;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << text << "\n";
    }
}

struct Engine {
    kgqa::PropertyGraph graph;
    kgqa::TemplateRegistry registry;
    std::vector<kgqa::AssociationRule> rules;
    kgqa::SentenceTemplates sentences;
};

Engine load_engine(const Config& config, bool need_templates, bool need_rules) {
    Engine engine;
    if (config.graph_path.empty()) throw std::runtime_error("--graph is required");
    auto graph_in = open_or_throw(config.graph_path, "graph");
    engine.graph = kgqa::load_triples(graph_in);

    if (need_templates) {
        if (config.templates_path.empty()) throw std::runtime_error("--templates is required");
        auto templates_in = open_or_throw(config.templates_path, "templates");
        engine.registry = kgqa::load_templates(templates_in);
    }
    if (need_rules || !config.rules_path.empty()) {
        if (config.rules_path.empty()) throw std::runtime_error("--rules is required");
        auto rules_in = open_or_throw(config.rules_path, "rules");
        engine.rules = kgqa::load_rules(rules_in);
    }
    if (!config.sentences_path.empty()) {
        auto sentences_in = open_or_throw(config.sentences_path, "sentences");
        engine.sentences = kgqa::load_sentence_templates(sentences_in);
    }
    return engine;
}

// Returns the exit code for one question.
int handle_question(const Config& config, const Engine& engine, const std::string& question,
                    bool repl_mode) {
    kgqa::AnswerOptions options{config.use_rules, config.min_std_conf, config.min_pca_conf};
    try {
        kgqa::ParsedQuestion parsed = engine.registry.classify(question);
        kgqa::Answer answer = kgqa::answer_parsed(engine.graph, engine.rules, parsed, options);
        print_answer(config, answer, parsed, engine.sentences);
        return 0;
    } catch (const kgqa::NoTemplateMatch&) {
        if (repl_mode) {
            std::cout << "error: question matches no template\n";
            return 0;
        }
        std::cerr << "error: question matches no template\n";
        return 2;
    }
}

int run_confidence(const Config& config, const std::string& name_filter) {
    Engine engine = load_engine(config, false, true);
    json out = json::array();
    for (const auto& rule : engine.rules) {
        if (!name_filter.empty() && rule.name != name_filter) continue;
        auto report = kgqa::evaluate_confidence(engine.graph, rule);
        if (config.output == "json") {
            json r;
            r["rule"] = rule.name;
            r["text"] = rule.text();
            r["support"] = report.support;
            r["body_count"] = report.body_count;
            r["pca_body_count"] = report.pca_body_count;
            r["std_conf"] = report.std_conf;
            r["pca_conf"] = report.pca_conf;
            out.push_back(r);
        } else {
            std::cout << (rule.name.empty() ? rule.text() : rule.name) << ": support="
                      << report.support << " body_count=" << report.body_count
                      << " pca_body_count=" << report.pca_body_count
                      << " std_conf=" << format_conf(report.std_conf)
                      << " pca_conf=" << format_conf(report.pca_conf) << "\n";
        }
    }
    if (config.output == "json") std::cout << out.dump() << "\n";
    return 0;
}

int run_mine(const Config& config, const kgqa::MineParams& params) {
    Engine engine = load_engine(config, false, false);
    auto mined = kgqa::mine(engine.graph, params);
    if (config.output == "json") {
        json out = json::array();
        for (const auto& m : mined) {
            json r;
            r["text"] = m.rule.text();
            r["support"] = m.report.support;
            r["body_count"] = m.report.body_count;
            r["pca_body_count"] = m.report.pca_body_count;
            r["std_conf"] = m.report.std_conf;
            r["pca_conf"] = m.report.pca_conf;
            out.push_back(r);
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& m : mined) {
            std::cout << m.rule.text() << " support=" << m.report.support
                      << " std_conf=" << format_conf(m.report.std_conf)
                      << " pca_conf=" << format_conf(m.report.pca_conf) << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Knowledge-graph question answering with association-rule inference"};
    app.require_subcommand(1);

    Config config;
    app.add_option("-g,--graph", config.graph_path, "Triple file (subject<TAB>predicate<TAB>object)");
    app.add_option("-t,--templates", config.templates_path, "Question template file");
    app.add_option("-r,--rules", config.rules_path, "Association rule file");
    app.add_option("--sentences", config.sentences_path, "Sentence template file");
    app.add_flag("--use-rules", config.use_rules, "Fall back to rule predictions for class I");
    app.add_option("--min-std-conf", config.min_std_conf, "Standard confidence threshold")
        ->check(CLI::Range(0.0, 1.0));
    app.add_option("--min-pca-conf", config.min_pca_conf, "PCA confidence threshold")
        ->check(CLI::Range(0.0, 1.0));
    app.add_option("-o,--output", config.output, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string question;
    auto* ask = app.add_subcommand("ask", "Answer a single question");
    ask->add_option("question", question, "The question to answer")->required();

    auto* repl = app.add_subcommand("repl", "Answer questions line by line until end of input");

    std::string name_filter;
    auto* confidence = app.add_subcommand("confidence", "Print confidence reports for the rules");
    confidence->add_option("name", name_filter, "Only the rule with this name");

    kgqa::MineParams mine_params;
    auto* mine_cmd = app.add_subcommand("mine", "Mine association rules from the graph");
    mine_cmd->add_option("--max-body", mine_params.max_body, "Maximum body atoms (1-4)")
        ->check(CLI::Range(1, 4));
    mine_cmd->add_option("--min-support", mine_params.min_support, "Minimum rule support");
    mine_cmd->add_option("--min-std-conf", mine_params.min_std_conf,
                         "Minimum standard confidence")
        ->check(CLI::Range(0.0, 1.0));
    mine_cmd->add_option("--min-pca-conf", mine_params.min_pca_conf, "Minimum PCA confidence")
        ->check(CLI::Range(0.0, 1.0));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*ask) {
            Engine engine = load_engine(config, true, config.use_rules);
            return handle_question(config, engine, question, false);
        }
        if (*repl) {
            Engine engine = load_engine(config, true, config.use_rules);
            std::string line;
            while (std::getline(std::cin, line)) {
                if (line.empty()) continue;
                handle_question(config, engine, line, true);
            }
            return 0;
        }
        if (*confidence) return run_confidence(config, name_filter);
        if (*mine_cmd) return run_mine(config, mine_params);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
