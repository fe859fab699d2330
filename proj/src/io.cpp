#include "walkmetric/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "walkmetric/errors.hpp"

namespace walkmetric {

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.emplace_back(line.substr(start, i - start));
    }
    return tokens;
}

// Yields (line_number, content) with comments stripped and blanks skipped.
template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t pos = 0;
    std::size_t line_number = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        const bool last = end == text.size();
        pos = end + 1;
        ++line_number;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) fn(line_number, line);
        if (last) break;
    }
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

WalkSet WalkSet::parse(std::string_view text, const Graph& g) {
    WalkSet set;
    for_each_line(text, [&](std::size_t line_number, std::string_view line) {
        auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("line " + std::to_string(line_number) +
                             ": expected '<name>: <v_1> ... <v_k>'");
        auto name_tokens = split_tokens(line.substr(0, colon));
        if (name_tokens.size() != 1)
            throw ParseError("line " + std::to_string(line_number) + ": invalid walk name");
        auto vertices = split_tokens(line.substr(colon + 1));
        if (vertices.empty())
            throw ParseError("line " + std::to_string(line_number) + ": walk has no vertices");
        for (const auto& existing : set.names_)
            if (existing == name_tokens[0])
                throw ValidationError("duplicate walk name: " + name_tokens[0]);
        set.names_.push_back(std::move(name_tokens[0]));
        set.walks_.push_back(Walk::make(g, vertices));
    });
    return set;
}

const Walk& WalkSet::by_name(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return walks_[i];
    throw UnknownWalkError(name);
}

PartialEvaluation parse_evaluation(std::string_view text, GraphPtr g) {
    std::string base;
    std::map<std::string, Rational> values;
    bool saw_base = false;
    for_each_line(text, [&](std::size_t line_number, std::string_view line) {
        auto tokens = split_tokens(line);
        if (!saw_base) {
            if (tokens.size() != 2 || tokens[0] != "base")
                throw ParseError("line " + std::to_string(line_number) +
                                 ": expected header 'base <vertex>'");
            base = tokens[1];
            saw_base = true;
            return;
        }
        if (tokens.size() != 2)
            throw ParseError("line " + std::to_string(line_number) +
                             ": expected '<vertex> <rational>'");
        if (!values.emplace(tokens[0], parse_rational(tokens[1])).second)
            throw ValidationError("duplicate evaluation entry for vertex '" + tokens[0] + "'");
    });
    if (!saw_base) throw ParseError("evaluation file needs a 'base <vertex>' header");
    return PartialEvaluation::make(std::move(g), base, values);
}

Evaluation to_total(const PartialEvaluation& p) {
    if (p.domain().size() != p.graph().vertex_count())
        throw ValidationError("evaluation does not cover every vertex");
    std::vector<Rational> values;
    values.reserve(p.domain().size());
    for (int v : p.domain()) values.push_back(p.at(v));
    return Evaluation::from_values(p.graph_ptr(), p.base_vertex(), std::move(values));
}

std::string evaluation_text(const Evaluation& phi) {
    std::string out = "base " + phi.graph().label(phi.base_vertex()) + "\n";
    for (std::size_t v = 0; v < phi.graph().vertex_count(); ++v)
        out += phi.graph().label(static_cast<int>(v)) + " " +
               fraction_string(phi.at(static_cast<int>(v))) + "\n";
    return out;
}

std::string evaluation_text(const PartialEvaluation& p) {
    std::string out = "base " + p.graph().label(p.base_vertex()) + "\n";
    for (int v : p.domain()) out += p.graph().label(v) + " " + fraction_string(p.at(v)) + "\n";
    return out;
}

std::string model_json(const ProximityModel& model) {
    nlohmann::json j;
    j["scheme"] = {{"kind", "geometric"}, {"ratio", fraction_string(model.scheme().ratio())}};
    nlohmann::json values = nlohmann::json::object();
    const Evaluation& phi = model.evaluation();
    for (std::size_t v = 0; v < phi.graph().vertex_count(); ++v)
        values[phi.graph().label(static_cast<int>(v))] =
            fraction_string(phi.at(static_cast<int>(v)));
    j["evaluation"] = {{"base", phi.graph().label(phi.base_vertex())}, {"values", values}};
    nlohmann::json prefix = nlohmann::json::array();
    for (const Rational& s : model.weights().prefix()) prefix.push_back(fraction_string(s));
    j["weights"] = {{"prefix", prefix},
                    {"tail_value", fraction_string(model.weights().tail_value())}};
    j["bound"] = fraction_string(model.bound());
    return j.dump(2) + "\n";
}

ProximityModel model_from_json(std::string_view text, GraphPtr g, const std::string& base_dir) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid model JSON: ") + e.what());
    }
    try {
        const auto& scheme_j = j.at("scheme");
        if (scheme_j.at("kind").get<std::string>() != "geometric")
            throw ValidationError("unsupported scheme kind");
        WeightScheme scheme =
            WeightScheme::geometric(parse_rational(scheme_j.at("ratio").get<std::string>()));

        const auto& eval_j = j.at("evaluation");
        Evaluation phi = [&] {
            if (eval_j.contains("file")) {
                std::string path = eval_j.at("file").get<std::string>();
                if (!base_dir.empty() && !path.empty() && path.front() != '/')
                    path = base_dir + "/" + path;
                return to_total(parse_evaluation(read_file(path), g));
            }
            std::map<std::string, Rational> values;
            for (const auto& [label, value] : eval_j.at("values").items())
                values.emplace(label, parse_rational(value.get<std::string>()));
            return Evaluation::make(g, eval_j.at("base").get<std::string>(), values);
        }();

        const auto& weights_j = j.at("weights");
        std::vector<Rational> prefix;
        for (const auto& item : weights_j.at("prefix"))
            prefix.push_back(parse_rational(item.get<std::string>()));
        WeightSequence weights(std::move(prefix),
                               parse_rational(weights_j.at("tail_value").get<std::string>()));

        std::optional<Rational> bound;
        if (j.contains("bound")) bound = parse_rational(j.at("bound").get<std::string>());
        return ProximityModel(std::move(scheme), std::move(phi), std::move(weights),
                              std::move(bound));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid model JSON: ") + e.what());
    }
}

}  // namespace walkmetric
