#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "candidates.hpp"
#include "electorate.hpp"
#include "point.hpp"

namespace electoral {

// Named electorate distribution plus candidate roster; the unit users add
// by dropping a YAML file into the scenario directory.
struct Scenario {
    std::string name;
    std::string real_world_analog;
    int n_voters = 0;
    std::vector<MixtureComponent> components;
    CandidateSet candidates;
};

inline bool operator==(const MixtureComponent& a, const MixtureComponent& b) {
    return a.weight == b.weight && a.mean.x1 == b.mean.x1 && a.mean.x2 == b.mean.x2 &&
           a.std.x1 == b.std.x1 && a.std.x2 == b.std.x2;
}

inline bool operator==(const Scenario& a, const Scenario& b) {
    return a.name == b.name && a.real_world_analog == b.real_world_analog &&
           a.n_voters == b.n_voters && a.components == b.components &&
           a.candidates.labels == b.candidates.labels &&
           std::equal(a.candidates.positions.begin(), a.candidates.positions.end(),
                      b.candidates.positions.begin(), b.candidates.positions.end(),
                      [](Point2 p, Point2 q) { return p.x1 == q.x1 && p.x2 == q.x2; });
}

class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// "Polarized Bimodal" -> "polarized_bimodal"; used for CLI selection and
// output file names.
inline std::string slugify(const std::string& name) {
    std::string out;
    for (char c : name) {
        if (std::isalnum(static_cast<unsigned char>(c)))
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        else if (!out.empty() && out.back() != '_')
            out += '_';
    }
    while (!out.empty() && out.back() == '_') out.pop_back();
    return out;
}

namespace detail {

[[noreturn]] inline void scenario_fail(const std::string& source, const YAML::Node& node,
                                       const std::string& message) {
    std::string where = source;
    if (node && node.Mark().line >= 0) where += ":" + std::to_string(node.Mark().line + 1);
    throw ScenarioError(where + ": " + message);
}

inline void reject_unknown_keys(const std::string& source, const YAML::Node& map,
                                std::initializer_list<const char*> allowed,
                                const std::string& context) {
    for (const auto& entry : map) {
        std::string key = entry.first.as<std::string>();
        bool known = std::any_of(allowed.begin(), allowed.end(),
                                 [&key](const char* a) { return key == a; });
        if (!known)
            scenario_fail(source, entry.first, "unknown key '" + key + "' in " + context);
    }
}

inline YAML::Node require(const std::string& source, const YAML::Node& map, const char* key) {
    YAML::Node child = map[key];
    if (!child)
        scenario_fail(source, map, std::string("missing field '") + key + "'");
    return child;
}

inline double as_number(const std::string& source, const YAML::Node& node, const char* field) {
    if (!node.IsScalar()) scenario_fail(source, node, std::string(field) + " must be a number");
    try {
        return node.as<double>();
    } catch (const YAML::Exception&) {
        scenario_fail(source, node, std::string(field) + " must be a number");
    }
}

inline Point2 as_pair(const std::string& source, const YAML::Node& node, const char* field) {
    if (!node.IsSequence() || node.size() != 2)
        scenario_fail(source, node, std::string(field) + " must be a [x1, x2] pair");
    return {as_number(source, node[0], field), as_number(source, node[1], field)};
}

inline std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

// Shortest decimal form that parses back to the same double; keeps YAML
// round trips exact.
inline std::string format_exact(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace detail

inline Scenario load_scenario(const std::string& yaml_text,
                              const std::string& source = "<inline>") {
    YAML::Node root;
    try {
        root = YAML::Load(yaml_text);
    } catch (const YAML::ParserException& e) {
        throw ScenarioError(source + ":" + std::to_string(e.mark.line + 1) +
                            ": malformed YAML: " + e.msg);
    }
    if (!root.IsMap()) throw ScenarioError(source + ": scenario must be a YAML map");

    using detail::as_number;
    using detail::as_pair;
    using detail::require;
    using detail::scenario_fail;

    detail::reject_unknown_keys(source, root,
                                {"name", "real_world_analog", "n_voters", "electorate",
                                 "candidates"},
                                "scenario");

    Scenario sc;
    YAML::Node name = require(source, root, "name");
    if (!name.IsScalar()) scenario_fail(source, name, "name must be a string");
    sc.name = name.as<std::string>();
    if (sc.name.empty()) scenario_fail(source, name, "name must not be empty");

    YAML::Node analog = require(source, root, "real_world_analog");
    if (!analog.IsScalar()) scenario_fail(source, analog, "real_world_analog must be a string");
    sc.real_world_analog = analog.as<std::string>();

    YAML::Node n_voters = require(source, root, "n_voters");
    double n_raw = as_number(source, n_voters, "n_voters");
    if (n_raw < 1.0 || n_raw > 1e9 || n_raw != static_cast<double>(static_cast<int>(n_raw)))
        scenario_fail(source, n_voters, "n_voters must be a positive integer");
    sc.n_voters = static_cast<int>(n_raw);

    YAML::Node electorate = require(source, root, "electorate");
    if (!electorate.IsMap()) scenario_fail(source, electorate, "electorate must be a map");
    detail::reject_unknown_keys(source, electorate, {"type", "components"}, "electorate");
    YAML::Node type = require(source, electorate, "type");
    std::string type_name = type.as<std::string>("");
    if (type_name != "gaussian_mixture")
        scenario_fail(source, type, "unknown electorate type '" + type_name + "'");

    YAML::Node components = require(source, electorate, "components");
    if (!components.IsSequence() || components.size() == 0)
        scenario_fail(source, components, "components must be a non-empty sequence");
    double weight_sum = 0.0;
    for (const YAML::Node& entry : components) {
        if (!entry.IsMap()) scenario_fail(source, entry, "component must be a map");
        detail::reject_unknown_keys(source, entry, {"weight", "mean", "std"}, "component");
        MixtureComponent c;
        c.weight = as_number(source, require(source, entry, "weight"), "weight");
        if (!(c.weight > 0.0)) scenario_fail(source, entry, "weight must be positive");
        c.mean = as_pair(source, require(source, entry, "mean"), "mean");
        c.std = as_pair(source, require(source, entry, "std"), "std");
        if (!in_unit_square(c.mean))
            scenario_fail(source, entry["mean"], "mean out of [0,1]^2");
        if (!(c.std.x1 > 0.0) || !(c.std.x2 > 0.0))
            scenario_fail(source, entry["std"], "std must be positive");
        weight_sum += c.weight;
        sc.components.push_back(c);
    }
    if (std::abs(weight_sum - 1.0) > 1e-9)
        scenario_fail(source, components,
                      "weights sum to " + detail::format_number(weight_sum));

    YAML::Node candidates = require(source, root, "candidates");
    if (!candidates.IsSequence() || candidates.size() == 0)
        scenario_fail(source, candidates, "candidates must be a non-empty sequence");
    for (const YAML::Node& entry : candidates) {
        if (!entry.IsMap()) scenario_fail(source, entry, "candidate must be a map");
        detail::reject_unknown_keys(source, entry, {"label", "position"}, "candidate");
        YAML::Node label = require(source, entry, "label");
        std::string text = label.as<std::string>("");
        if (text.empty()) scenario_fail(source, label, "label must not be empty");
        Point2 position = as_pair(source, require(source, entry, "position"), "position");
        if (!in_unit_square(position))
            scenario_fail(source, entry["position"],
                          "position out of [0,1]^2 for '" + text + "'");
        sc.candidates.labels.push_back(text);
        sc.candidates.positions.push_back(position);
    }
    try {
        validate_candidates(sc.candidates);
    } catch (const std::invalid_argument& e) {
        scenario_fail(source, candidates, e.what());
    }
    return sc;
}

inline Scenario load_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError(path.string() + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_scenario(buffer.str(), path.string());
}

// Serialises in the same shape the loader accepts; numbers use the shortest
// exact decimal form so load(to_yaml(s)) == s.
inline std::string to_yaml(const Scenario& sc) {
    using detail::format_exact;
    std::ostringstream out;
    out << "name: \"" << sc.name << "\"\n";
    out << "real_world_analog: \"" << sc.real_world_analog << "\"\n";
    out << "n_voters: " << sc.n_voters << "\n";
    out << "electorate:\n  type: gaussian_mixture\n  components:\n";
    for (const MixtureComponent& c : sc.components) {
        out << "    - weight: " << format_exact(c.weight) << "\n";
        out << "      mean: [" << format_exact(c.mean.x1) << ", " << format_exact(c.mean.x2)
            << "]\n";
        out << "      std: [" << format_exact(c.std.x1) << ", " << format_exact(c.std.x2)
            << "]\n";
    }
    out << "candidates:\n";
    for (std::size_t k = 0; k < sc.candidates.size(); ++k) {
        Point2 p = sc.candidates.positions[k];
        out << "  - {label: \"" << sc.candidates.labels[k] << "\", position: ["
            << format_exact(p.x1) << ", " << format_exact(p.x2) << "]}\n";
    }
    return out.str();
}

struct ScenarioLoadResult {
    std::vector<Scenario> scenarios;
    std::vector<std::string> errors;  // one message per file that failed to load
};

// Loads every *.yaml in the directory, sorted by filename.  A bad file is
// reported but does not abort the others.
inline ScenarioLoadResult load_all_scenarios(const std::filesystem::path& directory) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(directory))
        throw ScenarioError(directory.string() + ": not a directory");
    std::vector<fs::path> files;
    for (const fs::directory_entry& entry : fs::directory_iterator(directory))
        if (entry.is_regular_file() && entry.path().extension() == ".yaml")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

    ScenarioLoadResult result;
    for (const fs::path& file : files) {
        try {
            result.scenarios.push_back(load_scenario_file(file));
        } catch (const ScenarioError& e) {
            result.errors.emplace_back(e.what());
        }
    }
    return result;
}

}  // namespace electoral
