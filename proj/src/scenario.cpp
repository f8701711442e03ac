#include "ghzsim/scenario.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ghz {

namespace {
using Json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
    bool in_str = false;
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_str = !in_str;
        if (line[i] == '#' && !in_str) return line.substr(0, i);
    }
    return line;
}

Json parse_value(const std::string& raw, int line_no);

Json parse_array(const std::string& raw, int line_no) {
    Json arr = Json::array();
    std::string inner = trim(raw.substr(1, raw.size() - 2));
    if (inner.empty()) return arr;
    size_t start = 0;
    int depth = 0;
    bool in_str = false;
    for (size_t i = 0; i <= inner.size(); ++i) {
        if (i < inner.size()) {
            char c = inner[i];
            if (c == '"') in_str = !in_str;
            if (in_str) continue;
            if (c == '[') ++depth;
            if (c == ']') --depth;
            if (c != ',' || depth != 0) continue;
        }
        std::string item = trim(inner.substr(start, i - start));
        if (!item.empty()) arr.push_back(parse_value(item, line_no));
        start = i + 1;
    }
    return arr;
}

Json parse_value(const std::string& raw, int line_no) {
    if (raw.empty()) throw ConfigError("line " + std::to_string(line_no), "empty value");
    if (raw.front() == '"') {
        if (raw.size() < 2 || raw.back() != '"')
            throw ConfigError("line " + std::to_string(line_no), "unterminated string");
        return raw.substr(1, raw.size() - 2);
    }
    if (raw.front() == '[') {
        if (raw.back() != ']')
            throw ConfigError("line " + std::to_string(line_no), "unterminated array");
        return parse_array(raw, line_no);
    }
    if (raw == "true") return true;
    if (raw == "false") return false;
    try {
        size_t pos = 0;
        if (raw.find_first_of(".eE") == std::string::npos) {
            long long v = std::stoll(raw, &pos);
            if (pos == raw.size()) return v;
        }
        double d = std::stod(raw, &pos);
        if (pos == raw.size()) return d;
    } catch (const std::exception&) {
    }
    throw ConfigError("line " + std::to_string(line_no), "cannot parse value '" + raw + "'");
}

std::vector<std::string> split_key_path(const std::string& header, int line_no) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : header) {
        if (c == '.') {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(trim(cur));
    for (auto& p : parts) {
        if (!p.empty() && p.front() == '"' && p.back() == '"') p = p.substr(1, p.size() - 2);
        if (p.empty()) throw ConfigError("line " + std::to_string(line_no), "bad table name");
    }
    return parts;
}
}  // namespace

nlohmann::ordered_json parse_toml_lite(const std::string& text) {
    Json root = Json::object();
    Json* current = &root;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(strip_comment(line));
        if (line.empty()) continue;
        if (line.front() == '[') {
            bool array_table = line.size() > 1 && line[1] == '[';
            size_t close = line.find(array_table ? "]]" : "]");
            if (close == std::string::npos)
                throw ConfigError("line " + std::to_string(line_no), "unterminated table header");
            std::string name = trim(line.substr(array_table ? 2 : 1, close - (array_table ? 2 : 1)));
            Json* node = &root;
            auto parts = split_key_path(name, line_no);
            for (size_t i = 0; i < parts.size(); ++i) {
                bool last = i + 1 == parts.size();
                if (last && array_table) {
                    if (!node->contains(parts[i])) (*node)[parts[i]] = Json::array();
                    (*node)[parts[i]].push_back(Json::object());
                    node = &(*node)[parts[i]].back();
                } else {
                    if (!node->contains(parts[i])) (*node)[parts[i]] = Json::object();
                    node = &(*node)[parts[i]];
                    if (node->is_array()) node = &node->back();
                }
            }
            current = node;
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no), "expected key = value");
        std::string key = trim(line.substr(0, eq));
        if (!key.empty() && key.front() == '"' && key.back() == '"')
            key = key.substr(1, key.size() - 2);
        if (key.empty()) throw ConfigError("line " + std::to_string(line_no), "empty key");
        (*current)[key] = parse_value(trim(line.substr(eq + 1)), line_no);
    }
    return root;
}

namespace {
PairCase parse_case(const std::string& name, const std::string& field) {
    if (name == "cross") return PairCase::Cross;
    if (name == "same") return PairCase::Same;
    if (name == "physical") return PairCase::Physical;
    throw ConfigError(field, "expected cross|same|physical, got '" + name + "'");
}

double as_number(const Json& j, const std::string& field) {
    if (!j.is_number()) throw ConfigError(field, "expected a number");
    return j.get<double>();
}
}  // namespace

Scenario scenario_from_toml(const std::string& text) {
    Json j = parse_toml_lite(text);
    Scenario sc;

    if (j.contains("case")) {
        sc.case_weights = {{parse_case(j["case"].get<std::string>(), "case"), 1.0}};
    }
    if (j.contains("case_weights")) {
        sc.case_weights.clear();
        for (const auto& [k, v] : j["case_weights"].items())
            sc.case_weights.push_back({parse_case(k, "case_weights"),
                                       as_number(v, "case_weights." + k)});
    }
    if (j.contains("shots")) sc.shots = j["shots"].get<uint64_t>();
    if (j.contains("seed")) sc.seed = j["seed"].get<uint64_t>();

    if (j.contains("noise")) {
        const Json& n = j["noise"];
        NoiseSpec spec;
        if (n.contains("explicit")) {
            std::map<int, PauliOp> ops;
            for (const auto& [k, v] : n["explicit"].items()) {
                int pos;
                try {
                    pos = std::stoi(k);
                } catch (const std::exception&) {
                    throw ConfigError("noise.explicit", "position keys must be 1..4");
                }
                auto op = parse_pauli(v.get<std::string>());
                if (!op) throw ConfigError("noise.explicit." + k, "expected I|X|Z|XZ");
                ops[pos] = *op;
            }
            spec.explicit_ops = std::move(ops);
        } else {
            if (n.contains("p")) spec.p = as_number(n["p"], "noise.p");
            if (n.contains("positions")) {
                spec.positions.clear();
                for (const auto& v : n["positions"])
                    spec.positions.push_back(v.get<int>());
            }
        }
        try {
            spec.validate();
        } catch (const std::invalid_argument& e) {
            throw ConfigError("noise", e.what());
        }
        sc.noise = std::move(spec);
    }

    if (j.contains("kerr")) {
        const Json& k = j["kerr"];
        KerrParams kp;
        if (k.contains("theta")) kp.theta = as_number(k["theta"], "kerr.theta");
        if (k.contains("alpha")) kp.alpha = as_number(k["alpha"], "kerr.alpha");
        if (k.contains("beta")) kp.beta = Complex{as_number(k["beta"], "kerr.beta"), 0.0};
        if (k.contains("arm_swap")) kp.arm_swap = k["arm_swap"].get<bool>();
        sc.kerr = kp;
    }

    if (j.contains("output")) {
        for (const auto& o : j["output"]) {
            OutputSpec spec;
            spec.path = o.value("path", "");
            spec.format = o.value("format", "json");
            sc.outputs.push_back(std::move(spec));
        }
    }

    sc.validate();
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return scenario_from_toml(buf.str());
}

void Scenario::validate() const {
    if (shots < 1) throw ConfigError("shots", "must be >= 1");
    if (case_weights.empty()) throw ConfigError("case", "no case configured");
    double total = 0.0;
    for (const auto& [c, w] : case_weights) {
        if (w < 0.0) throw ConfigError("case_weights", "negative weight");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw ConfigError("case_weights", "weights must sum to 1");
    for (const auto& o : outputs) {
        if (o.path.empty()) throw ConfigError("output.path", "missing path");
        if (o.format != "json" && o.format != "csv")
            throw ConfigError("output.format", "expected json|csv");
    }
    if (kerr && !std::isfinite(kerr->theta)) throw ConfigError("kerr.theta", "must be finite");
}

nlohmann::ordered_json Scenario::echo() const {
    Json j;
    if (case_weights.size() == 1) {
        j["case"] = pair_case_name(case_weights[0].first);
    } else {
        Json w = Json::object();
        for (const auto& [c, p] : case_weights) w[pair_case_name(c)] = p;
        j["case_weights"] = w;
    }
    if (noise) {
        Json n = Json::object();
        if (noise->is_explicit()) {
            Json e = Json::object();
            for (const auto& [pos, op] : *noise->explicit_ops)
                e[std::to_string(pos)] = pauli_name(op);
            n["explicit"] = e;
        } else {
            n["p"] = noise->p;
            n["positions"] = noise->positions;
        }
        j["noise"] = n;
    }
    if (kerr) {
        Json k = Json::object();
        k["theta"] = kerr->theta;
        k["alpha"] = kerr->alpha.real();
        if (kerr->beta) k["beta"] = kerr->beta->real();
        k["arm_swap"] = kerr->arm_swap;
        j["kerr"] = k;
    }
    j["shots"] = shots;
    j["seed"] = seed;
    return j;
}

}  // namespace ghz
