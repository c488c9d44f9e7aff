// Copyright 2026 permq contributors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "permq/io.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"
#include "permq/errors.hpp"

namespace permq {

namespace {

using nlohmann::json;

std::string export_json(const QuadraticModel& model, const VariableLayout& layout) {
    json j;
    j["kind"] = kind_name(model.kind);
    json vars = json::array();
    for (const auto& l : layout.labels())
        vars.push_back({{"matrix", matrix_name(l.matrix)}, {"row", l.row}, {"col", l.col}});
    j["variables"] = std::move(vars);
    json lin = json::array();
    for (const auto& t : model.linear) lin.push_back({t.var, t.coef});
    j["linear"] = std::move(lin);
    json quad = json::array();
    for (const auto& t : model.quadratic) quad.push_back({t.i, t.j, t.coef});
    j["quadratic"] = std::move(quad);
    j["offset"] = {{"num", model.offset.num()}, {"den", model.offset.den()}};
    return j.dump(2) + "\n";
}

std::string export_qubo_text(const QuadraticModel& model) {
    if (model.kind != Kind::QUBO) throw KindMismatch("QUBO_TEXT export requires a QUBO model");
    std::ostringstream out;
    out << "c offset " << model.offset.str() << "\n";
    out << "p qubo 0 " << model.num_vars << " " << model.linear.size() << " "
        << model.quadratic.size() << "\n";
    for (const auto& t : model.linear) out << t.var << " " << t.var << " " << t.coef << "\n";
    for (const auto& t : model.quadratic) out << t.i << " " << t.j << " " << t.coef << "\n";
    return out.str();
}

void check_model(const QuadraticModel& model, const VariableLayout& layout, int line) {
    if (layout.num_vars() != model.num_vars)
        throw ParseError("variable list length does not match num_vars", line);
    std::int32_t prev = -1;
    for (const auto& t : model.linear) {
        if (t.var <= prev || t.var >= model.num_vars || t.coef == 0)
            throw ParseError("invalid linear term", line);
        prev = t.var;
    }
    std::int64_t prev_key = -1;
    for (const auto& t : model.quadratic) {
        if (t.i >= t.j || t.j >= model.num_vars || t.i < 0 || t.coef == 0)
            throw ParseError("invalid quadratic term", line);
        std::int64_t key = (static_cast<std::int64_t>(t.i) << 32) | t.j;
        if (key <= prev_key) throw ParseError("quadratic terms out of order", line);
        prev_key = key;
    }
}

std::pair<QuadraticModel, VariableLayout> import_json(const std::string& bytes) {
    json j;
    try {
        j = json::parse(bytes);
    } catch (const json::parse_error& e) {
        int line = 1;
        for (std::size_t i = 0; i < e.byte && i < bytes.size(); ++i)
            if (bytes[i] == '\n') ++line;
        throw ParseError(std::string("invalid JSON: ") + e.what(), line);
    }
    try {
        QuadraticModel model;
        model.kind = kind_from_name(j.at("kind").get<std::string>());
        VariableLayout layout;
        for (const auto& v : j.at("variables"))
            layout.add({matrix_from_name(v.at("matrix").get<std::string>()), v.at("row").get<int>(),
                        v.at("col").get<int>()});
        model.num_vars = layout.num_vars();
        for (const auto& t : j.at("linear"))
            model.linear.push_back({t.at(0).get<std::int32_t>(), t.at(1).get<std::int64_t>()});
        for (const auto& t : j.at("quadratic"))
            model.quadratic.push_back({t.at(0).get<std::int32_t>(), t.at(1).get<std::int32_t>(),
                                       t.at(2).get<std::int64_t>()});
        const auto& off = j.at("offset");
        model.offset = Rational(off.at("num").get<std::int64_t>(), off.at("den").get<std::int64_t>());
        check_model(model, layout, 1);
        return {std::move(model), std::move(layout)};
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid model JSON: ") + e.what(), 1);
    }
}

std::pair<QuadraticModel, VariableLayout> import_qubo_text(const std::string& bytes) {
    std::istringstream in(bytes);
    std::string line;
    int lineno = 0;
    QuadraticModel model;
    model.kind = Kind::QUBO;
    bool have_header = false;
    bool have_offset = false;
    std::size_t n_diag = 0, n_coup = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == 'c') {
            std::istringstream ls(line);
            std::string c, key, val;
            if (!have_offset && (ls >> c >> key >> val) && key == "offset") {
                std::int64_t num = 0, den = 1;
                auto slash = val.find('/');
                try {
                    if (slash == std::string::npos) {
                        num = std::stoll(val);
                    } else {
                        num = std::stoll(val.substr(0, slash));
                        den = std::stoll(val.substr(slash + 1));
                    }
                } catch (const std::exception&) {
                    throw ParseError("malformed offset comment", lineno);
                }
                model.offset = Rational(num, den);
                have_offset = true;
            }
            continue;
        }
        if (!have_header) {
            std::istringstream ls(line);
            std::string p, kind;
            int zero = -1;
            if (!(ls >> p >> kind >> zero >> model.num_vars >> n_diag >> n_coup) || p != "p" ||
                kind != "qubo" || zero != 0 || model.num_vars < 0)
                throw ParseError("malformed problem header", lineno);
            have_header = true;
            continue;
        }
        std::istringstream ls(line);
        std::int32_t i, j;
        std::int64_t w;
        if (!(ls >> i >> j >> w)) throw ParseError("malformed term line", lineno);
        if (model.linear.size() < n_diag) {
            if (i != j) throw ParseError("expected diagonal term", lineno);
            model.linear.push_back({i, w});
        } else if (model.quadratic.size() < n_coup) {
            if (i >= j) throw ParseError("coupler must have i < j", lineno);
            model.quadratic.push_back({i, j, w});
        } else {
            throw ParseError("more terms than declared in header", lineno);
        }
    }
    if (!have_header) throw ParseError("missing problem header", 1);
    if (model.linear.size() != n_diag || model.quadratic.size() != n_coup)
        throw ParseError("fewer terms than declared in header", lineno);
    VariableLayout layout = VariableLayout::flat(model.num_vars);
    check_model(model, layout, lineno);
    return {std::move(model), std::move(layout)};
}

}  // namespace

std::string export_model(const QuadraticModel& model, const VariableLayout& layout, Format format) {
    if (layout.num_vars() != model.num_vars)
        throw std::invalid_argument("layout size does not match model");
    if (format == Format::JSON) return export_json(model, layout);
    return export_qubo_text(model);
}

std::pair<QuadraticModel, VariableLayout> import_model(const std::string& bytes) {
    for (char ch : bytes) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') return import_json(bytes);
        break;
    }
    return import_qubo_text(bytes);
}

}  // namespace permq
