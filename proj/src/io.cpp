/*
   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "froblie/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace froblie {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& origin, const std::string& msg) {
    throw ParseError(origin + ": " + msg);
}

FieldSpec parse_field_spec(const json& j, const std::string& origin) {
    if (!j.is_object() || !j.contains("kind")) parse_fail(origin, "field needs a kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return FieldSpec::rational();
    if (kind == "cyclotomic") {
        if (!j.contains("n")) parse_fail(origin, "cyclotomic field needs n");
        return FieldSpec::cyclotomic(j.at("n").get<unsigned>());
    }
    if (kind == "prime") {
        if (!j.contains("p") || !j.contains("n")) parse_fail(origin, "prime field needs p and n");
        mpz_class p;
        if (j.at("p").is_string()) p = mpz_class(j.at("p").get<std::string>());
        else p = mpz_class(j.at("p").get<long>());
        return FieldSpec::prime(p, j.at("n").get<unsigned>());
    }
    parse_fail(origin, "unknown field kind \"" + kind + "\"");
}

Mat parse_matrix(const json& j, const FieldPtr& field, int dim, const std::string& origin, const std::string& name) {
    Mat m(field, dim, dim);
    auto entry = [&](int i, int k, const json& cell) {
        if (!cell.is_string()) parse_fail(origin, name + " entries must be scalar strings");
        try {
            m.at(i, k) = field->parse(cell.get<std::string>());
        } catch (const ParseError& e) {
            parse_fail(origin, name + "[" + std::to_string(i + 1) + "][" + std::to_string(k + 1) + "]: " + e.what());
        }
    };
    if (!j.is_array()) parse_fail(origin, name + " must be an array");
    if (!j.empty() && j.front().is_array()) {
        if (static_cast<int>(j.size()) != dim) parse_fail(origin, name + " needs " + std::to_string(dim) + " rows");
        for (int i = 0; i < dim; ++i) {
            if (static_cast<int>(j[i].size()) != dim) parse_fail(origin, name + " row " + std::to_string(i + 1) + " has wrong length");
            for (int k = 0; k < dim; ++k) entry(i, k, j[i][k]);
        }
    } else {
        if (static_cast<int>(j.size()) != dim * dim)
            parse_fail(origin, name + " needs " + std::to_string(dim * dim) + " row-major entries");
        for (int i = 0; i < dim; ++i)
            for (int k = 0; k < dim; ++k) entry(i, k, j[static_cast<size_t>(i) * dim + k]);
    }
    return m;
}

}  // namespace

AlgebraFile parse_algebra_text(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
    if (!doc.is_object()) parse_fail(origin, "top level must be an object");
    if (!doc.contains("dim") || !doc.contains("field")) parse_fail(origin, "dim and field are required");
    int dim = doc.at("dim").get<int>();
    if (dim < 0) parse_fail(origin, "dim must be nonnegative");
    FieldPtr field;
    try {
        field = Field::make(parse_field_spec(doc.at("field"), origin));
    } catch (const InvalidSpec& e) {
        parse_fail(origin, std::string("invalid field: ") + e.what());
    }
    StructAlgebra alg(field, dim);
    if (doc.contains("brackets")) {
        const json& brackets = doc.at("brackets");
        if (!brackets.is_array()) parse_fail(origin, "brackets must be an array");
        for (size_t e = 0; e < brackets.size(); ++e) {
            const json& ent = brackets[e];
            std::string where = "brackets[" + std::to_string(e) + "]";
            if (!ent.is_array() || ent.size() != 3) parse_fail(origin, where + " must be [i, j, terms]");
            int i = ent[0].get<int>(), j = ent[1].get<int>();
            if (i < 1 || i > dim || j < 1 || j > dim || i == j) parse_fail(origin, where + " has bad indices");
            SparseVec v;
            for (const json& term : ent[2]) {
                if (!term.is_array() || term.size() != 2) parse_fail(origin, where + " terms must be [k, coeff]");
                int k = term[0].get<int>();
                if (k < 1 || k > dim) parse_fail(origin, where + " has bad target index");
                try {
                    v.entries.emplace_back(k - 1, field->parse(term[1].get<std::string>()));
                } catch (const ParseError& err) {
                    parse_fail(origin, where + ": " + err.what());
                }
            }
            alg.set_bracket_raw(i - 1, j - 1, v);
        }
    }
    alg.mirror_missing_entries();
    AlgebraFile out{std::move(alg), std::nullopt, std::nullopt, std::nullopt};
    if (doc.contains("phi")) out.phi = parse_matrix(doc.at("phi"), field, dim, origin, "phi");
    if (doc.contains("h")) out.h = parse_matrix(doc.at("h"), field, dim, origin, "h");
    if (doc.contains("frobenius")) {
        const json& fr = doc.at("frobenius");
        if (!fr.contains("n") || !fr.contains("q") || !fr.contains("r"))
            parse_fail(origin, "frobenius needs n, q, r");
        out.frobenius = FrobeniusDescriptor{fr.at("n").get<unsigned>(), fr.at("q").get<unsigned>(), fr.at("r").get<unsigned>()};
    }
    return out;
}

AlgebraFile parse_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_algebra_text(ss.str(), path);
}

std::string write_algebra_text(const AlgebraFile& file) {
    json doc;
    const StructAlgebra& alg = file.algebra;
    doc["dim"] = alg.dim();
    const FieldSpec& spec = alg.field()->spec();
    switch (spec.kind) {
        case FieldKind::Rational: doc["field"] = {{"kind", "rational"}}; break;
        case FieldKind::Cyclotomic: doc["field"] = {{"kind", "cyclotomic"}, {"n", spec.n}}; break;
        case FieldKind::Prime: doc["field"] = {{"kind", "prime"}, {"p", spec.p.get_si()}, {"n", spec.n}}; break;
    }
    json brackets = json::array();
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = i + 1; j < alg.dim(); ++j) {
            Vec b = alg.basis_bracket(i, j);
            if (is_zero_vec(b)) continue;
            json terms = json::array();
            for (int k = 0; k < alg.dim(); ++k)
                if (!b[k].is_zero()) terms.push_back(json::array({k + 1, b[k].str()}));
            brackets.push_back(json::array({i + 1, j + 1, terms}));
        }
    doc["brackets"] = std::move(brackets);
    auto matrix_json = [](const Mat& m) {
        json rows = json::array();
        for (int i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
            rows.push_back(std::move(row));
        }
        return rows;
    };
    if (file.phi) doc["phi"] = matrix_json(*file.phi);
    if (file.h) doc["h"] = matrix_json(*file.h);
    if (file.frobenius)
        doc["frobenius"] = {{"n", file.frobenius->n}, {"q", file.frobenius->q}, {"r", file.frobenius->r}};
    return doc.dump(2) + "\n";
}

}  // namespace froblie
