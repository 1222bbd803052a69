#include "magicsq/serialize.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace magicsq {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (unsigned char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (ch < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += static_cast<char>(ch);
                }
        }
    }
    return out;
}

void append_terms(std::string& out, const SparseVec& v) {
    out += '[';
    bool first = true;
    for (const auto& [k, c] : v) {
        if (!first) out += ',';
        first = false;
        out += '[';
        out += std::to_string(k);
        out += ",\"";
        out += c.str();
        out += "\"]";
    }
    out += ']';
}

}  // namespace

std::string lie_to_json(const LieAlgebra& alg) {
    std::string out = "{\"dim\":" + std::to_string(alg.dim()) + ",\"labels\":[";
    for (int i = 0; i < alg.dim(); ++i) {
        if (i) out += ',';
        out += '"';
        out += json_escape(alg.label(i));
        out += '"';
    }
    out += "],\"brackets\":[";
    bool first = true;
    for (int i = 0; i < alg.dim(); ++i) {
        for (int j = i + 1; j < alg.dim(); ++j) {
            const SparseVec& v = alg.bracket_upper(i, j);
            if (v.empty()) continue;
            if (!first) out += ',';
            first = false;
            out += '[';
            out += std::to_string(i);
            out += ',';
            out += std::to_string(j);
            out += ',';
            append_terms(out, v);
            out += ']';
        }
    }
    out += "]}";
    return out;
}

LieAlgebra lie_from_json(const std::string& text) {
    try {
        nlohmann::json doc = nlohmann::json::parse(text);
        if (!doc.is_object()) throw std::runtime_error("top level is not an object");
        int n = doc.at("dim").get<int>();
        if (n < 0) throw std::runtime_error("negative dim");
        std::vector<std::string> labels;
        for (const auto& l : doc.at("labels")) labels.push_back(l.get<std::string>());
        if (static_cast<int>(labels.size()) != n) throw std::runtime_error("labels length != dim");
        LieAlgebra alg(n, std::move(labels));
        std::vector<char> seen(static_cast<size_t>(n) * n, 0);
        for (const auto& entry : doc.at("brackets")) {
            if (!entry.is_array() || entry.size() != 3) throw std::runtime_error("bracket entry is not [i, j, terms]");
            int i = entry[0].get<int>();
            int j = entry[1].get<int>();
            if (i < 0 || j < 0 || i >= n || j >= n || i >= j)
                throw std::runtime_error("bracket pair out of range or not i<j");
            if (seen[static_cast<size_t>(i) * n + j]) throw std::runtime_error("duplicate bracket pair");
            seen[static_cast<size_t>(i) * n + j] = 1;
            SparseVec v;
            for (const auto& term : entry[2]) {
                if (!term.is_array() || term.size() != 2) throw std::runtime_error("term is not [k, coeff]");
                v.emplace_back(term[0].get<int>(), Rational::from_string(term[1].get<std::string>()));
            }
            alg.set_bracket(i, j, std::move(v));
        }
        return alg;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("LieAlgebra JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("LieAlgebra JSON: ") + e.what());
    }
}

std::string composition_table_to_json(const CompositionAlgebra& k) {
    std::string out = "{\"algebra\":\"" + json_escape(k.name()) + "\",\"dim\":" + std::to_string(k.dim());
    out += ",\"table\":[";
    for (int i = 0; i < k.dim(); ++i) {
        if (i) out += ',';
        out += '[';
        for (int j = 0; j < k.dim(); ++j) {
            if (j) out += ',';
            // e_i e_j = s e_k encoded as s*(k+1)
            out += std::to_string(k.mul_sign(i, j) * (k.mul_index(i, j) + 1));
        }
        out += ']';
    }
    out += "]}";
    return out;
}

std::string jordan_table_to_json(const JordanAlgebra& j) {
    std::string out = "{\"algebra\":\"" + json_escape(j.coeff().name()) + "\",\"n\":" + std::to_string(j.n());
    out += ",\"dim\":" + std::to_string(j.dim()) + ",\"labels\":[";
    for (int i = 0; i < j.dim(); ++i) {
        if (i) out += ',';
        out += '"';
        out += json_escape(j.basis_label(i));
        out += '"';
    }
    out += "],\"products\":{";
    bool first = true;
    for (int a = 0; a < j.dim(); ++a) {
        for (int b = a; b < j.dim(); ++b) {
            const SparseVec& v = j.product_basis(a, b);
            if (v.empty()) continue;
            if (!first) out += ',';
            first = false;
            out += '"';
            out += json_escape(j.basis_label(a) + "|" + j.basis_label(b));
            out += "\":[";
            bool f2 = true;
            for (const auto& [k, c] : v) {
                if (!f2) out += ',';
                f2 = false;
                out += "[\"";
                out += json_escape(j.basis_label(k));
                out += "\",\"";
                out += c.str();
                out += "\"]";
            }
            out += ']';
        }
    }
    out += "}}";
    return out;
}

std::string matrix_to_json(const QMatrix& m) {
    std::string out = "{\"rows\":" + std::to_string(m.rows()) + ",\"cols\":" + std::to_string(m.cols());
    out += ",\"entries\":[";
    for (int r = 0; r < m.rows(); ++r) {
        if (r) out += ',';
        out += '[';
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out += ',';
            out += '"';
            out += m.at(r, c).str();
            out += '"';
        }
        out += ']';
    }
    out += "]}";
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace magicsq
