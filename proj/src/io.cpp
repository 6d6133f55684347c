#include "wreath/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "wreath/error.hpp"

namespace wreath {

namespace {

nlohmann::json parse_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(path.string() + ": " + e.what());
    }
}

const nlohmann::json& field(const nlohmann::json& j, const char* key, const std::string& context) {
    if (!j.is_object() || !j.contains(key))
        throw Error(context + ": missing field \"" + key + "\"");
    return j.at(key);
}

std::string string_field(const nlohmann::json& j, const char* key, const std::string& context) {
    const auto& v = field(j, key, context);
    if (!v.is_string())
        throw Error(context + ": field \"" + key + "\" must be a string");
    return v.get<std::string>();
}

Rational rational_field(const nlohmann::json& j, const std::string& context) {
    if (!j.is_string())
        throw Error(context + ": rationals must be \"p/q\" strings");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        throw Error(context + ": " + e.what());
    }
}

std::size_t label_index(const std::vector<std::string>& labels, const std::string& label,
                        const std::string& context) {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
        throw Error(context + ": unknown basis label \"" + label + "\"");
    return static_cast<std::size_t>(it - labels.begin());
}

} // namespace

LieAlgebra algebra_from_json(const nlohmann::json& j, const std::string& context) {
    const std::string name = string_field(j, "name", context);
    const auto& dim_field = field(j, "dim", context);
    if (!dim_field.is_number_unsigned())
        throw Error(context + ": field \"dim\" must be a natural number");
    const std::size_t dim = dim_field.get<std::size_t>();
    const auto& basis = field(j, "basis", context);
    if (!basis.is_array() || basis.size() != dim)
        throw Error(context + ": field \"basis\" must list exactly dim labels");
    std::vector<std::string> labels;
    for (const auto& l : basis) {
        if (!l.is_string())
            throw Error(context + ": basis labels must be strings");
        labels.push_back(l.get<std::string>());
    }

    std::vector<std::tuple<std::size_t, std::size_t, Vec>> pairs;
    std::vector<std::vector<bool>> listed(dim, std::vector<bool>(dim, false));
    if (j.contains("brackets")) {
        const auto& brackets = j.at("brackets");
        if (!brackets.is_array())
            throw Error(context + ": field \"brackets\" must be an array");
        for (std::size_t e = 0; e < brackets.size(); ++e) {
            const std::string where = context + ": brackets[" + std::to_string(e) + "]";
            const auto& entry = brackets[e];
            const std::size_t i = label_index(labels, string_field(entry, "i", where), where);
            const std::size_t jdx = label_index(labels, string_field(entry, "j", where), where);
            if (i >= jdx)
                throw Error(where + ": pairs must be listed with i before j in basis order");
            if (listed[i][jdx])
                throw Error(where + ": duplicate pair (" + labels[i] + ", " + labels[jdx] + ")");
            listed[i][jdx] = true;
            const auto& terms = field(entry, "terms", where);
            if (!terms.is_array())
                throw Error(where + ": field \"terms\" must be an array");
            Vec value = zero_vec(dim);
            for (std::size_t t = 0; t < terms.size(); ++t) {
                const std::string term_where = where + ".terms[" + std::to_string(t) + "]";
                const std::size_t k =
                    label_index(labels, string_field(terms[t], "k", term_where), term_where);
                value[k] += rational_field(field(terms[t], "coeff", term_where), term_where);
            }
            pairs.emplace_back(i, jdx, std::move(value));
        }
    }
    return LieAlgebra::from_pairs(name, std::move(labels), pairs);
}

LieAlgebra parse_algebra_file(const std::filesystem::path& path) {
    return algebra_from_json(parse_json_file(path), path.string());
}

LieAlgebra load_algebra(const std::filesystem::path& path) {
    LieAlgebra alg = parse_algebra_file(path);
    const AlgebraReport report = check_lie_algebra(alg);
    if (!report.ok()) {
        std::string msg = path.string() + ": not a Lie algebra:";
        for (const auto& v : report.violations)
            msg += "\n  " + v;
        throw Error(msg);
    }
    return alg;
}

Vec vec_from_json(const nlohmann::json& j, std::size_t dim, const std::string& context) {
    if (!j.is_array() || j.size() != dim)
        throw Error(context + ": expected a vector of length " + std::to_string(dim));
    Vec out = zero_vec(dim);
    for (std::size_t i = 0; i < dim; ++i)
        out[i] = rational_field(j[i], context + "[" + std::to_string(i) + "]");
    return out;
}

nlohmann::json vec_to_json(const Vec& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : v)
        out.push_back(rational_str(c));
    return out;
}

nlohmann::json mat_to_json(const Mat& m) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(rational_str(m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

LoadedExtension load_extension(const std::filesystem::path& path) {
    const nlohmann::json j = parse_json_file(path);
    const std::string context = path.string();
    LieAlgebra alg = algebra_from_json(field(j, "algebra", context), context + ": algebra");
    const AlgebraReport report = check_lie_algebra(alg);
    if (!report.ok()) {
        std::string msg = context + ": algebra is not a Lie algebra:";
        for (const auto& v : report.violations)
            msg += "\n  " + v;
        throw Error(msg);
    }
    const auto& ideal = field(j, "ideal", context);
    if (!ideal.is_array() || ideal.empty())
        throw Error(context + ": field \"ideal\" must be a non-empty array of vectors");
    std::vector<Vec> ideal_basis;
    for (std::size_t i = 0; i < ideal.size(); ++i)
        ideal_basis.push_back(
            vec_from_json(ideal[i], alg.dim(), context + ": ideal[" + std::to_string(i) + "]"));
    Extension ext(std::move(alg), std::move(ideal_basis));

    LoadedExtension out{ext, default_section(ext), false};
    if (j.contains("section")) {
        const auto& sec = j.at("section");
        const std::size_t rows = ext.algebra_c().dim();
        const std::size_t cols = ext.algebra_b().dim();
        if (!sec.is_array() || sec.size() != rows)
            throw Error(context + ": section must be a " + std::to_string(rows) + "x" +
                        std::to_string(cols) + " matrix");
        Mat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            const Vec row = vec_from_json(sec[i], cols, context + ": section[" + std::to_string(i) + "]");
            for (std::size_t c = 0; c < cols; ++c)
                m.at(i, c) = row[c];
        }
        out.section = make_section(ext, std::move(m));
        out.section_supplied = true;
    }
    return out;
}

nlohmann::json series_to_json(const FormalSeries& s) {
    nlohmann::json out = nlohmann::json::array();
    for (int m = 0; m <= s.valid_through(); ++m) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [alpha, value] : s.component(m).coeffs()) {
            nlohmann::json exponents = nlohmann::json::array();
            for (std::size_t i = 0; i < alpha.size(); ++i)
                exponents.push_back(alpha[i]);
            terms.push_back(nlohmann::json::array({exponents, vec_to_json(value)}));
        }
        out.push_back(nlohmann::json::array({m, terms}));
    }
    return out;
}

FormalSeries series_from_json(const nlohmann::json& j, std::size_t src_dim, std::size_t tgt_dim,
                              const std::string& context) {
    if (!j.is_array())
        throw Error(context + ": series literal must be an array of [degree, terms] entries");
    int max_degree = -1;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_unsigned())
            throw Error(context + ": series entries must be [degree, terms]");
        max_degree = std::max(max_degree, entry[0].get<int>());
    }
    FormalSeries out(src_dim, tgt_dim, max_degree);
    for (const auto& entry : j) {
        const unsigned degree = entry[0].get<unsigned>();
        HomogeneousMap comp(src_dim, tgt_dim, degree);
        for (const auto& term : entry[1]) {
            if (!term.is_array() || term.size() != 2)
                throw Error(context + ": series terms must be [exponents, coords]");
            const auto& exp_json = term[0];
            if (!exp_json.is_array() || exp_json.size() != src_dim)
                throw Error(context + ": exponent tuple must have length " +
                            std::to_string(src_dim));
            std::vector<unsigned> exponents;
            for (const auto& e : exp_json) {
                if (!e.is_number_unsigned())
                    throw Error(context + ": exponents must be natural numbers");
                exponents.push_back(e.get<unsigned>());
            }
            MultiIndex alpha(std::move(exponents));
            if (alpha.degree() != degree)
                throw Error(context + ": exponent tuple " + multi_index_str(alpha) +
                            " does not have degree " + std::to_string(degree));
            comp.add_term(alpha, vec_from_json(term[1], tgt_dim, context));
        }
        out.set_component(std::move(comp));
    }
    return out;
}

Vec parse_coords(const std::string& text, std::size_t dim) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != dim)
        throw Error("expected " + std::to_string(dim) + " coordinates, got " +
                    std::to_string(parts.size()));
    Vec out = zero_vec(dim);
    for (std::size_t i = 0; i < dim; ++i)
        out[i] = parse_rational(parts[i]);
    return out;
}

std::vector<std::string> var_names(const std::string& prefix, std::size_t dim) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < dim; ++i)
        out.push_back(prefix + std::to_string(i + 1));
    return out;
}

namespace {

// One product like "1/2*y1^2*y2*e3"; the sign is handled by the caller.
std::string format_term(const Rational& magnitude, const MultiIndex& alpha,
                        const std::vector<std::string>& vars, const std::string& label) {
    std::string out;
    if (magnitude != 1)
        out = rational_str(magnitude);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += vars[i];
        if (alpha[i] > 1)
            out += "^" + std::to_string(alpha[i]);
    }
    if (!label.empty()) {
        if (!out.empty())
            out += "*";
        out += label;
    }
    return out.empty() ? "1" : out;
}

} // namespace

std::string format_map(const HomogeneousMap& f, const std::vector<std::string>& vars,
                       const std::vector<std::string>& target_labels) {
    std::string out;
    for (const auto& [alpha, value] : f.coeffs())
        for (std::size_t k = 0; k < value.size(); ++k) {
            if (value[k] == 0)
                continue;
            const bool negative = value[k] < 0;
            if (out.empty())
                out = negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            out += format_term(negative ? Rational(-value[k]) : value[k], alpha, vars,
                               target_labels[k]);
        }
    return out.empty() ? "0" : out;
}

std::string format_series(const FormalSeries& s, const std::string& prefix,
                          const std::vector<std::string>& vars,
                          const std::vector<std::string>& target_labels) {
    std::string out;
    for (int m = 0; m <= s.valid_through(); ++m)
        out += prefix + "_" + std::to_string(m) + " = " +
               format_map(s.component(m), vars, target_labels) + "\n";
    return out;
}

std::string format_vec(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += rational_str(v[i]);
    }
    return out + ")";
}

} // namespace wreath
