#pragma once
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "wreath/extensions.hpp"

namespace wreath {

/// Algebra file schema: {"name", "dim", "basis": [labels], "brackets":
/// [{"i", "j", "terms": [{"k", "coeff"}]}]} with rationals as "p/q" strings.
/// Omitted pairs are zero brackets; only pairs with i before j in basis order
/// may appear. Throws Error with the offending location on malformed input;
/// performs no Lie-axiom check.
LieAlgebra parse_algebra_file(const std::filesystem::path& path);
LieAlgebra algebra_from_json(const nlohmann::json& j, const std::string& context);

/// parse_algebra_file plus check_lie_algebra; invalid tables are rejected
/// with every violation in the message.
LieAlgebra load_algebra(const std::filesystem::path& path);

struct LoadedExtension {
    Extension extension;
    Section section;
    bool section_supplied = false;
};

/// Extension file schema: {"algebra": <algebra schema>, "ideal": [[coords]],
/// "section": [[rows]] (optional)}. The algebra is validated; the section
/// defaults to the coordinate section.
LoadedExtension load_extension(const std::filesystem::path& path);

Vec vec_from_json(const nlohmann::json& j, std::size_t dim, const std::string& context);
nlohmann::json vec_to_json(const Vec& v);
nlohmann::json mat_to_json(const Mat& m);

/// Series literal: [[degree, [[[exponents], [coords]], ...]], ...] with
/// degrees ascending and terms in graded-lex order.
nlohmann::json series_to_json(const FormalSeries& s);
FormalSeries series_from_json(const nlohmann::json& j, std::size_t src_dim, std::size_t tgt_dim,
                              const std::string& context);

/// Comma-separated rationals, e.g. "1,-1/2,0".
Vec parse_coords(const std::string& text, std::size_t dim);

/// Variable names x1..xn / y1..yn.
std::vector<std::string> var_names(const std::string& prefix, std::size_t dim);

/// Canonical text: terms in graded-lex monomial order, reduced rationals,
/// explicit signs, e.g. "-1/2*y2*e3 + y1*e1". The zero map prints "0".
std::string format_map(const HomogeneousMap& f, const std::vector<std::string>& vars,
                       const std::vector<std::string>& target_labels);

/// One line per degree: "<prefix>_m = ...".
std::string format_series(const FormalSeries& s, const std::string& prefix,
                          const std::vector<std::string>& vars,
                          const std::vector<std::string>& target_labels);

std::string format_vec(const Vec& v);

} // namespace wreath
