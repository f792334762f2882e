#pragma once

#include <string>

#include "kh3/normal_form.hpp"
#include "kh3/tables.hpp"

namespace kh3 {

inline constexpr int kSchemaVersion = 1;

// ASCII tables in the usual layout: rows by descending quantum degree,
// columns by ascending homological degree. Undetermined cells of a partial
// table are shaded with its residual-block label.
std::string render_table(const HomologyTable& t);
std::string render_partial(const PartialTable& t);

// machine-readable forms; parse(render(x)) == x
std::string nf_to_json(const NormalForm3& nf);
NormalForm3 nf_from_json(const std::string& text);

std::string table_to_json(const HomologyTable& t);
HomologyTable table_from_json(const std::string& text);

std::string partial_to_json(const PartialTable& t);
PartialTable partial_from_json(const std::string& text);

std::string code_to_json(const RationalCode& code);
RationalCode code_from_json(const std::string& text);

}  // namespace kh3
