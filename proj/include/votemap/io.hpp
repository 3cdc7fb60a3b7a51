#pragma once

#include "votemap/embedding.hpp"
#include "votemap/gs_tree.hpp"
#include "votemap/matrix.hpp"
#include "votemap/ranking.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace votemap {

// Strict complete orders with candidate names and header metadata.
struct PrefLibProfile {
  std::vector<std::string> names;  // names[c] for 0-based candidate c
  Election election;
  std::vector<std::pair<std::string, std::string>> metadata;  // header lines in file order
};

// PrefLib .soc. Two layouts are recognized:
//   2022:   "# KEY: value" header lines, then "count: c1,c2,...,cm" rows.
//   legacy: "m", m lines "i,name", "voters,sum,unique", then "count,c1,...,cm".
// Candidates are 1-based in the file and 0-based in the result.
PrefLibProfile parse_soc(std::istream& in, const std::string& source = "<input>");
PrefLibProfile read_soc_profile(const std::filesystem::path& path);
Election read_soc(const std::filesystem::path& path);

// Writes the 2022 layout; distinct orders sorted by multiplicity (descending),
// then lexicographically. Default names are c1..cm.
void format_soc(std::ostream& out, const Election& e, const std::vector<std::string>& names = {});
void write_soc(const Election& e, const std::filesystem::path& path, const std::vector<std::string>& names = {});

// Headerless CSV, one row per position. Doubles use 17 significant digits,
// rationals are written as p/q.
void format_matrix_csv(std::ostream& out, const FrequencyMatrix& a);
void format_matrix_csv(std::ostream& out, const RationalMatrix& a);
void write_matrix_csv(const FrequencyMatrix& a, const std::filesystem::path& path);
void write_matrix_csv(const RationalMatrix& a, const std::filesystem::path& path);

// Accepts decimal and p/q cells. Rejects non-square input (ParseError) and
// matrices more than 1e-6 from bistochastic (DomainError); columns are then
// rescaled to sum to one.
FrequencyMatrix parse_matrix_csv(std::istream& in, const std::string& source = "<input>");
FrequencyMatrix read_matrix_csv(const std::filesystem::path& path);

// "label,x,y" with a header row.
void write_layout_csv(const EmbeddingLayout& layout, const std::filesystem::path& path);
// Scatter plot on a fixed 1000 x 1000 viewBox, one circle and text label per
// point. `groups` (optional, parallel to the labels) selects colours.
void write_layout_svg(const EmbeddingLayout& layout, const std::filesystem::path& path,
                      const std::vector<std::string>& groups = {});
// "x,y,distance,ratio" with a header row.
void write_ratios_csv(const std::vector<RatioEntry>& ratios, const std::filesystem::path& path);

// Tree in the nested-parentheses notation; '#' starts a comment.
GSTree read_tree(const std::filesystem::path& path);

}  // namespace votemap
