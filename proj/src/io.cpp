#include "votemap/io.hpp"

#include "votemap/error.hpp"
#include "votemap/rational.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace votemap {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  // Next line that is not blank; false at end of input.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      line = trim(line);
      if (!line.empty()) return true;
    }
    return false;
  }
  std::size_t number() const { return number_; }
  const std::string& source() const { return source_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, number_, what); }

  std::uint64_t integer(const std::string& text, const char* what) const {
    std::uint64_t v = 0;
    const auto* first = text.data();
    const auto* last = first + text.size();
    const auto r = std::from_chars(first, last, v);
    if (r.ec != std::errc{} || r.ptr != last) fail(std::string("expected ") + what + ", got '" + text + "'");
    return v;
  }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t number_ = 0;
};

Ranking parse_order(const LineReader& r, const std::vector<std::string>& items, std::size_t m) {
  for (const auto& item : items)
    if (item.find('{') != std::string::npos || item.find('}') != std::string::npos)
      throw UnsupportedFormatError(r.source(), r.number(), "ties are not supported (strict complete orders only)");
  if (items.size() != m)
    r.fail("expected " + std::to_string(m) + " candidates in the order, got " + std::to_string(items.size()));
  std::vector<bool> seen(m, false);
  std::vector<Candidate> order;
  order.reserve(m);
  for (const auto& item : items) {
    const auto c = r.integer(item, "a candidate index");
    if (c < 1 || c > m) r.fail("candidate " + item + " is outside 1.." + std::to_string(m));
    if (seen[c - 1]) r.fail("candidate " + item + " appears twice");
    seen[c - 1] = true;
    order.push_back(c - 1);
  }
  return Ranking(std::move(order));
}

std::uint64_t parse_count(const LineReader& r, const std::string& text) {
  const auto n = r.integer(text, "a vote count");
  if (n == 0) r.fail("vote count must be positive");
  return n;
}

void default_names(std::vector<std::string>& names, std::size_t m) {
  names.resize(m);
  for (std::size_t c = 0; c < m; ++c)
    if (names[c].empty()) names[c] = "c" + std::to_string(c + 1);
}

PrefLibProfile parse_soc_2022(LineReader& r, std::string line) {
  PrefLibProfile out;
  std::optional<std::size_t> m;
  std::optional<std::uint64_t> declared_voters;
  std::map<std::size_t, std::string> names;
  std::vector<std::pair<Ranking, std::uint64_t>> rows;
  do {
    if (line.front() == '#') {
      const std::string body = trim(std::string_view(line).substr(1));
      const auto colon = body.find(':');
      if (colon == std::string::npos) continue;  // free-form comment
      const std::string key = trim(std::string_view(body).substr(0, colon));
      const std::string value = trim(std::string_view(body).substr(colon + 1));
      out.metadata.emplace_back(key, value);
      if (key == "DATA TYPE" && value != "soc")
        throw UnsupportedFormatError(r.source(), r.number(), "data type '" + value + "' is not supported, only soc");
      if (key == "NUMBER ALTERNATIVES") m = r.integer(value, "the number of alternatives");
      if (key == "NUMBER VOTERS") declared_voters = r.integer(value, "the number of voters");
      if (key.rfind("ALTERNATIVE NAME ", 0) == 0) {
        const auto idx = r.integer(trim(key.substr(17)), "an alternative index");
        if (idx == 0) r.fail("alternative indices start at 1");
        names[idx - 1] = value;
      }
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) r.fail("expected 'count: c1,c2,...'");
    const auto count = parse_count(r, trim(std::string_view(line).substr(0, colon)));
    const auto items = split(line.substr(colon + 1), ',');
    if (!m) m = items.size();
    rows.emplace_back(parse_order(r, items, *m), count);
  } while (r.next(line));

  if (rows.empty()) r.fail("no votes");
  Election e(*m);
  for (auto& [v, n] : rows) e.add(std::move(v), n);
  if (declared_voters && *declared_voters != e.voters())
    r.fail("header declares " + std::to_string(*declared_voters) + " voters, rows sum to " +
           std::to_string(e.voters()));
  for (const auto& [idx, name] : names) {
    if (idx >= *m) r.fail("alternative name for index " + std::to_string(idx + 1) + " beyond the candidate count");
    out.names.resize(*m);
    out.names[idx] = name;
  }
  default_names(out.names, *m);
  out.election = std::move(e);
  return out;
}

PrefLibProfile parse_soc_legacy(LineReader& r, std::string line) {
  PrefLibProfile out;
  const std::size_t m = r.integer(line, "the number of candidates");
  if (m == 0) r.fail("the number of candidates must be positive");
  out.names.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (!r.next(line)) r.fail("missing candidate name line");
    const auto comma = line.find(',');
    if (comma == std::string::npos) r.fail("expected 'index,name'");
    const auto idx = r.integer(trim(std::string_view(line).substr(0, comma)), "a candidate index");
    if (idx < 1 || idx > m) r.fail("candidate index out of range");
    out.names[idx - 1] = trim(std::string_view(line).substr(comma + 1));
  }
  if (!r.next(line)) r.fail("missing 'voters,sum,unique' line");
  const auto summary = split(line, ',');
  if (summary.size() != 3) r.fail("expected 'voters,sum,unique'");
  const auto declared = r.integer(summary[0], "the number of voters");

  Election e(m);
  while (r.next(line)) {
    const auto comma = line.find(',');
    if (comma == std::string::npos) r.fail("expected 'count,c1,...'");
    const auto count = parse_count(r, trim(std::string_view(line).substr(0, comma)));
    e.add(parse_order(r, split(line.substr(comma + 1), ','), m), count);
  }
  if (e.voters() == 0) r.fail("no votes");
  if (declared != e.voters())
    r.fail("header declares " + std::to_string(declared) + " voters, rows sum to " + std::to_string(e.voters()));
  default_names(out.names, m);
  out.election = std::move(e);
  return out;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return in;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

PrefLibProfile parse_soc(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::string line;
  if (!r.next(line)) throw ParseError(source, 0, "empty file");
  return line.front() == '#' ? parse_soc_2022(r, line) : parse_soc_legacy(r, line);
}

PrefLibProfile read_soc_profile(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_soc(in, path.string());
}

Election read_soc(const std::filesystem::path& path) { return read_soc_profile(path).election; }

void format_soc(std::ostream& out, const Election& e, const std::vector<std::string>& names) {
  const std::size_t m = e.candidates();
  if (!names.empty() && names.size() != m) throw DimensionError("need one name per candidate");
  const Election grouped = e.compacted();
  std::vector<WeightedVote> rows(grouped.votes().begin(), grouped.votes().end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const WeightedVote& a, const WeightedVote& b) { return a.multiplicity > b.multiplicity; });
  out << "# DATA TYPE: soc\n";
  out << "# NUMBER ALTERNATIVES: " << m << "\n";
  out << "# NUMBER VOTERS: " << e.voters() << "\n";
  out << "# NUMBER UNIQUE ORDERS: " << rows.size() << "\n";
  for (std::size_t c = 0; c < m; ++c)
    out << "# ALTERNATIVE NAME " << c + 1 << ": " << (names.empty() ? "c" + std::to_string(c + 1) : names[c]) << "\n";
  for (const auto& w : rows) {
    out << w.multiplicity << ":";
    for (std::size_t i = 0; i < m; ++i) out << (i ? "," : " ") << w.ranking[i] + 1;
    out << "\n";
  }
}

void write_soc(const Election& e, const std::filesystem::path& path, const std::vector<std::string>& names) {
  auto out = open_out(path);
  format_soc(out, e, names);
  finish(out, path);
}

void format_matrix_csv(std::ostream& out, const FrequencyMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) out << (j ? "," : "") << g17(a(i, j));
    out << "\n";
  }
}

void format_matrix_csv(std::ostream& out, const RationalMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) out << (j ? "," : "") << to_string(a(i, j));
    out << "\n";
  }
}

void write_matrix_csv(const FrequencyMatrix& a, const std::filesystem::path& path) {
  auto out = open_out(path);
  format_matrix_csv(out, a);
  finish(out, path);
}

void write_matrix_csv(const RationalMatrix& a, const std::filesystem::path& path) {
  auto out = open_out(path);
  format_matrix_csv(out, a);
  finish(out, path);
}

FrequencyMatrix parse_matrix_csv(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (r.next(line)) {
    std::vector<double> row;
    for (const auto& cell : split(line, ',')) {
      if (cell.empty()) r.fail("empty cell");
      double v = 0.0;
      if (cell.find('/') != std::string::npos) {
        try {
          v = to_double(parse_rational(cell));
        } catch (const Error&) {
          r.fail("bad number '" + cell + "'");
        }
      } else {
        const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
        if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size()) r.fail("bad number '" + cell + "'");
      }
      if (!std::isfinite(v)) r.fail("non-finite entry '" + cell + "'");
      row.push_back(v);
    }
    if (!rows.empty() && row.size() != rows.front().size()) r.fail("ragged row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(source, 0, "empty matrix");
  const std::size_t m = rows.size();
  if (rows.front().size() != m)
    throw ParseError(source, 0,
                     "matrix is not square: " + std::to_string(m) + " rows x " + std::to_string(rows.front().size()) +
                         " columns");
  FrequencyMatrix a(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = rows[i][j];
  constexpr double tol = 1e-6;
  for (auto& x : a.data()) {
    if (x < -tol) throw DomainError(source + ": negative entry " + g17(x));
    x = std::max(x, 0.0);
  }
  require_bistochastic(a, tol);
  // Rescale columns that drift beyond summation rounding; leave exact files bit-identical.
  for (std::size_t j = 0; j < m; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += a(i, j);
    if (std::abs(s - 1.0) > 1e-13)
      for (std::size_t i = 0; i < m; ++i) a(i, j) /= s;
  }
  return a;
}

FrequencyMatrix read_matrix_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_matrix_csv(in, path.string());
}

void write_layout_csv(const EmbeddingLayout& layout, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "label,x,y\n";
  for (std::size_t k = 0; k < layout.labels.size(); ++k)
    out << layout.labels[k] << "," << g17(layout.coords[k][0]) << "," << g17(layout.coords[k][1]) << "\n";
  finish(out, path);
}

void write_layout_svg(const EmbeddingLayout& layout, const std::filesystem::path& path,
                      const std::vector<std::string>& groups) {
  static const std::map<std::string, std::string> colours = {
      {"compass", "#000000"},     {"path", "#999999"},         {"mallows", "#1f77b4"},
      {"rev-mix", "#d62728"},     {"mallows-mix", "#2ca02c"},  {"phi-conitzer", "#e377c2"},
      {"phi-walsh", "#ff7f0e"},   {"structured", "#9467bd"}};
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  for (std::size_t k = 0; k < layout.coords.size(); ++k) {
    const auto [x, y] = layout.coords[k];
    if (k == 0 || x < lo_x) lo_x = x;
    if (k == 0 || x > hi_x) hi_x = x;
    if (k == 0 || y < lo_y) lo_y = y;
    if (k == 0 || y > hi_y) hi_y = y;
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const double scale = 900.0 / span;
  const double off_x = 500.0 - 0.5 * (lo_x + hi_x) * scale;
  const double off_y = 500.0 + 0.5 * (lo_y + hi_y) * scale;

  auto out = open_out(path);
  char buf[160];
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" width=\"1000\" height=\"1000\">\n";
  out << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  for (std::size_t k = 0; k < layout.labels.size(); ++k) {
    const double x = off_x + layout.coords[k][0] * scale;
    const double y = off_y - layout.coords[k][1] * scale;  // SVG y grows downwards
    std::string colour = "#1f77b4";
    if (k < groups.size())
      if (auto it = colours.find(groups[k]); it != colours.end()) colour = it->second;
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"4\" fill=\"%s\"/>\n", x, y, colour.c_str());
    out << buf;
    std::snprintf(buf, sizeof buf, "<text x=\"%.3f\" y=\"%.3f\" font-size=\"9\">", x + 5.0, y - 5.0);
    out << buf << layout.labels[k] << "</text>\n";
  }
  out << "</svg>\n";
  finish(out, path);
}

void write_ratios_csv(const std::vector<RatioEntry>& ratios, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "x,y,distance,ratio\n";
  for (const auto& r : ratios) out << r.x << "," << r.y << "," << g17(r.distance) << "," << g17(r.ratio) << "\n";
  finish(out, path);
}

GSTree read_tree(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::string text;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    text += line;
    text += ' ';
  }
  return GSTree::parse(text);
}

}  // namespace votemap
