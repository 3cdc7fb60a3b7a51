#include "helpers.hpp"

#include "votemap/compass.hpp"
#include "votemap/core.hpp"
#include "votemap/error.hpp"
#include "votemap/io.hpp"
#include "votemap/metric.hpp"
#include "votemap/models.hpp"
#include "votemap/samplers.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

using namespace votemap;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "votemap_io_test";
  fs::create_directories(dir);
  return dir / name;
}

PrefLibProfile parse(const std::string& text) {
  std::istringstream in(text);
  return parse_soc(in, "test.soc");
}

std::map<Ranking, std::uint64_t> multiset(const Election& e) {
  std::map<Ranking, std::uint64_t> out;
  for (const auto& w : e.votes()) out[w.ranking] += w.multiplicity;
  return out;
}

template <class Fn>
std::size_t parse_error_line(Fn&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("2022 soc files") {
  const auto p = parse(
      "# FILE NAME: tiny.soc\n"
      "# DATA TYPE: soc\n"
      "# NUMBER ALTERNATIVES: 2\n"
      "# NUMBER VOTERS: 4\n"
      "# ALTERNATIVE NAME 1: Alice\n"
      "# ALTERNATIVE NAME 2: Bob\n"
      "3: 1,2\n"
      "1: 2,1\n");
  CHECK(p.election.voters() == 4);
  CHECK(p.election.candidates() == 2);
  CHECK(p.names == std::vector<std::string>{"Alice", "Bob"});
  CHECK(p.metadata.front().first == "FILE NAME");
  CHECK(p.election.votes()[0].ranking == Ranking::identity(2));
  CHECK(p.election.votes()[0].multiplicity == 3);
}

TEST_CASE("legacy soc files") {
  const auto p = parse(
      "3\n1,a\n2,b\n3,c\n"
      "5,5,2\n"
      "4,3,1,2\n"
      "1,1,2,3\n");
  CHECK(p.election.voters() == 5);
  CHECK(p.names[2] == "c");
  CHECK(p.election.votes()[0].ranking == Ranking({2, 0, 1}));
}

TEST_CASE("malformed soc input") {
  const std::string head = "# DATA TYPE: soc\n# NUMBER ALTERNATIVES: 3\n";
  CHECK(parse_error_line([&] { parse(head + "1: 1,2,3\n2: 1,1,3\n"); }) == 4);
  CHECK(parse_error_line([&] { parse(head + "1: 1,2\n"); }) == 3);
  CHECK(parse_error_line([&] { parse(head + "1: 1,2,7\n"); }) == 3);
  CHECK(parse_error_line([&] { parse(head + "x: 1,2,3\n"); }) == 3);
  CHECK(parse_error_line([&] { parse(head + "1 1,2,3\n"); }) == 3);
  CHECK_THROWS_AS(parse(head + "1: 1,{2,3}\n"), UnsupportedFormatError);
  CHECK_THROWS_AS(parse("# DATA TYPE: soi\n1: 1,2\n"), UnsupportedFormatError);
  CHECK_THROWS_AS(parse(head + "# NUMBER VOTERS: 5\n1: 1,2,3\n"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse(head), ParseError);
  CHECK_THROWS_AS(parse("3\n1,a\n"), ParseError);
  CHECK_THROWS_AS(read_soc(scratch("missing.soc")), IoError);
}

TEST_CASE("soc round trip") {
  const auto spec = ModelSpec::mallows(6, Dispersion::norm(Rational(1, 2)));
  const Election e = sample_election({spec, 500, 3});
  const auto path = scratch("round.soc");
  write_soc(e, path);
  const Election back = read_soc(path);
  CHECK(back.voters() == e.voters());
  CHECK(multiset(back) == multiset(e));
  // Writing again is byte-identical.
  std::ostringstream a, b;
  format_soc(a, e);
  format_soc(b, back);
  CHECK(a.str() == b.str());
}

TEST_CASE("matrix csv") {
  const auto path = scratch("un.csv");
  const auto un = compass_matrix<double>(CompassKind::Uniformity, 4);
  write_matrix_csv(un, path);
  CHECK(read_matrix_csv(path) == un);

  const auto mal = mallows_matrix({10, 0.37, std::nullopt});
  write_matrix_csv(mal, path);
  CHECK(positionwise_distance(read_matrix_csv(path), mal).normalized <= 1e-9);
  CHECK(max_abs_difference(read_matrix_csv(path), mal) <= 1e-15);

  write_matrix_csv(conitzer_matrix<Rational>(4), path);
  CHECK(read_matrix_csv(path) == conitzer_matrix(4));

  std::istringstream ragged("0.5,0.5,0\n0.5,0.5,0\n0,0,1,0\n");
  CHECK_THROWS_AS(parse_matrix_csv(ragged), ParseError);
  std::istringstream wide("0.25,0.25,0.25,0.25\n0.25,0.25,0.25,0.25\n0.5,0.5,0.5,0.5\n");
  CHECK_THROWS_AS(parse_matrix_csv(wide), ParseError);
  std::istringstream off("0.6,0.5\n0.5,0.5\n");
  CHECK_THROWS_AS(parse_matrix_csv(off), DomainError);
  std::istringstream near("0.5000001,0.5\n0.5,0.5\n");
  const auto fixed = parse_matrix_csv(near);
  CHECK(std::abs(fixed(0, 0) + fixed(1, 0) - 1.0) <= 1e-13);
  CHECK(fixed(0, 0) < 0.5000001);
  std::istringstream junk("0.5,abc\n0.5,0.5\n");
  CHECK_THROWS_AS(parse_matrix_csv(junk), ParseError);
}

TEST_CASE("layout outputs and trees") {
  EmbeddingLayout layout;
  layout.labels = {"ID", "UN", "AN"};
  layout.coords = {{{-0.5, -0.25}}, {{0.5, 0.0}}, {{0.0, 0.25}}};
  layout.distances = {0, 1, 0.5, 1, 0, 0.6, 0.5, 0.6, 0};
  write_layout_csv(layout, scratch("layout.csv"));
  std::ifstream csv(scratch("layout.csv"));
  std::string header;
  std::getline(csv, header);
  CHECK(header == "label,x,y");
  write_layout_svg(layout, scratch("map.svg"), {"compass", "compass", "compass"});
  std::ifstream svg(scratch("map.svg"));
  std::stringstream body;
  body << svg.rdbuf();
  CHECK(body.str().find("viewBox=\"0 0 1000 1000\"") != std::string::npos);
  CHECK(body.str().find(">AN</text>") != std::string::npos);
  write_ratios_csv(misrepresentation_ratios(layout), scratch("ratios.csv"));

  std::ofstream(scratch("tree.txt")) << "# balanced\n((1 2)\n (3 4))\n";
  CHECK(read_tree(scratch("tree.txt")).to_string() == GSTree::balanced(4).to_string());
}
