#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tribound/algebra_file.hpp"
#include "tribound/catalog.hpp"
#include "tribound/check.hpp"
#include "tribound/cli.hpp"
#include "tribound/errors.hpp"
#include "tribound/face_bounds.hpp"
#include "tribound/render.hpp"

using namespace tribound;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

FaceTable g2_table() {
  BettiVector b = betti_vector(poincare_polynomial(presentation("G2", "F2")));
  FaceTable t;
  t.d = 14;
  t.columns = {"F2"};
  t.vectors = {face_bound_vector(14, 44, b)};
  return t;
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("parse_algebra_file accepts the documented format") {
  GradedPresentation p = parse_algebra_file(
      "# the 14-dimensional rank-2 group, mod 2\n"
      "name G2m2\n"
      "field F2\n"
      "gen degree=3 height=3\n"
      "gen degree=5 height=1\n");
  CHECK(p.name == "G2m2");
  CHECK(p.field_label == "F2");
  REQUIRE(p.generators.size() == 2);
  CHECK(p.generators[0] == Generator{3, 3});
  CHECK(p.generators[1] == Generator{5, 1});

  GradedPresentation point = parse_algebra_file("name P\n");
  CHECK(point.name == "P");
  CHECK(point.field_label == "custom");
  CHECK(point.generators.empty());
  CHECK(formal_dimension(point) == 0);
}

TEST_CASE("parse_algebra_file diagnostics") {
  try {
    parse_algebra_file("gen degree=3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
  }

  CHECK_THROWS_AS(parse_algebra_file(""), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("name A\nname B\n"), DuplicateKeyError);
  CHECK_THROWS_AS(parse_algebra_file("name A\nfield F2\nfield F3\n"),
                  DuplicateKeyError);
  CHECK_THROWS_AS(parse_algebra_file("name A\ngen degree=3 height=1\nfield F2\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_algebra_file("name A\ngen degree=-3 height=1\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("name A\ngen degree=3 height=x\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("name A\ngen degree=3\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("name A\nbogus line\n"), ParseError);
  // degree 0 parses but fails validation
  CHECK_THROWS_AS(parse_algebra_file("name A\ngen degree=0 height=1\n"),
                  InvalidGeneratorError);

  try {
    parse_algebra_file("name A\nfield F2\ngen degree=3 hight=1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column > 1);
  }
}

TEST_CASE("render + parse is the identity on normalized presentations") {
  for (const auto& [group, field] : std::vector<std::pair<std::string, std::string>>{
           {"G2", "F2"}, {"F4", "F3"}, {"E8", "F5"}}) {
    GradedPresentation p = presentation(group, field);
    GradedPresentation q = parse_algebra_file(render_algebra_file(p));
    CHECK(q.name == p.name);
    CHECK(q.field_label == p.field_label);
    CHECK(q.generators == p.generators);
  }
}

TEST_CASE("render_table text") {
  std::string text = render_table(g2_table(), TableFormat::Text);
  auto lines = split_lines(text);
  REQUIRE(lines.size() == 15);  // no header in the single-column layout
  CHECK(lines.front() == "0  44");
  CHECK(lines.back() == "14  36808");
}

TEST_CASE("render_table text comparison marks the per-row maxima") {
  FaceTable t;
  t.d = 52;
  for (const char* field : {"F2", "F3", "F5"}) {
    t.columns.push_back(field);
    BettiVector b = betti_vector(poincare_polynomial(presentation("F4", field)));
    t.vectors.push_back(face_bound_vector(52, 259, b));
  }
  auto lines = split_lines(render_table(t, TableFormat::Text));
  REQUIRE(lines.size() == 54);  // header + 53 rows
  CHECK(lines[0] == "i  F2  F3  F5");
  // row 16: the middle column holds the maximum
  CHECK(lines[17] ==
        "16  1971743019982744645  1972544627081800135*  241874900220997225");
  // rows 0..4 tie across all three columns
  CHECK(lines[1] == "0  259*  259*  259*");
}

TEST_CASE("render_table csv round-trips every value") {
  FaceTable t = g2_table();
  std::string csv = render_table(t, TableFormat::Csv);
  auto lines = split_lines(csv);
  REQUIRE(lines.size() == 16);
  CHECK(lines[0] == "i,bound");
  for (std::size_t row = 1; row < lines.size(); ++row) {
    const std::string& line = lines[row];
    auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    CHECK(std::stol(line.substr(0, comma)) == static_cast<long>(row) - 1);
    CHECK(BigInt(line.substr(comma + 1)) == t.vectors[0].bounds[row - 1]);
  }

  FaceBoundVector empty;
  CHECK(render_table(empty, TableFormat::Csv) == "i,bound\n");
}

TEST_CASE("render_table json is lossless") {
  FaceTable t = g2_table();
  nlohmann::json doc = nlohmann::json::parse(render_table(t, TableFormat::Json));
  CHECK(doc["d"] == 14);
  CHECK(doc["f0"]["F2"] == "44");
  REQUIRE(doc["bounds"]["F2"].size() == 15);
  for (std::size_t i = 0; i < 15; ++i) {
    CHECK(BigInt(doc["bounds"]["F2"][i].get<std::string>()) == t.vectors[0].bounds[i]);
  }
}

TEST_CASE("cli ct") {
  RunResult r = invoke({"ct", "--group", "E6", "--field", "F2"});
  CHECK(r.code == 0);
  CHECK(r.out == "486\n");

  r = invoke({"ct", "--group", "G2", "--method", "rational"});
  CHECK(r.code == 0);
  CHECK(r.out == "28\n");

  r = invoke({"ct", "--group", "G2", "--method", "rankdim"});
  CHECK(r.code == 0);
  CHECK(r.out == "24\n");

  r = invoke({"ct", "--file", "missing.alg"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("missing.alg") != std::string::npos);

  r = invoke({"ct"});
  CHECK(r.code == 1);

  r = invoke({"ct", "--group", "G2", "--file", "x.alg"});
  CHECK(r.code == 1);
}

TEST_CASE("cli ct --file") {
  const std::string path = "g2_mod2_test.alg";
  {
    std::ofstream f(path);
    f << "name G2m2\nfield F2\ngen degree=3 height=3\ngen degree=5 height=1\n";
  }
  RunResult r = invoke({"ct", "--file", path});
  CHECK(r.code == 0);
  CHECK(r.out == "44\n");
  std::remove(path.c_str());
}

TEST_CASE("cli faces and total") {
  RunResult r = invoke({"faces", "--group", "G2", "--field", "F2", "--i", "14"});
  CHECK(r.code == 0);
  CHECK(r.out == "36808\n");

  r = invoke({"faces", "--group", "G2", "--field", "F2"});
  CHECK(r.code == 0);
  CHECK(split_lines(r.out).size() == 15);

  r = invoke({"faces", "--group", "G2", "--field", "F2", "--i", "99"});
  CHECK(r.code == 2);

  r = invoke({"total", "--group", "G2", "--field", "F2"});
  CHECK(r.code == 0);
  CHECK(r.out == "11746824\n");

  r = invoke({"total", "--group", "G2", "--field", "Q"});
  CHECK(r.out == "4059144\n");
}

TEST_CASE("cli poincare") {
  RunResult r = invoke({"poincare", "--group", "G2", "--field", "F3"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 + t^3 + t^11 + t^14\n");
}

TEST_CASE("cli classical") {
  RunResult r = invoke({"classical", "--family", "U", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "11\n");

  r = invoke({"classical", "--family", "Sp", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "8\n");
  CHECK(r.err.find("rounded up") != std::string::npos);

  r = invoke({"classical", "--family", "U", "--n", "2", "--facets"});
  CHECK(r.code == 0);
  CHECK(r.out == "derived: 29\nclosed-form: 29\nagree: yes\n");

  r = invoke({"classical", "--family", "SO", "--n", "2", "--facets"});
  CHECK(r.code == 2);
}

TEST_CASE("cli catalog list") {
  RunResult r = invoke({"catalog", "list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("G2 [F2,F3,F5,Q]") != std::string::npos);
  CHECK(r.out.find("SO_mod2 (parametric n) [F2]") != std::string::npos);
  CHECK(split_lines(r.out).size() == list_entries().size());
}

TEST_CASE("cli usage errors") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"faces", "--group", "G2"}).code == 1);          // missing --field
  CHECK(invoke({"faces", "--group", "G2", "--field", "F2", "--format", "yaml"}).code == 1);
  CHECK(invoke({"ct", "--file", "x", "--method", "rational"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("cli validation errors") {
  CHECK(invoke({"ct", "--group", "Nope", "--field", "F2"}).code == 2);
  CHECK(invoke({"ct", "--group", "G2", "--field", "F9"}).code == 2);
  CHECK(invoke({"poincare", "--group", "SU", "--field", "Q"}).code == 2);
}

TEST_CASE("cli output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"faces", "--group", "F4", "--field", "F2,F3,F5"},
        std::vector<std::string>{"faces", "--group", "G2", "--field", "F2",
                                 "--format", "json"},
        std::vector<std::string>{"catalog", "list"}}) {
    RunResult a = invoke(args);
    RunResult b = invoke(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("check ledger") {
  CheckLedger ledger = check_against_embedded();
  CHECK(ledger.clean());
  CHECK(ledger.entries.size() > 200);

  bool su_annotated_mismatch = false;
  bool so_annotated = false;
  bool kahler_annotated_mismatch = false;
  bool e7f3_annotated = false;
  for (const CheckEntry& e : ledger.entries) {
    if (e.id.rfind("facet.SU.", 0) == 0 && !e.match && !e.note.empty()) {
      su_annotated_mismatch = true;
    }
    if (e.id.rfind("facet.SO_", 0) == 0 && !e.note.empty()) {
      so_annotated = true;
    }
    if (e.id == "facet.kahler.m1" && !e.match && !e.note.empty()) {
      kahler_annotated_mismatch = true;
    }
    if (e.id == "totals.E7.F3" && !e.match && !e.note.empty()) {
      e7f3_annotated = true;
    }
  }
  CHECK(su_annotated_mismatch);
  CHECK(so_annotated);
  CHECK(kahler_annotated_mismatch);
  CHECK(e7f3_annotated);

  // an unannotated mismatch must flip the ledger to failing
  CheckLedger bad;
  bad.entries.push_back({"synthetic", "1", "2", false, ""});
  CHECK_FALSE(bad.clean());
  bad.entries[0].note = "documented";
  CHECK(bad.clean());
}

TEST_CASE("cli report --check") {
  RunResult r = invoke({"report", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ct.E7 expected=1288 computed=1288 ok") != std::string::npos);
  CHECK(r.out.find("F4.F2.f8 expected=936843104470 computed=936843104470 ok") !=
        std::string::npos);
  CHECK(r.out.find("facet.SU.n3 expected=72 computed=69 MISMATCH #") !=
        std::string::npos);
  CHECK(r.out.find("summary: ") != std::string::npos);
}

TEST_CASE("to_sig_figs") {
  CHECK(to_sig_figs(BigInt("11746824"), 6) == "1.17468e7");
  CHECK(to_sig_figs(BigInt("999999500"), 6) == "1.00000e9");
  CHECK(to_sig_figs(BigInt("44"), 6) == "4.40000e1");
  CHECK(to_sig_figs(BigInt("1859294"), 3) == "1.86e6");
}
