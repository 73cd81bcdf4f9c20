#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "silab/cli.hpp"
#include "silab/corpus.hpp"
#include "silab/report.hpp"
#include "test_helpers.hpp"

using namespace silab;

namespace {

// Runs the CLI in-process with stdout captured, returning the exit code.
int run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv = {"silab"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream sink;
  std::streambuf* old = std::cout.rdbuf(sink.rdbuf());
  int rc = run_cli(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old);
  return rc;
}

}  // namespace

TEST_CASE("parse_entry grammar") {
  CHECK(parse_entry("3/5") == GaussianRational(3, 5));
  CHECK(parse_entry("4/5+3/5i") == GaussianRational(Rational(4, 5), Rational(3, 5)));
  CHECK(parse_entry("-i") == GaussianRational(Rational(0), Rational(-1)));
  CHECK(parse_entry("i") == GaussianRational::i());
  CHECK(parse_entry("2i") == GaussianRational(Rational(0), Rational(2)));
  CHECK(parse_entry("1-i") == GaussianRational(Rational(1), Rational(-1)));
  CHECK(parse_entry(" 3 / 5 ") == GaussianRational(3, 5));
  CHECK(parse_entry("-7") == GaussianRational(-7));
  CHECK(parse_entry("0") == GaussianRational(0));
  CHECK(parse_entry("3/13+4/13i") ==
        GaussianRational(Rational(3, 13), Rational(4, 13)));
  CHECK(parse_entry("09/012") == GaussianRational(3, 4));  // leading zeros are plain decimal

  CHECK_THROWS_AS(parse_entry("3//5"), ParseError);
  CHECK_THROWS_AS(parse_entry(""), ParseError);
  CHECK_THROWS_AS(parse_entry("1+2"), ParseError);
  CHECK_THROWS_AS(parse_entry("i+i"), ParseError);
  CHECK_THROWS_AS(parse_entry("3/0"), ParseError);
  CHECK_THROWS_AS(parse_entry("2x"), ParseError);

  // Error positions point at the offending character.
  try {
    parse_entry("3//5");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.pos == 2);
  }
}

TEST_CASE("print/parse round trip on canonical forms") {
  std::mt19937_64 rng(19);
  for (int it = 0; it < 300; ++it) {
    GaussianRational z = silab::testing::random_scalar(rng, 9);
    CHECK(parse_entry(print_entry(z)) == z);
  }
  for (const char* s : {"0", "i", "-i", "1", "-1", "2/3", "-2/3i", "1+i", "1-i", "3/5-4/5i"}) {
    GaussianRational z = parse_entry(s);
    CHECK(parse_entry(print_entry(z)) == z);
  }
}

TEST_CASE("matrix document round trip") {
  MatrixDocument doc = parse_matrix_document(
      R"({"name": "rns", "rows": [["3/5", "4/5"], ["0", "0"]]})");
  CHECK(doc.name == "rns");
  CHECK(doc.matrix == silab::testing::m({{"3/5", "4/5"}, {"0", "0"}}));

  MatrixDocument again = parse_matrix_document(matrix_document_json(doc));
  CHECK(again.matrix == doc.matrix);
  CHECK(again.name == doc.name);

  // Integer cells are accepted.
  CHECK(parse_matrix_document(R"({"rows": [[0, 1], [0, 0]]})").matrix ==
        silab::testing::m({{"0", "1"}, {"0", "0"}}));

  CHECK_THROWS_AS(parse_matrix_document("not json"), ParseError);
  CHECK_THROWS_AS(parse_matrix_document(R"({"rows": []})"), ParseError);
  CHECK_THROWS_AS(parse_matrix_document(R"({"rows": [["1"], ["2", "3"]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix_document(R"({"rows": [["3//5"]]})"), ParseError);
}

TEST_CASE("report JSON is byte-stable across runs") {
  MatrixDocument doc = {std::string("rns"), silab::testing::m({{"3/5", "4/5"}, {"0", "0"}})};
  Report r1 = make_report(doc, 6, 20000);
  Report r2 = make_report(doc, 6, 20000);
  CHECK(report_json(r1) == report_json(r2));
  CHECK(report_json(r1).find("elapsed") == std::string::npos);
}

TEST_CASE("corpus shape") {
  CHECK(corpus().size() >= 25);
  std::set<std::string> names;
  int designated = 0;
  for (const auto& e : corpus()) {
    CHECK(names.insert(e.name).second);  // unique names
    if (e.word_designated) {
      ++designated;
      CHECK(rank(e.matrix) == 1);
    }
  }
  CHECK(designated == 6);
  CHECK_NOTHROW(corpus_entry("nilpotent-e12"));
  CHECK_THROWS_AS(corpus_entry("no-such-matrix"), std::invalid_argument);
}

TEST_CASE("golden classify report") {
  std::ifstream f(std::string(SILAB_TEST_DIR) + "/golden/classify_nilpotent_e12.json");
  REQUIRE(f.good());
  std::ostringstream buf;
  buf << f.rdbuf();
  const CorpusEntry& e = corpus_entry("nilpotent-e12");
  Report r = make_report({e.name, e.matrix}, 6, 20000);
  CHECK(report_json(r) + "\n" == buf.str());
}

TEST_CASE("agreement states") {
  MatrixDocument doc = {std::nullopt, silab::testing::m({{"0", "1"}, {"0", "0"}})};
  CHECK(make_report(doc, 0, 20000).oracle.agreement == "not-run");
  CHECK(make_report(doc, 6, 20000).oracle.agreement == "agree");

  // Growing scalars: both oracle answers inconclusive.
  MatrixDocument grow = {std::nullopt, silab::testing::m({{"3", "4"}, {"-4", "3"}})};
  CHECK(make_report(grow, 6, 20000).oracle.agreement == "oracle-inconclusive");
}

TEST_CASE("closure element cap") {
  ExactMatrix t = silab::testing::m({{"0", "2"}, {"0", "0"}});
  ClosureResult s = generate_closure({t}, true, 40, 5);
  CHECK_FALSE(s.saturated);
  CHECK(s.elements.size() >= 5);
  CHECK(s.elements.size() < 20);  // stopped well before the length bound
}

TEST_CASE("entry parser never crashes on noise") {
  std::mt19937_64 rng(123);
  const std::string alphabet = "0123456789/+-i. x";
  for (int it = 0; it < 2000; ++it) {
    std::string s;
    size_t len = rng() % 12;
    for (size_t k = 0; k < len; ++k) s += alphabet[rng() % alphabet.size()];
    try {
      GaussianRational z = parse_entry(s);
      (void)z;
    } catch (const ParseError&) {
      // rejected input; fine
    }
  }
}

TEST_CASE("SI_LAB_MAX_ELEMS override") {
  setenv("SI_LAB_MAX_ELEMS", "7", 1);
  CHECK(run({"oracle", "nilpotent-e12-scaled-2", "--max-len", "30"}) == 0);
  unsetenv("SI_LAB_MAX_ELEMS");
}

TEST_CASE("cli exit codes") {
  CHECK(run({"classify", "--inline", R"({"rows": [["0", "1"], ["0", "0"]]})"}) == 0);
  CHECK(run({"classify", "--inline", R"({"rows": [["3//5"]]})"}) == 2);
  CHECK(run({"classify", "nilpotent-e12", "--oracle-max-len", "6", "--json"}) == 0);
  CHECK(run({"classify", "no-such-input"}) == 2);
  CHECK(run({"trace-norm", "4/5", "25/16"}) == 0);
  CHECK(run({"trace-norm", "4/5", "0"}) == 2);
  CHECK(run({"reduce", "TtT", "nilpotent-e12"}) == 0);
  CHECK(run({"reduce", "TxT", "nilpotent-e12"}) == 1);
  CHECK(run({"oracle", "normal-i", "--max-len", "6"}) == 0);
}
