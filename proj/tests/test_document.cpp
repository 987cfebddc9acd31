#include "doctest.h"

#include <sstream>

#include "cid/document.hpp"
#include "cid/runner.hpp"

using namespace cid;

namespace {

const char* kOrder16 = R"(# order-16 example
cluster C
point 1 root
point 2 parent 1
point 3 parent 2 satellite 1
point 4 parent 3
point 5 parent 4 satellite 3
point 6 parent 5
point 7 parent 6 satellite 5
point 8 parent 7
point 9 parent 8 satellite 7
ideal J on C mults 16 8 8 4 4 2 2 1 1
)";

}  // namespace

TEST_CASE("parse a two-point chain") {
  Document doc = parse_document("cluster C\npoint 1 root\npoint 2 parent 1\n");
  REQUIRE(doc.clusters.count("C") == 1);
  const Cluster& c = doc.clusters.at("C");
  REQUIRE(c.size() == 2);
  CHECK(c.point(2) == ClusterPoint{1, 0});
}

TEST_CASE("parse the order-16 ideal from its multiplicity sequence") {
  Document doc = parse_document(kOrder16);
  const CompleteIdeal& j = doc.ideals.at("J");
  CHECK(order_of(j) == 16);
  CHECK(j.divisor.coeff.back() == 426);
  CHECK(point_basis(j) == Vec{16, 8, 8, 4, 4, 2, 2, 1, 1});
}

TEST_CASE("parse divisor, values-form ideal, monomial, param") {
  Document doc = parse_document(
      "cluster C\npoint 1 root\npoint 2 parent 1\n"
      "divisor D on C values 0 1\n"
      "ideal I on C values 0 1\n"
      "monomial M gens 1,0 0,2\n"
      "param epsilon 1/2\n");
  CHECK(doc.divisors.at("D").coeff == Vec{0, 1});
  CHECK(doc.ideals.at("I").divisor.coeff == Vec{1, 1});  // canonicalized
  CHECK(doc.monomials.at("M").vertices ==
        std::vector<LatticePoint>{{0, 2}, {1, 0}});
  CHECK(doc.params.at("epsilon") == std::vector<std::string>{"1/2"});
}

TEST_CASE("syntax errors carry line numbers") {
  CHECK_THROWS_AS(parse_document("cluster C\npoint 1 root\npoint 2 satellite 1\n"),
                  SyntaxError);
  try {
    parse_document("cluster C\npoint 1 root\npoint 2 satellite 1\n");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_document("divisor D on X values 1\n"), SyntaxError);
  CHECK_THROWS_AS(
      parse_document("cluster C\npoint 1 root\ndivisor D on C values 1 2\n"),
      SyntaxError);
  // non-antinef multiplicity data is a load error
  CHECK_THROWS_AS(
      parse_document(
          "cluster C\npoint 1 root\npoint 2 parent 1\nideal I on C mults 1 2\n"),
      SyntaxError);
}

TEST_CASE("parse-emit-parse is the identity") {
  Document doc = parse_document(kOrder16);
  Document again = parse_document(emit_document(doc));
  CHECK(doc == again);
  CHECK(emit_document(doc) == emit_document(again));
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == Rat(3));
  CHECK(parse_rational("53/48") == Rat(53, 48));
  CHECK(parse_rational("-1/2") == Rat(-1, 2));
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
}

TEST_CASE("runner: basic queries") {
  std::string text =
      "cluster C\npoint 1 root\npoint 2 parent 1\n"
      "divisor D on C values 0 1\n"
      "ideal I on C values 1 2\n";
  RunResult r = run_on_text({"canonical", "C"}, text);
  CHECK(r.exit_code == 0);
  CHECK(r.report == "canonical 1 2\n");

  r = run_on_text({"unload", "D"}, text);
  CHECK(r.report == "unload 1 1\n");

  r = run_on_text({"matrix", "C"}, text);
  CHECK(r.report == "matrix_row 1 -2 1\nmatrix_row 2 1 -1\n");

  r = run_on_text({"factor", "I"}, text);
  CHECK(r.report == "factor 2 1\nsimple true\n");

  r = run_on_text({"order", "I"}, text);
  CHECK(r.report == "order 1\n");

  r = run_on_text({"colength", "I"}, text);
  CHECK(r.report == "colength 2\n");

  r = run_on_text({"mult", "I", "-c", "3/2"}, text);
  CHECK(r.report == "mult_values 1 1\nmult_mults 1 0\n");

  r = run_on_text({"jump", "I", "--max", "3/2"}, text);
  CHECK(r.report == "jumping 3/2\n");

  r = run_on_text({"validate"}, text);
  CHECK(r.report == "valid C true\n");
}

TEST_CASE("runner: exit codes") {
  std::string text = "cluster C\npoint 1 root\n";
  CHECK(run_on_text({"canonical", "X"}, text).exit_code == 1);  // domain
  CHECK(run_on_text({"canonical", "C"}, "point 1 root\n").exit_code == 2);
  CHECK(run_on_text({"bogus"}, text).exit_code == 1);
}

TEST_CASE("runner: realize on the order-16 document") {
  RunResult r = run_on_text({"realize", "J"}, kOrder16);
  CHECK(r.exit_code == 0);
  CHECK(r.report.find("epsilon_bound 5/48\n") != std::string::npos);
  CHECK(r.report.find("epsilon 23/221\n") != std::string::npos);
  CHECK(r.report.find("c 244/221\n") != std::string::npos);
  CHECK(r.report.find("N 16\n") != std::string::npos);
  CHECK(r.report.find("verification OK\n") != std::string::npos);

  // certificate is emitted in the document grammar: re-parse and re-verify
  std::string cert_text;
  std::istringstream in(r.report);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("cluster ", 0) == 0 || line.rfind("point ", 0) == 0 ||
        line.rfind("ideal ", 0) == 0)
      cert_text += line + "\n";
  }
  Document cert = parse_document(cert_text);
  const CompleteIdeal& p = cert.ideals.at("I");
  Vec expect{16, 8, 8, 4, 4, 2, 2, 1, 1};
  expect.insert(expect.end(), 16, 1);
  CHECK(point_basis(p) == expect);

  RunResult back = run_on_text({"mult", "I", "-c", "244/221"}, cert_text);
  CHECK(back.exit_code == 0);
  std::string basis = "mult_mults 16 8 8 4 4 2 2 1 1";
  for (int k = 0; k < 16; ++k) basis += " 0";
  CHECK(back.report.find(basis + "\n") != std::string::npos);

  // the endpoint exponent 53/48 yields a verification failure (exit 3)
  RunResult endpoint = run_on_text({"realize", "J", "--c", "53/48"}, kOrder16);
  CHECK(endpoint.exit_code == 3);
  CHECK(endpoint.report.find("verification FAIL\n") != std::string::npos);
}

TEST_CASE("runner: adjoint") {
  std::string text = "cluster C\npoint 1 root\nideal J on C mults 1\n";
  RunResult r = run_on_text({"adjoint", "J"}, text);
  CHECK(r.exit_code == 0);
  CHECK(r.report == "adjoint true\nwitness J(J^2)=J OK\n");

  std::string text2 =
      "cluster C\npoint 1 root\npoint 2 parent 1\npoint 3 parent 2 satellite 1\n"
      "ideal J on C mults 2 1 1\n";
  r = run_on_text({"adjoint", "J"}, text2);
  CHECK(r.exit_code == 0);
  CHECK(r.report == "adjoint false\n");
}

TEST_CASE("runner: oracle subcommands") {
  std::string text =
      "cluster C\npoint 1 root\npoint 2 parent 1\n"
      "divisor D on C values 0 1\n"
      "monomial M gens 1,0 0,2\n";
  RunResult r = run_on_text({"oracle", "closure", "D"}, text);
  CHECK(r.exit_code == 0);
  CHECK(r.report == "closure 1 1\nagrees_unload true\n");

  r = run_on_text({"oracle", "cross", "M", "-c", "3/2"}, text);
  CHECK(r.exit_code == 0);
  CHECK(r.report == "cross true\n");
}

TEST_CASE("runner reports are deterministic") {
  RunResult a = run_on_text({"realize", "J"}, kOrder16);
  RunResult b = run_on_text({"realize", "J"}, kOrder16);
  CHECK(a.report == b.report);
}
