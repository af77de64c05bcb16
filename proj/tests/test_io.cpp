#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoffman/engine.hpp"
#include "hoffman/io.hpp"

using namespace hoffman;

TEST_CASE("CSV parsing") {
  const Matrix M = parse_csv("1, 0\n0,1\n-1,-1\n");
  REQUIRE(M.rows() == 3);
  REQUIRE(M.cols() == 2);
  CHECK(M(2, 0) == -1.0);
  CHECK(parse_csv("").rows() == 0);
  CHECK(parse_csv("# comment only\n").rows() == 0);
  CHECK_THROWS_AS(parse_csv("1,2\n3\n"), IOError);
  CHECK_THROWS_AS(parse_csv("1,x\n"), IOError);
}

TEST_CASE("MatrixMarket array parsing") {
  const std::string text =
      "%%MatrixMarket matrix array real general\n"
      "% a comment\n"
      "2 3\n"
      "1\n4\n2\n5\n3\n6\n";
  const Matrix M = parse_matrix_market(text);
  REQUIRE(M.rows() == 2);
  REQUIRE(M.cols() == 3);
  CHECK(M(0, 0) == 1.0);
  CHECK(M(1, 0) == 4.0);
  CHECK(M(0, 2) == 3.0);
  CHECK_THROWS_AS(parse_matrix_market("not a banner\n1 1\n0\n"), IOError);
}

TEST_CASE("index list parsing") {
  const IndexSet J = parse_index_list("1, 3,5", 5);
  CHECK(J == IndexSet::of({1, 3, 5}, 5));
  CHECK(parse_index_list("", 4).is_empty());
  CHECK_THROWS_AS(parse_index_list("7", 5), std::out_of_range);
  CHECK_THROWS_AS(parse_index_list("a", 5), IOError);
}

TEST_CASE("ledger JSON round trip") {
  Matrix A(3, 2);
  A << 1, 0, 0, 1, -1, -1;
  const NormConfig cfg{NormTag::LInf, NormTag::LInf};
  const HoffmanReport rep = hoffman_inequalities(A, cfg);

  const nlohmann::json j = report_to_json(rep);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("H").get<double>() == doctest::Approx(2.0));
  CHECK(j.at("variant") == "ineq");
  CHECK(j.at("F").size() == 3);

  const CertificateLedger back = ledger_from_json(j);
  CHECK(back.m == rep.ledger.m);
  CHECK(back.best_H == rep.ledger.best_H);
  REQUIRE(back.surjective_F.size() == rep.ledger.surjective_F.size());
  std::vector<IndexSet> lhs = back.surjective_F, rhs = rep.ledger.surjective_F;
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  CHECK(lhs == rhs);
  REQUIRE(back.per_F_values.size() == rep.ledger.per_F_values.size());
  for (const auto& [F, v] : rep.ledger.per_F_values) {
    REQUIRE(back.per_F_values.count(F) == 1);
    CHECK(back.per_F_values.at(F) == v);
  }
}

TEST_CASE("norm tag parsing") {
  CHECK(parse_norm_tag("l1") == NormTag::L1);
  CHECK(parse_norm_tag("LInf") == NormTag::LInf);
  CHECK(parse_norm_tag("l2") == NormTag::L2);
  CHECK_THROWS_AS(parse_norm_tag("l3"), IOError);
}
