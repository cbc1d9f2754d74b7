#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "intdist/error.hpp"
#include "intdist/extremal.hpp"
#include "intdist/formulas.hpp"
#include "intdist/kakeya.hpp"
#include "intdist/serialize.hpp"
#include "intdist/tables.hpp"

using namespace intdist;

TEST_CASE("distribution JSON schema and round trip") {
  Distribution d(31);
  d.add(0, 10);
  d.add(1, 6);
  d.add(2, 15);
  const json j = to_json(d, 5);
  CHECK(j.dump() == R"({"counts":{"0":10,"1":6,"2":15},"q":5,"total":31})");
  CHECK(distribution_from_json(json::parse(j.dump())) == d);

  Distribution sparse(7);
  sparse.add(3, 0);
  sparse.add(5, 7);
  CHECK(to_json(sparse, 2)["counts"].size() == 1);
  CHECK(distribution_from_json(to_json(sparse, 2)) == sparse);
}

TEST_CASE("profile JSON") {
  const auto f = GaloisField::of_order(5);
  const auto prof = poly_profile(FieldPoly::monomial(f, 2));
  const json j = to_json(prof);
  CHECK(j["q"] == 5);
  CHECK(j["f"] == json::array({0, 0, 1}));
  CHECK(j["v"]["counts"]["0"] == 10);
  CHECK(j["rows"].size() == 5);
  CHECK(j["rows"][0]["c"] == 0);
  CHECK(j["rows"][0]["M"]["2"] == 2);
  CHECK(j["N_f"].empty());
  CHECK(distribution_from_json(j["v"]) == prof.v);
}

TEST_CASE("census JSON and CSV") {
  const auto c = monomial_census(GaloisField::of_order(4));
  CHECK(census_from_json(json::parse(to_json(c).dump())) == c);
  CHECK(to_csv(c) == "size,exponents\n10,2\n12,2;3\n13,1;3\n16,1\n");
}

TEST_CASE("CSV") {
  Distribution d(13);
  d.add(1, 12);
  d.add(4, 1);
  CHECK(to_csv(d) == "i,count\n1,12\n4,1\n");
  const auto prof = poly_profile(FieldPoly::monomial(GaloisField::of_order(2), 1));
  CHECK(rows_csv(prof) == "c,i,count\n0,1,2\n1,0,1\n1,2,1\n");
}

TEST_CASE("other JSON documents") {
  const auto plane = ProjectivePlane::create(GaloisField::of_order(3));
  const auto s = construct_example(ExampleKind::Line, plane);
  const json pts = to_json(s);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0].size() == 3);
  const json b = to_json(check_bounds(s), 3);
  CHECK(b["u"]["counts"]["4"] == 1);
  CHECK(b.contains("checks"));
  const json r = to_json(verify_family({FamilyTag::QMinusOne, 0}, GaloisField::of_order(5)));
  CHECK(r["mismatches"].empty());
  const json sp = to_json(spectrum(plane));
  CHECK(sp["attained"] == json::array({0, 2, 3}));
  CHECK(sp["method"] == "exhaustive");
}

TEST_CASE("rendered rows") {
  CHECK(render_nonhitting_row(compute_nonhitting_row(GaloisField::of_order(8))) ==
        "(1,7), ({2,4},28), ({3,5},21), (6,28), (7,13)");
  const auto row16 = render_nonhitting_row(compute_nonhitting_row(GaloisField::of_order(16)));
  CHECK(row16.find("(12,70)*") != std::string::npos);
  const auto row9 = render_nonhitting_row(compute_nonhitting_row(GaloisField::of_order(9)));
  CHECK(row9.find("(6,28)*") != std::string::npos);
  const auto k8 = render_kakeya_row(compute_kakeya_row(GaloisField::of_order(8)));
  CHECK(k8.find("(36,{2,4,6})") != std::string::npos);
  CHECK(k8.find("(42,{})") != std::string::npos);
  const auto t1 = render_intersection_table(GaloisField::of_order(9), 2);
  CHECK(t1.find("0:36 1:9 2:36") != std::string::npos);
  CHECK(render_dual_kakeya_table(GaloisField::of_order(4), 2).find("|K|") != std::string::npos);
}

TEST_CASE("golden files") {
  const auto t2 = load_golden(golden_path(2));
  CHECK(t2.size() == 10);
  CHECK(t2.at(2) == "(1,1)");
  const auto t4 = load_golden(golden_path(4));
  CHECK(t4.size() == 7);
  CHECK_THROWS_AS(load_golden("/nonexistent/golden.txt"), Error);
  const std::string bad = "golden_malformed.txt";
  std::ofstream(bad) << "# header\n5 (1,4)\n";
  CHECK_THROWS_AS(load_golden(bad), Error);
  std::remove(bad.c_str());
}
