#include <doctest.h>

#include "helpers.hpp"
#include "weddle/json_io.hpp"
#include "weddle/tensor.hpp"

using namespace weddle;
using weddle::test::mat;
using weddle::test::P;

TEST_CASE("rationals") {
  CHECK(rat_to_json(Rat(-3, 2)) == Json("-3/2"));
  CHECK(rat_from_json(Json("6/4")) == Rat(3, 2));
  CHECK(rat_from_json(Json(7)) == 7);
  CHECK_THROWS(rat_from_json(Json(0.5)));
}

TEST_CASE("tensor faces") {
  const Tensor3 t = random_n1(3, 4);
  const Json j = tensor_to_json(t);
  CHECK(j.at("dim") == 3);
  CHECK(j.at("faces")[2][0][1] == Json(to_string(t.at(0, 1, 2))));
  CHECK(tensor_from_json(j) == t);
  Json bad = j;
  bad["dim"] = 4;
  CHECK_THROWS(tensor_from_json(bad));
  CHECK_THROWS(tensor_from_json(Json{{"faces", Json::array({Json::array({Json::array({"1", "2"})})})}}));
}

TEST_CASE("systems and polynomials") {
  LinearSystem s;
  s.n = 1;
  s.quadrics = {mat({{1, 0}, {0, 0}}), mat({{0, 1}, {1, 0}})};
  const Json j = system_to_json(s);
  CHECK(system_from_json(j).quadrics == s.quadrics);
  CHECK_THROWS(system_from_json(Json{{"n", 1}}));
  const MultiPoly f = P("x0^2*x1 - 1/2*x2^3", 3);
  CHECK(poly_from_json(poly_to_json(f)) == f);
  CHECK(poly_to_json(f).at("poly") == "x0^2*x1 - 1/2*x2^3");
}

TEST_CASE("solution sets") {
  SolutionSet s;
  s.certified = true;
  Cluster c;
  c.point = {{1.0, 0.0}, {0.0, -1.0}};
  c.rational_match = std::vector<Rat>{Rat(1), Rat(0)};
  s.clusters.push_back(c);
  const Json j = solution_set_to_json(s);
  CHECK(j.at("count") == 1);
  CHECK(j.at("certified") == true);
  CHECK(j.at("clusters")[0].at("point")[1][1] == -1.0);
  CHECK(j.at("clusters")[0].at("rational_match")[0] == "1");
}
