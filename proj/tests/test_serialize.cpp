// Copyright 2026 The hellycert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>

#include "hellycert/hellycert.hpp"
#include "oracles.hpp"

using namespace hellycert;
using oracle::q;
using oracle::vec;

namespace {

std::vector<InstanceBundle> corpus() {
  return {gen_box(2), gen_simplex_validity(2), gen_lifted(octagon(), 3), gen_critical_bundle(2)};
}

}  // namespace

TEST(Json, RationalStrings) {
  EXPECT_EQ(json(q(3, 1)).get<std::string>(), "3");
  EXPECT_EQ(json(q(-6, 4)).get<std::string>(), "-3/2");
  EXPECT_EQ(json("4/6").get<Rational>(), q(2, 3));
  EXPECT_THROW(json(3).get<Rational>(), ParseError);
  EXPECT_THROW(json("x/2").get<Rational>(), ParseError);
  EXPECT_THROW(json("1/0").get<Rational>(), ParseError);
}

TEST(Json, ShapesMatchFormat) {
  Halfspace h{vec({1, q(-1, 2)}), q(3, 4)};
  EXPECT_EQ(json(h).dump(), R"({"a":["1","-1/2"],"b":"3/4"})");
  Polyhedron p(1, {Halfspace{vec({1}), q(1)}});
  EXPECT_EQ(json(p).dump(), R"({"dim":1,"rows":[{"a":["1"],"b":"1"}]})");
  FarkasCert f{{{0, q(1)}, {2, q(1, 2)}}};
  EXPECT_EQ(json(f).dump(), R"({"kind":"farkas","multipliers":[[0,"1"],[2,"1/2"]]})");
}

TEST(Json, CertificatesRoundTrip) {
  for (const auto& b : corpus()) {
    for (const auto& c : b.certificates) {
      std::string text = dump(json(c.tree));
      BCTree back = parse_document<BCTree>(text);
      EXPECT_EQ(back, c.tree) << b.name << " " << c.goal;
      EXPECT_EQ(dump(json(back)), text);
      EXPECT_TRUE(check_goal(back));
    }
  }
}

TEST(Json, OtherCertificateKinds) {
  BoundCert bc{vec({1, 0}), q(-1), {{1, q(1)}}};
  EXPECT_EQ(json(bc).get<BoundCert>(), bc);
  DominanceCert dc{Halfspace{vec({1}), q(2)}, {{0, q(1)}}};
  EXPECT_EQ(json(dc).get<DominanceCert>(), dc);
  EXPECT_THROW(json(dc).get<FarkasCert>(), ParseError);
  Disjunction g = Disjunction::general({{Halfspace{vec({1}), q(0)}}, {Halfspace{vec({-1}), q(-1)}}});
  EXPECT_EQ(json(g).get<Disjunction>(), g);
  Goal m = MembershipGoal{vec({q(5, 2)}), Halfspace{vec({1}), q(2)}};
  EXPECT_EQ(json(m).get<Goal>(), m);
}

TEST(Json, RegionRoundTrip) {
  Region r{box(2, q(0), q(3)), Polyhedron(2, {Halfspace{zeros(2), q(-1)}}), {1}};
  Region back = json(r).get<Region>();
  EXPECT_EQ(back.outer, r.outer);
  EXPECT_EQ(back.inner, r.inner);
  EXPECT_EQ(back.open_rows, r.open_rows);
  json bad = json(r);
  bad["open_rows"] = json::array({9});
  EXPECT_THROW(bad.get<Region>(), ParseError);
  EXPECT_THROW(json::parse(R"({"alpha":["2","4"],"beta":"0"})").get<GSplit>(), ParseError);
}

TEST(Json, MalformedDocuments) {
  std::string good = dump(json(gen_box(1).certificate("hull")));
  EXPECT_THROW(parse_document<BCTree>("{"), ParseError);
  EXPECT_THROW(parse_document<BCTree>("[]"), ParseError);
  json j = json::parse(good);
  j.erase("root");
  EXPECT_THROW(parse_document<BCTree>(j.dump()), ParseError);
  j = json::parse(good);
  j["context"]["dim"] = 3;
  EXPECT_THROW(parse_document<BCTree>(j.dump()), ParseError);
  j = json::parse(good);
  j["context"]["dim"] = -1;
  EXPECT_THROW(parse_document<BCTree>(j.dump()), ParseError);
  j = json::parse(good);
  j["root"]["label"]["type"] = "teleport";
  EXPECT_THROW(parse_document<BCTree>(j.dump()), ParseError);
  j = json::parse(good);
  j["system"]["rows"][0]["a"] = json::array({"1", "2"});
  EXPECT_THROW(parse_document<BCTree>(j.dump()), ParseError);
  j = json::parse(good);
  j["root"]["label"]["step"]["certifier"]["multipliers"][0] = json::array({-1, "1"});
  EXPECT_THROW(parse_document<BCTree>(j.dump()), ParseError);
}

TEST(Json, ReportDocument) {
  InstanceBundle b = gen_box(1);
  ComplexityReport r = complexity_report(b, standard_family(b), facet_witnesses(b.hull_target));
  json j = report_json(r);
  EXPECT_EQ(j["hull"], 5);
  EXPECT_EQ(j["facet"], 3);
  EXPECT_EQ(j["relative_to"], "move family");
  EXPECT_EQ(j["validity"].size(), 2u);
}

TEST(Bundle, DirectoryRoundTrip) {
  auto dir = std::filesystem::temp_directory_path() / "hellycert_bundle_test";
  std::filesystem::remove_all(dir);
  InstanceBundle b = gen_simplex_validity(2);
  write_bundle(dir, b);
  EXPECT_TRUE(std::filesystem::exists(dir / "instance.json"));
  EXPECT_TRUE(std::filesystem::exists(dir / "claims.json"));
  EXPECT_TRUE(std::filesystem::exists(dir / "validity.json"));
  InstanceBundle back = read_bundle(dir);
  EXPECT_EQ(back.name, b.name);
  EXPECT_EQ(back.system, b.system);
  EXPECT_EQ(back.hull_target, b.hull_target);
  ASSERT_EQ(back.certificates.size(), b.certificates.size());
  for (std::size_t i = 0; i < b.certificates.size(); ++i) EXPECT_EQ(back.certificates[i].tree, b.certificates[i].tree);
  EXPECT_TRUE(verify_bundle(back));
  write_file(dir / "claims.json", "{\"claims\": [{\"goal\": \"validity\", \"size\": -5}]}");
  EXPECT_THROW(read_bundle(dir), ParseError);
  std::filesystem::remove_all(dir);
}
