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

#include "hellycert/instances.hpp"
#include "oracles.hpp"
#include "soundness.hpp"

using namespace hellycert;
using oracle::q;
using oracle::vec;

namespace {

BCTree on_segment(const Goal& goal, BCNode root) { return BCTree{EmbeddingContext{1}, box(1, q(0), q(3)), root, goal}; }

BCNode labelled(std::vector<Halfspace> first, SecondLabel label) { return BCNode{std::move(first), label, {}}; }

}  // namespace

TEST(Soundness, AcceptedCorpusIsSound) {
  for (const auto& b : {gen_box(1), gen_box(2), gen_simplex_validity(2), gen_critical_bundle(2)})
    for (const auto& c : b.certificates) {
      auto j = soundness::judge(c.tree);
      EXPECT_TRUE(j.sound) << b.name << " " << c.goal << ": " << j.why;
    }
}

TEST(Soundness, FarkasLeafOverNonemptySet) {
  auto j = soundness::judge(on_segment(InfeasibilityGoal{}, leaf(LeafFarkas{})));
  EXPECT_FALSE(j.sound);
}

TEST(Soundness, DominanceLeafOutsideGoal) {
  auto j = soundness::judge(on_segment(ValidityGoal{Halfspace{vec({1}), q(2)}}, leaf(LeafDominance{})));
  EXPECT_FALSE(j.sound);
  EXPECT_TRUE(soundness::judge(on_segment(ValidityGoal{Halfspace{vec({1}), q(3)}}, leaf(LeafDominance{}))).sound);
}

TEST(Soundness, BranchLosingLatticePoint) {
  Halfspace left{vec({1}), q(0)}, right = geq(vec({1}), q(2));
  BCNode root = labelled({}, Branch{Disjunction::general({{left}, {right}})});
  root.children = {labelled({left}, LeafDominance{}), labelled({right}, LeafDominance{})};
  EXPECT_FALSE(soundness::judge(on_segment(ValidityGoal{Halfspace{vec({1}), q(3)}}, root)).sound);
  root.children[1].first_label = {geq(vec({1}), q(1))};
  EXPECT_TRUE(soundness::judge(on_segment(ValidityGoal{Halfspace{vec({1}), q(3)}}, root)).sound);
}

TEST(Soundness, CutRemovingLatticePoint) {
  Halfspace cut{vec({1}), q(1)};
  BCNode root = labelled({}, Cut{});
  root.children = {labelled({Halfspace{vec({0}), q(-1)}}, LeafFarkas{}), labelled({cut}, LeafDominance{})};
  auto j = soundness::judge(on_segment(ValidityGoal{Halfspace{vec({1}), q(3)}}, root));
  EXPECT_FALSE(j.sound);
  EXPECT_NE(j.why.find("cut removes"), std::string::npos) << j.why;
}

TEST(Soundness, SeparatorMustCutOffPoint) {
  BCTree t = on_segment(MembershipGoal{vec({1}), Halfspace{vec({1}), q(3)}}, leaf(LeafDominance{}));
  EXPECT_FALSE(soundness::judge(t).sound);
}
