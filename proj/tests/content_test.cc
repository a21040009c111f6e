// Copyright 2026 The Annograph Authors.
//
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

#include "annograph/content.h"

#include "gtest/gtest.h"

namespace annograph {
namespace {

TEST(ContentTest, DefaultIsEmptyFeatureSet) {
  Content c;
  ASSERT_TRUE(c.is_feature_set());
  EXPECT_TRUE(c.features().empty());
}

TEST(ContentTest, VariantsAreDistinct) {
  EXPECT_NE(Content("A2"), Content(Xref{"A2"}));
  EXPECT_NE(Content(FeatureSet{}), Content(""));
  EXPECT_EQ(Content(Xref{"A2"}), Content(Xref{"A2"}));
}

TEST(ContentTest, SetFeatureOverwritesAndDropsDuplicates) {
  Content c(FeatureSet{{"Synonym", Content("give")},
                       {"pos", Content("VA")},
                       {"Synonym", Content("present")}});
  c.SetFeature("Synonym", Content("hand"));
  ASSERT_EQ(c.features().size(), 2u);
  EXPECT_EQ(c.features()[0], (Field{"Synonym", Content("hand")}));
  EXPECT_EQ(c.features()[1], (Field{"pos", Content("VA")}));
  c.SetFeature("Synonym", Content("hand"));
  EXPECT_EQ(c.features().size(), 2u);
}

TEST(ContentTest, SetFeatureWrapsLiteralAndXref) {
  Content literal("VBD");
  literal.SetFeature("gloss", Content("went"));
  EXPECT_EQ(literal, Content(FeatureSet{{"_content", Content("VBD")},
                                        {"gloss", Content("went")}}));
  Content ref(Xref{"A2"});
  ref.SetFeature("AG_Arc", Content("x"));
  EXPECT_EQ(*ref.Find("_content"), Content(Xref{"A2"}));
}

TEST(ContentTest, CollectsNestedXrefs) {
  Content c(FeatureSet{{"a", Content(Xref{"A1"})},
                       {"b", Content(FeatureSet{{"c", Content(Xref{"A2"})}})},
                       {"d", Content("A3")}});
  std::vector<std::string> targets;
  c.CollectXrefs(&targets);
  EXPECT_EQ(targets, (std::vector<std::string>{"A1", "A2"}));
}

TEST(ContentTest, Summary) {
  EXPECT_EQ(Content("she").Summary(), "she");
  EXPECT_EQ(Content(Xref{"A2"}).Summary(), "->A2");
  EXPECT_EQ(Content(FeatureSet{{"sign", Content("e")},
                               {"AG_Arc", Content(Xref{"A2"})}})
                .Summary(),
            "{sign=e,AG_Arc=->A2}");
}

}  // namespace
}  // namespace annograph
