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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "annograph/aif.h"
#include "annograph/annotation_set.h"
#include "annograph/cli.h"
#include "annograph/errors.h"
#include "annograph/graph.h"
#include "annograph/lexicon.h"
#include "annograph/timit.h"
#include "generators.h"
#include "oracles.h"

namespace annograph {
namespace {

namespace fs = std::filesystem;
using testing::ReadFile;
using testing::Rng;
using testing::TestdataPath;

struct Outcome {
  bool ok = true;
  std::string detail;

  void Check(bool condition, const std::string& what) {
    if (condition || !ok) {
      ok = ok && condition;
      return;
    }
    ok = false;
    detail = what;
  }
};

bool OffsetIs(const AnnotationGraph& g, const std::string& node, const std::string& text,
              const std::string& timeline, const std::string& unit) {
  const Node* n = g.FindNode(node);
  return n != nullptr && n->offset && n->offset->text() == text && n->timeline == timeline &&
         g.timelines().at(timeline).unit_names == std::vector<std::string>{unit};
}

Outcome GoldenAifRoundTrip() {
  Outcome r;
  std::string doc = ReadFile(TestdataPath("figure_aif.xml"));
  AnnotationGraph g = ParseAif(doc);
  r.Check(g.signals().size() == 2, "signal count");
  r.Check(g.nodes().size() == 5, "node count");
  r.Check(g.arcs().size() == 3, "arc count");
  r.Check(OffsetIs(g, "V0", "382.520", "S1", "Seconds"), "V0 offset");
  r.Check(OffsetIs(g, "V1", "383.922", "S1", "Seconds"), "V1 offset");
  r.Check(OffsetIs(g, "V2", "384.731", "S1", "Seconds"), "V2 offset");
  r.Check(OffsetIs(g, "V3", "78", "S2", "Characters"), "V3 offset");
  r.Check(OffsetIs(g, "V4", "85", "S2", "Characters"), "V4 offset");
  r.Check(g.arcs().size() == 3 &&
              g.FindArc("A1")->content == Content(FeatureSet{Field{"sign", Content("e")}}),
          "A1 content");
  r.Check(g.arcs().size() == 3 && g.FindArc("A2")->content == Content("VBD"), "A2 content");
  r.Check(g.arcs().size() == 3 &&
              g.FindArc("A3")->content ==
                  Content(FeatureSet{Field{"AG_Arc", Content(Xref{"A2"})}}),
          "A3 content");
  std::string once = SerializeAif(g);
  r.Check(once == ReadFile(TestdataPath("figure_aif.canonical.xml")), "canonical bytes");
  r.Check(SerializeAif(ParseAif(once)) == once, "serialize/parse fixed point");
  r.Check(testing::StructurallyEqual(ParseAif(once), g), "structural identity");
  if (r.ok) r.detail = "2 signals, 5 nodes, 3 arcs; byte fixed point";
  return r;
}

Outcome XrefResolution() {
  Outcome r;
  AnnotationGraph g = ParseAif(ReadFile(TestdataPath("figure_aif.xml")));
  std::vector<std::string> targets;
  g.FindArc("A3")->content.CollectXrefs(&targets);
  r.Check(targets == std::vector<std::string>{"A2"} && g.FindArc("A2") != nullptr,
          "A3 does not resolve to A2");
  r.Check(Validate(g).empty(), "figure not valid");
  g.RemoveArc("A2");
  ValidationReport report = Validate(g);
  r.Check(report.size() == 1, std::to_string(report.size()) + " violations after delete");
  r.Check(!report.empty() && report[0].kind == ViolationKind::kDanglingReference &&
              report[0].ids == std::vector<std::string>{"A2"},
          "expected DanglingReference A2");
  if (r.ok) r.detail = FormatViolation(report[0]);
  return r;
}

Outcome TimitConstruction() {
  Outcome r;
  ColumnTier words = ParseTier(ReadFile(TestdataPath("sa1.wrd")), "W", "sa1.wrd");
  ColumnTier phones = ParseTier(ReadFile(TestdataPath("sa1.phn")), "P", "sa1.phn");
  r.Check(words.rows.size() == 11 && phones.rows.size() == 10, "row counts");
  std::set<int64_t> offsets;
  for (const ColumnTier* tier : {&words, &phones}) {
    for (const TierRow& row : tier->rows) {
      offsets.insert(row.start);
      offsets.insert(row.end);
    }
  }
  AnnotationGraph g = BuildGraph({words, phones}, "sa1");
  r.Check(g.arcs().size() == 21, std::to_string(g.arcs().size()) + " arcs");
  r.Check(g.nodes().size() == offsets.size(), "node count != distinct offsets");
  for (const char* id : {"n2360", "n5200"}) {
    int degree = 0;
    for (const auto& [aid, arc] : g.arcs()) degree += (arc.start == id) + (arc.end == id);
    r.Check(degree >= 2, std::string(id) + " degree " + std::to_string(degree));
  }
  r.Check(Validate(g).empty(), "validation report not empty");
  if (r.ok) {
    r.detail = "21 arcs, " + std::to_string(g.nodes().size()) +
               " nodes = distinct offsets, shared 2360/5200";
  }
  return r;
}

Outcome WellFormednessOracle() {
  Outcome r;
  Rng rng(2026);
  const int kTrials = 1000;
  int disagreements = 0, invalid = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    AnnotationGraph g = testing::RandomGraph(rng);
    testing::MutateGraph(rng, g);
    bool expected = testing::BruteForceCheck(g).ok();
    invalid += !expected;
    disagreements += Validate(g).empty() != expected;
  }
  r.Check(disagreements == 0, std::to_string(disagreements) + " disagreements");
  r.detail += std::to_string(kTrials) + " mutations, " + std::to_string(invalid) +
              " invalid, " + std::to_string(disagreements) + " disagreements";
  return r;
}

Outcome ReductionCommutation() {
  Outcome r;
  Rng rng(2027);
  const int kTrials = 500;
  int failures = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    testing::GraphShape shape;
    shape.max_arcs = 30;
    shape.linear = true;
    AnnotationGraph g = testing::RandomGraph(rng, shape);
    AnnotationSet set = FromGraph(g);
    bool ok = ValidateSet(set).empty() && testing::StructurallyEqual(ToGraph(set), g);
    if (ok && !g.arcs().empty()) {
      auto it = g.arcs().begin();
      std::advance(it, std::uniform_int_distribution<size_t>(0, g.arcs().size() - 1)(rng));
      SplitAnnotationResult s = set.SplitAnnotation(it->first);
      AnnotationGraph right = g;
      SplitArcResult a = right.SplitArc(it->first);
      right = testing::RenameIds(right, {{a.first_arc, s.first},
                                         {a.second_arc, s.second},
                                         {a.node, s.anchor}});
      ok = testing::StructurallyEqual(ToGraph(set), right);
    }
    failures += !ok;
  }
  r.Check(failures == 0, std::to_string(failures) + " failures");
  r.detail += std::to_string(kTrials) + " graphs, " + std::to_string(failures) + " failures";
  return r;
}

Outcome QueryOracles() {
  Outcome r;
  Rng rng(2028);
  const int kTrials = 500;
  int disagreements = 0;
  long checks = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    AnnotationSet set = testing::RandomSet(rng, 20);
    auto expect = [&](bool same) {
      ++checks;
      disagreements += !same;
    };
    for (const auto& [id, anchor] : set.anchors()) {
      expect(set.GetIncoming(id) == testing::ScanIncoming(set, id));
      if (anchor.offsets) {
        expect(set.AnchorsAtOffset(*anchor.offsets) ==
               testing::ScanAnchorsAtOffset(set, *anchor.offsets));
      }
    }
    for (const char* type : {"W", "P", "OCR", "none"}) {
      expect(set.Select(select::ByType{type}) == testing::ScanByType(set, type));
    }
    for (const char* group : {"G1", "G2"}) {
      expect(set.Select(select::BySignalGroup{group}) == testing::ScanBySignalGroup(set, group));
    }
    for (const char* value : {"VA", "VN", "VBD"}) {
      expect(set.Select(select::ByFeature{"pos", Content(value)}) ==
             testing::ScanByFeature(set, "pos", Content(value)));
    }
  }
  r.Check(disagreements == 0, std::to_string(disagreements) + " disagreements");
  r.detail += std::to_string(kTrials) + " sets, " + std::to_string(checks) + " queries, " +
              std::to_string(disagreements) + " disagreements";
  return r;
}

std::vector<std::string> Values(const Content& content, const std::string& feature) {
  std::vector<std::string> out;
  for (const Field& field : content.features()) {
    if (field.feature == feature && field.value.is_literal()) {
      out.push_back(field.value.literal());
    }
  }
  return out;
}

Outcome LexiconFidelity() {
  Outcome r;
  Lexicon lexicon = ParseLexicon(ReadFile(TestdataPath("figure_lexicon.xml")));
  r.Check(lexicon.entries.size() == 2, "entry count");
  if (!r.ok) return r;
  const LexiconEntry& a = lexicon.entries[0];
  const LexiconEntry& b = lexicon.entries[1];
  r.Check(a.lexeme == "reichen" && b.lexeme == "reichen", "lexemes");
  r.Check(Values(a.content, "PartOfSpeech") == std::vector<std::string>{"VA"}, "E1034 POS");
  r.Check(Values(b.content, "PartOfSpeech") == std::vector<std::string>{"VN"}, "E1035 POS");
  r.Check(Values(a.content, "Synonym") == std::vector<std::string>{"give", "present"},
          "E1034 synonyms");
  r.Check(Values(b.content, "Synonym") == std::vector<std::string>{"extend to", "suffice"},
          "E1035 synonyms");
  const Content* idiom = a.content.Find("Idiom");
  r.Check(idiom != nullptr && idiom->is_feature_set() && idiom->Find("Source") != nullptr &&
              *idiom->Find("Source") == Content("einem die Hand reichen"),
          "Idiom Source");
  std::string text = SerializeLexicon(lexicon);
  r.Check(ParseLexicon(text) == lexicon, "round trip");
  r.Check(text == ReadFile(TestdataPath("figure_lexicon.canonical.xml")), "canonical bytes");
  if (r.ok) r.detail = "2 entries, VA/VN, ordered synonyms, nested Idiom, round trip";
  return r;
}

int Cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::istringstream in;
  std::ostringstream o, e;
  int status = RunCli(args, in, o, e);
  if (out) *out = o.str();
  return status;
}

Outcome CliContract() {
  Outcome r;
  fs::path dir = fs::temp_directory_path() / "annograph_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::string path = (dir / name).string();
    std::ofstream(path, std::ios::binary) << text;
    return path;
  };
  const std::string figure_path = TestdataPath("figure_aif.xml");
  const std::string figure = ReadFile(figure_path);
  std::string dangling = figure;
  dangling.replace(dangling.find("AG_Arc=\"A2\""), 11, "AG_Arc=\"A9\"");
  std::string reversed = figure;
  reversed.replace(reversed.find("Offset=\"383.922\""), 16, "Offset=\"100\"");
  const std::string wrd = "W=" + TestdataPath("sa1.wrd");
  const std::string phn = "P=" + TestdataPath("sa1.phn");
  const std::string lex = TestdataPath("figure_lexicon.xml");

  struct Case {
    std::vector<std::string> args;
    int status;
  };
  const std::vector<Case> matrix = {
      {{"validate", figure_path}, kExitOk},
      {{"validate", write("empty.xml", "<AnnotationGraph/>")}, kExitOk},
      {{"validate", "--from", "timit-columns", wrd, phn}, kExitOk},
      {{"validate", "--from", "lexicon", lex}, kExitOk},
      {{"stats", figure_path}, kExitOk},
      {{"query", "--type", "W", "--from", "timit-columns", wrd, phn}, kExitOk},
      {{"validate", write("dangling.xml", dangling)}, kExitInvalid},
      {{"validate", write("reversed.xml", reversed)}, kExitInvalid},
      {{"convert", "--from", "aif", "--to", "aif", "-o", (dir / "x.xml").string(),
        (dir / "reversed.xml").string()},
       kExitInvalid},
      {{"validate", write("cut.xml", figure.substr(0, figure.size() / 2))}, kExitParseError},
      {{"stats", (dir / "cut.xml").string()}, kExitParseError},
      {{"query", (dir / "missing.xml").string()}, kExitParseError},
      {{"validate", "--from", "timit-columns", "W=" + write("bad.wrd", "5200 2360 oops\n")},
       kExitParseError},
      {{"bogus"}, kExitParseError},
      {{"convert", "--from", "aif", "--to", "lexicon", figure_path}, kExitUnsupported},
      {{"convert", "--from", "lexicon", "--to", "aif", lex}, kExitUnsupported},
      {{"validate", "--from", "stm", figure_path}, kExitUnsupported},
  };
  int mismatches = 0;
  for (const Case& c : matrix) {
    int status = Cli(c.args);
    if (status != c.status) {
      ++mismatches;
      r.Check(false, c.args[0] + " " + c.args.back() + " exited " + std::to_string(status));
    }
  }

  Rng rng(2029);
  int conversions = 0, rejected = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::string in = write("in.xml", SerializeAif(testing::RandomGraph(rng)));
    std::string out = (dir / "out.xml").string();
    if (Cli({"convert", "--from", "aif", "--to", "aif", "-o", out, in}) == kExitOk) {
      ++conversions;
      rejected += Cli({"validate", out}) != kExitOk;
    }
    std::string w = write("r.wrd", SerializeTier(testing::RandomTier(rng, "W", 12)));
    std::string p = write("r.phn", SerializeTier(testing::RandomTier(rng, "P", 12)));
    if (Cli({"convert", "--from", "timit-columns", "--to", "aif", "-o", out, "W=" + w,
             "P=" + p}) == kExitOk) {
      ++conversions;
      rejected += Cli({"validate", out}) != kExitOk;
    }
  }
  std::string out = (dir / "sa1.xml").string();
  if (Cli({"convert", "--from", "timit-columns", "--to", "aif", "-o", out, wrd, phn}) ==
      kExitOk) {
    ++conversions;
    rejected += Cli({"validate", out}) != kExitOk;
  }
  fs::remove_all(dir);
  r.Check(conversions == 201, std::to_string(201 - conversions) + " conversions failed");
  r.Check(rejected == 0, std::to_string(rejected) + " converter outputs rejected");
  if (r.ok) {
    r.detail = std::to_string(matrix.size()) + " exit-code cases, " +
               std::to_string(conversions) + " convert-then-validate runs";
  }
  return r;
}

}  // namespace
}  // namespace annograph

int main() {
  using annograph::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 golden AIF round-trip", annograph::GoldenAifRoundTrip},
      {"2 cross-reference resolution", annograph::XrefResolution},
      {"3 TIMIT construction", annograph::TimitConstruction},
      {"4 well-formedness vs brute force", annograph::WellFormednessOracle},
      {"5 reduction commutation", annograph::ReductionCommutation},
      {"6 query oracle equivalence", annograph::QueryOracles},
      {"7 lexicon fidelity", annograph::LexiconFidelity},
      {"8 CLI contract", annograph::CliContract},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %s: %s\n", outcome.ok ? "PASS" : "FAIL", name,
                outcome.detail.c_str());
    failed += !outcome.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
