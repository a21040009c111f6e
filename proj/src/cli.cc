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

#include "annograph/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "annograph/aif.h"
#include "annograph/annotation_set.h"
#include "annograph/errors.h"
#include "annograph/graph.h"
#include "annograph/lexicon.h"
#include "annograph/timit.h"

namespace annograph {
namespace {

const std::set<std::string> kFormats = {"aif", "timit-columns", "lexicon",
                                        "report-text"};

// Reported with an exit status; thrown from anywhere in a command.
struct Failure {
  int code;
  std::string message;
};

struct Flags {
  std::string from = "aif";
  std::string to;
  std::string output = "-";
  std::string timeline = "T1";
  bool strict = false;
  std::vector<std::string> types;
  std::vector<std::string> features;
  std::vector<std::string> signal_groups;
  std::vector<std::string> inputs;
};

class Session {
 public:
  Session(std::istream& in, std::ostream& out, std::ostream& err)
      : in_(in), out_(out), err_(err) {}

  int Validate(const Flags& flags);
  int Convert(const Flags& flags);
  int Query(const Flags& flags);
  int Stats(const Flags& flags);

  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::string Read(const std::string& path);
  void Write(const std::string& path, const std::string& data);
  ReadOptions Options(const Flags& flags, bool check_xrefs);
  AnnotationGraph LoadGraph(const Flags& flags, bool check_xrefs);
  AnnotationGraph LoadTiers(const Flags& flags);
  void Report(const ValidationReport& report);

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  std::vector<std::string> warnings_;
};

void CheckFormat(const std::string& format) {
  if (!kFormats.count(format)) {
    throw Failure{kExitUnsupported, "unknown format " + format};
  }
}

std::string Session::Read(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in_), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Failure{kExitParseError, "cannot read " + path};
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void Session::Write(const std::string& path, const std::string& data) {
  if (path == "-") {
    out_ << data;
    return;
  }
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    file << data;
    if (!file.flush()) {
      throw Failure{kExitParseError, "cannot write " + temp.string()};
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw Failure{kExitParseError, "cannot replace " + path};
  }
}

ReadOptions Session::Options(const Flags& flags, bool check_xrefs) {
  ReadOptions options;
  options.strict = flags.strict;
  options.check_xrefs = check_xrefs;
  options.warnings = &warnings_;
  return options;
}

AnnotationGraph Session::LoadTiers(const Flags& flags) {
  std::vector<ColumnTier> tiers;
  for (const std::string& tier_arg : flags.inputs) {
    auto eq = tier_arg.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Failure{kExitParseError,
                    "column tier \"" + tier_arg + "\" must be given as TYPE=PATH"};
    }
    std::string type = tier_arg.substr(0, eq);
    std::string path = tier_arg.substr(eq + 1);
    tiers.push_back(ParseTier(Read(path), type, path));
  }
  return BuildGraph(tiers, flags.timeline);
}

AnnotationGraph Session::LoadGraph(const Flags& flags, bool check_xrefs) {
  if (flags.from == "timit-columns") return LoadTiers(flags);
  if (flags.from != "aif") {
    throw Failure{kExitUnsupported, "this command does not read " + flags.from};
  }
  if (flags.inputs.size() != 1) {
    throw Failure{kExitParseError, "expected exactly one aif input"};
  }
  return ParseAif(Read(flags.inputs.front()), Options(flags, check_xrefs));
}

void Session::Report(const ValidationReport& report) {
  for (const Violation& v : report) err_ << FormatViolation(v) << '\n';
}

int Session::Validate(const Flags& flags) {
  CheckFormat(flags.from);
  if (flags.from == "timit-columns") {
    ValidationReport report = annograph::Validate(LoadTiers(flags));
    Report(report);
    return report.empty() ? kExitOk : kExitInvalid;
  }
  if (flags.from != "aif" && flags.from != "lexicon") {
    throw Failure{kExitUnsupported, "cannot validate " + flags.from};
  }
  int status = kExitOk;
  for (const std::string& path : flags.inputs) {
    try {
      std::string text = Read(path);
      if (flags.from == "lexicon") {
        ParseLexicon(text, Options(flags, true));
        continue;
      }
      ValidationReport report =
          annograph::Validate(ParseAif(text, Options(flags, false)));
      Report(report);
      if (!report.empty()) status = std::max<int>(status, kExitInvalid);
    } catch (const Error& e) {
      err_ << path << ": " << e.what() << '\n';
      status = std::max<int>(status, kExitParseError);
    } catch (const Failure& f) {
      err_ << f.message << '\n';
      status = std::max(status, f.code);
    }
  }
  return status;
}

int Session::Convert(const Flags& flags) {
  CheckFormat(flags.from);
  CheckFormat(flags.to);
  std::string data;
  if (flags.from == "lexicon" && flags.to == "lexicon") {
    if (flags.inputs.size() != 1) {
      throw Failure{kExitParseError, "expected exactly one lexicon input"};
    }
    data = SerializeLexicon(
        ParseLexicon(Read(flags.inputs.front()), Options(flags, true)));
  } else if ((flags.from == "aif" || flags.from == "timit-columns") &&
             flags.to == "aif") {
    AnnotationGraph graph = LoadGraph(flags, true);
    try {
      data = SerializeAif(graph);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInvalidGraph) throw;
      Report(e.report());
      return kExitInvalid;
    }
  } else {
    throw Failure{kExitUnsupported,
                  "unsupported conversion " + flags.from + " -> " + flags.to};
  }
  Write(flags.output, data);
  return kExitOk;
}

std::string RegionSummary(const AnnotationSet& set, const Region& region) {
  std::string out;
  for (size_t i = 0; i < region.anchors.size(); ++i) {
    if (i > 0) out += "..";
    const Anchor* anchor = set.FindAnchor(region.anchors[i]);
    if (anchor == nullptr || !anchor->offsets) {
      out += '?';
      continue;
    }
    const auto& offsets = *anchor->offsets;
    if (offsets.size() == 1) {
      out += offsets.front().text();
      continue;
    }
    out += '(';
    for (size_t d = 0; d < offsets.size(); ++d) {
      if (d > 0) out += ',';
      out += offsets[d].text();
    }
    out += ')';
  }
  return out;
}

int Session::Query(const Flags& flags) {
  CheckFormat(flags.from);
  std::vector<SelectionCriterion> criteria;
  for (const std::string& type : flags.types) {
    criteria.push_back(select::ByType{type});
  }
  for (const std::string& feature : flags.features) {
    auto eq = feature.find('=');
    if (eq == std::string::npos) {
      throw Failure{kExitParseError, "--feature takes NAME=VALUE, got " + feature};
    }
    criteria.push_back(
        select::ByFeature{feature.substr(0, eq), Content(feature.substr(eq + 1))});
  }
  for (const std::string& group : flags.signal_groups) {
    criteria.push_back(select::BySignalGroup{group});
  }

  AnnotationSet set = FromGraph(LoadGraph(flags, true));
  std::vector<std::string> matches;
  for (const auto& [id, ann] : set.annotations()) matches.push_back(id);
  for (const SelectionCriterion& criterion : criteria) {
    std::vector<std::string> selected = set.Select(criterion);
    std::vector<std::string> kept;
    std::set_intersection(matches.begin(), matches.end(), selected.begin(),
                          selected.end(), std::back_inserter(kept));
    matches = std::move(kept);
  }
  for (const std::string& id : matches) {
    const Annotation& ann = *set.FindAnnotation(id);
    out_ << id << ' ' << ann.type << ' ' << RegionSummary(set, ann.region) << ' '
         << ann.content.Summary() << '\n';
  }
  return kExitOk;
}

int Session::Stats(const Flags& flags) {
  CheckFormat(flags.from);
  if (flags.from == "lexicon") {
    if (flags.inputs.size() != 1) {
      throw Failure{kExitParseError, "expected exactly one lexicon input"};
    }
    Lexicon lexicon =
        ParseLexicon(Read(flags.inputs.front()), Options(flags, true));
    std::set<std::string> lexemes;
    for (const LexiconEntry& entry : lexicon.entries) lexemes.insert(entry.lexeme);
    out_ << "signals:" << (lexicon.signal ? 1 : 0) << '\n'
         << "entries:" << lexicon.entries.size() << '\n'
         << "lexemes:" << lexemes.size() << '\n';
    return kExitOk;
  }
  AnnotationGraph graph = LoadGraph(flags, true);
  size_t anchored = 0;
  for (const auto& [id, node] : graph.nodes()) anchored += node.offset.has_value();
  std::map<std::string, size_t> types;
  for (const auto& [id, arc] : graph.arcs()) ++types[arc.type];
  out_ << "signals:" << graph.signals().size() << '\n'
       << "timelines:" << graph.timelines().size() << '\n'
       << "nodes:" << graph.nodes().size() << '\n'
       << "anchored:" << anchored << '\n'
       << "unanchored:" << graph.nodes().size() - anchored << '\n'
       << "arcs:" << graph.arcs().size() << '\n'
       << "types:{";
  bool first = true;
  for (const auto& [type, count] : types) {
    out_ << (first ? "" : ", ") << type << ':' << count;
    first = false;
  }
  out_ << "}\n";
  return kExitOk;
}

void AddInputs(CLI::App* command, Flags* flags) {
  command->add_option("--from", flags->from,
                      "Input format: aif, timit-columns or lexicon");
  command->add_flag("--strict", flags->strict,
                    "Reject unknown elements and attributes");
  command->add_option("--timeline", flags->timeline,
                      "Timeline id for column tiers");
  command->add_option("inputs", flags->inputs,
                      "Input paths (- for stdin); tiers as TYPE=PATH")
      ->required();
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Annotation graph toolkit"};
  app.require_subcommand(1);
  Flags flags;

  CLI::App* validate = app.add_subcommand("validate", "Check documents");
  AddInputs(validate, &flags);

  CLI::App* convert = app.add_subcommand("convert", "Convert between formats");
  AddInputs(convert, &flags);
  convert->get_option("--from")->required();
  convert->add_option("--to", flags.to, "Output format")->required();
  convert->add_option("-o,--output", flags.output, "Output path (- for stdout)");

  CLI::App* query = app.add_subcommand("query", "List matching annotations");
  AddInputs(query, &flags);
  query->add_option("--type", flags.types, "Annotation type (repeatable)")
      ->allow_extra_args(false);
  query->add_option("--feature", flags.features, "NAME=VALUE (repeatable)")
      ->allow_extra_args(false);
  query->add_option("--signal-group", flags.signal_groups,
                    "Signal group or timeline id (repeatable)")
      ->allow_extra_args(false);

  CLI::App* stats = app.add_subcommand("stats", "Count document contents");
  AddInputs(stats, &flags);

  std::vector<std::string> argv_storage{"annograph"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& arg : argv_storage) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParseError;
  }

  Session session(in, out, err);
  int status = kExitOk;
  try {
    if (validate->parsed()) status = session.Validate(flags);
    if (convert->parsed()) status = session.Convert(flags);
    if (query->parsed()) status = session.Query(flags);
    if (stats->parsed()) status = session.Stats(flags);
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    status = f.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    status = kExitParseError;
  }
  for (const std::string& warning : session.warnings()) {
    err << "warning: " << warning << '\n';
  }
  return status;
}

}  // namespace annograph
