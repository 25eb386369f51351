// Copyright 2026 The infprob Authors
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

#include "cli.hpp"

#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "infprob/bridge.hpp"
#include "infprob/errors.hpp"
#include "infprob/lexi.hpp"
#include "infprob/model_file.hpp"
#include "json.hpp"

namespace infprob::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Session {
  std::ostream& out;
  bool json = false;
  bool approx = false;
};

struct UsageError : Error {
  using Error::Error;
};

std::string order_symbol(std::strong_ordering o) {
  if (o < 0) return "<";
  if (o > 0) return ">";
  return "=";
}

NapModel model_of(const ModelFile& file) { return file.is_nap() ? file.nap() : popper_to_nap(file.popper()); }

Json report_json(const AxiomReport& report, const SampleSpace& atoms) {
  Json results = Json::array();
  for (const auto& r : report.results) {
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) {
      Json events = Json::array();
      for (Event e : w.events) events.push_back(atoms.render(e));
      witnesses.push_back({{"events", events}, {"detail", w.detail}});
    }
    results.push_back({{"name", r.name}, {"passed", r.passed}, {"checked", r.checked}, {"witnesses", witnesses}});
  }
  return results;
}

void print_report(std::ostream& out, const AxiomReport& report, const SampleSpace& atoms) {
  for (const auto& r : report.results) {
    out << r.name << std::string(r.name.size() < 12 ? 12 - r.name.size() : 1, ' ') << (r.passed ? "pass" : "FAIL")
        << "  (" << r.checked << " checked)\n";
    for (const auto& w : r.witnesses) {
      out << "  witness (";
      for (std::size_t k = 0; k < w.events.size(); ++k) out << (k ? ", " : "") << atoms.render(w.events[k]);
      out << "): " << w.detail << '\n';
    }
  }
}

int cmd_check(Session& s, const std::string& path, std::size_t max_atoms) {
  const ModelFile file = ModelFile::load(path);
  const CheckOptions options{.max_atoms = max_atoms};
  Json j{{"command", "check"}, {"kind", file.is_nap() ? "nap" : "popper"}, {"size", file.space().size()}};
  std::optional<AxiomReport> report;
  std::optional<VanFraassenRanks> ranks;
  if (file.is_nap()) {
    // The Popper shadow of a model always satisfies the axioms; checking it
    // exercises the conversion.
    if (file.space().size() <= max_atoms) report = check_axioms(nap_to_popper(file.nap()), options);
  } else {
    report = check_axioms(file.popper(), options);
    if (report->passed()) ranks = van_fraassen_ranks(file.popper(), options);
  }
  const bool passed = !report || report->passed();

  if (s.json) {
    j["passed"] = passed;
    j["results"] = report ? report_json(*report, file.space()) : Json::array();
    if (ranks) {
      Json chain = Json::array();
      for (Event e : ranks->chain) chain.push_back(file.space().render(e));
      Json atoms = Json::object();
      for (std::size_t i = 0; i < ranks->atom_rank.size(); ++i) atoms[file.space().label(i)] = ranks->atom_rank[i];
      j["ranks"] = {{"table_rank", ranks->table_rank}, {"chain", chain}, {"atoms", atoms}};
    }
    s.out << j.dump(2) << '\n';
    return passed ? kPass : kFailure;
  }
  s.out << "kind: " << (file.is_nap() ? "nap" : "popper") << " (" << file.space().size()
        << (file.is_nap() ? " outcomes" : " atoms") << ")\n";
  if (report) print_report(s.out, *report, file.space());
  else s.out << "axiom check skipped: more than " << max_atoms << " outcomes\n";
  if (ranks) {
    s.out << "rank: " << ranks->table_rank << '\n' << "chain:";
    for (std::size_t k = 0; k < ranks->chain.size(); ++k)
      s.out << (k ? " > " : " ") << file.space().render(ranks->chain[k]);
    s.out << "\natom ranks:";
    for (std::size_t i = 0; i < ranks->atom_rank.size(); ++i)
      s.out << ' ' << file.space().label(i) << '=' << ranks->atom_rank[i];
    s.out << '\n';
  }
  s.out << "result: " << (passed ? "pass" : "FAIL") << '\n';
  return passed ? kPass : kFailure;
}

struct Query {
  FieldValue value;
  Event a;
  Event b;
};

Query evaluate_query(const ModelFile& file, const NapModel& model, const std::string& event,
                     const std::optional<std::string>& given) {
  Query q;
  q.a = file.resolve(event);
  q.b = given ? file.resolve(*given) : file.space().full();
  q.value = given ? cond(model, q.a, q.b) : prob(model, q.a);
  return q;
}

int cmd_query(Session& s, const std::string& path, const std::string& event, const std::optional<std::string>& given,
              std::size_t depth) {
  const ModelFile file = ModelFile::load(path);
  const NapModel model = model_of(file);
  const Query q = evaluate_query(file, model, event, given);
  const Rational st = standard_part(q.value);
  const LexSeries series = expand(q.value, depth);
  if (s.json) {
    Json j{{"command", "query"},
           {"event", event},
           {"given", given ? Json(*given) : Json(nullptr)},
           {"exact", q.value.str()},
           {"standard_part", to_string(st)},
           {"valuation", valuation(q.value).str()},
           {"series", series.str()}};
    if (s.approx) j["approx"] = to_decimal(st);
    s.out << j.dump(2) << '\n';
    return kPass;
  }
  s.out << "exact: " << q.value.str() << '\n'
        << "standard part: " << to_string(st) << '\n'
        << "valuation: " << valuation(q.value).str() << '\n'
        << "series: " << series.str() << '\n';
  if (s.approx) s.out << "approx: " << to_decimal(st) << '\n';
  return kPass;
}

int cmd_decompose(Session& s, const std::string& path, const std::string& event, std::size_t depth) {
  const ModelFile file = ModelFile::load(path);
  const FieldValue v = prob(model_of(file), file.resolve(event));
  const LexSeries series = expand(v, depth);
  const auto closure = closure_depth(v);
  const FieldValue rest = remainder(v, depth);
  if (s.json) {
    Json terms = Json::array();
    for (std::size_t i = 0; i < series.coefficients.size(); ++i)
      terms.push_back({{"rank", series.valuation.value() + static_cast<long>(i)},
                       {"coefficient", to_string(series.coefficients[i])}});
    Json j{{"command", "decompose"},
           {"event", event},
           {"exact", v.str()},
           {"valuation", series.valuation.str()},
           {"terms", terms},
           {"complete", series.exact},
           {"closure_depth", closure ? Json(*closure) : Json(nullptr)},
           {"remainder", rest.str()},
           {"series", series.str()}};
    if (s.approx) j["approx"] = to_decimal(standard_part(v));
    s.out << j.dump(2) << '\n';
    return kPass;
  }
  s.out << "exact: " << v.str() << '\n' << "valuation: " << series.valuation.str() << '\n';
  for (std::size_t i = 0; i < series.coefficients.size(); ++i)
    s.out << "rank " << series.valuation.value() + static_cast<long>(i) << ": " << to_string(series.coefficients[i])
          << '\n';
  s.out << "series: " << series.str() << '\n'
        << "closure depth: " << (closure ? std::to_string(*closure) : std::string("nonterminating")) << '\n'
        << "remainder: " << rest.str() << '\n';
  if (s.approx) s.out << "approx: " << to_decimal(standard_part(v)) << '\n';
  return kPass;
}

int cmd_compare(Session& s, const std::string& path, const std::vector<std::string>& events,
                const std::optional<std::string>& given) {
  if (events.size() != 2) throw UsageError("compare needs exactly two --event expressions");
  const ModelFile file = ModelFile::load(path);
  const NapModel model = model_of(file);
  const FieldValue left = evaluate_query(file, model, events[0], given).value;
  const FieldValue right = evaluate_query(file, model, events[1], given).value;
  const std::strong_ordering field = compare(left, right);
  const LexComparison lex = compare_lex(left, right);
  const bool agree = field == lex.order;
  if (s.json) {
    Json j{{"command", "compare"},
           {"events", events},
           {"given", given ? Json(*given) : Json(nullptr)},
           {"left", left.str()},
           {"right", right.str()},
           {"field", order_symbol(field)},
           {"lexicographic", order_symbol(lex.order)},
           {"divergence", lex.divergence.str()},
           {"difference", to_string(lex.difference)},
           {"agree", agree}};
    s.out << j.dump(2) << '\n';
    return agree ? kPass : kFailure;
  }
  s.out << "left: " << left.str() << '\n'
        << "right: " << right.str() << '\n'
        << "field order: left " << order_symbol(field) << " right\n"
        << "lexicographic order: left " << order_symbol(lex.order) << " right\n"
        << "divergence rank: " << lex.divergence.str() << '\n'
        << "leading difference: " << to_string(lex.difference) << '\n'
        << "agree: " << (agree ? "yes" : "NO") << '\n';
  return agree ? kPass : kFailure;
}

int cmd_convert(Session& s, const std::string& path, const std::string& to, const std::optional<std::string>& out_path,
                bool dense) {
  const ModelFile file = ModelFile::load(path);
  const bool to_nap = to == "nap";
  std::optional<ModelFile> converted;
  if (to_nap == file.is_nap()) converted = file;
  else if (to_nap) converted = ModelFile::from_nap(popper_to_nap(file.popper()), file.named_events());
  else converted = ModelFile::from_popper(nap_to_popper(file.nap()), file.named_events());
  if (!out_path) {
    s.out << converted->to_json(dense);
    return kPass;
  }
  converted->save(*out_path, dense);
  if (s.json) s.out << Json{{"command", "convert"}, {"to", to}, {"written", *out_path}}.dump(2) << '\n';
  else s.out << "wrote " << *out_path << '\n';
  return kPass;
}

int cmd_snapshot(Session& s, const std::string& path, const std::vector<unsigned long>& stages,
                 const std::optional<std::string>& event, const std::optional<std::string>& given) {
  const ModelFile file = ModelFile::load(path);
  SnapshotStudy study;
  const bool single = event || given;
  const Event a = single ? file.resolve(event.value_or("T")) : Event();
  const Event b = single ? file.resolve(given.value_or("T")) : Event();
  if (file.is_nap()) {
    if (!single) throw UsageError("snapshot on a nap model needs --event or --given");
    study = snapshot_oracle(file.nap(), a, b, stages);
  } else {
    study = single ? snapshot_oracle(file.popper(), a, b, stages) : snapshot_oracle(file.popper(), stages);
  }
  const SampleSpace& sp = file.space();
  if (s.json) {
    Json rows = Json::array();
    for (const auto& r : study.rows) {
      Json row{{"event", sp.render(r.a)},   {"given", sp.render(r.b)},        {"stage", r.stage},
               {"value", to_string(r.value)}, {"target", to_string(r.target)}, {"deviation", to_string(r.deviation)}};
      if (s.approx) row["approx_deviation"] = to_decimal(r.deviation);
      rows.push_back(row);
    }
    s.out << Json{{"command", "snapshot"}, {"rows", rows}, {"bound_constant", to_string(study.bound_constant)}}.dump(2)
          << '\n';
    return kPass;
  }
  s.out << "event | given | stage | value | target | deviation\n";
  for (const auto& r : study.rows) {
    s.out << sp.render(r.a) << " | " << sp.render(r.b) << " | " << r.stage << " | " << to_string(r.value) << " | "
          << to_string(r.target) << " | " << to_string(r.deviation);
    if (s.approx) s.out << " | " << to_decimal(r.deviation);
    s.out << '\n';
  }
  s.out << "bound constant K: " << to_string(study.bound_constant) << '\n';
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact non-Archimedean probability and Popper functions on finite spaces", "infprob"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  bool approx = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--approx", approx, "Also print decimal renderings of standard parts");

  std::string path;
  std::vector<std::string> events;
  std::optional<std::string> given;
  std::size_t depth = 2;
  std::size_t max_atoms = CheckOptions{}.max_atoms;
  std::string to;
  std::optional<std::string> out_path;
  bool dense = false;
  std::vector<unsigned long> stages;
  std::optional<std::string> snapshot_event;

  auto* check = app.add_subcommand("check", "Validate a model; check the Popper axioms");
  check->add_option("file", path, "Model file")->required();
  check->add_option("--max-atoms", max_atoms, "Largest table checked exhaustively");

  auto* query = app.add_subcommand("query", "Probability of an event, optionally conditional");
  query->add_option("file", path, "Model file")->required();
  auto* query_event = query->add_option("--event", events, "Event expression")->required();
  query_event->expected(1);
  query->add_option("--given", given, "Conditioning event expression");
  query->add_option("--depth", depth, "Series terms")->check(CLI::Range(std::size_t{1}, std::size_t{1000}));

  std::size_t decompose_depth = 5;
  auto* decompose = app.add_subcommand("decompose", "Lexicographic decomposition of P(event)");
  decompose->add_option("file", path, "Model file")->required();
  decompose->add_option("--event", events, "Event expression")->required()->expected(1);
  decompose->add_option("--depth", decompose_depth, "Series terms")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000}));

  auto* compare_cmd = app.add_subcommand("compare", "Compare two probabilities by field and lexicographic order");
  compare_cmd->add_option("file", path, "Model file")->required();
  compare_cmd->add_option("--event", events, "Event expression (twice)")->required();
  compare_cmd->add_option("--given", given, "Conditioning event expression");

  auto* convert = app.add_subcommand("convert", "Convert between nap models and Popper tables");
  convert->add_option("file", path, "Model file")->required();
  convert->add_option("--to", to, "Target kind")->required()->check(CLI::IsMember({"nap", "popper"}));
  convert->add_option("--out", out_path, "Output path (default: standard output)");
  convert->add_flag("--dense", dense, "Write Popper tables as dense entries");

  auto* snapshot = app.add_subcommand("snapshot", "Counting construction at finite stages");
  snapshot->add_option("file", path, "Model file")->required();
  snapshot->add_option("--stages", stages, "Comma-separated stages, each at least 2")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(2UL, 1000000UL));
  snapshot->add_option("--event", snapshot_event, "Event expression");
  snapshot->add_option("--given", given, "Conditioning event expression");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  Session s{out, format == "json", approx};
  try {
    if (check->parsed()) return cmd_check(s, path, max_atoms);
    if (query->parsed()) return cmd_query(s, path, events.front(), given, depth);
    if (decompose->parsed()) return cmd_decompose(s, path, events.front(), decompose_depth);
    if (compare_cmd->parsed()) return cmd_compare(s, path, events, given);
    if (convert->parsed()) return cmd_convert(s, path, to, out_path, dense);
    if (snapshot->parsed()) return cmd_snapshot(s, path, stages, snapshot_event, given);
  } catch (const EmptyCondition& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const NotAPopperFunction& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace infprob::cli
