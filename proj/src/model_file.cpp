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

#include "infprob/model_file.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "infprob/errors.hpp"
#include "json.hpp"

namespace infprob {

namespace {

using Json = nlohmann::ordered_json;

bool is_identifier(const std::string& s) {
  try {
    return parse_event(s) == EventExpr::atom(s);
  } catch (const SyntaxError&) {
    return false;
  }
}

Rational rational_field(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw InvalidModel(where + ": " + e.what());
    }
  }
  throw InvalidModel(where + ": expected a rational string \"p/q\" or an integer");
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw InvalidModel(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::string string_field(const Json& j, const std::string& where) {
  if (!j.is_string()) throw InvalidModel(where + ": expected a string");
  return j.get<std::string>();
}

std::vector<std::pair<std::string, std::string>> read_events(const Json& root) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!root.contains("events")) return out;
  const Json& events = root.at("events");
  if (!events.is_object()) throw InvalidModel("\"events\" must be an object of name: expression");
  for (const auto& [name, expr] : events.items()) out.emplace_back(name, string_field(expr, "event " + name));
  return out;
}

NapModel read_nap(const Json& root) {
  const Json& outcomes = member(root, "outcomes", "nap model");
  if (!outcomes.is_array()) throw InvalidModel("\"outcomes\" must be an array");
  std::vector<std::string> labels;
  std::vector<Rational> weights;
  std::vector<long> ranks;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Json& o = outcomes[i];
    const std::string where = "outcome " + std::to_string(i);
    labels.push_back(string_field(member(o, "label", where), where + " label"));
    weights.push_back(rational_field(member(o, "weight", where), where + " weight"));
    const Json& rank = member(o, "rank", where);
    if (!rank.is_number_integer()) throw InvalidModel(where + ": rank must be an integer");
    ranks.push_back(rank.get<long>());
  }
  for (const auto& l : labels)
    if (!is_identifier(l)) throw InvalidModel("outcome label '" + l + "' is not an identifier");
  return NapModel(SampleSpace(std::move(labels)), std::move(weights), std::move(ranks));
}

PopperTable read_popper(const Json& root) {
  const Json& atoms_json = member(root, "atoms", "popper table");
  if (!atoms_json.is_array()) throw InvalidModel("\"atoms\" must be an array of labels");
  std::vector<std::string> atoms;
  for (const auto& a : atoms_json) atoms.push_back(string_field(a, "atom label"));
  const SampleSpace space(atoms);
  for (const auto& l : atoms)
    if (!is_identifier(l)) throw InvalidModel("atom label '" + l + "' is not an identifier");
  if (atoms.size() > kMaxPopperAtoms)
    throw InvalidModel("popper tables support at most " + std::to_string(kMaxPopperAtoms) + " atoms");

  const bool has_strata = root.contains("stratified");
  const bool has_dense = root.contains("dense");
  if (has_strata == has_dense) throw InvalidModel("popper table needs exactly one of \"stratified\" or \"dense\"");

  if (has_strata) {
    const Json& strata = root.at("stratified");
    if (!strata.is_object()) throw InvalidModel("\"stratified\" must map ranks to {atom: weight}");
    std::map<long, const Json*> by_rank;
    for (const auto& [key, block] : strata.items()) {
      long k = -1;
      try {
        std::size_t used = 0;
        k = std::stol(key, &used);
        if (used != key.size()) k = -1;
      } catch (const std::exception&) {
      }
      if (k < 0) throw InvalidModel("stratum key '" + key + "' is not a nonnegative integer");
      if (!by_rank.emplace(k, &block).second) throw InvalidModel("stratum " + key + " appears twice");
    }
    StratifiedMeasure measure;
    measure.atom_count = atoms.size();
    long expected = 0;
    for (const auto& [k, block] : by_rank) {
      if (k != expected) throw InvalidModel("stratum ranks must run 0, 1, 2, ... without gaps");
      ++expected;
      if (!block->is_object()) throw InvalidModel("stratum " + std::to_string(k) + " must be {atom: weight}");
      auto& stratum = measure.strata.emplace_back();
      for (const auto& [label, w] : block->items()) {
        auto i = space.index_of(label);
        if (!i) throw InvalidModel("stratum " + std::to_string(k) + " names unknown atom '" + label + "'");
        stratum.emplace(*i, rational_field(w, "weight of " + label));
      }
    }
    return from_stratified(measure, atoms);
  }

  const Json& dense = root.at("dense");
  if (!dense.is_array()) throw InvalidModel("\"dense\" must be an array of entries");
  std::map<std::pair<std::size_t, std::uint64_t>, Rational> entries;
  for (std::size_t n = 0; n < dense.size(); ++n) {
    const Json& e = dense[n];
    const std::string where = "dense entry " + std::to_string(n);
    const std::string atom = string_field(member(e, "atom", where), where + " atom");
    auto i = space.index_of(atom);
    if (!i) throw InvalidModel(where + ": unknown atom '" + atom + "'");
    const Event given = normal_form(parse_event(string_field(member(e, "given", where), where + " given")), space);
    if (given.empty()) throw InvalidModel(where + ": condition is a contradiction");
    if (!entries.emplace(std::pair{*i, given.bits()}, rational_field(member(e, "value", where), where + " value")).second)
      throw InvalidModel(where + ": duplicate entry for this atom and condition");
  }
  return PopperTable::tabulate(std::move(atoms), [&](std::size_t i, Event s) -> Rational {
    auto it = entries.find({i, s.bits()});
    return it == entries.end() ? Rational(0) : it->second;
  });
}

std::string disjunction(const SampleSpace& space, Event e) {
  std::string out;
  for (auto i : e.members()) {
    if (!out.empty()) out += " | ";
    out += space.label(i);
  }
  return out.empty() ? "F" : out;
}

}  // namespace

ModelFile::ModelFile(Kind kind, std::variant<NapModel, PopperTable> body,
                     std::vector<std::pair<std::string, std::string>> events)
    : kind_(kind), body_(std::move(body)), events_(std::move(events)) {
  const SampleSpace& sp = space();
  for (std::size_t i = 0; i < sp.size(); ++i) binding_.emplace(sp.label(i), Event::singleton(i));
  for (const auto& [name, text] : events_) {
    if (!is_identifier(name)) throw InvalidModel("event name '" + name + "' is not an identifier");
    if (binding_.count(name)) throw InvalidModel("event name '" + name + "' is already defined");
    binding_.emplace(name, evaluate(parse_event(text), binding_, sp));
  }
}

ModelFile ModelFile::parse(std::string_view json_text) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw InvalidModel(std::string("malformed JSON: ") + e.what());
  }
  const std::string kind = string_field(member(root, "kind", "model file"), "\"kind\"");
  auto events = read_events(root);
  if (kind == "nap") return ModelFile(Kind::Nap, read_nap(root), std::move(events));
  if (kind == "popper") return ModelFile(Kind::Popper, read_popper(root), std::move(events));
  throw InvalidModel("\"kind\" must be \"nap\" or \"popper\"");
}

ModelFile ModelFile::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidModel("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

ModelFile ModelFile::from_nap(NapModel model, std::vector<std::pair<std::string, std::string>> events) {
  return ModelFile(Kind::Nap, std::move(model), std::move(events));
}

ModelFile ModelFile::from_popper(PopperTable table, std::vector<std::pair<std::string, std::string>> events) {
  return ModelFile(Kind::Popper, std::move(table), std::move(events));
}

const NapModel& ModelFile::nap() const {
  if (kind_ != Kind::Nap) throw std::logic_error("model file holds a popper table");
  return std::get<NapModel>(body_);
}

const PopperTable& ModelFile::popper() const {
  if (kind_ != Kind::Popper) throw std::logic_error("model file holds a nap model");
  return std::get<PopperTable>(body_);
}

const SampleSpace& ModelFile::space() const {
  return kind_ == Kind::Nap ? std::get<NapModel>(body_).space() : std::get<PopperTable>(body_).atoms();
}

Event ModelFile::resolve(std::string_view expression) const {
  return evaluate(parse_event(expression), binding_, space());
}

std::string ModelFile::to_json(bool dense) const {
  Json root;
  const SampleSpace& sp = space();
  if (kind_ == Kind::Nap) {
    const NapModel& model = nap();
    root["kind"] = "nap";
    Json outcomes = Json::array();
    for (std::size_t i = 0; i < model.size(); ++i)
      outcomes.push_back({{"label", sp.label(i)}, {"weight", to_string(model.weight(i))}, {"rank", model.rank(i)}});
    root["outcomes"] = std::move(outcomes);
  } else {
    const PopperTable& table = popper();
    root["kind"] = "popper";
    root["atoms"] = sp.labels();
    std::optional<StratifiedMeasure> strata;
    if (!dense) {
      try {
        strata = to_stratified(table, CheckOptions{.max_atoms = kMaxPopperAtoms});
      } catch (const Error&) {
      }
    }
    if (strata) {
      Json block = Json::object();
      for (std::size_t k = 0; k < strata->strata.size(); ++k) {
        Json stratum = Json::object();
        for (const auto& [atom, w] : strata->strata[k]) stratum[sp.label(atom)] = to_string(w);
        block[std::to_string(k)] = std::move(stratum);
      }
      root["stratified"] = std::move(block);
    } else {
      Json entries = Json::array();
      for (std::uint64_t s = 1; s < table.condition_count(); ++s)
        for (std::size_t i = 0; i < table.atom_count(); ++i)
          if (table.value(i, Event(s)) != 0)
            entries.push_back({{"atom", sp.label(i)},
                               {"given", disjunction(sp, Event(s))},
                               {"value", to_string(table.value(i, Event(s)))}});
      root["dense"] = std::move(entries);
    }
  }
  if (!events_.empty()) {
    Json events = Json::object();
    for (const auto& [name, text] : events_) events[name] = text;
    root["events"] = std::move(events);
  }
  return root.dump(2) + "\n";
}

void ModelFile::save(const std::filesystem::path& path, bool dense) const {
  std::ofstream out(path);
  if (!out) throw InvalidModel("cannot write " + path.string());
  out << to_json(dense);
}

}  // namespace infprob
