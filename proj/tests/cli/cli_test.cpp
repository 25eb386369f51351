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

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "infprob/bridge.hpp"
#include "infprob/model_file.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using infprob::cli::run;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (fs::path(INFPROB_TEST_DATA) / name).string(); }

struct TempDir {
  fs::path path = fs::temp_directory_path() / "infprob_cli_test";
  TempDir() { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("check exit codes") {
  CHECK(call({"check", data("stratified.json")}).code == 0);
  const Result bad = call({"check", data("axiom1_violation.json")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("witness ({b1}, {b1})") != std::string::npos);
  CHECK(call({"check", data("bad_rational.json")}).code == 2);
  CHECK(call({"check", data("missing.json")}).code == 2);
  CHECK(call({"check", data("two_rank.json")}).code == 0);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("check reports ranks as json") {
  const Result r = call({"check", data("stratified.json"), "--format", "json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["ranks"]["table_rank"] == 1);
  CHECK(j["ranks"]["atoms"]["b3"] == 1);
  CHECK(j["results"].size() == 6);
  const Json f = Json::parse(call({"--format=json", "check", data("axiom1_violation.json")}).out);
  CHECK(f["passed"] == false);
  CHECK(f["results"][0]["name"] == "axiom1");
  CHECK(f["results"][0]["witnesses"][0]["events"] == Json::array({"{b1}", "{b1}"}));
}

TEST_CASE("query") {
  const Result r = call({"query", data("two_rank.json"), "--event", "b"});
  CHECK(r.code == 0);
  CHECK(r.out == "exact: e/(1+e)\nstandard part: 0\nvaluation: 1\nseries: e − e^2 + O(e^3)\n");
  CHECK(call({"query", data("two_rank.json"), "--event", "a|b"}).out.find("exact: 1\n") == 0);
  CHECK(call({"query", data("two_rank.json"), "--event", "a", "--given", "a"}).out.find("exact: 1\n") == 0);
  CHECK(call({"query", data("two_rank.json"), "--event", "a", "--given", "F"}).code == 1);
  CHECK(call({"query", data("two_rank.json"), "--event", "zz"}).code == 2);
  CHECK(call({"query", data("two_rank.json"), "--event", "a &"}).code == 2);
  CHECK(call({"query", data("two_rank.json")}).code == 2);
  const Json j = Json::parse(call({"query", data("stratified.json"), "--event", "b1", "--given", "low", "--format",
                                   "json", "--approx"})
                                 .out);
  CHECK(j["exact"] == "1/2");
  CHECK(j["standard_part"] == "1/2");
  CHECK(j["approx"] == "0.500000000000");
}

TEST_CASE("decompose") {
  const Result r = call({"decompose", data("two_rank.json"), "--event", "b", "--depth", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rank 1: 1\nrank 2: -1\nrank 3: 1\n") != std::string::npos);
  CHECK(r.out.find("closure depth: nonterminating") != std::string::npos);
  const Json j = Json::parse(call({"decompose", data("two_rank.json"), "--event", "a|b", "--format", "json"}).out);
  CHECK(j["closure_depth"] == 1);
  CHECK(j["complete"] == true);
  CHECK(j["remainder"] == "0");
}

TEST_CASE("compare") {
  const Result r = call({"compare", data("two_rank.json"), "--event", "b", "--event", "a"});
  CHECK(r.code == 0);
  CHECK(r.out.find("field order: left < right") != std::string::npos);
  CHECK(r.out.find("lexicographic order: left < right") != std::string::npos);
  const Json j = Json::parse(
      call({"compare", data("stratified.json"), "--event", "b1", "--event", "b2", "--format", "json"}).out);
  CHECK(j["field"] == "=");
  CHECK(j["agree"] == true);
  CHECK(call({"compare", data("two_rank.json"), "--event", "a"}).code == 2);
}

TEST_CASE("snapshot") {
  const Result r = call({"snapshot", data("two_rank.json"), "--stages", "2,4,8", "--event", "b"});
  CHECK(r.code == 0);
  CHECK(r.out.find("| 2 | 1/5 | 0 | 1/5\n") != std::string::npos);
  CHECK(r.out.find("| 4 | 1/17 | 0 | 1/17\n") != std::string::npos);
  CHECK(r.out.find("| 8 | 1/65 | 0 | 1/65\n") != std::string::npos);
  const Json same = Json::parse(call({"snapshot", data("stratified.json"), "--stages", "2,3", "--event", "b1",
                                      "--given", "low", "--format", "json"})
                                    .out);
  for (const auto& row : same["rows"]) CHECK(row["deviation"] == "0");
  CHECK(call({"snapshot", data("two_rank.json"), "--stages", "1,4", "--event", "b"}).code == 2);
  CHECK(call({"snapshot", data("two_rank.json"), "--stages", "2"}).code == 2);
  CHECK(call({"snapshot", data("two_rank.json"), "--stages", "2", "--event", "a", "--given", "F"}).code == 1);
  const Json all = Json::parse(call({"snapshot", data("stratified.json"), "--stages", "2,4", "--format", "json"}).out);
  CHECK(all["rows"].size() == 2 * 26);
}

TEST_CASE("convert round trips and re-checks") {
  TempDir tmp;
  const std::string nap = tmp.file("nap.json"), back = tmp.file("back.json");
  REQUIRE(call({"convert", data("stratified.json"), "--to", "nap", "--out", nap}).code == 0);
  CHECK(call({"check", nap}).code == 0);
  REQUIRE(call({"convert", nap, "--to", "popper", "--out", back}).code == 0);
  CHECK(call({"check", back}).code == 0);
  const auto source = infprob::ModelFile::load(data("stratified.json"));
  const auto result = infprob::ModelFile::load(back);
  CHECK(result.popper() == source.popper());
  CHECK(result.named_events() == source.named_events());

  const Json dense = Json::parse(call({"convert", data("stratified.json"), "--to", "popper", "--dense"}).out);
  CHECK(dense.contains("dense"));

  const auto classical = infprob::ModelFile::parse(
      call({"convert", data("stratified.json"), "--to", "nap"}).out);
  CHECK(classical.nap().ranks() == std::vector<long>{0, 0, 1});

  const auto table = infprob::ModelFile::parse(call({"convert", data("two_rank.json"), "--to", "popper"}).out);
  CHECK(table.popper().conditional(infprob::Event(0b01), table.popper().top()) == 1);
  CHECK(table.popper().conditional(infprob::Event(0b10), table.popper().top()) == 0);
  CHECK(call({"convert", data("axiom1_violation.json"), "--to", "nap"}).code == 1);
  CHECK(call({"convert", data("two_rank.json"), "--to", "other"}).code == 2);
}
