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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "infprob/bridge.hpp"
#include "infprob/errors.hpp"
#include "infprob/eventlang.hpp"
#include "infprob/lexi.hpp"
#include "infprob/model_file.hpp"

namespace py = pybind11;
using namespace infprob;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::int_(py::str(r.get_num().get_str())), py::int_(py::str(r.get_den().get_str())));
}

Rational to_rational(const py::handle& obj) {
  if (py::isinstance<py::bool_>(obj)) throw py::type_error("expected a rational, got bool");
  if (py::isinstance<py::int_>(obj) || py::isinstance<py::str>(obj)) return parse_rational(py::str(obj).cast<std::string>());
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  if (py::isinstance(obj, cls)) return parse_rational(py::str(obj).cast<std::string>());
  throw py::type_error("expected int, str or fractions.Fraction");
}

FieldValue to_value(const py::handle& obj) {
  if (py::isinstance<FieldValue>(obj)) return obj.cast<FieldValue>();
  if (py::isinstance<py::str>(obj)) return FieldValue::parse(obj.cast<std::string>());
  return FieldValue(to_rational(obj));
}

Event resolve(const SampleSpace& space, const std::string& expr) {
  EventBinding binding;
  for (std::size_t i = 0; i < space.size(); ++i) binding.emplace(space.label(i), Event::singleton(i));
  return evaluate(parse_event(expr), binding, space);
}

std::vector<std::string> labels_of(const SampleSpace& space, Event e) {
  std::vector<std::string> out;
  for (auto i : e.members()) out.push_back(space.label(i));
  return out;
}

py::object rank_object(const Rank& r) { return r.is_top() ? py::object(py::none()) : py::object(py::int_(r.value())); }

py::dict series_dict(const LexSeries& s) {
  py::list coefficients;
  for (const auto& c : s.coefficients) coefficients.append(fraction(c));
  py::dict d;
  d["valuation"] = rank_object(s.valuation);
  d["coefficients"] = coefficients;
  d["exact"] = s.exact;
  d["text"] = s.str();
  return d;
}

PopperTable table_from_strata(const std::vector<std::string>& atoms, const py::sequence& strata) {
  SampleSpace space(atoms);
  StratifiedMeasure s;
  s.atom_count = atoms.size();
  for (const auto& stratum : strata) {
    std::map<std::size_t, Rational> block;
    for (const auto& [label, weight] : stratum.cast<py::dict>()) {
      const auto i = space.index_of(label.cast<std::string>());
      if (!i) throw UnboundAtom(label.cast<std::string>());
      block.emplace(*i, to_rational(weight));
    }
    s.strata.push_back(std::move(block));
  }
  return from_stratified(s, atoms);
}

py::list strata_list(const PopperTable& t) {
  const StratifiedMeasure s = to_stratified(t);
  py::list out;
  for (const auto& stratum : s.strata) {
    py::dict d;
    for (const auto& [i, w] : stratum) d[py::str(t.atoms().label(i))] = fraction(w);
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact non-Archimedean probability on finite sample spaces";

  static py::exception<Error> base(m, "InfprobError", PyExc_ValueError);
  py::register_exception<DivisionByZero>(m, "DivisionByZero", base);
  py::register_exception<InfiniteValue>(m, "InfiniteValue", base);
  py::register_exception<EmptyCondition>(m, "EmptyCondition", base);
  py::register_exception<InvalidPartition>(m, "InvalidPartition", base);
  py::register_exception<NotAPopperFunction>(m, "NotAPopperFunction", base);
  py::register_exception<InvalidModel>(m, "InvalidModel", base);
  py::register_exception<CapacityExceeded>(m, "CapacityExceeded", base);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<SyntaxError>(m, "EventSyntaxError", base);
  py::register_exception<UnboundAtom>(m, "UnboundAtom", base);

  py::class_<FieldValue>(m, "FieldValue")
      .def(py::init([](const py::object& v) { return to_value(v); }), py::arg("value") = 0)
      .def_static("epsilon", &FieldValue::epsilon)
      .def_static("epsilon_power", &FieldValue::epsilon_power)
      .def("__str__", &FieldValue::str)
      .def("__repr__", [](const FieldValue& v) { return "FieldValue('" + v.str() + "')"; })
      .def("__add__", [](const FieldValue& a, const py::object& b) { return a + to_value(b); })
      .def("__radd__", [](const FieldValue& a, const py::object& b) { return to_value(b) + a; })
      .def("__sub__", [](const FieldValue& a, const py::object& b) { return a - to_value(b); })
      .def("__rsub__", [](const FieldValue& a, const py::object& b) { return to_value(b) - a; })
      .def("__mul__", [](const FieldValue& a, const py::object& b) { return a * to_value(b); })
      .def("__rmul__", [](const FieldValue& a, const py::object& b) { return to_value(b) * a; })
      .def("__truediv__", [](const FieldValue& a, const py::object& b) { return a / to_value(b); })
      .def("__rtruediv__", [](const FieldValue& a, const py::object& b) { return to_value(b) / a; })
      .def("__neg__", [](const FieldValue& a) { return -a; })
      .def("__eq__", [](const FieldValue& a, const py::object& b) { return a == to_value(b); })
      .def("__lt__", [](const FieldValue& a, const py::object& b) { return a < to_value(b); })
      .def("__le__", [](const FieldValue& a, const py::object& b) { return a <= to_value(b); })
      .def("__gt__", [](const FieldValue& a, const py::object& b) { return a > to_value(b); })
      .def("__ge__", [](const FieldValue& a, const py::object& b) { return a >= to_value(b); })
      .def("__hash__", [](const FieldValue& a) { return py::hash(py::str(a.str())); })
      .def("standard_part", [](const FieldValue& a) { return fraction(standard_part(a)); })
      .def("valuation", [](const FieldValue& a) { return rank_object(valuation(a)); })
      .def("sign", [](const FieldValue& a) { return sign(a); })
      .def("is_infinitesimal", [](const FieldValue& a) { return is_infinitesimal(a); })
      .def("is_finite", [](const FieldValue& a) { return is_finite(a); })
      .def("coefficient", [](const FieldValue& a, long k) { return fraction(coefficient_at(a, k)); })
      .def("expand", [](const FieldValue& a, std::size_t depth) { return series_dict(expand(a, depth)); },
           py::arg("depth"))
      .def("remainder", [](const FieldValue& a, std::size_t depth) { return remainder(a, depth); })
      .def("closure_depth", [](const FieldValue& a) { return closure_depth(a); });

  m.def(
      "compare_lex",
      [](const py::object& a, const py::object& b) {
        const LexComparison c = compare_lex(to_value(a), to_value(b));
        py::dict d;
        d["order"] = c.order < 0 ? -1 : c.order > 0 ? 1 : 0;
        d["divergence"] = rank_object(c.divergence);
        d["difference"] = fraction(c.difference);
        return d;
      },
      py::arg("a"), py::arg("b"));
  m.def("parse_event", [](const std::string& text) { return parse_event(text).str(); }, py::arg("text"));

  py::class_<NapModel>(m, "NapModel")
      .def(py::init([](std::vector<std::string> labels, const py::sequence& weights, std::vector<long> ranks) {
             std::vector<Rational> w;
             for (const auto& x : weights) w.push_back(to_rational(x));
             return NapModel(SampleSpace(std::move(labels)), std::move(w), std::move(ranks));
           }),
           py::arg("labels"), py::arg("weights"), py::arg("ranks"))
      .def_property_readonly("labels", [](const NapModel& mdl) { return mdl.space().labels(); })
      .def_property_readonly("weights",
                             [](const NapModel& mdl) {
                               py::list out;
                               for (const auto& w : mdl.weights()) out.append(fraction(w));
                               return out;
                             })
      .def_property_readonly("ranks", &NapModel::ranks)
      .def("event", [](const NapModel& mdl, const std::string& e) { return labels_of(mdl.space(), resolve(mdl.space(), e)); })
      .def("prob", [](const NapModel& mdl, const std::string& e) { return prob(mdl, resolve(mdl.space(), e)); },
           py::arg("event"))
      .def("cond",
           [](const NapModel& mdl, const std::string& e, const std::string& g) {
             return cond(mdl, resolve(mdl.space(), e), resolve(mdl.space(), g));
           },
           py::arg("event"), py::arg("given"))
      .def("snapshot",
           [](const NapModel& mdl, const std::string& e, const std::string& g, unsigned long stage) {
             return fraction(snapshot_cond(mdl, resolve(mdl.space(), e), resolve(mdl.space(), g),
                                           SnapshotProfile::for_model(mdl), stage));
           },
           py::arg("event"), py::arg("given"), py::arg("stage"))
      .def("to_popper", [](const NapModel& mdl) { return nap_to_popper(mdl); });

  py::class_<PopperTable>(m, "PopperTable")
      .def_static("from_strata", &table_from_strata, py::arg("atoms"), py::arg("strata"))
      .def_property_readonly("atoms", [](const PopperTable& t) { return t.atoms().labels(); })
      .def("conditional",
           [](const PopperTable& t, const std::string& e, const std::string& g) {
             return fraction(t.conditional(resolve(t.atoms(), e), resolve(t.atoms(), g)));
           },
           py::arg("event"), py::arg("given"))
      .def("check_axioms",
           [](const PopperTable& t, std::size_t max_atoms) {
             py::dict d;
             for (const auto& r : check_axioms(t, CheckOptions{.max_atoms = max_atoms}).results) d[py::str(r.name)] = r.passed;
             return d;
           },
           py::arg("max_atoms") = CheckOptions{}.max_atoms)
      .def("ranks",
           [](const PopperTable& t) {
             const VanFraassenRanks v = van_fraassen_ranks(t);
             py::dict d;
             for (std::size_t i = 0; i < v.atom_rank.size(); ++i) d[py::str(t.atoms().label(i))] = v.atom_rank[i];
             return d;
           })
      .def("strata", &strata_list)
      .def("to_nap", [](const PopperTable& t) { return popper_to_nap(t); })
      .def("verify_agreement", [](const PopperTable& t) { return verify_agreement(t).agrees(); })
      .def("__eq__", [](const PopperTable& a, const PopperTable& b) { return a == b; });

  m.def(
      "load",
      [](const std::string& path) -> py::object {
        const ModelFile f = ModelFile::load(path);
        if (f.is_nap()) return py::cast(f.nap());
        return py::cast(f.popper());
      },
      py::arg("path"));
}
