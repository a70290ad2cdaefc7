// Copyright 2026 The twolevel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twolevel/api.h"
#include "twolevel/prosody.h"

namespace py = pybind11;
using namespace twolevel;

namespace {

GenerateRequest request(std::optional<std::string> measure,
                        std::optional<std::string> features,
                        const std::map<std::string, std::string>& morphemes) {
  GenerateRequest r;
  r.measure = std::move(measure);
  r.features = std::move(features);
  for (const auto& [tape, form] : morphemes) r.morphemes.emplace_back(tape, form);
  return r;
}

}  // namespace

PYBIND11_MODULE(_twolevel, m) {
  m.doc() = "Multi-tape two-level morphology engine";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ProsodyError>(m, "ProsodyError", PyExc_ValueError);

  py::class_<Grammar>(m, "Grammar")
      .def_property_readonly("tape_count", &Grammar::tape_count)
      .def_property_readonly("rule_ids", [](const Grammar& g) {
        std::vector<std::string> ids;
        for (const auto& r : g.rules) ids.push_back(r.id);
        return ids;
      });

  m.def("default_grammar_path", &default_grammar_path);
  m.def("default_lexicon_path", &default_lexicon_path);
  m.def("load", [](const std::string& grammar, const std::string& lexicon) {
    return load_grammar(grammar, lexicon, /*validate=*/false);
  }, py::arg("grammar"), py::arg("lexicon"));
  m.def("validate", [](const Grammar& g) { return format_json(validate(g)); });
  m.def("generate",
        [](const Grammar& g, std::optional<std::string> measure,
           std::optional<std::string> features,
           const std::map<std::string, std::string>& morphemes) {
          auto r = request(std::move(measure), std::move(features), morphemes);
          std::vector<Analysis> as;
          {
            py::gil_scoped_release release;
            as = generate(g, r);
          }
          return format_json(g, as);
        },
        py::arg("grammar"), py::arg("measure") = py::none(),
        py::arg("features") = py::none(),
        py::arg("morphemes") = std::map<std::string, std::string>{});
  m.def("analyze",
        [](const Grammar& g, const std::string& surface) {
          std::vector<Analysis> as;
          {
            py::gil_scoped_release release;
            as = analyze(g, surface);
          }
          return format_json(g, as);
        },
        py::arg("grammar"), py::arg("surface"));
  m.def("oracle",
        [](const Grammar& g, int measure) {
          return format_json(g, oracle_report(g, measure));
        },
        py::arg("grammar"), py::arg("measure"));
}
