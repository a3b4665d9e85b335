// Copyright 2026 The mcnli Authors.
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

// Python bindings for the conversion and evaluation core.

#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mcnli/cli.h"
#include "mcnli/errors.h"
#include "mcnli/eval_harness.h"
#include "mcnli/question_analysis.h"
#include "mcnli/rule_converter.h"

namespace py = pybind11;

namespace {

// Returns the hypothesis, or None with the failure reason in the tuple.
py::tuple ConvertRulePy(const std::string& question, const std::string& answer) {
  mcnli::ConversionOutcome o = mcnli::ConvertRule(question, answer);
  if (o.ok()) return py::make_tuple(*o.hypothesis, py::none());
  return py::make_tuple(py::none(), std::string(mcnli::FailureReasonName(*o.failure_reason)));
}

std::vector<mcnli::CfcsLabeledItem> Labeled(const std::vector<double>& scores,
                                            const std::vector<bool>& consistent) {
  if (scores.size() != consistent.size()) {
    throw mcnli::DataError("scores and labels differ in length");
  }
  std::vector<mcnli::CfcsLabeledItem> items;
  for (size_t i = 0; i < scores.size(); ++i) {
    items.push_back({std::to_string(i), scores[i],
                     consistent[i] ? mcnli::CfcsLabel::kConsistent
                                   : mcnli::CfcsLabel::kInconsistent});
  }
  return items;
}

}  // namespace

PYBIND11_MODULE(_mcnli, m) {
  m.doc() = "Multiple-choice to NLI conversion and evaluation";
  m.attr("__version__") = std::string(mcnli::kToolVersion);

  py::register_exception<mcnli::DataError>(m, "DataError", PyExc_ValueError);
  py::register_exception<mcnli::BackendError>(m, "BackendError", PyExc_RuntimeError);

  m.def("convert_rule", &ConvertRulePy, py::arg("question"), py::arg("answer"),
        "Rule-based hypothesis: (hypothesis, None) or (None, failure_reason).");
  m.def(
      "categorize_race",
      [](const std::string& question, const std::string& passage) {
        return mcnli::CategorizeRace(question, passage).Tags();
      },
      py::arg("question"), py::arg("passage"));
  m.def(
      "categorize_multirc",
      [](const std::string& question) {
        return std::string(mcnli::MultiRcTypeTag(mcnli::CategorizeMultiRc(question)));
      },
      py::arg("question"));
  m.def(
      "tune_threshold",
      [](const std::vector<double>& scores, const std::vector<bool>& consistent) {
        auto items = Labeled(scores, consistent);
        mcnli::ThresholdResult r = mcnli::TuneThreshold(items);
        return py::make_tuple(r.threshold, r.balanced_accuracy);
      },
      py::arg("scores"), py::arg("consistent"));
  m.def(
      "balanced_accuracy",
      [](const std::vector<double>& scores, const std::vector<bool>& consistent,
         double threshold) {
        auto items = Labeled(scores, consistent);
        return mcnli::BalancedAccuracy(items, threshold);
      },
      py::arg("scores"), py::arg("consistent"), py::arg("threshold"));
  m.def(
      "rank_pairs",
      [](const std::vector<std::pair<double, double>>& pairs) {
        std::vector<mcnli::CfcsPair> p;
        for (const auto& [c, i] : pairs) p.push_back({std::to_string(p.size()), c, i});
        return mcnli::RankPairs(p);
      },
      py::arg("pairs"));
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = mcnli::RunCli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line; returns (exit_code, stdout, stderr).");
}
