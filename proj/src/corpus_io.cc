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

#include "mcnli/corpus_io.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

#include "mcnli/errors.h"
#include "mcnli/text.h"

namespace mcnli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr size_t kMaxOptions = 8;

// ---------------------------------------------------------------------------
// JSON field access with located error messages.

const json& Field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw DataError(where + ": expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) {
    throw DataError(where + ": missing field '" + key + "'");
  }
  return *it;
}

std::string StringField(const json& obj, const char* key, const std::string& where) {
  const json& v = Field(obj, key, where);
  if (!v.is_string()) throw DataError(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

double NumberField(const json& obj, const char* key, const std::string& where) {
  const json& v = Field(obj, key, where);
  if (!v.is_number()) throw DataError(where + ": field '" + key + "' must be a number");
  double d = v.get<double>();
  if (!std::isfinite(d)) throw DataError(where + ": field '" + key + "' is not finite");
  return d;
}

const json& ArrayField(const json& obj, const char* key, const std::string& where) {
  const json& v = Field(obj, key, where);
  if (!v.is_array()) throw DataError(where + ": field '" + key + "' must be a list");
  return v;
}

json ParseJson(const std::string& s, const std::string& where) {
  try {
    return json::parse(s);
  } catch (const json::parse_error& e) {
    throw DataError(where + ": malformed JSON (" + e.what() + ")");
  }
}

std::ifstream OpenInput(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw DataError("cannot open " + p.string());
  return in;
}

json ParseJsonFile(const fs::path& p) {
  std::ifstream in = OpenInput(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseJson(buf.str(), p.string());
}

// Calls fn(object, "origin:line") for every non-blank line.
void ForEachJsonLine(std::istream& in, const std::string& origin,
                     const std::function<void(const json&, const std::string&)>& fn) {
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (text::Trim(line).empty()) continue;
    std::string where = origin + ":" + std::to_string(lineno);
    json obj = ParseJson(line, where);
    if (!obj.is_object()) throw DataError(where + ": expected a JSON object");
    fn(obj, where);
  }
}

std::string Dump(const ordered_json& j) {
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

// ---------------------------------------------------------------------------
// Split inference and id bookkeeping.

std::optional<Split> SplitFromPath(const fs::path& p) {
  std::optional<Split> found;
  for (const fs::path& part : p) {
    if (auto s = ParseSplit(text::ToLower(part.string()))) found = s;
    if (auto s = ParseSplit(text::ToLower(part.stem().string()))) found = s;
  }
  if (found) return found;
  // file stems such as "train_456-fixedIds" or "dev_83-fixedIds"
  const std::string stem = text::ToLower(p.stem().string());
  for (std::string_view name : {"train", "dev", "valid", "test"}) {
    if (stem.starts_with(name)) return ParseSplit(name);
  }
  return std::nullopt;
}

Split ResolveSplit(const fs::path& p, std::optional<Split> given) {
  if (given) return *given;
  if (auto s = SplitFromPath(p)) return *s;
  throw DataError("cannot infer split from path " + p.string() + "; pass it explicitly");
}

std::string MakeId(Dataset d, Split s, const std::string& passage_id, size_t question_index) {
  return std::string(DatasetName(d)) + "/" + std::string(SplitName(s)) + "/" + passage_id + "/" +
         std::to_string(question_index);
}

class IdRegistry {
 public:
  void Add(const std::string& id, const std::string& where) {
    if (!seen_.insert(id).second) throw DataError(where + ": duplicate id " + id);
  }

 private:
  std::unordered_set<std::string> seen_;
};

std::vector<std::string> ParagraphUnits(std::string_view passage) {
  std::vector<std::string> units;
  size_t start = 0;
  while (start <= passage.size()) {
    size_t end = passage.find('\n', start);
    if (end == std::string_view::npos) end = passage.size();
    std::string unit = text::NormalizeWhitespace(passage.substr(start, end - start));
    if (!unit.empty()) units.push_back(std::move(unit));
    start = end + 1;
  }
  return units;
}

OptionEntry MakeOption(std::string_view raw, bool correct) {
  return OptionEntry{text::NormalizeWhitespace(raw), correct};
}

void Finish(McqExample& e, IdRegistry& ids, std::vector<McqExample>& out,
            const std::string& where) {
  e.question = text::NormalizeWhitespace(e.question);
  try {
    ValidateMcqExample(e);
  } catch (const DataError& err) {
    throw DataError(where + ": " + err.what());
  }
  ids.Add(e.id, where);
  out.push_back(std::move(e));
}

// ---------------------------------------------------------------------------
// Native readers.

std::vector<fs::path> ListFiles(const fs::path& source) {
  if (!fs::exists(source)) throw DataError("no such file or directory: " + source.string());
  std::vector<fs::path> files;
  if (fs::is_directory(source)) {
    for (const auto& entry : fs::recursive_directory_iterator(source)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(source);
  }
  return files;
}

void ReadRaceFile(const fs::path& file, std::optional<Split> split, IdRegistry& ids,
                  std::vector<McqExample>& out) {
  const std::string where = file.string();
  json doc = ParseJsonFile(file);
  const Split s = ResolveSplit(file, split);
  std::string passage_id =
      doc.contains("id") && doc["id"].is_string() ? doc["id"].get<std::string>()
                                                  : file.stem().string();
  if (passage_id.ends_with(".txt")) passage_id.resize(passage_id.size() - 4);
  const std::vector<std::string> units = ParagraphUnits(StringField(doc, "article", where));
  const json& questions = ArrayField(doc, "questions", where);
  const json& options = ArrayField(doc, "options", where);
  const json& answers = ArrayField(doc, "answers", where);
  if (questions.size() != options.size() || questions.size() != answers.size()) {
    throw DataError(where + ": questions/options/answers lengths differ");
  }
  for (size_t qi = 0; qi < questions.size(); ++qi) {
    const std::string qwhere = where + ": question " + std::to_string(qi);
    if (!questions[qi].is_string() || !options[qi].is_array() || !answers[qi].is_string()) {
      throw DataError(qwhere + ": malformed record");
    }
    const std::string letter = answers[qi].get<std::string>();
    if (letter.size() != 1 || letter[0] < 'A' || letter[0] > 'Z') {
      throw DataError(qwhere + ": answer must be a letter, got '" + letter + "'");
    }
    const size_t correct = static_cast<size_t>(letter[0] - 'A');
    if (correct >= options[qi].size()) {
      throw DataError(qwhere + ": answer " + letter + " out of range");
    }
    McqExample e;
    e.id = MakeId(Dataset::kRace, s, passage_id, qi);
    e.passage_units = units;
    e.question = questions[qi].get<std::string>();
    e.source_dataset = Dataset::kRace;
    e.split = s;
    for (size_t oi = 0; oi < options[qi].size(); ++oi) {
      if (!options[qi][oi].is_string()) throw DataError(qwhere + ": option must be a string");
      e.options.push_back(MakeOption(options[qi][oi].get<std::string>(), oi == correct));
    }
    Finish(e, ids, out, qwhere);
  }
}

// MultiRC paragraphs carry "<b>Sent 1: </b>...<br>" markup.
std::vector<std::string> MultiRcUnits(const std::string& raw) {
  static const std::regex kSentTag(R"(<b>\s*Sent\s+\d+\s*:\s*</b>)", std::regex::icase);
  static const std::regex kTag(R"(</?[a-zA-Z]+\s*/?>)");
  std::string cleaned = std::regex_replace(raw, kSentTag, "");
  static const std::regex kBreak(R"(<br\s*/?>)", std::regex::icase);
  cleaned = std::regex_replace(cleaned, kBreak, "\n");
  cleaned = std::regex_replace(cleaned, kTag, "");
  return ParagraphUnits(cleaned);
}

void ReadMultiRcFile(const fs::path& file, std::optional<Split> split, IdRegistry& ids,
                     std::vector<McqExample>& out) {
  const std::string where = file.string();
  json doc = ParseJsonFile(file);
  const Split s = ResolveSplit(file, split);
  const json& data = doc.is_array() ? doc : ArrayField(doc, "data", where);
  for (size_t pi = 0; pi < data.size(); ++pi) {
    const json& item = data[pi];
    const std::string pwhere = where + ": record " + std::to_string(pi);
    std::string passage_id = std::to_string(pi);
    if (item.contains("id") && item["id"].is_string()) passage_id = item["id"].get<std::string>();
    const json& paragraph =
        item.contains("paragraph") ? item["paragraph"] : Field(item, "passage", pwhere);
    const std::vector<std::string> units = MultiRcUnits(StringField(paragraph, "text", pwhere));
    const json& questions = ArrayField(paragraph, "questions", pwhere);
    for (size_t qi = 0; qi < questions.size(); ++qi) {
      const std::string qwhere = pwhere + ": question " + std::to_string(qi);
      McqExample e;
      e.id = MakeId(Dataset::kMultiRc, s, passage_id, qi);
      e.passage_units = units;
      e.question = StringField(questions[qi], "question", qwhere);
      e.source_dataset = Dataset::kMultiRc;
      e.split = s;
      for (const json& ans : ArrayField(questions[qi], "answers", qwhere)) {
        bool correct = false;
        if (ans.contains("isAnswer")) {
          if (!ans["isAnswer"].is_boolean()) throw DataError(qwhere + ": isAnswer must be bool");
          correct = ans["isAnswer"].get<bool>();
        } else {
          correct = NumberField(ans, "label", qwhere) != 0.0;
        }
        e.options.push_back(MakeOption(StringField(ans, "text", qwhere), correct));
      }
      Finish(e, ids, out, qwhere);
    }
  }
}

void ReadDreamFile(const fs::path& file, std::optional<Split> split, IdRegistry& ids,
                   std::vector<McqExample>& out) {
  const std::string where = file.string();
  json doc = ParseJsonFile(file);
  const Split s = ResolveSplit(file, split);
  if (!doc.is_array()) throw DataError(where + ": expected a list of dialogues");
  for (size_t di = 0; di < doc.size(); ++di) {
    const json& triple = doc[di];
    const std::string dwhere = where + ": record " + std::to_string(di);
    if (!triple.is_array() || triple.size() < 3 || !triple[0].is_array() ||
        !triple[1].is_array() || !triple[2].is_string()) {
      throw DataError(dwhere + ": expected [turns, questions, id]");
    }
    std::vector<std::string> turns;
    for (const json& t : triple[0]) {
      if (!t.is_string()) throw DataError(dwhere + ": turn must be a string");
      std::string turn = text::NormalizeWhitespace(t.get<std::string>(), true);
      if (!turn.empty()) turns.push_back(std::move(turn));
    }
    const std::string passage_id = triple[2].get<std::string>();
    for (size_t qi = 0; qi < triple[1].size(); ++qi) {
      const json& q = triple[1][qi];
      const std::string qwhere = dwhere + ": question " + std::to_string(qi);
      McqExample e;
      e.id = MakeId(Dataset::kDream, s, passage_id, qi);
      e.passage_units = turns;
      e.is_dialogue = true;
      e.question = StringField(q, "question", qwhere);
      e.source_dataset = Dataset::kDream;
      e.split = s;
      const std::string answer = text::NormalizeWhitespace(StringField(q, "answer", qwhere));
      for (const json& c : ArrayField(q, "choice", qwhere)) {
        if (!c.is_string()) throw DataError(qwhere + ": choice must be a string");
        OptionEntry opt = MakeOption(c.get<std::string>(), false);
        opt.is_correct = opt.text == answer;
        e.options.push_back(std::move(opt));
      }
      Finish(e, ids, out, qwhere);
    }
  }
}

// RFC 4180 style CSV: quoted fields may contain commas, doubled quotes and
// newlines. Returns rows with the 1-based line each row starts on.
std::vector<std::pair<size_t, std::vector<std::string>>> ParseCsv(std::istream& in) {
  std::vector<std::pair<size_t, std::vector<std::string>>> rows;
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool row_has_data = false;
  size_t line = 1;
  size_t row_line = 1;
  for (size_t i = 0; i < content.size(); ++i) {
    char c = content[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      row_has_data = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      row_has_data = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < content.size() && content[i + 1] == '\n') ++i;
      if (row_has_data || !field.empty()) {
        row.push_back(std::move(field));
        rows.emplace_back(row_line, std::move(row));
      }
      row.clear();
      field.clear();
      row_has_data = false;
      ++line;
      row_line = line;
    } else {
      field += c;
      row_has_data = true;
    }
  }
  if (quoted) throw DataError("unterminated quoted field starting on line " +
                              std::to_string(row_line));
  if (row_has_data || !field.empty()) {
    row.push_back(std::move(field));
    rows.emplace_back(row_line, std::move(row));
  }
  return rows;
}

void AddCosmosRow(const std::function<std::string(const char*)>& get, const std::string& where,
                  Split s, IdRegistry& ids, std::vector<McqExample>& out) {
  const std::string label_text = std::string(text::Trim(get("label")));
  int label = -1;
  if (label_text.size() == 1 && label_text[0] >= '0' && label_text[0] <= '3') {
    label = label_text[0] - '0';
  } else {
    throw DataError(where + ": label must be 0-3, got '" + label_text + "'");
  }
  McqExample e;
  e.id = MakeId(Dataset::kCosmosQa, s, std::string(text::Trim(get("id"))), 0);
  e.passage_units = ParagraphUnits(get("context"));
  e.question = get("question");
  e.source_dataset = Dataset::kCosmosQa;
  e.split = s;
  for (int i = 0; i < 4; ++i) {
    std::string key = "answer" + std::to_string(i);
    e.options.push_back(MakeOption(get(key.c_str()), i == label));
  }
  if (text::EqualsIgnoreCase(e.options[label].text, "None of the above")) return;
  Finish(e, ids, out, where);
}

void ReadCosmosFile(const fs::path& file, std::optional<Split> split, IdRegistry& ids,
                    std::vector<McqExample>& out) {
  const Split s = ResolveSplit(file, split);
  std::ifstream in = OpenInput(file);
  const std::string ext = text::ToLower(file.extension().string());
  if (ext == ".jsonl" || ext == ".json") {
    ForEachJsonLine(in, file.string(), [&](const json& obj, const std::string& where) {
      auto get = [&](const char* key) -> std::string {
        const json& v = Field(obj, key, where);
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_integer()) return std::to_string(v.get<long long>());
        throw DataError(where + ": field '" + key + "' has the wrong type");
      };
      AddCosmosRow(get, where, s, ids, out);
    });
    return;
  }
  auto rows = ParseCsv(in);
  if (rows.empty()) return;
  const std::vector<std::string>& header = rows.front().second;
  for (size_t r = 1; r < rows.size(); ++r) {
    const std::string where = file.string() + ":" + std::to_string(rows[r].first);
    const std::vector<std::string>& row = rows[r].second;
    auto get = [&](const char* key) -> std::string {
      auto it = std::find(header.begin(), header.end(), key);
      if (it == header.end()) throw DataError(where + ": missing column '" + key + "'");
      size_t idx = static_cast<size_t>(it - header.begin());
      if (idx >= row.size()) throw DataError(where + ": missing value for '" + key + "'");
      return row[idx];
    };
    AddCosmosRow(get, where, s, ids, out);
  }
}

void ReadGenericLines(std::istream& in, const std::string& origin, IdRegistry& ids,
                      std::vector<McqExample>& out) {
  size_t record = 0;
  ForEachJsonLine(in, origin, [&](const json& obj, const std::string& where) {
    const size_t index = record++;
    McqExample e;
    e.source_dataset = Dataset::kGeneric;
    const std::string split_name = StringField(obj, "split", where);
    auto s = ParseSplit(split_name);
    if (!s) throw DataError(where + ": unknown split '" + split_name + "'");
    e.split = *s;
    std::string passage_id = std::to_string(index);
    if (obj.contains("id") && !obj["id"].is_null()) {
      if (!obj["id"].is_string()) throw DataError(where + ": field 'id' must be a string");
      passage_id = obj["id"].get<std::string>();
    }
    e.id = MakeId(Dataset::kGeneric, e.split, passage_id, 0);
    if (obj.contains("turns")) {
      e.is_dialogue = true;
      for (const json& t : ArrayField(obj, "turns", where)) {
        if (!t.is_string()) throw DataError(where + ": turn must be a string");
        std::string turn = text::NormalizeWhitespace(t.get<std::string>(), true);
        if (!turn.empty()) e.passage_units.push_back(std::move(turn));
      }
    } else {
      e.passage_units = ParagraphUnits(StringField(obj, "passage", where));
    }
    e.question = StringField(obj, "question", where);
    for (const json& opt : ArrayField(obj, "options", where)) {
      const json& correct = Field(opt, "correct", where);
      if (!correct.is_boolean()) throw DataError(where + ": option 'correct' must be bool");
      e.options.push_back(MakeOption(StringField(opt, "text", where), correct.get<bool>()));
    }
    Finish(e, ids, out, where);
  });
}

template <typename T>
std::vector<T> ReadFile(const fs::path& source,
                        std::vector<T> (*reader)(std::istream&, const std::string&)) {
  std::ifstream in = OpenInput(source);
  return reader(in, source.string());
}

void CheckUniqueIds(IdRegistry& ids, const std::string& id, const std::string& where) {
  ids.Add(id, where);
}

CfcsLabel ParseCfcsLabel(const std::string& s, const std::string& where) {
  if (s == "consistent") return CfcsLabel::kConsistent;
  if (s == "inconsistent") return CfcsLabel::kInconsistent;
  throw DataError(where + ": label must be 'consistent' or 'inconsistent', got '" + s + "'");
}

double UnitScore(const json& obj, const char* key, const std::string& id,
                 const std::string& where) {
  double v = NumberField(obj, key, where);
  if (v < 0.0 || v > 1.0) {
    throw DataError(where + ": " + key + " for id " + id + " outside [0,1]");
  }
  return v;
}

}  // namespace

void ValidateMcqExample(const McqExample& e) {
  if (e.passage_units.empty()) throw DataError(e.id + ": empty passage");
  if (e.question.empty()) throw DataError(e.id + ": empty question");
  const size_t n = e.options.size();
  if (n < 2) throw DataError(e.id + ": fewer than 2 options");
  if (n > kMaxOptions && e.source_dataset != Dataset::kMultiRc) {
    throw DataError(e.id + ": more than " + std::to_string(kMaxOptions) + " options");
  }
  for (const OptionEntry& o : e.options) {
    if (text::Trim(o.text).empty()) throw DataError(e.id + ": empty option text");
  }
  const int correct = e.NumCorrect();
  if (correct < 1) throw DataError(e.id + ": no correct option");
  const bool single = e.source_dataset == Dataset::kRace || e.source_dataset == Dataset::kDream ||
                      e.source_dataset == Dataset::kCosmosQa;
  if (single && correct != 1) {
    throw DataError(e.id + ": expected exactly one correct option, found " +
                    std::to_string(correct));
  }
}

std::vector<McqExample> ReadMcq(Dataset format, const fs::path& source,
                                std::optional<Split> split) {
  std::vector<McqExample> out;
  IdRegistry ids;
  if (format == Dataset::kGeneric) {
    std::ifstream in = OpenInput(source);
    ReadGenericLines(in, source.string(), ids, out);
    return out;
  }
  for (const fs::path& file : ListFiles(source)) {
    switch (format) {
      case Dataset::kRace:
        ReadRaceFile(file, split, ids, out);
        break;
      case Dataset::kMultiRc:
        ReadMultiRcFile(file, split, ids, out);
        break;
      case Dataset::kDream:
        ReadDreamFile(file, split, ids, out);
        break;
      case Dataset::kCosmosQa:
        ReadCosmosFile(file, split, ids, out);
        break;
      case Dataset::kGeneric:
        break;
    }
  }
  return out;
}

std::vector<McqExample> ReadGenericMcq(std::istream& in, const std::string& origin) {
  std::vector<McqExample> out;
  IdRegistry ids;
  ReadGenericLines(in, origin, ids, out);
  return out;
}

std::string NliExampleToJsonLine(const NliExample& e) {
  ordered_json j;
  j["id"] = e.id;
  j["premise"] = e.premise;
  j["hypothesis"] = e.hypothesis;
  j["label"] = LabelName(e.label);
  j["strategy"] = StrategyName(e.strategy);
  j["categories"] = e.categories.Tags();
  j["question_id"] = e.source_question_id;
  j["option_index"] = e.option_index;
  return Dump(j);
}

size_t WriteNliJsonl(std::span<const NliExample> examples, std::ostream& out) {
  size_t written = 0;
  for (const NliExample& e : examples) {
    out << NliExampleToJsonLine(e) << '\n';
    if (!out) throw WriteError("write failed after " + std::to_string(written) + " records",
                               written);
    ++written;
  }
  out.flush();
  if (!out) throw WriteError("flush failed", written);
  return written;
}

size_t WriteNliJsonl(std::span<const NliExample> examples, const fs::path& sink) {
  std::ofstream out(sink, std::ios::binary | std::ios::trunc);
  if (!out) throw WriteError("cannot open " + sink.string() + " for writing", 0);
  try {
    return WriteNliJsonl(examples, out);
  } catch (const WriteError& e) {
    throw WriteError(sink.string() + ": " + e.what(), e.written());
  }
}

std::vector<NliExample> ReadNliJsonl(std::istream& in, const std::string& origin) {
  std::vector<NliExample> out;
  IdRegistry ids;
  ForEachJsonLine(in, origin, [&](const json& obj, const std::string& where) {
    NliExample e;
    e.id = StringField(obj, "id", where);
    e.premise = StringField(obj, "premise", where);
    e.hypothesis = StringField(obj, "hypothesis", where);
    const std::string label = StringField(obj, "label", where);
    auto l = ParseLabel(label);
    if (!l) throw DataError(where + ": unknown label '" + label + "'");
    e.label = *l;
    const std::string strategy = StringField(obj, "strategy", where);
    auto s = ParseStrategy(strategy);
    if (!s) throw DataError(where + ": unknown strategy '" + strategy + "'");
    e.strategy = *s;
    std::vector<std::string> tags;
    for (const json& t : ArrayField(obj, "categories", where)) {
      if (!t.is_string()) throw DataError(where + ": category tags must be strings");
      tags.push_back(t.get<std::string>());
    }
    auto cats = CategorySet::FromTags(tags);
    if (!cats) throw DataError(where + ": unknown category tag");
    e.categories = *cats;
    e.source_question_id = StringField(obj, "question_id", where);
    const json& idx = Field(obj, "option_index", where);
    if (!idx.is_number_integer()) throw DataError(where + ": option_index must be an integer");
    e.option_index = idx.get<int>();
    ids.Add(e.id, where);
    out.push_back(std::move(e));
  });
  return out;
}

std::vector<NliExample> ReadNliJsonl(const fs::path& source) {
  return ReadFile<NliExample>(source, &ReadNliJsonl);
}

std::vector<ScoreRecord> ReadScores(std::istream& in, const std::string& origin) {
  std::vector<ScoreRecord> out;
  IdRegistry ids;
  ForEachJsonLine(in, origin, [&](const json& obj, const std::string& where) {
    ScoreRecord r;
    r.id = StringField(obj, "id", where);
    r.entail = UnitScore(obj, "entail", r.id, where);
    CheckUniqueIds(ids, r.id, where);
    out.push_back(std::move(r));
  });
  return out;
}

std::vector<ScoreRecord> ReadScores(const fs::path& source) {
  return ReadFile<ScoreRecord>(source, &ReadScores);
}

std::vector<CfcsLabeledItem> ReadCfcsLabeled(std::istream& in, const std::string& origin) {
  std::vector<CfcsLabeledItem> out;
  IdRegistry ids;
  ForEachJsonLine(in, origin, [&](const json& obj, const std::string& where) {
    CfcsLabeledItem item;
    item.id = StringField(obj, "id", where);
    item.score = UnitScore(obj, "score", item.id, where);
    item.label = ParseCfcsLabel(StringField(obj, "label", where), where);
    CheckUniqueIds(ids, item.id, where);
    out.push_back(std::move(item));
  });
  return out;
}

std::vector<CfcsLabeledItem> ReadCfcsLabeled(const fs::path& source) {
  return ReadFile<CfcsLabeledItem>(source, &ReadCfcsLabeled);
}

std::vector<CfcsPair> ReadCfcsPairs(std::istream& in, const std::string& origin) {
  std::vector<CfcsPair> out;
  IdRegistry ids;
  ForEachJsonLine(in, origin, [&](const json& obj, const std::string& where) {
    CfcsPair p;
    p.id = StringField(obj, "id", where);
    p.consistent_score = UnitScore(obj, "consistent_score", p.id, where);
    p.inconsistent_score = UnitScore(obj, "inconsistent_score", p.id, where);
    CheckUniqueIds(ids, p.id, where);
    out.push_back(std::move(p));
  });
  return out;
}

std::vector<CfcsPair> ReadCfcsPairs(const fs::path& source) {
  return ReadFile<CfcsPair>(source, &ReadCfcsPairs);
}

}  // namespace mcnli
