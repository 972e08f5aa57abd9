// Copyright 2026 The spegame Authors.
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

#include "spe/game_io.h"

#include <cctype>
#include <set>
#include <sstream>

#include "json.hpp"

namespace spe {
namespace {

using nlohmann::json;

// JSON tree that keeps number literals as written.
struct Value {
  enum class Kind { kNull, kBool, kNumber, kString, kArray, kObject };
  Kind kind = Kind::kNull;
  std::string text;  // number literal or string contents
  std::vector<Value> items;
  std::vector<std::pair<std::string, Value>> members;

  const Value* Member(std::string_view key) const {
    for (const auto& [k, v] : members) {
      if (k == key) return &v;
    }
    return nullptr;
  }
};

std::string KindName(Value::Kind kind) {
  switch (kind) {
    case Value::Kind::kNull:
      return "null";
    case Value::Kind::kBool:
      return "boolean";
    case Value::Kind::kNumber:
      return "number";
    case Value::Kind::kString:
      return "string";
    case Value::Kind::kArray:
      return "array";
    case Value::Kind::kObject:
      return "object";
  }
  return "?";
}

std::pair<int, int> LineColumn(std::string_view text, std::size_t offset) {
  int line = 1;
  int column = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

class ValueBuilder : public json::json_sax_t {
 public:
  explicit ValueBuilder(std::string_view source) : source_(source) {}

  bool null() override { return Add(Value{}); }
  bool boolean(bool v) override {
    return Add(Value{Value::Kind::kBool, v ? "true" : "false", {}, {}});
  }
  bool number_integer(number_integer_t v) override { return Number(std::to_string(v)); }
  bool number_unsigned(number_unsigned_t v) override { return Number(std::to_string(v)); }
  bool number_float(number_float_t, const string_t& literal) override { return Number(literal); }
  bool string(string_t& v) override { return Add(Value{Value::Kind::kString, v, {}, {}}); }
  bool binary(binary_t&) override { return false; }

  bool start_object(std::size_t) override { return Open(Value::Kind::kObject); }
  bool key(string_t& k) override {
    Value& object = *stack_.back();
    if (object.Member(k) != nullptr) {
      duplicate_key_ = k;
      return false;
    }
    object.members.emplace_back(k, Value{});
    return true;
  }
  bool end_object() override {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) override { return Open(Value::Kind::kArray); }
  bool end_array() override {
    stack_.pop_back();
    return true;
  }

  bool parse_error(std::size_t position, const std::string& /*token*/,
                   const json::exception& error) override {
    // `position` counts the offending character (or end of input) as read.
    auto [line, column] = LineColumn(source_, position > 0 ? position - 1 : 0);
    std::string reason = error.what();
    if (auto at = reason.find(": ", reason.find("column ")); at != std::string::npos) {
      reason = reason.substr(at + 2);
    }
    throw ParseError(line, column, reason);
  }

  Value Take() {
    if (!duplicate_key_.empty()) {
      throw GameError(ErrorCode::kSyntaxError, "duplicate key \"" + duplicate_key_ + "\"");
    }
    return std::move(root_);
  }

 private:
  bool Number(const std::string& literal) {
    return Add(Value{Value::Kind::kNumber, literal, {}, {}});
  }

  Value* Slot() {
    if (stack_.empty()) return &root_;
    Value& top = *stack_.back();
    if (top.kind == Value::Kind::kArray) {
      top.items.emplace_back();
      return &top.items.back();
    }
    return &top.members.back().second;
  }

  bool Add(Value v) {
    *Slot() = std::move(v);
    return true;
  }

  bool Open(Value::Kind kind) {
    Value* slot = Slot();
    slot->kind = kind;
    stack_.push_back(slot);
    return true;
  }

  std::string_view source_;
  Value root_;
  std::vector<Value*> stack_;
  std::string duplicate_key_;
};

[[noreturn]] void SchemaError(const std::string& where, const std::string& what) {
  throw GameError(ErrorCode::kSyntaxError, "at " + where + ": " + what);
}

const Value& Expect(const Value& object, std::string_view key, Value::Kind kind,
                    const std::string& where) {
  const Value* v = object.Member(key);
  if (v == nullptr) SchemaError(where, "missing key \"" + std::string(key) + "\"");
  if (v->kind != kind) {
    SchemaError(where + "." + std::string(key),
                "expected " + KindName(kind) + ", found " + KindName(v->kind));
  }
  return *v;
}

void OnlyKeys(const Value& object, std::initializer_list<std::string_view> allowed,
              const std::string& where) {
  for (const auto& [k, v] : object.members) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
      SchemaError(where, "unexpected key \"" + k + "\"");
    }
  }
}

long long SmallInteger(const Value& v, const std::string& where) {
  const std::string& t = v.text;
  const bool digits =
      !t.empty() && std::all_of(t.begin() + (t[0] == '-' ? 1 : 0), t.end(),
                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (!digits || t == "-" || t.size() > 9)
    SchemaError(where, "expected a small integer, found " + t);
  return std::stoll(t);
}

Rational PayoffLiteral(const Value& v, const std::string& where) {
  if (v.kind != Value::Kind::kNumber && v.kind != Value::Kind::kString) {
    SchemaError(where, "payoff must be a number or a string, found " + KindName(v.kind));
  }
  try {
    return ParseRational(v.text);
  } catch (const GameError&) {
    SchemaError(where, "malformed rational literal '" + v.text + "'");
  }
}

NodeSpec ReadNode(const Value& v, const std::string& where) {
  if (v.kind != Value::Kind::kObject) SchemaError(where, "expected a node object");
  if (v.Member("payoffs") != nullptr) {
    OnlyKeys(v, {"payoffs"}, where);
    const Value& payoffs = Expect(v, "payoffs", Value::Kind::kArray, where);
    std::vector<Rational> values;
    for (std::size_t k = 0; k < payoffs.items.size(); ++k) {
      values.push_back(
          PayoffLiteral(payoffs.items[k], where + ".payoffs[" + std::to_string(k) + "]"));
    }
    return NodeSpec::Leaf(PayoffVector(std::move(values)));
  }
  OnlyKeys(v, {"player", "children"}, where);
  const long long player =
      SmallInteger(Expect(v, "player", Value::Kind::kNumber, where), where + ".player");
  const Value& children = Expect(v, "children", Value::Kind::kArray, where);
  std::vector<std::pair<std::string, NodeSpec>> out;
  for (std::size_t k = 0; k < children.items.size(); ++k) {
    const std::string at = where + ".children[" + std::to_string(k) + "]";
    const Value& entry = children.items[k];
    if (entry.kind != Value::Kind::kObject) SchemaError(at, "expected {\"label\", \"node\"}");
    OnlyKeys(entry, {"label", "node"}, at);
    const std::string& label = Expect(entry, "label", Value::Kind::kString, at).text;
    if (!IsLegalLabel(label)) SchemaError(at + ".label", "illegal label \"" + label + "\"");
    const Value* node = entry.Member("node");
    if (node == nullptr) SchemaError(at, "missing key \"node\"");
    out.emplace_back(label, ReadNode(*node, at + ".node"));
  }
  return NodeSpec::Decision(static_cast<int>(player - 1), std::move(out));
}

std::string PayoffJson(const Rational& value) {
  std::string text = FormatRational(value);
  return boost::multiprecision::denominator(value) == 1 ? text : "\"" + text + "\"";
}

void WriteNode(const GameTree& tree, NodeIndex u, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  if (tree.IsLeaf(u)) {
    out += pad + "\"payoffs\": [";
    const PayoffVector& p = tree.Payoffs(u);
    for (int i = 0; i < p.size(); ++i) {
      if (i > 0) out += ", ";
      out += PayoffJson(p[i]);
    }
    out += "]\n";
    return;
  }
  out += pad + "\"player\": " + std::to_string(tree.Turn(u) + 1) + ",\n";
  const auto children = tree.Children(u);
  if (children.empty()) {
    out += pad + "\"children\": []\n";
    return;
  }
  out += pad + "\"children\": [\n";
  for (std::size_t k = 0; k < children.size(); ++k) {
    out += pad + "  {\n";
    out += pad + "    \"label\": " + json(children[k].label).dump() + ",\n";
    out += pad + "    \"node\": {\n";
    WriteNode(tree, children[k].node, indent + 6, out);
    out += pad + "    }\n";
    out += pad + (k + 1 < children.size() ? "  },\n" : "  }\n");
  }
  out += pad + "]\n";
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

bool IsLegalLabel(std::string_view label) {
  if (label.empty() || Trim(label).size() != label.size()) return false;
  return label.find_first_of("/=\n\r") == std::string_view::npos;
}

GameTree ParseGame(std::string_view text) {
  ValueBuilder builder(text);
  json::sax_parse(text.begin(), text.end(), &builder);
  const Value document = builder.Take();
  if (document.kind != Value::Kind::kObject) SchemaError("top level", "expected an object");
  OnlyKeys(document, {"players", "root"}, "top level");
  const long long players =
      SmallInteger(Expect(document, "players", Value::Kind::kNumber, "top level"), "players");
  const Value* root = document.Member("root");
  if (root == nullptr) SchemaError("top level", "missing key \"root\"");
  GameTree tree(static_cast<int>(players), ReadNode(*root, "root"));
  ValidateOrThrow(tree);
  return tree;
}

std::string SerializeGame(const GameTree& tree) {
  std::string out = "{\n  \"players\": " + std::to_string(tree.num_players()) + ",\n";
  out += "  \"root\": {\n";
  WriteNode(tree, tree.root(), 4, out);
  out += "  }\n}\n";
  return out;
}

JointStrategy ParseStrategy(const GameTree& tree, std::string_view text) {
  std::vector<int> choices(tree.num_nodes(), kNoChoice);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view content = Trim(line);
    if (content.empty() || content.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(line_number, 1, "expected 'node-path = child-label'");
    }
    const std::string_view path = Trim(std::string_view(line).substr(0, eq));
    const std::string_view label = Trim(std::string_view(line).substr(eq + 1));
    const int label_column = static_cast<int>(line.find_first_not_of(" \t", eq + 1)) + 1;
    auto node = tree.Find(path);
    if (!node) throw ParseError(line_number, 1, "no node '" + std::string(path) + "'");
    if (tree.IsLeaf(*node))
      throw ParseError(line_number, 1, "'" + std::string(path) + "' is a leaf");
    if (choices[*node] != kNoChoice) {
      throw ParseError(line_number, 1, "second choice for node '" + std::string(path) + "'");
    }
    auto position = tree.ChildPosition(*node, label);
    if (!position) {
      throw ParseError(
          line_number, label_column,
          "node '" + std::string(path) + "' has no child '" + std::string(label) + "'");
    }
    choices[*node] = *position;
  }
  for (NodeIndex u : tree.InternalNodes()) {
    if (choices[u] == kNoChoice) {
      throw GameError(ErrorCode::kInvalidStrategy, "no choice for node '" + tree.Path(u) + "'");
    }
  }
  return JointStrategy(std::move(choices));
}

std::string SerializeStrategy(const GameTree& tree, const JointStrategy& s) {
  CheckStrategy(tree, s);
  std::string out;
  for (NodeIndex u : tree.InternalNodes()) {
    out += tree.Path(u);
    out += tree.Path(u).empty() ? "= " : " = ";
    out += tree.Children(u)[s.Choice(u)].label;
    out += '\n';
  }
  return out;
}

}  // namespace spe
