// Copyright 2026 The Authors.
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

#include "sbomatch/format.h"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sbomatch/errors.h"
#include "sbomatch/sbo_lab.h"

namespace sbomatch {

namespace {

struct Node {
  int line = 0;
  int indent = 0;
  std::string text;
  std::vector<Node> children;
};

struct RawLine {
  int line;
  int indent;
  std::string text;
};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<RawLine> SplitLines(std::string_view text) {
  std::vector<RawLine> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++number;
    start = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    int indent = 0;
    while (indent < static_cast<int>(line.size()) &&
           (line[indent] == ' ' || line[indent] == '\t')) {
      if (line[indent] == '\t') {
        throw ParseError(number, "tabs are not allowed in indentation");
      }
      ++indent;
    }
    const std::string_view body = Trim(line);
    if (body.empty()) continue;
    out.push_back({number, indent, std::string(body)});
  }
  return out;
}

// Children of a node are the following lines indented deeper than it; all
// direct children share one indentation.
std::vector<Node> BuildNodes(const std::vector<RawLine>& lines,
                             std::size_t& pos, int parent_indent) {
  std::vector<Node> nodes;
  int level = -1;
  while (pos < lines.size() && lines[pos].indent > parent_indent) {
    const RawLine& raw = lines[pos];
    if (level == -1) level = raw.indent;
    if (raw.indent != level) {
      throw ParseError(raw.line, "inconsistent indentation");
    }
    Node node{raw.line, raw.indent, raw.text, {}};
    ++pos;
    node.children = BuildNodes(lines, pos, raw.indent);
    nodes.push_back(std::move(node));
  }
  return nodes;
}

std::vector<std::string> Tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

int ParseInt(const std::string& token, int line) {
  int value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  return value;
}

std::vector<int> ParseInts(std::string_view s, int line) {
  std::vector<int> out;
  for (const std::string& t : Tokens(s)) out.push_back(ParseInt(t, line));
  return out;
}

struct Attribute {
  std::string head;
  std::string rest;
};

// "block 1: 0 2" -> {"block 1", "0 2"}; nullopt when the line has no colon.
std::optional<Attribute> SplitAttribute(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return std::nullopt;
  return Attribute{std::string(Trim(std::string_view(text).substr(0, colon))),
                   std::string(Trim(std::string_view(text).substr(colon + 1)))};
}

void ExpectArgs(const std::vector<std::string>& tokens, std::size_t count,
                int line) {
  if (tokens.size() != count + 1) {
    throw ParseError(line, "'" + tokens[0] + "' takes " +
                               std::to_string(count) + " argument(s)");
  }
}

void ExpectNoChildren(const Node& node) {
  if (!node.children.empty()) {
    throw ParseError(node.children.front().line, "unexpected indented line");
  }
}

MatroidPtr ParseMatroidNode(const Node& node);

MatroidPtr SingleInner(const Node& node) {
  MatroidPtr inner;
  for (const Node& child : node.children) {
    if (SplitAttribute(child.text)) {
      throw ParseError(child.line, "unexpected attribute '" + child.text + "'");
    }
    if (inner) throw ParseError(child.line, "expected one inner matroid");
    inner = ParseMatroidNode(child);
  }
  if (!inner) throw ParseError(node.line, "missing inner matroid");
  return inner;
}

// Element-level checks run here so errors point at the offending child line.
void CheckRange(const std::vector<int>& values, int bound, int line) {
  for (int v : values) {
    if (v < 0 || v >= bound) {
      throw ParseError(line, "index " + std::to_string(v) +
                                 " outside [0, " + std::to_string(bound) +
                                 ")");
    }
  }
}

MatroidPtr BuildMatroid(const Node& node) {
  const std::vector<std::string> tokens = Tokens(node.text);
  if (tokens.empty()) throw ParseError(node.line, "missing matroid kind");
  const std::string& kind = tokens[0];
  const int line = node.line;

  if (kind == "uniform") {
    ExpectArgs(tokens, 2, line);
    ExpectNoChildren(node);
    return MakeUniform(ParseInt(tokens[1], line), ParseInt(tokens[2], line));
  }
  if (kind == "partition" || kind == "transversal" || kind == "explicit") {
    ExpectArgs(tokens, kind == "explicit" ? 2 : 1, line);
    const int m = ParseInt(tokens[1], line);
    std::vector<ElementSet> sets;
    std::vector<int> caps;
    const std::string child_head = kind == "partition"     ? "block"
                                   : kind == "transversal" ? "agent"
                                                           : "set";
    for (const Node& child : node.children) {
      ExpectNoChildren(child);
      const auto attr = SplitAttribute(child.text);
      const std::vector<std::string> head =
          attr ? Tokens(attr->head) : std::vector<std::string>{};
      if (!attr || head.empty() || head[0] != child_head) {
        throw ParseError(child.line, "expected '" + child_head + "' line");
      }
      if (kind == "partition") {
        if (head.size() != 2) {
          throw ParseError(child.line, "expected 'block <capacity>: ...'");
        }
        caps.push_back(ParseInt(head[1], child.line));
      } else if (head.size() != 1) {
        throw ParseError(child.line, "unexpected tokens before ':'");
      }
      sets.push_back(ParseInts(attr->rest, child.line));
      CheckRange(sets.back(), m, child.line);
    }
    if (kind == "partition") {
      return MakePartition(m, std::move(sets), std::move(caps));
    }
    if (kind == "transversal") return MakeTransversal(m, std::move(sets));
    ExplicitMode mode;
    if (tokens[2] == "bases") {
      mode = ExplicitMode::kBases;
    } else if (tokens[2] == "independent") {
      mode = ExplicitMode::kIndependentSets;
    } else {
      throw ParseError(line, "explicit mode must be 'bases' or 'independent'");
    }
    return MakeExplicit(m, std::move(sets), mode);
  }
  if (kind == "truncate") {
    ExpectArgs(tokens, 1, line);
    return Truncate(SingleInner(node), ParseInt(tokens[1], line));
  }
  if (kind == "coloops") {
    ExpectArgs(tokens, 1, line);
    return AddColoops(SingleInner(node), ParseInt(tokens[1], line));
  }
  if (kind == "copies") {
    ExpectArgs(tokens, 1, line);
    const int m = ParseInt(tokens[1], line);
    std::optional<std::vector<int>> map;
    MatroidPtr inner;
    for (const Node& child : node.children) {
      if (const auto attr = SplitAttribute(child.text)) {
        if (attr->head != "map" || map) {
          throw ParseError(child.line, "expected a single 'map:' line");
        }
        ExpectNoChildren(child);
        map = ParseInts(attr->rest, child.line);
      } else {
        if (inner) throw ParseError(child.line, "expected one inner matroid");
        inner = ParseMatroidNode(child);
      }
    }
    if (!map) throw ParseError(line, "copies needs a 'map:' line");
    if (!inner) throw ParseError(line, "missing inner matroid");
    if (static_cast<int>(map->size()) != m) {
      throw ParseError(line, "copy map must list " + std::to_string(m) +
                                 " originals");
    }
    return std::make_shared<RestrictedCopiesMatroid>(inner, std::move(*map));
  }
  if (kind == "clique") {
    ExpectArgs(tokens, 2, line);
    const int pair_count = ParseInt(tokens[2], line);
    std::vector<Pair> edges;
    for (const Node& child : node.children) {
      ExpectNoChildren(child);
      const auto attr = SplitAttribute(child.text);
      if (!attr || attr->head != "edge") {
        throw ParseError(child.line, "expected 'edge: a b'");
      }
      const std::vector<int> ends = ParseInts(attr->rest, child.line);
      if (ends.size() != 2) {
        throw ParseError(child.line, "edge needs two pair indices");
      }
      CheckRange(ends, pair_count, child.line);
      if (ends[0] == ends[1]) throw ParseError(child.line, "self-loop edge");
      edges.push_back({ends[0], ends[1]});
    }
    return std::make_shared<CliqueMatroid>(ParseInt(tokens[1], line),
                                           pair_count,
                                           std::move(edges));
  }
  throw ParseError(line, "unknown matroid kind '" + kind + "'");
}

MatroidPtr ParseMatroidNode(const Node& node) {
  try {
    return BuildMatroid(node);
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(node.line, e.what());
  }
}

std::vector<Pair> ParsePairList(const Node& node) {
  std::vector<Pair> out;
  for (const Node& child : node.children) {
    ExpectNoChildren(child);
    const std::vector<int> ends = ParseInts(child.text, child.line);
    if (ends.size() != 2) {
      throw ParseError(child.line, "expected two element ids");
    }
    out.push_back({std::min(ends[0], ends[1]), std::max(ends[0], ends[1])});
  }
  return out;
}

std::vector<Weight> ParseWeights(const Node& node, std::string_view inline_rest) {
  std::vector<Weight> out;
  auto add = [&](std::string_view text, int line) {
    for (const std::string& t : Tokens(text)) {
      try {
        out.push_back(ParseRational(t));
      } catch (const InputError& e) {
        throw ParseError(line, e.what());
      }
    }
  };
  add(inline_rest, node.line);
  for (const Node& child : node.children) {
    ExpectNoChildren(child);
    add(child.text, child.line);
  }
  return out;
}

// Writes the kind line of `matroid` (no leading indentation, trailing
// newline) followed by its children at `child_indent`.
void WriteMatroid(const Matroid& matroid, int child_indent, std::ostream& out) {
  const std::string pad(child_indent, ' ');
  auto write_list = [&](std::string_view head, const std::vector<int>& items) {
    out << pad << head << ':';
    for (int e : items) out << ' ' << e;
    out << '\n';
  };
  if (const auto* counting = dynamic_cast<const CountingMatroid*>(&matroid)) {
    WriteMatroid(*counting->inner(), child_indent, out);
  } else if (const auto* u = dynamic_cast<const UniformMatroid*>(&matroid)) {
    out << "uniform " << u->ground_size() << ' ' << u->rank() << '\n';
  } else if (const auto* p = dynamic_cast<const PartitionMatroid*>(&matroid)) {
    out << "partition " << p->ground_size() << '\n';
    for (std::size_t b = 0; b < p->blocks().size(); ++b) {
      write_list("block " + std::to_string(p->capacities()[b]),
                 p->blocks()[b]);
    }
  } else if (const auto* t =
                 dynamic_cast<const TransversalMatroid*>(&matroid)) {
    out << "transversal " << t->ground_size() << '\n';
    for (const ElementSet& agent : t->agents()) write_list("agent", agent);
  } else if (const auto* x = dynamic_cast<const ExplicitMatroid*>(&matroid)) {
    out << "explicit " << x->ground_size() << ' '
        << (x->mode() == ExplicitMode::kBases ? "bases" : "independent")
        << '\n';
    for (const ElementSet& s : x->sets()) write_list("set", s);
  } else if (const auto* tr = dynamic_cast<const TruncatedMatroid*>(&matroid)) {
    out << "truncate " << tr->max_size() << '\n' << pad;
    WriteMatroid(*tr->inner(), child_indent + 2, out);
  } else if (const auto* c = dynamic_cast<const ColoopExtension*>(&matroid)) {
    out << "coloops " << c->extra() << '\n' << pad;
    WriteMatroid(*c->inner(), child_indent + 2, out);
  } else if (const auto* r =
                 dynamic_cast<const RestrictedCopiesMatroid*>(&matroid)) {
    out << "copies " << r->ground_size() << '\n';
    write_list("map", r->original_of());
    out << pad;
    WriteMatroid(*r->inner(), child_indent + 2, out);
  } else if (const auto* q = dynamic_cast<const CliqueMatroid*>(&matroid)) {
    out << "clique " << q->nu() << ' ' << q->pair_count() << '\n';
    for (const Pair& e : q->graph_edges()) {
      write_list("edge", {e.first, e.second});
    }
  } else {
    throw InputError("matroid kind has no text form");
  }
}

void WritePairs(std::string_view label, const std::vector<Pair>& pairs,
                std::ostream& out) {
  out << label << ":\n";
  for (const Pair& p : pairs) {
    out << "  " << std::min(p.first, p.second) << ' '
        << std::max(p.first, p.second) << '\n';
  }
}

void WriteWeights(const std::vector<Weight>& weights, std::ostream& out) {
  out << "weights:\n";
  for (const Weight& w : weights) out << "  " << ToString(w) << '\n';
}

}  // namespace

MatroidPtr ParseMatroid(std::string_view text) {
  const std::vector<RawLine> lines = SplitLines(text);
  std::size_t pos = 0;
  const std::vector<Node> nodes = BuildNodes(lines, pos, -1);
  if (nodes.size() != 1) {
    throw ParseError(nodes.empty() ? 0 : nodes[1].line,
                     "expected exactly one matroid description");
  }
  return ParseMatroidNode(nodes.front());
}

Instance ParseInstance(std::string_view text) {
  const std::vector<RawLine> lines = SplitLines(text);
  if (lines.empty() || lines.front().indent != 0 ||
      lines.front().text != kFormatMagic) {
    throw ParseError(lines.empty() ? 0 : lines.front().line,
                     "missing '" + std::string(kFormatMagic) + "' header");
  }
  std::size_t pos = 1;
  const std::vector<Node> nodes = BuildNodes(lines, pos, -1);
  if (pos != lines.size()) {
    throw ParseError(lines[pos].line, "inconsistent indentation");
  }

  std::optional<std::string> problem;
  MatroidPtr matroid;
  std::optional<std::vector<Pair>> pairs;
  std::optional<std::vector<Pair>> edges;
  std::optional<std::vector<Weight>> weights;
  for (const Node& node : nodes) {
    if (node.indent != 0) {
      throw ParseError(node.line, "sections start in the first column");
    }
    const auto attr = SplitAttribute(node.text);
    if (!attr) throw ParseError(node.line, "expected 'section:'");
    auto duplicate = [&] {
      throw ParseError(node.line, "duplicate '" + attr->head + "' section");
    };
    if (attr->head == "problem") {
      if (problem) duplicate();
      ExpectNoChildren(node);
      if (attr->rest != "parity" && attr->rest != "matching") {
        throw ParseError(node.line, "problem must be 'parity' or 'matching'");
      }
      problem = attr->rest;
    } else if (attr->head == "matroid") {
      if (matroid) duplicate();
      matroid = ParseMatroidNode(
          Node{node.line, node.indent, attr->rest, node.children});
    } else if (attr->head == "pairs" || attr->head == "edges") {
      auto& target = attr->head == "pairs" ? pairs : edges;
      if (target) duplicate();
      if (!attr->rest.empty()) {
        throw ParseError(node.line, "list entries go on indented lines");
      }
      target = ParsePairList(node);
    } else if (attr->head == "weights") {
      if (weights) duplicate();
      weights = ParseWeights(node, attr->rest);
    } else {
      throw ParseError(node.line, "unknown section '" + attr->head + "'");
    }
  }
  if (!problem) throw ParseError(0, "missing 'problem:' section");
  if (!matroid) throw ParseError(0, "missing 'matroid:' section");
  if (!weights) weights.emplace();

  if (*problem == "parity") {
    if (edges) throw ParseError(0, "parity instances list 'pairs:'");
    ParityInstance out{matroid, pairs.value_or(std::vector<Pair>{}),
                       std::move(*weights)};
    Validate(out);
    return out;
  }
  if (pairs) throw ParseError(0, "matching instances list 'edges:'");
  MatchingInstance out{matroid, edges.value_or(std::vector<Pair>{}),
                       std::move(*weights)};
  Validate(out);
  return out;
}

ParityInstance ParseParityInstance(std::string_view text) {
  Instance parsed = ParseInstance(text);
  if (auto* p = std::get_if<ParityInstance>(&parsed)) return std::move(*p);
  throw ParseError(0, "expected a parity instance");
}

MatchingInstance ParseMatchingInstance(std::string_view text) {
  Instance parsed = ParseInstance(text);
  if (auto* m = std::get_if<MatchingInstance>(&parsed)) return std::move(*m);
  throw ParseError(0, "expected a matching instance");
}

std::string SerializeMatroid(const Matroid& matroid) {
  std::ostringstream out;
  WriteMatroid(matroid, 2, out);
  return out.str();
}

std::string Serialize(const ParityInstance& instance) {
  std::ostringstream out;
  out << kFormatMagic << "\nproblem: parity\nmatroid: ";
  WriteMatroid(*instance.matroid, 2, out);
  WritePairs("pairs", instance.pairs, out);
  WriteWeights(instance.weights, out);
  return out.str();
}

std::string Serialize(const MatchingInstance& instance) {
  std::ostringstream out;
  out << kFormatMagic << "\nproblem: matching\nmatroid: ";
  WriteMatroid(*instance.matroid, 2, out);
  WritePairs("edges", instance.edges, out);
  WriteWeights(instance.weights, out);
  return out.str();
}

std::string Serialize(const Instance& instance) {
  return std::visit([](const auto& i) { return Serialize(i); }, instance);
}

}  // namespace sbomatch
