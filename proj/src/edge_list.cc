// Copyright 2026 The corrdetect Authors.
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

#include "corrdetect/edge_list.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "corrdetect/errors.h"
#include "fmt/format.h"

namespace corrdetect {
namespace {

bool ParseIndex(const std::string& token, long long& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end && out >= 0;
}

struct RawEdge {
  std::string u, v;
  int line;
};

}  // namespace

LabeledGraph ReadEdgeList(std::istream& in, double m0) {
  if (!(m0 >= 1.0)) throw ParameterError(fmt::format("m0 = {} must be >= 1", m0));
  std::vector<RawEdge> raw;
  long long declared_n = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) {
      std::istringstream comment(line.substr(hash + 1));
      std::string key;
      long long count;
      if (comment >> key && key == "vertices") {
        if (!(comment >> count) || count < 0)
          throw ParseError("malformed vertices header", line_no);
        declared_n = count;
      }
      line.resize(hash);
    }
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() != 2 && tokens.size() != 3)
      throw ParseError(fmt::format("expected 2 or 3 fields, got {}", tokens.size()),
                       line_no);
    double w = 1.0;
    if (tokens.size() == 3) {
      size_t used = 0;
      try {
        w = std::stod(tokens[2], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tokens[2].size())
        throw ParseError(fmt::format("bad weight '{}'", tokens[2]), line_no);
    }
    if (w >= m0) raw.push_back({tokens[0], tokens[1], line_no});
  }

  bool numeric = true;
  long long max_id = -1;
  for (const auto& e : raw) {
    long long a, b;
    if (!ParseIndex(e.u, a) || !ParseIndex(e.v, b)) {
      numeric = false;
      break;
    }
    max_id = std::max({max_id, a, b});
  }

  LabeledGraph out;
  std::vector<Edge> edges;
  if (numeric) {
    long long n = declared_n >= 0 ? declared_n : max_id + 1;
    if (max_id >= n)
      throw ParseError(fmt::format("vertex {} exceeds declared count {}", max_id, n),
                       raw.empty() ? line_no : raw.back().line);
    for (const auto& e : raw) {
      const int a = std::stoi(e.u), b = std::stoi(e.v);
      if (a != b) edges.emplace_back(a, b);
    }
    out.graph = SimpleGraph(static_cast<int>(n), edges);
    return out;
  }
  std::unordered_map<std::string, int> ids;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, static_cast<int>(out.labels.size()));
    if (inserted) out.labels.push_back(label);
    return it->second;
  };
  for (const auto& e : raw) {
    const int a = intern(e.u), b = intern(e.v);
    if (a != b) edges.emplace_back(a, b);
  }
  out.graph = SimpleGraph(static_cast<int>(out.labels.size()), edges);
  return out;
}

LabeledGraph ReadEdgeListFile(const std::string& path, double m0) {
  std::ifstream in(path);
  if (!in) throw ParameterError(fmt::format("cannot open edge list '{}'", path));
  return ReadEdgeList(in, m0);
}

void WriteEdgeList(std::ostream& out, const SimpleGraph& g) {
  out << "# vertices " << g.num_vertices() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace corrdetect
