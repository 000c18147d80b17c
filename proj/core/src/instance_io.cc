// Copyright 2026 The pap Authors
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

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pap/graph.hpp"

namespace pap {
namespace {

bool IsBlank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

int ParseVertex(const std::string& token, int line_no) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size()) {
    throw InvalidInstance("line " + std::to_string(line_no + 1) +
                          ": bad integer '" + token + "'");
  }
  return v;
}

}  // namespace

// Comment and blank lines are stored verbatim with their line index. Other
// lines are re-emitted with single spaces and links as "link min max".
PapInstance ParseInstance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::vector<int>> paths;
  std::vector<Link> links;
  std::vector<std::pair<int, std::string>> comments;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (IsBlank(line) || line[line.find_first_not_of(" \t")] == '#') {
      comments.emplace_back(line_no++, line);
      continue;
    }
    std::istringstream fields(line);
    std::string keyword;
    fields >> keyword;
    std::vector<int> values;
    for (std::string tok; fields >> tok;) values.push_back(ParseVertex(tok, line_no));
    if (keyword == "pap") {
      if (n != -1 || values.size() != 1) {
        throw InvalidInstance("line " + std::to_string(line_no + 1) + ": bad header");
      }
      n = values[0];
    } else if (n == -1) {
      throw InvalidInstance("missing 'pap <n>' header");
    } else if (keyword == "path") {
      if (!links.empty()) {
        throw InvalidInstance("line " + std::to_string(line_no + 1) +
                              ": path after link");
      }
      if (values.empty()) throw InvalidInstance("empty path line");
      paths.push_back(std::move(values));
    } else if (keyword == "link") {
      if (values.size() != 2) {
        throw InvalidInstance("line " + std::to_string(line_no + 1) +
                              ": link needs two vertices");
      }
      links.push_back(MakeLink(values[0], values[1]));
    } else {
      throw InvalidInstance("line " + std::to_string(line_no + 1) +
                            ": unknown keyword '" + keyword + "'");
    }
    ++line_no;
  }
  if (n == -1) throw InvalidInstance("missing 'pap <n>' header");
  PapInstance instance(n, std::move(paths), std::move(links));
  instance.comments = std::move(comments);
  return instance;
}

std::string FormatInstance(const PapInstance& instance) {
  std::vector<std::string> body;
  body.push_back("pap " + std::to_string(instance.num_vertices()));
  for (const auto& p : instance.paths()) {
    std::string s = "path";
    for (int v : p) s += " " + std::to_string(v);
    body.push_back(std::move(s));
  }
  for (const Link& l : instance.links()) {
    body.push_back("link " + std::to_string(l.u) + " " + std::to_string(l.v));
  }
  std::string out;
  size_t next_body = 0;
  size_t next_comment = 0;
  const auto& comments = instance.comments;
  for (int line = 0; next_body < body.size() || next_comment < comments.size();
       ++line) {
    if (next_comment < comments.size() &&
        (comments[next_comment].first <= line || next_body == body.size())) {
      out += comments[next_comment++].second;
    } else {
      out += body[next_body++];
    }
    out += '\n';
  }
  return out;
}

PapInstance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInstance("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseInstance(buf.str());
}

void WriteInstanceFile(const PapInstance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << FormatInstance(instance);
}

}  // namespace pap
