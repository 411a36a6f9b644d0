// Copyright 2026 The Thompson Ends Authors.
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
#include "thompson/dot.h"

namespace thompson {
namespace {

std::string Quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void WriteDot(std::ostream& out, const BallGraph& ball, const std::string& name,
              const DotStyle& style) {
  out << "graph " << Quoted(name) << " {\n";
  out << "  node [shape=circle, fontsize=10];\n";
  for (VertexId v = 0; v < ball.size(); ++v) {
    std::string label = style.label ? style.label(v) : "";
    if (label.empty()) label = std::to_string(ball.depth(v));
    out << "  v" << v << " [label=" << Quoted(label);
    const std::string fill = style.fill ? style.fill(v) : "";
    if (!fill.empty()) out << ", style=filled, fillcolor=" << Quoted(fill);
    if (ball.is_frontier(v)) out << ", peripheries=2";
    out << "];\n";
  }
  for (VertexId v = 0; v < ball.size(); ++v) {
    for (VertexId w : ball.neighbors(v)) {
      if (v < w) out << "  v" << v << " -- v" << w << ";\n";
    }
  }
  out << "}\n";
}

}  // namespace thompson
