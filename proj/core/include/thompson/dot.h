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
#ifndef THOMPSON_DOT_H_
#define THOMPSON_DOT_H_

#include <functional>
#include <ostream>
#include <string>

#include "thompson/ballgraph.h"

namespace thompson {

struct DotStyle {
  // Empty results fall back to the depth label and no fill.
  std::function<std::string(VertexId)> label;
  std::function<std::string(VertexId)> fill;
};

// Undirected Graphviz rendering of a ball.
void WriteDot(std::ostream& out, const BallGraph& ball, const std::string& name,
              const DotStyle& style = {});

}  // namespace thompson

#endif  // THOMPSON_DOT_H_
