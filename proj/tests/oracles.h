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
// Reference implementations used only by tests. They share no arithmetic
// with the library: values are GMP rationals, maps are read straight from
// their cell pairs, and graph questions are answered by union-find.

#ifndef THOMPSON_TESTS_ORACLES_H_
#define THOMPSON_TESTS_ORACLES_H_

#include <gmpxx.h>

#include <cstddef>
#include <set>
#include <vector>

#include "thompson/ballgraph.h"
#include "thompson/dyadic.h"
#include "thompson/elements.h"

namespace oracle {

mpq_class Q(const thompson::Dyadic& d);
mpq_class Q(const thompson::Integer& i);
mpq_class Pow2(long exponent);  // 2^exponent, any sign
mpq_class Frac(long p, long q);  // canonical p/q

// g(x) from the cell pairs of g; x in [0,1).
mpq_class Eval(const thompson::CellMap& g, const mpq_class& x);

// The displayed formula for x0.
mpq_class X0Formula(const mpq_class& t);

// The inverse obtained by swapping every cell pair.
thompson::CellMap SwapPairs(const thompson::CellMap& g);

// Equality as functions: agree on every cell of a level fine enough for both
// maps (affine on each such cell, so two points per cell decide it).
bool SameFunction(const thompson::CellMap& g, const thompson::CellMap& h);

// Points of (0,1) where g changes slope or jumps, found on a uniform grid.
std::set<mpq_class> Breakpoints(const thompson::CellMap& g);

// Standard intervals of level >= 1 with a breakpoint of w in their interior.
std::size_t IntervalsStraddlingBreakpoints(const thompson::CellMap& w);

// Standard intervals I of level >= 1 (F: only [0, 2^-k)) such that w is not
// affine on I or maps it onto a non-standard interval.
std::size_t BadImageIntervals(const thompson::CellMap& w,
                              thompson::GroupClass group);

// Connected components of the graph with the vertices of removed deleted,
// each as a sorted vertex list, ordered by smallest vertex.
std::vector<std::vector<thompson::VertexId>> Components(
    const thompson::BallGraph& g, const std::vector<bool>& removed);

}  // namespace oracle

#endif  // THOMPSON_TESTS_ORACLES_H_
