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
#ifndef THOMPSON_WORDS_H_
#define THOMPSON_WORDS_H_

#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/elements.h"

namespace thompson {

struct Letter {
  Generator gen;
  bool inverse = false;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

// A group element with a display name, e.g. a ball generator "x0^-1".
struct NamedElement {
  std::string name;
  CellMap map;
};

// Parses whitespace- or '*'-separated letters such as "x0 pi1^-1 x1^2".
// "1" and "id" denote the empty word.
Word ParseWord(std::string_view text);
std::string WordToString(const Word& w);

// The product of the letters, leftmost applied last: "a b" is a after b.
CellMap EvaluateWord(const Word& w);

// Accepts either a cell-pair map "k/2^n -> k'/2^n', ..." or a word.
CellMap ParseElement(std::string_view text);

// Each generator followed by its inverse: x0, x0^-1, x1, x1^-1, ...
std::vector<Letter> SymmetrizedAlphabet(std::span<const Generator> gens);

// Each element followed by its inverse, named "<name>^-1". Self-inverse
// elements still contribute two labels, so the graph degree is 2 * size.
std::vector<NamedElement> Symmetrize(const std::vector<NamedElement>& gens);

std::vector<NamedElement> StandardGeneratorSet(GroupClass group);

// Uniform length in [0, max_length], letters uniform over the alphabet.
Word RandomWord(std::mt19937_64& rng, int max_length,
                std::span<const Letter> alphabet);

}  // namespace thompson

#endif  // THOMPSON_WORDS_H_
