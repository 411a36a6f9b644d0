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
#include "thompson/words.h"

#include <cctype>

#include "thompson/errors.h"

namespace thompson {

Word ParseWord(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  auto is_sep = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0 || c == '*' ||
           c == '.';
  };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;
    if (token == "1" || token == "id") continue;

    int exponent = 1;
    std::string_view name = token;
    if (const auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      const std::string e(token.substr(caret + 1));
      try {
        std::size_t used = 0;
        exponent = std::stoi(e, &used);
        if (used != e.size()) throw std::invalid_argument(e);
      } catch (const std::exception&) {
        throw ParseError("bad exponent in word letter '" + std::string(token) +
                         "'");
      }
    }
    const auto gen = ParseGenerator(name);
    if (!gen) {
      throw ParseError("unknown generator '" + std::string(name) +
                       "' (want x0, x1, pi0, pi1)");
    }
    for (int i = 0; i < std::abs(exponent); ++i) {
      w.push_back(Letter{*gen, exponent < 0});
    }
  }
  return w;
}

std::string WordToString(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += GeneratorName(l.gen);
    if (l.inverse) out += "^-1";
  }
  return out;
}

CellMap EvaluateWord(const Word& w) {
  CellMap g;
  for (const Letter& l : w) {
    const CellMap s = StandardGenerator(l.gen);
    g = Compose(g, l.inverse ? Invert(s) : s);
  }
  return g;
}

CellMap ParseElement(std::string_view text) {
  if (text.find("->") != std::string_view::npos) return CellMap::Parse(text);
  return EvaluateWord(ParseWord(text));
}

std::vector<Letter> SymmetrizedAlphabet(std::span<const Generator> gens) {
  std::vector<Letter> out;
  for (Generator g : gens) {
    out.push_back(Letter{g, false});
    out.push_back(Letter{g, true});
  }
  return out;
}

std::vector<NamedElement> Symmetrize(const std::vector<NamedElement>& gens) {
  std::vector<NamedElement> out;
  out.reserve(2 * gens.size());
  for (const NamedElement& g : gens) {
    out.push_back(g);
    out.push_back(NamedElement{g.name + "^-1", Invert(g.map)});
  }
  return out;
}

std::vector<NamedElement> StandardGeneratorSet(GroupClass group) {
  std::vector<Generator> names = {Generator::kX0, Generator::kX1};
  if (group >= GroupClass::kT) names.push_back(Generator::kPi0);
  if (group >= GroupClass::kV) names.push_back(Generator::kPi1);
  std::vector<NamedElement> out;
  for (Generator g : names) {
    out.push_back(NamedElement{std::string(GeneratorName(g)),
                               StandardGenerator(g)});
  }
  return out;
}

Word RandomWord(std::mt19937_64& rng, int max_length,
                std::span<const Letter> alphabet) {
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  Word w(static_cast<std::size_t>(len(rng)));
  for (Letter& l : w) l = alphabet[pick(rng)];
  return w;
}

}  // namespace thompson
