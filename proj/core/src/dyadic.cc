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
#include "thompson/dyadic.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "thompson/errors.h"

namespace thompson {
namespace {

std::size_t HashCombine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

Integer PowerOfTwo(std::uint64_t n) {
  Integer p = 1;
  p <<= n;
  return p;
}

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

Integer ParseInteger(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!AllDigits(s)) {
    throw ParseError("not a dyadic number: '" + std::string(whole) + "'");
  }
  // Boost reads a leading 0 as an octal prefix.
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  Integer v{std::string(s)};
  return negative ? Integer(-v) : v;
}

std::uint32_t ParseLevel(std::string_view s, std::string_view whole) {
  if (!AllDigits(s) || s.size() > 9) {
    throw ParseError("bad exponent in '" + std::string(whole) + "'");
  }
  return static_cast<std::uint32_t>(std::stoul(std::string(s)));
}

}  // namespace

Dyadic::Dyadic(Integer mantissa, std::uint32_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  Canonicalize();
}

Dyadic Dyadic::Scaled(Integer mantissa, std::int64_t shift) {
  if (shift >= 0) {
    mantissa <<= static_cast<std::uint64_t>(shift);
    return Dyadic(std::move(mantissa), 0);
  }
  return Dyadic(std::move(mantissa), static_cast<std::uint32_t>(-shift));
}

void Dyadic::Canonicalize() {
  if (mantissa_.is_zero()) {
    exponent_ = 0;
    return;
  }
  if (exponent_ == 0) return;
  const std::uint64_t tz = lsb(abs(mantissa_));
  const std::uint32_t s =
      static_cast<std::uint32_t>(std::min<std::uint64_t>(tz, exponent_));
  if (s > 0) {
    mantissa_ >>= s;
    exponent_ -= s;
  }
}

Dyadic Dyadic::Shifted(std::int64_t shift) const {
  return Scaled(mantissa_, shift - static_cast<std::int64_t>(exponent_));
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.mantissa_ = -r.mantissa_;
  return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.exponent_ == b.exponent_) {
    return Dyadic(a.mantissa_ + b.mantissa_, a.exponent_);
  }
  if (a.exponent_ > b.exponent_) {
    return Dyadic(a.mantissa_ + (b.mantissa_ << (a.exponent_ - b.exponent_)),
                  a.exponent_);
  }
  return Dyadic((a.mantissa_ << (b.exponent_ - a.exponent_)) + b.mantissa_,
                b.exponent_);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int c;
  if (a.exponent_ == b.exponent_) {
    c = a.mantissa_.compare(b.mantissa_);
  } else if (a.exponent_ > b.exponent_) {
    c = a.mantissa_.compare(Integer(b.mantissa_ << (a.exponent_ - b.exponent_)));
  } else {
    c = Integer(a.mantissa_ << (b.exponent_ - a.exponent_)).compare(b.mantissa_);
  }
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

Ordering Compare(const Dyadic& a, const Dyadic& b) {
  const auto c = a <=> b;
  if (c < 0) return Ordering::kLess;
  if (c > 0) return Ordering::kGreater;
  return Ordering::kEqual;
}

Dyadic Dyadic::Parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) throw ParseError("empty dyadic number");

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Integer num = ParseInteger(s.substr(0, slash), text);
    std::string_view den = s.substr(slash + 1);
    if (den.rfind("2^", 0) == 0) {
      return Dyadic(num, ParseLevel(den.substr(2), text));
    }
    const Integer q = ParseInteger(den, text);
    if (q <= 0 || (q & (q - 1)) != 0) {
      throw ParseError("denominator is not a power of two: '" +
                       std::string(text) + "'");
    }
    return Dyadic(num, static_cast<std::uint32_t>(msb(q)));
  }

  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if ((!whole.empty() && !AllDigits(whole)) || !AllDigits(frac)) {
      throw ParseError("not a dyadic number: '" + std::string(text) + "'");
    }
    const Integer digits =
        ParseInteger(std::string(whole) + std::string(frac), text);
    Integer five = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) five *= 5;
    if (digits % five != 0) {
      throw ParseError("decimal is not exactly dyadic: '" + std::string(text) +
                       "'");
    }
    Integer m = digits / five;
    if (negative) m = -m;
    return Dyadic(std::move(m), static_cast<std::uint32_t>(frac.size()));
  }

  return Dyadic(ParseInteger(s, text), 0);
}

std::string Dyadic::ToString() const {
  if (exponent_ == 0) return mantissa_.str();
  return mantissa_.str() + "/" + PowerOfTwo(exponent_).str();
}

std::string Dyadic::ToPowerString() const {
  if (exponent_ == 0) return mantissa_.str();
  return mantissa_.str() + "/2^" + std::to_string(exponent_);
}

std::size_t Dyadic::Hash() const {
  return HashCombine(std::hash<Integer>()(mantissa_), exponent_);
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) {
  return os << d.ToString();
}

// --- StdInterval -----------------------------------------------------------

StdInterval::StdInterval(Integer index, std::uint32_t level)
    : index_(std::move(index)), level_(level) {
  if (index_ < 0 || index_ >= PowerOfTwo(level_)) {
    throw std::invalid_argument("standard interval index out of range: " +
                                index_.str() + "/2^" + std::to_string(level_));
  }
}

StdInterval StdInterval::Parse(std::string_view text) {
  const auto slash = text.find("/2^");
  if (slash == std::string_view::npos) {
    throw ParseError("expected interval 'k/2^n', got '" + std::string(text) +
                     "'");
  }
  std::string_view k = text.substr(0, slash);
  std::string_view n = text.substr(slash + 3);
  while (!k.empty() && std::isspace(static_cast<unsigned char>(k.front()))) {
    k.remove_prefix(1);
  }
  while (!n.empty() && std::isspace(static_cast<unsigned char>(n.back()))) {
    n.remove_suffix(1);
  }
  if (!AllDigits(k)) {
    throw ParseError("bad interval index in '" + std::string(text) + "'");
  }
  const std::uint32_t level = ParseLevel(n, text);
  Integer index = ParseInteger(k, text);
  if (index >= PowerOfTwo(level)) {
    throw ParseError("interval index out of range in '" + std::string(text) +
                     "'");
  }
  return StdInterval(std::move(index), level);
}

StdInterval StdInterval::Child(bool right) const {
  StdInterval c;
  c.index_ = index_ << 1;
  if (right) c.index_ += 1;
  c.level_ = level_ + 1;
  return c;
}

std::optional<StdInterval> StdInterval::Parent() const {
  if (level_ == 0) return std::nullopt;
  StdInterval p;
  p.index_ = index_ >> 1;
  p.level_ = level_ - 1;
  return p;
}

StdInterval StdInterval::AncestorAt(std::uint32_t level) const {
  if (level > level_) {
    throw std::invalid_argument("ancestor level finer than interval");
  }
  StdInterval a;
  a.index_ = index_ >> (level_ - level);
  a.level_ = level;
  return a;
}

bool StdInterval::Contains(const Dyadic& x, bool strict) const {
  const Dyadic l = left();
  if (strict) return l < x && x < right();
  return l <= x && x < right();
}

bool StdInterval::Encloses(const StdInterval& other) const {
  if (other.level_ < level_) return false;
  return (other.index_ >> (other.level_ - level_)) == index_;
}

std::string StdInterval::ToString() const {
  return index_.str() + "/2^" + std::to_string(level_);
}

std::size_t StdInterval::Hash() const {
  return HashCombine(std::hash<Integer>()(index_), level_);
}

std::strong_ordering operator<=>(const StdInterval& a, const StdInterval& b) {
  int c;
  if (a.level_ == b.level_) {
    c = a.index_.compare(b.index_);
  } else if (a.level_ < b.level_) {
    c = Integer(a.index_ << (b.level_ - a.level_)).compare(b.index_);
  } else {
    c = a.index_.compare(Integer(b.index_ << (a.level_ - b.level_)));
  }
  if (c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.level_ <=> b.level_;
}

std::ostream& operator<<(std::ostream& os, const StdInterval& i) {
  return os << i.ToString();
}

int CompareLeft(const StdInterval& a, const StdInterval& b) {
  if (a.level() == b.level()) return a.index().compare(b.index());
  if (a.level() < b.level()) {
    return Integer(a.index() << (b.level() - a.level())).compare(b.index());
  }
  return a.index().compare(Integer(b.index() << (a.level() - b.level())));
}

Relation Relate(const StdInterval& i, const StdInterval& j) {
  if (i == j) return Relation::kEqual;
  if (j.Encloses(i)) return Relation::kIinJ;
  if (i.Encloses(j)) return Relation::kJinI;
  return Relation::kDisjoint;
}

StdInterval Transport(const StdInterval& sub, const StdInterval& from,
                      const StdInterval& to) {
  const std::uint32_t depth = sub.level() - from.level();
  Integer offset = sub.index() - (from.index() << depth);
  return StdInterval((to.index() << depth) + offset, to.level() + depth);
}

std::vector<StdInterval> DecomposeRange(const Dyadic& left,
                                        const Dyadic& right) {
  if (left < 0 || right > 1 || right < left) {
    throw std::invalid_argument("DecomposeRange outside [0, 1]");
  }
  std::vector<StdInterval> out;
  Dyadic x = left;
  while (x < right) {
    // Coarsest standard interval starting at x.
    std::uint32_t level = x.exponent();
    Integer index = x.mantissa();
    while (Dyadic(index + 1, level) > right) {
      index <<= 1;
      ++level;
    }
    StdInterval cell(index, level);
    x = cell.right();
    out.push_back(std::move(cell));
  }
  return out;
}

}  // namespace thompson
