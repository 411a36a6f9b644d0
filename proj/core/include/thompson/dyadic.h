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
#ifndef THOMPSON_DYADIC_H_
#define THOMPSON_DYADIC_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace thompson {

using Integer = boost::multiprecision::cpp_int;

// An exact dyadic rational mantissa / 2^exponent.
//
// Always kept canonical: the mantissa is odd, or the value is zero and stored
// as (0, 0). Canonical form makes structural equality coincide with numeric
// equality, which the hashing of coset states relies on.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long value) : mantissa_(value) {}  // NOLINT(runtime/explicit)
  Dyadic(Integer mantissa, std::uint32_t exponent);

  // mantissa * 2^shift for a possibly negative shift.
  static Dyadic Scaled(Integer mantissa, std::int64_t shift);

  // Accepts "p", "p/q" with q a power of two, "p/2^n", and finite decimal
  // strings whose value is dyadic ("0.375"). Anything else throws ParseError.
  static Dyadic Parse(std::string_view text);

  const Integer& mantissa() const { return mantissa_; }
  std::uint32_t exponent() const { return exponent_; }

  bool is_zero() const { return mantissa_.is_zero(); }
  int sign() const { return mantissa_.sign(); }

  // this * 2^shift.
  Dyadic Shifted(std::int64_t shift) const;

  Dyadic operator-() const;
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
  Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  // "p/q" with q written in decimal ("3/4"), or "p" for integers.
  std::string ToString() const;
  // "p/2^n" ("3/2^2"), or "p" for integers.
  std::string ToPowerString() const;

  std::size_t Hash() const;

 private:
  void Canonicalize();

  Integer mantissa_ = 0;
  std::uint32_t exponent_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

enum class Ordering { kLess, kEqual, kGreater };
Ordering Compare(const Dyadic& a, const Dyadic& b);

// A standard dyadic interval [index * 2^-level, (index + 1) * 2^-level)
// inside [0, 1). All intervals in this library are half-open.
class StdInterval {
 public:
  // The unit interval [0, 1).
  StdInterval() = default;
  // Throws std::invalid_argument unless 0 <= index < 2^level.
  StdInterval(Integer index, std::uint32_t level);

  static StdInterval Unit() { return {}; }
  static StdInterval LeftHalf() { return StdInterval(0, 1); }
  static StdInterval RightHalf() { return StdInterval(1, 1); }

  // Parses "k/2^n".
  static StdInterval Parse(std::string_view text);

  const Integer& index() const { return index_; }
  std::uint32_t level() const { return level_; }

  Dyadic left() const { return Dyadic(index_, level_); }
  Dyadic right() const { return Dyadic(index_ + 1, level_); }
  Dyadic length() const { return Dyadic(1, level_); }

  StdInterval Child(bool right) const;
  std::pair<StdInterval, StdInterval> Children() const {
    return {Child(false), Child(true)};
  }
  // nullopt for the unit interval.
  std::optional<StdInterval> Parent() const;
  bool is_left_child() const { return level_ > 0 && !bit_test(index_, 0); }
  // Ancestor at the given (coarser or equal) level.
  StdInterval AncestorAt(std::uint32_t level) const;

  // Containment of a point; strict tests the open interior.
  bool Contains(const Dyadic& x, bool strict) const;
  // True iff other is a (not necessarily proper) subinterval.
  bool Encloses(const StdInterval& other) const;

  // Interval "k/2^n".
  std::string ToString() const;
  std::size_t Hash() const;

  friend bool operator==(const StdInterval& a, const StdInterval& b) = default;
  // Orders by left endpoint; among intervals with the same left endpoint the
  // coarser one comes first.
  friend std::strong_ordering operator<=>(const StdInterval& a,
                                          const StdInterval& b);

 private:
  Integer index_ = 0;
  std::uint32_t level_ = 0;
};

std::ostream& operator<<(std::ostream& os, const StdInterval& i);

// Relation of I to J. kIinJ means I is a proper subinterval of J.
enum class Relation { kDisjoint, kEqual, kIinJ, kJinI };
Relation Relate(const StdInterval& i, const StdInterval& j);

// Three-way comparison of left endpoints only.
int CompareLeft(const StdInterval& a, const StdInterval& b);

// Affine transport of a subcell: given sub inside from, the cell that the
// orientation-preserving affine map from -> to sends sub onto.
StdInterval Transport(const StdInterval& sub, const StdInterval& from,
                      const StdInterval& to);

// Coarsest decomposition of [left, right) into standard intervals, in order.
// Requires 0 <= left <= right <= 1.
std::vector<StdInterval> DecomposeRange(const Dyadic& left,
                                        const Dyadic& right);

}  // namespace thompson

template <>
struct std::hash<thompson::Dyadic> {
  std::size_t operator()(const thompson::Dyadic& d) const { return d.Hash(); }
};

template <>
struct std::hash<thompson::StdInterval> {
  std::size_t operator()(const thompson::StdInterval& i) const {
    return i.Hash();
  }
};

#endif  // THOMPSON_DYADIC_H_
