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
// Cache layout:
//
//   thompson-coset-ball 1
//   group V
//   radius 4
//   generators 8
//   gen <name> <cellmap>
//   shell <depth> <vertex count> <edge count>
//   v <state>                     (one line per vertex of this depth)
//   e <from> <gen> <to>           (edges with max endpoint depth = depth)
//   end
//
// Shells only ever gain successors when the ball grows, so a cache can be
// extended by appending.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "thompson/cosetgraph.h"
#include "thompson/errors.h"

namespace thompson {
namespace {

constexpr std::string_view kMagic = "thompson-coset-ball";
constexpr int kVersion = 1;

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  std::string Line() {
    std::string line;
    if (!std::getline(in_, line)) Fail("unexpected end of file");
    ++line_no_;
    return line;
  }

  // Reads "<keyword> rest..." and returns the rest.
  std::string Expect(std::string_view keyword) {
    std::string line = Line();
    if (line.compare(0, keyword.size(), keyword) != 0 ||
        (line.size() > keyword.size() && line[keyword.size()] != ' ')) {
      Fail("expected '" + std::string(keyword) + "'");
    }
    return line.size() > keyword.size() ? line.substr(keyword.size() + 1) : "";
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw FormatVersionMismatch("ball cache line " + std::to_string(line_no_) +
                                ": " + what);
  }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

std::vector<long long> Numbers(const Reader& r, const std::string& text,
                               std::size_t count) {
  std::istringstream in(text);
  std::vector<long long> out;
  long long v;
  while (in >> v) out.push_back(v);
  if (!in.eof() || out.size() != count) r.Fail("bad numeric fields");
  for (long long x : out) {
    if (x < 0) r.Fail("negative field");
  }
  return out;
}

std::string Fingerprint(const std::vector<NamedElement>& gens) {
  // FNV-1a over the generator texts; stable across platforms.
  std::uint64_t h = 1469598103934665603ull;
  for (const NamedElement& g : gens) {
    for (char c : g.name + "=" + g.map.ToString() + ";") {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace

void SaveBall(const CosetBall& ball, const std::filesystem::path& path) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw IoFailure("cannot write " + tmp.string());
    out << kMagic << ' ' << kVersion << '\n';
    out << "group " << GroupName(ball.group()) << '\n';
    out << "radius " << ball.radius() << '\n';
    out << "generators " << ball.generators().size() << '\n';
    for (const NamedElement& g : ball.generators()) {
      out << "gen " << g.name << ' ' << g.map.ToString() << '\n';
    }
    std::vector<std::vector<const BallEdge*>> shell_edges(ball.radius() + 1);
    for (const BallEdge& e : ball.edges()) {
      shell_edges[std::max(ball.depth(e.from), ball.depth(e.to))].push_back(&e);
    }
    for (int d = 0; d <= ball.radius(); ++d) {
      const std::size_t begin = d == 0 ? 0 : ball.count_within(d - 1);
      const std::size_t end = ball.count_within(d);
      out << "shell " << d << ' ' << end - begin << ' '
          << shell_edges[d].size() << '\n';
      for (std::size_t v = begin; v < end; ++v) {
        out << "v " << ball.state(static_cast<VertexId>(v)).ToString() << '\n';
      }
      for (const BallEdge* e : shell_edges[d]) {
        out << "e " << e->from << ' ' << e->gen << ' ' << e->to << '\n';
      }
    }
    out << "end\n";
    out.flush();
    if (!out) throw IoFailure("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoFailure("cannot move cache into place: " + ec.message());
}

CosetBall LoadBall(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open " + path.string());
  Reader r(in);
  CosetBall ball;
  try {
    if (r.Line() != std::string(kMagic) + " " + std::to_string(kVersion)) {
      r.Fail("unsupported header");
    }
    ball.group_ = ParseGroupClass(r.Expect("group"));
    ball.radius_ = static_cast<int>(Numbers(r, r.Expect("radius"), 1)[0]);
    const auto num_gens = Numbers(r, r.Expect("generators"), 1)[0];
    if (num_gens > 0xffff) r.Fail("too many generators");
    for (long long i = 0; i < num_gens; ++i) {
      const std::string rest = r.Expect("gen");
      const std::size_t space = rest.find(' ');
      if (space == std::string::npos) r.Fail("bad generator line");
      ball.generators_.push_back(
          NamedElement{rest.substr(0, space),
                       CellMap::Parse(std::string_view(rest).substr(space + 1))});
    }
    for (int d = 0; d <= ball.radius_; ++d) {
      const auto head = Numbers(r, r.Expect("shell"), 3);
      if (head[0] != d) r.Fail("shells out of order");
      for (long long i = 0; i < head[1]; ++i) {
        const CosetState s = CosetState::Parse(ball.group_, r.Expect("v"));
        if (ball.FindKey(s.Key())) r.Fail("duplicate state");
        ball.Add(s.Key());
      }
      if (d == 0 && (ball.keys_.size() != 1 ||
                     ball.keys_[0] != CosetState::Identity(ball.group_).Key())) {
        r.Fail("root is not the identity coset");
      }
      ball.layer_end_.push_back(ball.keys_.size());
      for (long long i = 0; i < head[2]; ++i) {
        const auto f = Numbers(r, r.Expect("e"), 3);
        if (f[0] >= static_cast<long long>(ball.keys_.size()) ||
            f[2] >= static_cast<long long>(ball.keys_.size()) ||
            f[1] >= num_gens) {
          r.Fail("edge out of range");
        }
        const BallEdge e{static_cast<VertexId>(f[0]),
                         static_cast<std::uint16_t>(f[1]),
                         static_cast<VertexId>(f[2])};
        if (std::max(ball.depth(e.from), ball.depth(e.to)) != d) {
          r.Fail("edge in wrong shell");
        }
        ball.edges_.push_back(e);
      }
    }
    if (r.Line() != "end") r.Fail("missing end marker");
  } catch (const FormatVersionMismatch&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatVersionMismatch("ball cache " + path.string() +
                                " is corrupt: " + e.what());
  }
  std::sort(ball.edges_.begin(), ball.edges_.end(),
            [](const BallEdge& a, const BallEdge& b) {
              return a.from != b.from ? a.from < b.from : a.gen < b.gen;
            });
  for (std::size_t i = 1; i < ball.edges_.size(); ++i) {
    if (ball.edges_[i - 1].from == ball.edges_[i].from &&
        ball.edges_[i - 1].gen == ball.edges_[i].gen) {
      throw FormatVersionMismatch("ball cache " + path.string() +
                                  " has duplicate edges");
    }
  }
  return ball;
}

CosetBall CacheRoundtrip(const CosetBall& ball,
                         const std::filesystem::path& path) {
  SaveBall(ball, path);
  return LoadBall(path);
}

std::filesystem::path CachePath(const std::filesystem::path& dir,
                                GroupClass group,
                                const std::vector<NamedElement>& generators) {
  return dir / ("coset-" + std::string(GroupName(group)) + "-" +
                Fingerprint(Symmetrize(generators)) + ".ball");
}

CosetBall ExploreCached(const std::filesystem::path& dir, GroupClass group,
                        const std::vector<NamedElement>& generators, int radius,
                        const ExploreOptions& options) {
  const std::filesystem::path path = CachePath(dir, group, generators);
  std::optional<CosetBall> cached;
  if (std::filesystem::exists(path)) {
    try {
      cached = LoadBall(path);
    } catch (const FormatVersionMismatch&) {
      cached.reset();  // stale or damaged; rebuilt below
    }
  }
  if (cached && cached->group() == group &&
      cached->generators().size() == Symmetrize(generators).size()) {
    if (cached->radius() >= radius) return cached->Truncated(radius);
    CosetBall grown = Extend(std::move(*cached), radius, options);
    SaveBall(grown, path);
    return grown;
  }
  CosetBall ball = Explore(group, generators, radius, options);
  std::filesystem::create_directories(dir);
  SaveBall(ball, path);
  return ball;
}

}  // namespace thompson
