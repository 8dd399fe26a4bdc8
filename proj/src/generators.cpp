// Copyright 2026 The wscolor Authors.
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

#include "wscolor/generators.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "wscolor/rng.hpp"

namespace wscolor {

namespace {

// Keeps family and permutation streams independent when both use one seed.
constexpr std::uint64_t kOrderSalt = 0xd1b54a32d192ed03ULL;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

std::uint64_t to_u64(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw ValidationError("bad integer for " + what + ": `" + text + "`");
  }
  return std::stoull(text);
}

void require_vertex_range(std::uint64_t n) {
  if (n == 0) throw ValidationError("graph family needs at least one vertex");
  if (n > std::uint64_t{UINT32_MAX}) throw ValidationError("too many vertices");
}

std::vector<Edge> complete_graph(std::uint64_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return edges;
}

std::vector<Edge> random_regular(std::uint64_t n, std::uint64_t d, SplitMix64& rng) {
  constexpr int kRestarts = 1000;
  constexpr int kBlindTries = 64;
  for (int attempt = 0; attempt < kRestarts; ++attempt) {
    std::vector<VertexId> points;
    points.reserve(n * d);
    for (VertexId v = 0; v < n; ++v) points.insert(points.end(), d, v);
    std::unordered_set<Edge, EdgeHash> chosen;
    std::vector<Edge> edges;
    auto take = [&](std::size_t i, std::size_t j) {
      const Edge e = canonicalize({points[i], points[j]});
      chosen.insert(e);
      edges.push_back(e);
      if (i < j) std::swap(i, j);
      points[i] = points.back();
      points.pop_back();
      points[j] = points.back();
      points.pop_back();
    };
    auto fits = [&](std::size_t i, std::size_t j) {
      return points[i] != points[j] &&
             !chosen.count(canonicalize({points[i], points[j]}));
    };
    bool stuck = false;
    while (!points.empty() && !stuck) {
      bool placed = false;
      for (int t = 0; t < kBlindTries && !placed; ++t) {
        const std::size_t i = rng.below(points.size());
        const std::size_t j = rng.below(points.size());
        if (i != j && fits(i, j)) {
          take(i, j);
          placed = true;
        }
      }
      if (placed) continue;
      std::vector<std::pair<std::size_t, std::size_t>> options;
      for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
          if (fits(i, j)) options.emplace_back(i, j);
        }
      }
      if (options.empty()) {
        stuck = true;
      } else {
        const auto [i, j] = options[rng.below(options.size())];
        take(i, j);
      }
    }
    if (!stuck) {
      std::sort(edges.begin(), edges.end());
      return edges;
    }
  }
  throw ValidationError("random regular generation did not converge");
}

}  // namespace

GraphFamily parse_family(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.empty()) throw ValidationError("empty family");
  const std::string& kind = parts[0];
  auto need = [&](std::size_t count) {
    if (parts.size() != count + 1) {
      throw ValidationError("family `" + kind + "` takes " +
                            std::to_string(count) + " parameter(s)");
    }
  };
  if (kind == "complete") {
    need(1);
    return CompleteGraph{to_u64(parts[1], "n")};
  }
  if (kind == "bipartite") {
    need(2);
    return CompleteBipartite{to_u64(parts[1], "a"), to_u64(parts[2], "b")};
  }
  if (kind == "star") {
    need(1);
    return Star{to_u64(parts[1], "t")};
  }
  if (kind == "gnp") {
    need(2);
    double p = 0;
    try {
      p = std::stod(parts[2]);
    } catch (const std::exception&) {
      throw ValidationError("bad probability `" + parts[2] + "`");
    }
    return GnpRandom{to_u64(parts[1], "n"), p};
  }
  if (kind == "regular") {
    need(2);
    return RandomRegular{to_u64(parts[1], "n"), to_u64(parts[2], "d")};
  }
  if (kind == "file") {
    if (text.size() <= 5) throw ValidationError("family `file` needs a path");
    return FromFile{text.substr(5)};
  }
  throw ValidationError("unknown graph family `" + kind + "`");
}

std::string describe(const GraphFamily& family) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, CompleteGraph>) {
          return "complete:" + std::to_string(f.n);
        } else if constexpr (std::is_same_v<T, CompleteBipartite>) {
          return "bipartite:" + std::to_string(f.a) + ":" + std::to_string(f.b);
        } else if constexpr (std::is_same_v<T, Star>) {
          return "star:" + std::to_string(f.t);
        } else if constexpr (std::is_same_v<T, GnpRandom>) {
          std::ostringstream out;
          out << "gnp:" << f.n << ":" << f.p;
          return out.str();
        } else if constexpr (std::is_same_v<T, RandomRegular>) {
          return "regular:" + std::to_string(f.n) + ":" + std::to_string(f.d);
        } else {
          return "file:" + f.path;
        }
      },
      family);
}

ArrivalOrder parse_order(const std::string& text, std::uint64_t seed) {
  if (text == "random") return UniformRandomPermutation{seed};
  if (text == "given") return AsGiven{};
  if (text == "sorted") return AdversarialSorted{SortPolicy::kByEndpoint};
  if (text == "star-batched") return AdversarialSorted{SortPolicy::kStarBatched};
  throw ValidationError("unknown arrival order `" + text + "`");
}

std::string describe(const ArrivalOrder& order) {
  if (std::holds_alternative<UniformRandomPermutation>(order)) return "random";
  if (std::holds_alternative<AsGiven>(order)) return "given";
  return std::get<AdversarialSorted>(order).policy == SortPolicy::kByEndpoint
             ? "sorted"
             : "star-batched";
}

EdgeStream build_graph(const GraphFamily& family, std::uint64_t seed) {
  SplitMix64 rng(seed);
  EdgeStream out;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, CompleteGraph>) {
          require_vertex_range(f.n);
          out.header.n = f.n;
          out.edges = complete_graph(f.n);
        } else if constexpr (std::is_same_v<T, CompleteBipartite>) {
          require_vertex_range(f.a + f.b);
          out.header.n = f.a + f.b;
          for (VertexId u = 0; u < f.a; ++u) {
            for (VertexId v = 0; v < f.b; ++v) {
              out.edges.push_back({u, static_cast<VertexId>(f.a + v)});
            }
          }
        } else if constexpr (std::is_same_v<T, Star>) {
          require_vertex_range(f.t + 1);
          out.header.n = f.t + 1;
          for (VertexId v = 1; v <= f.t; ++v) out.edges.push_back({0, v});
        } else if constexpr (std::is_same_v<T, GnpRandom>) {
          require_vertex_range(f.n);
          if (!(f.p >= 0.0 && f.p <= 1.0)) {
            throw ValidationError("gnp probability must lie in [0, 1]");
          }
          out.header.n = f.n;
          for (VertexId u = 0; u < f.n; ++u) {
            for (VertexId v = u + 1; v < f.n; ++v) {
              if (rng.unit() < f.p) out.edges.push_back({u, v});
            }
          }
        } else if constexpr (std::is_same_v<T, RandomRegular>) {
          require_vertex_range(f.n);
          if (f.d >= f.n) throw ValidationError("regular degree must be < n");
          if ((f.d * f.n) % 2 != 0) throw ValidationError("regular needs d*n even");
          out.header.n = f.n;
          out.edges = random_regular(f.n, f.d, rng);
        } else {
          EdgeStream file = read_edge_list_file(f.path);
          std::unordered_set<Edge, EdgeHash> seen;
          for (const Edge& e : file.edges) {
            if (!seen.insert(canonicalize(e)).second) {
              throw ValidationError("duplicate edge " + std::to_string(e.u) + " " +
                                    std::to_string(e.v) + " in " + f.path);
            }
          }
          out = std::move(file);
        }
      },
      family);
  out.header.m = out.edges.size();
  out.header.seed = seed;
  validate(out.header);
  return out;
}

void apply_order(std::vector<Edge>& edges, const ArrivalOrder& order) {
  if (const auto* perm = std::get_if<UniformRandomPermutation>(&order)) {
    SplitMix64 rng(perm->seed ^ kOrderSalt);
    for (std::size_t k = edges.size(); k > 1; --k) {
      std::swap(edges[k - 1], edges[rng.below(k)]);
    }
    return;
  }
  if (std::holds_alternative<AsGiven>(order)) return;

  for (Edge& e : edges) e = canonicalize(e);
  const auto policy = std::get<AdversarialSorted>(order).policy;
  if (policy == SortPolicy::kByEndpoint) {
    std::stable_sort(edges.begin(), edges.end());
    return;
  }

  VertexId top = 0;
  for (const Edge& e : edges) top = std::max({top, e.u, e.v});
  std::vector<std::vector<std::size_t>> incident(edges.empty() ? 0 : top + 1);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    incident[edges[k].u].push_back(k);
    incident[edges[k].v].push_back(k);
  }
  std::vector<VertexId> centres(incident.size());
  for (VertexId v = 0; v < centres.size(); ++v) centres[v] = v;
  std::stable_sort(centres.begin(), centres.end(), [&](VertexId a, VertexId b) {
    return incident[a].size() > incident[b].size();
  });
  std::vector<bool> emitted(edges.size(), false);
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (VertexId c : centres) {
    for (std::size_t k : incident[c]) {
      if (emitted[k]) continue;
      emitted[k] = true;
      out.push_back(edges[k]);
    }
  }
  edges = std::move(out);
}

EdgeStream generate(const GraphFamily& family, const ArrivalOrder& order,
                    std::uint64_t seed) {
  EdgeStream stream = build_graph(family, seed);
  apply_order(stream.edges, order);
  return stream;
}

}  // namespace wscolor
