// Copyright 2026 The qwalk Authors
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

#include "qwalk/graph.h"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "qwalk/error.h"

namespace qwalk {

namespace {

std::string EdgeName(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

PortGraph PortGraph::FromNeighborLists(std::vector<std::vector<Vertex>> lists) {
  const std::size_t n = lists.size();
  if (n == 0) throw DegenerateGraphError("graph has no vertices");
  if (n > std::numeric_limits<Vertex>::max()) {
    throw ValidationError("too many vertices");
  }

  PortGraph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& list = lists[v];
    if (list.empty()) {
      throw DegenerateGraphError("vertex " + std::to_string(v) +
                                 " is isolated; its coin space would be empty");
    }
    std::vector<Vertex> sorted = list;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] >= n) {
        throw ValidationError("vertex id " + std::to_string(sorted[i]) +
                              " out of range in neighbours of " +
                              std::to_string(v));
      }
      if (sorted[i] == v) {
        throw ValidationError("self-loop at vertex " + std::to_string(v));
      }
      if (i > 0 && sorted[i] == sorted[i - 1]) {
        throw ValidationError("duplicate edge " + EdgeName(v, sorted[i]));
      }
    }
    g.offsets_[v + 1] = g.offsets_[v] + list.size();
    g.max_degree_ = std::max(g.max_degree_, list.size());
  }

  g.targets_.reserve(g.offsets_[n]);
  g.owner_.reserve(g.offsets_[n]);
  for (std::size_t v = 0; v < n; ++v) {
    for (Vertex w : lists[v]) {
      g.targets_.push_back(w);
      g.owner_.push_back(static_cast<Vertex>(v));
    }
  }

  // reverse_[(v, c)] = position of v in eta(v, c)'s list.
  g.reverse_.resize(g.targets_.size());
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = g.offsets_[v]; i < g.offsets_[v + 1]; ++i) {
      const Vertex w = g.targets_[i];
      const auto begin = g.targets_.begin() + g.offsets_[w];
      const auto end = g.targets_.begin() + g.offsets_[w + 1];
      const auto it = std::find(begin, end, static_cast<Vertex>(v));
      if (it == end) {
        throw ValidationError("edge " + EdgeName(static_cast<Vertex>(v), w) +
                              " has no reverse edge");
      }
      g.reverse_[i] = static_cast<Port>(it - begin);
    }
  }
  return g;
}

PortGraph PortGraph::FromEdges(
    std::size_t num_vertices,
    std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<std::vector<Vertex>> lists(num_vertices);
  std::set<std::pair<Vertex, Vertex>> seen;
  for (auto [u, v] : edges) {
    if (u >= num_vertices || v >= num_vertices) {
      throw ValidationError("edge " + EdgeName(u, v) + " references a vertex " +
                            "outside 0.." + std::to_string(num_vertices - 1));
    }
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second) {
      throw ValidationError("duplicate edge " + EdgeName(u, v));
    }
    lists[u].push_back(v);
    lists[v].push_back(u);
  }
  for (auto& list : lists) std::sort(list.begin(), list.end());
  return FromNeighborLists(std::move(lists));
}

void PortGraph::CheckVertex(Vertex v) const {
  if (v >= num_vertices()) {
    throw IndexError("vertex " + std::to_string(v) + " out of range");
  }
}

std::size_t PortGraph::degree(Vertex v) const {
  CheckVertex(v);
  return offsets_[v + 1] - offsets_[v];
}

bool PortGraph::is_regular() const {
  for (std::size_t v = 0; v < num_vertices(); ++v) {
    if (offsets_[v + 1] - offsets_[v] != max_degree_) return false;
  }
  return true;
}

std::span<const Vertex> PortGraph::neighbors(Vertex v) const {
  CheckVertex(v);
  return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t PortGraph::port_offset(Vertex v) const {
  CheckVertex(v);
  return offsets_[v];
}

BasisIndex PortGraph::index(Vertex v, Port c) const {
  if (c >= degree(v)) {
    throw IndexError("port " + std::to_string(c) + " out of range at vertex " +
                     std::to_string(v));
  }
  return offsets_[v] + c;
}

Vertex PortGraph::eta(Vertex v, Port c) const { return targets_[index(v, c)]; }

Port PortGraph::sigma_inv(Vertex v, Vertex u) const {
  const auto list = neighbors(u);
  const auto it = std::find(list.begin(), list.end(), v);
  if (it == list.end()) {
    throw ValidationError(EdgeName(u, v) + " is not an edge");
  }
  return static_cast<Port>(it - list.begin());
}

Port PortGraph::sigma(Vertex u, Vertex v) const {
  CheckVertex(u);
  return sigma_inv(u, v);
}

Port PortGraph::reverse_port(Vertex v, Port c) const {
  return reverse_[index(v, c)];
}

bool PortGraph::has_edge(Vertex u, Vertex v) const {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  const auto list = neighbors(u);
  return std::find(list.begin(), list.end(), v) != list.end();
}

std::uint64_t PortGraph::Fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(num_vertices());
  for (std::size_t o : offsets_) mix(o);
  for (Vertex t : targets_) mix(t);
  return h;
}

std::vector<std::vector<Vertex>> PortGraph::NeighborLists() const {
  std::vector<std::vector<Vertex>> lists(num_vertices());
  for (std::size_t v = 0; v < num_vertices(); ++v) {
    const auto nb = neighbors(static_cast<Vertex>(v));
    lists[v].assign(nb.begin(), nb.end());
  }
  return lists;
}

ProductGraph::ProductGraph(GraphPtr base, std::size_t num_walkers)
    : base_(std::move(base)), num_walkers_(num_walkers), num_tuples_(1) {
  if (!base_) throw ValidationError("product graph needs a base graph");
  if (num_walkers_ == 0) throw ValidationError("number of walkers must be >= 1");
  const std::size_t n = base_->num_vertices();
  for (std::size_t k = 0; k < num_walkers_; ++k) {
    if (num_tuples_ > std::numeric_limits<std::size_t>::max() / n) {
      throw ResourceError("vertex tuple count overflows");
    }
    num_tuples_ *= n;
  }
}

void ProductGraph::CheckArity(std::span<const Vertex> tuple) const {
  if (tuple.size() != num_walkers_) {
    throw ValidationError("vertex tuple has " + std::to_string(tuple.size()) +
                          " entries, expected " + std::to_string(num_walkers_));
  }
}

std::size_t ProductGraph::degree(std::span<const Vertex> tuple) const {
  CheckArity(tuple);
  std::size_t d = 1;
  for (Vertex v : tuple) d *= base_->degree(v);
  return d;
}

std::size_t ProductGraph::degree(std::size_t tuple_index) const {
  return degree(Tuple(tuple_index));
}

std::size_t ProductGraph::TupleIndex(std::span<const Vertex> tuple) const {
  CheckArity(tuple);
  std::size_t index = 0;
  for (Vertex v : tuple) {
    if (v >= base_->num_vertices()) {
      throw IndexError("vertex " + std::to_string(v) + " out of range");
    }
    index = index * base_->num_vertices() + v;
  }
  return index;
}

std::vector<Vertex> ProductGraph::Tuple(std::size_t tuple_index) const {
  if (tuple_index >= num_tuples_) {
    throw IndexError("tuple index " + std::to_string(tuple_index) +
                     " out of range");
  }
  const std::size_t n = base_->num_vertices();
  std::vector<Vertex> tuple(num_walkers_);
  for (std::size_t k = num_walkers_; k-- > 0;) {
    tuple[k] = static_cast<Vertex>(tuple_index % n);
    tuple_index /= n;
  }
  return tuple;
}

bool ProductGraph::has_edge(std::size_t from, std::size_t to) const {
  const auto a = Tuple(from);
  const auto b = Tuple(to);
  for (std::size_t k = 0; k < num_walkers_; ++k) {
    if (!base_->has_edge(a[k], b[k])) return false;
  }
  return true;
}

std::vector<std::size_t> ProductGraph::Successors(std::size_t tuple_index) const {
  const auto tuple = Tuple(tuple_index);
  const std::size_t n = base_->num_vertices();
  std::vector<std::size_t> out{0};
  for (Vertex v : tuple) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * base_->degree(v));
    for (std::size_t prefix : out) {
      for (Vertex w : base_->neighbors(v)) next.push_back(prefix * n + w);
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace qwalk
