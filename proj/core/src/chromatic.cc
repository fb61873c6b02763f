// Copyright 2026 The sigraph Authors
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

#include "sigraph/chromatic.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "internal.h"
#include "sigraph/error.h"

namespace sigraph {

bool IsProperSignifiedColoring(const SignedGraph& sg, std::span<const int> colors) {
  const int n = sg.num_vertices();
  if (static_cast<int>(colors.size()) != n) {
    throw Error(ErrorCode::kUncoloredVertex, "colour map size differs from vertex count");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (colors[v] <= 0) {
      throw Error(ErrorCode::kUncoloredVertex, "vertex " + std::to_string(v) + " has no colour");
    }
  }
  std::map<std::pair<int, int>, int> pair_sign;
  for (const Edge& e : sg.ground().edges()) {
    const int a = colors[e.u];
    const int b = colors[e.v];
    if (a == b) return false;
    const auto key = std::minmax(a, b);
    const int s = sg.sign(e.u, e.v);
    auto [it, inserted] = pair_sign.emplace(key, s);
    if (!inserted && it->second != s) return false;
  }
  return true;
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const SignedGraph& sg, int k)
      : sg_(sg),
        n_(sg.num_vertices()),
        k_(k),
        color_(n_, 0),
        flip_(n_, 1),
        pair_count_((k + 1) * (k + 1), 0),
        pair_sign_((k + 1) * (k + 1), 0) {}

  bool Run() { return Extend(0, 0); }

  SignedColoring Witness() const {
    SignedColoring out;
    std::vector<Vertex> resigned;
    for (Vertex v = 0; v < n_; ++v) {
      if (flip_[v] < 0) resigned.push_back(v);
    }
    out.switching.resign_set = VertexSet(std::move(resigned));
    out.colors = color_;
    return out;
  }

 private:
  int Slot(int a, int b) const { return std::min(a, b) * (k_ + 1) + std::max(a, b); }

  bool Extend(Vertex v, int used) {
    if (v == n_) return true;
    const int limit = std::min(k_, used + 1);
    for (int c = 1; c <= limit; ++c) {
      // The first vertex of a colour class keeps its sign: resigning a whole
      // class flips all its colour pairs at once.
      const bool opens_class = c == used + 1;
      for (int flip : {1, -1}) {
        if (flip < 0 && opens_class) continue;
        if (Place(v, c, flip)) {
          if (Extend(v + 1, std::max(used, c))) return true;
          Remove(v);
        }
      }
    }
    return false;
  }

  bool Place(Vertex v, int c, int flip) {
    const auto& neighbors = sg_.ground().neighbors(v);
    for (Vertex w : neighbors) {
      if (w >= v) break;
      if (color_[w] == c) return false;
    }
    // Record pairs one by one so that two earlier neighbours in the same
    // colour class are checked against each other too.
    std::size_t done = 0;
    for (; done < neighbors.size() && neighbors[done] < v; ++done) {
      const Vertex w = neighbors[done];
      const int slot = Slot(c, color_[w]);
      const int s = sg_.sign(v, w) * flip * flip_[w];
      if (pair_count_[slot] > 0 && pair_sign_[slot] != s) break;
      pair_sign_[slot] = s;
      ++pair_count_[slot];
    }
    if (done < neighbors.size() && neighbors[done] < v) {
      for (std::size_t i = 0; i < done; ++i) --pair_count_[Slot(c, color_[neighbors[i]])];
      return false;
    }
    color_[v] = c;
    flip_[v] = flip;
    return true;
  }

  void Remove(Vertex v) {
    for (Vertex w : sg_.ground().neighbors(v)) {
      if (w >= v) break;
      --pair_count_[Slot(color_[v], color_[w])];
    }
    color_[v] = 0;
    flip_[v] = 1;
  }

  const SignedGraph& sg_;
  int n_;
  int k_;
  std::vector<int> color_;
  std::vector<int> flip_;
  std::vector<int> pair_count_;
  std::vector<int> pair_sign_;
};

}  // namespace

ChromaticResult SignedChromaticNumber(const SignedGraph& sg, int solver_bound) {
  const int n = sg.num_vertices();
  internal::RequireWithinBound(n, solver_bound, ErrorCode::kSolverBoundExceeded,
                               "signed_chromatic_number");
  ChromaticResult result;
  if (n == 0) return result;
  const int lower = MaxCliqueBruteforce(sg.ground(), n).size();
  for (int k = lower; k <= n; ++k) {
    ColoringSearch search(sg, k);
    if (!search.Run()) continue;
    result.chromatic_number = k;
    result.witness = search.Witness();
    if (!IsProperSignifiedColoring(Resign(sg, result.witness.switching.resign_set),
                                   result.witness.colors)) {
      throw std::logic_error("signed colouring search produced an invalid witness");
    }
    return result;
  }
  throw std::logic_error("no signed colouring with n colours");
}

bool VerifyHomomorphism(const SignedGraph& sg, const HomomorphismWitness& witness) {
  const int n = sg.num_vertices();
  if (static_cast<int>(witness.vertex_map.size()) != n) return false;
  for (Vertex v : witness.vertex_map) {
    if (!witness.target.ground().has_vertex(v)) return false;
  }
  for (Vertex v : witness.switching.resign_set) {
    if (!sg.ground().has_vertex(v)) return false;
  }
  const SignedGraph switched = Resign(sg, witness.switching.resign_set);
  for (const Edge& e : sg.ground().edges()) {
    const Vertex a = witness.vertex_map[e.u];
    const Vertex b = witness.vertex_map[e.v];
    if (!witness.target.ground().adjacent(a, b)) return false;
    if (switched.is_negative(e.u, e.v) != witness.target.is_negative(a, b)) return false;
  }
  return true;
}

namespace {

// Backtracking search for a map into a fixed target with switching bits.
class HomomorphismSearch {
 public:
  HomomorphismSearch(const SignedGraph& sg, const SignedGraph& target)
      : sg_(sg), target_(target), image_(sg.num_vertices(), -1), flip_(sg.num_vertices(), 1) {}

  bool Run() { return Extend(0); }

  HomomorphismWitness Witness() const {
    std::vector<Vertex> resigned;
    for (Vertex v = 0; v < sg_.num_vertices(); ++v) {
      if (flip_[v] < 0) resigned.push_back(v);
    }
    return {Switching{VertexSet(std::move(resigned))}, target_, image_};
  }

 private:
  bool Extend(Vertex v) {
    if (v == sg_.num_vertices()) return true;
    for (Vertex t = 0; t < target_.num_vertices(); ++t) {
      for (int flip : {1, -1}) {
        if (v == 0 && flip < 0) continue;
        bool ok = true;
        for (Vertex w : sg_.ground().neighbors(v)) {
          if (w >= v) break;
          const Vertex tw = image_[w];
          if (!target_.ground().adjacent(t, tw) ||
              sg_.sign(v, w) * flip * flip_[w] != target_.sign(t, tw)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        image_[v] = t;
        flip_[v] = flip;
        if (Extend(v + 1)) return true;
      }
    }
    image_[v] = -1;
    flip_[v] = 1;
    return false;
  }

  const SignedGraph& sg_;
  const SignedGraph& target_;
  std::vector<Vertex> image_;
  std::vector<int> flip_;
};

}  // namespace

HomomorphismResult SignedChromaticViaHomomorphism(const SignedGraph& sg, int homomorphism_bound) {
  const int n = sg.num_vertices();
  internal::RequireWithinBound(n, homomorphism_bound, ErrorCode::kSolverBoundExceeded,
                               "signed_chromatic_via_homomorphism");
  HomomorphismResult result;
  if (n == 0) return result;
  const int lower = MaxCliqueBruteforce(sg.ground(), n).size();
  for (int m = lower; m <= n; ++m) {
    const Graph complete = Graph::Complete(m);
    std::vector<Edge> free_edges;
    for (const Edge& e : complete.edges()) {
      if (e.u != 0) free_edges.push_back(e);
    }
    const std::uint64_t count = std::uint64_t{1} << free_edges.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      std::vector<Edge> negative;
      for (std::size_t i = 0; i < free_edges.size(); ++i) {
        if ((mask >> i) & 1) negative.push_back(free_edges[i]);
      }
      const SignedGraph target(complete, negative);
      HomomorphismSearch search(sg, target);
      if (search.Run()) {
        result.order = m;
        result.witness = search.Witness();
        return result;
      }
    }
  }
  throw std::logic_error("no homomorphic image of order n");
}

bool Chi2Predicate(const SignedIntervalInstance& inst) {
  return inst.sg().ground().num_edges() >= 1 && IsTree(inst.sg().ground());
}

bool Chi3Necessary(const SignedIntervalInstance& inst) {
  int clique_number = 0;
  for (const VertexSet& m : inst.mco().cliques) clique_number = std::max(clique_number, m.size());
  if (clique_number != 3) return false;
  const SignedGraph& sg = inst.sg();
  const Graph& g = sg.ground();
  int seen = 0;
  for (const Edge& e : g.edges()) {
    for (Vertex w : g.neighbors(e.v)) {
      if (w <= e.v || !g.adjacent(e.u, w)) continue;
      const int s = sg.sign(e.u, e.v) * sg.sign(e.v, w) * sg.sign(e.u, w);
      if (seen != 0 && s != seen) return false;
      seen = s;
    }
  }
  return true;
}

}  // namespace sigraph
