#pragma once

// Deterministic generator of randomized (complex, admissible action) cases
// for the quotient Euler-characteristic identity sweep. Construction: a small
// abelian group Z_a x Z_b acts on vertex orbits G/H (H a cyclic subgroup) and
// on simplex orbits G/H_s where H_s is the intersection of the vertex
// stabilizers, so the star condition holds by construction; base simplices
// take their vertices from pairwise distinct orbits, so admissibility holds
// too. Faces are filled in downward, which keeps the complex closed.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "btq/group_action.hpp"
#include "btq/simplicial.hpp"

namespace btq::simplicial {

struct RandomCase {
  std::shared_ptr<Complex> complex;
  std::vector<GeneratorSpec> generators;
  size_t group_order = 0;
};

namespace detail {

// splitmix64: tiny, stable across platforms, good enough for case shuffling.
struct SplitMix {
  uint64_t state;
  explicit SplitMix(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform-enough draw in [0, bound)
  uint64_t below(uint64_t bound) { return next() % bound; }
};

}  // namespace detail

inline RandomCase random_admissible_case(uint64_t seed) {
  detail::SplitMix rng(seed * 0x100000001b3ull + 0x811c9dc5ull);

  // group shapes (a, b) for Z_a x Z_b with ab <= 12
  static const std::vector<std::pair<int, int>> shapes = {
      {1, 1}, {2, 1}, {3, 1}, {4, 1},  {5, 1},  {6, 1}, {7, 1}, {8, 1},
      {9, 1}, {10, 1}, {11, 1}, {12, 1}, {2, 2}, {2, 4}, {2, 6}, {3, 3}, {4, 2}};

  for (int attempt = 0; attempt < 64; ++attempt) {
    auto [ga, gb] = shapes[rng.below(shapes.size())];
    const int order = ga * gb;
    // group elements in a fixed order: index = x * gb + y
    auto add = [&](int u, int v) {
      int ux = u / gb, uy = u % gb, vx = v / gb, vy = v % gb;
      return ((ux + vx) % ga) * gb + (uy + vy) % gb;
    };

    // vertex orbits: orbit j has stabilizer H_j = <h_j>, a cyclic subgroup
    int norbits = 2 + static_cast<int>(rng.below(3));  // 2..4
    std::vector<std::vector<int>> stab;                // sorted element lists
    for (int j = 0; j < norbits; ++j) {
      int h = static_cast<int>(rng.below(static_cast<uint64_t>(order)));
      std::set<int> sub{0};
      int cur = h;
      while (!sub.count(cur)) {
        sub.insert(cur);
        cur = add(cur, h);
      }
      stab.emplace_back(sub.begin(), sub.end());
    }

    // elements lying in every vertex stabilizer act trivially on the whole
    // complex; the group the closure can recover is G modulo this kernel
    std::set<int> kernel(stab[0].begin(), stab[0].end());
    for (int j = 1; j < norbits; ++j) {
      std::set<int> nxt;
      for (int h : stab[static_cast<size_t>(j)])
        if (kernel.count(h)) nxt.insert(h);
      kernel = std::move(nxt);
    }

    // cosets of H_j: coset id = smallest member; vertex = (orbit, coset id)
    std::vector<std::map<int, int>> coset_of(static_cast<size_t>(norbits));  // element -> coset id
    std::vector<std::vector<int>> coset_ids(static_cast<size_t>(norbits));
    for (int j = 0; j < norbits; ++j) {
      for (int g = 0; g < order; ++g) {
        if (coset_of[static_cast<size_t>(j)].count(g)) continue;
        int rep = g;
        std::vector<int> mem;
        for (int h : stab[static_cast<size_t>(j)]) mem.push_back(add(g, h));
        std::sort(mem.begin(), mem.end());
        rep = mem[0];
        for (int m : mem) coset_of[static_cast<size_t>(j)][m] = rep;
        if (rep == g) coset_ids[static_cast<size_t>(j)].push_back(rep);
      }
    }

    // global vertex ids
    std::map<std::pair<int, int>, int> vid;  // (orbit, coset rep) -> id
    std::vector<VertexRec> verts;
    for (int j = 0; j < norbits; ++j)
      for (int c : coset_ids[static_cast<size_t>(j)]) {
        int id = static_cast<int>(verts.size());
        vid[{j, c}] = id;
        verts.push_back({id, "o" + std::to_string(j) + "c" + std::to_string(c)});
      }

    // base cells: vertex tuples from pairwise distinct orbits, plus all their
    // faces (deduplicated by vertex set; full-dimensional bases always kept,
    // so parallel copies can occur)
    struct Cell {
      std::vector<int> orbit;   // orbit of each member vertex
      std::vector<int> coset;   // coset rep of each member vertex
      std::vector<int> stab;    // intersection of member stabilizers
    };
    std::vector<Cell> cells;
    std::set<std::vector<int>> face_seen;  // by sorted vertex-id set
    int nbase = 1 + static_cast<int>(rng.below(2));
    for (int t = 0; t < nbase; ++t) {
      int maxdim = std::min(3, norbits - 1);
      if (maxdim < 1) break;
      int dim = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(maxdim)));
      std::vector<int> orbs(static_cast<size_t>(norbits));
      for (int j = 0; j < norbits; ++j) orbs[static_cast<size_t>(j)] = j;
      for (size_t i = orbs.size(); i > 1; --i)
        std::swap(orbs[i - 1], orbs[rng.below(i)]);
      orbs.resize(static_cast<size_t>(dim) + 1);
      std::sort(orbs.begin(), orbs.end());
      Cell base;
      for (int j : orbs) {
        const auto& ids = coset_ids[static_cast<size_t>(j)];
        base.orbit.push_back(j);
        base.coset.push_back(ids[rng.below(ids.size())]);
      }
      // subsets of size >= 2, the full set included
      int k = dim + 1;
      for (int mask = 0; mask < (1 << k); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) < 2) continue;
        Cell c;
        std::vector<int> vset;
        for (int bit = 0; bit < k; ++bit)
          if (mask & (1 << bit)) {
            c.orbit.push_back(base.orbit[static_cast<size_t>(bit)]);
            c.coset.push_back(base.coset[static_cast<size_t>(bit)]);
            vset.push_back(vid.at({base.orbit[static_cast<size_t>(bit)],
                                   base.coset[static_cast<size_t>(bit)]}));
          }
        std::sort(vset.begin(), vset.end());
        bool full = mask == (1 << k) - 1;
        if (!full && face_seen.count(vset)) continue;
        face_seen.insert(vset);
        // pointwise stabilizer = intersection of the member stabilizers
        std::set<int> inter(stab[static_cast<size_t>(c.orbit[0])].begin(),
                            stab[static_cast<size_t>(c.orbit[0])].end());
        for (size_t i = 1; i < c.orbit.size(); ++i) {
          std::set<int> nxt;
          for (int h : stab[static_cast<size_t>(c.orbit[i])])
            if (inter.count(h)) nxt.insert(h);
          inter = std::move(nxt);
        }
        c.stab.assign(inter.begin(), inter.end());
        cells.push_back(std::move(c));
      }
    }

    // materialize simplex copies: one per coset of the cell stabilizer
    std::vector<SimplexRec> simp;
    // copy key: (cell index, coset rep) -> (dim, id)
    std::map<std::pair<size_t, int>, std::pair<int, int>> copy_id;
    std::vector<int> next_id(8, 0);
    size_t total = 0;
    for (size_t ci = 0; ci < cells.size(); ++ci) {
      const auto& c = cells[ci];
      int dim = static_cast<int>(c.orbit.size()) - 1;
      std::set<int> reps_done;
      for (int g = 0; g < order; ++g) {
        std::vector<int> mem;
        for (int h : c.stab) mem.push_back(add(g, h));
        int rep = *std::min_element(mem.begin(), mem.end());
        if (!reps_done.insert(rep).second) continue;
        SimplexRec s;
        s.id = next_id[static_cast<size_t>(dim)]++;
        for (size_t i = 0; i < c.orbit.size(); ++i) {
          int j = c.orbit[i];
          int moved = coset_of[static_cast<size_t>(j)].at(add(rep, c.coset[i]));
          s.vertices.push_back(vid.at({j, moved}));
        }
        std::sort(s.vertices.begin(), s.vertices.end());
        copy_id[{ci, rep}] = {dim, s.id};
        simp.push_back(std::move(s));
        ++total;
      }
    }
    if (total > 40 || verts.size() > 40) continue;

    RandomCase out;
    out.group_order = static_cast<size_t>(order) / kernel.size();
    out.complex = std::make_shared<Complex>(Complex::build(verts, simp));

    // generators: (1,0) and (0,1) where nontrivial
    std::vector<int> gens;
    if (ga > 1) gens.push_back(gb);  // element (1,0) has index 1*gb+0
    if (gb > 1) gens.push_back(1);   // element (0,1)
    int maxdim = 0;
    for (const auto& c : cells) maxdim = std::max(maxdim, static_cast<int>(c.orbit.size()) - 1);
    for (int g : gens) {
      GeneratorSpec spec;
      for (int j = 0; j < norbits; ++j)
        for (int c : coset_ids[static_cast<size_t>(j)]) {
          int moved = coset_of[static_cast<size_t>(j)].at(add(g, c));
          spec.vertex_map[vid.at({j, c})] = vid.at({j, moved});
        }
      spec.simplex_maps.resize(static_cast<size_t>(std::max(maxdim, 1)));
      for (const auto& [key, dim_id] : copy_id) {
        auto [ci, rep] = key;
        const auto& c = cells[ci];
        std::vector<int> mem;
        for (int h : c.stab) mem.push_back(add(add(g, rep), h));
        int moved = *std::min_element(mem.begin(), mem.end());
        auto it = copy_id.find({ci, moved});
        spec.simplex_maps[static_cast<size_t>(dim_id.first - 1)][dim_id.second] =
            it->second.second;
      }
      out.generators.push_back(std::move(spec));
    }
    return out;
  }

  // deterministic fallback: segment with an edge flip is always valid
  std::vector<VertexRec> vs{{0, "a"}, {1, "b"}, {2, "c"}};
  std::vector<SimplexRec> ss{{0, {0, 1}}, {1, {1, 2}}};
  RandomCase out;
  out.group_order = 2;
  out.complex = std::make_shared<Complex>(Complex::build(vs, ss));
  GeneratorSpec flip;
  flip.vertex_map = {{0, 2}, {2, 0}};
  flip.simplex_maps = {{{0, 1}, {1, 0}}};
  out.generators.push_back(flip);
  return out;
}

}  // namespace btq::simplicial
