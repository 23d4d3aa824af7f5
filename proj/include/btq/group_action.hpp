#pragma once

// Finite group actions on generalized simplicial complexes, given by
// generators: a vertex permutation plus, for every dimension >= 1, an
// explicit permutation of simplex ids (parallel simplices make the vertex
// permutation alone insufficient). The group is materialized by closing the
// generators under composition.
//
// quotient() requires the star condition (an element fixing a simplex fixes
// its vertices pointwise) and admissibility (no simplex has two vertices in
// one orbit); quotient_chi_check() verifies, in exact rational arithmetic,
//
//   chi(X/G) = chi(X)/#G + sum_i (-1)^i sum_{orbits s of i-simplices}
//                                     (1 - 1/#Stab(s)).

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "btq/errors.hpp"
#include "btq/numbers.hpp"
#include "btq/simplicial.hpp"

namespace btq::simplicial {

inline constexpr size_t kMaxGroupOrder = 10000;

// One group element in index form: vperm maps vertex index to vertex index,
// sperm[d-1] maps dimension-d simplex index to simplex index.
struct ActionElement {
  std::vector<int> vperm;
  std::vector<std::vector<int>> sperm;
  bool operator==(const ActionElement&) const = default;
  bool operator<(const ActionElement& o) const {
    if (vperm != o.vperm) return vperm < o.vperm;
    return sperm < o.sperm;
  }
};

// Generator in id form, as callers naturally write it.
struct GeneratorSpec {
  std::map<int, int> vertex_map;                 // vertex id -> vertex id
  std::vector<std::map<int, int>> simplex_maps;  // slot d-1: simplex id -> simplex id
};

class Action {
 public:
  Action(const Complex& x, const std::vector<GeneratorSpec>& generators) {
    vertex_count_ = x.vertex_count();
    for (int d = 1; d <= x.dimension(); ++d) simplex_counts_.push_back(x.simplex_count(d));

    std::vector<ActionElement> gens;
    for (const auto& g : generators) gens.push_back(to_element(x, g));

    ActionElement id;
    id.vperm.resize(vertex_count_);
    std::iota(id.vperm.begin(), id.vperm.end(), 0);
    id.sperm.resize(simplex_counts_.size());
    for (size_t d = 0; d < simplex_counts_.size(); ++d) {
      id.sperm[d].resize(simplex_counts_[d]);
      std::iota(id.sperm[d].begin(), id.sperm[d].end(), 0);
    }

    std::set<ActionElement> seen;
    seen.insert(id);
    std::vector<ActionElement> queue{id};
    for (size_t head = 0; head < queue.size(); ++head) {
      ActionElement cur = queue[head];
      for (const auto& g : gens) {
        ActionElement next = compose(g, cur);
        if (seen.insert(next).second) {
          if (seen.size() > kMaxGroupOrder)
            fail(errc::group_too_large, "group closure exceeds the order guard");
          queue.push_back(std::move(next));
        }
      }
    }
    elements_.assign(seen.begin(), seen.end());
  }

  size_t order() const { return elements_.size(); }
  const std::vector<ActionElement>& elements() const { return elements_; }

  bool fits(const Complex& x) const {
    if (vertex_count_ != x.vertex_count()) return false;
    if (simplex_counts_.size() != static_cast<size_t>(x.dimension())) return false;
    for (size_t d = 0; d < simplex_counts_.size(); ++d)
      if (simplex_counts_[d] != x.simplex_count(static_cast<int>(d + 1))) return false;
    return true;
  }

 private:
  ActionElement to_element(const Complex& x, const GeneratorSpec& g) const {
    ActionElement e;
    e.vperm.assign(vertex_count_, -1);
    for (size_t i = 0; i < vertex_count_; ++i) {
      int id = x.vertices()[i].id;
      auto it = g.vertex_map.find(id);
      int image = it == g.vertex_map.end() ? id : it->second;
      e.vperm[i] = x.vertex_index(image);
    }
    check_perm(e.vperm, "vertex permutation");
    e.sperm.resize(simplex_counts_.size());
    for (size_t d = 0; d < simplex_counts_.size(); ++d) {
      const auto& list = x.simplices(static_cast<int>(d + 1));
      e.sperm[d].assign(list.size(), -1);
      const std::map<int, int>* m =
          d < g.simplex_maps.size() ? &g.simplex_maps[d] : nullptr;
      for (size_t i = 0; i < list.size(); ++i) {
        int id = list[i].id;
        int image = id;
        if (m) {
          auto it = m->find(id);
          if (it != m->end()) image = it->second;
        }
        e.sperm[d][i] = x.simplex_index(static_cast<int>(d + 1), image);
      }
      check_perm(e.sperm[d], "simplex permutation in dimension " + std::to_string(d + 1));
      // action axiom: vertices of the image simplex are the images of the
      // vertices, as sets
      for (size_t i = 0; i < list.size(); ++i) {
        std::vector<int> mapped;
        for (int v : list[i].vertices)
          mapped.push_back(x.vertices()[static_cast<size_t>(e.vperm[static_cast<size_t>(x.vertex_index(v))])].id);
        std::sort(mapped.begin(), mapped.end());
        if (mapped != list[static_cast<size_t>(e.sperm[d][i])].vertices)
          fail(errc::inconsistent_action,
               "generator maps simplex " + std::to_string(list[i].id) + " of dimension " +
                   std::to_string(d + 1) + " inconsistently with its vertices");
      }
    }
    return e;
  }

  static void check_perm(const std::vector<int>& p, const std::string& what) {
    std::vector<bool> hit(p.size(), false);
    for (int v : p) {
      if (v < 0 || static_cast<size_t>(v) >= p.size() || hit[static_cast<size_t>(v)])
        fail(errc::inconsistent_action, what + " is not a bijection");
      hit[static_cast<size_t>(v)] = true;
    }
  }

  static ActionElement compose(const ActionElement& a, const ActionElement& b) {
    // (a ∘ b): apply b first
    ActionElement r;
    r.vperm.resize(b.vperm.size());
    for (size_t i = 0; i < b.vperm.size(); ++i)
      r.vperm[i] = a.vperm[static_cast<size_t>(b.vperm[i])];
    r.sperm.resize(b.sperm.size());
    for (size_t d = 0; d < b.sperm.size(); ++d) {
      r.sperm[d].resize(b.sperm[d].size());
      for (size_t i = 0; i < b.sperm[d].size(); ++i)
        r.sperm[d][i] = a.sperm[d][static_cast<size_t>(b.sperm[d][i])];
    }
    return r;
  }

  size_t vertex_count_ = 0;
  std::vector<size_t> simplex_counts_;
  std::vector<ActionElement> elements_;
};

struct ValidationReport {
  bool star_ok = true;
  bool admissible = true;
  std::vector<std::string> offenders;
};

namespace detail {

struct Orbits {
  // orbit id per cell, by first appearance scanning cells in id order;
  // slot 0 = vertices, slot d = dimension-d simplices
  std::vector<std::vector<int>> orbit_of;
  std::vector<std::vector<size_t>> orbit_size;   // per dimension, per orbit
  std::vector<std::vector<size_t>> stab_order;   // per dimension, per orbit
  std::vector<std::vector<size_t>> representative;
};

inline Orbits orbits_of(const Complex& x, const Action& a) {
  Orbits o;
  const int dims = x.dimension();
  o.orbit_of.resize(static_cast<size_t>(dims) + 1);
  o.orbit_size.resize(static_cast<size_t>(dims) + 1);
  o.stab_order.resize(static_cast<size_t>(dims) + 1);
  o.representative.resize(static_cast<size_t>(dims) + 1);
  for (int d = 0; d <= dims; ++d) {
    size_t count = d == 0 ? x.vertex_count() : x.simplex_count(d);
    auto& orb = o.orbit_of[static_cast<size_t>(d)];
    orb.assign(count, -1);
    for (size_t i = 0; i < count; ++i) {
      if (orb[i] >= 0) continue;
      int this_orbit = static_cast<int>(o.orbit_size[static_cast<size_t>(d)].size());
      size_t members = 0, stab = 0;
      for (const auto& g : a.elements()) {
        size_t img = d == 0 ? static_cast<size_t>(g.vperm[i])
                            : static_cast<size_t>(g.sperm[static_cast<size_t>(d - 1)][i]);
        if (img == i) ++stab;
        if (orb[img] < 0) {
          orb[img] = this_orbit;
          ++members;
        }
      }
      o.orbit_size[static_cast<size_t>(d)].push_back(members);
      o.stab_order[static_cast<size_t>(d)].push_back(stab);
      o.representative[static_cast<size_t>(d)].push_back(i);
      if (members * stab != a.order())
        fail(errc::internal_check_failed, "orbit-stabilizer bookkeeping is inconsistent");
    }
  }
  return o;
}

}  // namespace detail

inline ValidationReport validate_action(const Complex& x, const Action& a) {
  if (!a.fits(x))
    fail(errc::invalid_parameter, "action was built for a complex of a different shape");
  ValidationReport rep;
  // star condition: an element fixing a simplex (same id) fixes its vertices
  for (size_t e = 0; e < a.elements().size(); ++e) {
    const auto& g = a.elements()[e];
    for (int d = 1; d <= x.dimension(); ++d) {
      const auto& list = x.simplices(d);
      for (size_t i = 0; i < list.size(); ++i) {
        if (g.sperm[static_cast<size_t>(d - 1)][i] != static_cast<int>(i)) continue;
        for (int v : list[i].vertices) {
          size_t vi = static_cast<size_t>(x.vertex_index(v));
          if (g.vperm[vi] != static_cast<int>(vi)) {
            rep.star_ok = false;
            rep.offenders.push_back("element " + std::to_string(e) + " fixes simplex " +
                                    std::to_string(list[i].id) + " of dimension " +
                                    std::to_string(d) + " but moves vertex " + std::to_string(v));
            break;
          }
        }
      }
    }
  }
  auto orbits = detail::orbits_of(x, a);
  for (int d = 1; d <= x.dimension(); ++d) {
    for (const auto& s : x.simplices(d)) {
      std::set<int> seen;
      for (int v : s.vertices)
        seen.insert(orbits.orbit_of[0][static_cast<size_t>(x.vertex_index(v))]);
      if (seen.size() != s.vertices.size()) {
        rep.admissible = false;
        rep.offenders.push_back("simplex " + std::to_string(s.id) + " of dimension " +
                                std::to_string(d) + " has two vertices in one orbit");
      }
    }
  }
  return rep;
}

struct OrbitInfo {
  size_t orbit_size = 0;
  size_t stabilizer_order = 0;
};

struct QuotientResult {
  Complex quotient;
  // cells[d][orbit id] for d = 0 (vertices) up to dim(X)
  std::vector<std::vector<OrbitInfo>> cells;
};

inline QuotientResult quotient(const Complex& x, const Action& a) {
  auto rep = validate_action(x, a);
  if (!rep.star_ok)
    fail(errc::star_violation, rep.offenders.empty() ? "star condition fails" : rep.offenders[0]);
  if (!rep.admissible)
    fail(errc::not_admissible, "some simplex has two vertices in one orbit");
  auto orbits = detail::orbits_of(x, a);

  QuotientResult out;
  std::vector<VertexRec> qverts;
  const auto& vorb = orbits.orbit_of[0];
  size_t vorbits = orbits.orbit_size[0].size();
  std::vector<std::vector<int>> members(vorbits);
  for (size_t i = 0; i < x.vertex_count(); ++i)
    members[static_cast<size_t>(vorb[i])].push_back(x.vertices()[i].id);
  for (size_t o = 0; o < vorbits; ++o) {
    std::string label;
    for (size_t j = 0; j < members[o].size(); ++j) {
      if (j) label += ",";
      label += std::to_string(members[o][j]);
    }
    qverts.push_back({static_cast<int>(o), label});
  }

  std::vector<SimplexRec> qsimp;
  for (int d = 1; d <= x.dimension(); ++d) {
    const auto& sorb = orbits.orbit_of[static_cast<size_t>(d)];
    const auto& reps = orbits.representative[static_cast<size_t>(d)];
    for (size_t o = 0; o < reps.size(); ++o) {
      const auto& s = x.simplices(d)[reps[o]];
      SimplexRec q;
      q.id = static_cast<int>(o);
      for (int v : s.vertices)
        q.vertices.push_back(vorb[static_cast<size_t>(x.vertex_index(v))]);
      std::sort(q.vertices.begin(), q.vertices.end());
      qsimp.push_back(std::move(q));
    }
    (void)sorb;
  }

  out.quotient = Complex::build(std::move(qverts), std::move(qsimp));
  out.cells.resize(static_cast<size_t>(x.dimension()) + 1);
  for (int d = 0; d <= x.dimension(); ++d) {
    size_t norb = orbits.orbit_size[static_cast<size_t>(d)].size();
    for (size_t o = 0; o < norb; ++o)
      out.cells[static_cast<size_t>(d)].push_back({orbits.orbit_size[static_cast<size_t>(d)][o],
                                                   orbits.stab_order[static_cast<size_t>(d)][o]});
  }
  return out;
}

struct QuotientChiReport {
  BigRat lhs;  // chi of the quotient
  BigRat rhs;  // chi(X)/#G + correction terms
  bool equal = false;
};

inline QuotientChiReport quotient_chi_check(const Complex& x, const Action& a) {
  auto q = quotient(x, a);
  QuotientChiReport rep;
  rep.lhs = BigRat(q.quotient.euler_characteristic());
  BigRat rhs = BigRat(x.euler_characteristic()) / BigRat(a.order());
  int sign = 1;
  for (size_t d = 0; d < q.cells.size(); ++d) {
    for (const auto& cell : q.cells[d])
      rhs += sign * (BigRat(1) - BigRat(1, BigInt(cell.stabilizer_order)));
    sign = -sign;
  }
  rep.rhs = rhs;
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace btq::simplicial
