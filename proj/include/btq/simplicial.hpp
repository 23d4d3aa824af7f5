#pragma once

// Generalized finite simplicial complexes: a simplex is an id-bearing object
// with a set of pairwise-distinct vertices, and two distinct simplices of the
// same dimension may share their vertex set ("parallel" simplices). Faces are
// by vertex-set inclusion, and build() enforces downward closure.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "btq/errors.hpp"
#include "btq/numbers.hpp"

namespace btq::simplicial {

struct VertexRec {
  int id = 0;
  std::string label;
};

struct SimplexRec {
  int id = 0;
  std::vector<int> vertices;  // sorted vertex ids, pairwise distinct
  int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

class Complex {
 public:
  // vertices: id/label pairs; simplices: id-bearing vertex tuples of any
  // dimension >= 1 (dimension is the tuple length minus one).
  static Complex build(std::vector<VertexRec> vertices, std::vector<SimplexRec> simplices) {
    Complex x;
    std::sort(vertices.begin(), vertices.end(),
              [](const VertexRec& a, const VertexRec& b) { return a.id < b.id; });
    for (size_t i = 0; i + 1 < vertices.size(); ++i)
      if (vertices[i].id == vertices[i + 1].id)
        fail(errc::invalid_parameter, "duplicate vertex id " + std::to_string(vertices[i].id));
    x.vertices_ = std::move(vertices);
    for (size_t i = 0; i < x.vertices_.size(); ++i) x.vindex_[x.vertices_[i].id] = i;

    int maxdim = 0;
    for (auto& s : simplices) {
      if (s.vertices.size() < 2)
        fail(errc::invalid_parameter,
             "simplices have dimension >= 1; vertices are given in the vertex list");
      std::sort(s.vertices.begin(), s.vertices.end());
      for (size_t i = 0; i + 1 < s.vertices.size(); ++i)
        if (s.vertices[i] == s.vertices[i + 1])
          fail(errc::duplicate_vertex_in_simplex,
               "simplex " + std::to_string(s.id) + " repeats vertex " +
                   std::to_string(s.vertices[i]));
      for (int v : s.vertices)
        if (!x.vindex_.count(v))
          fail(errc::invalid_parameter,
               "simplex " + std::to_string(s.id) + " uses unknown vertex " + std::to_string(v));
      maxdim = std::max(maxdim, s.dim());
    }
    x.by_dim_.resize(static_cast<size_t>(maxdim));  // slot d-1 holds dimension d
    for (auto& s : simplices) x.by_dim_[static_cast<size_t>(s.dim() - 1)].push_back(std::move(s));

    for (size_t d = 0; d < x.by_dim_.size(); ++d) {
      auto& list = x.by_dim_[d];
      std::sort(list.begin(), list.end(),
                [](const SimplexRec& a, const SimplexRec& b) { return a.id < b.id; });
      for (size_t i = 0; i + 1 < list.size(); ++i)
        if (list[i].id == list[i + 1].id)
          fail(errc::invalid_parameter, "duplicate simplex id " + std::to_string(list[i].id) +
                                            " in dimension " + std::to_string(d + 1));
      for (size_t i = 0; i < list.size(); ++i) x.sindex_[{static_cast<int>(d + 1), list[i].id}] = i;
    }

    // Downward closure: every facet of a dimension-(d+1) simplex must occur
    // as the vertex set of some dimension-d simplex. Facet closure implies
    // full closure by induction.
    for (size_t d = 1; d < x.by_dim_.size(); ++d) {
      std::set<std::vector<int>> below;
      for (const auto& s : x.by_dim_[d - 1]) below.insert(s.vertices);
      for (const auto& s : x.by_dim_[d]) {
        for (size_t drop = 0; drop < s.vertices.size(); ++drop) {
          std::vector<int> facet;
          facet.reserve(s.vertices.size() - 1);
          for (size_t i = 0; i < s.vertices.size(); ++i)
            if (i != drop) facet.push_back(s.vertices[i]);
          if (!below.count(facet)) {
            std::ostringstream msg;
            msg << "simplex " << s.id << " of dimension " << (d + 1) << " is missing a facet";
            fail(errc::closure_violation, msg.str());
          }
        }
      }
    }
    if (!x.by_dim_.empty() && !x.by_dim_[0].empty() && x.vertices_.empty())
      fail(errc::closure_violation, "edges without vertices");
    return x;
  }

  const std::vector<VertexRec>& vertices() const { return vertices_; }

  // Dimension-d simplices (d >= 1), sorted by id.
  const std::vector<SimplexRec>& simplices(int d) const {
    static const std::vector<SimplexRec> empty;
    if (d < 1 || static_cast<size_t>(d) > by_dim_.size()) return empty;
    return by_dim_[static_cast<size_t>(d - 1)];
  }

  int dimension() const { return static_cast<int>(by_dim_.size()); }
  size_t vertex_count() const { return vertices_.size(); }
  size_t simplex_count(int d) const { return simplices(d).size(); }

  int vertex_index(int id) const {
    auto it = vindex_.find(id);
    if (it == vindex_.end())
      fail(errc::unknown_simplex, "unknown vertex id " + std::to_string(id));
    return static_cast<int>(it->second);
  }

  int simplex_index(int d, int id) const {
    auto it = sindex_.find({d, id});
    if (it == sindex_.end())
      fail(errc::unknown_simplex, "no simplex with dimension " + std::to_string(d) + " and id " +
                                      std::to_string(id));
    return static_cast<int>(it->second);
  }

  bool has_vertex(int id) const { return vindex_.count(id) != 0; }

  BigInt euler_characteristic() const {
    BigInt chi(vertices_.size());
    int sign = -1;
    for (const auto& list : by_dim_) {
      chi += sign * BigInt(list.size());
      sign = -sign;
    }
    return chi;
  }

  // Number of m-simplices whose vertex set contains the given cell's vertex
  // set. The cell is a vertex when d == 0 (id = vertex id).
  BigInt generalized_degree(int d, int id, int m) const {
    std::vector<int> vs;
    if (d == 0) {
      vertex_index(id);
      vs = {id};
    } else {
      vs = simplices(d)[static_cast<size_t>(simplex_index(d, id))].vertices;
    }
    if (m < d) fail(errc::invalid_parameter, "generalized_degree needs m >= dim of the cell");
    if (m == 0) return BigInt(1);  // only the vertex itself
    BigInt count(0);
    for (const auto& s : simplices(m))
      if (std::includes(s.vertices.begin(), s.vertices.end(), vs.begin(), vs.end())) ++count;
    return count;
  }

  // Plain-text serialization:
  //   simplicial v1
  //   v <id> <label>
  //   s <dim> <id> <vertex ids...>
  // Vertices sorted by id, simplices by (dim, id). Labels are emitted as
  // single tokens (whitespace replaced by '_'), omitted when empty.
  void dump(std::ostream& os) const {
    os << "simplicial v1\n";
    for (const auto& v : vertices_) {
      os << "v " << v.id;
      if (!v.label.empty()) {
        std::string t = v.label;
        for (auto& c : t)
          if (c == ' ' || c == '\t') c = '_';
        os << ' ' << t;
      }
      os << '\n';
    }
    for (size_t d = 0; d < by_dim_.size(); ++d)
      for (const auto& s : by_dim_[d]) {
        os << "s " << (d + 1) << ' ' << s.id;
        for (int v : s.vertices) os << ' ' << v;
        os << '\n';
      }
  }

  std::string dump_string() const {
    std::ostringstream os;
    dump(os);
    return os.str();
  }

  static Complex parse_dump(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "simplicial v1")
      fail(errc::invalid_parameter, "dump must start with 'simplicial v1'");
    std::vector<VertexRec> vs;
    std::vector<SimplexRec> ss;
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      std::istringstream ls(line);
      std::string tag;
      ls >> tag;
      if (tag == "v") {
        VertexRec v;
        if (!(ls >> v.id)) fail(errc::invalid_parameter, "bad vertex line: " + line);
        ls >> v.label;
        vs.push_back(std::move(v));
      } else if (tag == "s") {
        int dim = 0;
        SimplexRec s;
        if (!(ls >> dim >> s.id)) fail(errc::invalid_parameter, "bad simplex line: " + line);
        int v;
        while (ls >> v) s.vertices.push_back(v);
        if (s.dim() != dim)
          fail(errc::invalid_parameter, "simplex line dimension mismatch: " + line);
        ss.push_back(std::move(s));
      } else {
        fail(errc::invalid_parameter, "unrecognized dump line: " + line);
      }
    }
    return build(std::move(vs), std::move(ss));
  }

  bool operator==(const Complex& o) const {
    if (vertices_.size() != o.vertices_.size() || by_dim_.size() != o.by_dim_.size()) return false;
    for (size_t i = 0; i < vertices_.size(); ++i)
      if (vertices_[i].id != o.vertices_[i].id) return false;
    for (size_t d = 0; d < by_dim_.size(); ++d) {
      if (by_dim_[d].size() != o.by_dim_[d].size()) return false;
      for (size_t i = 0; i < by_dim_[d].size(); ++i)
        if (by_dim_[d][i].id != o.by_dim_[d][i].id ||
            by_dim_[d][i].vertices != o.by_dim_[d][i].vertices)
          return false;
    }
    return true;
  }

 private:
  std::vector<VertexRec> vertices_;
  std::vector<std::vector<SimplexRec>> by_dim_;
  std::map<int, size_t> vindex_;
  std::map<std::pair<int, int>, size_t> sindex_;
};

}  // namespace btq::simplicial
