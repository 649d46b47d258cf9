#include "cliffilt/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "cliffilt/error.hpp"
#include "cliffilt/subspace.hpp"

namespace cliffilt {

std::vector<int> AdinkraGraph::heights() const {
  std::vector<int> out;
  for (const auto& v : vertices) out.push_back(v.height);
  return out;
}

std::vector<std::size_t> AdinkraGraph::height_counts() const {
  std::vector<std::size_t> out;
  for (const auto& v : vertices) {
    if (v.height < 0) continue;
    if (static_cast<std::size_t>(v.height) >= out.size()) out.resize(static_cast<std::size_t>(v.height) + 1, 0);
    ++out[static_cast<std::size_t>(v.height)];
  }
  return out;
}

namespace {

std::vector<std::vector<std::size_t>> adjacency(const AdinkraGraph& g) {
  std::vector<std::set<std::size_t>> sets(g.vertices.size());
  for (const auto& e : g.edges) {
    sets[e.from].insert(e.to);
    sets[e.to].insert(e.from);
  }
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> AdinkraGraph::components() const {
  const auto adj = adjacency(*this);
  std::vector<bool> seen(vertices.size(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < vertices.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      comp.push_back(u);
      for (std::size_t v : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          q.push(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

AdinkraGraph to_graph(const SuperFiltration& f, const Matrix& even_basis, const Matrix& odd_basis) {
  const auto& m = f.module();
  if (even_basis.rows() != m.dim_even() || even_basis.cols() != m.dim_even() || rank(even_basis) != m.dim_even())
    throw ContractError("to_graph: even rows are not a basis of the even part");
  if (odd_basis.rows() != m.dim_odd() || odd_basis.cols() != m.dim_odd() || rank(odd_basis) != m.dim_odd())
    throw ContractError("to_graph: odd rows are not a basis of the odd part");
  const Matrix even_inv = inverse(even_basis), odd_inv = inverse(odd_basis);
  AdinkraGraph g;
  const std::size_t de = m.dim_even();
  for (Parity par : {Parity::Even, Parity::Odd}) {
    const Matrix& basis = par == Parity::Even ? even_basis : odd_basis;
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      GraphVertex v{par, basis.row_vector(r), -1};
      for (int p = static_cast<int>(par); p <= f.top() + 1; p += 2)
        if (f.level(p).contains(v.vector)) {
          v.height = p;
          break;
        }
      g.vertices.push_back(std::move(v));
    }
  }
  for (int p = 0; p <= f.top(); ++p) {
    std::vector<Vector> rows;
    for (const auto& v : g.vertices)
      if (v.parity == parity_of(p) && v.height <= p) rows.push_back(v.vector);
    if (Subspace::span(rows, m.dim(parity_of(p))) != f.level(p))
      throw ContractError("to_graph: basis not filtration-homogeneous: F_" + std::to_string(p) +
                          " is not spanned by basis vectors");
  }
  for (std::size_t u = 0; u < g.vertices.size(); ++u) {
    const Parity par = g.vertices[u].parity;
    const Matrix& target_inv = par == Parity::Even ? odd_inv : even_inv;
    const std::size_t offset = par == Parity::Even ? de : 0;
    for (std::size_t i = 0; i < m.generators(); ++i) {
      const Vector w = cliffilt::apply(g.vertices[u].vector, m.gamma(i, par));
      const Vector coords = cliffilt::apply(w, target_inv);
      std::size_t hit = coords.size(), nonzero = 0;
      for (std::size_t c = 0; c < coords.size(); ++c)
        if (!coords[c].is_zero()) {
          ++nonzero;
          hit = c;
        }
      if (nonzero != 1 || (coords[hit] != Rational(1) && coords[hit] != Rational(-1)))
        throw ContractError("to_graph: basis not adapted: generator " + std::to_string(i + 1) + " maps vertex " +
                            std::to_string(u) + " to a non-signed basis vector");
      const std::size_t v = offset + hit;
      if (u < v) g.edges.push_back({u, v, i, coords[hit].sign()});
    }
  }
  return g;
}

AdinkraGraph to_graph(const SuperFiltration& f) {
  return to_graph(f, Matrix::identity(f.module().dim_even()), Matrix::identity(f.module().dim_odd()));
}

SuperFiltration flags_from_heights(const ModulePtr& m, const AdinkraGraph& g, const std::vector<int>& heights) {
  if (!m) throw ContractError("flags_from_heights: null module");
  if (heights.size() != g.vertices.size()) throw DimensionError("flags_from_heights: one height per vertex");
  int top = 1;
  for (std::size_t k = 0; k < heights.size(); ++k) {
    if (heights[k] < 0 || parity_of(heights[k]) != g.vertices[k].parity)
      throw ContractError("flags_from_heights: height parity must match vertex parity");
    top = std::max(top, heights[k]);
  }
  std::vector<Subspace> levels;
  for (int p = 0; p <= top; ++p) {
    std::vector<Vector> rows;
    for (std::size_t k = 0; k < heights.size(); ++k)
      if (g.vertices[k].parity == parity_of(p) && heights[k] <= p) rows.push_back(g.vertices[k].vector);
    levels.push_back(Subspace::span(rows, m->dim(parity_of(p))));
  }
  return SuperFiltration(m, std::move(levels));
}

namespace {

struct ComponentSearch {
  const std::vector<std::vector<std::size_t>>& adj;
  const std::vector<std::size_t>& order;
  std::vector<int>& h;
  std::size_t budget;
  std::size_t& explored;
  bool exhausted = false;
  std::vector<std::vector<int>> found;

  void run(std::size_t k) {
    if (exhausted) return;
    if (++explored > budget) {
      exhausted = true;
      return;
    }
    if (k == order.size()) {
      int lo = h[order.front()];
      for (std::size_t v : order) lo = std::min(lo, h[v]);
      const int shift = lo - lo % 2;
      std::vector<int> out;
      for (std::size_t v : order) out.push_back(h[v] - shift);
      found.push_back(std::move(out));
      return;
    }
    const std::size_t u = order[k];
    std::set<int> options;
    for (std::size_t v : adj[u])
      if (h[v] >= 0) options = {h[v] - 1, h[v] + 1};
    for (int cand : options) {
      bool ok = cand >= 0;
      for (std::size_t v : adj[u])
        if (ok && h[v] >= 0 && std::abs(h[v] - cand) != 1) ok = false;
      if (!ok) continue;
      h[u] = cand;
      run(k + 1);
      h[u] = -1;
      if (exhausted) return;
    }
  }
};

}  // namespace

HeightEnumeration enumerate_heights(const ModulePtr& m, const AdinkraGraph& g, std::size_t budget) {
  HeightEnumeration out;
  const auto adj = adjacency(g);
  const std::size_t n = g.vertices.size();
  std::vector<std::vector<std::size_t>> comps = g.components();
  // Per component: heights listed in BFS order of that component.
  std::vector<std::vector<std::size_t>> orders;
  std::vector<std::vector<std::vector<int>>> per;
  std::vector<int> h(n, -1);
  for (const auto& comp : comps) {
    std::vector<std::size_t> order;
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> q;
    q.push(comp.front());
    seen[comp.front()] = true;
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      order.push_back(u);
      for (std::size_t v : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          q.push(v);
        }
    }
    const std::size_t root = order.front();
    const int base = static_cast<int>(2 * n) + static_cast<int>(g.vertices[root].parity);
    h[root] = base;
    ComponentSearch s{adj, order, h, budget, out.explored, false, {}};
    // The root is fixed; the search starts at its first neighbour.
    s.run(1);
    h.assign(n, -1);
    if (s.exhausted) out.budget_exhausted = true;
    orders.push_back(std::move(order));
    per.push_back(std::move(s.found));
    if (out.budget_exhausted) return out;
  }
  // Combine components independently.
  std::vector<std::size_t> idx(per.size(), 0);
  for (const auto& p : per)
    if (p.empty()) return out;
  while (true) {
    if (++out.explored > budget) {
      out.budget_exhausted = true;
      return out;
    }
    std::vector<int> heights(n, 0);
    for (std::size_t c = 0; c < per.size(); ++c)
      for (std::size_t k = 0; k < orders[c].size(); ++k) heights[orders[c][k]] = per[c][idx[c]][k];
    if (check_filtration(flags_from_heights(m, g, heights))) out.heights.push_back(std::move(heights));
    std::size_t c = 0;
    while (c < per.size() && ++idx[c] == per[c].size()) idx[c++] = 0;
    if (c == per.size()) break;
  }
  std::sort(out.heights.begin(), out.heights.end());
  return out;
}

std::vector<std::size_t> sources(const AdinkraGraph& g, const std::vector<int>& heights) {
  const auto adj = adjacency(g);
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < g.vertices.size(); ++u) {
    bool low = true;
    for (std::size_t v : adj[u])
      if (heights[v] < heights[u]) low = false;
    if (low) out.push_back(u);
  }
  return out;
}

std::string to_dot(const AdinkraGraph& g) {
  std::ostringstream os;
  os << "graph adinkra {\n  rankdir=BT;\n  node [shape=circle, style=filled, fontsize=10];\n";
  std::size_t even = 0, odd = 0;
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    const bool boson = g.vertices[k].parity == Parity::Even;
    os << "  v" << k << " [label=\"" << (boson ? "b" : "f") << (boson ? ++even : ++odd) << "\", fillcolor="
       << (boson ? "white" : "black, fontcolor=white") << "];\n";
  }
  std::map<int, std::vector<std::size_t>> ranks;
  for (std::size_t k = 0; k < g.vertices.size(); ++k) ranks[g.vertices[k].height].push_back(k);
  for (const auto& [height, members] : ranks) {
    os << "  { rank=same;";
    for (std::size_t k : members) os << " v" << k << ";";
    os << " }  // height " << height << "\n";
  }
  for (const auto& e : g.edges) {
    const bool up = g.vertices[e.from].height <= g.vertices[e.to].height;
    const std::size_t lo = up ? e.from : e.to, hi = up ? e.to : e.from;
    os << "  v" << lo << " -- v" << hi << " [label=\"" << e.generator + 1 << "\"" << (e.sign < 0 ? ", style=dashed" : "")
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace cliffilt
