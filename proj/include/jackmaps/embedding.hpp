#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "jackmaps/map.hpp"
#include "jackmaps/multivar_poly.hpp"
#include "jackmaps/partition.hpp"
#include "jackmaps/rational.hpp"

namespace jackmaps {

using YoungDiagram = Partition;  // weakly decreasing rows; conjugate() swaps rows/columns

// Underlying abstract bipartite multigraph of a map, with parallel edges
// collapsed (embedding counts only see vertex incidences).
struct BipartiteGraph {
  unsigned n_black = 0;
  unsigned n_white = 0;
  std::vector<std::vector<int>> white_adj;  // per white vertex: sorted distinct black neighbors

  BipartiteGraph color_swapped() const {
    BipartiteGraph g;
    g.n_black = n_white;
    g.n_white = n_black;
    g.white_adj.assign(n_black, {});
    for (unsigned w = 0; w < n_white; ++w)
      for (int b : white_adj[w]) g.white_adj[b].push_back(static_cast<int>(w));
    for (auto& v : g.white_adj) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return g;
  }
};

inline BipartiteGraph graph_of(const Map& m) {
  BipartiteGraph g;
  g.n_black = m.black_vertex_count();
  g.n_white = m.white_vertex_count();
  g.white_adj.assign(g.n_white, {});
  for (const Edge& e : m.edges()) {
    int b = m.black_vertices().polygon_index(e.first);
    int w = m.white_vertices().polygon_index(e.first);
    g.white_adj[w].push_back(b);
  }
  for (auto& v : g.white_adj) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return g;
}

namespace detail {

// Connected components over the black vertex set (whites hang off blacks).
struct GraphComponent {
  std::vector<int> blacks;
  std::vector<int> whites;
};

inline std::vector<GraphComponent> graph_components(const BipartiteGraph& g) {
  std::vector<std::vector<int>> black_adj(g.n_black);
  for (unsigned w = 0; w < g.n_white; ++w)
    for (int b : g.white_adj[w]) black_adj[b].push_back(static_cast<int>(w));
  std::vector<int> comp_b(g.n_black, -1), comp_w(g.n_white, -1);
  std::vector<GraphComponent> comps;
  for (unsigned s = 0; s < g.n_black; ++s) {
    if (comp_b[s] >= 0) continue;
    int id = static_cast<int>(comps.size());
    comps.emplace_back();
    std::vector<int> stack{static_cast<int>(s)};
    comp_b[s] = id;
    comps[id].blacks.push_back(static_cast<int>(s));
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      for (int w : black_adj[b]) {
        if (comp_w[w] >= 0) continue;
        comp_w[w] = id;
        comps[id].whites.push_back(w);
        for (int b2 : g.white_adj[w]) {
          if (comp_b[b2] >= 0) continue;
          comp_b[b2] = id;
          comps[id].blacks.push_back(b2);
          stack.push_back(b2);
        }
      }
    }
  }
  // isolated white vertices (no incident edge) live in components of their own
  for (unsigned w = 0; w < g.n_white; ++w) {
    if (comp_w[w] >= 0) continue;
    comps.emplace_back();
    comps.back().whites.push_back(static_cast<int>(w));
  }
  return comps;
}

}  // namespace detail

// Number of incidence-preserving placements: black vertices to rows, white
// vertices to columns, every edge landing on a box of the diagram. Computed
// per connected component as sum over row assignments of
// prod_w min_{b adjacent to w} lambda_{row(b)}.
inline BigInt count_embeddings(const BipartiteGraph& g, const YoungDiagram& lambda) {
  unsigned rows = lambda.length();
  BigInt total = 1;
  for (const auto& comp : detail::graph_components(g)) {
    if (comp.blacks.empty()) {
      // lone white vertex: any column of the first row region... a white
      // vertex with no edges can sit in any column of any row; the diagram
      // constraint degenerates to the number of columns, i.e. lambda_1.
      total *= BigInt(lambda.part(0));
      continue;
    }
    BigInt comp_total = 0;
    std::vector<unsigned> assign(comp.blacks.size(), 0);
    while (true) {
      BigInt prod = rows == 0 ? BigInt(0) : BigInt(1);
      for (int w : comp.whites) {
        unsigned best = 0;
        bool first = true;
        for (int b : g.white_adj[w]) {
          auto it = std::find(comp.blacks.begin(), comp.blacks.end(), b);
          unsigned row = assign[it - comp.blacks.begin()];
          unsigned width = lambda.part(row);
          if (first || width < best) best = width;
          first = false;
        }
        prod *= best;
        if (prod == 0) break;
      }
      if (rows > 0) comp_total += prod;
      // odometer over rows
      size_t i = 0;
      while (i < assign.size() && ++assign[i] == rows) assign[i++] = 0;
      if (i == assign.size()) break;
      if (rows == 0) break;
    }
    total *= comp_total;
    if (total == 0) return total;
  }
  return total;
}

inline BigInt count_embeddings(const Map& m, const YoungDiagram& lambda) {
  return count_embeddings(graph_of(m), lambda);
}

// Independent brute-force oracle: enumerate every (row, column) placement and
// test each edge's box against the diagram.
inline BigInt count_embeddings_bruteforce(const BipartiteGraph& g, const YoungDiagram& lambda) {
  unsigned rows = lambda.length();
  unsigned cols = lambda.part(0);
  if (g.n_black + g.n_white == 0) return 1;
  if (rows == 0) return 0;
  BigInt count = 0;
  std::vector<unsigned> r(g.n_black, 0), c(g.n_white, 0);
  auto ok = [&]() {
    for (unsigned w = 0; w < g.n_white; ++w)
      for (int b : g.white_adj[w])
        if (c[w] >= lambda.part(r[b])) return false;  // box (r[b], c[w]) outside
    return true;
  };
  while (true) {
    if (ok()) ++count;
    size_t i = 0;
    while (i < r.size() && ++r[i] == rows) r[i++] = 0;
    if (i == r.size()) {
      size_t j = 0;
      while (j < c.size() && ++c[j] == cols) c[j++] = 0;
      if (j == c.size()) break;
    }
  }
  return count;
}

// Rectangular diagrams admit the closed product form p^{blacks} q^{whites}.
inline BigInt count_embeddings_rect(const BipartiteGraph& g, unsigned p, unsigned q) {
  BigInt total = 1;
  for (unsigned i = 0; i < g.n_black; ++i) total *= p;
  for (unsigned i = 0; i < g.n_white; ++i) total *= q;
  return total;
}

struct MultirectCoords {
  std::vector<unsigned> p;  // block heights
  std::vector<unsigned> q;  // block widths, weakly decreasing
};

// "P=1,1,1;Q=3,2,1"
inline MultirectCoords parse_multirect(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos || text.rfind("P=", 0) != 0 ||
      text.compare(semi + 1, 2, "Q=") != 0)
    throw std::invalid_argument("multirect: expected 'P=...;Q=...'");
  auto parse_list = [](const std::string& s) {
    std::vector<unsigned> vals;
    size_t i = 0;
    while (i <= s.size() && !s.empty()) {
      size_t comma = s.find(',', i);
      std::string tok = s.substr(i, comma == std::string::npos ? std::string::npos : comma - i);
      if (!tok.empty()) vals.push_back(static_cast<unsigned>(std::stoul(tok)));
      if (comma == std::string::npos) break;
      i = comma + 1;
    }
    return vals;
  };
  MultirectCoords mc;
  mc.p = parse_list(text.substr(2, semi - 2));
  mc.q = parse_list(text.substr(semi + 3));
  if (mc.p.size() != mc.q.size())
    throw std::invalid_argument("multirect: P and Q must have equal length");
  for (size_t k = 1; k < mc.q.size(); ++k)
    if (mc.q[k] > mc.q[k - 1])
      throw std::invalid_argument("multirect: Q must be weakly decreasing");
  return mc;
}

inline YoungDiagram multirect_diagram(const MultirectCoords& mc) {
  std::vector<unsigned> rows;
  for (size_t i = 0; i < mc.p.size(); ++i)
    rows.insert(rows.end(), mc.p[i], mc.q[i]);
  return YoungDiagram(std::move(rows));
}

// Inverse of multirect_diagram: distinct row lengths with multiplicities.
inline MultirectCoords diagram_multirect(const YoungDiagram& lambda) {
  MultirectCoords mc;
  for (unsigned i = 0; i < lambda.length(); ++i) {
    unsigned row = lambda.part(i);
    if (!mc.q.empty() && mc.q.back() == row) {
      ++mc.p.back();
    } else {
      mc.p.push_back(1);
      mc.q.push_back(row);
    }
  }
  return mc;
}

// Same count as count_embeddings, organised around the block structure of the
// diagram so the enumeration runs over the smaller vertex side. With blocks of
// height p_k and width q_k (q decreasing),
//   N = sum_{phi: blacks -> blocks} prod_b p_{phi(b)} prod_w q_{max nbr block}
// and writing q_j as a telescoping sum of q_k - q_{k+1} exchanges the roles:
//   N = sum_{c: whites -> blocks} prod_w (q_{c_w} - q_{c_w+1})
//                                 prod_b (p_1 + ... + p_{min nbr block}).
inline BigInt count_embeddings_multirect(const BipartiteGraph& g, const MultirectCoords& mc) {
  unsigned ell = static_cast<unsigned>(mc.p.size());
  if (g.n_black + g.n_white == 0) return 1;
  if (ell == 0) return 0;
  if (g.n_black <= g.n_white) {
    BigInt total = 0;
    std::vector<unsigned> phi(g.n_black, 0);
    while (true) {
      BigInt prod = 1;
      for (unsigned b = 0; b < g.n_black; ++b) prod *= mc.p[phi[b]];
      for (unsigned w = 0; w < g.n_white && prod != 0; ++w) {
        unsigned block = 0;  // a white vertex with no edges sits in the widest block
        for (int b : g.white_adj[w]) block = std::max(block, phi[b]);
        prod *= mc.q[block];
      }
      total += prod;
      size_t i = 0;
      while (i < phi.size() && ++phi[i] == ell) phi[i++] = 0;
      if (i == phi.size()) break;
    }
    return total;
  }
  std::vector<std::vector<int>> black_adj(g.n_black);
  for (unsigned w = 0; w < g.n_white; ++w)
    for (int b : g.white_adj[w]) black_adj[b].push_back(static_cast<int>(w));
  std::vector<BigInt> cum(ell + 1, 0);
  for (unsigned k = 0; k < ell; ++k) cum[k + 1] = cum[k] + mc.p[k];
  std::vector<unsigned> c(g.n_white, 0);
  BigInt total = 0;
  while (true) {
    BigInt prod = 1;
    for (unsigned w = 0; w < g.n_white && prod != 0; ++w) {
      unsigned next = c[w] + 1 < ell ? mc.q[c[w] + 1] : 0;
      prod *= BigInt(mc.q[c[w]]) - BigInt(next);
    }
    for (unsigned b = 0; b < g.n_black && prod != 0; ++b) {
      unsigned lo = ell - 1;  // a black vertex with no edges may use any block
      for (int w : black_adj[b]) lo = std::min(lo, c[w]);
      prod *= cum[lo + 1];
    }
    total += prod;
    size_t i = 0;
    while (i < c.size() && ++c[i] == ell) c[i++] = 0;
    if (i == c.size()) break;
  }
  return total;
}

inline BigInt count_embeddings_multirect(const BipartiteGraph& g, const YoungDiagram& lambda) {
  return count_embeddings_multirect(g, diagram_multirect(lambda));
}

inline std::vector<std::string> multirect_vars(unsigned ell) {
  std::vector<std::string> vars;
  for (unsigned i = 1; i <= ell; ++i) vars.push_back("p" + std::to_string(i));
  for (unsigned i = 1; i <= ell; ++i) vars.push_back("q" + std::to_string(i));
  return vars;
}

// Embedding series of multirectangular diagrams with ell symbolic blocks:
// sum over block assignments phi of the black vertices of
// prod_b p_{phi(b)} * prod_w q_{psi(w)} with psi(w) = max over the black
// neighborhood (blocks are numbered top-down, widths weakly decreasing).
inline MultivarPoly symbolic_multirect(const BipartiteGraph& g, unsigned ell) {
  if (ell == 0) throw std::invalid_argument("symbolic_multirect: need at least one block");
  MultivarPoly out(multirect_vars(ell));
  if (g.n_white > 0 && g.n_black == 0)
    throw std::invalid_argument("symbolic_multirect: isolated white vertices unsupported");
  std::vector<unsigned> phi(g.n_black, 0);
  while (true) {
    Monomial mono(2 * ell, 0);
    for (unsigned b = 0; b < g.n_black; ++b) mono[phi[b]]++;
    for (unsigned w = 0; w < g.n_white; ++w) {
      unsigned psi = 0;
      for (int b : g.white_adj[w]) psi = std::max(psi, phi[b]);
      mono[ell + psi]++;
    }
    out.add_term(mono, Rational(1));
    size_t i = 0;
    while (i < phi.size() && ++phi[i] == ell) phi[i++] = 0;
    if (i == phi.size()) break;
  }
  if (g.n_black == 0) return MultivarPoly::constant(multirect_vars(ell), Rational(1));
  return out;
}

}  // namespace jackmaps
