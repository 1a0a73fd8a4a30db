#include "stag/params.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <sstream>

#include "json.hpp"
#include "stag/connectivity.hpp"
#include "stag/error.hpp"
#include "stag/kernels/symdiff.hpp"

namespace stag {

bool ParamReport::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const ParamVerdict& v) { return !v.applicable || v.holds; });
}

int graph_diameter(const Graph& h) {
  const int n = h.vertex_count();
  int best = 0;
  std::vector<int> dist(static_cast<std::size_t>(n));
  for (VertexId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<VertexId> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    int reached = 1;
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      for (const auto& inc : h.incident(v)) {
        auto& d = dist[static_cast<std::size_t>(inc.neighbor)];
        if (d != -1) continue;
        d = dist[static_cast<std::size_t>(v)] + 1;
        best = std::max(best, d);
        ++reached;
        q.push(inc.neighbor);
      }
    }
    if (reached != n) throw Error(ErrorKind::Disconnected, "graph is not connected");
  }
  return best;
}

int exchange_diameter(const StagGraph& s) {
  if (!s.annotated()) throw Error(ErrorKind::Unannotated, "STAG carries no trees");
  const auto packed = kernels::pack_trees(s.trees, s.origin->edge_count());
  std::vector<std::uint32_t> diff(packed.count);
  std::uint32_t best = 0;
  for (std::size_t i = 0; i < packed.count; ++i) {
    kernels::symdiff_row(packed.row(i), packed.data.data(), packed.count, packed.words, diff.data());
    for (std::size_t j = 0; j < packed.count; ++j) best = std::max(best, diff[j]);
  }
  return static_cast<int>(best / 2);
}

ParamReport param_report(const Graph& g, std::size_t max_trees, int max_n) {
  const StagGraph s = build_stag(g, max_trees);
  const Graph& h = s.graph;
  ParamReport r;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.aux_vertices = h.vertex_count();
  r.aux_edges = h.edge_count();
  r.min_degree_aux = h.vertex_count() == 0 ? 0 : h.degree(0);
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    r.min_degree_aux = std::min(r.min_degree_aux, h.degree(v));
    r.max_degree_aux = std::max(r.max_degree_aux, h.degree(v));
  }
  r.diameter_aux = graph_diameter(h);
  r.exchange_diameter = exchange_diameter(s);
  for (const auto& c : maximal_cliques(h)) r.clique_number_aux = std::max(r.clique_number_aux, static_cast<int>(c.size()));

  const long long n = r.n, m = r.m, nullity = m - n + 1;
  if (nullity > 0) r.circumference = circumference(g, max_n);
  const auto cuts = minimal_edge_cuts(g, max_n);
  for (const auto& c : cuts)
    r.max_minimal_cut = std::max(r.max_minimal_cut.value_or(0), static_cast<int>(c.edge_ids.size()));

  auto upper = [&](std::string name, std::string rel, long long lhs, long long rhs) {
    r.verdicts.push_back({std::move(name), std::move(rel), true, lhs <= rhs, lhs, rhs, rhs - lhs});
  };
  upper("max_degree", "Delta(Aux) <= (n-1)(m-n+1)", r.max_degree_aux, (n - 1) * nullity);
  r.verdicts.push_back({"min_degree", "delta(Aux) >= 2(m-n+1)", true, r.min_degree_aux >= 2 * nullity,
                        r.min_degree_aux, 2 * nullity, r.min_degree_aux - 2 * nullity});
  upper("diameter", "diam(Aux) <= n-1", r.diameter_aux, n - 1);
  r.verdicts.push_back({"exchange_distance", "diam(Aux) = max |T xor T'|/2", true,
                        r.diameter_aux == r.exchange_diameter, r.diameter_aux, r.exchange_diameter,
                        r.exchange_diameter - r.diameter_aux});
  ParamVerdict omega{"clique_number", "omega(Aux) = max(circumference, max minimal cut)", false, true,
                     r.clique_number_aux, 0, 0};
  if (r.circumference) {
    omega.applicable = true;
    omega.rhs = std::max(*r.circumference, r.max_minimal_cut.value_or(0));
    omega.holds = omega.lhs == omega.rhs;
    omega.slack = omega.rhs - omega.lhs;
  }
  r.verdicts.push_back(std::move(omega));
  return r;
}

std::string report_to_json(const ParamReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["aux_vertices"] = r.aux_vertices;
  j["aux_edges"] = r.aux_edges;
  j["min_degree_aux"] = r.min_degree_aux;
  j["max_degree_aux"] = r.max_degree_aux;
  j["diameter_aux"] = r.diameter_aux;
  j["exchange_diameter"] = r.exchange_diameter;
  j["clique_number_aux"] = r.clique_number_aux;
  j["circumference"] = r.circumference ? nlohmann::ordered_json(*r.circumference) : nlohmann::ordered_json(nullptr);
  j["max_minimal_cut"] =
      r.max_minimal_cut ? nlohmann::ordered_json(*r.max_minimal_cut) : nlohmann::ordered_json(nullptr);
  j["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& v : r.verdicts) {
    nlohmann::ordered_json e;
    e["name"] = v.name;
    e["relation"] = v.relation;
    e["status"] = !v.applicable ? "skipped" : v.holds ? "holds" : "violated";
    e["lhs"] = v.lhs;
    e["rhs"] = v.rhs;
    e["slack"] = v.slack;
    j["verdicts"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string report_to_text(const ParamReport& r) {
  std::ostringstream out;
  out << "n " << r.n << "  m " << r.m << "  |V(Aux)| " << r.aux_vertices << "  |E(Aux)| " << r.aux_edges << "\n";
  out << "delta " << r.min_degree_aux << "  Delta " << r.max_degree_aux << "  diam " << r.diameter_aux
      << "  omega " << r.clique_number_aux << "\n";
  out << "circumference " << (r.circumference ? std::to_string(*r.circumference) : "-") << "  max minimal cut "
      << (r.max_minimal_cut ? std::to_string(*r.max_minimal_cut) : "-") << "\n\n";
  std::size_t width = 0;
  for (const auto& v : r.verdicts) width = std::max(width, v.relation.size());
  for (const auto& v : r.verdicts) {
    const char* status = !v.applicable ? "skipped" : v.holds ? "holds" : "VIOLATED";
    out << v.relation << std::string(width - v.relation.size() + 2, ' ') << status;
    if (v.applicable) out << "  (" << v.lhs << " vs " << v.rhs << ", slack " << v.slack << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace stag
