#include <sstream>

#include "json.hpp"
#include "twobridge/kakimizu.hpp"

namespace twobridge::kakimizu {

std::string export_json(const Slope& s, const QuotientComplex& qc, const HInvolutionReport& h,
                        const std::optional<HPrimeInvolutionReport>& hprime) {
  using nlohmann::json;
  json out;
  out["slope"] = s.to_string();
  out["n"] = qc.n;
  out["hopf"] = qc.hopf.indices;
  json vertices = json::array();
  for (const auto& v : qc.vertices) vertices.push_back(v.to_string());
  out["vertices"] = vertices;
  out["facets"] = qc.complex.facets();
  out["dim"] = qc.dimension();
  out["chi"] = qc.euler_characteristic();

  json hj;
  hj["vertex_action"] = h.vertex_action;
  if (h.fixed_vertex) {
    hj["fixed_vertex"] = *h.fixed_vertex;
  } else {
    hj["inverted_edge"] = {h.inverted_edge->first, h.inverted_edge->second};
  }
  out["h"] = hj;

  if (hprime) {
    json hp;
    hp["vertex_action"] = hprime->vertex_action;
    hp["fixed_vertices"] = hprime->fixed_vertices;
    hp["fixed_dimension"] = hprime->rank_dimension;
    hp["expected_dimension"] = hprime->expected_dimension;
    out["h_prime"] = hp;
  }
  return out.dump(2) + "\n";
}

std::string export_graph(const Slope& s, const QuotientComplex& qc) {
  std::ostringstream os;
  os << "graph \"MS(K(" << s.to_string() << "))\" {\n";
  for (std::size_t v = 0; v < qc.vertices.size(); ++v)
    os << "  " << v << " [label=\"" << qc.vertices[v].to_string() << "\"];\n";
  for (const auto& [x, y] : qc.complex.edges()) os << "  " << x << " -- " << y << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace twobridge::kakimizu
