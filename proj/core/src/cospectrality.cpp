#include "cospec/cospectrality.hpp"

#include <stdexcept>

namespace cospec {

bool is_cospectral(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return false;
    return charpoly_exact(g) == charpoly_exact(h);
}

bool is_generalized_cospectral(const Graph& g, const Graph& h) {
    return is_cospectral(g, h) && is_cospectral(complement(g), complement(h));
}

bool is_generalized_cospectral_via_cone(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return false;
    return is_cospectral(g, h) &&
           is_cospectral(overgraph(g, ones_bits(g.order())), overgraph(h, ones_bits(h.order())));
}

std::string to_string(CospecLevel level) {
    switch (level) {
        case CospecLevel::not_cospectral: return "not_cospectral";
        case CospecLevel::cospectral: return "cospectral";
        case CospecLevel::generalized_cospectral: return "generalized_cospectral";
    }
    return "?";
}

namespace {

CospecLevel level_of(const IntPoly& chi_g, const IntPoly& chi_h, const IntPoly& chi_gc, const IntPoly& chi_hc) {
    if (!(chi_g == chi_h)) return CospecLevel::not_cospectral;
    return chi_gc == chi_hc ? CospecLevel::generalized_cospectral : CospecLevel::cospectral;
}

} // namespace

CospectralityReport compare_graphs(const Graph& g, const Graph& h) {
    CospectralityReport rep;
    const IntPoly chi_g = charpoly_exact(g);
    const IntPoly chi_h = charpoly_exact(h);
    const IntPoly chi_gc = charpoly_exact(complement(g));
    const IntPoly chi_hc = charpoly_exact(complement(h));
    rep.level = level_of(chi_g, chi_h, chi_gc, chi_hc);
    rep.witness_polys = {{"a", chi_g}, {"b", chi_h}, {"a_complement", chi_gc}, {"b_complement", chi_hc}};
    return rep;
}

CospectralityReport is_rooted_generalized_cospectral(const RootedGraph& rg, const RootedGraph& rh) {
    if (rg.root < 0 || rg.root >= rg.graph.order() || rh.root < 0 || rh.root >= rh.graph.order())
        throw std::out_of_range("root index out of range");

    CospectralityReport rep = compare_graphs(rg.graph, rh.graph);
    rep.has_roots = true;

    const Graph gm = delete_vertex(rg.graph, rg.root);
    const Graph hm = delete_vertex(rh.graph, rh.root);
    const IntPoly chi_gm = charpoly_exact(gm);
    const IntPoly chi_hm = charpoly_exact(hm);
    const IntPoly chi_gmc = charpoly_exact(complement(gm));
    const IntPoly chi_hmc = charpoly_exact(complement(hm));

    rep.rooted_generalized = rep.level == CospecLevel::generalized_cospectral && chi_gm == chi_hm &&
                             chi_gmc == chi_hmc;
    rep.witness_polys.push_back({"a_minus_root", chi_gm});
    rep.witness_polys.push_back({"b_minus_root", chi_hm});
    rep.witness_polys.push_back({"a_minus_root_complement", chi_gmc});
    rep.witness_polys.push_back({"b_minus_root_complement", chi_hmc});
    return rep;
}

} // namespace cospec
