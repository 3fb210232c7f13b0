#pragma once

#include <vector>

#include "raag/cosets.hpp"
#include "raag/result.hpp"
#include "raag/words.hpp"

namespace raag {

// <universe> as the HNN extension of H = <universe - t> along K = <link(t) ∩ universe>.
struct HnnSplitting {
  GraphPtr graph;
  VertexSet universe;
  Vertex pivot = 0;
  VertexSet base_vertices;
  VertexSet assoc_vertices;

  static HnnSplitting make(GraphPtr g, Vertex pivot);
  static HnnSplitting make(GraphPtr g, VertexSet universe, Vertex pivot);

  bool in_base(const Element& x) const { return x.in_special_subgroup(base_vertices); }
  bool in_assoc(const Element& x) const { return x.in_special_subgroup(assoc_vertices); }
  Element t(long power = 1) const { return Element::generator(graph, pivot, 1).pow(power); }
};

struct HnnSyllable {
  long exponent = 0;
  Element x;
};

// x0 t^a1 x1 ... t^an xn
struct HnnWord {
  HnnSplitting splitting;
  Element x0;
  std::vector<HnnSyllable> syllables;

  std::size_t n() const { return syllables.size(); }
  std::vector<long> exponents() const;
  bool is_reduced() const;
  // x0 x1 ... xn
  Element base_product() const;
};

HnnWord decompose(const HnnSplitting& s, const Element& x);
Element recompose(const HnnWord& w);

struct HnnCyclic {
  Element conjugator;
  HnnWord core;  // x0 = 1 when n >= 1; otherwise x0 holds the core in H
};
HnnCyclic cyclically_reduce(const HnnSplitting& s, const Element& x);

std::vector<HnnWord> cyclic_permutations(const HnnWord& w);
std::vector<Element> prefixes(const HnnWord& w);
Element natural_projection(const HnnSplitting& s, const Element& x);

SubgroupIntersectionSpec centralizer_of_reduced(const HnnSplitting& s, const HnnWord& w, VertexSet subgroup);
std::vector<Element> centralizer_cyclic(const HnnSplitting& s, const HnnWord& w, const EngineServices& services);

ConjugacyResult minasyan_conjugate_under(const HnnSplitting& s, const HnnWord& g, const HnnWord& h,
                                         VertexSet subgroup, const EngineServices& services,
                                         std::size_t search_bound = 0);

}  // namespace raag
