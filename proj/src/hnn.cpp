#include "raag/hnn.hpp"

#include <stdexcept>

namespace raag {

HnnSplitting HnnSplitting::make(GraphPtr g, Vertex pivot) {
  VertexSet all = g->all();
  return make(std::move(g), all, pivot);
}

HnnSplitting HnnSplitting::make(GraphPtr g, VertexSet universe, Vertex pivot) {
  if (!universe.contains(pivot)) throw std::invalid_argument("pivot outside the universe");
  HnnSplitting s;
  s.universe = universe;
  s.pivot = pivot;
  s.base_vertices = universe.without(pivot);
  s.assoc_vertices = g->link(pivot) & universe;
  s.graph = std::move(g);
  return s;
}

std::vector<long> HnnWord::exponents() const {
  std::vector<long> out;
  for (const auto& s : syllables) out.push_back(s.exponent);
  return out;
}

bool HnnWord::is_reduced() const {
  for (std::size_t i = 0; i + 1 < syllables.size(); ++i)
    if (splitting.in_assoc(syllables[i].x)) return false;
  for (const auto& s : syllables)
    if (s.exponent == 0) return false;
  return true;
}

Element HnnWord::base_product() const {
  Element out = x0;
  for (const auto& s : syllables) out *= s.x;
  return out;
}

HnnWord decompose(const HnnSplitting& s, const Element& x) {
  HnnWord w{s, Element(s.graph), {}};
  for (Letter l : x.letters()) {
    Element e = Element::from_letters(s.graph, std::span<const Letter>(&l, 1));
    if (l.vertex() == s.pivot)
      w.syllables.push_back({l.sign(), Element(s.graph)});
    else if (w.syllables.empty())
      w.x0 *= e;
    else
      w.syllables.back().x *= e;
  }
  // Pinch t^a k t^b -> k t^(a+b) for k in K until reduced.
  for (bool changed = true; changed;) {
    changed = false;
    auto& syl = w.syllables;
    for (std::size_t i = 0; i + 1 < syl.size(); ++i) {
      if (!s.in_assoc(syl[i].x)) continue;
      Element& before = i == 0 ? w.x0 : syl[i - 1].x;
      before *= syl[i].x;
      long a = syl[i].exponent + syl[i + 1].exponent;
      if (a != 0) {
        syl[i] = {a, syl[i + 1].x};
      } else {
        before *= syl[i + 1].x;
        syl.erase(syl.begin() + static_cast<std::ptrdiff_t>(i));
      }
      syl.erase(syl.begin() + static_cast<std::ptrdiff_t>(i + (a != 0 ? 1 : 0)));
      changed = true;
      break;
    }
  }
  return w;
}

Element recompose(const HnnWord& w) {
  Element out = w.x0;
  for (const auto& s : w.syllables) {
    out *= w.splitting.t(s.exponent);
    out *= s.x;
  }
  return out;
}

HnnCyclic cyclically_reduce(const HnnSplitting& s, const Element& x) {
  // Works on the syllables directly: x0 may commute with t, so renormalizing
  // the element would put it straight back in front.
  HnnWord w = decompose(s, x);
  Element conj(s.graph);
  while (w.n() > 0) {
    if (!w.x0.is_identity()) {
      conj *= w.x0;
      w.syllables.back().x *= w.x0;
      w.x0 = Element(s.graph);
      continue;
    }
    if (w.n() < 2 || !s.in_assoc(w.syllables.back().x)) break;
    HnnSyllable last = w.syllables.back();
    w.syllables.pop_back();
    conj *= last.x.inverse() * s.t(-last.exponent);
    HnnSyllable& first = w.syllables.front();
    first.exponent += last.exponent;
    first.x = last.x * first.x;
    if (first.exponent == 0) {
      w.x0 = first.x;
      w.syllables.erase(w.syllables.begin());
      if (w.n() == 0) break;
    }
  }
  return {conj, w};
}

std::vector<HnnWord> cyclic_permutations(const HnnWord& w) {
  if (w.n() == 0) throw std::invalid_argument("cyclic permutations need n >= 1");
  std::vector<HnnWord> out;
  for (std::size_t k = 0; k < w.n(); ++k) {
    HnnWord r{w.splitting, Element(w.splitting.graph), {}};
    for (std::size_t i = 0; i < w.n(); ++i) r.syllables.push_back(w.syllables[(k + i) % w.n()]);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Element> prefixes(const HnnWord& w) {
  std::vector<Element> out{w.x0};
  Element p = w.x0;
  for (const auto& s : w.syllables) {
    p *= w.splitting.t(s.exponent);
    p *= s.x;
    out.push_back(p);
  }
  out.front() = Element(w.splitting.graph);
  return out;
}

Element natural_projection(const HnnSplitting& s, const Element& x) { return x.retract(s.base_vertices); }

SubgroupIntersectionSpec centralizer_of_reduced(const HnnSplitting& s, const HnnWord& w, VertexSet subgroup) {
  if (w.n() == 0) throw std::invalid_argument("centralizer_of_reduced needs n >= 1");
  SubgroupIntersectionSpec spec;
  spec.centralizer_term = CentralizerTerm{subgroup, w.base_product()};
  Element q = w.x0;
  for (std::size_t i = 0; i < w.n(); ++i) {
    spec.conjugated_terms.push_back({q, s.assoc_vertices});
    q *= w.syllables[i].x;
  }
  return spec;
}

std::vector<Element> centralizer_cyclic(const HnnSplitting& s, const HnnWord& w, const EngineServices& services) {
  if (w.n() == 0) throw std::invalid_argument("centralizer_cyclic needs n >= 1");
  Element g = recompose(w);
  if (s.in_assoc(w.syllables.back().x)) {
    std::vector<Element> gens = services.centralizer(w.syllables.back().x, s.assoc_vertices, s.base_vertices);
    gens.push_back(s.t());
    return tidy_generators(std::move(gens));
  }
  std::vector<Element> gens = services.centralizer(g, s.assoc_vertices, s.universe);
  gens.push_back(g);
  for (const Element& p : prefixes(w)) {
    Element conj = p.inverse() * g * p;
    ConjugacyResult r = services.conjugate_under(g, conj, s.assoc_vertices, s.universe);
    if (r.is_conjugate()) gens.push_back(r.witness.inverse() * p.inverse());
  }
  return tidy_generators(std::move(gens));
}

ConjugacyResult minasyan_conjugate_under(const HnnSplitting& s, const HnnWord& g, const HnnWord& h,
                                         VertexSet subgroup, const EngineServices& services,
                                         std::size_t search_bound) {
  if (g.exponents() != h.exponents()) return ConjugacyResult::not_conjugate("exponent-pattern").via("minasyan-1");
  Element x = g.base_product();
  Element y = h.base_product();
  ConjugacyResult base = services.conjugate_under(x, y, subgroup, s.base_vertices);
  if (base.is_not_conjugate()) return ConjugacyResult::not_conjugate(base.reason).via("minasyan-2");
  if (!base.is_conjugate()) return base.via("minasyan-2");

  std::vector<SpecialCoset> cosets;
  Element p = h.x0, q = g.x0;
  for (std::size_t i = 0; i < g.n(); ++i) {
    cosets.push_back({p, s.assoc_vertices, q.inverse()});
    p *= h.syllables[i].x;
    q *= g.syllables[i].x;
  }
  SubgroupIntersectionSpec spec;
  spec.centralizer_term = CentralizerTerm{subgroup, x};
  if (search_bound == 0) search_bound = 2 * (recompose(g).length() + recompose(h).length() + 4);
  CosetIntersection m =
      coset_intersection_nonempty(base.witness, spec, cosets, search_bound, services, s.base_vertices);
  if (m.status == CosetStatus::Empty) return ConjugacyResult::not_conjugate(m.reason).via("minasyan-3");
  if (m.status == CosetStatus::Inconclusive) return ConjugacyResult::inconclusive(m.reason).via("minasyan-3");
  if (!(m.witness * recompose(g) * m.witness.inverse() == recompose(h)))
    return ConjugacyResult::inconclusive("unverified-witness").via("minasyan-3");
  return ConjugacyResult::conjugate(m.witness, m.reason).via("minasyan-3");
}

}  // namespace raag
