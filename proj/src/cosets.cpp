#include "raag/cosets.hpp"

#include <algorithm>

namespace raag {

namespace {

Element letter_element(const GraphPtr& g, Letter l) { return Element::from_letters(g, std::span<const Letter>(&l, 1)); }

// Trailing letters of conj that lie in the subgroup do not change conj<gens>conj^-1.
Parabolic normalize(Parabolic p) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j : p.conj.last_positions()) {
      if (p.generators.contains(p.conj.letters()[j].vertex())) {
        p.conj = p.conj.without_position(j);
        changed = true;
        break;
      }
    }
  }
  return p;
}

VertexSet common_link(const Graph& g, VertexSet s) {
  VertexSet lk = g.all() - s;
  for (Vertex v : s.members()) lk = lk & g.link(v);
  return lk;
}

}  // namespace

DoubleCosetSplit minimal_double_coset_split(const Element& x, VertexSet a, VertexSet b) {
  const GraphPtr& g = x.graph_ptr();
  DoubleCosetSplit out{x.identity(), x, x.identity()};
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t f : out.middle.first_positions()) {
      Letter l = out.middle.letters()[f];
      if (!a.contains(l.vertex())) continue;
      out.left *= letter_element(g, l);
      out.middle = out.middle.without_position(f);
      changed = true;
      break;
    }
    for (std::size_t j : out.middle.last_positions()) {
      Letter l = out.middle.letters()[j];
      if (!b.contains(l.vertex())) continue;
      out.right = letter_element(g, l) * out.right;
      out.middle = out.middle.without_position(j);
      changed = true;
      break;
    }
  }
  return out;
}

DoubleCosetData canonical_double_coset_data(const Element& x, VertexSet a, VertexSet b) {
  Element gamma = (x.retract(b) * x.inverse()).retract(a);
  Element alpha = gamma * x * x.inverse().retract(b);
  return {alpha, gamma};
}

DoubleCosetWitness in_double_coset(const Element& y, const Element& x, VertexSet a, VertexSet b,
                                   const EngineServices& services, VertexSet universe) {
  if (y == x) return {Membership::Member, x.identity(), x.identity()};
  DoubleCosetData dx = canonical_double_coset_data(x, a, b);
  DoubleCosetData dy = canonical_double_coset_data(y, a, b);
  ConjugacyResult r = services.conjugate_under(dx.alpha, dy.alpha, a & b, universe);
  if (r.is_not_conjugate()) return {Membership::NotMember, {}, {}};
  if (!r.is_conjugate()) return {Membership::Unknown, {}, {}};
  const Element& s = r.witness;
  Element bx = x.inverse().retract(b);
  Element by = y.inverse().retract(b);
  DoubleCosetWitness w{Membership::Member, dy.gamma.inverse() * s * dx.gamma, bx * s.inverse() * by.inverse()};
  if (!(w.left * x * w.right == y) || !w.left.in_special_subgroup(a) || !w.right.in_special_subgroup(b))
    return {Membership::Unknown, {}, {}};
  return w;
}

ConjugatedSubgroup intersect_conjugated(VertexSet a, const Element& x, VertexSet b,
                                        const EngineServices& services, VertexSet universe) {
  DoubleCosetData d = canonical_double_coset_data(x, a, b);
  return {d.gamma, services.centralizer(d.alpha, a & b, universe)};
}

Parabolic parabolic_intersection(VertexSet a, const Element& x, VertexSet b) {
  DoubleCosetSplit s = minimal_double_coset_split(x, a, b);
  VertexSet gens = a & b & common_link(x.graph(), s.middle.support());
  return normalize({s.left, gens});
}

Parabolic intersect_parabolics(const Parabolic& p, const Parabolic& q) {
  Parabolic inner = parabolic_intersection(p.generators, p.conj.inverse() * q.conj, q.generators);
  return normalize({p.conj * inner.conj, inner.generators});
}

CosetMeet intersect_cosets(const ParabolicCoset& c1, const ParabolicCoset& c2, const EngineServices& services,
                           VertexSet universe) {
  const Element& d1 = c1.sub.conj;
  const Element& d2 = c2.sub.conj;
  Element z = d2.inverse() * c2.rep.inverse() * c1.rep * d1;
  Element w = d2.inverse() * d1;
  DoubleCosetWitness m = in_double_coset(z, w, c2.sub.generators, c1.sub.generators, services, universe);
  if (m.status != Membership::Member) return {m.status, {}};
  ParabolicCoset out{c1.rep * d1 * m.right.inverse() * d1.inverse(), intersect_parabolics(c1.sub, c2.sub)};
  if (!c1.contains(out.rep) || !c2.contains(out.rep)) return {Membership::Unknown, {}};
  return {Membership::Member, out};
}

CosetIntersection coset_intersection_nonempty(const Element& base_rep, const SubgroupIntersectionSpec& spec,
                                              const std::vector<SpecialCoset>& double_cosets,
                                              std::size_t search_bound, const EngineServices& services,
                                              VertexSet universe) {
  const GraphPtr& g = base_rep.graph_ptr();
  Element one = base_rep.identity();
  VertexSet base_gens = spec.centralizer_term ? spec.centralizer_term->subgroup : universe;

  std::vector<ParabolicCoset> pieces;
  for (const auto& t : spec.conjugated_terms) pieces.push_back({base_rep, {t.conj, t.generators}});
  for (const auto& dc : double_cosets)
    pieces.push_back({dc.left * dc.right, {dc.right.inverse(), dc.generators}});

  std::optional<Element> target;
  if (spec.centralizer_term) {
    const Element& of = spec.centralizer_term->of;
    target = base_rep * of * base_rep.inverse();
  }
  auto accepts = [&](const Element& s) {
    if (!(base_rep.inverse() * s).in_special_subgroup(base_gens)) return false;
    for (const auto& p : pieces)
      if (!p.contains(s)) return false;
    return !target || s * spec.centralizer_term->of * s.inverse() == *target;
  };
  auto bounded_search = [&](const char* why) -> CosetIntersection {
    std::size_t radius = std::min<std::size_t>(search_bound, 8);
    for (const Element& s : enumerate_ball(g, radius, base_gens)) {
      Element cand = base_rep * s;
      if (accepts(cand)) return {CosetStatus::Witness, cand, "bounded-search"};
    }
    return {CosetStatus::Inconclusive, {}, why};
  };

  if (accepts(base_rep)) return {CosetStatus::Witness, base_rep, "base-representative"};

  ParabolicCoset cur{base_rep, {one, base_gens}};
  for (const auto& p : pieces) {
    CosetMeet m = intersect_cosets(cur, p, services, universe);
    if (m.status == Membership::NotMember) return {CosetStatus::Empty, {}, "coset-intersection"};
    if (m.status == Membership::Unknown) return bounded_search("coset-intersection-unknown");
    cur = m.coset;
  }
  if (!spec.centralizer_term) return {CosetStatus::Witness, cur.rep, "coset-intersection"};

  const Element& of = spec.centralizer_term->of;
  const Element& d = cur.sub.conj;
  Element lhs = d.inverse() * of * d;
  Element rhs = d.inverse() * cur.rep.inverse() * *target * cur.rep * d;
  ConjugacyResult r = services.conjugate_under(lhs, rhs, cur.sub.generators, universe);
  if (r.is_not_conjugate()) return {CosetStatus::Empty, {}, "centralizer-coset"};
  if (!r.is_conjugate()) return bounded_search("centralizer-coset-unknown");
  Element sigma = cur.rep * d * r.witness * d.inverse();
  if (!accepts(sigma)) return bounded_search("centralizer-coset-unverified");
  return {CosetStatus::Witness, sigma, "centralizer-coset"};
}

std::vector<Element> evaluate_intersection(const SubgroupIntersectionSpec& spec, const EngineServices& services,
                                           VertexSet universe) {
  if (!spec.centralizer_term && spec.conjugated_terms.empty()) return {};
  GraphPtr g = spec.centralizer_term ? spec.centralizer_term->of.graph_ptr()
                                     : spec.conjugated_terms.front().conj.graph_ptr();
  Parabolic j{Element(g), spec.centralizer_term ? spec.centralizer_term->subgroup : universe};
  for (const auto& t : spec.conjugated_terms) j = intersect_parabolics(j, {t.conj, t.generators});

  std::vector<Element> gens;
  if (spec.centralizer_term) {
    Element inner = j.conj.inverse() * spec.centralizer_term->of * j.conj;
    for (const Element& c : services.centralizer(inner, j.generators, universe))
      gens.push_back(j.conj * c * j.conj.inverse());
  } else {
    for (Vertex v : j.generators.members()) gens.push_back(j.conj * Element::generator(g, v) * j.conj.inverse());
  }
  return tidy_generators(std::move(gens));
}

std::vector<Element> tidy_generators(std::vector<Element> gens) {
  std::vector<Element> out;
  for (auto& x : gens) {
    if (x.is_identity()) continue;
    Element xi = x.inverse();
    if (xi < x) x = xi;
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace raag
