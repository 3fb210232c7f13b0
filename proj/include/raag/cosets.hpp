#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "raag/result.hpp"
#include "raag/words.hpp"

namespace raag {

// Callbacks into the recursive engine. Both act inside the special subgroup <universe>.
struct EngineServices {
  // Decides h in g^<s> with a witness sigma in <s>.
  std::function<ConjugacyResult(const Element& g, const Element& h, VertexSet s, VertexSet universe)>
      conjugate_under;
  // Generating set of the centralizer of g in <s>.
  std::function<std::vector<Element>(const Element& g, VertexSet s, VertexSet universe)> centralizer;
};

// left * <generators> * right
struct SpecialCoset {
  Element left;
  VertexSet generators;
  Element right;
};

struct CentralizerTerm {
  VertexSet subgroup;
  Element of;
};

struct ConjugatedTerm {
  Element conj;
  VertexSet generators;
};

// C_S(of) ∩ ⋂ conj_i <gens_i> conj_i^-1
struct SubgroupIntersectionSpec {
  std::optional<CentralizerTerm> centralizer_term;
  std::vector<ConjugatedTerm> conjugated_terms;
};

// conj * <generators> * conj^-1
struct Parabolic {
  Element conj;
  VertexSet generators;
  bool contains(const Element& x) const {
    return (conj.inverse() * x * conj).in_special_subgroup(generators);
  }
};

// rep * sub
struct ParabolicCoset {
  Element rep;
  Parabolic sub;
  bool contains(const Element& x) const { return sub.contains(rep.inverse() * x); }
};

struct DoubleCosetData {
  Element alpha;
  Element gamma;
};

enum class Membership { Member, NotMember, Unknown };

struct DoubleCosetWitness {
  Membership status = Membership::Unknown;
  Element left;   // in <a>
  Element right;  // in <b>; y = left * x * right
};

// gamma^-1 <generators> gamma
struct ConjugatedSubgroup {
  Element gamma;
  std::vector<Element> generators;
};

enum class CosetStatus { Witness, Empty, Inconclusive };

struct CosetIntersection {
  CosetStatus status = CosetStatus::Inconclusive;
  Element witness;
  std::string reason;
};

// Peels x = left * middle * right with left in <a>, right in <b> and middle (a,b)-reduced.
struct DoubleCosetSplit {
  Element left, middle, right;
};
DoubleCosetSplit minimal_double_coset_split(const Element& x, VertexSet a, VertexSet b);

DoubleCosetData canonical_double_coset_data(const Element& x, VertexSet a, VertexSet b);

DoubleCosetWitness in_double_coset(const Element& y, const Element& x, VertexSet a, VertexSet b,
                                   const EngineServices& services, VertexSet universe);

ConjugatedSubgroup intersect_conjugated(VertexSet a, const Element& x, VertexSet b,
                                        const EngineServices& services, VertexSet universe);

// <a> ∩ x <b> x^-1 as a conjugate of a special subgroup.
Parabolic parabolic_intersection(VertexSet a, const Element& x, VertexSet b);
Parabolic intersect_parabolics(const Parabolic& p, const Parabolic& q);

struct CosetMeet {
  Membership status = Membership::Unknown;
  ParabolicCoset coset;
};
CosetMeet intersect_cosets(const ParabolicCoset& c1, const ParabolicCoset& c2,
                           const EngineServices& services, VertexSet universe);

CosetIntersection coset_intersection_nonempty(const Element& base_rep, const SubgroupIntersectionSpec& spec,
                                              const std::vector<SpecialCoset>& double_cosets,
                                              std::size_t search_bound, const EngineServices& services,
                                              VertexSet universe);

// Generating set of the subgroup a spec denotes.
std::vector<Element> evaluate_intersection(const SubgroupIntersectionSpec& spec, const EngineServices& services,
                                           VertexSet universe);

// Drops identities and repeats (up to inversion); sorted shortlex.
std::vector<Element> tidy_generators(std::vector<Element> gens);

}  // namespace raag
