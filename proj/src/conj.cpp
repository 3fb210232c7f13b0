#include "raag/conj.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace raag {

namespace {

bool same_graph(const Element& a, const Element& b) {
  return a.graph_ptr() == b.graph_ptr() || a.graph() == b.graph();
}

}  // namespace

Engine::Engine(GraphPtr g, ConjOptions opts) : graph_(std::move(g)), opts_(opts) {
  services_.conjugate_under = [this](const Element& a, const Element& b, VertexSet s, VertexSet u) {
    return conjugate_under(a, b, s, u);
  };
  services_.centralizer = [this](const Element& a, VertexSet s, VertexSet u) { return centralizer(a, s, u); };
}

ConjugacyResult Engine::conjugate_under(const Element& g, const Element& h, VertexSet s, VertexSet universe) const {
  if (g == h) return ConjugacyResult::conjugate(g.identity(), "identical");
  if (s.empty()) return ConjugacyResult::not_conjugate("trivial-subgroup");
  if (g.abelianization() != h.abelianization()) return ConjugacyResult::not_conjugate("abelianization");
  if (s == universe) return full_conjugacy(g, h, universe);

  // Conjugating by <s> fixes the image under the retraction onto the rest.
  VertexSet rest = universe - s;
  if (!(g.retract(rest) == h.retract(rest))) return ConjugacyResult::not_conjugate("retraction");

  HnnSplitting split = HnnSplitting::make(graph_, universe, rest.last());
  bool gin = split.in_base(g), hin = split.in_base(h);
  if (gin && hin) return conjugate_under(g, h, s, split.base_vertices);
  if (gin != hin) return ConjugacyResult::not_conjugate("pivot-membership");
  return minasyan_conjugate_under(split, decompose(split, g), decompose(split, h), s, services_, opts_.search_bound)
      .via("minasyan");
}

ConjugacyResult Engine::full_conjugacy(const Element& g, const Element& h, VertexSet universe) const {
  HnnSplitting split = HnnSplitting::make(graph_, universe, universe.last());
  HnnCyclic cg = cyclically_reduce(split, g);
  HnnCyclic ch = cyclically_reduce(split, h);
  std::size_t n = cg.core.n();
  if (n != ch.core.n()) return ConjugacyResult::not_conjugate("exponent-pattern").via("collins");

  if (n == 0) {
    ConjugacyResult r = conjugate_under(cg.core.x0, ch.core.x0, split.base_vertices, split.base_vertices);
    if (r.is_conjugate()) r.witness = ch.conjugator * r.witness * cg.conjugator.inverse();
    return r.via("base");
  }

  Element g0 = recompose(cg.core);
  Element h0 = recompose(ch.core);
  std::vector<Element> ph = prefixes(ch.core);
  auto rotations = cyclic_permutations(ch.core);
  bool unknown = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (rotations[k].exponents() != cg.core.exponents()) continue;
    // sigma h* sigma^-1 = g0 with sigma in K
    ConjugacyResult r = minasyan_conjugate_under(split, rotations[k], cg.core, split.assoc_vertices, services_,
                                                 opts_.search_bound);
    if (r.is_conjugate()) {
      Element w = ch.conjugator * ph[k] * r.witness.inverse() * cg.conjugator.inverse();
      ConjugacyResult out = ConjugacyResult::conjugate(w, "collins");
      out.path.insert(out.path.end(), r.path.begin(), r.path.end());
      return out;
    }
    if (r.is_inconclusive()) unknown = true;
  }
  (void)g0;
  (void)h0;
  if (unknown) return ConjugacyResult::inconclusive("collins");
  return ConjugacyResult::not_conjugate("cyclic-permutations").via("collins");
}

std::vector<Element> Engine::centralizer(const Element& g, VertexSet s, VertexSet universe) const {
  if (s.empty()) return {};
  if (g.is_identity()) {
    std::vector<Element> gens;
    for (Vertex v : s.members()) gens.push_back(Element::generator(graph_, v));
    return gens;
  }
  if (s == universe) return full_centralizer(g, universe);
  HnnSplitting split = HnnSplitting::make(graph_, universe, (universe - s).last());
  if (split.in_base(g)) return centralizer(g, s, split.base_vertices);
  HnnWord w = decompose(split, g);
  return evaluate_intersection(centralizer_of_reduced(split, w, s), services_, split.base_vertices);
}

std::vector<Element> Engine::full_centralizer(const Element& g, VertexSet universe) const {
  HnnSplitting split = HnnSplitting::make(graph_, universe, universe.last());
  HnnCyclic c = cyclically_reduce(split, g);
  std::vector<Element> gens;
  Element conj = c.conjugator;
  if (c.core.n() == 0) {
    CyclicForm cf = cyclic_normal_form(c.core.x0);
    conj *= cf.conjugator;
    gens = centralizer(cf.core, split.base_vertices, split.base_vertices);
    if (cf.core.support().subset_of(split.assoc_vertices)) gens.push_back(split.t());
  } else {
    gens = centralizer_cyclic(split, c.core, services_);
  }
  for (auto& x : gens) x = conj * x * conj.inverse();
  return tidy_generators(std::move(gens));
}

namespace {

std::vector<std::string> certify_difference(const Element& g, const Element& h) {
  if (g.abelianization() != h.abelianization()) return {"abelianization"};
  if (!(cyclic_normal_form(g).core == cyclic_normal_form(h).core)) return {"cyclic-normal-form"};
  return {};
}

ConjugacyResult decide_by_cyclic_form(const Element& g, const Element& h, ConjugacyResult engine) {
  CyclicForm fg = cyclic_normal_form(g), fh = cyclic_normal_form(h);
  ConjugacyResult out;
  if (fg.core == fh.core) {
    out = ConjugacyResult::conjugate(fh.conjugator * fg.conjugator.inverse(), "cyclic-normal-form-fallback");
  } else {
    out = ConjugacyResult::not_conjugate(g.abelianization() != h.abelianization() ? "abelianization"
                                                                                   : "cyclic-normal-form");
    out.path = {"cyclic-normal-form-fallback"};
  }
  out.path.insert(out.path.begin(), engine.path.begin(), engine.path.end());
  return out;
}

}  // namespace

ConjugacyResult conjugate(const Element& g, const Element& h, const ConjOptions& opts) {
  if (!same_graph(g, h)) throw WordError("elements belong to different graphs");
  Engine engine(g.graph_ptr(), opts);
  ConjugacyResult r = engine.conjugate_under(g, h, g.graph().all(), g.graph().all());
  if (r.is_conjugate()) {
    if (r.witness * g * r.witness.inverse() == h) return r;
    return decide_by_cyclic_form(g, h, r);
  }
  if (r.is_not_conjugate()) {
    auto cert = certify_difference(g, h);
    if (cert.empty()) return decide_by_cyclic_form(g, h, r);
    r.reason = cert.front();
    return r;
  }
  return decide_by_cyclic_form(g, h, r);
}

ConjugacyResult conjugate_under(const Element& g, const Element& h, VertexSet s, const ConjOptions& opts) {
  if (!same_graph(g, h)) throw WordError("elements belong to different graphs");
  if (!s.subset_of(g.graph().all())) throw GraphError("vertex set is not contained in the graph");
  if (s == g.graph().all()) return conjugate(g, h, opts);
  Engine engine(g.graph_ptr(), opts);
  ConjugacyResult r = engine.conjugate_under(g, h, s, g.graph().all());
  if (r.is_conjugate() && r.witness.in_special_subgroup(s) && r.witness * g * r.witness.inverse() == h) return r;
  if (r.is_not_conjugate()) return r;
  BallOracleResult b = ball_oracle_conjugate(g, h, opts.radius, s);
  if (b.found) {
    ConjugacyResult out = ConjugacyResult::conjugate(b.witness, "ball-oracle");
    out.path.insert(out.path.begin(), r.path.begin(), r.path.end());
    return out;
  }
  r.path.push_back("ball-oracle-exhausted");
  r.status = Verdict::Inconclusive;
  return r;
}

std::vector<Element> centralizer(const Element& g) {
  Engine engine(g.graph_ptr());
  return engine.centralizer(g, g.graph().all(), g.graph().all());
}

std::optional<VertexSet> avoid_subgroup(const Element& g) {
  if (g.is_identity()) return std::nullopt;
  VertexSet supp = cyclic_normal_form(g).core.support();
  VertexSet all = g.graph().all();
  for (Vertex v = static_cast<Vertex>(g.graph().size()); v-- > 0;) {
    if (supp.contains(v)) return all.without(v);
  }
  return std::nullopt;
}

const std::vector<Element>& cached_ball(const GraphPtr& g, std::size_t radius, VertexSet gens) {
  static std::mutex mu;
  static std::map<std::tuple<std::string, std::size_t, std::uint64_t>, std::unique_ptr<std::vector<Element>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(g->to_json(), radius, gens.bits());
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<std::vector<Element>>(enumerate_ball(g, radius, gens))).first;
  return *it->second;
}

BallOracleResult ball_oracle_conjugate(const Element& g, const Element& h, std::size_t radius) {
  return ball_oracle_conjugate(g, h, radius, g.graph().all());
}

BallOracleResult ball_oracle_conjugate(const Element& g, const Element& h, std::size_t radius, VertexSet s) {
  if (g == h) return {true, g.identity()};
  for (const Element& sigma : cached_ball(g.graph_ptr(), radius, s)) {
    if (sigma * g == h * sigma) return {true, sigma};
  }
  return {false, {}};
}

}  // namespace raag
