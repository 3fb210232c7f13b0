#pragma once

#include <optional>
#include <vector>

#include "raag/cosets.hpp"
#include "raag/hnn.hpp"
#include "raag/result.hpp"
#include "raag/words.hpp"

namespace raag {

struct ConjOptions {
  std::size_t radius = 6;        // ball-oracle fallback for conjugate_under
  std::size_t search_bound = 0;  // 0 selects 2(|g|+|h|+4)
};

// Recursive decision procedure; every call works inside a special subgroup <universe>
// and recursion strictly shrinks the universe.
class Engine {
 public:
  explicit Engine(GraphPtr g, ConjOptions opts = {});

  ConjugacyResult conjugate_under(const Element& g, const Element& h, VertexSet s, VertexSet universe) const;
  std::vector<Element> centralizer(const Element& g, VertexSet s, VertexSet universe) const;
  const EngineServices& services() const { return services_; }

 private:
  ConjugacyResult full_conjugacy(const Element& g, const Element& h, VertexSet universe) const;
  std::vector<Element> full_centralizer(const Element& g, VertexSet universe) const;

  GraphPtr graph_;
  ConjOptions opts_;
  EngineServices services_;
};

ConjugacyResult conjugate(const Element& g, const Element& h, const ConjOptions& opts = {});
ConjugacyResult conjugate_under(const Element& g, const Element& h, VertexSet s, const ConjOptions& opts = {});
std::vector<Element> centralizer(const Element& g);
std::optional<VertexSet> avoid_subgroup(const Element& g);

struct BallOracleResult {
  bool found = false;
  Element witness;
};
// Exhaustive test of every sigma in <s> with |sigma| <= radius.
BallOracleResult ball_oracle_conjugate(const Element& g, const Element& h, std::size_t radius);
BallOracleResult ball_oracle_conjugate(const Element& g, const Element& h, std::size_t radius, VertexSet s);

// Cached ball of <gens>; shared between oracle calls.
const std::vector<Element>& cached_ball(const GraphPtr& g, std::size_t radius, VertexSet gens);

}  // namespace raag
