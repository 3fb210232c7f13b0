// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "raag/conj.hpp"
#include "raag/cosets.hpp"
#include "raag/nilp.hpp"
#include "raag/pgroup.hpp"

using namespace raag;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int failures = 0;

void report(int id, bool ok, double secs, const std::string& detail) {
  std::printf("%s criterion %d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", id, detail.c_str(), secs);
  std::fflush(stdout);
  if (!ok) ++failures;
}

const char* const kRank3[] = {"discrete", "edge+isolated", "path", "triangle"};

struct Pair {
  Element g, h;
  bool conjugate = false;  // ball oracle verdict
};

// Pairs of length <= 6: a third independent, a third conjugated, a third
// with matching abelianization (letters of g shuffled, then conjugated).
std::vector<Pair> sample_pairs(const GraphPtr& graph, std::size_t count, std::mt19937_64& rng) {
  std::vector<Pair> out;
  while (out.size() < count) {
    Element g = oracle::random_element(graph, 6, rng);
    Element h;
    switch (out.size() % 3) {
      case 0:
        h = oracle::random_element(graph, 6, rng);
        break;
      case 1: {
        Element s = oracle::random_element(graph, 3, rng);
        h = s * g * s.inverse();
        break;
      }
      default: {
        std::vector<Letter> w = g.letters();
        std::shuffle(w.begin(), w.end(), rng);
        Element s = oracle::random_element(graph, 2, rng);
        h = s * Element::from_letters(graph, w) * s.inverse();
      }
    }
    if (h.length() > 6) continue;
    out.push_back({g, h, ball_oracle_conjugate(g, h, 6).found});
  }
  return out;
}

// Partial products may run longer than the radius when generators are long.
// Too small a cap can only lose elements, which shows up as a mismatch.
std::size_t subgroup_cap(const std::vector<Element>& gens, std::size_t radius) {
  std::size_t longest = 1;
  for (const auto& x : gens) longest = std::max(longest, x.length());
  return radius + std::min<std::size_t>(2 * (longest - 1), 8);
}

void criterion1() {
  auto t0 = Clock::now();
  std::size_t words = 0, agree = 0;
  for (const auto& ng : oracle::small_graphs(3))
    for (std::size_t len = 0; len <= 6; ++len)
      for (const auto& w : oracle::all_words(*ng.graph, len)) {
        ++words;
        if (Element::from_letters(ng.graph, w).letters() == oracle::rewrite_normal_form(*ng.graph, w)) ++agree;
      }
  double s = seconds_since(t0);
  report(1, agree == words && s <= 120.0, s,
         std::to_string(agree) + "/" + std::to_string(words) + " words agree with the rewriting oracle");
}

// Criteria 2, 3 and 8 share the sampled pair corpus.
std::vector<Pair> non_conjugate, conjugate_pairs;

void criteria_2_3() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  std::size_t pairs = 0, contradictions = 0, inconclusive = 0, witnesses = 0, bad_witnesses = 0;
  for (const char* kind : kRank3) {
    auto graph = oracle::rank3(kind).graph;
    for (const Pair& p : sample_pairs(graph, 520, rng)) {
      ++pairs;
      ConjugacyResult r = conjugate(p.g, p.h);
      if (r.is_inconclusive()) ++inconclusive;
      if (!r.is_inconclusive() && r.is_conjugate() != p.conjugate) ++contradictions;
      if (r.is_conjugate()) {
        ++witnesses;
        if (!(r.witness * p.g * r.witness.inverse() == p.h)) ++bad_witnesses;
      }
      (p.conjugate ? conjugate_pairs : non_conjugate).push_back(p);
    }
  }
  double s2 = seconds_since(t0);
  report(2, pairs >= 2000 && contradictions == 0 && inconclusive == 0 && s2 <= 600.0, s2,
         std::to_string(pairs) + " pairs, " + std::to_string(conjugate_pairs.size()) + " conjugate, " +
             std::to_string(contradictions) + " contradictions, " + std::to_string(inconclusive) + " inconclusive");
  report(3, bad_witnesses == 0 && witnesses > 0, s2,
         std::to_string(witnesses - bad_witnesses) + "/" + std::to_string(witnesses) + " witnesses verify");
}

void criterion8() {
  auto t8 = Clock::now();
  std::size_t tried = 0, separated = 0, false_separations = 0;
  for (std::size_t i = 0; i < non_conjugate.size() && tried < 100; i += 7) {
    const Pair& p = non_conjugate[i];
    ++tried;
    bool both = true;
    for (std::uint32_t prime : {2u, 3u}) {
      auto level = find_separating_level(p.g, p.h, prime, 6, 2);
      both = both && level.has_value() && level->d <= 6 && level->m <= 2;
    }
    if (both) ++separated;
  }
  for (const Pair& p : conjugate_pairs)
    for (std::uint32_t prime : {2u, 3u})
      if (find_separating_level(p.g, p.h, prime, 6, 2)) ++false_separations;
  double s8 = seconds_since(t8);
  report(8, tried == 100 && separated * 100 >= 95 * tried && false_separations == 0, s8,
         std::to_string(separated) + "/" + std::to_string(tried) + " separated for both p=2 and p=3, " +
             std::to_string(false_separations) + " false separations over " +
             std::to_string(conjugate_pairs.size()) + " conjugate pairs");
}

void criterion4() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(4);
  std::size_t sampled = 0, equal = 0;
  for (const char* kind : kRank3) {
    auto graph = oracle::rank3(kind).graph;
    for (int i = 0; i < 50; ++i) {
      Element g;
      do g = oracle::random_element(graph, 6, rng);
      while (g.is_identity());
      ++sampled;
      auto gens = centralizer(g);
      auto sub = oracle::subgroup_ball(graph, gens, 5, subgroup_cap(gens, 5));
      auto orc = oracle::ball_centralizer(g, 5);
      std::sort(orc.begin(), orc.end());
      if (sub == orc) ++equal;
    }
  }
  double s = seconds_since(t0);
  report(4, equal == sampled && sampled == 200, s,
         std::to_string(equal) + "/" + std::to_string(sampled) + " centralizers match on ball(5)");
}

void criterion5() {
  using namespace raag::pgroup;
  auto t0 = Clock::now();
  const WitnessParams params[] = {{2, 2, 1, 1}, {3, 2, 1, 1}, {2, 3, 1, 2}, {2, 3, 2, 1}};
  std::size_t passed = 0;
  std::string detail;
  for (const auto& q : params) {
    WitnessGroup b(q);
    std::uint64_t pr = 1;
    for (std::uint64_t k = 0; k < q.r; ++k) pr *= q.p;
    std::set<PGroupElement> orbit;
    for (std::uint64_t k = 0; k < pr; ++k) orbit.insert({b.apply_alpha(b.basis_vector(0).vector, k), 0});
    auto cls = b.conjugacy_class(b.phi('g'));
    bool ok = b.verify_relations() && b.alpha_order() == pr && cls == orbit && cls.size() == pr &&
              cls.count(b.phi('h')) == 0;
    if (ok) ++passed;
    detail += " (" + std::to_string(q.p) + "," + std::to_string(q.n) + "," + std::to_string(q.r) + "," +
              std::to_string(q.s) + ")|B|=" + std::to_string(b.order()) + (ok ? ":ok" : ":bad");
  }
  double s = seconds_since(t0);
  report(5, passed == 4 && s <= 60.0, s, std::to_string(passed) + "/4 parameter sets;" + detail);
}

void criterion6() {
  auto t0 = Clock::now();
  bool witt = lie_graded_dims(Graph::discrete({"a", "b"}), 5).dims == oracle::witt_dims(2, 5) &&
              oracle::witt_dims(2, 5) == std::vector<std::size_t>{2, 1, 2, 3, 6};
  bool complete = true;
  for (std::size_t r = 1; r <= 4; ++r) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < r; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<std::size_t> expected(5, 0);
    expected[0] = r;
    complete = complete && lie_graded_dims(Graph::complete(names), 5).dims == expected;
  }
  std::mt19937_64 rng(6);
  std::size_t pbw = 0;
  for (int i = 0; i < 10; ++i) {
    std::size_t n = 1 + rng() % 4;
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t v = 0; v < n; ++v) names.push_back(std::string(1, static_cast<char>('a' + v)));
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (rng() % 2) edges.emplace_back(names[u], names[v]);
    Graph g(names, edges);
    if (oracle::pbw_series(lie_graded_dims(g, 5).dims, 5) == oracle::clique_hilbert_series(g, 5)) ++pbw;
  }
  double s = seconds_since(t0);
  report(6, witt && complete && pbw == 10, s,
         std::string("witt ") + (witt ? "ok" : "bad") + ", complete graphs " + (complete ? "ok" : "bad") +
             ", PBW " + std::to_string(pbw) + "/10");
}

void criterion7() {
  auto t0 = Clock::now();
  std::size_t elements = 0, nontrivial = 0;
  for (const auto& ng : oracle::small_graphs(3)) {
    std::set<Element> seen;
    for (std::size_t len = 1; len <= 5; ++len)
      for (const auto& w : oracle::all_words(*ng.graph, len)) {
        Element x = Element::from_letters(ng.graph, w);
        if (x.is_identity() || !seen.insert(x).second) continue;
        ++elements;
        for (std::size_t d = 1; d <= 6; ++d)
          if (!magnus_image(x, d, 2, 1).is_one()) {
            ++nontrivial;
            break;
          }
      }
  }
  double s = seconds_since(t0);
  report(7, nontrivial == elements, s,
         std::to_string(nontrivial) + "/" + std::to_string(elements) + " elements have nontrivial images");
}

void criterion9() {
  auto t0 = Clock::now();
  std::size_t membership_checks = 0, membership_mismatch = 0, subgroup_checks = 0, subgroup_mismatch = 0;
  for (const auto& ng : oracle::small_graphs(3)) {
    const GraphPtr& graph = ng.graph;
    Engine engine(graph);
    auto ball = enumerate_ball(graph, 4, graph->all());
    const std::uint64_t subsets = std::uint64_t{1} << graph->size();
    for (std::uint64_t ab = 0; ab < subsets; ++ab)
      for (std::uint64_t bb = 0; bb < subsets; ++bb) {
        VertexSet a(ab), b(bb);
        auto cls = oracle::double_coset_classes(graph, a, b, 4, 6);
        for (std::size_t i = 0; i < ball.size(); ++i)
          for (std::size_t j = 0; j < ball.size(); ++j) {
            ++membership_checks;
            auto w = in_double_coset(ball[j], ball[i], a, b, engine.services(), graph->all());
            bool member = w.status == Membership::Member;
            if (w.status == Membership::Unknown || member != (cls[i] == cls[j])) ++membership_mismatch;
            if (member && !(w.left * ball[i] * w.right == ball[j])) ++membership_mismatch;
          }
        for (const Element& x : ball) {
          ++subgroup_checks;
          ConjugatedSubgroup c = intersect_conjugated(a, x, b, engine.services(), graph->all());
          std::vector<Element> gens;
          for (const auto& g : c.generators) gens.push_back(c.gamma.inverse() * g * c.gamma);
          auto sub = oracle::subgroup_ball(graph, gens, 4, subgroup_cap(gens, 4));
          std::vector<Element> expected;
          for (const Element& z : ball)
            if (z.in_special_subgroup(a) && (x.inverse() * z * x).in_special_subgroup(b)) expected.push_back(z);
          std::sort(expected.begin(), expected.end());
          if (sub != expected) ++subgroup_mismatch;
        }
      }
  }
  double s = seconds_since(t0);
  report(9, membership_mismatch == 0 && subgroup_mismatch == 0, s,
         std::to_string(membership_mismatch) + " membership mismatches in " + std::to_string(membership_checks) +
             ", " + std::to_string(subgroup_mismatch) + " intersection mismatches in " +
             std::to_string(subgroup_checks));
}

}  // namespace

int main() {
  criterion1();
  criteria_2_3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("%s: %d criterion failure(s)\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
