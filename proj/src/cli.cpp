#include "raag/cli.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "raag/conj.hpp"
#include "raag/cosets.hpp"
#include "raag/hnn.hpp"
#include "raag/nilp.hpp"
#include "raag/pgroup.hpp"

namespace raag::cli {

namespace {

struct Options {
  std::string graph_path;
  std::vector<std::string> words;
  std::size_t radius = 6;
  std::size_t search_bound = 0;
  std::size_t max_degree = 6;
  std::uint32_t p = 2;
  unsigned m = 2;
  std::string subgroup, left, right, pivot;
  std::uint64_t pn = 2, pr = 1, ps = 1;
  std::uint32_t lie_p = 0;  // 0 selects Q
};

int report(const ConjugacyResult& r, std::ostream& out) {
  switch (r.status) {
    case Verdict::Conjugate:
      out << "CONJUGATE BY: " << r.witness.to_string() << "\n";
      return 0;
    case Verdict::NotConjugate:
      out << "NOT CONJUGATE (" << r.reason << ")\n";
      return 0;
    case Verdict::Inconclusive:
      out << "INCONCLUSIVE (" << r.path_string() << ")\n";
      return 2;
  }
  return 1;
}

int dispatch(const std::string& cmd, const Options& o, std::ostream& out) {
  if (cmd == "pgroup-witness") {
    pgroup::WitnessParams params{o.p, o.pn, o.pr, o.ps};
    pgroup::WitnessGroup b(params);
    auto g = b.phi('g'), h = b.phi('h');
    auto cls = b.conjugacy_class(g);
    std::set<pgroup::PGroupElement> orbit;
    for (std::uint64_t k = 0; k < b.alpha_period(); ++k) orbit.insert({b.apply_alpha(g.vector, k), 0});
    out << "params: p=" << params.p << " n=" << params.n << " r=" << params.r << " s=" << params.s << "\n";
    out << "|A| = " << b.order_of_a() << "\n";
    out << "|B| = " << b.order() << "\n";
    out << "order(alpha) = " << b.alpha_order() << "\n";
    out << "relations hold: " << (b.verify_relations() ? "YES" : "NO") << "\n";
    out << "class(phi_g) size = " << cls.size() << "\n";
    out << "class(phi_g) = alpha orbit of x1: " << (cls == orbit ? "YES" : "NO") << "\n";
    out << "phi_h conjugate to phi_g: " << (cls.count(h) ? "YES" : "NO") << "\n";
    return 0;
  }

  GraphPtr g = make_graph(Graph::load(o.graph_path));
  auto word = [&](std::size_t i) {
    if (i >= o.words.size()) throw CLI::ValidationError("missing word argument");
    return Element::parse(g, o.words[i]);
  };
  ConjOptions copts{o.radius, o.search_bound};

  if (cmd == "normal-form") {
    out << word(0).to_string() << "\n";
    return 0;
  }
  if (cmd == "equal") {
    out << (word(0) == word(1) ? "EQUAL" : "NOT EQUAL") << "\n";
    return 0;
  }
  if (cmd == "conjugate") return report(conjugate(word(0), word(1), copts), out);
  if (cmd == "conjugate-under") return report(conjugate_under(word(0), word(1), g->parse_set(o.subgroup), copts), out);
  if (cmd == "centralizer") {
    for (const Element& x : centralizer(word(0))) out << "generator: " << x.to_string() << "\n";
    return 0;
  }
  if (cmd == "double-coset") {
    Engine engine(g, copts);
    Element y = word(0), x = word(1);
    VertexSet a = g->parse_set(o.left), b = g->parse_set(o.right);
    DoubleCosetWitness w = in_double_coset(y, x, a, b, engine.services(), g->all());
    if (w.status == Membership::Member) {
      out << "MEMBER: " << w.left.to_string() << " | " << w.right.to_string() << "\n";
      return 0;
    }
    if (w.status == Membership::NotMember) {
      out << "NOT MEMBER\n";
      return 0;
    }
    out << "INCONCLUSIVE\n";
    return 2;
  }
  if (cmd == "hnn-decompose") {
    if (g->size() == 0) throw CLI::ValidationError("the graph has no vertices");
    Vertex t = o.pivot.empty() ? static_cast<Vertex>(g->size() - 1) : g->index(o.pivot);
    HnnSplitting s = HnnSplitting::make(g, t);
    HnnWord w = decompose(s, word(0));
    out << "pivot: " << g->name(t) << "\n";
    out << "n: " << w.n() << "\n";
    out << "exponents:";
    for (long a : w.exponents()) out << " " << a;
    out << "\n";
    out << "x0: " << w.x0.to_string() << "\n";
    for (std::size_t i = 0; i < w.n(); ++i) out << "x" << i + 1 << ": " << w.syllables[i].x.to_string() << "\n";
    HnnCyclic c = cyclically_reduce(s, word(0));
    out << "cyclic conjugator: " << c.conjugator.to_string() << "\n";
    out << "cyclic core: " << recompose(c.core).to_string() << "\n";
    return 0;
  }
  if (cmd == "magnus-separate") {
    auto lvl = find_separating_level(word(0), word(1), o.p, o.max_degree, o.m);
    if (lvl)
      out << "SEPARATED AT d=" << lvl->d << " m=" << lvl->m << " (p=" << o.p << ")\n";
    else
      out << "NOT SEPARATED (p=" << o.p << ", d<=" << o.max_degree << ", m<=" << o.m << ")\n";
    return 0;
  }
  if (cmd == "lie-dims") {
    GradedDims d = o.lie_p > 0 ? lie_graded_dims_mod(*g, o.max_degree, o.lie_p) : lie_graded_dims(*g, o.max_degree);
    out << "d:";
    for (auto x : d.dims) out << " " << x;
    out << "\n";
    return 0;
  }
  if (cmd == "center") {
    out << "center: " << g->format_set(g->center_vertices()) << "\n";
    out << "lie center trivial up to degree " << o.max_degree << " (p=" << o.p
        << "): " << (lie_center_trivial_upto(*g, o.max_degree, o.p) ? "YES" : "NO") << "\n";
    return 0;
  }
  throw CLI::ValidationError("unknown subcommand");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation in right-angled Artin groups", "raag"};
  app.require_subcommand(1, 1);
  Options o;

  auto with_graph = [&](CLI::App* sub, std::size_t words) {
    sub->add_option("--graph", o.graph_path, "graph JSON file")->required()->check(CLI::ExistingFile);
    if (words > 0) sub->add_option("words", o.words, "words in the generators")->expected(static_cast<int>(words))->required();
    return sub;
  };
  with_graph(app.add_subcommand("normal-form", "print the canonical normal form"), 1);
  with_graph(app.add_subcommand("equal", "decide equality of two words"), 2);
  auto* conj = with_graph(app.add_subcommand("conjugate", "decide conjugacy with a witness"), 2);
  auto* under = with_graph(app.add_subcommand("conjugate-under", "decide conjugacy by a special subgroup"), 2);
  under->add_option("--subgroup", o.subgroup, "comma-separated vertices")->required();
  with_graph(app.add_subcommand("centralizer", "generating set of the centralizer"), 1);
  auto* dc = with_graph(app.add_subcommand("double-coset", "decide y in <left> x <right>; words: y x"), 2);
  dc->add_option("--left", o.left, "comma-separated vertices")->required();
  dc->add_option("--right", o.right, "comma-separated vertices")->required();
  auto* hnn = with_graph(app.add_subcommand("hnn-decompose", "reduced HNN form along a pivot"), 1);
  hnn->add_option("--pivot", o.pivot, "pivot vertex (default: last)");
  auto* mag = with_graph(app.add_subcommand("magnus-separate", "search a separating Magnus level"), 2);
  mag->add_option("-p", o.p, "prime")->check(CLI::PositiveNumber);
  mag->add_option("-m", o.m, "maximal precision m (modulus p^m)")->check(CLI::PositiveNumber);
  mag->add_option("--max-degree", o.max_degree, "maximal truncation degree")->check(CLI::PositiveNumber);
  auto* lie = with_graph(app.add_subcommand("lie-dims", "graded dimensions of the Lie algebra"), 0);
  lie->add_option("--max-degree", o.max_degree, "maximal degree")->check(CLI::PositiveNumber);
  lie->add_option("-p", o.lie_p, "compute over F_p instead of Q");
  auto* center = with_graph(app.add_subcommand("center", "center vertices and Lie center check"), 0);
  center->add_option("--max-degree", o.max_degree, "degree bound for the Lie center check")->check(CLI::PositiveNumber);
  center->add_option("-p", o.p, "prime for the Lie center check");
  auto* pg = app.add_subcommand("pgroup-witness", "finite p-group separating witness");
  pg->add_option("-p", o.p, "prime")->required();
  pg->add_option("-n", o.pn, "n")->required();
  pg->add_option("-r", o.pr, "r")->required();
  pg->add_option("-s", o.ps, "s")->required();
  for (auto* sub : {conj, under, dc}) {
    sub->add_option("--radius", o.radius, "ball-oracle fallback radius");
    sub->add_option("--search-bound", o.search_bound, "coset search bound");
  }

  if (!args.empty() && !args.front().starts_with("-")) {
    auto subs = app.get_subcommands([&](const CLI::App* s) { return s->get_name() == args.front(); });
    if (subs.empty()) {
      err << "error: unknown subcommand '" << args.front() << "'\n";
      return 1;
    }
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace raag::cli
