// Command-line front end: relations, Betti numbers, torsion, xi maps,
// Springer morphism and character tests.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "isogr/partitions.hpp"
#include "isogr/polynomial_io.hpp"
#include "isogr/presentations.hpp"
#include "isogr/springer.hpp"
#include "isogr/xi.hpp"

using namespace isogr;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RingOptions {
  std::string family = "C";
  int n = -1;
  int k = -1;
  bool stable = false;
  int cap = 16;
  std::string format = "text";
};

void add_ring_options(CLI::App* cmd, RingOptions& o, bool allow_stable = true) {
  cmd->add_option("--family", o.family, "Lie type")->check(CLI::IsMember({"C", "B"}))->required();
  cmd->add_option("--n", o.n, "rank of the ambient group (finite rings)");
  cmd->add_option("--k", o.k, "Levi rank k")->required();
  if (allow_stable) cmd->add_flag("--stable", o.stable, "use the stable ring truncated at the degree cap");
  cmd->add_option("--degree-cap", o.cap, "even degree cap")->capture_default_str();
}

LieType parse_type(const std::string& f) { return f == "C" ? LieType::C : LieType::B; }

void validate(const RingOptions& o) {
  if (o.k < 0) throw UsageError("--k must be non-negative");
  if (o.cap < 0 || o.cap % 2) throw UsageError("--degree-cap must be a non-negative even integer");
  if (o.stable && o.n >= 0) throw UsageError("--n and --stable are mutually exclusive");
  if (!o.stable && o.n < 0) throw UsageError("--n is required unless --stable is given");
}

Family family_of(const RingOptions& o) {
  const bool c = o.family == "C";
  if (o.stable) return c ? Family::StableC : Family::StableB;
  return c ? Family::FiniteC : Family::FiniteB;
}

RingPresentation presentation_of(const RingOptions& o) {
  validate(o);
  return make_presentation(family_of(o), o.n, o.k, o.cap);
}

std::string header(const RingPresentation& p, int cap) {
  std::string s = "# family=" + std::string(lie_type(p.family) == LieType::C ? "C" : "B");
  if (is_stable(p.family)) {
    s += " stable k=" + std::to_string(p.k);
  } else {
    s += " n=" + std::to_string(p.n) + " k=" + std::to_string(p.k);
  }
  return s + " degree-cap=" + std::to_string(cap);
}

/// Degrees reported for a ring: up to the cap, and for finite rings no
/// further than the top degree 2 dim.
int report_limit(const RingPresentation& p, int cap) {
  if (is_stable(p.family)) return cap;
  return std::min(cap, 2 * grassmannian_dimension(p.k, p.n));
}

json meta(const RingPresentation& p, int cap) {
  json j;
  j["family"] = lie_type(p.family) == LieType::C ? "C" : "B";
  j["stable"] = is_stable(p.family);
  if (!is_stable(p.family)) j["n"] = p.n;
  j["k"] = p.k;
  j["degree_cap"] = cap;
  return j;
}

int cmd_relations(const RingOptions& o) {
  const RingPresentation p = presentation_of(o);
  if (o.format == "json") {
    json j = meta(p, o.cap);
    j["no_relations_below_cap"] = p.no_relations_below_cap;
    j["relations"] = json::array();
    for (std::size_t i = 0; i < p.relations.size(); ++i)
      j["relations"].push_back({{"name", p.relation_names[i]}, {"polynomial", to_json(p.relations[i])}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << header(p, o.cap) << "\n";
  if (p.no_relations_below_cap) std::cout << "# warning: no relations up to the degree cap\n";
  for (std::size_t i = 0; i < p.relations.size(); ++i)
    std::cout << p.relation_names[i] << ": " << to_string(p.relations[i]) << "\n";
  return 0;
}

int cmd_betti(const RingOptions& o) {
  const RingPresentation p = presentation_of(o);
  const int limit = report_limit(p, o.cap);
  const QQuotient q(p, limit);
  if (o.format == "json") {
    json j = meta(p, o.cap);
    j["ranks"] = json::array();
    for (int d = 0; d <= limit; d += 2) j["ranks"].push_back({{"degree", d}, {"rank", q.rank(d)}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << header(p, o.cap) << "\n" << "degree,rank\n";
  for (int d = 0; d <= limit; d += 2) std::cout << d << "," << q.rank(d) << "\n";
  return 0;
}

int cmd_torsion(const RingOptions& o) {
  const RingPresentation p = presentation_of(o);
  const int limit = report_limit(p, o.cap);
  // the type B stable ring is checked on its c-generated subring
  const RingPresentation target =
      p.family == Family::StableB ? stable_b_c_subring_presentation(p.k, o.cap) : p;
  const QQuotient q(target, limit);
  const auto rep = q.torsion_report();
  if (o.format == "json") {
    json j = meta(p, o.cap);
    j["ring"] = target.describe();
    j["degrees"] = json::array();
    for (const auto& [d, e] : rep) {
      json f = json::array();
      for (const auto& x : e.torsion_factors) f.push_back(x.get_str());
      j["degrees"].push_back({{"degree", d}, {"free_rank", e.free_rank}, {"torsion_factors", f}});
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << header(p, o.cap) << "\n";
  if (target.generators != p.generators) std::cout << "# ring: " << target.describe() << "\n";
  std::cout << "degree,free_rank,torsion_factors\n";
  for (const auto& [d, e] : rep) {
    std::cout << d << "," << e.free_rank << ",";
    for (std::size_t i = 0; i < e.torsion_factors.size(); ++i) std::cout << (i ? " " : "") << e.torsion_factors[i];
    std::cout << "\n";
  }
  return 0;
}

int cmd_xi_image(const RingOptions& o, int i) {
  const RingPresentation p = presentation_of(o);
  if (i < 1 || i > o.k) throw UsageError("--i must lie in 1..k");
  const int cap = is_stable(p.family) ? o.cap : std::max(o.cap, 4 * i);
  const QQuotient q(p, cap);
  const XiMap xi(parse_type(o.family), o.k, q);
  const auto nf = xi.generator_image(i);
  if (o.format == "json") {
    json j = meta(p, cap);
    j["i"] = i;
    j["image"] = to_json(xi.image_polynomial(i));
    j["normal_form"] = to_json(nf.to_polynomial());
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << header(p, cap) << "\n";
  std::cout << "e" << i << " -> " << to_string(xi.image_polynomial(i)) << "\n";
  std::cout << "normal form: " << to_string(nf.to_polynomial()) << "\n";
  return 0;
}

json report_json(const KernelReport& r) {
  json j;
  j["family"] = r.type == LieType::C ? "C" : "B";
  j["k"] = r.k;
  j["degree_cap"] = r.degree_cap;
  j["codomain"] = r.codomain;
  j["injective_up_to_cap"] = r.injective();
  j["degrees"] = json::array();
  for (const auto& d : r.degrees) {
    json e;
    e["degree"] = d.degree;
    e["domain_dim"] = d.domain_dim;
    e["codomain_rank"] = d.codomain_rank;
    e["image_rank_Q"] = d.image_rank_q;
    e["image_rank_mod2"] = d.image_rank_mod2 ? json(*d.image_rank_mod2) : json(nullptr);
    json kb = json::array();
    for (const auto& v : d.kernel_basis) {
      json vec = json::array();
      for (const auto& x : v) vec.push_back(x.get_str());
      kb.push_back(vec);
    }
    e["kernel_basis"] = kb;
    if (d.mod2_matches_monomial_route) e["mod2_matches_monomial_route"] = *d.mod2_matches_monomial_route;
    if (d.images_integral) e["images_integral"] = *d.images_integral;
    j["degrees"].push_back(e);
  }
  return j;
}

int cmd_inject(const RingOptions& o) {
  if (o.k < 1) throw UsageError("--k must be at least 1");
  if (o.cap < 4 || o.cap % 2) throw UsageError("--degree-cap must be an even integer >= 4");
  KernelReport rep;
  if (o.n >= 0) {
    const QQuotient q(make_presentation(o.family == "C" ? Family::FiniteC : Family::FiniteB, o.n, o.k), o.cap);
    rep = scan_kernel(XiMap(parse_type(o.family), o.k, q), o.cap);
  } else {
    rep = injectivity_scan(o.k, parse_type(o.family), o.cap);
  }
  std::cout << report_json(rep).dump(2) << "\n";
  return 0;
}

int cmd_diagram(const RingOptions& o) {
  if (o.n < 0) throw UsageError("--n is required");
  const bool ok = diagram_check(o.n, o.k, parse_type(o.family));
  std::cout << "diagram family=" << o.family << " n=" << o.n << " k=" << o.k << ": "
            << (ok ? "commutes" : "does not commute") << "\n";
  return 0;
}

int cmd_witness(const RingOptions& o) {
  if (o.cap < 2 || o.cap % 2) throw UsageError("--degree-cap must be an even integer >= 2");
  const auto w = nonsurjectivity_witness(o.k, parse_type(o.family), o.cap);
  std::cout << "# family=" << o.family << " stable k=" << o.k << " degree-cap=" << o.cap << "\n";
  std::cout << "degree=" << w.degree << " domain_dim=" << w.domain_dim << " codomain_rank=" << w.codomain_rank
            << " class=" << (w.witness_class.empty() ? "-" : w.witness_class)
            << " certified=" << (w.certifies() ? "true" : "false") << "\n";
  return 0;
}

std::vector<mpq_class> parse_rationals(const std::string& s) {
  std::vector<mpq_class> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    try {
      out.push_back(coeff_traits<mpq_class>::parse(item));
    } catch (const std::exception&) {
      throw UsageError("bad rational '" + item + "' in --t");
    }
  }
  return out;
}

int cmd_springer(const std::string& family, int n, const std::string& t) {
  const GroupSpec g(family == "sp" ? GroupFamily::SpC : GroupFamily::SoB, n);
  const TorusElement te(g, parse_rationals(t));
  const CartanElement c = theta_torus(te);
  if (theta_matrix(te.matrix()) != c.matrix()) throw DomainError("torus and matrix formulas disagree");
  for (std::size_t i = 0; i < c.x.size(); ++i) std::cout << (i ? ", " : "") << c.x[i];
  std::cout << "\n";
  return 0;
}

int cmd_char_test(int n, const std::string& input) {
  std::string text;
  if (input.empty() || input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(input);
    if (!in) throw UsageError("cannot open " + input);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  const LaurentCharacter ch{n, parse_polynomial<mpq_class, true>(text, torus_grading(n))};
  try {
    const auto p = is_omega1_polynomial(ch);
    std::cout << (p ? to_string(*p) : "NOT-POLYNOMIAL") << "\n";
  } catch (const InvarianceError&) {
    std::cout << "NOT-INVARIANT\n";
  }
  return 0;
}

int cmd_partitions(const RingOptions& o, int size) {
  if (o.n < 0) throw UsageError("--n is required");
  const auto parts = size >= 0 ? enumerate_partitions(o.k, o.n, size) : enumerate_partitions(o.k, o.n);
  if (o.format == "json") {
    json j = json::array();
    for (const auto& p : parts) j.push_back(to_json(p));
    std::cout << j.dump() << "\n";
    return 0;
  }
  for (const auto& p : parts) std::cout << p.to_string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of isotropic Grassmannians and the xi homomorphisms"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  RingOptions o;
  int gen_index = 1;
  int size = -1;
  std::string sp_family = "sp", t_values, input;
  int sp_n = 1;

  auto* relations = app.add_subcommand("relations", "print the defining relations");
  add_ring_options(relations, o);
  relations->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* betti = app.add_subcommand("betti", "quotient ranks per degree");
  add_ring_options(betti, o);
  betti->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv", "json"}));

  auto* torsion = app.add_subcommand("torsion", "Smith invariants of the ideal per degree");
  add_ring_options(torsion, o);
  torsion->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv", "json"}));

  auto* xi_image = app.add_subcommand("xi-image", "image of the generator e_i");
  add_ring_options(xi_image, o);
  xi_image->add_option("--i", gen_index, "generator index")->required();
  xi_image->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* inject = app.add_subcommand("inject", "degreewise kernel of xi as JSON");
  inject->add_option("--family", o.family)->check(CLI::IsMember({"C", "B"}))->required();
  inject->add_option("--k", o.k)->required();
  inject->add_option("--n", o.n, "scan the finite ring instead of the stable one");
  inject->add_option("--degree-cap", o.cap, "even degree cap")->capture_default_str();

  auto* diagram = app.add_subcommand("diagram-check", "compatibility of xi with the transition maps");
  diagram->add_option("--family", o.family)->check(CLI::IsMember({"C", "B"}))->required();
  diagram->add_option("--n", o.n)->required();
  diagram->add_option("--k", o.k)->required();

  auto* witness = app.add_subcommand("witness", "degree-2 class outside the image of xi");
  witness->add_option("--family", o.family)->check(CLI::IsMember({"C", "B"}))->required();
  witness->add_option("--k", o.k)->required();
  witness->add_option("--degree-cap", o.cap, "even degree cap")->capture_default_str();

  auto* springer = app.add_subcommand("springer", "Cayley transform of a torus element");
  springer->add_option("--family", sp_family)->check(CLI::IsMember({"sp", "so"}))->required();
  springer->add_option("--n", sp_n)->required();
  springer->add_option("--t", t_values, "comma-separated rationals a/b,c/d,...")->required();

  auto* char_test = app.add_subcommand("char-test", "is a Laurent character a polynomial in the Cayley squares");
  char_test->add_option("--n", sp_n)->required();
  char_test->add_option("--input", input, "file with the Laurent polynomial; stdin if omitted or '-'");

  auto* partitions = app.add_subcommand("partitions", "k-strict partitions in the (n-k) x (n+k) rectangle");
  partitions->add_option("--n", o.n)->required();
  partitions->add_option("--k", o.k)->required();
  partitions->add_option("--size", size);
  partitions->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*relations) return cmd_relations(o);
    if (*betti) return cmd_betti(o);
    if (*torsion) return cmd_torsion(o);
    if (*xi_image) return cmd_xi_image(o, gen_index);
    if (*inject) return cmd_inject(o);
    if (*diagram) return cmd_diagram(o);
    if (*witness) return cmd_witness(o);
    if (*springer) return cmd_springer(sp_family, sp_n, t_values);
    if (*char_test) return cmd_char_test(sp_n, input);
    if (*partitions) return cmd_partitions(o, size);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
