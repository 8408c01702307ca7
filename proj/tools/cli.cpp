#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "spexlab/constructors.hpp"
#include "spexlab/io.hpp"
#include "spexlab/spectral.hpp"
#include "spexlab/subgraph.hpp"
#include "spexlab/verify.hpp"
#include "spexlab/walks.hpp"

namespace spexlab::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  double tol = 1e-10;
  std::optional<int> max_walk;
  std::optional<std::uint64_t> budget;
  std::string format = "graph6";
  std::string out_path;
  std::uint64_t seed = 0;

  VerifyOptions verify_options() const {
    VerifyOptions o;
    o.tol = tol;
    o.seed = seed;
    o.max_walk = max_walk;
    if (budget) o.budget.max_expansions = *budget;
    return o;
  }
  SearchBudget search_budget() const {
    SearchBudget b;
    if (budget) b.max_expansions = *budget;
    return b;
  }
};

Graph load_graph(const std::string& path) {
  if (path == "-") return read_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file '" + path + "'");
  return read_graph(in);
}

std::string render_graph(const Graph& g, const std::string& format) {
  if (format == "edgelist") return encode_edgelist(g);
  if (format == "json") {
    json j;
    j["graph6"] = encode_graph6(g);
    j["order"] = g.order();
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = edges;
    return j.dump() + "\n";
  }
  if (format == "csv") throw UsageError("--format csv applies to walks only");
  return encode_graph6(g) + "\n";
}

struct ConstructArgs {
  std::string name;
  std::optional<int> m, a, b, k, n, s;
  std::string family;
  int member = 0;
};

Graph construct(const ConstructArgs& c) {
  auto need = [](const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing ") + flag);
    return *v;
  };
  if (c.name == "complete") return primitive(Primitive::complete, need(c.m, "--m"));
  if (c.name == "cycle") return primitive(Primitive::cycle, need(c.m, "--m"));
  if (c.name == "matching") return primitive(Primitive::matching, need(c.m, "--m"));
  if (c.name == "empty") return primitive(Primitive::empty, need(c.m, "--m"));
  if (c.name == "path") return path_graph(need(c.m, "--m"));
  if (c.name == "bipartite") return complete_bipartite(need(c.a, "--a"), need(c.b, "--b"));
  if (c.name == "odd-wheel") return odd_wheel(need(c.k, "--k"));
  if (c.name == "core") return core_component(need(c.k, "--k"));

  const int n = need(c.n, "--n");
  const int k = need(c.k, "--k");
  if (!c.s && c.family.empty() && c.member == 0) return spex_candidate(default_candidate_spec(n, k));
  CandidateSpec spec;
  spec.n = n;
  spec.k = k;
  spec.s = c.s ? *c.s : default_left_size(n, k) - n / 2;
  const int left = spec.left_size();
  if (k == 2) {
    GraphBuilder b(left);
    for (int u = 0; u + 1 < left; u += 2) b.add_edge(u, u + 1);
    spec.inner = std::move(b).build();
    spec.r_edge = false;
    spec.r_matching = true;
    return spex_candidate(spec);
  }
  FamilyKind kind = FamilyKind::U;
  if (!c.family.empty())
    kind = family_kind_from_string(c.family);
  else if (k % 2 == 0 && n % 4 == 2 && spec.s == 0)
    kind = FamilyKind::V;
  const FamilySpec fam{kind, k, left};
  if (c.member == 0) {
    auto first = first_family_member(fam);
    if (!first) throw FamilyError(to_string(kind) + "(" + std::to_string(k) + "," + std::to_string(left) + ") is empty");
    spec.inner = std::move(*first);
  } else {
    auto all = enumerate_family(fam);
    if (c.member < 0 || c.member >= static_cast<int>(all.size()))
      throw UsageError("--member out of range: family has " + std::to_string(all.size()) + " members");
    spec.inner = std::move(all[c.member]);
  }
  return spex_candidate(spec);
}

struct VerifyArgs {
  std::string claim;
  std::optional<int> delta, n, k, cap, base, t, n_min, n_max, pairs, max_order, samples, exhaustive_order;
  std::optional<double> agreement;
  std::vector<int> orders;
  std::string h1, h2;
};

VerificationReport dispatch(const VerifyArgs& v, const Globals& g) {
  const auto o = g.verify_options();
  const std::string& id = v.claim;
  if (id == "lemma-2.1") return verify_join_bound(v.pairs.value_or(200), v.max_order.value_or(30), 1e-9, o);
  if (id == "fact-1") return verify_fact1(v.k.value_or(3), v.n.value_or(100), o);
  if (id == "lemma-3.2") return verify_bounded_order(v.delta.value_or(3), v.cap.value_or(10), o);
  if (id == "lemma-3.3") return verify_walk_lemma(v.delta.value_or(3), v.n.value_or(13), o);
  if (id == "lemma-3.3-formulas") return verify_walk_formulas(v.delta.value_or(3), v.n.value_or(13), o);
  if (id == "theorem-3.1") {
    const Graph h1 = v.h1.empty() ? disjoint_union({complete_graph(3), complete_graph(1)}) : load_graph(v.h1);
    const Graph h2 = v.h2.empty() ? path_graph(4) : load_graph(v.h2);
    return verify_one_set(v.base.value_or(40), v.t.value_or(6), h1, h2, o);
  }
  if (id == "theorem-1.4") return verify_spex_structure(v.n.value_or(22), v.k.value_or(4), o);
  if (id == "claim-1-thm-1.4") {
    const int lo = v.n_min.value_or(v.n.value_or(22));
    const int hi = v.n_max.value_or(v.n ? *v.n : 402);
    return verify_claim1(v.k.value_or(4), lo, hi, o);
  }
  if (id == "equitable-partition")
    return verify_equitable_consistency(v.k.value_or(4), v.n.value_or(22), v.agreement.value_or(1e-8), o);
  if (id == "odd-wheel-detector")
    return verify_detector(v.k.value_or(2), v.exhaustive_order.value_or(8), v.samples.value_or(0),
                           v.max_order.value_or(9), o);
  if (id == "truncation-stability")
    return verify_truncation_stability(v.orders.empty() ? std::vector<int>{13} : v.orders, v.pairs.value_or(200),
                                       v.max_order.value_or(10), o);
  if (id == "brute-spex") return brute_spex(v.n.value_or(5), v.k.value_or(2), o);
  throw UsageError("unknown claim id '" + id + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"spexlab: spectral extremal graph laboratory", "spexlab"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--tol", g.tol, "eigensolver residual tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--max-walk", g.max_walk, "walk comparison horizon / profile length")->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget, "node-expansion budget for subgraph searches")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"graph6", "edgelist", "json", "csv"}));
  app.add_option("--out", g.out_path, "write output to this file instead of stdout");
  app.add_option("--seed", g.seed, "seed for sampled checks")->capture_default_str();

  ConstructArgs ca;
  auto* construct_cmd = app.add_subcommand("construct", "emit a named graph or candidate");
  construct_cmd->add_option("name", ca.name, "graph name")
      ->required()
      ->check(CLI::IsMember(
          {"complete", "cycle", "matching", "empty", "path", "bipartite", "odd-wheel", "core", "candidate"}));
  construct_cmd->add_option("--m", ca.m, "order of a primitive");
  construct_cmd->add_option("--a", ca.a, "first part of a complete bipartite graph");
  construct_cmd->add_option("--b", ca.b, "second part of a complete bipartite graph");
  construct_cmd->add_option("--k", ca.k, "wheel parameter");
  construct_cmd->add_option("--n", ca.n, "candidate order");
  construct_cmd->add_option("--s", ca.s, "explicit side imbalance, |L| = floor(n/2) + s");
  construct_cmd->add_option("--family", ca.family, "U or V for the embedded graph");
  construct_cmd->add_option("--member", ca.member, "index of the family member")->capture_default_str();

  std::string check_path;
  std::optional<int> check_wheel, check_cycle, check_star;
  bool check_path_flag = false;
  auto* check_cmd = app.add_subcommand("check", "odd-wheel, cycle, path and star queries");
  check_cmd->add_option("graph", check_path, "graph file (graph6 or edge list), - for stdin")->required();
  check_cmd->add_option("--odd-wheel", check_wheel, "test for W_{2k+1}");
  check_cmd->add_option("--cycle", check_cycle, "test for a cycle of this length");
  check_cmd->add_flag("--path", check_path_flag, "longest path order");
  check_cmd->add_option("--star", check_star, "test K_{1,k}-freeness");

  std::string spectral_path;
  auto* spectral_cmd = app.add_subcommand("spectral", "spectral radius and Perron vector (JSON)");
  spectral_cmd->add_option("graph", spectral_path, "graph file")->required();

  std::string walks_path;
  auto* walks_cmd = app.add_subcommand("walks", "walk profile W^1..W^L (JSON or CSV)");
  walks_cmd->add_option("graph", walks_path, "graph file")->required();

  std::string cmp_a, cmp_b;
  auto* compare_cmd = app.add_subcommand("compare", "walk order of two graphs");
  compare_cmd->add_option("first", cmp_a, "first graph file")->required();
  compare_cmd->add_option("second", cmp_b, "second graph file")->required();

  std::string enum_kind;
  int enum_param = 0, enum_order = 0;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "family members as a graph stream");
  enumerate_cmd->add_option("--kind", enum_kind, "U, V or GFAM")->required();
  enumerate_cmd->add_option("--param", enum_param, "k for U and V, Delta for GFAM")->required();
  enumerate_cmd->add_option("--order", enum_order, "member order")->required();

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification job and emit its report");
  verify_cmd->add_option("claim", va.claim, "claim id")->required()->check(CLI::IsMember(claim_ids()));
  verify_cmd->add_option("--delta", va.delta);
  verify_cmd->add_option("--n", va.n);
  verify_cmd->add_option("--k", va.k);
  verify_cmd->add_option("--cap", va.cap, "order cap");
  verify_cmd->add_option("--base", va.base, "base order");
  verify_cmd->add_option("--t", va.t, "size of T");
  verify_cmd->add_option("--h1", va.h1, "graph file for H1");
  verify_cmd->add_option("--h2", va.h2, "graph file for H2");
  verify_cmd->add_option("--n-min", va.n_min);
  verify_cmd->add_option("--n-max", va.n_max);
  verify_cmd->add_option("--pairs", va.pairs);
  verify_cmd->add_option("--max-order", va.max_order);
  verify_cmd->add_option("--samples", va.samples);
  verify_cmd->add_option("--exhaustive-order", va.exhaustive_order);
  verify_cmd->add_option("--orders", va.orders, "family orders");
  verify_cmd->add_option("--agreement", va.agreement);

  std::optional<int> brute_n, brute_k;
  auto* brute_cmd = app.add_subcommand("brute-spex", "exhaustive small-n spectral maximizers");
  brute_cmd->add_option("--n", brute_n)->required();
  brute_cmd->add_option("--k", brute_k)->required();

  std::vector<const char*> argv{"spexlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  std::ofstream file;
  if (!g.out_path.empty()) {
    file.open(g.out_path);
    if (!file) {
      err << "error: cannot write '" << g.out_path << "'\n";
      return kUsage;
    }
  }
  std::ostream& sink = g.out_path.empty() ? out : file;

  try {
    if (*construct_cmd) {
      sink << render_graph(construct(ca), g.format);
      return kSuccess;
    }
    if (*check_cmd) {
      const Graph graph = load_graph(check_path);
      json j;
      bool budget = false;
      if (!check_wheel && !check_cycle && !check_star && !check_path_flag)
        throw UsageError("check needs at least one of --odd-wheel, --cycle, --path, --star");
      if (check_wheel) {
        const auto d = contains_odd_wheel(graph, *check_wheel, g.search_budget());
        budget = budget || d == Decision::budget_exhausted;
        j["odd_wheel"] = to_string(d);
      }
      if (check_cycle) {
        const auto d = contains_cycle_of_length(graph, *check_cycle, g.search_budget());
        budget = budget || d == Decision::budget_exhausted;
        j["cycle"] = to_string(d);
      }
      if (check_path_flag) {
        const auto lp = longest_path_order(graph, g.search_budget());
        budget = budget || !lp.complete;
        j["longest_path_order"] = lp.order;
        j["longest_path_complete"] = lp.complete;
      }
      if (check_star) j["star_free"] = is_star_free(graph, *check_star);
      sink << j.dump(2) << "\n";
      return budget ? kBudget : kSuccess;
    }
    if (*spectral_cmd) {
      const auto r = spectral_radius(load_graph(spectral_path), {g.tol, 1'000'000});
      json j;
      j["radius"] = r.radius;
      j["residual"] = r.residual;
      j["iterations"] = r.iterations;
      j["cw_lower"] = r.cw_lower;
      j["cw_upper"] = r.cw_upper;
      j["dominant_component"] = r.dominant_component;
      j["component_radii"] = r.component_radii;
      j["perron"] = r.perron;
      sink << j.dump(2) << "\n";
      return kSuccess;
    }
    if (*walks_cmd) {
      const Graph graph = load_graph(walks_path);
      const int L = g.max_walk.value_or(std::max(1, 2 * graph.order()));
      const auto p = walk_profile(graph, L);
      if (g.format == "csv") {
        sink << "level,count\n";
        for (int l = 1; l <= L; ++l) sink << l << "," << p.level(l).get_str() << "\n";
      } else {
        json j;
        j["length"] = L;
        json counts = json::array();
        for (const auto& c : p.counts) counts.push_back(c.get_str());
        j["counts"] = counts;
        sink << j.dump(2) << "\n";
      }
      return kSuccess;
    }
    if (*compare_cmd) {
      const Graph a = load_graph(cmp_a);
      const Graph b = load_graph(cmp_b);
      const int h = g.max_walk.value_or(default_horizon(a, b));
      const auto r = walk_compare(a, b, h);
      if (g.format == "json") {
        json j;
        j["relation"] = to_string(r.relation);
        j["witness_level"] = r.witness_level ? json(*r.witness_level) : json(nullptr);
        j["horizon"] = h;
        sink << j.dump(2) << "\n";
      } else {
        sink << to_string(r.relation) << "\n";
      }
      return kSuccess;
    }
    if (*enumerate_cmd) {
      const auto members = enumerate_family({family_kind_from_string(enum_kind), enum_param, enum_order});
      if (g.format == "json") {
        json a = json::array();
        for (const auto& m : members) a.push_back(encode_graph6(m));
        sink << a.dump(2) << "\n";
      } else {
        for (const auto& m : members) sink << render_graph(m, g.format);
      }
      return kSuccess;
    }
    if (*verify_cmd || *brute_cmd) {
      VerificationReport r;
      if (*brute_cmd)
        r = brute_spex(*brute_n, *brute_k, g.verify_options());
      else
        r = dispatch(va, g);
      sink << r.dump(2) << "\n";
      return exit_code(r.outcome);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConvergenceError& e) {
    err << "budget: " << e.what() << "\n";
    return kBudget;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

}  // namespace spexlab::cli
