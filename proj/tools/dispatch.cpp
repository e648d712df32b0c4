#include "dispatch.hpp"

#include <deque>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ccgt/action.hpp"
#include "ccgt/amplify.hpp"
#include "ccgt/ball.hpp"
#include "ccgt/girth.hpp"
#include "ccgt/graph.hpp"
#include "ccgt/halfspace.hpp"
#include "ccgt/median.hpp"
#include "ccgt/perm.hpp"
#include "ccgt/pingpong.hpp"
#include "ccgt/pocset.hpp"
#include "ccgt/skewer.hpp"
#include "ccgt/wreath.hpp"

namespace ccgt::cli {

using nlohmann::json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string verdict_str(Verdict v) { return to_string(v); }

CubeComplex load_complex(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open complex file: " + path);
  return load_cubegraph(in);
}

FiniteGroupRealization load_group(const std::string &file,
                                  const std::string &builtin) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in)
      throw InputError("cannot open group file: " + file);
    return load_permgrp(in);
  }
  auto num = [&](size_t at) {
    int n = std::atoi(builtin.c_str() + at);
    if (n <= 0)
      throw InputError("bad builtin group parameter in: " + builtin);
    return n;
  };
  if (builtin.rfind("cyclic:", 0) == 0)
    return cyclic_group(num(7));
  if (builtin.rfind("dihedral:", 0) == 0)
    return dihedral_group(num(9));
  if (builtin.rfind("sym:", 0) == 0)
    return symmetric_group(num(4));
  if (builtin.rfind("alt:", 0) == 0)
    return alternating_group(num(4));
  if (builtin == "q8")
    return quaternion_group();
  if (builtin.rfind("z2^", 0) == 0)
    return elementary_abelian_2(num(3));
  throw InputError("unknown builtin group: " + builtin +
                   " (use cyclic:N, dihedral:N, sym:N, alt:N, q8, z2^K)");
}

/// A complex plus automorphism generators: either loaded from files or
/// one of the built-in ball families freeN / treeK.
struct ActionInput {
  CubeComplex complex;
  std::vector<Automorphism> gens;
};

ActionInput make_action_input(const std::string &complex_file,
                              const std::string &action_file,
                              const std::string &family, int radius) {
  ActionInput a;
  if (!family.empty()) {
    int n = std::atoi(family.c_str() + 4);
    if (family.rfind("free", 0) == 0 && n > 0) {
      FamilyBall fb = free_group_ball(n, radius);
      a.complex = std::move(fb.complex);
      a.gens = std::move(fb.generators);
      return a;
    }
    if (family.rfind("tree", 0) == 0 && n > 0) {
      FamilyBall fb = free_product_involutions_ball(n, radius);
      a.complex = std::move(fb.complex);
      a.gens = std::move(fb.generators);
      return a;
    }
    throw InputError("unknown family: " + family +
                     " (use freeN or treeK)");
  }
  if (complex_file.empty())
    throw InputError("need --complex (with --action) or --family");
  a.complex = load_complex(complex_file);
  if (!action_file.empty()) {
    std::ifstream in(action_file);
    if (!in)
      throw InputError("cannot open action file: " + action_file);
    a.gens = load_autperm(in, a.complex);
  }
  return a;
}

HalfspaceRef parse_halfspace(const std::string &s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw InputError("halfspace must be plane:side, got: " + s);
  return {std::atoi(s.substr(0, colon).c_str()),
          std::atoi(s.substr(colon + 1).c_str())};
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep))
    out.push_back(tok);
  return out;
}

/// Word syntax: dot-separated generator names, each optionally ^-1.
Word parse_word(const std::string &s, const std::vector<std::string> &names) {
  Word w;
  if (s == "1" || s.empty())
    return w;
  for (std::string tok : split(s, '.')) {
    int sign = 1;
    auto caret = tok.find("^-1");
    if (caret != std::string::npos) {
      sign = -1;
      tok = tok.substr(0, caret);
    }
    auto it = std::find(names.begin(), names.end(), tok);
    if (it == names.end())
      throw InputError("unknown generator in word: " + tok);
    w.push_back(sign * (static_cast<int>(it - names.begin()) + 1));
  }
  return w;
}

json word_json(const Word &w, const std::vector<std::string> &names) {
  return json{{"letters", w}, {"string", word_to_string(w, names)}};
}

/// Plane of the first edge on a geodesic from the basepoint toward its
/// image — the natural pole of a skewering element on a tree-like factor.
std::optional<HalfspaceRef> default_pole(const GroupAction &action,
                                         const HalfspaceSystem &hs,
                                         const Word &w) {
  const CubeComplex &g = action.complex();
  Vertex v0 = g.basepoint().value_or(0);
  auto img = action.apply_word(w, v0);
  if (!img || *img == v0)
    return std::nullopt;
  std::vector<int> parent(g.num_vertices(), -1);
  std::vector<char> seen(g.num_vertices(), 0);
  std::deque<Vertex> q{v0};
  seen[v0] = 1;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop_front();
    for (Vertex x : g.neighbors(u))
      if (!seen[x]) {
        seen[x] = 1;
        parent[x] = u;
        q.push_back(x);
      }
  }
  Vertex step = *img;
  while (parent[step] != v0)
    step = parent[step];
  return HalfspaceRef{hs.plane_of_edge(v0, step), 0};
}

int verdict_exit(Verdict v) {
  switch (v) {
  case Verdict::Yes:
    return 0;
  case Verdict::No:
    return 1;
  default:
    return 2;
  }
}

struct Result {
  int code = 0;
  json report;
};

// ---- subcommand runners ----

Result run_validate(const std::string &file) {
  CubeComplex g = load_complex(file);
  Result r;
  r.report["vertices"] = g.num_vertices();
  r.report["edges"] = g.num_edges();
  if (!g.connected()) {
    auto w = g.disconnection_witness();
    r.report["is_median"] = false;
    r.report["disconnected"] =
        json::array({g.label(w->first), g.label(w->second)});
    r.code = 1;
    return r;
  }
  MedianReport m = validate_median(g);
  r.report["is_median"] = m.is_median;
  if (m.counterexample) {
    r.report["counterexample"] =
        json::array({g.label((*m.counterexample)[0]),
                     g.label((*m.counterexample)[1]),
                     g.label((*m.counterexample)[2])});
  }
  bool flag = true;
  for (Vertex v = 0; v < g.num_vertices() && flag; ++v)
    if (!link_is_flag(g, v)) {
      flag = false;
      r.report["non_flag_link_vertex"] = g.label(v);
    }
  r.report["all_links_flag"] = flag;
  r.code = (m.is_median && flag) ? 0 : 1;
  return r;
}

Result run_hyperplanes(const std::string &file) {
  CubeComplex g = load_complex(file);
  HalfspaceSystem hs(g);
  Result r;
  r.report["count"] = hs.count();
  json planes = json::array();
  for (int p = 0; p < hs.count(); ++p) {
    auto [a, b] = hs.representative(p);
    planes.push_back({{"id", p},
                      {"representative", json::array({g.label(a), g.label(b)})},
                      {"num_edges", hs.edges_of_plane(p).size()},
                      {"carrier_size", hs.carrier(p).size()}});
  }
  r.report["planes"] = planes;
  return r;
}

Result run_relations(const std::string &file) {
  CubeComplex g = load_complex(file);
  HalfspaceSystem hs(g);
  Result r;
  json entries = json::array();
  int inconclusive = 0;
  for (int i = 0; i < hs.count(); ++i)
    for (int j = i + 1; j < hs.count(); ++j) {
      PairRelation rel = hs.classify(i, j);
      json e{{"planes", json::array({i, j})},
             {"separated", rel.separated},
             {"strongly_separated", rel.strongly_separated},
             {"conclusive", verdict_str(rel.conclusive)}};
      switch (rel.base) {
      case BaseRel::Transverse:
        e["relation"] = "transverse";
        break;
      case BaseRel::Nested:
        e["relation"] = "nested";
        break;
      case BaseRel::Facing:
        e["relation"] = "facing";
        break;
      }
      if (rel.base != BaseRel::Transverse)
        e["empty_quadrant"] =
            json::array({rel.empty_quadrant[0], rel.empty_quadrant[1]});
      if (rel.conclusive != Verdict::Yes)
        ++inconclusive;
      entries.push_back(e);
    }
  r.report["count"] = hs.count();
  r.report["pairs"] = entries;
  r.report["inconclusive"] = inconclusive;
  r.code = inconclusive ? 2 : 0;
  return r;
}

Result run_dual(const std::string &file, const std::string &out_file) {
  std::ifstream in(file);
  if (!in)
    throw InputError("cannot open pocset file: " + file);
  Pocset p = Pocset::load(in);
  Result r;
  r.report["pairs"] = p.pairs();
  CubeComplex dual = p.dual_complex();
  r.report["dual_vertices"] = dual.num_vertices();
  r.report["dual_edges"] = dual.num_edges();
  MedianReport m = validate_median(dual);
  r.report["dual_is_median"] = m.is_median;
  if (!out_file.empty()) {
    std::ofstream out(out_file);
    save_cubegraph(dual, out);
    r.report["saved_to"] = out_file;
  }
  r.code = m.is_median ? 0 : 1;
  return r;
}

Result run_girth(const std::string &group_file, const std::string &builtin,
                 const std::string &gen_names, int free_rank, int involutions,
                 int radius) {
  Result r;
  if (free_rank > 0 || involutions > 0) {
    FamilyBall fb = free_rank > 0 ? free_group_ball(free_rank, radius)
                                  : free_product_involutions_ball(involutions,
                                                                  radius);
    GirthResult g = girth_ball(fb);
    r.report["radius"] = g.radius;
    r.report["cycle_free"] = g.infinite_within;
    if (g.infinite_within) {
      r.report["girth_lower_bound"] = g.girth;
    } else {
      r.report["girth"] = g.girth;
      r.code = 1; // a cycle in a tree family is a failure
    }
    return r;
  }
  FiniteGroupRealization g = load_group(group_file, builtin);
  std::vector<int> gens;
  std::vector<std::string> names;
  if (gen_names.empty()) {
    for (int i = 0; i < g.num_generators(); ++i) {
      gens.push_back(g.generator_element(i));
      names.push_back(g.generator_name(i));
    }
  } else {
    for (const std::string &n : split(gen_names, ',')) {
      int found = -1;
      for (int i = 0; i < g.num_generators(); ++i)
        if (g.generator_name(i) == n)
          found = i;
      if (found < 0)
        throw InputError("unknown generator name: " + n);
      gens.push_back(g.generator_element(found));
      names.push_back(n);
    }
  }
  GirthResult res = girth_cayley(g, gens);
  r.report["order"] = g.order();
  r.report["generated"] = res.generated;
  if (!res.generated) {
    r.report["subgroup_order"] = res.subgroup_order;
    r.code = 1;
    return r;
  }
  if (res.infinite_within) {
    r.report["girth"] = nullptr;
    r.code = 2;
    return r;
  }
  r.report["girth"] = res.girth;
  r.report["witness"] = word_to_string(res.witness, names);
  r.report["involution_note"] = res.involution_note;
  return r;
}

Result run_girth_sup(const std::string &group_file, const std::string &builtin,
                     int max_gens) {
  FiniteGroupRealization g = load_group(group_file, builtin);
  GirthSupResult res = girth_sup_bounded(g, max_gens);
  Result r;
  r.report["order"] = g.order();
  r.report["max_gens"] = max_gens;
  r.report["girth_sup"] = res.girth;
  json w = json::array();
  for (int e : res.witness_gens)
    w.push_back(perm_cycles(g.element(e)));
  r.report["witness_gens"] = w;
  r.report["sets_examined"] = res.sets_examined;
  return r;
}

Result run_law_check(const std::string &group_file, const std::string &builtin,
                     const std::string &word_str, int repeat,
                     std::int64_t exhaustive_limit, int samples,
                     std::uint64_t seed) {
  FiniteGroupRealization g = load_group(group_file, builtin);
  // variables x1..xr, uppercase X for inverse
  Word word;
  int nvars = 0;
  for (std::string tok : split(word_str, '.')) {
    if (tok.empty())
      throw InputError("empty token in word");
    int sign = tok[0] == 'X' ? -1 : 1;
    if (tok[0] != 'x' && tok[0] != 'X')
      throw InputError("word tokens are x<k> or X<k> (inverse): " + tok);
    int v = std::atoi(tok.c_str() + 1);
    if (v <= 0)
      throw InputError("bad variable index in: " + tok);
    nvars = std::max(nvars, v);
    word.push_back(sign * v);
  }
  Word full;
  for (int i = 0; i < repeat; ++i)
    full.insert(full.end(), word.begin(), word.end());
  LawResult res = check_law(g, full, nvars, exhaustive_limit, samples, seed);
  Result r;
  r.report["order"] = g.order();
  r.report["word"] = word_str;
  r.report["repeat"] = repeat;
  r.report["nvars"] = nvars;
  r.report["holds"] = res.holds;
  r.report["exhaustive"] = res.exhaustive;
  r.report["tuples_checked"] = res.tuples_checked;
  if (!res.holds) {
    json c = json::array();
    for (int e : res.counterexample)
      c.push_back(perm_cycles(g.element(e)));
    r.report["counterexample"] = c;
    r.code = 1;
  }
  return r;
}

Result run_flip_search(const ActionInput &input, const std::string &plane_str,
                       int max_word_len) {
  GroupAction action(input.complex, input.gens);
  HalfspaceSystem hs(input.complex);
  HalfspaceRef h = parse_halfspace(plane_str);
  if (h.plane < 0 || h.plane >= hs.count())
    throw InputError("plane id out of range");
  bool saw_inconclusive = false;
  auto w = find_flipper(action, hs, h, max_word_len, &saw_inconclusive);
  Result r;
  r.report["plane"] = h.plane;
  r.report["side"] = h.side;
  r.report["found"] = w.has_value();
  if (w)
    r.report["word"] = word_json(*w, action.generator_names());
  else
    r.code = saw_inconclusive ? 2 : 1;
  r.report["saw_inconclusive"] = saw_inconclusive;
  return r;
}

Result run_skewer_search(const ActionInput &input, const std::string &hp_str,
                         const std::string &hs_str, bool strong,
                         int max_word_len) {
  GroupAction action(input.complex, input.gens);
  HalfspaceSystem sys(input.complex);
  HalfspaceRef hp = parse_halfspace(hp_str), hq = parse_halfspace(hs_str);
  Result r;
  bool saw_inconclusive = false;
  for (const Word &w : action.enumerate_words(max_word_len)) {
    SkewerCert cert = double_skewers(action, sys, w, hp, hq, strong);
    if (cert.status == Verdict::Inconclusive)
      saw_inconclusive = true;
    if (cert.status == Verdict::Yes) {
      r.report["found"] = true;
      r.report["word"] = word_json(w, action.generator_names());
      r.report["strong"] = cert.strong;
      r.report["transcript"] = cert.transcript;
      return r;
    }
  }
  r.report["found"] = false;
  r.report["saw_inconclusive"] = saw_inconclusive;
  r.code = saw_inconclusive ? 2 : 1;
  return r;
}

Result run_amplify(const ActionInput &input, const std::string &triple_str,
                   int n, int max_word_len) {
  GroupAction action(input.complex, input.gens);
  HalfspaceSystem hs(input.complex);
  auto parts = split(triple_str, ',');
  if (parts.size() != 3)
    throw InputError("triple must be three plane:side items");
  HalfspaceRef a = parse_halfspace(parts[0]);
  HalfspaceRef b = parse_halfspace(parts[1]);
  HalfspaceRef c = parse_halfspace(parts[2]);
  FacingFamily fam = amplify_facing(action, hs, a, b, c, n, max_word_len);
  Result r;
  json pairs = json::array();
  for (auto &[x, y] : fam.pairs)
    pairs.push_back(json::array(
        {json::array({x.plane, x.side}), json::array({y.plane, y.side})}));
  r.report["pairs"] = pairs;
  r.report["n_requested"] = n;
  r.report["n_built"] = fam.pairs.size();
  r.report["complete"] = fam.complete;
  r.report["transcript"] = fam.transcript;
  if (fam.failure_index >= 0)
    r.report["failure_index"] = fam.failure_index;
  FamilyReport rep = verify_family(hs, fam);
  r.report["all_green"] = rep.all_green;
  r.report["inconclusive_entries"] = rep.inconclusive_entries;
  if (!fam.complete || !rep.all_green)
    r.code = rep.inconclusive_entries > 0 ? 2 : 1;
  return r;
}

Result run_cert_build(const ActionInput &input, const std::string &sigma_str,
                      const std::string &tau_str,
                      const std::string &sigma_plane,
                      const std::string &tau_plane, int m, int n_max,
                      int m_max, const std::string &out_file) {
  GroupAction action(input.complex, input.gens);
  HalfspaceSystem hs(input.complex);
  auto names = action.generator_names();
  Word sigma = parse_word(sigma_str, names);
  Word tau = parse_word(tau_str, names);
  std::vector<Word> gens;
  for (int i = 0; i < action.num_generators(); ++i)
    gens.push_back({i + 1});

  int nfactors = 0;
  std::vector<int> factors = plane_factors(hs, &nfactors);
  auto poles = [&](const Word &w,
                   const std::string &flag) -> std::vector<FactorHalfspace> {
    HalfspaceRef h;
    if (!flag.empty()) {
      h = parse_halfspace(flag);
    } else {
      auto d = default_pole(action, hs, w);
      if (!d)
        throw InputError("element fixes the basepoint; give an explicit "
                         "pole with --sigma-plane/--tau-plane");
      h = *d;
    }
    return {{factors[h.plane], h}};
  };
  std::string why_not;
  auto cert = build_cert_from_poles(action, hs, sigma, tau, gens,
                                    poles(sigma, sigma_plane),
                                    poles(tau, tau_plane), m, n_max, m_max,
                                    &why_not);
  Result r;
  if (!cert) {
    r.report["built"] = false;
    r.report["reason"] = why_not;
    r.code = 2;
    return r;
  }
  r.report["built"] = true;
  r.report["N"] = cert->N;
  r.report["M"] = cert->M;
  r.report["x"] = input.complex.label(cert->x);
  r.report["sigma"] = word_json(cert->sigma, names);
  r.report["tau"] = word_json(cert->tau, names);
  r.report["transcript_lines"] = cert->transcript.size();
  std::ostringstream blob;
  save_ppcert(*cert, blob);
  if (!out_file.empty()) {
    std::ofstream out(out_file);
    out << blob.str();
    r.report["saved_to"] = out_file;
  } else {
    r.report["cert"] = json::parse(blob.str());
  }
  return r;
}

Result run_cert_check(const ActionInput &input, const std::string &cert_file,
                      int K, bool free_only) {
  GroupAction action(input.complex, input.gens);
  HalfspaceSystem hs(input.complex);
  std::ifstream in(cert_file);
  if (!in)
    throw InputError("cannot open cert file: " + cert_file);
  PingPongCert cert = load_ppcert(in);
  CertVerdict v = free_only ? check_free_cert(action, hs, cert, K)
                            : check_girth_cert(action, hs, cert, K);
  Result r;
  r.report["k"] = K;
  r.report["mode"] = free_only ? "free" : "girth";
  r.report["verdict"] = verdict_str(v.verdict);
  r.report["certified_directly"] = v.certified_directly.size();
  r.report["certified_by_nesting"] = v.certified_by_nesting.size();
  if (!v.failure.empty())
    r.report["failure"] = v.failure;
  r.code = verdict_exit(v.verdict);
  return r;
}

Result run_wreath_demo(int n, int trials, int window, std::uint64_t seed) {
  CubeComplex X = make_hypercube(n);
  auto pair = find_diametric_pair(X);
  if (!pair)
    throw InputError("hypercube has no diametric pair?");
  Result r;
  r.report["n"] = n;
  r.report["pair"] =
      json::array({X.label(pair->v), X.label(pair->vstar)});

  FiniteGroupRealization fix = aut_fixing_pair(X, *pair);
  r.report["pair_fixing_order"] = fix.order();

  CoordinateActionReport ca = coordinate_action(X, *pair);
  r.report["coordinate_action"] = {{"planes", ca.nplanes},
                                   {"faithful", ca.faithful},
                                   {"image_order", ca.image_order}};

  WreathLawReport law = verify_wreath_law(X, *pair, trials, window, seed);
  r.report["law"] = {{"aut_order", law.aut_order},
                     {"exponent", law.aut_order},
                     {"pairs_tested", law.pairs_tested},
                     {"copy_preserving", law.copy_preserving},
                     {"holds", law.law_holds},
                     {"observed_exponent", law.observed_exponent}};

  NonsolvabilityReport ns = nonsolvability_evidence(X, *pair);
  r.report["derived_orders"] = ns.derived_orders;
  r.report["solvable"] = ns.solvable;
  r.report["conclusion"] = ns.conclusion;

  bool ok = law.law_holds && law.copy_preserving && ca.faithful;
  r.code = ok ? 0 : 1;
  return r;
}

} // namespace

int dispatch(const std::vector<std::string> &args, std::ostream &out,
             std::ostream &err) {
  CLI::App app{"cube-complex group toolkit"};
  app.require_subcommand(1);

  std::string verify_report;
  app.add_option("--verify-report", verify_report,
                 "replay and compare against a stored report");

  // common option storage
  std::string file, out_file, group_file, builtin, gen_names;
  std::string complex_file, action_file, family;
  std::string plane_str, hprime_str, hsecond_str, triple_str;
  std::string sigma_str = "a", tau_str = "b", sigma_plane, tau_plane;
  std::string cert_file, word_str;
  int radius = 6, max_word_len = 4, free_rank = 0, involutions = 0;
  int max_gens = 2, repeat = 1, samples = 1000, n = 3, trials = 200;
  int window = 3, K = 3, chain_m = 3, n_max = 6, m_max = 6;
  bool strong = false, free_only = false;
  std::int64_t exhaustive_limit = 2000000;
  std::uint64_t seed = 1;

  auto add_action_opts = [&](CLI::App *sub, int default_radius) {
    radius = default_radius;
    sub->add_option("--complex", complex_file, "cubegraph file");
    sub->add_option("--action", action_file, "autperm file");
    sub->add_option("--family", family, "built-in family freeN or treeK");
    sub->add_option("--radius", radius, "ball radius for families");
    sub->add_option("--max-word-len", max_word_len, "word search depth");
  };

  auto *sc_validate = app.add_subcommand("validate", "median + flag check");
  sc_validate->add_option("file", file, "cubegraph file")->required();

  auto *sc_hyper = app.add_subcommand("hyperplanes", "list hyperplanes");
  sc_hyper->add_option("file", file, "cubegraph file")->required();

  auto *sc_rel = app.add_subcommand("relations", "pairwise plane relations");
  sc_rel->add_option("file", file, "cubegraph file")->required();

  auto *sc_dual = app.add_subcommand("dual", "pocset -> dual complex");
  sc_dual->add_option("file", file, "pocset file")->required();
  sc_dual->add_option("--out", out_file, "save dual as cubegraph");

  auto *sc_girth = app.add_subcommand("girth", "Cayley graph girth");
  sc_girth->add_option("--group", group_file, "permgrp file");
  sc_girth->add_option("--builtin", builtin, "built-in group");
  sc_girth->add_option("--gens", gen_names, "comma-separated generators");
  sc_girth->add_option("--free-rank", free_rank, "free group family");
  sc_girth->add_option("--involutions", involutions,
                       "free product of involutions family");
  sc_girth->add_option("--radius", radius, "ball radius for families");

  auto *sc_sup = app.add_subcommand("girth-sup", "max girth over gen sets");
  sc_sup->add_option("--group", group_file, "permgrp file");
  sc_sup->add_option("--builtin", builtin, "built-in group");
  sc_sup->add_option("--max-gens", max_gens, "generating set size cap");

  auto *sc_law = app.add_subcommand("law-check", "word identity check");
  sc_law->add_option("--group", group_file, "permgrp file");
  sc_law->add_option("--builtin", builtin, "built-in group");
  sc_law->add_option("--word", word_str, "dot-separated x<k>/X<k> tokens")
      ->required();
  sc_law->add_option("--repeat", repeat, "repeat the word this many times");
  sc_law->add_option("--exhaustive-limit", exhaustive_limit,
                     "max tuples for exhaustive mode");
  sc_law->add_option("--samples", samples, "samples when not exhaustive");
  sc_law->add_option("--seed", seed, "sampling seed");

  auto *sc_flip = app.add_subcommand("flip-search", "find a flipping word");
  add_action_opts(sc_flip, 6);
  sc_flip->add_option("--plane", plane_str, "halfspace plane:side")
      ->required();

  auto *sc_skewer =
      app.add_subcommand("skewer-search", "find a double-skewering word");
  add_action_opts(sc_skewer, 6);
  sc_skewer->add_option("--hprime", hprime_str, "halfspace plane:side")
      ->required();
  sc_skewer->add_option("--hsecond", hsecond_str, "halfspace plane:side")
      ->required();
  sc_skewer->add_flag("--strong", strong, "require strong separation");

  auto *sc_amp = app.add_subcommand("amplify", "grow a facing family");
  add_action_opts(sc_amp, 14);
  sc_amp->add_option("--triple", triple_str,
                     "facing triple a:sa,b:sb,c:sc")
      ->required();
  sc_amp->add_option("--n", n, "target number of pairs")->required();

  auto *sc_cert = app.add_subcommand("girth-cert", "ping-pong certificates");
  sc_cert->require_subcommand(1);
  auto *sc_build = sc_cert->add_subcommand("build", "build from poles");
  add_action_opts(sc_build, 12);
  sc_build->add_option("--sigma", sigma_str, "first element word");
  sc_build->add_option("--tau", tau_str, "second element word");
  sc_build->add_option("--sigma-plane", sigma_plane, "explicit pole");
  sc_build->add_option("--tau-plane", tau_plane, "explicit pole");
  sc_build->add_option("--chain-depth", chain_m, "pole chain depth");
  sc_build->add_option("--n-max", n_max, "max attractor power");
  sc_build->add_option("--m-max", m_max, "max nesting power");
  sc_build->add_option("--out", out_file, "write ppcert JSON here");
  auto *sc_check = sc_cert->add_subcommand("check", "verify a certificate");
  add_action_opts(sc_check, 12);
  sc_check->add_option("--cert", cert_file, "ppcert file")->required();
  sc_check->add_option("--k", K, "direct power check depth");
  sc_check->add_flag("--free", free_only, "free-subgroup criterion only");

  auto *sc_wreath = app.add_subcommand("wreath-demo", "line-complex demo");
  sc_wreath->add_option("--n", n, "hypercube dimension");
  sc_wreath->add_option("--trials", trials, "sampled pairs");
  sc_wreath->add_option("--window", window, "support window half-width");
  sc_wreath->add_option("--seed", seed, "sampling seed");

  std::function<void(CLI::App *)> allow_fallthrough = [&](CLI::App *a) {
    a->fallthrough();
    for (CLI::App *sub : a->get_subcommands([](const CLI::App *) { return true; }))
      allow_fallthrough(sub);
  };
  allow_fallthrough(&app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << e.what() << "\n";
    return 3;
  }

  Result res;
  try {
    if (*sc_validate)
      res = run_validate(file);
    else if (*sc_hyper)
      res = run_hyperplanes(file);
    else if (*sc_rel)
      res = run_relations(file);
    else if (*sc_dual)
      res = run_dual(file, out_file);
    else if (*sc_girth)
      res = run_girth(group_file, builtin, gen_names, free_rank, involutions,
                      radius);
    else if (*sc_sup)
      res = run_girth_sup(group_file, builtin, max_gens);
    else if (*sc_law)
      res = run_law_check(group_file, builtin, word_str, repeat,
                          exhaustive_limit, samples, seed);
    else if (*sc_flip)
      res = run_flip_search(
          make_action_input(complex_file, action_file, family, radius),
          plane_str, max_word_len);
    else if (*sc_skewer)
      res = run_skewer_search(
          make_action_input(complex_file, action_file, family, radius),
          hprime_str, hsecond_str, strong, max_word_len);
    else if (*sc_amp)
      res = run_amplify(
          make_action_input(complex_file, action_file, family, radius),
          triple_str, n, max_word_len);
    else if (*sc_build)
      res = run_cert_build(
          make_action_input(complex_file, action_file, family, radius),
          sigma_str, tau_str, sigma_plane, tau_plane, chain_m, n_max, m_max,
          out_file);
    else if (*sc_check)
      res = run_cert_check(
          make_action_input(complex_file, action_file, family, radius),
          cert_file, K, free_only);
    else if (*sc_wreath)
      res = run_wreath_demo(n, trials, window, seed);
  } catch (const InputError &e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError &e) {
    err << "parse error (line " << e.line << "): " << e.what() << "\n";
    return 3;
  } catch (const PocsetError &e) {
    err << "pocset error: " << e.what() << "\n";
    return 3;
  } catch (const AmplifyError &e) {
    err << "amplification invariant failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

  json full;
  full["report_version"] = 1;
  full["subcommand"] = app.get_subcommands().front()->get_name();
  json params;
  params["seed"] = seed;
  params["radius"] = radius;
  params["max_word_len"] = max_word_len;
  full["parameters"] = params;
  full["result"] = res.report;

  out << full.dump(2) << "\n";

  if (!verify_report.empty()) {
    std::ifstream in(verify_report);
    if (!in) {
      err << "cannot open stored report: " << verify_report << "\n";
      return 3;
    }
    json stored = json::parse(in, nullptr, false);
    if (stored.is_discarded()) {
      err << "stored report is not valid JSON\n";
      return 3;
    }
    if (stored == full) {
      err << "verify-report: match\n";
    } else {
      err << "verify-report: mismatch\n";
      return 1;
    }
  }
  return res.code;
}

} // namespace ccgt::cli
