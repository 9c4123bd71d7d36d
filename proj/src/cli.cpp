#include "singlink/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "singlink/coloring.hpp"
#include "singlink/diagram.hpp"
#include "singlink/error.hpp"
#include "singlink/invariant.hpp"
#include "singlink/pairs.hpp"
#include "singlink/presentation.hpp"

namespace singlink {
namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  int max_n = 0;
  int threads = 0;
  bool slow = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::SyntaxError, path + ": " + e.what());
  }
}

bool strip_prefix(std::string& s, std::string_view prefix) {
  if (s.rfind(prefix, 0) != 0) return false;
  s.erase(0, prefix.size());
  return true;
}

std::vector<int> split_ints(const std::string& s, char sep) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::SyntaxError, "expected an integer, got '" + part + "'");
    }
  }
  return out;
}

bool is_builtin_pair(const std::string& spec) { return spec.rfind("builtin:", 0) == 0; }

SingularPair load_pair(std::string spec) {
  if (strip_prefix(spec, "builtin:")) return builtin_pair(spec);
  return pair_from_json(read_json(spec));
}

SingularDiagram load_diagram(std::string spec) {
  if (strip_prefix(spec, "@") || strip_prefix(spec, "builtin:")) return builtin_diagram(spec);
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") return diagram_from_json(read_json(spec));
  return parse_diagram(read_file(spec));
}

struct PairsArgs {
  std::string mode, pair, sw;
  bool all_lr = false, classes = false, list = false;
  int n = 0, m = 0, s = 1, t = -1, p = 0;
};

// flip:N, i2, dihedral:N, bialexander:M:S:T, twisted-flip:a,b,..., or a PairTable JSON file.
// `flip`, `dihedral` and `bialexander` without parameters take them from --n, --s, --t.
Biquandle load_switch(std::string spec, const PairsArgs& a) {
  if (spec == "flip" || spec == "dihedral" || spec == "bialexander") {
    if (a.n < 1) throw CLI::RequiredError("--n");
    if (spec == "flip") return make_flip(a.n);
    if (spec == "dihedral") return make_dihedral(a.n);
    return make_bialexander(a.n, a.s, a.t);
  }
  if (strip_prefix(spec, "flip:")) return make_flip(split_ints(spec, ':').at(0));
  if (spec == "i2") return make_i2();
  if (strip_prefix(spec, "dihedral:")) return make_dihedral(split_ints(spec, ':').at(0));
  if (strip_prefix(spec, "bialexander:")) {
    const auto v = split_ints(spec, ':');
    if (v.size() != 3) throw Error(ErrorKind::SyntaxError, "bialexander:M:S:T expected");
    return make_bialexander(v[0], v[1], v[2]);
  }
  if (strip_prefix(spec, "twisted-flip:")) return make_twisted_flip(split_ints(spec, ','));
  return Biquandle(read_json(spec).get<PairTable>());
}

// cyclic:K, symmetric:K, or a JSON file holding a finite or abelian group.
Target load_target(std::string spec) {
  if (strip_prefix(spec, "cyclic:")) return FiniteGroup::cyclic(split_ints(spec, ':').at(0));
  if (strip_prefix(spec, "symmetric:")) return FiniteGroup::symmetric(split_ints(spec, ':').at(0));
  const json j = read_json(spec);
  if (j.contains("table")) return finite_group_from_json(j);
  return abelian_group_from_json(j);
}

std::string group_text(const std::vector<long long>& torsion, int rank) {
  std::string out;
  for (long long d : torsion) out += (out.empty() ? "" : " x ") + ("Z/" + std::to_string(d));
  if (rank > 0) out += (out.empty() ? "" : " x ") + std::string(rank == 1 ? "Z" : "Z^" + std::to_string(rank));
  return out.empty() ? "1" : out;
}

std::string cell_text(std::pair<int, int> xy) {
  return "(" + std::to_string(xy.first) + "," + std::to_string(xy.second) + ")";
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---- pairs ----

int cmd_pairs(const PairsArgs& a, const Options& o, std::ostream& out) {
  if (a.mode == "check") {
    PairCheck chk;
    if (is_builtin_pair(a.pair)) {
      chk = check_singular_pair(load_pair(a.pair).biquandle(), load_pair(a.pair).tau());
    } else {
      const json j = read_json(a.pair);
      chk = check_singular_pair(Biquandle(j.at("S").get<PairTable>()), j.at("tau").get<PairTable>());
    }
    if (o.json) {
      json v = json::array();
      for (const auto& x : chk.violations) v.push_back({{"axiom", x.axiom}, {"x", x.x}, {"y", x.y}, {"z", x.z}});
      print(out, {{"valid", chk.ok}, {"violations", v}});
    } else {
      out << (chk.ok ? "valid" : "invalid") << "\n";
      for (const auto& x : chk.violations) out << x.axiom << " at " << x.x << " " << x.y << " " << x.z << "\n";
    }
    return 0;
  }
  if (a.mode == "enumerate") {
    const Biquandle b = load_switch(a.sw, a);
    EnumerateOptions opt;
    opt.require_bijective = !a.all_lr;
    opt.max_n = o.max_n > 0 ? o.max_n : 4;
    opt.threads = o.threads;
    const auto taus = enumerate_taus(b, opt);
    json j{{"count", taus.size()}};
    if (a.list) j["taus"] = taus;
    if (a.classes) {
      if (a.all_lr) throw Error(ErrorKind::InvalidArgument, "classes are only formed for singular pairs");
      std::vector<SingularPair> ps;
      for (const auto& t : taus) ps.emplace_back(b, t);
      json cl = json::array();
      for (const auto& c : classify_isomorphism(ps)) {
        const auto& tau = c.canonical.tau();
        cl.push_back({{"size", c.size},
                      {"yang_baxter", check_yang_baxter(tau)},
                      {"biquandle", check_biquandle(tau).has_value()},
                      {"S", c.canonical.S()},
                      {"tau", tau}});
      }
      j["classes"] = cl;
    }
    if (o.json) {
      print(out, j);
      return 0;
    }
    out << "taus: " << taus.size() << "\n";
    if (a.list) {
      for (const auto& t : taus) out << json(t).dump() << "\n";
    }
    if (a.classes) {
      out << "classes: " << j["classes"].size() << "\n";
      for (const auto& c : j["classes"]) {
        out << "size " << c["size"] << " ybe " << c["yang_baxter"] << " biquandle " << c["biquandle"] << " tau "
            << c["tau"].dump() << "\n";
      }
    }
    return 0;
  }
  if (a.mode == "cycles") {
    const auto cycles = cycle_decomposition(load_pair(a.pair).tau());
    if (o.json) {
      print(out, cycles);
      return 0;
    }
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " -> " : "") << cell_text(c[i]);
      out << "\n";
    }
    return 0;
  }
  if (a.mode == "tau-phi") {
    const int bound = o.max_n > 0 ? o.max_n : 12;
    if (a.m > bound) throw Error(ErrorKind::SearchBoundExceeded, "m above --max-n " + std::to_string(bound));
    const BialexanderParams bp{a.m, a.s, a.t};
    const auto phis = enumerate_phis(bp);
    const auto classes = count_tau_phi_classes(bp);
    if (o.json) {
      json j{{"m", a.m}, {"s", a.s}, {"t", a.t}, {"phis", phis.size()}, {"classes", classes}};
      if (a.list) j["phi"] = phis;
      print(out, j);
      return 0;
    }
    out << "phis: " << phis.size() << "\nclasses: " << classes << "\n";
    if (a.list) {
      for (const auto& phi : phis) out << json(phi).dump() << "\n";
    }
    return 0;
  }
  // tau-a
  const Biquandle b = make_bialexander(a.p, a.s, a.t);
  json rows = json::array();
  for (int x = 1; x < a.p; ++x) {
    const auto tau = make_tau_a(a.p, a.s, a.t, x);
    json r{{"a", x}, {"defined", tau.has_value()}};
    if (tau) {
      r["singular_pair"] = check_singular_pair(b, *tau).ok;
      r["tau"] = *tau;
    }
    rows.push_back(r);
  }
  if (o.json) {
    print(out, rows);
    return 0;
  }
  for (const auto& r : rows) {
    out << "a=" << r["a"];
    if (!r["defined"].get<bool>()) {
      out << " excluded\n";
      continue;
    }
    out << (r["singular_pair"].get<bool>() ? " singular pair " : " not a singular pair ") << r["tau"].dump() << "\n";
  }
  return 0;
}

// ---- diagram ----

struct DiagramArgs {
  std::string mode, diagram, move;
  int site = 0, variant = -1;
};

int cmd_diagram(const DiagramArgs& a, const Options& o, std::ostream& out) {
  if (a.mode == "list") {
    if (o.json) {
      print(out, builtin_diagram_names());
    } else {
      for (const auto& n : builtin_diagram_names()) out << n << "\n";
    }
    return 0;
  }
  if (a.diagram.empty()) throw CLI::RequiredError("diagram");
  const SingularDiagram d = load_diagram(a.diagram);
  auto emit = [&](const SingularDiagram& x) {
    if (o.json) {
      print(out, diagram_to_json(x));
    } else {
      out << render_diagram(x);
    }
  };
  if (a.mode == "show") {
    emit(d);
    return 0;
  }
  if (a.mode == "moves") {
    std::vector<MoveKind> kinds;
    if (!a.move.empty()) {
      kinds.push_back(parse_move_kind(a.move));
    } else {
      for (auto k : {MoveKind::RI_insert, MoveKind::RI_remove, MoveKind::RII_remove, MoveKind::RIII, MoveKind::RIVa,
                     MoveKind::RIVb, MoveKind::RV})
        kinds.push_back(k);
    }
    json all = json::array();
    for (auto k : kinds) {
      const auto sites = find_move_sites(d, k);
      for (std::size_t i = 0; i < sites.size(); ++i) {
        all.push_back({{"move", to_string(k)}, {"site", i}, {"location", sites[i].location}, {"variant", sites[i].variant}});
      }
    }
    if (o.json) {
      print(out, all);
      return 0;
    }
    for (const auto& s : all) {
      out << s["move"].get<std::string>() << " #" << s["site"] << " at";
      for (int v : s["location"]) out << " " << v;
      out << " variant " << s["variant"] << "\n";
    }
    return 0;
  }
  // apply
  if (a.move.empty()) throw CLI::RequiredError("--move");
  const auto sites = find_move_sites(d, parse_move_kind(a.move));
  if (a.site < 0 || static_cast<std::size_t>(a.site) >= sites.size())
    throw Error(ErrorKind::PatternMismatch, "no site #" + std::to_string(a.site) + " for " + a.move);
  MoveSite site = sites[a.site];
  if (a.variant >= 0) site.variant = a.variant;
  emit(apply_move(d, site));
  return 0;
}

// ---- color ----

struct ColorArgs {
  std::string diagram, pair;
  bool count_only = false, brute = false;
};

int cmd_color(const ColorArgs& a, const Options& o, std::ostream& out) {
  const SingularDiagram d = load_diagram(a.diagram);
  const SingularPair p = load_pair(a.pair);
  const auto cols = a.brute ? brute_force_colorings(d, ColoringRule(p)) : enumerate_colorings(d, p);
  if (o.json) {
    json j{{"count", cols.size()}, {"edges", d.edge_names()}};
    if (!a.count_only) {
      json rows = json::array();
      for (const auto& c : cols) rows.push_back(std::vector<int>(c.begin(), c.end()));
      j["colorings"] = rows;
    }
    print(out, j);
    return 0;
  }
  out << "colorings: " << cols.size() << "\n";
  if (a.count_only) return 0;
  for (const auto& c : cols) {
    for (int e = 0; e < d.edge_count(); ++e) out << (e ? " " : "") << d.edge_name(e) << "=" << int(c[e]);
    out << "\n";
  }
  return 0;
}

// ---- group ----

struct GroupArgs {
  std::string pair, kind = "nc", labels = "auto";
  bool coord_map = false;
};

bool use_letters(const std::string& labels, const std::string& pair) {
  return labels == "letters" || (labels == "auto" && is_builtin_pair(pair));
}

int cmd_group(const GroupArgs& a, const Options& o, std::ostream& out) {
  const SingularPair p = load_pair(a.pair);
  const Presentation pres = a.kind == "nc" ? build_unc_presentation(p) : build_ab_presentation(p);
  AbelianizedGroup g = abelianize(pres);
  if (use_letters(a.labels, a.pair)) g.use_letter_labels();
  if (o.json) {
    json j = abelianized_to_json(g, &pres);
    j["relations"] = pres.relations.size();
    if (!a.coord_map) j.erase("coord_map");
    print(out, j);
    return 0;
  }
  out << "group: " << group_text(g.torsion, g.rank) << "\n";
  out << "rank: " << g.rank << "\n";
  out << "torsion:";
  if (g.torsion.empty()) out << " none";
  for (long long d : g.torsion) out << " " << d;
  out << "\nrelations: " << pres.relations.size() << "\n";
  if (a.coord_map) {
    for (int i = 0; i < pres.generator_count(); ++i) out << pres.generator_name(i) << " = " << g.render(g.coord_map[i]) << "\n";
  }
  return 0;
}

// ---- invariant ----

struct InvariantArgs {
  std::string mode, diagram, pair, cocycle = "universal", target, labels = "auto";
  bool per_coloring = false;
};

int cmd_invariant(const InvariantArgs& a, const Options& o, std::ostream& out) {
  const SingularDiagram d = load_diagram(a.diagram);
  const SingularPair p = load_pair(a.pair);
  const bool nc = a.mode == "nc";
  CocyclePair c;
  if (a.cocycle == "universal") {
    if (!a.target.empty()) throw CLI::ValidationError("--target", "only used with a cocycle file");
    const bool letters = use_letters(a.labels, a.pair);
    c = nc ? universal_nc_cocycle(p, letters) : universal_ab_cocycle(p, letters);
  } else {
    if (a.target.empty()) throw CLI::RequiredError("--target (needed with a cocycle file)");
    c = cocycle_from_json(read_json(a.cocycle), load_target(a.target), p);
  }
  if (nc) {
    const auto v = nc_invariant(d, p, c);
    TargetOps ops(c.target);
    if (o.json) {
      json vals = json::array();
      for (const auto& [tuple, count] : v.multiset) {
        json comps = json::array();
        for (const auto& e : tuple) comps.push_back(ops.render(e));
        vals.push_back({{"components", comps}, {"count", count}});
      }
      print(out, {{"colorings", v.colorings.size()}, {"values", vals}});
      return 0;
    }
    out << render_nc_value(v, c.target) << "\n";
    if (a.per_coloring) {
      for (std::size_t k = 0; k < v.colorings.size(); ++k) {
        for (int e = 0; e < d.edge_count(); ++e) out << (e ? " " : "  ") << d.edge_name(e) << "=" << int(v.colorings[k][e]);
        out << " :";
        for (const auto& e : v.per_coloring[k]) out << " " << ops.render(e);
        out << "\n";
      }
    }
    return 0;
  }
  const auto v = state_sum(d, p, c);
  if (o.json) {
    json terms = json::array();
    for (const auto& [e, k] : v.terms) terms.push_back({{"element", e}, {"coefficient", k}});
    print(out, {{"value", render_laurent(v, c.target)}, {"terms", terms}});
    return 0;
  }
  out << render_laurent(v, c.target) << "\n";
  return 0;
}

// ---- tables ----

struct TablesArgs {
  std::string which;
  int n = 0, bound = 3;
};

int cmd_tables(const TablesArgs& a, const Options& o, std::ostream& out) {
  json rows = json::array();
  auto range = [&](int lo, int hi) {
    std::vector<int> v;
    if (a.n > 0) {
      v.push_back(a.n);
    } else {
      for (int k = lo; k <= hi; ++k) v.push_back(k);
    }
    return v;
  };
  if (a.which == "flip-counts") {
    const int hi = o.max_n > 0 ? o.max_n : 4;
    if (!o.json) out << "# n pairs classes\n";
    for (int n : range(2, hi)) {
      EnumerateOptions opt;
      opt.max_n = std::max(hi, n);
      opt.threads = o.threads;
      const Biquandle flip = make_flip(n);
      const auto taus = enumerate_taus(flip, opt);
      std::vector<SingularPair> ps;
      for (const auto& t : taus) ps.emplace_back(flip, t);
      const auto classes = classify_isomorphism(ps).size();
      rows.push_back({{"n", n}, {"pairs", taus.size()}, {"classes", classes}});
      if (!o.json) out << n << " " << taus.size() << " " << classes << std::endl;
    }
  } else if (a.which == "lr-invertible") {
    if (!o.json) out << "# n total classes bijective bijective_classes\n";
    for (int n : range(2, o.max_n > 0 ? std::min(o.max_n, 4) : 4)) {
      const LrCounts c = enumerate_left_right_invertible(n);
      rows.push_back({{"n", n}, {"total", c.total}, {"classes", c.iso}, {"bijective", c.bijective}, {"bijective_classes", c.bijective_iso}});
      if (!o.json) out << n << " " << c.total << " " << c.iso << " " << c.bijective << " " << c.bijective_iso << std::endl;
    }
  } else if (a.which == "tau-phi") {
    if (!o.json) out << "# n phis classes\n";
    const int hi = o.slow ? 12 : 9;
    for (int n : range(3, o.max_n > 0 ? std::min(o.max_n, hi) : hi)) {
      const BialexanderParams bp{n, 1, -1};
      const auto phis = enumerate_phis(bp).size();
      const auto classes = count_tau_phi_classes(bp);
      rows.push_back({{"n", n}, {"phis", phis}, {"classes", classes}});
      if (!o.json) out << n << " " << phis << " " << classes << std::endl;
    }
  } else if (a.which == "flip-classes") {
    const int n = a.n > 0 ? a.n : 3;
    EnumerateOptions opt;
    opt.max_n = o.max_n > 0 ? o.max_n : 4;
    opt.threads = o.threads;
    const Biquandle flip = make_flip(n);
    std::vector<SingularPair> ps;
    for (const auto& t : enumerate_taus(flip, opt)) ps.emplace_back(flip, t);
    if (!o.json) out << "# size yang_baxter biquandle cycles\n";
    for (const auto& c : classify_isomorphism(ps)) {
      const auto& tau = c.canonical.tau();
      const auto cycles = cycle_decomposition(tau);
      const bool ybe = check_yang_baxter(tau), bq = check_biquandle(tau).has_value();
      rows.push_back({{"size", c.size}, {"yang_baxter", ybe}, {"biquandle", bq}, {"tau", tau}, {"cycles", cycles}});
      if (o.json) continue;
      out << c.size << " " << (ybe ? "yes" : "no") << " " << (bq ? "yes" : "no") << " ";
      bool first = true;
      for (const auto& cyc : cycles) {
        if (cyc.size() == 1 && !first) continue;
        out << (first ? "" : " ") << "[";
        for (std::size_t i = 0; i < cyc.size(); ++i) out << (i ? " " : "") << cell_text(cyc[i]);
        out << "]";
        first = false;
      }
      out << "\n";
    }
  } else {  // compare
    if (!o.json) out << "# pair U_ab Ab universal_nc_is_ab nc_pairs_into_Z/k also_ab\n";
    for (const auto& name : builtin_pair_names()) {
      if (name == "flip-s2") continue;
      const auto r = compare_cocycle_notions(builtin_pair(name), a.bound);
      auto text = [](const std::vector<long long>& f) {
        std::vector<long long> tor;
        int rank = 0;
        for (long long d : f) d == 0 ? ++rank : (tor.push_back(d), 0);
        return group_text(tor, rank);
      };
      std::string failures;
      for (const auto& f : r.universal_failures) failures += (failures.empty() ? "" : ",") + f;
      rows.push_back({{"pair", name},
                      {"unc_ab", r.unc_factors},
                      {"ab", r.ab_factors},
                      {"universal_passes_ab", r.universal_passes_ab},
                      {"universal_failures", r.universal_failures},
                      {"examined", r.examined},
                      {"also_abelian", r.also_abelian},
                      {"truncated", r.truncated}});
      if (!o.json) {
        out << name << " " << text(r.unc_factors) << " | " << text(r.ab_factors) << " | "
            << (r.universal_passes_ab ? "yes" : "no (" + failures + ")") << " | " << r.examined << " " << r.also_abelian
            << (r.truncated ? " (truncated)" : "") << "\n";
      }
    }
  }
  if (o.json) print(out, rows);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Singular link invariants from singular pairs and cocycle pairs"};
  app.name("singlink");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--max-n", o.max_n, "Search bound (default 4, or 12 for tau_phi families)")->check(CLI::PositiveNumber);
  app.add_option("--threads", o.threads, "Worker threads (default SINGLINK_THREADS or 1)")->check(CLI::PositiveNumber);
  app.add_flag("--slow", o.slow, "Include the n >= 10 tau_phi rows");

  PairsArgs pa;
  auto* pairs = app.add_subcommand("pairs", "Check and enumerate singular pairs");
  pairs->add_option("mode", pa.mode, "check | enumerate | cycles | tau-phi | tau-a")
      ->required()
      ->check(CLI::IsMember({"check", "enumerate", "cycles", "tau-phi", "tau-a"}));
  pairs->add_option("pair,--pair", pa.pair, "builtin:NAME or a JSON file {\"S\", \"tau\"}");
  pairs->add_option("--switch", pa.sw, "flip:N | i2 | dihedral:N | bialexander:M:S:T | twisted-flip:a,b,.. | file");
  pairs->add_flag("--all-lr", pa.all_lr, "Do not require tau to be bijective");
  pairs->add_option("--n", pa.n, "Size for --switch flip | dihedral | bialexander");
  pairs->add_flag("--classes,--iso", pa.classes, "Group the results into isomorphism classes");
  pairs->add_flag("--list", pa.list, "List every solution");
  pairs->add_option("--m", pa.m, "Modulus for tau-phi");
  pairs->add_option("--p", pa.p, "Prime for tau-a");
  pairs->add_option("--s", pa.s, "Alexander parameter s (default 1)");
  pairs->add_option("--t", pa.t, "Alexander parameter t (default -1)");

  DiagramArgs da;
  auto* diagram = app.add_subcommand("diagram", "Show diagrams and apply Reidemeister moves");
  diagram->add_option("mode", da.mode, "list | show | moves | move")
      ->required()
      ->check(CLI::IsMember({"list", "show", "moves", "move", "apply"}));
  diagram->add_option("diagram", da.diagram, "@NAME or a diagram file (.json or text)");
  diagram->add_option("--move", da.move, "RI_insert | RI_remove | RII_remove | RIII | RIVa | RIVb | RV");
  diagram->add_option("--site", da.site, "Index into the move's site list");
  diagram->add_option("--variant", da.variant, "Override the site's variant");

  ColorArgs ca;
  auto* color = app.add_subcommand("color", "Enumerate colorings");
  color->add_option("diagram", ca.diagram)->required();
  color->add_option("--pair", ca.pair)->required();
  color->add_flag("--count-only", ca.count_only);
  color->add_flag("--brute-force", ca.brute, "Filter all assignments instead of propagating");

  GroupArgs ga;
  auto* group = app.add_subcommand("group", "Abelianized universal groups");
  group->add_option("--pair", ga.pair)->required();
  group->add_option("--kind", ga.kind, "nc | ab")->check(CLI::IsMember({"nc", "ab"}));
  group->add_flag("--coord-map", ga.coord_map, "Print every generator's coordinates");
  group->add_option("--labels", ga.labels, "auto | letters | z")->check(CLI::IsMember({"auto", "letters", "z"}));

  InvariantArgs ia;
  auto* inv = app.add_subcommand("invariant", "Cocycle invariants of singular links");
  inv->add_option("mode", ia.mode, "nc | statesum")->required()->check(CLI::IsMember({"nc", "statesum"}));
  inv->add_option("diagram", ia.diagram)->required();
  inv->add_option("--pair", ia.pair)->required();
  inv->add_option("--cocycle", ia.cocycle, "universal or a JSON file");
  inv->add_option("--target", ia.target, "cyclic:K | symmetric:K | group JSON file");
  inv->add_option("--labels", ia.labels, "auto | letters | z")->check(CLI::IsMember({"auto", "letters", "z"}));
  inv->add_flag("--per-coloring", ia.per_coloring, "List the value of every coloring");

  TablesArgs ta;
  auto* tables = app.add_subcommand("tables", "Reproduce the enumeration tables");
  tables->add_option("--which", ta.which)
      ->required()
      ->check(CLI::IsMember({"flip-counts", "lr-invertible", "tau-phi", "flip-classes", "compare"}));
  tables->add_option("--n", ta.n, "A single row")->check(CLI::PositiveNumber);
  tables->add_option("--bound", ta.bound, "Largest cyclic group order for --which compare")->check(CLI::Range(2, 16));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (o.threads > 0) setenv("SINGLINK_THREADS", std::to_string(o.threads).c_str(), 1);

  try {
    if (*pairs) {
      if ((pa.mode == "check" || pa.mode == "cycles") && pa.pair.empty()) throw CLI::RequiredError("--pair");
      if (pa.mode == "enumerate" && pa.sw.empty()) throw CLI::RequiredError("--switch");
      if (pa.mode == "tau-phi" && pa.m < 1) throw CLI::RequiredError("--m");
      if (pa.mode == "tau-a" && pa.p < 2) throw CLI::RequiredError("--p");
      return cmd_pairs(pa, o, out);
    }
    if (*diagram) return cmd_diagram(da, o, out);
    if (*color) return cmd_color(ca, o, out);
    if (*group) return cmd_group(ga, o, out);
    if (*inv) return cmd_invariant(ia, o, out);
    return cmd_tables(ta, o, out);
  } catch (const CLI::Error& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    err << "SyntaxError: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "SyntaxError: missing value\n";
    return 1;
  }
}

}  // namespace singlink
