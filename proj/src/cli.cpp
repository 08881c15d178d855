#include "mixgeo/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <sstream>

#include "mixgeo/analysis.hpp"
#include "mixgeo/bounds.hpp"
#include "mixgeo/families.hpp"
#include "mixgeo/groups.hpp"
#include "mixgeo/search.hpp"
#include "mixgeo/tables.hpp"

namespace mixgeo::cli {

namespace {

constexpr int kUsage = 1;
constexpr int kInternal = 2;
constexpr int kMismatch = 3;

constexpr const char* kGraphTokens =
    "perm:D:K, kautz:Z, cycle:N, dicycle:N, petersen, fixture:NAME, or an MGF file path";

int parse_int(std::string_view s, std::string_view what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(std::string(s), &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidParam, "bad " + std::string(what) + " '" + std::string(s) + "'");
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

/// Builds a graph from a generator token, falling back to a file path.
MixedGraph load_graph(const std::string& token) {
  const auto parts = split(token, ':');
  const auto& head = parts.front();
  auto need = [&](std::size_t count) {
    if (parts.size() != count) throw Error(ErrorKind::InvalidParam, "malformed graph token '" + token + "'");
  };
  if (head == "perm") {
    need(3);
    return permutation_digraph(parse_int(parts[1], "degree"), parse_int(parts[2], "k"));
  }
  if (head == "kautz") {
    need(2);
    return kautz_mixed(parse_int(parts[1], "z"));
  }
  if (head == "cycle" || head == "dicycle") {
    need(2);
    return cycle(parse_int(parts[1], "order"), head == "dicycle");
  }
  if (head == "fixture") {
    need(2);
    return fixture(parts[1]);
  }
  if (token == "petersen" && !std::filesystem::exists(token)) return petersen();
  return read_mgf_file(token);
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty())
    out << text;
  else
    write_text_file(path, text);
}

std::string walk_text(const Walk& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
  return s;
}

std::string set_text(const ConnectionSet& s) {
  std::string t = "{";
  for (std::size_t i = 0; i < s.elements.size(); ++i) t += (i ? ", " : "") + std::to_string(s.elements[i]);
  return t + "}";
}

struct Options {
  int r = -1, z = -1, k = 2, n = 0, max_n = 0, max_order = kCatalogMaxOrder, threads = 1;
  std::uint64_t budget = 0;
  std::string mode, format, output, target, group;
  bool classes = false;
};

void cmd_bounds(const Options& o, std::ostream& out) {
  out << "M = " << moore_mixed(o.r, o.z, o.k) << "\n";
  if (o.z >= 1 && o.k >= 3) {
    out << "arrow count = " << arrow_count(o.r, o.z, o.k) << "\n";
    out << "excess >= " << excess_lb_totally_regular(o.r, o.z, o.k) << " (totally regular)\n";
    if (o.r >= 1) out << "excess >= " << excess_lb_general(o.r, o.z, o.k) << " (general)\n";
  }
  if (o.r == 1 && o.z == 1 && o.k >= 3) out << "defect >= " << defect_lb_unit(o.k) << "\n";
  if (o.k == 2 && o.r >= 1 && o.z >= 1) {
    out << "Moore graph divisibility: " << (bosak_admissible(o.r, o.z) ? "admissible" : "excluded") << "\n";
    out << "defect one divisibility: " << (defect_one_admissible(o.r, o.z).admissible ? "admissible" : "excluded")
        << "\n";
    out << "excess one divisibility: " << (excess_one_admissible(o.r, o.z) ? "admissible" : "excluded") << "\n";
  } else if (o.k >= 3 && o.r >= 1 && o.z >= 1) {
    out << "excess one: " << (excess_one_possible(o.r, o.z, o.k) ? "not excluded" : "impossible") << "\n";
  }
}

void cmd_check(const Options& o, std::ostream& out) {
  const MixedGraph g = load_graph(o.target);
  const auto p = degree_profile(g);
  const int r = o.r >= 0 ? o.r : p.max_undirected;
  const int z = o.z >= 0 ? o.z : p.max_out;
  out << "order: " << g.order() << "  edges: " << g.edges().size() << "  arcs: " << g.arcs().size() << "\n";
  out << "undirected degree: " << p.min_undirected << ".." << p.max_undirected << "  out-degree: " << p.min_out
      << ".." << p.max_out << "  in-degree: " << p.min_in << ".." << p.max_in << "\n";
  if (o.mode == "defect") {
    const auto dr = distance_report(g);
    if (dr.diameter == DistanceReport::kInfinity) {
      out << "diameter: infinite\n";
      return;
    }
    out << "diameter: " << dr.diameter;
    if (dr.diameter <= o.k) out << "  defect = " << *defect_report(g, r, z, o.k).defect;
    out << "\n";
    return;
  }
  const auto rep = geodecity_report(g, o.k);
  out << "geodetic girth: " << (rep.is_k_geodetic ? ">= " : "") << rep.girth << "\n";
  out << "k-geodetic: " << (rep.is_k_geodetic ? "yes" : "no");
  if (rep.is_k_geodetic && o.mode == "excess") out << "  excess = " << *excess_report(g, r, z, o.k).excess;
  out << "\n";
  if (rep.closed_walk_violation)
    out << "closed walk at " << rep.closed_walk_violation->u << ": " << walk_text(rep.closed_walk_violation->walk)
        << "\n";
  if (rep.violation) {
    out << "two walks " << rep.violation->u << " -> " << rep.violation->v << ": " << walk_text(rep.violation->first)
        << " | " << walk_text(rep.violation->second) << "\n";
  }
}

void cmd_gen(const Options& o, std::ostream& out) {
  const MixedGraph g = load_graph(o.target);
  if (o.format == "dot")
    emit(out, o.output, write_dot(g));
  else
    emit(out, o.output, write_mgf(g));
}

SearchConfig search_config(const Options& o) {
  SearchConfig cfg;
  cfg.mode = o.mode == "minimum" ? DegreeMode::Minimum : DegreeMode::Exact;
  cfg.node_budget = o.budget;
  cfg.threads = o.threads;
  if (o.classes) {
    cfg.witness_limit = 0;
    cfg.iso_filter = true;
  }
  return cfg;
}

void report_outcome(std::ostream& out, int n, const SearchOutcome& s) {
  out << "n = " << n << ": " << to_string(s.verdict) << "  nodes = " << s.nodes;
  if (!s.witnesses.empty()) out << "  witnesses = " << s.witnesses.size();
  if (!s.note.empty()) out << "  (" << s.note << ")";
  out << "\n";
}

void write_witnesses(const Options& o, std::ostream& out, const std::vector<MixedGraph>& ws) {
  if (ws.empty()) return;
  if (o.output.empty()) {
    out << write_mgf(ws.front());
    return;
  }
  if (ws.size() == 1) {
    write_text_file(o.output, write_mgf(ws.front()));
    return;
  }
  for (std::size_t i = 0; i < ws.size(); ++i) write_text_file(o.output + "." + std::to_string(i + 1), write_mgf(ws[i]));
}

void cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  const auto cfg = search_config(o);
  const auto start = std::chrono::steady_clock::now();
  const auto m = moore_mixed(o.r, o.z, o.k);
  out << "M = " << m << "\n";
  if (o.n > 0) {
    const auto s = search_exact(o.r, o.z, o.k, o.n, cfg);
    report_outcome(out, o.n, s);
    write_witnesses(o, out, s.witnesses);
  } else {
    const int last = o.max_n > 0 ? o.max_n : static_cast<int>(m) + 10;
    const auto res = smallest_general(o.r, o.z, o.k, cfg, static_cast<int>(m), last);
    for (const auto& v : res.per_order) report_outcome(out, v.order, v.outcome);
    if (res.order > 0) {
      out << "smallest order = " << res.order << "  excess = " << res.order - static_cast<long long>(m) << "\n";
      write_witnesses(o, out, res.outcome.witnesses);
    } else {
      out << "no graph found up to order " << last << "\n";
    }
  }
  err << "search time " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
      << " s\n";
}

void cmd_cayley(const Options& o, std::ostream& out) {
  if (!o.group.empty()) {
    const GroupTable g = preset(o.group);
    const auto res = search_cayley_group(g, o.r, o.z, o.k, o.classes ? 0 : 1);
    out << g.name() << " (order " << g.order() << "): " << to_string(res.verdict) << "  sets tested = "
        << res.sets_tested << "\n";
    for (const auto& s : res.sets) out << "S = " << set_text(s) << "\n";
    if (!res.sets.empty() && !o.output.empty())
      write_text_file(o.output, write_mgf(cayley_mixed(g, res.sets.front())));
    return;
  }
  const auto m = moore_mixed(o.r, o.z, o.k);
  out << "M = " << m << "\n";
  const auto res = smallest_cayley(o.r, o.z, o.k, o.max_order);
  for (const auto& v : res.negatives)
    out << "order " << v.order << ": none among " << v.groups << " groups (" << v.sets_tested
        << " connection sets)\n";
  if (res.order < 0) {
    out << "no Cayley graph up to order " << o.max_order << "\n";
    return;
  }
  out << "order " << res.order << ": " << res.group << " (catalog #" << res.catalog_index << ")  S = "
      << set_text(res.set) << "  excess = " << res.order - static_cast<long long>(m) << "\n";
  if (!o.output.empty()) {
    const auto groups = catalog(res.order);
    write_text_file(o.output, write_mgf(cayley_mixed(groups[res.catalog_index - 1], res.set)));
  }
}

int cmd_tables(const Options& o, std::ostream& out) {
  TableOptions topt;
  topt.max_order = o.max_order;
  if (o.max_n > 0) topt.max_n = o.max_n;
  if (o.budget > 0) topt.node_budget = o.budget;
  topt.threads = o.threads;
  const auto rep = run_table(o.target, topt);
  out << render_table(rep, o.format == "csv");
  return rep.ok() ? 0 : kMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixed graph geodecity toolkit: Moore bounds, geodecity checks, generators and searches"};
  app.require_subcommand(1);
  Options o;

  auto degrees = [&o](CLI::App* sub, bool required) {
    auto* r = sub->add_option("-r", o.r, "undirected degree");
    auto* z = sub->add_option("-z", o.z, "out-degree");
    if (required) {
      r->required();
      z->required();
    }
    sub->add_option("-k", o.k, "geodecity or diameter")->capture_default_str();
  };

  auto* bounds = app.add_subcommand("bounds", "Moore bound, excess and defect bounds, divisibility conditions");
  degrees(bounds, true);

  auto* check = app.add_subcommand("check", "Geodecity, excess or defect of a graph");
  check->add_option("graph", o.target, kGraphTokens)->required();
  degrees(check, false);
  check->add_option("--mode", o.mode, "girth (default), excess, or defect")
      ->check(CLI::IsMember({"girth", "excess", "defect"}));

  auto* gen = app.add_subcommand("gen", "Emit a generated or fixture graph");
  gen->add_option("graph", o.target, kGraphTokens)->required();
  gen->add_option("--format", o.format, "mgf (default) or dot")->check(CLI::IsMember({"mgf", "dot"}));
  gen->add_option("-o", o.output, "output file");

  auto* search = app.add_subcommand("search", "Exhaustive search for k-geodetic mixed graphs");
  degrees(search, true);
  search->add_option("-n", o.n, "search this order only");
  search->add_option("--max-n", o.max_n, "scan orders from M up to this bound (default M + 10)");
  search->add_option("--mode", o.mode, "exact (default) or minimum degrees")
      ->check(CLI::IsMember({"exact", "minimum"}));
  search->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  search->add_option("--budget", o.budget, "node budget, 0 for none");
  search->add_flag("--classes", o.classes, "collect one witness per isomorphism class");
  search->add_option("-o", o.output, "write witnesses as MGF");

  auto* cayley = app.add_subcommand("cayley", "Search Cayley mixed graphs over the group catalog");
  degrees(cayley, true);
  cayley->add_option("--max-order", o.max_order, "largest group order")->capture_default_str();
  cayley->add_option("--group", o.group, "search one group, e.g. dicyclic:12 or small:12:1");
  cayley->add_flag("--classes", o.classes, "list every connection set up to inner automorphism");
  cayley->add_option("-o", o.output, "write the first witness as MGF");

  auto* tables = app.add_subcommand("tables", "Recompute a published table and diff it");
  tables->add_option("table", o.target, "t2, t3, t4, t5 or t6")->required()->check(
      CLI::IsMember({"t2", "t3", "t4", "t5", "t6"}));
  tables->add_option("--format", o.format, "text (default) or csv")->check(CLI::IsMember({"text", "csv"}));
  tables->add_option("--max-n", o.max_n, "largest order for general searches (default 20)");
  tables->add_option("--max-order", o.max_order, "largest group order")->capture_default_str();
  tables->add_option("--budget", o.budget, "node budget per general search");
  tables->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);

  auto* dot = app.add_subcommand("export-dot", "Convert a graph to Graphviz DOT");
  dot->add_option("graph", o.target, kGraphTokens)->required();
  dot->add_option("-o", o.output, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n";
    const auto parsed = app.get_subcommands();
    err << (parsed.empty() ? app.help() : parsed.front()->help());
    return kUsage;
  }

  try {
    if (bounds->parsed()) cmd_bounds(o, out);
    if (check->parsed()) cmd_check(o, out);
    if (gen->parsed()) cmd_gen(o, out);
    if (search->parsed()) cmd_search(o, out, err);
    if (cayley->parsed()) cmd_cayley(o, out);
    if (tables->parsed()) return cmd_tables(o, out);
    if (dot->parsed()) emit(out, o.output, write_dot(load_graph(o.target)));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Overflow:
      case ErrorKind::FixtureSelfCheckFailed:
        return kInternal;
      default:
        return kUsage;
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return 0;
}

}  // namespace mixgeo::cli
