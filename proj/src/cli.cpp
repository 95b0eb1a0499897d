#include "hyperconn/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <set>
#include <sstream>

#include "hyperconn/classes.hpp"
#include "hyperconn/connectivity.hpp"
#include "hyperconn/generators.hpp"
#include "hyperconn/hgr.hpp"
#include "hyperconn/strongcut.hpp"
#include "hyperconn/transversal.hpp"
#include "hyperconn/verify.hpp"
#include "hyperconn/weakflow.hpp"

namespace hyperconn::cli {

namespace {

using json = nlohmann::ordered_json;

const std::set<std::string> kCommands = {"components", "kappa-w",  "kappa-w-pair", "kappa-we", "kappa-s",
                                         "kappa-s-pair", "kappa-se", "tau",          "alpha",    "classify",
                                         "generate",   "reduce-vc", "normalize"};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::vector<std::string> operands;
  std::optional<std::size_t> u;
  std::optional<std::size_t> v;
  bool json = false;
  bool text = false;
  bool via_paths = false;
  std::uint64_t seed = 1;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::size_t max_edge_size = 3;
  std::optional<std::size_t> budget_subsets;
  std::optional<std::size_t> budget_paths;
  std::optional<std::size_t> budget_trees;
};

// Everything a command produces; rendered as JSON or text at the end.
struct Outcome {
  std::optional<std::size_t> value;
  std::optional<std::vector<std::size_t>> witness;  // 1-based
  std::string witness_kind = "none";
  std::optional<bool> attained;
  std::optional<std::string> method;
  json details = json::object();
  std::optional<std::string> hgr;  // hypergraph-producing commands
  std::optional<std::string> exhausted;
};

std::string hex_digest(std::string_view bytes) {
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << fnv1a(bytes);
  return out.str();
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& ids) {
  std::vector<std::size_t> out(ids);
  for (auto& x : out) ++x;
  return out;
}

std::size_t env_budget(const EnvLookup& env, const char* name, std::size_t fallback) {
  const char* raw = env(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  std::size_t value = 0;
  const std::string_view text(raw);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw UsageError(std::string(name) + " must be a positive integer");
  }
  return value;
}

Budget resolve_budget(const Options& opt, const EnvLookup& env) {
  Budget b;
  b.subsets = opt.budget_subsets.value_or(env_budget(env, "HYPERCONN_BUDGET_SUBSETS", b.subsets));
  b.paths = opt.budget_paths.value_or(env_budget(env, "HYPERCONN_BUDGET_PATHS", b.paths));
  b.trees = opt.budget_trees.value_or(env_budget(env, "HYPERCONN_BUDGET_TREES", b.trees));
  // The tree budget also caps the other class-recognition searches.
  b.orderings = b.cycles = b.colourings = b.trees;
  return b;
}

std::string read_input(const Options& opt, std::size_t index, std::istream& in) {
  std::ostringstream buf;
  if (opt.operands.size() <= index || opt.operands[index] == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(opt.operands[index], std::ios::binary);
  if (!file) throw HgrParseError(0, "cannot open " + opt.operands[index]);
  buf << file.rdbuf();
  return buf.str();
}

void expect_operands(const Options& opt, std::size_t max) {
  if (opt.operands.size() > max) throw UsageError("too many operands for " + opt.command);
}

std::pair<VertexId, VertexId> pair_of(const Options& opt, const Hypergraph& h) {
  if (!opt.u || !opt.v) throw UsageError(opt.command + " needs --u and --v");
  const std::size_t n = h.num_vertices();
  if (*opt.u < 1 || *opt.u > n || *opt.v < 1 || *opt.v > n) {
    throw UsageError("--u/--v must lie in [1, " + std::to_string(n) + "]");
  }
  if (*opt.u == *opt.v) throw UsageError("--u and --v must differ");
  return {*opt.u - 1, *opt.v - 1};
}

bool has_pair(const Options& opt) {
  if (opt.u.has_value() != opt.v.has_value()) throw UsageError("--u and --v go together");
  return opt.u.has_value();
}

void require(bool ok, const std::string& what) {
  if (!ok) throw VerificationFailure(what);
}

template <typename Result>
void fill_cut(Outcome& out, const Result& r, const char* kind) {
  out.value = r.value;
  out.witness = one_based(r.witness);
  out.witness_kind = kind;
  out.attained = r.attained;
}

// A convention value carries no witness; an attained value must be backed by
// a witness of exactly that size which the matching deletion check accepts.
template <typename Result, typename Check>
void check_cut(const Result& r, Check&& check) {
  if (!r.attained) {
    require(r.witness.empty(), "unattained result carries a witness");
    return;
  }
  require(r.witness.size() == r.value, "witness size differs from value");
  require(check(std::span<const std::size_t>(r.witness)), "witness does not disconnect");
}

json class_details(const ClassReport& c) {
  json d;
  json arb = {{"verdict", to_string(c.arboreal.verdict)}};
  if (c.arboreal.tree) {
    json links = json::array();
    for (const auto& [a, b] : c.arboreal.tree->links()) links.push_back({a + 1, b + 1});
    arb["tree"] = links;
  }
  d["arboreal"] = arb;
  json bic = {{"verdict", to_string(c.bicolourable.verdict)}};
  if (c.bicolourable.verdict == Verdict::Yes) bic["colouring"] = c.bicolourable.colouring;
  d["bicolourable"] = bic;
  json helly = {{"verdict", to_string(c.helly.verdict)}};
  if (c.helly.verdict == Verdict::No) {
    helly["triple"] = one_based(c.helly.triple);
    helly["family"] = one_based(c.helly.family);
  }
  d["helly"] = helly;
  json tb = {{"verdict", to_string(c.totally_balanced.verdict)}};
  if (c.totally_balanced.violating_cycle) {
    tb["cycle"] = {{"vertices", one_based(c.totally_balanced.violating_cycle->vertices)},
                   {"edges", one_based(c.totally_balanced.violating_cycle->edges)}};
  }
  d["totally_balanced"] = tb;
  json iv = {{"verdict", to_string(c.interval.verdict)}};
  if (c.interval.verdict == Verdict::Yes) iv["ordering"] = one_based(c.interval.ordering);
  d["interval"] = iv;
  d["konig"] = {{"verdict", to_string(c.konig.verdict)},
                {"alpha", c.konig.matching.alpha},
                {"tau", c.konig.transversal.tau},
                {"matching", one_based(c.konig.matching.witness)},
                {"transversal", one_based(c.konig.transversal.witness)}};
  d["normal"] = {{"verdict", to_string(c.normal)}};
  return d;
}

void check_classes(const Hypergraph& h, const ClassReport& c) {
  if (c.arboreal.verdict == Verdict::Yes) {
    require(c.arboreal.tree && verify_representative_tree(h, *c.arboreal.tree), "representative tree rejected");
  }
  if (c.bicolourable.verdict == Verdict::Yes) {
    require(verify_bicolouring(h, c.bicolourable.colouring), "bicolouring rejected");
  }
  if (c.helly.verdict == Verdict::No) require(verify_helly_violation(h, c.helly.family), "Helly family rejected");
  if (c.totally_balanced.verdict == Verdict::No) {
    require(c.totally_balanced.violating_cycle && verify_violating_cycle(h, *c.totally_balanced.violating_cycle),
            "violating cycle rejected");
  }
  if (c.interval.verdict == Verdict::Yes) {
    require(verify_interval_ordering(h, c.interval.ordering), "interval ordering rejected");
  }
  require(is_matching(h, c.konig.matching.witness) && c.konig.matching.witness.size() == c.konig.matching.alpha,
          "matching rejected");
  require(is_transversal(h, c.konig.transversal.witness) &&
              c.konig.transversal.witness.size() == c.konig.transversal.tau,
          "transversal rejected");
}

void emit_hypergraph(Outcome& out, const Hypergraph& h, const std::vector<std::string>& comments) {
  std::string text = serialize_hgr(h, comments);
  require(parse_hgr(text) == h, "serialized hypergraph does not round-trip");
  out.value = h.num_vertices();
  out.details = {{"vertices", h.num_vertices()}, {"edges", h.num_edges()}};
  out.hgr = std::move(text);
}

Graph graph_from(const Hypergraph& h) {
  Graph g{h.num_vertices(), {}};
  for (const Edge& e : h.edges()) {
    if (e.cardinality() != 2 || e.size() != 2) throw HgrParseError(0, "reduce-vc expects a graph: every edge must have two distinct vertices");
    const VertexSet s = e.support();
    g.links.push_back({s[0], s[1]});
  }
  return g;
}

std::string ids_text(const std::vector<std::size_t>& ids) {
  std::string s;
  for (std::size_t x : ids) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

Hypergraph generated(const Options& opt, std::istream& in, std::vector<std::string>& comments) {
  if (opt.operands.empty()) throw UsageError("generate needs a family name");
  const std::string& name = opt.operands[0];
  expect_operands(opt, name == "umlaut" ? 2 : 1);
  comments.push_back("generated " + name);
  if (name == "fig1") return fig1_disjoint_cuts();
  if (name == "fig2") {
    const std::size_t n = opt.n.value_or(2);
    if (n < 2) throw UsageError("fig2 needs --n >= 2");
    comments.back() += " n=" + std::to_string(n);
    return fig2_gap(n);
  }
  if (name == "fig3") return fig3_chain();
  if (name == "two-books") return two_books();
  if (name == "fano") return fano();
  if (name == "fano-doubled") return fano_doubled();
  if (name == "random" || name == "random-interval") {
    const std::size_t n = opt.n.value_or(8);
    const std::size_t m = opt.m.value_or(10);
    comments.back() += " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                       " max-edge-size=" + std::to_string(opt.max_edge_size) + " seed=" + std::to_string(opt.seed);
    try {
      if (name == "random") return random_hypergraph(n, m, opt.max_edge_size, opt.seed);
      return random_interval_hypergraph(n, m, opt.max_edge_size, opt.seed);
    } catch (const InputError& e) {
      throw UsageError(e.what());
    }
  }
  if (name == "umlaut") {
    const Hypergraph h = parse_hgr(read_input(opt, 1, in));
    if (h.num_vertices() == 0) throw HgrParseError(0, "umlaut needs at least one vertex");
    comments.back() += " u1=" + std::to_string(h.num_vertices() + 1) + " u2=" + std::to_string(h.num_vertices() + 2);
    return umlaut(h);
  }
  throw UsageError("unknown family '" + name + "'");
}

Outcome execute(const Options& opt, const Budget& budget, std::istream& in, std::string& digest_source) {
  Outcome out;
  StrongOptions strong;
  strong.budget = budget;

  if (opt.command == "generate") {
    std::vector<std::string> comments;
    const Hypergraph h = generated(opt, in, comments);
    emit_hypergraph(out, h, comments);
    digest_source = *out.hgr;
    return out;
  }

  expect_operands(opt, 1);
  digest_source = read_input(opt, 0, in);
  const HgrDocument doc = parse_hgr_document(digest_source);
  const Hypergraph& h = doc.hypergraph;

  if (opt.command == "normalize") {
    emit_hypergraph(out, normalize(h), doc.comments);
  } else if (opt.command == "reduce-vc") {
    const ReductionInstance r = vc_reduction(graph_from(h));
    emit_hypergraph(out, r.hypergraph,
                    {"vertex-cover reduction", "A_u: " + ids_text(one_based(r.a_u)),
                     "A_v: " + ids_text(one_based(r.a_v)), "V_G: " + ids_text(one_based(r.v_g))});
    out.details["a_u"] = one_based(r.a_u);
    out.details["a_v"] = one_based(r.a_v);
    out.details["v_g"] = one_based(r.v_g);
  } else if (opt.command == "components") {
    const ComponentLabeling c = components(h);
    std::vector<std::vector<std::size_t>> groups(c.count);
    for (VertexId x = 0; x < h.num_vertices(); ++x) groups[c.label[x]].push_back(x + 1);
    for (const Edge& e : h.edges()) {
      const auto members = e.support();
      for (VertexId x : members) require(c.label[x] == c.label[members.front()], "edge spans two components");
    }
    out.value = c.count;
    out.method = "BFS";
    out.details["components"] = groups;
  } else if (opt.command == "kappa-w" || opt.command == "kappa-w-pair") {
    out.method = "FLOW";
    if (opt.command == "kappa-w-pair") {
      const auto [u, v] = pair_of(opt, h);
      const CutResult r = kappa_w_pair(h, u, v);
      check_cut(r, [&](auto w) { return verify_weak_pair_cut(h, u, v, w); });
      fill_cut(out, r, "vertices");
    } else {
      if (has_pair(opt)) throw UsageError("kappa-w takes no pair; use kappa-w-pair");
      const CutResult r = kappa_w(h);
      check_cut(r, [&](auto w) { return verify_weak_vertex_cut(h, w); });
      fill_cut(out, r, "vertices");
    }
  } else if (opt.command == "kappa-we") {
    out.method = "FLOW";
    if (has_pair(opt)) {
      const auto [u, v] = pair_of(opt, h);
      const CutResult r = kappa_w_edge_pair(h, u, v);
      check_cut(r, [&](auto w) { return verify_weak_pair_disconnecting_set(h, u, v, w); });
      fill_cut(out, r, "edges");
    } else {
      const CutResult r = kappa_w_edge(h);
      check_cut(r, [&](auto w) { return verify_weak_disconnecting_set(h, w); });
      fill_cut(out, r, "edges");
    }
  } else if (opt.command == "kappa-s") {
    if (has_pair(opt)) throw UsageError("kappa-s takes no pair; use kappa-s-pair");
    const StrongCutResult r = kappa_s(h, strong);
    check_cut(r, [&](auto w) { return verify_strong_vertex_cut(h, w); });
    fill_cut(out, r, "vertices");
    out.method = std::string(to_string(r.method));
  } else if (opt.command == "kappa-s-pair") {
    const auto [u, v] = pair_of(opt, h);
    StrongCutResult r = kappa_s_pair(h, u, v, strong);
    out.method = std::string(to_string(r.method));
    if (opt.via_paths && r.attained) {
      // Minimum transversal of the path-support hypergraph, mapped back to
      // the input's vertex ids.
      const Hypergraph support = path_support_hypergraph(h, u, v, budget.paths);
      const TransversalResult t = tau(support);
      std::vector<VertexId> back;
      for (VertexId x = 0; x < h.num_vertices(); ++x) {
        if (x != u && x != v) back.push_back(x);
      }
      VertexSet witness;
      for (VertexId x : t.witness) witness.push_back(back[x]);
      require(t.tau == r.value, "path-support transversal disagrees with enumeration");
      r.witness = witness;
      out.method = "PATH_SUPPORT";
      out.details["path_support_edges"] = support.num_edges();
    }
    check_cut(r, [&](auto w) { return verify_strong_pair_cut(h, u, v, w); });
    fill_cut(out, r, "vertices");
  } else if (opt.command == "kappa-se") {
    StrongCutResult r;
    if (has_pair(opt)) {
      const auto [u, v] = pair_of(opt, h);
      r = kappa_s_edge_pair(h, u, v, strong);
      check_cut(r, [&](auto w) { return verify_strong_pair_disconnecting_set(h, u, v, w); });
    } else {
      r = kappa_s_edge(h, strong);
      check_cut(r, [&](auto w) { return verify_strong_disconnecting_set(h, w); });
    }
    fill_cut(out, r, "edges");
    out.method = std::string(to_string(r.method));
  } else if (opt.command == "tau") {
    const TransversalResult r = tau(h);
    require(is_transversal(h, r.witness) && r.witness.size() == r.tau, "transversal rejected");
    out.value = r.tau;
    out.witness = one_based(r.witness);
    out.witness_kind = "vertices";
    out.attained = true;
    out.method = "BRANCH_AND_BOUND";
  } else if (opt.command == "alpha") {
    const MatchingResult r = alpha(h);
    require(is_matching(h, r.witness) && r.witness.size() == r.alpha, "matching rejected");
    out.value = r.alpha;
    out.witness = one_based(r.witness);
    out.witness_kind = "edges";
    out.attained = true;
    out.method = "BRANCH_AND_BOUND";
  } else if (opt.command == "classify") {
    const ClassReport c = classify(h, budget);
    check_classes(h, c);
    out.details = class_details(c);
    for (Verdict v : {c.arboreal.verdict, c.bicolourable.verdict, c.helly.verdict, c.totally_balanced.verdict,
                      c.interval.verdict}) {
      if (v == Verdict::Unknown) out.exhausted = "trees";
    }
  }
  return out;
}

json budget_json(const Budget& b, const std::optional<std::string>& exhausted) {
  json j = {{"subsets", b.subsets}, {"paths", b.paths}, {"trees", b.trees}};
  j["status"] = exhausted ? "exhausted" : "ok";
  j["exhausted"] = exhausted ? json(*exhausted) : json(nullptr);
  return j;
}

json report_json(const Options& opt, const std::string& digest, const Outcome& o, const Budget& b, double ms) {
  json j;
  j["schema"] = 1;
  j["command"] = opt.command;
  j["input_digest"] = digest;
  if (opt.u && opt.v) j["pair"] = {*opt.u, *opt.v};
  j["value"] = o.value ? json(*o.value) : json(nullptr);
  j["witness"] = o.witness ? json(*o.witness) : json(nullptr);
  j["witness_kind"] = o.witness_kind;
  j["attained"] = o.attained ? json(*o.attained) : json(nullptr);
  j["method"] = o.method ? json(*o.method) : json(nullptr);
  j["verified"] = true;
  j["timing"] = {{"elapsed_ms", ms}};
  j["budget"] = budget_json(b, o.exhausted);
  j["details"] = o.details;
  if (o.hgr) j["hgr"] = *o.hgr;
  return j;
}

void print_text(std::ostream& out, const Options& opt, const Outcome& o) {
  out << "command: " << opt.command << '\n';
  if (o.value) out << "value: " << *o.value << '\n';
  if (o.witness) out << "witness (" << o.witness_kind << "): " << ids_text(*o.witness) << '\n';
  if (o.attained) out << "attained: " << (*o.attained ? "true" : "false") << '\n';
  if (o.method) out << "method: " << *o.method << '\n';
  for (const auto& [key, val] : o.details.items()) {
    if (val.is_object() && val.contains("verdict")) {
      out << key << ": " << val["verdict"].get<std::string>() << '\n';
    } else {
      out << key << ": " << val.dump() << '\n';
    }
  }
  if (o.exhausted) out << "budget: exhausted (" << *o.exhausted << ")\n";
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const EnvLookup& env) {
  Options opt;
  CLI::App app{"Exact hypergraph connectivity toolkit", "hyperconn"};
  app.add_option("command", opt.command, "one of: components kappa-w kappa-w-pair kappa-we kappa-s kappa-s-pair "
                                         "kappa-se tau alpha classify generate reduce-vc normalize")
      ->required();
  app.add_option("operands", opt.operands, "input file (default stdin), or the family name for generate");
  app.add_option("--u", opt.u, "first pair vertex (1-based)");
  app.add_option("--v", opt.v, "second pair vertex (1-based)");
  auto* json_flag = app.add_flag("--json", opt.json, "emit a JSON report");
  app.add_flag("--text", opt.text, "emit plain text (default)")->excludes(json_flag);
  app.add_flag("--via-paths", opt.via_paths, "kappa-s-pair: report the transversal of the path-support hypergraph");
  app.add_option("--seed", opt.seed, "generator seed");
  app.add_option("--n", opt.n, "generator size parameter");
  app.add_option("--m", opt.m, "generator edge count");
  app.add_option("--max-edge-size", opt.max_edge_size, "generator edge size cap")->check(CLI::PositiveNumber);
  app.add_option("--budget-subsets", opt.budget_subsets, "max subsets enumerated by strong solvers")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-paths", opt.budget_paths, "max paths for the path-support hypergraph")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-trees", opt.budget_trees, "max steps of each class-recognition search")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidFlags;
  }
  if (!kCommands.contains(opt.command)) {
    err << "error: unknown command '" << opt.command << "'\n";
    return kInvalidFlags;
  }

  Budget budget;
  Outcome outcome;
  std::string digest_source;
  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    budget = resolve_budget(opt, env);
    outcome = execute(opt, budget, in, digest_source);
    if (outcome.exhausted) code = kBudgetExhausted;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidFlags;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    outcome = Outcome{};
    outcome.exhausted = e.budget();
    code = kBudgetExhausted;
  } catch (const VerificationFailure& e) {
    err << "internal error: witness verification failed: " << e.what() << '\n';
    return kInternalError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (opt.json) {
    out << report_json(opt, hex_digest(digest_source), outcome, budget, ms).dump(2) << '\n';
  } else if (outcome.hgr) {
    out << *outcome.hgr;
  } else {
    print_text(out, opt, outcome);
  }
  return code;
}

}  // namespace hyperconn::cli
