#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "rankdesigns/am.hpp"
#include "rankdesigns/error.hpp"
#include "rankdesigns/fixtures.hpp"
#include "rankdesigns/io.hpp"

namespace rankdesigns::cli {

namespace {

using io::json;

struct Config {
  std::string code_path;
  std::string design_path;
  std::string out_path;
  std::string format = "json";
  std::string weights;
  std::string a_rows;
  std::size_t t = 0, w = 0, w_star = 0, n = 0, m = 0, k = 0, s = 0;
  std::uint64_t q = 0;
  unsigned threads = 0;
  EnumerationOptions opts;
};

/// The outcome of a command: the document to emit and the exit status.
struct Outcome {
  json doc;
  int status = 0;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

io::CodeFile load_code(const std::string& path) {
  json j = read_json(path);
  try {
    return io::code_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

DesignInstance load_design(const std::string& path, json* raw = nullptr) {
  json j = read_json(path);
  if (raw) *raw = j;
  try {
    return io::design_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::vector<std::string> split(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (seps.find(ch) != std::string::npos) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

/// "1,0;0,1" -> 2 x 2 matrix; identity when empty.
FqMatrix parse_transform(const std::string& text, const std::shared_ptr<const Field>& field, std::size_t n) {
  if (text.empty()) return FqMatrix::identity(field, n);
  auto rows = split(text, ";");
  if (rows.size() != n) throw ParseError("--A: expected " + std::to_string(n) + " rows");
  std::vector<Elem> flat;
  for (const auto& r : rows) {
    auto cells = split(r, ", ");
    if (cells.size() != n) throw ParseError("--A: expected " + std::to_string(n) + " entries per row");
    for (const auto& c : cells) {
      try {
        std::size_t used = 0;
        unsigned long v = std::stoul(c, &used);
        if (used != c.size()) throw std::invalid_argument(c);
        flat.push_back(static_cast<Elem>(v));
      } catch (const std::exception&) {
        throw ParseError("--A: bad entry '" + c + "'");
      }
    }
  }
  try {
    return FqMatrix(field, n, n, std::move(flat));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("--A: ") + e.what());
  }
}

json code_summary(const MatrixCode& c) {
  return json{{"n", c.rows()}, {"m", c.cols()}, {"q", c.field().size()}, {"k", c.dimension()}};
}

json counterexample_json(const DesignCounterexample& cx) {
  return json{{"first", io::subspace_to_json(cx.first)},
              {"first_count", cx.first_count.get_str()},
              {"witness", io::subspace_to_json(cx.witness)},
              {"witness_count", cx.witness_count.get_str()}};
}

// ------------------------------------------------------------- commands

Outcome cmd_weight_dist(const Config& cfg) {
  auto f = load_code(cfg.code_path);
  auto w = weight_distribution(f.matrix, cfg.opts);
  json j = code_summary(f.matrix);
  j["d"] = min_distance(w, f.matrix.rows(), f.matrix.cols());
  j["counts"] = io::distribution_to_json(w)["counts"];
  return {j};
}

Outcome cmd_dual(const Config& cfg) {
  auto f = load_code(cfg.code_path);
  return {io::code_to_json(dual(f.matrix))};
}

Outcome cmd_macwilliams(const Config& cfg) {
  std::vector<BigCount> counts;
  for (const auto& tok : split(cfg.weights, ", ")) {
    BigCount v;
    if (v.set_str(tok, 10) != 0 || v < 0) throw ParseError("--weights: bad count '" + tok + "'");
    counts.push_back(v);
  }
  if (counts.size() > cfg.n + 1) throw ParseError("--weights: more than n + 1 entries");
  counts.resize(cfg.n + 1, 0);
  if (cfg.m == 0 || cfg.n == 0) throw ParseError("--n and --m must be positive");
  Field::of_order(cfg.q);  // validates q
  auto wd = macwilliams(WeightDistribution(counts), cfg.n, cfg.m, cfg.k, cfg.q);
  return {io::distribution_to_json(wd)};
}

Outcome cmd_project(const Config& cfg, bool shortened) {
  auto f = load_code(cfg.code_path);
  auto a = parse_transform(cfg.a_rows, f.field, f.matrix.rows());
  auto c = shortened ? shorten(f.matrix, a, cfg.s) : puncture(f.matrix, a, cfg.s);
  return {io::code_to_json(c)};
}

Outcome cmd_am_check(const Config& cfg) {
  auto f = load_code(cfg.code_path);
  auto h = am_hypothesis(f.matrix, cfg.t, cfg.opts);
  json j = code_summary(f.matrix);
  j["t"] = h.t;
  j["d"] = h.d;
  j["dual_weights"] = io::distribution_to_json(h.dual_weights);
  j["dual_brute_forced"] = h.dual_brute_forced;
  j["dual_weights_in_window"] = h.dual_weights_in_window;
  j["hypothesis_holds"] = h.holds;
  return {j, h.holds ? 0 : 1};
}

Outcome cmd_am_run(const Config& cfg) {
  auto f = load_code(cfg.code_path);
  std::optional<std::size_t> w, ws;
  if (cfg.w) w = cfg.w;
  if (cfg.w_star) ws = cfg.w_star;
  return {io::report_to_json(am_run(f.matrix, cfg.t, w, ws, cfg.opts))};
}

Outcome cmd_design_verify(const Config& cfg) {
  auto d = load_design(cfg.design_path);
  auto check = verify_design(d, cfg.t, cfg.opts);
  json j{{"q", d.q()}, {"n", d.ambient()}, {"r", d.block_dim()}, {"t", cfg.t}, {"blocks", d.blocks().size()},
         {"is_design", static_cast<bool>(check)}};
  if (check) {
    j["lambda"] = check.lambda->get_str();
    return {j};
  }
  j["counterexample"] = counterexample_json(*check.counterexample);
  return {j, 1};
}

Outcome cmd_design_dual(const Config& cfg) {
  json raw;
  auto d = load_design(cfg.design_path, &raw);
  std::size_t t = cfg.t;
  if (t == 0) {
    if (!raw.contains("t") || !raw["t"].is_number_unsigned())
      throw ParseError(cfg.design_path + ": design.t: missing (or pass --t)");
    t = raw["t"].get<std::size_t>();
  }
  auto check = verify_design(d, t, cfg.opts);
  if (!check) {
    json j{{"is_design", false}, {"t", t}, {"counterexample", counterexample_json(*check.counterexample)}};
    return {j, 1};
  }
  d.set_parameters(t, *check.lambda);
  return {io::design_to_json(dual_design(d, cfg.opts))};
}

json trivial_check(const MatrixCode& c, std::size_t d, const EnumerationOptions& opts) {
  if (d > c.rows()) return json{{"holds_trivial", false}, {"supports", 0}};
  auto supports = supports_of_rank(c, d, opts);
  auto all = enumerate_subspaces(c.field_ptr(), c.rows(), d, opts);
  bool holds = supports.size() == all.size() &&
               std::all_of(all.begin(), all.end(), [&](const Subspace& s) { return supports.contains(s); });
  return json{{"holds_trivial", holds}, {"supports", supports.size()}, {"subspaces", all.size()}};
}

Outcome cmd_mrd_check(const Config& cfg) {
  auto f = load_code(cfg.code_path);
  const auto& c = f.matrix;
  auto crit = mrd_criteria(c, cfg.opts);
  bool mrd = is_mrd(c, cfg.opts);
  json j = code_summary(c);
  j["d"] = crit.d;
  j["dual_d"] = crit.dual_d;
  j["singleton"] = crit.singleton;
  j["dual_distance"] = crit.dual_distance;
  if (crit.projection_surjective) j["projection_surjective"] = *crit.projection_surjective;
  j["is_mrd"] = mrd;
  j["is_dually_qmrd"] = is_dually_qmrd(c, cfg.opts);
  if (f.vector && c.cols() >= c.rows()) {
    auto e = mrd_trivial_design_equivalence(*f.vector, f.gamma, cfg.opts);
    j["trivial_design"] = json{{"holds_trivial", e.holds_trivial}, {"supports", e.supports}};
  } else {
    j["trivial_design"] = trivial_check(c, crit.d, cfg.opts);
  }
  return {j, mrd ? 0 : 1};
}

Outcome cmd_gabidulin(const Config& cfg) {
  if (cfg.m == 0 || cfg.n == 0 || cfg.k == 0) throw ParseError("--q, --m, --n and --k are required");
  if (cfg.n > cfg.m) throw ParseError("--n must not exceed --m");
  auto g = fixtures::gabidulin_code(static_cast<unsigned>(cfg.q), static_cast<unsigned>(cfg.m), cfg.n, cfg.k);
  return {io::code_to_json(g.code, g.gamma)};
}

Outcome cmd_report(const Config& cfg) {
  auto f = load_code(cfg.code_path);
  const auto& c = f.matrix;
  const std::size_t n = c.rows(), m = c.cols();
  auto w = weight_distribution(c, cfg.opts);
  auto wd = macwilliams(w, n, m, c.dimension(), c.field().size());
  json j = code_summary(c);
  j["d"] = min_distance(w, n, m);
  j["dual_d"] = min_distance(wd, n, m);
  j["weights"] = io::distribution_to_json(w);
  j["dual_weights"] = io::distribution_to_json(wd);
  j["external_distance"] = wd.nonzero_weights(1, static_cast<int>(n)).size();
  try {
    j["covering_radius"] = covering_radius(c, cfg.opts);
  } catch (const BudgetExceeded& e) {
    j["covering_radius"] = nullptr;
    j["covering_radius_note"] = e.what();
  }
  j["is_mrd"] = is_mrd(c, cfg.opts);
  j["is_dually_qmrd"] = is_dually_qmrd(c, cfg.opts);
  if (cfg.t) {
    auto h = am_hypothesis(c, cfg.t, cfg.opts);
    j["t"] = cfg.t;
    j["dual_weights_in_window"] = h.dual_weights_in_window;
    j["hypothesis_holds"] = h.holds;
  }
  return {j};
}

void write_file(const std::filesystem::path& p, const json& j) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error(p.string() + ": cannot write");
  out << j.dump(2) << '\n';
}

Outcome cmd_generate_examples(const Config& cfg) {
  std::filesystem::path dir = cfg.out_path;
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;
  auto emit = [&](const std::string& name, const json& j) {
    write_file(dir / name, j);
    written.push_back(name);
  };
  emit("spread_s1.json", io::code_to_json(fixtures::spread_matrix_code(1)));
  auto s2 = fixtures::spread_code(2);
  emit("spread_s2.json", io::code_to_json(s2.code, s2.gamma));
  for (auto [q, m, n, k] : {std::array<unsigned, 4>{2, 4, 4, 2}, {2, 4, 4, 1}, {3, 3, 3, 1}}) {
    auto g = fixtures::gabidulin_code(q, m, n, k);
    emit("gabidulin_" + std::to_string(q) + "_" + std::to_string(m) + "_" + std::to_string(n) + "_" +
             std::to_string(k) + ".json",
         io::code_to_json(g.code, g.gamma));
  }
  emit("counterexample.json", io::code_to_json(fixtures::zero_column_code()));

  auto report = am_run(s2.matrix, 1, std::nullopt, std::nullopt, cfg.opts);
  emit("spread_design.json", io::design_to_json(report.dual.front().design));
  auto field = Field::of_order(2);
  auto all = enumerate_subspaces(field, 4, 3, cfg.opts);
  all.pop_back();
  emit("missing_block.json", io::design_to_json(DesignInstance(field, 4, 3, all)));
  return {json{{"directory", dir.string()}, {"files", written}}};
}

// --------------------------------------------------------------- output

void render_table(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) render_table(v, prefix.empty() ? key : prefix + "." + key, os);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) render_table(j[i], prefix + "[" + std::to_string(i) + "]", os);
    if (j.empty()) os << prefix << "\t-\n";
  } else if (j.is_array()) {
    os << prefix << '\t';
    for (std::size_t i = 0; i < j.size(); ++i) os << (i ? " " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
    os << '\n';
  } else {
    os << prefix << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

std::string render(const json& j, const std::string& format) {
  if (format == "table") {
    std::ostringstream os;
    render_table(j, "", os);
    return os.str();
  }
  return j.dump(2) + "\n";
}

unsigned threads_from_env() {
  const char* v = std::getenv("RANKDESIGNS_THREADS");
  if (!v || !*v) return 1;
  try {
    std::size_t used = 0;
    unsigned long n = std::stoul(v, &used);
    if (used != std::string(v).size() || n == 0) throw std::invalid_argument(v);
    return static_cast<unsigned>(n);
  } catch (const std::exception&) {
    throw ParseError(std::string("RANKDESIGNS_THREADS: expected a positive integer, got '") + v + "'");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Rank-metric codes, subspace designs and the Assmus-Mattson theorem", "rankdesigns"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", cfg.out_path, "Write the result to this file (directory for generate-examples)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--threads", cfg.threads, "Worker threads (default: RANKDESIGNS_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-codewords", cfg.opts.max_codewords, "Codeword enumeration budget")->check(CLI::PositiveNumber);
  app.add_option("--max-ambient", cfg.opts.max_ambient, "Ambient-space sweep budget")->check(CLI::PositiveNumber);
  app.add_option("--max-subspaces", cfg.opts.max_subspaces, "Subspace enumeration budget")->check(CLI::PositiveNumber);

  std::vector<std::pair<CLI::App*, std::function<Outcome()>>> commands;
  auto add = [&](const char* name, const char* help, std::function<Outcome()> fn) {
    auto* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(fn));
    return sub;
  };
  auto code_opt = [&](CLI::App* sub) { sub->add_option("--code", cfg.code_path, "Code file")->required(); };
  auto design_opt = [&](CLI::App* sub) { sub->add_option("--design", cfg.design_path, "Design file")->required(); };

  code_opt(add("weight-dist", "Exact rank distribution", [&] { return cmd_weight_dist(cfg); }));
  code_opt(add("dual", "Trace dual code", [&] { return cmd_dual(cfg); }));
  {
    auto* sub = add("macwilliams", "Dual distribution from a distribution", [&] { return cmd_macwilliams(cfg); });
    sub->add_option("--n", cfg.n, "Rows")->required();
    sub->add_option("--m", cfg.m, "Columns")->required();
    sub->add_option("--k", cfg.k, "Dimension over F_q")->required();
    sub->add_option("--q", cfg.q, "Field size")->required();
    sub->add_option("--weights", cfg.weights, "W_0,...,W_n (missing entries are 0)")->required();
  }
  for (bool shortened : {false, true}) {
    auto* sub = add(shortened ? "shorten" : "puncture", shortened ? "Shortened code" : "Punctured code",
                    [&, shortened] { return cmd_project(cfg, shortened); });
    code_opt(sub);
    sub->add_option("--s", cfg.s, "Number of leading rows removed")->required();
    sub->add_option("--A", cfg.a_rows, "Invertible n x n transform, rows separated by ';' (default: identity)");
  }
  {
    auto* sub = add("am-check", "Check the Assmus-Mattson hypothesis", [&] { return cmd_am_check(cfg); });
    code_opt(sub);
    sub->add_option("--t", cfg.t, "Strength")->required();
  }
  {
    auto* sub = add("am-run", "Extract and verify the designs", [&] { return cmd_am_run(cfg); });
    code_opt(sub);
    sub->add_option("--t", cfg.t, "Strength")->required();
    sub->add_option("--w", cfg.w, "Largest primal rank (default d)");
    sub->add_option("--w-star", cfg.w_star, "Largest dual rank (default d*)");
  }
  {
    auto* sub = add("design-verify", "Brute-force design check", [&] { return cmd_design_verify(cfg); });
    design_opt(sub);
    sub->add_option("--t", cfg.t, "Strength")->required();
  }
  {
    auto* sub = add("design-dual", "Dual design, re-verified", [&] { return cmd_design_dual(cfg); });
    design_opt(sub);
    sub->add_option("--t", cfg.t, "Strength (default: the file's t)");
  }
  code_opt(add("mrd-check", "MRD, dually QMRD and trivial-design checks", [&] { return cmd_mrd_check(cfg); }));
  {
    auto* sub = add("gabidulin", "Emit a Gabidulin code", [&] { return cmd_gabidulin(cfg); });
    sub->add_option("--q", cfg.q, "Base field size")->required();
    sub->add_option("--m", cfg.m, "Extension degree")->required();
    sub->add_option("--n", cfg.n, "Length")->required();
    sub->add_option("--k", cfg.k, "Dimension")->required();
  }
  {
    auto* sub = add("report", "Parameters, distributions, external distance and covering radius",
                    [&] { return cmd_report(cfg); });
    code_opt(sub);
    sub->add_option("--t", cfg.t, "Also check the hypothesis at this strength");
  }
  add("generate-examples", "Write the fixture files to --out", [&] { return cmd_generate_examples(cfg); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::string command;
  try {
    if (cfg.threads == 0) cfg.threads = threads_from_env();
    cfg.opts.threads = cfg.threads;
    for (auto& [sub, fn] : commands) {
      if (!sub->parsed()) continue;
      command = sub->get_name();
      if (command == "generate-examples" && cfg.out_path.empty()) throw ParseError("generate-examples: --out is required");
      Outcome o = fn();
      if (command == "generate-examples") {
        out << render(o.doc, cfg.format);
      } else if (!cfg.out_path.empty()) {
        std::ofstream f(cfg.out_path);
        if (!f) throw std::runtime_error(cfg.out_path + ": cannot write");
        f << render(o.doc, cfg.format);
      } else {
        out << render(o.doc, cfg.format);
      }
      return o.status;
    }
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::string kind = dynamic_cast<const BudgetExceeded*>(&e)        ? "budget-exceeded"
                       : dynamic_cast<const InconsistencyError*>(&e) ? "inconsistency"
                       : dynamic_cast<const DomainError*>(&e)        ? "domain-error"
                                                                      : "error";
    json diag{{"status", kind}, {"command", command}, {"message", e.what()}};
    out << render(diag, cfg.format);
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace rankdesigns::cli
