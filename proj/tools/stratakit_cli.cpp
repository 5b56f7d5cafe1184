// Command-line front end: family generation, invariant computation,
// certification and batch sweeps, with deterministic machine-readable
// output.
//
// Exit codes: 0 success, 2 argument/parse/validation failure, 3 violated
// computation precondition, 4 cross-check mismatch.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "stratakit/stratakit.hpp"

using namespace stratakit;

namespace {

constexpr const char* kToolName = "stratakit";
constexpr const char* kToolVersion = "0.1.0";

// argument-level failures; always exit 2
struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::DuplicateLabel:
    case ErrorCode::DanglingVertex:
    case ErrorCode::NonComposableRelation:
    case ErrorCode::UnknownArrow:
    case ErrorCode::DuplicateRelation:
      return 2;
    case ErrorCode::VerificationMismatch:
      return 4;
    default:
      return 3;  // violated precondition
  }
}

std::string join_seq(const IntSeq& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string profile_string(const HHProfile& p) {
  std::string out = "{";
  bool first = true;
  for (const auto& [deg, dim] : p.dims) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(deg) + ":" + dim.str();
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Input resolution: a presentation file or family parameters.

struct InputSpec {
  std::string file;
  std::string family;
  long long x = 0, y = 0, n = 0;
  IntSeq xs, ys;
  std::vector<int> degrees;

  bool has_family() const { return !family.empty(); }
};

void add_input_flags(CLI::App* cmd, InputSpec& in) {
  cmd->add_option("--file", in.file, "presentation document to read");
  cmd->add_option("--family", in.family,
                  "generate the input instead: b, an or kronecker")
      ->check(CLI::IsMember({"b", "an", "kronecker"}));
  cmd->add_option("--x", in.x, "forward arrow count (family b)");
  cmd->add_option("--y", in.y, "backward arrow count (family b)");
  cmd->add_option("--n", in.n, "stage count (family an)");
  cmd->add_option("--xs", in.xs, "forward multiplicities (family an)")
      ->delimiter(',');
  cmd->add_option("--ys", in.ys, "backward multiplicities (family an)")
      ->delimiter(',');
  cmd->add_option("--degrees", in.degrees,
                  "arrow degrees (family kronecker)")
      ->delimiter(',');
}

// Family construction failures are argument validation, not computation
// preconditions.
QuiverPresentation build_family(const InputSpec& in, Json& input_json) {
  try {
    if (in.family == "b") {
      if (in.x < 0 || in.y < 0)
        throw CliError("family b needs non-negative --x and --y");
      input_json = Json::object();
      input_json.add("family", Json::text("b"));
      input_json.add("x", Json::integer(in.x));
      input_json.add("y", Json::integer(in.y));
      return build_B(in.x, in.y);
    }
    if (in.family == "an") {
      input_json = Json::object();
      input_json.add("family", Json::text("an"));
      input_json.add("n", Json::integer(in.n));
      Json xs = Json::array(), ys = Json::array();
      for (auto v : in.xs) xs.push(Json::integer(v));
      for (auto v : in.ys) ys.push(Json::integer(v));
      input_json.add("xs", std::move(xs));
      input_json.add("ys", std::move(ys));
      return build_An(in.n, in.xs, in.ys);
    }
    input_json = Json::object();
    input_json.add("family", Json::text("kronecker"));
    Json degs = Json::array();
    for (auto d : in.degrees) degs.push(Json::integer(d));
    input_json.add("degrees", std::move(degs));
    return build_Lambda(in.degrees);
  } catch (const AlgebraError& e) {
    if (e.code() == ErrorCode::DomainError ||
        e.code() == ErrorCode::Degenerate)
      throw CliError(e.what());
    throw;
  }
}

QuiverPresentation resolve_input(const InputSpec& in, Json& input_json) {
  if (in.file.empty() == !in.has_family())
    throw CliError("provide exactly one of --file or --family");
  if (!in.file.empty()) {
    QuiverPresentation pres = parse_presentation(read_file(in.file));
    input_json = presentation_json(pres);
    return pres;
  }
  return build_family(in, input_json);
}

// ---------------------------------------------------------------------------
// Output formatting.

void flatten(const Json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  switch (j.kind) {
    case Json::Kind::Boolean:
      out.emplace_back(prefix, j.b ? "true" : "false");
      return;
    case Json::Kind::Integer:
      out.emplace_back(prefix, j.i.str());
      return;
    case Json::Kind::String:
      out.emplace_back(prefix, j.s);
      return;
    case Json::Kind::Array:
      for (std::size_t k = 0; k < j.items.size(); ++k)
        flatten(j.items[k], prefix + "." + std::to_string(k), out);
      return;
    case Json::Kind::Object:
      for (const auto& [key, value] : j.fields)
        flatten(value, prefix.empty() ? key : prefix + "." + key, out);
      return;
  }
}

// Emit a result document.  json prints the whole document; csv and table
// print the flattened result section only.
void emit_document(const std::string& format, Json input, Json computation,
                   Json result, long long elapsed_ms) {
  if (format == "json") {
    Json meta = Json::object();
    meta.add("tool", Json::text(kToolName));
    meta.add("version", Json::text(kToolVersion));
    meta.add("elapsed_ms", Json::integer(elapsed_ms));
    Json doc = Json::object();
    doc.add("input", std::move(input));
    doc.add("computation", std::move(computation));
    doc.add("result", std::move(result));
    doc.add("meta", std::move(meta));
    std::cout << doc.dump() << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> flat;
  flatten(result, "", flat);
  if (format == "csv") {
    CsvWriter csv;
    csv.row({"field", "value"});
    for (const auto& [k, v] : flat) csv.row({k, v});
    std::cout << csv.str();
    return;
  }
  for (const auto& [k, v] : flat) std::cout << k << ": " << v << "\n";
}

Json profile_pairs_json(const HHProfile& p) {
  Json pairs = Json::array();
  for (const auto& [deg, dim] : p.dims) {
    Json pair = Json::array();
    pair.push(Json::integer(deg));
    pair.push(Json::integer(dim));
    pairs.push(std::move(pair));
  }
  return pairs;
}

Json profile_json(const HHProfile& p) {
  Json out = Json::object();
  out.add("profile", profile_pairs_json(p));
  out.add("method", Json::text(p.method));
  if (p.min_arrow_degree)
    out.add("min_arrow_degree", Json::integer(*p.min_arrow_degree));
  if (p.max_arrow_degree)
    out.add("max_arrow_degree", Json::integer(*p.max_arrow_degree));
  return out;
}

// ---------------------------------------------------------------------------
// Module specs for ext and socle: "regular", or kind:label[+label...] with
// kind one of simple, projective, ideal, quotient.

std::vector<std::int32_t> parse_vertex_labels(const PathBasis& A,
                                              const std::string& rest) {
  std::vector<std::int32_t> ids;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) throw CliError("empty vertex label in module spec");
    auto it = A.quiver_index().vertex_id.find(cur);
    if (it == A.quiver_index().vertex_id.end())
      throw CliError("unknown vertex \"" + cur + "\" in module spec");
    ids.push_back(it->second);
    cur.clear();
  };
  for (char c : rest) {
    if (c == '+')
      flush();
    else
      cur += c;
  }
  flush();
  return ids;
}

Representation parse_module(const PathBasis& A, const std::string& spec) {
  if (spec == "regular") return regular_rep(A);
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw CliError("module spec must be \"regular\" or kind:vertex (kinds: "
                   "simple, projective, ideal, quotient)");
  std::string kind = spec.substr(0, colon);
  auto ids = parse_vertex_labels(A, spec.substr(colon + 1));
  if (kind == "simple") {
    Representation m = zero_rep(A);
    for (auto v : ids) m = direct_sum(A, m, simple_rep(A, v));
    return m;
  }
  if (kind == "projective") return projective_sum(A, ids).rep;
  if (kind == "ideal") return ideal_rep(A, ids).rep;
  if (kind == "quotient") return quotient_by_ideal(A, ids);
  throw CliError("unknown module kind \"" + kind + "\"");
}

// ---------------------------------------------------------------------------
// hh methods and verification partners.

index_t default_bar_pmax(const QuiverPresentation& pres) {
  auto top = top_dual_degree(pres);
  if (!top)
    throw AlgebraError(ErrorCode::DomainError,
                       "the profile support is unbounded (infinite global "
                       "dimension); pass --p-max explicitly");
  return *top;
}

std::optional<std::pair<long long, long long>> recognize_b(
    const QuiverPresentation& pres) {
  if (pres.vertices.size() != 2) return std::nullopt;
  const std::string& v0 = pres.vertices[0];
  const std::string& v1 = pres.vertices[1];
  std::vector<std::string> fwd, back;
  for (const auto& a : pres.arrows) {
    if (a.source == v0 && a.target == v1)
      fwd.push_back(a.label);
    else if (a.source == v1 && a.target == v0)
      back.push_back(a.label);
    else
      return std::nullopt;
  }
  std::vector<std::pair<std::string, std::string>> expected;
  for (const auto& b : back)
    for (const auto& a : fwd) expected.emplace_back(b, a);
  std::sort(expected.begin(), expected.end());
  if (expected != pres.relations) return std::nullopt;
  return std::make_pair(static_cast<long long>(fwd.size()),
                        static_cast<long long>(back.size()));
}

HHProfile run_hh_method(const std::string& method,
                        const QuiverPresentation& pres,
                        std::optional<index_t> p_max, long long max_dim) {
  if (method == "koszul") return hh_koszul(pres);
  if (method == "bar") {
    index_t pm = p_max ? *p_max : default_bar_pmax(pres);
    return hh_bar_oracle(pres, static_cast<int>(pm), max_dim);
  }
  if (method == "graded") return hh_graded_kronecker(pres);
  // closed forms: graded Kronecker countings, or the two-vertex
  // bidirected pattern
  if (pres.is_graded()) return hh_kronecker_formula(kronecker_degrees(pres));
  if (auto xy = recognize_b(pres)) return b_profile(xy->first, xy->second);
  throw AlgebraError(ErrorCode::DomainError,
                     "no closed-form profile applies to this presentation");
}

std::string partner_method(const std::string& method,
                           const QuiverPresentation& pres) {
  if (method == "koszul") return "bar";
  if (method == "bar") return "koszul";
  if (method == "graded") return "formula";
  return pres.is_graded() ? "graded" : "koszul";
}

// ---------------------------------------------------------------------------
// Sweeps.

struct SweepOptions {
  std::string task;
  std::string out_path;
  long long n_min = 0, n_max = 5;
  IntSeq entries{1, 2};
  long long max = 4;
};

std::vector<IntSeq> tuples_over(const IntSeq& entries, std::size_t len) {
  std::vector<IntSeq> out{{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<IntSeq> next;
    for (const auto& prefix : out)
      for (auto e : entries) {
        IntSeq t = prefix;
        t.push_back(e);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

// one row per grid point, lexicographic, "error" column on failures
int run_sweep(const SweepOptions& opt) {
  CsvWriter csv;
  std::size_t rows = 0, failures = 0;
  if (opt.task == "tophh") {
    csv.row({"n", "xs", "ys", "formula", "computed", "equal", "error"});
    IntSeq entries = opt.entries;
    std::sort(entries.begin(), entries.end());
    entries.erase(std::unique(entries.begin(), entries.end()),
                  entries.end());
    if (entries.empty() || opt.n_min > opt.n_max) {
      // empty grid: header only
    } else {
      for (long long n = opt.n_min; n <= opt.n_max; ++n) {
        auto xs_len = static_cast<std::size_t>((n + 1) / 2);
        auto ys_len = static_cast<std::size_t>(n / 2);
        for (const auto& xs : tuples_over(entries, xs_len))
          for (const auto& ys : tuples_over(entries, ys_len)) {
            ++rows;
            try {
              Int formula = hh_top_formula(n, xs, ys);
              HHProfile prof = hh_koszul(build_An(n, xs, ys));
              Int computed = prof.at(static_cast<int>(n));
              csv.row({std::to_string(n), join_seq(xs), join_seq(ys),
                       formula.str(), computed.str(),
                       formula == computed ? "true" : "false", ""});
            } catch (const AlgebraError& e) {
              ++failures;
              csv.row({std::to_string(n), join_seq(xs), join_seq(ys), "",
                       "", "", e.what()});
            }
          }
      }
    }
  } else if (opt.task == "bequiv") {
    csv.row({"x", "y", "x2", "y2", "equivalent", "error"});
    for (long long x = 0; x <= opt.max; ++x)
      for (long long y = 0; y <= opt.max; ++y)
        for (long long x2 = 0; x2 <= opt.max; ++x2)
          for (long long y2 = 0; y2 <= opt.max; ++y2) {
            ++rows;
            csv.row({std::to_string(x), std::to_string(y),
                     std::to_string(x2), std::to_string(y2),
                     b_derived_equivalent(x, y, x2, y2) ? "true" : "false",
                     ""});
          }
  } else if (opt.task == "hh-b") {
    csv.row({"x", "y", "computed", "formula", "equal", "error"});
    for (long long x = 0; x <= opt.max; ++x)
      for (long long y = 0; y <= opt.max; ++y) {
        ++rows;
        try {
          HHProfile computed = hh_koszul(build_B(x, y));
          HHProfile formula = b_profile(x, y);
          csv.row({std::to_string(x), std::to_string(y),
                   profile_string(computed), profile_string(formula),
                   computed.same_dims(formula) ? "true" : "false", ""});
        } catch (const AlgebraError& e) {
          ++failures;
          csv.row({std::to_string(x), std::to_string(y), "", "", "",
                   e.what()});
        }
      }
  } else {
    throw CliError("unknown sweep task \"" + opt.task +
                   "\" (tasks: tophh, bequiv, hh-b)");
  }
  if (opt.out_path.empty())
    std::cout << csv.str();
  else
    write_file(opt.out_path, csv.str());
  if (rows > 0 && failures == rows) {
    std::cerr << "error: every sweep row failed\n";
    return 3;
  }
  return 0;
}

long long resolve_max_dim(long long flag_value) {
  const char* env = std::getenv("STRATAKIT_MAX_DIM");
  if (env == nullptr || *env == '\0') return flag_value;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0)
    throw CliError("STRATAKIT_MAX_DIM must be a positive integer");
  return v;
}

std::vector<index_t> to_ll(const std::vector<index_t>& v) { return v; }

}  // namespace

int main(int argc, char** argv) {
  // allow "--degrees -1,0,2": fold the value into an = form so the leading
  // dash is not mistaken for an option
  std::vector<std::string> args;
  for (int i = 0; i < argc; ++i) args.emplace_back(argv[i]);
  std::vector<std::string> folded;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--degrees" && i + 1 < args.size()) {
      folded.push_back("--degrees=" + args[i + 1]);
      ++i;
    } else {
      folded.push_back(args[i]);
    }
  }
  std::vector<char*> argv2;
  argv2.reserve(folded.size());
  for (auto& s : folded) argv2.push_back(s.data());

  CLI::App app{"homological invariants of quiver algebras with quadratic "
               "monomial relations"};
  app.require_subcommand(1);

  std::string format = "json";

  // family
  InputSpec fam_in;
  auto* cmd_family = app.add_subcommand(
      "family", "emit a canonical presentation document");
  cmd_family->add_option("kind", fam_in.family, "b, an or kronecker")
      ->required()
      ->check(CLI::IsMember({"b", "an", "kronecker"}));
  cmd_family->add_option("--x", fam_in.x, "forward arrow count (b)");
  cmd_family->add_option("--y", fam_in.y, "backward arrow count (b)");
  cmd_family->add_option("--n", fam_in.n, "stage count (an)");
  cmd_family->add_option("--xs", fam_in.xs, "forward multiplicities (an)")
      ->delimiter(',');
  cmd_family->add_option("--ys", fam_in.ys, "backward multiplicities (an)")
      ->delimiter(',');
  cmd_family->add_option("--degrees", fam_in.degrees,
                         "arrow degrees (kronecker)")
      ->delimiter(',');

  // cartan
  InputSpec cartan_in;
  auto* cmd_cartan =
      app.add_subcommand("cartan", "Cartan matrix (path counts)");
  add_input_flags(cmd_cartan, cartan_in);
  cmd_cartan->add_option("--format", format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  // hh
  InputSpec hh_in;
  std::string hh_method = "koszul";
  bool hh_verify = false;
  long long hh_pmax = -1;
  long long hh_maxdim = 200000;
  auto* cmd_hh =
      app.add_subcommand("hh", "Hochschild cohomology dimensions");
  add_input_flags(cmd_hh, hh_in);
  cmd_hh->add_option("--method", hh_method,
                     "koszul, bar, formula or graded")
      ->check(CLI::IsMember({"koszul", "bar", "formula", "graded"}));
  cmd_hh->add_flag("--verify", hh_verify,
                   "also run the partner method and compare");
  cmd_hh->add_option("--p-max", hh_pmax,
                     "highest degree for the bar method");
  cmd_hh->add_option("--max-dim", hh_maxdim,
                     "bar cochain-space size cap (overridden by "
                     "STRATAKIT_MAX_DIM)");
  cmd_hh->add_option("--format", format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  // gldim
  InputSpec gldim_in;
  auto* cmd_gldim = app.add_subcommand(
      "gldim", "global dimension with resolution cross-check");
  add_input_flags(cmd_gldim, gldim_in);
  cmd_gldim->add_option("--format", format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  // ext
  InputSpec ext_in;
  std::string ext_from, ext_to;
  long long ext_pmax = 2;
  auto* cmd_ext = app.add_subcommand("ext", "Ext dimensions between modules");
  add_input_flags(cmd_ext, ext_in);
  cmd_ext->add_option("--from", ext_from, "module spec (resolved side)")
      ->required();
  cmd_ext->add_option("--to", ext_to, "module spec")->required();
  cmd_ext->add_option("--p-max", ext_pmax, "highest Ext degree");
  cmd_ext->add_option("--format", format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  // socle
  InputSpec socle_in;
  std::string socle_module = "regular";
  auto* cmd_socle =
      app.add_subcommand("socle", "per-vertex socle dimensions");
  add_input_flags(cmd_socle, socle_in);
  cmd_socle->add_option("--module", socle_module, "module spec");
  cmd_socle->add_option("--format", format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  // certify
  InputSpec cert_in;
  auto* cmd_certify = app.add_subcommand(
      "certify", "derived-simplicity certificate for two-simple algebras");
  add_input_flags(cmd_certify, cert_in);
  cmd_certify->add_option("--format", format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  // fib
  IntSeq fib_xs, fib_ys;
  long long fib_n = 0;
  auto* cmd_fib = app.add_subcommand(
      "fib", "generalized Fibonacci values F_0..F_n");
  cmd_fib->add_option("--xs", fib_xs, "even-step multipliers")
      ->delimiter(',');
  cmd_fib->add_option("--ys", fib_ys, "odd-step multipliers")
      ->delimiter(',');
  cmd_fib->add_option("--n", fib_n, "last index")->required();
  cmd_fib->add_option("--format", format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  // sweep
  SweepOptions sweep;
  auto* cmd_sweep =
      app.add_subcommand("sweep", "batch computation over a parameter grid");
  cmd_sweep->add_option("--task", sweep.task, "tophh, bequiv or hh-b")
      ->required();
  cmd_sweep->add_option("--out", sweep.out_path,
                        "output path (stdout when omitted)");
  cmd_sweep->add_option("--n-min", sweep.n_min, "first stage count (tophh)");
  cmd_sweep->add_option("--n-max", sweep.n_max, "last stage count (tophh)");
  cmd_sweep->add_option("--entries", sweep.entries,
                        "multiplicity values (tophh)")
      ->delimiter(',');
  cmd_sweep->add_option("--max", sweep.max,
                        "inclusive parameter bound (bequiv, hh-b)");

  try {
    app.parse(static_cast<int>(argv2.size()), argv2.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    auto started = std::chrono::steady_clock::now();
    auto elapsed_ms = [&]() {
      return static_cast<long long>(
          std::chrono::duration_cast<std::chrono::milliseconds>(
              std::chrono::steady_clock::now() - started)
              .count());
    };

    if (app.got_subcommand(cmd_family)) {
      Json ignored;
      QuiverPresentation pres = build_family(fam_in, ignored);
      std::cout << serialize_presentation(pres);
      return 0;
    }

    if (app.got_subcommand(cmd_sweep)) return run_sweep(sweep);

    if (app.got_subcommand(cmd_fib)) {
      if (fib_n < 0) throw CliError("--n must be non-negative");
      FibonacciSeq seq =
          fibonacci(fib_xs, fib_ys, static_cast<std::size_t>(fib_n));
      Json input = Json::object();
      Json xs = Json::array(), ys = Json::array();
      for (auto v : fib_xs) xs.push(Json::integer(v));
      for (auto v : fib_ys) ys.push(Json::integer(v));
      input.add("xs", std::move(xs));
      input.add("ys", std::move(ys));
      Json computation = Json::object();
      computation.add("name", Json::text("fib"));
      computation.add("n", Json::integer(fib_n));
      Json values = Json::array();
      for (const auto& v : seq.values) values.push(Json::integer(v));
      Json result = Json::object();
      result.add("values", std::move(values));
      emit_document(format, std::move(input), std::move(computation),
                    std::move(result), elapsed_ms());
      return 0;
    }

    if (app.got_subcommand(cmd_cartan)) {
      Json input;
      QuiverPresentation pres = resolve_input(cartan_in, input);
      CartanMatrix c = cartan_matrix(pres);
      Json rows = Json::array();
      for (const auto& row : c.entries) {
        Json r = Json::array();
        for (const auto& v : row) r.push(Json::integer(v));
        rows.push(std::move(r));
      }
      Json result = Json::object();
      result.add("matrix", std::move(rows));
      result.add("total_dimension", Json::integer(c.sum()));
      Json computation = Json::object();
      computation.add("name", Json::text("cartan"));
      emit_document(format, std::move(input), std::move(computation),
                    std::move(result), elapsed_ms());
      return 0;
    }

    if (app.got_subcommand(cmd_hh)) {
      Json input;
      QuiverPresentation pres = resolve_input(hh_in, input);
      std::optional<index_t> pmax;
      if (cmd_hh->count("--p-max")) {
        if (hh_pmax < 0) throw CliError("--p-max must be non-negative");
        pmax = hh_pmax;
      }
      long long cap = resolve_max_dim(hh_maxdim);
      if (cap <= 0) throw CliError("--max-dim must be positive");
      HHProfile profile = run_hh_method(hh_method, pres, pmax, cap);
      Json computation = Json::object();
      computation.add("name", Json::text("hh"));
      computation.add("method", Json::text(hh_method));
      if (pmax) computation.add("p_max", Json::integer(*pmax));
      if (hh_method == "bar" || (hh_verify && hh_method == "koszul"))
        computation.add("max_dim", Json::integer(cap));
      if (hh_verify) {
        std::string partner = partner_method(hh_method, pres);
        HHProfile check = run_hh_method(partner, pres, pmax, cap);
        if (!profile.same_dims(check))
          throw AlgebraError(
              ErrorCode::VerificationMismatch,
              "method " + hh_method + " gave " + profile_string(profile) +
                  " but " + partner + " gave " + profile_string(check));
        computation.add("verified_against", Json::text(partner));
      }
      emit_document(format, std::move(input), std::move(computation),
                    profile_json(profile), elapsed_ms());
      return 0;
    }

    if (app.got_subcommand(cmd_gldim)) {
      Json input;
      QuiverPresentation pres = resolve_input(gldim_in, input);
      index_t g = global_dimension_checked(pres);
      Json computation = Json::object();
      computation.add("name", Json::text("gldim"));
      Json result = Json::object();
      result.add("global_dimension", Json::integer(g));
      emit_document(format, std::move(input), std::move(computation),
                    std::move(result), elapsed_ms());
      return 0;
    }

    if (app.got_subcommand(cmd_ext)) {
      Json input;
      QuiverPresentation pres = resolve_input(ext_in, input);
      if (ext_pmax < 0) throw CliError("--p-max must be non-negative");
      PathBasis A = enumerate_paths(pres);
      Representation from = parse_module(A, ext_from);
      Representation to = parse_module(A, ext_to);
      auto dims = ext_dims(A, from, to, ext_pmax);
      Json computation = Json::object();
      computation.add("name", Json::text("ext"));
      computation.add("from", Json::text(ext_from));
      computation.add("to", Json::text(ext_to));
      computation.add("p_max", Json::integer(ext_pmax));
      Json values = Json::array();
      for (auto d : to_ll(dims)) values.push(Json::integer(d));
      Json result = Json::object();
      result.add("ext", std::move(values));
      emit_document(format, std::move(input), std::move(computation),
                    std::move(result), elapsed_ms());
      return 0;
    }

    if (app.got_subcommand(cmd_socle)) {
      Json input;
      QuiverPresentation pres = resolve_input(socle_in, input);
      PathBasis A = enumerate_paths(pres);
      Representation m = parse_module(A, socle_module);
      SubRep soc = socle_rep(A, m);
      Json computation = Json::object();
      computation.add("name", Json::text("socle"));
      computation.add("module", Json::text(socle_module));
      Json dims = Json::array();
      index_t total = 0;
      for (auto d : soc.rep.dims) {
        dims.push(Json::integer(d));
        total += d;
      }
      Json result = Json::object();
      result.add("socle_dims", std::move(dims));
      result.add("dimension", Json::integer(total));
      emit_document(format, std::move(input), std::move(computation),
                    std::move(result), elapsed_ms());
      return 0;
    }

    if (app.got_subcommand(cmd_certify)) {
      Json input;
      QuiverPresentation pres = resolve_input(cert_in, input);
      Certificate cert = certify(pres);
      Json computation = Json::object();
      computation.add("name", Json::text("certify"));
      Json result = Json::object();
      result.add("verdict", Json::text(verdict_name(cert.verdict)));
      if (cert.witness) {
        Json w = Json::object();
        w.add("degree", Json::integer(cert.witness->first));
        w.add("dimension", Json::integer(cert.witness->second));
        result.add("witness", std::move(w));
      }
      if (!cert.candidates.empty()) {
        Json cands = Json::array();
        for (const auto& [x, y] : cert.candidates) {
          Json pair = Json::array();
          pair.push(Json::integer(x));
          pair.push(Json::integer(y));
          cands.push(std::move(pair));
        }
        result.add("candidates", std::move(cands));
      }
      Json assumptions = Json::array();
      for (const auto& a : cert.assumptions)
        assumptions.push(Json::text(a));
      result.add("assumptions", std::move(assumptions));
      result.add("profile", profile_pairs_json(cert.profile));
      result.add("global_dimension", Json::integer(cert.global_dimension));
      emit_document(format, std::move(input), std::move(computation),
                    std::move(result), elapsed_ms());
      return 0;
    }

    throw CliError("no subcommand selected");
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
