#include "gfw/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "gfw/error.hpp"
#include "gfw/moduli.hpp"
#include "gfw/theorems.hpp"

#ifndef GFW_VERSION
#define GFW_VERSION "dev"
#endif

namespace gfw {

namespace {

bool known_command(const std::string& c) {
  return std::find(std::begin(kCommands), std::end(kCommands), c) != std::end(kCommands);
}

ProfileOptions options_for(const RunConfig& config) {
  ProfileOptions o;
  o.truncation = config.truncation;
  o.policy = config.jobs > 1 ? ExecPolicy::openmp(config.jobs) : ExecPolicy::serial();
  return o;
}

Json ints(const std::vector<int>& v) { return Json(v); }

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::Member: return "member";
    case Membership::NotMember: return "not_member";
    case Membership::Undetermined: return "undetermined";
  }
  return "undetermined";
}

bool embedded_mode(const RunConfig& config) { return config.mode == "embedded"; }

// Points named on the command line, or the fixed points: one generic entry per
// axis, or every fixed point with coordinates in the field in embedded mode.
struct PointGroup {
  int axis = -1;
  std::int64_t count = 0;  // points of F on the axis
  std::vector<PointSpec> points;
};

std::vector<PointGroup> resolve_points(const RunConfig& config, const GFCurve& curve) {
  std::vector<PointGroup> out;
  if (!config.points.empty()) {
    PointGroup g;
    for (const auto& text : config.points) g.points.push_back(parse_point(text, curve));
    out.push_back(std::move(g));
    return out;
  }
  std::vector<int> axes;
  if (config.axis) {
    if (*config.axis < 0 || *config.axis > curve.n()) throw DomainError("axis out of range");
    axes.push_back(*config.axis);
  } else {
    for (int a = 0; a <= curve.n(); ++a) axes.push_back(a);
  }
  for (int a : axes) {
    PointGroup g;
    g.axis = a;
    g.count = curve.fixed_points_per_axis();
    if (embedded_mode(config)) {
      for (auto& e : fixed_points(curve, a).embedded) g.points.emplace_back(std::move(e));
    } else {
      g.points.emplace_back(GenericFixed{a});
    }
    out.push_back(std::move(g));
  }
  return out;
}

Json gaps_output(const RunConfig& config, const GFCurve& curve, bool with_totals) {
  const ProfileOptions opts = options_for(config);
  const std::int64_t bound = w_hat(curve.k(), curve.n());
  Json pts = Json::array();
  bool complete = config.points.empty();
  std::int64_t total = 0;
  for (const auto& group : resolve_points(config, curve)) {
    std::int64_t group_sum = 0;
    for (const auto& p : group.points) {
      const GapData g = gap_sequence(curve, p, opts);
      Json e{{"point", point_to_json(p)}, {"gaps", ints(g.gaps)}, {"weight", g.weight}};
      if (fixed_axis(p) >= 0) e["w_hat"] = bound;
      pts.push_back(std::move(e));
      group_sum += g.weight;
    }
    if (group.axis < 0) continue;
    if (!group.points.empty() && is_generic(group.points.front())) {
      total += group.count * group_sum;
    } else if (static_cast<std::int64_t>(group.points.size()) == group.count) {
      total += group_sum;
    } else {
      complete = false;
    }
  }
  Json out{{"genus", curve.genus()}, {"points", pts}};
  if (with_totals) {
    const std::int64_t g = curve.genus();
    out["g3_minus_g"] = g * g * g - g;
    if (complete && !config.axis) {
      out["sum_over_F"] = total;
      out["residual_weight"] = residual_weight(curve, {total});
    } else {
      out["sum_over_F"] = nullptr;
      out["residual_weight"] = nullptr;
    }
  }
  return out;
}

Json profile_output(const RunConfig& config, const GFCurve& curve) {
  if (config.degree < 1) throw DomainError("--degree must be positive");
  const ProfileOptions opts = options_for(config);
  const GradedBasis basis = monomial_basis(curve, config.degree);
  Json pts = Json::array();
  for (const auto& group : resolve_points(config, curve))
    for (const auto& p : group.points) {
      const OscProfile prof = profile(curve, basis, p, opts);
      pts.push_back(Json{{"point", point_to_json(p)},
                         {"orders", ints(prof.orders)},
                         {"base_order", prof.base_order},
                         {"alphas", ints(prof.alphas)},
                         {"bees", ints(prof.bees)},
                         {"hyperosculating", is_hyperosculating(prof)}});
    }
  return Json{{"degree", config.degree}, {"family_size", basis.size()}, {"points", pts}};
}

Json pluecker_output(const RunConfig& config, const GFCurve& curve) {
  const PlueckerData d = pluecker_sequence(curve);
  // Pointwise ramification at the fixed points, summed over F.
  const ProfileOptions opts = options_for(config);
  std::vector<std::int64_t> summed(d.bee_totals.size(), 0);
  Json per_axis = Json::array();
  for (int a = 0; a <= curve.n(); ++a) {
    const OscProfile prof = embedding_profile(curve, GenericFixed{a}, opts);
    for (std::size_t l = 0; l < prof.bees.size() && l < summed.size(); ++l)
      summed[l] += curve.fixed_points_per_axis() * prof.bees[l];
    per_axis.push_back(Json{{"axis", a}, {"bees", ints(prof.bees)}});
  }
  return Json{{"genus", curve.genus()},
              {"degree", curve.degree()},
              {"dees", d.dees},
              {"bee_totals", d.bee_totals},
              {"bees_at_fixed_points", per_axis},
              {"totals_match", summed == d.bee_totals}};
}

Json dims_output(const GFCurve& curve) {
  const int r = curve.canonical_twist();
  Json per_j = Json::array();
  std::int64_t total = 0;
  for (int j = 0; j < curve.k(); ++j) {
    const std::int64_t s = s_dim(curve, j);
    const auto enumerated = static_cast<std::int64_t>(sub_basis_Q(curve, r, j).size());
    total += s;
    per_j.push_back(Json{{"j", j}, {"s_dim", s}, {"enumerated", enumerated}});
  }
  Json hilbert = Json::array();
  for (int m = 0; m <= r + 1; ++m)
    hilbert.push_back(Json{{"m", m}, {"dim_gamma", dim_gamma(curve, m)}, {"h0", h_prime(curve, m)}});
  return Json{{"genus", curve.genus()},
              {"r", r},
              {"summands", per_j},
              {"sum", total},
              {"w_hat", w_hat(curve.k(), curve.n())},
              {"w_hat_sum_check", w_hat_sum_check(curve.k(), curve.n())},
              {"graded_dims", hilbert}};
}

Json strictness_json(const StrictnessReport& rep) {
  Json per_j = Json::array();
  for (const auto& d : rep.per_j)
    per_j.push_back(Json{{"j", d.j}, {"orders", ints(d.orders)}, {"flagged", d.flagged}, {"excess", d.excess}});
  return Json{{"point", point_to_json(rep.point)},
              {"w", rep.w},
              {"w_hat", rep.w_hat},
              {"equal", rep.w == rep.w_hat},
              {"per_j", per_j},
              {"predicted_equal", rep.predicted_equal},
              {"consistent", rep.consistent},
              {"identity_holds", rep.identity_holds}};
}

Json strictness_output(const RunConfig& config, const GFCurve& curve) {
  const ProfileOptions opts = options_for(config);
  Json pts = Json::array();
  for (const auto& group : resolve_points(config, curve))
    for (const auto& p : group.points) pts.push_back(strictness_json(strictness_diagnostic(curve, p, opts)));
  return Json{{"points", pts}};
}

Json mho_output(const RunConfig& config, const GFCurve& curve) {
  const ProfileOptions opts = options_for(config);
  const MhoMode mode = embedded_mode(config) ? MhoMode::Embedded : MhoMode::Generic;
  std::vector<int> js;
  if (config.j) {
    js.push_back(*config.j);
  } else {
    for (int j = 0; j < curve.k(); ++j) js.push_back(j);
  }
  Json rows = Json::array();
  bool all_member = true;
  bool any_not = false;
  for (int j : js) {
    const MhoResult m = mho_probe(curve, j, mode, opts);
    Json missing = Json::array();
    for (const auto& x : m.missing_roots) missing.push_back(to_json(x));
    rows.push_back(Json{{"j", j},
                        {"status", membership_name(m.status)},
                        {"points_checked", m.points_checked},
                        {"missing_roots", missing}});
    all_member = all_member && m.status == Membership::Member;
    any_not = any_not || m.status == Membership::NotMember;
  }
  Json out{{"mode", config.mode}, {"summands", rows}};
  if (!config.j) out["bound_attained"] = all_member ? Json(true) : (any_not ? Json(false) : Json(nullptr));
  return out;
}

std::vector<FieldElem> lambda_from_json(const Json& curve, FieldPtr* field_out = nullptr) {
  FieldPtr field = NumberField::rationals();
  if (curve.contains("field")) field = field_from_json(curve.at("field"));
  std::vector<FieldElem> l;
  if (curve.contains("lambda"))
    for (const auto& x : curve.at("lambda")) l.push_back(field_elem_from_json(x, field));
  if (field_out) *field_out = field;
  return l;
}

Json orbit_output(const RunConfig& config) {
  if (!config.curve.contains("n")) throw DomainError("orbit needs --n");
  const int n = config.curve.at("n").get<int>();
  FieldPtr field;
  const auto lambda = lambda_from_json(config.curve, &field);
  if (static_cast<int>(lambda.size()) != n - 2)
    throw DomainError("expected " + std::to_string(n - 2) + " lambda values");
  GFCurve::make_any_genus(2, n, lambda, field);  // P_n check
  Json elems = Json::array();
  for (const auto& t : orbit(lambda)) {
    Json e = Json::array();
    for (const auto& x : t) e.push_back(to_json(x));
    elems.push_back(e);
  }
  Json canon = Json::array();
  for (const auto& x : canonical_lambda(lambda)) canon.push_back(to_json(x));
  return Json{{"size", elems.size()},
              {"orbit", elems},
              {"canonical", canon},
              {"canonical_convention", "lexicographically least orbit element"}};
}

Json info_output(const GFCurve& curve) {
  Json canon = Json::array();
  for (const auto& x : canonical_lambda(curve.lambda())) canon.push_back(to_json(x));
  return Json{{"curve", curve_to_json(curve)},
              {"genus", curve.genus()},
              {"r", curve.canonical_twist()},
              {"degree", curve.degree()},
              {"fixed_points", curve.fixed_point_count()},
              {"w_hat", w_hat(curve.k(), curve.n())},
              {"field", curve.field()->describe()},
              {"canonical_lambda", canon},
              {"canonical_convention", "lexicographically least orbit element"}};
}

Json curve_with_lambda(const Json& base, const std::vector<std::string>& lambda) {
  Json c = base;
  c["lambda"] = lambda;
  return c;
}

Json sweep_output(const RunConfig& config) {
  const std::size_t rows = config.grid.size();
  // Every row is parsed and validated before any computation starts.
  std::vector<GFCurve> curves;
  curves.reserve(rows);
  for (const auto& l : config.grid) curves.push_back(curve_from_json(curve_with_lambda(config.curve, l)));
  std::vector<Json> out(rows);
  RunConfig inner = config;
  inner.jobs = 1;
  const ProfileOptions opts = options_for(inner);
  const ExecPolicy pool = config.jobs > 1 ? ExecPolicy::openmp(config.jobs) : ExecPolicy::serial();
  for_each_index(rows, pool, [&](std::size_t i) {
    const GFCurve& curve = curves[i];
    const int axis = config.axis ? *config.axis : curve.n();
    Json row{{"lambda", config.grid[i]}};
    try {
      if (axis < 0 || axis > curve.n()) throw DomainError("axis out of range");
      const StrictnessReport rep = strictness_diagnostic(curve, GenericFixed{axis}, opts);
      Json flagged = Json::array();
      for (const auto& d : rep.per_j)
        if (d.flagged) flagged.push_back(d.j);
      row["w"] = rep.w;
      row["w_hat"] = rep.w_hat;
      row["equal"] = rep.w == rep.w_hat;
      row["flagged_j"] = flagged;
      row["consistent"] = rep.consistent;
      row["identity_holds"] = rep.identity_holds;
      row["status"] = "ok";
    } catch (const DomainError& e) {
      row["status"] = "undetermined";
      row["reason"] = e.what();
    }
    out[i] = std::move(row);
  });
  return Json{{"axis", config.axis ? Json(*config.axis) : Json("n")}, {"rows", out}};
}

Json input_echo(const RunConfig& config) {
  Json in{{"curve", config.curve}};
  if (!config.points.empty()) in["points"] = config.points;
  if (config.axis) in["axis"] = *config.axis;
  in["mode"] = config.mode;
  if (config.j) in["j"] = *config.j;
  if (config.command == "profile") in["degree"] = config.degree;
  in["truncation"] = config.truncation;
  if (config.command == "sweep") in["grid"] = config.grid;
  return in;
}

std::string hex_sha256(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("SHA-256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const Json& arr, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += sep;
    out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return out;
}

std::string render_csv(const Json& record) {
  const std::string cmd = record.at("command").get<std::string>();
  const Json& out = record.at("output");
  std::ostringstream os;
  if (cmd == "sweep") {
    os << "lambda,w,w_hat,equal,flagged_j,consistent,identity_holds,status\n";
    for (const auto& row : out.at("rows")) {
      os << csv_escape(join(row.at("lambda"), ";")) << ',';
      if (row.at("status") == "ok") {
        os << row.at("w").dump() << ',' << row.at("w_hat").dump() << ',' << row.at("equal").dump() << ','
           << join(row.at("flagged_j"), ";") << ',' << row.at("consistent").dump() << ','
           << row.at("identity_holds").dump() << ",ok\n";
      } else {
        os << ",,,,,,undetermined\n";
      }
    }
    return os.str();
  }
  os << "point,gaps,weight\n";
  for (const auto& p : out.at("points"))
    os << csv_escape(p.at("point").dump()) << ',' << join(p.at("gaps"), ";") << ',' << p.at("weight").dump() << '\n';
  return os.str();
}

void render_pretty(const Json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() && value.front().is_object())) {
        os << prefix << key << ":\n";
        render_pretty(value, prefix + "  ", os);
      } else {
        os << prefix << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << prefix << "- [" << i << "]\n";
      render_pretty(j[i], prefix + "    ", os);
    }
  } else {
    os << prefix << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

void validate(const RunConfig& config) {
  if (!known_command(config.command)) throw DomainError("unknown command '" + config.command + "'");
  if (config.format != "json" && config.format != "csv" && config.format != "pretty")
    throw DomainError("unknown format '" + config.format + "'");
  if (config.format == "csv" && config.command != "sweep" && config.command != "gaps" && config.command != "weight")
    throw DomainError("csv output is only available for sweep, gaps and weight");
  if (config.mode != "generic" && config.mode != "embedded") throw DomainError("unknown mode '" + config.mode + "'");
  if (config.truncation < 0) throw DomainError("truncation must be nonnegative");
  if (config.jobs < 1) throw DomainError("--jobs must be at least 1");
  // Parse every rational up front.
  if (config.command == "orbit") {
    lambda_from_json(config.curve);
  } else if (config.command == "sweep") {
    for (const auto& l : config.grid) lambda_from_json(curve_with_lambda(config.curve, l));
  } else {
    const GFCurve curve = curve_from_json(config.curve);
    for (const auto& p : config.points) parse_point(p, curve);
  }
}

Json run(const RunConfig& config) {
  validate(config);
  const std::string& cmd = config.command;
  Json output;
  if (cmd == "orbit") {
    output = orbit_output(config);
  } else if (cmd == "sweep") {
    output = sweep_output(config);
  } else {
    const GFCurve curve = curve_from_json(config.curve);
    if (cmd == "info") output = info_output(curve);
    else if (cmd == "gaps") output = gaps_output(config, curve, false);
    else if (cmd == "weight") output = gaps_output(config, curve, true);
    else if (cmd == "profile") output = profile_output(config, curve);
    else if (cmd == "pluecker") output = pluecker_output(config, curve);
    else if (cmd == "dims") output = dims_output(curve);
    else if (cmd == "strictness") output = strictness_output(config, curve);
    else if (cmd == "mho") output = mho_output(config, curve);
  }
  return Json{{"tool", "gfw"}, {"version", GFW_VERSION}, {"command", cmd}, {"input", input_echo(config)},
              {"output", output}};
}

std::string cache_key(const RunConfig& config) {
  const Json key{{"command", config.command}, {"input", input_echo(config)}, {"version", GFW_VERSION}};
  return hex_sha256(key.dump());
}

Json run_cached(const RunConfig& config) {
  if (config.cache_dir.empty()) return run(config);
  validate(config);
  namespace fs = std::filesystem;
  const fs::path file = fs::path(config.cache_dir) / (cache_key(config) + ".json");
  if (std::ifstream in(file); in) {
    try {
      return Json::parse(in);
    } catch (const Json::exception&) {
      // Unreadable entry: recompute and overwrite.
    }
  }
  Json record = run(config);
  std::error_code ec;
  fs::create_directories(config.cache_dir, ec);
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << record.dump();
  }
  fs::rename(tmp, file, ec);
  return record;
}

std::string render(const Json& record, const std::string& format) {
  if (format == "csv") return render_csv(record);
  if (format == "pretty") {
    std::ostringstream os;
    render_pretty(record, "", os);
    return os.str();
  }
  return record.dump(2) + "\n";
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weierstrass weights at hyperosculating points of generalized Fermat curves"};
  app.set_version_flag("--version", GFW_VERSION);
  RunConfig config;
  std::optional<int> k;
  std::optional<int> n;
  std::string lambda;
  std::string field;
  std::string curve_file;
  std::vector<std::string> grid;
  std::string out_path;
  bool timing = false;
  std::optional<int> axis;
  std::optional<int> j;

  app.add_option("command", config.command, "info | gaps | weight | profile | pluecker | dims | strictness | mho | orbit | sweep")
      ->required();
  app.add_option("--k", k, "exponent k >= 2");
  app.add_option("--n", n, "number of equations plus one, n >= 2");
  app.add_option("--lambda", lambda, "comma-separated parameters lambda_1..lambda_{n-2}");
  app.add_option("--field", field, "modulus coefficients, ascending, comma-separated");
  app.add_option("--curve", curve_file, "JSON curve description file");
  app.add_option("--point", config.points, "point: comma-separated coordinates or JSON; repeatable")
      ->allow_extra_args(false);
  app.add_option("--axis", axis, "fixed points on this axis only");
  app.add_option("--mode", config.mode, "generic | embedded")->capture_default_str();
  app.add_option("--j", j, "mho: only this summand");
  app.add_option("--degree", config.degree, "profile: degree of the forms")->capture_default_str();
  app.add_option("--grid", grid, "sweep: lambda tuples, e.g. '2;3;-1/2' or '2,3;4,5'");
  app.add_option("--truncation", config.truncation, "series truncation; 0 chooses and escalates automatically");
  app.add_option("--format", config.format, "json | csv | pretty");
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--jobs", config.jobs, "worker threads")->capture_default_str();
  app.add_option("--cache-dir", config.cache_dir, "result cache directory (default $GFW_CACHE_DIR)");
  app.add_flag("--timing", timing, "report wall time on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  config.axis = axis;
  config.j = j;
  if (config.command == "sweep" && config.format == "json" && app.count("--format") == 0) config.format = "csv";
  if (config.cache_dir.empty())
    if (const char* env = std::getenv("GFW_CACHE_DIR")) config.cache_dir = env;

  const auto start = std::chrono::steady_clock::now();
  try {
    if (!curve_file.empty()) {
      if (k || n || !lambda.empty() || !field.empty())
        throw DomainError("--curve cannot be combined with --k, --n, --lambda or --field");
      std::ifstream in(curve_file);
      if (!in) throw DomainError("cannot open curve file " + curve_file);
      try {
        config.curve = Json::parse(in);
      } catch (const Json::exception& e) {
        throw DomainError(std::string("malformed curve file: ") + e.what());
      }
    } else {
      if (k) config.curve["k"] = *k;
      if (n) config.curve["n"] = *n;
      if (config.command != "orbit" && (!k || !n)) throw DomainError("need --k and --n (or --curve)");
      Json l = Json::array();
      if (!lambda.empty())
        for (const auto& part : CLI::detail::split(lambda, ',')) l.push_back(CLI::detail::trim_copy(part));
      config.curve["lambda"] = l;
      if (!field.empty()) {
        Json m = Json::array();
        for (const auto& q : parse_rational_list(field)) m.push_back(q.to_string());
        config.curve["field"] = m;
      }
    }
    for (const auto& g : grid)
      for (const auto& tuple : CLI::detail::split(g, ';')) {
        std::vector<std::string> l;
        const std::string t = CLI::detail::trim_copy(tuple);
        if (!t.empty())
          for (const auto& part : CLI::detail::split(t, ',')) l.push_back(CLI::detail::trim_copy(part));
        if (!l.empty()) config.grid.push_back(std::move(l));
      }

    const Json record = run_cached(config);
    const std::string text = render(record, config.format);
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(out_path);
      if (!f) throw DomainError("cannot write " + out_path);
      f << text;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
  if (timing)
    err << "wall time: "
        << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
  return 0;
}

}  // namespace gfw
