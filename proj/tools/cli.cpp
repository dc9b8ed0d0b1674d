#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rdiag/bounds.hpp"
#include "rdiag/cumulants.hpp"
#include "rdiag/errors.hpp"
#include "rdiag/format.hpp"
#include "rdiag/json_io.hpp"
#include "rdiag/mehler.hpp"
#include "rdiag/noncrossing.hpp"
#include "rdiag/normlab.hpp"
#include "rdiag/semigroup.hpp"
#include "rdiag/strings.hpp"

namespace rdiag::cli {
namespace {

Json big(const BigInt& v) {
  if (v.fits_slong_p()) return Json(static_cast<long long>(v.get_si()));
  return Json(v.get_str());
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(parse_rational(item));
  }
  if (out.empty()) throw ParseError("empty rational list", 0);
  return out;
}

std::vector<Rational> default_r_grid() {
  std::vector<Rational> grid;
  for (int k = 1; k <= 9; ++k) grid.emplace_back(k, 10);
  for (auto& r : grid) r.canonicalize();
  return grid;
}

struct MeasureOptions {
  std::string json;
  std::string two_point;
  std::vector<std::string> three_point;

  void add(CLI::App* cmd) {
    cmd->add_option("--measure", json, "Measure JSON {\"atoms\": [{\"x\": \"p/q\", \"w\": \"p/q\"}]}");
    cmd->add_option("--two-point", two_point, "Symmetric two-point measure at +-lambda");
    cmd->add_option("--three-point", three_point, "Three-point measure: a lambda")->expected(2);
  }

  std::optional<DiscreteMeasure> get() const {
    if (!json.empty()) return measure_from_json(json);
    if (!two_point.empty()) return DiscreteMeasure::two_point(parse_rational(two_point));
    if (three_point.size() == 2) {
      return DiscreteMeasure::three_point(parse_rational(three_point[0]),
                                          parse_rational(three_point[1]));
    }
    return std::nullopt;
  }

  DiscreteMeasure require() const {
    auto mu = get();
    if (!mu) throw DomainError("a measure is required (--measure, --two-point or --three-point)");
    return *mu;
  }
};

CumulantSpec resolve_spec(const std::string& model, const std::string& spec_json,
                          std::size_t length) {
  if (!spec_json.empty()) return spec_from_json(spec_json);
  if (model == "circular") return CumulantSpec::circular(length);
  if (model == "haar" || model == "haar_unitary") return CumulantSpec::haar_unitary(length);
  throw ParseError("unknown model '" + model + "'", 0);
}

void emit_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << cells[k];
  out << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-crossing partition counts, R-diagonal moments, Mehler kernels and norm scans", "rdiag"};
  app.require_subcommand(1);
  std::string format = "json";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };

  // nc-count
  auto* nc_count = app.add_subcommand("nc-count", "|NC_2(S)| and |NC(S)| of a 1/* string");
  std::string nc_string;
  nc_count->add_option("--string", nc_string, "String such as \"1^3 *^2 1 *^2\"")->required();

  // nc-enum
  auto* nc_enum = app.add_subcommand("nc-enum", "List NC(n), NC(S) or NC_2(S)");
  std::string enum_string;
  std::optional<std::size_t> enum_n;
  bool enum_pairs = false;
  auto* enum_string_opt = nc_enum->add_option("--string", enum_string, "1/* string");
  auto* enum_n_opt = nc_enum->add_option("--n", enum_n, "Ground set size for NC(n)");
  enum_string_opt->excludes(enum_n_opt);
  nc_enum->add_flag("--pairs", enum_pairs, "Pairings only");

  // moment
  auto* moment = app.add_subcommand("moment", "phi(a^S) or a mixed moment of *-free copies");
  std::string moment_string, moment_word, moment_model = "circular", moment_spec;
  auto* ms = moment->add_option("--string", moment_string, "1/* string");
  auto* mw = moment->add_option("--word", moment_word, "Word such as \"a1 a1* a2 a2*\"");
  ms->excludes(mw);
  moment->add_option("--model", moment_model, "circular or haar")
      ->check(CLI::IsMember({"circular", "haar", "haar_unitary"}));
  moment->add_option("--spec", moment_spec, "Cumulant spec JSON {\"kind\", \"d\": [\"p/q\"]}");

  // bounds-verify
  auto* bounds = app.add_subcommand("bounds-verify", "Check the NC_2 bounds on all balanced strings");
  std::size_t max_len = 8;
  bounds->add_option("--max-len", max_len, "Largest string length")->required();
  add_format(bounds);

  // mehler-kernel
  auto* kernel = app.add_subcommand("mehler-kernel", "Evaluate the Mehler kernel of a measure");
  MeasureOptions kernel_measure;
  kernel_measure.add(kernel);
  std::string kernel_r, kernel_x, kernel_y;
  kernel->add_option("--r", kernel_r, "Parameter r")->required();
  auto* kx = kernel->add_option("--x", kernel_x, "First argument");
  auto* ky = kernel->add_option("--y", kernel_y, "Second argument");
  kx->needs(ky);
  ky->needs(kx);

  // markov-check
  auto* markov = app.add_subcommand("markov-check", "Kernel positivity and contraction checks");
  MeasureOptions markov_measure;
  markov_measure.add(markov);
  std::string r_grid_text;
  markov->add_option("--r-grid", r_grid_text, "Comma-separated r values (default 1/10..9/10)");
  add_format(markov);

  // semigroup-apply
  auto* semi = app.add_subcommand("semigroup-apply", "Apply D_t or T_t to a word");
  std::string semi_word, semi_mode = "markov", semi_q;
  MeasureOptions semi_measure;
  semi->add_option("--word", semi_word, "Word such as \"a1* a1 a1* a2^2 a1*\"")->required();
  semi->add_option("--mode", semi_mode, "generic or markov")
      ->check(CLI::IsMember({"generic", "markov"}));
  semi->add_option("--q", semi_q, "Evaluate coefficients at this q");
  semi_measure.add(semi);

  // scan
  auto* scan = app.add_subcommand("scan", "Slope fits of psi_t norms");
  std::string scan_model = "circular", scan_spec;
  unsigned scan_p = 4;
  double t_min = 0.005, t_max = 0.05, scan_c = 40.0;
  std::size_t points = 10;
  scan->add_option("--model", scan_model, "circular, haar or custom")
      ->check(CLI::IsMember({"circular", "haar", "custom"}));
  scan->add_option("--spec", scan_spec, "Cumulant spec JSON for --model custom");
  scan->add_option("--p", scan_p, "2 or 4")->check(CLI::IsMember({2u, 4u}));
  scan->add_option("--t-min", t_min, "Smallest t")->check(CLI::PositiveNumber);
  scan->add_option("--t-max", t_max, "Largest t")->check(CLI::Range(0.0, 1.0));
  scan->add_option("--points", points, "Grid size")->check(CLI::Range(1, 10000));
  scan->add_option("--c", scan_c, "Truncation constant, N = ceil(c/t)")->check(CLI::Range(30.0, 1e6));
  add_format(scan);

  // sum-exp
  auto* sumexp = app.add_subcommand("sum-exp", "Slope of sum n^q e^{-nt}");
  unsigned q_power = 2;
  double se_min = 0.005, se_max = 0.05, se_c = 40.0;
  std::size_t se_points = 10;
  sumexp->add_option("--q", q_power, "Power q")->check(CLI::Range(0u, 20u));
  sumexp->add_option("--t-min", se_min, "Smallest t")->check(CLI::PositiveNumber);
  sumexp->add_option("--t-max", se_max, "Largest t")->check(CLI::PositiveNumber);
  sumexp->add_option("--points", se_points, "Grid size")->check(CLI::Range(2, 10000));
  sumexp->add_option("--c", se_c, "Truncation constant")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream sink;
    const int rc = app.exit(e, sink, err);
    if (rc == 0) out << sink.str();
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*nc_count) {
      const StarString s = parse_string(nc_string);
      Json j = Json::object();
      j["nc2"] = big(count_nc2(s));
      j["nc"] = big(count_nc(s));
      out << dump(j) << '\n';
    } else if (*nc_enum) {
      std::vector<SetPartition> parts;
      Json j = Json::object();
      if (enum_n) {
        parts = enumerate_nc(*enum_n);
        if (enum_pairs) {
          std::erase_if(parts, [](const SetPartition& p) {
            return std::any_of(p.blocks().begin(), p.blocks().end(),
                               [](const auto& b) { return b.size() != 2; });
          });
        }
        j["n"] = *enum_n;
      } else {
        if (enum_string_opt->count() == 0) throw DomainError("nc-enum needs --string or --n");
        const StarString s = parse_string(enum_string);
        parts = enum_pairs ? enumerate_nc2(s) : enumerate_nc_alternating(s);
        j["string"] = format_string(s);
      }
      Json list = Json::array();
      for (const auto& p : parts) list.push_back(format_partition(p));
      j["count"] = parts.size();
      j["partitions"] = std::move(list);
      out << dump(j) << '\n';
    } else if (*moment) {
      Json j = Json::object();
      if (mw->count() > 0) {
        const GeneratorWord w = parse_word(moment_word);
        const CumulantSpec spec = resolve_spec(moment_model, moment_spec, w.size() / 2 + 1);
        std::map<std::size_t, CumulantSpec> specs;
        for (const Letter& l : w.letters) specs.emplace(l.generator, spec);
        j["word"] = format_word(w);
        j["moment"] = to_string(mixed_moment(specs, w));
      } else {
        if (ms->count() == 0) throw DomainError("moment needs --string or --word");
        const StarString s = parse_string(moment_string);
        const CumulantSpec spec = resolve_spec(moment_model, moment_spec, s.length() / 2 + 1);
        j["string"] = format_string(s);
        j["moment"] = to_string(rdiag_moment(spec, s));
      }
      out << dump(j) << '\n';
    } else if (*bounds) {
      const auto reports = verify_bounds(max_len);
      if (format == "csv") {
        emit_csv_row(out, {"string", "n", "r", "i", "h", "count_nc2", "count_nc", "lower",
                           "upper_height", "upper_length_num", "upper_length_den", "pass"});
        for (const auto& rep : reports) {
          emit_csv_row(out, {format_string(rep.string), std::to_string(rep.n),
                             std::to_string(rep.r), std::to_string(rep.i), std::to_string(rep.h),
                             rep.count_nc2.get_str(), rep.count_nc.get_str(), rep.lower.get_str(),
                             rep.upper_height.get_str(), rep.upper_length.get_num().get_str(),
                             rep.upper_length.get_den().get_str(), rep.pass() ? "true" : "false"});
        }
      } else {
        Json rows = Json::array();
        bool all = true;
        for (const auto& rep : reports) {
          all = all && rep.pass();
          Json row = Json::object();
          row["string"] = format_string(rep.string);
          row["n"] = rep.n;
          row["r"] = rep.r;
          row["i"] = rep.i;
          row["h"] = rep.h;
          row["count_nc2"] = big(rep.count_nc2);
          row["count_nc"] = big(rep.count_nc);
          row["lower"] = big(rep.lower);
          row["upper_height"] = big(rep.upper_height);
          row["upper_length"] = to_string(rep.upper_length);
          row["pass"] = rep.pass();
          rows.push_back(std::move(row));
        }
        Json j = Json::object();
        j["max_len"] = max_len;
        j["count"] = reports.size();
        j["all_pass"] = all;
        j["reports"] = std::move(rows);
        out << dump(j) << '\n';
      }
    } else if (*kernel) {
      const DiscreteMeasure mu = kernel_measure.require();
      const Rational r = parse_rational(kernel_r);
      Json j = Json::object();
      j["r"] = to_string(r);
      if (kx->count() > 0) {
        j["x"] = to_string(parse_rational(kernel_x));
        j["y"] = to_string(parse_rational(kernel_y));
        j["value"] = to_string(mehler_eval(mu, r, parse_rational(kernel_x), parse_rational(kernel_y)));
      } else {
        Json points = Json::array();
        for (const Atom& a : mu.atoms()) points.push_back(to_string(a.x));
        Json matrix = Json::array();
        for (const auto& row : mehler_matrix(mu, r)) {
          Json jr = Json::array();
          for (const auto& v : row) jr.push_back(to_string(v));
          matrix.push_back(std::move(jr));
        }
        j["points"] = std::move(points);
        j["kernel"] = std::move(matrix);
      }
      out << dump(j) << '\n';
    } else if (*markov) {
      const DiscreteMeasure mu = markov_measure.require();
      const auto grid = r_grid_text.empty() ? default_r_grid() : parse_rational_list(r_grid_text);
      const MarkovReport rep = markov_check(mu, grid);
      if (format == "csv") {
        emit_csv_row(out, {"r", "min_value_num", "min_value_den", "markovian"});
        for (const auto& row : rep.rows) {
          emit_csv_row(out, {to_string(row.r), row.min_value.get_num().get_str(),
                             row.min_value.get_den().get_str(), row.markovian ? "true" : "false"});
        }
      } else {
        Json rows = Json::array();
        for (const auto& row : rep.rows) {
          Json jr = Json::object();
          jr["r"] = to_string(row.r);
          jr["min_value"] = to_string(row.min_value);
          jr["markovian"] = row.markovian;
          jr["positivity_preserving"] = row.positivity_preserving;
          jr["l1_norm"] = to_string(row.l1_norm);
          jr["linf_norm"] = to_string(row.linf_norm);
          jr["trace_preserving"] = row.trace_preserving;
          rows.push_back(std::move(jr));
        }
        Json j = Json::object();
        j["markovian"] = rep.markovian();
        j["rows"] = std::move(rows);
        out << dump(j) << '\n';
      }
    } else if (*semi) {
      const GeneratorWord w = parse_word(semi_word);
      WordCombination result;
      if (semi_mode == "generic") {
        result = generic_Dt(w);
      } else {
        MeasureMap measures;
        const auto mu = semi_measure.get();
        const std::size_t needed = 2 * w.size() + 2;
        for (const Letter& l : w.letters) {
          measures.emplace(l.generator, mu ? mu->moments(needed) : semicircle_moments(needed));
        }
        result = markov_Tt(w, measures);
      }
      if (semi_q.empty()) {
        out << combination_to_json(result) << '\n';
      } else {
        const Rational q = parse_rational(semi_q);
        Json arr = Json::array();
        for (const auto& [word, value] : evaluate(result, q)) {
          Json item = Json::object();
          item["coeff"] = to_string(value);
          item["word"] = format_word(word);
          arr.push_back(std::move(item));
        }
        out << dump(arr) << '\n';
      }
    } else if (*scan) {
      if (t_min > t_max) throw DomainError("scan: --t-min exceeds --t-max");
      ScanConfig cfg;
      cfg.t_grid = log_grid(t_min, t_max, points);
      cfg.c = scan_c;
      cfg.p = scan_p;
      if (scan_model == "circular") {
        cfg.model = ScanModel::Circular;
      } else if (scan_model == "haar") {
        cfg.model = ScanModel::Haar;
      } else {
        if (scan_spec.empty()) throw DomainError("scan --model custom needs --spec");
        cfg.model = ScanModel::Custom;
        cfg.spec = spec_from_json(scan_spec);
      }
      const ScanResult res = ultracontractive_scan(cfg);
      if (format == "csv") {
        emit_csv_row(out, {"t", "N", "norm2_sq", "norm4_4", "ratio_p4", "ratio_inf"});
        for (const auto& row : res.rows) {
          emit_csv_row(out, {format_double(row.t), std::to_string(row.N), format_double(row.norm2_sq),
                             format_double(row.norm4_4), format_double(row.ratio_p),
                             format_double(row.ratio_inf)});
        }
      } else {
        Json arr = Json::array();
        for (const auto& c : res.checks) {
          Json item = Json::object();
          item["name"] = c.name;
          item["target"] = c.target;
          item["slope"] = c.fit.slope;
          item["tolerance"] = c.tolerance;
          item["pass"] = c.pass();
          arr.push_back(std::move(item));
        }
        out << dump(arr) << '\n';
      }
    } else if (*sumexp) {
      if (se_min > se_max) throw DomainError("sum-exp: --t-min exceeds --t-max");
      const FitReport fit = sum_exp_slope(q_power, log_grid(se_min, se_max, se_points), se_c);
      const double target = -static_cast<double>(q_power + 1);
      Json j = Json::object();
      j["target"] = target;
      j["slope"] = fit.slope;
      j["tolerance"] = 0.05;
      j["pass"] = std::abs(fit.slope - target) <= 0.05;
      out << dump(j) << '\n';
    }
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::logic_error& e) {  // DomainError and friends
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace rdiag::cli
