#include "gofknot/cli.hpp"

#include <charconv>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "gofknot/atlas.hpp"
#include "gofknot/serialize.hpp"

namespace gofknot {

namespace {

std::string params_suffix(const GofKnot& k) {
  if (k.params.alpha) return "(alpha=" + std::to_string(*k.params.alpha) + ")";
  if (k.params.p && k.params.q) {
    return "(p=" + std::to_string(*k.params.p) +
           ",q=" + std::to_string(*k.params.q) + ")";
  }
  return "";
}

void print_knot_line(std::ostream& out, const GofKnot& k) {
  out << to_string(k.label) << params_suffix(k) << " braid=\""
      << to_string(k.braid) << "\" matrix=" << to_string(k.matrix)
      << " trace=" << k.trace << '\n';
}

std::string matrix_template_display(const Table1Row& row) {
  const auto& m = row.matrix_template;
  return "[[" + m[0] + "," + m[1] + "],[" + m[2] + "," + m[3] + "]]";
}

// "a..b" with either bound negative, e.g. "-5..5".
std::optional<SlopeWindow> parse_slopes(const std::string& text) {
  auto sep = text.find("..");
  if (sep == std::string::npos) return std::nullopt;
  SlopeWindow window;
  const char* lo_begin = text.data();
  const char* lo_end = text.data() + sep;
  const char* hi_begin = text.data() + sep + 2;
  const char* hi_end = text.data() + text.size();
  auto lo = std::from_chars(lo_begin, lo_end, window.lo);
  auto hi = std::from_chars(hi_begin, hi_end, window.hi);
  if (lo.ec != std::errc{} || lo.ptr != lo_end || hi.ec != std::errc{} ||
      hi.ptr != hi_end) {
    return std::nullopt;
  }
  return window;
}

std::string verdict_plain(const SurgeryVerdict& v) {
  return to_string(v.status) + " (" + rule_display_name(v.rule) + ")";
}

GofKnot find_knot(std::int64_t alpha, std::int64_t beta,
                  const std::string& label_text) {
  auto label = knot_label_from_string(label_text);
  if (!label) throw DomainError("unknown knot label \"" + label_text + "\"");
  LensSpace l = normalize(alpha, beta);
  for (const auto& k : classify(l)) {
    if (k.label == *label) return k;
  }
  throw DomainError("no knot labeled " + label_text + " in " + to_string(l));
}

struct Options {
  std::string braid;
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::string knot_label;
  std::int64_t slope = 0;
  bool all_slopes = false;
  std::string matrix_a, matrix_b;
  std::string group = "gl2";
  std::int64_t max_alpha = 0;
  std::string slopes_text = "-5..5";
  std::string out_path;
  std::string format = "json";
  bool as_json = false;
};

int run_monodromy(const Options& opt, std::ostream& out) {
  BraidWord w = parse_braid(opt.braid);
  Mat2 m = monodromy(w);
  if (opt.as_json) {
    ordered_json j = ordered_json::object();
    j["braid"] = to_string(w);
    j["matrix"] = ordered_json::array(
        {ordered_json::array({m.a, m.b}), ordered_json::array({m.c, m.d})});
    j["trace"] = trace(m);
    out << j.dump() << '\n';
  } else {
    out << to_string(m) << " trace=" << trace(m) << '\n';
  }
  return 0;
}

int run_classify(const Options& opt, std::ostream& out) {
  LensSpace l = normalize(opt.alpha, opt.beta);
  auto knots = classify(l);
  if (opt.as_json) {
    ordered_json j = ordered_json::array();
    for (const auto& k : knots) j.push_back(knot_to_json(k));
    out << j.dump() << '\n';
  } else {
    for (const auto& k : knots) print_knot_line(out, k);
  }
  return 0;
}

int run_verdict(const Options& opt, std::ostream& out) {
  GofKnot k = find_knot(opt.alpha, opt.beta, opt.knot_label);
  if (opt.all_slopes) {
    AllIntegralLo summary = all_integral_lo(k);
    std::vector<SurgeryVerdict> verdicts;
    for (std::int64_t n = -5; n <= 5; ++n) {
      verdicts.push_back(surgery_verdict(k, n));
    }
    if (opt.as_json) {
      ordered_json j = ordered_json::object();
      j["all_integral_lo"] = to_string(summary);
      ordered_json list = ordered_json::array();
      for (const auto& v : verdicts) list.push_back(verdict_to_json(v));
      j["verdicts"] = std::move(list);
      out << j.dump() << '\n';
    } else {
      out << "all-integral-lo: " << to_string(summary) << '\n';
      for (const auto& v : verdicts) {
        out << "n=" << v.slope << ": " << verdict_plain(v) << '\n';
      }
    }
  } else {
    SurgeryVerdict v = surgery_verdict(k, opt.slope);
    if (opt.as_json) {
      out << verdict_to_json(v).dump() << '\n';
    } else {
      out << verdict_plain(v) << '\n';
    }
  }
  return 0;
}

int run_conjugate(const Options& opt, std::ostream& out) {
  Mat2 a = parse_mat2(opt.matrix_a);
  Mat2 b = parse_mat2(opt.matrix_b);
  bool result = opt.group == "sl2" ? conjugate_sl2(a, b) : conjugate_gl2(a, b);
  if (opt.as_json) {
    ordered_json j = ordered_json::object();
    j["group"] = opt.group;
    j["conjugate"] = result;
    out << j.dump() << '\n';
  } else {
    out << (result ? "conjugate" : "not-conjugate") << '\n';
  }
  return 0;
}

int run_table1(const Options& opt, std::ostream& out) {
  auto rows = table1();
  if (opt.as_json) {
    ordered_json j = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json r = ordered_json::object();
      r["label"] = to_string(row.label);
      r["braid"] = row.braid_template;
      r["matrix"] = ordered_json::array(
          {row.matrix_template[0], row.matrix_template[1],
           row.matrix_template[2], row.matrix_template[3]});
      r["trace"] = row.trace_template;
      r["parametric"] = row.parametric;
      j.push_back(std::move(r));
    }
    out << j.dump() << '\n';
  } else {
    out << std::left << std::setw(7) << "label" << std::setw(25) << "braid"
        << std::setw(39) << "matrix" << "trace" << '\n';
    for (const auto& row : rows) {
      out << std::left << std::setw(7) << to_string(row.label)
          << std::setw(25) << row.braid_template << std::setw(39)
          << matrix_template_display(row) << row.trace_template << '\n';
    }
  }
  return 0;
}

int run_atlas(const Options& opt, std::ostream& out, std::ostream& err) {
  auto window = parse_slopes(opt.slopes_text);
  if (!window) {
    err << "error: --slopes expects the form a..b, e.g. -5..5\n";
    return 2;
  }
  std::string format = opt.as_json ? "json" : opt.format;
  auto records = enumerate(opt.max_alpha, *window);
  if (opt.out_path == "-") {
    if (format == "csv") {
      export_csv(records, out);
    } else {
      export_json(records, out);
    }
    return 0;
  }
  if (format == "csv") {
    export_csv(records, opt.out_path);
  } else {
    export_json(records, opt.out_path);
  }
  AtlasStats s = stats(records);
  std::int64_t knots = 0;
  for (const auto& [count, spaces] : s.counts) knots += count * spaces;
  out << "wrote " << records.size() << " spaces (" << knots << " knots, "
      << s.lo_knot_count << " all-lo) to " << opt.out_path << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options opt;
  CLI::App app{
      "Exact classification of genus-one fibered knots in lens spaces and "
      "left-orderability verdicts for their integral Dehn surgeries"};
  app.name("gofknot");
  app.require_subcommand(1);

  auto* monodromy_cmd = app.add_subcommand(
      "monodromy", "Image of a 3-braid under the once-punctured-torus "
                   "monodromy representation");
  monodromy_cmd->add_option("braid", opt.braid, "braid word, e.g. \"s1^4 s2\"")
      ->required();
  monodromy_cmd->add_flag("--json", opt.as_json, "emit JSON");

  auto* classify_cmd = app.add_subcommand(
      "classify", "All genus-one fibered knots in L(alpha,beta)");
  classify_cmd->add_option("alpha", opt.alpha, "lens space alpha")->required();
  classify_cmd->add_option("beta", opt.beta, "lens space beta")->required();
  classify_cmd->add_flag("--json", opt.as_json, "emit JSON");

  auto* verdict_cmd = app.add_subcommand(
      "verdict",
      "Left-orderability verdict for integral surgery on a chosen knot");
  verdict_cmd->add_option("alpha", opt.alpha, "lens space alpha")->required();
  verdict_cmd->add_option("beta", opt.beta, "lens space beta")->required();
  verdict_cmd->add_option("--knot", opt.knot_label, "knot label, e.g. B2")
      ->required();
  auto* slope_opt =
      verdict_cmd->add_option("--slope", opt.slope, "integral surgery slope");
  auto* all_flag = verdict_cmd->add_flag(
      "--all", opt.all_slopes,
      "summary over all integral slopes plus the [-5,5] window");
  verdict_cmd->add_flag("--json", opt.as_json, "emit JSON");

  auto* conjugate_cmd = app.add_subcommand(
      "conjugate", "Decide conjugacy of two integer matrices");
  conjugate_cmd
      ->add_option("first", opt.matrix_a, "matrix, e.g. \"[[5,4],[1,1]]\"")
      ->required();
  conjugate_cmd->add_option("second", opt.matrix_b, "matrix")->required();
  conjugate_cmd
      ->add_option("--group", opt.group, "conjugating group (default gl2)")
      ->check(CLI::IsMember({"sl2", "gl2"}));
  conjugate_cmd->add_flag("--json", opt.as_json, "emit JSON");

  auto* table1_cmd = app.add_subcommand(
      "table1", "The eight knot families with braids, matrices, and traces");
  table1_cmd->add_flag("--json", opt.as_json, "emit JSON");

  auto* atlas_cmd = app.add_subcommand(
      "atlas", "Sweep all lens spaces up to an alpha bound and export the "
               "classification database");
  atlas_cmd->add_option("--max-alpha", opt.max_alpha, "largest alpha to sweep")
      ->required()
      ->check(CLI::NonNegativeNumber);
  atlas_cmd->add_option("--slopes", opt.slopes_text,
                        "verdict slope window a..b (default -5..5)");
  atlas_cmd->add_option("--out", opt.out_path, "output path, or - for stdout")
      ->required();
  atlas_cmd->add_option("--format", opt.format, "json (JSON lines) or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  atlas_cmd->add_flag("--json", opt.as_json, "force JSON lines format");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(monodromy_cmd)) return run_monodromy(opt, out);
    if (app.got_subcommand(classify_cmd)) return run_classify(opt, out);
    if (app.got_subcommand(verdict_cmd)) {
      const bool has_slope = slope_opt->count() > 0;
      const bool has_all = all_flag->count() > 0;
      if (has_slope == has_all) {
        err << "error: verdict requires exactly one of --slope or --all\n";
        return 2;
      }
      return run_verdict(opt, out);
    }
    if (app.got_subcommand(conjugate_cmd)) return run_conjugate(opt, out);
    if (app.got_subcommand(table1_cmd)) return run_table1(opt, out);
    if (app.got_subcommand(atlas_cmd)) return run_atlas(opt, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  throw InternalError("no subcommand dispatched");
}

}  // namespace gofknot
