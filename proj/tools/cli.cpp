#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hallfrac/curve.hpp"
#include "hallfrac/entropy.hpp"
#include "hallfrac/error.hpp"
#include "hallfrac/farey.hpp"
#include "hallfrac/fracton.hpp"
#include "hallfrac/rational.hpp"
#include "hallfrac/spectrum.hpp"

namespace hallfrac::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr FractionStyle kMachine = FractionStyle::Table;

std::string fraction_check(const std::string& text) {
  try {
    parse_fraction(text);
    return {};
  } catch (const Error& e) {
    return e.what();
  }
}

bool parse_real(const std::string& text, double& out) {
  if (text.empty()) return false;
  char* end = nullptr;
  out = std::strtod(text.c_str(), &end);
  return end == text.c_str() + text.size() && std::isfinite(out);
}

/// "p/q" or a decimal real.
double parse_label_value(const std::string& text) {
  try {
    return parse_fraction(text).to_double();
  } catch (const Error&) {
  }
  double v = 0.0;
  if (!parse_real(text, v)) throw CLI::ValidationError("--h", "expected p/q or a real, got '" + text + "'");
  return v;
}

std::vector<double> expand_grid(const std::string& spec, bool log_spaced) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  double lo = 0.0, hi = 0.0, steps_real = 0.0;
  if (parts.size() != 3 || !parse_real(parts[0], lo) || !parse_real(parts[1], hi) ||
      !parse_real(parts[2], steps_real) || steps_real < 1.0 ||
      steps_real != std::floor(steps_real) || hi < lo) {
    throw CLI::ValidationError("--grid", "expected xmin:xmax:steps with xmin <= xmax, steps >= 1");
  }
  if (log_spaced && !(lo > 0.0)) throw CLI::ValidationError("--grid", "--log needs xmin > 0");
  const auto steps = static_cast<std::size_t>(steps_real);
  std::vector<double> out;
  out.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = steps == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(steps - 1);
    out.push_back(log_spaced ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)))
                             : lo + t * (hi - lo));
  }
  if (steps > 1) out.back() = hi;
  return out;
}

struct Parser {
  CLI::App app{"Fractal classes of filling factors, Farey series and fracton statistics",
               "hallfrac"};
  CommandRequest req;
  std::vector<std::pair<CLI::App*, Subcommand>> subs;

  Parser() {
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();
    const std::map<std::string, Format> formats{
        {"plain", Format::Plain}, {"csv", Format::Csv}, {"json", Format::Json}};
    app.add_option("--format", req.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--precision", req.precision, "Significant digits for reals")
        ->check(CLI::Range(1, 17));

    auto* farey = app.add_subcommand("farey", "Farey series F_n");
    farey->add_option("--order", req.order, "Order n")->required()->check(CLI::PositiveNumber);
    farey->add_flag("--verify", req.verify, "Also report P1/P2 checks");
    subs.emplace_back(farey, Subcommand::Farey);

    auto* classify = app.add_subcommand("classify", "Hausdorff label of a filling factor");
    classify->add_option("nu", req.value, "Filling factor p/q")->required()->check(fraction_check);
    subs.emplace_back(classify, Subcommand::Classify);

    auto* dual = app.add_subcommand("dual", "Dual filling factor (or dual label with --label)");
    dual->add_option("value", req.value, "p/q")->required()->check(fraction_check);
    dual->add_flag("--label", req.as_label, "Treat the value as a Hausdorff label h");
    subs.emplace_back(dual, Subcommand::Dual);

    auto* cls = app.add_subcommand("class", "First members of the fractal class h");
    cls->add_option("h", req.value, "Label p/q in [1,2]")->required()->check(fraction_check);
    cls->add_option("--count", req.count, "Number of members")->check(CLI::PositiveNumber);
    subs.emplace_back(cls, Subcommand::Class);

    auto* theorem = app.add_subcommand("theorem", "Check second-member theorem on F_n");
    theorem->add_option("--order", req.order, "Order n >= 2")->required();
    subs.emplace_back(theorem, Subcommand::Theorem);

    auto* table = app.add_subcommand("table", "Fractal-class table over unit intervals");
    table->add_option("--order", req.order, "Farey order for the columns")->check(CLI::PositiveNumber);
    table->add_option("--rows", req.rows, "Number of unit intervals")->check(CLI::PositiveNumber);
    subs.emplace_back(table, Subcommand::Table);

    auto* occ = app.add_subcommand("occupation", "Fractal distribution function n(h, xi)");
    occ->add_option("--h", req.h, "Label p/q or real in [1,2]")->required();
    auto* xi = occ->add_option("--xi", req.xi, "xi = exp((e-mu)/KT)");
    auto* grid = occ->add_option("--grid", req.grid, "xi grid xmin:xmax:steps");
    occ->add_flag("--log", req.log_grid, "Log-spaced grid");
    xi->excludes(grid);
    subs.emplace_back(occ, Subcommand::Occupation);

    auto* ent = app.add_subcommand("entropy", "Fractal von Neumann entropy per state");
    ent->add_option("--h", req.h, "Label p/q or real in [1,2]")->required();
    auto* n = ent->add_option("--n", req.n, "Occupation");
    auto* exi = ent->add_option("--xi", req.xi, "Solve n from xi first");
    n->excludes(exi);
    ent->add_option("--K", req.boltzmann, "Boltzmann constant")->check(CLI::PositiveNumber);
    subs.emplace_back(ent, Subcommand::Entropy);

    auto* curve = app.add_subcommand("curve", "Generate a fractal curve or estimate its dimension");
    curve->add_option("--generator", req.generator, "Curve generator")->check(CLI::IsMember({"koch"}));
    curve->add_option("--level", req.level, "Recursion level")->check(CLI::Range(0, 1000));
    curve->add_option("--dimension", req.dimension, "Target dimension in (1,2), default ln4/ln3");
    curve->add_flag("--estimate", req.estimate, "Estimate dimension instead of printing points");
    curve->add_option("--kmin", req.k_first, "First resolution exponent");
    curve->add_option("--kmax", req.k_last, "Last resolution exponent");
    subs.emplace_back(curve, Subcommand::Curve);
  }

  void parse(std::vector<std::string> args) {
    std::reverse(args.begin(), args.end());
    app.parse(args);
    for (const auto& [sub, kind] : subs) {
      if (sub->parsed()) req.subcommand = kind;
    }
    if (req.subcommand == Subcommand::Occupation && !req.xi && !req.grid) {
      throw CLI::RequiredError("occupation needs --xi or --grid");
    }
    if (req.subcommand == Subcommand::Entropy && !req.xi && !req.n) {
      throw CLI::RequiredError("entropy needs --n or --xi");
    }
    if (req.subcommand == Subcommand::Occupation || req.subcommand == Subcommand::Entropy) {
      parse_label_value(req.h);
    }
    if (req.grid) expand_grid(*req.grid, req.log_grid);
  }
};


class Emitter {
 public:
  Emitter(const CommandRequest& req, std::ostream& out, std::ostream& err)
      : req_(req), out_(out), err_(err) {}

  std::string real(double v) const { return format_real(v, req_.precision); }
  Json real_json(double v) const { return Json(std::strtod(real(v).c_str(), nullptr)); }
  static std::string frac(const Fraction& f) { return format(f, kMachine); }

  void json(const Json& j) const { out_ << j.dump(2) << '\n'; }

  int farey() const {
    const FareySequence seq = generate_farey(req_.order);
    switch (req_.format) {
      case Format::Csv:
        for (const auto& f : seq.elements) out_ << frac(f) << '\n';
        break;
      case Format::Json: {
        Json arr = Json::array();
        for (const auto& f : seq.elements) arr.push_back(frac(f));
        json(arr);
        break;
      }
      case Format::Plain: {
        out_ << "F_" << seq.order << " (" << seq.elements.size() << " terms):";
        for (const auto& f : seq.elements) out_ << ' ' << frac(f);
        out_ << '\n';
        break;
      }
    }
    if (req_.verify) {
      const auto p1 = verify_p1(seq);
      const auto p2 = verify_p2(seq);
      std::ostream& diag = req_.format == Format::Plain ? out_ : err_;
      diag << "P1 " << (p1.holds ? "holds" : "FAILS") << " on " << p1.checked << " pairs\n";
      diag << "P2 " << (p2.holds ? "holds" : "FAILS") << " on " << p2.checked << " triples\n";
      if (!p1.holds || !p2.holds) return kDomainError;
    }
    return kOk;
  }

  int classify() const {
    const FillingFactor nu(parse_fraction(req_.value));
    const HausdorffLabel h = classify_h(nu);
    switch (req_.format) {
      case Format::Plain: out_ << "h = " << format(h.value()) << '\n'; break;
      case Format::Csv: out_ << "nu,h\n" << frac(nu.value()) << ',' << frac(h.value()) << '\n'; break;
      case Format::Json: json(Json{{"nu", frac(nu.value())}, {"h", frac(h.value())}}); break;
    }
    return kOk;
  }

  int dual() const {
    const Fraction v = parse_fraction(req_.value);
    if (req_.as_label) {
      const HausdorffLabel h(v);
      const HausdorffLabel d = dual_h(h);
      switch (req_.format) {
        case Format::Plain: out_ << "dual h = " << format(d.value()) << '\n'; break;
        case Format::Csv: out_ << "h,dual_h\n" << frac(h.value()) << ',' << frac(d.value()) << '\n'; break;
        case Format::Json: json(Json{{"h", frac(h.value())}, {"dual_h", frac(d.value())}}); break;
      }
      return kOk;
    }
    const FillingFactor nu(v);
    const FillingFactor d = dual_nu(nu);
    const HausdorffLabel h = classify_h(nu);
    const HausdorffLabel hd = classify_h(d);
    switch (req_.format) {
      case Format::Plain:
        out_ << "(" << format(nu.value()) << ", " << format(d.value()) << ")  h = "
             << format(h.value()) << ", dual h = " << format(hd.value()) << '\n';
        break;
      case Format::Csv:
        out_ << "nu,dual_nu,h,dual_h\n"
             << frac(nu.value()) << ',' << frac(d.value()) << ',' << frac(h.value()) << ','
             << frac(hd.value()) << '\n';
        break;
      case Format::Json:
        json(Json{{"nu", frac(nu.value())},
                  {"dual_nu", frac(d.value())},
                  {"h", frac(h.value())},
                  {"dual_h", frac(hd.value())}});
        break;
    }
    return kOk;
  }

  int members() const {
    const HausdorffLabel h(parse_fraction(req_.value));
    const auto list = class_members(h, req_.count);
    switch (req_.format) {
      case Format::Plain: {
        out_ << '{';
        for (std::size_t i = 0; i < list.size(); ++i) out_ << (i ? ", " : "") << format(list[i]);
        out_ << ", ...}  h = " << format(h.value()) << '\n';
        break;
      }
      case Format::Csv:
        out_ << "index,member\n";
        for (std::size_t i = 0; i < list.size(); ++i) out_ << i + 1 << ',' << frac(list[i]) << '\n';
        break;
      case Format::Json: {
        Json arr = Json::array();
        for (const auto& m : list) arr.push_back(frac(m));
        json(Json{{"h", frac(h.value())}, {"members", arr}});
        break;
      }
    }
    return kOk;
  }

  int theorem() const {
    const TheoremReport report = verify_theorem(req_.order);
    const bool ok = report.all_hold();
    switch (req_.format) {
      case Format::Plain: {
        for (const auto& e : report.entries) {
          out_ << "f = " << format(e.f) << "  h = " << format(e.h.value())
               << "  second = " << format(e.second_member) << "  " << (e.holds ? "ok" : "FAIL")
               << '\n';
        }
        const auto passed = std::count_if(report.entries.begin(), report.entries.end(),
                                          [](const TheoremEntry& e) { return e.holds; });
        out_ << (ok ? "holds" : "FAILS") << " for " << passed << '/' << report.entries.size()
             << " interior fractions of F_" << report.order << '\n';
        break;
      }
      case Format::Csv:
        out_ << "f,h,second_member,holds\n";
        for (const auto& e : report.entries) {
          out_ << frac(e.f) << ',' << frac(e.h.value()) << ',' << frac(e.second_member) << ','
               << (e.holds ? "true" : "false") << '\n';
        }
        break;
      case Format::Json: {
        Json arr = Json::array();
        for (const auto& e : report.entries) {
          arr.push_back(Json{{"f", frac(e.f)},
                             {"h", frac(e.h.value())},
                             {"second_member", frac(e.second_member)},
                             {"holds", e.holds}});
        }
        json(Json{{"order", report.order}, {"holds", ok}, {"entries", arr}});
        break;
      }
    }
    return ok ? kOk : kDomainError;
  }

  int table() const {
    const FractalTable t = fractal_table(req_.order, req_.rows);
    switch (req_.format) {
      case Format::Csv:
        out_ << 'h';
        for (const auto& c : t.columns) out_ << ',' << format(c.value());
        out_ << '\n';
        for (const auto& row : t.rows) {
          out_ << row.interval_label();
          for (const auto& cell : row.cells) out_ << ',' << frac(cell);
          out_ << '\n';
        }
        break;
      case Format::Json: {
        Json cols = Json::array();
        for (const auto& c : t.columns) cols.push_back(frac(c.value()));
        Json rows = Json::array();
        for (const auto& row : t.rows) {
          Json cells = Json::array();
          for (const auto& cell : row.cells) cells.push_back(frac(cell));
          rows.push_back(Json{{"interval", row.interval_label()}, {"cells", cells}});
        }
        json(Json{{"order", t.order}, {"columns", cols}, {"rows", rows}});
        break;
      }
      case Format::Plain: {
        std::vector<std::vector<std::string>> grid;
        grid.emplace_back(std::vector<std::string>{"h"});
        for (const auto& c : t.columns) grid.back().push_back(format(c.value()));
        for (const auto& row : t.rows) {
          grid.emplace_back(std::vector<std::string>{row.interval_label()});
          for (const auto& cell : row.cells) grid.back().push_back(frac(cell));
        }
        std::vector<std::size_t> width(grid.front().size(), 0);
        for (const auto& line : grid) {
          for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
        }
        for (const auto& line : grid) {
          for (std::size_t i = 0; i < line.size(); ++i) {
            out_ << (i ? "  " : "") << line[i];
            if (i + 1 < line.size()) out_ << std::string(width[i] - line[i].size(), ' ');
          }
          out_ << '\n';
        }
        break;
      }
    }
    return kOk;
  }

  int occupation_cmd() const {
    const double h = parse_label_value(req_.h);
    std::vector<double> xis = req_.grid ? expand_grid(*req_.grid, req_.log_grid)
                                        : std::vector<double>{*req_.xi};
    std::vector<FractonPoint> pts;
    pts.reserve(xis.size());
    for (double xi : xis) pts.push_back(solve_fracton(h, xi));

    auto point_json = [&](const FractonPoint& p) {
      return Json{{"h", real_json(p.h)},
                  {"xi", real_json(p.xi)},
                  {"Y", real_json(p.y)},
                  {"n", real_json(p.n)},
                  {"residual", real_json(p.residual)}};
    };
    switch (req_.format) {
      case Format::Csv:
        out_ << "h,xi,Y,n,residual\n";
        for (const auto& p : pts) {
          out_ << real(p.h) << ',' << real(p.xi) << ',' << real(p.y) << ',' << real(p.n) << ','
               << real(p.residual) << '\n';
        }
        break;
      case Format::Json:
        if (!req_.grid) {
          json(point_json(pts.front()));
        } else {
          Json arr = Json::array();
          for (const auto& p : pts) arr.push_back(point_json(p));
          json(arr);
        }
        break;
      case Format::Plain:
        for (const auto& p : pts) {
          out_ << "h = " << real(p.h) << "  xi = " << real(p.xi) << "  Y = " << real(p.y)
               << "  n = " << real(p.n) << "  residual = " << real(p.residual) << '\n';
        }
        break;
    }
    return kOk;
  }

  int entropy_cmd() const {
    const double h = parse_label_value(req_.h);
    const double n = req_.n ? *req_.n : occupation(h, *req_.xi);
    const EntropyPoint pt = entropy_point(h, n, req_.boltzmann);
    switch (req_.format) {
      case Format::Csv:
        out_ << "h,n,S\n" << real(pt.h) << ',' << real(pt.n) << ',' << real(pt.s) << '\n';
        break;
      case Format::Json:
        json(Json{{"h", real_json(pt.h)}, {"n", real_json(pt.n)}, {"S", real_json(pt.s)}});
        break;
      case Format::Plain:
        out_ << "S = " << real(pt.s) << "  (h = " << real(pt.h) << ", n = " << real(pt.n) << ")\n";
        break;
    }
    return kOk;
  }

  int curve_cmd() const {
    const double d = req_.dimension.value_or(std::log(4.0) / std::log(3.0));
    const CurvePolyline curve = generate_koch(req_.level, d);
    if (!req_.estimate) {
      if (req_.format == Format::Json) {
        Json arr = Json::array();
        for (const auto& p : curve.points) arr.push_back(Json::array({real_json(p.x), real_json(p.y)}));
        json(Json{{"generator", curve.generator}, {"level", curve.level}, {"points", arr}});
      } else {
        out_ << "x,y\n";
        for (const auto& p : curve.points) out_ << real(p.x) << ',' << real(p.y) << '\n';
      }
      return kOk;
    }
    const auto grid = geometric_resolutions(koch_ratio(d), req_.k_first, req_.k_last);
    const DimensionEstimate est = estimate_dimension(curve, grid);
    switch (req_.format) {
      case Format::Csv:
        out_ << "h,stderr,target\n"
             << real(est.h) << ',' << real(est.standard_error) << ',' << real(d) << '\n';
        break;
      case Format::Json: {
        Json samples = Json::array();
        for (const auto& s : est.samples) {
          samples.push_back(Json{{"R", real_json(s.resolution)}, {"L", real_json(s.length)}});
        }
        json(Json{{"h", real_json(est.h)},
                  {"stderr", real_json(est.standard_error)},
                  {"target", real_json(d)},
                  {"samples", samples}});
        break;
      }
      case Format::Plain:
        out_ << "h = " << real(est.h) << " +/- " << real(est.standard_error) << "  (target "
             << real(d) << ", " << est.samples.size() << " resolutions)\n";
        break;
    }
    return kOk;
  }

 private:
  const CommandRequest& req_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

std::string format_real(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

CommandRequest parse_request(const std::vector<std::string>& args) {
  Parser p;
  p.parse(args);
  return p.req;
}

int execute(const CommandRequest& request, std::ostream& out, std::ostream& err) {
  const Emitter emit(request, out, err);
  try {
    switch (request.subcommand) {
      case Subcommand::Farey: return emit.farey();
      case Subcommand::Classify: return emit.classify();
      case Subcommand::Dual: return emit.dual();
      case Subcommand::Class: return emit.members();
      case Subcommand::Theorem: return emit.theorem();
      case Subcommand::Table: return emit.table();
      case Subcommand::Occupation: return emit.occupation_cmd();
      case Subcommand::Entropy: return emit.entropy_cmd();
      case Subcommand::Curve: return emit.curve_cmd();
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kDomainError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Parser p;
  try {
    p.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return p.app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return p.app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
  return execute(p.req, out, err);
}

}  // namespace hallfrac::cli
