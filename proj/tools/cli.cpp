#include "cli.hpp"

#include <nilsys/nilsys.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <future>
#include <iomanip>
#include <sstream>

namespace nilsys::cli {

namespace {

struct Source {
  std::string file;
  std::string catalog;
  std::string params;
};

void add_source(CLI::App *cmd, Source &src) {
  cmd->add_option("file", src.file, "algebra file");
  cmd->add_option("--catalog", src.catalog, "catalog entry name");
  cmd->add_option("--param", src.params, "catalog parameters k=v[,k=v]");
}

LieAlgebra load(const Source &src) {
  if (src.file.empty() == src.catalog.empty())
    throw BadParams("give exactly one of FILE or --catalog");
  if (!src.file.empty())
    return read_algebra_file(src.file);
  return catalog::build(src.catalog, catalog::parse_params(src.params));
}

FlagMode parse_flag(const std::string &mode) {
  if (mode == "auto")
    return FlagMode::Auto;
  if (mode == "lcs-only")
    return FlagMode::LcsOnly;
  throw BadParams("--flag must be auto or lcs-only");
}

std::set<ConstraintClass> parse_disabled(const std::string &text) {
  std::set<ConstraintClass> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, '|');) {
    std::stringstream inner(item);
    for (std::string name; std::getline(inner, name, ',');)
      if (!name.empty()) {
        try {
          out.insert(parse_constraint_class(name));
        } catch (const std::invalid_argument &e) {
          throw BadParams(e.what());
        }
      }
  }
  return out;
}

std::vector<long> parse_bases(const std::string &text) {
  std::vector<long> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(item, &pos);
    } catch (const std::exception &) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size() || v < 2)
      throw BadParams("--r-samples expects integers >= 2, got '" + item + "'");
    out.push_back(v);
  }
  if (out.empty())
    throw BadParams("--r-samples is empty");
  return out;
}

std::string join_dims(const std::vector<Subspace> &s, const char *sep) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? sep : "") + std::to_string(s[i].dim());
  return out;
}

// "123/4/5": frame coordinates grouped by weight, 1-based.
std::string layer_string(const CompatibleFrame &f) {
  std::string out;
  for (std::size_t i = 0; i < f.dim(); ++i) {
    if (i > 0)
      out += f.weights[i] != f.weights[i - 1] ? "/" : (f.dim() > 9 ? "," : "");
    std::size_t label = f.is_identity ? i : f.order[i];
    out += std::to_string(label + 1);
  }
  return out;
}

std::string vector_label(const Vector &v, std::size_t row) {
  std::ptrdiff_t unit = -1;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0)
      continue;
    if (v[k] != 1 || unit >= 0)
      return "b" + std::to_string(row + 1);
    unit = static_cast<std::ptrdiff_t>(k);
  }
  return unit >= 0 ? "e" + std::to_string(unit + 1) : "b" + std::to_string(row + 1);
}

void row(std::ostream &out, const std::string &key, const std::string &value) {
  out << std::left << std::setw(16) << key << value << "\n";
}

int cmd_info(const Source &src, const std::string &flag_mode, std::ostream &out) {
  LieAlgebra a = load(src);
  Setup s = prepare(a, parse_flag(flag_mode));
  auto lcs = lower_central_series(a);
  row(out, "name", a.name().empty() ? "(unnamed)" : a.name());
  row(out, "dim", std::to_string(a.dim()));
  row(out, "class", std::to_string(nilpotency_class(a)));
  row(out, "series", layer_string(s.frame));
  row(out, "lcs dims", join_dims(lcs, " "));
  row(out, "ucs dims", join_dims(upper_central_series(a), " "));
  row(out, "D", std::to_string(homogeneous_dimension(a)));
  row(out, "k_c", to_string(k_c(a)));
  std::string blocks;
  for (std::size_t q = 0; q < s.flag.blocks.size(); ++q)
    blocks += (q ? "|" : "") + std::to_string(s.flag.blocks[q]);
  row(out, "solid flag", blocks + "  (" + std::to_string(s.flag.closure.ideals.size()) +
                             " certified ideals" +
                             (s.flag.closure.capped ? ", closure capped" : "") + ")");
  row(out, "frame", s.frame.is_identity ? "input basis" : "changed basis");
  std::string weights;
  for (auto w : s.frame.weights)
    weights += (weights.empty() ? "" : " ") + std::to_string(w);
  row(out, "weights", weights);
  out << "carnot-graded:\n" << format_algebra(carnot_graded(a, s.frame));
  return 0;
}

void print_report(const BoundReport &r, std::ostream &out) {
  row(out, "name", r.name.empty() ? "(unnamed)" : r.name);
  row(out, "dim", std::to_string(r.dim));
  row(out, "class", std::to_string(r.nilpotency_class));
  row(out, "D", std::to_string(r.D));
  row(out, "k_c", to_string(r.k_c));
  row(out, "residual girth", "r^" + to_string(r.baselines.residual_girth));
  row(out, "k_c bound", "r^" + to_string(r.baselines.kc_bound));
  row(out, "h_lower", to_string(r.lower.h));
  row(out, "h_upper", to_string(r.upper.h));
  row(out, "theta", to_string(r.upper.theta));
  row(out, "constraints", std::to_string(r.lower.system.constraints.size()) + " (" +
                              std::to_string(r.lower.system.pairs.size()) + " verified pairs)");
  std::string cert;
  const auto &sys = r.lower.system;
  for (std::size_t i = 0; i < sys.constraints.size(); ++i) {
    const Rational &y = r.lower.certificate.dual[i];
    if (sgn(y) == 0)
      continue;
    cert += (cert.empty() ? "" : " + ") + (y == 1 ? "" : to_string(y) + "*") +
            sys.constraints[i].provenance.str();
  }
  row(out, "certificate", cert.empty() ? "(none)" : cert);
  row(out, "verdict", r.carnot_verdict);
  if (r.witnesses.empty())
    row(out, "witness", "skipped (structure constants not integral in the frame)");
  for (const auto &w : r.witnesses)
    row(out, "witness", "r=" + w.r.get_str() + " subring " + (w.subring ? "yes" : "no") +
                            " systole " + w.systole.str() + " covolume " +
                            to_string(w.covolume) + (w.ok() ? " ok" : " FAILED"));
}

int cmd_bounds(const Source &src, const std::string &flag_mode, bool as_json,
               const std::string &samples, const std::string &disabled, std::ostream &out) {
  LieAlgebra a = load(src);
  BoundOptions opt{parse_flag(flag_mode), parse_disabled(disabled)};
  BoundReport r = bound_report(a, opt, parse_bases(samples));
  if (as_json)
    out << render_json(make_report_data(r));
  else
    print_report(r, out);
  return r.witnesses_ok() && r.consistent() ? 0 : 1;
}

int cmd_verify(const Source &src, const std::string &lattice_path, const std::string &r_text,
               std::ostream &out) {
  LieAlgebra a = load(src);
  Rational r;
  try {
    r = parse_rational(r_text);
  } catch (const std::invalid_argument &e) {
    throw BadParams(std::string("--r: ") + e.what());
  }
  if (sgn(r) <= 0)
    throw BadParams("--r must be positive");
  auto rows = read_lattice_file(lattice_path, a.dim());
  Setup s = prepare(a);
  std::vector<Vector> frame_rows;
  for (const auto &v : rows)
    frame_rows.push_back(s.frame.to_frame(v));
  AdditiveLattice xi = AdditiveLattice::span(a.dim(), frame_rows);
  if (!xi.full_rank())
    throw RankDeficient(xi.rank(), a.dim());
  LieAlgebra scaled = algebra_at_scale(s.graded, r);
  row(out, "r", to_string(r));
  if (auto w = is_subring(xi, scaled)) {
    auto basis = xi.basis();
    out << "ClosureFailure: [" << vector_label(basis[w->i], w->i) << ","
        << vector_label(basis[w->j], w->j) << "]_r = " << to_string(s.frame.to_input(w->bracket))
        << " is not in the lattice\n";
    return 1;
  }
  row(out, "subring", "yes");
  AdditiveLattice dilated = dilate(xi, s.frame.weights, r);
  auto sys = systole(dilated, s.frame.weights);
  row(out, "systole", sys.length.str());
  row(out, "systole vector", to_string(s.frame.to_input(sys.witness)));
  row(out, "covolume", to_string(covolume(dilated)));
  return 0;
}

int cmd_catalog(std::ostream &out) {
  for (const auto &e : catalog::list()) {
    out << std::left << std::setw(17) << e.name << std::setw(28)
        << (e.params.empty() ? "-" : e.params) << e.source << "\n";
  }
  out << "\nexpected values on the reproduction set:\n";
  for (const auto &inst : catalog::reproduction_set()) {
    auto e = catalog::expected(inst.name, inst.params);
    std::string line = "D=" + std::to_string(e.D) + " c=" + std::to_string(e.c) +
                       " k_c=" + to_string(e.k_c) + " h=" + to_string(e.h);
    if (!e.note.empty())
      line += "  (" + e.note + ")";
    out << "  " << std::left << std::setw(30) << catalog::label(inst.name, inst.params) << line
        << "\n";
  }
  return 0;
}

struct ReportRow {
  std::string label;
  catalog::Expected expected;
  std::optional<BoundReport> report;
  std::string error;
  bool match = false;
};

int cmd_report(const std::string &filter, const std::string &flag_mode,
               const std::string &disabled, std::ostream &out) {
  BoundOptions opt{parse_flag(flag_mode), parse_disabled(disabled)};
  std::vector<catalog::Instance> chosen;
  for (const auto &inst : catalog::reproduction_set())
    if (catalog::label(inst.name, inst.params).find(filter) != std::string::npos)
      chosen.push_back(inst);

  std::vector<std::future<ReportRow>> jobs;
  for (const auto &inst : chosen)
    jobs.push_back(std::async(std::launch::async, [inst, opt]() {
      ReportRow rr;
      rr.label = catalog::label(inst.name, inst.params);
      rr.expected = catalog::expected(inst.name, inst.params);
      try {
        rr.report = bound_report(catalog::build(inst.name, inst.params), opt);
        const auto &r = *rr.report;
        rr.match = r.D == rr.expected.D && r.lower.h == rr.expected.h &&
                   r.upper.h == rr.expected.h && r.witnesses_ok() && r.consistent();
      } catch (const std::exception &e) {
        rr.error = e.what();
      }
      return rr;
    }));

  out << std::left << std::setw(28) << "entry" << std::setw(6) << "D" << std::setw(10)
      << "expected" << std::setw(10) << "h_lower" << std::setw(10) << "h_upper"
      << "match\n";
  bool all = true;
  for (auto &job : jobs) {
    ReportRow rr = job.get();
    all = all && rr.match;
    out << std::left << std::setw(28) << rr.label;
    if (rr.report)
      out << std::setw(6) << rr.report->D << std::setw(10) << to_string(rr.expected.h)
          << std::setw(10) << to_string(rr.report->lower.h) << std::setw(10)
          << to_string(rr.report->upper.h) << (rr.match ? "yes" : "NO") << "\n";
    else
      out << "error: " << rr.error << "\n";
  }
  return all ? 0 : 1;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Systolic growth bounds for nilpotent Lie algebras"};
  app.require_subcommand(1);

  Source src;
  std::string flag_mode = "auto";
  std::string samples = "2,3,5";
  std::string disabled;
  std::string lattice_path, r_text, filter;
  bool as_json = false;
  bool list = false;

  auto *info = app.add_subcommand("info", "invariants of an algebra");
  add_source(info, src);
  info->add_option("--flag", flag_mode, "auto | lcs-only");

  auto *bounds = app.add_subcommand("bounds", "lower and upper systolic exponents");
  add_source(bounds, src);
  bounds->add_option("--flag", flag_mode, "auto | lcs-only");
  bounds->add_flag("--json", as_json, "emit the report as JSON");
  bounds->add_option("--r-samples", samples, "bases n for witness scales r = n^q");
  bounds->add_option("--disable-constraints", disabled, "A|B|C|Cprime|D (debugging)");

  auto *verify = app.add_subcommand("verify", "check a lattice against g[r]");
  add_source(verify, src);
  verify->add_option("--lattice", lattice_path, "basis file")->required();
  verify->add_option("--r", r_text, "dilation parameter")->required();

  auto *cat = app.add_subcommand("catalog", "list catalog entries");
  cat->add_flag("--list", list, "list entries");

  auto *report = app.add_subcommand("report", "reproduction table over the catalog");
  report->add_option("--filter", filter, "substring of entry labels");
  report->add_option("--flag", flag_mode, "auto | lcs-only");
  report->add_option("--disable-constraints", disabled, "A|B|C|Cprime|D (debugging)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (info->parsed())
      return cmd_info(src, flag_mode, out);
    if (bounds->parsed())
      return cmd_bounds(src, flag_mode, as_json, samples, disabled, out);
    if (verify->parsed())
      return cmd_verify(src, lattice_path, r_text, out);
    if (cat->parsed())
      return cmd_catalog(out);
    if (report->parsed())
      return cmd_report(filter, flag_mode, disabled, out);
  } catch (const JacobiViolation &e) {
    err << "JacobiViolation: " << e.what() << "\n";
    return 2;
  } catch (const NotNilpotent &e) {
    err << "NotNilpotent: " << e.what() << "\n";
    return 2;
  } catch (const ParseError &e) {
    err << "ParseError: " << e.what() << "\n";
    return 2;
  } catch (const ClosureFailure &e) {
    err << "ClosureFailure: " << e.what() << "\n";
    return 1;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace nilsys::cli
