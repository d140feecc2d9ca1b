#pragma once

// Command-line front end. Exit codes: 0 pass, 1 verification failed,
// 2 usage or parse error, 3 inconclusive.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gausslucas/geometry.hpp"
#include "gausslucas/harness.hpp"
#include "gausslucas/parser.hpp"
#include "gausslucas/poly.hpp"
#include "gausslucas/report.hpp"
#include "gausslucas/roots.hpp"
#include "gausslucas/stability.hpp"

namespace gausslucas::cli {

struct UsageError : Error {
  using Error::Error;
};

struct RunConfig {
  std::string command;
  std::string poly;
  std::string poly_file;
  std::size_t vars = 0;  // 0: infer from the expression
  std::string theta;
  std::size_t k = 1;
  double tol = kDefaultTol;
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string others;
  std::string point;
  std::string points;
  double a = 0, b = 1, c = 0;
  std::string r1, r2;
  std::string which = "all";
  std::size_t count = 100;

  bool k_given = false;
  bool others_given = false;
  bool point_given = false;
};

/// Polynomial file: the expression grammar, with '#' starting a comment that
/// runs to the end of the line. Comments are blanked so offsets still refer
/// to the file text.
inline std::string strip_comments(std::string text) {
  bool in_comment = false;
  for (char& ch : text) {
    if (ch == '\n') in_comment = false;
    else if (ch == '#') in_comment = true;
    if (in_comment) ch = ' ';
  }
  return text;
}

inline MultiPoly load_poly(const RunConfig& cfg) {
  const bool inline_given = !cfg.poly.empty(), file_given = !cfg.poly_file.empty();
  if (inline_given == file_given) throw UsageError("exactly one of --poly or --poly-file is required");
  std::string text = cfg.poly;
  if (file_given) {
    std::ifstream in(cfg.poly_file);
    if (!in) throw UsageError("cannot read polynomial file '" + cfg.poly_file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = strip_comments(ss.str());
  }
  return parse_poly(text, cfg.vars == 0 ? std::nullopt : std::optional<std::size_t>(cfg.vars));
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline double parse_real(const std::string& s, const std::string& what) {
  const std::size_t begin = s.find_first_not_of(' ');
  if (begin == std::string::npos) throw UsageError("empty value in " + what);
  const char* start = s.c_str() + begin;
  char* end = nullptr;
  const double v = std::strtod(start, &end);
  if (end == start || s.find_first_not_of(' ', static_cast<std::size_t>(end - s.c_str())) != std::string::npos ||
      !std::isfinite(v))
    throw UsageError("malformed number '" + s + "' in " + what);
  return v;
}

/// A single constant written in the polynomial grammar, e.g. "2-1.5i".
inline Complex parse_constant(const std::string& s, const std::string& what) {
  const MultiPoly p = parse_poly(s);
  if (p.total_degree() != 0) throw UsageError(what + " must be a constant, got '" + s + "'");
  return p.coefficient(Monomial(p.num_vars(), 0));
}

/// Comma-separated constants; the empty string is the empty list.
inline ComplexVector parse_complex_list(const std::string& s, const std::string& what) {
  ComplexVector out;
  if (s.find_first_not_of(' ') == std::string::npos) return out;
  for (const auto& item : split(s, ',')) out.push_back(parse_constant(item, what));
  return out;
}

inline ThetaVector parse_theta(const std::string& s, std::size_t m) {
  if (s.empty()) return ThetaVector::zeros(m);
  ThetaVector t;
  for (const auto& item : split(s, ',')) t.angles.push_back(parse_real(item, "--theta"));
  if (t.size() != m)
    throw UsageError("--theta has " + std::to_string(t.size()) + " entries, expected " + std::to_string(m));
  return t;
}

inline std::vector<std::vector<double>> parse_points(const std::string& s) {
  std::vector<std::vector<double>> pts;
  for (const auto& item : split(s, ';')) {
    std::vector<double> p;
    for (const auto& x : split(item, ',')) p.push_back(parse_real(x, "--points"));
    if (!pts.empty() && p.size() != pts.front().size()) throw UsageError("--points entries differ in dimension");
    pts.push_back(std::move(p));
  }
  return pts;
}

inline Json sweep_json(const SweepSummary& s) {
  return {{"name", s.name},        {"cases", s.cases},
          {"pass", s.pass},        {"fail", s.fail},
          {"degenerate", s.degenerate}, {"inconclusive", s.inconclusive},
          {"worst_relative_distance", s.worst}, {"failing_cases", s.failing_cases},
          {"verdict", to_string(s.verdict())}};
}

inline Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::pass;
}

inline UniPoly load_univariate(const RunConfig& cfg) {
  const MultiPoly p = load_poly(cfg);
  if (p.num_vars() != 1) throw UsageError("this command needs a polynomial in z1 only");
  return to_uni(p);
}

// ---------------------------------------------------------------------------
// Commands

inline Report cmd_roots(const RunConfig& cfg) {
  const UniPoly p = load_univariate(cfg);
  const RootSet rs = roots_all(p, cfg.tol);
  Report r;
  r.details = {{"polynomial", format_poly(to_multi(p))}, {"degree", p.degree()},
               {"roots", complex_list_json(rs.roots)}, {"residuals", rs.residuals},
               {"converged", rs.converged},            {"iterations", rs.iterations}};
  r.verdict = rs.converged ? Verdict::pass : Verdict::inconclusive;
  r.pass = rs.roots.size();
  return r;
}

inline std::vector<std::vector<double>> hull_input(const RunConfig& cfg, std::size_t required_dim) {
  if (!cfg.points.empty()) {
    if (!cfg.poly.empty() || !cfg.poly_file.empty()) throw UsageError("give either a polynomial or --points");
    auto pts = parse_points(cfg.points);
    if (required_dim != 0 && pts.front().size() != required_dim)
      throw UsageError("--points must be " + std::to_string(required_dim) + "-dimensional here");
    return pts;
  }
  const UniPoly p = load_univariate(cfg);
  std::vector<std::vector<double>> pts;
  for (Complex c : roots_all(p, cfg.tol).roots) pts.push_back({c.real(), c.imag()});
  return pts;
}

inline Report cmd_hull(const RunConfig& cfg) {
  std::vector<Point2> pts;
  for (const auto& p : hull_input(cfg, 2)) pts.push_back({p[0], p[1]});
  const ConvexPolygon hull = convex_hull_2d(pts);
  Report r;
  Json input = Json::array();
  for (const auto& p : pts) input.push_back(point_json(p));
  r.details = {{"points", input}, {"vertices", polygon_json(hull)}, {"diameter", hull.diameter()}};
  return r;
}

inline Report cmd_rectihull(const RunConfig& cfg) {
  const auto pts = hull_input(cfg, 0);
  const BoxUnion bu = recti_hull(pts, pts.front().size());
  Report r;
  r.details = {{"points", pts}, {"dim", bu.dim}, {"boxes", box_union_json(bu)},
               {"components", component_count(bu)}};
  return r;
}

inline Report cmd_restrict(const RunConfig& cfg) {
  const MultiPoly p = load_poly(cfg);
  const ComplexVector others = parse_complex_list(cfg.others, "--others");
  const UniPoly f = restrict_section(p, cfg.k, others);
  Report r;
  r.details = {{"k", cfg.k},
               {"others", complex_list_json(others)},
               {"coefficients", complex_list_json(f.coeffs())},
               {"degree", f.degree()},
               {"null", f.is_null()},
               {"section", f.is_null() ? std::string("0") : format_poly(to_multi(f))}};
  return r;
}

inline Report cmd_diff(const RunConfig& cfg) {
  const MultiPoly p = load_poly(cfg);
  const MultiPoly q = partial_derivative(p, cfg.k);
  Report r;
  r.details = {{"k", cfg.k}, {"polynomial", format_poly(p)}, {"derivative", format_poly(q)}, {"null", q.is_null()}};
  return r;
}

inline Report cmd_check_gl(const RunConfig& cfg) {
  const UniPoly p = load_univariate(cfg);
  const GlReport g = verify_gl_univariate(p, cfg.tol);
  Report r;
  r.verdict = g.verdict;
  Json memberships = Json::array();
  for (std::size_t i = 0; i < g.memberships.size(); ++i) {
    const auto& m = g.memberships[i];
    memberships.push_back({{"verdict", to_string(m.verdict)}, {"signed_distance", m.signed_distance}});
    if (m.verdict == HullVerdict::outside) {
      ++r.fail;
      r.witnesses.push_back({{g.critical.roots[i]}, g.critical.residuals[i], m.signed_distance});
    } else {
      ++r.pass;
    }
  }
  r.details = {{"polynomial", format_poly(to_multi(p))},
               {"roots", complex_list_json(g.roots.roots)},
               {"critical_points", complex_list_json(g.critical.roots)},
               {"hull", polygon_json(g.hull)},
               {"memberships", memberships},
               {"converged", g.roots.converged && g.critical.converged},
               {"worst_signed_distance", g.worst_signed_distance}};
  return r;
}

inline Json section_json(const SectionWitness& w) {
  return {{"z", complex_list_json(w.z)},
          {"k", w.k},
          {"outcome", to_string(w.outcome)},
          {"section_coefficients", complex_list_json(w.restriction.coeffs())},
          {"section_roots", complex_list_json(w.roots_of_f.roots)},
          {"hull", polygon_json(w.hull)},
          {"membership", to_string(w.membership.verdict)},
          {"signed_distance", w.membership.signed_distance},
          {"derivative_residual", w.derivative_residual}};
}

inline Report cmd_check_t1(const RunConfig& cfg) {
  const MultiPoly p = load_poly(cfg);
  Report r;
  std::vector<ComplexVector> candidates;
  bool degenerate_section = false;
  std::size_t rejected = 0;
  if (cfg.point_given) {
    candidates.push_back(parse_complex_list(cfg.point, "--point"));
  } else {
    const ComplexVector others = parse_complex_list(cfg.others, "--others");
    const auto found = find_section_critical_points(p, cfg.k, others, cfg.tol);
    degenerate_section = found.degenerate;
    rejected = found.rejected;
    candidates = found.points;
  }
  Json sections = Json::array();
  bool inconclusive = rejected > 0;
  for (const auto& z : candidates) {
    const SectionWitness w = verify_section_witness(p, cfg.k, z, cfg.tol);
    sections.push_back(section_json(w));
    switch (w.outcome) {
      case SectionOutcome::pass: ++r.pass; break;
      case SectionOutcome::fail:
        ++r.fail;
        r.witnesses.push_back({w.z, w.derivative_residual, w.membership.signed_distance});
        break;
      case SectionOutcome::degenerate: ++r.degenerate; break;
      default: inconclusive = true;
    }
  }
  if (degenerate_section) ++r.degenerate;
  if (r.fail > 0)
    r.verdict = Verdict::fail;
  else if (r.pass == 0 || inconclusive)
    r.verdict = Verdict::inconclusive;
  r.details = {{"polynomial", format_poly(p)},
               {"k", cfg.k},
               {"partial_derivative", format_poly(partial_derivative(p, cfg.k))},
               {"degenerate_section", degenerate_section},
               {"rejected_candidates", rejected},
               {"sections", sections}};
  return r;
}

inline Json stability_json(const StabilityVerdict& v) {
  Json j = {{"status", to_string(v.status)}, {"trials", v.trials}, {"seed", v.seed}};
  if (v.witness) {
    j["witness"] = complex_list_json(*v.witness);
    j["residual"] = v.residual;
    j["trial_index"] = *v.trial_index;
  }
  return j;
}

inline Report cmd_check_t2(const RunConfig& cfg) {
  const MultiPoly p = load_poly(cfg);
  const ThetaVector theta = parse_theta(cfg.theta, p.num_vars());
  Report r;
  const StabilityVerdict input = mc_falsifier(p, theta, cfg.trials, cfg.seed, cfg.tol);
  Json derivs = Json::array();
  std::string outcome = "pass";
  if (input.status == StabilityStatus::counterexample) {
    outcome = to_string(DerivativeStabilityOutcome::hypothesis_violated);
    r.verdict = Verdict::fail;
    ++r.fail;
    r.witnesses.push_back({*input.witness, input.residual, 0.0});
  } else {
    std::vector<std::size_t> ks;
    if (cfg.k_given) {
      p.check_index(cfg.k);
      ks.push_back(cfg.k);
    } else {
      for (std::size_t k = 1; k <= p.num_vars(); ++k) ks.push_back(k);
    }
    for (std::size_t k : ks) {
      const MultiPoly qk = partial_derivative(p, k);
      Json d = {{"k", k}, {"derivative", format_poly(qk)}};
      if (qk.is_null()) {
        d["status"] = to_string(DerivativeStabilityOutcome::skipped_null_derivative);
        ++r.degenerate;
      } else {
        const StabilityVerdict v = mc_falsifier(qk, theta, cfg.trials, cfg.seed, cfg.tol);
        d["falsifier"] = stability_json(v);
        d["status"] = to_string(v.status);
        if (v.status == StabilityStatus::counterexample) {
          ++r.fail;
          r.witnesses.push_back({*v.witness, v.residual, 0.0});
          outcome = to_string(DerivativeStabilityOutcome::derivative_counterexample);
        } else {
          ++r.pass;
        }
      }
      derivs.push_back(d);
    }
    if (r.fail > 0)
      r.verdict = Verdict::fail;
    else if (r.pass == 0)
      r.verdict = Verdict::inconclusive;
    if (r.pass == 0 && r.fail == 0) outcome = to_string(DerivativeStabilityOutcome::skipped_null_derivative);
  }
  r.details = {{"polynomial", format_poly(p)}, {"theta", theta.angles}, {"outcome", outcome},
               {"input", stability_json(input)}, {"derivatives", derivs}};
  return r;
}

inline Report cmd_check_lemma1(const RunConfig& cfg) {
  std::vector<double> angles;
  if (cfg.theta.empty())
    angles.push_back(0.0);
  else
    for (const auto& item : split(cfg.theta, ',')) angles.push_back(parse_real(item, "--theta"));
  const ThetaVector theta{angles};
  const ComplexVector fixed = parse_complex_list(cfg.others, "--others");
  if (fixed.size() + 1 != theta.size())
    throw UsageError("--others must list " + std::to_string(theta.size() - 1) + " fixed coordinates");
  if (cfg.k < 1 || cfg.k > theta.size()) throw UsageError("--k out of range");
  const ComplementSectionReport l = verify_complement_section(theta, cfg.k, fixed, cfg.trials, cfg.seed);
  Report r;
  r.verdict = l.verdict;
  r.pass = l.midpoint_trials - l.midpoint_violations;
  r.fail = l.midpoint_violations + l.disagreements;
  const double c = l.section.c;
  const char* section_case = std::isinf(c) ? "no-fixed-coordinates" : (c > 0 ? "c>0" : "c<=0");
  r.details = {{"theta", theta.angles},
               {"k", cfg.k},
               {"fixed", complex_list_json(fixed)},
               {"c", std::isinf(c) ? Json(nullptr) : Json(c)},
               {"case", section_case},
               {"whole_plane", l.section.whole_plane()},
               {"midpoint_trials", l.midpoint_trials},
               {"midpoint_violations", l.midpoint_violations},
               {"agreement_trials", l.agreement_trials},
               {"disagreements", l.disagreements}};
  return r;
}

inline Report cmd_example1(const RunConfig& cfg) {
  const CubicSpec spec{cfg.a, cfg.b, cfg.c};
  const CubicContainmentReport e = classify_cubic(spec, cfg.tol);
  Report r;
  const MultiPoly p = to_multi(spec.polynomial());
  r.details = {{"a", spec.a},
               {"b", spec.b},
               {"c", spec.c},
               {"polynomial", format_poly(p)},
               {"derivative", format_poly(partial_derivative(p, 1))},
               {"regime", to_string(e.regime)},
               {"critical_points", complex_list_json(e.critical)},
               {"root_hull", box_union_json(e.root_hull)},
               {"contained", e.contained},
               {"axis_aligned_roots", e.axis_aligned_roots},
               {"iff_holds", e.iff_holds},
               {"outside_premise", e.outside_premise}};
  if (e.outside_premise) {
    r.verdict = Verdict::inconclusive;
    ++r.degenerate;
  } else if (e.iff_holds) {
    ++r.pass;
  } else {
    r.verdict = Verdict::fail;
    ++r.fail;
  }
  return r;
}

inline Report cmd_example1_quad(const RunConfig& cfg) {
  if (cfg.r1.empty() || cfg.r2.empty()) throw UsageError("--r1 and --r2 are required");
  const Complex r1 = parse_constant(cfg.r1, "--r1"), r2 = parse_constant(cfg.r2, "--r2");
  const QuadraticReport q = classify_quadratic(r1, r2, cfg.tol);
  Report r;
  r.details = {{"r1", complex_json(r1)},          {"r2", complex_json(r2)},
               {"critical_point", complex_json(q.critical)}, {"root_hull", box_union_json(q.root_hull)},
               {"components", q.components},      {"connected", q.components == 1},
               {"aligned", q.aligned},            {"contained", q.contained},
               {"iff_holds", q.iff_holds},        {"degenerate", q.degenerate}};
  if (q.degenerate) {
    r.verdict = Verdict::inconclusive;
    ++r.degenerate;
  } else if (q.iff_holds) {
    ++r.pass;
  } else {
    r.verdict = Verdict::fail;
    ++r.fail;
  }
  return r;
}

inline Report cmd_sweep(const RunConfig& cfg) {
  static const std::vector<std::string> all = {"gl", "t1", "t2", "lemma1", "example1", "quadratic", "nesting"};
  std::vector<std::string> which;
  if (cfg.which == "all")
    which = all;
  else
    which = split(cfg.which, ',');
  Report r;
  r.verdict = Verdict::pass;
  Json sweeps = Json::array();
  for (const auto& w : which) {
    SweepSummary s;
    if (w == "gl") s = sweep_gl(cfg.count, cfg.seed, cfg.tol);
    else if (w == "t1") s = sweep_section_witnesses(cfg.count, cfg.seed, cfg.tol);
    else if (w == "t2") s = sweep_derivative_stability(cfg.count, cfg.trials, cfg.seed, cfg.tol);
    else if (w == "lemma1") s = sweep_complement_sections(cfg.count, cfg.trials, cfg.seed);
    else if (w == "example1") s = sweep_cubic_grid();
    else if (w == "quadratic") s = sweep_quadratic(cfg.count, cfg.seed);
    else if (w == "nesting") s = sweep_nesting(cfg.count, cfg.seed);
    else throw UsageError("unknown sweep '" + w + "'");
    sweeps.push_back(sweep_json(s));
    r.pass += s.pass;
    r.fail += s.fail;
    r.degenerate += s.degenerate;
    r.verdict = combine(r.verdict, s.verdict());
  }
  r.details = {{"count", cfg.count}, {"trials", cfg.trials}, {"sweeps", sweeps}};
  return r;
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical laboratory for Gauss-Lucas type containment and stability of partial derivatives"};
  app.name("gausslucas");
  app.require_subcommand(1);
  RunConfig cfg;

  using Handler = std::function<Report(const RunConfig&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--tol", cfg.tol, "relative tolerance (default 1e-8)");
    sub->add_option("--seed", cfg.seed, "random seed (default 0)");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    commands.emplace_back(sub, std::move(h));
    return sub;
  };
  auto poly_options = [&](CLI::App* sub) {
    sub->add_option("--poly", cfg.poly, "polynomial expression, e.g. \"(z1-2)*(z1^2+1)\"; unary minus binds to a factor");
    sub->add_option("--poly-file", cfg.poly_file, "file holding one polynomial; '#' starts a comment");
    sub->add_option("--vars", cfg.vars, "number of variables (default: largest index used)");
  };
  auto k_option = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "variable index, 1-based")->check(CLI::PositiveNumber)->each([&](const std::string&) {
      cfg.k_given = true;
    });
  };
  auto others_option = [&](CLI::App* sub) {
    sub->add_option("--others", cfg.others, "comma-separated constants for the other coordinates, e.g. \"1+2i,0.5\"");
  };

  CLI::App* sub = nullptr;
  sub = add("roots", "all roots of a polynomial in z1", cmd_roots);
  poly_options(sub);
  sub = add("hull", "convex hull of the roots (or of --points)", cmd_hull);
  poly_options(sub);
  sub->add_option("--points", cfg.points, "points \"x,y;x,y;...\"");
  sub = add("rectihull", "rectilinear hull of the roots (or of --points in any dimension)", cmd_rectihull);
  poly_options(sub);
  sub->add_option("--points", cfg.points, "points \"x1,...,xd;...\"");
  sub = add("restrict", "restriction to one coordinate with the others fixed", cmd_restrict);
  poly_options(sub);
  k_option(sub);
  others_option(sub);
  sub = add("diff", "partial derivative in z_k", cmd_diff);
  poly_options(sub);
  k_option(sub);
  sub = add("check-gl", "derivative roots lie in the convex hull of the roots", cmd_check_gl);
  poly_options(sub);
  sub = add("check-t1", "section witnesses for zeros of the k-th partial derivative", cmd_check_t1);
  poly_options(sub);
  k_option(sub);
  others_option(sub);
  sub->add_option("--point", cfg.point, "a full critical point to check instead of searching a section")
      ->each([&](const std::string&) { cfg.point_given = true; });
  sub = add("check-t2", "falsifier search for zeros of partial derivatives in A(theta)", cmd_check_t2);
  poly_options(sub);
  k_option(sub);
  sub->add_option("--theta", cfg.theta, "angles \"t1,...,tM\" (default all zero)");
  sub->add_option("--trials", cfg.trials, "falsifier trials (default 10000)")->check(CLI::PositiveNumber);
  sub = add("check-lemma1", "convexity of sections of the complement of A(theta)", cmd_check_lemma1);
  sub->add_option("--theta", cfg.theta, "angles \"t1,...,tM\" (default \"0\")");
  k_option(sub);
  others_option(sub);
  sub->add_option("--trials", cfg.trials, "midpoint pairs (default 10000)")->check(CLI::PositiveNumber);
  sub = add("example1", "rectilinear containment for (z-c)((z-a)^2+b^2)", cmd_example1);
  sub->add_option("--a", cfg.a, "real part of the complex root pair");
  sub->add_option("--b", cfg.b, "imaginary part of the complex root pair (nonzero)");
  sub->add_option("--c", cfg.c, "real root");
  sub = add("example1-quad", "rectilinear containment for a quadratic with roots r1, r2", cmd_example1_quad);
  sub->add_option("--r1", cfg.r1, "first root, e.g. \"1+2i\"");
  sub->add_option("--r2", cfg.r2, "second root");
  sub = add("sweep", "seeded property sweeps", cmd_sweep);
  sub->add_option("--which", cfg.which, "gl,t1,t2,lemma1,example1,quadratic,nesting or all");
  sub->add_option("--count", cfg.count, "cases per sweep (default 100)");
  sub->add_option("--trials", cfg.trials, "falsifier trials / midpoint pairs (default 10000)")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return 2;
  }

  for (const auto& [subapp, handler] : commands) {
    if (!subapp->parsed()) continue;
    try {
      Report r = handler(cfg);
      r.command = subapp->get_name();
      r.seed = cfg.seed;
      r.tol = cfg.tol;
      out << emit_report(r, cfg.format == "json" ? Format::json : Format::text);
      return exit_code(r.verdict);
    } catch (const ParseError& e) {
      err << "parse error: " << e.what() << "\n";
      return 2;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  }
  err << app.help();
  return 2;
}

}  // namespace gausslucas::cli
