#include "cma/cli.h"
#include "cma/bends.h"
#include "cma/contact.h"
#include "cma/error.h"
#include "cma/monge_ampere.h"
#include "cma/rmanifold.h"
#include "cma/symplectic.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>

namespace cma::cli
{
namespace
{
using json = nlohmann::ordered_json;

struct Globals
{
  double tol = 1e-9;
  std::uint64_t seed = 42;
  std::string out;
  std::string format = "json";
};

json num(double v, const std::string& where)
{
  if (!std::isfinite(v))
    throw NumericError("non-finite value in output at " + where);
  return v + 0.0;
}

json vec_json(const Eigen::VectorXd& v, const std::string& where)
{
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    a.push_back(num(v(i), where + "[" + std::to_string(i) + "]"));
  return a;
}

json matrix_json(const Eigen::MatrixXd& m, const std::string& where)
{
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    rows.push_back(vec_json(m.row(r).transpose(), where + "[" + std::to_string(r) + "]"));
  return rows;
}

std::vector<double> parse_numbers(const std::string& text, std::size_t expected,
                                  const std::string& what)
{
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size())
  {
    const std::size_t pos = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, pos - start);
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size() || !std::isfinite(v))
      throw InputError(what + ": bad number '" + item + "'");
    out.push_back(v);
    start = pos + 1;
  }
  if (expected && out.size() != expected)
    throw InputError(what + ": expected " + std::to_string(expected)
                     + " comma-separated numbers, got " + std::to_string(out.size()));
  return out;
}

std::string dump(const json& j)
{
  return j.dump(2) + "\n";
}

void require_json(const Globals& g, const char* command)
{
  if (g.format != "json")
    throw InputError(std::string("--format csv is not available for ") + command);
}

struct CoefficientFlags
{
  std::string n = "0", a = "1", b = "0", c = "1", d = "0";

  void add_to(CLI::App* app)
  {
    app->add_option("--N", n, "coefficient of u_xx u_yy - u_xy^2")->capture_default_str();
    app->add_option("--A", a, "coefficient of u_xx")->capture_default_str();
    app->add_option("--B", b, "coefficient of u_xy")->capture_default_str();
    app->add_option("--C", c, "coefficient of u_yy")->capture_default_str();
    app->add_option("--D", d, "free term")->capture_default_str();
  }

  MAEquation equation() const { return MAEquation::parse(n, a, b, c, d); }

  json to_json() const
  {
    return {{"N", n}, {"A", a}, {"B", b}, {"C", c}, {"D", d}};
  }
};

// classify --------------------------------------------------------------

struct ClassifyJob
{
  CoefficientFlags coeffs;
  std::string grid = "default";
  std::string fixed;
  double max_error_fraction = 0.0;
};

int cmd_classify(const ClassifyJob& job, const Globals& g, std::string& out)
{
  const MAEquation eq = job.coeffs.equation();
  const GridSpec grid = GridSpec::parse(job.grid, job.fixed);
  const auto cells = classify_region(eq, grid, g.tol);
  const auto& names = darboux_variables();

  std::size_t errors = 0;
  std::map<std::string, int> summary{
      {"elliptic", 0}, {"parabolic", 0}, {"hyperbolic", 0}, {"band", 0}, {"error", 0}};
  for (const auto& c : cells)
  {
    ++summary[std::string(to_string(c.type))];
    if (c.type == CellType::Error)
      ++errors;
  }

  if (g.format == "csv")
  {
    out = "i,j," + names[static_cast<std::size_t>(grid.axis1.variable)] + ","
          + names[static_cast<std::size_t>(grid.axis2.variable)] + ",delta,type\n";
    for (const auto& c : cells)
    {
      char buf[128];
      std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g,", c.i, c.j,
                    grid.axis1.node(c.i), grid.axis2.node(c.j));
      out += buf;
      if (c.delta)
      {
        std::snprintf(buf, sizeof buf, "%.17g", *c.delta);
        out += buf;
      }
      out += "," + std::string(to_string(c.type)) + "\n";
    }
  }
  else
  {
    json axes = json::array();
    for (const GridAxis* a : {&grid.axis1, &grid.axis2})
      axes.push_back({{"variable", names[static_cast<std::size_t>(a->variable)]},
                      {"lo", num(a->lo, "grid")},
                      {"hi", num(a->hi, "grid")},
                      {"count", a->count}});
    json fixed = json::object();
    const auto fc = grid.fixed.coords();
    for (int v = 0; v < 5; ++v)
      if (v != grid.axis1.variable && v != grid.axis2.variable)
        fixed[names[static_cast<std::size_t>(v)]] = num(fc[static_cast<std::size_t>(v)], "grid.fixed");

    json jcells = json::array();
    for (const auto& c : cells)
    {
      json cell{{"index", {c.i, c.j}}};
      cell["delta"] = c.delta ? num(*c.delta, "cell " + std::to_string(c.i) + ","
                                                  + std::to_string(c.j))
                              : json(nullptr);
      cell["type"] = std::string(to_string(c.type));
      if (!c.error.empty())
        cell["error"] = c.error;
      jcells.push_back(std::move(cell));
    }
    json jsum = json::object();
    for (const char* key : {"elliptic", "parabolic", "hyperbolic", "band", "error"})
      jsum[key] = summary[key];
    out = dump({{"equation", job.coeffs.to_json()},
                {"grid", {{"axes", axes}, {"fixed", fixed}}},
                {"tol", num(g.tol, "tol")},
                {"summary", jsum},
                {"cells", jcells}});
  }

  if (!cells.empty()
      && static_cast<double>(errors) / static_cast<double>(cells.size())
             > job.max_error_fraction)
    return kNumericError;
  return kOk;
}

// verify ----------------------------------------------------------------

struct VerifyJob
{
  CoefficientFlags coeffs;
  std::string f;
  int samples = 50;
  double box = 1.0;
  double defect_tol = 1e-8;
};

int cmd_verify(const VerifyJob& job, const Globals& g, std::string& out)
{
  require_json(g, "verify");
  if (job.samples < 1)
    throw InputError("--samples must be positive");
  if (!(job.box > 0.0))
    throw InputError("--box must be positive");
  const MAEquation eq = job.coeffs.equation();
  const Expr f = Expr::parse(job.f, {"x1", "x2"});

  std::mt19937_64 rng(g.seed);
  std::uniform_real_distribution<double> dist(-job.box, job.box);
  double max_res = 0.0, max_def = 0.0, max_dec = 0.0;
  json rows = json::array();
  for (int s = 0; s < job.samples; ++s)
  {
    const double x1 = dist(rng);
    const double x2 = dist(rng);
    const std::string where = "sample " + std::to_string(s);
    const InvarianceReport r = invariance_defect(eq, f, {x1, x2});
    max_res = std::max(max_res, std::abs(r.residual));
    max_def = std::max(max_def, r.defect);
    max_dec = std::max({max_dec, r.decomposition_z1, r.decomposition_z2});
    json row{{"base", {num(x1, where), num(x2, where)}},
             {"residual", num(r.residual, where)},
             {"defect", num(r.defect, where)}};
    row["defect_over_2E"] = r.residual != 0.0
                                ? num(r.defect / std::abs(2.0 * r.residual), where)
                                : json(nullptr);
    row["decomposition_z1"] = num(r.decomposition_z1, where);
    row["decomposition_z2"] = num(r.decomposition_z2, where);
    rows.push_back(std::move(row));
  }
  const bool ok = max_res <= g.tol && max_def <= job.defect_tol;
  out = dump({{"equation", job.coeffs.to_json()},
              {"f", job.f},
              {"seed", g.seed},
              {"tol", num(g.tol, "tol")},
              {"defect_tol", num(job.defect_tol, "defect_tol")},
              {"max_residual", num(max_res, "max_residual")},
              {"max_defect", num(max_def, "max_defect")},
              {"max_decomposition_deviation", num(max_dec, "max_decomposition")},
              {"solution", ok},
              {"samples", rows}});
  return ok ? kOk : kVerifyFailed;
}

// bend ------------------------------------------------------------------

struct BendJob
{
  int k = 2;
  std::string q1, q2;
  std::string normal_form;
  bool prolong = false;
};

json bend_json(const BendSubspace& b)
{
  const auto& m = *b.matrix;
  return {{"k", b.degree},
          {"q1", b.q1.print()},
          {"q2", b.q2.print()},
          {"is_bend", true},
          {"kind", std::string(to_string(*b.kind))},
          {"matrix",
           {num(m.alpha, "matrix"), num(m.beta, "matrix"), num(m.gamma, "matrix"),
            num(m.delta, "matrix")}},
          {"witness", {{"f", b.witness->f.print()}, {"g", b.witness->g.print()}}},
          {"fit_residual", num(m.fit_residual, "fit_residual")},
          {"eq2_residual", num(m.eq2_residual, "eq2_residual")}};
}

int cmd_bend(const BendJob& job, const Globals& g, std::string& out)
{
  require_json(g, "bend");
  BendSubspace b;
  if (!job.normal_form.empty())
    b = normal_form(job.k, parse_zeta_kind(job.normal_form));
  else
  {
    if (job.q1.empty() || job.q2.empty())
      throw InputError("bend needs --q1 and --q2, or --normal-form");
    const HomPoly q1 = HomPoly::parse(job.q1, job.k);
    const HomPoly q2 = HomPoly::parse(job.q2, job.k);
    const BendTest t = is_bend(job.k, q1, q2);
    if (!t.is_bend)
    {
      out = dump({{"k", job.k},
                  {"q1", q1.print()},
                  {"q2", q2.print()},
                  {"is_bend", false},
                  {"prolongation_dim", t.prolongation_dim}});
      return kOk;
    }
    b = analyse_bend(job.k, q1, q2);
  }
  json j = bend_json(b);
  if (job.prolong)
    j["prolonged"] = bend_json(prolong_bend(b));
  out = dump(j);
  return kOk;
}

// contact ---------------------------------------------------------------

struct ContactJob
{
  std::string nu;
  std::string mu;
  std::string point;
};

int cmd_contact(const ContactJob& job, const Globals& g, std::string& out)
{
  require_json(g, "contact");
  const auto c = parse_numbers(job.point, 5, "--point");
  const DarbouxPoint pt = DarbouxPoint::from(c);
  const Expr nu = Expr::parse(job.nu, darboux_variables());
  const VectorFieldValue x = contact_field(nu, pt);
  json field = json::array();
  for (int i = 0; i < 5; ++i)
    field.push_back(num(x[static_cast<std::size_t>(i)], "field"));
  json j{{"nu", job.nu},
         {"point", vec_json(Eigen::Map<const Eigen::VectorXd>(c.data(), 5), "point")},
         {"field", field},
         {"omega_of_field", num(contact_form_value(pt, x), "omega")},
         {"nu_value", num(nu.eval(pt.coords()), "nu")}};
  if (!job.mu.empty())
  {
    const Expr mu = Expr::parse(job.mu, darboux_variables());
    j["bracket"] = {{"mu", job.mu},
                    {"value", num(lagrange_bracket(mu, nu, pt), "bracket")}};
  }
  out = dump(j);
  return kOk;
}

// rmanifold -------------------------------------------------------------

struct RManifoldJob
{
  int k = 2, l = 2;
  std::string kind = "minus";
  std::string report = "points";
  int samples = 100;
  double radius = 0.1;
  double box = 1.0;
  std::string params = "0.5,0.3";
  double h = 1e-4;
};

int cmd_rmanifold(const RManifoldJob& job, const Globals& g, std::string& out)
{
  const RManifoldSpec spec{job.k, job.l, parse_zeta_kind(job.kind)};
  spec.validate();
  const json head{{"k", spec.k}, {"l", spec.l}, {"kind", std::string(to_string(spec.kind))}};

  if (job.report == "points")
  {
    if (!(job.box > 0.0))
      throw InputError("--box must be positive");
    const auto params = random_params(job.samples, job.box, g.seed);
    const auto points = lkl_sweep(spec, params);
    double max_res = 0.0;
    for (const auto& p : points)
      for (double r : prolonged_residuals(p, spec.kind))
        max_res = std::max(max_res, std::abs(r));
    if (g.format == "csv")
    {
      out = point_cloud_csv(params, points);
      return kOk;
    }
    json rows = json::array();
    for (std::size_t i = 0; i < points.size(); ++i)
    {
      Eigen::VectorXd row(2 + points[i].coords().size());
      row << params[i][0], params[i][1], points[i].coords();
      rows.push_back(vec_json(row, "point " + std::to_string(i)));
    }
    json columns = {"a", "b", "x", "y"};
    for (int d = 0; d <= spec.k; ++d)
      for (int q = 0; q <= d; ++q)
        columns.push_back("u_{" + std::to_string(d - q) + "," + std::to_string(q) + "}");
    json j = head;
    j["seed"] = g.seed;
    j["max_prolonged_residual"] = num(max_res, "residual");
    j["columns"] = columns;
    j["rows"] = rows;
    out = dump(j);
    return kOk;
  }

  require_json(g, "this rmanifold report");
  if (job.report == "singular")
  {
    const auto rep = singular_point_report(spec, job.radius, job.samples, g.seed);
    json bend = json::array();
    for (Eigen::Index c = 0; c < rep.bend.cols(); ++c)
      bend.push_back(HomPoly{spec.k, rep.bend.col(c)}.print());
    json sing = json::array();
    for (const auto& p : rep.singular_params)
      sing.push_back({num(p[0], "singular"), num(p[1], "singular")});
    const auto normal = normal_form(spec.k, spec.kind);
    json j = head;
    j["radius"] = num(rep.radius, "radius");
    j["samples"] = rep.samples;
    j["seed"] = rep.seed;
    j["asserted"] = rep.asserted;
    j["unique_singular_point"] = rep.unique_singular_point;
    j["bend_matches_normal_form"] = rep.bend_matches_normal_form;
    j["bend"] = {{"span", bend},
                 {"normal_form", {normal.q1.print(), normal.q2.print()}},
                 {"angle", num(rep.bend_angle, "bend_angle")},
                 {"angle_swapped", num(rep.bend_angle_swapped, "bend_angle")}};
    j["origin"] = {{"xy_rank", rep.origin_xy_rank},
                   {"projection_rank", rep.origin_projection_rank}};
    j["sampled"] = {{"xy_rank_deficient", rep.sampled_xy_rank_deficient},
                    {"min_xy_singular_ratio", num(rep.min_xy_singular_ratio, "ratio")}};
    j["singular_params"] = sing;
    j["failures"] = rep.failures;
    out = dump(j);
    return rep.asserted && !rep.failures.empty() ? kVerifyFailed : kOk;
  }
  if (job.report == "nu")
  {
    const NuVectors nv = nu_vectors(spec.k, spec.kind);
    auto comps = [](const FiberVector& v)
    {
      json a = json::array();
      for (const auto& [idx, val] : v)
        if (val != 0.0)
          a.push_back({{"index", {idx.first, idx.second}}, {"value", val}});
      return a;
    };
    json j = head;
    j["nu1"] = comps(nv.nu1);
    j["nu2"] = comps(nv.nu2);
    j["poly1"] = nv.poly1.print();
    j["poly2"] = nv.poly2.print();
    j["angle_direct"] = num(nv.angle_direct, "angle");
    j["angle_swapped"] = num(nv.angle_swapped, "angle");
    out = dump(j);
    return kOk;
  }
  if (job.report == "cartan")
  {
    const auto p = parse_numbers(job.params, 2, "--params");
    const JetChartPoint pt = lkl_point(spec, p[0], p[1]);
    const auto res = prolonged_residuals(pt, spec.kind);
    double max_res = 0.0;
    for (double r : res)
      max_res = std::max(max_res, std::abs(r));
    const double d1 = cartan_tangency_defect(spec, p[0], p[1], job.h);
    const double d2 = cartan_tangency_defect(spec, p[0], p[1], job.h / 2);
    json j = head;
    j["params"] = {num(p[0], "params"), num(p[1], "params")};
    j["point"] = vec_json(pt.coords(), "point");
    j["max_prolonged_residual"] = num(max_res, "residual");
    j["h"] = num(job.h, "h");
    j["defect_h"] = num(d1, "defect");
    j["defect_h_half"] = num(d2, "defect");
    j["ratio"] = d1 > 0.0 ? num(d2 / d1, "ratio") : json(nullptr);
    out = dump(j);
    return kOk;
  }
  throw InputError("--report must be one of points, singular, nu, cartan");
}

// selfadjoint -----------------------------------------------------------

struct SelfAdjointJob
{
  std::string matrix;
  std::string gram = "standard";
};

int cmd_selfadjoint(const SelfAdjointJob& job, const Globals& g, std::string& out)
{
  require_json(g, "selfadjoint");
  const auto m = parse_numbers(job.matrix, 16, "--matrix");
  Eigen::Matrix4d a;
  for (int i = 0; i < 16; ++i)
    a(i / 4, i % 4) = m[static_cast<std::size_t>(i)];
  Eigen::MatrixXd gram;
  if (job.gram == "standard")
    gram = SymplecticSpace::standard(2).gram();
  else if (job.gram == "curvature")
    gram = curvature_gram();
  else
  {
    const auto gv = parse_numbers(job.gram, 16, "--gram");
    gram.resize(4, 4);
    for (int i = 0; i < 16; ++i)
      gram(i / 4, i % 4) = gv[static_cast<std::size_t>(i)];
  }
  const SymplecticSpace sp(gram);
  ClassifyOptions opt;
  opt.tol = g.tol;
  const ClassificationResult r = classify_dim4(sp, a, opt);

  json eig = json::array();
  for (const auto& e : r.eigenvalues)
    eig.push_back({num(e.real(), "eigenvalues"), num(e.imag(), "eigenvalues")});
  json mp = json::array();
  for (double c : r.minimal_polynomial)
    mp.push_back(num(c, "minimal_polynomial"));
  json j{{"type", std::string(to_string(r.type))},
         {"minimal_polynomial", mp},
         {"discriminant", num(r.discriminant, "discriminant")},
         {"eigenvalues", eig},
         {"fit_residual", num(r.fit_residual, "fit_residual")}};
  if (r.complex_structure.size())
    j["complex_structure"] = matrix_json(r.complex_structure, "complex_structure");
  if (r.eigenplane1.size())
  {
    j["eigenplane1"] = matrix_json(r.eigenplane1, "eigenplane1");
    j["eigenplane2"] = matrix_json(r.eigenplane2, "eigenplane2");
  }
  if (r.lagrangian_plane.size())
  {
    j["lagrangian_plane"] = matrix_json(r.lagrangian_plane, "lagrangian_plane");
    j["image_plane"] = matrix_json(r.image_plane, "image_plane");
  }
  out = dump(j);
  return kOk;
}

void write_output(const Globals& g, std::string& text)
{
  if (g.out.empty())
    return;
  std::ofstream file(g.out, std::ios::binary);
  if (!file)
    throw InputError("cannot open output file '" + g.out + "'");
  file << text;
  if (!file)
    throw InputError("failed writing output file '" + g.out + "'");
  text.clear();
}
} // namespace

Result run(const std::vector<std::string>& args)
{
  Result res;
  Globals g;
  CLI::App app{"Monge-Ampere equations, bends and R-manifolds", "cma"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", g.tol, "numerical tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--out", g.out, "write output to this file");
  app.add_option("--format", g.format, "json or csv")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));

  ClassifyJob classify;
  auto* c = app.add_subcommand("classify", "classify an equation over a grid");
  classify.coeffs.add_to(c);
  c->add_option("--grid", classify.grid, "axes, e.g. x1=-1:1:5,x2=-1:1:5, or default")
      ->capture_default_str();
  c->add_option("--fixed", classify.fixed, "values of the other coordinates, e.g. u=0.5");
  c->add_option("--max-error-fraction", classify.max_error_fraction,
                "tolerated fraction of cells failing to evaluate")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));

  VerifyJob verify;
  auto* v = app.add_subcommand("verify", "check a candidate solution");
  verify.coeffs.add_to(v);
  v->add_option("--f", verify.f, "candidate solution in x1, x2")->required();
  v->add_option("--samples", verify.samples, "number of base points")->capture_default_str();
  v->add_option("--box", verify.box, "base points lie in [-box, box]^2")->capture_default_str();
  v->add_option("--defect-tol", verify.defect_tol, "invariance defect tolerance")
      ->capture_default_str();

  BendJob bend;
  auto* b = app.add_subcommand("bend", "analyse a 2-dimensional subspace of P_k");
  b->add_option("--k", bend.k, "degree")->capture_default_str()->check(CLI::Range(1, 40));
  b->add_option("--q1", bend.q1, "first polynomial in x, y");
  b->add_option("--q2", bend.q2, "second polynomial in x, y");
  b->add_option("--normal-form", bend.normal_form, "minus, zero or plus");
  b->add_flag("--prolong", bend.prolong, "also report the prolonged bend");

  ContactJob contact;
  auto* ct = app.add_subcommand("contact", "contact vector field of a generating function");
  ct->add_option("--nu", contact.nu, "generating function")->required();
  ct->add_option("--mu", contact.mu, "second generating function for the bracket {mu, nu}");
  ct->add_option("--point", contact.point, "x1,x2,u,p1,p2")->required();

  RManifoldJob rman;
  auto* r = app.add_subcommand("rmanifold", "the R-manifolds L_{k,l}");
  r->add_option("--k", rman.k)->capture_default_str()->check(CLI::Range(2, 12));
  r->add_option("--l", rman.l)->capture_default_str()->check(CLI::Range(2, 12));
  r->add_option("--kind", rman.kind, "minus, zero or plus")->capture_default_str();
  r->add_option("--report", rman.report, "points, singular, nu or cartan")
      ->capture_default_str();
  r->add_option("--samples", rman.samples)->capture_default_str()->check(CLI::NonNegativeNumber);
  r->add_option("--radius", rman.radius, "neighbourhood radius for the singular report")
      ->capture_default_str();
  r->add_option("--box", rman.box, "parameter box for points")->capture_default_str();
  r->add_option("--params", rman.params, "a,b for the cartan report")->capture_default_str();
  r->add_option("--step", rman.h, "finite-difference step h")->capture_default_str();

  SelfAdjointJob sa;
  auto* s = app.add_subcommand("selfadjoint", "classify a 4x4 self-adjoint operator");
  s->add_option("--matrix", sa.matrix, "16 numbers, row-major")->required();
  s->add_option("--gram", sa.gram, "standard, curvature or 16 numbers")
      ->capture_default_str();

  try
  {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (c->parsed())
      res.exit_code = cmd_classify(classify, g, res.out);
    else if (v->parsed())
      res.exit_code = cmd_verify(verify, g, res.out);
    else if (b->parsed())
      res.exit_code = cmd_bend(bend, g, res.out);
    else if (ct->parsed())
      res.exit_code = cmd_contact(contact, g, res.out);
    else if (r->parsed())
      res.exit_code = cmd_rmanifold(rman, g, res.out);
    else if (s->parsed())
      res.exit_code = cmd_selfadjoint(sa, g, res.out);
    write_output(g, res.out);
  }
  catch (const CLI::CallForHelp&)
  {
    res.out = app.help();
    res.exit_code = kOk;
  }
  catch (const CLI::CallForAllHelp&)
  {
    res.out = app.help("", CLI::AppFormatMode::All);
    res.exit_code = kOk;
  }
  catch (const CLI::ParseError& e)
  {
    res.out.clear();
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = kInputError;
  }
  catch (const InputError& e)
  {
    res.out.clear();
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = kInputError;
  }
  catch (const NumericError& e)
  {
    res.out.clear();
    res.err = std::string("numeric error: ") + e.what() + "\n";
    res.exit_code = kNumericError;
  }
  catch (const ConsistencyError& e)
  {
    res.out.clear();
    res.err = std::string("consistency error: ") + e.what() + "\n";
    res.exit_code = kConsistencyError;
  }
  return res;
}

} // namespace cma::cli
