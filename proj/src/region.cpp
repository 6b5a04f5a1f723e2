#include "cma/error.h"
#include "cma/monge_ampere.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace cma
{
namespace
{
std::vector<std::string_view> split(std::string_view s, char sep)
{
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true)
  {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s)
{
  while (!s.empty() && s.front() == ' ')
    s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ')
    s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view text, std::string_view what)
{
  const std::string s(trim(text));
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v))
    throw InputError("grid: bad number '" + s + "' in " + std::string(what));
  return v;
}

int variable_index(std::string_view name)
{
  const auto& vars = darboux_variables();
  const auto it = std::find(vars.begin(), vars.end(), trim(name));
  if (it == vars.end())
    throw InputError("grid: unknown variable '" + std::string(name) + "'");
  return static_cast<int>(it - vars.begin());
}

std::pair<std::string_view, std::string_view> assignment(std::string_view item)
{
  const std::size_t eq = item.find('=');
  if (eq == std::string_view::npos)
    throw InputError("grid: expected name=value in '" + std::string(item) + "'");
  return {item.substr(0, eq), item.substr(eq + 1)};
}

GridAxis parse_axis(std::string_view item)
{
  const auto [name, range] = assignment(item);
  const auto parts = split(range, ':');
  if (parts.size() != 3)
    throw InputError("grid: axis must read name=lo:hi:count, got '"
                     + std::string(item) + "'");
  GridAxis axis;
  axis.variable = variable_index(name);
  axis.lo = parse_number(parts[0], item);
  axis.hi = parse_number(parts[1], item);
  const double count = parse_number(parts[2], item);
  if (count < 0 || count != std::floor(count) || count > 1e6)
    throw InputError("grid: node count must be a nonnegative integer in '"
                     + std::string(item) + "'");
  axis.count = static_cast<int>(count);
  return axis;
}

double& coordinate(DarbouxPoint& pt, int var)
{
  switch (var)
  {
  case 0:
    return pt.x1;
  case 1:
    return pt.x2;
  case 2:
    return pt.u;
  case 3:
    return pt.p1;
  default:
    return pt.p2;
  }
}

RegionCell classify_cell(const MAEquation& eq, const GridSpec& grid, int i,
                         int j, double tol)
{
  RegionCell cell;
  cell.i = i;
  cell.j = j;
  try
  {
    const double d = discriminant(eq, grid.point(i, j));
    if (!std::isfinite(d))
      throw NumericError("discriminant is not finite");
    cell.delta = d;
    cell.type = cell_type(d, tol);
  }
  catch (const Error& e)
  {
    cell.type = CellType::Error;
    cell.error = e.what();
  }
  return cell;
}
} // namespace

GridSpec GridSpec::parse(std::string_view axes, std::string_view fixed)
{
  GridSpec g;
  if (trim(axes) == "default")
    g = default_grid();
  else
  {
    const auto items = split(axes, ',');
    if (items.size() != 2)
      throw InputError("grid: exactly two axes are required");
    g.axis1 = parse_axis(items[0]);
    g.axis2 = parse_axis(items[1]);
    if (g.axis1.variable == g.axis2.variable)
      throw InputError("grid: the two axes must use different variables");
  }
  if (trim(fixed).empty())
    return g;
  for (auto item : split(fixed, ','))
  {
    const auto [name, value] = assignment(item);
    const int var = variable_index(name);
    if (var == g.axis1.variable || var == g.axis2.variable)
      throw InputError("grid: '" + std::string(trim(name))
                       + "' is already a grid axis");
    coordinate(g.fixed, var) = parse_number(value, item);
  }
  return g;
}

GridSpec GridSpec::default_grid()
{
  GridSpec g;
  g.axis1 = {0, -1.0, 1.0, 5};
  g.axis2 = {1, -1.0, 1.0, 5};
  return g;
}

DarbouxPoint GridSpec::point(int i, int j) const
{
  DarbouxPoint pt = fixed;
  coordinate(pt, axis1.variable) = axis1.node(i);
  coordinate(pt, axis2.variable) = axis2.node(j);
  return pt;
}

std::string_view to_string(CellType type)
{
  switch (type)
  {
  case CellType::Elliptic:
    return "elliptic";
  case CellType::Parabolic:
    return "parabolic";
  case CellType::Hyperbolic:
    return "hyperbolic";
  case CellType::Band:
    return "band";
  case CellType::Error:
    return "error";
  }
  return "?";
}

CellType cell_type(double delta, double tol)
{
  if (delta == 0.0)
    return CellType::Parabolic;
  if (std::abs(delta) <= tol)
    return CellType::Band;
  return delta < 0.0 ? CellType::Elliptic : CellType::Hyperbolic;
}

std::vector<RegionCell> classify_region_serial(const MAEquation& eq,
                                               const GridSpec& grid, double tol)
{
  std::vector<RegionCell> cells;
  cells.reserve(grid.size());
  for (int i = 0; i < grid.axis1.count; ++i)
    for (int j = 0; j < grid.axis2.count; ++j)
      cells.push_back(classify_cell(eq, grid, i, j, tol));
  return cells;
}

std::vector<RegionCell> classify_region(const MAEquation& eq,
                                        const GridSpec& grid, double tol)
{
  const long n = static_cast<long>(grid.size());
  const int cols = grid.axis2.count;
  std::vector<RegionCell> cells(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
  for (long c = 0; c < n; ++c)
  {
    const int i = static_cast<int>(c / cols);
    const int j = static_cast<int>(c % cols);
    cells[static_cast<std::size_t>(c)] = classify_cell(eq, grid, i, j, tol);
  }
  return cells;
}

} // namespace cma
