#include "grid.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace nor {

namespace {

constexpr double kGeomTol = 1e-9;  // well below any grid spacing we accept

// Signed distances to the supporting lines of the domain edges; >= 0 means
// the point lies on or beyond that edge. id is the edge id stored in the grid.
using ConstraintFn = std::function<void(double, double, std::vector<std::pair<int, double>>&)>;

std::shared_ptr<GridDomain> build(DomainKind kind, int nx, int ny, double x0, double y0, double h,
                                  double eps, const ConstraintFn& constraints) {
  auto g = std::make_shared<GridDomain>();
  g->kind = kind;
  g->nx = nx;
  g->ny = ny;
  g->h = h;
  g->x0 = x0;
  g->y0 = y0;
  g->eps = eps;
  g->cls.assign(static_cast<std::size_t>(nx) * ny, NodeClass::exterior);
  g->edge.assign(g->cls.size(), -1);
  g->edge2.assign(g->cls.size(), -1);

  std::vector<std::pair<int, double>> d;
  std::vector<char> inside(g->cls.size(), 0);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      d.clear();
      constraints(g->x(i), g->y(j), d);
      bool in = true;
      for (auto& [id, dist] : d)
        if (dist >= -kGeomTol) in = false;
      inside[g->idx(i, j)] = in ? 1 : 0;
      if (in) g->cls[g->idx(i, j)] = NodeClass::interior;
    }

  // Boundary layer: not strictly inside, 4-adjacent to an interior node.
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const int k = g->idx(i, j);
      if (inside[k]) continue;
      const bool adj = (i > 0 && inside[k - 1]) || (i + 1 < nx && inside[k + 1]) ||
                       (j > 0 && inside[k - nx]) || (j + 1 < ny && inside[k + nx]);
      if (!adj) continue;
      d.clear();
      constraints(g->x(i), g->y(j), d);
      std::sort(d.begin(), d.end(),
                [](const auto& a, const auto& b) { return a.second > b.second; });
      int violated = 0;
      for (auto& [id, dist] : d)
        if (dist >= -kGeomTol) ++violated;
      g->edge[k] = static_cast<std::int8_t>(d[0].first);
      if (violated >= 2) {
        g->cls[k] = NodeClass::vertex;
        g->edge2[k] = static_cast<std::int8_t>(d[1].first);
      } else {
        g->cls[k] = NodeClass::boundary;
      }
    }

  for (int j = 0; j < ny; ++j) {
    int run = -1;
    for (int i = 0; i < nx; ++i) {
      const int k = g->idx(i, j);
      if (g->cls[k] == NodeClass::interior) {
        if (i == 0 || i == nx - 1 || j == 0 || j == ny - 1)
          fail(Errc::internal, "interior node on the index-box rim");
        g->interior_idx.push_back(k);
        if (run < 0) run = k;
      } else {
        if (is_boundary(g->cls[k])) g->boundary_idx.push_back(k);
        if (run >= 0) {
          g->spans.push_back({run, k - run});
          run = -1;
        }
      }
    }
    if (run >= 0) g->spans.push_back({run, g->idx(nx - 1, j) + 1 - run});
  }
  return g;
}

void require_odd(int n) {
  if (n < 17) fail(Errc::invalid_input, "grid: n must be >= 17");
  if (n % 2 == 0) fail(Errc::invalid_input, "grid: n must be odd so the origin lies on a node");
}

double snap_to_grid(double eps, double h, std::vector<std::string>& warnings, const char* what) {
  const double k = std::round(eps / h);
  const double snapped = k * h;
  if (std::abs(snapped - eps) > 1e-12)
    warnings.push_back(std::string(what) + " snapped from " + std::to_string(eps) + " to " +
                       std::to_string(snapped) + " (multiple of h)");
  return snapped;
}

}  // namespace

int GridDomain::origin() const {
  const int i = static_cast<int>(std::lround(-x0 / h));
  const int j = static_cast<int>(std::lround(-y0 / h));
  return idx(i, j);
}

int GridDomain::nearest(double px, double py) const {
  const int i = static_cast<int>(std::lround((px - x0) / h));
  const int j = static_cast<int>(std::lround((py - y0) / h));
  if (i < 0 || i >= nx || j < 0 || j >= ny) return -1;
  return idx(i, j);
}

std::string GridDomain::edge_name(int flat) const {
  const int id = edge[flat];
  if (id < 0) return "-";
  const int n_long = (kind == DomainKind::hexagon) ? 6 : 4;
  if (id < n_long) return "C" + std::to_string(id + 1);
  return "S" + std::to_string(id - n_long + 1);
}

GridPtr square_grid(int n) {
  require_odd(n);
  const double h = 2.0 / (n - 1);
  // C1 = right, C2 = top, C3 = left, C4 = bottom.
  auto constraints = [](double x, double y, std::vector<std::pair<int, double>>& d) {
    d.push_back({0, x - 1.0});
    d.push_back({1, y - 1.0});
    d.push_back({2, -x - 1.0});
    d.push_back({3, -y - 1.0});
  };
  return build(DomainKind::square, n, n, -1.0, -1.0, h, 0.0, constraints);
}

GridPtr truncated_square_grid(int n, double eps) {
  require_odd(n);
  if (!(eps >= 0.0 && eps < 0.5)) fail(Errc::invalid_input, "truncated_square_grid: need 0 <= eps < 1/2");
  const double h = 2.0 / (n - 1);
  std::vector<std::string> warnings;
  const double es = snap_to_grid(eps, h, warnings, "truncation eps");
  const double cut = 1.0 - es;
  auto constraints = [cut](double x, double y, std::vector<std::pair<int, double>>& d) {
    const double r = 1.0 / std::sqrt(2.0);  // unit-gradient signed distances
    d.push_back({0, (x + y - 1.0) * r});    // C1, first quadrant
    d.push_back({1, (y - x - 1.0) * r});    // C2
    d.push_back({2, (-x - y - 1.0) * r});   // C3
    d.push_back({3, (x - y - 1.0) * r});    // C4
    d.push_back({4, x - cut});              // S1
    d.push_back({5, y - cut});              // S2
    d.push_back({6, -x - cut});             // S3
    d.push_back({7, -y - cut});             // S4
  };
  auto g = build(DomainKind::truncated_square, n, n, -1.0, -1.0, h, es, constraints);
  g->warnings = std::move(warnings);
  return g;
}

GridPtr hexagon_grid(int n, double eps) {
  require_odd(n);
  if (!(eps >= 0.0 && eps < 0.5)) fail(Errc::invalid_input, "hexagon_grid: need 0 <= eps < 1/2");
  const double h = 2.0 / (n - 1);
  const double s3 = std::sqrt(3.0);
  const int jmax = static_cast<int>(std::ceil(0.5 * s3 / h - 1e-12)) + 1;
  const double cut = 1.0 - eps;
  auto constraints = [s3, eps, cut](double x, double y, std::vector<std::pair<int, double>>& d) {
    const double a = 0.5 * (s3 * x + y);
    const double b = 0.5 * (s3 * x - y);
    const double apo = 0.5 * s3;
    d.push_back({0, a - apo});   // C1, toward 30 degrees
    d.push_back({1, y - apo});   // C2, top
    d.push_back({2, -b - apo});  // C3
    d.push_back({3, -a - apo});  // C4
    d.push_back({4, -y - apo});  // C5, bottom
    d.push_back({5, b - apo});   // C6
    if (eps > 0) {
      const double u = 0.5 * (x + s3 * y);
      const double v = 0.5 * (x - s3 * y);
      d.push_back({6, x - cut});    // S1, near vertex (1, 0)
      d.push_back({7, u - cut});    // S2, near (1/2, sqrt3/2)
      d.push_back({8, -v - cut});   // S3, near (-1/2, sqrt3/2)
      d.push_back({9, -x - cut});   // S4, near (-1, 0)
      d.push_back({10, -u - cut});  // S5
      d.push_back({11, v - cut});   // S6
    }
  };
  return build(DomainKind::hexagon, n, 2 * jmax + 1, -1.0, -jmax * h, h, eps, constraints);
}

double g_profile(double s, double eps, double mu, double s_plus) {
  if (!(eps > 0)) fail(Errc::invalid_input, "g_profile: eps must be positive");
  if (!(mu >= 0)) fail(Errc::invalid_input, "g_profile: mu must be non-negative");
  if (s < 0) return -g_profile(-s, eps, mu, s_plus);
  if (s >= eps) return 0.5 * s_plus;
  if (mu == 0.0) return 0.5 * s_plus * (s / eps);
  // e^{-mu eps}(e^{mu s}-e^{-mu s})/(e^{mu eps}-e^{-mu eps}) rewritten with
  // non-positive exponents only; large mu*eps underflows to the asymptote.
  const double ratio = std::exp(mu * (s - 2.0 * eps)) * std::expm1(-2.0 * mu * s) /
                       std::expm1(-2.0 * mu * eps);
  return 0.5 * s_plus * (ratio - std::expm1(-mu * s));
}

Vec3 hexagon_short_edge_director(double y, double eps) {
  if (!(eps > 0)) fail(Errc::invalid_input, "short-edge director needs eps > 0");
  const double r = std::sqrt(eps * eps + y * y);
  return {-eps / r, y / r, 0.0};
}

BoundaryData square_scalar_bc(const GridPtr& grid, double eps_ramp, const MaterialParams& mp) {
  if (grid->kind != DomainKind::square)
    fail(Errc::invalid_input, "square_scalar_bc: grid is not an axis-aligned square");
  if (!(eps_ramp > 0 && eps_ramp < 0.5))
    fail(Errc::invalid_input, "square_scalar_bc: need 0 < eps < 1/2");
  BoundaryData bc;
  bc.grid = grid;
  bc.has_scalar = true;
  bc.scalar.assign(grid->size(), 0.0);
  const double eps = snap_to_grid(eps_ramp, grid->h, bc.warnings, "ramp eps");
  const double q0 = mp.q0();
  for (int k : grid->boundary_idx) {
    if (grid->cls[k] == NodeClass::vertex) {
      bc.scalar[k] = 0.0;  // q is fixed to be zero at the vertices
      continue;
    }
    const double x = grid->node_x(k), y = grid->node_y(k);
    const int id = grid->edge[k];
    if (id == 1 || id == 3) {  // top, bottom: +B/2C with ramp over 1-eps <= |x| <= 1
      bc.scalar[k] = (std::abs(x) <= 1.0 - eps + kGeomTol) ? q0 : q0 * (1.0 - std::abs(x)) / eps;
    } else {  // left, right: -B/2C with ramp
      bc.scalar[k] = (std::abs(y) <= 1.0 - eps + kGeomTol) ? -q0 : -q0 * (1.0 - std::abs(y)) / eps;
    }
  }
  return bc;
}

BoundaryData truncated_square_bc(const GridPtr& grid, const MaterialParams& mp) {
  if (grid->kind != DomainKind::truncated_square)
    fail(Errc::invalid_input, "truncated_square_bc: grid is not a truncated square");
  BoundaryData bc;
  bc.grid = grid;
  bc.has_scalar = true;
  bc.scalar.assign(grid->size(), 0.0);
  const double sh = 0.5 * mp.s_plus();
  const double mu = mp.mu_g();
  const double eps = grid->eps;
  auto edge_value = [&](int id, double x, double y) -> double {
    switch (id) {
      case 0: case 2: return sh;         // C1, C3: first/third-quadrant long edges
      case 1: case 3: return -sh;        // C2, C4
      case 4: return g_profile(y, eps, mu, mp.s_plus());    // S1 at x = 1-eps
      case 6: return -g_profile(y, eps, mu, mp.s_plus());   // S3
      case 5: return g_profile(x, eps, mu, mp.s_plus());    // S2 at y = 1-eps
      case 7: return -g_profile(x, eps, mu, mp.s_plus());   // S4
      default: fail(Errc::internal, "truncated_square_bc: bad edge id");
    }
  };
  for (int k : grid->boundary_idx) {
    const double x = grid->node_x(k), y = grid->node_y(k);
    if (grid->cls[k] == NodeClass::vertex && grid->eps == 0.0) {
      bc.scalar[k] = 0.0;  // untruncated diamond tips sit on the axes
      continue;
    }
    bc.scalar[k] = edge_value(grid->edge[k], x, y);
  }
  return bc;
}

BoundaryData hexagon_bc(const GridPtr& grid, const MaterialParams& mp) {
  if (grid->kind != DomainKind::hexagon)
    fail(Errc::invalid_input, "hexagon_bc: grid is not a hexagon");
  BoundaryData bc;
  bc.grid = grid;
  bc.has_tensor = true;
  bc.tensor.assign(grid->size(), QTensor{});
  const double s = mp.B / mp.C;
  const double s3 = std::sqrt(3.0);
  const Vec3 dir[3] = {{-0.5, 0.5 * s3, 0.0}, {-1.0, 0.0, 0.0}, {-0.5, -0.5 * s3, 0.0}};
  const double eps = grid->eps;
  auto edge_tensor = [&](int id, double x, double y) -> QTensor {
    if (id < 6) return uniaxial(s, dir[id % 3]);
    // Short edge near the vertex at angle (id-6)*60 degrees: rotate into the
    // S1 frame, evaluate the rotating director, rotate back.
    const double th = (id - 6) * (M_PI / 3.0);
    const double c = std::cos(th), sn = std::sin(th);
    const double yl = std::clamp(-sn * x + c * y, -s3 * eps, s3 * eps);
    const Vec3 nl = hexagon_short_edge_director(yl, eps);
    return uniaxial(s, Vec3{c * nl[0] - sn * nl[1], sn * nl[0] + c * nl[1], 0.0});
  };
  for (int k : grid->boundary_idx) {
    const double x = grid->node_x(k), y = grid->node_y(k);
    if (grid->cls[k] == NodeClass::vertex) {
      const QTensor a = edge_tensor(grid->edge[k], x, y);
      const QTensor b = edge_tensor(grid->edge2[k], x, y);
      bc.tensor[k] = 0.5 * (a + b);
    } else {
      bc.tensor[k] = edge_tensor(grid->edge[k], x, y);
    }
  }
  return bc;
}

}  // namespace nor
