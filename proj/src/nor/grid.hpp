#ifndef NOR_GRID_HPP
#define NOR_GRID_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tensor.hpp"

namespace nor {

enum class NodeClass : std::uint8_t { exterior = 0, interior = 1, boundary = 2, vertex = 3 };

enum class DomainKind : std::uint8_t { square = 0, truncated_square = 1, hexagon = 2 };

inline bool is_boundary(NodeClass c) { return c == NodeClass::boundary || c == NodeClass::vertex; }

// Masked uniform Cartesian grid. Interior nodes lie strictly inside the
// domain; boundary nodes are the first not-strictly-inside layer adjacent to
// an interior node, so every interior 5-point stencil closes on interior or
// boundary nodes and Dirichlet data is imposed on the nearest node layer.
struct GridDomain {
  DomainKind kind = DomainKind::square;
  int nx = 0, ny = 0;
  double h = 0;
  double x0 = 0, y0 = 0;  // coordinates of node (0,0)
  double eps = 0;         // ramp width (square) or truncation length (others)

  std::vector<NodeClass> cls;   // nx*ny, row-major, index = i + nx*j
  std::vector<std::int8_t> edge;   // edge id or -1; see edge_name()
  std::vector<std::int8_t> edge2;  // second edge at vertex junctions, or -1

  // Contiguous interior runs for stencil loops: [begin, begin+len) flattened.
  struct Span {
    int begin;
    int len;
  };
  std::vector<Span> spans;
  std::vector<int> interior_idx;
  std::vector<int> boundary_idx;

  std::vector<std::string> warnings;

  int idx(int i, int j) const { return i + nx * j; }
  double x(int i) const { return x0 + h * i; }
  double y(int j) const { return y0 + h * j; }
  double node_x(int flat) const { return x(flat % nx); }
  double node_y(int flat) const { return y(flat / nx); }
  NodeClass at(int i, int j) const { return cls[idx(i, j)]; }

  // Index of the origin node (0,0); the odd-n precondition puts it on a node.
  int origin() const;

  // Nearest node to (px, py), or -1 outside the index box.
  int nearest(double px, double py) const;

  std::string edge_name(int flat) const;

  std::size_t size() const { return cls.size(); }
};

using GridPtr = std::shared_ptr<const GridDomain>;

// Axis-aligned square [-1,1]^2 with h = 2/(n-1). n must be odd and >= 17 so
// the origin and the diagonals lie on nodes. All four sides are boundary,
// corners are tagged vertex. Edges counterclockwise from x = 1:
// C1 = right, C2 = top, C3 = left, C4 = bottom.
GridPtr square_grid(int n);

// Truncated square of Eq-space whose diagonals lie along the coordinate axes:
// |x+y| < 1, |x-y| < 1, |x| < 1-eps, |y| < 1-eps. Long edges C1..C4
// counterclockwise with C1 in the first quadrant; short edges S1..S4 with
// S1 on x = 1-eps. eps is snapped to a multiple of h (warning recorded).
GridPtr truncated_square_grid(int n, double eps);

// Regular hexagon with vertices (1,0), (1/2, sqrt3/2), ... (unit circumradius),
// optionally truncated by |x| < 1-eps and |x +- sqrt3 y|/2 < 1-eps. n is the
// node count across the width [-1,1] and must be odd. Long edges C1..C6
// counterclockwise from (1,0); short edges S1..S6 when eps > 0; for eps = 0
// nodes lying beyond two edge lines are tagged vertex.
GridPtr hexagon_grid(int n, double eps);

// Dirichlet data stored once per grid; never updated during a flow.
struct BoundaryData {
  GridPtr grid;
  std::vector<double> scalar;    // per node, meaningful on boundary nodes
  std::vector<QTensor> tensor;   // per node, meaningful on boundary nodes
  bool has_scalar = false;
  bool has_tensor = false;
  std::vector<std::string> warnings;
};

// Ramp datum of the axis-aligned square: +B/2C on top/bottom with a linear
// ramp to 0 at the corners over the strip 1-eps <= |x| <= 1, -B/2C with the
// mirrored ramp on left/right. eps is snapped to a multiple of h.
BoundaryData square_scalar_bc(const GridPtr& grid, double eps_ramp, const MaterialParams& mp);

// Datum of the truncated square: +s_plus/2 on C1 and C3, -s_plus/2 on C2 and
// C4, and the exponential profile g on the short edges, signed so the datum
// is continuous and odd under both axis reflections.
BoundaryData truncated_square_bc(const GridPtr& grid, const MaterialParams& mp);

// Tangent uniaxial datum of the hexagon long edges, the rotating-director
// datum on short edges (eps > 0), and the two-edge tensor average at eps = 0
// vertices.
BoundaryData hexagon_bc(const GridPtr& grid, const MaterialParams& mp);

// Short-edge boundary profile g of the truncated square,
//   g(s) = (s_plus/2) (e^{-mu eps} (e^{mu s} - e^{-mu s}) / (e^{mu eps} - e^{-mu eps})
//           - e^{-mu s} + 1)   for 0 <= s <= eps,
// extended by s_plus/2 for s > eps and oddly for s < 0. Evaluated in a form
// with only non-positive exponents, so large mu*eps underflows to the
// asymptotic profile instead of overflowing.
double g_profile(double s, double eps, double mu, double s_plus);

// Unit tangent director on the hexagon short edge near vertex (1,0),
// parameterized by y in [-sqrt3 eps, sqrt3 eps].
Vec3 hexagon_short_edge_director(double y, double eps);

}  // namespace nor

#endif
