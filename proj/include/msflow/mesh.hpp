#pragma once

#include "msflow/types.hpp"

#include <vector>

namespace msflow {

/// Structured fine grid on [0,Lx]x[0,Ly]: nx*ny rectangular cells,
/// (nx+1)*(ny+1) nodes, row-major indexing starting at the south-west corner.
struct FineGrid {
    Index nx = 0, ny = 0;
    double Lx = 1.0, Ly = 1.0;
    double hx = 0.0, hy = 0.0;

    Index n_nodes() const { return (nx + 1) * (ny + 1); }
    Index n_cells() const { return nx * ny; }
    Index node(Index ix, Index iy) const { return iy * (nx + 1) + ix; }
    Index cell(Index ix, Index iy) const { return iy * nx + ix; }
    Index node_ix(Index n) const { return n % (nx + 1); }
    Index node_iy(Index n) const { return n / (nx + 1); }
    Index cell_ix(Index c) const { return c % nx; }
    Index cell_iy(Index c) const { return c / nx; }
    double x(Index ix) const { return ix * hx; }
    double y(Index iy) const { return iy * hy; }
    bool on_boundary(Index ix, Index iy) const {
        return ix == 0 || iy == 0 || ix == nx || iy == ny;
    }
    /// Node ids of cell (ix,iy) in CCW corner order SW, SE, NE, NW.
    std::array<Index, 4> cell_nodes(Index ix, Index iy) const {
        return {node(ix, iy), node(ix + 1, iy), node(ix + 1, iy + 1), node(ix, iy + 1)};
    }
};

/// Coarse partition: every coarse element is an rx*ry block of fine cells.
struct CoarseGrid {
    Index Nx = 0, Ny = 0;
    Index rx = 0, ry = 0;
    double Hx = 0.0, Hy = 0.0;

    Index n_nodes() const { return (Nx + 1) * (Ny + 1); }
    Index n_cells() const { return Nx * Ny; }
    Index node(Index ix, Index iy) const { return iy * (Nx + 1) + ix; }
    Index cell(Index ix, Index iy) const { return iy * Nx + ix; }
    Index node_ix(Index n) const { return n % (Nx + 1); }
    Index node_iy(Index n) const { return n / (Nx + 1); }
    Index cell_ix(Index c) const { return c % Nx; }
    Index cell_iy(Index c) const { return c / Nx; }
    /// Fine-cell index set of coarse element (ex,ey), row-major.
    std::vector<Index> fine_cells(Index ex, Index ey, const FineGrid& fine) const;
};

/// Rectangle of fine nodes [fx0..fx1] x [fy0..fy1] (inclusive node coords)
/// with row-major local indexing.  Every coarse neighborhood and every
/// coarse element patch is one of these.
struct NodeRect {
    Index fx0 = 0, fx1 = 0, fy0 = 0, fy1 = 0;

    Index nnx() const { return fx1 - fx0 + 1; }  // nodes per row
    Index nny() const { return fy1 - fy0 + 1; }
    Index n_nodes() const { return nnx() * nny(); }
    Index n_cells() const { return (nnx() - 1) * (nny() - 1); }
    bool contains(Index gx, Index gy) const {
        return gx >= fx0 && gx <= fx1 && gy >= fy0 && gy <= fy1;
    }
    Index local(Index gx, Index gy) const { return (gy - fy0) * nnx() + (gx - fx0); }
    Index global(const FineGrid& g, Index loc) const {
        return g.node(fx0 + loc % nnx(), fy0 + loc / nnx());
    }
    bool on_rect_boundary(Index gx, Index gy) const {
        return gx == fx0 || gx == fx1 || gy == fy0 || gy == fy1;
    }
};

/// Fine nodal vector supported on a node rectangle.
struct PatchVector {
    NodeRect rect;
    Vector values;  // rect.n_nodes() entries, row-major

    /// Scatter into a global fine vector (adds nothing outside the patch).
    void scatter_into(const FineGrid& g, Vector& out) const;
    Vector to_global(const FineGrid& g) const;
};

/// Coarse neighborhood D_i: the union of coarse elements having coarse node
/// x_i as a corner.  Always a rectangle of 1, 2 or 4 coarse elements.
struct Neighborhood {
    Index node = 0;  // coarse node id
    Index cx = 0, cy = 0;
    Index ex0 = 0, ex1 = 0, ey0 = 0, ey1 = 0;  // coarse element range, half-open
    std::vector<Index> elements;               // coarse element ids, <= 4
    NodeRect rect;                             // fine-node extent of D_i

    Index n_boundary_nodes() const { return 2 * (rect.nnx() - 1 + rect.nny() - 1); }
};

/// Control volumes of the vertices of a structured level (fine or coarse).
/// The control volume of vertex z is the box of half-cell extent around z,
/// clipped to the domain; each primal cell is split into four quadrants.
struct DualLevel {
    Index ncx = 0, ncy = 0;  // primal cells per axis
    double hx = 0.0, hy = 0.0;

    Index n_vertices() const { return (ncx + 1) * (ncy + 1); }
    Index vertex(Index vx, Index vy) const { return vy * (ncx + 1) + vx; }
    Index vertex_ix(Index v) const { return v % (ncx + 1); }
    Index vertex_iy(Index v) const { return v / (ncx + 1); }
    /// Clipped extents of C_z along each axis.
    double extent_x(Index vx) const;
    double extent_y(Index vy) const;
    double meas(Index vx, Index vy) const { return extent_x(vx) * extent_y(vy); }
};

enum class DualKind { Fine, Coarse };

/// One boundary piece of a control volume.
struct CvHalfEdge {
    Index elem = -1;   // primal cell id (interior pieces), -1 for domain pieces
    int ring = -1;     // ring interface index 0..3 within elem (interior pieces)
    int sign = 0;      // +1 if ring orientation points out of this volume
    int side = -1;     // 0=left 1=right 2=bottom 3=top (domain pieces)
    double length = 0.0;
};

struct ControlVolume {
    Index vertex = 0;
    double meas = 0.0;
    std::vector<std::pair<Index, int>> quadrants;  // (primal cell, corner 0..3)
    std::vector<CvHalfEdge> boundary;              // closed chain, CCW from SW
};

struct GridHierarchy {
    FineGrid fine;
    CoarseGrid coarse;
    std::vector<Neighborhood> neighborhoods;  // one per coarse node, id order
    DualLevel fine_dual;
    DualLevel coarse_dual;

    const DualLevel& dual(DualKind k) const {
        return k == DualKind::Fine ? fine_dual : coarse_dual;
    }
};

/// Builds the full hierarchy.  Throws ConfigError if Nx does not divide nx
/// (or Ny, ny) or any count is < 1.
GridHierarchy build_grid_hierarchy(Index nx, Index ny, Index Nx, Index Ny,
                                   double Lx = 1.0, double Ly = 1.0);

/// Fine nodes on the boundary of D_i in CCW order starting at the SW corner
/// of the patch.  |result| == L_i.
std::vector<Index> neighborhood_boundary_nodes(const FineGrid& fine,
                                               const Neighborhood& nb);

/// All fine nodes of D_i (row-major over the patch).
std::vector<Index> neighborhood_nodes(const FineGrid& fine, const Neighborhood& nb);

/// Control volume of a vertex at the requested level.
ControlVolume control_volume_of(const GridHierarchy& h, Index vertex, DualKind level);

/// Ring interface geometry within one primal cell, shared between the flux
/// postprocessor and the dual mesh:
///   ring 0: x = xm, y in [y0,ym], normal +x  (between corners 0 and 1)
///   ring 1: y = ym, x in [xm,x1], normal +y  (between corners 1 and 2)
///   ring 2: x = xm, y in [ym,y1], normal -x  (between corners 2 and 3)
///   ring 3: y = ym, x in [x0,xm], normal -y  (between corners 3 and 0)
/// Positive flux on ring k flows from corner k to corner (k+1)%4.
inline constexpr int ring_from_corner(int k) { return k; }          // leaves corner k
inline constexpr int ring_into_corner(int k) { return (k + 3) % 4; }  // enters corner k

}  // namespace msflow
