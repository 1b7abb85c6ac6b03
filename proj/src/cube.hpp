#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace zz {

// --- faces of the combinatorial n-cube ---------------------------------

enum class Letter : uint8_t { P0, P1, I };

// A face of I^n as a word over {p0, p1, I}, most significant coordinate
// first. Text encoding uses '0', '1', 'I' (e.g. "0I1").
struct Face {
  std::vector<Letter> word;

  int length() const { return static_cast<int>(word.size()); }
  int dim() const;

  static Face parse(const std::string& s);
  std::string str() const;

  bool operator==(const Face&) const = default;
  auto operator<=>(const Face&) const = default;
};

enum class Parity : uint8_t { even, odd };
enum class Side : uint8_t { source, target };

// f agrees with g wherever g is not I.
bool contains(const Face& f, const Face& g);

// Parity of a codimension-one subface, by the erasure procedure:
// erase g's point letters from both words, then r + l + (k+1) mod 2.
Parity parity(const Face& f, const Face& g);

// All codimension-one subfaces of g with the given parity, in pasting
// order (the order the boundary assembler composes them, domain first).
std::vector<Face> facets(const Face& g, Parity p);

// Endpoint vertices of an edge (dim-1 face).
Face edge_end(const Face& e, Side s);

// --- pasting expressions -------------------------------------------------

// A formal composition tree of (identity-wrapped) cube faces. dir == 0
// marks a leaf; otherwise factors are listed in application order and
// composed in direction dir.
struct PastingExpr {
  int dir = 0;
  Face face;       // leaf payload
  int wraps = 0;   // leaf identity wraps
  std::vector<PastingExpr> factors;

  int dim() const;

  static PastingExpr leaf(Face f, int wraps = 0);
  static PastingExpr comp(int dir, std::vector<PastingExpr> factors);

  std::string sexpr() const;
  static PastingExpr parse_sexpr(const std::string& s);

  bool operator==(const PastingExpr&) const = default;
};

// Flatten same-direction nests and cancel identity factors.
PastingExpr normalize(const PastingExpr& e);

// Structural equality of normal forms; for dim >= 2, additionally search
// interchange moves up to the given depth.
bool expr_equal(const PastingExpr& a, const PastingExpr& b,
                int interchange_depth = 4);

// The unique pasting of the even (source) / odd (target) facets of a
// generator face; supported for dim <= 3.
PastingExpr boundary(const Face& f, Side s);

// Boundary of a composite expression, by the boundary rules of each
// composition direction.
PastingExpr boundary(const PastingExpr& e, Side s);

// --- the walking n-morphism w(n) ----------------------------------------

// A cell of w(n): either an identity wrap of J^k q^l or of the top cell
// J^n. Base J^k q^l is encoded as (k, l); the top cell as top = true.
struct WalkingCell {
  int n = 0;
  bool top = false;
  int k = 0, l = 0;
  int wraps = 0;

  int base_dim() const { return top ? n : k; }
  int dim() const { return base_dim() + wraps; }
  std::string str() const;

  bool operator==(const WalkingCell&) const = default;
};

// Collapse map on generators: leading-I count and the following letter.
WalkingCell kappa(const Face& f);

// Boundary of a w(n) cell one dimension down.
WalkingCell wcell_boundary(const WalkingCell& c, Side s);

// Composition in w(n) in direction dir (application order: a then b);
// throws arg_error when not composable.
WalkingCell wcell_compose(int dir, const WalkingCell& a, const WalkingCell& b);

// Evaluate kappa through a pasting expression, composing in w(n).
WalkingCell kappa_eval(const PastingExpr& e, int n);

struct KappaReport {
  int n = 0;
  int generators_checked = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// For every generator of the n-cube, compare kappa of the boundary
// pasting with the boundary of kappa. Expected: no mismatches, n <= 3.
KappaReport check_kappa_functorial(int n);

// --- grids: the cubes over a general tuple ------------------------------

struct GridSpec {
  std::vector<int> t;
  int n() const { return static_cast<int>(t.size()); }
};

// One coordinate of a grid cell: the interval [pos, pos+1] or the point
// {pos}.
struct GridLetter {
  bool interval = false;
  int pos = 0;
  bool operator==(const GridLetter&) const = default;
  auto operator<=>(const GridLetter&) const = default;
};

struct GridCell {
  std::vector<GridLetter> word;
  int dim() const;
  std::string str() const;
  bool operator==(const GridCell&) const = default;
};

// Generating k-cells of the grid, each tagged with its position.
std::vector<GridCell> grid_cells(const GridSpec& t, int k);

// Cell counts per dimension, available at any n.
std::vector<unsigned long long> grid_counts(const GridSpec& t);

// A cell of the walking tuple-cell w(t): blocks index the gluing position
// in the first k coordinates, level the position in coordinate k+1.
struct GridWalkingCell {
  int k = 0;
  std::vector<int> blocks;
  std::optional<int> level;  // absent when k == n
  int wraps = 0;
  std::string str() const;
  bool operator==(const GridWalkingCell&) const = default;
};

// Blockwise collapse of a grid generator, via the Segal decomposition.
GridWalkingCell kappa_grid(const GridSpec& t, const GridCell& cell);

}  // namespace zz
