#include "cube.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace zz {

int Face::dim() const {
  return static_cast<int>(std::count(word.begin(), word.end(), Letter::I));
}

Face Face::parse(const std::string& s) {
  Face f;
  for (char c : s) {
    switch (c) {
      case '0': f.word.push_back(Letter::P0); break;
      case '1': f.word.push_back(Letter::P1); break;
      case 'I':
      case 'i': f.word.push_back(Letter::I); break;
      case ' ': break;
      default:
        throw parse_error(std::string("bad face letter '") + c +
                          "' (expected 0, 1 or I)");
    }
  }
  return f;
}

std::string Face::str() const {
  std::string s;
  for (Letter a : word)
    s += (a == Letter::P0 ? '0' : a == Letter::P1 ? '1' : 'I');
  return s;
}

bool contains(const Face& f, const Face& g) {
  if (f.length() != g.length())
    throw arg_error("contains: words of different length");
  for (int i = 0; i < f.length(); ++i)
    if (f.word[i] != g.word[i] && g.word[i] != Letter::I) return false;
  return true;
}

Parity parity(const Face& f, const Face& g) {
  if (!contains(f, g) || f.dim() + 1 != g.dim())
    throw arg_error("parity: f must be a codimension-one subface of g");
  // erase the coordinates where g holds a point letter
  int r = 0, l = 0, pos = 0;
  for (int i = 0; i < g.length(); ++i) {
    if (g.word[i] != Letter::I) continue;
    ++pos;  // 1-based coordinate in the reduced word
    if (f.word[i] != Letter::I) {
      r = pos;
      l = f.word[i] == Letter::P1 ? 1 : 0;
    }
  }
  int k1 = g.dim();  // reduced length k+1
  return (r + l + k1) % 2 == 0 ? Parity::even : Parity::odd;
}

std::vector<Face> facets(const Face& g, Parity p) {
  // one facet per I coordinate; pasting order is descending coordinate for
  // the even boundary and ascending for the odd one
  std::vector<Face> out;
  for (int i = 0; i < g.length(); ++i) {
    if (g.word[i] != Letter::I) continue;
    for (Letter sub : {Letter::P0, Letter::P1}) {
      Face f = g;
      f.word[i] = sub;
      if (parity(f, g) == p) out.push_back(f);
    }
  }
  if (p == Parity::even) std::reverse(out.begin(), out.end());
  return out;
}

Face edge_end(const Face& e, Side s) {
  if (e.dim() != 1) throw arg_error("edge_end: not an edge");
  auto fs = facets(e, s == Side::source ? Parity::even : Parity::odd);
  return fs.at(0);
}

// --- pasting expressions -------------------------------------------------

PastingExpr PastingExpr::leaf(Face f, int wraps) {
  PastingExpr e;
  e.face = std::move(f);
  e.wraps = wraps;
  return e;
}

PastingExpr PastingExpr::comp(int dir, std::vector<PastingExpr> factors) {
  if (dir < 1) throw arg_error("comp: direction must be >= 1");
  if (factors.empty()) throw arg_error("comp: no factors");
  PastingExpr e;
  e.dir = dir;
  e.factors = std::move(factors);
  return e;
}

int PastingExpr::dim() const {
  if (dir == 0) return face.dim() + wraps;
  int d = 0;
  for (const auto& f : factors) d = std::max(d, f.dim());
  return d;
}

std::string PastingExpr::sexpr() const {
  if (dir == 0) {
    std::string s = "(face " + face.str() + ")";
    for (int i = 0; i < wraps; ++i) s = "(id " + s + ")";
    return s;
  }
  std::string s = "(c" + std::to_string(dir);
  for (const auto& f : factors) s += " " + f.sexpr();
  return s + ")";
}

namespace {

struct SexprParser {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    if (pos >= s.size()) throw parse_error("unexpected end of s-expression");
    return s[pos];
  }
  void expect(char c) {
    if (peek() != c)
      throw parse_error(std::string("expected '") + c + "' in s-expression");
    ++pos;
  }
  std::string token() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && !isspace(static_cast<unsigned char>(s[pos])) &&
           s[pos] != '(' && s[pos] != ')')
      ++pos;
    if (start == pos) throw parse_error("empty token in s-expression");
    return s.substr(start, pos - start);
  }

  PastingExpr parse() {
    expect('(');
    std::string head = token();
    if (head == "face") {
      Face f = Face::parse(token());
      expect(')');
      return PastingExpr::leaf(std::move(f));
    }
    if (head == "id") {
      PastingExpr inner = parse();
      expect(')');
      inner.dir == 0 ? void(++inner.wraps)
                     : throw parse_error("(id ...) applies to leaves only");
      return inner;
    }
    if (head.size() >= 2 && head[0] == 'c') {
      int dir = std::stoi(head.substr(1));
      std::vector<PastingExpr> factors;
      while (peek() != ')') factors.push_back(parse());
      expect(')');
      return PastingExpr::comp(dir, std::move(factors));
    }
    throw parse_error("unknown s-expression head '" + head + "'");
  }
};

// a factor is an identity for dir-j composition when every leaf under it
// has underlying dimension < j
bool is_unit_for(const PastingExpr& e, int j) {
  if (e.dir == 0) return e.face.dim() < j;
  for (const auto& f : e.factors)
    if (!is_unit_for(f, j)) return false;
  return true;
}

}  // namespace

PastingExpr PastingExpr::parse_sexpr(const std::string& s) {
  SexprParser p{s};
  PastingExpr e = p.parse();
  p.skip_ws();
  if (p.pos != s.size()) throw parse_error("trailing input after s-expression");
  return e;
}

PastingExpr normalize(const PastingExpr& e) {
  if (e.dir == 0) return e;
  std::vector<PastingExpr> flat;
  for (const auto& f : e.factors) {
    PastingExpr nf = normalize(f);
    if (nf.dir == e.dir) {
      for (auto& g : nf.factors) flat.push_back(std::move(g));
    } else {
      flat.push_back(std::move(nf));
    }
  }
  std::vector<PastingExpr> kept;
  for (auto& f : flat)
    if (!is_unit_for(f, e.dir)) kept.push_back(std::move(f));
  if (kept.empty()) {
    // the whole composite is an identity; keep a single unit factor
    kept.push_back(flat.front());
  }
  if (kept.size() == 1) return kept.front();
  return PastingExpr::comp(e.dir, std::move(kept));
}

namespace {

// source/target width of a row factor, counted in edges
int factor_width(const PastingExpr& f, Side s) {
  if (f.dir == 0) {
    int d = f.face.dim();
    if (d >= 2) return d;  // a dim-d face has d facets per parity
    return d == 1 ? 1 : 0;
  }
  int w = 0;
  for (const auto& g : f.factors) w += factor_width(g, s);
  return w;
}

bool is_active(const PastingExpr& f) { return !is_unit_for(f, 2); }

// split rows with several active factors into whisker rows, active
// factor leftmost first (sound by interchange)
std::vector<PastingExpr> whiskerize(const PastingExpr& row) {
  std::vector<PastingExpr> factors =
      row.dir == 1 ? row.factors : std::vector<PastingExpr>{row};
  int actives = 0;
  for (const auto& f : factors) actives += is_active(f) ? 1 : 0;
  if (actives <= 1) return {row};

  std::vector<PastingExpr> rows;
  // peel active factors left to right; the part already applied is
  // replaced by identity wraps of its target boundary
  std::vector<PastingExpr> pending = factors;
  for (size_t i = 0; i < pending.size(); ++i) {
    if (!is_active(pending[i])) continue;
    std::vector<PastingExpr> r = pending;
    for (size_t j = i + 1; j < r.size(); ++j)
      if (is_active(r[j])) {
        PastingExpr src = boundary(r[j], Side::source);
        std::vector<PastingExpr> ids;
        if (src.dir == 0) {
          src.wraps += 1;
          ids.push_back(src);
        } else {
          for (auto& le : src.factors) {
            le.wraps += 1;
            ids.push_back(le);
          }
        }
        r.erase(r.begin() + j);
        r.insert(r.begin() + j, ids.begin(), ids.end());
        // adjust for inserted width
        j += ids.size() - 1;
      }
    rows.push_back(r.size() == 1 ? r.front() : PastingExpr::comp(1, r));
    // replace this active factor by identities of its target for later rows
    PastingExpr tgt = boundary(pending[i], Side::target);
    std::vector<PastingExpr> ids;
    if (tgt.dir == 0) {
      tgt.wraps += 1;
      ids.push_back(tgt);
    } else {
      for (auto& le : tgt.factors) {
        le.wraps += 1;
        ids.push_back(le);
      }
    }
    pending.erase(pending.begin() + i);
    pending.insert(pending.begin() + i, ids.begin(), ids.end());
    i += ids.size() - 1;
  }
  return rows;
}

struct RowProfile {
  int pre = 0;        // edges before the active factor (in the source path)
  int src_w = 0, tgt_w = 0;
  bool has_active = false;
};

RowProfile profile(const PastingExpr& row) {
  RowProfile p;
  std::vector<const PastingExpr*> fs;
  if (row.dir == 1)
    for (const auto& f : row.factors) fs.push_back(&f);
  else
    fs.push_back(&row);
  for (const auto* f : fs) {
    if (is_active(*f)) {
      p.has_active = true;
      p.src_w = factor_width(*f, Side::source);
      p.tgt_w = factor_width(*f, Side::target);
      return p;
    }
    p.pre += factor_width(*f, Side::source);
  }
  return p;
}

}  // namespace

PastingExpr boundary(const PastingExpr& e, Side s) {
  if (e.dir == 0) {
    if (e.wraps > 0) {
      PastingExpr r = e;
      --r.wraps;
      return r;
    }
    return boundary(e.face, s);
  }
  int d = e.dim();
  if (e.dir == d) {
    return boundary(s == Side::source ? e.factors.front() : e.factors.back(),
                    s);
  }
  std::vector<PastingExpr> parts;
  for (const auto& f : e.factors) parts.push_back(boundary(f, s));
  return normalize(PastingExpr::comp(e.dir, std::move(parts)));
}

namespace {

// assemble the pasting of the given dim-2 facets of a dim-3 face: walk a
// monotone edge path from the initial corner, each step rewriting one
// square's source chain to its target chain
struct Assembly {
  std::vector<PastingExpr> rows;
  std::vector<Face> order;  // squares in application order
};

std::vector<Face> path_edges(const Face& g, const std::vector<int>& perm) {
  // edges of the monotone path determined by advancing g's I coordinates
  // in the order given by perm
  std::vector<int> ipos;
  for (int i = 0; i < g.length(); ++i)
    if (g.word[i] == Letter::I) ipos.push_back(i);
  Face cur = g;
  for (int i : ipos) cur.word[i] = Letter::P0;
  std::vector<Face> path;
  for (int step : perm) {
    Face e = cur;
    e.word[ipos[step]] = Letter::I;
    path.push_back(e);
    cur.word[ipos[step]] = Letter::P1;
  }
  return path;
}

void search_assemblies(std::vector<Face> path,
                       std::vector<Face> remaining,
                       Assembly partial,
                       std::vector<Assembly>& found) {
  if (remaining.empty()) {
    found.push_back(std::move(partial));
    return;
  }
  for (size_t si = 0; si < remaining.size(); ++si) {
    const Face& sq = remaining[si];
    auto src = facets(sq, Parity::even);
    auto tgt = facets(sq, Parity::odd);
    for (size_t p = 0; p + src.size() <= path.size(); ++p) {
      if (!std::equal(src.begin(), src.end(), path.begin() + p)) continue;
      std::vector<PastingExpr> row;
      for (size_t i = 0; i < p; ++i)
        row.push_back(PastingExpr::leaf(path[i], 1));
      row.push_back(PastingExpr::leaf(sq));
      for (size_t i = p + src.size(); i < path.size(); ++i)
        row.push_back(PastingExpr::leaf(path[i], 1));

      std::vector<Face> next = path;
      next.erase(next.begin() + p, next.begin() + p + src.size());
      next.insert(next.begin() + p, tgt.begin(), tgt.end());

      Assembly a = partial;
      a.rows.push_back(row.size() == 1 ? row.front()
                                       : PastingExpr::comp(1, row));
      a.order.push_back(sq);
      std::vector<Face> rem = remaining;
      rem.erase(rem.begin() + si);
      search_assemblies(std::move(next), std::move(rem), std::move(a), found);
    }
  }
}

}  // namespace

PastingExpr boundary(const Face& f, Side s) {
  int d = f.dim();
  if (d == 0) throw arg_error("boundary: a 0-dimensional face has no boundary");
  Parity p = s == Side::source ? Parity::even : Parity::odd;
  auto fs = facets(f, p);
  if (d == 1) return PastingExpr::leaf(fs.at(0));
  if (d == 2) {
    // two edges, chained by their shared vertex; facets() already returns
    // them in pasting order, which we assert here
    if (edge_end(fs[0], Side::target) != edge_end(fs[1], Side::source))
      throw arg_error("boundary: facet chain does not close");
    return PastingExpr::comp(
        1, {PastingExpr::leaf(fs[0]), PastingExpr::leaf(fs[1])});
  }
  if (d == 3) {
    std::vector<Assembly> found;
    std::vector<int> perm{0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
      search_assemblies(path_edges(f, perm), fs, Assembly{}, found);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (found.size() != 1)
      throw arg_error("boundary: pasting assembly not unique (" +
                      std::to_string(found.size()) + " candidates for " +
                      f.str() + ")");
    auto& a = found.front();
    if (a.order != fs)
      throw arg_error("boundary: assembly order disagrees with facet order");
    return PastingExpr::comp(2, std::move(a.rows));
  }
  throw unsupported_error(
      "boundary: pasting assembly is implemented for dimension <= 3");
}

namespace {

std::vector<PastingExpr> rows_of(const PastingExpr& e) {
  if (e.dir == 2) return e.factors;
  return {e};
}

// swap adjacent whisker rows when their active segments are disjoint;
// returns nothing if they interact
std::optional<std::pair<PastingExpr, PastingExpr>> try_swap(
    const PastingExpr& a, const PastingExpr& b) {
  RowProfile pa = profile(a), pb = profile(b);
  if (!pa.has_active || !pb.has_active) return std::nullopt;
  int a_lo = pa.pre, a_hi = pa.pre + pa.tgt_w;
  int b_lo = pb.pre, b_hi = pb.pre + pb.src_w;

  auto factor_list = [](const PastingExpr& r) {
    return r.dir == 1 ? r.factors : std::vector<PastingExpr>{r};
  };
  auto active_index = [&](const std::vector<PastingExpr>& fs) {
    for (size_t i = 0; i < fs.size(); ++i)
      if (is_active(fs[i])) return i;
    return fs.size();
  };
  std::vector<PastingExpr> fa = factor_list(a), fb = factor_list(b);
  size_t ia = active_index(fa), ib = active_index(fb);

  if (b_hi <= a_lo) {
    // b acts left of a: after the swap b keeps its position; a's whisker
    // prefix must replace b's source edges with b's target edges
    std::vector<PastingExpr> nb = fb, na = fa;
    // b, applied first, needs its suffix whiskers taken from a's source
    // side: positions right of b's active segment come from the original
    // row a's prefix (before a's active factor) plus a's active source
    // and suffix. Rebuild both rows from the common outer path.
    // prefix of new-b: original b prefix (edges of the path before either
    // active segment are identical in both rows)
    // We can rebuild: new first row = b's active at b_lo with whiskers
    // from row a's source path; new second row = a's active with whiskers
    // from row b's target path.
    std::vector<PastingExpr> a_src_edges;  // a's source path as leaves
    for (size_t i = 0; i < fa.size(); ++i) {
      if (i == ia) {
        PastingExpr n = normalize(boundary(fa[i], Side::source));
        if (n.dir == 0)
          a_src_edges.push_back(n);
        else
          for (auto& le : n.factors) a_src_edges.push_back(le);
      } else {
        PastingExpr cp = fa[i];
        --cp.wraps;
        a_src_edges.push_back(cp);
      }
    }
    // first row: b's active over a's source path
    std::vector<PastingExpr> r1;
    for (int i = 0; i < b_lo; ++i) {
      PastingExpr id = a_src_edges[i];
      ++id.wraps;
      r1.push_back(id);
    }
    r1.push_back(fb[ib]);
    for (size_t i = b_lo + pb.src_w; i < a_src_edges.size(); ++i) {
      PastingExpr id = a_src_edges[i];
      ++id.wraps;
      r1.push_back(id);
    }
    // second row: a's active, with b's target edges substituted on the left
    PastingExpr btgt = normalize(boundary(fb[ib], Side::target));
    std::vector<PastingExpr> b_tgt_edges;
    if (btgt.dir == 0)
      b_tgt_edges.push_back(btgt);
    else
      for (auto& le : btgt.factors) b_tgt_edges.push_back(le);
    std::vector<PastingExpr> mid_edges;  // path after applying b first
    for (int i = 0; i < b_lo; ++i) mid_edges.push_back(a_src_edges[i]);
    for (auto& e2 : b_tgt_edges) mid_edges.push_back(e2);
    for (size_t i = b_lo + pb.src_w; i < a_src_edges.size(); ++i)
      mid_edges.push_back(a_src_edges[i]);
    int a_pos = pa.pre + (pb.tgt_w - pb.src_w);
    std::vector<PastingExpr> r2;
    for (int i = 0; i < a_pos; ++i) {
      PastingExpr id = mid_edges[i];
      ++id.wraps;
      r2.push_back(id);
    }
    r2.push_back(fa[ia]);
    for (size_t i = a_pos + pa.src_w; i < mid_edges.size(); ++i) {
      PastingExpr id = mid_edges[i];
      ++id.wraps;
      r2.push_back(id);
    }
    auto mk = [](std::vector<PastingExpr> fs) {
      return fs.size() == 1 ? fs.front() : PastingExpr::comp(1, std::move(fs));
    };
    return std::make_pair(mk(std::move(r1)), mk(std::move(r2)));
  }
  if (b_lo >= a_hi) {
    // symmetric case: b acts strictly right of a's target segment
    // mirror the logic by reflecting positions; reuse the branch above on
    // reversed rows
    auto rev_row = [](const PastingExpr& r) {
      PastingExpr out = r;
      if (out.dir == 1) std::reverse(out.factors.begin(), out.factors.end());
      return out;
    };
    auto swapped = try_swap(rev_row(a), rev_row(b));
    if (!swapped) return std::nullopt;
    return std::make_pair(rev_row(swapped->first), rev_row(swapped->second));
  }
  return std::nullopt;
}

std::string expr_key(const PastingExpr& e) { return e.sexpr(); }

}  // namespace

bool expr_equal(const PastingExpr& a, const PastingExpr& b,
                int interchange_depth) {
  PastingExpr na = normalize(a), nb = normalize(b);
  if (na == nb) return true;
  if (na.dim() != nb.dim()) return false;
  if (na.dim() < 2) return false;
  if (na.dim() >= 3) {
    // compare cap-dimension chains slot by slot, searching interchange
    // inside each slice
    auto ca = na.dir == na.dim() ? na.factors : std::vector<PastingExpr>{na};
    auto cb = nb.dir == nb.dim() ? nb.factors : std::vector<PastingExpr>{nb};
    if (ca.size() != cb.size()) return false;
    for (size_t i = 0; i < ca.size(); ++i)
      if (!expr_equal(ca[i], cb[i], interchange_depth)) return false;
    return true;
  }

  // dim 2: whiskerized rows modulo independent-row swaps, searched by BFS
  auto to_rows = [](const PastingExpr& e) {
    std::vector<PastingExpr> rows;
    for (const auto& r : rows_of(e))
      for (auto& w : whiskerize(r)) rows.push_back(normalize(w));
    return rows;
  };
  std::vector<PastingExpr> ra = to_rows(na), rb = to_rows(nb);
  auto key_of = [](const std::vector<PastingExpr>& rows) {
    std::string k;
    for (const auto& r : rows) k += expr_key(r) + ";";
    return k;
  };
  if (ra.size() != rb.size()) return false;
  std::string target = key_of(rb);
  std::set<std::string> seen{key_of(ra)};
  std::vector<std::vector<PastingExpr>> frontier{ra};
  if (key_of(ra) == target) return true;
  for (int d = 0; d < interchange_depth; ++d) {
    std::vector<std::vector<PastingExpr>> next;
    for (const auto& rows : frontier) {
      for (size_t i = 0; i + 1 < rows.size(); ++i) {
        auto sw = try_swap(rows[i], rows[i + 1]);
        if (!sw) continue;
        auto cand = rows;
        cand[i] = normalize(sw->first);
        cand[i + 1] = normalize(sw->second);
        std::string k = key_of(cand);
        if (k == target) return true;
        if (seen.insert(k).second) next.push_back(std::move(cand));
      }
    }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  return false;
}

// --- kappa ----------------------------------------------------------------

std::string WalkingCell::str() const {
  std::string base =
      top ? "J^" + std::to_string(n) : "J^" + std::to_string(k) + "q" +
                                           std::to_string(l);
  for (int i = 0; i < wraps; ++i) base = "id(" + base + ")";
  return base;
}

WalkingCell kappa(const Face& f) {
  WalkingCell c;
  c.n = f.length();
  int lead = 0;
  while (lead < f.length() && f.word[lead] == Letter::I) ++lead;
  if (lead == f.length()) {
    c.top = true;
    return c;
  }
  c.k = lead;
  c.l = f.word[lead] == Letter::P1 ? 1 : 0;
  c.wraps = f.dim() - lead;
  return c;
}

WalkingCell wcell_boundary(const WalkingCell& c, Side s) {
  if (c.dim() == 0) throw arg_error("wcell_boundary: cell of dimension 0");
  WalkingCell r = c;
  if (c.wraps > 0) {
    --r.wraps;
    return r;
  }
  r.top = false;
  r.k = c.base_dim() - 1;
  r.l = s == Side::source ? 0 : 1;
  return r;
}

namespace {

// boundary of c in direction j (down to dimension j-1)
WalkingCell wcell_bdry_at(const WalkingCell& c, int j, Side s) {
  int d = j - 1;
  if (d >= c.dim()) throw arg_error("wcell_bdry_at: direction exceeds dim");
  WalkingCell r = c;
  if (d >= c.base_dim()) {
    r.wraps = d - c.base_dim();
    return r;
  }
  r.top = false;
  r.k = d;
  r.l = s == Side::source ? 0 : 1;
  r.wraps = 0;
  return r;
}

}  // namespace

WalkingCell wcell_compose(int dir, const WalkingCell& a, const WalkingCell& b) {
  if (a.dim() != b.dim())
    throw arg_error("wcell_compose: dimension mismatch");
  if (dir < 1 || dir > a.dim())
    throw arg_error("wcell_compose: bad direction");
  WalkingCell ta = wcell_bdry_at(a, dir, Side::target);
  WalkingCell sb = wcell_bdry_at(b, dir, Side::source);
  if (!(ta == sb))
    throw arg_error("wcell_compose: cells not composable in direction " +
                    std::to_string(dir));
  // in w(n) any valid composite collapses onto the less degenerate factor
  return a.base_dim() >= b.base_dim() ? a : b;
}

WalkingCell kappa_eval(const PastingExpr& e, int n) {
  if (e.dir == 0) {
    if (e.face.length() != n)
      throw arg_error("kappa_eval: face length does not match n");
    WalkingCell c = kappa(e.face);
    c.wraps += e.wraps;
    return c;
  }
  WalkingCell acc = kappa_eval(e.factors.front(), n);
  for (size_t i = 1; i < e.factors.size(); ++i)
    acc = wcell_compose(e.dir, acc, kappa_eval(e.factors[i], n));
  return acc;
}

KappaReport check_kappa_functorial(int n) {
  if (n < 1 || n > 3)
    throw unsupported_error("check_kappa_functorial: n must be 1..3");
  KappaReport rep;
  rep.n = n;
  // enumerate all faces of I^n
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    Face f;
    int c = code;
    for (int i = 0; i < n; ++i) {
      int v = c % 3;
      c /= 3;
      f.word.push_back(v == 0 ? Letter::P0 : v == 1 ? Letter::P1 : Letter::I);
    }
    ++rep.generators_checked;
    if (f.dim() == 0) continue;
    for (Side s : {Side::source, Side::target}) {
      WalkingCell lhs = kappa_eval(boundary(f, s), n);
      WalkingCell rhs = wcell_boundary(kappa(f), s);
      if (!(lhs == rhs))
        rep.mismatches.push_back(
            "face " + f.str() + (s == Side::source ? " source" : " target") +
            ": kappa(boundary) = " + lhs.str() + " but boundary(kappa) = " +
            rhs.str());
    }
  }
  return rep;
}

// --- grids ----------------------------------------------------------------

int GridCell::dim() const {
  int d = 0;
  for (const auto& l : word) d += l.interval ? 1 : 0;
  return d;
}

std::string GridCell::str() const {
  std::string s;
  for (const auto& l : word) {
    if (!s.empty()) s += ",";
    s += (l.interval ? "[" + std::to_string(l.pos) + "," +
                           std::to_string(l.pos + 1) + "]"
                     : std::to_string(l.pos));
  }
  return s;
}

std::vector<GridCell> grid_cells(const GridSpec& t, int k) {
  std::vector<GridCell> out;
  GridCell cur;
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == t.n()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    if (t.n() - i - 1 >= left) {
      for (int p = 0; p <= t.t[i]; ++p) {
        cur.word.push_back({false, p});
        self(self, i + 1, left);
        cur.word.pop_back();
      }
    }
    if (left > 0) {
      for (int p = 0; p < t.t[i]; ++p) {
        cur.word.push_back({true, p});
        self(self, i + 1, left - 1);
        cur.word.pop_back();
      }
    }
  };
  rec(rec, 0, k);
  return out;
}

std::vector<unsigned long long> grid_counts(const GridSpec& t) {
  // per dimension: sum over coordinate subsets of the interval/point counts
  int n = t.n();
  std::vector<unsigned long long> counts(n + 1, 0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    unsigned long long prod = 1;
    int k = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        prod *= static_cast<unsigned long long>(t.t[i]);
        ++k;
      } else {
        prod *= static_cast<unsigned long long>(t.t[i]) + 1;
      }
    }
    counts[k] += prod;
  }
  return counts;
}

std::string GridWalkingCell::str() const {
  std::string s = "J^" + std::to_string(k) + "[";
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(blocks[i]);
  }
  s += "]";
  if (level) s += "q" + std::to_string(*level);
  for (int i = 0; i < wraps; ++i) s = "id(" + s + ")";
  return s;
}

GridWalkingCell kappa_grid(const GridSpec& t, const GridCell& cell) {
  if (static_cast<int>(cell.word.size()) != t.n())
    throw arg_error("kappa_grid: cell word length does not match the grid");
  for (int i = 0; i < t.n(); ++i) {
    const auto& l = cell.word[i];
    int hi = l.interval ? t.t[i] - 1 : t.t[i];
    if (l.pos < 0 || l.pos > hi)
      throw arg_error("kappa_grid: cell position out of range");
  }
  GridWalkingCell out;
  int lead = 0;
  while (lead < t.n() && cell.word[lead].interval) {
    out.blocks.push_back(cell.word[lead].pos);
    ++lead;
  }
  out.k = lead;
  if (lead < t.n()) {
    out.level = cell.word[lead].pos;
    out.wraps = cell.dim() - lead;
  }
  return out;
}

}  // namespace zz
