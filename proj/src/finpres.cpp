#include "finpres.hpp"

#include <algorithm>
#include <type_traits>

namespace zz {

namespace {

template <typename T>
std::map<std::string, int> index_names(const std::vector<T>& names,
                                       const char* what) {
  std::map<std::string, int> idx;
  for (size_t i = 0; i < names.size(); ++i) {
    std::string key;
    if constexpr (std::is_same_v<T, std::string>) {
      key = names[i];
    } else {
      key = names[i].id;
    }
    if (!idx.emplace(key, static_cast<int>(i)).second)
      throw parse_error(std::string("duplicate ") + what + " id '" + key + "'");
  }
  return idx;
}

}  // namespace

Mor FinCategory::compose(Mor g, Mor f) const {
  if (!composable(g, f))
    throw arg_error("not composable: tgt(" + mor_names_[f] + ") != src(" +
                    mor_names_[g] + ")");
  Mor gf = comp_at(g, f);
  if (gf < 0)
    throw arg_error("missing composite for (" + mor_names_[g] + ", " +
                    mor_names_[f] + ")");
  return gf;
}

std::optional<Mor> FinCategory::inverse(Mor f) const {
  if (inverse_[f] < 0) return std::nullopt;
  return inverse_[f];
}

std::optional<Obj> FinCategory::obj_by_name(const std::string& name) const {
  auto it = std::find(obj_names_.begin(), obj_names_.end(), name);
  if (it == obj_names_.end()) return std::nullopt;
  return static_cast<Obj>(it - obj_names_.begin());
}

std::optional<Mor> FinCategory::mor_by_name(const std::string& name) const {
  auto it = std::find(mor_names_.begin(), mor_names_.end(), name);
  if (it == mor_names_.end()) return std::nullopt;
  return static_cast<Mor>(it - mor_names_.begin());
}

std::vector<Mor> FinCategory::hom(Obj x, Obj y) const {
  std::vector<Mor> out;
  for (Mor f = 0; f < num_morphisms(); ++f)
    if (src(f) == x && tgt(f) == y) out.push_back(f);
  return out;
}

FinCategory FinCategory::validated(const RawCategory& raw, bool infer_isos) {
  FinCategory c;
  c.obj_names_ = raw.objects;
  auto obj_idx = index_names(c.obj_names_, "object");
  auto mor_idx = index_names(raw.morphisms, "morphism");

  auto obj_of = [&](const std::string& s) -> Obj {
    auto it = obj_idx.find(s);
    if (it == obj_idx.end()) throw parse_error("unknown object id '" + s + "'");
    return it->second;
  };
  auto mor_of = [&](const std::string& s) -> Mor {
    auto it = mor_idx.find(s);
    if (it == mor_idx.end())
      throw parse_error("unknown morphism id '" + s + "'");
    return it->second;
  };

  const int nm = static_cast<int>(raw.morphisms.size());
  c.mor_names_.reserve(nm);
  for (const auto& m : raw.morphisms) {
    c.mor_names_.push_back(m.id);
    c.mor_src_.push_back(obj_of(m.src));
    c.mor_tgt_.push_back(obj_of(m.tgt));
  }

  c.identity_.assign(c.obj_names_.size(), -1);
  for (const auto& [o, m] : raw.identities) {
    Obj x = obj_of(o);
    Mor f = mor_of(m);
    if (c.identity_[x] >= 0)
      throw parse_error("two identities declared for object '" + o + "'");
    c.identity_[x] = f;
  }

  c.comp_.assign(static_cast<size_t>(nm) * nm, -1);
  for (const auto& t : raw.comp) {
    Mor g = mor_of(t[0]), f = mor_of(t[1]), gf = mor_of(t[2]);
    c.comp_[static_cast<size_t>(g) * nm + f] = gf;
  }

  c.inverse_.assign(nm, -1);
  for (const auto& [f, finv] : raw.isos) {
    c.inverse_[mor_of(f)] = mor_of(finv);
  }

  std::vector<std::string> bad;
  auto note = [&](std::string msg) { bad.push_back(std::move(msg)); };

  for (Obj x = 0; x < c.num_objects(); ++x) {
    if (c.identity_[x] < 0) {
      note("object '" + c.obj_names_[x] + "' has no identity");
      continue;
    }
    Mor i = c.identity_[x];
    if (c.mor_src_[i] != x || c.mor_tgt_[i] != x)
      note("identity of '" + c.obj_names_[x] + "' is not an endomorphism");
  }

  if (!bad.empty()) throw axiom_error(std::move(bad));

  // totality on composable pairs, sources/targets of composites
  for (Mor g = 0; g < nm; ++g)
    for (Mor f = 0; f < nm; ++f) {
      Mor gf = c.comp_[static_cast<size_t>(g) * nm + f];
      if (c.composable(g, f)) {
        if (gf < 0)
          note("missing composite for composable pair (" + c.mor_names_[g] +
               ", " + c.mor_names_[f] + ")");
        else if (c.mor_src_[gf] != c.mor_src_[f] ||
                 c.mor_tgt_[gf] != c.mor_tgt_[g])
          note("composite (" + c.mor_names_[g] + ", " + c.mor_names_[f] +
               ") has wrong boundary");
      } else if (gf >= 0) {
        note("composite declared for non-composable pair (" + c.mor_names_[g] +
             ", " + c.mor_names_[f] + ")");
      }
    }

  // unit laws
  for (Mor f = 0; f < nm && bad.empty(); ++f) {
    Mor i_src = c.identity_[c.mor_src_[f]];
    Mor i_tgt = c.identity_[c.mor_tgt_[f]];
    if (c.comp_[static_cast<size_t>(f) * nm + i_src] != f)
      note("unit law fails: " + c.mor_names_[f] + " . id != " +
           c.mor_names_[f]);
    if (c.comp_[static_cast<size_t>(i_tgt) * nm + f] != f)
      note("unit law fails: id . " + c.mor_names_[f] + " != " +
           c.mor_names_[f]);
  }

  // associativity on every composable triple, with the witness triple
  if (bad.empty()) {
    for (Mor h = 0; h < nm; ++h)
      for (Mor g = 0; g < nm; ++g) {
        if (!c.composable(h, g)) continue;
        Mor hg = c.comp_at(h, g);
        for (Mor f = 0; f < nm; ++f) {
          if (!c.composable(g, f)) continue;
          Mor gf = c.comp_at(g, f);
          if (c.comp_at(h, gf) != c.comp_at(hg, f)) {
            note("associativity fails on triple (" + c.mor_names_[h] + ", " +
                 c.mor_names_[g] + ", " + c.mor_names_[f] + ")");
          }
        }
      }
  }

  if (infer_isos) {
    for (Mor f = 0; f < nm; ++f) {
      if (c.inverse_[f] >= 0) continue;
      for (Mor g = 0; g < nm; ++g) {
        if (!c.composable(g, f) || !c.composable(f, g)) continue;
        if (c.comp_at(g, f) == c.identity_[c.mor_src_[f]] &&
            c.comp_at(f, g) == c.identity_[c.mor_tgt_[f]]) {
          c.inverse_[f] = g;
          break;
        }
      }
    }
  }

  // declared isos must actually invert
  for (Mor f = 0; f < nm; ++f) {
    Mor g = c.inverse_[f];
    if (g < 0) continue;
    if (!c.composable(g, f) || !c.composable(f, g)) {
      note("iso flag on '" + c.mor_names_[f] + "' has non-composable inverse");
      continue;
    }
    if (c.comp_at(g, f) != c.identity_[c.mor_src_[f]] ||
        c.comp_at(f, g) != c.identity_[c.mor_tgt_[f]])
      note("iso flag on '" + c.mor_names_[f] +
           "' does not compose to identities");
  }

  if (!bad.empty()) throw axiom_error(std::move(bad));
  return c;
}

Cell2 FinTwoCategory::vcomp(Cell2 b, Cell2 a) const {
  if (cell_tgt_[a] != cell_src_[b])
    throw arg_error("vcomp: tgt(" + cell_names_[a] + ") != src(" +
                    cell_names_[b] + ")");
  Cell2 r = vcomp_at(b, a);
  if (r < 0)
    throw arg_error("missing vcomp for (" + cell_names_[b] + ", " +
                    cell_names_[a] + ")");
  return r;
}

Cell2 FinTwoCategory::hcomp(Cell2 b, Cell2 a) const {
  if (cat_.tgt(cell_src_[a]) != cat_.src(cell_src_[b]))
    throw arg_error("hcomp: cells not composable along an object");
  Cell2 r = hcomp_at(b, a);
  if (r < 0)
    throw arg_error("missing hcomp for (" + cell_names_[b] + ", " +
                    cell_names_[a] + ")");
  return r;
}

std::optional<Cell2> FinTwoCategory::cell_by_name(
    const std::string& name) const {
  auto it = std::find(cell_names_.begin(), cell_names_.end(), name);
  if (it == cell_names_.end()) return std::nullopt;
  return static_cast<Cell2>(it - cell_names_.begin());
}

std::vector<Cell2> FinTwoCategory::cells_between(Mor u, Mor v) const {
  std::vector<Cell2> out;
  for (Cell2 a = 0; a < num_cells(); ++a)
    if (cell_src_[a] == u && cell_tgt_[a] == v) out.push_back(a);
  return out;
}

FinTwoCategory FinTwoCategory::validated(const RawTwoCategory& raw) {
  FinTwoCategory D;
  D.cat_ = FinCategory::validated(raw.underlying);
  const FinCategory& C = D.cat_;

  auto cell_idx = index_names(raw.two_cells, "2-cell");
  auto cell_of = [&](const std::string& s) -> Cell2 {
    auto it = cell_idx.find(s);
    if (it == cell_idx.end()) throw parse_error("unknown 2-cell id '" + s + "'");
    return it->second;
  };
  auto mor_of = [&](const std::string& s) -> Mor {
    auto m = C.mor_by_name(s);
    if (!m) throw parse_error("unknown morphism id '" + s + "'");
    return *m;
  };

  const int nc = static_cast<int>(raw.two_cells.size());
  std::vector<std::string> bad;
  auto note = [&](std::string msg) { bad.push_back(std::move(msg)); };

  for (const auto& cell : raw.two_cells) {
    D.cell_names_.push_back(cell.id);
    Mor u = mor_of(cell.src), v = mor_of(cell.tgt);
    if (C.src(u) != C.src(v) || C.tgt(u) != C.tgt(v))
      note("2-cell '" + cell.id + "' has non-parallel boundary");
    D.cell_src_.push_back(u);
    D.cell_tgt_.push_back(v);
  }
  if (!bad.empty()) throw axiom_error(std::move(bad));

  D.identity2_.assign(C.num_morphisms(), -1);
  for (const auto& [m, cl] : raw.identity2) {
    D.identity2_[mor_of(m)] = cell_of(cl);
  }
  for (Mor f = 0; f < C.num_morphisms(); ++f) {
    if (D.identity2_[f] < 0) {
      note("morphism '" + C.mor_name(f) + "' has no identity 2-cell");
    } else {
      Cell2 i = D.identity2_[f];
      if (D.cell_src_[i] != f || D.cell_tgt_[i] != f)
        note("identity2 of '" + C.mor_name(f) + "' is not an endo-cell");
    }
  }
  if (!bad.empty()) throw axiom_error(std::move(bad));

  D.vcomp_.assign(static_cast<size_t>(nc) * nc, -1);
  for (const auto& t : raw.vcomp)
    D.vcomp_[static_cast<size_t>(cell_of(t[0])) * nc + cell_of(t[1])] =
        cell_of(t[2]);
  D.hcomp_.assign(static_cast<size_t>(nc) * nc, -1);
  for (const auto& t : raw.hcomp)
    D.hcomp_[static_cast<size_t>(cell_of(t[0])) * nc + cell_of(t[1])] =
        cell_of(t[2]);

  auto vcomposable = [&](Cell2 b, Cell2 a) {
    return D.cell_tgt_[a] == D.cell_src_[b];
  };
  auto hcomposable = [&](Cell2 b, Cell2 a) {
    return C.tgt(D.cell_src_[a]) == C.src(D.cell_src_[b]);
  };

  for (Cell2 b = 0; b < nc; ++b)
    for (Cell2 a = 0; a < nc; ++a) {
      Cell2 v = D.vcomp_at(b, a);
      if (vcomposable(b, a)) {
        if (v < 0)
          note("missing vcomp for (" + D.cell_names_[b] + ", " +
               D.cell_names_[a] + ")");
        else if (D.cell_src_[v] != D.cell_src_[a] ||
                 D.cell_tgt_[v] != D.cell_tgt_[b])
          note("vcomp (" + D.cell_names_[b] + ", " + D.cell_names_[a] +
               ") has wrong boundary");
      } else if (v >= 0) {
        note("vcomp declared for non-composable pair (" + D.cell_names_[b] +
             ", " + D.cell_names_[a] + ")");
      }
      Cell2 h = D.hcomp_at(b, a);
      if (hcomposable(b, a)) {
        if (h < 0)
          note("missing hcomp for (" + D.cell_names_[b] + ", " +
               D.cell_names_[a] + ")");
        else {
          Mor want_src = C.compose(D.cell_src_[b], D.cell_src_[a]);
          Mor want_tgt = C.compose(D.cell_tgt_[b], D.cell_tgt_[a]);
          if (D.cell_src_[h] != want_src || D.cell_tgt_[h] != want_tgt)
            note("hcomp (" + D.cell_names_[b] + ", " + D.cell_names_[a] +
                 ") has wrong boundary");
        }
      } else if (h >= 0) {
        note("hcomp declared for non-composable pair (" + D.cell_names_[b] +
             ", " + D.cell_names_[a] + ")");
      }
    }
  if (!bad.empty()) throw axiom_error(std::move(bad));

  // units and associativity, both compositions
  for (Cell2 a = 0; a < nc; ++a) {
    Cell2 i_src = D.identity2_[D.cell_src_[a]];
    Cell2 i_tgt = D.identity2_[D.cell_tgt_[a]];
    if (D.vcomp_at(a, i_src) != a || D.vcomp_at(i_tgt, a) != a)
      note("vcomp unit law fails at '" + D.cell_names_[a] + "'");
    Cell2 e_src = D.identity2_[C.identity(C.src(D.cell_src_[a]))];
    Cell2 e_tgt = D.identity2_[C.identity(C.tgt(D.cell_src_[a]))];
    if (D.hcomp_at(a, e_src) != a || D.hcomp_at(e_tgt, a) != a)
      note("hcomp unit law fails at '" + D.cell_names_[a] + "'");
  }
  for (Cell2 cc = 0; cc < nc; ++cc)
    for (Cell2 bb = 0; bb < nc; ++bb)
      for (Cell2 aa = 0; aa < nc; ++aa) {
        if (vcomposable(cc, bb) && vcomposable(bb, aa)) {
          if (D.vcomp_at(cc, D.vcomp_at(bb, aa)) !=
              D.vcomp_at(D.vcomp_at(cc, bb), aa))
            note("vcomp associativity fails on (" + D.cell_names_[cc] + ", " +
                 D.cell_names_[bb] + ", " + D.cell_names_[aa] + ")");
        }
        if (hcomposable(cc, bb) && hcomposable(bb, aa)) {
          if (D.hcomp_at(cc, D.hcomp_at(bb, aa)) !=
              D.hcomp_at(D.hcomp_at(cc, bb), aa))
            note("hcomp associativity fails on (" + D.cell_names_[cc] + ", " +
                 D.cell_names_[bb] + ", " + D.cell_names_[aa] + ")");
        }
      }
  if (!bad.empty()) throw axiom_error(std::move(bad));

  // interchange: (b .v a) .h (d .v c) vs (b .h d) .v (a .h c)
  for (Cell2 b = 0; b < nc; ++b)
    for (Cell2 a = 0; a < nc; ++a) {
      if (!vcomposable(b, a)) continue;
      for (Cell2 d = 0; d < nc; ++d)
        for (Cell2 cl = 0; cl < nc; ++cl) {
          if (!vcomposable(d, cl)) continue;
          if (!hcomposable(b, d) || !hcomposable(a, cl)) continue;
          Cell2 lhs = D.hcomp_at(D.vcomp_at(b, a), D.vcomp_at(d, cl));
          Cell2 rhs = D.vcomp_at(D.hcomp_at(b, d), D.hcomp_at(a, cl));
          if (lhs != rhs)
            note("interchange fails on (" + D.cell_names_[b] + ", " +
                 D.cell_names_[a] + ", " + D.cell_names_[d] + ", " +
                 D.cell_names_[cl] + ")");
        }
    }
  if (!bad.empty()) throw axiom_error(std::move(bad));
  return D;
}

FinTwoCategory FinTwoCategory::op1() const {
  FinTwoCategory E = *this;
  // rebuild the underlying category with src/tgt swapped and comp reversed
  RawCategory raw;
  for (Obj x = 0; x < cat_.num_objects(); ++x)
    raw.objects.push_back(cat_.obj_name(x));
  for (Mor f = 0; f < cat_.num_morphisms(); ++f)
    raw.morphisms.push_back({cat_.mor_name(f), cat_.obj_name(cat_.tgt(f)),
                             cat_.obj_name(cat_.src(f))});
  for (Obj x = 0; x < cat_.num_objects(); ++x)
    raw.identities.emplace_back(cat_.obj_name(x),
                                cat_.mor_name(cat_.identity(x)));
  for (Mor g = 0; g < cat_.num_morphisms(); ++g)
    for (Mor f = 0; f < cat_.num_morphisms(); ++f)
      if (cat_.composable(g, f))
        raw.comp.push_back({cat_.mor_name(f), cat_.mor_name(g),
                            cat_.mor_name(cat_.compose(g, f))});
  for (Mor f = 0; f < cat_.num_morphisms(); ++f)
    if (auto inv = cat_.inverse(f))
      raw.isos.emplace_back(cat_.mor_name(f), cat_.mor_name(*inv));
  E.cat_ = FinCategory::validated(raw);

  // 2-cells keep their vertical direction; hcomp flips argument order
  const int nc = num_cells();
  E.hcomp_.assign(static_cast<size_t>(nc) * nc, -1);
  for (Cell2 b = 0; b < nc; ++b)
    for (Cell2 a = 0; a < nc; ++a)
      E.hcomp_[static_cast<size_t>(b) * nc + a] = hcomp_at(a, b);
  return E;
}

bool check_adjunction(const FinTwoCategory& D, const AdjunctionDatum& d) {
  const FinCategory& C = D.underlying();
  if (d.left < 0 || d.right < 0 || d.unit < 0 || d.counit < 0)
    throw arg_error("incomplete adjunction datum");
  Obj x = C.src(d.left), y = C.tgt(d.left);
  if (C.src(d.right) != y || C.tgt(d.right) != x)
    throw arg_error("boundary mismatch: right adjoint not opposite to left");
  if (D.cell_src(d.unit) != C.identity(x) ||
      D.cell_tgt(d.unit) != C.compose(d.right, d.left))
    throw arg_error("boundary mismatch: unit is not id(x) => g.f");
  if (D.cell_src(d.counit) != C.compose(d.left, d.right) ||
      D.cell_tgt(d.counit) != C.identity(y))
    throw arg_error("boundary mismatch: counit is not f.g => id(y)");

  Cell2 idf = D.identity2(d.left), idg = D.identity2(d.right);
  Cell2 snake1 = D.vcomp(D.hcomp(d.counit, idf), D.hcomp(idf, d.unit));
  Cell2 snake2 = D.vcomp(D.hcomp(idg, d.counit), D.hcomp(d.unit, idg));
  return snake1 == idf && snake2 == idg;
}

SinisterReport check_sinister(const FinTwoCategory& D) {
  const FinCategory& C = D.underlying();
  SinisterReport rep;
  for (Mor f = 0; f < C.num_morphisms(); ++f) {
    Obj x = C.src(f), y = C.tgt(f);
    bool found = false;
    for (Mor g : C.hom(y, x)) {
      for (Cell2 unit : D.cells_between(C.identity(x), C.compose(g, f))) {
        for (Cell2 counit : D.cells_between(C.compose(f, g), C.identity(y))) {
          AdjunctionDatum d{f, g, unit, counit};
          if (check_adjunction(D, d)) {
            rep.table[f] = d;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) {
      rep.failure = f;
      return rep;
    }
  }
  return rep;
}

}  // namespace zz
