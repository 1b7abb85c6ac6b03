#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace zz {

using Obj = int;
using Mor = int;
using Cell2 = int;

// Raw tables as parsed from fincat.json, before validation.
struct RawCategory {
  std::vector<std::string> objects;
  struct RawMor {
    std::string id, src, tgt;
  };
  std::vector<RawMor> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;  // obj -> mor
  std::vector<std::array<std::string, 3>> comp;                 // [g, f, gf]
  std::vector<std::pair<std::string, std::string>> isos;        // [f, finv]
};

// A finite category with tabulated composition. Morphism equality is id
// equality; presentations must arrive pre-quotiented. Immutable once
// validated, safe to share across threads.
class FinCategory {
 public:
  static FinCategory validated(const RawCategory& raw, bool infer_isos = false);

  int num_objects() const { return static_cast<int>(obj_names_.size()); }
  int num_morphisms() const { return static_cast<int>(mor_src_.size()); }

  Obj src(Mor f) const { return mor_src_[f]; }
  Obj tgt(Mor f) const { return mor_tgt_[f]; }
  Mor identity(Obj x) const { return identity_[x]; }
  bool is_identity(Mor f) const { return identity_[mor_src_[f]] == f && mor_src_[f] == mor_tgt_[f]; }

  bool composable(Mor g, Mor f) const { return tgt(f) == src(g); }
  // comp_table lookup for g after f; throws arg_error when not composable.
  Mor compose(Mor g, Mor f) const;

  std::optional<Mor> inverse(Mor f) const;
  bool is_iso(Mor f) const { return inverse_[f] >= 0; }

  const std::string& obj_name(Obj x) const { return obj_names_[x]; }
  const std::string& mor_name(Mor f) const { return mor_names_[f]; }
  std::optional<Obj> obj_by_name(const std::string& name) const;
  std::optional<Mor> mor_by_name(const std::string& name) const;

  std::vector<Mor> hom(Obj x, Obj y) const;

 private:
  FinCategory() = default;

  std::vector<std::string> obj_names_;
  std::vector<std::string> mor_names_;
  std::vector<Obj> mor_src_, mor_tgt_;
  std::vector<Mor> identity_;       // per object
  std::vector<Mor> inverse_;        // per morphism, -1 if not flagged
  std::vector<Mor> comp_;           // dense |mor|^2 table, -1 where undefined
  Mor comp_at(Mor g, Mor f) const { return comp_[static_cast<size_t>(g) * mor_src_.size() + f]; }
};

// Raw fin2cat.json tables: the underlying category plus 2-cell data.
struct RawTwoCategory {
  RawCategory underlying;
  struct RawCell {
    std::string id, src, tgt;  // src/tgt are 1-morphism ids
  };
  std::vector<RawCell> two_cells;
  std::vector<std::array<std::string, 3>> vcomp;  // [b, a, b.a]
  std::vector<std::array<std::string, 3>> hcomp;  // [b, a, b.a]
  std::vector<std::pair<std::string, std::string>> identity2;  // mor -> cell
};

// A finite strict 2-category with tabulated vertical and horizontal
// composition; interchange is checked exhaustively at validation.
class FinTwoCategory {
 public:
  static FinTwoCategory validated(const RawTwoCategory& raw);

  const FinCategory& underlying() const { return cat_; }

  int num_cells() const { return static_cast<int>(cell_src_.size()); }
  Mor cell_src(Cell2 a) const { return cell_src_[a]; }
  Mor cell_tgt(Cell2 a) const { return cell_tgt_[a]; }
  Cell2 identity2(Mor f) const { return identity2_[f]; }
  bool is_identity2(Cell2 a) const { return identity2_[cell_src_[a]] == a && cell_src_[a] == cell_tgt_[a]; }

  // b after a along a shared 1-morphism; throws arg_error otherwise.
  Cell2 vcomp(Cell2 b, Cell2 a) const;
  // b after a along a shared object; throws arg_error otherwise.
  Cell2 hcomp(Cell2 b, Cell2 a) const;

  const std::string& cell_name(Cell2 a) const { return cell_names_[a]; }
  std::optional<Cell2> cell_by_name(const std::string& name) const;

  std::vector<Cell2> cells_between(Mor u, Mor v) const;

  // Reverses 1-morphisms (and therefore the order of hcomp).
  FinTwoCategory op1() const;

 private:
  FinTwoCategory() = default;

  FinCategory cat_;
  std::vector<std::string> cell_names_;
  std::vector<Mor> cell_src_, cell_tgt_;
  std::vector<Cell2> identity2_;  // per 1-morphism
  std::vector<Cell2> vcomp_, hcomp_;
  Cell2 vcomp_at(Cell2 b, Cell2 a) const { return vcomp_[static_cast<size_t>(b) * cell_src_.size() + a]; }
  Cell2 hcomp_at(Cell2 b, Cell2 a) const { return hcomp_[static_cast<size_t>(b) * cell_src_.size() + a]; }
};

struct AdjunctionDatum {
  Mor left = -1;
  Mor right = -1;
  Cell2 unit = -1;
  Cell2 counit = -1;
};

// True iff both snake composites evaluate to the respective identities.
// Throws arg_error when the datum's boundaries don't match Dfn adj.
bool check_adjunction(const FinTwoCategory& D, const AdjunctionDatum& d);

// For every 1-morphism, brute-force search for adjunction data.
struct SinisterReport {
  std::map<Mor, AdjunctionDatum> table;   // one datum per 1-morphism
  std::optional<Mor> failure;             // first 1-morphism with no datum
  bool ok() const { return !failure.has_value(); }
};
SinisterReport check_sinister(const FinTwoCategory& D);

}  // namespace zz
