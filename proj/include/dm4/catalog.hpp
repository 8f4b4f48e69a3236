#pragma once

// Named function catalog. Unary and binary tables come straight from the
// defining text and figures; the ternary families are assembled by a
// piecewise builder that insists every one of the 64 cells is written
// exactly once.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "dm4/core.hpp"

namespace dm4 {

namespace detail {

class TernaryBuilder {
 public:
  void put(Elem x, Elem y, Elem z, Elem v) {
    std::size_t i = FnTable::index_of({x, y, z});
    if (set_[i]) throw std::logic_error("ternary builder: cell assigned twice at index " + std::to_string(i));
    set_[i] = true;
    e_[i] = v;
  }
  // (x, b, z) slice given as a 16-cell binary table, rows = x, columns = z
  void put_b_slice(const FnTable& slice) {
    for (Elem x : kElems)
      for (Elem z : kElems) put(x, Elem::b, z, slice.eval({x, z}));
  }
  FnTable build() const {
    for (std::size_t i = 0; i < 64; ++i)
      if (!set_[i]) throw std::logic_error("ternary builder: cell unassigned at index " + std::to_string(i));
    return FnTable(3, std::vector<Elem>(e_.begin(), e_.end()));
  }

 private:
  std::array<Elem, 64> e_{};
  std::array<bool, 64> set_{};
};

// mhnp3 clauses: rows f for y in {t,f}; the y=n slice from the text; the
// y=b slice from the figure. The other ternary functions replace the y=b
// slice only.
inline FnTable make_ternary(std::string_view b_slice_rows) {
  TernaryBuilder tb;
  for (Elem x : kElems)
    for (Elem z : kElems) {
      tb.put(x, Elem::t, z, Elem::f);
      tb.put(x, Elem::f, z, Elem::f);
    }
  tb.put(Elem::n, Elem::n, Elem::b, Elem::f);
  for (Elem x : {Elem::f, Elem::b})
    for (Elem z : kElems) tb.put(x, Elem::n, z, Elem::f);
  for (Elem z : kElems) tb.put(Elem::t, Elem::n, z, Elem::n);
  for (Elem z : {Elem::t, Elem::n, Elem::f}) tb.put(Elem::n, Elem::n, z, Elem::n);
  tb.put_b_slice(decode_table(b_slice_rows, 2));
  return tb.build();
}

inline std::map<std::string, FnTable> build_catalog() {
  std::map<std::string, FnTable> c;
  auto u = [](auto&& fn) { return FnTable::from_fn(1, [&](std::span<const Elem> a) { return fn(a[0]); }); };
  auto b2 = [](auto&& fn) { return FnTable::from_fn(2, [&](std::span<const Elem> a) { return fn(a[0], a[1]); }); };

  c.emplace("meet", b2([](Elem x, Elem y) { return meet(x, y); }));
  c.emplace("join", b2([](Elem x, Elem y) { return join(x, y); }));
  c.emplace("imeet", b2([](Elem x, Elem y) { return imeet(x, y); }));
  c.emplace("ijoin", b2([](Elem x, Elem y) { return ijoin(x, y); }));
  c.emplace("neg", u([](Elem x) { return neg(x); }));
  c.emplace("conf", u([](Elem x) { return conf(x); }));
  c.emplace("const_t", FnTable::constant(1, Elem::t));
  c.emplace("const_f", FnTable::constant(1, Elem::f));
  c.emplace("const_n", FnTable::constant(1, Elem::n));
  c.emplace("const_b", FnTable::constant(1, Elem::b));
  c.emplace("box", u([](Elem x) { return x == Elem::t ? Elem::t : Elem::f; }));
  c.emplace("delta", u([](Elem x) { return tru(x) ? Elem::t : Elem::f; }));
  c.emplace("nabla", u([](Elem x) { return fls(x) ? Elem::f : Elem::t; }));
  c.emplace("diamond", u([](Elem x) { return x == Elem::f ? Elem::f : Elem::t; }));
  c.emplace("id_b_to_n", u([](Elem x) { return x == Elem::b ? Elem::n : x; }));
  c.emplace("id_n_to_b", u([](Elem x) { return x == Elem::n ? Elem::b : x; }));
  c.emplace("id_n_to_t", u([](Elem x) { return x == Elem::n ? Elem::t : x; }));
  c.emplace("id_b_to_t", u([](Elem x) { return x == Elem::b ? Elem::t : x; }));
  c.emplace("id_n_to_f", u([](Elem x) { return x == Elem::n ? Elem::f : x; }));
  c.emplace("t_n_to_n", u([](Elem x) { return x == Elem::n ? Elem::n : Elem::t; }));
  c.emplace("t_b_to_b", u([](Elem x) { return x == Elem::b ? Elem::b : Elem::t; }));
  c.emplace("t_t_to_n", u([](Elem x) { return x == Elem::t ? Elem::n : Elem::t; }));
  c.emplace("t_t_to_b", u([](Elem x) { return x == Elem::t ? Elem::b : Elem::t; }));

  // figure tables, rows = first argument, row/column order t,f,n,b
  c.emplace("pbp2_1", decode_table("tffb tffb tfnb bffb", 2));
  c.emplace("pbp2_2", decode_table("tfnf tfnf nfnf tfnb", 2));
  c.emplace("mnh2_1", decode_table("ffnb ffnb ffnf ffnb", 2));
  c.emplace("mnh2_2", decode_table("ffnb ffnb ffnb fffb", 2));
  c.emplace("nh2_1", decode_table("ffff ffff ffff ffnf", 2));
  c.emplace("nh2_2", decode_table("ffff ffff ffnf ffnb", 2));
  c.emplace("nh2_3", decode_table("ffff ffff fffb ffff", 2));
  c.emplace("nh2_4", decode_table("ffff ffff ffnb fffb", 2));
  c.emplace("mhnp2", decode_table("tttt tttt nnnf bbfb", 2));
  c.emplace("mnp2_1", decode_table("tttb tttb nnnf bbfb", 2));
  c.emplace("mnp2_2", decode_table("tttt tttt nnnn bbfb", 2));
  c.emplace("mnp2_3", decode_table("ttnt ttnt nnnf bbfb", 2));
  c.emplace("mnp2_4", decode_table("tttt tttt nnnf bbbb", 2));
  c.emplace("np2_1", decode_table("ffnb ffff ffff ffff", 2));
  c.emplace("np2_2", decode_table("ffnb ffff ffff fffb", 2));
  c.emplace("np2_3", decode_table("ffnf ffff ffff ffff", 2));

  c.emplace("mhnp3", make_ternary("bbbb ffff ffff bbfb"));
  c.emplace("mnp3_1", make_ternary("bbbb ffff ffff bbbb"));
  c.emplace("mnp3_2", make_ternary("bbfb ffff ffff bbfb"));
  c.emplace("np3_1", make_ternary("fffb ffff ffff fffb"));
  c.emplace("np3_2", make_ternary("ffff ffff ffff ffff"));

  c.emplace("to_tmax", decode_table("tnnt tttt tttt tnnt", 2));
  c.emplace("to_imax", decode_table("bffb bbbb bbbb bffb", 2));
  c.emplace("eq_tmin", decode_table("bfff fbff ffbf fffb", 2));
  c.emplace("eq_imin", decode_table("tnnn ntnn nntn nnnt", 2));
  c.emplace("eq_tf", b2([](Elem x, Elem y) { return x == y ? Elem::t : Elem::f; }));
  c.emplace("to_tf", b2([](Elem x, Elem y) { return (!tru(x) || tru(y)) ? Elem::t : Elem::f; }));
  c.emplace("to_godel", b2([](Elem x, Elem y) { return leq(x, y) ? Elem::t : y; }));
  c.emplace("delta_nb", b2([](Elem x, Elem y) {
              return (x == Elem::n && y == Elem::b) ? Elem::t : Elem::f;
            }));
  c.emplace("disc", FnTable::from_fn(4, [](std::span<const Elem> a) {
              return a[0] == a[1] ? a[2] : a[3];
            }));
  return c;
}

}  // namespace detail

inline const std::map<std::string, FnTable>& catalog() {
  static const std::map<std::string, FnTable> c = detail::build_catalog();
  return c;
}

inline const FnTable& catalog_lookup(const std::string& name) {
  const auto& c = catalog();
  auto it = c.find(name);
  if (it == c.end()) throw std::invalid_argument("unknown catalog name: " + name);
  return it->second;
}

inline std::optional<std::string> catalog_name_of(const FnTable& f) {
  for (const auto& [name, tbl] : catalog())
    if (tbl == f) return name;
  return std::nullopt;
}

}  // namespace dm4
