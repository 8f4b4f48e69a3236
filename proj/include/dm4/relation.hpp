#pragma once

// Binary relations over DM4 as 16-bit masks; pair (a,b) sits at bit
// 4*idx(a) + idx(b).

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "dm4/core.hpp"

namespace dm4 {

struct BinaryRelation16 {
  std::uint16_t mask = 0;

  constexpr BinaryRelation16() = default;
  constexpr explicit BinaryRelation16(std::uint16_t m) : mask(m) {}

  static constexpr int bit(Elem a, Elem b) { return 4 * idx(a) + idx(b); }

  constexpr bool contains(Elem a, Elem b) const { return (mask >> bit(a, b)) & 1; }
  constexpr void add(Elem a, Elem b) { mask = static_cast<std::uint16_t>(mask | (1u << bit(a, b))); }
  constexpr int size() const { return __builtin_popcount(mask); }

  friend constexpr bool operator==(BinaryRelation16, BinaryRelation16) = default;
  friend constexpr auto operator<=>(BinaryRelation16 a, BinaryRelation16 b) { return a.mask <=> b.mask; }

  static BinaryRelation16 of(std::initializer_list<std::pair<Elem, Elem>> pairs) {
    BinaryRelation16 r;
    for (auto [a, b] : pairs) r.add(a, b);
    return r;
  }
  static BinaryRelation16 truth_order() {
    BinaryRelation16 r;
    for (Elem a : kElems)
      for (Elem b : kElems)
        if (leq(a, b)) r.add(a, b);
    return r;
  }
  static BinaryRelation16 info_order() {
    BinaryRelation16 r;
    for (Elem a : kElems)
      for (Elem b : kElems)
        if (infleq(a, b)) r.add(a, b);
    return r;
  }
  static BinaryRelation16 graph(const FnTable& u) {
    if (u.arity() != 1) throw std::invalid_argument("graph: unary table required");
    BinaryRelation16 r;
    for (Elem a : kElems) r.add(a, u.eval({a}));
    return r;
  }
  static BinaryRelation16 square(std::initializer_list<Elem> s) {
    BinaryRelation16 r;
    for (Elem a : s)
      for (Elem b : s) r.add(a, b);
    return r;
  }
  static BinaryRelation16 diagonal() {
    BinaryRelation16 r;
    for (Elem a : kElems) r.add(a, a);
    return r;
  }
  static BinaryRelation16 full() { return BinaryRelation16(0xffff); }

  std::vector<std::pair<Elem, Elem>> pairs() const {
    std::vector<std::pair<Elem, Elem>> v;
    for (int p = 0; p < 16; ++p)
      if ((mask >> p) & 1) v.emplace_back(elem(static_cast<std::uint8_t>(p >> 2)), elem(static_cast<std::uint8_t>(p & 3)));
    return v;
  }

  // "tn,bb,ff" with the first character the left component
  std::string str() const {
    std::string s;
    for (auto [a, b] : pairs()) {
      if (!s.empty()) s += ',';
      s += elem_char(a);
      s += elem_char(b);
    }
    return s.empty() ? "empty" : s;
  }
};

// Accepts the comma-separated pair form or a 16-bit hex mask ("0x...." or
// bare hex digits).
inline BinaryRelation16 parse_relation(std::string_view text) {
  if (text == "empty") return BinaryRelation16();
  auto is_hex = [](std::string_view v) {
    for (char c : v)
      if (!std::isxdigit(static_cast<unsigned char>(c))) return false;
    return !v.empty();
  };
  std::string_view body = text;
  bool hex = false;
  if (body.size() > 2 && body.substr(0, 2) == "0x") {
    body = body.substr(2);
    hex = true;
  } else if (is_hex(body) && body.find_first_of("tfnb") == std::string_view::npos) {
    hex = true;
  }
  if (hex) {
    unsigned long m = std::stoul(std::string(body), nullptr, 16);
    if (m > 0xffff) throw std::invalid_argument("relation mask exceeds 16 bits");
    return BinaryRelation16(static_cast<std::uint16_t>(m));
  }
  BinaryRelation16 r;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
    if (i >= text.size()) break;
    if (i + 1 >= text.size()) throw std::invalid_argument("relation pair needs two characters");
    r.add(parse_elem(text[i]), parse_elem(text[i + 1]));
    i += 2;
  }
  return r;
}

// f preserves R: every coordinatewise application of f to R-pairs lands in R.
inline bool preserves(const FnTable& f, BinaryRelation16 R) {
  const auto pr = R.pairs();
  if (pr.empty()) return true;
  const int n = f.arity();
  const std::size_t m = pr.size();
  std::array<std::size_t, kMaxArity> pick{};
  for (;;) {
    std::size_t li = 0, ri = 0;
    for (int k = 0; k < n; ++k) {
      li = (li << 2) | idx(pr[pick[k]].first);
      ri = (ri << 2) | idx(pr[pick[k]].second);
    }
    if (!R.contains(f.entry(li), f.entry(ri))) return false;
    int k = n - 1;
    while (k >= 0 && ++pick[k] == m) pick[k--] = 0;
    if (k < 0) break;
  }
  return true;
}

}  // namespace dm4
