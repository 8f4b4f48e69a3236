#pragma once

// Core domain: the four-element De Morgan carrier {t, f, n, b}, its two
// lattice orders, the basic operations, and finite function tables.

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dm4 {

// Canonical index order t=0, f=1, n=2, b=3 (the figures' row/column order).
enum class Elem : std::uint8_t { t = 0, f = 1, n = 2, b = 3 };

inline constexpr std::array<Elem, 4> kElems = {Elem::t, Elem::f, Elem::n, Elem::b};

constexpr std::uint8_t idx(Elem a) { return static_cast<std::uint8_t>(a); }
constexpr Elem elem(std::uint8_t i) { return static_cast<Elem>(i & 3); }

// Two-bit coordinates: tru(a) = "a is true" (a in {t,b}), fls(a) = "a is false"
// (a in {f,b}). Truth order is (tru up, fls down); information order is
// (tru up, fls up).
constexpr bool tru(Elem a) { return a == Elem::t || a == Elem::b; }
constexpr bool fls(Elem a) { return a == Elem::f || a == Elem::b; }

constexpr Elem from_bits(bool t_, bool f_) {
  return t_ ? (f_ ? Elem::b : Elem::t) : (f_ ? Elem::f : Elem::n);
}

// truth order: bottom f, top t, n and b incomparable
constexpr bool leq(Elem a, Elem b) { return tru(a) <= tru(b) && fls(a) >= fls(b); }
// information order: bottom n, top b, t and f incomparable
constexpr bool infleq(Elem a, Elem b) { return tru(a) <= tru(b) && fls(a) <= fls(b); }

constexpr Elem meet(Elem a, Elem b) { return from_bits(tru(a) && tru(b), fls(a) || fls(b)); }
constexpr Elem join(Elem a, Elem b) { return from_bits(tru(a) || tru(b), fls(a) && fls(b)); }
constexpr Elem imeet(Elem a, Elem b) { return from_bits(tru(a) && tru(b), fls(a) && fls(b)); }
constexpr Elem ijoin(Elem a, Elem b) { return from_bits(tru(a) || tru(b), fls(a) || fls(b)); }
constexpr Elem neg(Elem a) { return from_bits(fls(a), tru(a)); }
constexpr Elem conf(Elem a) { return from_bits(!fls(a), !tru(a)); }

constexpr char elem_char(Elem a) {
  constexpr const char* cs = "tfnb";
  return cs[idx(a)];
}

inline Elem parse_elem(char c) {
  switch (c) {
    case 't': return Elem::t;
    case 'f': return Elem::f;
    case 'n': return Elem::n;
    case 'b': return Elem::b;
    default: throw std::invalid_argument(std::string("bad element character '") + c + "'");
  }
}

inline constexpr int kMaxArity = 6;

constexpr std::size_t table_size(int arity) {
  std::size_t s = 1;
  for (int i = 0; i < arity; ++i) s *= 4;
  return s;
}

// Total function DM4^n -> DM4 as a packed entry vector, row-major with
// argument 1 most significant.
class FnTable {
 public:
  FnTable() = default;
  FnTable(int arity, std::vector<Elem> entries) : arity_(arity), e_(std::move(entries)) {
    if (arity_ < 1 || arity_ > kMaxArity) throw std::invalid_argument("arity out of range 1..6");
    if (e_.size() != table_size(arity_)) throw std::invalid_argument("entry count != 4^arity");
  }

  template <typename Fn>
  static FnTable from_fn(int arity, Fn&& fn) {
    std::vector<Elem> e(table_size(arity));
    std::array<Elem, kMaxArity> args{};
    for (std::size_t i = 0; i < e.size(); ++i) {
      std::size_t rest = i;
      for (int k = arity - 1; k >= 0; --k) {
        args[k] = elem(rest & 3);
        rest >>= 2;
      }
      e[i] = fn(std::span<const Elem>(args.data(), arity));
    }
    return FnTable(arity, std::move(e));
  }

  static FnTable constant(int arity, Elem v) {
    return FnTable(arity, std::vector<Elem>(table_size(arity), v));
  }

  static FnTable projection(int arity, int k) {
    if (k < 1 || k > arity) throw std::invalid_argument("projection index out of range");
    return from_fn(arity, [k](std::span<const Elem> a) { return a[k - 1]; });
  }

  int arity() const { return arity_; }
  std::size_t size() const { return e_.size(); }
  const std::vector<Elem>& entries() const { return e_; }
  Elem entry(std::size_t i) const { return e_[i]; }

  static std::size_t index_of(std::span<const Elem> args) {
    std::size_t i = 0;
    for (Elem a : args) i = (i << 2) | idx(a);
    return i;
  }
  static std::size_t index_of(std::initializer_list<Elem> args) {
    return index_of(std::span<const Elem>(args.begin(), args.size()));
  }

  Elem eval(std::span<const Elem> args) const {
    if (static_cast<int>(args.size()) != arity_)
      throw std::invalid_argument("eval: argument count != arity");
    return e_[index_of(args)];
  }
  Elem eval(std::initializer_list<Elem> args) const {
    return eval(std::span<const Elem>(args.begin(), args.size()));
  }

  friend bool operator==(const FnTable&, const FnTable&) = default;
  friend auto operator<=>(const FnTable& a, const FnTable& b) {
    if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
    return a.e_ <=> b.e_;
  }

 private:
  int arity_ = 1;
  std::vector<Elem> e_ = {Elem::t, Elem::f, Elem::n, Elem::b};
};

// Table text format: lowercase over {t,f,n,b}, length 4^arity, row-major.
inline std::string encode_table(const FnTable& f) {
  std::string s;
  s.reserve(f.size());
  for (Elem a : f.entries()) s.push_back(elem_char(a));
  return s;
}

inline FnTable decode_table(std::string_view s, int arity) {
  if (arity < 1 || arity > kMaxArity) throw std::invalid_argument("arity out of range 1..6");
  std::vector<Elem> e;
  e.reserve(table_size(arity));
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    e.push_back(parse_elem(c));
  }
  if (e.size() != table_size(arity))
    throw std::invalid_argument("table string length != 4^arity");
  return FnTable(arity, std::move(e));
}

// g applied to tables h1..hk of common arity n: x -> g(h1(x),...,hk(x)).
inline FnTable compose(const FnTable& g, std::span<const FnTable> hs) {
  if (static_cast<int>(hs.size()) != g.arity())
    throw std::invalid_argument("compose: inner count != outer arity");
  int n = hs.front().arity();
  for (const FnTable& h : hs)
    if (h.arity() != n) throw std::invalid_argument("compose: inner arity mismatch");
  std::vector<Elem> e(table_size(n));
  std::array<Elem, kMaxArity> inner{};
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t k = 0; k < hs.size(); ++k) inner[k] = hs[k].entry(i);
    e[i] = g.entry(FnTable::index_of(std::span<const Elem>(inner.data(), hs.size())));
  }
  return FnTable(n, std::move(e));
}

inline FnTable compose(const FnTable& g, std::initializer_list<FnTable> hs) {
  std::vector<FnTable> v(hs);
  return compose(g, std::span<const FnTable>(v));
}

enum class DualKind { demorgan, conflation, truth_info_swap };

// the unique lattice isomorphism (f,n,b,t) -> (n,f,t,b)
constexpr Elem swap_ti(Elem a) {
  switch (a) {
    case Elem::t: return Elem::b;
    case Elem::f: return Elem::n;
    case Elem::n: return Elem::f;
    case Elem::b: return Elem::t;
  }
  return Elem::t;
}

inline FnTable dual(const FnTable& f, DualKind kind) {
  auto conj = [&](auto outer, auto inner) {
    return FnTable::from_fn(f.arity(), [&](std::span<const Elem> args) {
      std::array<Elem, kMaxArity> a{};
      for (std::size_t i = 0; i < args.size(); ++i) a[i] = inner(args[i]);
      return outer(f.eval(std::span<const Elem>(a.data(), args.size())));
    });
  };
  switch (kind) {
    case DualKind::demorgan: return conj([](Elem a) { return neg(a); }, [](Elem a) { return neg(a); });
    case DualKind::conflation: return conj([](Elem a) { return conf(a); }, [](Elem a) { return conf(a); });
    case DualKind::truth_info_swap: return conj([](Elem a) { return swap_ti(a); }, [](Elem a) { return swap_ti(a); });
  }
  throw std::logic_error("unreachable");
}

}  // namespace dm4
