#pragma once

// Semantic predicates on De Morgan functions, bounded class enumerators, and
// the constructive lemma operations (truth/falsity profiles, combination,
// harmonization, Boolean-cube extension, pointwise-minimal class members).

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "dm4/catalog.hpp"
#include "dm4/core.hpp"

namespace dm4 {

using ElemSet = std::uint8_t;  // bit i = element with index i

constexpr ElemSet kSetB2 = (1u << idx(Elem::t)) | (1u << idx(Elem::f));
constexpr ElemSet kSetK3 = kSetB2 | (1u << idx(Elem::n));
constexpr ElemSet kSetP3 = kSetB2 | (1u << idx(Elem::b));
constexpr ElemSet kSetAll = 0xF;

constexpr bool set_has(ElemSet s, Elem a) { return (s >> idx(a)) & 1; }

struct Predicate {
  bool harmonious = false;
  bool positive = false;
  bool persistent = false;
  bool partially_harmonious = false;
  std::vector<ElemSet> preserve;  // preserves_set constraints

  Predicate& with_harmonious() { harmonious = true; return *this; }
  Predicate& with_positive() { positive = true; return *this; }
  Predicate& with_persistent() { persistent = true; return *this; }
  Predicate& with_partially_harmonious() { partially_harmonious = true; return *this; }
  Predicate& with_preserve(ElemSet s) { preserve.push_back(s); return *this; }

  static Predicate none() { return {}; }

  std::string str() const {
    std::string s;
    auto add = [&](const std::string& part) {
      if (!s.empty()) s += " & ";
      s += part;
    };
    if (harmonious) add("harmonious");
    if (positive) add("positive");
    if (persistent) add("persistent");
    if (partially_harmonious) add("partially-harmonious");
    for (ElemSet e : preserve) {
      std::string names = "{";
      for (Elem a : kElems)
        if (set_has(e, a)) names += elem_char(a);
      add("preserves" + names + "}");
    }
    return s.empty() ? "any" : s;
  }
};

namespace detail {

template <typename Fn>
void for_each_tuple(int n, Fn&& fn) {
  std::array<Elem, kMaxArity> t{};
  std::size_t total = table_size(n);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t rest = i;
    for (int k = n - 1; k >= 0; --k) {
      t[k] = elem(rest & 3);
      rest >>= 2;
    }
    fn(std::span<const Elem>(t.data(), static_cast<std::size_t>(n)), i);
  }
}

inline std::size_t conf_tuple_index(std::size_t i, int n) {
  std::size_t out = 0;
  for (int k = n - 1; k >= 0; --k) {
    Elem a = elem((i >> (2 * k)) & 3);
    out |= static_cast<std::size_t>(idx(conf(a))) << (2 * k);
  }
  return out;
}

inline bool tuple_in(std::size_t i, int n, ElemSet s) {
  for (int k = 0; k < n; ++k)
    if (!set_has(s, elem((i >> (2 * k)) & 3))) return false;
  return true;
}

inline bool tuple_leq(std::size_t i, std::size_t j, int n) {
  for (int k = 0; k < n; ++k)
    if (!leq(elem((i >> (2 * k)) & 3), elem((j >> (2 * k)) & 3))) return false;
  return true;
}

inline bool tuple_infleq(std::size_t i, std::size_t j, int n) {
  for (int k = 0; k < n; ++k)
    if (!infleq(elem((i >> (2 * k)) & 3), elem((j >> (2 * k)) & 3))) return false;
  return true;
}

}  // namespace detail

inline bool is_harmonious(const FnTable& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.entry(detail::conf_tuple_index(i, f.arity())) != conf(f.entry(i))) return false;
  return true;
}

inline bool is_positive(const FnTable& f) {
  int n = f.arity();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if (detail::tuple_leq(i, j, n) && !leq(f.entry(i), f.entry(j))) return false;
  return true;
}

inline bool is_persistent(const FnTable& f) {
  int n = f.arity();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if (detail::tuple_infleq(i, j, n) && !infleq(f.entry(i), f.entry(j))) return false;
  return true;
}

inline bool preserves_set(const FnTable& f, ElemSet s) {
  int n = f.arity();
  for (std::size_t i = 0; i < f.size(); ++i)
    if (detail::tuple_in(i, n, s) && !set_has(s, f.entry(i))) return false;
  return true;
}

inline bool is_partially_harmonious(const FnTable& f) {
  int n = f.arity();
  for (ElemSet s : {kSetK3, kSetP3})
    for (std::size_t i = 0; i < f.size(); ++i)
      if (detail::tuple_in(i, n, s) &&
          f.entry(detail::conf_tuple_index(i, n)) != conf(f.entry(i)))
        return false;
  return true;
}

inline bool predicate_check(const FnTable& f, const Predicate& p) {
  if (p.harmonious && !is_harmonious(f)) return false;
  if (p.positive && !is_positive(f)) return false;
  if (p.persistent && !is_persistent(f)) return false;
  if (p.partially_harmonious && !is_partially_harmonious(f)) return false;
  for (ElemSet s : p.preserve)
    if (!preserves_set(f, s)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// class enumeration: backtracking over cells in canonical index order, so the
// stream is emitted in encoded-table order. Admissibility is checked against
// every already-assigned cell (orders in both directions, harmony partners,
// set constraints), which is exactly the constraint propagation the caps are
// sized for.

class ClassEnumerator {
 public:
  ClassEnumerator(int arity, Predicate p) : n_(arity), p_(std::move(p)) {
    if (arity < 1 || arity > 3) throw std::invalid_argument("enumerator arity out of range 1..3");
    cells_ = table_size(n_);
    local_.assign(cells_, kSetAll);
    for (std::size_t i = 0; i < cells_; ++i) {
      for (ElemSet s : p_.preserve)
        if (detail::tuple_in(i, n_, s)) local_[i] &= s;
      if (p_.harmonious && detail::conf_tuple_index(i, n_) == i)
        local_[i] &= kSetB2;  // self-conjugate tuple forces a fixed point of conflation
      conf_of_.push_back(detail::conf_tuple_index(i, n_));
    }
  }

  // product of per-cell locally-admissible counts, with conflation-orbit
  // partners counted once and (positive & persistent) non-Boolean cells
  // counted once (Uniqueness Lemma). Saturates at 2^62.
  std::uint64_t local_bound() const {
    constexpr std::uint64_t kSat = 1ull << 62;
    std::uint64_t b = 1;
    for (std::size_t i = 0; i < cells_; ++i) {
      if (p_.harmonious && conf_of_[i] < i) continue;  // orbit partner: forced
      if (p_.positive && p_.persistent && !detail::tuple_in(i, n_, kSetB2)) continue;
      std::uint64_t c = static_cast<std::uint64_t>(__builtin_popcount(local_[i]));
      if (c == 0) return 0;
      if (b > kSat / c) return kSat;
      b *= c;
    }
    return b;
  }

  struct Budget {
    std::uint64_t max_outputs;
    std::uint64_t max_nodes;
  };

  // Visits every table in the class in encoded order. Returns false if a
  // budget was exhausted (sink results up to that point are valid).
  bool enumerate(const std::function<void(const FnTable&)>& sink, Budget budget) const {
    std::vector<Elem> vals(cells_, Elem::t);
    std::uint64_t outputs = 0, nodes = 0;
    bool ok = rec(0, vals, sink, budget, outputs, nodes);
    return ok;
  }

  std::optional<std::uint64_t> count(Budget budget) const {
    std::uint64_t c = 0;
    bool ok = enumerate([&](const FnTable&) { ++c; }, budget);
    if (!ok) return std::nullopt;
    return c;
  }

  ElemSet admissible(const std::vector<Elem>& vals, std::size_t upto, std::size_t cell) const {
    ElemSet adm = local_[cell];
    if ((p_.harmonious || p_.partially_harmonious) && conf_of_[cell] < upto) {
      bool applies = p_.harmonious;
      if (p_.partially_harmonious && !applies)
        applies = (detail::tuple_in(cell, n_, kSetK3) || detail::tuple_in(cell, n_, kSetP3));
      if (applies) adm &= static_cast<ElemSet>(1u << idx(conf(vals[conf_of_[cell]])));
    }
    if (p_.partially_harmonious && conf_of_[cell] == cell &&
        (detail::tuple_in(cell, n_, kSetK3) || detail::tuple_in(cell, n_, kSetP3)))
      adm &= kSetB2;
    if (!adm) return 0;
    for (std::size_t j = 0; j < upto && adm; ++j) {
      if (p_.positive) {
        if (detail::tuple_leq(j, cell, n_))
          for (Elem v : kElems)
            if (set_has(adm, v) && !leq(vals[j], v)) adm &= static_cast<ElemSet>(~(1u << idx(v)));
        if (detail::tuple_leq(cell, j, n_))
          for (Elem v : kElems)
            if (set_has(adm, v) && !leq(v, vals[j])) adm &= static_cast<ElemSet>(~(1u << idx(v)));
      }
      if (p_.persistent) {
        if (detail::tuple_infleq(j, cell, n_))
          for (Elem v : kElems)
            if (set_has(adm, v) && !infleq(vals[j], v)) adm &= static_cast<ElemSet>(~(1u << idx(v)));
        if (detail::tuple_infleq(cell, j, n_))
          for (Elem v : kElems)
            if (set_has(adm, v) && !infleq(v, vals[j])) adm &= static_cast<ElemSet>(~(1u << idx(v)));
      }
    }
    return adm;
  }

  // admissibility against an arbitrary set of already-assigned cells
  ElemSet admissible_against(const std::vector<Elem>& vals, const std::vector<std::size_t>& assigned,
                             std::size_t cell) const {
    ElemSet adm = local_[cell];
    bool harmony_applies =
        p_.harmonious || (p_.partially_harmonious && (detail::tuple_in(cell, n_, kSetK3) ||
                                                      detail::tuple_in(cell, n_, kSetP3)));
    if (p_.partially_harmonious && conf_of_[cell] == cell && harmony_applies) adm &= kSetB2;
    for (std::size_t j : assigned) {
      if (harmony_applies && j == conf_of_[cell] && j != cell)
        adm &= static_cast<ElemSet>(1u << idx(conf(vals[j])));
      if (p_.positive) {
        if (detail::tuple_leq(j, cell, n_))
          for (Elem v : kElems)
            if (set_has(adm, v) && !leq(vals[j], v)) adm &= static_cast<ElemSet>(~(1u << idx(v)));
        if (detail::tuple_leq(cell, j, n_))
          for (Elem v : kElems)
            if (set_has(adm, v) && !leq(v, vals[j])) adm &= static_cast<ElemSet>(~(1u << idx(v)));
      }
      if (p_.persistent) {
        if (detail::tuple_infleq(j, cell, n_))
          for (Elem v : kElems)
            if (set_has(adm, v) && !infleq(vals[j], v)) adm &= static_cast<ElemSet>(~(1u << idx(v)));
        if (detail::tuple_infleq(cell, j, n_))
          for (Elem v : kElems)
            if (set_has(adm, v) && !infleq(v, vals[j])) adm &= static_cast<ElemSet>(~(1u << idx(v)));
      }
      if (!adm) break;
    }
    return adm;
  }

  int arity() const { return n_; }
  const Predicate& predicate() const { return p_; }

 private:
  bool rec(std::size_t cell, std::vector<Elem>& vals, const std::function<void(const FnTable&)>& sink,
           Budget budget, std::uint64_t& outputs, std::uint64_t& nodes) const {
    if (cell == cells_) {
      if (++outputs > budget.max_outputs) return false;
      sink(FnTable(n_, vals));
      return true;
    }
    ElemSet adm = admissible(vals, cell, cell);
    for (Elem v : kElems) {  // index order => encoded order
      if (!set_has(adm, v)) continue;
      if (++nodes > budget.max_nodes) return false;
      vals[cell] = v;
      if (!rec(cell + 1, vals, sink, budget, outputs, nodes)) return false;
    }
    return true;
  }

  int n_;
  Predicate p_;
  std::size_t cells_;
  std::vector<ElemSet> local_;
  std::vector<std::size_t> conf_of_;
};

inline constexpr std::uint64_t kDefaultEnumCap = 1ull << 25;

struct EnumerationRefused : std::runtime_error {
  std::uint64_t bound;
  explicit EnumerationRefused(std::uint64_t b)
      : std::runtime_error("enumeration refused: class bound " + std::to_string(b) +
                           " exceeds the cap"),
        bound(b) {}
};

// Streams the n-ary tables of the class in canonical encoded order. Refuses
// up front when the class is provably larger than the cap; for order-based
// predicates the local product bound is a gross overestimate, so a count-only
// probe decides.
inline std::uint64_t enumerate_functions(int n, const Predicate& p,
                                         const std::function<void(const FnTable&)>& sink,
                                         std::uint64_t cap = kDefaultEnumCap) {
  ClassEnumerator en(n, p);
  std::uint64_t bound = en.local_bound();
  if (bound > cap) {
    if (!p.positive && !p.persistent) throw EnumerationRefused(bound);
    auto probe = en.count({cap, cap * 24});
    if (!probe) throw EnumerationRefused(bound);
    bound = *probe;
    if (bound > cap) throw EnumerationRefused(bound);
  }
  std::uint64_t c = 0;
  en.enumerate(
      [&](const FnTable& f) {
        ++c;
        sink(f);
      },
      {cap + 1, ~0ull});
  return c;
}

// ---------------------------------------------------------------------------
// truth/falsity profiles and the constructive lemmas

// truth conditions f^{-1}{t,b} and falsity conditions f^{-1}{f,b} as cell
// bitsets; together they determine the table uniquely
struct TruthFalsityProfile {
  int arity = 1;
  std::uint64_t truth = 0;
  std::uint64_t falsity = 0;
  friend bool operator==(const TruthFalsityProfile&, const TruthFalsityProfile&) = default;
};

inline TruthFalsityProfile profile_of(const FnTable& f) {
  TruthFalsityProfile p;
  p.arity = f.arity();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (tru(f.entry(i))) p.truth |= 1ull << i;
    if (fls(f.entry(i))) p.falsity |= 1ull << i;
  }
  return p;
}

inline FnTable table_of_profile(const TruthFalsityProfile& p) {
  std::vector<Elem> e(table_size(p.arity));
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = from_bits((p.truth >> i) & 1, (p.falsity >> i) & 1);
  return FnTable(p.arity, std::move(e));
}

// the unique table with the truth conditions of f and the falsity conditions
// of g; both display formulas are computed and must agree
inline FnTable combine(const FnTable& f, const FnTable& g) {
  if (f.arity() != g.arity()) throw std::invalid_argument("combine: arity mismatch");
  auto via_info = FnTable::from_fn(f.arity(), [&](std::span<const Elem> a) {
    return ijoin(imeet(Elem::t, f.eval(a)), imeet(Elem::f, g.eval(a)));
  });
  auto via_truth = FnTable::from_fn(f.arity(), [&](std::span<const Elem> a) {
    return meet(join(Elem::n, f.eval(a)), join(Elem::b, g.eval(a)));
  });
  if (via_info != via_truth) throw std::logic_error("combine: display formulas disagree");
  return via_info;
}

enum class ProfileSide { truth, falsity };

// the unique harmonious table sharing f's truth (resp. falsity) conditions
inline FnTable harmonize(const FnTable& f, ProfileSide side) {
  int n = f.arity();
  if (side == ProfileSide::truth) {
    return FnTable::from_fn(n, [&](std::span<const Elem> args) {
      std::array<Elem, kMaxArity> ca{};
      for (std::size_t i = 0; i < args.size(); ++i) ca[i] = conf(args[i]);
      bool here = tru(f.eval(args));
      bool there = tru(f.eval(std::span<const Elem>(ca.data(), args.size())));
      return from_bits(here, !there);
    });
  }
  // falsity side via the -g(-x) route of the proof
  FnTable h = dual(f, DualKind::demorgan);
  FnTable g = harmonize(h, ProfileSide::truth);
  return dual(g, DualKind::demorgan);
}

// Extension Lemma: each positive g : B2^n -> DM4 extends to the unique
// positive persistent table with those Boolean values.
inline bool boolean_positive(const std::map<std::vector<Elem>, Elem>& g, int n) {
  for (const auto& [a, va] : g)
    for (const auto& [b, vb] : g) {
      bool le = true;
      for (int k = 0; k < n; ++k) le = le && leq(a[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(k)]);
      if (le && !leq(va, vb)) return false;
    }
  return true;
}

inline FnTable extend_positive_boolean(const std::map<std::vector<Elem>, Elem>& g, int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("extension arity out of range 1..4");
  if (g.size() != (1u << n)) throw std::invalid_argument("extension: need all 2^n Boolean values");
  for (const auto& [a, v] : g)
    for (Elem x : a)
      if (x != Elem::t && x != Elem::f) throw std::invalid_argument("extension: non-Boolean key");
  if (!boolean_positive(g, n)) throw std::invalid_argument("extension: g is not positive");
  // g(x) = join over Boolean tuples a of g_{a,t}(x) /\ value-cap, where
  // g_{a,t}(x) = meet of x_i over a_i = t
  return FnTable::from_fn(n, [&](std::span<const Elem> x) {
    Elem acc = Elem::f;  // empty disjunction
    for (const auto& [a, v] : g) {
      if (v == Elem::f) continue;
      Elem gat = Elem::t;  // empty conjunction
      for (int k = 0; k < n; ++k)
        if (a[static_cast<std::size_t>(k)] == Elem::t) gat = meet(gat, x[static_cast<std::size_t>(k)]);
      Elem cap = v == Elem::t ? gat : meet(gat, v == Elem::n ? Elem::n : Elem::b);
      acc = join(acc, cap);
    }
    return acc;
  });
}

inline std::map<std::vector<Elem>, Elem> boolean_restriction(const FnTable& f) {
  std::map<std::vector<Elem>, Elem> g;
  int n = f.arity();
  for (std::size_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Elem> a(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) a[static_cast<std::size_t>(k)] = (mask >> k) & 1 ? Elem::t : Elem::f;
    g[a] = f.eval(std::span<const Elem>(a));
  }
  return g;
}

// ---------------------------------------------------------------------------
// pointwise-smallest class member with a prescribed value. The classes in
// question are closed under /\, so the minimum is the meet of all members
// hitting the anchor; a side-condition violation surfaces as "no member
// attains the target".

struct MinimalFunctionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline FnTable minimal_function(const Predicate& cls, std::span<const Elem> anchor, Elem target,
                                bool verify_minimality = false,
                                std::uint64_t cap = kDefaultEnumCap) {
  int n = static_cast<int>(anchor.size());
  if (n < 1 || n > 2)
    throw std::invalid_argument("minimal_function supports anchor arity 1..2");
  std::size_t anchor_idx = FnTable::index_of(anchor);
  std::optional<FnTable> acc;
  std::vector<FnTable> members;
  enumerate_functions(n, cls, [&](const FnTable& f) {
    if (f.entry(anchor_idx) != target) return;
    if (verify_minimality) members.push_back(f);
    if (!acc) {
      acc = f;
      return;
    }
    std::vector<Elem> e(acc->size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = meet(acc->entry(i), f.entry(i));
    acc = FnTable(n, std::move(e));
  }, cap);
  if (!acc)
    throw MinimalFunctionError("no member of class (" + cls.str() + ") attains " +
                               std::string(1, elem_char(target)) + " at the anchor");
  if (!predicate_check(*acc, cls) || acc->entry(anchor_idx) != target)
    throw MinimalFunctionError("class (" + cls.str() +
                               ") has no pointwise-smallest member with the prescribed value "
                               "(side condition violated)");
  if (verify_minimality) {
    for (const FnTable& g : members)
      for (std::size_t i = 0; i < acc->size(); ++i)
        if (!leq(acc->entry(i), g.entry(i)))
          throw std::logic_error("minimality verification failed");
  }
  return *acc;
}

// Random class member: assign cells in a constraint-friendly order (Boolean
// tuples first, then ascending information weight) choosing uniformly among
// admissible values, with backtracking on dead ends.
inline FnTable random_member(int n, const Predicate& p, std::mt19937_64& rng) {
  ClassEnumerator en(n, p);
  std::size_t cells = table_size(n);
  std::vector<std::size_t> order(cells);
  for (std::size_t i = 0; i < cells; ++i) order[i] = i;
  auto weight = [&](std::size_t i) {
    int w = 0;
    bool boolean = detail::tuple_in(i, n, kSetB2);
    for (int k = 0; k < n; ++k) {
      Elem a = elem((i >> (2 * k)) & 3);
      w += tru(a) + fls(a);
    }
    return std::pair<int, int>(boolean ? 0 : 1, w);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return weight(a) < weight(b); });

  // vals indexed by cell; "assigned" follows the permuted order
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<Elem> vals(cells, Elem::t);
    std::vector<std::size_t> assigned;
    std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
      if (pos == cells) return true;
      std::size_t cell = order[pos];
      // admissibility against assigned cells only: remap through a scratch
      ElemSet adm = en.admissible_against(vals, assigned, cell);
      std::array<Elem, 4> opts{};
      int cnt = 0;
      for (Elem v : kElems)
        if (set_has(adm, v)) opts[cnt++] = v;
      if (cnt == 0) return false;
      // random order
      for (int i = cnt - 1; i > 0; --i)
        std::swap(opts[i], opts[std::uniform_int_distribution<int>(0, i)(rng)]);
      for (int i = 0; i < cnt; ++i) {
        vals[cell] = opts[i];
        assigned.push_back(cell);
        if (rec(pos + 1)) return true;
        assigned.pop_back();
      }
      return false;
    };
    if (rec(0)) {
      FnTable f(n, vals);
      if (predicate_check(f, p)) return f;
    }
  }
  throw std::runtime_error("random_member: failed to sample the class");
}

}  // namespace dm4
