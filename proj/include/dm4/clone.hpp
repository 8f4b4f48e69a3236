#pragma once

// Clone specifications and fixed-arity closure with derivation tracking.
//
// Tables of arity <= 3 are packed as two bit-planes (p = truth bits,
// q = falsity bits, one bit per cell), so the truth/information lattice
// generators compose in a handful of word operations. Closure runs
// breadth-first by derivation size (number of generator applications);
// within a layer, new tables are ordered by their encoded string. The
// resulting table order and derivations do not depend on the worker count.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dm4/catalog.hpp"
#include "dm4/core.hpp"
#include "dm4/parallel.hpp"
#include "dm4/term.hpp"

namespace dm4 {

enum class Base { none, dlat, dma, bilat };

inline const char* base_name(Base b) {
  switch (b) {
    case Base::none: return "none";
    case Base::dlat: return "dlat";
    case Base::dma: return "dma";
    case Base::bilat: return "bilat";
  }
  return "?";
}

inline std::vector<std::string> base_generator_names(Base b) {
  switch (b) {
    case Base::none: return {};
    case Base::dlat: return {"meet", "join", "const_t", "const_f"};
    case Base::dma: return {"meet", "join", "const_t", "const_f", "neg"};
    case Base::bilat:
      return {"meet", "join", "const_t", "const_f", "imeet", "ijoin", "const_b", "const_n"};
  }
  return {};
}

struct CloneSpec {
  std::string name;
  Base base = Base::none;
  std::vector<std::pair<std::string, FnTable>> extra;

  static CloneSpec of(std::string name, Base base, std::vector<std::string> catalog_names = {}) {
    CloneSpec s;
    s.name = std::move(name);
    s.base = base;
    for (const auto& n : catalog_names) s.extra.emplace_back(n, catalog_lookup(n));
    return s;
  }

  void add(std::string sym, FnTable t) {
    for (const auto& [n, g] : extra)
      if (n == sym) throw std::invalid_argument("duplicate generator symbol: " + sym);
    for (const auto& n : base_generator_names(base))
      if (n == sym && !(t == catalog_lookup(n)))
        throw std::invalid_argument("generator symbol " + sym + " shadows a base generator");
    if (t.arity() > kMaxArity) throw std::invalid_argument("generator arity exceeds 6");
    extra.emplace_back(std::move(sym), std::move(t));
  }

  std::vector<std::pair<std::string, FnTable>> generators() const {
    std::vector<std::pair<std::string, FnTable>> g;
    for (const auto& n : base_generator_names(base)) g.emplace_back(n, catalog_lookup(n));
    for (const auto& [n, t] : extra) {
      bool dup = false;
      for (const auto& [m, u] : g)
        if (m == n) dup = true;
      if (!dup) g.emplace_back(n, t);
    }
    return g;
  }

  SymbolEnv env() const {
    SymbolEnv e = catalog_env();
    for (const auto& [n, t] : extra) e.insert_or_assign(n, t);
    return e;
  }

  // content key for fingerprint memoization
  std::string content_key() const {
    std::vector<std::string> parts;
    for (const auto& [n, t] : generators()) parts.push_back(encode_table(t));
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (auto& p : parts) {
      key += p;
      key += '|';
    }
    return key;
  }

  bool has_meet_join() const {
    bool m = false, j = false;
    for (const auto& [n, t] : generators()) {
      if (t == catalog_lookup("meet")) m = true;
      if (t == catalog_lookup("join")) j = true;
    }
    return m && j;
  }
};

namespace packed {

struct Planes {
  std::uint64_t p = 0, q = 0;
  friend bool operator==(Planes, Planes) = default;
};

struct PlanesHash {
  std::size_t operator()(Planes k) const {
    std::uint64_t h = k.p * 0x9e3779b97f4a7c15ull;
    h ^= k.q + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

inline std::uint64_t cells_mask(int arity) {
  std::size_t n = table_size(arity);
  return n >= 64 ? ~0ull : ((1ull << n) - 1);
}

inline Planes pack(const FnTable& f) {
  Planes k;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Elem a = f.entry(i);
    if (tru(a)) k.p |= 1ull << i;
    if (fls(a)) k.q |= 1ull << i;
  }
  return k;
}

inline FnTable unpack(Planes k, int arity) {
  std::vector<Elem> e(table_size(arity));
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = from_bits((k.p >> i) & 1, (k.q >> i) & 1);
  return FnTable(arity, std::move(e));
}

// Recognized fast compositions; everything else goes through a cell loop.
enum class FastOp : std::uint8_t {
  generic,
  meet,
  join,
  imeet,
  ijoin,
  neg,
  conf,
  box,
  delta,
  nabla,
  diamond,
  const_t,
  const_f,
  const_n,
  const_b
};

inline FastOp classify_generator(const FnTable& g) {
  static const std::vector<std::pair<std::string, FastOp>> named = {
      {"meet", FastOp::meet},       {"join", FastOp::join},   {"imeet", FastOp::imeet},
      {"ijoin", FastOp::ijoin},     {"neg", FastOp::neg},     {"conf", FastOp::conf},
      {"box", FastOp::box},         {"delta", FastOp::delta}, {"nabla", FastOp::nabla},
      {"diamond", FastOp::diamond}, {"const_t", FastOp::const_t}, {"const_f", FastOp::const_f},
      {"const_n", FastOp::const_n}, {"const_b", FastOp::const_b}};
  for (const auto& [name, op] : named)
    if (g == catalog_lookup(name)) return op;
  return FastOp::generic;
}

struct Gen {
  FnTable table;
  int arity;
  FastOp fast;
  // unary LUT planes for the generic unary path
  bool ut[4] = {}, uf[4] = {};
  // binary LUT for the generic binary path
  bool bt[16] = {}, bf[16] = {};

  explicit Gen(const FnTable& t) : table(t), arity(t.arity()), fast(classify_generator(t)) {
    if (arity == 1)
      for (int v = 0; v < 4; ++v) {
        Elem r = t.entry(static_cast<std::size_t>(v));
        ut[v] = tru(r);
        uf[v] = fls(r);
      }
    if (arity == 2)
      for (int v = 0; v < 16; ++v) {
        Elem r = t.entry(static_cast<std::size_t>(v));
        bt[v] = tru(r);
        bf[v] = fls(r);
      }
  }
};

inline Planes apply1(const Gen& g, Planes a, std::uint64_t M) {
  switch (g.fast) {
    case FastOp::neg: return {a.q, a.p};
    case FastOp::conf: return {~a.q & M, ~a.p & M};
    case FastOp::box: return {a.p & ~a.q, (a.q | ~a.p) & M};
    case FastOp::delta: return {a.p, ~a.p & M};
    case FastOp::nabla: return {~a.q & M, a.q};
    case FastOp::diamond: return {(a.p | ~a.q) & M, a.q & ~a.p};
    case FastOp::const_t: return {M, 0};
    case FastOp::const_f: return {0, M};
    case FastOp::const_n: return {0, 0};
    case FastOp::const_b: return {M, M};
    default: break;
  }
  // cell masks: t = p&~q, f = q&~p, n = ~p&~q, b = p&q
  std::uint64_t cm[4] = {a.p & ~a.q, a.q & ~a.p, ~a.p & ~a.q & M, a.p & a.q};
  Planes r;
  for (int v = 0; v < 4; ++v) {
    if (g.ut[v]) r.p |= cm[v];
    if (g.uf[v]) r.q |= cm[v];
  }
  return r;
}

inline Planes apply2(const Gen& g, Planes a, Planes b, std::uint64_t M) {
  switch (g.fast) {
    case FastOp::meet: return {a.p & b.p, a.q | b.q};
    case FastOp::join: return {a.p | b.p, a.q & b.q};
    case FastOp::imeet: return {a.p & b.p, a.q & b.q};
    case FastOp::ijoin: return {a.p | b.p, a.q | b.q};
    default: break;
  }
  std::uint64_t ca[4] = {a.p & ~a.q, a.q & ~a.p, ~a.p & ~a.q & M, a.p & a.q};
  std::uint64_t cb[4] = {b.p & ~b.q, b.q & ~b.p, ~b.p & ~b.q & M, b.p & b.q};
  Planes r;
  for (int v1 = 0; v1 < 4; ++v1)
    for (int v2 = 0; v2 < 4; ++v2) {
      std::uint64_t m = ca[v1] & cb[v2];
      if (!m) continue;
      int cell = v1 * 4 + v2;
      if (g.bt[cell]) r.p |= m;
      if (g.bf[cell]) r.q |= m;
    }
  return r;
}

// generic arity application via per-cell evaluation
inline Planes applyk(const Gen& g, const std::vector<Planes>& kids, int arity) {
  std::size_t cells = table_size(arity);
  Planes r;
  for (std::size_t i = 0; i < cells; ++i) {
    std::size_t gi = 0;
    for (const Planes& k : kids) {
      Elem a = from_bits((k.p >> i) & 1, (k.q >> i) & 1);
      gi = (gi << 2) | idx(a);
    }
    Elem v = g.table.entry(gi);
    if (tru(v)) r.p |= 1ull << i;
    if (fls(v)) r.q |= 1ull << i;
  }
  return r;
}

// encoded-string order: entry-sequence lexicographic under t<f<n<b
inline std::uint64_t order_key(Planes k, int arity) {
  std::size_t cells = table_size(arity);
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < cells; ++i) {
    bool t_ = (k.p >> i) & 1, f_ = (k.q >> i) & 1;
    key = (key << 2) | idx(from_bits(t_, f_));
  }
  return key;
}

// open-addressed map Planes -> id
class FlatMap {
 public:
  explicit FlatMap(std::size_t expect = 64) { rehash(round_up(expect * 2)); }

  std::uint32_t* find(Planes k) {
    std::size_t m = slots_.size() - 1;
    std::size_t i = PlanesHash{}(k)&m;
    while (true) {
      Slot& s = slots_[i];
      if (!s.used) return nullptr;
      if (s.key == k) return &s.val;
      i = (i + 1) & m;
    }
  }
  const std::uint32_t* find(Planes k) const { return const_cast<FlatMap*>(this)->find(k); }

  bool insert(Planes k, std::uint32_t v) {
    if ((count_ + 1) * 2 > slots_.size()) rehash(slots_.size() * 2);
    std::size_t m = slots_.size() - 1;
    std::size_t i = PlanesHash{}(k)&m;
    while (true) {
      Slot& s = slots_[i];
      if (!s.used) {
        s.used = true;
        s.key = k;
        s.val = v;
        ++count_;
        return true;
      }
      if (s.key == k) return false;
      i = (i + 1) & m;
    }
  }

  std::size_t size() const { return count_; }

 private:
  struct Slot {
    Planes key;
    std::uint32_t val = 0;
    bool used = false;
  };
  static std::size_t round_up(std::size_t n) {
    std::size_t p = 64;
    while (p < n) p <<= 1;
    return p;
  }
  void rehash(std::size_t n) {
    std::vector<Slot> old = std::move(slots_);
    slots_.assign(n, Slot{});
    count_ = 0;
    for (const Slot& s : old)
      if (s.used) insert(s.key, s.val);
  }
  std::vector<Slot> slots_;
  std::size_t count_ = 0;
};

}  // namespace packed

struct Derivation {
  std::int16_t gen = -1;  // -1: projection, index in var
  std::int16_t var = 0;
  std::array<std::uint32_t, kMaxArity> kids{};
};

struct ClosureResult {
  int arity = 1;
  bool exhausted = false;          // cap or work budget hit; tables is a sound partial set
  std::uint64_t compositions = 0;  // work performed
  std::vector<packed::Planes> keys;
  std::vector<std::uint32_t> sizes;  // derivation size per table
  std::vector<Derivation> derivs;
  std::vector<std::string> gen_names;
  packed::FlatMap index{64};

  std::size_t count() const { return keys.size(); }
  FnTable table(std::size_t i) const { return packed::unpack(keys[i], arity); }
  std::optional<std::size_t> find(const FnTable& f) const {
    if (f.arity() != arity) return std::nullopt;
    const std::uint32_t* v = index.find(packed::pack(f));
    if (!v) return std::nullopt;
    return *v;
  }
  Term term_for(std::size_t i) const {
    const Derivation& d = derivs[i];
    if (d.gen < 0) return Term::variable(d.var);
    std::vector<Term> kids;
    int k = 0;
    // reconstruct child count from the generator's name lookup
    kids.reserve(kMaxArity);
    for (; k < gen_arity_[static_cast<std::size_t>(d.gen)]; ++k) kids.push_back(term_for(d.kids[k]));
    return Term::apply(gen_names[static_cast<std::size_t>(d.gen)], std::move(kids));
  }
  std::vector<int> gen_arity_;
};

struct ClosureOptions {
  std::size_t cap = 5'000'000;
  std::uint64_t work_cap = 2'000'000'000;
  std::optional<FnTable> stop_at;  // stop once this table is reached (find_term)
};

inline std::size_t default_closure_cap() {
  if (const char* env = std::getenv("DM4_CLOSURE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 5'000'000;
}

// Least fixpoint of the n-ary fragment: contains the n projections, closed
// under applying every generator to members. Sound even when truncated: every
// produced table is in the clone.
inline ClosureResult closure_fixed_arity(const CloneSpec& spec, int n, ClosureOptions opt = {}) {
  if (n < 1 || n > kMaxArity) throw std::invalid_argument("closure arity out of range 1..6");
  if (n > 3)
    throw std::invalid_argument("closure arity > 3 not supported by the packed engine");

  using packed::Planes;
  const std::uint64_t M = packed::cells_mask(n);
  auto gens_named = spec.generators();
  std::vector<packed::Gen> gens;
  ClosureResult res;
  res.arity = n;
  for (const auto& [name, t] : gens_named) {
    gens.emplace_back(t);
    res.gen_names.push_back(name);
    res.gen_arity_.push_back(t.arity());
  }

  std::optional<Planes> target;
  if (opt.stop_at) {
    if (opt.stop_at->arity() != n) throw std::invalid_argument("stop_at arity mismatch");
    target = packed::pack(*opt.stop_at);
  }

  auto push = [&](Planes k, Derivation d, std::uint32_t size) {
    std::uint32_t id = static_cast<std::uint32_t>(res.keys.size());
    res.index.insert(k, id);
    res.keys.push_back(k);
    res.derivs.push_back(d);
    res.sizes.push_back(size);
  };

  for (int k = 1; k <= n; ++k) {
    Planes pk = packed::pack(FnTable::projection(n, k));
    if (!res.index.find(pk)) {
      Derivation d;
      d.var = static_cast<std::int16_t>(k);
      push(pk, d, 0);
    }
  }
  if (target && res.index.find(*target)) return res;

  // by_size[s] = [start, end) id range of tables with derivation size s
  std::vector<std::pair<std::uint32_t, std::uint32_t>> by_size;
  by_size.emplace_back(0, static_cast<std::uint32_t>(res.keys.size()));

  struct Cand {
    Planes key;
    Derivation d;
  };

  for (std::uint32_t s = 1;; ++s) {
    // enumerate all (gen, size-composition, children) with sizes summing to s-1
    std::vector<Cand> fresh;
    packed::FlatMap fresh_idx(1024);

    // plan blocks: (gen, composition) pairs in deterministic order
    struct Block {
      std::size_t gen;
      std::array<std::uint32_t, kMaxArity> comp;
    };
    std::vector<Block> blocks;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      int k = gens[gi].arity;
      std::array<std::uint32_t, kMaxArity> comp{};
      // lexicographic enumeration of compositions of s-1 into k parts
      std::function<void(int, std::uint32_t)> rec = [&](int pos, std::uint32_t left) {
        if (pos == k - 1) {
          if (left < by_size.size() && by_size[left].first != by_size[left].second) {
            comp[pos] = left;
            blocks.push_back({gi, comp});
          }
          return;
        }
        for (std::uint32_t v = 0; v <= left && v < by_size.size(); ++v) {
          if (by_size[v].first == by_size[v].second) continue;
          comp[pos] = v;
          rec(pos + 1, left - v);
        }
      };
      rec(0, s - 1);
    }

    std::uint64_t planned = 0;
    for (const Block& b : blocks) {
      std::uint64_t combos = 1;
      for (int k = 0; k < gens[b.gen].arity; ++k) {
        auto [lo, hi] = by_size[b.comp[k]];
        combos *= (hi - lo);
      }
      planned += combos;
    }
    if (planned == 0) break;  // no compositions: fixpoint reached
    if (res.compositions + planned > opt.work_cap) {
      res.exhausted = true;
      break;
    }

    for (const Block& b : blocks) {
      const packed::Gen& g = gens[b.gen];
      const int k = g.arity;
      auto [f0lo, f0hi] = by_size[b.comp[0]];
      std::size_t span0 = f0hi - f0lo;

      int nt = std::max(1, effective_threads());
      std::vector<std::vector<Cand>> th_out(static_cast<std::size_t>(nt));
      std::vector<packed::FlatMap> th_idx;
      th_idx.reserve(static_cast<std::size_t>(nt));
      for (int t = 0; t < nt; ++t) th_idx.emplace_back(256);

      std::size_t chunk = (span0 + nt - 1) / std::max<std::size_t>(1, nt);
      if (chunk == 0) chunk = 1;
      std::vector<std::thread> pool;
      for (int t = 0; t < nt; ++t) {
        std::size_t lo = f0lo + t * chunk, hi = std::min<std::size_t>(f0hi, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, t, lo, hi] {
          std::array<std::uint32_t, kMaxArity> ids{};
          std::vector<Planes> kid_planes(static_cast<std::size_t>(k));
          auto emit = [&](Planes key) {
            if (res.index.find(key)) return;           // known from earlier layers
            if (th_idx[static_cast<std::size_t>(t)].find(key)) return;  // dup within thread
            Derivation d;
            d.gen = static_cast<std::int16_t>(b.gen);
            for (int j = 0; j < k; ++j) d.kids[static_cast<std::size_t>(j)] = ids[static_cast<std::size_t>(j)];
            th_idx[static_cast<std::size_t>(t)].insert(key, 0);
            th_out[static_cast<std::size_t>(t)].push_back({key, d});
          };
          // odometer over children 1..k-1, outer loop over child 0
          for (std::size_t i0 = lo; i0 < hi; ++i0) {
            ids[0] = static_cast<std::uint32_t>(i0);
            if (k == 1) {
              emit(apply1(g, res.keys[i0], M));
              continue;
            }
            std::array<std::uint32_t, kMaxArity> cur{};
            for (int j = 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = by_size[b.comp[static_cast<std::size_t>(j)]].first;
            for (;;) {
              for (int j = 1; j < k; ++j) ids[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j)];
              if (k == 2) {
                emit(apply2(g, res.keys[ids[0]], res.keys[ids[1]], M));
              } else {
                for (int j = 0; j < k; ++j) kid_planes[static_cast<std::size_t>(j)] = res.keys[ids[static_cast<std::size_t>(j)]];
                emit(applyk(g, kid_planes, n));
              }
              int j = k - 1;
              while (j >= 1) {
                if (++cur[static_cast<std::size_t>(j)] < by_size[b.comp[static_cast<std::size_t>(j)]].second) break;
                cur[static_cast<std::size_t>(j)] = by_size[b.comp[static_cast<std::size_t>(j)]].first;
                --j;
              }
              if (j < 1) break;
            }
          }
        });
      }
      for (auto& th : pool) th.join();
      // merge per-thread finds in chunk order (= enumeration order)
      for (auto& out : th_out)
        for (const Cand& c : out) {
          if (res.index.find(c.key)) continue;
          if (!fresh_idx.find(c.key)) {
            fresh_idx.insert(c.key, static_cast<std::uint32_t>(fresh.size()));
            fresh.push_back(c);
          }
        }
    }
    res.compositions += planned;

    // a layer may legitimately be empty while later size-sums still produce
    // new tables; every child combination is enumerated exactly once across
    // all layers, so continuing costs nothing extra
    // deterministic layer order: encoded-string order
    std::sort(fresh.begin(), fresh.end(), [&](const Cand& a, const Cand& b) {
      return packed::order_key(a.key, n) < packed::order_key(b.key, n);
    });
    std::uint32_t start = static_cast<std::uint32_t>(res.keys.size());
    for (const Cand& c : fresh) {
      if (res.count() >= opt.cap) {
        res.exhausted = true;
        break;
      }
      push(c.key, c.d, s);
    }
    by_size.emplace_back(start, static_cast<std::uint32_t>(res.keys.size()));
    if (res.exhausted) break;
    if (target && res.index.find(*target)) break;
  }
  return res;
}

// Memoized closures for the suites: closures are deterministic in
// (generators, arity, caps), so sharing is safe.
inline std::shared_ptr<const ClosureResult> cached_closure(const CloneSpec& spec, int n,
                                                           ClosureOptions opt = {}) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const ClosureResult>> memo;
  std::string key = spec.content_key() + "#" + std::to_string(n) + "#" + std::to_string(opt.cap) +
                    "#" + std::to_string(opt.work_cap);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  auto res = std::make_shared<ClosureResult>(closure_fixed_arity(spec, n, opt));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = memo.emplace(std::move(key), std::move(res));
  return it->second;
}

// Constructive membership companion: a witness term when the closure reaches
// the target within the caps, absent otherwise. `exhausted` distinguishes
// "searched everything" from "ran out of budget".
struct FindTermResult {
  std::optional<Term> term;
  bool exhausted = false;
};

inline FindTermResult find_term(const CloneSpec& spec, const FnTable& target, ClosureOptions opt = {}) {
  opt.stop_at = target;
  ClosureResult r = closure_fixed_arity(spec, target.arity(), opt);
  FindTermResult out;
  out.exhausted = r.exhausted;
  if (auto i = r.find(target)) out.term = r.term_for(*i);
  return out;
}

}  // namespace dm4
