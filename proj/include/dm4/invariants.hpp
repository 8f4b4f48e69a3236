#pragma once

// Inv^2 computation and the Baker-Pixley membership oracle. A clone above a
// majority operation is exactly the set of functions preserving the
// subuniverses of the square, i.e. a set of 16-bit binary relations.

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "dm4/clone.hpp"
#include "dm4/parallel.hpp"
#include "dm4/relation.hpp"

namespace dm4 {

struct CloneFingerprint {
  // all invariant relations, ascending by mask
  std::vector<BinaryRelation16> relations;
  // intersection-irreducible subset; preserving these implies preserving all
  // (invariant relations are closed under intersection)
  std::vector<BinaryRelation16> core;

  bool contains(BinaryRelation16 r) const {
    return std::binary_search(relations.begin(), relations.end(), r);
  }
};

namespace detail {

// mask sweep: a relation is invariant iff it is closed under every generator
inline std::vector<BinaryRelation16> sweep_inv2(const std::vector<FnTable>& gens) {
  std::vector<std::uint8_t> closed(65536, 1);

  for (const FnTable& g : gens) {
    if (g.arity() == 1) {
      std::array<int, 16> comp{};
      for (int p = 0; p < 16; ++p) {
        Elem a = elem(static_cast<std::uint8_t>(p >> 2)), b = elem(static_cast<std::uint8_t>(p & 3));
        comp[p] = BinaryRelation16::bit(g.eval({a}), g.eval({b}));
      }
      parallel_chunks(65536, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t m = lo; m < hi; ++m) {
          if (!closed[m]) continue;
          std::uint16_t R = static_cast<std::uint16_t>(m);
          for (int p = 0; p < 16 && closed[m]; ++p)
            if ((R >> p) & 1 && !((R >> comp[p]) & 1)) closed[m] = 0;
        }
      });
    } else if (g.arity() == 2) {
      std::array<std::array<int, 16>, 16> comp{};
      for (int p = 0; p < 16; ++p)
        for (int q = 0; q < 16; ++q) {
          Elem a1 = elem(static_cast<std::uint8_t>(p >> 2)), b1 = elem(static_cast<std::uint8_t>(p & 3));
          Elem a2 = elem(static_cast<std::uint8_t>(q >> 2)), b2 = elem(static_cast<std::uint8_t>(q & 3));
          comp[p][q] = BinaryRelation16::bit(g.eval({a1, a2}), g.eval({b1, b2}));
        }
      parallel_chunks(65536, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t m = lo; m < hi; ++m) {
          if (!closed[m]) continue;
          std::uint16_t R = static_cast<std::uint16_t>(m);
          for (int p = 0; p < 16 && closed[m]; ++p) {
            if (!((R >> p) & 1)) continue;
            for (int q = 0; q < 16; ++q)
              if ((R >> q) & 1 && !((R >> comp[p][q]) & 1)) {
                closed[m] = 0;
                break;
              }
          }
        }
      });
    } else {
      // rare (arity >= 3 generators); run the generic check on survivors
      parallel_chunks(65536, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t m = lo; m < hi; ++m)
          if (closed[m] && !preserves(g, BinaryRelation16(static_cast<std::uint16_t>(m))))
            closed[m] = 0;
      });
    }
  }

  std::vector<BinaryRelation16> out;
  for (std::size_t m = 0; m < 65536; ++m)
    if (closed[m]) out.push_back(BinaryRelation16(static_cast<std::uint16_t>(m)));
  return out;
}

inline std::vector<BinaryRelation16> irreducible_core(const std::vector<BinaryRelation16>& rels) {
  std::vector<BinaryRelation16> core;
  for (BinaryRelation16 r : rels) {
    if (r.mask == 0xffff) continue;  // intersection of the empty family
    std::uint16_t inter = 0xffff;
    for (BinaryRelation16 s : rels)
      if ((s.mask & r.mask) == r.mask && s.mask != r.mask) inter &= s.mask;
    if (inter != r.mask) core.push_back(r);
  }
  return core;
}

}  // namespace detail

// Complete set of binary relations preserved by every generator; memoized by
// generator-table content.
inline std::shared_ptr<const CloneFingerprint> inv2(const CloneSpec& spec) {
  static std::mutex mu;
  static std::unordered_map<std::string, std::shared_ptr<const CloneFingerprint>> memo;
  std::string key = spec.content_key();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  std::vector<FnTable> gens;
  for (const auto& [n, t] : spec.generators()) gens.push_back(t);
  auto fp = std::make_shared<CloneFingerprint>();
  fp->relations = detail::sweep_inv2(gens);
  fp->core = detail::irreducible_core(fp->relations);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = memo.emplace(std::move(key), std::move(fp));
  return it->second;
}

inline bool is_majority(const FnTable& m) {
  if (m.arity() != 3) return false;
  for (Elem x : kElems)
    for (Elem y : kElems)
      if (m.eval({x, x, y}) != x || m.eval({x, y, x}) != x || m.eval({y, x, x}) != x) return false;
  return true;
}

// Baker-Pixley needs a majority term in the clone. With meet and join among
// the generators the lattice median qualifies; otherwise the caller must
// supply a witness term, which is validated.
inline void require_majority(const CloneSpec& spec, const std::optional<Term>& witness) {
  if (spec.has_meet_join()) return;
  if (!witness)
    throw std::invalid_argument(
        "membership precondition unverifiable: generators lack meet/join and no majority witness "
        "term was supplied");
  FnTable w = term_to_table(*witness, spec.env(), 3);
  if (!is_majority(w))
    throw std::invalid_argument("supplied witness term is not a majority operation");
}

inline bool member(const FnTable& f, const CloneSpec& spec,
                   const std::optional<Term>& majority_witness = std::nullopt) {
  require_majority(spec, majority_witness);
  auto fp = inv2(spec);
  for (BinaryRelation16 r : fp->core)
    if (!preserves(f, r)) return false;
  return true;
}

// Numerically smallest invariant relation violated by f; absent iff member.
inline std::optional<BinaryRelation16> witness_nonmembership(
    const FnTable& f, const CloneSpec& spec,
    const std::optional<Term>& majority_witness = std::nullopt) {
  require_majority(spec, majority_witness);
  auto fp = inv2(spec);
  for (BinaryRelation16 r : fp->relations)
    if (!preserves(f, r)) return r;
  return std::nullopt;
}

inline bool clone_leq(const CloneSpec& a, const CloneSpec& b,
                      const std::optional<Term>& witness_b = std::nullopt) {
  require_majority(b, witness_b);
  auto fp = inv2(b);
  for (const auto& [n, g] : a.generators())
    for (BinaryRelation16 r : fp->core)
      if (!preserves(g, r)) return false;
  return true;
}

inline bool clone_equal(const CloneSpec& a, const CloneSpec& b) {
  return clone_leq(a, b) && clone_leq(b, a);
}

}  // namespace dm4
