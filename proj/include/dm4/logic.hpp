#pragma once

// The consequence relation of the matrix (DM4, {t,b}), protoimplications,
// and the metalogical classification of clones above DMA.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dm4/invariants.hpp"
#include "dm4/predicates.hpp"

namespace dm4 {

constexpr bool designated(Elem a) { return tru(a); }

struct Sequent {
  int arity = 1;
  std::vector<FnTable> premises;
  std::vector<FnTable> conclusions;

  void validate() const {
    for (const FnTable& f : premises)
      if (f.arity() != arity) throw std::invalid_argument("sequent premise arity mismatch");
    for (const FnTable& f : conclusions)
      if (f.arity() != arity) throw std::invalid_argument("sequent conclusion arity mismatch");
  }
};

struct EntailmentResult {
  bool holds = true;
  std::optional<std::vector<Elem>> counter;  // first failing assignment in index order
};

inline EntailmentResult entails(const Sequent& s) {
  s.validate();
  EntailmentResult res;
  std::array<Elem, kMaxArity> args{};
  std::size_t total = table_size(s.arity);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t rest = i;
    for (int k = s.arity - 1; k >= 0; --k) {
      args[static_cast<std::size_t>(k)] = elem(rest & 3);
      rest >>= 2;
    }
    std::span<const Elem> a(args.data(), static_cast<std::size_t>(s.arity));
    bool prem = true;
    for (const FnTable& f : s.premises) prem = prem && designated(f.eval(a));
    if (!prem) continue;
    for (const FnTable& g : s.conclusions)
      if (!designated(g.eval(a))) {
        res.holds = false;
        res.counter = std::vector<Elem>(a.begin(), a.end());
        return res;
      }
  }
  return res;
}

enum class ImplicationKind { protoimplication, equivalence };

// protoimplication: x -> x designated, and modus ponens over {t,b};
// equivalence function: designated exactly on the diagonal
inline bool implication_check(const FnTable& f, ImplicationKind kind) {
  if (f.arity() != 2) throw std::invalid_argument("implication_check: binary table required");
  if (kind == ImplicationKind::equivalence) {
    for (Elem a : kElems)
      for (Elem b : kElems)
        if (designated(f.eval({a, b})) != (a == b)) return false;
    return true;
  }
  for (Elem a : kElems)
    if (!designated(f.eval({a, a}))) return false;
  for (Elem a : kElems)
    for (Elem b : kElems)
      if (designated(a) && designated(f.eval({a, b})) && !designated(b)) return false;
  return true;
}

// the protoimplication interval [eq_tmin, to_tmax] in the truth order
inline std::array<ElemSet, 16> interval_cells() {
  const FnTable& lo = catalog_lookup("eq_tmin");
  const FnTable& hi = catalog_lookup("to_tmax");
  std::array<ElemSet, 16> cells{};
  for (std::size_t i = 0; i < 16; ++i) {
    ElemSet s = 0;
    for (Elem v : kElems)
      if (leq(lo.entry(i), v) && leq(v, hi.entry(i))) s |= 1u << idx(v);
    cells[i] = s;
  }
  return cells;
}

inline std::array<ElemSet, 16> interval_cells_info() {
  const FnTable& lo = catalog_lookup("eq_imin");
  const FnTable& hi = catalog_lookup("to_imax");
  std::array<ElemSet, 16> cells{};
  for (std::size_t i = 0; i < 16; ++i) {
    ElemSet s = 0;
    for (Elem v : kElems)
      if (infleq(lo.entry(i), v) && infleq(v, hi.entry(i))) s |= 1u << idx(v);
    cells[i] = s;
  }
  return cells;
}

inline bool interval_contains(const FnTable& f) {
  if (f.arity() != 2) throw std::invalid_argument("interval_contains: binary table required");
  const FnTable& lo = catalog_lookup("eq_tmin");
  const FnTable& hi = catalog_lookup("to_tmax");
  for (std::size_t i = 0; i < 16; ++i)
    if (!leq(lo.entry(i), f.entry(i)) || !leq(f.entry(i), hi.entry(i))) return false;
  return true;
}

inline std::uint64_t interval_count() {
  std::uint64_t c = 1;
  for (ElemSet s : interval_cells()) c *= static_cast<std::uint64_t>(__builtin_popcount(s));
  return c;
}

// streams all interval members in encoded order
template <typename Fn>
void interval_enumerate(Fn&& sink) {
  auto cells = interval_cells();
  std::vector<Elem> vals(16, Elem::t);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == 16) {
      sink(FnTable(2, vals));
      return;
    }
    for (Elem v : kElems)
      if (set_has(cells[i], v)) {
        vals[i] = v;
        rec(i + 1);
      }
  };
  rec(0);
}

// ---------------------------------------------------------------------------
// classification of clones above DMA via the characterization theorems

struct ClassificationRecord {
  bool protoalgebraic = false;
  bool equivalential = false;
  bool truth_equational = false;
  bool algebraizable = false;
  bool selfextensional = false;
  std::string protoalgebraic_witness;     // member among box / eq_tmin / eq_imin
  std::string truth_equational_witness;   // member among t_n_to_n / t_b_to_b
  std::string algebraizable_witness;      // member among delta / eq_tmin / eq_imin
  std::string selfextensional_counterexample;  // non-harmonious generator name, if any
};

inline void require_above_dma(const CloneSpec& spec) {
  for (const char* g : {"meet", "join", "const_t", "const_f", "neg"})
    if (!member(catalog_lookup(g), spec))
      throw std::invalid_argument("classification is established only for clones above DMA (missing " +
                                  std::string(g) + ")");
}

inline ClassificationRecord classify(const CloneSpec& spec) {
  require_above_dma(spec);
  ClassificationRecord r;
  auto first_member = [&](std::initializer_list<const char*> names) -> std::string {
    for (const char* n : names)
      if (member(catalog_lookup(n), spec)) return n;
    return {};
  };
  r.protoalgebraic_witness = first_member({"box", "eq_tmin", "eq_imin"});
  r.protoalgebraic = !r.protoalgebraic_witness.empty();
  r.equivalential = r.protoalgebraic;  // equivalential iff protoalgebraic above DMA
  r.truth_equational_witness = first_member({"t_n_to_n", "t_b_to_b"});
  r.truth_equational = !r.truth_equational_witness.empty();
  r.algebraizable_witness = first_member({"delta", "eq_tmin", "eq_imin"});
  r.algebraizable = !r.algebraizable_witness.empty();
  if (r.algebraizable != (r.protoalgebraic && r.truth_equational))
    throw std::logic_error("algebraizability characterizations disagree");
  r.selfextensional = true;
  for (const auto& [n, g] : spec.generators())
    if (!is_harmonious(g)) {
      r.selfextensional = false;
      if (r.selfextensional_counterexample.empty()) r.selfextensional_counterexample = n;
    }
  return r;
}

// Searches closure output for distinct f -||- g (equal truth conditions).
// "none" refutes nothing beyond the bound; a found pair is a genuine
// counterexample to selfextensionality.
struct SelfextSearchResult {
  bool inconclusive = false;  // closure cap hit before the bound was covered
  std::optional<std::pair<Term, Term>> counterexample;
  std::optional<std::pair<FnTable, FnTable>> tables;
};

inline SelfextSearchResult semantic_selfextensionality(const CloneSpec& spec, int arity_bound,
                                                       ClosureOptions opt = {}) {
  require_above_dma(spec);
  SelfextSearchResult res;
  for (int n = 1; n <= arity_bound; ++n) {
    auto cl = cached_closure(spec, n, opt);
    if (cl->exhausted) res.inconclusive = true;
    std::map<std::uint64_t, std::size_t> by_truth_profile;
    for (std::size_t i = 0; i < cl->count(); ++i) {
      std::uint64_t key = cl->keys[i].p;  // truth bits are the designation profile
      auto [it, fresh] = by_truth_profile.emplace(key, i);
      if (!fresh) {
        res.counterexample = {cl->term_for(it->second), cl->term_for(i)};
        res.tables = {cl->table(it->second), cl->table(i)};
        return res;
      }
    }
  }
  return res;
}

}  // namespace dm4
