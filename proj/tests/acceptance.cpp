// Acceptance gate: one line per criterion. Exit 0 iff every requested
// criterion passes.
//
// Criterion 3 is expected to fail on three sub-checks: the Figure 2 tables
// are not persistent as extracted, which contradicts the figure's caption and
// the theorem built on it (details in the persistent-clones suite output and
// the project notes). Everything it can assert about those clones apart from
// generator persistence does pass.

#include <chrono>
#include <cstring>
#include <iostream>
#include <map>
#include <set>

#include "dm4/suites.hpp"

using namespace dm4;

namespace {

struct SuiteCache {
  RunOptions opt;
  std::map<std::string, SuiteResult> cache;
  std::map<std::string, double> seconds;

  const SuiteResult& get(const std::string& name) {
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = suites::run_suite(name, opt);
    auto t1 = std::chrono::steady_clock::now();
    seconds[name] = std::chrono::duration<double>(t1 - t0).count();
    return cache.emplace(name, std::move(r)).first->second;
  }
};

struct Tally {
  int pass = 0, fail = 0, skip = 0, inconclusive = 0;
  std::vector<std::string> failures;

  void absorb(const SuiteResult& r, const std::string& prefix = "") {
    for (const auto& c : r.checks) {
      if (!prefix.empty() && c.id.rfind(prefix, 0) != 0) continue;
      switch (c.status) {
        case CheckStatus::pass: ++pass; break;
        case CheckStatus::skip: ++skip; break;
        case CheckStatus::inconclusive: ++inconclusive; break;
        case CheckStatus::fail:
          ++fail;
          failures.push_back(r.suite + "/" + c.id + ": " + c.detail);
          break;
      }
    }
  }
  bool ok() const { return fail == 0 && inconclusive == 0; }
  std::string counts() const {
    return std::to_string(pass) + " pass, " + std::to_string(fail) + " fail, " +
           std::to_string(skip) + " skip, " + std::to_string(inconclusive) + " inconclusive";
  }
};

bool report(int n, const std::string& what, const Tally& t, const std::string& note = "") {
  std::cout << "criterion " << n << ": " << (t.ok() ? "PASS" : "FAIL") << " -- " << what << " ("
            << t.counts() << ")";
  if (!note.empty()) std::cout << "  [" << note << "]";
  std::cout << "\n";
  for (const auto& f : t.failures) std::cout << "    fail: " << f << "\n";
  return t.ok();
}

bool criterion(SuiteCache& sc, int n) {
  switch (n) {
    case 1: {
      const SuiteResult& r = sc.get("identities");
      Tally t;
      t.absorb(r);
      double secs = sc.seconds["identities"];
      if (r.count(CheckStatus::skip) != 2) {
        ++t.fail;
        t.failures.push_back("expected exactly the two nh2_5/nh2_6 skips");
      }
      if (secs >= 1.0) {
        ++t.fail;
        t.failures.push_back("identity suite exceeded 1 s");
      }
      return report(1, "identity suite; nh2_5/nh2_6 reported skip", t,
                    "runtime " + std::to_string(secs).substr(0, 5) + " s");
    }
    case 2: {
      Tally t;
      t.absorb(sc.get("identities"), "golden.");
      return report(2, "golden catalog byte-for-byte", t);
    }
    case 3: {
      Tally t;
      t.absorb(sc.get("harmonious-clones"));
      t.absorb(sc.get("positive-persistent"));
      t.absorb(sc.get("positive-clones"));
      t.absorb(sc.get("subalgebra-clones"));
      t.absorb(sc.get("persistent-clones"));
      t.absorb(sc.get("discriminator-lattice"), "disc.ph_");
      double secs = sc.seconds["harmonious-clones"];
      if (secs >= 60.0) {
        ++t.fail;
        t.failures.push_back("harmonious-clones suite exceeded 60 s");
      }
      return report(3, "generating-set theorems at arity <= 2 with arity-3 spot checks", t,
                    "the persistent-clones generator checks fail: Figure 2 is not persistent as "
                    "extracted (see notes); all membership-direction checks pass");
    }
    case 4: {
      Tally t;
      t.absorb(sc.get("lemmas"));
      return report(4, "lemma suite (truth/falsity, combination, harmonization, extension)", t);
    }
    case 5: {
      Tally t;
      t.absorb(sc.get("covers"));
      t.absorb(sc.get("nonpreserving"));
      return report(5, "covers, expressibility identities, separations", t,
                    "two corrupted displays reported skip with membership companions passing");
    }
    case 6: {
      Tally t;
      t.absorb(sc.get("discriminator-lattice"), "disc.figure11_hasse");
      t.absorb(sc.get("discriminator-lattice"), "disc.box_tmaps_equal_delta");
      t.absorb(sc.get("discriminator-lattice"), "disc.interdefinable_with_box");
      t.absorb(sc.get("figure1-lattice"));
      return report(6, "Figure 11 and Figure 1 Hasse diagrams", t);
    }
    case 7: {
      Tally t;
      t.absorb(sc.get("protoimplications"));
      return report(7, "protoimplication interval: count, members, biconditional, three basic", t);
    }
    case 8: {
      Tally t;
      t.absorb(sc.get("classification"));
      t.absorb(sc.get("cross-oracle"), "cross.semantic_selfext");
      return report(8, "classification registry and semantic selfextensionality agreement", t);
    }
    case 9: {
      Tally t;
      t.absorb(sc.get("cross-oracle"), "cross.unary_closure_vs_member");
      t.absorb(sc.get("cross-oracle"), "cross.binary_closure_subset");
      t.absorb(sc.get("cross-oracle"), "cross.outside_rejected");
      t.absorb(sc.get("cross-oracle"), "cross.inside_sampled_in_closure");
      return report(9, "closure vs membership cross-oracle", t);
    }
  }
  std::cerr << "unknown criterion " << n << "\n";
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  SuiteCache sc;
  sc.opt.arity3_samples = 100000;
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      wanted.push_back(std::atoi(argv[++i]));
    } else if (std::strcmp(argv[i], "--deep") == 0) {
      sc.opt.deep = true;
    } else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) {
      thread_limit() = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]... [--deep] [--threads N]\n";
      return 2;
    }
  }
  if (wanted.empty())
    for (int n = 1; n <= 9; ++n) wanted.push_back(n);
  bool ok = true;
  for (int n : wanted) ok = criterion(sc, n) && ok;
  return ok ? 0 : 1;
}
