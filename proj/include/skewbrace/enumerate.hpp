#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <mutex>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "brace.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "hgs.hpp"
#include "hom.hpp"
#include "perm.hpp"
#include "sdp.hpp"

namespace skewbrace {

namespace detail {

inline std::vector<int> divisors(int m) {
  std::vector<int> out;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) out.push_back(d);
  return out;
}

// Number of permutations of k points all of whose cycle lengths divide m,
// saturating at 2^62.
inline unsigned long long count_divisor_cycle_perms(int k, int m) {
  const unsigned long long cap = 1ull << 62;
  std::vector<int> divs = divisors(m);
  std::vector<unsigned long long> c(static_cast<size_t>(k) + 1, 0);
  std::vector<std::vector<unsigned long long>> binom(static_cast<size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) {
    binom[static_cast<size_t>(i)].assign(static_cast<size_t>(k) + 1, 0);
    binom[static_cast<size_t>(i)][0] = 1;
    for (int j = 1; j <= i; ++j)
      binom[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          std::min(cap, binom[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                            binom[static_cast<size_t>(i - 1)][static_cast<size_t>(j)]);
  }
  c[0] = 1;
  for (int t = 1; t <= k; ++t) {
    unsigned long long total = 0;
    for (int d : divs) {
      if (d > t) break;
      unsigned long long ways = binom[static_cast<size_t>(t - 1)][static_cast<size_t>(d - 1)];
      for (int f = 2; f < d; ++f) ways = std::min(cap, ways * static_cast<unsigned long long>(f));
      total = std::min(cap, total + std::min(cap, ways * c[static_cast<size_t>(t - d)]));
    }
    c[static_cast<size_t>(t)] = total;
  }
  return c[static_cast<size_t>(k)];
}

// The gamma-assignment search. A skew brace on a fixed circ group is
// determined by its gamma function; gamma is fixed by its values on a
// generating set and spreads through two sound rules:
//   (R1)  gamma_{x o y} = gamma_x gamma_y,
//   (R2)  for w = gamma_x(y):
//         gamma_w(wbar o gamma_x(y o u)) = gamma_x(gamma_y(u)),
// (R2) being the dot-automorphism condition rewritten in circ terms.
// Candidates that survive propagation are checked by full dot-group and
// brace-axiom validation, so the rules only ever prune, never admit.
class GammaSearch {
 public:
  explicit GammaSearch(const FiniteGroup& G, std::vector<int> chain = {})
      : G_(G), n_(G.order()), chain_(std::move(chain)) {
    if (chain_.empty()) chain_ = enumeration_chain(G);
    ensure(static_cast<int>(generated_subgroup(G, chain_).size()) == G.order(),
           "the assignment chain generates the circ group");
    states_.resize(chain_.size() + 1);
    for (auto& s : states_) {
      s.rows.assign(static_cast<size_t>(n_) * n_, -1);
      s.has.assign(static_cast<size_t>(n_), 0);
    }
  }

  // Runs the search; found dot tables land in dots() sorted and deduped.
  void run() {
    State& root = states_[0];
    std::fill(root.rows.begin(), root.rows.end(), -1);
    std::fill(root.has.begin(), root.has.end(), 0);
    for (int u = 0; u < n_; ++u) root.rows[static_cast<size_t>(u)] = u;
    root.has[0] = 1;
    root.done.clear();
    std::vector<int> work{0};
    if (close(root, work)) stage(0);
  }

  const std::set<std::vector<int>>& dots() const { return found_; }

  // Optional per-stage candidate restriction (used by the Sylow-restricted
  // degree-pq variant): stage index -> explicit candidate list.
  std::map<size_t, std::vector<std::vector<int>>> forced_pools;

  // Optional per-stage candidate generator: receives the gamma rows known
  // so far and submits candidate rows for the stage's generator.
  using CandidateFn =
      std::function<void(const std::vector<int>& gamma_rows, const std::vector<char>& has,
                         const std::function<void(const std::vector<int>&)>& submit)>;
  std::map<size_t, CandidateFn> custom_pools;

  static std::vector<int> enumeration_chain(const FiniteGroup& G) {
    std::vector<int> gens;
    std::vector<int> sub{0};
    while (static_cast<int>(sub.size()) < G.order()) {
      int best = -1;
      for (int x = 1; x < G.order(); ++x) {
        if (std::binary_search(sub.begin(), sub.end(), x)) continue;
        if (best < 0 || G.element_order(x) > G.element_order(best)) best = x;
      }
      gens.push_back(best);
      sub = generated_subgroup(G, gens);
    }
    return gens;
  }

 private:
  struct State {
    std::vector<int> rows;  // n*n gamma images, row x = gamma_x
    std::vector<char> has;  // row x known
    std::vector<int> done;  // rows already paired, in pop order
  };

  const int* row(const State& s, int x) const {
    return s.rows.data() + static_cast<size_t>(x) * n_;
  }

  bool set_row(State& s, int x, const int* vals, std::vector<int>& work) {
    int* dst = s.rows.data() + static_cast<size_t>(x) * n_;
    if (s.has[static_cast<size_t>(x)])
      return std::equal(vals, vals + n_, dst);
    std::copy(vals, vals + n_, dst);
    s.has[static_cast<size_t>(x)] = 1;
    work.push_back(x);
    return true;
  }

  // Processes the worklist to a fixed point; false on conflict.
  bool close(State& s, std::vector<int>& work) {
    std::vector<int> buf(static_cast<size_t>(n_));
    std::vector<int> fw(static_cast<size_t>(n_));
    while (!work.empty()) {
      int x = work.back();
      work.pop_back();
      s.done.push_back(x);
      for (int y : s.done) {
        if (!apply_rules(s, x, y, work, buf, fw)) return false;
        if (y != x && !apply_rules(s, y, x, work, buf, fw)) return false;
      }
    }
    return true;
  }

  bool apply_rules(State& s, int p, int q, std::vector<int>& work, std::vector<int>& buf,
                   std::vector<int>& fw) {
    const int* gp = row(s, p);
    const int* gq = row(s, q);
    // (R1): gamma at p o q is the composite.
    for (int u = 0; u < n_; ++u) buf[static_cast<size_t>(u)] = gp[gq[u]];
    if (!set_row(s, G_.op(p, q), buf.data(), work)) return false;
    // (R2): gamma is forced at w = gamma_p(q).
    int w = gp[q];
    int wbar = G_.inv(w);
    for (int u = 0; u < n_; ++u) {
      int qv = G_.op(wbar, gp[G_.op(q, u)]);
      fw[static_cast<size_t>(qv)] = buf[static_cast<size_t>(u)];
    }
    return set_row(s, w, fw.data(), work);
  }

  void stage(size_t ci) {
    if (ci == chain_.size()) {
      finalize(states_[ci]);
      return;
    }
    State& cur = states_[ci];
    int g = chain_[ci];
    if (cur.has[static_cast<size_t>(g)]) {
      states_[ci + 1] = cur;
      stage(ci + 1);
      return;
    }
    const int m = G_.element_order(g);
    auto it = forced_pools.find(ci);
    if (it != forced_pools.end()) {
      for (const std::vector<int>& cand : it->second) try_candidate(ci, g, cand.data());
      return;
    }
    auto cit = custom_pools.find(ci);
    if (cit != custom_pools.end()) {
      cit->second(cur.rows, cur.has,
                  [&](const std::vector<int>& cand) { try_candidate(ci, g, cand.data()); });
      return;
    }
    // Prefer solving a conjugation constraint tau gamma_{h2} tau^{-1} =
    // gamma_h (with h2 = gbar o h o g) when one is available and cheaper
    // than the raw pool.
    int best_h = -1;
    unsigned long long best_count = count_divisor_cycle_perms(n_ - 1, m);
    for (int h : cur.done) {
      int h2 = G_.op(G_.op(G_.inv(g), h), g);
      if (!cur.has[static_cast<size_t>(h2)]) continue;
      unsigned long long c = conjugator_count(cur, h2);
      if (c < best_count) {
        best_count = c;
        best_h = h;
      }
    }
    if (best_h >= 0) {
      int h2 = G_.op(G_.op(G_.inv(g), best_h), g);
      enumerate_conjugators(ci, g, m, row(cur, h2), row(cur, best_h));
    } else {
      enumerate_pool(ci, g, m);
    }
  }

  void try_candidate(size_t ci, int g, const int* sigma) {
    State& next = states_[ci + 1];
    next = states_[ci];
    std::vector<int> work;
    if (!set_row(next, g, sigma, work)) return;
    if (!close(next, work)) return;
    stage(ci + 1);
  }

  // ---- raw pool: perms fixing 0 with all cycle lengths dividing m ----------

  void enumerate_pool(size_t ci, int g, int m) {
    std::vector<int> divs;
    for (int d : divisors(m))
      if (d <= n_ - 1) divs.push_back(d);
    std::vector<int> sigma(static_cast<size_t>(n_));
    sigma[0] = 0;
    std::vector<int> avail;
    for (int x = 1; x < n_; ++x) avail.push_back(x);
    pool_rec(ci, g, divs, sigma, avail);
  }

  void pool_rec(size_t ci, int g, const std::vector<int>& divs, std::vector<int>& sigma,
                std::vector<int>& avail) {
    if (avail.empty()) {
      try_candidate(ci, g, sigma.data());
      return;
    }
    int s = avail.front();
    std::vector<int> rest(avail.begin() + 1, avail.end());
    std::vector<int> cyc{s};
    for (int d : divs) {
      if (d > static_cast<int>(avail.size())) break;
      cycle_rec(ci, g, divs, sigma, rest, cyc, d);
    }
  }

  void cycle_rec(size_t ci, int g, const std::vector<int>& divs, std::vector<int>& sigma,
                 std::vector<int>& rest, std::vector<int>& cyc, int len) {
    if (static_cast<int>(cyc.size()) == len) {
      for (int i = 0; i < len; ++i)
        sigma[static_cast<size_t>(cyc[static_cast<size_t>(i)])] =
            cyc[static_cast<size_t>((i + 1) % len)];
      pool_rec(ci, g, divs, sigma, rest);
      return;
    }
    for (size_t i = 0; i < rest.size(); ++i) {
      int pt = rest[i];
      rest.erase(rest.begin() + static_cast<long>(i));
      cyc.push_back(pt);
      cycle_rec(ci, g, divs, sigma, rest, cyc, len);
      cyc.pop_back();
      rest.insert(rest.begin() + static_cast<long>(i), pt);
    }
  }

  // ---- conjugation-constrained candidates ----------------------------------

  struct Cycles {
    // cycles grouped by length; each cycle stored from an arbitrary start
    std::map<int, std::vector<std::vector<int>>> by_len;
  };

  Cycles cycle_split(const int* perm) const {
    Cycles c;
    std::vector<char> done(static_cast<size_t>(n_), 0);
    for (int x = 0; x < n_; ++x) {
      if (done[static_cast<size_t>(x)]) continue;
      std::vector<int> cyc;
      for (int y = x; !done[static_cast<size_t>(y)]; y = perm[y]) {
        done[static_cast<size_t>(y)] = 1;
        cyc.push_back(y);
      }
      c.by_len[static_cast<int>(cyc.size())].push_back(std::move(cyc));
    }
    return c;
  }

  unsigned long long conjugator_count(const State& s, int h2) const {
    const unsigned long long cap = 1ull << 62;
    Cycles c = cycle_split(row(s, h2));
    unsigned long long total = 1;
    for (const auto& [len, cycles] : c.by_len) {
      unsigned long long cnt = cycles.size();
      unsigned long long fact = 1;
      for (unsigned long long f = 2; f <= cnt; ++f) fact = std::min(cap, fact * f);
      if (len == 1 && fact > 1) fact /= cnt;  // 0 -> 0 is forced
      unsigned long long phases = 1;
      for (unsigned long long i = 0; i < cnt; ++i)
        phases = std::min(cap, phases * static_cast<unsigned long long>(len));
      total = std::min(cap, std::min(cap, total * fact) * phases);
    }
    return total;
  }

  // All tau with tau src tau^{-1} = dst and tau(0) = 0, filtered by
  // ord(tau) | m. Both src and dst fix 0, so the cycles {0} pair off and
  // the rest are matched length-class by length-class with a phase.
  void enumerate_conjugators(size_t ci, int g, int m, const int* src, const int* dst) {
    Cycles cs = cycle_split(src);
    Cycles cd = cycle_split(dst);
    if (src[0] != 0 || dst[0] != 0) return;
    std::vector<std::vector<int>> src_cycles, dst_cycles;
    for (auto& [len, cycles] : cs.by_len) {
      auto it = cd.by_len.find(len);
      if (it == cd.by_len.end() || it->second.size() != cycles.size()) return;
      for (auto& c : cycles)
        if (!(c.size() == 1 && c[0] == 0)) src_cycles.push_back(std::move(c));
      for (auto& c : it->second)
        if (!(c.size() == 1 && c[0] == 0)) dst_cycles.push_back(std::move(c));
    }
    for (auto& [len, cycles] : cd.by_len)
      if (!cs.by_len.count(len)) return;
    std::vector<int> tau(static_cast<size_t>(n_), -1);
    tau[0] = 0;
    std::vector<char> used(dst_cycles.size(), 0);
    conj_rec(ci, g, m, src_cycles, dst_cycles, 0, used, tau);
  }

  void conj_rec(size_t ci, int g, int m, const std::vector<std::vector<int>>& src_cycles,
                const std::vector<std::vector<int>>& dst_cycles, size_t si,
                std::vector<char>& used, std::vector<int>& tau) {
    if (si == src_cycles.size()) {
      Perm t(Perm::unchecked{}, tau);
      if (m % t.order() == 0) try_candidate(ci, g, tau.data());
      return;
    }
    const std::vector<int>& sc = src_cycles[si];
    const int len = static_cast<int>(sc.size());
    for (size_t di = 0; di < dst_cycles.size(); ++di) {
      if (used[di] || static_cast<int>(dst_cycles[di].size()) != len) continue;
      const std::vector<int>& dc = dst_cycles[di];
      used[di] = 1;
      for (int phase = 0; phase < len; ++phase) {
        for (int i = 0; i < len; ++i)
          tau[static_cast<size_t>(sc[static_cast<size_t>(i)])] =
              dc[static_cast<size_t>((i + phase) % len)];
        conj_rec(ci, g, m, src_cycles, dst_cycles, si + 1, used, tau);
      }
      used[di] = 0;
    }
  }

  void finalize(State& s) {
    for (int x = 0; x < n_; ++x)
      ensure(s.has[static_cast<size_t>(x)], "gamma known on the whole group");
    std::vector<int> dot(static_cast<size_t>(n_) * n_, -1);
    for (int x = 0; x < n_; ++x) {
      const int* gx = row(s, x);
      for (int u = 0; u < n_; ++u)
        dot[static_cast<size_t>(x) * n_ + gx[u]] = G_.op(x, u);
    }
    if (!quiet_valid(dot)) return;
    found_.insert(std::move(dot));
  }

  bool quiet_valid(const std::vector<int>& dot) const {
    // columns are permutations
    std::vector<char> seen(static_cast<size_t>(n_));
    for (int z = 0; z < n_; ++z) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int x = 0; x < n_; ++x) {
        int v = dot[static_cast<size_t>(x) * n_ + z];
        if (seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = 1;
      }
    }
    // associativity
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        int xy = dot[static_cast<size_t>(x) * n_ + y];
        for (int z = 0; z < n_; ++z)
          if (dot[static_cast<size_t>(xy) * n_ + z] !=
              dot[static_cast<size_t>(x) * n_ + dot[static_cast<size_t>(y) * n_ + z]])
            return false;
      }
    // brace axiom against circ
    std::vector<int> dinv(static_cast<size_t>(n_));
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (dot[static_cast<size_t>(x) * n_ + y] == 0) dinv[static_cast<size_t>(x)] = y;
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        int xy = G_.op(x, y);
        int left = dot[static_cast<size_t>(xy) * n_ + dinv[static_cast<size_t>(x)]];
        for (int z = 0; z < n_; ++z)
          if (G_.op(x, dot[static_cast<size_t>(y) * n_ + z]) !=
              dot[static_cast<size_t>(left) * n_ + G_.op(x, z)])
            return false;
      }
    return true;
  }

  const FiniteGroup& G_;
  int n_;
  std::vector<int> chain_;
  std::vector<State> states_;
  std::set<std::vector<int>> found_;
};

}  // namespace detail

// ---- catalogs ---------------------------------------------------------------

struct CatalogEntry {
  SkewBrace brace;
  std::string type_label;
  std::string provenance;
  int left_ideal_count = 0;
  int strong_left_ideal_count = 0;
  int ideal_count = 0;
};

// A deduplicated list of skew braces sharing one circ table, sorted
// lexicographically by dot table and closed under opposite.
struct BraceCatalog {
  FiniteGroup circ;
  std::vector<CatalogEntry> entries;

  const CatalogEntry* find_dot(const FiniteGroup& dot) const {
    for (const auto& e : entries)
      if (e.brace.dot_group() == dot) return &e;
    return nullptr;
  }
};

// Stock groups used to name dot types: cyclic, abelian products in
// invariant-factor form, dihedral, dicyclic, and semidirect products of two
// cyclic groups. First matching label wins.
inline std::vector<std::pair<std::string, FiniteGroup>> stock_groups(int n) {
  std::vector<std::pair<std::string, FiniteGroup>> out;
  auto add_if_new = [&](const std::string& label, const FiniteGroup& g) {
    for (auto& [l, s] : out)
      if (are_isomorphic(s, g)) return false;
    out.push_back({label, g});
    return true;
  };
  out.push_back({"C" + std::to_string(n), cyclic_group(n)});
  // abelian: invariant factor chains d1 | d2 | ... | dk, product n, k >= 2
  std::vector<std::vector<int>> chains;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int min_d) -> void {
    if (rem == 1) {
      if (cur.size() >= 2) chains.push_back(cur);
      return;
    }
    for (int d = min_d; d <= rem; ++d) {
      if (rem % d != 0) continue;
      if (!cur.empty() && d % cur.back() != 0) continue;
      cur.push_back(d);
      self(self, rem / d, d);
      cur.pop_back();
    }
  };
  rec(rec, n, 2);
  for (const auto& ch : chains) {
    FiniteGroup g = cyclic_group(ch[0]);
    std::string label = "C" + std::to_string(ch[0]);
    for (size_t i = 1; i < ch.size(); ++i) {
      g = direct_product(g, cyclic_group(ch[i]));
      label += "xC" + std::to_string(ch[i]);
    }
    add_if_new(label, g);
  }
  if (n % 2 == 0 && n >= 6) add_if_new("D" + std::to_string(n / 2), dihedral_group(n / 2));
  if (n % 4 == 0 && n >= 8) add_if_new("Dic" + std::to_string(n / 4), dicyclic_group(n / 4));
  for (int a = 2; a * 2 <= n; ++a) {
    if (n % a != 0) continue;
    int b = n / a;
    if (b < 2) continue;
    FiniteGroup A = cyclic_group(a), B = cyclic_group(b);
    for (int k = 2; k < a; ++k) {
      // action x -> kx mod a must have order dividing b and be invertible
      long long kk = 1;
      bool ok = std::gcd(k, a) == 1;
      if (!ok) continue;
      for (int i = 0; i < b; ++i) kk = (kk * k) % a;
      if (kk != 1) continue;
      std::vector<Perm> act;
      long long pw = 1;
      for (int i = 0; i < b; ++i) {
        std::vector<int> m(static_cast<size_t>(a));
        for (int x = 0; x < a; ++x) m[static_cast<size_t>(x)] = static_cast<int>((pw * x) % a);
        act.emplace_back(std::move(m));
        pw = (pw * k) % a;
      }
      FiniteGroup g = semidirect_product_group(A, B, act);
      add_if_new("C" + std::to_string(a) + ":C" + std::to_string(b), g);
    }
  }
  return out;
}

namespace detail {

// Assembles entries from (brace, provenance) pairs: dedup by dot table,
// close under opposite, sort by dot table, label types, and summarize
// ideals. With expect_opposites, a missing opposite is a bug.
inline BraceCatalog finalize_catalog(const FiniteGroup& circ,
                                     std::vector<std::pair<SkewBrace, std::string>> items,
                                     bool expect_opposites) {
  for (auto& [b, prov] : items)
    ensure(b.circ_group() == circ, "catalog entries share the circ table");

  std::vector<std::pair<SkewBrace, std::string>> dedup;
  std::set<std::vector<int>> seen;
  for (auto& item : items)
    if (seen.insert(item.first.dot_group().flat_table()).second)
      dedup.push_back(std::move(item));

  const size_t base_count = dedup.size();
  for (size_t i = 0; i < base_count; ++i) {
    SkewBrace op = opposite(dedup[i].first);
    if (seen.insert(op.dot_group().flat_table()).second) {
      ensure(!expect_opposites, "an exhaustive catalog is closed under opposite");
      dedup.push_back({std::move(op), "opposite-of-dot"});
    }
  }

  std::sort(dedup.begin(), dedup.end(), [](const auto& a, const auto& b) {
    return a.first.dot_group().flat_table() < b.first.dot_group().flat_table();
  });

  auto stock = stock_groups(circ.order());
  std::vector<FiniteGroup> unknown_reps;
  auto label_of = [&](const FiniteGroup& dot) {
    for (const auto& [label, g] : stock)
      if (are_isomorphic(dot, g)) return label;
    for (size_t i = 0; i < unknown_reps.size(); ++i)
      if (are_isomorphic(dot, unknown_reps[i]))
        return "X" + std::to_string(circ.order()) + "." + std::to_string(i + 1);
    unknown_reps.push_back(dot);
    return "X" + std::to_string(circ.order()) + "." + std::to_string(unknown_reps.size());
  };

  BraceCatalog cat;
  cat.circ = circ;
  for (auto& [b, prov] : dedup) {
    CatalogEntry e;
    e.type_label = label_of(b.dot_group());
    e.provenance = prov;
    for (const IdealClass& c : left_ideals(b)) {
      if (c.is_left_ideal) ++e.left_ideal_count;
      if (c.is_strong_left_ideal) ++e.strong_left_ideal_count;
      if (c.is_ideal) ++e.ideal_count;
    }
    e.brace = std::move(b);
    cat.entries.push_back(std::move(e));
  }

  // resolve "opposite-of-dot" provenances to final indices
  for (auto& e : cat.entries) {
    if (e.provenance != "opposite-of-dot") continue;
    FiniteGroup op_dot = opposite_group(e.brace.dot_group());
    for (size_t i = 0; i < cat.entries.size(); ++i)
      if (cat.entries[i].brace.dot_group() == op_dot) {
        e.provenance = "opposite-of(" + std::to_string(i) + ")";
        break;
      }
  }
  return cat;
}

}  // namespace detail

// Brute-force oracle: every skew brace on the given circ group, found by
// exhaustive gamma-assignment search. Guarded: callers must raise the limit
// explicitly to run orders beyond it.
inline BraceCatalog enumerate_braces(const FiniteGroup& circ, int limit = 12) {
  require(circ.order() <= limit, errc::order_guard_exceeded,
          "OrderGuardExceeded: order " + std::to_string(circ.order()) + " exceeds limit " +
              std::to_string(limit));
  detail::GammaSearch search(circ);
  search.run();
  std::vector<std::pair<SkewBrace, std::string>> items;
  for (const std::vector<int>& dot : search.dots())
    items.push_back({make_brace(make_group_flat(circ.order(), dot), circ), "oracle"});
  return detail::finalize_catalog(circ, std::move(items), /*expect_opposites=*/true);
}

namespace detail {

// All regular subgroups of the symmetric group on n points whose
// non-identity elements are fixed-point-free with uniform cycle length
// (exactly the regular subgroups), found by a closure search over packed
// one-word permutations. Depends only on n; memoized across calls.
inline const std::vector<std::vector<std::uint64_t>>& regular_subgroups_of_degree(int n) {
  using Packed = std::uint64_t;
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<Packed>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto cached = cache.find(n);
  if (cached != cache.end()) return cached->second;

  auto pack = [n](const std::vector<int>& images) {
    Packed v = 0;
    for (int i = 0; i < n; ++i) v |= static_cast<Packed>(images[static_cast<size_t>(i)]) << (8 * i);
    return v;
  };
  auto pcompose = [n](Packed p, Packed q) {  // apply q first
    Packed v = 0;
    for (int i = 0; i < n; ++i) {
      int qi = static_cast<int>((q >> (8 * i)) & 0xff);
      v |= ((p >> (8 * qi)) & 0xff) << (8 * i);
    }
    return v;
  };
  std::vector<int> id_images(static_cast<size_t>(n));
  std::iota(id_images.begin(), id_images.end(), 0);
  const Packed id = pack(id_images);

  // candidate elements: fixed-point-free with one cycle length dividing n
  std::vector<Packed> universe;
  for (int len = 2; len <= n; ++len) {
    if (n % len != 0) continue;
    std::vector<int> sigma(static_cast<size_t>(n), -1);
    std::vector<int> avail(static_cast<size_t>(n));
    std::iota(avail.begin(), avail.end(), 0);
    auto rec = [&](auto&& self, std::vector<int>& av) -> void {
      if (av.empty()) {
        universe.push_back(pack(sigma));
        return;
      }
      int s = av.front();
      std::vector<int> rest(av.begin() + 1, av.end());
      std::vector<int> cyc{s};
      auto build = [&](auto&& bs, std::vector<int>& r) -> void {
        if (static_cast<int>(cyc.size()) == len) {
          for (int i = 0; i < len; ++i)
            sigma[static_cast<size_t>(cyc[static_cast<size_t>(i)])] =
                cyc[static_cast<size_t>((i + 1) % len)];
          self(self, r);
          return;
        }
        for (size_t i = 0; i < r.size(); ++i) {
          int pt = r[i];
          r.erase(r.begin() + static_cast<long>(i));
          cyc.push_back(pt);
          bs(bs, r);
          cyc.pop_back();
          r.insert(r.begin() + static_cast<long>(i), pt);
        }
      };
      build(build, rest);
    };
    rec(rec, avail);
  }
  std::vector<Packed> in_universe = universe;
  in_universe.push_back(id);
  std::sort(in_universe.begin(), in_universe.end());

  // closure inside the universe; empty result = left it or grew past n
  auto closure = [&](const std::vector<Packed>& gens) -> std::vector<Packed> {
    Packed elems[9];
    int cnt = 0;
    auto has_elem = [&](Packed v) {
      for (int i = 0; i < cnt; ++i)
        if (elems[i] == v) return true;
      return false;
    };
    elems[cnt++] = id;
    for (Packed g : gens)
      if (!has_elem(g)) {
        if (cnt >= n) return {};
        elems[cnt++] = g;
      }
    for (int i = 0; i < cnt; ++i)
      for (int j = 0; j <= i; ++j)
        for (Packed prod : {pcompose(elems[i], elems[j]), pcompose(elems[j], elems[i])}) {
          if (has_elem(prod)) continue;
          if (!std::binary_search(in_universe.begin(), in_universe.end(), prod)) return {};
          if (cnt >= n) return {};
          elems[cnt++] = prod;
        }
    std::vector<Packed> out(elems, elems + cnt);
    std::sort(out.begin(), out.end());
    return out;
  };

  std::set<std::vector<Packed>> seen, complete;
  std::vector<std::vector<Packed>> queue;
  if (n == 1) complete.insert({id});
  for (Packed p : universe) {
    std::vector<Packed> c = closure({p});
    if (c.empty()) continue;
    if (seen.insert(c).second) queue.push_back(c);
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<Packed> h = queue[qi];
    if (static_cast<int>(h.size()) == n) {
      complete.insert(h);
      continue;
    }
    for (Packed p : universe) {
      if (std::binary_search(h.begin(), h.end(), p)) continue;
      std::vector<Packed> gens = h;
      gens.push_back(p);
      std::vector<Packed> c = closure(gens);
      if (c.empty()) continue;
      if (seen.insert(c).second) queue.push_back(c);
    }
  }

  std::vector<std::vector<Packed>> result(complete.begin(), complete.end());
  return cache.emplace(n, std::move(result)).first->second;
}

}  // namespace detail

// Independent second oracle: regular subgroups of Perm(G), filtered by
// normalization under the circ translations and transported. Permutations
// are packed into one machine word, which limits this strategy to orders
// <= 8 (its intended range).
inline std::vector<SkewBrace> enumerate_braces_regular_search(const FiniteGroup& circ) {
  const int n = circ.order();
  require(n <= 8, errc::order_guard_exceeded,
          "the regular-subgroup search is limited to order 8");
  std::vector<Perm> lam = left_translations(circ);
  std::vector<SkewBrace> out;
  for (const auto& elems : detail::regular_subgroups_of_degree(n)) {
    std::vector<Perm> perms;
    for (std::uint64_t v : elems) {
      std::vector<int> images(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) images[static_cast<size_t>(i)] = static_cast<int>((v >> (8 * i)) & 0xff);
      perms.emplace_back(Perm::unchecked{}, std::move(images));
    }
    PermGroup S = PermGroup::from_elements(std::move(perms));
    if (!is_regular(S)) continue;
    if (!normalized_by(S, lam)) continue;
    out.push_back(regular_to_brace(S, circ));
  }
  std::sort(out.begin(), out.end(), [](const SkewBrace& a, const SkewBrace& b) {
    return a.dot_group().flat_table() < b.dot_group().flat_table();
  });
  return out;
}

enum class PqKind { cyclic, metacyclic };

// The metacyclic group of order pq (q | p-1) with the smallest-exponent
// action; deterministic table.
inline FiniteGroup metacyclic_pq_group(int p, int q) {
  int h = -1;
  for (int k = 2; k < p; ++k) {
    long long kk = 1;
    for (int i = 0; i < q; ++i) kk = (kk * k) % p;
    if (kk == 1) {
      h = k;
      break;
    }
  }
  require(h > 0, errc::bad_primes, "BadPrimes: q does not divide p-1");
  std::vector<Perm> act;
  long long pw = 1;
  for (int i = 0; i < q; ++i) {
    std::vector<int> m(static_cast<size_t>(p));
    for (int x = 0; x < p; ++x) m[static_cast<size_t>(x)] = static_cast<int>((pw * x) % p);
    act.emplace_back(std::move(m));
    pw = (pw * h) % p;
  }
  return semidirect_product_group(cyclic_group(p), cyclic_group(q), act);
}

namespace detail {

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

// Constructive degree-pq catalog: the unique order-p ideal, all complements,
// all admissible theta, closed under opposite. Count formulas are asserted:
//   cyclic circ:      1 + 2(q-1) braces, 2(q-1) of metacyclic type;
//   metacyclic circ:  p of cyclic type plus 2 + 2p(q-2) of metacyclic type.
inline BraceCatalog pq_catalog(int p, int q, PqKind which) {
  require(detail::is_prime(p) && detail::is_prime(q) && p > q, errc::bad_primes,
          "BadPrimes: need primes p > q");
  const bool divides = (p - 1) % q == 0;
  if (which == PqKind::metacyclic)
    require(divides, errc::bad_primes, "BadPrimes: metacyclic case needs q | p-1");

  FiniteGroup G = which == PqKind::cyclic ? cyclic_group(p * q) : metacyclic_pq_group(p, q);

  std::vector<std::pair<SkewBrace, std::string>> items;
  items.push_back({trivial_brace(G), "trivial"});

  if (which == PqKind::cyclic && !divides)
    return detail::finalize_catalog(G, std::move(items), /*expect_opposites=*/false);

  auto sylow_p = subgroups_of_order(G, p);
  ensure(sylow_p.size() == 1, "the order-p subgroup is unique");
  const std::vector<int>& A = sylow_p[0];
  SkewBrace A_brace = trivial_brace(restrict_to_subgroup(G, A));

  auto complements = subgroups_of_order(G, q);
  ensure(complements.size() == (which == PqKind::cyclic ? 1u : static_cast<size_t>(p)),
         "complement count matches the Sylow theory");

  for (size_t bi = 0; bi < complements.size(); ++bi) {
    const std::vector<int>& B = complements[bi];
    SkewBrace B_brace = trivial_brace(restrict_to_subgroup(G, B));
    std::vector<Perm> phi = conjugation_action(G, A, B);

    PermGroup autA = automorphisms(A_brace.dot_group());
    std::vector<GroupHom> thetas = homomorphisms(B_brace.dot_group(), autA);
    ensure(static_cast<int>(thetas.size()) == q, "q homomorphisms theta");

    const int nb = static_cast<int>(B.size());
    std::vector<int> code(static_cast<size_t>(G.order()), -1);
    for (int ai = 0; ai < static_cast<int>(A.size()); ++ai)
      for (int bj = 0; bj < nb; ++bj)
        code[static_cast<size_t>(G.op(A[static_cast<size_t>(ai)], B[static_cast<size_t>(bj)]))] =
            pair_code(ai, bj, nb);
    Perm delta(code);
    Perm delta_inv = delta.inverse();

    for (size_t ti = 0; ti < thetas.size(); ++ti) {
      SdpSpec spec = make_sdp_spec(A_brace, B_brace, phi, hom_perms(thetas[ti], autA));
      ensure(is_admissible(spec).admissible, "every theta is admissible at degree pq");
      SkewBrace sdp = make_sdp_brace(spec);
      // pull the product tables back to G's labels along delta
      std::vector<std::vector<int>> dot(static_cast<size_t>(G.order()),
                                        std::vector<int>(static_cast<size_t>(G.order())));
      for (int x = 0; x < G.order(); ++x)
        for (int y = 0; y < G.order(); ++y) {
          dot[static_cast<size_t>(x)][static_cast<size_t>(y)] =
              delta_inv[sdp.dot(delta[x], delta[y])];
          ensure(delta_inv[sdp.circ(delta[x], delta[y])] == G.op(x, y),
                 "delta transports the circ table onto G");
        }
      items.push_back({make_brace(make_group(dot), G),
                       "sdp(complement=" + std::to_string(bi) + ",theta=" + std::to_string(ti) +
                           ")"});
    }
  }

  BraceCatalog cat = detail::finalize_catalog(G, std::move(items), /*expect_opposites=*/false);

  int cyclic_type = 0, metacyclic_type = 0;
  FiniteGroup Cpq = cyclic_group(p * q);
  for (const auto& e : cat.entries) {
    if (are_isomorphic(e.brace.dot_group(), Cpq))
      ++cyclic_type;
    else
      ++metacyclic_type;
  }
  if (which == PqKind::cyclic) {
    ensure(cyclic_type == 1, "one cyclic-type entry on the cyclic extension");
    ensure(metacyclic_type == 2 * (q - 1), "2(q-1) metacyclic-type entries");
  } else {
    ensure(cyclic_type == p, "p cyclic-type entries on the metacyclic extension");
    ensure(metacyclic_type == 2 + 2 * p * (q - 2), "2 + 2p(q-2) metacyclic-type entries");
  }
  return cat;
}

inline std::map<std::string, int> count_by_type(const BraceCatalog& cat) {
  std::map<std::string, int> out;
  for (const auto& e : cat.entries) ++out[e.type_label];
  return out;
}

struct CrossCheck {
  bool equal = false;
  std::vector<std::vector<int>> only_a;  // dot tables present only in a
  std::vector<std::vector<int>> only_b;
};

inline CrossCheck cross_check(const BraceCatalog& a, const BraceCatalog& b) {
  require(a.circ == b.circ, errc::circ_mismatch, "CircMismatch");
  std::set<std::vector<int>> da, db;
  for (const auto& e : a.entries) da.insert(e.brace.dot_group().flat_table());
  for (const auto& e : b.entries) db.insert(e.brace.dot_group().flat_table());
  CrossCheck r;
  std::set_difference(da.begin(), da.end(), db.begin(), db.end(), std::back_inserter(r.only_a));
  std::set_difference(db.begin(), db.end(), da.begin(), da.end(), std::back_inserter(r.only_b));
  r.equal = r.only_a.empty() && r.only_b.empty();
  return r;
}

struct RealizationFlags {
  bool a_ideal = false;
  bool b_left_ideal = false;
  bool complement = false;
  bool realizes = false;  // falls under the semidirect bijection
};

inline std::vector<RealizationFlags> realization_report(const BraceCatalog& cat,
                                                        const std::vector<int>& A,
                                                        const std::vector<int>& B) {
  require(is_subgroup(cat.circ, A) && is_subgroup(cat.circ, B), errc::not_a_subgroup,
          "NotASubgroup");
  std::vector<int> sa = A, sb = B;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::vector<int> inter;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(inter));
  bool complement = inter == std::vector<int>{0} &&
                    static_cast<int>(sa.size() * sb.size()) == cat.circ.order();
  std::vector<RealizationFlags> out;
  for (const auto& e : cat.entries) {
    RealizationFlags f;
    f.a_ideal = classify_subset(e.brace, sa).is_ideal;
    f.b_left_ideal = classify_subset(e.brace, sb).is_left_ideal;
    f.complement = complement;
    f.realizes = f.a_ideal && f.b_left_ideal && complement;
    out.push_back(f);
  }
  return out;
}

// Sylow-restricted oracle for degree pq (primes p > q, q | p-1): restricts
// the gamma search using facts that hold for every brace at this degree:
// the order-p circ-Sylow A is an ideal with trivial sub-brace, so gamma_a
// is the identity on A and preserves every coset of A, while gamma values
// preserve A setwise. Practical at order 21.
inline BraceCatalog enumerate_braces_pq_sylow(const FiniteGroup& circ, int p, int q) {
  require(detail::is_prime(p) && detail::is_prime(q) && p > q && (p - 1) % q == 0,
          errc::bad_primes, "BadPrimes");
  require(circ.order() == p * q, errc::bad_input, "order must be pq");
  auto sylow = subgroups_of_order(circ, p);
  require(sylow.size() == 1, errc::bad_input, "expected a unique order-p subgroup");
  const std::vector<int>& A = sylow[0];

  // assignment chain: a generator of A first, then an order-q element
  int a_gen = A[1];
  int b_gen = -1;
  for (int x = 1; x < circ.order() && b_gen < 0; ++x)
    if (circ.element_order(x) == q) b_gen = x;
  ensure(b_gen > 0, "an element of order q exists");
  detail::GammaSearch search(circ, {a_gen, b_gen});

  // Stage-0 candidates for gamma at the A-generator: the identity on A and,
  // on each non-A coset of A, either the identity or a single p-cycle. This
  // is forced at degree pq: A is an ideal with trivial sub-brace, gamma
  // values have order dividing p and fix every coset of A setwise.
  std::vector<std::vector<int>> cosets;
  std::vector<char> done(static_cast<size_t>(circ.order()), 0);
  for (int a : A) done[static_cast<size_t>(a)] = 1;
  for (int x = 0; x < circ.order(); ++x) {
    if (done[static_cast<size_t>(x)]) continue;
    std::vector<int> coset;
    for (int a : A) {
      int y = circ.op(x, a);
      done[static_cast<size_t>(y)] = 1;
      coset.push_back(y);
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  std::vector<std::vector<int>> pool;
  std::vector<int> sigma(static_cast<size_t>(circ.order()));
  std::iota(sigma.begin(), sigma.end(), 0);
  auto per_coset = [&](auto&& self, size_t idx) -> void {
    if (idx == cosets.size()) {
      pool.push_back(sigma);
      return;
    }
    const std::vector<int>& c = cosets[idx];
    self(self, idx + 1);
    std::vector<int> rest(c.begin() + 1, c.end());
    std::sort(rest.begin(), rest.end());
    do {
      int prev = c[0];
      for (int pt : rest) {
        sigma[static_cast<size_t>(prev)] = pt;
        prev = pt;
      }
      sigma[static_cast<size_t>(prev)] = c[0];
      self(self, idx + 1);
      for (int pt : c) sigma[static_cast<size_t>(pt)] = pt;
    } while (std::next_permutation(rest.begin(), rest.end()));
  };
  per_coset(per_coset, 0);
  search.forced_pools[0] = std::move(pool);

  // Stage-1 candidates for gamma at the order-q generator, forced by
  // A-equivariance: gamma_b is a dot-automorphism and the dot rows of A are
  // already determined, so gamma_b(dot(a, z)) = dot(gamma_b(a), gamma_b(z)).
  // Hence gamma_b restricts to an automorphism of (A, circ) of order
  // dividing q, fixes every coset of A setwise (a permutation of order
  // dividing q on q-1 < q points is trivial), and is pinned down by one
  // image per non-A coset; the rest propagates.
  const int n = circ.order();
  std::vector<int> a_power(static_cast<size_t>(p));
  std::vector<int> power_of(static_cast<size_t>(n), -1);
  for (int j = 0, cur = 0; j < p; ++j, cur = circ.op(cur, A[1])) {
    a_power[static_cast<size_t>(j)] = cur;
    power_of[static_cast<size_t>(cur)] = j;
  }
  std::vector<int> exponents;  // k with the map a -> a^k of order dividing q
  for (int k = 1; k < p; ++k) {
    long long kk = 1;
    for (int i = 0; i < q; ++i) kk = (kk * k) % p;
    if (kk == 1) exponents.push_back(k);
  }
  search.custom_pools[1] = [&circ, A, cosets, a_power, power_of, exponents, q, n](
                               const std::vector<int>& rows, const std::vector<char>& has,
                               const std::function<void(const std::vector<int>&)>& submit) {
    // inverses of the gamma rows on A
    std::vector<std::vector<int>> rinv(static_cast<size_t>(n));
    for (int a : A) {
      ensure(has[static_cast<size_t>(a)], "gamma known on the Sylow subgroup");
      rinv[static_cast<size_t>(a)].assign(static_cast<size_t>(n), 0);
      for (int u = 0; u < n; ++u)
        rinv[static_cast<size_t>(a)][static_cast<size_t>(rows[static_cast<size_t>(a) * n + u])] = u;
    }
    auto dot_of = [&](int a, int z) {  // dot(a, z) = a o gamma_a^{-1}(z)
      return circ.op(a, rinv[static_cast<size_t>(a)][static_cast<size_t>(z)]);
    };
    std::vector<int> tau(static_cast<size_t>(n));
    std::vector<char> used(static_cast<size_t>(n));
    std::vector<int> work;
    auto complete = [&](auto&& rec, size_t coset_idx) -> void {
      if (coset_idx == cosets.size()) {
        Perm t(Perm::unchecked{}, tau);
        if (q % t.order() == 0) submit(tau);
        return;
      }
      for (int y : cosets[coset_idx]) {
        std::vector<int> saved_tau = tau;
        std::vector<char> saved_used = used;
        int rep = cosets[coset_idx][0];
        bool ok = !used[static_cast<size_t>(y)];
        if (ok) {
          tau[static_cast<size_t>(rep)] = y;
          used[static_cast<size_t>(y)] = 1;
          work.assign(1, rep);
          while (ok && !work.empty()) {
            int z = work.back();
            work.pop_back();
            for (size_t ai = 1; ai < A.size() && ok; ++ai) {
              int a = A[ai];
              int v = dot_of(a, z);
              int w = dot_of(tau[static_cast<size_t>(a)], tau[static_cast<size_t>(z)]);
              int& slot = tau[static_cast<size_t>(v)];
              if (slot >= 0) {
                ok = slot == w;
              } else if (used[static_cast<size_t>(w)]) {
                ok = false;
              } else {
                slot = w;
                used[static_cast<size_t>(w)] = 1;
                work.push_back(v);
              }
            }
          }
          // the A-orbit of the representative covers its coset
          for (int z : cosets[coset_idx]) ok = ok && tau[static_cast<size_t>(z)] >= 0;
        }
        if (ok) rec(rec, coset_idx + 1);
        tau = saved_tau;
        used = saved_used;
      }
    };
    for (int k : exponents) {
      std::fill(tau.begin(), tau.end(), -1);
      std::fill(used.begin(), used.end(), 0);
      for (int j = 0; j < static_cast<int>(a_power.size()); ++j) {
        int img = a_power[static_cast<size_t>((static_cast<long long>(j) * k) %
                                              static_cast<long long>(a_power.size()))];
        tau[static_cast<size_t>(a_power[static_cast<size_t>(j)])] = img;
        used[static_cast<size_t>(img)] = 1;
      }
      complete(complete, 0);
    }
  };

  search.run();
  std::vector<std::pair<SkewBrace, std::string>> items;
  for (const std::vector<int>& dot : search.dots())
    items.push_back({make_brace(make_group_flat(circ.order(), dot), circ), "oracle"});
  return detail::finalize_catalog(circ, std::move(items), /*expect_opposites=*/true);
}

}  // namespace skewbrace
