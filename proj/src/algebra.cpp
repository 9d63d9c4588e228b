#include "patterncount/algebra.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "patterncount/errors.hpp"
#include "patterncount/linalg.hpp"
#include "patterncount/trees.hpp"

namespace patterncount {

std::string to_string(MorphismClass c) {
  switch (c) {
    case MorphismClass::Mor: return "mor";
    case MorphismClass::Mono: return "mono";
    case MorphismClass::Epi: return "epi";
    case MorphismClass::RegMono: return "regmono";
    case MorphismClass::RegEpi: return "regepi";
    case MorphismClass::Iso: return "iso";
  }
  return "?";
}

bool is_morphism(const DoublePoset& src, const DoublePoset& dst, std::span<const int> f) {
  for (int a = 0; a < src.size(); ++a) {
    for (int b = 0; b < src.size(); ++b) {
      if (src.west.less(a, b) && !dst.west.less(f[a], f[b])) return false;
      if (src.south.less(a, b) && !dst.south.less(f[a], f[b])) return false;
    }
  }
  return true;
}

bool is_injective(const DoublePoset& src, const DoublePoset& dst, std::span<const int> f) {
  std::vector<char> hit(dst.size(), 0);
  for (int a = 0; a < src.size(); ++a) {
    if (hit[f[a]]) return false;
    hit[f[a]] = 1;
  }
  return true;
}

bool is_surjective(const DoublePoset& src, const DoublePoset& dst, std::span<const int> f) {
  std::vector<char> hit(dst.size(), 0);
  for (int a = 0; a < src.size(); ++a) hit[f[a]] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_regular_mono(const DoublePoset& src, const DoublePoset& dst, std::span<const int> f) {
  if (!is_injective(src, dst, f)) return false;
  for (int a = 0; a < src.size(); ++a) {
    for (int b = 0; b < src.size(); ++b) {
      if (dst.west.less(f[a], f[b]) && !src.west.less(a, b)) return false;
      if (dst.south.less(f[a], f[b]) && !src.south.less(a, b)) return false;
    }
  }
  return true;
}

namespace {

bool covers_hit(const StrictPoset& s, const StrictPoset& d, std::span<const int> f) {
  for (auto [u, v] : d.covers()) {
    bool found = false;
    for (int a = 0; a < s.size() && !found; ++a) {
      if (f[a] != u) continue;
      for (int b = 0; b < s.size() && !found; ++b) found = f[b] == v && s.less(a, b);
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool is_regular_epi(const DoublePoset& src, const DoublePoset& dst, std::span<const int> f) {
  return is_surjective(src, dst, f) && covers_hit(src.west, dst.west, f) && covers_hit(src.south, dst.south, f);
}

bool in_class(MorphismClass c, const DoublePoset& src, const DoublePoset& dst, std::span<const int> f) {
  switch (c) {
    case MorphismClass::Mor: return true;
    case MorphismClass::Mono: return is_injective(src, dst, f);
    case MorphismClass::Epi: return is_surjective(src, dst, f);
    case MorphismClass::RegMono: return is_regular_mono(src, dst, f);
    case MorphismClass::RegEpi: return is_regular_epi(src, dst, f);
    case MorphismClass::Iso: return is_regular_mono(src, dst, f) && is_surjective(src, dst, f);
  }
  return false;
}

namespace {

void check_size(const DoublePoset& src, const DoublePoset& dst) {
  if (src.size() > kMaxMorphismSize || dst.size() > kMaxMorphismSize) {
    fail(ErrorCode::TooLarge, "morphism enumeration is limited to " + std::to_string(kMaxMorphismSize) + " elements");
  }
}

struct Search {
  const DoublePoset& src;
  const DoublePoset& dst;
  bool injective;
  bool surjective;
  const std::function<void(std::span<const int>)>& fn;
  std::vector<int> order;
  std::vector<int> f;
  std::vector<int> hits;
  int distinct = 0;

  void run(std::size_t t) {
    if (t == order.size()) {
      fn(f);
      return;
    }
    const int remaining = static_cast<int>(order.size() - t);
    if (surjective && dst.size() - distinct > remaining) return;
    const int v = order[t];
    for (int y = 0; y < dst.size(); ++y) {
      if (injective && hits[y]) continue;
      bool ok = true;
      for (std::size_t s = 0; s < t && ok; ++s) {
        const int u = order[s];
        const int fu = f[u];
        if (src.west.less(u, v) && !dst.west.less(fu, y)) ok = false;
        else if (src.west.less(v, u) && !dst.west.less(y, fu)) ok = false;
        else if (src.south.less(u, v) && !dst.south.less(fu, y)) ok = false;
        else if (src.south.less(v, u) && !dst.south.less(y, fu)) ok = false;
      }
      if (!ok) continue;
      f[v] = y;
      if (hits[y]++ == 0) ++distinct;
      run(t + 1);
      if (--hits[y] == 0) --distinct;
    }
    f[v] = -1;
  }
};

void search(const DoublePoset& src, const DoublePoset& dst, bool injective, bool surjective,
            const std::function<void(std::span<const int>)>& fn) {
  Search s{src, dst, injective, surjective, fn, {}, std::vector<int>(src.size(), -1),
           std::vector<int>(dst.size(), 0)};
  s.order.resize(src.size());
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
    return std::popcount(src.west.predecessors(a)) < std::popcount(src.west.predecessors(b));
  });
  s.run(0);
}

}  // namespace

void for_each_morphism(const DoublePoset& src, const DoublePoset& dst,
                       const std::function<void(std::span<const int>)>& fn) {
  check_size(src, dst);
  search(src, dst, false, false, fn);
}

std::uint64_t enumerate_morphisms(const DoublePoset& src, const DoublePoset& dst, MorphismClass c) {
  check_size(src, dst);
  const bool inj = c == MorphismClass::Mono || c == MorphismClass::RegMono || c == MorphismClass::Iso;
  const bool sur = c == MorphismClass::Epi || c == MorphismClass::RegEpi || c == MorphismClass::Iso;
  if (inj && src.size() > dst.size()) return 0;
  if (sur && src.size() < dst.size()) return 0;
  std::uint64_t count = 0;
  search(src, dst, inj, sur, [&](std::span<const int> f) {
    if (in_class(c, src, dst, f)) ++count;
  });
  return count;
}

MorphismClassCounts count_morphism_classes(const DoublePoset& src, const DoublePoset& dst) {
  check_size(src, dst);
  MorphismClassCounts r;
  search(src, dst, false, false, [&](std::span<const int> f) {
    ++r.mor;
    const bool inj = is_injective(src, dst, f);
    const bool sur = is_surjective(src, dst, f);
    const bool rm = inj && is_regular_mono(src, dst, f);
    r.mono += inj;
    r.epi += sur;
    r.regmono += rm;
    r.regepi += sur && is_regular_epi(src, dst, f);
    r.iso += rm && sur;
  });
  r.aut = automorphism_count(dst);
  return r;
}

std::uint64_t automorphism_count(const DoublePoset& d) { return enumerate_morphisms(d, d, MorphismClass::Iso); }

namespace {

std::vector<StrictPoset> labeled_posets(int k) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j) slots.emplace_back(i, j);
    }
  }
  std::vector<StrictPoset> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::uint64_t> succ(k, 0);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((mask >> s) & 1u) succ[slots[s].first] |= std::uint64_t{1} << slots[s].second;
    }
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      for (int j = 0; j < k && ok; ++j) {
        if (!((succ[i] >> j) & 1u)) continue;
        if ((succ[j] >> i) & 1u) ok = false;
        if ((succ[j] & ~succ[i]) != 0) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<std::pair<int, int>> rel;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((mask >> s) & 1u) rel.push_back(slots[s]);
    }
    out.push_back(StrictPoset::from_relation(k, rel));
  }
  return out;
}

std::optional<StrictPoset> try_close(int n, const std::vector<std::pair<int, int>>& rel) {
  for (auto [a, b] : rel) {
    if (a == b) return std::nullopt;
  }
  try {
    return StrictPoset::from_relation(n, rel);
  } catch (const Error&) {
    return std::nullopt;
  }
}

template <class Fn>
void for_each_partition(int n, Fn fn) {
  std::vector<int> rgs(n, 0);
  std::vector<int> mx(n + 1, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      fn(rgs, blocks);
      return;
    }
    for (int b = 0; b <= blocks && b < n; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) {
    fn(rgs, 0);
    return;
  }
  rec(0, 0);
}

std::vector<std::vector<int>> linear_extensions(const StrictPoset& p) {
  const int n = p.size();
  std::vector<std::vector<int>> out;
  std::vector<int> rank(n, -1);
  std::vector<std::uint64_t> pred(n);
  for (int i = 0; i < n; ++i) pred[i] = p.predecessors(i);
  std::uint64_t placed = 0;
  std::function<void(int)> rec = [&](int t) {
    if (t == n) {
      out.push_back(rank);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((placed >> v) & 1u) continue;
      if ((pred[v] & ~placed) != 0) continue;
      placed |= std::uint64_t{1} << v;
      rank[v] = t;
      rec(t + 1);
      placed &= ~(std::uint64_t{1} << v);
    }
  };
  rec(0);
  return out;
}

}  // namespace

const std::vector<DoublePoset>& double_poset_classes(int k) {
  if (k < 0 || k > kMaxPhiSize) {
    fail(ErrorCode::TooLarge, "double poset classes are enumerated up to " + std::to_string(kMaxPhiSize) + " elements");
  }
  static std::mutex mu;
  static std::array<std::optional<std::vector<DoublePoset>>, kMaxPhiSize + 1> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[k]) {
    auto posets = labeled_posets(k);
    std::set<CanonicalForm> forms;
    for (const auto& w : posets) {
      for (const auto& s : posets) forms.insert(canonical_form(DoublePoset(w, s)));
    }
    std::vector<DoublePoset> out;
    for (const auto& f : forms) out.push_back(from_canonical(f));
    cache[k] = std::move(out);
  }
  return *cache[k];
}

std::vector<Quotient> morphism_quotients(const DoublePoset& d) {
  const int n = d.size();
  std::vector<Quotient> out;
  const auto wp = d.west.pairs();
  const auto sp = d.south.pairs();
  for_each_partition(n, [&](const std::vector<int>& rgs, int blocks) {
    std::vector<std::pair<int, int>> w, s;
    for (auto [a, b] : wp) w.emplace_back(rgs[a], rgs[b]);
    for (auto [a, b] : sp) s.emplace_back(rgs[a], rgs[b]);
    auto cw = try_close(blocks, w);
    if (!cw) return;
    auto cs = try_close(blocks, s);
    if (!cs) return;
    out.push_back({DoublePoset(*cw, *cs), rgs});
  });
  return out;
}

namespace {

void check_phi_size(const DoublePoset& d) {
  if (d.size() > kMaxPhiSize) {
    fail(ErrorCode::TooLarge, "phi maps are computed up to " + std::to_string(kMaxPhiSize) + " elements");
  }
}

}  // namespace

DPVector phi_regmono_from_mor(const DoublePoset& d) {
  check_phi_size(d);
  DPVector out;
  // the empty double poset maps only onto itself
  if (d.size() == 0) out[canonical_form(d)] = 1;
  for (int k = 1; k <= d.size(); ++k) {
    for (const auto& c : double_poset_classes(k)) {
      const std::uint64_t e = enumerate_morphisms(d, c, MorphismClass::Epi);
      if (e == 0) continue;
      out[canonical_form(c)] = mpq_class(mpz_class(std::to_string(e)), mpz_class(std::to_string(automorphism_count(c))));
    }
  }
  for (auto& [k, v] : out) v.canonicalize();
  return out;
}

DPVector phi_mono_from_mor(const DoublePoset& d) {
  if (d.size() > kMaxPhiMonoSize) {
    fail(ErrorCode::TooLarge, "phi_mono is computed up to " + std::to_string(kMaxPhiMonoSize) + " elements");
  }
  std::set<CanonicalForm> images;
  for (const auto& q : morphism_quotients(d)) images.insert(canonical_form(q.dp));
  DPVector out;
  for (const auto& f : images) {
    const DoublePoset c = from_canonical(f);
    const std::uint64_t e = enumerate_morphisms(d, c, MorphismClass::RegEpi);
    if (e == 0) continue;
    mpq_class q(mpz_class(std::to_string(e)), mpz_class(std::to_string(automorphism_count(c))));
    q.canonicalize();
    out[f] = q;
  }
  return out;
}

PatternVector pattern_vector(const DoublePoset& d) {
  if (d.size() > kMaxPatternVectorSize) {
    fail(ErrorCode::TooLarge, "pattern vectors are computed up to " + std::to_string(kMaxPatternVectorSize) + " elements");
  }
  std::map<std::vector<int>, std::uint64_t> tally;
  for (const auto& q : morphism_quotients(d)) {
    const int k = q.dp.size();
    const auto lw = linear_extensions(q.dp.west);
    const auto ls = linear_extensions(q.dp.south);
    std::vector<int> sigma(k);
    for (const auto& pw : lw) {
      for (const auto& ps : ls) {
        for (int b = 0; b < k; ++b) sigma[pw[b]] = ps[b] + 1;
        ++tally[sigma];
      }
    }
  }
  PatternVector out;
  for (auto& [s, c] : tally) out[Permutation(s)] = mpq_class(mpz_class(std::to_string(c)));
  return out;
}

std::string to_string(const PatternVector& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : v) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c.get_str();
    const bool wide = p.size() >= 10;
    os << '[' << (wide ? p.to_string() : [&] {
      std::string s;
      for (int x : p.values()) s += std::to_string(x);
      return s;
    }()) << ']';
  }
  return os.str();
}

mpq_class pair_with_occurrences(const PatternVector& v, const Permutation& big) {
  mpq_class s = 0;
  for (const auto& [p, c] : v) s += c * mpq_class(mpz_class(std::to_string(naive_pattern_count(big, p))));
  return s;
}

namespace {

std::string describe(const DoublePoset& d) {
  std::ostringstream os;
  os << "n=" << d.size() << " west{";
  for (auto [a, b] : d.west.covers()) os << a << '<' << b << ' ';
  os << "} south{";
  for (auto [a, b] : d.south.covers()) os << a << '<' << b << ' ';
  os << '}';
  return os.str();
}

std::set<CanonicalForm> induced_classes(const DoublePoset& b) {
  std::set<CanonicalForm> out;
  for (std::uint32_t mask = 1; mask < (1u << b.size()); ++mask) {
    std::vector<int> keep;
    for (int i = 0; i < b.size(); ++i) {
      if ((mask >> i) & 1u) keep.push_back(i);
    }
    out.insert(canonical_form(b.restricted(keep)));
  }
  return out;
}

}  // namespace

FactorizationReport check_factorization(const DoublePoset& a, const DoublePoset& b) {
  if (a.size() > kMaxPhiSize || b.size() > kMaxPhiSize) {
    fail(ErrorCode::TooLarge, "factorization checks are limited to " + std::to_string(kMaxPhiSize) + " elements");
  }
  std::map<CanonicalForm, std::uint64_t> induced, pushed;
  for_each_morphism(a, b, [&](std::span<const int> f) {
    std::vector<int> image(f.begin(), f.end());
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    ++induced[canonical_form(b.restricted(image))];
    std::vector<int> pos(b.size(), -1);
    for (std::size_t i = 0; i < image.size(); ++i) pos[image[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> w, s;
    for (auto [x, y] : a.west.pairs()) w.emplace_back(pos[f[x]], pos[f[y]]);
    for (auto [x, y] : a.south.pairs()) s.emplace_back(pos[f[x]], pos[f[y]]);
    const int k = static_cast<int>(image.size());
    ++pushed[canonical_form(DoublePoset(StrictPoset::from_relation(k, w), StrictPoset::from_relation(k, s)))];
  });

  FactorizationReport r;
  std::set<CanonicalForm> c1 = induced_classes(b);
  for (const auto& [k, v] : induced) c1.insert(k);
  for (const auto& f : c1) {
    const DoublePoset c = from_canonical(f);
    const std::uint64_t lhs = (induced.count(f) ? induced[f] : 0) * automorphism_count(c);
    const std::uint64_t rhs = enumerate_morphisms(a, c, MorphismClass::Epi) * enumerate_morphisms(c, b, MorphismClass::RegMono);
    ++r.classes_checked;
    if (lhs != rhs && r.pass) {
      r.pass = false;
      r.counterexample = "epi/regmono at C = " + describe(c) + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs);
    }
  }
  std::set<CanonicalForm> c2;
  for (const auto& q : morphism_quotients(a)) c2.insert(canonical_form(q.dp));
  for (const auto& [k, v] : pushed) c2.insert(k);
  for (const auto& f : c2) {
    const DoublePoset c = from_canonical(f);
    const std::uint64_t lhs = (pushed.count(f) ? pushed[f] : 0) * automorphism_count(c);
    const std::uint64_t rhs = enumerate_morphisms(a, c, MorphismClass::RegEpi) * enumerate_morphisms(c, b, MorphismClass::Mono);
    ++r.classes_checked;
    if (lhs != rhs && r.pass) {
      r.pass = false;
      r.counterexample = "regepi/mono at C = " + describe(c) + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs);
    }
  }
  return r;
}

TranslationReport check_translation(const DoublePoset& d, const DoublePoset& large) {
  TranslationReport r;
  r.mor = mpq_class(mpz_class(std::to_string(enumerate_morphisms(d, large, MorphismClass::Mor))));
  for (const auto& [f, c] : phi_regmono_from_mor(d)) {
    r.via_regmono += c * mpq_class(mpz_class(std::to_string(enumerate_morphisms(from_canonical(f), large, MorphismClass::RegMono))));
  }
  for (const auto& [f, c] : phi_mono_from_mor(d)) {
    r.via_mono += c * mpq_class(mpz_class(std::to_string(enumerate_morphisms(from_canonical(f), large, MorphismClass::Mono))));
  }
  return r;
}

TriangularityReport check_triangularity(int n) {
  const auto& classes = double_poset_classes(n);
  auto key = [](const DoublePoset& d) { return std::make_pair(d.west.relation_size(), d.south.relation_size()); };
  TriangularityReport r;
  r.classes = classes.size();
  for (const auto& c : classes) {
    const CanonicalForm fc = canonical_form(c);
    const auto phi = phi_regmono_from_mor(c);
    auto diag = phi.find(fc);
    if (diag == phi.end() || diag->second != 1) {
      if (r.unit_diagonal) r.counterexample = "diagonal entry is not 1 at " + describe(c);
      r.unit_diagonal = false;
    }
    for (const auto& [f, coef] : phi) {
      if (f.n != n || f == fc) continue;
      const DoublePoset other = from_canonical(f);
      if (!(key(other) > key(c))) {
        if (r.triangular) r.counterexample = "entry above the diagonal at " + describe(c) + " -> " + describe(other);
        r.triangular = false;
      }
    }
  }
  return r;
}

RankResult rank_of_family(const std::vector<DoublePoset>& family, int k) {
  if (k < 1 || k > 5) fail(ErrorCode::TooLarge, "rank computations support top levels 1..5");
  std::map<Permutation, std::size_t> column;
  std::vector<std::size_t> level_of;
  for (int size = 1; size <= k; ++size) {
    for (const auto& p : all_permutations(size)) {
      column.emplace(p, column.size());
      level_of.push_back(static_cast<std::size_t>(size));
    }
  }
  std::vector<std::vector<mpz_class>> rows, low, top;
  for (const auto& d : family) {
    if (d.size() > k) fail(ErrorCode::TooLarge, "family member larger than the top level");
    std::vector<mpz_class> row(column.size());
    for (const auto& [p, c] : pattern_vector(d)) {
      if (c.get_den() != 1) fail(ErrorCode::InvalidInput, "pattern vector has a non-integer coefficient");
      row[column.at(p)] = c.get_num();
    }
    std::vector<mpz_class> lr, tr;
    for (std::size_t j = 0; j < row.size(); ++j) {
      (level_of[j] == static_cast<std::size_t>(k) ? tr : lr).push_back(row[j]);
    }
    rows.push_back(std::move(row));
    low.push_back(std::move(lr));
    top.push_back(std::move(tr));
  }
  RankResult r;
  r.dim_span = exact_rank(rows);
  r.dim_top = exact_rank(std::move(top));
  r.dim_top_intersection = r.dim_span - exact_rank(std::move(low));
  return r;
}

std::vector<DoublePoset> twin_tree_family(int max_size) {
  std::vector<DoublePoset> out;
  for (int k = 1; k <= max_size; ++k) {
    for (const auto& t : enumerate_snpolytrees(k)) out.push_back(snpolytree_to_dp(t));
  }
  return out;
}

std::array<ArboNE, 3> new_direction_arbos() {
  // 0 = dangle, 1..3 = spine (one, two, three), 4 = four
  enum { A, B, C, D, X };
  auto build = [](int dangle_parent) {
    std::vector<std::pair<int, int>> w{{B, C}, {C, D}, {B, X}, {C, X}, {D, X}, {A, dangle_parent}};
    std::vector<std::pair<int, int>> s{{C, B}, {D, C}, {B, X}, {C, X}, {D, X}, {A, dangle_parent}};
    DoublePoset dp(StrictPoset::from_relation(5, w), StrictPoset::from_relation(5, s));
    return ArboNE::validate(dp, {B, C, D, X});
  };
  return {build(B), build(C), build(D)};
}

std::vector<PatternVector> new_direction_vectors() {
  std::vector<PatternVector> out;
  for (const auto& a : new_direction_arbos()) out.push_back(pattern_vector(a.dp()));
  return out;
}

}  // namespace patterncount
