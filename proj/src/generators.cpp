#include "posetfix/generators.hpp"

#include <algorithm>
#include <numeric>

namespace posetfix {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw PosetError(Errc::bad_spec, msg);
}

Poset from_covers(std::vector<std::string> labels,
                  std::vector<LabelPair> covers) {
  require(labels.size() <= max_generated_carrier,
          "generated carrier exceeds " +
              std::to_string(max_generated_carrier) + " elements");
  return build_poset(labels, covers, OrderInput::covers);
}

Poset make_chain(int n) {
  require(n >= 1, "chain needs n >= 1");
  std::vector<std::string> labels;
  std::vector<LabelPair> covers;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i)
    covers.emplace_back(labels[i], labels[i + 1]);
  return from_covers(std::move(labels), std::move(covers));
}

Poset make_antichain_plus_bottom(int n) {
  require(n >= 1, "antichain-plus-bottom needs n >= 1");
  std::vector<std::string> labels{"bot"};
  std::vector<LabelPair> covers;
  for (int i = 0; i < n; ++i) {
    labels.push_back("a" + std::to_string(i));
    covers.emplace_back("bot", labels.back());
  }
  return from_covers(std::move(labels), std::move(covers));
}

std::string subset_label(unsigned mask, int n) {
  std::string out = "{";
  bool first = true;
  for (int b = 0; b < n; ++b)
    if (mask & (1u << b)) {
      if (!first) out += ",";
      out += std::to_string(b + 1);
      first = false;
    }
  return out + "}";
}

Poset make_powerset(int n) {
  require(n >= 0 && n <= 6, "powerset needs 0 <= n <= 6");
  const unsigned count = 1u << n;
  std::vector<std::string> labels;
  for (unsigned mask = 0; mask < count; ++mask)
    labels.push_back(subset_label(mask, n));
  // Covers: add one missing bit.
  std::vector<LabelPair> covers;
  for (unsigned mask = 0; mask < count; ++mask)
    for (int b = 0; b < n; ++b)
      if (!(mask & (1u << b)))
        covers.emplace_back(labels[mask], labels[mask | (1u << b)]);
  return from_covers(std::move(labels), std::move(covers));
}

Poset make_divisor(int n) {
  require(n >= 1, "divisor needs n >= 1");
  std::vector<int> divs;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  std::vector<std::string> labels;
  for (int d : divs) labels.push_back(std::to_string(d));
  std::vector<LabelPair> pairs;  // full divisibility; closure is a no-op
  for (int a : divs)
    for (int b : divs)
      if (b % a == 0 && a != b)
        pairs.emplace_back(std::to_string(a), std::to_string(b));
  return from_covers(std::move(labels), std::move(pairs));
}

Poset make_product(int n, int m) {
  require(n >= 1 && m >= 1, "product needs n, m >= 1");
  auto name = [](int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  std::vector<std::string> labels;
  std::vector<LabelPair> covers;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      labels.push_back(name(i, j));
      if (i + 1 < n) covers.emplace_back(name(i, j), name(i + 1, j));
      if (j + 1 < m) covers.emplace_back(name(i, j), name(i, j + 1));
    }
  return from_covers(std::move(labels), std::move(covers));
}

Poset make_diamond_m3() {
  return from_covers({"bot", "a", "b", "c", "top"},
                     {{"bot", "a"},
                      {"bot", "b"},
                      {"bot", "c"},
                      {"a", "top"},
                      {"b", "top"},
                      {"c", "top"}});
}

Poset make_pentagon_n5() {
  return from_covers(
      {"bot", "a", "b", "c", "top"},
      {{"bot", "a"}, {"a", "c"}, {"c", "top"}, {"bot", "b"}, {"b", "top"}});
}

Poset make_random_order(int n, std::uint64_t seed) {
  require(n >= 1, "random needs n >= 1");
  // Bottom plus a random DAG on the remaining n-1 nodes. Edges only go from
  // lower to higher index, so the cover list is acyclic by construction and
  // build_poset's validation cannot trip over antisymmetry.
  SplitMix64 rng(seed);
  const std::uint64_t sixths = 1 + rng.below(3);  // density 1/6, 2/6 or 3/6
  std::vector<std::string> labels{"bot"};
  std::vector<LabelPair> covers;
  for (int i = 1; i < n; ++i) {
    labels.push_back("x" + std::to_string(i));
    covers.emplace_back("bot", labels.back());
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.below(6) < sixths) covers.emplace_back(labels[i], labels[j]);
  return from_covers(std::move(labels), std::move(covers));
}

// Indices sorted by strict-below count: a < b implies the count of a is
// smaller, so this is a linear extension of the order.
std::vector<Elem> linear_extension(const Poset& p) {
  const int n = p.size();
  std::vector<int> below(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (a != b && p.leq_unchecked(a, b)) ++below[b];
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return below[a] < below[b]; });
  return order;
}

std::vector<Elem> lower_covers(const Poset& p, Elem x) {
  std::vector<Elem> covers;
  for (Elem z = 0; z < p.size(); ++z) {
    if (z == x || !p.leq_unchecked(z, x)) continue;
    bool is_cover = true;
    for (Elem w = 0; w < p.size(); ++w)
      if (w != z && w != x && p.leq_unchecked(z, w) && p.leq_unchecked(w, x)) {
        is_cover = false;
        break;
      }
    if (is_cover) covers.push_back(z);
  }
  return covers;
}

// Single pass over a linear extension. Every y < x is below some lower cover
// already assigned, so constraining by cover images keeps the partial map
// isotone; fails (rarely, non-lattices only) when those images have no
// common upper bound.
bool try_isotone_draw(const Poset& p, SplitMix64& rng,
                      const std::vector<Elem>& ext,
                      const std::vector<std::vector<Elem>>& covers,
                      std::vector<Elem>& table) {
  const int n = p.size();
  std::vector<Elem> candidates;
  for (Elem x : ext) {
    candidates.clear();
    for (Elem c = 0; c < n; ++c) {
      bool ok = true;
      for (Elem z : covers[x])
        if (!p.leq_unchecked(table[z], c)) {
          ok = false;
          break;
        }
      if (ok) candidates.push_back(c);
    }
    if (candidates.empty()) return false;
    table[x] = candidates[rng.below(candidates.size())];
  }
  return true;
}

}  // namespace

const char* poset_kind_name(PosetKind k) {
  switch (k) {
    case PosetKind::chain: return "chain";
    case PosetKind::antichain_plus_bottom: return "antichain-plus-bottom";
    case PosetKind::powerset: return "powerset";
    case PosetKind::divisor: return "divisor";
    case PosetKind::product: return "product";
    case PosetKind::diamond_m3: return "diamond-M3";
    case PosetKind::pentagon_n5: return "pentagon-N5";
    case PosetKind::random_order: return "random";
  }
  return "unknown";
}

PosetKind poset_kind_from_name(const std::string& name) {
  for (PosetKind k :
       {PosetKind::chain, PosetKind::antichain_plus_bottom, PosetKind::powerset,
        PosetKind::divisor, PosetKind::product, PosetKind::diamond_m3,
        PosetKind::pentagon_n5, PosetKind::random_order})
    if (name == poset_kind_name(k)) return k;
  throw PosetError(Errc::bad_spec, "unknown poset kind \"" + name + "\"");
}

Poset make_standard_poset(const GenSpec& spec) {
  switch (spec.kind) {
    case PosetKind::chain: return make_chain(spec.n);
    case PosetKind::antichain_plus_bottom:
      return make_antichain_plus_bottom(spec.n);
    case PosetKind::powerset: return make_powerset(spec.n);
    case PosetKind::divisor: return make_divisor(spec.n);
    case PosetKind::product: return make_product(spec.n, spec.m);
    case PosetKind::diamond_m3: return make_diamond_m3();
    case PosetKind::pentagon_n5: return make_pentagon_n5();
    case PosetKind::random_order:
      return make_random_order(spec.n, spec.rng_seed);
  }
  throw PosetError(Errc::bad_spec, "unknown poset kind");
}

Family join_translation_family(const Poset& p, const Subset& A) {
  if (A.empty())
    throw PosetError(Errc::bad_spec, "join-translation set must be non-empty");
  Subset members = make_subset(p, A);
  std::vector<MapTable> maps;
  maps.reserve(members.size());
  for (Elem a : members) {
    MapTable f;
    f.name = "join(" + p.label(a) + ")";
    f.table.resize(p.size());
    for (Elem x = 0; x < p.size(); ++x) {
      auto j = join(p, x, a);
      if (!j)
        throw PosetError(Errc::not_a_lattice, "no join of " + p.label(x) +
                                                  " and " + p.label(a));
      f.table[x] = *j;
    }
    maps.push_back(std::move(f));
  }
  return make_family(p, std::move(maps));
}

const char* family_strategy_name(FamilyStrategy s) {
  switch (s) {
    case FamilyStrategy::powers: return "powers";
    case FamilyStrategy::join_translations: return "join-translations";
  }
  return "unknown";
}

FamilyStrategy family_strategy_from_name(const std::string& name) {
  for (FamilyStrategy s :
       {FamilyStrategy::powers, FamilyStrategy::join_translations})
    if (name == family_strategy_name(s)) return s;
  throw PosetError(Errc::bad_spec, "unknown family strategy \"" + name + "\"");
}

MapTable random_isotone_map(const Poset& p, SplitMix64& rng, std::string name) {
  const int n = p.size();
  const std::vector<Elem> ext = linear_extension(p);
  std::vector<std::vector<Elem>> covers(n);
  for (Elem x = 0; x < n; ++x) covers[x] = lower_covers(p, x);

  MapTable f;
  f.name = std::move(name);
  f.table.resize(n);
  for (int attempt = 0; attempt < 20; ++attempt) {
    SplitMix64 stream = rng.split();
    if (try_isotone_draw(p, stream, ext, covers, f.table)) return f;
  }
  // Constant maps are isotone on any poset; aim at a minimal element.
  std::fill(f.table.begin(), f.table.end(),
            p.bottom() ? *p.bottom() : ext.front());
  return f;
}

Family random_commuting_family(const Poset& p, FamilyStrategy strategy,
                               int count, std::uint64_t rng_seed) {
  if (count < 1) throw PosetError(Errc::bad_spec, "family count must be >= 1");
  SplitMix64 rng(rng_seed);
  if (strategy == FamilyStrategy::join_translations) {
    std::vector<Elem> picks;
    for (int i = 0; i < count; ++i)
      picks.push_back(static_cast<Elem>(rng.below(p.size())));
    return join_translation_family(p, make_subset(p, std::move(picks)));
  }
  // powers: f, f^2, ..., deduplicated by table.
  MapTable f = random_isotone_map(p, rng, "f");
  std::vector<MapTable> maps{f};
  MapTable power = f;
  for (int k = 2; k <= count; ++k) {
    power = compose(f, power);
    power.name = "f^" + std::to_string(k);
    bool seen = false;
    for (const MapTable& g : maps)
      if (same_table(g, power)) {
        seen = true;
        break;
      }
    if (!seen) maps.push_back(power);
  }
  return make_family(p, std::move(maps));
}

}  // namespace posetfix
