#include "posetfix/poset.hpp"

#include <algorithm>
#include <cstdint>

#include "posetfix/kernels.hpp"

namespace posetfix {

namespace {

void check_antisymmetry(const std::vector<std::string>& labels,
                        const std::uint8_t* rel, int n) {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rel[static_cast<std::size_t>(a) * n + b] &&
          rel[static_cast<std::size_t>(b) * n + a])
        throw PosetError(Errc::antisymmetry_violation,
                         "antisymmetry violated: " + labels[a] + " <= " +
                             labels[b] + " <= " + labels[a]);
}

void check_transitivity(const std::vector<std::string>& labels,
                        const std::uint8_t* rel, int n) {
  for (int a = 0; a < n; ++a) {
    const std::uint8_t* row_a = rel + static_cast<std::size_t>(a) * n;
    for (int b = 0; b < n; ++b) {
      if (!row_a[b]) continue;
      const std::uint8_t* row_b = rel + static_cast<std::size_t>(b) * n;
      for (int c = 0; c < n; ++c)
        if (row_b[c] && !row_a[c])
          throw PosetError(Errc::not_transitive,
                           "relation not transitive: " + labels[a] + " <= " +
                               labels[b] + " <= " + labels[c] + " but not " +
                               labels[a] + " <= " + labels[c]);
    }
  }
}

std::vector<std::string> index_labels(const std::vector<std::string>& labels,
                                      std::unordered_map<std::string, Elem>& out) {
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    auto [it, fresh] = out.emplace(labels[i], i);
    if (!fresh)
      throw PosetError(Errc::duplicate_label,
                       "duplicate label \"" + labels[i] + "\"");
  }
  return labels;
}

}  // namespace

void Poset::finish_construction() {
  index_.clear();
  index_labels(labels_, index_);
  bottom_.reset();
  top_.reset();
  for (Elem b = 0; b < n_; ++b) {
    bool least = true;
    for (Elem x = 0; x < n_ && least; ++x) least = leq_unchecked(b, x);
    if (least) {
      bottom_ = b;
      break;
    }
  }
  for (Elem t = 0; t < n_; ++t) {
    bool greatest = true;
    for (Elem x = 0; x < n_ && greatest; ++x) greatest = leq_unchecked(x, t);
    if (greatest) {
      top_ = t;
      break;
    }
  }
}

std::optional<Elem> Poset::find(std::string_view lbl) const {
  auto it = index_.find(std::string(lbl));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem Poset::index_of(std::string_view lbl) const {
  if (auto e = find(lbl)) return *e;
  throw PosetError(Errc::unknown_label,
                   "unknown label \"" + std::string(lbl) + "\"");
}

Subset Poset::carrier() const {
  Subset all(n_);
  for (int i = 0; i < n_; ++i) all[i] = i;
  return all;
}

Poset build_poset(const std::vector<std::string>& labels,
                  const std::vector<LabelPair>& pairs, OrderInput mode,
                  Exec exec) {
  if (labels.empty())
    throw PosetError(Errc::bad_spec, "carrier must be non-empty");

  Poset p;
  p.n_ = static_cast<int>(labels.size());
  p.labels_ = labels;
  index_labels(labels, p.index_);

  const int n = p.n_;
  p.rel_.assign(static_cast<std::size_t>(n) * n, 0);

  auto lookup = [&](const std::string& lbl) -> Elem {
    auto it = p.index_.find(lbl);
    if (it == p.index_.end())
      throw PosetError(Errc::unknown_label,
                       "pair references unknown label \"" + lbl + "\"");
    return it->second;
  };

  for (const auto& [a, b] : pairs)
    p.rel_[static_cast<std::size_t>(lookup(a)) * n + lookup(b)] = 1;

  if (mode == OrderInput::covers) {
    kernels::transitive_closure(p.rel_.data(), n, exec);
  } else {
    for (Elem x = 0; x < n; ++x)
      if (!p.rel_[static_cast<std::size_t>(x) * n + x])
        throw PosetError(Errc::not_reflexive,
                         "full relation misses reflexive pair (" + labels[x] +
                             ", " + labels[x] + ")");
    check_transitivity(labels, p.rel_.data(), n);
  }
  check_antisymmetry(labels, p.rel_.data(), n);

  p.finish_construction();
  return p;
}

Poset poset_from_matrix(std::vector<std::string> labels,
                        std::vector<std::uint8_t> matrix) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw PosetError(Errc::bad_spec, "carrier must be non-empty");
  if (matrix.size() != static_cast<std::size_t>(n) * n)
    throw PosetError(Errc::bad_spec, "relation matrix has wrong size");

  for (Elem x = 0; x < n; ++x)
    if (!matrix[static_cast<std::size_t>(x) * n + x])
      throw PosetError(Errc::not_reflexive,
                       "matrix misses reflexive pair at " + labels[x]);
  check_transitivity(labels, matrix.data(), n);
  check_antisymmetry(labels, matrix.data(), n);

  Poset p;
  p.n_ = n;
  p.labels_ = std::move(labels);
  p.rel_ = std::move(matrix);
  p.finish_construction();
  return p;
}

Subset make_subset(const Poset& p, std::vector<Elem> members) {
  for (Elem x : members) p.check_elem(x);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

namespace {

void check_members(const Poset& p, const Subset& s) {
  for (Elem x : s) p.check_elem(x);
}

}  // namespace

bool is_chain(const Poset& p, const Subset& s) {
  check_members(p, s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!p.leq_unchecked(s[i], s[j]) && !p.leq_unchecked(s[j], s[i]))
        return false;
  return true;
}

bool is_directed(const Poset& p, const Subset& s) {
  check_members(p, s);
  if (s.empty()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j) {
      bool majorant = false;
      for (Elem z : s) {
        if (p.leq_unchecked(s[i], z) && p.leq_unchecked(s[j], z)) {
          majorant = true;
          break;
        }
      }
      if (!majorant) return false;
    }
  }
  return true;
}

std::optional<Elem> sup_subset(const Poset& p, const Subset& s) {
  check_members(p, s);
  if (s.empty()) return p.bottom();
  const int n = p.size();
  std::vector<Elem> uppers;
  for (Elem z = 0; z < n; ++z) {
    bool upper = true;
    for (Elem x : s)
      if (!p.leq_unchecked(x, z)) {
        upper = false;
        break;
      }
    if (upper) uppers.push_back(z);
  }
  for (Elem cand : uppers) {
    bool below_all = true;
    for (Elem z : uppers)
      if (!p.leq_unchecked(cand, z)) {
        below_all = false;
        break;
      }
    if (below_all) return cand;
  }
  return std::nullopt;
}

std::optional<Elem> inf_subset(const Poset& p, const Subset& s) {
  check_members(p, s);
  if (s.empty()) return p.top();
  const int n = p.size();
  std::vector<Elem> lowers;
  for (Elem z = 0; z < n; ++z) {
    bool lower = true;
    for (Elem x : s)
      if (!p.leq_unchecked(z, x)) {
        lower = false;
        break;
      }
    if (lower) lowers.push_back(z);
  }
  for (Elem cand : lowers) {
    bool above_all = true;
    for (Elem z : lowers)
      if (!p.leq_unchecked(z, cand)) {
        above_all = false;
        break;
      }
    if (above_all) return cand;
  }
  return std::nullopt;
}

std::optional<Elem> join(const Poset& p, Elem a, Elem b) {
  return sup_subset(p, make_subset(p, {a, b}));
}

std::optional<Elem> meet(const Poset& p, Elem a, Elem b) {
  return inf_subset(p, make_subset(p, {a, b}));
}

bool is_chain_complete(const Poset& p) { return p.bottom().has_value(); }

bool is_complete_lattice(const Poset& p) {
  if (!p.bottom() || !p.top()) return false;
  const int n = p.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (!join(p, a, b) || !meet(p, a, b)) return false;
  return true;
}

void for_each_chain_mask(const Poset& p,
                         const std::function<void(std::uint32_t)>& fn) {
  const int n = p.size();
  if (n > exhaustive_limit)
    throw PosetError(Errc::bad_spec,
                     "carrier too large for exhaustive chain enumeration");
  // comp[i]: elements comparable with i.
  std::vector<std::uint32_t> comp(n, 0);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      if (p.leq_unchecked(i, j) || p.leq_unchecked(j, i))
        comp[i] |= (1u << j);

  const std::uint32_t total = 1u << n;
  std::vector<std::uint8_t> chain(total, 0);
  chain[0] = 1;
  fn(0);
  for (std::uint32_t s = 1; s < total; ++s) {
    const int h = 31 - __builtin_clz(s);
    const std::uint32_t rest = s & ~(1u << h);
    // s is a chain iff s minus its top bit is one and that bit is
    // comparable with everything below it.
    chain[s] = chain[rest] && (rest & ~comp[h]) == 0;
    if (chain[s]) fn(s);
  }
}

Subset subset_from_mask(std::uint32_t mask) {
  Subset s;
  while (mask) {
    s.push_back(__builtin_ctz(mask));
    mask &= mask - 1;
  }
  return s;
}

bool is_chain_complete_literal(const Poset& p) {
  bool complete = true;
  for_each_chain_mask(p, [&](std::uint32_t mask) {
    if (!complete) return;
    if (!sup_subset(p, subset_from_mask(mask))) complete = false;
  });
  return complete;
}

bool is_complete_lattice_literal(const Poset& p) {
  const int n = p.size();
  if (n > exhaustive_limit)
    throw PosetError(Errc::bad_spec,
                     "carrier too large for exhaustive subset enumeration");
  const std::uint32_t total = 1u << n;
  for (std::uint32_t s = 0; s < total; ++s) {
    Subset sub = subset_from_mask(s);
    if (!sup_subset(p, sub) || !inf_subset(p, sub)) return false;
  }
  return true;
}

Poset induced_subposet(const Poset& p, const Subset& s) {
  if (s.empty())
    throw PosetError(Errc::empty_subset,
                     "induced subposet needs a non-empty subset");
  check_members(p, s);
  Subset sorted = make_subset(p, s);
  const int m = static_cast<int>(sorted.size());
  std::vector<std::string> labels(m);
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) {
    labels[i] = p.label(sorted[i]);
    for (int j = 0; j < m; ++j)
      rel[static_cast<std::size_t>(i) * m + j] =
          p.leq_unchecked(sorted[i], sorted[j]) ? 1 : 0;
  }
  return poset_from_matrix(std::move(labels), std::move(rel));
}

Subset upper_set(const Poset& p, Elem a) {
  p.check_elem(a);
  Subset up;
  for (Elem x = 0; x < p.size(); ++x)
    if (p.leq_unchecked(a, x)) up.push_back(x);
  return up;
}

}  // namespace posetfix
