#include "posetfix/mapping.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "posetfix/kernels.hpp"

namespace posetfix {

bool same_table(const MapTable& f, const MapTable& g) {
  return f.table == g.table;
}

MapTable identity_map(const Poset& p, std::string name) {
  MapTable f{std::move(name), std::vector<Elem>(p.size())};
  for (Elem x = 0; x < p.size(); ++x) f.table[x] = x;
  return f;
}

MapTable build_map(const Poset& p, std::string name,
                   const std::map<std::string, std::string>& assignments) {
  for (const auto& [src, img] : assignments) {
    if (!p.find(src))
      throw PosetError(Errc::unknown_element,
                       "map \"" + name + "\" assigns unknown element \"" + src +
                           "\"");
    if (!p.find(img))
      throw PosetError(Errc::unknown_element,
                       "map \"" + name + "\" sends \"" + src +
                           "\" to unknown element \"" + img + "\"");
  }
  MapTable f{std::move(name), std::vector<Elem>(p.size(), -1)};
  for (Elem x = 0; x < p.size(); ++x) {
    auto it = assignments.find(p.label(x));
    if (it == assignments.end())
      throw PosetError(Errc::missing_assignment,
                       "map \"" + f.name + "\" has no assignment for \"" +
                           p.label(x) + "\"");
    f.table[x] = p.index_of(it->second);
  }
  return f;
}

std::optional<std::pair<Elem, Elem>> isotone_violation(const Poset& p,
                                                       const MapTable& f,
                                                       Exec exec) {
  if (f.size() != p.size())
    throw PosetError(Errc::poset_mismatch,
                     "map \"" + f.name + "\" does not match the carrier size");
  auto [x, y] =
      kernels::isotone_violation(p.relation_data(), f.table.data(), p.size(), exec);
  if (x < 0) return std::nullopt;
  return std::make_pair(x, y);
}

bool is_isotone(const Poset& p, const MapTable& f, Exec exec) {
  return !isotone_violation(p, f, exec).has_value();
}

bool is_chain_continuous_literal(const Poset& p, const MapTable& f) {
  if (f.size() != p.size())
    throw PosetError(Errc::poset_mismatch,
                     "map \"" + f.name + "\" does not match the carrier size");
  bool continuous = true;
  for_each_chain_mask(p, [&](std::uint32_t mask) {
    if (!continuous || mask == 0) return;
    Subset chain = subset_from_mask(mask);
    auto sup_c = sup_subset(p, chain);
    if (!sup_c) {
      // Cannot happen: a non-empty finite chain has a maximum.
      continuous = false;
      return;
    }
    Subset image;
    image.reserve(chain.size());
    for (Elem w : chain) image.push_back(f.table[w]);
    image = make_subset(p, std::move(image));
    auto sup_image = sup_subset(p, image);
    if (!sup_image || *sup_image != f.table[*sup_c]) continuous = false;
  });
  return continuous;
}

bool is_chain_continuous(const Poset& p, const MapTable& f) {
  if (p.size() <= exhaustive_limit) return is_chain_continuous_literal(p, f);
  return is_isotone(p, f);
}

MapTable compose(const MapTable& f, const MapTable& g) {
  if (f.size() != g.size())
    throw PosetError(Errc::poset_mismatch, "cannot compose \"" + f.name +
                                               "\" with \"" + g.name +
                                               "\": different carriers");
  MapTable h{f.name + "·" + g.name, std::vector<Elem>(f.table.size())};
  for (std::size_t x = 0; x < g.table.size(); ++x)
    h.table[x] = f.table[g.table[x]];
  return h;
}

Family make_family(const Poset& p, std::vector<MapTable> maps) {
  if (maps.empty())
    throw PosetError(Errc::bad_spec, "family must be non-empty");
  std::set<std::string> names;
  for (const MapTable& f : maps) {
    if (f.size() != p.size())
      throw PosetError(Errc::poset_mismatch,
                       "map \"" + f.name + "\" does not match the carrier size");
    for (Elem y : f.table) p.check_elem(y);
    if (!names.insert(f.name).second)
      throw PosetError(Errc::duplicate_label,
                       "duplicate map name \"" + f.name + "\"");
  }
  return Family{std::move(maps)};
}

std::optional<CommutativityWitness> find_noncommuting(const Family& fam) {
  const int m = fam.size();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto& f = fam[i].table;
      const auto& g = fam[j].table;
      for (Elem x = 0; x < static_cast<Elem>(f.size()); ++x)
        if (f[g[x]] != g[f[x]]) return CommutativityWitness{i, j, x};
    }
  }
  return std::nullopt;
}

bool is_commutative_family(const Family& fam) {
  return !find_noncommuting(fam).has_value();
}

std::string word_name(const Family& fam, const std::vector<int>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += "·";
    out += fam[word[i]].name;
  }
  return out;
}

ClosureSet iteration_closure(const Family& fam, std::size_t max_size) {
  if (max_size < static_cast<std::size_t>(fam.size()))
    throw PosetError(Errc::bad_spec,
                     "closure budget smaller than the family itself");
  ClosureSet cs;
  std::map<std::vector<Elem>, int> seen;

  auto add = [&](std::vector<int> word, MapTable map) -> bool {
    auto [it, fresh] = seen.emplace(map.table, cs.size());
    if (!fresh) return false;
    if (cs.members.size() >= max_size)
      throw PosetError(Errc::closure_budget_exceeded,
                       "iteration closure exceeds budget of " +
                           std::to_string(max_size) + " distinct maps");
    map.name = word_name(fam, word);
    cs.members.push_back(ClosureMember{std::move(map), std::move(word)});
    return true;
  };

  // Words of one generator, declaration order; then left-compose with
  // generators level by level. Within a level candidates appear in
  // lexicographic word order, so the first witness of a table is the
  // lexicographically smallest among the shortest.
  std::vector<int> frontier;
  for (int i = 0; i < fam.size(); ++i)
    if (add({i}, fam[i])) frontier.push_back(cs.size() - 1);

  while (!frontier.empty()) {
    std::vector<int> next;
    for (int g = 0; g < fam.size(); ++g) {
      for (int idx : frontier) {
        std::vector<int> word;
        word.reserve(cs.members[idx].word.size() + 1);
        word.push_back(g);
        word.insert(word.end(), cs.members[idx].word.begin(),
                    cs.members[idx].word.end());
        MapTable composed = compose(fam[g], cs.members[idx].map);
        if (add(std::move(word), std::move(composed)))
          next.push_back(cs.size() - 1);
      }
    }
    frontier = std::move(next);
  }
  return cs;
}

}  // namespace posetfix
