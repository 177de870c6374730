#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posetfix/poset.hpp"

namespace posetfix {

// Total endomap on a poset carrier, given by an explicit table.
struct MapTable {
  std::string name;
  std::vector<Elem> table;

  Elem operator()(Elem x) const { return table[x]; }
  int size() const { return static_cast<int>(table.size()); }
};

// Extensional equality: tables only, names are metadata.
bool same_table(const MapTable& f, const MapTable& g);

MapTable identity_map(const Poset& p, std::string name = "id");

// assignments must cover every carrier label exactly once with carrier images.
MapTable build_map(const Poset& p, std::string name,
                   const std::map<std::string, std::string>& assignments);

bool is_isotone(const Poset& p, const MapTable& f, Exec exec = Exec::parallel);

// First pair (x, y) with x <= y but not f(x) <= f(y); nullopt when isotone.
std::optional<std::pair<Elem, Elem>> isotone_violation(const Poset& p,
                                                       const MapTable& f,
                                                       Exec exec = Exec::parallel);

// On carriers up to exhaustive_limit this runs the literal all-chains check;
// above it delegates to is_isotone (the two agree on finite posets, which the
// test suite establishes exhaustively at small sizes).
bool is_chain_continuous(const Poset& p, const MapTable& f);

// f(sup C) = sup{f(w) : w in C} for every non-empty chain C, by enumeration.
// Requires size() <= exhaustive_limit.
bool is_chain_continuous_literal(const Poset& p, const MapTable& f);

// x -> f(g(x)); name is the concatenated word "f·g".
MapTable compose(const MapTable& f, const MapTable& g);

// Non-empty collection of maps over one poset, distinct names.
struct Family {
  std::vector<MapTable> maps;

  int size() const { return static_cast<int>(maps.size()); }
  const MapTable& operator[](int i) const { return maps[i]; }
};

Family make_family(const Poset& p, std::vector<MapTable> maps);

struct CommutativityWitness {
  int f;    // indices into the family
  int g;
  Elem x;   // f(g(x)) != g(f(x))
};

// First (f, g, x) in declaration/carrier order violating fg = gf.
std::optional<CommutativityWitness> find_noncommuting(const Family& fam);

bool is_commutative_family(const Family& fam);

inline constexpr std::size_t default_closure_budget = 10000;

struct ClosureMember {
  MapTable map;           // name is the rendered witness word
  std::vector<int> word;  // generator indices, outermost first
};

// All distinct finite compositions of the family, closed under composition.
// Each member carries a shortest witness word (lexicographically smallest
// among the shortest).
struct ClosureSet {
  std::vector<ClosureMember> members;  // BFS order: word length, then lex

  int size() const { return static_cast<int>(members.size()); }
};

// Breadth-first closure under left-composition with the generators. Throws
// closure_budget_exceeded when more than max_size distinct maps appear.
ClosureSet iteration_closure(const Family& fam,
                             std::size_t max_size = default_closure_budget);

// "f·g·h" over family names.
std::string word_name(const Family& fam, const std::vector<int>& word);

}  // namespace posetfix
