#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "posetfix/poset.hpp"

using namespace posetfix;

namespace {

template <typename Fn>
std::optional<Errc> thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const PosetError& e) {
    return e.code();
  }
  return std::nullopt;
}

Poset chain3() {
  return build_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}},
                     OrderInput::covers);
}

// Subsets of {1,2} by inclusion: {} < {1},{2} < {1,2}.
Poset powerset2() {
  return build_poset({"{}", "{1}", "{2}", "{1,2}"},
                     {{"{}", "{1}"},
                      {"{}", "{2}"},
                      {"{1}", "{1,2}"},
                      {"{2}", "{1,2}"}},
                     OrderInput::covers);
}

Poset vposet() {
  return build_poset({"bot", "a", "b"}, {{"bot", "a"}, {"bot", "b"}},
                     OrderInput::covers);
}

Poset antichain2() { return build_poset({"a", "b"}, {}, OrderInput::covers); }

Subset by_labels(const Poset& p, const std::vector<std::string>& labels) {
  Subset s;
  for (const auto& l : labels) s.push_back(p.index_of(l));
  return make_subset(p, std::move(s));
}

}  // namespace

TEST_CASE("build_poset closes covers transitively and detects bounds") {
  Poset p = chain3();
  CHECK(p.size() == 3);
  CHECK(p.leq(p.index_of("a"), p.index_of("c")));
  CHECK_FALSE(p.leq(p.index_of("c"), p.index_of("a")));
  REQUIRE(p.bottom());
  CHECK(p.label(*p.bottom()) == "a");
  REQUIRE(p.top());
  CHECK(p.label(*p.top()) == "c");

  Poset single = build_poset({"a"}, {}, OrderInput::covers);
  CHECK(single.size() == 1);
  CHECK(single.bottom() == single.top());
}

TEST_CASE("build_poset rejects malformed input") {
  CHECK(thrown_code([] {
          build_poset({"a", "a"}, {}, OrderInput::covers);
        }) == Errc::duplicate_label);
  CHECK(thrown_code([] {
          build_poset({"a"}, {{"a", "z"}}, OrderInput::covers);
        }) == Errc::unknown_label);
  CHECK(thrown_code([] {
          build_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}},
                      OrderInput::covers);
        }) == Errc::antisymmetry_violation);
  CHECK(thrown_code([] {
          build_poset({}, {}, OrderInput::covers);
        }) == Errc::bad_spec);
  // Full mode validates instead of closing.
  CHECK(thrown_code([] {
          build_poset({"a", "b"}, {{"a", "b"}}, OrderInput::full);
        }) == Errc::not_reflexive);
  CHECK(thrown_code([] {
          build_poset({"a", "b", "c"},
                      {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"},
                       {"b", "c"}},
                      OrderInput::full);
        }) == Errc::not_transitive);
  Poset p = build_poset(
      {"a", "b"}, {{"a", "a"}, {"b", "b"}, {"a", "b"}}, OrderInput::full);
  CHECK(p.leq(p.index_of("a"), p.index_of("b")));
}

TEST_CASE("leq is reflexive and reports incomparability") {
  Poset p = powerset2();
  for (Elem x = 0; x < p.size(); ++x) CHECK(p.leq(x, x));
  CHECK_FALSE(p.leq(p.index_of("{1}"), p.index_of("{2}")));
  CHECK(thrown_code([&] { p.leq(0, 99); }) == Errc::unknown_element);
  CHECK(thrown_code([&] { p.index_of("nope"); }) == Errc::unknown_label);
}

TEST_CASE("is_chain accepts the empty set and totally ordered subsets") {
  Poset p = powerset2();
  CHECK(is_chain(p, {}));
  CHECK(is_chain(p, by_labels(p, {"{}", "{1}", "{1,2}"})));
  CHECK_FALSE(is_chain(p, by_labels(p, {"{1}", "{2}"})));
}

TEST_CASE("is_directed needs internal majorants and a non-empty set") {
  Poset p = powerset2();
  CHECK(is_directed(p, by_labels(p, {"{1}", "{2}", "{1,2}"})));
  CHECK_FALSE(is_directed(p, by_labels(p, {"{1}", "{2}"})));
  CHECK_FALSE(is_directed(p, {}));
  CHECK(is_directed(p, by_labels(p, {"{1}"})));
}

TEST_CASE("sup_subset is the least upper bound over the carrier") {
  Poset p = powerset2();
  CHECK(sup_subset(p, by_labels(p, {"{1}", "{2}"})) == p.index_of("{1,2}"));
  CHECK(sup_subset(p, {}) == *p.bottom());

  Poset v = vposet();
  CHECK_FALSE(sup_subset(v, by_labels(v, {"a", "b"})));
  CHECK(sup_subset(v, {}) == *v.bottom());

  Poset a2 = antichain2();
  CHECK_FALSE(sup_subset(a2, {}));  // no bottom
}

TEST_CASE("inf_subset mirrors sup_subset") {
  Poset p = powerset2();
  CHECK(inf_subset(p, by_labels(p, {"{1}", "{2}"})) == p.index_of("{}"));
  CHECK(inf_subset(p, {}) == p.top());

  Poset c = chain3();
  CHECK(inf_subset(c, by_labels(c, {"b", "c"})) == c.index_of("b"));

  Poset v = vposet();
  CHECK_FALSE(inf_subset(v, {}));  // no top
}

TEST_CASE("join and meet on the powerset lattice are union and intersection") {
  Poset p = powerset2();
  CHECK(join(p, p.index_of("{1}"), p.index_of("{2}")) == p.index_of("{1,2}"));
  CHECK(meet(p, p.index_of("{1}"), p.index_of("{2}")) == p.index_of("{}"));
  Poset v = vposet();
  CHECK_FALSE(join(v, v.index_of("a"), v.index_of("b")));
}

TEST_CASE("chain-completeness of a finite poset is bottom existence") {
  CHECK(is_chain_complete(vposet()));
  CHECK_FALSE(is_chain_complete(antichain2()));
  CHECK(is_chain_complete(powerset2()));
}

TEST_CASE("fast-path predicates agree with the literal definitions") {
  const Poset catalog[] = {chain3(), powerset2(), vposet(), antichain2(),
                           build_poset({"x"}, {}, OrderInput::covers)};
  for (const Poset& p : catalog) {
    CHECK(is_chain_complete(p) == is_chain_complete_literal(p));
    CHECK(is_complete_lattice(p) == is_complete_lattice_literal(p));
  }
}

TEST_CASE("complete-lattice examples") {
  CHECK(is_complete_lattice(powerset2()));
  CHECK_FALSE(is_complete_lattice(vposet()));
  CHECK(is_complete_lattice(chain3()));
}

TEST_CASE("induced_subposet restricts the relation and recomputes bounds") {
  Poset p = powerset2();

  Poset two_chain = induced_subposet(p, by_labels(p, {"{1}", "{1,2}"}));
  CHECK(two_chain.size() == 2);
  REQUIRE(two_chain.bottom());
  CHECK(two_chain.label(*two_chain.bottom()) == "{1}");
  CHECK(two_chain.leq(two_chain.index_of("{1}"), two_chain.index_of("{1,2}")));

  Poset anti = induced_subposet(p, by_labels(p, {"{1}", "{2}"}));
  CHECK_FALSE(anti.bottom());
  CHECK_FALSE(anti.leq(anti.index_of("{1}"), anti.index_of("{2}")));

  CHECK(thrown_code([&] { induced_subposet(p, {}); }) == Errc::empty_subset);

  Poset whole = induced_subposet(p, p.carrier());
  for (Elem a = 0; a < p.size(); ++a)
    for (Elem b = 0; b < p.size(); ++b)
      CHECK(whole.leq(a, b) == p.leq(a, b));
}

TEST_CASE("make_subset sorts, dedupes and validates") {
  Poset p = chain3();
  Subset s = make_subset(p, {2, 0, 2, 1, 0});
  CHECK(s == Subset{0, 1, 2});
  CHECK(thrown_code([&] { make_subset(p, {5}); }) == Errc::unknown_element);
}

TEST_CASE("upper_set is the principal filter") {
  Poset p = powerset2();
  CHECK(upper_set(p, p.index_of("{1}")) == by_labels(p, {"{1}", "{1,2}"}));
  CHECK(upper_set(p, p.index_of("{}")) == p.carrier());
}

TEST_CASE("chain enumeration visits every chain exactly once") {
  // One mask per chain, the empty chain included: a 3-chain has 2^3 = 8
  // (every subset of a total order), the 2-antichain has 3, the powerset of
  // {1,2} has 12.
  auto count_chains = [](const Poset& p) {
    int count = 0;
    for_each_chain_mask(p, [&](std::uint32_t mask) {
      ++count;
      CHECK(is_chain(p, subset_from_mask(mask)));
    });
    return count;
  };
  CHECK(count_chains(chain3()) == 8);
  CHECK(count_chains(antichain2()) == 3);
  CHECK(count_chains(powerset2()) == 12);
}

TEST_CASE("sup of a non-empty chain is its maximum element") {
  for (const Poset& p : {chain3(), powerset2(), vposet(), antichain2()}) {
    for_each_chain_mask(p, [&](std::uint32_t mask) {
      Subset c = subset_from_mask(mask);
      if (c.empty()) return;
      auto sup = sup_subset(p, c);
      REQUIRE(sup);
      CHECK(std::find(c.begin(), c.end(), *sup) != c.end());
      for (Elem x : c) CHECK(p.leq(x, *sup));
    });
  }
}

TEST_CASE("constructed posets satisfy the order axioms") {
  for (const Poset& p : {chain3(), powerset2(), vposet(), antichain2()}) {
    const int n = p.size();
    for (Elem x = 0; x < n; ++x) CHECK(p.leq(x, x));
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        if (x != y) CHECK_FALSE((p.leq(x, y) && p.leq(y, x)));
        for (Elem z = 0; z < n; ++z)
          if (p.leq(x, y) && p.leq(y, z)) CHECK(p.leq(x, z));
      }
  }
}

TEST_CASE("sup_subset result is below every other upper bound") {
  Poset p = powerset2();
  for (std::uint32_t mask = 0; mask < (1u << p.size()); ++mask) {
    Subset s = subset_from_mask(mask);
    auto sup = sup_subset(p, s);
    std::vector<Elem> uppers;
    for (Elem u = 0; u < p.size(); ++u) {
      bool ok = true;
      for (Elem x : s) ok = ok && p.leq(x, u);
      if (ok) uppers.push_back(u);
    }
    if (sup) {
      for (Elem x : s) CHECK(p.leq(x, *sup));
      for (Elem u : uppers) CHECK(p.leq(*sup, u));
    } else {
      // No least element among the upper bounds (possibly none at all).
      for (Elem u : uppers) {
        bool below_all = true;
        for (Elem w : uppers) below_all = below_all && p.leq(u, w);
        CHECK_FALSE(below_all);
      }
    }
  }
}
