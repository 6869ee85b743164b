#include "doctest.h"

#include <set>

#include "qdeg/tableaux.hpp"

using namespace qdeg;

namespace {

Word word(std::initializer_list<int> letters) { return Word(letters); }

}  // namespace

TEST_SUITE("tableaux") {

TEST_CASE("row reading words") {
  CHECK(row_reading_word(parse_syt("1,3,4/2")) == word({2, 1, 3, 4}));
  CHECK(row_reading_word(parse_syt("1,2,3/4")) == word({4, 1, 2, 3}));
  CHECK(row_reading_word(parse_syt("1")) == word({1}));
}

TEST_CASE("hook reading words") {
  CHECK(hook_reading_word(parse_sst("1,2',4/3")) == word({2, 3, 1, 4}));
  CHECK(hook_reading_word(parse_sst("1,2',3'/4")) == word({3, 2, 4, 1}));
  // literal application of the column-then-row rule
  CHECK(hook_reading_word(parse_sst("1,2',4'/3")) == word({4, 2, 3, 1}));
  CHECK(descent_set(parse_sst("1,2',4'/3")) == DescentSet(4, {1, 3}));
}

TEST_CASE("descent sets of words") {
  CHECK(descent_set(word({2, 1, 3, 4})) == DescentSet(4, {1}));
  CHECK(descent_set(word({3, 2, 4, 1})) == DescentSet(4, {1, 2}));
  CHECK(descent_set(word({1, 2, 3, 4, 5})) == DescentSet(5, {}));
  CHECK_THROWS_AS(descent_set(word({1, 3})), std::invalid_argument);
  CHECK_THROWS_AS(descent_set(word({1, 1})), std::invalid_argument);
}

TEST_CASE("concatenated descents") {
  CHECK(descent_set(parse_tensor("1,2/3|4")) == DescentSet(4, {2}));
  CHECK(descent_set(parse_tensor("1|2")) == DescentSet(2, {}));
  CHECK(descent_set(parse_tensor("2|1")) == DescentSet(2, {1}));
}

TEST_CASE("descent lists match the hand-computed family tables") {
  const std::vector<std::pair<const char*, DescentSet>> syt = {
      {"1,3,4/2", DescentSet(4, {1})},
      {"1,2,4/3", DescentSet(4, {2})},
      {"1,2,3/4", DescentSet(4, {3})}};
  for (const auto& [text, des] : syt) CHECK(descent_set(parse_syt(text)) == des);

  const std::vector<std::pair<const char*, DescentSet>> sst = {
      {"1,2,4/3", DescentSet(4, {2})},     {"1,2',4/3", DescentSet(4, {1})},
      {"1,2,4'/3", DescentSet(4, {2, 3})}, {"1,2',4'/3", DescentSet(4, {1, 3})},
      {"1,2,3/4", DescentSet(4, {3})},     {"1,2',3/4", DescentSet(4, {1, 3})},
      {"1,2,3'/4", DescentSet(4, {2})},    {"1,2',3'/4", DescentSet(4, {1, 2})}};
  for (const auto& [text, des] : sst) CHECK(descent_set(parse_sst(text)) == des);
}

TEST_CASE("generation counts") {
  CHECK(generate_syt(Partition({3, 1})).size() == 3);
  CHECK(generate_sst(StrictPartition({3, 1})).size() == 8);
  CHECK(generate_tensor(StrictPartition({2, 1}), StrictPartition({1})).size() == 8);
  CHECK(generate_tensor(StrictPartition({2}), StrictPartition({2})).size() == 24);
}

TEST_CASE("generation is sorted and duplicate-free") {
  auto family = generate_sst(StrictPartition({3, 2}));
  std::set<std::string> seen;
  std::string prev;
  for (const auto& s : family) {
    std::string id = format(s);
    CHECK(seen.insert(id).second);
    CHECK(prev < id);
    prev = id;
  }
}

TEST_CASE("superstandard filling") {
  SignedShiftedTableau s31 = superstandard(StrictPartition({3, 1}));
  CHECK(format(s31) == "1,2,3/4");
  CHECK(descent_set(s31) == DescentSet(4, {3}));
  CHECK(format(superstandard(StrictPartition({1}))) == "1");
  CHECK(descent_set(superstandard(StrictPartition({1}))) == DescentSet(1, {}));
  CHECK(descent_set(superstandard(StrictPartition({2, 1}))) == DescentSet(3, {2}));

  // the descent set is the proper partial sums, and no other member of the
  // family attains it
  for (int n = 2; n <= 7; ++n)
    for (const auto& gamma : strict_partitions_of(n)) {
      std::vector<int> sums;
      int acc = 0;
      for (int k = 1; k < gamma.length(); ++k) sums.push_back(acc += gamma.part(k));
      DescentSet expected = DescentSet::from_members(n, sums);
      SignedShiftedTableau super = superstandard(gamma);
      CHECK(descent_set(super) == expected);
      int hits = 0;
      for (const auto& s : generate_sst(gamma))
        if (descent_set(s) == expected) ++hits;
      CHECK(hits == 1);
    }
}

TEST_CASE("parsing accepts the worked forms and rejects violations") {
  CHECK(hook_reading_word(parse_sst("1,2',4/3")) == word({2, 3, 1, 4}));
  CHECK(format(parse_tensor("1,2/3|4")) == "1,2/3|4");
  CHECK_THROWS_WITH_AS(parse_sst("1,1'"), "tableau: duplicate absolute value", ParseError);
  CHECK_THROWS_WITH_AS(parse_sst("2,1"), "tableau: absolute values must increase along rows",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_sst("1',2"), "tableau: marked entry on the main diagonal", ParseError);
  CHECK_THROWS_WITH_AS(parse_sst("1,3"), "tableau: letters must be exactly 1..n", ParseError);
  CHECK_THROWS_AS(parse_sst("1,2/"), ParseError);
  CHECK_THROWS_AS(parse_sst("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_sst(""), ParseError);
  CHECK_THROWS_AS(parse_sst("1,2/3/4"), ParseError);  // row lengths not strict
  CHECK_THROWS_AS(parse_syt("1,2'"), ParseError);
  CHECK_THROWS_AS(parse_syt("1,2/3,4,5"), ParseError);  // not a partition profile
  CHECK_THROWS_AS(parse_tensor("1,2"), ParseError);
  CHECK_THROWS_AS(parse_tensor("1|2|3"), ParseError);
  CHECK_THROWS_AS(parse_tensor("1,2|2"), ParseError);  // duplicate across factors
}

TEST_CASE("round trip on every generated tableau through size 9") {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& gamma : strict_partitions_of(n))
      for (const auto& s : generate_sst(gamma)) CHECK(parse_sst(format(s)) == s);
    for (const auto& lambda : partitions_of(n))
      for (const auto& t : generate_syt(lambda)) CHECK(parse_syt(format(t)) == t);
  }
  for (const auto& st : generate_tensor(StrictPartition({3, 1}), StrictPartition({2})))
    CHECK(parse_tensor(format(st)) == st);
}

TEST_CASE("hook words are permutations of the letter set") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& gamma : strict_partitions_of(n))
      for (const auto& s : generate_sst(gamma)) {
        Word w = hook_reading_word(s);
        std::sort(w.begin(), w.end());
        CHECK(w == letters(s));
      }
  for (const auto& st : generate_tensor(StrictPartition({2, 1}), StrictPartition({2}))) {
    Word w = hook_reading_word(st.left);
    std::sort(w.begin(), w.end());
    CHECK(w == letters(st.left));
  }
}

TEST_CASE("restricting descent sets") {
  CHECK(restrict_descents(DescentSet(5, {1, 3}), 2, 4) == DescentSet(3, {2}));
  DescentSet d(6, {2, 4, 5});
  CHECK(restrict_descents(d, 1, 6) == d);
  CHECK(restrict_descents(DescentSet(6, {2}), 3, 5) == DescentSet(3, {}));
  CHECK_THROWS_AS(restrict_descents(DescentSet(4, {1}), 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(restrict_descents(DescentSet(4, {1}), 1, 5), std::invalid_argument);
}

TEST_CASE("structured export") {
  std::string j = to_json_string(parse_sst("1,2'/3"));
  CHECK(j.find("\"shape\":[2,1]") != std::string::npos);
  CHECK(j.find("\"marked\":true") != std::string::npos);
  std::string jt = to_json_string(parse_tensor("1|2"));
  CHECK(jt.find("\"left\"") != std::string::npos);
  CHECK(jt.find("\"right\"") != std::string::npos);
}

}  // TEST_SUITE
