#include "seqdist/relabel.hpp"

#include <cctype>
#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "seqdist/errors.hpp"
#include "seqdist/inversions.hpp"
#include "test_util.hpp"

namespace {

using seqdist::CountMismatchError;
using seqdist::ElementNotSharedError;
using seqdist::IndexPermutation;
using seqdist::LengthMismatchError;
using seqdist::relabel_by_hash;
using seqdist::relabel_by_sort;

TEST(Relabel, OccurrenceMappingWithDuplicates) {
  const std::string s1 = "abacada";
  const std::string s2 = "bcaaaad";
  const IndexPermutation expected{2, 0, 3, 1, 4, 6, 5};
  EXPECT_EQ(relabel_by_sort(s1, s2), expected);
  EXPECT_EQ(relabel_by_hash(s1, s2), expected);
}

TEST(Relabel, DistinctElementsIdentity) {
  const std::vector<int> s{4, 8, 15, 16, 23, 42};
  const IndexPermutation identity{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(relabel_by_sort(s, s), identity);
  EXPECT_EQ(relabel_by_hash(s, s), identity);
}

TEST(Relabel, EqualCopiesKeepTheirOrder) {
  const std::vector<char> s{'x', 'x'};
  const IndexPermutation expected{0, 1};
  EXPECT_EQ(relabel_by_sort(s, s), expected);
  EXPECT_EQ(relabel_by_hash(s, s), expected);
}

TEST(Relabel, EmptySequences) {
  const std::vector<int> empty;
  EXPECT_TRUE(relabel_by_sort(empty, empty).empty());
  EXPECT_TRUE(relabel_by_hash(empty, empty).empty());
}

TEST(Relabel, InputsAreNotModified) {
  const std::vector<int> s1{3, 1, 3, 2};
  const std::vector<int> s2{1, 3, 2, 3};
  const auto copy1 = s1;
  const auto copy2 = s2;
  (void)relabel_by_sort(s1, s2);
  (void)relabel_by_hash(s1, s2);
  EXPECT_EQ(s1, copy1);
  EXPECT_EQ(s2, copy2);
}

TEST(Relabel, LengthMismatchComesFirst) {
  // Lengths differ and the elements are also unshared; length wins.
  const std::vector<int> s1{1, 2, 3};
  const std::vector<int> s2{9, 9};
  EXPECT_THROW((void)relabel_by_sort(s1, s2), LengthMismatchError);
  EXPECT_THROW((void)relabel_by_hash(s1, s2), LengthMismatchError);
}

TEST(Relabel, UnsharedElementIsNamed) {
  const std::vector<std::string> s1{"ash", "oak", "elm"};
  const std::vector<std::string> s2{"ash", "fir", "elm"};
  try {
    (void)relabel_by_sort(s1, s2);
    FAIL() << "expected ElementNotSharedError";
  } catch (const ElementNotSharedError& e) {
    EXPECT_EQ(e.element(), "fir");
  }
  try {
    (void)relabel_by_hash(s1, s2);
    FAIL() << "expected ElementNotSharedError";
  } catch (const ElementNotSharedError& e) {
    EXPECT_EQ(e.element(), "fir");
  }
}

TEST(Relabel, CountMismatchReportsBothCounts) {
  const std::vector<int> s1{1, 1, 2};
  const std::vector<int> s2{1, 2, 2};
  try {
    (void)relabel_by_sort(s1, s2);
    FAIL() << "expected CountMismatchError";
  } catch (const CountMismatchError& e) {
    EXPECT_EQ(e.count1(), 2u);
    EXPECT_EQ(e.count2(), 1u);
  }
  EXPECT_THROW((void)relabel_by_hash(s1, s2), CountMismatchError);
}

TEST(Relabel, SortAndHashAgreeOnRandomMultisetPairs) {
  std::mt19937_64 rng(7151);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = testutil::below(rng, 200);
    const int alphabet = 1 + static_cast<int>(testutil::below(rng, 9));
    const auto s1 = testutil::random_sequence(rng, n, alphabet);
    const auto s2 = testutil::shuffled_copy(rng, s1);
    const IndexPermutation by_sort = relabel_by_sort(s1, s2);
    EXPECT_EQ(by_sort, relabel_by_hash(s1, s2));
    EXPECT_TRUE(seqdist::is_index_permutation(by_sort));
  }
}

// Element access is a customization point: fold case so 'A' and 'a' are one
// element.
struct CaseFoldOps {
  static char fold(char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  bool less(char a, char b) const { return fold(a) < fold(b); }
  bool equal(char a, char b) const { return fold(a) == fold(b); }
  std::size_t hash(char c) const { return std::hash<char>{}(fold(c)); }
};

TEST(Relabel, CustomOpsChangeElementIdentity) {
  const std::string s1 = "aBBa";
  const std::string s2 = "AbaB";
  EXPECT_THROW((void)relabel_by_sort(s1, s2), ElementNotSharedError);
  const IndexPermutation expected{0, 1, 3, 2};
  EXPECT_EQ(relabel_by_sort(s1, s2, CaseFoldOps{}), expected);
  EXPECT_EQ(relabel_by_hash(s1, s2, CaseFoldOps{}), expected);
}

}  // namespace
