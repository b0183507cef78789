#include "doctest.h"

#include "fivefold/symbolic.hpp"
#include "test_util.hpp"

using namespace fivefold;

namespace {
Sft golden_shift() {
    return make_sft({"L", "S"}, RatMatrix{{1, 1}, {1, 0}});
}
Sft full_shift2() {
    return make_sft({"0", "1"}, RatMatrix{{1, 1}, {1, 1}});
}
} // namespace

TEST_CASE("admissibility and parsing") {
    Sft s = golden_shift();
    CHECK(is_admissible(s, parse_word(s, "L,L,S,L")));
    CHECK(!is_admissible(s, parse_word(s, "L,S,S")));
    CHECK(is_admissible(s, parse_word(s, "L")));
    CHECK(is_admissible(s, Word{}));
    CHECK(fault_name([&] { parse_word(s, "L,X"); }) == "SymbolOutOfRange");
    CHECK(fault_name([&] { is_admissible(s, Word{0, 5}); }) == "SymbolOutOfRange");
    CHECK(format_word(s, parse_word(s, "L, S ,L")) == "L,S,L");
}

TEST_CASE("golden-shift word counts are Fibonacci") {
    Sft s = golden_shift();
    CHECK(enumerate_words(s, 2) ==
          std::vector<Word>{{0, 0}, {0, 1}, {1, 0}});  // LL, LS, SL in order
    CHECK(count_words(s, 6) == 21);
    CHECK(count_words(s, 7) == 34);
    for (unsigned n = 1; n + 2 <= 15; ++n)
        CHECK(count_words(s, n + 2) == count_words(s, n + 1) + count_words(s, n));
    // Pinned counts: (T^(n-1))[to][from].
    CHECK(count_words(s, 2, /*from*/ 1, /*to*/ 1) == 0);  // SS forbidden
    CHECK(count_words(s, 9, 0, std::nullopt) + count_words(s, 9, 1, std::nullopt) ==
          count_words(s, 9));
    CHECK(fault_name([&] { count_words(s, 0); }) == "BadArgument");
    CHECK(fault_name([&] { count_words(s, 3, 0, 7); }) == "SymbolOutOfRange");
}

TEST_CASE("count matches enumeration up to length 10") {
    for (const Sft& s : {golden_shift(), full_shift2()}) {
        for (unsigned n = 1; n <= 10; ++n) {
            auto words = enumerate_words(s, n);
            CHECK(Int(words.size()) == count_words(s, n));
            for (const auto& w : words) CHECK(is_admissible(s, w));
            // Lexicographic order, no duplicates.
            for (std::size_t i = 0; i + 1 < words.size(); ++i) CHECK(words[i] < words[i + 1]);
        }
    }
}

TEST_CASE("enumeration limit") {
    Sft s = full_shift2();
    CHECK(fault_name([&] { enumerate_words(s, 21); }) == "EnumerationLimitExceeded");
    CHECK(enumerate_words(s, 10).size() == 1024);
}

TEST_CASE("tensor_double") {
    // Full 2-shift doubles to the full 4-shift.
    Sft d2 = tensor_double(full_shift2());
    CHECK(d2.size() == 4);
    CHECK(d2.alphabet == std::vector<std::string>{"0|0", "0|1", "1|0", "1|1"});
    for (const Rat& v : d2.transition.a) CHECK(v == 1);

    // Golden shift doubles to a 4-symbol shift; pair words factor, so counts
    // square.
    Sft g = golden_shift();
    Sft dg = tensor_double(g);
    CHECK(dg.size() == 4);
    for (unsigned n = 1; n <= 8; ++n)
        CHECK(count_words(dg, n) == count_words(g, n) * count_words(g, n));
    // Kronecker structure: step (i,k) -> (j,l) allowed iff T[i][j] and T[l][k].
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t l = 0; l < 2; ++l)
                    CHECK(dg.transition.at(j * 2 + l, i * 2 + k) ==
                          g.transition.at(i, j) * g.transition.at(l, k));
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(RatMatrix{{1, 1}, {1, 0}}));
    CHECK(is_primitive(RatMatrix{{1}}));
    CHECK(!is_primitive(RatMatrix{{0, 1}, {1, 0}}));      // period 2
    CHECK(!is_primitive(RatMatrix::identity(3)));          // reducible
    CHECK(!is_primitive(RatMatrix{{1, 1}, {0, 1}}));       // triangular, never positive
    CHECK(is_primitive(tensor_double(golden_shift()).transition));
}
