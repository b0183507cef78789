#pragma once

// Subshifts of finite type over small named alphabets: admissibility,
// exact word counting, bounded enumeration, the doubled (pair) shift, and
// primitivity of transition matrices.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fivefold/spectral.hpp"

namespace fivefold {

// Convention used throughout: transition.at(i, j) == 1 means the step
// j -> i is allowed, i.e. columns index the current symbol and rows the
// next one.  With this reading, words a -> b of length n are counted by
// (T^(n-1))[b][a].
struct Sft {
    std::vector<std::string> alphabet;
    RatMatrix transition;  // square 0/1, alphabet.size() x alphabet.size()

    std::size_t size() const { return alphabet.size(); }
    std::size_t symbol_index(const std::string& name) const;  // throws SymbolOutOfRange
};

// A word is a sequence of symbol indices into the alphabet.
using Word = std::vector<std::size_t>;

// Validates the structural invariants (square 0/1 matrix matching the
// alphabet); throws ShapeMismatch / BadArgument.
Sft make_sft(std::vector<std::string> alphabet, RatMatrix transition);

// Comma-separated symbol names <-> word.  Parsing throws SymbolOutOfRange
// for unknown names.
Word parse_word(const Sft& s, const std::string& csv);
std::string format_word(const Sft& s, const Word& w);

// Every consecutive step allowed?  Throws SymbolOutOfRange if an index is
// out of range.  Empty and single-symbol words are admissible.
bool is_admissible(const Sft& s, const Word& w);

// Number of admissible words of length n >= 1, optionally pinned to a first
// and/or last symbol.  Exact (arbitrary precision).
Int count_words(const Sft& s, unsigned long n,
                std::optional<std::size_t> from = std::nullopt,
                std::optional<std::size_t> to = std::nullopt);

// All admissible words of length n in lexicographic order (by symbol index).
// Throws EnumerationLimitExceeded if the count exceeds `limit`.
std::vector<Word> enumerate_words(const Sft& s, unsigned long n,
                                  std::size_t limit = 1000000);

// The pair shift: alphabet = ordered pairs (i, k) listed lexicographically
// (index i * n + k, names "a|b"), transition allowing (i,k) -> (j,l) exactly
// when i -> j is allowed *backwards* (j -> i forward) and k -> l forward:
// the first coordinate runs against the arrow of time, the second with it.
Sft tensor_double(const Sft& s);

// Some power T^k with 1 <= k <= dim^2 is entrywise positive?
bool is_primitive(const RatMatrix& t);

} // namespace fivefold
