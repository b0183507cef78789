#include "fivefold/symbolic.hpp"

#include <algorithm>

namespace fivefold {

std::size_t Sft::symbol_index(const std::string& name) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == name) return i;
    fail(fault::SymbolOutOfRange, "unknown symbol '" + name + "'");
}

Sft make_sft(std::vector<std::string> alphabet, RatMatrix transition) {
    if (!transition.is_square() || transition.rows != alphabet.size())
        fail(fault::ShapeMismatch, "transition matrix must be square over the alphabet");
    for (const Rat& v : transition.a)
        if (v != 0 && v != 1)
            fail(fault::BadArgument, "transition entries must be 0 or 1");
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        for (std::size_t j = i + 1; j < alphabet.size(); ++j)
            if (alphabet[i] == alphabet[j])
                fail(fault::BadArgument, "duplicate symbol '" + alphabet[i] + "'");
    return Sft{std::move(alphabet), std::move(transition)};
}

Word parse_word(const Sft& s, const std::string& csv) {
    Word w;
    std::string cur;
    auto flush = [&]() {
        w.push_back(s.symbol_index(cur));
        cur.clear();
    };
    for (char ch : csv) {
        if (ch == ',')
            flush();
        else if (ch != ' ')
            cur += ch;
    }
    if (!cur.empty() || !csv.empty()) flush();
    return w;
}

std::string format_word(const Sft& s, const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] >= s.size())
            fail(fault::SymbolOutOfRange, "symbol index out of range");
        if (i) out += ",";
        out += s.alphabet[w[i]];
    }
    return out;
}

bool is_admissible(const Sft& s, const Word& w) {
    for (std::size_t idx : w)
        if (idx >= s.size())
            fail(fault::SymbolOutOfRange, "symbol index out of range");
    for (std::size_t t = 0; t + 1 < w.size(); ++t)
        if (s.transition.at(w[t + 1], w[t]) == 0) return false;
    return true;
}

Int count_words(const Sft& s, unsigned long n,
                std::optional<std::size_t> from, std::optional<std::size_t> to) {
    if (n == 0)
        fail(fault::BadArgument, "word length must be >= 1");
    if ((from && *from >= s.size()) || (to && *to >= s.size()))
        fail(fault::SymbolOutOfRange, "pinned symbol index out of range");
    RatMatrix p = matrix_power(s.transition, n - 1);
    Rat total = 0;
    for (std::size_t b = 0; b < s.size(); ++b) {
        if (to && *to != b) continue;
        for (std::size_t a = 0; a < s.size(); ++a) {
            if (from && *from != a) continue;
            total += p.at(b, a);
        }
    }
    return rat_num(total);  // entries of a 0/1 matrix power are integers
}

std::vector<Word> enumerate_words(const Sft& s, unsigned long n, std::size_t limit) {
    if (n == 0)
        fail(fault::BadArgument, "word length must be >= 1");
    Int total = count_words(s, n);
    if (total > Int(limit))
        fail(fault::EnumerationLimitExceeded,
             "would enumerate " + total.str() + " words (limit " + std::to_string(limit) + ")");
    std::vector<Word> out;
    out.reserve(total.convert_to<std::size_t>());
    Word w;
    // Depth-first in symbol-index order = lexicographic output order.
    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == n) {
            out.push_back(w);
            return;
        }
        for (std::size_t sym = 0; sym < s.size(); ++sym) {
            if (depth > 0 && s.transition.at(sym, w.back()) == 0) continue;
            w.push_back(sym);
            self(self, depth + 1);
            w.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

Sft tensor_double(const Sft& s) {
    std::size_t n = s.size();
    std::vector<std::string> alphabet;
    alphabet.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            alphabet.push_back(s.alphabet[i] + "|" + s.alphabet[k]);
    RatMatrix t(n * n, n * n);
    // (i,k) -> (j,l) allowed when j -> i is allowed forward (the first
    // coordinate tracks the past) and k -> l is allowed forward.  As a
    // matrix this is the Kronecker product transpose(T) (x) T.
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k)
                    t.at(j * n + l, i * n + k) = s.transition.at(i, j) * s.transition.at(l, k);
    return make_sft(std::move(alphabet), std::move(t));
}

bool is_primitive(const RatMatrix& t) {
    if (!t.is_square())
        fail(fault::NonSquareMatrix, "primitivity of a non-square matrix");
    std::size_t n = t.rows;
    if (n == 0) return false;
    std::vector<uint8_t> base(n * n), pow(n * n);
    for (std::size_t i = 0; i < n * n; ++i) base[i] = t.a[i] != 0 ? 1 : 0;
    pow = base;
    for (std::size_t k = 1; k <= n * n; ++k) {
        bool all = std::all_of(pow.begin(), pow.end(), [](uint8_t v) { return v != 0; });
        if (all) return true;
        std::vector<uint8_t> next(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t m = 0; m < n; ++m) {
                if (!pow[i * n + m]) continue;
                for (std::size_t j = 0; j < n; ++j)
                    next[i * n + j] |= base[m * n + j];
            }
        pow.swap(next);
    }
    return false;
}

} // namespace fivefold
