#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncprob {

// A word over a finite alphabet of integer generator ids. The empty word is
// the unit of concatenation.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}

    static Word single(int g) { return Word({g}); }

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    int operator[](std::size_t i) const { return letters[i]; }

    auto operator<=>(const Word &) const = default;

    Word subword(const std::vector<int> &indices0) const
    {
        // indices0: sorted 0-based positions
        std::vector<int> ls;
        ls.reserve(indices0.size());
        for (int i : indices0)
            ls.push_back(letters[static_cast<std::size_t>(i)]);
        return Word(std::move(ls));
    }

    Word slice(std::size_t begin, std::size_t end) const
    {
        return Word(std::vector<int>(letters.begin() + static_cast<long>(begin),
                                     letters.begin() + static_cast<long>(end)));
    }
};

inline Word concat(const Word &a, const Word &b)
{
    Word r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

// All words of the given length over generators 0..alphabet_size-1, in lex
// order.
inline std::vector<Word> words_of_length(unsigned alphabet_size, unsigned n)
{
    std::vector<Word> level{Word()};
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Word> next;
        next.reserve(level.size() * alphabet_size);
        for (const auto &w : level)
            for (unsigned g = 0; g < alphabet_size; ++g)
                next.push_back(concat(w, Word::single(static_cast<int>(g))));
        level = std::move(next);
    }
    return level;
}

// A sentence is a sequence of nonempty words; the empty sentence is the unit.
struct Sentence {
    std::vector<Word> words;

    Sentence() = default;
    explicit Sentence(std::vector<Word> ws) : words(std::move(ws))
    {
        for (const auto &w : words)
            if (w.empty())
                throw std::invalid_argument("sentence with empty word");
    }

    std::size_t degree() const
    {
        std::size_t d = 0;
        for (const auto &w : words)
            d += w.size();
        return d;
    }
    bool empty() const { return words.empty(); }

    auto operator<=>(const Sentence &) const = default;
};

inline Sentence concat(const Sentence &a, const Sentence &b)
{
    Sentence r = a;
    r.words.insert(r.words.end(), b.words.begin(), b.words.end());
    return r;
}

// Printing uses letter names 'a','b',... for small alphabets; the dotted form
// ("a.b.a") is the file/CLI format.
inline std::string word_to_string(const Word &w)
{
    if (w.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += '.';
        int g = w[i];
        if (g >= 0 && g < 26)
            s += static_cast<char>('a' + g);
        else
            s += "g" + std::to_string(g);
    }
    return s;
}

inline std::string sentence_to_string(const Sentence &s)
{
    if (s.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < s.words.size(); ++i) {
        if (i)
            out += '|';
        out += word_to_string(s.words[i]);
    }
    return out;
}

} // namespace ncprob
