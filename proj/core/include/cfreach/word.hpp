#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace cfreach {

/// A word over the alphabet {x_0, ..., x_m}, stored as the sequence of
/// letter indices. Index 0 is the drift letter. The empty word is valid.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}
    Word(std::initializer_list<int> ls) : letters(ls) {}

    std::size_t length() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    /// Occurrences of letter `i` in the word.
    std::size_t count_letter(int i) const;

    /// Word with the first letter removed. Precondition: non-empty.
    Word suffix() const { return Word(std::vector<int>(letters.begin() + 1, letters.end())); }

    /// Word extended on the right by one letter.
    Word appended(int letter) const;

    /// Serialized form: letters joined with an "x" prefix ("x1x0x1");
    /// the empty word serializes to "e".
    std::string str() const;

    bool operator==(const Word&) const = default;
};

/// Length-then-lexicographic order (letter 0 < 1 < ... < m). Shorter words
/// come first; equal lengths compare letterwise.
bool length_lex_less(const Word& a, const Word& b);

struct LengthLexLess {
    bool operator()(const Word& a, const Word& b) const { return length_lex_less(a, b); }
};

/// All words of length <= max_order over {x_0,...,x_m}, in length-lex order.
std::vector<Word> enumerate_words(int alphabet_size_m, int max_order);

/// Scalar-valued formal power series truncated at max_order: a sparse map
/// from words to coefficients, kept in length-lex order. Words absent from
/// the map have coefficient exactly 0; exact zeros are never stored.
class FormalPowerSeries {
  public:
    FormalPowerSeries(int alphabet_size_m, int max_order);

    int alphabet_size() const { return m_; }
    int max_order() const { return max_order_; }

    /// Stored coefficient, or 0 for absent words.
    double coefficient(const Word& w) const;

    /// Stores a coefficient; an exact zero removes the entry. Throws
    /// std::invalid_argument for words longer than max_order or with a
    /// letter index above the alphabet size.
    void set_coefficient(const Word& w, double value);

    const std::map<Word, double, LengthLexLess>& coefficients() const { return coeffs_; }
    std::size_t support_size() const { return coeffs_.size(); }

    bool operator==(const FormalPowerSeries&) const = default;

  private:
    int m_;
    int max_order_;
    std::map<Word, double, LengthLexLess> coeffs_;
};

}  // namespace cfreach
