#include "cfreach/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfreach {

std::size_t Word::count_letter(int i) const {
    return static_cast<std::size_t>(std::count(letters.begin(), letters.end(), i));
}

Word Word::appended(int letter) const {
    Word w = *this;
    w.letters.push_back(letter);
    return w;
}

std::string Word::str() const {
    if (letters.empty()) return "e";
    std::string s;
    for (int l : letters) {
        s += 'x';
        s += std::to_string(l);
    }
    return s;
}

bool length_lex_less(const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.letters < b.letters;
}

std::vector<Word> enumerate_words(int alphabet_size_m, int max_order) {
    if (alphabet_size_m < 0) throw std::invalid_argument("enumerate_words: alphabet size < 0");
    if (max_order < 0) throw std::invalid_argument("enumerate_words: max order < 0");

    std::vector<Word> out;
    std::vector<Word> level{Word{}};
    out.push_back(Word{});
    for (int len = 1; len <= max_order; ++len) {
        std::vector<Word> next;
        next.reserve(level.size() * static_cast<std::size_t>(alphabet_size_m + 1));
        for (const Word& w : level) {
            for (int l = 0; l <= alphabet_size_m; ++l) next.push_back(w.appended(l));
        }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

FormalPowerSeries::FormalPowerSeries(int alphabet_size_m, int max_order)
    : m_(alphabet_size_m), max_order_(max_order) {
    if (m_ < 0) throw std::invalid_argument("FormalPowerSeries: alphabet size < 0");
    if (max_order_ < 0) throw std::invalid_argument("FormalPowerSeries: max order < 0");
}

double FormalPowerSeries::coefficient(const Word& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? 0.0 : it->second;
}

void FormalPowerSeries::set_coefficient(const Word& w, double value) {
    if (w.length() > static_cast<std::size_t>(max_order_))
        throw std::invalid_argument("FormalPowerSeries: word longer than max order");
    for (int l : w.letters)
        if (l < 0 || l > m_)
            throw std::invalid_argument("FormalPowerSeries: letter index out of range");
    if (value == 0.0) {
        coeffs_.erase(w);
    } else {
        coeffs_[w] = value;
    }
}

}  // namespace cfreach
