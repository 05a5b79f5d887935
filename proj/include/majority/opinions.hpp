#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace majority {

// Bit-packed opinion vector; bit i is node i's opinion, 1 = white, 0 = black.
class Opinions {
public:
    Opinions() = default;
    explicit Opinions(int n, bool value = false);

    // Parses a string of '0'/'1' characters, index i = node i.
    static Opinions from_string(const std::string& s);

    int size() const { return n_; }

    bool get(int i) const {
        check(i);
        return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i, bool v) {
        check(i);
        uint64_t mask = uint64_t{1} << (i & 63);
        if (v)
            words_[static_cast<size_t>(i) >> 6] |= mask;
        else
            words_[static_cast<size_t>(i) >> 6] &= ~mask;
    }

    Opinions complemented() const;
    int count_ones() const;
    std::string to_string() const;

    bool operator==(const Opinions& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const Opinions& o) const { return !(*this == o); }

    // Lexicographic order on the bit string node 0, node 1, ...
    bool lex_less(const Opinions& o) const;

private:
    void check(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("opinions: index out of range");
    }
    void trim();

    int n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace majority
