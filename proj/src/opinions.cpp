#include "majority/opinions.hpp"

#include <bit>

namespace majority {

Opinions::Opinions(int n, bool value) : n_(n) {
    if (n < 0) throw std::invalid_argument("opinions: negative size");
    words_.assign((static_cast<size_t>(n) + 63) / 64, value ? ~uint64_t{0} : 0);
    trim();
}

Opinions Opinions::from_string(const std::string& s) {
    Opinions f(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            f.set(static_cast<int>(i), true);
        else if (s[i] != '0')
            throw std::invalid_argument("opinions: expected '0' or '1', got '" + std::string(1, s[i]) + "'");
    }
    return f;
}

void Opinions::trim() {
    int rem = n_ & 63;
    if (rem != 0 && !words_.empty()) words_.back() &= (uint64_t{1} << rem) - 1;
}

Opinions Opinions::complemented() const {
    Opinions r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
}

int Opinions::count_ones() const {
    int k = 0;
    for (uint64_t w : words_) k += std::popcount(w);
    return k;
}

std::string Opinions::to_string() const {
    std::string s(static_cast<size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
        if (get(i)) s[static_cast<size_t>(i)] = '1';
    return s;
}

bool Opinions::lex_less(const Opinions& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (size_t k = 0; k < words_.size(); ++k) {
        uint64_t diff = words_[k] ^ o.words_[k];
        if (diff != 0) {
            int bit = std::countr_zero(diff);
            return ((words_[k] >> bit) & 1u) == 0;
        }
    }
    return false;
}

}  // namespace majority
