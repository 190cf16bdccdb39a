#include "levelcomb/words.hpp"

#include <algorithm>
#include <cmath>

namespace levelcomb {

Word Word::zeros(nat n) {
    Word w;
    w.len_ = n;
    w.blk_.assign((n + 63) / 64, 0);
    return w;
}

Word Word::from_string(const std::string& s) {
    Word w = zeros(s.size());
    for (nat i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            w.set_bit(i, 1);
        else if (s[i] != '0')
            throw PreconditionError("word characters must be '0' or '1': \"" + s + "\"");
    }
    return w;
}

void Word::set_bit(nat i, int b) {
    if (b)
        blk_[i >> 6] |= (std::uint64_t{1} << (i & 63));
    else
        blk_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

void Word::push_back(int b) {
    if ((len_ & 63) == 0)
        blk_.push_back(0);
    ++len_;
    if (b)
        set_bit(len_ - 1, 1);
}

void Word::append(const Word& w) {
    for (nat i = 0; i < w.size(); ++i)
        push_back(w.bit(i));
}

void Word::append_zeros(nat n) {
    len_ += n;
    blk_.resize((len_ + 63) / 64, 0);
}

Word Word::prefix(nat n) const {
    Word r = zeros(n);
    for (nat i = 0; i < n; ++i)
        if (bit(i))
            r.set_bit(i, 1);
    return r;
}

Word Word::suffix_from(nat n) const {
    if (n > len_)
        throw PreconditionError("suffix_from past end of word");
    Word r = zeros(len_ - n);
    for (nat i = n; i < len_; ++i)
        if (bit(i))
            r.set_bit(i - n, 1);
    return r;
}

bool Word::is_prefix_of(const Word& w) const {
    if (len_ > w.len_)
        return false;
    nat full = len_ / 64;
    for (nat b = 0; b < full; ++b)
        if (blk_[b] != w.blk_[b])
            return false;
    for (nat i = full * 64; i < len_; ++i)
        if (bit(i) != w.bit(i))
            return false;
    return true;
}

bool Word::compatible(const Word& w) const {
    return len_ <= w.len_ ? is_prefix_of(w) : w.is_prefix_of(*this);
}

bool Word::all_zero() const {
    for (auto b : blk_)
        if (b)
            return false;
    return true;
}

std::vector<nat> Word::one_positions() const {
    std::vector<nat> r;
    for (nat i = 0; i < len_; ++i)
        if (bit(i))
            r.push_back(i);
    return r;
}

std::string Word::str() const {
    std::string s(len_, '0');
    for (nat i = 0; i < len_; ++i)
        if (bit(i))
            s[i] = '1';
    return s;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.len_ != b.len_)
        return a.len_ <=> b.len_;
    for (nat i = 0; i < a.len_; ++i)
        if (a.bit(i) != b.bit(i))
            return a.bit(i) <=> b.bit(i);
    return std::strong_ordering::equal;
}

std::size_t Word::hash() const {
    std::size_t h = 1469598103934665603ull ^ len_;
    for (auto b : blk_) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

Word psi(nat n) {
    // Words of length < L occupy indices [0, 2^L - 1).
    nat L = 0, first = 0;
    while (true) {
        if (L >= 63)
            throw OverflowError("psi index too large: " + std::to_string(n));
        nat next = first + (nat{1} << L);
        if (n < next)
            break;
        first = next;
        ++L;
    }
    nat off = n - first;
    Word w = Word::zeros(L);
    for (nat i = 0; i < L; ++i)
        if ((off >> (L - 1 - i)) & 1u)
            w.set_bit(i, 1);
    return w;
}

nat psi_inv(const Word& s) {
    nat L = s.size();
    if (L >= 63)
        throw OverflowError("psi_inv word too long: " + std::to_string(L));
    nat first = (nat{1} << L) - 1;
    nat off = 0;
    for (nat i = 0; i < L; ++i)
        off = (off << 1) | static_cast<nat>(s.bit(i));
    return first + off;
}

Word sn(nat n) {
    Word w = psi(n);
    w.append_zeros(n - w.size());
    return w;
}

nat pair_code(nat n, nat p) {
    nat s = checked_add(n, p);
    // s(s+1)/2: divide the even factor first.
    nat tri = (s % 2 == 0) ? checked_mul(s / 2, s + 1) : checked_mul((s + 1) / 2, s);
    return checked_add(tri, p);
}

nat m_of(nat l) {
    // Largest m with m(m+1)/2 <= l via floating seed, then exact fixup.
    nat m = static_cast<nat>(std::sqrt(2.0L * static_cast<long double>(l)));
    while (m > 0 && (m % 2 == 0 ? (m / 2) * (m + 1) : ((m + 1) / 2) * m) > l)
        --m;
    while (true) {
        nat n = m + 1;
        nat tri = (n % 2 == 0) ? (n / 2) * (n + 1) : ((n + 1) / 2) * n;
        if (tri > l)
            break;
        m = n;
    }
    return m;
}

std::pair<nat, nat> unpair(nat q) {
    nat m = m_of(q);
    nat tri = (m % 2 == 0) ? (m / 2) * (m + 1) : ((m + 1) / 2) * m;
    nat p = q - tri;
    return {m - p, p};
}

nat phi(nat n, nat p) {
    auto [p0, p1] = unpair(p);
    return pair_code(pair_code(n, p0), p1);
}

std::pair<nat, nat> phi_inv(nat q) {
    auto [q0, q1] = unpair(q);
    auto [q00, q01] = unpair(q0);
    return {q00, pair_code(q01, q1)};
}

} // namespace levelcomb
