#ifndef LEVELCOMB_WORDS_HPP
#define LEVELCOMB_WORDS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "levelcomb/common.hpp"

namespace levelcomb {

/// Finite binary word, bit-packed. Position 0 is the leftmost character of
/// the '0'/'1' string form; the empty word is valid everywhere.
class Word {
  public:
    Word() = default;

    static Word zeros(nat n);
    static Word from_string(const std::string& s);

    nat size() const { return len_; }
    bool empty() const { return len_ == 0; }

    int bit(nat i) const { return (blk_[i >> 6] >> (i & 63)) & 1u; }
    void set_bit(nat i, int b);
    void push_back(int b);
    void append(const Word& w);
    void append_zeros(nat n);

    Word prefix(nat n) const;
    /// The suffix starting at position n ("w minus its first n bits").
    Word suffix_from(nat n) const;

    bool is_prefix_of(const Word& w) const;
    /// True when one of the two words extends the other.
    bool compatible(const Word& w) const;
    bool all_zero() const;
    std::vector<nat> one_positions() const;

    std::string str() const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.len_ == b.len_ && a.blk_ == b.blk_;
    }
    /// Length-then-lexicographic order (also the psi enumeration order).
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

    std::size_t hash() const;

  private:
    nat len_ = 0;
    std::vector<std::uint64_t> blk_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const { return w.hash(); }
};

using WordPair = std::pair<Word, Word>;

/// psi: the length-then-lexicographic bijection of the naturals with 2^{<omega}.
Word psi(nat n);
nat psi_inv(const Word& s);

/// s_n := psi(n) padded with zeros to length exactly n.
Word sn(nat n);

/// Cantor pairing <n,p> = (n+p)(n+p+1)/2 + p, overflow-checked.
nat pair_code(nat n, nat p);
std::pair<nat, nat> unpair(nat q);

/// Largest m with m(m+1)/2 <= l; equals the sum of the two coordinates of l.
nat m_of(nat l);

/// phi(n,p) = <<n,(p)_0>,(p)_1>, the column-preserving pairing.
nat phi(nat n, nat p);
std::pair<nat, nat> phi_inv(nat q);

} // namespace levelcomb

#endif
