#ifndef LEVELCOMB_EP_HPP
#define LEVELCOMB_EP_HPP

#include <vector>

#include "levelcomb/words.hpp"

namespace levelcomb {

/// Eventually periodic point of the Cantor space in canonical form: the
/// period is primitive and the prefix is as short as possible. The value at
/// position q is prefix[q] for q < |prefix| and cycles through the period
/// afterwards.
class EpPoint {
  public:
    EpPoint();
    EpPoint(Word prefix, Word period);

    static EpPoint zero();
    static EpPoint ones();
    static EpPoint from_strings(const std::string& prefix, const std::string& period);

    int at(nat q) const;
    Word truncate(nat length) const;

    const Word& prefix() const { return prefix_; }
    const Word& period() const { return period_; }

    bool finitely_supported() const;
    /// Exact positions carrying a 1; only for finitely supported points.
    std::vector<nat> support() const;

    friend bool operator==(const EpPoint& a, const EpPoint& b) {
        return a.prefix_ == b.prefix_ && a.period_ == b.period_;
    }

  private:
    void canonicalize();

    Word prefix_;
    Word period_;
};

EpPoint ep_xor(const EpPoint& x, const EpPoint& y);
EpPoint ep_max(const std::vector<EpPoint>& xs);
bool ep_le(const EpPoint& x, const EpPoint& y);

/// First `length` bits of the n-th vertical section (positions <n,p>).
Word select_vertical(const EpPoint& x, nat n, nat length);
/// First `length` bits of the n-th phi-section (positions phi(n,p)).
Word select_phi(const EpPoint& x, nat n, nat length);

/// Same section selectors on a plain word; positions past the word error.
Word word_select_vertical(const Word& w, nat n, nat length);
Word word_select_phi(const Word& w, nat n, nat length);

enum class Verdict { In, Out, Unknown };

struct Membership {
    Verdict verdict;
    nat bound = 0; // search bound used, meaningful for Unknown
    std::string witness;

    bool in() const { return verdict == Verdict::In; }
    bool out() const { return verdict == Verdict::Out; }
};

/// Exact: the canonical period is all-zero.
Membership fin_member(const EpPoint& x);

/// Exact via residue periodicity: with period length K, the residues of
/// <n,p> mod K are periodic in p with period dividing 2K and depend on n
/// only through n mod 2K, so a (2K x 2K) window scan decides membership.
Membership i3_member(const EpPoint& x);

} // namespace levelcomb

#endif
