#include "levelcomb/ep.hpp"

#include <numeric>

namespace levelcomb {

EpPoint::EpPoint() : period_(Word::from_string("0")) {}

EpPoint::EpPoint(Word prefix, Word period) : prefix_(std::move(prefix)), period_(std::move(period)) {
    if (period_.empty())
        throw PreconditionError("ep point needs a nonempty period");
    canonicalize();
}

EpPoint EpPoint::zero() {
    return EpPoint(Word(), Word::from_string("0"));
}

EpPoint EpPoint::ones() {
    return EpPoint(Word(), Word::from_string("1"));
}

EpPoint EpPoint::from_strings(const std::string& prefix, const std::string& period) {
    return EpPoint(Word::from_string(prefix), Word::from_string(period));
}

void EpPoint::canonicalize() {
    // primitive period: shortest divisor block repeating through the period
    nat K = period_.size();
    for (nat d = 1; d < K; ++d) {
        if (K % d != 0)
            continue;
        bool repeats = true;
        for (nat i = d; i < K && repeats; ++i)
            if (period_.bit(i) != period_.bit(i % d))
                repeats = false;
        if (repeats) {
            period_ = period_.prefix(d);
            K = d;
            break;
        }
    }
    // minimal prefix: fold trailing prefix bits into a rotated period
    while (!prefix_.empty() && prefix_.bit(prefix_.size() - 1) == period_.bit(K - 1)) {
        Word rotated = Word::zeros(K);
        if (period_.bit(K - 1))
            rotated.set_bit(0, 1);
        for (nat i = 0; i + 1 < K; ++i)
            if (period_.bit(i))
                rotated.set_bit(i + 1, 1);
        period_ = std::move(rotated);
        prefix_ = prefix_.prefix(prefix_.size() - 1);
    }
}

int EpPoint::at(nat q) const {
    if (q < prefix_.size())
        return prefix_.bit(q);
    return period_.bit((q - prefix_.size()) % period_.size());
}

Word EpPoint::truncate(nat length) const {
    Word w = Word::zeros(length);
    for (nat i = 0; i < length; ++i)
        if (at(i))
            w.set_bit(i, 1);
    return w;
}

bool EpPoint::finitely_supported() const {
    return period_.all_zero();
}

std::vector<nat> EpPoint::support() const {
    if (!finitely_supported())
        throw PreconditionError("support of a point with recurring ones is infinite");
    return prefix_.one_positions();
}

EpPoint ep_xor(const EpPoint& x, const EpPoint& y) {
    nat S = std::max(x.prefix().size(), y.prefix().size());
    nat K = std::lcm(x.period().size(), y.period().size());
    Word prefix = Word::zeros(S), period = Word::zeros(K);
    for (nat i = 0; i < S; ++i)
        if (x.at(i) != y.at(i))
            prefix.set_bit(i, 1);
    for (nat i = 0; i < K; ++i)
        if (x.at(S + i) != y.at(S + i))
            period.set_bit(i, 1);
    return EpPoint(std::move(prefix), std::move(period));
}

EpPoint ep_max(const std::vector<EpPoint>& xs) {
    if (xs.empty())
        throw PreconditionError("ep_max of an empty list");
    nat S = 0, K = 1;
    for (const auto& x : xs) {
        S = std::max(S, x.prefix().size());
        K = std::lcm(K, x.period().size());
    }
    Word prefix = Word::zeros(S), period = Word::zeros(K);
    for (nat i = 0; i < S + K; ++i) {
        int b = 0;
        for (const auto& x : xs)
            b = std::max(b, x.at(i));
        if (b) {
            if (i < S)
                prefix.set_bit(i, 1);
            else
                period.set_bit(i - S, 1);
        }
    }
    return EpPoint(std::move(prefix), std::move(period));
}

bool ep_le(const EpPoint& x, const EpPoint& y) {
    nat S = std::max(x.prefix().size(), y.prefix().size());
    nat K = std::lcm(x.period().size(), y.period().size());
    for (nat i = 0; i < S + K; ++i)
        if (x.at(i) > y.at(i))
            return false;
    return true;
}

Word select_vertical(const EpPoint& x, nat n, nat length) {
    Word w = Word::zeros(length);
    for (nat p = 0; p < length; ++p)
        if (x.at(pair_code(n, p)))
            w.set_bit(p, 1);
    return w;
}

Word select_phi(const EpPoint& x, nat n, nat length) {
    Word w = Word::zeros(length);
    for (nat p = 0; p < length; ++p)
        if (x.at(phi(n, p)))
            w.set_bit(p, 1);
    return w;
}

Word word_select_vertical(const Word& src, nat n, nat length) {
    Word w = Word::zeros(length);
    for (nat p = 0; p < length; ++p) {
        nat q = pair_code(n, p);
        if (q >= src.size())
            throw PreconditionError("word too short for vertical position " + std::to_string(q));
        if (src.bit(q))
            w.set_bit(p, 1);
    }
    return w;
}

Word word_select_phi(const Word& src, nat n, nat length) {
    Word w = Word::zeros(length);
    for (nat p = 0; p < length; ++p) {
        nat q = phi(n, p);
        if (q >= src.size())
            throw PreconditionError("word too short for phi position " + std::to_string(q));
        if (src.bit(q))
            w.set_bit(p, 1);
    }
    return w;
}

Membership fin_member(const EpPoint& x) {
    if (x.finitely_supported())
        return {Verdict::In, 0, ""};
    return {Verdict::Out, 0, "period carries a one"};
}

Membership i3_member(const EpPoint& x) {
    if (x.finitely_supported())
        return {Verdict::In, 0, ""};
    nat K = x.period().size();
    nat S = x.prefix().size();
    for (nat n = 0; n < 2 * K; ++n) {
        // first p whose code lands past the prefix
        nat p0 = 0;
        while (pair_code(n, p0) < S)
            ++p0;
        for (nat p = p0; p < p0 + 2 * K; ++p)
            if (x.at(pair_code(n, p)))
                return {Verdict::Out, 0,
                        "column " + std::to_string(n) + " has recurring ones"};
    }
    return {Verdict::In, 0, ""};
}

} // namespace levelcomb
