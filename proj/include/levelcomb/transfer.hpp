#ifndef LEVELCOMB_TRANSFER_HPP
#define LEVELCOMB_TRANSFER_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "levelcomb/ep.hpp"

namespace levelcomb {

/// Finite partial injection on the naturals.
using PartialInjection = std::map<nat, nat>;

/// Requires i injective with (i(m))_0 = (m)_0 on its domain; throws
/// PreconditionError naming the offending argument otherwise.
void require_column_preserving_injection(const PartialInjection& i);

/// Pushes a column-preserving injection through the n-th phi column:
/// I(p) = <(p)_0, (i(phi(n,p)))_1>, defined wherever the inner value is.
/// Satisfies phi(n, I(p)) = i(phi(n, p)) and inherits both preconditions.
PartialInjection transfer_injection(const PartialInjection& i, nat n);

enum class BasicIdeal { Fin, I3 };

struct InvarianceReport {
    bool ok = true;
    std::vector<std::string> asymmetries;
};

/// For each finitely supported point, compares membership before and after
/// moving its support through i; any asymmetry is a reported failure.
InvarianceReport vertical_invariance_check(BasicIdeal ideal, const PartialInjection& i,
                                           const std::vector<EpPoint>& xs);

using SectionMap = std::function<Word(const Word&)>;

/// Assembles a single reduction from the per-column sections:
/// f(x)(q) = f_{((q)_0)_0}(x)(<((q)_0)_1, (q)_1>). Sections must produce
/// words long enough for every demanded inner position.
Word assemble_section_reduction(const std::vector<SectionMap>& sections, const Word& x,
                                nat out_length);

} // namespace levelcomb

#endif
