#ifndef LEVELCOMB_FRAME_HPP
#define LEVELCOMB_FRAME_HPP

#include <map>
#include <string>
#include <vector>

#include "levelcomb/relation.hpp"

namespace levelcomb {

/// Initial segment (u_l, v_l), l <= depth, of the canonical frame, stored
/// explicitly. Builder frames can additionally compute entries above the
/// declared depth on demand through the construction recursion, up to a cap:
/// density witnesses live at indices far beyond any reasonable explicit
/// store.
class Frame {
  public:
    static constexpr nat kDefaultExtensionCap = nat{1} << 21;

    static Frame build(nat depth, nat extension_cap = kDefaultExtensionCap);
    static Frame from_entries(std::vector<WordPair> entries);

    nat depth() const { return entries_.empty() ? 0 : entries_.size() - 1; }
    const std::vector<WordPair>& entries() const { return entries_; }

    /// Entry within the explicit depth.
    const WordPair& entry(nat l) const;

    /// Entry at any index; beyond the explicit depth this recomputes through
    /// the recursion (builder frames only). Throws DepthError past the cap
    /// or for non-extendable frames.
    WordPair entry_at(nat l) const;

    bool extendable() const { return extendable_; }
    nat extension_cap() const { return cap_; }

    /// A builder-backed copy of this frame. Loaded frames are admitted only
    /// when every stored entry coincides with the construction.
    Frame ensure_extendable(nat extension_cap = kDefaultExtensionCap) const;

  private:
    static WordPair compute_entry(const Frame& f, nat l);

    std::vector<WordPair> entries_;
    bool extendable_ = false;
    nat cap_ = 0;
    mutable std::map<nat, WordPair> memo_;
};

Frame build_frame(nat depth, nat extension_cap = Frame::kDefaultExtensionCap);

struct FrameReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Checks uniqueness-per-length and the generation condition on every entry.
FrameReport verify_frame(const Frame& f);

struct DensityWitness {
    nat N;            // padding exponent
    nat entry_length; // q + 1 + |w| + N
};

/// The canonical padding N for (u_q 0 w 0^N, v_q 1 w 0^N) to be a frame
/// entry whose length has first pairing coordinate p. The returned value is
/// validated against the frame before being returned.
DensityWitness density_witness(const Frame& f, nat p, nat q, const Word& w);

/// All paddings up to max_len that the frame itself validates; test oracle.
std::vector<nat> density_scan(const Frame& f, nat p, nat q, const Word& w, nat max_len);

/// Level l of the tree generated by the frame.
LevelRelation tree_level(const Frame& f, nat l);
bool tree_member(const Frame& f, const Word& u, const Word& v);

struct TreeAcyclicityReport {
    bool ok = true;
    std::vector<std::string> failures;
};

/// For each 1 <= l <= l_max: symmetrized level acyclic and connected, lifted
/// level acyclic, and every pair within the (0-, 1-) half cubes.
TreeAcyclicityReport verify_tree_acyclicity(const Frame& f, nat l_max);

} // namespace levelcomb

#endif
