#ifndef LEVELCOMB_EMBED_HPP
#define LEVELCOMB_EMBED_HPP

#include <map>
#include <string>
#include <vector>

#include "levelcomb/oracles.hpp"

namespace levelcomb {

enum class EngineKind { Thm26, Thm410, Thm411, Lemma37 };

EngineKind engine_kind_from_string(const std::string& s);
std::string engine_kind_to_string(EngineKind k);

/// Finite-depth table of one of the constructed reduction maps, together
/// with the data needed to re-verify every construction condition.
struct PartialEmbedding {
    EngineKind kind = EngineKind::Thm26;
    nat depth = 0;

    /// Level-uniform word tables (inputs of every length up to depth).
    std::map<Word, Word> psi;
    std::vector<nat> delta;
    std::vector<nat> k; // output length per input length, k[0..depth]

    /// Label-engine payload.
    std::map<Word, nat> labels; // l(w), |w| <= depth
    std::map<Word, Word> z;     // z_w for nonempty w
    Word alpha;                 // certified prefix of the shared point
    nat transfer_from = 0;      // window threshold
    Word seed_u, seed_v;        // (u', v') after the root substitution

    std::string to_json() const;
    static PartialEmbedding from_json(const std::string& text);
};

struct ConditionResult {
    std::string id;
    bool pass = true;
    std::string witness;
};

struct EmbedReport {
    bool ok = true;
    std::vector<ConditionResult> conditions;

    void add(std::string id, bool pass, std::string witness = "");
};

/// Word-table engine over the dense-template graph; conditions C1-C4.
PartialEmbedding build_thm26(const BoxOracle& oracle, nat depth);

/// Interleaving engine over the frame tree body; conditions D1-D3.
PartialEmbedding build_thm410(const Frame& frame, const BoxOracle& oracle, nat depth);

/// Word-table engine over the bipartite closure; conditions E1-E5.
PartialEmbedding build_thm411(const BoxOracle& oracle, nat depth);

/// Label engine producing l(w), z_w, the shared point prefix and the
/// per-branch prefixes; conditions L1-L5.
PartialEmbedding build_lemma37(const Frame& frame, const Word& u, const Word& v,
                               const OneDimOpenOracle& oracle, nat depth);

/// Re-runs every condition checker for the embedding's kind, independently
/// of construction. Contexts not needed by the kind may be null.
EmbedReport verify_embedding(const PartialEmbedding& e, const BoxOracle* box_oracle,
                             const OneDimOpenOracle* onedim_oracle, const Frame* frame);

/// Branch prefix of the constructed map at a full-depth input (label engine).
Word lemma37_branch_prefix(const PartialEmbedding& e, const Frame& frame, const Word& beta);

/// Interleaving map of the thm410 engine applied to a full-depth input.
Word thm410_apply(const PartialEmbedding& e, const Word& input);

} // namespace levelcomb

#endif
