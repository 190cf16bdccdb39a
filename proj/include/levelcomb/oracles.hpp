#ifndef LEVELCOMB_ORACLES_HPP
#define LEVELCOMB_ORACLES_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "levelcomb/ep.hpp"
#include "levelcomb/frame.hpp"

namespace levelcomb {

/// Presentation of a monotone family (C_n) of closed sets by exact
/// level-box predicates; the dense open sets are the complements O_n = -C_n.
/// Queries search for the minimal zero padding whose box escapes C_n.
class BoxOracle {
  public:
    explicit BoxOracle(nat bound) : bound_(bound) {}
    virtual ~BoxOracle() = default;

    /// Does the box N_a x N_b meet C_n? Exact on every presented kind.
    bool box_meets(nat n, const Word& a, const Word& b) const;

    /// Minimal m <= bound with N_{s 0^m} x N_{t 0^m} inside O_n.
    nat query(const Word& s, const Word& t, nat n) const;

    nat bound() const { return bound_; }
    virtual std::string kind() const = 0;

    void add_extra_point(EpPoint x, EpPoint y);
    const std::vector<std::pair<EpPoint, EpPoint>>& extra_points() const { return extra_; }

  protected:
    virtual bool base_meets(nat n, const Word& a, const Word& b) const = 0;

  private:
    nat bound_;
    std::vector<std::pair<EpPoint, EpPoint>> extra_;
};

/// C_n = union of the first n+1 explicit box lists (cumulative).
class BoxListOracle : public BoxOracle {
  public:
    BoxListOracle(std::map<nat, std::vector<WordPair>> boxes, nat bound);
    std::string kind() const override { return "complement-of-boxes"; }

  protected:
    bool base_meets(nat n, const Word& a, const Word& b) const override;

  private:
    std::map<nat, std::vector<WordPair>> boxes_;
};

/// C_n = the first n+1 partial-shift graphs and their reversals; their union
/// is the symmetrized tent relation.
class TentSymOracle : public BoxOracle {
  public:
    explicit TentSymOracle(nat bound) : BoxOracle(bound) {}
    std::string kind() const override { return "g0-symmetric"; }

  protected:
    bool base_meets(nat n, const Word& a, const Word& b) const override;
};

/// C_n = body of the frame tree, for every n.
class TreeBodyOracle : public BoxOracle {
  public:
    TreeBodyOracle(Frame frame, nat bound);
    std::string kind() const override { return "t-body"; }
    const Frame& frame() const { return frame_; }

  protected:
    bool base_meets(nat n, const Word& a, const Word& b) const override;

  private:
    Frame frame_;
};

/// C_n = closure of the bipartite tent lift, for every n.
class BipartiteClosureOracle : public BoxOracle {
  public:
    explicit BipartiteClosureOracle(nat bound) : BoxOracle(bound) {}
    std::string kind() const override { return "b0-closure"; }

  protected:
    bool base_meets(nat n, const Word& a, const Word& b) const override;
};

/// Does the box N_a x N_b meet the closure of the bipartite tent lift?
bool b0_closure_meets(const Word& a, const Word& b);

/// One-dimensional dense-open presentation: O_q decreasing with a coverage
/// predicate, plus the minimal-extension search (lengths first, then
/// lexicographic).
class OneDimOpenOracle {
  public:
    explicit OneDimOpenOracle(nat bound) : bound_(bound) {}
    virtual ~OneDimOpenOracle() = default;

    virtual bool covers(const Word& x, nat q) const = 0; // N_x inside O_q
    Word query(const Word& u, nat q) const;

    nat bound() const { return bound_; }
    virtual std::string kind() const = 0;

  private:
    nat bound_;
};

/// O_q = the whole space.
class FullSpaceOracle : public OneDimOpenOracle {
  public:
    explicit FullSpaceOracle(nat bound) : OneDimOpenOracle(bound) {}
    bool covers(const Word&, nat) const override { return true; }
    std::string kind() const override { return "full-space"; }
};

/// O_q = complement of the first q+1 listed points.
class AvoidPointsOracle : public OneDimOpenOracle {
  public:
    AvoidPointsOracle(std::vector<EpPoint> points, nat bound);
    bool covers(const Word& x, nat q) const override;
    std::string kind() const override { return "avoid-ep-points"; }

  private:
    std::vector<EpPoint> points_;
};

nat default_oracle_bound();

/// Loaders for the oracle JSON declarations used by the CLI.
std::shared_ptr<BoxOracle> load_box_oracle(const std::string& json_text, const Frame* frame);
std::shared_ptr<OneDimOpenOracle> load_onedim_oracle(const std::string& json_text);

} // namespace levelcomb

#endif
