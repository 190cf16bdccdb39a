#include "levelcomb/oracles.hpp"

#include <cstdlib>

#include "json.hpp"
#include "levelcomb/levels.hpp"

namespace levelcomb {

namespace {

bool point_in_box(const EpPoint& x, const Word& a) {
    return x.truncate(a.size()) == a;
}

} // namespace

bool BoxOracle::box_meets(nat n, const Word& a, const Word& b) const {
    if (base_meets(n, a, b))
        return true;
    for (const auto& [x, y] : extra_)
        if (point_in_box(x, a) && point_in_box(y, b))
            return true;
    return false;
}

nat BoxOracle::query(const Word& s, const Word& t, nat n) const {
    Word a = s, b = t;
    for (nat m = 0; m <= bound_; ++m) {
        if (!box_meets(n, a, b))
            return m;
        a.push_back(0);
        b.push_back(0);
    }
    throw OracleError("no box witness within bound " + std::to_string(bound_) +
                      " for (" + s.str() + ", " + t.str() + ") at index " + std::to_string(n));
}

void BoxOracle::add_extra_point(EpPoint x, EpPoint y) {
    extra_.emplace_back(std::move(x), std::move(y));
}

BoxListOracle::BoxListOracle(std::map<nat, std::vector<WordPair>> boxes, nat bound)
    : BoxOracle(bound), boxes_(std::move(boxes)) {}

bool BoxListOracle::base_meets(nat n, const Word& a, const Word& b) const {
    for (const auto& [idx, list] : boxes_) {
        if (idx > n)
            break;
        for (const auto& [bs, bt] : list)
            if (a.compatible(bs) && b.compatible(bt))
                return true;
    }
    return false;
}

namespace {

/// Level prefixes of the j-th partial-shift graph: below the split the two
/// coordinates agree with s_j, above it they differ at position j only.
bool shift_graph_meets(nat j, const Word& a, const Word& b) {
    nat l = a.size();
    Word base = sn(j);
    if (l <= j) {
        Word cut = base.prefix(l);
        return a == cut && b == cut;
    }
    if (!base.is_prefix_of(a) || !base.is_prefix_of(b))
        return false;
    if (a.bit(j) != 0 || b.bit(j) != 1)
        return false;
    for (nat i = j + 1; i < l; ++i)
        if (a.bit(i) != b.bit(i))
            return false;
    return true;
}

} // namespace

bool TentSymOracle::base_meets(nat n, const Word& a, const Word& b) const {
    for (nat j = 0; j <= n; ++j)
        if (shift_graph_meets(j, a, b) || shift_graph_meets(j, b, a))
            return true;
    return false;
}

TreeBodyOracle::TreeBodyOracle(Frame frame, nat bound)
    : BoxOracle(bound), frame_(frame.ensure_extendable()) {}

bool TreeBodyOracle::base_meets(nat, const Word& a, const Word& b) const {
    return tree_member(frame_, a, b);
}

bool b0_closure_meets(const Word& a, const Word& b) {
    if (a.size() != b.size())
        return false;
    if (a.empty())
        return true;
    if (a.bit(0) != 0 || b.bit(0) != 1)
        return false;
    Word ta = a.suffix_from(1), tb = b.suffix_from(1);
    return ta == tb || t_member(ta, tb);
}

bool BipartiteClosureOracle::base_meets(nat, const Word& a, const Word& b) const {
    return b0_closure_meets(a, b);
}

Word OneDimOpenOracle::query(const Word& u, nat q) const {
    nat steps = 0;
    for (nat len = 0;; ++len) {
        if (len >= 63)
            throw OracleError("extension search exceeded representable lengths");
        for (nat bits = 0; bits < (nat{1} << len); ++bits) {
            if (++steps > bound_)
                throw OracleError("no extension within bound " + std::to_string(bound_) +
                                  " for " + u.str() + " at index " + std::to_string(q));
            Word x = vertex_to_word(bits, len);
            Word full = u;
            full.append(x);
            if (covers(full, q))
                return x;
        }
    }
}

AvoidPointsOracle::AvoidPointsOracle(std::vector<EpPoint> points, nat bound)
    : OneDimOpenOracle(bound), points_(std::move(points)) {}

bool AvoidPointsOracle::covers(const Word& x, nat q) const {
    for (nat j = 0; j < points_.size() && j <= q; ++j)
        if (point_in_box(points_[j], x))
            return false;
    return true;
}

nat default_oracle_bound() {
    if (const char* env = std::getenv("LEVELCOMB_ORACLE_BOUND")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return static_cast<nat>(v);
    }
    return 65536;
}

namespace {

using nlohmann::json;

EpPoint ep_from_json(const json& j) {
    return EpPoint::from_strings(j.value("prefix", std::string{}),
                                 j.value("period", std::string{"0"}));
}

} // namespace

std::shared_ptr<BoxOracle> load_box_oracle(const std::string& json_text, const Frame* frame) {
    json j = json::parse(json_text);
    std::string kind = j.at("kind").get<std::string>();
    nat bound = j.value("bound", default_oracle_bound());
    std::shared_ptr<BoxOracle> oracle;
    if (kind == "complement-of-boxes") {
        std::map<nat, std::vector<WordPair>> boxes;
        if (j.contains("boxes"))
            for (const auto& [key, list] : j.at("boxes").items()) {
                nat idx = std::stoull(key);
                for (const auto& pair : list)
                    boxes[idx].emplace_back(Word::from_string(pair.at(0).get<std::string>()),
                                            Word::from_string(pair.at(1).get<std::string>()));
            }
        oracle = std::make_shared<BoxListOracle>(std::move(boxes), bound);
    } else if (kind == "g0-symmetric") {
        oracle = std::make_shared<TentSymOracle>(bound);
    } else if (kind == "t-body") {
        Frame f = frame ? *frame : build_frame(8);
        oracle = std::make_shared<TreeBodyOracle>(std::move(f), bound);
    } else if (kind == "b0-closure") {
        oracle = std::make_shared<BipartiteClosureOracle>(bound);
    } else {
        throw PreconditionError("unknown box oracle kind: " + kind);
    }
    if (j.contains("extra_points"))
        for (const auto& pair : j.at("extra_points"))
            oracle->add_extra_point(ep_from_json(pair.at(0)), ep_from_json(pair.at(1)));
    return oracle;
}

std::shared_ptr<OneDimOpenOracle> load_onedim_oracle(const std::string& json_text) {
    json j = json::parse(json_text);
    std::string kind = j.at("kind").get<std::string>();
    nat bound = j.value("bound", default_oracle_bound());
    if (kind == "full-space")
        return std::make_shared<FullSpaceOracle>(bound);
    if (kind == "avoid-ep-points") {
        std::vector<EpPoint> pts;
        if (j.contains("points"))
            for (const auto& p : j.at("points"))
                pts.push_back(ep_from_json(p));
        return std::make_shared<AvoidPointsOracle>(std::move(pts), bound);
    }
    throw PreconditionError("unknown one-dimensional oracle kind: " + kind);
}

} // namespace levelcomb
