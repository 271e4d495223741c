#include "ivq/oracles.hpp"

#include <algorithm>

namespace ivq {

std::string to_string(OracleKind kind) {
    switch (kind) {
        case OracleKind::GroundTruth: return "ground-truth";
        case OracleKind::Scripted: return "scripted";
        case OracleKind::Adversary: return "adversary";
    }
    return "?";
}

namespace {

void reject_point(std::size_t index, const Area& current) {
    if (current.is_point()) {
        throw OracleRejected("area " + std::to_string(index + 1) + " is a point and cannot be queried");
    }
}

Area make_interval(const Rational& lo, const Rational& hi, const TypeSet& returns) {
    if (returns.has_open()) return Area::open(lo, hi);
    if (returns.has_closed()) return Area::closed(lo, hi);
    return Area::point(midpoint(lo, hi));
}

// Largest power-of-two step not above `gap / 2`, or 0 when none fits.
std::int64_t grid_for(const Rational& gap) {
    std::int64_t grid = 1;
    while (Rational(1, grid) > gap / Rational(2)) {
        if (grid > (std::int64_t{1} << 60)) return 0;
        grid *= 2;
    }
    return grid;
}

Rational floor_to(const Rational& x, std::int64_t grid) {
    const auto scaled = x * Rational(grid);
    auto q = scaled.numerator() / scaled.denominator();
    if (scaled.numerator() < 0 && q * scaled.denominator() != scaled.numerator()) --q;
    return {q, grid};
}

// Once denominators pass 2^24, moves lo down and hi up onto a power-of-two
// grid finer than half their distance to the current area's ends.
void snap_outward(Rational& lo, Rational& hi, const Area& current) {
    constexpr std::int64_t kLargeDenominator = std::int64_t{1} << 24;
    if (lo.denominator() > kLargeDenominator && current.lo() < lo) {
        if (const auto grid = grid_for(lo - current.lo()); grid != 0) lo = floor_to(lo, grid);
    }
    if (hi.denominator() > kLargeDenominator && hi < current.hi()) {
        if (const auto grid = grid_for(current.hi() - hi); grid != 0) hi = -floor_to(-hi, grid);
    }
}

}  // namespace

Area middle_half(const Area& current, const TypeSet& returns) {
    if (current.is_point()) {
        throw OracleRejected("cannot refine a point");
    }
    const Rational quarter = current.length() / Rational(4);
    return make_interval(current.lo() + quarter, current.hi() - quarter, returns);
}

Area ground_truth_respond(const RefinementPolicy& policy, const TypeSet& returns, const Rational& hidden,
                          const Area& current, std::size_t /*count*/) {
    if (current.is_point()) {
        throw OracleRejected("point areas cannot be queried");
    }
    if (!current.contains_value(hidden)) {
        throw std::invalid_argument("hidden value " + hidden.str() + " outside " + current.str());
    }
    const auto only_points = returns == TypeSet(TypeSet::kPoint);
    if (only_points || std::holds_alternative<ExactPolicy>(policy)) {
        if (!returns.has_point()) {
            throw std::invalid_argument("exact responses need P in the return set, have " + returns.str());
        }
        return Area::point(hidden);
    }

    const auto& shrink = std::get<HalvePolicy>(policy).shrink;
    if (shrink <= Rational(0) || shrink >= Rational(1)) {
        throw std::invalid_argument("halve shrink must lie in (0, 1), got " + shrink.str());
    }
    const Rational length = shrink * current.length();
    const Rational margin = length / Rational(100);
    Rational lo = hidden - length / Rational(2);
    Rational hi = lo + length;
    if (lo <= current.lo()) {
        lo = current.lo() + margin;
        hi = lo + length;
    }
    if (hi >= current.hi()) {
        hi = current.hi() - margin;
        lo = hi - length;
        if (lo <= current.lo()) lo = current.lo() + margin;
    }
    // The shift may have pushed the hidden value out; pull the near end back
    // to one hundredth of the way from the old endpoint to the hidden value.
    if (hidden <= lo) lo = current.lo() < hidden ? current.lo() + (hidden - current.lo()) / Rational(100) : hidden;
    if (hidden >= hi) hi = hidden < current.hi() ? current.hi() - (current.hi() - hidden) / Rational(100) : hidden;
    snap_outward(lo, hi, current);

    if (returns.has_open() && lo < hidden && hidden < hi) {
        return Area::open(lo, hi);
    }
    if (returns.has_closed()) {
        return Area::closed(lo, hi);
    }
    if (returns.has_point()) {
        return Area::point(hidden);
    }
    throw std::invalid_argument("no admissible response shape for hidden value " + hidden.str() + " in " +
                                current.str());
}

// ---------------------------------------------------------------------------

GroundTruthOracle::GroundTruthOracle(RefinementPolicy policy, TypeSet returns, std::vector<Rational> hidden)
    : policy_(std::move(policy)), returns_(returns), hidden_(std::move(hidden)) {}

std::string GroundTruthOracle::name() const {
    if (const auto* halve = std::get_if<HalvePolicy>(&policy_)) {
        return "halve:" + halve->shrink.str();
    }
    return "exact";
}

Area GroundTruthOracle::respond(std::size_t index, std::size_t count, const Area& current) {
    if (index >= hidden_.size()) {
        throw OracleRejected("index " + std::to_string(index + 1) + " has no hidden value");
    }
    return ground_truth_respond(policy_, returns_, hidden_[index], current, count);
}

std::unique_ptr<Oracle> GroundTruthOracle::clone() const { return std::make_unique<GroundTruthOracle>(*this); }

std::size_t GroundTruthOracle::refinement_hint() const {
    return std::holds_alternative<ExactPolicy>(policy_) ? 1 : 64;
}

// ---------------------------------------------------------------------------

ScriptedOracle::ScriptedOracle(std::map<std::size_t, AreaVector> responses) : responses_(std::move(responses)) {}

Area ScriptedOracle::respond(std::size_t index, std::size_t count, const Area& current) {
    reject_point(index, current);
    const auto it = responses_.find(index);
    if (it == responses_.end() || count == 0 || count > it->second.size()) {
        throw OracleExhausted("script has no response #" + std::to_string(count) + " for index " +
                              std::to_string(index + 1));
    }
    return it->second[count - 1];
}

std::unique_ptr<Oracle> ScriptedOracle::clone() const { return std::make_unique<ScriptedOracle>(*this); }

std::size_t ScriptedOracle::refinement_hint() const {
    std::size_t longest = 1;
    for (const auto& [index, list] : responses_) longest = std::max(longest, list.size());
    return longest;
}

FunctionOracle::FunctionOracle(std::string name, Respond respond, std::size_t hint)
    : name_(std::move(name)), respond_(std::move(respond)), hint_(hint) {}

Area FunctionOracle::respond(std::size_t index, std::size_t count, const Area& current) {
    reject_point(index, current);
    return respond_(index, count, current);
}

std::unique_ptr<Oracle> FunctionOracle::clone() const { return std::make_unique<FunctionOracle>(*this); }

// ---------------------------------------------------------------------------

namespace {

const TypeSet kOpenOnly{TypeSet::kOpen};

/// (1 + i*eps, 5) while that still refines `current`, otherwise the middle half.
Area a0_step(const Rational& eps, std::size_t i, const Area& current) {
    const Rational lo = Rational(1) + eps * Rational(static_cast<std::int64_t>(i));
    if (current.lo() < lo && lo < current.hi() && current.hi() == Rational(5)) {
        return Area::open(lo, 5);
    }
    return middle_half(current, kOpenOnly);
}

Area fixed_or_refine(const Area& wanted, const Area& current, const TypeSet& returns) {
    if (contains(current, wanted) && wanted != current) return wanted;
    return middle_half(current, returns);
}

}  // namespace

MinTightAdversary::MinTightAdversary(std::size_t n, std::size_t a0_index) : n_(n), a0_(a0_index) {
    if (n < 1) throw std::invalid_argument("min-tight needs n >= 1");
    if (a0_index != 0 && a0_index != n) throw std::invalid_argument("a0 must be the first or the last area");
}

Area MinTightAdversary::respond(std::size_t index, std::size_t count, const Area& current) {
    if (index > n_) {
        throw OracleRejected("min-tight fixture has " + std::to_string(n_ + 1) + " areas");
    }
    reject_point(index, current);
    const auto eps = epsilon();
    if (index == a0_) {
        if (count == 1 && current != Area::open(1, 5)) throw OracleRejected("a0 must start as (1, 5)");
        if (branch_ == Branch::Undecided && count >= n_) branch_ = Branch::ManyA0;
        if (branch_ == Branch::ManyS && count == n_) {
            return fixed_or_refine(Area::open(2, 3), current, kOpenOnly);
        }
        return a0_step(eps, count, current);
    }
    if (count > 1) {
        return middle_half(current, kOpenOnly);
    }
    if (current != Area::open(3, 7)) throw OracleRejected("S-intervals must start as (3, 7)");
    s_queried_.insert(index);
    if (branch_ == Branch::Undecided && s_queried_.size() >= n_) {
        branch_ = Branch::ManyS;
        return Area::open(3, 4);
    }
    return Area::open(6, 7);
}

std::unique_ptr<Oracle> MinTightAdversary::clone() const { return std::make_unique<MinTightAdversary>(n_, a0_); }

std::unique_ptr<Oracle> MinTightAdversary::opt_facing() const {
    const auto n = n_;
    const auto a0 = a0_;
    const auto eps = epsilon();
    const bool many_s = branch_ == Branch::ManyS;
    return std::make_unique<FunctionOracle>(
        many_s ? "min-tight/opt-many-s" : "min-tight/opt-many-a0",
        [n, a0, eps, many_s](std::size_t index, std::size_t count, const Area& current) -> Area {
            if (index == a0) {
                if (many_s && count == n) return fixed_or_refine(Area::open(2, 3), current, kOpenOnly);
                return a0_step(eps, count, current);
            }
            return fixed_or_refine(Area::open(6, 7), current, kOpenOnly);
        },
        2 * n);
}

// ---------------------------------------------------------------------------

KminPointAdversary::KminPointAdversary(std::size_t k, bool point_returns)
    : k_(k), point_returns_(point_returns), designated_(k - 1) {
    if (k < 1) throw std::invalid_argument("kmin-point needs k >= 1");
}

Area KminPointAdversary::low_response() const {
    return point_returns_ ? Area::point(1) : Area::open(Rational(1, 2), Rational(3, 2));
}

Area KminPointAdversary::high_response() const {
    return point_returns_ ? Area::point(4) : Area::open(Rational(7, 2), Rational(9, 2));
}

Area KminPointAdversary::respond(std::size_t index, std::size_t count, const Area& current) {
    if (index >= 2 * k_) throw OracleRejected("kmin-point fixture has " + std::to_string(2 * k_) + " areas");
    if (index >= k_) throw OracleRejected("area " + std::to_string(index + 1) + " is a fixed point");
    reject_point(index, current);
    const TypeSet returns(point_returns_ ? TypeSet::kPoint : TypeSet::kOpen);
    if (count > 1) return middle_half(current, returns);
    queried_.insert(index);
    if (queried_.size() == k_) {
        designated_ = index;
        return high_response();
    }
    return low_response();
}

std::unique_ptr<Oracle> KminPointAdversary::clone() const {
    return std::make_unique<KminPointAdversary>(k_, point_returns_);
}

std::unique_ptr<Oracle> KminPointAdversary::opt_facing() const {
    const auto designated = designated_;
    const auto low = low_response();
    const auto high = high_response();
    const TypeSet returns(point_returns_ ? TypeSet::kPoint : TypeSet::kOpen);
    return std::make_unique<FunctionOracle>(
        "kmin-point/opt",
        [designated, low, high, returns](std::size_t index, std::size_t count, const Area& current) -> Area {
            if (count > 1) return middle_half(current, returns);
            return index == designated ? high : low;
        });
}

// ---------------------------------------------------------------------------

CpAnomalyAdversary::CpAnomalyAdversary(std::size_t n) : n_(n), designated_(n - 1) {
    if (n < 1) throw std::invalid_argument("cp-anomaly needs n >= 1");
}

Area CpAnomalyAdversary::respond(std::size_t index, std::size_t count, const Area& current) {
    if (index >= n_) throw OracleRejected("cp-anomaly fixture has " + std::to_string(n_) + " areas");
    reject_point(index, current);
    if (count == 1 && current != Area::closed(1, 3)) throw OracleRejected("areas must start as [1, 3]");
    queried_.insert(index);
    if (queried_.size() == n_) {
        designated_ = index;
        return Area::point(1);
    }
    return Area::point(2);
}

std::unique_ptr<Oracle> CpAnomalyAdversary::clone() const { return std::make_unique<CpAnomalyAdversary>(n_); }

std::unique_ptr<Oracle> CpAnomalyAdversary::opt_facing() const {
    const auto designated = designated_;
    return std::make_unique<FunctionOracle>(
        "cp-anomaly/opt", [designated](std::size_t index, std::size_t, const Area&) -> Area {
            return Area::point(index == designated ? 1 : 2);
        });
}

// ---------------------------------------------------------------------------

std::unique_ptr<Oracle> opo_counterexample_oracle() {
    return std::make_unique<FunctionOracle>(
        "opo-counter",
        [](std::size_t index, std::size_t count, const Area& current) -> Area {
            if (index > 1) throw OracleRejected("opo-counter fixture has 2 areas");
            if (index == 0) {
                const Rational d = Rational(19) - Rational(1, static_cast<std::int64_t>(count + 1));
                return fixed_or_refine(Area::open(d, 20), current, kOpenOnly);
            }
            return fixed_or_refine(Area::open(Rational(41, 2), 21), current, kOpenOnly);
        },
        8);
}

UncertainInstance min_tight_instance(std::size_t n, bool a0_last) {
    UncertainInstance inst;
    inst.areas.assign(n + 1, Area::open(3, 7));
    inst.areas[a0_last ? n : 0] = Area::open(1, 5);
    inst.problem = SelectionProblem{};
    inst.model = ModelSpec::parse("O-O");
    return inst;
}

UncertainInstance kmin_point_instance(std::size_t k, bool point_returns) {
    UncertainInstance inst;
    inst.areas.assign(k, Area::open(0, 5));
    inst.areas.insert(inst.areas.end(), k, Area::point(3));
    inst.problem = SelectionProblem{k, Objective::KthMin, TieRule::Stable};
    inst.model = ModelSpec::parse(point_returns ? "OP-P" : "OP-O");
    return inst;
}

UncertainInstance cp_anomaly_instance(std::size_t n, TieRule tie) {
    UncertainInstance inst;
    inst.areas.assign(n, Area::closed(1, 3));
    inst.problem = SelectionProblem{1, Objective::KthMin, tie};
    inst.model = ModelSpec::parse("CP-P");
    return inst;
}

UncertainInstance opo_counterexample_instance() {
    UncertainInstance inst;
    inst.areas = {Area::open(2, 20), Area::open(19, 21)};
    inst.problem = SelectionProblem{};
    inst.model = ModelSpec::parse("OP-O");
    return inst;
}

}  // namespace ivq
