#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ivq/area.hpp"
#include "ivq/instance.hpp"
#include "ivq/models.hpp"

namespace ivq {

enum class OracleKind { GroundTruth, Scripted, Adversary };
std::string to_string(OracleKind kind);

/// The oracle refused a query (point area, index outside a fixture's shape, ...).
class OracleRejected : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A scripted oracle has no response left for the requested (index, count).
class OracleExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Source of query responses.
///
/// `count` is how many times `index` has now been queried, including this
/// query (1 on the first query). GroundTruth and Scripted oracles answer as a
/// pure function of (index, count, current); only Adversary oracles may look
/// at the rest of the query history.
class Oracle {
public:
    virtual ~Oracle() = default;

    [[nodiscard]] virtual OracleKind kind() const noexcept = 0;
    [[nodiscard]] virtual std::string name() const = 0;
    virtual Area respond(std::size_t index, std::size_t count, const Area& current) = 0;
    /// Fresh copy in its initial state.
    [[nodiscard]] virtual std::unique_ptr<Oracle> clone() const = 0;
    /// Rough number of refinements an area may need before it stops changing.
    [[nodiscard]] virtual std::size_t refinement_hint() const { return 1; }
};

struct ExactPolicy {};

/// Sub-interval of length shrink * |current| centred on the hidden value and
/// clipped inside the current area with a margin of one hundredth of the new
/// length. Endpoints whose denominators pass 2^24 are widened outward to a
/// power-of-two grid.
struct HalvePolicy {
    Rational shrink{1, 2};
};

using RefinementPolicy = std::variant<ExactPolicy, HalvePolicy>;

Area ground_truth_respond(const RefinementPolicy& policy, const TypeSet& returns, const Rational& hidden,
                          const Area& current, std::size_t count);

class GroundTruthOracle final : public Oracle {
public:
    GroundTruthOracle(RefinementPolicy policy, TypeSet returns, std::vector<Rational> hidden);

    [[nodiscard]] OracleKind kind() const noexcept override { return OracleKind::GroundTruth; }
    [[nodiscard]] std::string name() const override;
    Area respond(std::size_t index, std::size_t count, const Area& current) override;
    [[nodiscard]] std::unique_ptr<Oracle> clone() const override;
    [[nodiscard]] std::size_t refinement_hint() const override;

    [[nodiscard]] const std::vector<Rational>& hidden() const noexcept { return hidden_; }

private:
    RefinementPolicy policy_;
    TypeSet returns_;
    std::vector<Rational> hidden_;
};

/// Replays an explicit per-index response list positionally by count.
class ScriptedOracle final : public Oracle {
public:
    explicit ScriptedOracle(std::map<std::size_t, AreaVector> responses);

    [[nodiscard]] OracleKind kind() const noexcept override { return OracleKind::Scripted; }
    [[nodiscard]] std::string name() const override { return "script"; }
    Area respond(std::size_t index, std::size_t count, const Area& current) override;
    [[nodiscard]] std::unique_ptr<Oracle> clone() const override;
    [[nodiscard]] std::size_t refinement_hint() const override;

    [[nodiscard]] const std::map<std::size_t, AreaVector>& responses() const noexcept { return responses_; }

private:
    std::map<std::size_t, AreaVector> responses_;
};

/// Update-independent oracle defined by a response function.
class FunctionOracle final : public Oracle {
public:
    using Respond = std::function<Area(std::size_t index, std::size_t count, const Area& current)>;

    FunctionOracle(std::string name, Respond respond, std::size_t hint = 4);

    [[nodiscard]] OracleKind kind() const noexcept override { return OracleKind::Scripted; }
    [[nodiscard]] std::string name() const override { return name_; }
    Area respond(std::size_t index, std::size_t count, const Area& current) override;
    [[nodiscard]] std::unique_ptr<Oracle> clone() const override;
    [[nodiscard]] std::size_t refinement_hint() const override { return hint_; }

private:
    std::string name_;
    Respond respond_;
    std::size_t hint_;
};

/// An adaptive adversary together with the script its colluding OPT sees.
class Adversary : public Oracle {
public:
    [[nodiscard]] OracleKind kind() const noexcept final { return OracleKind::Adversary; }
    /// Update-independent script consistent with what the algorithm was shown
    /// so far, under which OPT attains fixture_opt().
    [[nodiscard]] virtual std::unique_ptr<Oracle> opt_facing() const = 0;
    [[nodiscard]] virtual std::size_t fixture_opt() const = 0;
};

/// Tight example for witness-based 1-Min: a0 = (1,5) and n copies of (3,7).
/// The algorithm is held to 2n queries while OPT needs n.
class MinTightAdversary final : public Adversary {
public:
    enum class Branch { Undecided, ManyA0, ManyS };

    /// `a0_index` is either 0 or n.
    MinTightAdversary(std::size_t n, std::size_t a0_index);

    [[nodiscard]] std::string name() const override { return "min-tight"; }
    Area respond(std::size_t index, std::size_t count, const Area& current) override;
    [[nodiscard]] std::unique_ptr<Oracle> clone() const override;
    [[nodiscard]] std::unique_ptr<Oracle> opt_facing() const override;
    [[nodiscard]] std::size_t fixture_opt() const override { return n_; }
    [[nodiscard]] std::size_t refinement_hint() const override { return 2 * n_; }

    [[nodiscard]] Branch branch() const noexcept { return branch_; }
    [[nodiscard]] Rational epsilon() const { return Rational(1, static_cast<std::int64_t>(4 * n_)); }

private:
    std::size_t n_;
    std::size_t a0_;
    Branch branch_ = Branch::Undecided;
    std::set<std::size_t> s_queried_;
};

/// Lower-bound fixture for k-Min with points: k copies of (0,5) then k points 3.
/// The first k-1 distinct intervals queried come back as 1, the k-th as 4.
class KminPointAdversary final : public Adversary {
public:
    KminPointAdversary(std::size_t k, bool point_returns);

    [[nodiscard]] std::string name() const override { return "kmin-point"; }
    Area respond(std::size_t index, std::size_t count, const Area& current) override;
    [[nodiscard]] std::unique_ptr<Oracle> clone() const override;
    [[nodiscard]] std::unique_ptr<Oracle> opt_facing() const override;
    [[nodiscard]] std::size_t fixture_opt() const override { return 1; }

    [[nodiscard]] std::size_t designated() const noexcept { return designated_; }

private:
    [[nodiscard]] Area low_response() const;
    [[nodiscard]] Area high_response() const;

    std::size_t k_;
    bool point_returns_;
    std::set<std::size_t> queried_;
    std::size_t designated_;
};

/// Closed-interval anomaly: n copies of [1,3]; every distinct index but the
/// last one queried returns 2, the last returns 1.
class CpAnomalyAdversary final : public Adversary {
public:
    explicit CpAnomalyAdversary(std::size_t n);

    [[nodiscard]] std::string name() const override { return "cp-anomaly"; }
    Area respond(std::size_t index, std::size_t count, const Area& current) override;
    [[nodiscard]] std::unique_ptr<Oracle> clone() const override;
    [[nodiscard]] std::unique_ptr<Oracle> opt_facing() const override;
    [[nodiscard]] std::size_t fixture_opt() const override { return 1; }

    [[nodiscard]] std::size_t designated() const noexcept { return designated_; }

private:
    std::size_t n_;
    std::set<std::size_t> queried_;
    std::size_t designated_;
};

/// Two intervals I1 = (2,20), I2 = (19,21): the i-th query on I1 returns
/// (19 - 1/(i+1), 20), any query on I2 returns (41/2, 21).
std::unique_ptr<Oracle> opo_counterexample_oracle();

/// Strict sub-area around the centre, used when a fixture runs out of script.
Area middle_half(const Area& current, const TypeSet& returns);

// Fixture instances matching the adversaries above.
UncertainInstance min_tight_instance(std::size_t n, bool a0_last = false);
UncertainInstance kmin_point_instance(std::size_t k, bool point_returns = true);
UncertainInstance cp_anomaly_instance(std::size_t n, TieRule tie = TieRule::Stable);
UncertainInstance opo_counterexample_instance();

}  // namespace ivq
