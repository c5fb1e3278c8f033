#ifndef LEIBNIZ_DSL_TRANSFER_HPP
#define LEIBNIZ_DSL_TRANSFER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <leibniz/dsl/canonical.hpp>
#include <leibniz/dsl/evaluate.hpp>
#include <leibniz/dsl/expr.hpp>

namespace leibniz::dsl
{

enum class SampleStatus { agree, disagree, inconclusive };

const char *sample_status_name(SampleStatus s);

struct TransferSample {
    std::size_t index = 0;
    Bindings point;
    SampleStatus status = SampleStatus::inconclusive;
    // Absent when the sample was inconclusive.
    std::optional<LcNumber> lhs;
    std::optional<LcNumber> rhs;
};

struct TransferReport {
    // Canonical-form verdict: the two sides are the same rational function.
    bool identity = false;
    std::string lhs_form;
    std::string rhs_form;
    // Rational-valued coordinates.
    std::vector<TransferSample> finite_samples;
    // Coordinates drawn from every stratum; at least one coordinate per
    // point is infinitesimal or infinite whenever there are variables.
    std::vector<TransferSample> infinite_samples;
    // A rational point at which the two sides differ.
    std::optional<TransferSample> counterexample;
    std::uint64_t seed = 0;

    std::size_t count(SampleStatus status) const;
    // Identity, and no sample disagrees.
    bool holds() const;
};

// Canonical comparison plus sampled evaluation of both sides at rational
// and at inassignable points. Sample points where a divisor vanishes are
// redrawn up to 100 times before being marked inconclusive. Deterministic
// given the seed. Throws NonRationalNode if either side has Sqrt or St.
TransferReport identities_transfer_check(const Expr &lhs, const Expr &rhs, std::size_t trials,
                                         std::uint64_t seed = 0, int precision = default_precision);

} // namespace leibniz::dsl

#endif
