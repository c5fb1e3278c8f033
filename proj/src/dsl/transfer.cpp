#include <leibniz/dsl/transfer.hpp>

#include <algorithm>
#include <random>

#include <leibniz/error.hpp>

namespace leibniz::dsl
{

const char *sample_status_name(SampleStatus s)
{
    switch (s) {
        case SampleStatus::agree:
            return "agree";
        case SampleStatus::disagree:
            return "disagree";
        case SampleStatus::inconclusive:
            return "inconclusive";
    }
    return "?";
}

std::size_t TransferReport::count(SampleStatus status) const
{
    auto pred = [status](const TransferSample &s) { return s.status == status; };
    return static_cast<std::size_t>(std::count_if(finite_samples.begin(), finite_samples.end(), pred) +
                                    std::count_if(infinite_samples.begin(), infinite_samples.end(), pred));
}

bool TransferReport::holds() const
{
    return identity && count(SampleStatus::disagree) == 0;
}

namespace
{

constexpr int max_redraws = 100;

class Sampler
{
public:
    Sampler(std::uint64_t seed, int precision) : m_rng(seed), m_precision(precision) {}

    Rational small_rational(int magnitude, int max_den)
    {
        std::uniform_int_distribution<int> num(-magnitude, magnitude);
        std::uniform_int_distribution<int> den(1, max_den);
        return Rational(num(m_rng), den(m_rng));
    }

    Rational nonzero_rational()
    {
        Rational q;
        do {
            q = small_rational(5, 4);
        } while (q.is_zero());
        return q;
    }

    LcNumber real(int magnitude = 6, int max_den = 4)
    {
        return make_real(small_rational(magnitude, max_den), m_precision);
    }

    // One of: q, q*eps, q*H, q + q'*eps.
    LcNumber stratified(bool inassignable_only)
    {
        std::uniform_int_distribution<int> pick(inassignable_only ? 1 : 0, 3);
        switch (pick(m_rng)) {
            case 0:
                return real();
            case 1:
                return make_monomial(nonzero_rational(), Rational(1), m_precision);
            case 2:
                return make_monomial(nonzero_rational(), Rational(-1), m_precision);
            default:
                return make_real(small_rational(5, 4), m_precision) +
                       make_monomial(nonzero_rational(), Rational(1), m_precision);
        }
    }

    Bindings finite_point(const std::vector<std::string> &vars, int magnitude = 6, int max_den = 4)
    {
        Bindings point;
        for (const auto &v : vars) {
            point.insert_or_assign(v, real(magnitude, max_den));
        }
        return point;
    }

    Bindings inassignable_point(const std::vector<std::string> &vars)
    {
        Bindings point;
        bool any = false;
        for (const auto &v : vars) {
            LcNumber x = stratified(false);
            const auto c = classify(x);
            any = any || c == Classification::infinitesimal || c == Classification::infinite ||
                  !x.coefficient(Rational(1)).is_zero();
            point.insert_or_assign(v, std::move(x));
        }
        if (!any && !vars.empty()) {
            std::uniform_int_distribution<std::size_t> which(0, vars.size() - 1);
            point.insert_or_assign(vars[which(m_rng)], stratified(true));
        }
        return point;
    }

private:
    std::mt19937_64 m_rng;
    int m_precision;
};

// nullopt when a divisor vanished at the point.
std::optional<TransferSample> try_point(const Expr &lhs, const Expr &rhs, Bindings point, std::size_t index,
                                        int precision)
{
    TransferSample s;
    s.index = index;
    try {
        s.lhs = evaluate(lhs, point, precision);
        s.rhs = evaluate(rhs, point, precision);
    } catch (const Error &err) {
        if (err.kind() == ErrorKind::DivisionByZero) {
            return std::nullopt;
        }
        throw;
    }
    s.status = agrees(*s.lhs, *s.rhs) ? SampleStatus::agree : SampleStatus::disagree;
    s.point = std::move(point);
    return s;
}

template <typename Draw>
TransferSample sample(const Expr &lhs, const Expr &rhs, std::size_t index, int precision, Draw &&draw)
{
    Bindings last;
    for (int attempt = 0; attempt <= max_redraws; ++attempt) {
        last = draw();
        if (auto s = try_point(lhs, rhs, last, index, precision)) {
            return *s;
        }
    }
    TransferSample s;
    s.index = index;
    s.point = std::move(last);
    s.status = SampleStatus::inconclusive;
    return s;
}

} // namespace

TransferReport identities_transfer_check(const Expr &lhs, const Expr &rhs, std::size_t trials, std::uint64_t seed,
                                         int precision)
{
    for (const Expr *e : {&lhs, &rhs}) {
        if (!is_rational_expression(*e)) {
            throw Error(ErrorKind::NonRationalNode, "identity transfer needs sqrt- and st-free expressions",
                        e->position());
        }
    }
    TransferReport report;
    report.seed = seed;

    const auto vars = common_variables({lhs, rhs});
    const RationalForm left = canonicalize(lhs, vars);
    const RationalForm right = canonicalize(rhs, vars);
    report.identity = left == right;
    report.lhs_form = left.str();
    report.rhs_form = right.str();

    std::vector<std::string> free;
    for (const auto &v : vars) {
        if (v != "H") {
            free.push_back(v);
        }
    }

    Sampler sampler(seed, precision);
    for (std::size_t i = 0; i < trials; ++i) {
        report.finite_samples.push_back(
            sample(lhs, rhs, i, precision, [&] { return sampler.finite_point(free); }));
    }
    for (std::size_t i = 0; i < trials; ++i) {
        report.infinite_samples.push_back(
            sample(lhs, rhs, i, precision, [&] { return sampler.inassignable_point(free); }));
    }

    if (!report.identity) {
        for (const auto &s : report.finite_samples) {
            if (s.status == SampleStatus::disagree) {
                report.counterexample = s;
                break;
            }
        }
        // Bounded widening search; distinct rational functions differ off a
        // proper algebraic subset, so this only fails on pathological input.
        for (std::size_t k = 0; !report.counterexample && k < 1000; ++k) {
            const int magnitude = 6 + static_cast<int>(k / 10);
            const int max_den = 4 + static_cast<int>(k / 100);
            auto s = try_point(lhs, rhs, sampler.finite_point(free, magnitude, max_den), trials + k, precision);
            if (s && s->status == SampleStatus::disagree) {
                report.counterexample = std::move(s);
            }
        }
    }
    return report;
}

} // namespace leibniz::dsl
