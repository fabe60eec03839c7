#include "lo/boxes.hpp"

#include <utility>

namespace lo {

Behavior pr_box()
{
    const Scenario sc(2, 2, 2);
    std::vector<Rational> table(sc.event_count(), Rational(0));
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    if ((a ^ b) == (x & y)) {
                        const Event e{{std::uint8_t(a), std::uint8_t(b)},
                                      {std::uint8_t(x), std::uint8_t(y)}};
                        table[event_index(sc, e)] = Rational(1, 2);
                    }
    return Behavior(sc, std::move(table));
}

namespace {

Behavior mix(const std::vector<std::pair<Rational, const Behavior*>>& parts)
{
    const Scenario& sc = parts.front().second->scenario();
    std::vector<Rational> table(sc.event_count(), Rational(0));
    for (std::uint64_t idx = 0; idx < sc.event_count(); ++idx)
        for (const auto& [weight, b] : parts)
            if (weight != 0)
                table[idx] += weight * b->at(idx);
    return Behavior(sc, std::move(table));
}

} // namespace

Behavior noisy_pr(const Rational& q)
{
    if (q < 0 || q > 1)
        throw InvalidParameter("noise parameter must lie in [0,1]: " + to_string(q));
    const Behavior pr = pr_box();
    const Behavior id = uniform_box(pr.scenario());
    return mix({{q, &pr}, {Rational(1) - q, &id}});
}

Behavior deterministic_box(const Scenario& sc,
                           const std::vector<std::vector<std::uint8_t>>& strategy)
{
    if (strategy.size() != std::size_t(sc.parties()))
        throw InvalidParameter("strategy must cover every party");
    for (const auto& g : strategy) {
        if (g.size() != std::size_t(sc.settings()))
            throw InvalidParameter("strategy must cover every setting");
        for (const auto a : g)
            if (a >= sc.outcomes())
                throw InvalidParameter("strategy outcome out of range");
    }
    std::vector<Rational> table(sc.event_count(), Rational(0));
    const auto settings_total = sc.joint_setting_count();
    for (std::uint64_t block = 0; block < settings_total; ++block) {
        Event e;
        e.settings.resize(sc.parties());
        e.outcomes.resize(sc.parties());
        std::uint64_t rest = block;
        for (int i = sc.parties() - 1; i >= 0; --i) {
            e.settings[i] = std::uint8_t(rest % sc.settings());
            rest /= sc.settings();
        }
        for (int i = 0; i < sc.parties(); ++i)
            e.outcomes[i] = strategy[i][e.settings[i]];
        table[event_index(sc, e)] = 1;
    }
    return Behavior(sc, std::move(table));
}

Behavior pr_local_noise_mixture(const Rational& xi, const Rational& gamma)
{
    if (xi < 0 || gamma < 0 || xi + gamma > 1)
        throw InvalidParameter("mixture weights must be nonnegative with xi + gamma <= 1");
    const Behavior pr = pr_box();
    const Behavior zeros = deterministic_box(pr.scenario(), {{0, 0}, {0, 0}});
    const Behavior id = uniform_box(pr.scenario());
    return mix({{xi, &pr}, {gamma, &zeros}, {Rational(1) - xi - gamma, &id}});
}

Behavior tensor_product(const std::vector<Behavior>& factors)
{
    if (factors.empty())
        throw InvalidParameter("tensor product needs at least one factor");
    const int m = factors.front().scenario().settings();
    const int d = factors.front().scenario().outcomes();
    int parties = 0;
    for (const auto& f : factors) {
        if (f.scenario().settings() != m || f.scenario().outcomes() != d)
            throw ScenarioMismatch("tensor factors must share m and d");
        parties += f.scenario().parties();
    }
    const Scenario product(parties, m, d); // rejects an oversized event space

    // factor-major party order makes each factor a contiguous digit slice,
    // so the product index decomposes by successive division
    std::vector<std::uint64_t> factor_sizes;
    for (const auto& f : factors)
        factor_sizes.push_back(f.scenario().event_count());

    std::vector<Rational> table(product.event_count());
    for (std::uint64_t idx = 0; idx < product.event_count(); ++idx) {
        Rational p(1);
        std::uint64_t rest = idx;
        for (std::size_t k = factors.size(); k-- > 0;) {
            const std::uint64_t local = rest % factor_sizes[k];
            rest /= factor_sizes[k];
            p *= factors[k].at(local);
            if (p == 0)
                break;
        }
        table[idx] = std::move(p);
    }
    return Behavior(product, std::move(table));
}

Behavior tensor_power(const Behavior& b, int copies)
{
    if (copies < 1)
        throw InvalidParameter("tensor power needs at least one copy");
    return tensor_product(std::vector<Behavior>(std::size_t(copies), b));
}

BehaviorFamily noisy_pr_family()
{
    return [](const Rational& q) { return noisy_pr(q); };
}

BehaviorFamily constant_family(Behavior b)
{
    return [b = std::move(b)](const Rational&) { return b; };
}

ThresholdInterval lo_threshold(const BehaviorFamily& family,
                               const LOInequality& ineq,
                               int copies,
                               const Rational& width)
{
    if (width <= 0)
        throw InvalidParameter("bracket width must be positive");
    const auto lhs = [&](const Rational& q) {
        return evaluate(ineq, tensor_power(family(q), copies));
    };

    if (lhs(1) <= 1)
        throw NoViolationInRange("inequality is not violated anywhere in (0,1]");
    Rational lo(0);
    Rational hi(1);
    if (lhs(lo) > 1)
        return {lo, lo}; // violated already at q = 0
    while (hi - lo > width) {
        const Rational mid = (lo + hi) / 2;
        if (lhs(mid) > 1)
            hi = mid;
        else
            lo = mid;
    }
    return {std::move(lo), std::move(hi)};
}

} // namespace lo
