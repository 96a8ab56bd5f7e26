#include <graphbounds/oracle.hpp>

#include <graphbounds/errors.hpp>

#include <bit>
#include <functional>
#include <vector>

namespace graphbounds
{
    auto ExactDistribution::from_counts(std::map<long long, BigInt> counts) -> ExactDistribution
    {
        ExactDistribution d;
        d.support = std::move(counts);
        if (d.support.empty())
            throw DomainError("distribution with no outcomes");

        BigInt first = 0, second = 0;
        for (auto & [value, count] : d.support) {
            d.total += count;
            BigInt v = static_cast<long>(value);
            first += count * v;
            second += count * v * v;
        }
        d.mean = make_rational(first, d.total);
        d.variance = make_rational(second, d.total) - d.mean * d.mean;
        d.min_val = d.support.begin()->first;
        d.max_val = d.support.rbegin()->first;
        return d;
    }

    auto ExactDistribution::satisfies_bhatia_davis() const -> bool
    {
        return variance <= (mean - static_cast<long>(min_val)) * (static_cast<long>(max_val) - mean);
    }

    namespace
    {
        auto closed_masks(const Graph & g) -> std::vector<std::uint64_t>
        {
            std::vector<std::uint64_t> closed(g.n());
            for (Vertex u = 0; u < g.n(); ++u)
                closed[u] = g.mask(u) | (std::uint64_t{ 1 } << u);
            return closed;
        }

        auto check_enumeration(const BigInt & outcomes, const OracleLimits & limits) -> void
        {
            if (outcomes > limits.enumeration_limit)
                throw ResourceLimit("enumeration of " + outcomes.get_str() + " outcomes exceeds the limit of "
                        + std::to_string(limits.enumeration_limit));
        }

        auto check_sampling_size(const Graph & g, unsigned t, unsigned lowest) -> void
        {
            if (g.n() > 64)
                throw ResourceLimit("exhaustive distributions need n <= 64");
            if (t < lowest || t > g.n() - g.min_degree())
                throw DomainError("t = " + std::to_string(t) + " outside [" + std::to_string(lowest)
                        + ", n - δ] for the exhaustive distribution");
        }
    }

    auto exact_gamma(const Graph & g, const OracleLimits & limits) -> unsigned
    {
        if (g.n() > limits.gamma_max_n || g.n() > 64)
            throw ResourceLimit("exact γ refused: n = " + std::to_string(g.n()) + " exceeds "
                    + std::to_string(limits.gamma_max_n));
        if (g.n() == 0)
            return 0;

        auto closed = closed_masks(g);
        std::uint64_t all = (g.n() == 64) ? ~std::uint64_t{ 0 } : ((std::uint64_t{ 1 } << g.n()) - 1);
        unsigned max_cover = 0;
        for (auto m : closed)
            max_cover = std::max(max_cover, static_cast<unsigned>(std::popcount(m)));

        // greedy upper bound
        unsigned upper = 0;
        for (std::uint64_t uncovered = all; uncovered; ++upper) {
            std::uint64_t best = 0;
            for (auto m : closed)
                if (std::popcount(m & uncovered) > std::popcount(best & uncovered))
                    best = m;
            uncovered &= ~best;
        }

        std::function<bool (std::uint64_t, unsigned)> search = [&] (std::uint64_t uncovered, unsigned budget) -> bool {
            if (uncovered == 0)
                return true;
            if (budget == 0 || static_cast<unsigned>(std::popcount(uncovered)) > budget * max_cover)
                return false;
            auto v = static_cast<unsigned>(std::countr_zero(uncovered));
            for (std::uint64_t choices = closed[v]; choices; choices &= choices - 1) {
                auto w = std::countr_zero(choices);
                if (search(uncovered & ~closed[w], budget - 1))
                    return true;
            }
            return false;
        };

        for (unsigned k = 1; k < upper; ++k)
            if (search(all, k))
                return k;
        return upper;
    }

    auto exact_alpha(const Graph & g, const OracleLimits & limits) -> unsigned
    {
        if (g.n() > limits.alpha_max_n || g.n() > 64)
            throw ResourceLimit("exact α refused: n = " + std::to_string(g.n()) + " exceeds "
                    + std::to_string(limits.alpha_max_n));

        std::vector<std::uint64_t> open(g.n());
        for (Vertex u = 0; u < g.n(); ++u)
            open[u] = g.mask(u);

        unsigned best = 0;
        std::function<void (std::uint64_t, unsigned)> branch = [&] (std::uint64_t candidates, unsigned size) {
            if (size + static_cast<unsigned>(std::popcount(candidates)) <= best)
                return;

            int pick = -1, pick_degree = -1;
            for (std::uint64_t rest = candidates; rest; rest &= rest - 1) {
                auto v = std::countr_zero(rest);
                int degree = std::popcount(open[v] & candidates);
                if (degree > pick_degree) {
                    pick = v;
                    pick_degree = degree;
                }
            }
            if (pick_degree <= 0) {
                best = std::max(best, size + static_cast<unsigned>(std::popcount(candidates)));
                return;
            }

            std::uint64_t bit = std::uint64_t{ 1 } << pick;
            branch(candidates & ~open[pick] & ~bit, size + 1);
            branch(candidates & ~bit, size);
        };

        std::uint64_t all = (g.n() == 64) ? ~std::uint64_t{ 0 } : ((std::uint64_t{ 1 } << g.n()) - 1);
        branch(all, 0);
        return best;
    }

    auto exhaustive_dom_distribution(const Graph & g, unsigned t, const OracleLimits & limits) -> ExactDistribution
    {
        check_sampling_size(g, t, 1);
        check_enumeration(binom(g.n(), t), limits);

        auto closed = closed_masks(g);
        std::vector<std::uint64_t> counts(g.n() + 1, 0);
        for_each_subset(g.n(), t, [&] (std::uint64_t x) {
            unsigned undominated = 0;
            for (Vertex u = 0; u < g.n(); ++u)
                if ((closed[u] & x) == 0)
                    ++undominated;
            ++counts[t + undominated];
        });

        std::map<long long, BigInt> support;
        for (std::size_t z = 0; z < counts.size(); ++z)
            if (counts[z])
                support[static_cast<long long>(z)] = counts[z];
        return ExactDistribution::from_counts(std::move(support));
    }

    auto exhaustive_bip_distribution(const Graph & g, const Bipartition & bip, unsigned a, unsigned b,
            const OracleLimits & limits) -> ExactDistribution
    {
        if (g.n() > 64)
            throw ResourceLimit("exhaustive distributions need n <= 64");
        validate_bipartition(g, bip);
        auto na = static_cast<unsigned>(bip.side_a.size()), nb = static_cast<unsigned>(bip.side_b.size());
        if (a > na || b > nb)
            throw DomainError("(a,b) exceeds the side sizes");
        check_enumeration(binom(na, a) * binom(nb, b), limits);

        auto spread = [] (std::uint64_t positions, const std::vector<Vertex> & side) {
            std::uint64_t vertices = 0;
            for ( ; positions; positions &= positions - 1)
                vertices |= std::uint64_t{ 1 } << side[std::countr_zero(positions)];
            return vertices;
        };

        std::vector<std::uint64_t> subsets_b;
        for_each_subset(nb, b, [&] (std::uint64_t p) { subsets_b.push_back(spread(p, bip.side_b)); });

        std::map<long long, BigInt> counts;
        std::vector<std::uint64_t> tally(g.n() + 1, 0);
        for_each_subset(na, a, [&] (std::uint64_t pa) {
            auto xa = spread(pa, bip.side_a);
            for (auto xb : subsets_b) {
                unsigned z = a + b;
                for (auto u : bip.side_a)
                    if (! ((xa >> u) & 1) && (g.mask(u) & xb) == 0)
                        ++z;
                for (auto v : bip.side_b)
                    if (! ((xb >> v) & 1) && (g.mask(v) & xa) == 0)
                        ++z;
                ++tally[z];
            }
        });
        for (std::size_t z = 0; z < tally.size(); ++z)
            if (tally[z])
                counts[static_cast<long long>(z)] = tally[z];
        return ExactDistribution::from_counts(std::move(counts));
    }

    auto exhaustive_ind_distribution(const Graph & g, unsigned t, const OracleLimits & limits) -> ExactDistribution
    {
        check_sampling_size(g, t, 2);
        check_enumeration(binom(g.n(), t), limits);

        std::vector<std::uint64_t> counts(g.n() + 1, 0);
        for_each_subset(g.n(), t, [&] (std::uint64_t x) {
            unsigned conflicted = 0;
            for (std::uint64_t rest = x; rest; rest &= rest - 1)
                if (g.mask(static_cast<Vertex>(std::countr_zero(rest))) & x)
                    ++conflicted;
            ++counts[t - conflicted];
        });

        std::map<long long, BigInt> support;
        for (std::size_t z = 0; z < counts.size(); ++z)
            if (counts[z])
                support[static_cast<long long>(z)] = counts[z];
        return ExactDistribution::from_counts(std::move(support));
    }
}
