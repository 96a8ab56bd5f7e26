#include <graphbounds/exact.hpp>

#include <graphbounds/errors.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <stdexcept>

namespace graphbounds
{
    auto make_rational(const BigInt & numerator, const BigInt & denominator) -> Rational
    {
        if (denominator == 0)
            throw DomainError("rational with zero denominator");
        Rational result(numerator, denominator);
        result.canonicalize();
        return result;
    }

    auto binom(long long a, long long b) -> BigInt
    {
        if (a < 0 || b < 0 || b > a)
            return 0;

        long long k = std::min(b, a - b);
        BigInt result = 1;
        for (long long i = 1; i <= k; ++i) {
            result *= static_cast<unsigned long>(a - k + i);
            mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
        }
        return result;
    }

    auto floor_rat(const Rational & x) -> BigInt
    {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
        return q;
    }

    auto ceil_rat(const Rational & x) -> BigInt
    {
        BigInt q;
        mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
        return q;
    }

    auto to_string(const Rational & x) -> std::string
    {
        if (x.get_den() == 1)
            return x.get_num().get_str();
        return x.get_num().get_str() + "/" + x.get_den().get_str();
    }

    auto to_decimal(const Rational & x, int significant) -> std::string
    {
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "%.*g", significant, x.get_d());
        return buffer;
    }

    auto binom_ratio(std::uint64_t total, std::uint64_t s, std::uint64_t k) -> Rational
    {
        if (s > total)
            throw DomainError("binom_ratio: s exceeds total");
        if (s < k)
            return 0;

        BigInt num = 1, den = 1;
        std::uint64_t deficit = total - s;
        if (deficit <= k) {
            // (total-k)_deficit / (total)_deficit
            for (std::uint64_t i = 0; i < deficit; ++i) {
                num *= static_cast<unsigned long>(total - k - i);
                den *= static_cast<unsigned long>(total - i);
            }
        }
        else {
            // (s)_k / (total)_k
            for (std::uint64_t i = 0; i < k; ++i) {
                num *= static_cast<unsigned long>(s - i);
                den *= static_cast<unsigned long>(total - i);
            }
        }
        return make_rational(num, den);
    }

    RatioTable::RatioTable(std::uint64_t n, std::uint64_t t) :
        _n(n),
        _t(t)
    {
        if (t > n)
            throw DomainError("ratio_table: t > n");
        std::vector<std::uint64_t> all;
        all.reserve(n - t + 1);
        for (std::uint64_t s = t; s <= n; ++s)
            all.push_back(s);
        build(std::move(all));
    }

    RatioTable::RatioTable(std::uint64_t n, std::uint64_t t, const std::vector<std::uint64_t> & support) :
        _n(n),
        _t(t)
    {
        if (t > n)
            throw DomainError("ratio_table: t > n");
        std::vector<std::uint64_t> wanted;
        for (auto s : support) {
            if (s > n)
                throw DomainError("ratio_table: support value exceeds n");
            if (s >= t)
                wanted.push_back(s);
        }
        build(std::move(wanted));
    }

    auto RatioTable::build(std::vector<std::uint64_t> wanted) -> void
    {
        std::sort(wanted.begin(), wanted.end(), std::greater<>());
        wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

        _s = std::move(wanted);
        _num.reserve(_s.size());
        _den.reserve(_s.size());

        // Depth D = n - s <= t: num/den = (n-t)_D / (n)_D.
        // Deeper: den stays (n)_t and num = (s)_t, shrunk by exact division.
        BigInt num = 1, den = 1;
        std::uint64_t s = _n;
        for (auto target : _s) {
            for ( ; s > target ; --s) {
                // r[s-1] = r[s] * (s-t) / s
                num *= static_cast<unsigned long>(s - _t);
                if (_n - s < _t)
                    den *= static_cast<unsigned long>(s);
                else
                    mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(s));
            }
            _num.push_back(num);
            _den.push_back(den);
        }
    }

    auto RatioTable::find(std::uint64_t s) const -> std::size_t
    {
        auto it = std::lower_bound(_s.begin(), _s.end(), s, std::greater<>());
        if (it == _s.end() || *it != s)
            throw std::out_of_range("ratio_table: entry " + std::to_string(s) + " not materialised");
        return static_cast<std::size_t>(it - _s.begin());
    }

    auto RatioTable::operator[](std::uint64_t s) const -> Rational
    {
        if (s > _n)
            throw std::out_of_range("ratio_table: s > n");
        if (s < _t)
            return 0;
        auto i = find(s);
        return make_rational(_num[i], _den[i]);
    }

    auto RatioTable::weighted_sum(const Histogram & histogram) const -> Rational
    {
        // Every stored denominator divides the one at the smallest used s.
        std::size_t deepest = 0;
        bool any = false;
        std::vector<std::pair<std::size_t, std::uint64_t>> used;
        for (auto & [s, count] : histogram) {
            if (s < _t || count == 0)
                continue;
            if (s > _n)
                throw std::out_of_range("ratio_table: s > n");
            auto i = find(s);
            used.emplace_back(i, count);
            if (! any || i > deepest)
                deepest = i;
            any = true;
        }
        if (! any)
            return 0;

        const BigInt & common = _den[deepest];
        BigInt total = 0, scale;
        for (auto & [i, count] : used) {
            mpz_divexact(scale.get_mpz_t(), common.get_mpz_t(), _den[i].get_mpz_t());
            scale *= _num[i];
            mpz_addmul_ui(total.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(count));
        }
        return make_rational(total, common);
    }
}
