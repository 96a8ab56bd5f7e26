#include <graphbounds/verify.hpp>

#include <graphbounds/errors.hpp>

namespace graphbounds
{
    auto BoundFunctions::library() -> BoundFunctions
    {
        BoundFunctions f;
        f.dom_terms = [] (const Graph & g, std::uint64_t t) { return graphbounds::dom_terms(g, t); };
        f.ind_terms = [] (const Graph & g, std::uint64_t t) { return graphbounds::ind_terms(g, t); };
        f.bip_terms = [] (const Graph & g, const Bipartition & bip, std::uint64_t a, std::uint64_t b) {
            return graphbounds::bip_terms(g, bip, a, b);
        };
        f.evaluate = [] (const Graph & g, const EvaluateOptions & opts) { return evaluate_graph(g, opts); };
        return f;
    }

    auto VerifyFailure::describe() const -> std::string
    {
        return "FAIL " + what + " on " + graph6 + " at " + where + ": expected " + expected + ", got " + got;
    }

    namespace
    {
        struct Checker
        {
            const Graph & g;
            VerifySummary & summary;
            std::string graph6 = encode_graph6(g);

            auto equal(const Rational & expected, const Rational & got, const std::string & what,
                    const std::string & where) -> bool
            {
                ++summary.checks;
                if (expected == got)
                    return true;
                summary.failure = VerifyFailure{ graph6, where, what, to_string(expected), to_string(got) };
                return false;
            }

            auto holds(bool ok, const std::string & what, const std::string & where, const std::string & detail) -> bool
            {
                ++summary.checks;
                if (ok)
                    return true;
                summary.failure = VerifyFailure{ graph6, where, what, "true", detail };
                return false;
            }
        };

        auto check_dom(Checker & c, const VerifyOptions & opts, const BoundFunctions & fns) -> bool
        {
            auto & g = c.g;
            for (std::uint64_t t = 1; t <= g.n() - g.min_degree(); ++t) {
                auto where = "t=" + std::to_string(t);
                auto d = exhaustive_dom_distribution(g, static_cast<unsigned>(t), opts.limits);
                auto terms = fns.dom_terms(g, t);
                Rational shift = terms.a - static_cast<unsigned long>(t);
                if (! c.equal(d.mean, terms.a, "dom mean a(G,t)", where)
                        || ! c.equal(d.variance, terms.b - shift * shift, "dom variance b-(a-t)^2", where)
                        || ! c.holds(d.satisfies_bhatia_davis(), "dom Bhatia-Davis", where, to_string(d.variance))
                        || ! c.holds(terms.c <= terms.b, "c <= b", where, to_string(terms.c)))
                    return false;
            }
            return true;
        }

        auto check_ind(Checker & c, const VerifyOptions & opts, const BoundFunctions & fns) -> bool
        {
            auto & g = c.g;
            for (std::uint64_t t = 2; t <= g.n() - g.min_degree(); ++t) {
                auto where = "t=" + std::to_string(t);
                auto d = exhaustive_ind_distribution(g, static_cast<unsigned>(t), opts.limits);
                auto terms = fns.ind_terms(g, t);
                auto total = binom(g.n(), static_cast<long long>(t));
                Rational a = make_rational(terms.a_ind, total);
                Rational b = make_rational(terms.b_exact, total);
                Rational tt = static_cast<unsigned long>(t);
                Rational variance = tt - a - (tt - a) * (tt - a) + tt * (tt - 1) - b;
                if (! c.equal(d.mean, a, "ind mean a/C(n,t)", where)
                        || ! c.equal(d.variance, variance, "ind variance", where)
                        || ! c.holds(terms.b_ind >= terms.b_exact, "b_ind >= b_exact", where, terms.b_ind.get_str())
                        || ! c.holds(d.satisfies_bhatia_davis(), "ind Bhatia-Davis", where, to_string(d.variance))
                        || ! c.holds(terms.hm_value <= Rational(d.mean + d.variance / d.mean),
                                "hm_value <= E z + Var z / E z", where, to_string(terms.hm_value)))
                    return false;
            }
            return true;
        }

        auto check_bip(Checker & c, const VerifyOptions & opts, const BoundFunctions & fns) -> bool
        {
            auto & g = c.g;
            auto bip = find_bipartition(g);
            if (! bip || bip->side_a.size() < 2 || bip->side_b.size() < 2)
                return true;
            std::uint64_t na = bip->side_a.size(), nb = bip->side_b.size();
            for (std::uint64_t a = 0; a <= na; ++a)
                for (std::uint64_t b = 0; b <= nb; ++b) {
                    if (a + b == 0 || a + b == na + nb)
                        continue;
                    auto where = "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")";
                    auto d = exhaustive_bip_distribution(g, *bip, static_cast<unsigned>(a), static_cast<unsigned>(b), opts.limits);
                    auto terms = fns.bip_terms(g, *bip, a, b);
                    if (! c.equal(d.mean, terms.e, "bip mean e", where)
                            || ! c.equal(d.variance, terms.k, "bip variance k", where)
                            || ! c.holds(terms.k >= 0, "k >= 0", where, to_string(terms.k)))
                        return false;
                }
            return true;
        }

        auto check_sandwich(Checker & c, const VerifyOptions & opts, const BoundFunctions & fns) -> bool
        {
            EvaluateOptions eval;
            eval.oracle_max_n = c.g.n();
            eval.limits = opts.limits;
            try {
                auto r = fns.evaluate(c.g, eval);
                check_report(r);
                ++c.summary.checks;
            }
            catch (const InvariantViolation & e) {
                c.summary.failure = VerifyFailure{ c.graph6, "sandwich", "bound order", "no violation", e.what() };
                return false;
            }
            return true;
        }
    }

    auto verify_graph(const Graph & g, const VerifyOptions & opts, const BoundFunctions & fns) -> VerifySummary
    {
        require_gamma_class(g);
        VerifySummary summary;
        summary.graphs = 1;
        Checker c{ g, summary };
        try {
            (void) ((! opts.dom || check_dom(c, opts, fns))
                    && (! opts.ind || check_ind(c, opts, fns))
                    && (! opts.bip || check_bip(c, opts, fns))
                    && (! opts.sandwich || check_sandwich(c, opts, fns)));
        }
        catch (const InvariantViolation & e) {
            summary.failure = VerifyFailure{ c.graph6, "evaluation", "invariant", "no violation", e.what() };
        }
        return summary;
    }

    auto verify_corpus(const std::vector<Graph> & graphs, const VerifyOptions & opts, const BoundFunctions & fns)
        -> VerifySummary
    {
        VerifySummary total;
        for (auto & g : graphs) {
            auto s = verify_graph(g, opts, fns);
            total.graphs += s.graphs;
            total.checks += s.checks;
            if (s.failure) {
                total.failure = s.failure;
                break;
            }
        }
        return total;
    }
}
