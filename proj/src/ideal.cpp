#include "dioph/ideal.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

#include "dioph/errors.hpp"

namespace dioph {

Ideal::Ideal(std::size_t num_vars, std::vector<HomPoly> generators)
    : num_vars_(num_vars), generators_(std::move(generators)) {
    for (const auto& g : generators_)
        if (g.num_vars() != num_vars_)
            throw DimensionMismatch("generator " + g.to_string() + " is not in " + std::to_string(num_vars_) +
                                    " variables");
}

Ideal Ideal::plus(const std::vector<HomPoly>& extra) const {
    std::vector<HomPoly> gens = generators_;
    gens.insert(gens.end(), extra.begin(), extra.end());
    return Ideal(num_vars_, std::move(gens));
}

GroebnerBasis::GroebnerBasis(std::size_t num_vars, std::vector<Polynomial> basis)
    : num_vars_(num_vars), basis_(std::move(basis)) {}

std::vector<Exponent> GroebnerBasis::leading_monomials() const {
    std::vector<Exponent> out;
    out.reserve(basis_.size());
    for (const auto& g : basis_) out.push_back(g.leading().exponent);
    return out;
}

bool GroebnerBasis::is_unit() const {
    return basis_.size() == 1 && total_degree(basis_.front().leading().exponent) == 0;
}

namespace {

Exponent quotient(const Exponent& num, const Exponent& den) {
    Exponent q(num.size());
    for (std::size_t i = 0; i < num.size(); ++i) q[i] = num[i] - den[i];
    return q;
}

Polynomial monic(const Polynomial& p) { return p.scaled(Rational(1) / p.leading().coeff); }

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis) {
    std::vector<Term> remainder;
    Polynomial p = f;
    while (!p.is_zero()) {
        const Term& lt = p.leading();
        const Polynomial* divisor = nullptr;
        for (const auto& g : basis) {
            if (divides(g.leading().exponent, lt.exponent)) {
                divisor = &g;
                break;
            }
        }
        if (divisor) {
            const Term& glt = divisor->leading();
            p = p - divisor->times_term(quotient(lt.exponent, glt.exponent), lt.coeff / glt.coeff);
        } else {
            remainder.push_back(lt);
            p = p.tail();
        }
    }
    return Polynomial(f.num_vars(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Exponent l = lcm(f.leading().exponent, g.leading().exponent);
    return f.times_term(quotient(l, f.leading().exponent), Rational(1) / f.leading().coeff) -
           g.times_term(quotient(l, g.leading().exponent), Rational(1) / g.leading().coeff);
}

bool coprime(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

}  // namespace

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
    if (f.num_vars() != num_vars_)
        throw DimensionMismatch("polynomial in " + std::to_string(f.num_vars()) + " variables reduced by a basis in " +
                                std::to_string(num_vars_));
    return reduce(f, basis_);
}

GroebnerBasis groebner(std::size_t num_vars, const std::vector<Polynomial>& generators, const GroebnerLimits& limits) {
    std::vector<Polynomial> g;
    for (const auto& p : generators) {
        if (p.num_vars() != num_vars) throw DimensionMismatch("generator in the wrong ring");
        if (!p.is_zero()) g.push_back(monic(p));
    }

    using Pair = std::pair<std::size_t, std::size_t>;
    std::set<Pair> pending;
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

    auto pair_lcm = [&](const Pair& p) { return lcm(g[p.first].leading().exponent, g[p.second].leading().exponent); };
    auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

    std::size_t processed = 0;
    while (!pending.empty()) {
        // Normal selection: smallest lcm, ties by insertion index.
        auto best = pending.begin();
        Exponent best_lcm = pair_lcm(*best);
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Exponent l = pair_lcm(*it);
            if (grevlex_greater(best_lcm, l)) {
                best = it;
                best_lcm = std::move(l);
            }
        }
        const Pair pr = *best;
        pending.erase(best);
        if (++processed > limits.max_pairs)
            throw ResourceLimit("Groebner basis exceeded " + std::to_string(limits.max_pairs) + " S-pairs");

        const Exponent& li = g[pr.first].leading().exponent;
        const Exponent& lj = g[pr.second].leading().exponent;
        if (coprime(li, lj)) continue;
        bool chain = false;
        for (std::size_t k = 0; k < g.size() && !chain; ++k) {
            if (k == pr.first || k == pr.second) continue;
            if (divides(g[k].leading().exponent, best_lcm) && !is_pending(pr.first, k) && !is_pending(pr.second, k))
                chain = true;
        }
        if (chain) continue;
        if (total_degree(best_lcm) > limits.max_degree)
            throw ResourceLimit("Groebner basis exceeded degree cap " + std::to_string(limits.max_degree));

        Polynomial h = reduce(s_polynomial(g[pr.first], g[pr.second]), g);
        if (h.is_zero()) continue;
        g.push_back(monic(h));
        const std::size_t n = g.size() - 1;
        for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
    }

    // Minimalize, then interreduce.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            const Exponent& a = g[j].leading().exponent;
            const Exponent& b = g[i].leading().exponent;
            if (divides(a, b) && (a != b || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        const Polynomial& p = minimal[i];
        // The leading term is irreducible by the others; reduce only the tail.
        Polynomial tail = reduce(p.tail(), others);
        reduced.push_back(Polynomial(num_vars, {p.leading()}) + tail);
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
        return grevlex_greater(a.leading().exponent, b.leading().exponent);
    });
    return GroebnerBasis(num_vars, std::move(reduced));
}

GroebnerBasis groebner(const Ideal& ideal, const GroebnerLimits& limits) {
    std::vector<Polynomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& q : ideal.generators()) gens.push_back(q.poly());
    return groebner(ideal.num_vars(), gens, limits);
}

bool member(const Polynomial& f, const GroebnerBasis& g) { return g.normal_form(f).is_zero(); }
bool member(const HomPoly& f, const GroebnerBasis& g) { return member(f.poly(), g); }

bool radical_member(const HomPoly& f, const Ideal& ideal, const GroebnerLimits& limits) {
    if (f.num_vars() != ideal.num_vars()) throw DimensionMismatch("radical membership across different rings");
    const std::size_t n = ideal.num_vars();
    std::vector<Polynomial> gens;
    for (const auto& q : ideal.generators()) gens.push_back(q.poly().extended(1));
    // 1 - y f
    gens.push_back(Polynomial::constant(n + 1, 1) - Polynomial::variable(n + 1, n) * f.poly().extended(1));
    return groebner(n + 1, gens, limits).is_unit();
}

ProjDim proj_dim(const GroebnerBasis& g) {
    const std::size_t n = g.num_vars();
    const auto lms = g.leading_monomials();
    if (lms.empty()) return {static_cast<int>(n) - 1};
    // Largest set S of variables such that no leading monomial is supported inside S.
    int krull = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const int size = __builtin_popcountll(mask);
        if (size <= krull) continue;
        bool independent = true;
        for (const auto& e : lms) {
            bool inside = true;
            for (std::size_t i = 0; i < n && inside; ++i)
                if (e[i] != 0 && !(mask >> i & 1)) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) krull = size;
    }
    return {std::max(krull - 1, -1)};
}

ProjDim proj_dim(const Ideal& ideal, const GroebnerLimits& limits) { return proj_dim(groebner(ideal, limits)); }

int Codim::value() const {
    if (!value_) throw PreconditionViolated("codimension of the empty set is infinite");
    return *value_;
}

Codim codim_between(const GroebnerBasis& variety, const GroebnerBasis& intersection) {
    const ProjDim w = proj_dim(intersection);
    if (w.empty()) return Codim::infinite();
    return Codim::finite(proj_dim(variety).value - w.value);
}

Codim codim_in(const Ideal& variety, const std::vector<HomPoly>& extra, const GroebnerLimits& limits) {
    return codim_between(groebner(variety, limits), groebner(variety.plus(extra), limits));
}

Integer hilbert_function(const GroebnerBasis& g, unsigned n) {
    const auto lms = g.leading_monomials();
    const std::size_t nv = g.num_vars();
    Integer count = 0;
    Exponent e(nv, 0);
    std::function<void(std::size_t, unsigned)> walk = [&](std::size_t var, unsigned left) {
        if (var + 1 == nv) {
            e[var] = left;
            for (const auto& lm : lms)
                if (divides(lm, e)) return;
            ++count;
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[var] = k;
            walk(var + 1, left - k);
        }
        e[var] = 0;
    };
    if (nv > 0) walk(0, n);
    return count;
}

Integer hilbert_function(const Ideal& variety, unsigned n, const GroebnerLimits& limits) {
    return hilbert_function(groebner(variety, limits), n);
}

Integer degree_of_variety(const Ideal& variety, const GroebnerLimits& limits) {
    const GroebnerBasis g = groebner(variety, limits);
    const ProjDim dim = proj_dim(g);
    if (dim.empty()) throw EmptyScheme("degree of an empty projective scheme");
    unsigned reg = 1;
    for (const auto& q : variety.generators()) reg += q.degree();
    const unsigned n = static_cast<unsigned>(dim.value);
    // n-th forward difference of H at reg.
    Integer delta = 0;
    for (unsigned k = 0; k <= n; ++k) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, k);
        const Integer term = binom * hilbert_function(g, reg + k);
        if ((n - k) % 2 == 0)
            delta += term;
        else
            delta -= term;
    }
    return delta;
}

}  // namespace dioph
