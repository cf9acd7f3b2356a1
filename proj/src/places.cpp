#include "dioph/places.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "dioph/errors.hpp"

namespace dioph {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Pollard-Brent; n odd composite.
u64 rho_u64(u64 n) {
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 r = 1;
        const u64 m = 128;
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_u64(u64 n, std::vector<Integer>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.emplace_back(static_cast<unsigned long>(n));
        return;
    }
    const u64 d = rho_u64(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

Integer rho_mpz(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        auto f = [&](const Integer& t) {
            Integer r = t * t + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            Integer diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

bool fits_u64(const Integer& n) { return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const Integer& n) {
    u64 r = 0;
    mpz_export(&r, nullptr, -1, sizeof(r), 0, 0, n.get_mpz_t());
    return r;
}

void factor_into(Integer n, std::vector<Integer>& out) {
    for (unsigned long p = 2; p < 1000 && n > 1; ++p) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.emplace_back(p);
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (n == 1) return;
    if (fits_u64(n)) {
        factor_u64(to_u64(n), out);
        return;
    }
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Integer d = rho_mpz(n);
    factor_into(d, out);
    factor_into(Integer(n / d), out);
}

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (fits_u64(n)) return is_prime_u64(to_u64(n));
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<Integer> prime_factors(const Integer& n) {
    if (n == 0) throw ZeroInput("prime factorization of zero");
    std::vector<Integer> out;
    factor_into(abs(n), out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

long ord_p(const Rational& x, const Integer& p) {
    if (x == 0) throw ZeroInput("valuation of zero");
    Integer scratch;
    const long up = static_cast<long>(mpz_remove(scratch.get_mpz_t(), x.get_num_mpz_t(), p.get_mpz_t()));
    const long down = static_cast<long>(mpz_remove(scratch.get_mpz_t(), x.get_den_mpz_t(), p.get_mpz_t()));
    return up - down;
}

Place Place::finite(const Integer& p) {
    if (!is_prime(p)) throw PreconditionViolated("place p:" + p.get_str() + " is not a prime");
    Place v;
    v.kind_ = Kind::Finite;
    v.prime_ = p;
    return v;
}

Place Place::parse(std::string_view text) {
    if (text == "inf") return archimedean();
    if (text.size() > 2 && text.substr(0, 2) == "p:") {
        const std::string digits(text.substr(2));
        if (digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("invalid place '" + std::string(text) + "'");
        return finite(Integer(digits, 10));
    }
    throw ParseError("invalid place '" + std::string(text) + "' (expected \"inf\" or \"p:<prime>\")");
}

std::string Place::to_string() const { return is_archimedean() ? "inf" : "p:" + prime_.get_str(); }

PlaceSet parse_place_set(const std::vector<std::string>& items) {
    PlaceSet s;
    for (const auto& item : items) s.insert(Place::parse(item));
    return s;
}

ProjPoint::ProjPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw DimensionMismatch("projective point needs at least one coordinate");
    for (auto& c : coords_) c.canonicalize();
    if (std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; }))
        throw ZeroInput("projective point with all coordinates zero");
}

std::vector<Integer> ProjPoint::primitive_coords() const {
    Integer lcm_den = 1;
    for (const auto& c : coords_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints;
    ints.reserve(coords_.size());
    Integer g = 0;
    for (const auto& c : coords_) {
        Integer z = c.get_num() * (lcm_den / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        ints.push_back(std::move(z));
    }
    auto first = std::find_if(ints.begin(), ints.end(), [](const Integer& z) { return z != 0; });
    if (*first < 0) g = -g;
    for (auto& z : ints) z /= g;
    return ints;
}

ProjPoint ProjPoint::scaled(const Rational& lambda) const {
    if (lambda == 0) throw ZeroInput("scaling a projective point by zero");
    Rational k = lambda;
    k.canonicalize();
    std::vector<Rational> c = coords_;
    for (auto& x : c) x *= k;
    return ProjPoint(std::move(c));
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
    if (a.size() != b.size()) return false;
    return a.primitive_coords() == b.primitive_coords();
}

Rational normalized_abs(const Place& v, const Rational& x) {
    if (x == 0) return 0;
    if (v.is_archimedean()) return abs(x);
    // ||x||_p = p^{-ord_p(x)}
    return pow(Rational(v.prime()), -ord_p(x, v.prime()));
}

PlaceSet support_places(const Rational& x) {
    if (x == 0) throw ZeroInput("support_places of zero");
    PlaceSet s{Place::archimedean()};
    for (const auto& p : prime_factors(Integer(x.get_num()))) s.insert(Place::finite(p));
    for (const auto& p : prime_factors(Integer(x.get_den()))) s.insert(Place::finite(p));
    return s;
}

Rational product_over_places(const Rational& x) {
    if (x == 0) throw ZeroInput("product formula for zero");
    Rational prod = 1;
    for (const auto& v : support_places(x)) prod *= normalized_abs(v, x);
    return prod;
}

Rational point_norm(const Place& v, const ProjPoint& x) {
    Rational best = 0;
    for (const auto& c : x.coords()) best = std::max(best, normalized_abs(v, c));
    return best;
}

Integer multiplicative_height(const ProjPoint& x) {
    // With coprime integer coordinates every finite place contributes 1.
    Integer best = 0;
    for (const auto& z : x.primitive_coords()) best = std::max(best, Integer(abs(z)));
    return best;
}

double height_point(const ProjPoint& x) { return log_of(multiplicative_height(x)); }

double height_scalar(const Rational& x) {
    if (x == 0) throw ZeroInput("height of zero");
    double h = 0.0;
    for (const auto& v : support_places(x)) h += log_plus(normalized_abs(v, x));
    return h;
}

}  // namespace dioph
