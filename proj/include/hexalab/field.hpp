#ifndef HEXALAB_FIELD_HPP
#define HEXALAB_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hexalab/errors.hpp"
#include "hexalab/rng.hpp"

namespace hexalab {

// ---------------------------------------------------------------------------
// Prime field F_p, p an odd-or-2 prime below 2^63.  Elements are canonical
// residues in [0, p).
// ---------------------------------------------------------------------------

class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (std::uint64_t(1) << 63))
            throw FieldSpecError("prime modulus out of range: " + std::to_string(p));
        if (!is_prime(p))
            throw FieldSpecError("composite modulus: " + std::to_string(p));
    }

    std::uint64_t modulus() const { return p_; }
    std::uint64_t characteristic() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b; // p < 2^63, no overflow
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<__uint128_t>(a) * b) % p_);
    }
    Elem inv(Elem a) const {
        if (a == 0) throw NotInvertibleError("inverse of 0 in F_p");
        // extended Euclid on (a, p)
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(a);
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt; newt = tmp;
            tmp = r - q * newr;
            r = newr; newr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem from_int(long long n) const {
        long long m = n % static_cast<long long>(p_);
        if (m < 0) m += static_cast<long long>(p_);
        return static_cast<Elem>(m);
    }

    Elem sample(Rng& rng) const {
        // rejection keeps residues exactly uniform
        const std::uint64_t m = UINT64_MAX / p_;
        const std::uint64_t limit = m * p_;
        std::uint64_t r;
        do { r = rng.next(); } while (r >= limit);
        return r % p_;
    }
    Elem sample_nonzero(Rng& rng) const {
        Elem e;
        do { e = sample(rng); } while (e == 0);
        return e;
    }

    std::string to_string(Elem a) const { return std::to_string(a); }
    std::string describe() const { return "p=" + std::to_string(p_); }

    // Deterministic Miller-Rabin; the witness set below decides primality for
    // every 64-bit integer.
    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                                19ull, 23ull, 29ull, 31ull, 37ull}) {
            if (n % q == 0) return n == q;
        }
        std::uint64_t d = n - 1;
        int s = 0;
        while ((d & 1) == 0) { d >>= 1; ++s; }
        auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
            return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % n);
        };
        auto powmod = [&](std::uint64_t a, std::uint64_t e) {
            std::uint64_t r = 1;
            a %= n;
            while (e) {
                if (e & 1) r = mulmod(r, a);
                a = mulmod(a, a);
                e >>= 1;
            }
            return r;
        };
        for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                                19ull, 23ull, 29ull, 31ull, 37ull}) {
            std::uint64_t x = powmod(a, d);
            if (x == 1 || x == n - 1) continue;
            bool composite = true;
            for (int i = 1; i < s; ++i) {
                x = mulmod(x, x);
                if (x == n - 1) { composite = false; break; }
            }
            if (composite) return false;
        }
        return true;
    }

private:
    std::uint64_t p_;
};

// ---------------------------------------------------------------------------
// Binary extension field GF(2^k), elements as k-bit polynomial masks.
// The reducing polynomial carries its leading bit: poly = x^k + (low bits).
// ---------------------------------------------------------------------------

class BinaryField {
public:
    using Elem = std::uint64_t;

    // Picks the lexicographically smallest irreducible polynomial of degree k
    // and verifies it.
    explicit BinaryField(int degree) : BinaryField(degree, find_irreducible(degree)) {}

    BinaryField(int degree, std::uint64_t poly) : k_(degree), poly_(poly) {
        if (degree < 8 || degree > 63)
            throw FieldSpecError("binary field degree must be in [8, 63], got " +
                                 std::to_string(degree));
        if (!(poly >> degree & 1))
            throw FieldSpecError("reducing polynomial must have degree k");
        if (!is_irreducible(poly, degree))
            throw FieldSpecError("reducible polynomial for GF(2^" + std::to_string(degree) + ")");
    }

    int degree() const { return k_; }
    std::uint64_t poly() const { return poly_; }
    std::uint64_t characteristic() const { return 2; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const { return a ^ b; }
    Elem sub(Elem a, Elem b) const { return a ^ b; }
    Elem neg(Elem a) const { return a; }
    Elem mul(Elem a, Elem b) const { return pmulmod(a, b, poly_, k_); }
    Elem inv(Elem a) const {
        if (a == 0) throw NotInvertibleError("inverse of 0 in GF(2^k)");
        // a^(2^k - 2)
        std::uint64_t e = ((std::uint64_t(1) << k_) - 2);
        Elem r = 1, base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem from_int(long long n) const { return (n % 2 + 2) % 2; }

    Elem sample(Rng& rng) const {
        return rng.next() & ((std::uint64_t(1) << k_) - 1);
    }
    Elem sample_nonzero(Rng& rng) const {
        Elem e;
        do { e = sample(rng); } while (e == 0);
        return e;
    }

    std::string to_string(Elem a) const {
        char buf[24];
        std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(a));
        return buf;
    }
    std::string describe() const { return "gf2=" + std::to_string(k_); }
    std::string poly_string() const {
        char buf[24];
        std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(poly_));
        return buf;
    }

    // f irreducible over GF(2) iff it has no irreducible factor of degree
    // <= deg(f)/2: gcd(x^(2^i) - x, f) = 1 for i = 1..k/2.
    static bool is_irreducible(std::uint64_t f, int k) {
        if (k < 1 || (f & 1) == 0) return false; // root at 0
        std::uint64_t t = 2; // x
        for (int i = 1; i <= k / 2; ++i) {
            t = pmulmod(t, t, f, k);
            if (pgcd(t ^ 2, f) != 1) return false;
        }
        return true;
    }

    static std::uint64_t find_irreducible(int k) {
        if (k < 1 || k > 63) throw FieldSpecError("degree out of range");
        for (std::uint64_t low = 1; low < (std::uint64_t(1) << k); low += 2) {
            std::uint64_t f = (std::uint64_t(1) << k) | low;
            if (is_irreducible(f, k)) return f;
        }
        throw FieldSpecError("no irreducible polynomial found"); // unreachable
    }

private:
    static std::uint64_t pmulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f, int k) {
        std::uint64_t r = 0;
        while (b) {
            if (b & 1) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a >> k & 1) a ^= f;
        }
        return r;
    }
    static int pdeg(std::uint64_t x) {
        return x == 0 ? -1 : 63 - __builtin_clzll(x);
    }
    static std::uint64_t pgcd(std::uint64_t a, std::uint64_t b) {
        while (b != 0) {
            int da = pdeg(a), db = pdeg(b);
            if (da < db) { std::swap(a, b); std::swap(da, db); }
            if (b == 0) break;
            while (da >= db && a != 0) {
                a ^= b << (da - db);
                da = pdeg(a);
            }
            std::swap(a, b);
        }
        return a;
    }

    int k_;
    std::uint64_t poly_;
};

// ---------------------------------------------------------------------------
// Exact rationals, for cross-checking small instances in characteristic 0.
// ---------------------------------------------------------------------------

class RationalField {
public:
    using Elem = boost::multiprecision::cpp_rational;

    std::uint64_t characteristic() const { return 0; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw NotInvertibleError("inverse of 0 in Q");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

    Elem from_int(long long n) const { return Elem(n); }

    // Uniformity over Q is meaningless; generic sampling draws nonzero
    // integers in [-(2^20 - 1), 2^20 - 1].
    Elem sample_nonzero(Rng& rng) const {
        std::uint64_t m = rng.next() % ((std::uint64_t(1) << 20) - 1) + 1;
        bool negative = rng.next() & 1;
        Elem e(m);
        return negative ? -e : e;
    }
    Elem sample(Rng& rng) const { return sample_nonzero(rng); }

    std::string to_string(const Elem& a) const { return a.str(); }
    std::string describe() const { return "q"; }

private:
    const Elem& inv_guard(const Elem& b) const {
        if (b == 0) throw NotInvertibleError("division by 0 in Q");
        return b;
    }
};

// ---------------------------------------------------------------------------
// Dual numbers F[o]/(o^2): value a + b*o.  Used for exact first-order
// deformations; only elements with nonzero constant part are invertible.
// ---------------------------------------------------------------------------

template <class F>
struct DualNum {
    typename F::Elem a; // constant part
    typename F::Elem b; // first-order part
};

template <class F>
class DualField {
public:
    using Base = F;
    using Elem = DualNum<F>;

    explicit DualField(F base) : base_(std::move(base)) {}

    const F& base() const { return base_; }
    std::uint64_t characteristic() const { return base_.characteristic(); }

    Elem zero() const { return {base_.zero(), base_.zero()}; }
    Elem one() const { return {base_.one(), base_.zero()}; }
    Elem o() const { return {base_.zero(), base_.one()}; }
    Elem lift(typename F::Elem a) const { return {a, base_.zero()}; }
    Elem make(typename F::Elem a, typename F::Elem b) const { return {a, b}; }

    bool is_zero(const Elem& x) const { return base_.is_zero(x.a) && base_.is_zero(x.b); }
    bool is_unit(const Elem& x) const { return !base_.is_zero(x.a); }
    bool eq(const Elem& x, const Elem& y) const {
        return base_.eq(x.a, y.a) && base_.eq(x.b, y.b);
    }

    Elem add(const Elem& x, const Elem& y) const {
        return {base_.add(x.a, y.a), base_.add(x.b, y.b)};
    }
    Elem sub(const Elem& x, const Elem& y) const {
        return {base_.sub(x.a, y.a), base_.sub(x.b, y.b)};
    }
    Elem neg(const Elem& x) const { return {base_.neg(x.a), base_.neg(x.b)}; }
    Elem mul(const Elem& x, const Elem& y) const {
        return {base_.mul(x.a, y.a),
                base_.add(base_.mul(x.a, y.b), base_.mul(x.b, y.a))};
    }
    // (a + b o)^-1 = a^-1 - a^-2 b o, defined iff a != 0
    Elem inv(const Elem& x) const {
        if (base_.is_zero(x.a)) throw NotInvertibleError("nilpotent dual number");
        auto ia = base_.inv(x.a);
        return {ia, base_.neg(base_.mul(base_.mul(ia, ia), x.b))};
    }
    Elem div(const Elem& x, const Elem& y) const { return mul(x, inv(y)); }

    Elem from_int(long long n) const { return lift(base_.from_int(n)); }

    std::string to_string(const Elem& x) const {
        return base_.to_string(x.a) + "+" + base_.to_string(x.b) + "*o";
    }
    std::string describe() const { return base_.describe() + "[o]"; }

private:
    F base_;
};

// ---------------------------------------------------------------------------
// Field specification grammar: p=<decimal prime> | gf2=<k> | q
// ---------------------------------------------------------------------------

struct FieldSpec {
    enum class Kind { prime, binary, rational };
    Kind kind = Kind::prime;
    std::uint64_t modulus = 0; // prime kind
    int degree = 0;            // binary kind

    std::string to_string() const {
        switch (kind) {
            case Kind::prime: return "p=" + std::to_string(modulus);
            case Kind::binary: return "gf2=" + std::to_string(degree);
            case Kind::rational: return "q";
        }
        return "?";
    }
};

FieldSpec parse_field_spec(const std::string& text);

// Dispatches on the field kind; fn must accept PrimeField, BinaryField and
// RationalField alike.
template <class Fn>
auto with_field(const FieldSpec& spec, Fn&& fn) {
    switch (spec.kind) {
        case FieldSpec::Kind::prime: return fn(PrimeField(spec.modulus));
        case FieldSpec::Kind::binary: return fn(BinaryField(spec.degree));
        case FieldSpec::Kind::rational: return fn(RationalField());
    }
    throw FieldSpecError("unknown field kind");
}

// Seeded generic sampling: uniform independent nonzero elements.
template <class F>
std::vector<typename F::Elem> sample_generic(const F& f, std::uint64_t seed, std::size_t count) {
    Rng rng(seed);
    std::vector<typename F::Elem> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(f.sample_nonzero(rng));
    return out;
}

} // namespace hexalab

#endif
