#include "excomp/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace excomp {

namespace {

using Coeffs = std::vector<std::uint32_t>;

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on integers; a in [1, p)
    std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t qt = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - qt * r1};
        std::tie(s0, s1) = std::pair{s1, s0 - qt * s1};
    }
    std::int64_t s = s0 % static_cast<std::int64_t>(p);
    if (s < 0) s += p;
    return static_cast<std::uint32_t>(s);
}

void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b over F_p; b nonzero and trimmed.
Coeffs poly_rem(Coeffs a, const Coeffs& b, std::uint32_t p) {
    trim(a);
    const std::uint32_t lead_inv = inv_mod_prime(b.back(), p);
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        for (std::size_t i = 0; i < b.size(); ++i) {
            const std::uint64_t sub = factor * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Coeffs poly_mul_mod_p(const Coeffs& a, const Coeffs& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Coeffs out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>(
                (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    trim(out);
    return out;
}

Coeffs poly_sub_mod_p(Coeffs a, const Coeffs& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    Coeffs f = poly;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        // every monic divisor candidate of degree d
        Coeffs cand(d + 1, 0);
        cand[d] = 1;
        while (true) {
            if (poly_rem(f, cand, p).empty()) return false;
            std::size_t i = 0;
            while (i < d && ++cand[i] == p) cand[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m) {
    // c_0 is the most significant position of the lexicographic order,
    // so the tuple is incremented from c_{m-1} upwards.
    Coeffs cand(m + 1, 0);
    cand[m] = 1;
    while (true) {
        if (is_irreducible_mod_p(cand, p)) return cand;
        std::int64_t i = static_cast<std::int64_t>(m) - 1;
        while (i >= 0 && ++cand[i] == p) cand[i--] = 0;
        if (i < 0) break;
    }
    throw std::logic_error("default_modulus: no irreducible polynomial found");
}

struct Field::Impl {
    std::uint32_t p = 2;
    std::uint32_t m = 1;
    std::uint32_t q = 2;
    Coeffs modulus;           // m+1 coefficients, or empty when m = 1
    std::uint32_t mod_bits = 0; // p = 2: modulus as a bit mask

    Coeffs digits(Elem a) const {
        Coeffs d(m, 0);
        std::uint32_t v = a.v;
        for (std::uint32_t i = 0; i < m; ++i) {
            d[i] = v % p;
            v /= p;
        }
        return d;
    }

    Elem encode(const Coeffs& d) const {
        std::uint32_t v = 0;
        for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
        return Elem{v};
    }
};

Field::Field() : Field(make(2)) {}

Field Field::make(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field: characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw std::invalid_argument("field: extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldOrder)
            throw std::length_error("field: order " + std::to_string(p) + "^" + std::to_string(m) +
                                    " exceeds the cap 2^20");
    }

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->m = m;
    impl->q = static_cast<std::uint32_t>(q);

    if (m == 1) {
        if (modulus && !(modulus->empty() || *modulus == Coeffs{0, 1}))
            throw std::invalid_argument("field: prime fields take no modulus (or the trivial x)");
        return Field(std::move(impl));
    }

    Coeffs mod;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != m + 1)
            throw std::invalid_argument("field: modulus must have degree " + std::to_string(m));
        for (auto c : mod)
            if (c >= p) throw std::invalid_argument("field: modulus coefficient out of range");
        if (mod.back() != 1) throw std::invalid_argument("field: modulus must be monic");
        if (!is_irreducible_mod_p(mod, p)) throw std::invalid_argument("field: modulus is reducible");
    } else {
        mod = default_modulus(p, m);
    }
    if (p == 2)
        for (std::uint32_t i = 0; i <= m; ++i) impl->mod_bits |= mod[i] << i;
    impl->modulus = std::move(mod);
    return Field(std::move(impl));
}

std::uint32_t Field::characteristic() const noexcept { return impl_->p; }
std::uint32_t Field::degree() const noexcept { return impl_->m; }
std::uint32_t Field::order() const noexcept { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return impl_->modulus; }

Elem Field::element(std::uint64_t index) const {
    if (index >= order())
        throw std::out_of_range("element index " + std::to_string(index) + " not below q=" + std::to_string(order()));
    return Elem{static_cast<std::uint32_t>(index)};
}

Elem Field::add(Elem a, Elem b) const noexcept {
    const Impl& f = *impl_;
    if (f.m == 1) {
        const std::uint32_t s = a.v + b.v;
        return Elem{s >= f.p ? s - f.p : s};
    }
    if (f.p == 2) return Elem{a.v ^ b.v};
    std::uint32_t out = 0, scale = 1;
    std::uint32_t x = a.v, y = b.v;
    for (std::uint32_t i = 0; i < f.m; ++i) {
        out += ((x % f.p + y % f.p) % f.p) * scale;
        x /= f.p;
        y /= f.p;
        scale *= f.p;
    }
    return Elem{out};
}

Elem Field::neg(Elem a) const noexcept {
    const Impl& f = *impl_;
    if (f.m == 1) return Elem{a.v == 0 ? 0 : f.p - a.v};
    if (f.p == 2) return a;
    std::uint32_t out = 0, scale = 1, x = a.v;
    for (std::uint32_t i = 0; i < f.m; ++i) {
        const std::uint32_t d = x % f.p;
        out += (d == 0 ? 0 : f.p - d) * scale;
        x /= f.p;
        scale *= f.p;
    }
    return Elem{out};
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const noexcept {
    const Impl& f = *impl_;
    if (f.m == 1) return Elem{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % f.p)};
    if (f.p == 2) {
        // carry-less product, then reduce by the modulus bit mask
        std::uint64_t prod = 0;
        for (std::uint32_t i = 0; i < f.m; ++i)
            if ((b.v >> i) & 1u) prod ^= static_cast<std::uint64_t>(a.v) << i;
        for (std::int32_t i = 2 * static_cast<std::int32_t>(f.m) - 2; i >= static_cast<std::int32_t>(f.m); --i)
            if ((prod >> i) & 1u) prod ^= static_cast<std::uint64_t>(f.mod_bits) << (i - f.m);
        return Elem{static_cast<std::uint32_t>(prod)};
    }
    const Coeffs x = f.digits(a), y = f.digits(b);
    Coeffs prod(2 * f.m - 1, 0);
    for (std::uint32_t i = 0; i < f.m; ++i) {
        if (x[i] == 0) continue;
        for (std::uint32_t j = 0; j < f.m; ++j)
            prod[i + j] = (prod[i + j] + x[i] * y[j]) % f.p;
    }
    // modulus is monic: x^m = -(c_0 + ... + c_{m-1} x^{m-1})
    for (std::size_t i = prod.size(); i-- > f.m;) {
        const std::uint32_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::uint32_t j = 0; j < f.m; ++j)
            prod[i - f.m + j] = (prod[i - f.m + j] + (f.p - c) * f.modulus[j]) % f.p;
    }
    prod.resize(f.m);
    return f.encode(prod);
}

Elem Field::inv(Elem a) const {
    if (a.is_zero()) throw std::domain_error("field: inverse of zero");
    const Impl& f = *impl_;
    if (f.m == 1) return Elem{inv_mod_prime(a.v, f.p)};

    // extended Euclid in F_p[x]: track s with s * a = r (mod modulus)
    Coeffs r0 = f.modulus, r1 = f.digits(a);
    trim(r1);
    Coeffs s0, s1{1};
    while (!r1.empty()) {
        Coeffs quot;
        Coeffs rem = r0;
        const std::uint32_t lead_inv = inv_mod_prime(r1.back(), f.p);
        if (rem.size() >= r1.size()) quot.assign(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size()) {
            const std::size_t shift = rem.size() - r1.size();
            const std::uint32_t factor =
                static_cast<std::uint32_t>(static_cast<std::uint64_t>(rem.back()) * lead_inv % f.p);
            quot[shift] = factor;
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = (rem[shift + i] + f.p - factor * r1[i] % f.p) % f.p;
            trim(rem);
        }
        Coeffs s2 = poly_sub_mod_p(s0, poly_mul_mod_p(quot, s1, f.p), f.p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since the modulus is irreducible
    const std::uint32_t scale = inv_mod_prime(r0[0], f.p);
    Coeffs out(f.m, 0);
    for (std::size_t i = 0; i < s0.size(); ++i) out[i] = s0[i] * scale % f.p;
    return f.encode(out);
}

Elem Field::div(Elem a, Elem b) const {
    if (b.is_zero()) throw std::domain_error("field: division by zero");
    return mul(a, inv(b));
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    Elem result = one();
    while (e > 0) {
        if (e & 1u) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Elem Field::frobenius(Elem a, std::uint64_t k) const noexcept {
    // the Frobenius map has order m
    k %= degree();
    for (std::uint64_t i = 0; i < k; ++i) a = pow(a, characteristic());
    return a;
}

std::string Field::name() const {
    std::string s = "F_" + std::to_string(characteristic());
    if (degree() > 1) {
        s += "^" + std::to_string(degree()) + "[";
        for (std::size_t i = 0; i < modulus().size(); ++i) {
            if (i) s += ",";
            s += std::to_string(modulus()[i]);
        }
        s += "]";
    }
    return s;
}

bool operator==(const Field& a, const Field& b) noexcept {
    if (a.impl_ == b.impl_) return true;
    return a.impl_->p == b.impl_->p && a.impl_->m == b.impl_->m && a.impl_->modulus == b.impl_->modulus;
}

} // namespace excomp
