#include "seshadri/lattice.hpp"

namespace seshadri {

SurfaceParams make_surface(long long g, long long e, bool is_product) {
    if (g < 0) throw InputError("invalid surface: genus g = " + std::to_string(g) + " < 0");
    if (is_product && e != 0)
        throw InputError("invalid surface: product surface forces e = 0, got e = " +
                         std::to_string(e));
    if (e < -g)
        throw InputError("invalid surface: e = " + std::to_string(e) + " < -g = " +
                         std::to_string(-g));
    return SurfaceParams{g, e, is_product};
}

bool lex_less(const DivisorClass& x, const DivisorClass& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.mults < y.mults;
}

DivisorClass gamma_class(std::size_t r) { return DivisorClass{1, 0, std::vector<BigInt>(r, 0)}; }

DivisorClass fiber_class(std::size_t r) { return DivisorClass{0, 1, std::vector<BigInt>(r, 0)}; }

DivisorClass exceptional_class(std::size_t i, std::size_t r) {
    if (i >= r) throw InputError("exceptional_class: index out of range");
    DivisorClass d{0, 0, std::vector<BigInt>(r, 0)};
    d.mults[i] = -1; // E_i = -(-1)*E_i in the a*H + b*F - sum n_i E_i convention
    return d;
}

namespace {
void check_same_r(const DivisorClass& x, const DivisorClass& y, const char* op) {
    if (x.r() != y.r())
        throw InputError(std::string(op) + ": classes have different r (" +
                         std::to_string(x.r()) + " vs " + std::to_string(y.r()) +
                         "); pad with zeros explicitly");
}
} // namespace

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
    check_same_r(x, y, "add");
    DivisorClass out{x.a + y.a, x.b + y.b, x.mults};
    for (std::size_t i = 0; i < out.mults.size(); ++i) out.mults[i] += y.mults[i];
    return out;
}

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
    check_same_r(x, y, "sub");
    DivisorClass out{x.a - y.a, x.b - y.b, x.mults};
    for (std::size_t i = 0; i < out.mults.size(); ++i) out.mults[i] -= y.mults[i];
    return out;
}

DivisorClass operator*(const BigInt& k, const DivisorClass& x) {
    DivisorClass out{k * x.a, k * x.b, x.mults};
    for (auto& m : out.mults) m *= k;
    return out;
}

BigInt intersect(const DivisorClass& d1, const DivisorClass& d2, const SurfaceParams& s) {
    check_same_r(d1, d2, "intersect");
    BigInt v = -BigInt(s.e) * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b;
    for (std::size_t i = 0; i < d1.mults.size(); ++i) v -= d1.mults[i] * d2.mults[i];
    return v;
}

DivisorClass canonical_class(const SurfaceParams& s, std::size_t r) {
    DivisorClass k{-2, -(BigInt(s.e) + 2 - 2 * BigInt(s.g)), std::vector<BigInt>(r, -1)};
    return k;
}

Rational arithmetic_genus(const DivisorClass& c, const SurfaceParams& s) {
    DivisorClass k = canonical_class(s, c.r());
    BigInt c2 = intersect(c, c, s);
    BigInt kc = intersect(k, c, s);
    return Rational(1) + Rational(c2 + kc, 2);
}

DivisorClass strict_transform(const BigInt& a, const BigInt& b, std::vector<BigInt> mults) {
    for (const auto& m : mults)
        if (m < 0)
            throw InputError("strict_transform: negative multiplicity " + m.str());
    return DivisorClass{a, b, std::move(mults)};
}

} // namespace seshadri
