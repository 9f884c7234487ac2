#include "swc/field.hpp"

namespace swc {

namespace {

/* Polynomials over F_p as little-endian digit vectors of an integer < p^deg. */
std::vector<int> digits(int v, int p, int len) {
    std::vector<int> d(len, 0);
    for (int i = 0; i < len; ++i) { d[i] = v % p; v /= p; }
    return d;
}

int poly_add(int a, int b, int p, int len) {
    int out = 0, mult = 1;
    for (int i = 0; i < len; ++i) {
        out += ((a % p + b % p) % p) * mult;
        a /= p; b /= p; mult *= p;
    }
    return out;
}

/* Multiply residue polynomials a, b and reduce modulo the monic modulus. */
int poly_mulmod(int a, int b, int p, const std::vector<int>& modulus) {
    int k = static_cast<int>(modulus.size()) - 1;
    std::vector<int> da = digits(a, p, k), db = digits(b, p, k);
    std::vector<int> prod(2 * k - 1, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (int d = 2 * k - 2; d >= k; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        /* x^d = -modulus-tail * x^(d-k) */
        for (int j = 0; j < k; ++j)
            prod[d - k + j] = ((prod[d - k + j] - c * modulus[j]) % p + p * p) % p;
    }
    int out = 0, mult = 1;
    for (int i = 0; i < k; ++i) { out += prod[i] * mult; mult *= p; }
    return out;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/* Trial-division irreducibility over F_p for degree <= 4: no monic factor of
 * degree 1..deg/2 divides m.  Polynomials are integer-encoded as above but
 * with the leading coefficient included. */
bool divides(const std::vector<int>& f, const std::vector<int>& g, int p) {
    /* does monic f divide g? remainder of g by f. */
    std::vector<int> r = g;
    int df = static_cast<int>(f.size()) - 1;
    for (int d = static_cast<int>(r.size()) - 1; d >= df; --d) {
        int c = r[d];
        if (c == 0) continue;
        for (int j = 0; j <= df; ++j)
            r[d - df + j] = ((r[d - df + j] - c * f[j]) % p + p * p) % p;
    }
    for (int d = 0; d < df; ++d)
        if (r[d] % p != 0) return false;
    return true;
}

bool is_irreducible(const std::vector<int>& m, int p) {
    int k = static_cast<int>(m.size()) - 1;
    if (k < 1 || m[k] != 1) return false;
    if (k == 1) return true;
    for (int df = 1; df <= k / 2; ++df) {
        int count = 1;
        for (int i = 0; i < df; ++i) count *= p;
        for (int v = 0; v < count; ++v) {
            std::vector<int> f = digits(v, p, df);
            f.push_back(1);  // monic
            if (divides(f, m, p)) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<int> default_modulus(int p, int k) {
    if (k == 1) return {0, 1};  // x, unused beyond degree bookkeeping
    if (p == 2 && k == 2) return {1, 1, 1};           // x^2+x+1
    if (p == 2 && k == 3) return {1, 1, 0, 1};        // x^3+x+1
    if (p == 2 && k == 4) return {1, 1, 0, 0, 1};     // x^4+x+1
    if (p == 3 && k == 2) return {1, 0, 1};           // x^2+1
    throw PreconditionError("no default modulus for p=" + std::to_string(p) +
                            " k=" + std::to_string(k));
}

Field::Field(const FieldSpec& spec) : spec_(spec) {
    if (!is_prime(spec.p)) throw PreconditionError("field characteristic must be prime");
    if (spec.k < 1) throw PreconditionError("extension degree must be >= 1");
    q_ = 1;
    for (int i = 0; i < spec.k; ++i) {
        q_ *= spec.p;
        if (q_ > 16) throw CapacityError("field size p^k exceeds 16");
    }
    if (static_cast<int>(spec.modulus.size()) != spec.k + 1 || spec.modulus[spec.k] != 1)
        throw PreconditionError("modulus must be monic of degree k");
    if (spec.k > 1 && !is_irreducible(spec.modulus, spec.p))
        throw PreconditionError("modulus is reducible over F_p");

    add_.resize(q_ * q_);
    neg_.resize(q_);
    for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b) add_[a * q_ + b] = static_cast<uint8_t>(poly_add(a, b, spec.p, spec.k));
    for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b)
            if (add_[a * q_ + b] == 0) neg_[a] = static_cast<uint8_t>(b);

    auto mulmod = [&](int a, int b) {
        if (spec_.k == 1) return (a * b) % spec_.p;
        return poly_mulmod(a, b, spec_.p, spec_.modulus);
    };

    /* Find a primitive element by direct order computation. */
    log_.assign(q_, -1);
    exp_.clear();
    for (int g = 1; g < q_; ++g) {
        std::vector<uint8_t> powers;
        int x = 1;
        do {
            powers.push_back(static_cast<uint8_t>(x));
            x = mulmod(x, g);
        } while (x != 1 && static_cast<int>(powers.size()) <= q_);
        if (static_cast<int>(powers.size()) == q_ - 1) {
            exp_ = powers;
            for (int i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
            break;
        }
    }
    if (exp_.empty()) throw InternalInconsistency("no primitive element found");
}

uint8_t Field::inv(uint8_t a) const {
    if (a == 0) throw PreconditionError("inverse of zero field element");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::shared_ptr<const Field> Field::make(int p, int k) {
    FieldSpec s;
    s.p = p;
    s.k = k;
    s.modulus = default_modulus(p, k);
    return std::make_shared<const Field>(s);
}

}  // namespace swc
