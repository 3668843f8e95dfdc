#include "agdec/gf.hpp"

#include <algorithm>
#include <map>

namespace agdec {

namespace {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense GF(p)[t] helpers on coefficient vectors (low-to-high, no trailing zeros).
using PPoly = std::vector<uint32_t>;

PPoly trim(PPoly v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

PPoly pmod(PPoly a, const PPoly& b, uint32_t p) {
    // remainder of a by b; b monic-ish (leading coefficient invertible mod p)
    a = trim(std::move(a));
    const size_t db = b.size() - 1;
    uint32_t lead_inv = 1;
    for (uint32_t x = 1; x < p; ++x)
        if (x * b[db] % p == 1) { lead_inv = x; break; }
    while (a.size() >= b.size() && !a.empty()) {
        uint32_t c = static_cast<uint32_t>(static_cast<uint64_t>(a.back()) * lead_inv % p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t sub = static_cast<uint64_t>(c) * b[i] % p;
            a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - sub) % p);
        }
        a = trim(std::move(a));
    }
    return a;
}

bool divides(const PPoly& d, const PPoly& f, uint32_t p) { return pmod(f, d, p).empty(); }

std::vector<uint32_t> prime_factors(uint64_t n) {
    std::vector<uint32_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(static_cast<uint32_t>(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(static_cast<uint32_t>(n));
    return out;
}

}  // namespace

FieldElement Field::element(uint64_t rep) const {
    if (rep >= q_) throw Error("element representative out of range");
    return {this, static_cast<uint32_t>(rep)};
}

FieldElement Field::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return {this, static_cast<uint32_t>(r)};
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t da = a % p_, db = b % p_;
        out += (da + db) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

uint32_t Field::neg(uint32_t a) const {
    if (p_ == 2) return a;
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t da = a % p_;
        out += (p_ - da) % p_ * mult;
        a /= p_;
        mult *= p_;
    }
    return out;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul_schoolbook(uint32_t a, uint32_t b) const {
    // base-p digit vectors
    std::vector<uint32_t> da(m_, 0), db(m_, 0), prod(2 * m_ - 1, 0);
    for (uint32_t i = 0; i < m_; ++i) { da[i] = a % p_; a /= p_; }
    for (uint32_t i = 0; i < m_; ++i) { db[i] = b % p_; b /= p_; }
    for (uint32_t i = 0; i < m_; ++i)
        for (uint32_t j = 0; j < m_; ++j)
            prod[i + j] = static_cast<uint32_t>((prod[i + j] + static_cast<uint64_t>(da[i]) * db[j]) % p_);
    // reduce by the monic modulus
    for (size_t k = prod.size(); k-- > m_;) {
        uint32_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (uint32_t i = 0; i < m_; ++i) {
            uint64_t sub = static_cast<uint64_t>(c) * modulus_[i] % p_;
            prod[k - m_ + i] = static_cast<uint32_t>((prod[k - m_ + i] + p_ - sub) % p_);
        }
    }
    uint32_t out = 0;
    for (uint32_t i = m_; i-- > 0;) out = out * p_ + prod[i];
    return out;
}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) {
        uint64_t s = static_cast<uint64_t>(log_[a]) + log_[b];
        uint64_t n = q_ - 1;
        return exp_[s >= n ? s - n : s];
    }
    return mul_schoolbook(a, b);
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    if (!exp_.empty()) {
        uint64_t n = q_ - 1;
        uint32_t l = log_[a];
        return exp_[l == 0 ? 0 : n - l];
    }
    return pow(a, static_cast<long long>(q_) - 2);
}

uint32_t Field::pow(uint32_t a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    uint32_t result = 1, base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (!field_ || field_ != o.field_) throw FieldMismatch("add");
    return {field_, field_->add(rep_, o.rep_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    if (!field_ || field_ != o.field_) throw FieldMismatch("sub");
    return {field_, field_->sub(rep_, o.rep_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (!field_ || field_ != o.field_) throw FieldMismatch("mul");
    return {field_, field_->mul(rep_, o.rep_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    if (!field_ || field_ != o.field_) throw FieldMismatch("div");
    return {field_, field_->mul(rep_, field_->inv(o.rep_))};
}

FieldElement FieldElement::operator-() const {
    if (!field_) throw FieldMismatch("negate null element");
    return {field_, field_->neg(rep_)};
}

FieldElement FieldElement::inv() const {
    if (!field_) throw FieldMismatch("invert null element");
    return {field_, field_->inv(rep_)};
}

FieldElement FieldElement::pow(long long e) const {
    if (!field_) throw FieldMismatch("pow on null element");
    return {field_, field_->pow(rep_, e)};
}

Field::Field(uint32_t p, uint32_t m, std::vector<uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
    for (uint32_t i = 0; i < m_; ++i) {
        q_ *= p_;
        if (q_ > (1ull << 31)) throw UnsupportedSize("q exceeds 2^31");
    }
}

std::shared_ptr<const Field> Field::make(uint32_t p, uint32_t m,
                                         const std::vector<uint32_t>& modulus) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p));
    if (m < 1) throw Error("extension degree must be >= 1");
    if (modulus.size() != m + 1) throw Error("modulus must have degree m");
    for (uint32_t c : modulus)
        if (c >= p) throw Error("modulus coefficients must lie in [0, p)");
    if (modulus.back() != 1) throw Error("modulus must be monic");
    // trial division against all monic polynomials of degree <= m/2
    PPoly mod(modulus.begin(), modulus.end());
    for (uint32_t d = 1; 2 * d <= m; ++d) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            PPoly cand(d + 1, 0);
            cand[d] = 1;
            uint64_t t = idx;
            for (uint32_t i = 0; i < d; ++i) { cand[i] = static_cast<uint32_t>(t % p); t /= p; }
            if (divides(cand, mod, p))
                throw ReducibleModulus("modulus has a factor of degree " + std::to_string(d));
        }
    }
    auto f = std::shared_ptr<Field>(new Field(p, m, modulus));
    if (f->q_ <= (1ull << 16)) f->build_tables();
    return f;
}

void Field::build_tables() {
    const uint64_t n = q_ - 1;
    const auto factors = prime_factors(n);
    // find a generator of the multiplicative group
    for (uint32_t g = 1; g < q_; ++g) {
        bool ok = true;
        for (uint32_t f : factors) {
            // schoolbook pow; tables are not built yet
            uint64_t e = n / f;
            uint32_t acc = 1, base = g;
            while (e > 0) {
                if (e & 1) acc = mul_schoolbook(acc, base);
                base = mul_schoolbook(base, base);
                e >>= 1;
            }
            if (acc == 1) { ok = false; break; }
        }
        if (ok) { generator_ = g; break; }
    }
    if (generator_ == 0) throw ReducibleModulus("no multiplicative generator found");
    exp_.assign(n, 0);
    log_.assign(q_, 0);
    uint32_t cur = 1;
    for (uint64_t i = 0; i < n; ++i) {
        exp_[i] = cur;
        log_[cur] = static_cast<uint32_t>(i);
        cur = mul_schoolbook(cur, generator_);
    }
    if (cur != 1) throw ReducibleModulus("generator order mismatch; modulus not irreducible");
}

std::shared_ptr<const Field> Field::prime(uint32_t p) { return make(p, 1, {0, 1}); }

std::shared_ptr<const Field> Field::gf(uint32_t q) {
    static const std::map<uint32_t, std::pair<uint32_t, std::vector<uint32_t>>> catalog = {
        {4, {2, {1, 1, 1}}},           // t^2 + t + 1
        {8, {2, {1, 1, 0, 1}}},        // t^3 + t + 1
        {9, {3, {2, 2, 1}}},           // t^2 + 2t + 2
        {16, {2, {1, 1, 0, 0, 1}}},    // t^4 + t + 1
        {64, {2, {1, 1, 0, 1, 1, 0, 1}}},  // t^6 + t^4 + t^3 + t + 1
    };
    if (is_prime(q)) return prime(q);
    auto it = catalog.find(q);
    if (it == catalog.end()) throw UnsupportedSize("no catalog modulus for q = " + std::to_string(q));
    return make(it->second.first, static_cast<uint32_t>(it->second.second.size()) - 1,
                it->second.second);
}

std::vector<FieldElement> Field::all_elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (uint64_t i = 0; i < q_; ++i) out.emplace_back(this, static_cast<uint32_t>(i));
    return out;
}

}  // namespace agdec
