#include "paleylab/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "paleylab/errors.hpp"

namespace paleylab {

namespace {

using Poly = std::vector<mpz_class>; // constant term first

// Quotient of a by b where b is monic and the division is known to be exact.
Poly exact_div(Poly a, const Poly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() - 1 < db) raise(Errc::internal, "cyclotomic division underflow");
    Poly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        mpz_class c = a[i];
        if (c == 0) continue;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (const auto& r : a)
        if (r != 0) raise(Errc::internal, "cyclotomic division not exact");
    return q;
}

Poly cyclotomic_poly(u32 m, std::map<u32, Poly>& memo) {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    Poly num(m + 1, 0); // x^m - 1
    num[0] = -1;
    num[m] = 1;
    for (u64 d : divisors(m)) {
        if (d == m) continue;
        num = exact_div(std::move(num), cyclotomic_poly(static_cast<u32>(d), memo));
    }
    memo.emplace(m, num);
    return num;
}

} // namespace

struct CyclotomicRing::Data {
    u32 m;
    u32 phi;
    Poly cyclo; // Phi_m
};

CyclotomicRing CyclotomicRing::make(u32 m, u32 cap) {
    if (m < 1) raise(Errc::case_not_applicable, "conductor must be positive");
    if (m > cap) raise(Errc::conductor_cap_exceeded, "conductor " + std::to_string(m) + " exceeds cap " + std::to_string(cap));

    static std::mutex mu;
    static std::map<u32, std::shared_ptr<const Data>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) {
        std::map<u32, Poly> memo;
        auto data = std::make_shared<Data>();
        data->m = m;
        data->cyclo = cyclotomic_poly(m, memo);
        data->phi = static_cast<u32>(data->cyclo.size() - 1);
        if (data->phi != euler_phi(m)) raise(Errc::internal, "cyclotomic degree mismatch");
        it = cache.emplace(m, std::move(data)).first;
    }
    return CyclotomicRing(it->second);
}

u32 CyclotomicRing::conductor() const { return d_->m; }
u32 CyclotomicRing::degree() const { return d_->phi; }
const std::vector<mpz_class>& CyclotomicRing::cyclo_poly() const { return d_->cyclo; }

namespace {

// Reduce an arbitrary-length coefficient vector mod Phi_m (monic), in place,
// then truncate to degree phi(m).
void reduce(std::vector<mpz_class>& v, const Poly& cyclo, u32 phi) {
    for (std::size_t i = v.size(); i-- > phi;) {
        if (v[i] == 0) continue;
        mpz_class c;
        mpz_swap(c.get_mpz_t(), v[i].get_mpz_t()); // v[i] becomes 0
        for (u32 j = 0; j < phi; ++j)
            if (cyclo[j] != 0) v[i - phi + j] -= c * cyclo[j];
    }
    v.resize(phi);
}

} // namespace

CyclotomicInt::CyclotomicInt(CyclotomicRing ring, std::vector<mpz_class> reduced_coeffs)
    : ring_(std::move(ring)), c_(std::move(reduced_coeffs)) {
    if (c_.size() != ring_.degree()) raise(Errc::internal, "coefficient vector has wrong length");
}

CyclotomicInt CyclotomicRing::zero() const { return CyclotomicInt(*this, std::vector<mpz_class>(degree(), 0)); }

CyclotomicInt CyclotomicRing::one() const { return integer(1); }

CyclotomicInt CyclotomicRing::integer(const mpz_class& n) const {
    if (d_->m == 1) {
        // Z[zeta_1] = Z with zeta = 1; the single basis slot carries n.
        return CyclotomicInt(*this, {n});
    }
    std::vector<mpz_class> c(degree(), 0);
    c[0] = n;
    return CyclotomicInt(*this, std::move(c));
}

CyclotomicInt CyclotomicRing::zeta_pow(i64 k) const {
    const u32 m = d_->m;
    u64 e = static_cast<u64>(((k % m) + m) % m);
    std::vector<mpz_class> v(m, 0);
    v[static_cast<std::size_t>(e)] = 1;
    reduce(v, d_->cyclo, d_->phi);
    return CyclotomicInt(*this, std::move(v));
}

CyclotomicInt CyclotomicRing::from_exponent_counts(const std::vector<i64>& counts) const {
    if (counts.size() != d_->m) raise(Errc::internal, "exponent histogram length must equal conductor");
    std::vector<mpz_class> v(counts.begin(), counts.end());
    reduce(v, d_->cyclo, d_->phi);
    return CyclotomicInt(*this, std::move(v));
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
    if (!(ring_ == o.ring_)) raise(Errc::ring_mismatch, "operands in different cyclotomic rings");
    std::vector<mpz_class> v = c_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.c_[i];
    return CyclotomicInt(ring_, std::move(v));
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
    if (!(ring_ == o.ring_)) raise(Errc::ring_mismatch, "operands in different cyclotomic rings");
    std::vector<mpz_class> v = c_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.c_[i];
    return CyclotomicInt(ring_, std::move(v));
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
    if (!(ring_ == o.ring_)) raise(Errc::ring_mismatch, "operands in different cyclotomic rings");
    const u32 phi = ring_.degree();
    std::vector<mpz_class> v(2 * phi, 0);
    for (u32 i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (u32 j = 0; j < phi; ++j) {
            if (o.c_[j] == 0) continue;
            v[i + j] += c_[i] * o.c_[j];
        }
    }
    reduce(v, ring_.d_->cyclo, phi);
    return CyclotomicInt(ring_, std::move(v));
}

CyclotomicInt CyclotomicInt::operator-() const {
    std::vector<mpz_class> v = c_;
    for (auto& x : v) x = -x;
    return CyclotomicInt(ring_, std::move(v));
}

CyclotomicInt CyclotomicInt::scalar_mul(const mpz_class& n) const {
    std::vector<mpz_class> v = c_;
    for (auto& x : v) x *= n;
    return CyclotomicInt(ring_, std::move(v));
}

CyclotomicInt CyclotomicInt::pow(u64 e) const {
    CyclotomicInt r = ring_.one();
    CyclotomicInt b = *this;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

CyclotomicInt CyclotomicInt::galois(u64 k) const {
    const u32 m = ring_.conductor();
    k %= m;
    if (gcd(k, m) != 1) raise(Errc::case_not_applicable, "galois exponent must be coprime to the conductor");
    std::vector<mpz_class> v(m, 0);
    for (u32 i = 0; i < ring_.degree(); ++i) {
        if (c_[i] == 0) continue;
        v[static_cast<std::size_t>(u64(i) * k % m)] += c_[i];
    }
    reduce(v, ring_.d_->cyclo, ring_.degree());
    return CyclotomicInt(ring_, std::move(v));
}

CyclotomicInt CyclotomicInt::conj() const {
    const u32 m = ring_.conductor();
    if (m <= 2) return *this; // already rational
    return galois(m - 1);
}

bool CyclotomicInt::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CyclotomicInt::operator==(const CyclotomicInt& o) const {
    return ring_ == o.ring_ && c_ == o.c_;
}

std::optional<mpz_class> CyclotomicInt::as_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return std::nullopt;
    return c_[0];
}

std::string CyclotomicInt::serialize() const {
    std::ostringstream os;
    os << ring_.conductor() << ":[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << c_[i].get_str();
    }
    os << ']';
    return os.str();
}

CyclotomicInt CyclotomicInt::embed_into(const CyclotomicRing& bigger) const {
    const u32 m = ring_.conductor();
    const u32 M = bigger.conductor();
    if (M % m != 0) raise(Errc::ring_mismatch, "embedding requires the source conductor to divide the target");
    const u64 scale = M / m;
    std::vector<mpz_class> v(M, 0);
    for (u32 i = 0; i < ring_.degree(); ++i) {
        if (c_[i] == 0) continue;
        v[static_cast<std::size_t>(u64(i) * scale % M)] += c_[i];
    }
    reduce(v, bigger.d_->cyclo, bigger.degree());
    return CyclotomicInt(bigger, std::move(v));
}

bool totally_nonnegative(const CyclotomicInt& x) {
    const u32 m = x.ring().conductor();
    if (auto r = x.as_rational()) return *r >= 0;

    // P(t) = prod over k coprime to m of (t - sigma_k(x)), expanded with
    // cyclotomic coefficients; the result must come out rational.
    const CyclotomicRing& R = x.ring();
    std::vector<CyclotomicInt> poly{R.one()}; // constant-first in t
    for (u64 k = 1; k < m; ++k) {
        if (gcd(k, m) != 1) continue;
        const CyclotomicInt sk = x.galois(k);
        std::vector<CyclotomicInt> next(poly.size() + 1, R.zero());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = next[i + 1] + poly[i];
            next[i] = next[i] - poly[i] * sk;
        }
        poly = std::move(next);
    }

    const std::size_t n = poly.size() - 1; // degree = phi(m)
    std::vector<mpz_class> coeff(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        auto r = poly[i].as_rational();
        if (!r) raise(Errc::internal, "conjugate product is not rational");
        coeff[i] = *r;
    }
    // x is totally real, so P has all roots real; the roots are all >= 0
    // exactly when the coefficient signs alternate: (-1)^(n-i) c_i >= 0.
    for (std::size_t i = 0; i <= n; ++i) {
        const bool flip = ((n - i) % 2) != 0;
        if ((flip && coeff[i] > 0) || (!flip && coeff[i] < 0)) return false;
    }
    return true;
}

} // namespace paleylab
