#pragma once

// Exact scalars: rational numbers (GMP-backed) and prime fields with a
// runtime modulus.  Both types plug into Eigen dense matrices; all linear
// algebra in the library is exact.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <iosfwd>
#include <ostream>

#include <gmpxx.h>
#include <Eigen/Core>

namespace ainfty {

enum class errc { input, window, mismatch, cap, unsupported };

struct error : std::runtime_error {
    errc kind;
    error(errc k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(errc k, const std::string& msg) { throw error(k, msg); }

// ---------------------------------------------------------------------------
// Rational scalar

class Rat {
    mpq_class q_;

public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}
    Rat(long n, long d) : q_(n, d) { q_.canonicalize(); }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    bool is_zero() const { return sgn(q_) == 0; }
    Rat inv() const {
        if (is_zero()) fail(errc::input, "division by zero in Q");
        return Rat(mpq_class(1) / q_);
    }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) { return *this *= o.inv(); }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }

    std::string str() const { return q_.get_str(); }

    static Rat parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) fail(errc::input, "bad rational literal: " + s);
        q.canonicalize();
        return Rat(q);
    }
};

inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

// ---------------------------------------------------------------------------
// Prime field scalar with runtime modulus.
//
// p == 0 marks a modulus-free literal (what Eigen produces for Scalar(0),
// Scalar(1)); arithmetic binds it to the other operand's modulus.

class Fp {
    std::int64_t v_ = 0;
    std::int64_t p_ = 0;

    static std::int64_t norm(std::int64_t v, std::int64_t p) {
        if (p == 0) return v;
        v %= p;
        return v < 0 ? v + p : v;
    }

public:
    Fp() = default;
    Fp(long v) : v_(v), p_(0) {}
    Fp(std::int64_t v, std::int64_t p) : v_(norm(v, p)), p_(p) {}

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    static std::int64_t join(std::int64_t a, std::int64_t b) {
        if (a == 0) return b;
        if (b == 0) return a;
        if (a != b) fail(errc::mismatch, "mixed moduli F_" + std::to_string(a) + " / F_" + std::to_string(b));
        return a;
    }

    Fp inv() const {
        if (p_ == 0) {
            if (v_ == 1 || v_ == -1) return *this;
            fail(errc::input, "inverse of unbound literal");
        }
        if (v_ == 0) fail(errc::input, "division by zero in F_" + std::to_string(p_));
        // extended Euclid
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t t = a / b;
            a -= t * b; std::swap(a, b);
            x0 -= t * x1; std::swap(x0, x1);
        }
        return Fp(x0, p_);
    }

    Fp operator-() const { return Fp(p_ ? p_ - v_ : -v_, p_); }
    friend Fp operator+(const Fp& a, const Fp& b) {
        auto p = join(a.p_, b.p_);
        return Fp(a.v_ + b.v_, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
    friend Fp operator*(const Fp& a, const Fp& b) {
        auto p = join(a.p_, b.p_);
        return Fp(a.v_ * b.v_, p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        auto p = join(a.p_, b.p_);
        return norm(a.v_, p) == norm(b.v_, p);
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }
};

inline std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.str(); }

// ---------------------------------------------------------------------------
// Runtime field descriptor (used by the CLI and by enumeration code that
// needs to iterate all scalars of a finite field).

struct FieldSpec {
    bool rational = true;
    std::int64_t p = 0;

    static FieldSpec Q() { return FieldSpec{true, 0}; }
    static FieldSpec mod(std::int64_t p) {
        if (p < 2) fail(errc::input, "modulus must be a prime >= 2");
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) fail(errc::input, std::to_string(p) + " is not prime");
        return FieldSpec{false, p};
    }
    bool finite() const { return !rational; }
    std::string str() const { return rational ? "Q" : "F" + std::to_string(p); }
};

template <class K> struct field_ops;

template <> struct field_ops<Rat> {
    static Rat zero(const FieldSpec&) { return Rat(0); }
    static Rat one(const FieldSpec&) { return Rat(1); }
    static Rat from_int(const FieldSpec&, long v) { return Rat(v); }
    static Rat parse(const FieldSpec&, const std::string& s) { return Rat::parse(s); }
    static bool matches(const FieldSpec& fs) { return fs.rational; }
};

template <> struct field_ops<Fp> {
    static Fp zero(const FieldSpec& fs) { return Fp(0, fs.p); }
    static Fp one(const FieldSpec& fs) { return Fp(1, fs.p); }
    static Fp from_int(const FieldSpec& fs, long v) { return Fp(v, fs.p); }
    static Fp parse(const FieldSpec& fs, const std::string& s) {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) fail(errc::input, "bad residue literal: " + s);
        return Fp(v, fs.p);
    }
    static bool matches(const FieldSpec& fs) { return !fs.rational; }
};

} // namespace ainfty

namespace Eigen {

template <> struct NumTraits<ainfty::Rat> : GenericNumTraits<ainfty::Rat> {
    typedef ainfty::Rat Real;
    typedef ainfty::Rat NonInteger;
    typedef ainfty::Rat Nested;
    enum {
        IsComplex = 0, IsInteger = 0, IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4, AddCost = 8, MulCost = 8
    };
    static inline Real epsilon() { return ainfty::Rat(0); }
    static inline Real dummy_precision() { return ainfty::Rat(0); }
    static inline int digits10() { return 0; }
};

template <> struct NumTraits<ainfty::Fp> : GenericNumTraits<ainfty::Fp> {
    typedef ainfty::Fp Real;
    typedef ainfty::Fp NonInteger;
    typedef ainfty::Fp Nested;
    enum {
        IsComplex = 0, IsInteger = 1, IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1, AddCost = 2, MulCost = 2
    };
    static inline Real epsilon() { return ainfty::Fp(); }
    static inline Real dummy_precision() { return ainfty::Fp(); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace ainfty {

template <class K> using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K> using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;

template <class K> bool is_zero_vec(const Vec<K>& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return false;
    return true;
}

template <class K> bool is_zero_mat(const Mat<K>& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) return false;
    return true;
}

} // namespace ainfty
