#pragma once

// Bounded cochain complexes (differential of degree +1), hom complexes with
// the dg structure of Ch_K, cohomology with chosen representatives, good
// truncation at degree 0, quasi-isomorphism testing.
//
// Slot conventions for the Ch_K operations, fixed once here:
//   m1(f) = d_Y f + (-1)^{deg f + 1} f d_X
//   m2_ch(f, g) = (-1)^{deg f (deg g + 1)} g o f      (f is applied first)
// In the abstract arity-ordered form m^2(b2, b1) (last-applied morphism in
// the left slot) this reads m^2(b2, b1) = m2_ch(b1, b2); with that reading
// the unit identities m^2(f, 1) = f and m^2(1, g) = (-1)^{deg g} g hold on
// the nose for identity maps.

#include <optional>
#include <vector>

#include "graded.hpp"

namespace ainfty {

template <class K>
struct ChainComplex {
    GradedSpace sp;
    GradedMap<K> d; // degree +1

    ChainComplex() : d(GradedSpace::zero(), GradedSpace::zero(), 1) {}
    ChainComplex(GradedSpace s, GradedMap<K> diff) : sp(std::move(s)), d(std::move(diff)) {
        if (d.src() != sp || d.dst() != sp) fail(errc::mismatch, "differential not an endomap");
        if (d.deg() != 1) fail(errc::input, "differential must have degree +1");
        if (!compose(d, d).is_zero()) fail(errc::input, "d o d != 0");
    }

    static ChainComplex zero() { return ChainComplex(); }
    static ChainComplex concentrated(int deg, const std::string& label) {
        GradedSpace s = GradedSpace::line(deg, label);
        return ChainComplex(s, GradedMap<K>::zero(s, s, 1));
    }
};

template <class K>
struct ChainMap {
    ChainComplex<K> src, dst;
    GradedMap<K> f; // degree 0

    ChainMap(ChainComplex<K> s, ChainComplex<K> t, GradedMap<K> m)
        : src(std::move(s)), dst(std::move(t)), f(std::move(m)) {
        if (f.src() != src.sp || f.dst() != dst.sp || f.deg() != 0)
            fail(errc::mismatch, "not a degree-0 map between the complexes");
        if (compose(dst.d, f) != compose(f, src.d)) fail(errc::input, "does not commute with d");
    }
};

template <class K>
ChainComplex<K> shift_complex(const ChainComplex<K>& C, int k) {
    GradedSpace s = shift(C.sp, k);
    GradedMap<K> d(s, s, 1);
    K sgn = (k % 2) ? K(-1) : K(1);
    for (int deg = s.dmin(); deg <= s.dmax(); ++deg)
        if (s.dim(deg) && s.dim(deg + 1)) d.set_block(deg, Mat<K>(sgn * C.d.block(deg + k)));
    return ChainComplex<K>(s, d);
}

// m1 of Example-1.2 type on a raw graded map
template <class K>
GradedMap<K> m1_ch(const ChainComplex<K>& X, const ChainComplex<K>& Y, const GradedMap<K>& f) {
    GradedMap<K> a = compose(Y.d, f);
    GradedMap<K> b = compose(f, X.d);
    return (f.deg() % 2) ? GradedMap<K>(a + b) : GradedMap<K>(a - b);
}

// m2_ch(f, g) = (-1)^{deg f (deg g + 1)} g o f, f applied first
template <class K>
GradedMap<K> m2_ch(const GradedMap<K>& f, const GradedMap<K>& g) {
    GradedMap<K> c = compose(g, f);
    int e = f.deg() * (g.deg() + 1);
    return (e % 2) ? GradedMap<K>(-c) : c;
}

// ---------------------------------------------------------------------------
// Hom complex with named matrix-unit basis and element<->map conversions.

template <class K>
class HomComplex {
    ChainComplex<K> X_, Y_;
    ChainComplex<K> cx_;
    // basis order per degree k: source degree l ascending, then source index,
    // then target index
    struct Unit { int l, j, i; };
    std::map<int, std::vector<Unit>> units_;

public:
    HomComplex() = default;
    HomComplex(const ChainComplex<K>& X, const ChainComplex<K>& Y) : X_(X), Y_(Y) {
        if (X.sp.empty() || Y.sp.empty()) {
            cx_ = ChainComplex<K>::zero();
            return;
        }
        int kmin = Y.sp.dmin() - X.sp.dmax(), kmax = Y.sp.dmax() - X.sp.dmin();
        std::vector<std::vector<std::string>> labels(kmax - kmin + 1);
        for (int k = kmin; k <= kmax; ++k)
            for (int l = X.sp.dmin(); l <= X.sp.dmax(); ++l)
                for (int j = 0; j < X.sp.dim(l); ++j)
                    for (int i = 0; i < Y.sp.dim(l + k); ++i) {
                        units_[k].push_back({l, j, i});
                        labels[k - kmin].push_back("[" + Y.sp.label(l + k, i) + "<-" + X.sp.label(l, j) + "]");
                    }
        GradedSpace hs(kmin, std::move(labels));
        GradedMap<K> d(hs, hs, 1);
        for (int k = hs.dmin(); k <= hs.dmax(); ++k) {
            if (!hs.dim(k) || !hs.dim(k + 1)) continue;
            Mat<K> blk = Mat<K>::Zero(hs.dim(k + 1), hs.dim(k));
            for (int c = 0; c < hs.dim(k); ++c) {
                GradedMap<K> f = to_map(El<K>::basis(hs, k, c), hs);
                El<K> img = from_map(m1_ch(X_, Y_, f), hs);
                blk.col(c) = img.v;
            }
            d.set_block(k, std::move(blk));
        }
        cx_ = ChainComplex<K>(hs, d);
    }

    const ChainComplex<K>& complex() const { return cx_; }
    const GradedSpace& space() const { return cx_.sp; }
    const ChainComplex<K>& source() const { return X_; }
    const ChainComplex<K>& target() const { return Y_; }

    GradedMap<K> to_map(const El<K>& e) const {
        GradedMap<K> f(X_.sp, Y_.sp, e.deg);
        auto it = units_.find(e.deg);
        if (it == units_.end()) return f;
        for (std::size_t c = 0; c < it->second.size(); ++c) {
            if (e.v[Eigen::Index(c)].is_zero()) continue;
            const Unit& u = it->second[c];
            f.set_entry(u.l, u.i, u.j, e.v[Eigen::Index(c)]);
        }
        return f;
    }

    El<K> from_map(const GradedMap<K>& f) const { return from_map(f, cx_.sp); }

private:
    El<K> from_map(const GradedMap<K>& f, const GradedSpace& hs) const {
        El<K> e = El<K>::zero(hs, f.deg());
        auto it = units_.find(f.deg());
        if (it == units_.end()) {
            if (!f.is_zero()) fail(errc::window, "map outside hom window");
            return e;
        }
        for (std::size_t c = 0; c < it->second.size(); ++c) {
            const Unit& u = it->second[c];
            Mat<K> blk = f.block(u.l);
            e.v[Eigen::Index(c)] = blk.rows() ? blk(u.i, u.j) : K(0);
        }
        return e;
    }
};

// ---------------------------------------------------------------------------
// Cohomology at one degree, with chosen cycle representatives.

template <class K>
struct CohomologyAt {
    int deg = 0;
    int dim = 0;
    Mat<K> cycles;     // basis of Z^n as columns (coords in C^n)
    Mat<K> boundaries; // basis of B^n as columns
    Mat<K> reps;       // representatives completing B-basis to Z-basis

    // coordinates of the class of a cycle z in the reps basis
    Vec<K> cls(const Vec<K>& z) const {
        Mat<K> A(reps.rows(), boundaries.cols() + reps.cols());
        if (boundaries.cols()) A.leftCols(boundaries.cols()) = boundaries;
        if (reps.cols()) A.rightCols(reps.cols()) = reps;
        auto x = solve<K>(A, z);
        if (!x) fail(errc::input, "vector is not a cycle modulo boundaries");
        return x->tail(reps.cols());
    }
};

template <class K>
CohomologyAt<K> cohomology(const ChainComplex<K>& C, int n) {
    CohomologyAt<K> H;
    H.deg = n;
    int dn = C.sp.dim(n);
    if (dn == 0) {
        H.cycles = Mat<K>::Zero(0, 0);
        H.boundaries = Mat<K>::Zero(0, 0);
        H.reps = Mat<K>::Zero(0, 0);
        return H;
    }
    Mat<K> dblk = C.sp.dim(n + 1) ? C.d.block(n) : Mat<K>::Zero(0, dn);
    H.cycles = kernel_basis<K>(dblk);
    // column basis of the image of d^{n-1}
    Mat<K> prev = C.sp.dim(n - 1) ? C.d.block(n - 1) : Mat<K>::Zero(dn, 0);
    Mat<K> pe = prev;
    std::vector<int> piv = rref(pe);
    Mat<K> B(dn, Eigen::Index(piv.size()));
    for (std::size_t i = 0; i < piv.size(); ++i) B.col(Eigen::Index(i)) = prev.col(piv[i]);
    H.boundaries = B;
    // extend boundaries to a basis of cycles
    std::vector<Eigen::Index> keep;
    Mat<K> acc = B;
    int r = rank<K>(acc);
    for (Eigen::Index c = 0; c < H.cycles.cols(); ++c) {
        Mat<K> trial(dn, acc.cols() + 1);
        if (acc.cols()) trial.leftCols(acc.cols()) = acc;
        trial.col(acc.cols()) = H.cycles.col(c);
        int r2 = rank<K>(trial);
        if (r2 > r) {
            keep.push_back(c);
            acc = trial;
            r = r2;
        }
    }
    H.reps = Mat<K>(dn, Eigen::Index(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) H.reps.col(Eigen::Index(i)) = H.cycles.col(keep[i]);
    H.dim = int(keep.size());
    return H;
}

// good truncation: degrees < 0 kept, degree 0 replaced by ker d^0, rest zero
template <class K>
struct Truncation {
    ChainComplex<K> cx;
    GradedMap<K> incl; // cx -> original
};

template <class K>
Truncation<K> truncate_nonpos(const ChainComplex<K>& C) {
    if (C.sp.empty() || C.sp.dmin() > 0) {
        ChainComplex<K> z = ChainComplex<K>::zero();
        return {z, GradedMap<K>::zero(z.sp, C.sp, 0)};
    }
    Mat<K> ker = C.sp.dim(0) ? kernel_basis<K>(C.sp.dim(1) ? C.d.block(0) : Mat<K>::Zero(0, C.sp.dim(0)))
                             : Mat<K>::Zero(0, 0);
    std::vector<std::vector<std::string>> labels;
    for (int d = C.sp.dmin(); d < 0; ++d) {
        std::vector<std::string> row;
        for (int i = 0; i < C.sp.dim(d); ++i) row.push_back(C.sp.label(d, i));
        labels.push_back(std::move(row));
    }
    {
        std::vector<std::string> row;
        for (Eigen::Index i = 0; i < ker.cols(); ++i) row.push_back("z0_" + std::to_string(i));
        labels.push_back(std::move(row));
    }
    GradedSpace s(C.sp.dmin() < 0 ? C.sp.dmin() : 0, std::move(labels));
    GradedMap<K> incl(s, C.sp, 0);
    for (int d = s.dmin(); d < 0; ++d)
        if (s.dim(d)) {
            Mat<K> id = Mat<K>::Zero(s.dim(d), s.dim(d));
            for (int i = 0; i < s.dim(d); ++i) id(i, i) = K(1);
            incl.set_block(d, std::move(id));
        }
    if (s.dim(0)) incl.set_block(0, ker);
    GradedMap<K> diff(s, s, 1);
    for (int d = s.dmin(); d < -1; ++d)
        if (s.dim(d) && s.dim(d + 1)) diff.set_block(d, C.d.block(d));
    if (s.dim(-1) && s.dim(0)) {
        // rewrite d^{-1} in kernel coordinates
        Mat<K> blk(ker.cols(), s.dim(-1));
        for (int c = 0; c < s.dim(-1); ++c) {
            Vec<K> img = C.d.block(-1).col(c);
            auto x = solve<K>(ker, img);
            if (!x) fail(errc::input, "image of d^{-1} not in ker d^0");
            blk.col(c) = *x;
        }
        diff.set_block(-1, std::move(blk));
    }
    return {ChainComplex<K>(s, diff), incl};
}

// ---------------------------------------------------------------------------
// quasi-isomorphism testing: H^n(f) bijective for every n

template <class K>
struct QuasiIsoReport {
    bool ok = true;
    struct Line { int deg; int dim_src, dim_dst; bool iso; };
    std::vector<Line> lines;
};

template <class K>
QuasiIsoReport<K> is_quasi_iso(const ChainMap<K>& f) {
    QuasiIsoReport<K> rep;
    int lo = std::min(f.src.sp.empty() ? 0 : f.src.sp.dmin(), f.dst.sp.empty() ? 0 : f.dst.sp.dmin());
    int hi = std::max(f.src.sp.empty() ? 0 : f.src.sp.dmax(), f.dst.sp.empty() ? 0 : f.dst.sp.dmax());
    for (int n = lo; n <= hi; ++n) {
        CohomologyAt<K> Hs = cohomology(f.src, n), Ht = cohomology(f.dst, n);
        bool iso;
        if (Hs.dim != Ht.dim) {
            iso = false;
        } else if (Hs.dim == 0) {
            iso = true;
        } else {
            Mat<K> M(Ht.dim, Hs.dim);
            for (int c = 0; c < Hs.dim; ++c) {
                El<K> img = f.f.apply(El<K>(n, Hs.reps.col(c)));
                M.col(c) = Ht.cls(img.v);
            }
            iso = is_bijective<K>(M);
        }
        rep.lines.push_back({n, Hs.dim, Ht.dim, iso});
        rep.ok = rep.ok && iso;
    }
    return rep;
}

} // namespace ainfty
