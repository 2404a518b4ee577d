#pragma once

// Finite-dimensional graded vector spaces over an exact field, supported on
// an explicit degree window, and degree-homogeneous linear maps between them.
// Producing a nonzero component outside a window is an error, never a silent
// truncation.

#include <map>
#include <string>
#include <vector>

#include "field.hpp"
#include "linalg.hpp"

namespace ainfty {

class GradedSpace {
    int dmin_ = 0;
    std::vector<std::vector<std::string>> labels_; // labels_[d - dmin_]

public:
    GradedSpace() = default;
    GradedSpace(int dmin, std::vector<std::vector<std::string>> labels)
        : dmin_(dmin), labels_(std::move(labels)) {
        trim();
        check_labels();
    }

    static GradedSpace zero() { return GradedSpace(); }

    // single named line in one degree
    static GradedSpace line(int deg, const std::string& label) {
        return GradedSpace(deg, {{label}});
    }

    bool empty() const { return labels_.empty(); }
    int dmin() const { return dmin_; }
    int dmax() const { return dmin_ + int(labels_.size()) - 1; }
    bool in_window(int d) const { return !empty() && d >= dmin() && d <= dmax(); }

    int dim(int d) const { return in_window(d) ? int(labels_[d - dmin_].size()) : 0; }
    int total_dim() const {
        int t = 0;
        for (auto& l : labels_) t += int(l.size());
        return t;
    }
    const std::string& label(int d, int i) const { return labels_[d - dmin_][i]; }

    // flat index over all degrees, window order
    int flat(int d, int i) const {
        int off = 0;
        for (int e = dmin(); e < d; ++e) off += dim(e);
        return off + i;
    }
    std::pair<int, int> unflat(int f) const {
        for (int d = dmin(); d <= dmax(); ++d) {
            if (f < dim(d)) return {d, f};
            f -= dim(d);
        }
        fail(errc::input, "flat index out of range");
    }

    friend bool operator==(const GradedSpace& a, const GradedSpace& b) {
        return a.dmin_ == b.dmin_ && a.labels_ == b.labels_;
    }
    friend bool operator!=(const GradedSpace& a, const GradedSpace& b) { return !(a == b); }

private:
    void trim() {
        while (!labels_.empty() && labels_.front().empty()) {
            labels_.erase(labels_.begin());
            ++dmin_;
        }
        while (!labels_.empty() && labels_.back().empty()) labels_.pop_back();
    }
    void check_labels() const {
        std::map<std::string, int> seen;
        for (auto& per_deg : labels_)
            for (auto& l : per_deg)
                if (++seen[l] > 1) fail(errc::input, "duplicate basis label: " + l);
    }
};

// (V[k])^i = V^{i+k}: shift down
inline GradedSpace shift(const GradedSpace& V, int k) {
    if (V.empty()) return V;
    std::vector<std::vector<std::string>> labels;
    for (int d = V.dmin(); d <= V.dmax(); ++d) {
        std::vector<std::string> row;
        for (int i = 0; i < V.dim(d); ++i) row.push_back(V.label(d, i));
        labels.push_back(std::move(row));
    }
    return GradedSpace(V.dmin() - k, std::move(labels));
}

inline GradedSpace tensor(const GradedSpace& V, const GradedSpace& W) {
    if (V.empty() || W.empty()) return GradedSpace::zero();
    int dmin = V.dmin() + W.dmin(), dmax = V.dmax() + W.dmax();
    std::vector<std::vector<std::string>> labels(dmax - dmin + 1);
    for (int d = dmin; d <= dmax; ++d)
        for (int dv = V.dmin(); dv <= V.dmax(); ++dv) {
            int dw = d - dv;
            for (int i = 0; i < V.dim(dv); ++i)
                for (int j = 0; j < W.dim(dw); ++j)
                    labels[d - dmin].push_back(V.label(dv, i) + "(x)" + W.label(dw, j));
        }
    return GradedSpace(dmin, std::move(labels));
}

// homogeneous element of a graded space: degree plus coordinate vector
template <class K>
struct El {
    int deg = 0;
    Vec<K> v;

    El() = default;
    El(int d, Vec<K> w) : deg(d), v(std::move(w)) {}
    static El zero(const GradedSpace& sp, int d) { return El(d, Vec<K>::Zero(sp.dim(d))); }
    static El basis(const GradedSpace& sp, int d, int i) {
        El e = zero(sp, d);
        e.v[i] = K(1);
        return e;
    }
    bool is_zero() const { return is_zero_vec<K>(v); }

    El operator-() const { return El(deg, Vec<K>(-v)); }
    El& operator+=(const El& o) {
        if (deg != o.deg || v.size() != o.v.size()) fail(errc::mismatch, "degree mismatch in element sum");
        v += o.v;
        return *this;
    }
    El& operator-=(const El& o) { return *this += -o; }
    friend El operator+(El a, const El& b) { return a += b; }
    friend El operator-(El a, const El& b) { return a -= b; }
    friend El operator*(const K& c, El a) { a.v *= c; return a; }
    friend bool operator==(const El& a, const El& b) {
        return a.deg == b.deg && a.v.size() == b.v.size() && is_zero_vec<K>(Vec<K>(a.v - b.v));
    }
};

// Degree-homogeneous linear map between graded spaces: one matrix block per
// source degree, landing in source degree + deg.  Blocks that would land
// outside the target window may not carry nonzero entries.
template <class K>
class GradedMap {
    GradedSpace src_, dst_;
    int deg_ = 0;
    std::map<int, Mat<K>> blocks_; // keyed by source degree

public:
    GradedMap() = default;
    GradedMap(GradedSpace src, GradedSpace dst, int deg)
        : src_(std::move(src)), dst_(std::move(dst)), deg_(deg) {}

    const GradedSpace& src() const { return src_; }
    const GradedSpace& dst() const { return dst_; }
    int deg() const { return deg_; }

    static GradedMap zero(const GradedSpace& s, const GradedSpace& t, int deg) {
        return GradedMap(s, t, deg);
    }
    static GradedMap identity(const GradedSpace& s) {
        GradedMap m(s, s, 0);
        for (int d = s.dmin(); d <= s.dmax(); ++d)
            if (s.dim(d)) {
                Mat<K> b = Mat<K>::Zero(s.dim(d), s.dim(d));
                for (int i = 0; i < s.dim(d); ++i) b(i, i) = K(1);
                m.blocks_[d] = std::move(b);
            }
        return m;
    }

    // block for source degree d (dst.dim(d+deg) x src.dim(d)); zero if absent
    Mat<K> block(int d) const {
        auto it = blocks_.find(d);
        if (it != blocks_.end()) return it->second;
        return Mat<K>::Zero(dst_.dim(d + deg_), src_.dim(d));
    }

    void set_block(int d, Mat<K> b) {
        if (src_.dim(d) == 0) {
            if (b.size() && !is_zero_mat<K>(b)) fail(errc::window, "block on empty source degree");
            return;
        }
        if (dst_.dim(d + deg_) == 0) {
            if (!is_zero_mat<K>(b)) fail(errc::window, "nonzero component lands outside target window");
            return;
        }
        if (b.rows() != dst_.dim(d + deg_) || b.cols() != src_.dim(d))
            fail(errc::mismatch, "block shape mismatch");
        if (is_zero_mat<K>(b)) blocks_.erase(d);
        else blocks_[d] = std::move(b);
    }

    void set_entry(int srcdeg, int dsti, int srcj, const K& c) {
        Mat<K> b = block(srcdeg);
        if (b.rows() == 0 || b.cols() == 0) {
            if (!c.is_zero()) fail(errc::window, "nonzero component lands outside target window");
            return;
        }
        b(dsti, srcj) = c;
        set_block(srcdeg, std::move(b));
    }

    bool is_zero() const {
        for (auto& [d, b] : blocks_)
            if (!is_zero_mat<K>(b)) return false;
        return true;
    }

    El<K> apply(const El<K>& x) const {
        El<K> y = El<K>::zero(dst_, x.deg + deg_);
        if (src_.dim(x.deg) == 0) return y;
        auto it = blocks_.find(x.deg);
        if (it == blocks_.end()) {
            return y;
        }
        if (dst_.dim(x.deg + deg_) == 0) return y;
        y.v = it->second * x.v;
        return y;
    }

    GradedMap operator-() const {
        GradedMap m(src_, dst_, deg_);
        for (auto& [d, b] : blocks_) m.blocks_[d] = -b;
        return m;
    }
    GradedMap& operator+=(const GradedMap& o) {
        if (src_ != o.src_ || dst_ != o.dst_ || deg_ != o.deg_)
            fail(errc::mismatch, "graded map sum shape mismatch");
        for (auto& [d, b] : o.blocks_) set_block(d, Mat<K>(block(d) + b));
        return *this;
    }
    GradedMap& operator-=(const GradedMap& o) { return *this += -o; }
    friend GradedMap operator+(GradedMap a, const GradedMap& b) { return a += b; }
    friend GradedMap operator-(GradedMap a, const GradedMap& b) { return a -= b; }
    friend GradedMap operator*(const K& c, GradedMap m) {
        for (auto& [d, b] : m.blocks_) b *= c;
        return m;
    }
    friend bool operator==(const GradedMap& a, const GradedMap& b) {
        if (a.src_ != b.src_ || a.dst_ != b.dst_ || a.deg_ != b.deg_) return false;
        return GradedMap(a - b).is_zero();
    }
    friend bool operator!=(const GradedMap& a, const GradedMap& b) { return !(a == b); }

    // whole map as one flat matrix (dst flat x src flat)
    Mat<K> flat() const {
        Mat<K> m = Mat<K>::Zero(dst_.total_dim(), src_.total_dim());
        for (auto& [d, b] : blocks_) {
            if (!src_.dim(d) || !dst_.dim(d + deg_)) continue;
            int r0 = dst_.flat(d + deg_, 0), c0 = src_.flat(d, 0);
            m.block(r0, c0, b.rows(), b.cols()) = b;
        }
        return m;
    }
};

template <class K>
GradedMap<K> compose(const GradedMap<K>& g, const GradedMap<K>& f) {
    if (f.dst() != g.src()) fail(errc::mismatch, "compose: target(f) != source(g)");
    GradedMap<K> h(f.src(), g.dst(), f.deg() + g.deg());
    for (int d = f.src().dmin(); d <= f.src().dmax(); ++d) {
        if (!f.src().dim(d)) continue;
        int mid = d + f.deg();
        if (!f.dst().dim(mid)) continue;
        Mat<K> b = g.block(mid) * f.block(d);
        if (!is_zero_mat<K>(b)) {
            if (!g.dst().dim(mid + g.deg()))
                fail(errc::window, "nonzero component lands outside target window");
            h.set_block(d, std::move(b));
        }
    }
    return h;
}

// Koszul-signed tensor of maps: (a(x)b)(x(x)y) = (-1)^{deg b * deg x} a(x)(x)b(y)
template <class K>
GradedMap<K> tensor(const GradedMap<K>& a, const GradedMap<K>& b) {
    GradedSpace S = tensor(a.src(), b.src()), T = tensor(a.dst(), b.dst());
    GradedMap<K> m(S, T, a.deg() + b.deg());
    if (S.empty() || T.empty()) return m;
    for (int d = S.dmin(); d <= S.dmax(); ++d) {
        if (!S.dim(d)) continue;
        // enumerate source pairs in the same order tensor(GradedSpace,...) built them
        int col = 0;
        Mat<K> blk = Mat<K>::Zero(T.dim(d + m.deg()), S.dim(d));
        bool nz = false;
        for (int dx = a.src().dmin(); dx <= a.src().dmax(); ++dx) {
            int dy = d - dx;
            if (!a.src().dim(dx) || !b.src().dim(dy)) continue;
            K sgn = (b.deg() * dx) % 2 ? K(-1) : K(1);
            for (int i = 0; i < a.src().dim(dx); ++i)
                for (int j = 0; j < b.src().dim(dy); ++j, ++col) {
                    El<K> ax = a.apply(El<K>::basis(a.src(), dx, i));
                    El<K> by = b.apply(El<K>::basis(b.src(), dy, j));
                    if (ax.is_zero() || by.is_zero()) continue;
                    // target pair (dx+adeg, dy+bdeg) inside flat degree d+mdeg
                    int tdx = dx + a.deg(), tdy = dy + b.deg();
                    int row0 = 0;
                    for (int e = a.dst().dmin(); e < tdx; ++e) {
                        int f = d + m.deg() - e;
                        row0 += a.dst().dim(e) * b.dst().dim(f);
                    }
                    for (int p = 0; p < ax.v.size(); ++p)
                        for (int q = 0; q < by.v.size(); ++q) {
                            K c = sgn * ax.v[p] * by.v[q];
                            if (c.is_zero()) continue;
                            if (blk.rows() == 0) fail(errc::window, "tensor lands outside window");
                            blk(row0 + p * b.dst().dim(tdy) + q, col) = c;
                            nz = true;
                        }
                }
        }
        if (nz) {
            if (!T.dim(d + m.deg())) fail(errc::window, "tensor lands outside window");
            m.set_block(d, std::move(blk));
        }
    }
    return m;
}

} // namespace ainfty
