#include "algdeg/action.hpp"

#include <algorithm>
#include <set>

namespace algdeg {

Permutation::Permutation(std::vector<std::size_t> images) : img_(std::move(images)) {
    const std::size_t n = img_.size();
    if (n == 0) throw BadIndices("empty permutation");
    std::vector<bool> seen(n, false);
    for (std::size_t v : img_) {
        if (v < 1 || v > n || seen[v - 1])
            throw BadIndices("image list is not a bijection of {1..n}");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = i + 1;
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
    Permutation p = identity(n);
    if (a < 1 || a > n || b < 1 || b > n) throw BadIndices("transposition out of range");
    std::swap(p.img_[a - 1], p.img_[b - 1]);
    return p;
}

Permutation Permutation::cycle(std::size_t n) {
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = i + 2 > n ? 1 : i + 2;
    return Permutation(std::move(img));
}

std::size_t Permutation::of(std::size_t i) const {
    if (i < 1 || i > img_.size())
        throw IndexOutOfRange("permutation index " + std::to_string(i) + " out of range");
    return img_[i - 1];
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[img_[i] - 1] = i + 1;
    return Permutation(std::move(img));
}

BasisChange::BasisChange(FlatMatrix matrix) : mat_(std::move(matrix)), inv_(1, 1, mat_.spec()) {
    if (mat_.rows() != mat_.cols())
        throw DimensionMismatch("basis changes must be square");
    auto inv = mat_.inverse();
    if (!inv) throw NotInvertible("matrix is singular");
    inv_ = std::move(*inv);
    if (!mat_.multiply(inv_).is_identity())
        throw InternalError("inverse check failed");
}

BasisChange BasisChange::identity(std::size_t n, const FieldSpec& fs) {
    FlatMatrix i = FlatMatrix::identity(n, fs);
    return BasisChange(i, i);
}

BasisChange BasisChange::permutation_matrix(const Permutation& sigma, const FieldSpec& fs) {
    const std::size_t n = sigma.n();
    FlatMatrix m(n, n, fs);
    FlatMatrix inv(n, n, fs);
    for (std::size_t j = 1; j <= n; ++j) {
        m.set(sigma.of(j), j, FieldScalar::one(fs));
        inv.set(j, sigma.of(j), FieldScalar::one(fs));
    }
    return BasisChange(std::move(m), std::move(inv));
}

BasisChange BasisChange::diagonal(const std::vector<FieldScalar>& d) {
    if (d.empty()) throw DimensionMismatch("empty diagonal");
    const FieldSpec fs = d.front().spec();
    const std::size_t n = d.size();
    FlatMatrix m(n, n, fs);
    FlatMatrix inv(n, n, fs);
    for (std::size_t i = 1; i <= n; ++i) {
        m.set(i, i, d[i - 1]);
        inv.set(i, i, d[i - 1].inverse()); // DivisionByZero on a zero entry
    }
    return BasisChange(std::move(m), std::move(inv));
}

BasisChange BasisChange::transvection(std::size_t n, const FieldSpec& fs, std::size_t i,
                                      std::size_t j, const FieldScalar& t) {
    if (i == j) throw BadIndices("transvection needs i != j");
    FlatMatrix m = FlatMatrix::identity(n, fs);
    FlatMatrix inv = FlatMatrix::identity(n, fs);
    m.set(i, j, t);
    inv.set(i, j, -t);
    return BasisChange(std::move(m), std::move(inv));
}

BasisChange BasisChange::then(const BasisChange& o) const {
    return BasisChange(mat_.multiply(o.mat_), o.inv_.multiply(inv_));
}

StructureVector act(const StructureVector& lambda, const BasisChange& g) {
    const std::size_t n = lambda.n();
    if (g.n() != n || g.spec() != lambda.spec())
        throw DimensionMismatch("basis change does not match the structure vector");
    const FieldSpec& fs = lambda.spec();
    const FieldScalar zero = FieldScalar::zero(fs);
    const FlatMatrix& m = g.matrix();
    const FlatMatrix& inv = g.inv_matrix();

    // Three successive one-index contractions keep this at O(n^4).
    std::vector<FieldScalar> s1(n * n * n, zero); // s1[a,q,r] = sum_p g_pa l_pqr
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t p = 1; p <= n; ++p) {
            const FieldScalar& c = m.at(p, a);
            if (c.is_zero()) continue;
            for (std::size_t q = 1; q <= n; ++q)
                for (std::size_t r = 1; r <= n; ++r) {
                    const FieldScalar& l = lambda.at(p, q, r);
                    if (l.is_zero()) continue;
                    s1[((a - 1) * n + (q - 1)) * n + (r - 1)] += c * l;
                }
        }
    std::vector<FieldScalar> s2(n * n * n, zero); // s2[a,b,r] = sum_q g_qb s1[a,q,r]
    for (std::size_t b = 1; b <= n; ++b)
        for (std::size_t q = 1; q <= n; ++q) {
            const FieldScalar& c = m.at(q, b);
            if (c.is_zero()) continue;
            for (std::size_t a = 1; a <= n; ++a)
                for (std::size_t r = 1; r <= n; ++r) {
                    const FieldScalar& v = s1[((a - 1) * n + (q - 1)) * n + (r - 1)];
                    if (v.is_zero()) continue;
                    s2[((a - 1) * n + (b - 1)) * n + (r - 1)] += c * v;
                }
        }
    StructureVector out(n, fs);
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = 1; b <= n; ++b)
            for (std::size_t c = 1; c <= n; ++c) {
                FieldScalar acc = zero;
                for (std::size_t r = 1; r <= n; ++r) {
                    const FieldScalar& v = s2[((a - 1) * n + (b - 1)) * n + (r - 1)];
                    if (v.is_zero()) continue;
                    acc += v * inv.at(c, r);
                }
                if (!acc.is_zero()) out.set(a, b, c, std::move(acc));
            }
    return out;
}

StructureVector act_permutation(const StructureVector& lambda, const Permutation& sigma) {
    const std::size_t n = lambda.n();
    if (sigma.n() != n)
        throw DimensionMismatch("permutation size differs from dimension");
    StructureVector out(n, lambda.spec());
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k)
                out.set(i, j, k, lambda.at(sigma.of(i), sigma.of(j), sigma.of(k)));
    return out;
}

StructureVector scale_basis(const StructureVector& lambda, const WeightVector& q,
                            const FieldScalar& tau) {
    const std::size_t n = lambda.n();
    if (q.n() != n)
        throw DimensionMismatch("weight vector length differs from dimension");
    if (tau.is_zero()) throw DivisionByZero();
    StructureVector out(n, lambda.spec());
    for (std::size_t m = 1; m <= lambda.size(); ++m) {
        const FieldScalar& e = lambda.at_flat(m);
        if (e.is_zero()) continue;
        out.set_flat(m, e * tau.pow(triple_weight(q, triple_of(m, n))));
    }
    return out;
}

namespace {

// Raw residue kernels used only by the orbit enumerators; p and n are tiny.

using ResVec = std::vector<std::uint32_t>;
using ResMat = std::vector<std::uint32_t>; // n*n row-major

bool fp_invert(const ResMat& m, std::size_t n, std::uint64_t p, ResMat& inv_out) {
    std::vector<std::uint64_t> a(n * 2 * n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a[r * 2 * n + c] = m[r * n + c] % p;
        a[r * 2 * n + n + r] = 1;
    }
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t sel = row;
        while (sel < n && a[sel * 2 * n + col] == 0) ++sel;
        if (sel == n) return false;
        if (sel != row)
            for (std::size_t c = 0; c < 2 * n; ++c) std::swap(a[sel * 2 * n + c], a[row * 2 * n + c]);
        // Normalize the pivot row.
        std::uint64_t piv = a[row * 2 * n + col], inv = 1, base = piv, e = p - 2;
        while (e) { // Fermat inverse
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (std::size_t c = 0; c < 2 * n; ++c) a[row * 2 * n + c] = a[row * 2 * n + c] * inv % p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row) continue;
            const std::uint64_t f = a[r * 2 * n + col];
            if (f == 0) continue;
            for (std::size_t c = 0; c < 2 * n; ++c)
                a[r * 2 * n + c] = (a[r * 2 * n + c] + (p - f) * a[row * 2 * n + c]) % p;
        }
        ++row;
    }
    if (row < n) return false;
    inv_out.assign(n * n, 0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv_out[r * n + c] = static_cast<std::uint32_t>(a[r * 2 * n + n + c]);
    return true;
}

ResVec fp_act(const ResVec& lam, const ResMat& g, const ResMat& ginv, std::size_t n,
              std::uint64_t p) {
    std::vector<std::uint64_t> s1(n * n * n, 0), s2(n * n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r) {
                std::uint64_t acc = 0;
                for (std::size_t pp = 0; pp < n; ++pp)
                    acc += static_cast<std::uint64_t>(g[pp * n + a]) * lam[(pp * n + q) * n + r] % p;
                s1[(a * n + q) * n + r] = acc % p;
            }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t r = 0; r < n; ++r) {
                std::uint64_t acc = 0;
                for (std::size_t q = 0; q < n; ++q)
                    acc += static_cast<std::uint64_t>(g[q * n + b]) * s1[(a * n + q) * n + r] % p;
                s2[(a * n + b) * n + r] = acc % p;
            }
    ResVec out(n * n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                std::uint64_t acc = 0;
                for (std::size_t r = 0; r < n; ++r)
                    acc += static_cast<std::uint64_t>(ginv[c * n + r]) * s2[(a * n + b) * n + r] % p;
                out[(a * n + b) * n + c] = static_cast<std::uint32_t>(acc % p);
            }
    return out;
}

ResVec residues_of(const StructureVector& v) {
    ResVec out(v.size());
    for (std::size_t m = 1; m <= v.size(); ++m)
        out[m - 1] = static_cast<std::uint32_t>(v.at_flat(m).residue());
    return out;
}

void require_enumeration_guard(const StructureVector& lambda) {
    if (!lambda.spec().is_prime_field())
        throw EnumerationTooLarge("orbit enumeration needs a finite field");
    if (lambda.n() > 3 || lambda.spec().prime() > 3)
        throw EnumerationTooLarge("orbit enumeration is guarded to n <= 3 and p <= 3");
}

} // namespace

OrbitEnumeration::OrbitEnumeration(StructureVector representative,
                                   std::vector<std::vector<std::uint32_t>> members,
                                   unsigned long group_order)
    : rep_(std::move(representative)), members_(std::move(members)), group_order_(group_order) {
    std::sort(members_.begin(), members_.end());
}

bool OrbitEnumeration::contains(const StructureVector& v) const {
    if (v.n() != rep_.n() || v.spec() != rep_.spec()) return false;
    return std::binary_search(members_.begin(), members_.end(), residues_of(v));
}

StructureVector OrbitEnumeration::member(std::size_t idx) const {
    if (idx >= members_.size()) throw IndexOutOfRange("orbit member index out of range");
    StructureVector out(rep_.n(), rep_.spec());
    for (std::size_t m = 0; m < members_[idx].size(); ++m)
        out.set_flat(m + 1, FieldScalar::of(rep_.spec(), members_[idx][m]));
    return out;
}

OrbitEnumeration enumerate_orbit(const StructureVector& lambda) {
    require_enumeration_guard(lambda);
    const std::size_t n = lambda.n();
    const std::uint64_t p = lambda.spec().prime();
    const ResVec rep = residues_of(lambda);

    std::set<ResVec> members;
    unsigned long group_order = 0;
    ResMat g(n * n, 0), ginv;
    // Odometer over all n x n matrices mod p.
    for (;;) {
        if (fp_invert(g, n, p, ginv)) {
            ++group_order;
            members.insert(fp_act(rep, g, ginv, n, p));
        }
        std::size_t pos = n * n;
        while (pos > 0 && g[pos - 1] + 1 == p) g[--pos] = 0;
        if (pos == 0) break;
        ++g[pos - 1];
    }
    return OrbitEnumeration(lambda, {members.begin(), members.end()}, group_order);
}

OrbitEnumeration enumerate_orbit_bfs(const StructureVector& lambda) {
    require_enumeration_guard(lambda);
    const std::size_t n = lambda.n();
    const std::uint64_t p = lambda.spec().prime();

    // Transvections and diagonal rescalings generate the group.
    std::vector<std::pair<ResMat, ResMat>> gens;
    auto add_gen = [&](const ResMat& m) {
        ResMat inv;
        if (!fp_invert(m, n, p, inv)) throw InternalError("generator not invertible");
        gens.push_back({m, inv});
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            for (std::uint32_t t = 1; t < p; ++t) {
                ResMat m(n * n, 0);
                for (std::size_t d = 0; d < n; ++d) m[d * n + d] = 1;
                m[i * n + j] = t;
                add_gen(m);
            }
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::uint32_t u = 2; u < p; ++u) {
            ResMat m(n * n, 0);
            for (std::size_t d = 0; d < n; ++d) m[d * n + d] = 1;
            m[i * n + i] = u;
            add_gen(m);
        }

    std::set<ResVec> members;
    std::vector<ResVec> queue{residues_of(lambda)};
    members.insert(queue.front());
    while (!queue.empty()) {
        const ResVec v = std::move(queue.back());
        queue.pop_back();
        for (const auto& [g, ginv] : gens) {
            ResVec w = fp_act(v, g, ginv, n, p);
            if (members.insert(w).second) queue.push_back(std::move(w));
        }
    }
    unsigned long group_order = 1;
    // |GL_n(F_p)| = prod (p^n - p^i)
    {
        unsigned long pn = 1;
        for (std::size_t i = 0; i < n; ++i) pn *= static_cast<unsigned long>(p);
        unsigned long pi = 1;
        group_order = 1;
        for (std::size_t i = 0; i < n; ++i) {
            group_order *= pn - pi;
            pi *= static_cast<unsigned long>(p);
        }
    }
    return OrbitEnumeration(lambda, {members.begin(), members.end()}, group_order);
}

bool are_isomorphic(const StructureVector& lambda, const StructureVector& mu) {
    if (lambda.n() != mu.n() || lambda.spec() != mu.spec())
        throw DimensionMismatch("vectors live in different spaces");
    if (lambda == mu) return true;
    return enumerate_orbit(lambda).contains(mu);
}

} // namespace algdeg
