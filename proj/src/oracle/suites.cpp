#include "kronlab/oracle.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <map>
#include <set>

#include "kronlab/combinatorics.hpp"
#include "kronlab/direct_sum.hpp"
#include "kronlab/index_space.hpp"
#include "kronlab/inner_product.hpp"
#include "kronlab/kernels.hpp"
#include "kronlab/kronecker.hpp"
#include "kronlab/multilinear.hpp"
#include "kronlab/tensor.hpp"

namespace kronlab::oracle {

Rational random_rational(Rng& rng, long range, long max_den) {
    std::uniform_int_distribution<long> num(-range, range), den(1, max_den);
    long p = num(rng);
    long q = den(rng);
    return make_rational(p, q);
}

std::vector<std::vector<std::size_t>> brute_enumerate(const std::vector<std::size_t>& dims) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == dims.size()) {
            out.push_back(cur);
            return;
        }
        for (std::size_t v = 1; v <= dims[i]; ++v) {
            cur.push_back(v);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

namespace {

using Q = Rational;
using G = Gaussian;

struct Tally {
    SuiteResult r;
    void check(bool ok) {
        ++r.cases;
        if (ok)
            ++r.passed;
    }
};

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<std::size_t> random_dims(Rng& rng, std::size_t max_arity, std::size_t max_dim) {
    std::vector<std::size_t> d(pick(rng, 1, max_arity));
    for (auto& x : d)
        x = pick(rng, 1, max_dim);
    return d;
}

template <Field T>
std::vector<std::vector<T>> random_args(Rng& rng, const std::vector<std::size_t>& dims) {
    std::vector<std::vector<T>> xs;
    for (std::size_t n : dims)
        xs.push_back(random_vector<T>(rng, n));
    return xs;
}

template <Field T>
std::vector<std::vector<T>> random_table(Rng& rng, std::size_t rows, std::size_t width) {
    std::vector<std::vector<T>> t;
    for (std::size_t k = 0; k < rows; ++k)
        t.push_back(random_vector<T>(rng, width));
    return t;
}

std::size_t product(const std::vector<std::size_t>& dims) {
    std::size_t n = 1;
    for (std::size_t d : dims)
        n *= d;
    return n;
}

MultiIndex as_index(const std::vector<std::size_t>& g) { return MultiIndex(g); }

// ---------------------------------------------------------------------------
// scalars

void conj_involution(Rng& rng, Tally& t) {
    for (int k = 0; k < 100; ++k) {
        G z = random_scalar<G>(rng);
        t.check(conj(conj(z)) == z);
    }
}

void field_axioms(Rng& rng, Tally& t) {
    for (int k = 0; k < 100; ++k) {
        Q a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        Q ab_c = (a + b) + c, a_bc = a + (b + c);
        Q m1 = (a * b) * c, m2 = a * (b * c);
        Q d1 = a * (b + c), d2 = a * b + a * c;
        Q s1 = a + b, s2 = b + a, p1 = a * b, p2 = b * a;
        t.check(ab_c == a_bc && m1 == m2 && d1 == d2 && s1 == s2 && p1 == p2);
    }
    for (int k = 0; k < 100; ++k) {
        G a = random_scalar<G>(rng), b = random_scalar<G>(rng), c = random_scalar<G>(rng);
        bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                  a + b == b + a && a * b == b * a;
        ok = ok && conj(a + b) == conj(a) + conj(b) && conj(a * b) == conj(a) * conj(b);
        G n = a * conj(a);
        ok = ok && sgn(n.im) == 0 && sgn(n.re) >= 0;
        t.check(ok);
    }
}

// ---------------------------------------------------------------------------
// index_space

void rank_enumeration(Rng&, Tally& t) {
    for (const std::vector<std::size_t>& dims : std::vector<std::vector<std::size_t>>{
             {2, 3}, {3, 4}, {2, 2, 2}, {1, 3, 2}, {4, 1, 3}, {5}, {2, 1, 2, 3}}) {
        Shape s(dims);
        auto all = brute_enumerate(dims);
        auto listed = enumerate(s);
        t.check(listed.size() == all.size());
        for (std::size_t k = 0; k < all.size(); ++k) {
            MultiIndex g = as_index(all[k]);
            t.check(rank(s, g) == k + 1 && unrank(s, k + 1) == g && listed[k] == g);
        }
    }
}

void concat_monotone(Rng&, Tally& t) {
    auto left = brute_enumerate({2, 2});
    auto right = brute_enumerate({2});
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> pairs;
    for (const auto& a : left)
        for (const auto& b : right)
            pairs.emplace_back(a, b);
    for (const auto& p : pairs)
        for (const auto& q : pairs) {
            bool pair_less = p < q;
            bool concat_less = lex_compare(concat(as_index(p.first), as_index(p.second)),
                                           concat(as_index(q.first), as_index(q.second))) < 0;
            t.check(pair_less == concat_less);
        }
}

// ---------------------------------------------------------------------------
// multilinear

void evaluate_direct_sum(Rng& rng, Tally& t) {
    for (int k = 0; k < 40; ++k) {
        auto dims = random_dims(rng, 4, 3);
        std::size_t n = pick(rng, 1, 3);
        auto values = random_table<Q>(rng, product(dims), n);
        auto f = from_values<Q>(Shape(dims), n, values);
        auto xs = random_args<Q>(rng, dims);
        auto want = brute_evaluate(dims, values, xs);
        t.check(evaluate(f, xs) == want && evaluate_factored(f, xs) == want);
    }
}

void basis_functional_product(Rng& rng, Tally& t) {
    std::vector<std::size_t> dims{2, 2, 2};
    for (const auto& a : brute_enumerate(dims)) {
        auto phi = basis_functional<Q>(Shape(dims), as_index(a));
        for (int k = 0; k < 50; ++k) {
            auto xs = random_args<Q>(rng, dims);
            Q want = xs[0][a[0] - 1] * xs[1][a[1] - 1] * xs[2][a[2] - 1];
            t.check(evaluate(phi, xs)[0] == want);
        }
    }
}

void reconstruction(Rng& rng, Tally& t) {
    std::vector<std::size_t> dims{2, 2};
    for (int k = 0; k < 20; ++k) {
        auto f = from_values<Q>(Shape(dims), 3, random_table<Q>(rng, 4, 3));
        auto g = reconstruct_from_basis<Q>(f.shape(), expand_in_basis(f));
        bool ok = f == g;
        for (int j = 0; j < 10; ++j) {
            auto xs = random_args<Q>(rng, dims);
            ok = ok && evaluate(f, xs) == evaluate(g, xs);
        }
        t.check(ok);
    }
}

void component_recombination(Rng& rng, Tally& t) {
    for (int k = 0; k < 30; ++k) {
        auto dims = random_dims(rng, 3, 3);
        std::size_t n = pick(rng, 1, 4);
        auto values = random_table<Q>(rng, product(dims), n);
        auto f = from_values<Q>(Shape(dims), n, values);
        auto xs = random_args<Q>(rng, dims);
        // Σ_j f^(j)(xs) u_j with u_j the standard basis of the target.
        std::vector<Q> sum(n, zero<Q>());
        for (std::size_t j = 1; j <= n; ++j) {
            Q c = evaluate(component(f, j), xs)[0];
            auto u = unit_vector<Q>(n, j);
            for (std::size_t i = 0; i < n; ++i)
                sum[i] += c * u[i];
        }
        t.check(sum == brute_evaluate(dims, values, xs));
    }
}

void interchange(Rng& rng, Tally& t) {
    for (int k = 0; k < 200; ++k) {
        auto dims = random_dims(rng, 4, 4);
        auto rows = random_args<Q>(rng, dims);
        Q lhs = one<Q>();
        for (const auto& r : rows) {
            Q s = zero<Q>();
            for (const auto& a : r)
                s += a;
            lhs *= s;
        }
        Q rhs = zero<Q>();
        for (const auto& g : brute_enumerate(dims)) {
            Q p = one<Q>();
            for (std::size_t i = 0; i < dims.size(); ++i)
                p *= rows[i][g[i] - 1];
            rhs += p;
        }
        auto rep = product_sum_interchange(rows);
        t.check(lhs == rhs && rep.holds && rep.product_of_sums == lhs && rep.sum_of_products == rhs);
    }
}

// ---------------------------------------------------------------------------
// tensor

void pure_product(Rng& rng, Tally& t) {
    for (int k = 0; k < 50; ++k) {
        auto dims = random_dims(rng, 4, 4);
        auto xs = random_args<Q>(rng, dims);
        t.check(pure<Q>(Shape(dims), xs).coeffs == brute_pure(dims, xs));
    }
}

void verify_invertible(Rng& rng, Tally& t) {
    for (int k = 0; k < 20; ++k) {
        auto dims = random_dims(rng, 3, 2);
        std::size_t n = product(dims);
        auto b = random_invertible<Q>(rng, n);
        std::vector<std::vector<Q>> images(n, std::vector<Q>(n));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                images[j][i] = b(i, j);
        auto v = verify_tensor_product(NuTable<Q>(Shape(dims), n, images), n);
        t.check(v.is_tensor_product && v.failed == Criterion::none && v.witness.empty());
    }
    for (int k = 0; k < 20; ++k) {
        std::vector<std::size_t> dims{2, pick(rng, 2, 3)};
        std::size_t n = product(dims);
        auto images = random_table<Q>(rng, n, n);
        std::size_t src = pick(rng, 0, n - 1), dst = (src + pick(rng, 1, n - 1)) % n;
        images[dst] = images[src];
        auto v = verify_tensor_product(NuTable<Q>(Shape(dims), n, images), n);
        std::vector<Q> combo(n, zero<Q>());
        bool nonzero = false;
        for (const auto& [g, d] : v.witness) {
            nonzero = nonzero || !is_zero(d);
            const auto& img = images[rank(Shape(dims), g) - 1];
            for (std::size_t i = 0; i < n; ++i)
                combo[i] += d * img[i];
        }
        bool vanishes = std::all_of(combo.begin(), combo.end(), [](const Q& x) { return is_zero(x); });
        t.check(!v.is_tensor_product && v.failed == Criterion::span && nonzero && vanishes);
    }
}

void universal_factor_suite(Rng& rng, Tally& t) {
    for (const std::vector<std::size_t>& dims : std::vector<std::vector<std::size_t>>{{2, 3}, {2, 2, 2}}) {
        auto model = build_model<Q>(Shape(dims));
        for (int k = 0; k < 20; ++k) {
            std::size_t n = pick(rng, 1, 3);
            auto values = random_table<Q>(rng, product(dims), n);
            auto h = universal_factor(model, from_values<Q>(Shape(dims), n, values));
            for (int j = 0; j < 40; ++j) {
                auto xs = random_args<Q>(rng, dims);
                t.check(h.apply(pure(model, xs).coeffs) == brute_evaluate(dims, values, xs));
            }
        }
    }
}

void canonical_iso_inverse(Rng& rng, Tally& t) {
    for (int k = 0; k < 15; ++k) {
        auto dims = random_dims(rng, 3, 2);
        Shape s(dims);
        std::size_t n = s.size();
        TensorModel<Q> m1(s, random_invertible<Q>(rng, n)), m2(s, random_invertible<Q>(rng, n));
        auto fwd = canonical_isomorphism(m1, m2);
        auto back = canonical_isomorphism(m2, m1);
        bool ok = naive_matmul(back.matrix(), fwd.matrix()) == DenseMatrix<Q>::identity(n);
        auto b1 = m1.basis_matrix(), b2 = m2.basis_matrix();
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Q> col(n);
            for (std::size_t i = 0; i < n; ++i)
                col[i] = b1(i, j);
            auto img = naive_matvec(fwd.matrix(), col);
            for (std::size_t i = 0; i < n; ++i)
                ok = ok && img[i] == b2(i, j);
        }
        ok = ok && matrix_in_model_bases(fwd, m1, m2) == DenseMatrix<Q>::identity(n);
        t.check(ok);
    }
}

void subspace_restriction(Rng& rng, Tally& t) {
    for (int k = 0; k < 30; ++k) {
        auto dims = random_dims(rng, 3, 4);
        std::vector<std::vector<std::size_t>> subsets;
        for (std::size_t n : dims) {
            std::vector<std::size_t> d;
            for (std::size_t v = 1; v <= n; ++v)
                if (pick(rng, 0, 1))
                    d.push_back(v);
            if (d.empty())
                d.push_back(pick(rng, 1, n));
            subsets.push_back(d);
        }
        auto sp = subspace_product(build_model<Q>(Shape(dims)), subsets);
        std::vector<std::vector<Q>> sub_xs, full_xs;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            sub_xs.push_back(random_vector<Q>(rng, subsets[i].size()));
            std::vector<Q> full(dims[i], zero<Q>());
            for (std::size_t j = 0; j < subsets[i].size(); ++j)
                full[subsets[i][j] - 1] = sub_xs[i][j];
            full_xs.push_back(full);
        }
        auto embedded = sp.embedding.apply(pure(sp.sub_model, sub_xs).coeffs);
        t.check(embedded == brute_pure(dims, full_xs));
    }
}

void dual_eval_suite(Rng& rng, Tally& t) {
    for (int k = 0; k < 30; ++k) {
        auto dims = random_dims(rng, 3, 3);
        auto values = random_table<Q>(rng, product(dims), 1);
        auto phi = from_values<Q>(Shape(dims), 1, values);
        auto xs = random_args<Q>(rng, dims);
        auto model = build_model<Q>(Shape(dims));
        t.check(dual_eval(model, pure(model, xs), phi) == brute_evaluate(dims, values, xs)[0]);
    }
}

void regroup_suite(Rng& rng, Tally& t) {
    std::vector<std::size_t> dims{2, 2, 2};
    Shape s(dims);
    auto all = brute_enumerate(dims);
    for (std::size_t p = 1; p < 3; ++p) {
        Regrouping r(s, p);
        for (const auto& a : all)
            for (const auto& b : all) {
                auto [a1, a2] = r.split(as_index(a));
                auto [b1, b2] = r.split(as_index(b));
                bool pair_less = std::make_pair(rank(r.left(), a1), rank(r.right(), a2)) <
                                 std::make_pair(rank(r.left(), b1), rank(r.right(), b2));
                t.check(pair_less == (a < b) && r.join(a1, a2) == as_index(a));
            }
    }
    Regrouping r(s, 1);
    for (int k = 0; k < 20; ++k) {
        auto xs = random_args<Q>(rng, dims);
        auto inner = brute_pure<Q>({2, 2}, {xs[1], xs[2]});
        auto nested = brute_pure<Q>({2, 4}, {xs[0], inner});
        auto grouped = r.group(pure<Q>(s, xs));
        t.check(grouped.coeffs == nested && r.ungroup(grouped) == pure<Q>(s, xs));
    }
}

void matrix_of_composition(Rng& rng, Tally& t) {
    for (int k = 0; k < 20; ++k) {
        std::size_t nv = pick(rng, 1, 3), nw = pick(rng, 1, 3), nu = pick(rng, 1, 3);
        auto bw = random_invertible<Q>(rng, nw), bu = random_invertible<Q>(rng, nu);
        auto mt = random_matrix<Q>(rng, nw, nv), ms = random_matrix<Q>(rng, nu, nw);
        auto columns = [](const DenseMatrix<Q>& m) {
            std::vector<std::vector<Q>> cols(m.cols(), std::vector<Q>(m.rows()));
            for (std::size_t j = 0; j < m.cols(); ++j)
                for (std::size_t i = 0; i < m.rows(); ++i)
                    cols[j][i] = m(i, j);
            return cols;
        };
        auto t_mat = matrix_of<Q>(columns(mt), bw);
        auto s_mat = matrix_of<Q>(columns(naive_matmul(ms, bw)), bu);
        auto st_mat = matrix_of<Q>(columns(naive_matmul(ms, mt)), bu);
        t.check(st_mat == naive_matmul(s_mat, t_mat));
    }
}

// ---------------------------------------------------------------------------
// kronecker

std::vector<DenseMatrix<Q>> random_factors(Rng& rng, std::size_t m, std::size_t max_dim) {
    std::vector<DenseMatrix<Q>> f;
    for (std::size_t i = 0; i < m; ++i)
        f.push_back(random_matrix<Q>(rng, pick(rng, 1, max_dim), pick(rng, 1, max_dim)));
    return f;
}

void entry_dense(Rng& rng, Tally& t) {
    {
        std::vector<DenseMatrix<Q>> f{random_matrix<Q>(rng, 2, 3), random_matrix<Q>(rng, 3, 2)};
        KroneckerOperator<Q> k(f);
        auto dense = kron<Q>(f);
        auto ref = kron_by_digits(f);
        for (std::size_t r = 0; r < k.rows(); ++r)
            for (std::size_t c = 0; c < k.cols(); ++c) {
                auto mu = unrank(k.row_shape(), r + 1), kappa = unrank(k.col_shape(), c + 1);
                t.check(k.entry(mu, kappa) == ref(r, c) && dense.at(mu, kappa) == ref(r, c));
            }
    }
    for (int n = 0; n < 30; ++n) {
        auto f = random_factors(rng, pick(rng, 1, 3), 3);
        t.check(kron<Q>(f) == kron_by_digits(f));
    }
}

void matvec_dense(Rng& rng, Tally& t) {
    for (int n = 0; n < 10; ++n) {
        auto f = random_factors(rng, 3, 3);
        KroneckerOperator<Q> k(f);
        auto ref = kron_by_digits(f);
        for (int j = 0; j < 50; ++j) {
            auto x = random_vector<Q>(rng, k.cols());
            t.check(k.matvec(x) == naive_matvec(ref, x));
        }
    }
}

void factorized_product(Rng& rng, Tally& t) {
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            DenseMatrix<Q> ea(2, 2), eb(2, 2);
            ea.data()[a] = 1;
            eb.data()[b] = 1;
            t.check(factorized_matrix_product(ea, eb) == naive_matmul(ea, eb));
        }
    for (int n = 0; n < 30; ++n) {
        auto a = random_matrix<Q>(rng, 2, 3), b = random_matrix<Q>(rng, 3, 2);
        t.check(factorized_matrix_product(a, b) == naive_matmul(a, b));
    }
}

void simd_equivalence(Rng& rng, Tally& t) {
    using C = Complex64;
    for (int n = 0; n < 20; ++n) {
        std::vector<DenseMatrix<C>> f;
        std::size_t m = pick(rng, 1, 4);
        for (std::size_t i = 0; i < m; ++i)
            f.push_back(random_matrix<C>(rng, pick(rng, 1, 5), pick(rng, 1, 5)));
        KroneckerOperator<C> k(f);
        auto x = random_vector<C>(rng, k.cols());
        auto ref = k.matvec_with(x, kernels::Isa::scalar);
        for (auto isa : {kernels::Isa::avx2, kernels::Isa::neon}) {
            if (!kernels::isa_available(isa))
                continue;
            auto y = k.matvec_with(x, isa);
            bool same = y.size() == ref.size();
            for (std::size_t i = 0; same && i < y.size(); ++i)
                same = std::memcmp(&y[i], &ref[i], sizeof(C)) == 0;
            t.check(same);
        }
        t.check(k.matvec(x).size() == ref.size());
    }
}

// ---------------------------------------------------------------------------
// inner_product

G direct_form(const DenseMatrix<G>& g, const std::vector<G>& a, const std::vector<G>& b) {
    G s = zero<G>();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            s += a[i] * conj(b[j]) * g(i, j);
    return s;
}

void conj_homogeneity(Rng& rng, Tally& t) {
    for (int k = 0; k < 40; ++k) {
        std::size_t l = pick(rng, 1, 4), r = pick(rng, 1, 4);
        ConjugateBilinearForm<G> phi(random_matrix<G>(rng, l, r));
        auto a = random_vector<G>(rng, l), b = random_vector<G>(rng, r);
        G c = random_scalar<G>(rng);
        std::vector<G> cb, ca;
        for (const auto& x : b)
            cb.push_back(c * x);
        for (const auto& x : a)
            ca.push_back(c * x);
        G base = eval_form(phi, a, b);
        t.check(eval_form(phi, a, cb) == conj(c) * base && eval_form(phi, ca, b) == c * base &&
                base == direct_form(phi.gram(), a, b));
    }
}

void product_form_suite(Rng& rng, Tally& t) {
    std::vector<std::size_t> dims{2, 3};
    Shape s(dims);
    std::vector<ConjugateBilinearForm<G>> factors;
    for (std::size_t n : dims)
        factors.emplace_back(random_matrix<G>(rng, n, n));
    auto phi = product_form<G>(factors, s, s);
    for (int k = 0; k < 40; ++k) {
        auto xs = random_args<G>(rng, dims), ys = random_args<G>(rng, dims);
        G want = one<G>();
        for (std::size_t i = 0; i < dims.size(); ++i)
            want *= direct_form(factors[i].gram(), xs[i], ys[i]);
        t.check(eval_form(phi, brute_pure(dims, xs), brute_pure(dims, ys)) == want);
    }
}

void induced_suite(Rng& rng, Tally& t) {
    for (int k = 0; k < 30; ++k) {
        auto dims = random_dims(rng, 3, 3);
        auto phi = induced_inner_product<G>(Shape(dims));
        auto xs = random_args<G>(rng, dims), ys = random_args<G>(rng, dims);
        G want = one<G>();
        for (std::size_t i = 0; i < dims.size(); ++i) {
            G s = zero<G>();
            for (std::size_t j = 0; j < dims[i]; ++j)
                s += xs[i][j] * conj(ys[i][j]);
            want *= s;
        }
        t.check(phi(brute_pure(dims, xs), brute_pure(dims, ys)) == want);
    }
}

void positive_suite(Rng& rng, Tally& t) {
    std::vector<std::size_t> dims{2, 3};
    auto phi = induced_inner_product<G>(Shape(dims));
    for (int k = 0; k < 50; ++k) {
        auto a = random_vector<G>(rng, 6);
        if (std::all_of(a.begin(), a.end(), [](const G& x) { return is_zero(x); }))
            a[0] = one<G>();
        G v = phi(a, a);
        Q norm2 = 0;
        for (const auto& c : a)
            norm2 += c.re * c.re + c.im * c.im;
        t.check(sgn(v.im) == 0 && sgn(v.re) > 0 && v.re == norm2);
    }
    std::vector<G> z(6, zero<G>());
    t.check(is_zero(phi(z, z)));
}

// ---------------------------------------------------------------------------
// direct_sum

std::vector<OrderedSetPartition> small_example_parts() {
    return {OrderedSetPartition(3, {{1, 3}, {2}}), OrderedSetPartition(4, {{2, 4}, {1, 3}})};
}

void reassembly(Rng& rng, Tally& t) {
    auto d = decompose(build_model<Q>(Shape{3, 4}), small_example_parts());
    for (int k = 0; k < 50; ++k) {
        auto x = make_tensor<Q>(Shape{3, 4}, random_vector<Q>(rng, 12));
        // Each coordinate lands in exactly one projection.
        std::vector<std::size_t> hits(12, 0);
        for (const auto& s : d.summands())
            for (IndexCounter c(s.product.sub_model.shape()); !c.done(); c.next())
                ++hits[offset(Shape{3, 4}, s.product.parent_index(c.current()))];
        bool ok = std::all_of(hits.begin(), hits.end(), [](std::size_t h) { return h == 1; });
        t.check(ok && d.reassemble(x) == x);
    }
}

void pure_projection(Rng& rng, Tally& t) {
    std::vector<std::size_t> dims{3, 4};
    auto parts = small_example_parts();
    auto d = decompose(build_model<Q>(Shape(dims)), parts);
    for (const auto& s : d.summands()) {
        for (int k = 0; k < 10; ++k) {
            std::vector<std::vector<Q>> xs;
            for (std::size_t i = 0; i < dims.size(); ++i) {
                std::vector<Q> v(dims[i], zero<Q>());
                for (std::size_t e : parts[i].block(s.alpha[i]))
                    v[e - 1] = random_rational(rng);
                xs.push_back(v);
            }
            auto x = make_tensor<Q>(Shape(dims), brute_pure(dims, xs));
            bool ok = d.embed(s.alpha, d.project(x, s.alpha)) == x;
            for (const auto& other : d.summands()) {
                if (other.alpha == s.alpha)
                    continue;
                auto p = d.project(x, other.alpha);
                ok = ok && std::all_of(p.coeffs.begin(), p.coeffs.end(), [](const Q& c) { return is_zero(c); });
            }
            t.check(ok);
        }
    }
}

void support_containment(Rng& rng, Tally& t) {
    auto labels = rows_cols_lex_example();
    for (int k = 0; k < 20; ++k) {
        Q c1 = random_rational(rng), c3 = random_rational(rng);
        std::vector<DenseMatrix<Q>> f{DenseMatrix<Q>(2, 1, {c1, 0}), random_matrix<Q>(rng, 2, 2),
                                      DenseMatrix<Q>(1, 2, {c3, 0}), random_matrix<Q>(rng, 2, 2)};
        auto dense = kron_by_digits(f);
        bool ok = true;
        for (std::size_t r = 0; r < dense.rows(); ++r)
            for (std::size_t c = 0; c < dense.cols(); ++c) {
                auto mu = unrank(labels.row_shape(), r + 1), kappa = unrank(labels.col_shape(), c + 1);
                if (labels.label(mu, kappa) != 0 && !is_zero(dense(r, c)))
                    ok = false;
            }
        t.check(ok);
    }
}

// ---------------------------------------------------------------------------
// combinatorics

bool refines_by_pairs(const SetPartition& x, const SetPartition& y) {
    for (std::size_t a = 1; a <= x.ground(); ++a)
        for (std::size_t b = 1; b <= x.ground(); ++b)
            if (x.block_of(a) == x.block_of(b) && y.block_of(a) != y.block_of(b))
                return false;
    return true;
}

void stirling_bell(Rng&, Tally& t) {
    for (std::size_t n = 1; n <= 8; ++n) {
        auto all = enumerate_partitions(n);
        std::map<std::size_t, std::uint64_t> by_k;
        for (const auto& p : all)
            ++by_k[p.block_count()];
        std::uint64_t total = 0;
        bool ok = std::set<SetPartition>(all.begin(), all.end()).size() == all.size();
        for (std::size_t k = 1; k <= n; ++k) {
            ok = ok && by_k[k] == stirling2(n, k) && enumerate_partitions(n, k).size() == stirling2(n, k);
            total += stirling2(n, k);
        }
        t.check(ok && all.size() == bell(n) && total == bell(n));
    }
}

void function_counts(Rng&, Tally& t) {
    for (auto cls : {FunctionClass::snc, FunctionClass::wnc, FunctionClass::inj, FunctionClass::per})
        for (std::size_t n = 0; n <= 6; ++n)
            for (std::size_t p = 0; p <= 6; ++p) {
                // Filter all p^n functions independently of the pruned enumeration.
                std::vector<std::vector<std::size_t>> want;
                if (n == 0) {
                    if (cls != FunctionClass::per || p == 0)
                        want.emplace_back();
                }
                else if (p > 0)
                    for (const auto& f : brute_enumerate(std::vector<std::size_t>(n, p))) {
                        bool in = true;
                        for (std::size_t i = 0; i + 1 < n; ++i) {
                            if (cls == FunctionClass::snc && f[i] >= f[i + 1])
                                in = false;
                            if (cls == FunctionClass::wnc && f[i] > f[i + 1])
                                in = false;
                        }
                        if (cls == FunctionClass::inj || cls == FunctionClass::per)
                            in = std::set<std::size_t>(f.begin(), f.end()).size() == n;
                        if (cls == FunctionClass::per && p != n)
                            in = false;
                        if (in)
                            want.push_back(f);
                    }
                auto got = enumerate_functions(cls, n, p);
                bool ok = got.size() == want.size() && count_functions(cls, n, p) == want.size();
                for (std::size_t k = 0; ok && k < got.size(); ++k)
                    ok = got[k].values() == want[k];
                t.check(ok);
            }
}

void hasse_covers(Rng&, Tally& t) {
    for (std::size_t n = 1; n <= 4; ++n) {
        auto h = covering_edges(n);
        const auto& v = h.vertices;
        std::set<std::pair<std::size_t, std::size_t>> covers(h.covers.begin(), h.covers.end());
        for (std::size_t x = 0; x < v.size(); ++x)
            for (std::size_t y = 0; y < v.size(); ++y) {
                bool below = x != y && refines_by_pairs(v[x], v[y]);
                bool between = false;
                for (std::size_t z = 0; z < v.size() && below; ++z)
                    if (z != x && z != y && refines_by_pairs(v[x], v[z]) && refines_by_pairs(v[z], v[y]))
                        between = true;
                t.check(covers.count({x, y}) == (below && !between ? 1u : 0u));
            }
    }
    auto h = covering_edges(3);
    std::size_t unit = 0;
    for (std::size_t i = 0; i < h.vertices.size(); ++i)
        if (h.vertices[i] == SetPartition::unit(3))
            unit = i;
    std::size_t below_unit = 0;
    for (auto [x, y] : h.covers)
        if (y == unit && h.vertices[x].block_count() == 2)
            ++below_unit;
    t.check(below_unit == 3);
}

void position_rank_suite(Rng& rng, Tally& t) {
    for (int k = 0; k < 100; ++k) {
        std::size_t lambda = pick(rng, 1, 10);
        std::vector<std::size_t> s;
        for (std::size_t v = 1; v <= lambda; ++v)
            if (pick(rng, 0, 1))
                s.push_back(v);
        std::size_t x = pick(rng, 1, lambda);
        std::size_t at_most = 0, below = 0;
        for (std::size_t v : s) {
            at_most += v <= x;
            below += v < x;
        }
        auto pr = position_rank(lambda, s, x);
        t.check(pr.position == at_most && pr.rank == below);
    }
}

using SuiteFn = void (*)(Rng&, Tally&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"scalars.conj_involution", conj_involution},
        {"scalars.field_axioms", field_axioms},
        {"index_space.rank_unrank", rank_enumeration},
        {"index_space.concat_monotone", concat_monotone},
        {"multilinear.evaluate", evaluate_direct_sum},
        {"multilinear.basis_functional", basis_functional_product},
        {"multilinear.reconstruction", reconstruction},
        {"multilinear.component_recombination", component_recombination},
        {"multilinear.product_sum_interchange", interchange},
        {"tensor.pure", pure_product},
        {"tensor.verify", verify_invertible},
        {"tensor.universal_factor", universal_factor_suite},
        {"tensor.canonical_isomorphism", canonical_iso_inverse},
        {"tensor.subspace_product", subspace_restriction},
        {"tensor.dual_eval", dual_eval_suite},
        {"tensor.regroup", regroup_suite},
        {"tensor.matrix_of", matrix_of_composition},
        {"kronecker.entry", entry_dense},
        {"kronecker.matvec", matvec_dense},
        {"kronecker.factorized_product", factorized_product},
        {"kronecker.simd_kernels", simd_equivalence},
        {"inner_product.conjugate_homogeneity", conj_homogeneity},
        {"inner_product.product_form", product_form_suite},
        {"inner_product.induced", induced_suite},
        {"inner_product.positive_definite", positive_suite},
        {"direct_sum.reassembly", reassembly},
        {"direct_sum.pure_projection", pure_projection},
        {"direct_sum.support", support_containment},
        {"combinatorics.stirling_bell", stirling_bell},
        {"combinatorics.function_counts", function_counts},
        {"combinatorics.covering", hasse_covers},
        {"combinatorics.position_rank", position_rank_suite},
    };
    return r;
}

} // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry())
        out.push_back(name);
    return out;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
    for (const auto& [n, fn] : registry())
        if (n == name) {
            // Each suite gets its own stream so adding one does not shift the others.
            std::uint32_t h = 2166136261u;
            for (unsigned char ch : name)
                h = (h ^ ch) * 16777619u;
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), h};
            Rng rng(seq);
            Tally t;
            t.r.name = name;
            fn(rng, t);
            return t.r;
        }
    throw RangeError("oracle", "unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_all(std::uint64_t seed) {
    std::vector<SuiteResult> out;
    for (const auto& name : suite_names())
        out.push_back(run_suite(name, seed));
    return out;
}

} // namespace kronlab::oracle
