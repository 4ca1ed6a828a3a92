#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kronlab/combinatorics.hpp"
#include "kronlab/direct_sum.hpp"
#include "kronlab/index_space.hpp"
#include "kronlab/inner_product.hpp"
#include "kronlab/json_io.hpp"
#include "kronlab/kronecker.hpp"
#include "kronlab/oracle.hpp"
#include "kronlab/scalars.hpp"
#include "kronlab/tensor.hpp"

namespace kronlab::cli {

namespace {

using json_io::Json;

template <class F>
int with_backend(Backend b, F&& f) {
    switch (b) {
    case Backend::rational: return f.template operator()<Rational>();
    case Backend::gaussian: return f.template operator()<Gaussian>();
    case Backend::complex64: return f.template operator()<Complex64>();
    }
    return 1;
}

Backend default_backend() {
    if (const char* env = std::getenv("KRONLAB_BACKEND"); env && *env)
        return parse_backend(env);
    return Backend::rational;
}

/// "1,3|2" -> {{1,3},{2}}
std::vector<std::vector<std::size_t>> parse_blocks(const std::string& text) {
    std::vector<std::vector<std::size_t>> blocks(1);
    std::string num;
    auto flush = [&] {
        if (num.empty())
            throw ParseError("cli", "malformed partition '" + text + "'");
        blocks.back().push_back(std::stoul(num));
        num.clear();
    };
    for (char c : text) {
        if (c >= '0' && c <= '9')
            num += c;
        else if (c == ',')
            flush();
        else if (c == '|') {
            flush();
            blocks.emplace_back();
        } else if (c != ' ')
            throw ParseError("cli", "malformed partition '" + text + "'");
    }
    flush();
    return blocks;
}

std::vector<OrderedSetPartition> parse_parts(const std::vector<std::string>& texts, const Shape& shape,
                                             const char* what) {
    if (texts.size() != shape.arity())
        throw PartitionError("cli", std::string(what) + ": need one partition per axis (" +
                                        std::to_string(shape.arity()) + "), got " + std::to_string(texts.size()));
    std::vector<OrderedSetPartition> parts;
    for (std::size_t i = 0; i < texts.size(); ++i)
        parts.emplace_back(shape[i], parse_blocks(texts[i]));
    return parts;
}

void print(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

template <Field T>
std::vector<DenseMatrix<T>> read_matrices(const std::vector<std::string>& files) {
    std::vector<DenseMatrix<T>> out;
    for (const auto& f : files)
        out.push_back(json_io::matrix_from<T>(json_io::read_file(f)));
    return out;
}

Json shape_labels(const Shape& s) {
    Json out = Json::array();
    for (const auto& g : enumerate(s))
        out.push_back(json_io::index_to(g));
    return out;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"kronlab: tensor products, Kronecker operators and partition-induced decompositions"};
    app.require_subcommand(1);
    std::string backend_text;
    app.add_option("--backend", backend_text, "rational | gaussian | complex64 (default: $KRONLAB_BACKEND or rational)");
    app.fallthrough();

    // gamma
    auto* gamma = app.add_subcommand("gamma", "enumerate Γ(n1,...,nm), or rank/unrank one index");
    std::vector<std::size_t> g_shape, g_index;
    std::size_t g_unrank = 0;
    gamma->add_option("--shape", g_shape, "dimensions, e.g. 2,3")->delimiter(',')->required();
    auto* g_rank_opt = gamma->add_option("--rank", g_index, "1-based lex rank of this index")->delimiter(',');
    auto* g_unrank_opt = gamma->add_option("--unrank", g_unrank, "index at this 1-based rank");
    g_rank_opt->excludes(g_unrank_opt);

    // kron
    auto* kron_cmd = app.add_subcommand("kron", "Kronecker product of matrix files");
    std::vector<std::string> k_files;
    bool k_lazy = false, k_labels = false;
    std::string k_matvec;
    kron_cmd->add_option("factors", k_files, "factor matrices (JSON)")->required()->check(CLI::ExistingFile);
    kron_cmd->add_flag("--lazy", k_lazy, "use the factored operator instead of the dense product");
    kron_cmd->add_option("--matvec", k_matvec, "apply the product to this vector (JSON array)")
        ->check(CLI::ExistingFile);
    kron_cmd->add_flag("--labels", k_labels, "include composite row/column labels");

    // matvec
    auto* matvec_cmd = app.add_subcommand("matvec", "apply A1 ⊗ ... ⊗ Am to a vector without forming it");
    std::vector<std::string> mv_files;
    std::string mv_x;
    matvec_cmd->add_option("factors", mv_files, "factor matrices (JSON)")->required()->check(CLI::ExistingFile);
    matvec_cmd->add_option("--x", mv_x, "input vector (JSON array)")->required()->check(CLI::ExistingFile);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check whether a ν table defines a tensor product");
    std::string v_file;
    std::optional<std::size_t> v_ambient;
    verify_cmd->add_option("nu", v_file, "ν table (JSON)")->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("--ambient", v_ambient, "dimension of P (default: the table's ambientDim)");

    // factor
    auto* factor_cmd = app.add_subcommand("factor", "universal factorization h_φ of a multilinear map");
    std::vector<std::string> f_files;
    std::string f_args;
    bool f_matmul = false;
    factor_cmd->add_option("inputs", f_files, "φ (JSON), or two matrices with --matmul")
        ->required()
        ->check(CLI::ExistingFile);
    factor_cmd->add_option("--args", f_args, "argument vectors (JSON array of arrays) to evaluate both ways")
        ->check(CLI::ExistingFile);
    factor_cmd->add_flag("--matmul", f_matmul, "compute AB as h_φ(A ⊗ B) with φ = matrix multiplication");

    // inner
    auto* inner_cmd = app.add_subcommand("inner", "evaluate a conjugate bilinear form on two tensors");
    std::vector<std::string> i_files, i_forms;
    std::string i_gram;
    inner_cmd->add_option("tensors", i_files, "two tensors (JSON)")->expected(2)->required()->check(CLI::ExistingFile);
    auto* i_gram_opt = inner_cmd->add_option("--gram", i_gram, "Gram table over the whole index space")
                           ->check(CLI::ExistingFile);
    auto* i_forms_opt =
        inner_cmd->add_option("--forms", i_forms, "one Gram table per factor")->check(CLI::ExistingFile);
    i_gram_opt->excludes(i_forms_opt);

    // decompose
    auto* decompose_cmd = app.add_subcommand("decompose", "direct-sum decomposition induced by axis partitions");
    std::vector<std::size_t> d_shape;
    std::vector<std::string> d_parts;
    std::string d_tensor;
    bool d_members = false;
    decompose_cmd->add_option("--shape", d_shape, "dimensions, e.g. 2,4,2,4")->delimiter(',')->required();
    decompose_cmd->add_option("--part", d_parts, "ordered partition per axis, blocks split by '|', e.g. 1,3|2")
        ->required();
    decompose_cmd->add_option("--tensor", d_tensor, "also project this tensor (JSON)")->check(CLI::ExistingFile);
    decompose_cmd->add_flag("--members", d_members, "list the indices of every block");

    // blocks
    auto* blocks_cmd = app.add_subcommand("blocks", "label the block support pattern of a Kronecker product");
    std::string b_example;
    std::vector<std::size_t> b_rows, b_cols;
    std::vector<std::string> b_row_parts, b_col_parts;
    blocks_cmd->add_option("--example", b_example, "built-in configuration: rwsclmslex")
        ->check(CLI::IsMember({"rwsclmslex"}));
    blocks_cmd->add_option("--rows", b_rows, "row dimensions p_i")->delimiter(',');
    blocks_cmd->add_option("--cols", b_cols, "column dimensions q_i")->delimiter(',');
    blocks_cmd->add_option("--row-part", b_row_parts, "partition of each row axis");
    blocks_cmd->add_option("--col-part", b_col_parts, "partition of each column axis");

    // partitions
    auto* partitions_cmd = app.add_subcommand("partitions", "set partitions of {1..n} and their refinement order");
    std::size_t p_n = 0;
    std::optional<std::size_t> p_k;
    bool p_hasse = false, p_dot = false;
    partitions_cmd->add_option("--n", p_n, "ground set size")->required();
    partitions_cmd->add_option("--k", p_k, "only partitions with k blocks");
    partitions_cmd->add_flag("--hasse", p_hasse, "covering relation of the refinement order (n <= 6)");
    partitions_cmd->add_flag("--dot", p_dot, "with --hasse: DOT digraph");

    // counts
    auto* counts_cmd = app.add_subcommand("counts", "sizes of SNC, WNC, INJ and PER from {1..n} to {1..p}");
    std::size_t c_n = 0, c_p = 0;
    std::string c_list;
    counts_cmd->add_option("--n", c_n, "domain size")->required();
    counts_cmd->add_option("--p", c_p, "range size")->required();
    counts_cmd->add_option("--list", c_list, "enumerate one class: snc | wnc | inj | per");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "run the randomized brute-force check suites");
    bool o_all = false, o_names = false;
    std::vector<std::string> o_suites;
    std::uint64_t o_seed = 7;
    oracle_cmd->add_flag("--all", o_all, "run every suite");
    oracle_cmd->add_option("--suite", o_suites, "run the named suite");
    oracle_cmd->add_option("--seed", o_seed, "random seed (default 7)");
    oracle_cmd->add_flag("--list", o_names, "list suite names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        Backend backend = backend_text.empty() ? default_backend() : parse_backend(backend_text);

        if (gamma->parsed()) {
            Shape s(g_shape);
            Json j;
            j["shape"] = json_io::shape_to(s);
            if (!g_index.empty())
                j["rank"] = rank(s, MultiIndex(g_index));
            else if (g_unrank_opt->count())
                j["index"] = json_io::index_to(unrank(s, g_unrank));
            else
                j["indices"] = shape_labels(s);
            print(out, j);
            return 0;
        }

        if (kron_cmd->parsed()) {
            return with_backend(backend, [&]<class T>() {
                auto factors = read_matrices<T>(k_files);
                if (!k_matvec.empty()) {
                    auto x = json_io::vector_from<T>(json_io::read_file(k_matvec));
                    std::vector<T> y = k_lazy ? KroneckerOperator<T>(factors).matvec(x) : kron<T>(factors) * x;
                    print(out, json_io::vector_to<T>(y));
                    return 0;
                }
                DenseMatrix<T> m = k_lazy ? DenseMatrix<T>() : kron<T>(factors);
                if (k_lazy) {
                    KroneckerOperator<T> op(factors);
                    m = DenseMatrix<T>(op.rows(), op.cols());
                    std::size_t r = 0;
                    for (IndexCounter mu(op.row_shape()); !mu.done(); mu.next(), ++r) {
                        std::size_t c = 0;
                        for (IndexCounter kappa(op.col_shape()); !kappa.done(); kappa.next(), ++c)
                            m(r, c) = op.entry(mu.current(), kappa.current());
                    }
                    m.set_labels(op.row_shape(), op.col_shape());
                }
                Json j = json_io::matrix_to(m);
                if (k_labels) {
                    j["rowLabels"] = shape_labels(*m.row_labels());
                    j["colLabels"] = shape_labels(*m.col_labels());
                }
                print(out, j);
                return 0;
            });
        }

        if (matvec_cmd->parsed()) {
            return with_backend(backend, [&]<class T>() {
                KroneckerOperator<T> op(read_matrices<T>(mv_files));
                auto x = json_io::vector_from<T>(json_io::read_file(mv_x));
                print(out, json_io::vector_to<T>(op.matvec(x)));
                return 0;
            });
        }

        if (verify_cmd->parsed()) {
            return with_backend(backend, [&]<class T>() {
                auto nu = json_io::nu_from<T>(json_io::read_file(v_file));
                auto v = verify_tensor_product(nu, v_ambient.value_or(nu.ambient()));
                Json j;
                j["isTensorProduct"] = v.is_tensor_product;
                j["failedCriterion"] = std::string(criterion_name(v.failed));
                j["spanOk"] = v.span_ok;
                j["dimensionOk"] = v.dimension_ok;
                j["rank"] = v.rank;
                Json w = Json::array();
                for (const auto& [g, d] : v.witness)
                    w.push_back({{"index", json_io::index_to(g)}, {"coeff", json_io::scalar_to<T>(d)}});
                j["witness"] = std::move(w);
                print(out, j);
                return 0;
            });
        }

        if (factor_cmd->parsed()) {
            return with_backend(backend, [&]<class T>() {
                if (f_matmul) {
                    if (f_files.size() != 2)
                        throw ShapeError("cli", "--matmul takes exactly two matrices");
                    auto ms = read_matrices<T>(f_files);
                    print(out, json_io::matrix_to(factorized_matrix_product(ms[0], ms[1])));
                    return 0;
                }
                if (f_files.size() != 1)
                    throw ShapeError("cli", "factor takes one multilinear map");
                auto phi = json_io::multilinear_from<T>(json_io::read_file(f_files[0]));
                auto model = build_model<T>(phi.shape());
                auto h = universal_factor(model, phi);
                Json j;
                j["h"] = json_io::matrix_to(h.matrix());
                if (!f_args.empty()) {
                    auto xs = json_io::rows_from<T>(json_io::read_file(f_args));
                    auto via_h = h.apply(pure(model, xs).coeffs);
                    auto direct = evaluate(phi, xs);
                    j["hOfPure"] = json_io::vector_to<T>(via_h);
                    j["evaluate"] = json_io::vector_to<T>(direct);
                    bool agree = true;
                    for (std::size_t k = 0; k < direct.size(); ++k)
                        agree = agree && near(via_h[k], direct[k], 1e-12);
                    j["agree"] = agree;
                }
                print(out, j);
                return 0;
            });
        }

        if (inner_cmd->parsed()) {
            return with_backend(backend, [&]<class T>() {
                auto a = json_io::tensor_from<T>(json_io::read_file(i_files[0]));
                auto b = json_io::tensor_from<T>(json_io::read_file(i_files[1]));
                std::optional<ConjugateBilinearForm<T>> phi;
                if (!i_gram.empty())
                    phi.emplace(json_io::matrix_from<T>(json_io::read_file(i_gram)));
                else if (!i_forms.empty()) {
                    std::vector<ConjugateBilinearForm<T>> fs;
                    for (const auto& f : i_forms)
                        fs.emplace_back(json_io::matrix_from<T>(json_io::read_file(f)));
                    phi.emplace(product_form<T>(fs, a.shape, b.shape));
                } else {
                    if (!(a.shape == b.shape))
                        throw ShapeError("inner_product", "tensors over Γ" + to_string(a.shape) + " and Γ" +
                                                              to_string(b.shape));
                    phi.emplace(induced_inner_product<T>(a.shape).form());
                }
                auto rep = check_inner_product(phi->gram());
                Json j;
                j["value"] = json_io::scalar_to<T>(eval_form(*phi, a.coeffs, b.coeffs));
                j["isInnerProduct"] = rep.ok();
                print(out, j);
                return 0;
            });
        }

        if (decompose_cmd->parsed()) {
            return with_backend(backend, [&]<class T>() {
                Shape s(d_shape);
                auto d = decompose(build_model<T>(s), parse_parts(d_parts, s, "decompose"));
                std::optional<Tensor<T>> t;
                if (!d_tensor.empty())
                    t = json_io::tensor_from<T>(json_io::read_file(d_tensor));
                Json j;
                j["shape"] = json_io::shape_to(s);
                j["blockShape"] = json_io::shape_to(d.blocks().block_shape());
                Json sums = Json::array();
                std::size_t total = 0;
                for (const auto& sm : d.summands()) {
                    Json e;
                    e["alpha"] = json_io::index_to(sm.alpha);
                    e["dim"] = sm.dim();
                    total += sm.dim();
                    if (d_members) {
                        Json m = Json::array();
                        for (const auto& g : d.blocks().block(sm.alpha))
                            m.push_back(json_io::index_to(g));
                        e["members"] = std::move(m);
                    }
                    if (t)
                        e["projection"] = json_io::tensor_to(d.project(*t, sm.alpha));
                    sums.push_back(std::move(e));
                }
                j["summands"] = std::move(sums);
                j["totalDim"] = total;
                if (t)
                    j["reassembles"] = d.reassemble(*t) == *t;
                print(out, j);
                return 0;
            });
        }

        if (blocks_cmd->parsed()) {
            if (!b_example.empty()) {
                out << rows_cols_lex_example().render();
                return 0;
            }
            if (b_rows.empty() || b_cols.empty())
                throw ParseError("cli", "blocks needs --example or --rows/--cols with --row-part/--col-part");
            Shape rs(b_rows), cs(b_cols);
            auto m = block_label_matrix(rs, cs, parse_parts(b_row_parts, rs, "row"),
                                        parse_parts(b_col_parts, cs, "column"));
            out << m.render();
            return 0;
        }

        if (partitions_cmd->parsed()) {
            if (p_dot && !p_hasse)
                throw ParseError("cli", "--dot requires --hasse");
            if (p_hasse) {
                if (p_k)
                    throw ParseError("cli", "--k cannot be combined with --hasse");
                auto h = covering_edges(p_n);
                if (p_dot) {
                    out << h.to_dot();
                } else {
                    for (auto [x, y] : h.covers)
                        out << h.vertices[x].to_string() << " < " << h.vertices[y].to_string() << '\n';
                }
                return 0;
            }
            for (const auto& p : enumerate_partitions(p_n, p_k))
                out << p.to_string() << '\n';
            return 0;
        }

        if (counts_cmd->parsed()) {
            if (!c_list.empty()) {
                for (const auto& f : enumerate_functions(parse_function_class(c_list), c_n, c_p)) {
                    for (std::size_t k = 0; k < f.values().size(); ++k)
                        out << (k ? " " : "") << f.values()[k];
                    out << '\n';
                }
                return 0;
            }
            for (auto cls : {FunctionClass::snc, FunctionClass::wnc, FunctionClass::inj, FunctionClass::per})
                out << function_class_name(cls) << ' ' << count_functions(cls, c_n, c_p) << '\n';
            return 0;
        }

        if (oracle_cmd->parsed()) {
            if (o_names) {
                for (const auto& n : oracle::suite_names())
                    out << n << '\n';
                return 0;
            }
            if (!o_all && o_suites.empty())
                throw ParseError("cli", "oracle needs --all, --suite NAME or --list");
            std::vector<oracle::SuiteResult> results;
            if (o_all)
                results = oracle::run_all(o_seed);
            else
                for (const auto& n : o_suites)
                    results.push_back(oracle::run_suite(n, o_seed));
            std::size_t cases = 0, passed = 0, failing = 0;
            for (const auto& r : results) {
                out << (r.ok() ? "PASS " : "FAIL ") << r.name << ' ' << r.passed << '/' << r.cases << '\n';
                cases += r.cases;
                passed += r.passed;
                failing += !r.ok();
            }
            out << "seed " << o_seed << ": " << results.size() - failing << '/' << results.size() << " suites, "
                << passed << '/' << cases << " cases\n";
            return failing ? 1 : 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace kronlab::cli
