#pragma once

// JSON interchange for the CLI.
//
//   scalar      "1/2", 3, "1-2i" for exact backends; [re, im] or a number for complex64
//   vector      [s, s, ...]
//   matrix      {"rows": r, "cols": c, "data": [...]}   row-major; "data" may also be nested rows
//   tensor      {"shape": [...], "coeffs": [...]}
//   multilinear {"shape": [...], "targetDim": n, "values": [[...], ...]}   one row per γ in lex order
//   nu table    {"shape": [...], "ambientDim": n, "values": [[...], ...]}
//   gram table  same layout as a matrix

#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "kronlab/index_space.hpp"
#include "kronlab/matrix.hpp"
#include "kronlab/multilinear.hpp"
#include "kronlab/scalars.hpp"
#include "kronlab/tensor.hpp"

namespace kronlab::json_io {

using Json = nlohmann::ordered_json;

Json read_file(const std::string& path);
Json parse_text(const std::string& text);

template <Field T>
T scalar_from(const Json& j);
template <Field T>
Json scalar_to(const T& v);

template <>
Rational scalar_from<Rational>(const Json& j);
template <>
Gaussian scalar_from<Gaussian>(const Json& j);
template <>
Complex64 scalar_from<Complex64>(const Json& j);
template <>
Json scalar_to<Rational>(const Rational& v);
template <>
Json scalar_to<Gaussian>(const Gaussian& v);
template <>
Json scalar_to<Complex64>(const Complex64& v);

std::size_t count_from(const Json& j, const char* key);
Shape shape_from(const Json& j);
Json shape_to(const Shape& s);
MultiIndex index_from(const Json& j);
Json index_to(const MultiIndex& g);

template <Field T>
std::vector<T> vector_from(const Json& j) {
    if (!j.is_array())
        throw ParseError("json", "expected an array of scalars");
    std::vector<T> v;
    v.reserve(j.size());
    for (const auto& e : j)
        v.push_back(scalar_from<T>(e));
    return v;
}

template <Field T>
Json vector_to(const std::vector<T>& v) {
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(scalar_to<T>(x));
    return out;
}

template <Field T>
DenseMatrix<T> matrix_from(const Json& j) {
    if (j.is_array()) {
        std::vector<std::vector<T>> rows;
        for (const auto& r : j)
            rows.push_back(vector_from<T>(r));
        return DenseMatrix<T>::from_rows(rows);
    }
    if (!j.is_object() || !j.contains("data"))
        throw ParseError("json", "matrix needs \"rows\", \"cols\" and \"data\"");
    const Json& d = j.at("data");
    if (!d.is_array())
        throw ParseError("json", "matrix \"data\" must be an array");
    // Flat when it holds rows*cols scalars; otherwise one array per row.
    bool flat = j.contains("rows") && j.contains("cols") && d.size() == count_from(j, "rows") * count_from(j, "cols") &&
                (d.empty() || !d.front().is_array() || std::is_same_v<T, Complex64>);
    if (!flat) {
        auto m = matrix_from<T>(d);
        if (j.contains("rows") && (count_from(j, "rows") != m.rows() || count_from(j, "cols") != m.cols()))
            throw ShapeError("json", "matrix data does not match rows/cols");
        return m;
    }
    std::size_t r = count_from(j, "rows"), c = count_from(j, "cols");
    return DenseMatrix<T>(r, c, vector_from<T>(d));
}

template <Field T>
Json matrix_to(const DenseMatrix<T>& m) {
    Json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["data"] = vector_to<T>(std::vector<T>(m.data().begin(), m.data().end()));
    return out;
}

template <Field T>
Tensor<T> tensor_from(const Json& j) {
    return make_tensor<T>(shape_from(j.at("shape")), vector_from<T>(j.at("coeffs")));
}

template <Field T>
Json tensor_to(const Tensor<T>& t) {
    Json out;
    out["shape"] = shape_to(t.shape);
    out["coeffs"] = vector_to<T>(t.coeffs);
    return out;
}

template <Field T>
std::vector<std::vector<T>> rows_from(const Json& j) {
    if (!j.is_array())
        throw ParseError("json", "expected an array of value rows");
    std::vector<std::vector<T>> rows;
    for (const auto& r : j)
        rows.push_back(vector_from<T>(r));
    return rows;
}

template <Field T>
Json rows_to(const std::vector<std::vector<T>>& rows) {
    Json out = Json::array();
    for (const auto& r : rows)
        out.push_back(vector_to<T>(r));
    return out;
}

template <Field T>
MultilinearMap<T> multilinear_from(const Json& j) {
    if (!j.contains("shape") || !j.contains("targetDim") || !j.contains("values"))
        throw ParseError("json", "multilinear map needs \"shape\", \"targetDim\" and \"values\"");
    return from_values<T>(shape_from(j.at("shape")), count_from(j, "targetDim"), rows_from<T>(j.at("values")));
}

template <Field T>
Json multilinear_to(const MultilinearMap<T>& f) {
    Json out;
    out["shape"] = shape_to(f.shape());
    out["targetDim"] = f.target_dim();
    Json values = Json::array();
    for (std::size_t k = 0; k < f.shape().size(); ++k) {
        auto s = f.value_at(k);
        values.push_back(vector_to<T>(std::vector<T>(s.begin(), s.end())));
    }
    out["values"] = std::move(values);
    return out;
}

template <Field T>
NuTable<T> nu_from(const Json& j) {
    if (!j.contains("shape") || !j.contains("ambientDim") || !j.contains("values"))
        throw ParseError("json", "ν table needs \"shape\", \"ambientDim\" and \"values\"");
    return NuTable<T>(shape_from(j.at("shape")), count_from(j, "ambientDim"), rows_from<T>(j.at("values")));
}

template <Field T>
Json nu_to(const NuTable<T>& nu) {
    Json out;
    out["shape"] = shape_to(nu.shape());
    out["ambientDim"] = nu.ambient();
    out["values"] = rows_to<T>(nu.images());
    return out;
}

} // namespace kronlab::json_io
