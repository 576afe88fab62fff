#include "s3modes/serialize.hpp"

#include <charconv>
#include <sstream>

#include "s3modes/error.hpp"

namespace s3modes {

using nlohmann::json;

namespace {

double number(const json& j) {
    if (!j.is_number()) throw DomainError("expected a number in JSON, got " + j.dump());
    return j.get<double>();
}

std::complex<double> complex_from_json(const json& j) {
    if (j.is_number()) return number(j);
    if (!j.is_array() || j.size() != 2) throw DomainError("expected [re, im] in JSON, got " + j.dump());
    return {number(j[0]), number(j[1])};
}

void require_length(const json& j, std::size_t n, const char* what) {
    if (!j.is_array() || j.size() != n) {
        throw DomainError(std::string(what) + ": expected an array of length " + std::to_string(n));
    }
}

}  // namespace

json to_json(const std::complex<double>& z) { return json::array({z.real(), z.imag()}); }

json to_json(const Quaternion& q) { return json::array({q[0], q[1], q[2], q[3]}); }

json to_json(const ComplexQuaternion& q) {
    json out = json::array();
    for (int mu = 0; mu < 4; ++mu) out.push_back(to_json(q[mu]));
    return out;
}

Quaternion quaternion_from_json(const json& j) {
    require_length(j, 4, "quaternion");
    return {number(j[0]), number(j[1]), number(j[2]), number(j[3])};
}

ComplexQuaternion complex_quaternion_from_json(const json& j) {
    require_length(j, 4, "complex quaternion");
    return {complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2]), complex_from_json(j[3])};
}

json to_json(const Rotation& g) { return {{"q_left", to_json(g.left())}, {"q_right", to_json(g.right())}}; }

Rotation rotation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("q_left") || !j.contains("q_right")) {
        throw DomainError("rotation JSON needs 'q_left' and 'q_right'");
    }
    const Quaternion left = quaternion_from_json(j["q_left"]);
    const Quaternion right = quaternion_from_json(j["q_right"]);
    // Accept values printed with limited precision, but not non-unit input.
    if (std::abs(norm2(left) - 1.0) > 1e-9 || std::abs(norm2(right) - 1.0) > 1e-9) {
        throw DomainError("rotation quaternions must have unit norm");
    }
    return Rotation::normalized(left, right);
}

json matrix_to_json(const Eigen::MatrixXcd& m) {
    json entries = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(to_json(m(r, c)));
    return entries;
}

Eigen::MatrixXcd matrix_from_json(const json& entries, int rows, int cols) {
    require_length(entries, static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), "matrix entries");
    Eigen::MatrixXcd m(rows, cols);
    std::size_t i = 0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = complex_from_json(entries[i++]);
    return m;
}

json vector_to_json(const Eigen::VectorXcd& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
    return out;
}

json to_json(const CoeffMatrix& m) {
    return {{"k", m.k},
            {"from", to_string(m.from)},
            {"to", to_string(m.to)},
            {"b2_scaling", to_string(m.scaling)},
            {"shape", {m.entries.rows(), m.entries.cols()}},
            {"entries", matrix_to_json(m.entries)}};
}

CoeffMatrix coeff_matrix_from_json(const json& j) {
    try {
        CoeffMatrix m;
        m.k = j.at("k").get<int>();
        m.from = basis_from_string(j.at("from").get<std::string>());
        m.to = basis_from_string(j.at("to").get<std::string>());
        m.scaling = j.contains("b2_scaling") ? b2_scaling_from_string(j["b2_scaling"].get<std::string>())
                                             : B2Scaling::Scaled;
        const auto& shape = j.at("shape");
        require_length(shape, 2, "shape");
        m.entries = matrix_from_json(j.at("entries"), shape[0].get<int>(), shape[1].get<int>());
        return m;
    } catch (const json::exception& e) {
        throw DomainError(std::string("invalid CoeffMatrix JSON: ") + e.what());
    }
}

json to_json(const RotationCoeffs& g) {
    return {{"k", g.k},
            {"from", "B3"},
            {"to", "B3"},
            {"shape", {g.matrix.rows(), g.matrix.cols()}},
            {"entries", matrix_to_json(g.matrix)},
            {"rotation", to_json(g.g)},
            {"oracle_rows", g.oracle_rows},
            {"oracle_residual", g.oracle_residual}};
}

json to_json(const InvariantSubspace& s) {
    auto list = [](const std::vector<Eigen::VectorXcd>& vs) {
        json out = json::array();
        for (const auto& v : vs) out.push_back(vector_to_json(v));
        return out;
    };
    return {{"k", s.k},
            {"group", s.group},
            {"dimension", s.dimension},
            {"basis", {{"T", list(s.basis_t)}, {"script_T", list(s.basis_scaled_t)}, {"B3", list(s.basis_b3)}}}};
}

json to_json(const MultiplicityReport& r) {
    json out = {{"k", r.k}, {"multiplicity", r.multiplicity}, {"projector_rank", r.projector_rank}};
    if (r.closed_form) {
        out["closed_form"] = *r.closed_form;
        out["closed_form_agrees"] = r.closed_form_agrees;
    }
    if (r.published) {
        out["published_formula"] = *r.published;
        out["published_formula_agrees"] = r.published_agrees;
    }
    return out;
}

std::string format_double(double x) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

std::string matrix_to_csv(const Eigen::MatrixXcd& m) {
    std::ostringstream out;
    out << "row,col,re,im\n";
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            out << r << ',' << c << ',' << format_double(m(r, c).real()) << ',' << format_double(m(r, c).imag())
                << '\n';
    return out.str();
}

}  // namespace s3modes
