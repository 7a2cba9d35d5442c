#include "hwpkit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hwp {

namespace {

using nlohmann::json;

std::string fmt(double v, int round_digits) {
    char buf[64];
    if (round_digits >= 0)
        std::snprintf(buf, sizeof(buf), "%.*f", round_digits, v);
    else
        std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json parse_checked(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // e.what() carries "parse error at line L, column C: ..."
        throw std::runtime_error(e.what());
    }
}

Dim dim_from(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j["d"].is_number_integer())
        throw std::runtime_error("expected an object with an integer field \"d\"");
    return Dim(j["d"].get<int>());
}

std::complex<double> entry_from(const json& cell) {
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
        throw std::runtime_error("matrix entries must be [re, im] number pairs");
    return {cell[0].get<double>(), cell[1].get<double>()};
}

json entry_to(std::complex<double> v) { return json::array({v.real(), v.imag()}); }

}  // namespace

std::string dump_matrix(const Operator& op) {
    const auto n = op.rows();
    json rows = json::array();
    for (Eigen::Index r = 0; r < n; ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < n; ++c) row.push_back(entry_to(op(r, c)));
        rows.push_back(std::move(row));
    }
    json j;
    j["d"] = static_cast<int>(n);
    j["rows"] = std::move(rows);
    return j.dump();
}

Operator load_matrix(const std::string& text) {
    const json j = parse_checked(text);
    const Dim dim = dim_from(j);
    const int d = dim.value();
    if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != static_cast<std::size_t>(d))
        throw std::runtime_error("field \"rows\" must be an array of " + std::to_string(d) +
                                 " rows");
    Operator op(d, d);
    for (int r = 0; r < d; ++r) {
        const json& row = j["rows"][static_cast<std::size_t>(r)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(d))
            throw std::runtime_error("row " + std::to_string(r) + " must hold " +
                                     std::to_string(d) + " entries");
        for (int c = 0; c < d; ++c) op(r, c) = entry_from(row[static_cast<std::size_t>(c)]);
    }
    return op;
}

std::string dump_ket(const Ket& v) {
    json values = json::array();
    for (Eigen::Index r = 0; r < v.size(); ++r) values.push_back(entry_to(v(r)));
    json j;
    j["d"] = static_cast<int>(v.size());
    j["values"] = std::move(values);
    return j.dump();
}

Ket load_ket(const std::string& text) {
    const json j = parse_checked(text);
    const Dim dim = dim_from(j);
    const int d = dim.value();
    if (!j.contains("values") || !j["values"].is_array() ||
        j["values"].size() != static_cast<std::size_t>(d))
        throw std::runtime_error("field \"values\" must be an array of " + std::to_string(d) +
                                 " entries");
    Ket v(d);
    for (int r = 0; r < d; ++r) v(r) = entry_from(j["values"][static_cast<std::size_t>(r)]);
    return v;
}

void save_ket_file(const std::string& path, const Ket& v) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << dump_ket(v) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

Ket load_ket_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return load_ket(buf.str());
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void save_matrix_file(const std::string& path, const Operator& op) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << dump_matrix(op) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

Operator load_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return load_matrix(buf.str());
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::string dump_table(const WWTable& table) {
    const int d = table.dim().value();
    const std::int64_t h = table.dim().half();
    json slices = json::array();
    for (int nu = 0; nu < 2; ++nu) {
        json slice = json::array();
        for (std::int64_t a = -h; a <= h; ++a) {
            json row = json::array();
            for (std::int64_t b = -h; b <= h; ++b) row.push_back(entry_to(table.at(a, b, nu)));
            slice.push_back(std::move(row));
        }
        slices.push_back(std::move(slice));
    }
    json j;
    j["d"] = d;
    j["descriptor"] = table.descriptor();
    j["values"] = std::move(slices);
    return j.dump();
}

WWTable load_table(const std::string& text) {
    const json j = parse_checked(text);
    const Dim dim = dim_from(j);
    const int d = dim.value();
    const std::int64_t h = dim.half();
    WWTable table(dim, j.value("descriptor", ""));
    if (!j.contains("values") || !j["values"].is_array() || j["values"].size() != 2)
        throw std::runtime_error("field \"values\" must hold the two nu slices");
    for (int nu = 0; nu < 2; ++nu) {
        const json& slice = j["values"][static_cast<std::size_t>(nu)];
        if (!slice.is_array() || slice.size() != static_cast<std::size_t>(d))
            throw std::runtime_error("slice " + std::to_string(nu) + " must hold " +
                                     std::to_string(d) + " rows");
        for (std::int64_t a = -h; a <= h; ++a) {
            const json& row = slice[static_cast<std::size_t>(a + h)];
            if (!row.is_array() || row.size() != static_cast<std::size_t>(d))
                throw std::runtime_error("table rows must hold " + std::to_string(d) +
                                         " entries");
            for (std::int64_t b = -h; b <= h; ++b)
                table.at(a, b, nu) = entry_from(row[static_cast<std::size_t>(b + h)]);
        }
    }
    return table;
}

std::string bargmann_csv(const BargmannTable& table, int round_digits) {
    const std::int64_t h = table.dim().half();
    const int nu_count = table.kind() == FrameKind::HW ? 1 : 2;
    std::string out = "nu,alpha,beta,re_f,im_f,q\n";
    for (int nu = 0; nu < nu_count; ++nu)
        for (std::int64_t a = -h; a <= h; ++a)
            for (std::int64_t b = -h; b <= h; ++b) {
                const std::complex<double> f = table.at(a, b, nu);
                out += std::to_string(nu) + ',' + std::to_string(a) + ',' + std::to_string(b) +
                       ',' + fmt(f.real(), round_digits) + ',' + fmt(f.imag(), round_digits) +
                       ',' + fmt(std::norm(f), round_digits) + '\n';
            }
    return out;
}

std::string ww_csv(const WWTable& table, int round_digits) {
    const std::int64_t h = table.dim().half();
    std::string out = "nu,alpha,beta,re,im\n";
    for (int nu = 0; nu < 2; ++nu)
        for (std::int64_t a = -h; a <= h; ++a)
            for (std::int64_t b = -h; b <= h; ++b) {
                const std::complex<double> v = table.at(a, b, nu);
                out += std::to_string(nu) + ',' + std::to_string(a) + ',' + std::to_string(b) +
                       ',' + fmt(v.real(), round_digits) + ',' + fmt(v.imag(), round_digits) +
                       '\n';
            }
    return out;
}

std::string table1_csv(const BargmannTable& coeffs, const WWTable& table, int round_digits) {
    if (coeffs.kind() != FrameKind::HWP)
        throw std::invalid_argument("side-by-side layout requires the doubled-frame table");
    if (coeffs.dim() != table.dim())
        throw std::invalid_argument("dimension mismatch: " + std::to_string(coeffs.dim().value()) +
                                    " vs " + std::to_string(table.dim().value()));
    const std::int64_t h = table.dim().half();
    std::string out = "nu,alpha,beta,re_f,im_f,q,re_w,im_w\n";
    for (int nu = 0; nu < 2; ++nu)
        for (std::int64_t a = -h; a <= h; ++a)
            for (std::int64_t b = -h; b <= h; ++b) {
                const std::complex<double> f = coeffs.at(a, b, nu);
                const std::complex<double> w = table.at(a, b, nu);
                out += std::to_string(nu) + ',' + std::to_string(a) + ',' + std::to_string(b) +
                       ',' + fmt(f.real(), round_digits) + ',' + fmt(f.imag(), round_digits) +
                       ',' + fmt(std::norm(f), round_digits) + ',' + fmt(w.real(), round_digits) +
                       ',' + fmt(w.imag(), round_digits) + '\n';
            }
    return out;
}

}  // namespace hwp
