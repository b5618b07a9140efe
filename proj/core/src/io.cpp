#include "dualorder/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace dualorder {

namespace {

using nlohmann::json;

Matrix parse_array(const json& arr, Eigen::Index rows, Eigen::Index cols,
                   const char* key) {
    if (!arr.is_array() || static_cast<Eigen::Index>(arr.size()) != rows)
        throw ParseError(std::string(key) + ": expected " + std::to_string(rows) +
                         " rows");
    Matrix x(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const json& row = arr[i];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
            throw ParseError(std::string(key) + ": row " + std::to_string(i) +
                             " has wrong length");
        for (Eigen::Index j = 0; j < cols; ++j) {
            if (!row[j].is_number())
                throw ParseError(std::string(key) + ": non-numeric entry");
            x(i, j) = row[j].get<double>();
        }
    }
    return x;
}

json dump_array(const Matrix& x) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < x.cols(); ++j) row.push_back(x(i, j));
        arr.push_back(std::move(row));
    }
    return arr;
}

}  // namespace

DualMatrix parse_matrix(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("matrix file must be a JSON object");
    for (const auto& [key, _] : doc.items())
        if (key != "rows" && key != "cols" && key != "real" && key != "dual")
            throw ParseError("unknown key: " + key);
    if (!doc.contains("rows") || !doc.contains("cols") || !doc.contains("real"))
        throw ParseError("missing required key (rows, cols, real)");
    if (!doc["rows"].is_number_integer() || !doc["cols"].is_number_integer())
        throw ParseError("rows/cols must be integers");
    const Eigen::Index rows = doc["rows"].get<Eigen::Index>();
    const Eigen::Index cols = doc["cols"].get<Eigen::Index>();
    if (rows < 1 || cols < 1) throw ParseError("rows/cols must be positive");

    Matrix real = parse_array(doc["real"], rows, cols, "real");
    Matrix dual = doc.contains("dual") ? parse_array(doc["dual"], rows, cols, "dual")
                                       : Matrix::Zero(rows, cols);
    try {
        return DualMatrix(std::move(real), std::move(dual));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

DualMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

std::string format_matrix(const DualMatrix& x) {
    json doc;
    doc["rows"] = x.rows();
    doc["cols"] = x.cols();
    doc["real"] = dump_array(x.real());
    doc["dual"] = dump_array(x.dual());
    return doc.dump(2) + "\n";
}

void save_matrix(const std::string& path, const DualMatrix& x) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << format_matrix(x);
}

}  // namespace dualorder
