#include "covest/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

namespace covest {

namespace {

constexpr int kDigits = 17;

void append_double(std::string& out, double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, kDigits);
    out.append(buf, res.ptr);
}

double parse_double(std::string_view text, std::string_view whole) {
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    double v = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw FormatError("bad complex literal '" + std::string(whole) + "'");
    return v;
}

std::string read_line(std::istream& in, const char* what) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            return line;
    }
    throw FormatError(std::string("unexpected end of input reading ") + what);
}

std::vector<Complex> read_row(std::istream& in, std::size_t expected, std::size_t row) {
    std::istringstream fields(read_line(in, "matrix row"));
    std::vector<Complex> out;
    out.reserve(expected);
    std::string tok;
    while (fields >> tok)
        out.push_back(parse_complex(tok));
    if (out.size() != expected)
        throw FormatError("row " + std::to_string(row) + " has " + std::to_string(out.size()) +
                          " entries, expected " + std::to_string(expected));
    return out;
}

std::size_t parse_extent(const std::string& tok) {
    std::size_t v = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || v == 0)
        throw FormatError("bad matrix dimension '" + tok + "'");
    return v;
}

std::vector<std::size_t> read_header(std::istream& in) {
    std::istringstream fields(read_line(in, "header"));
    std::vector<std::size_t> out;
    std::string tok;
    while (fields >> tok)
        out.push_back(parse_extent(tok));
    return out;
}

template <typename Writer>
void with_output_file(const std::string& path, Writer&& write) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    write(out);
    out.flush();
    if (!out)
        throw std::runtime_error("error writing '" + path + "'");
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "' for reading");
    return in;
}

} // namespace

std::string format_complex(const Complex& z) {
    std::string out;
    append_double(out, z.re);
    std::string im;
    append_double(im, z.im);
    if (im.front() != '-')
        out.push_back('+');
    out += im;
    out.push_back('i');
    return out;
}

Complex parse_complex(std::string_view text) {
    if (text.size() < 2 || text.back() != 'i')
        throw FormatError("bad complex literal '" + std::string(text) + "'");
    const std::string_view body = text.substr(0, text.size() - 1);
    for (std::size_t k = 1; k < body.size(); ++k) {
        const char ch = body[k];
        if ((ch == '+' || ch == '-') && body[k - 1] != 'e' && body[k - 1] != 'E')
            return {parse_double(body.substr(0, k), text), parse_double(body.substr(k), text)};
    }
    throw FormatError("bad complex literal '" + std::string(text) + "'");
}

void write_matrix(std::ostream& out, const InputMatrix& a) {
    out << a.rows() << ' ' << a.cols() << '\n';
    std::string line;
    for (std::size_t r = 1; r <= a.rows(); ++r) {
        line.clear();
        for (const auto& z : a.row(r)) {
            if (!line.empty())
                line.push_back(' ');
            line += format_complex(z);
        }
        out << line << '\n';
    }
}

void write_matrix(std::ostream& out, const CovarianceMatrix& c) {
    out << c.dim() << '\n';
    std::string line;
    for (std::size_t r = 1; r <= c.dim(); ++r) {
        line.clear();
        for (std::size_t col = 1; col <= c.dim(); ++col) {
            if (col > 1)
                line.push_back(' ');
            line += format_complex(c(r, col));
        }
        out << line << '\n';
    }
}

InputMatrix read_input_matrix(std::istream& in) {
    const auto header = read_header(in);
    if (header.size() != 2)
        throw FormatError("input matrix header must be \"N M\"");
    const std::size_t rows = header[0];
    const std::size_t cols = header[1];
    std::vector<Complex> data;
    data.reserve(rows * cols);
    for (std::size_t r = 1; r <= rows; ++r) {
        auto row = read_row(in, cols, r);
        data.insert(data.end(), row.begin(), row.end());
    }
    return InputMatrix(rows, cols, std::move(data));
}

CovarianceMatrix read_covariance_matrix(std::istream& in) {
    const auto header = read_header(in);
    if (header.size() != 1)
        throw FormatError("covariance header must be \"dim\"");
    CovarianceMatrix c(header[0]);
    for (std::size_t r = 1; r <= c.dim(); ++r) {
        const auto row = read_row(in, c.dim(), r);
        for (std::size_t col = r; col <= c.dim(); ++col)
            c.upper(r, col) = row[col - 1];
    }
    return c;
}

void save_matrix(const std::string& path, const InputMatrix& a) {
    with_output_file(path, [&](std::ostream& out) { write_matrix(out, a); });
}

void save_matrix(const std::string& path, const CovarianceMatrix& c) {
    with_output_file(path, [&](std::ostream& out) { write_matrix(out, c); });
}

InputMatrix load_input_matrix(const std::string& path) {
    auto in = open_input(path);
    return read_input_matrix(in);
}

CovarianceMatrix load_covariance_matrix(const std::string& path) {
    auto in = open_input(path);
    return read_covariance_matrix(in);
}

} // namespace covest
