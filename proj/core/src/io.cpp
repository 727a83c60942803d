#include "hcm/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace hcm {

namespace {

constexpr int kMaxN = 1000;  // keeps hostile "n=" lines from exhausting memory

std::string join_row(const std::vector<Rational>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ' ';
        s += values[i].str();
    }
    return s;
}

// Line-oriented cursor with 1-based numbering for error reporting.
class LineReader {
public:
    explicit LineReader(std::string_view text) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t nl = text.find('\n', start);
            if (nl == std::string_view::npos) {
                if (start < text.size()) lines_.push_back(text.substr(start));
                break;
            }
            lines_.push_back(text.substr(start, nl - start));
            start = nl + 1;
        }
    }

    bool at_end() const { return pos_ >= lines_.size(); }
    std::size_t line_number() const { return pos_ + 1; }

    std::string_view next() {
        if (at_end()) throw ParseError(lines_.size() + 1, "unexpected end of input");
        return lines_[pos_++];
    }

    void expect(std::string_view literal) {
        const std::size_t ln = line_number();
        std::string_view got = next();
        if (got != literal)
            throw ParseError(ln, "expected '" + std::string(literal) + "', got '" +
                                     std::string(got) + "'");
    }

private:
    std::vector<std::string_view> lines_;
    std::size_t pos_ = 0;
};

Rational parse_rational_at(std::string_view token, std::size_t line) {
    try {
        return Rational::parse(token);
    } catch (const ParseError& e) {
        throw ParseError(line, e.message);
    }
}

std::vector<Rational> parse_row(std::string_view line, std::size_t expected, std::size_t ln) {
    std::vector<Rational> out;
    out.reserve(expected);
    std::size_t start = 0;
    while (true) {
        std::size_t sp = line.find(' ', start);
        std::string_view tok =
            sp == std::string_view::npos ? line.substr(start) : line.substr(start, sp - start);
        out.push_back(parse_rational_at(tok, ln));
        if (sp == std::string_view::npos) break;
        start = sp + 1;
    }
    if (out.size() != expected)
        throw ParseError(ln, "expected " + std::to_string(expected) + " values, got " +
                                 std::to_string(out.size()));
    return out;
}

int parse_n_line(LineReader& r) {
    const std::size_t ln = r.line_number();
    std::string_view line = r.next();
    if (!line.starts_with("n="))
        throw ParseError(ln, "expected 'n=<integer>', got '" + std::string(line) + "'");
    std::string_view digits = line.substr(2);
    int n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.starts_with("0"))
        throw ParseError(ln, "invalid integer in '" + std::string(line) + "'");
    if (n < 3) throw ParseError(ln, "n must be at least 3");
    if (n > kMaxN) throw ParseError(ln, "n exceeds the supported maximum " + std::to_string(kMaxN));
    return n;
}

LinearMap parse_map_block(LineReader& r) {
    r.expect("HCM1 map");
    const int n = parse_n_line(r);
    const int d = 2 * n - 3;
    Matrix m(d, d);
    for (int k = 0; k < d; ++k) {
        const std::size_t ln = r.line_number();
        const auto row = parse_row(r.next(), d, ln);
        for (int b = 0; b < d; ++b) m(k, b) = row[b];
    }
    return LinearMap(n, std::move(m));
}

Matrix parse_matrix_block(LineReader& r, int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        const std::size_t ln = r.line_number();
        const auto row = parse_row(r.next(), n, ln);
        for (int j = 0; j < n; ++j) m(i, j) = row[j];
    }
    return m;
}

}  // namespace

std::string serialize(const LinearMap& f) {
    const int d = f.dim();
    std::string s = "HCM1 map\nn=" + std::to_string(f.n()) + "\n";
    for (int k = 1; k <= d; ++k) {
        std::vector<Rational> row;
        row.reserve(d);
        for (int b = 1; b <= d; ++b) row.push_back(f.coeff(k, b));
        s += join_row(row);
        s += '\n';
    }
    return s;
}

std::string format_matrix_block(const Matrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Rational> row;
        row.reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        s += join_row(row);
        s += '\n';
    }
    return s;
}

std::string serialize(const CanonicalDecomposition& d) {
    std::string s = "HCM1 decomposition\nn=" + std::to_string(d.n) + "\n";
    s += "A\n";
    s += format_matrix_block(d.A);
    s += "B\n";
    s += format_matrix_block(d.B);
    s += "C\n";
    s += format_matrix_block(d.C);
    s += "zeta\n";
    s += join_row(d.zeta);
    s += '\n';
    return s;
}

std::string serialize_maps(const std::vector<LinearMap>& maps) {
    std::string s;
    for (std::size_t i = 0; i < maps.size(); ++i) {
        if (i) s += '\n';
        s += serialize(maps[i]);
    }
    return s;
}

LinearMap parse_map(std::string_view text) {
    LineReader r(text);
    LinearMap f = parse_map_block(r);
    if (!r.at_end())
        throw ParseError(r.line_number(), "expected exactly one map block");
    return f;
}

std::vector<LinearMap> parse_maps(std::string_view text) {
    LineReader r(text);
    std::vector<LinearMap> maps;
    maps.push_back(parse_map_block(r));
    while (!r.at_end()) {
        const std::size_t ln = r.line_number();
        if (!r.next().empty())
            throw ParseError(ln, "expected blank line between map blocks");
        maps.push_back(parse_map_block(r));
    }
    return maps;
}

CanonicalDecomposition parse_decomposition(std::string_view text) {
    LineReader r(text);
    r.expect("HCM1 decomposition");
    const int n = parse_n_line(r);
    r.expect("A");
    Matrix a = parse_matrix_block(r, n);
    r.expect("B");
    Matrix b = parse_matrix_block(r, n);
    r.expect("C");
    Matrix c = parse_matrix_block(r, n);
    r.expect("zeta");
    const std::size_t ln = r.line_number();
    auto zeta = parse_row(r.next(), static_cast<std::size_t>(2 * n - 3), ln);
    if (!r.at_end())
        throw ParseError(r.line_number(), "unexpected trailing content");
    return CanonicalDecomposition{n, std::move(a), std::move(b), std::move(c), std::move(zeta)};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("read failure on '" + path + "'");
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("write failure on '" + path + "'");
}

}  // namespace hcm
