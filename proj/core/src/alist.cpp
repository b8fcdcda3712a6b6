#include "recon/alist.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace recon {
namespace {

// Whitespace-token stream that tracks the current line number.
class TokenStream {
public:
    explicit TokenStream(std::string_view text) : text_(text) {}

    bool next_int(long& out) {
        skip_space();
        if (pos_ >= text_.size()) return false;
        std::size_t start = pos_;
        if (text_[pos_] == '-' || text_[pos_] == '+') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(text_[start]))))
            throw AlistParseError(line_, "expected an integer");
        out = std::stol(std::string(text_.substr(start, pos_ - start)));
        return true;
    }

    long require_int(const char* what) {
        long v;
        if (!next_int(v)) throw AlistParseError(line_, std::string("truncated file, expected ") + what);
        return v;
    }

    int line() const { return line_; }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') ++line_;
            ++pos_;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

} // namespace

AlistParseError::AlistParseError(int line, const std::string& what)
    : std::runtime_error("alist parse error at line " + std::to_string(line) + ": " + what),
      line_(line) {}

ParityCheckMatrix parse_alist(std::string_view text) {
    TokenStream ts(text);
    const long n = ts.require_int("column count");
    const long r = ts.require_int("row count");
    if (n <= 0 || r <= 0)
        throw AlistParseError(ts.line(), "matrix dimensions must be positive");
    const long max_col_deg = ts.require_int("max column degree");
    const long max_row_deg = ts.require_int("max row degree");
    if (max_col_deg < 0 || max_row_deg < 0)
        throw AlistParseError(ts.line(), "negative max degree");

    std::vector<long> col_deg(n), row_deg(r);
    for (long j = 0; j < n; ++j) {
        col_deg[j] = ts.require_int("column degree");
        if (col_deg[j] < 0 || col_deg[j] > max_col_deg)
            throw AlistParseError(ts.line(), "column degree out of range");
    }
    for (long i = 0; i < r; ++i) {
        row_deg[i] = ts.require_int("row degree");
        if (row_deg[i] < 0 || row_deg[i] > max_row_deg)
            throw AlistParseError(ts.line(), "row degree out of range");
    }

    // Per-column lists; padded with zeros up to max_col_deg in the MacKay dialect.
    ParityCheckMatrix h;
    h.n_cols = static_cast<int>(n);
    h.rows.resize(r);
    std::vector<std::vector<int>> cols(n);
    for (long j = 0; j < n; ++j) {
        for (long k = 0; k < max_col_deg; ++k) {
            const long v = ts.require_int("column entry");
            if (k < col_deg[j]) {
                if (v < 1 || v > r)
                    throw AlistParseError(ts.line(), "row index " + std::to_string(v) +
                                                        " out of range [1, " + std::to_string(r) + "]");
                cols[j].push_back(static_cast<int>(v - 1));
            } else if (v != 0) {
                throw AlistParseError(ts.line(), "nonzero padding entry");
            }
        }
    }
    for (long i = 0; i < r; ++i) {
        for (long k = 0; k < max_row_deg; ++k) {
            const long v = ts.require_int("row entry");
            if (k < row_deg[i]) {
                if (v < 1 || v > n)
                    throw AlistParseError(ts.line(), "column index " + std::to_string(v) +
                                                        " out of range [1, " + std::to_string(n) + "]");
                h.rows[i].push_back(static_cast<int>(v - 1));
            } else if (v != 0) {
                throw AlistParseError(ts.line(), "nonzero padding entry");
            }
        }
    }

    // cross-check the two adjacency blocks
    std::vector<std::vector<int>> from_rows(n);
    for (long i = 0; i < r; ++i)
        for (int j : h.rows[i]) from_rows[j].push_back(static_cast<int>(i));
    for (long j = 0; j < n; ++j) {
        auto a = cols[j];
        auto b = from_rows[j];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            throw AlistParseError(ts.line(), "row and column adjacency lists disagree at column " +
                                                std::to_string(j + 1));
    }
    for (auto& row : h.rows) std::sort(row.begin(), row.end());
    h.validate();
    return h;
}

std::string serialize_alist(const ParityCheckMatrix& h) {
    const int n = h.n_cols;
    const int r = h.n_rows();
    std::vector<std::vector<int>> cols(n);
    for (int i = 0; i < r; ++i)
        for (int j : h.rows[i]) cols[j].push_back(i);
    std::size_t max_col = 0, max_row = 0;
    for (const auto& c : cols) max_col = std::max(max_col, c.size());
    for (const auto& row : h.rows) max_row = std::max(max_row, row.size());

    std::ostringstream out;
    out << n << ' ' << r << '\n' << max_col << ' ' << max_row << '\n';
    for (int j = 0; j < n; ++j) out << cols[j].size() << (j + 1 == n ? '\n' : ' ');
    for (int i = 0; i < r; ++i) out << h.rows[i].size() << (i + 1 == r ? '\n' : ' ');
    for (int j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < max_col; ++k)
            out << (k < cols[j].size() ? cols[j][k] + 1 : 0) << (k + 1 == max_col ? '\n' : ' ');
    }
    for (int i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < max_row; ++k)
            out << (k < h.rows[i].size() ? h.rows[i][k] + 1 : 0) << (k + 1 == max_row ? '\n' : ' ');
    }
    return out.str();
}

ParityCheckMatrix load_alist(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_alist(buf.str());
}

void save_alist(const ParityCheckMatrix& h, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << serialize_alist(h);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

} // namespace recon
