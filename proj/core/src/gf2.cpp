#include "pscbsc/gf2.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace pscbsc {

std::string to_bits(Word v, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int j = 0; j < n; ++j)
        if ((v >> j) & 1u) s[static_cast<std::size_t>(j)] = '1';
    return s;
}

Word from_bits(const std::string& s) {
    if (s.size() > 64) throw ParseError("bit string longer than 64");
    Word v = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] == '1')
            v |= Word{1} << j;
        else if (s[j] != '0')
            throw ParseError("bit string must contain only '0'/'1'");
    }
    return v;
}

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0 || cols > 64)
        throw DimensionMismatch("BitMatrix supports 0..64 columns");
    data_.assign(static_cast<std::size_t>(rows), 0);
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.row(i) = Word{1} << i;
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<Word> rows, int cols) {
    BitMatrix m(static_cast<int>(rows.size()), cols);
    Word mask = cols == 64 ? ~Word{0} : (Word{1} << cols) - 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] & ~mask)
            throw DimensionMismatch("row has bits beyond the column count");
        m.row(static_cast<int>(i)) = rows[i];
    }
    return m;
}

void BitMatrix::set(int i, int j, bool b) {
    if (b)
        row(i) |= Word{1} << j;
    else
        row(i) &= ~(Word{1} << j);
}

std::ostream& operator<<(std::ostream& os, const BitMatrix& m) {
    for (int i = 0; i < m.rows(); ++i) os << to_bits(m.row(i), m.cols()) << '\n';
    return os;
}

Word mul_vec(Word v, const BitMatrix& m) {
    Word out = 0;
    for (int i = 0; i < m.rows(); ++i)
        if ((v >> i) & 1u) out ^= m.row(i);
    return out;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("inner dimensions disagree");
    BitMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) out.row(i) = mul_vec(a.row(i), b);
    return out;
}

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix out(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.get(i, j)) out.set(j, i, true);
    return out;
}

BitMatrix select_columns(const BitMatrix& m, const std::vector<int>& cols) {
    BitMatrix out(m.rows(), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] < 0 || cols[j] >= m.cols())
            throw OutOfRange("column index out of range");
        for (int i = 0; i < m.rows(); ++i)
            if (m.get(i, cols[j])) out.set(i, static_cast<int>(j), true);
    }
    return out;
}

BitMatrix rref(BitMatrix m, std::vector<int>* pivots) {
    if (pivots) pivots->clear();
    int r = 0;
    for (int j = 0; j < m.cols() && r < m.rows(); ++j) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (m.get(i, j)) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m.row(pivot), m.row(r));
        for (int i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, j)) m.row(i) ^= m.row(r);
        if (pivots) pivots->push_back(j);
        ++r;
    }
    return m;
}

int rank(const BitMatrix& m) {
    std::vector<int> pivots;
    rref(m, &pivots);
    return static_cast<int>(pivots.size());
}

BitMatrix invert(const BitMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("invert needs a square matrix");
    const int n = m.rows();
    BitMatrix a = m;
    BitMatrix inv = BitMatrix::identity(n);
    int r = 0;
    for (int j = 0; j < n; ++j) {
        int pivot = -1;
        for (int i = r; i < n; ++i) {
            if (a.get(i, j)) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) throw SingularMatrix("matrix is singular over GF(2)");
        std::swap(a.row(pivot), a.row(r));
        std::swap(inv.row(pivot), inv.row(r));
        for (int i = 0; i < n; ++i) {
            if (i != r && a.get(i, j)) {
                a.row(i) ^= a.row(r);
                inv.row(i) ^= inv.row(r);
            }
        }
        ++r;
    }
    return inv;
}

std::vector<Word> all_codewords(const BitMatrix& m) {
    const int k = m.rows();
    if (k > 30) throw SizeLimit("codeword enumeration limited to 2^30 words");
    std::vector<Word> cw(std::size_t{1} << k, 0);
    for (int j = 0; j < k; ++j) {
        const std::size_t half = std::size_t{1} << j;
        for (std::size_t g = 0; g < half; ++g) cw[half + g] = cw[g] ^ m.row(j);
    }
    return cw;
}

CodePair::CodePair(int n, int k, BitMatrix a, BitMatrix b)
    : n_(n), k_(k), a_(std::move(a)), b_(std::move(b)) {
    if (k < 0 || k > n) throw DimensionMismatch("need 0 <= k <= n");
    if (a_.rows() != n || a_.cols() != n || b_.rows() != n || b_.cols() != n)
        throw DimensionMismatch("A and B must be n x n");
}

namespace {

BitMatrix row_block(const BitMatrix& m, int first, int count) {
    std::vector<Word> rows;
    rows.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) rows.push_back(m.row(first + i));
    return BitMatrix::from_rows(std::move(rows), m.cols());
}

}  // namespace

BitMatrix CodePair::gen_code() const { return row_block(a_, 0, k_); }
BitMatrix CodePair::gen_complement() const { return row_block(a_, k_, n_ - k_); }
BitMatrix CodePair::gen_dual_complement() const { return row_block(b_, 0, k_); }
BitMatrix CodePair::gen_dual() const { return row_block(b_, k_, n_ - k_); }

CodePair build_pair(const BitMatrix& g, CompletionOrder order) {
    const int k = g.rows();
    const int n = g.cols();
    if (k > n) throw RankDeficient("more rows than columns");

    std::vector<int> pivots;
    rref(g, &pivots);
    if (static_cast<int>(pivots.size()) != k)
        throw RankDeficient("generator rows are dependent over GF(2)");

    Word pivot_mask = 0;
    for (int j : pivots) pivot_mask |= Word{1} << j;

    std::vector<Word> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < k; ++i) rows.push_back(g.row(i));
    if (order == CompletionOrder::ascending) {
        for (int j = 0; j < n; ++j)
            if (!((pivot_mask >> j) & 1u)) rows.push_back(Word{1} << j);
    } else {
        for (int j = n - 1; j >= 0; --j)
            if (!((pivot_mask >> j) & 1u)) rows.push_back(Word{1} << j);
    }

    BitMatrix a = BitMatrix::from_rows(std::move(rows), n);
    BitMatrix b = transpose(invert(a));
    return CodePair(n, k, std::move(a), std::move(b));
}

bool check_pair_identities(const CodePair& pair) {
    return multiply(pair.a(), transpose(pair.b())) == BitMatrix::identity(pair.n());
}

BitMatrix parse_code(std::istream& in) {
    std::vector<Word> rows;
    int cols = -1;
    bool first_content_line = true;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        // trim
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t\r");
        line = line.substr(begin, end - begin + 1);

        if (first_content_line) {
            first_content_line = false;
            // optional "n k" header
            if (line.find_first_not_of("01") != std::string::npos) {
                std::istringstream hdr(line);
                int n = 0, k = 0;
                if (!(hdr >> n >> k) || n <= 0 || n > 64 || k < 0 || k > n)
                    throw ParseError("bad header line, expected \"n k\"");
                cols = n;
                continue;
            }
        }
        if (line.find_first_not_of("01") != std::string::npos)
            throw ParseError("generator rows must be '0'/'1' strings");
        if (cols < 0) cols = static_cast<int>(line.size());
        if (static_cast<int>(line.size()) != cols)
            throw ParseError("generator rows have inconsistent lengths");
        rows.push_back(from_bits(line));
    }
    if (rows.empty() || cols <= 0) throw ParseError("no generator rows found");
    return BitMatrix::from_rows(std::move(rows), cols);
}

BitMatrix parse_code_string(const std::string& text) {
    std::istringstream in(text);
    return parse_code(in);
}

}  // namespace pscbsc
