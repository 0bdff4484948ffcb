#ifndef PSCBSC_GF2_HPP
#define PSCBSC_GF2_HPP

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pscbsc/errors.hpp"

namespace pscbsc {

// A binary vector of up to 64 bits stored in one word. Position j (1-based)
// of the vector is bit (j-1) of the word, so the vector maps to the integer
// sum_j v_j * 2^(j-1).
using Word = std::uint64_t;

inline int weight(Word v) { return std::popcount(v); }

// GF(2) inner product of two row vectors.
inline int dot(Word a, Word b) { return std::popcount(a & b) & 1; }

std::string to_bits(Word v, int n);   // "101" style, position 1 first
Word from_bits(const std::string& s); // inverse of to_bits

// Dense bit matrix over GF(2), one word per row. Row vectors act on the
// left: x = u * M.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    static BitMatrix identity(int n);
    static BitMatrix from_rows(std::vector<Word> rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Word row(int i) const { return data_[static_cast<std::size_t>(i)]; }
    Word& row(int i) { return data_[static_cast<std::size_t>(i)]; }
    bool get(int i, int j) const { return (row(i) >> j) & 1u; }
    void set(int i, int j, bool b);

    bool operator==(const BitMatrix& other) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Word> data_;
};

std::ostream& operator<<(std::ostream& os, const BitMatrix& m);

// v * M for a row vector v with as many bits as M has rows.
Word mul_vec(Word v, const BitMatrix& m);

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);
BitMatrix transpose(const BitMatrix& m);
BitMatrix select_columns(const BitMatrix& m, const std::vector<int>& cols);

// GF(2) rank; the input is left untouched.
int rank(const BitMatrix& m);

// Reduced row echelon form. If pivots is non-null it receives the pivot
// column of each nonzero row, in order.
BitMatrix rref(BitMatrix m, std::vector<int>* pivots = nullptr);

// Inverse of a square matrix; throws SingularMatrix if not full rank.
BitMatrix invert(const BitMatrix& m);

// All 2^rows codewords of the row space, indexed by message integer:
// result[g] = g * M.
std::vector<Word> all_codewords(const BitMatrix& m);

// Order in which missing unit vectors complete a generator matrix to a
// basis of Z_2^n.
enum class CompletionOrder { ascending, descending };

// An [n,k] code together with its complement, dual and dual-complement,
// realized as the row blocks of A and B = (A^-1)^T:
//   A = [ G_code ; G_complement ],  B = [ G_dual_complement ; G_dual ].
class CodePair {
  public:
    CodePair(int n, int k, BitMatrix a, BitMatrix b);

    int n() const { return n_; }
    int k() const { return k_; }

    const BitMatrix& a() const { return a_; }
    const BitMatrix& b() const { return b_; }

    BitMatrix gen_code() const;             // k x n, spans C
    BitMatrix gen_complement() const;       // (n-k) x n, spans C^T
    BitMatrix gen_dual_complement() const;  // k x n, spans the dual complement
    BitMatrix gen_dual() const;             // (n-k) x n, spans C-perp

  private:
    int n_ = 0;
    int k_ = 0;
    BitMatrix a_;
    BitMatrix b_;
};

// Builds the code quadruple from a full-row-rank generator matrix. The first
// k rows of A are G itself; the completion appends the unit vector e_j for
// every non-pivot column j of rref(G), in the given column order.
// Throws RankDeficient when the rows of G are dependent.
CodePair build_pair(const BitMatrix& g,
                    CompletionOrder order = CompletionOrder::ascending);

// Residuals of the block identities A*B^T = I; all four must be exactly
// zero for a valid pair. Returns false if any entry differs.
bool check_pair_identities(const CodePair& pair);

// Plain text code format: one generator row per line as '0'/'1' characters,
// '#' starts a comment, and the first non-comment line may optionally be
// "n k".
BitMatrix parse_code(std::istream& in);
BitMatrix parse_code_string(const std::string& text);

}  // namespace pscbsc

#endif
