#ifndef PSCBSC_CODEBOOK_HPP
#define PSCBSC_CODEBOOK_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pscbsc/gf2.hpp"

namespace pscbsc {

enum class CodeSelector { code, complement, dual, dual_complement };

// m * G_selected; the message length must match the selected block's rows.
Word encode(const CodePair& pair, Word m, int m_bits, CodeSelector which);

// Default cap on n for the 2^n coset enumerations.
inline constexpr int kDefaultEnumCap = 20;

enum class CosetBase {
    dual,    // cosets of C-perp, 2^k of them, representative y_m = m * G_dual_complement
    primal,  // cosets of C, 2^(n-k) of them, representative y_h = h * G_complement
};

// Full coset decomposition of Z_2^n by either C-perp or C, with
// minimum-weight leaders and per-coset weight enumerators.
struct CosetTable {
    CosetBase base = CosetBase::dual;
    int n = 0;
    int index_bits = 0;                    // table size is 2^index_bits
    BitMatrix syndrome_map;                // v * syndrome_map^T gives the coset index
    std::vector<Word> base_codewords;      // the 2^(n - index_bits) words being cosetted
    std::vector<Word> representatives;
    std::vector<Word> leaders;             // min weight, ties by smallest integer
    std::vector<std::vector<std::uint64_t>> weight_enums;  // counts by weight 0..n

    int coset_count() const { return 1 << index_bits; }
    int coset_index(Word v) const;
    // Members of coset m, i.e. representative xor each base codeword.
    Word member(int m, std::size_t j) const {
        return representatives[static_cast<std::size_t>(m)] ^ base_codewords[j];
    }
};

CosetTable cosets_of_dual(const CodePair& pair, int enum_cap = kDefaultEnumCap);
CosetTable cosets_of_primal(const CodePair& pair, int enum_cap = kDefaultEnumCap);

// Minimum-weight member; ties broken by smallest integer value.
Word coset_leader(std::span<const Word> members);

// Built-in named codes: "rep:n", "even:n", "hamming:7,4", "e8".
BitMatrix named_code(const std::string& name);

// Resolves a named code or, failing that, loads the file at that path.
BitMatrix resolve_code(const std::string& name_or_path);

}  // namespace pscbsc

#endif
