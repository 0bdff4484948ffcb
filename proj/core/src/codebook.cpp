#include "pscbsc/codebook.hpp"

#include <fstream>

namespace pscbsc {

Word encode(const CodePair& pair, Word m, int m_bits, CodeSelector which) {
    BitMatrix gen;
    switch (which) {
        case CodeSelector::code: gen = pair.gen_code(); break;
        case CodeSelector::complement: gen = pair.gen_complement(); break;
        case CodeSelector::dual: gen = pair.gen_dual(); break;
        case CodeSelector::dual_complement: gen = pair.gen_dual_complement(); break;
    }
    if (m_bits != gen.rows())
        throw DimensionMismatch("message length does not match code dimension");
    if (m_bits < 64 && (m >> m_bits))
        throw DimensionMismatch("message has bits beyond its stated length");
    return mul_vec(m, gen);
}

int CosetTable::coset_index(Word v) const {
    return static_cast<int>(mul_vec(v, syndrome_map));
}

namespace {

CosetTable build_table(const CodePair& pair, CosetBase base, int enum_cap) {
    const int n = pair.n();
    const int k = pair.k();
    if (n > enum_cap) throw SizeLimit("coset enumeration exceeds the configured cap");

    CosetTable t;
    t.base = base;
    t.n = n;
    if (base == CosetBase::dual) {
        t.index_bits = k;
        t.base_codewords = all_codewords(pair.gen_dual());
        t.representatives = all_codewords(pair.gen_dual_complement());
        // v -> v * G_code^T: kills C-perp, identity on the dual complement
        t.syndrome_map = transpose(pair.gen_code());
    } else {
        t.index_bits = n - k;
        t.base_codewords = all_codewords(pair.gen_code());
        t.representatives = all_codewords(pair.gen_complement());
        t.syndrome_map = transpose(pair.gen_dual());
    }

    const std::size_t cosets = std::size_t{1} << t.index_bits;
    t.leaders.resize(cosets);
    t.weight_enums.assign(cosets, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
    for (std::size_t m = 0; m < cosets; ++m) {
        Word best = ~Word{0};
        int best_w = n + 1;
        for (Word c : t.base_codewords) {
            const Word v = t.representatives[m] ^ c;
            const int w = weight(v);
            ++t.weight_enums[m][static_cast<std::size_t>(w)];
            if (w < best_w || (w == best_w && v < best)) {
                best = v;
                best_w = w;
            }
        }
        t.leaders[m] = best;
    }
    return t;
}

}  // namespace

CosetTable cosets_of_dual(const CodePair& pair, int enum_cap) {
    return build_table(pair, CosetBase::dual, enum_cap);
}

CosetTable cosets_of_primal(const CodePair& pair, int enum_cap) {
    return build_table(pair, CosetBase::primal, enum_cap);
}

Word coset_leader(std::span<const Word> members) {
    if (members.empty()) throw DimensionMismatch("empty coset");
    Word best = members[0];
    for (Word v : members) {
        const int w = weight(v);
        const int bw = weight(best);
        if (w < bw || (w == bw && v < best)) best = v;
    }
    return best;
}

namespace {

BitMatrix repetition_code(int n) {
    if (n < 1 || n > 64) throw ParseError("rep:n needs 1 <= n <= 64");
    const Word ones = n == 64 ? ~Word{0} : (Word{1} << n) - 1;
    return BitMatrix::from_rows({ones}, n);
}

BitMatrix even_weight_code(int n) {
    if (n < 2 || n > 64) throw ParseError("even:n needs 2 <= n <= 64");
    std::vector<Word> rows;
    for (int i = 0; i + 1 < n; ++i)
        rows.push_back((Word{1} << i) | (Word{1} << (n - 1)));
    return BitMatrix::from_rows(std::move(rows), n);
}

BitMatrix hamming74() {
    // systematic [7,4]: G = [I_4 | P], P rows 110, 101, 011, 111
    return parse_code_string(
        "1000110\n"
        "0100101\n"
        "0010011\n"
        "0001111\n");
}

BitMatrix extended_hamming84() {
    // extended Hamming [8,4], self-dual
    return parse_code_string(
        "10000111\n"
        "01001011\n"
        "00101101\n"
        "00011110\n");
}

}  // namespace

BitMatrix named_code(const std::string& name) {
    if (name == "e8") return extended_hamming84();
    if (name == "hamming:7,4") return hamming74();
    const auto colon = name.find(':');
    if (colon != std::string::npos) {
        const std::string family = name.substr(0, colon);
        const std::string arg = name.substr(colon + 1);
        if (family == "rep" || family == "even") {
            std::size_t used = 0;
            int n = 0;
            try {
                n = std::stoi(arg, &used);
            } catch (const std::exception&) {
                throw ParseError("bad code size in '" + name + "'");
            }
            if (used != arg.size()) throw ParseError("bad code size in '" + name + "'");
            return family == "rep" ? repetition_code(n) : even_weight_code(n);
        }
    }
    throw ParseError("unknown code name '" + name + "'");
}

BitMatrix resolve_code(const std::string& name_or_path) {
    try {
        return named_code(name_or_path);
    } catch (const ParseError&) {
    }
    std::ifstream in(name_or_path);
    if (!in) throw ParseError("no such code or file: '" + name_or_path + "'");
    return parse_code(in);
}

}  // namespace pscbsc
