#include "rr/oracle.hpp"

#include "rr/errors.hpp"

namespace rr::oracle {

namespace {

void check_enumeration_size(unsigned alphabet, unsigned m) {
    double candidates = 1.0;
    for (unsigned i = 0; i < m; ++i) candidates *= alphabet;
    if (candidates > static_cast<double>(1u << 24)) {
        throw RangeError("enumeration limited to 2^24 candidate words");
    }
}

void enumerate_rec(unsigned alphabet, unsigned m, const WindowPredicate& forbidden,
                   std::vector<uint8_t>& word, std::vector<std::vector<uint8_t>>& out) {
    if (word.size() == m) {
        out.push_back(word);
        return;
    }
    const size_t i = word.size();
    for (unsigned v = 0; v < alphabet; ++v) {
        if (i >= 2 && forbidden(word[i - 2], word[i - 1], v)) continue;
        word.push_back(static_cast<uint8_t>(v));
        enumerate_rec(alphabet, m, forbidden, word, out);
        word.pop_back();
    }
}

} // namespace

std::vector<std::vector<uint8_t>> enumerate_words(unsigned alphabet, unsigned m,
                                                  const WindowPredicate& forbidden) {
    check_enumeration_size(alphabet, m);
    std::vector<std::vector<uint8_t>> out;
    std::vector<uint8_t> word;
    word.reserve(m);
    enumerate_rec(alphabet, m, forbidden, word, out);
    return out;
}

std::vector<std::vector<uint8_t>> enumerate_binary(unsigned m) {
    return enumerate_words(2, m, [](unsigned a, unsigned b, unsigned c) {
        return is_forbidden_bit_triple(static_cast<int>(a), static_cast<int>(b),
                                       static_cast<int>(c));
    });
}

std::vector<std::vector<uint8_t>> enumerate_quaternary(unsigned m) {
    return enumerate_words(4, m, [](unsigned a, unsigned b, unsigned c) {
        return is_forbidden_sym4_triple(static_cast<Sym4>(a), static_cast<Sym4>(b),
                                        static_cast<Sym4>(c));
    });
}

BigInt count_words(unsigned alphabet, unsigned n, const WindowPredicate& forbidden) {
    if (n == 0) return 1;
    if (n == 1) return alphabet;
    // ways[a*alphabet + b] counts words of the current length ending in (a, b).
    std::vector<BigInt> ways(static_cast<size_t>(alphabet) * alphabet, 1);
    for (unsigned len = 2; len < n; ++len) {
        std::vector<BigInt> next(ways.size(), 0);
        for (unsigned a = 0; a < alphabet; ++a) {
            for (unsigned b = 0; b < alphabet; ++b) {
                const BigInt& w = ways[a * alphabet + b];
                if (w == 0) continue;
                for (unsigned c = 0; c < alphabet; ++c) {
                    if (!forbidden(a, b, c)) next[b * alphabet + c] += w;
                }
            }
        }
        ways.swap(next);
    }
    BigInt total = 0;
    for (const BigInt& w : ways) total += w;
    return total;
}

BigInt count_binary_words(unsigned n) {
    return count_words(2, n, [](unsigned a, unsigned b, unsigned c) {
        return is_forbidden_bit_triple(static_cast<int>(a), static_cast<int>(b),
                                       static_cast<int>(c));
    });
}

BigInt count_quaternary_words(unsigned n) {
    return count_words(4, n, [](unsigned a, unsigned b, unsigned c) {
        return is_forbidden_sym4_triple(static_cast<Sym4>(a), static_cast<Sym4>(b),
                                        static_cast<Sym4>(c));
    });
}

BigInt count_level_sequences(Variant variant, unsigned q, unsigned n) {
    return count_words(q, n, [variant, q](unsigned a, unsigned b, unsigned c) {
        return is_forbidden_level_triple(variant, q, a, b, c);
    });
}

Matrix pair_state_matrix(unsigned alphabet, const WindowPredicate& forbidden) {
    const size_t n = static_cast<size_t>(alphabet) * alphabet;
    Matrix mat(n, std::vector<double>(n, 0.0));
    for (unsigned a = 0; a < alphabet; ++a) {
        for (unsigned b = 0; b < alphabet; ++b) {
            for (unsigned c = 0; c < alphabet; ++c) {
                if (!forbidden(a, b, c)) mat[a * alphabet + b][b * alphabet + c] = 1.0;
            }
        }
    }
    return mat;
}

Matrix pair_state_matrix_binary() {
    return pair_state_matrix(2, [](unsigned a, unsigned b, unsigned c) {
        return is_forbidden_bit_triple(static_cast<int>(a), static_cast<int>(b),
                                       static_cast<int>(c));
    });
}

Matrix pair_state_matrix_quaternary() {
    return pair_state_matrix(4, [](unsigned a, unsigned b, unsigned c) {
        return is_forbidden_sym4_triple(static_cast<Sym4>(a), static_cast<Sym4>(b),
                                        static_cast<Sym4>(c));
    });
}

Matrix pair_state_matrix_levels(Variant variant, unsigned q) {
    return pair_state_matrix(q, [variant, q](unsigned a, unsigned b, unsigned c) {
        return is_forbidden_level_triple(variant, q, a, b, c);
    });
}

} // namespace rr::oracle
