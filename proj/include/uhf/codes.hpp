#ifndef UHF_CODES_HPP
#define UHF_CODES_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "uhf/bigint.hpp"
#include "uhf/field.hpp"

namespace uhf {

using Word = std::vector<std::uint16_t>;

/// Enumeration caps for the brute-force scans. `max_items` limits both the
/// number of codewords visited in a minimum-weight scan and the number of
/// pairwise comparisons for explicit codeword lists.
struct CodeLimits {
    std::uint64_t max_items = 1u << 20;
};

/// [N, k, D, q] code given by a generator matrix with independent rows.
/// Codewords are enumerated in message-label order: the message vector
/// (u_0..u_{k-1}) multiplies rows top to bottom and has label
/// sum u_i * q^(k-1-i), so label order is lexicographic order on messages.
struct LinearCode {
    FieldPtr field;
    std::size_t length = 0;  // N
    std::size_t dim = 0;     // k
    std::vector<Word> gen;   // k x N

    LinearCode(FieldPtr f, std::vector<Word> rows);

    unsigned q() const { return field->order(); }
    BigUint size() const { return BigUint::pow(q(), static_cast<unsigned>(dim)); }
    std::uint64_t size_u64() const;  // throws TooLarge past 2^63

    Word codeword(std::uint64_t label) const;

    /// Visits all q^k codewords in label order; stops early if fn returns false.
    void for_each_codeword(const std::function<bool(std::uint64_t, const Word&)>& fn) const;

    bool contains(const Word& w) const;
};

/// (N, K, D, q) code as an explicit list of distinct words over the
/// alphabet {0..q-1}; no field structure is assumed.
struct GenericCode {
    unsigned alphabet = 0;   // q
    std::size_t length = 0;  // N
    std::vector<Word> words; // K x N, distinct

    GenericCode(unsigned q, std::vector<Word> ws);

    unsigned q() const { return alphabet; }
    std::uint64_t size() const { return words.size(); }
};

/// Reed-Solomon code over the first n field elements in label order:
/// codewords are (f(x_0), .., f(x_{n-1})) for deg f < k. Requires
/// 1 < k < n <= q; the result is MDS with D = n-k+1.
LinearCode rs_code(unsigned q, std::size_t k, std::size_t n);

/// The [n, n-1, 2, q] MDS code {x : sum v_i x_i = 0} for the
/// lexicographically first all-nonzero v with sum v_i = 0, which puts the
/// all-ones word in the code. Throws NoSuchVector when no such v exists
/// (q = 2 with odd n).
LinearCode parity_mds_with_allones(unsigned q, std::size_t n);

/// Exact minimum Hamming distance. Linear codes use a minimum-weight scan
/// over q^k codewords; explicit lists compare all pairs.
std::size_t min_distance(const LinearCode& code, const CodeLimits& limits = {});
std::size_t min_distance(const GenericCode& code, const CodeLimits& limits = {});

/// Largest possible K for an (N, K, D, q) code: q^(N-D+1), exactly.
BigUint singleton_max_size(std::size_t n, std::size_t d, unsigned q);

/// True iff the code meets q^(N-D+1) with equality.
bool is_mds(const LinearCode& code, const CodeLimits& limits = {});
bool is_mds(const GenericCode& code, const CodeLimits& limits = {});

/// First `size` codewords in message-label order. Requires 2 <= size <= q^k.
GenericCode subcode_select(const LinearCode& code, std::uint64_t size);

/// Rank of a matrix over the given field (used for generator validation).
std::size_t gf_rank(const FiniteField& f, std::vector<Word> rows);

}  // namespace uhf

#endif
