#ifndef UHF_FAMILY_HPP
#define UHF_FAMILY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "uhf/codes.hpp"
#include "uhf/field.hpp"
#include "uhf/rational.hpp"

namespace uhf {

/// Group structure on the range used by the difference-based measurement:
/// the cyclic group Z_m, or the additive group of GF(m) when m is a prime
/// power (attached automatically to families built from q-ary codes).
enum class RangeGroup { cyclic, field_additive };

/// An (N; n, m) hash family as an explicit table: entry (i, a) = h_i(a).
/// Stored element-major so a domain element's value vector is contiguous.
struct HashFamily {
    std::size_t functions = 0;  // N
    std::size_t domain = 0;     // n
    unsigned range = 0;         // m
    RangeGroup group = RangeGroup::cyclic;
    FieldPtr range_field;       // set iff group == field_additive
    std::vector<std::uint16_t> table;  // [a * functions + i]

    HashFamily(std::size_t n_functions, std::size_t domain_size, unsigned range_size,
               std::vector<std::uint16_t> tbl, RangeGroup g = RangeGroup::cyclic,
               FieldPtr rf = nullptr);

    std::uint16_t value(std::size_t fn, std::size_t elem) const {
        return table[elem * functions + fn];
    }

    /// Group difference x - y in the attached range group.
    unsigned diff(unsigned x, unsigned y) const {
        if (group == RangeGroup::field_additive) return range_field->sub(x, y);
        return (x + range - y) % range;
    }
};

struct MeasureOptions {
    /// Cap on elementary counting events: pairs*N for collision counts,
    /// times m for differences, times m^2 for value-pair counts.
    std::uint64_t max_events = 100'000'000;
    unsigned threads = 0;  // 0 = hardware concurrency
    enum class Algo { automatic, pair_scan, projection } algo = Algo::automatic;
};

/// Result of an exhaustive measurement. epsilon is exact: worst/N for the
/// collision and difference counts, worst*m/N for the strong form. The
/// witness is the lexicographically smallest maximizer.
struct EpsilonReport {
    Rat epsilon;
    std::uint64_t worst_count = 0;
    std::uint64_t witness_a1 = 0, witness_a2 = 0;
    std::optional<unsigned> witness_b;                             // difference value
    std::optional<std::pair<unsigned, unsigned>> witness_values;   // (b1, b2)
    bool balanced = true;  // meaningful for the strong measurement only
};

/// Least eps for which the family is eps-universal: max over distinct pairs
/// (a1, a2) of |{i : h_i(a1) = h_i(a2)}| / N.
EpsilonReport measure_epsilon_u(const HashFamily& fam, const MeasureOptions& opt = {});

/// Least eps for the difference form: max over distinct pairs and all group
/// elements b of |{i : h_i(a1) - h_i(a2) = b}| / N.
EpsilonReport measure_epsilon_delta(const HashFamily& fam, const MeasureOptions& opt = {});

/// Strong form: balanced = every (a, b) is hit by exactly N/m functions;
/// epsilon = max over pairs and (b1, b2) of the joint count, times m / N.
/// An unbalanced family still gets its epsilon computed.
EpsilonReport measure_epsilon_su(const HashFamily& fam, const MeasureOptions& opt = {});

/// Functions = coordinates, domain = codewords (in message-label order for
/// generator-defined codes): h_i(a) = i-th coordinate of the a-th codeword.
HashFamily code_to_family(const LinearCode& code, const CodeLimits& limits = {});
HashFamily code_to_family(const GenericCode& code, const CodeLimits& limits = {});

struct FamilyCodeResult {
    GenericCode code;
    bool duplicates_removed = false;
};

/// Inverse direction: word(a) = (h_1(a), .., h_N(a)). Identical columns are
/// collapsed (reported, not fatal) since a code needs distinct words.
FamilyCodeResult family_to_code(const HashFamily& fam);

/// Difference-universal family from a linear code containing the all-ones
/// word e: the domain is the q^(k-1) cosets of {lambda*e} inside the code,
/// each represented by its lexicographically smallest member, in
/// lexicographic order. For distinct cosets and any b, c1 - c2 - b*e is a
/// nonzero codeword, so at most N - D coordinates satisfy the difference
/// equation.
HashFamily code_to_delta_family(const LinearCode& code, const CodeLimits& limits = {});

}  // namespace uhf

#endif
