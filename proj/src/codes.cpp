#include "uhf/codes.hpp"

#include <algorithm>
#include <set>

namespace uhf {

std::size_t gf_rank(const FiniteField& f, std::vector<Word> rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const unsigned inv = f.inv(rows[rank][col]);
        for (std::size_t j = col; j < ncols; ++j) rows[rank][j] = static_cast<std::uint16_t>(f.mul(rows[rank][j], inv));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            const unsigned factor = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                rows[i][j] = static_cast<std::uint16_t>(
                    f.sub(rows[i][j], f.mul(factor, rows[rank][j])));
        }
        ++rank;
    }
    return rank;
}

LinearCode::LinearCode(FieldPtr f, std::vector<Word> rows) : field(std::move(f)) {
    if (rows.empty()) fail(Err::BadParams, "generator matrix must have at least one row");
    length = rows[0].size();
    if (length == 0) fail(Err::BadParams, "code length must be positive");
    for (const auto& r : rows) {
        if (r.size() != length) fail(Err::BadParams, "ragged generator matrix");
        for (unsigned c : r)
            if (c >= field->order()) fail(Err::BadParams, "generator entry out of field range");
    }
    if (gf_rank(*field, rows) != rows.size())
        fail(Err::BadParams, "generator rows are linearly dependent");
    dim = rows.size();
    gen = std::move(rows);
}

std::uint64_t LinearCode::size_u64() const {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (total > (std::uint64_t(1) << 62) / q())
            fail(Err::TooLarge, "codeword count exceeds 2^62");
        total *= q();
    }
    return total;
}

Word LinearCode::codeword(std::uint64_t label) const {
    const FiniteField& f = *field;
    Word w(length, 0);
    // digit for row k-1 is the least significant
    for (std::size_t row = dim; row-- > 0;) {
        const unsigned digit = static_cast<unsigned>(label % q());
        label /= q();
        if (digit != 0)
            for (std::size_t j = 0; j < length; ++j)
                w[j] = static_cast<std::uint16_t>(f.add(w[j], f.mul(digit, gen[row][j])));
    }
    return w;
}

void LinearCode::for_each_codeword(
    const std::function<bool(std::uint64_t, const Word&)>& fn) const {
    const FiniteField& f = *field;
    const unsigned qq = q();
    const std::uint64_t total = size_u64();
    std::vector<unsigned> digits(dim, 0);
    Word w(length, 0);
    for (std::uint64_t label = 0;; ++label) {
        if (!fn(label, w)) return;
        if (label + 1 == total) return;
        // odometer over message digits, least significant last; a digit step
        // from v to v' contributes (v' - v) * row, which also covers the
        // wrap from q-1 back to 0 (label q-1 and field element q-1 coincide)
        for (std::size_t pos = dim; pos-- > 0;) {
            const unsigned old_digit = digits[pos];
            const unsigned new_digit = (old_digit + 1) % qq;
            const unsigned coeff = f.sub(new_digit, old_digit);
            for (std::size_t j = 0; j < length; ++j)
                w[j] = static_cast<std::uint16_t>(f.add(w[j], f.mul(coeff, gen[pos][j])));
            digits[pos] = new_digit;
            if (new_digit != 0) break;
        }
    }
}

bool LinearCode::contains(const Word& w) const {
    if (w.size() != length) return false;
    auto rows = gen;
    rows.push_back(w);
    return gf_rank(*field, rows) == dim;
}

GenericCode::GenericCode(unsigned q, std::vector<Word> ws) : alphabet(q) {
    if (q < 2) fail(Err::BadParams, "alphabet size must be at least 2");
    if (ws.empty()) fail(Err::TooSmall, "a code needs at least one word");
    length = ws[0].size();
    if (length == 0) fail(Err::BadParams, "code length must be positive");
    std::set<Word> seen;
    for (const auto& w : ws) {
        if (w.size() != length) fail(Err::BadParams, "ragged codeword list");
        for (unsigned c : w)
            if (c >= alphabet) fail(Err::BadParams, "codeword entry out of alphabet range");
        if (!seen.insert(w).second) fail(Err::BadParams, "duplicate codewords");
    }
    words = std::move(ws);
}

LinearCode rs_code(unsigned q, std::size_t k, std::size_t n) {
    FieldPtr f = field_create(q);
    if (!(1 < k && k < n && n <= q))
        fail(Err::BadParams, "Reed-Solomon needs 1 < k < n <= q");
    std::vector<Word> rows(k, Word(n, 0));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i)
            rows[j][i] = static_cast<std::uint16_t>(f->pow(static_cast<unsigned>(i), j));
    return LinearCode(std::move(f), std::move(rows));
}

namespace {

// Lexicographically first all-nonzero v over GF(q) with sum v_i = 0.
// Greedy with a feasibility check: with r slots left and target t, a
// completion exists iff r >= 2 (q >= 3), or r == 1 and t != 0, or r == 0 and
// t == 0. Over GF(2) every v_i is 1, so only the total parity matters.
bool find_parity_vector(const FiniteField& f, std::size_t n, Word& v) {
    const unsigned q = f.order();
    if (q == 2) {
        if (n % 2 != 0) return false;
        v.assign(n, 1);
        return true;
    }
    v.assign(n, 0);
    unsigned acc = 0;  // sum of chosen entries
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t remaining = n - i - 1;
        bool placed = false;
        for (unsigned c = 1; c < q && !placed; ++c) {
            const unsigned target = f.neg(f.add(acc, c));  // what the rest must sum to
            const bool feasible =
                remaining >= 2 || (remaining == 1 && target != 0) || (remaining == 0 && target == 0);
            if (feasible) {
                v[i] = static_cast<std::uint16_t>(c);
                acc = f.add(acc, c);
                placed = true;
            }
        }
        if (!placed) return false;
    }
    return true;
}

}  // namespace

LinearCode parity_mds_with_allones(unsigned q, std::size_t n) {
    FieldPtr f = field_create(q);
    if (n < 2) fail(Err::BadParams, "parity code needs length >= 2");
    Word v;
    if (!find_parity_vector(*f, n, v))
        fail(Err::NoSuchVector,
             "no all-nonzero v with sum v_i = 0 exists for q=" + std::to_string(q) +
                 ", n=" + std::to_string(n));
    // generator of {x : v.x = 0}: row j = e_j - (v_j / v_{n-1}) e_{n-1}
    const unsigned last_inv = f->inv(v[n - 1]);
    std::vector<Word> rows(n - 1, Word(n, 0));
    for (std::size_t j = 0; j + 1 < n; ++j) {
        rows[j][j] = 1;
        rows[j][n - 1] = static_cast<std::uint16_t>(f->neg(f->mul(v[j], last_inv)));
    }
    return LinearCode(std::move(f), std::move(rows));
}

std::size_t min_distance(const LinearCode& code, const CodeLimits& limits) {
    const std::uint64_t total = code.size_u64();
    if (total > limits.max_items)
        fail(Err::TooLarge, "minimum-weight scan over " + std::to_string(total) +
                                " codewords exceeds the cap");
    std::size_t best = code.length + 1;
    code.for_each_codeword([&](std::uint64_t label, const Word& w) {
        if (label == 0) return true;  // skip the zero word
        std::size_t weight = 0;
        for (unsigned c : w) weight += (c != 0);
        if (weight < best) best = weight;
        return best > 1;
    });
    return best;
}

std::size_t min_distance(const GenericCode& code, const CodeLimits& limits) {
    const std::uint64_t k = code.size();
    if (k < 2) fail(Err::TooSmall, "minimum distance needs at least two codewords");
    if (k * (k - 1) / 2 > limits.max_items)
        fail(Err::TooLarge, "pairwise distance scan exceeds the cap");
    std::size_t best = code.length + 1;
    for (std::size_t a = 0; a < code.words.size() && best > 1; ++a) {
        for (std::size_t b = a + 1; b < code.words.size(); ++b) {
            std::size_t dist = 0;
            for (std::size_t j = 0; j < code.length; ++j)
                dist += (code.words[a][j] != code.words[b][j]);
            if (dist < best) best = dist;
            if (best == 1) break;
        }
    }
    return best;
}

BigUint singleton_max_size(std::size_t n, std::size_t d, unsigned q) {
    if (q < 2 || d < 1 || d > n) fail(Err::BadParams, "singleton bound needs q >= 2, 1 <= D <= N");
    return BigUint::pow(q, static_cast<unsigned>(n - d + 1));
}

bool is_mds(const LinearCode& code, const CodeLimits& limits) {
    const std::size_t d = min_distance(code, limits);
    return code.size() == singleton_max_size(code.length, d, code.q());
}

bool is_mds(const GenericCode& code, const CodeLimits& limits) {
    const std::size_t d = min_distance(code, limits);
    return BigUint(code.size()) == singleton_max_size(code.length, d, code.q());
}

GenericCode subcode_select(const LinearCode& code, std::uint64_t size) {
    if (size < 2) fail(Err::TooSmall, "a subcode needs at least two codewords");
    if (BigUint(size) > code.size()) fail(Err::TooLarge, "subcode size exceeds the codeword count");
    std::vector<Word> words;
    words.reserve(size);
    code.for_each_codeword([&](std::uint64_t label, const Word& w) {
        words.push_back(w);
        return label + 1 < size;
    });
    return GenericCode(code.q(), std::move(words));
}

}  // namespace uhf
