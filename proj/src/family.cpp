#include "uhf/family.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <thread>

namespace uhf {

HashFamily::HashFamily(std::size_t n_functions, std::size_t domain_size, unsigned range_size,
                       std::vector<std::uint16_t> tbl, RangeGroup g, FieldPtr rf)
    : functions(n_functions), domain(domain_size), range(range_size), group(g),
      range_field(std::move(rf)), table(std::move(tbl)) {
    if (functions < 1) fail(Err::BadParams, "a hash family needs at least one function");
    if (range < 2) fail(Err::BadParams, "range size must be at least 2");
    if (domain < range) fail(Err::BadParams, "domain must be at least as large as the range");
    if (table.size() != functions * domain) fail(Err::BadParams, "table size mismatch");
    for (auto v : table)
        if (v >= range) fail(Err::BadParams, "table entry out of range");
    if (group == RangeGroup::field_additive) {
        if (!range_field) range_field = field_create(range);
        if (range_field->order() != range)
            fail(Err::BadParams, "range field order does not match range size");
    }
}

namespace {

unsigned effective_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Contiguous a1 ranges with roughly equal pair mass; mass(a1) = n-1-a1.
std::vector<std::pair<std::uint64_t, std::uint64_t>> split_pairs(std::uint64_t n,
                                                                 unsigned chunks) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    if (n < 2) return out;
    const unsigned worker_count = std::max(1u, chunks);
    const __int128 total = (__int128)n * (n - 1) / 2;
    std::uint64_t begin = 0;
    __int128 acc = 0;
    for (unsigned c = 0; c < worker_count && begin + 1 < n; ++c) {
        const __int128 target = total * (c + 1) / worker_count;
        std::uint64_t end = begin;
        while (end + 1 < n && acc < target) {
            acc += n - 1 - end;
            ++end;
        }
        if (c + 1 == worker_count) end = n - 1;
        if (end > begin) out.emplace_back(begin, end);
        begin = end;
    }
    return out;
}

template <class Best, class Worker>
Best run_pair_chunks(std::uint64_t n, unsigned threads, Worker worker) {
    auto ranges = split_pairs(n, threads);
    std::vector<Best> results(ranges.size());
    if (ranges.size() <= 1) {
        for (std::size_t i = 0; i < ranges.size(); ++i)
            worker(ranges[i].first, ranges[i].second, results[i]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(ranges.size());
        for (std::size_t i = 0; i < ranges.size(); ++i)
            pool.emplace_back([&, i] { worker(ranges[i].first, ranges[i].second, results[i]); });
        for (auto& t : pool) t.join();
    }
    // chunks are ordered by a1, so first-wins on ties keeps the witness
    // lexicographically smallest regardless of the chunk count
    Best best;
    for (const auto& r : results)
        if (r.count > best.count) best = r;
    return best;
}

struct BestPair {
    std::int64_t count = -1;
    std::uint64_t a1 = 0, a2 = 0;
};

struct BestDiff {
    std::int64_t count = -1;
    std::uint64_t a1 = 0, a2 = 0;
    unsigned b = 0;
};

struct BestJoint {
    std::int64_t count = -1;
    std::uint64_t a1 = 0, a2 = 0;
    unsigned b1 = 0, b2 = 0;
};

bool packable(const HashFamily& fam) {
    return fam.functions <= 8 && fam.range <= 256 && fam.domain <= UINT32_MAX;
}

std::vector<std::uint64_t> pack_elements(const HashFamily& fam) {
    std::vector<std::uint64_t> words(fam.domain, 0);
    for (std::size_t a = 0; a < fam.domain; ++a) {
        std::uint64_t w = 0;
        for (std::size_t i = fam.functions; i-- > 0;)
            w = (w << 8) | fam.value(i, a);
        words[a] = w;
    }
    return words;
}

// Exact max-agreement search by coordinate-subset bucketing. Descends from
// full agreement: at the first level c where some subset of c coordinates
// has two elements with equal projections, no pair agrees on more than c
// coordinates, so every such pair agrees on exactly its bucket's subset.
BestPair projection_best(const HashFamily& fam, const std::vector<std::uint64_t>& words) {
    const unsigned nfun = static_cast<unsigned>(fam.functions);
    std::vector<std::vector<unsigned>> masks_by_size(nfun + 1);
    for (unsigned mask = 1; mask < (1u << nfun); ++mask)
        masks_by_size[std::popcount(mask)].push_back(mask);

    std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed(fam.domain);
    for (unsigned level = nfun; level >= 1; --level) {
        BestPair best;
        for (unsigned mask : masks_by_size[level]) {
            std::uint64_t byte_mask = 0;
            for (unsigned i = 0; i < nfun; ++i)
                if (mask & (1u << i)) byte_mask |= std::uint64_t(0xff) << (8 * i);
            for (std::size_t a = 0; a < fam.domain; ++a)
                keyed[a] = {words[a] & byte_mask, static_cast<std::uint32_t>(a)};
            std::sort(keyed.begin(), keyed.end());
            for (std::size_t i = 0; i + 1 < keyed.size(); ++i) {
                if (keyed[i].first == keyed[i + 1].first) {
                    BestPair cand{static_cast<std::int64_t>(level), keyed[i].second,
                                  keyed[i + 1].second};
                    if (best.count < 0 || std::pair(cand.a1, cand.a2) < std::pair(best.a1, best.a2))
                        best = cand;
                    // skip to the end of this key run; its first two ids are
                    // already the lexicographically smallest pair inside it
                    while (i + 1 < keyed.size() && keyed[i].first == keyed[i + 1].first) ++i;
                }
            }
        }
        if (best.count >= 0) return best;
    }
    return BestPair{0, 0, 1};
}

void check_budget(__int128 events, std::uint64_t cap) {
    if (events > (__int128)cap) {
        const auto shown = events > (__int128)UINT64_MAX ? UINT64_MAX
                                                         : static_cast<std::uint64_t>(events);
        fail(Err::TooLarge, "measurement needs " + std::to_string(shown) +
                                " counting events; the cap is " + std::to_string(cap) +
                                " (raise the budget to proceed)");
    }
}

}  // namespace

EpsilonReport measure_epsilon_u(const HashFamily& fam, const MeasureOptions& opt) {
    const std::uint64_t n = fam.domain;
    const std::size_t nfun = fam.functions;
    check_budget((__int128)n * (n - 1) / 2 * nfun, opt.max_events);

    auto algo = opt.algo;
    if (algo == MeasureOptions::Algo::automatic)
        algo = (packable(fam) && n > 4096) ? MeasureOptions::Algo::projection
                                           : MeasureOptions::Algo::pair_scan;
    if (algo == MeasureOptions::Algo::projection && !packable(fam))
        fail(Err::BadParams, "projection search needs N <= 8 and m <= 256");

    BestPair best;
    if (algo == MeasureOptions::Algo::projection) {
        best = projection_best(fam, pack_elements(fam));
    } else {
        const std::uint16_t* tbl = fam.table.data();
        best = run_pair_chunks<BestPair>(
            n, effective_threads(opt.threads),
            [&](std::uint64_t lo, std::uint64_t hi, BestPair& out) {
                for (std::uint64_t a1 = lo; a1 < hi; ++a1) {
                    const std::uint16_t* c1 = tbl + a1 * nfun;
                    for (std::uint64_t a2 = a1 + 1; a2 < n; ++a2) {
                        const std::uint16_t* c2 = tbl + a2 * nfun;
                        unsigned cnt = 0;
                        for (std::size_t i = 0; i < nfun; ++i) cnt += (c1[i] == c2[i]);
                        if (static_cast<std::int64_t>(cnt) > out.count)
                            out = {static_cast<std::int64_t>(cnt), a1, a2};
                    }
                }
            });
    }

    EpsilonReport rep;
    rep.worst_count = static_cast<std::uint64_t>(best.count);
    rep.epsilon = Rat(static_cast<std::int64_t>(best.count), static_cast<std::int64_t>(nfun));
    rep.witness_a1 = best.a1;
    rep.witness_a2 = best.a2;
    return rep;
}

EpsilonReport measure_epsilon_delta(const HashFamily& fam, const MeasureOptions& opt) {
    const std::uint64_t n = fam.domain;
    const std::size_t nfun = fam.functions;
    const unsigned m = fam.range;
    check_budget((__int128)n * (n - 1) / 2 * nfun * m, opt.max_events);

    const std::uint16_t* tbl = fam.table.data();
    BestDiff best = run_pair_chunks<BestDiff>(
        n, effective_threads(opt.threads),
        [&](std::uint64_t lo, std::uint64_t hi, BestDiff& out) {
            std::vector<std::uint32_t> counts(m, 0);
            for (std::uint64_t a1 = lo; a1 < hi; ++a1) {
                const std::uint16_t* c1 = tbl + a1 * nfun;
                for (std::uint64_t a2 = a1 + 1; a2 < n; ++a2) {
                    const std::uint16_t* c2 = tbl + a2 * nfun;
                    for (std::size_t i = 0; i < nfun; ++i) ++counts[fam.diff(c1[i], c2[i])];
                    for (unsigned b = 0; b < m; ++b)
                        if (static_cast<std::int64_t>(counts[b]) > out.count)
                            out = {static_cast<std::int64_t>(counts[b]), a1, a2, b};
                    for (std::size_t i = 0; i < nfun; ++i) counts[fam.diff(c1[i], c2[i])] = 0;
                }
            }
        });

    EpsilonReport rep;
    rep.worst_count = static_cast<std::uint64_t>(best.count);
    rep.epsilon = Rat(best.count, static_cast<std::int64_t>(nfun));
    rep.witness_a1 = best.a1;
    rep.witness_a2 = best.a2;
    rep.witness_b = best.b;
    return rep;
}

EpsilonReport measure_epsilon_su(const HashFamily& fam, const MeasureOptions& opt) {
    const std::uint64_t n = fam.domain;
    const std::size_t nfun = fam.functions;
    const unsigned m = fam.range;
    check_budget((__int128)n * (n - 1) / 2 * nfun * m * m, opt.max_events);

    bool balanced = (nfun % m == 0);
    if (balanced) {
        const std::uint64_t expected = nfun / m;
        std::vector<std::uint64_t> hits(m, 0);
        for (std::uint64_t a = 0; a < n && balanced; ++a) {
            std::fill(hits.begin(), hits.end(), 0);
            for (std::size_t i = 0; i < nfun; ++i) ++hits[fam.value(i, a)];
            for (unsigned b = 0; b < m; ++b)
                if (hits[b] != expected) {
                    balanced = false;
                    break;
                }
        }
    }

    const std::uint16_t* tbl = fam.table.data();
    BestJoint best = run_pair_chunks<BestJoint>(
        n, effective_threads(opt.threads),
        [&](std::uint64_t lo, std::uint64_t hi, BestJoint& out) {
            std::vector<std::uint32_t> joint(std::size_t(m) * m, 0);
            for (std::uint64_t a1 = lo; a1 < hi; ++a1) {
                const std::uint16_t* c1 = tbl + a1 * nfun;
                for (std::uint64_t a2 = a1 + 1; a2 < n; ++a2) {
                    const std::uint16_t* c2 = tbl + a2 * nfun;
                    for (std::size_t i = 0; i < nfun; ++i) ++joint[std::size_t(c1[i]) * m + c2[i]];
                    for (unsigned b1 = 0; b1 < m; ++b1)
                        for (unsigned b2 = 0; b2 < m; ++b2) {
                            const auto cnt =
                                static_cast<std::int64_t>(joint[std::size_t(b1) * m + b2]);
                            if (cnt > out.count) out = {cnt, a1, a2, b1, b2};
                        }
                    for (std::size_t i = 0; i < nfun; ++i) joint[std::size_t(c1[i]) * m + c2[i]] = 0;
                }
            }
        });

    EpsilonReport rep;
    rep.worst_count = static_cast<std::uint64_t>(best.count);
    rep.epsilon = Rat(best.count * static_cast<std::int64_t>(m), static_cast<std::int64_t>(nfun));
    rep.witness_a1 = best.a1;
    rep.witness_a2 = best.a2;
    rep.witness_values = std::pair(best.b1, best.b2);
    rep.balanced = balanced;
    return rep;
}

namespace {

void check_table_size(std::uint64_t words, std::uint64_t length, const CodeLimits& limits) {
    if (words > limits.max_items || (__int128)words * length > (__int128)8 * limits.max_items)
        fail(Err::TooLarge, "family table of " + std::to_string(words) + " x " +
                                std::to_string(length) + " entries exceeds the cap");
}

RangeGroup natural_group(unsigned m) {
    return is_prime_power(m) ? RangeGroup::field_additive : RangeGroup::cyclic;
}

}  // namespace

HashFamily code_to_family(const LinearCode& code, const CodeLimits& limits) {
    const std::uint64_t k = code.size_u64();
    check_table_size(k, code.length, limits);
    std::vector<std::uint16_t> table(k * code.length);
    code.for_each_codeword([&](std::uint64_t label, const Word& w) {
        std::copy(w.begin(), w.end(), table.begin() + label * code.length);
        return true;
    });
    return HashFamily(code.length, k, code.q(), std::move(table), RangeGroup::field_additive,
                      code.field);
}

HashFamily code_to_family(const GenericCode& code, const CodeLimits& limits) {
    const std::uint64_t k = code.size();
    check_table_size(k, code.length, limits);
    std::vector<std::uint16_t> table(k * code.length);
    for (std::uint64_t a = 0; a < k; ++a)
        std::copy(code.words[a].begin(), code.words[a].end(), table.begin() + a * code.length);
    FieldPtr rf;
    RangeGroup g = natural_group(code.q());
    if (g == RangeGroup::field_additive) rf = field_create(code.q());
    return HashFamily(code.length, k, code.q(), std::move(table), g, std::move(rf));
}

FamilyCodeResult family_to_code(const HashFamily& fam) {
    std::set<Word> seen;
    std::vector<Word> words;
    words.reserve(fam.domain);
    for (std::uint64_t a = 0; a < fam.domain; ++a) {
        Word w(fam.functions);
        for (std::size_t i = 0; i < fam.functions; ++i) w[i] = fam.value(i, a);
        if (seen.insert(w).second) words.push_back(std::move(w));
    }
    const bool removed = words.size() < fam.domain;
    return FamilyCodeResult{GenericCode(fam.range, std::move(words)), removed};
}

HashFamily code_to_delta_family(const LinearCode& code, const CodeLimits& limits) {
    const FiniteField& f = *code.field;
    const unsigned q = code.q();
    if (code.dim < 2)
        fail(Err::BadParams, "difference construction needs dimension >= 2");
    const Word allones(code.length, 1);
    if (!code.contains(allones))
        fail(Err::AllOnesNotInCode, "the all-ones word is not in the code");

    const std::uint64_t total = code.size_u64();
    if (total > limits.max_items)
        fail(Err::TooLarge, "coset enumeration over " + std::to_string(total) +
                                " codewords exceeds the cap");

    std::set<Word> reps;
    code.for_each_codeword([&](std::uint64_t, const Word& w) {
        Word best = w;
        Word shifted(w.size());
        for (unsigned lambda = 1; lambda < q; ++lambda) {
            for (std::size_t j = 0; j < w.size(); ++j)
                shifted[j] = static_cast<std::uint16_t>(f.add(w[j], lambda));
            if (shifted < best) best = shifted;
        }
        reps.insert(best);
        return true;
    });

    const std::uint64_t expected = total / q;
    if (reps.size() != expected)
        fail(Err::BadParams, "coset count mismatch");  // not reachable for valid input
    check_table_size(expected, code.length, limits);

    std::vector<std::uint16_t> table(expected * code.length);
    std::uint64_t a = 0;
    for (const Word& rep : reps) {
        std::copy(rep.begin(), rep.end(), table.begin() + a * code.length);
        ++a;
    }
    return HashFamily(code.length, expected, q, std::move(table), RangeGroup::field_additive,
                      code.field);
}

}  // namespace uhf
