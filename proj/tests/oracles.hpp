// Definitional reference counts used as independent oracles in tests: plain
// nested loops straight from the definitions, kept free of the library's
// search strategies.
#ifndef UHF_TEST_ORACLES_HPP
#define UHF_TEST_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "uhf/family.hpp"

namespace oracle {

struct Worst {
    std::uint64_t count = 0;
    std::uint64_t a1 = 0, a2 = 0;
    unsigned b = 0;
    unsigned b1 = 0, b2 = 0;
};

inline Worst u_worst(const uhf::HashFamily& fam) {
    Worst best;
    bool first = true;
    for (std::uint64_t a1 = 0; a1 < fam.domain; ++a1)
        for (std::uint64_t a2 = a1 + 1; a2 < fam.domain; ++a2) {
            std::uint64_t cnt = 0;
            for (std::size_t i = 0; i < fam.functions; ++i)
                cnt += (fam.value(i, a1) == fam.value(i, a2));
            if (first || cnt > best.count) {
                best.count = cnt;
                best.a1 = a1;
                best.a2 = a2;
                first = false;
            }
        }
    return best;
}

inline Worst delta_worst(const uhf::HashFamily& fam) {
    Worst best;
    bool first = true;
    for (std::uint64_t a1 = 0; a1 < fam.domain; ++a1)
        for (std::uint64_t a2 = a1 + 1; a2 < fam.domain; ++a2)
            for (unsigned b = 0; b < fam.range; ++b) {
                std::uint64_t cnt = 0;
                for (std::size_t i = 0; i < fam.functions; ++i)
                    cnt += (fam.diff(fam.value(i, a1), fam.value(i, a2)) == b);
                if (first || cnt > best.count) {
                    best = Worst{cnt, a1, a2, b, 0, 0};
                    first = false;
                }
            }
    return best;
}

inline Worst su_worst(const uhf::HashFamily& fam) {
    Worst best;
    bool first = true;
    for (std::uint64_t a1 = 0; a1 < fam.domain; ++a1)
        for (std::uint64_t a2 = a1 + 1; a2 < fam.domain; ++a2)
            for (unsigned b1 = 0; b1 < fam.range; ++b1)
                for (unsigned b2 = 0; b2 < fam.range; ++b2) {
                    std::uint64_t cnt = 0;
                    for (std::size_t i = 0; i < fam.functions; ++i)
                        cnt += (fam.value(i, a1) == b1 && fam.value(i, a2) == b2);
                    if (first || cnt > best.count) {
                        best = Worst{cnt, a1, a2, 0, b1, b2};
                        first = false;
                    }
                }
    return best;
}

inline bool is_balanced(const uhf::HashFamily& fam) {
    if (fam.functions % fam.range != 0) return false;
    for (std::uint64_t a = 0; a < fam.domain; ++a)
        for (unsigned b = 0; b < fam.range; ++b) {
            std::uint64_t cnt = 0;
            for (std::size_t i = 0; i < fam.functions; ++i) cnt += (fam.value(i, a) == b);
            if (cnt != fam.functions / fam.range) return false;
        }
    return true;
}

}  // namespace oracle

#endif
