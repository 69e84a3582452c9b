#include "uhf/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace uhf {

namespace {

class LineReader {
  public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // next non-empty line split into unsigned integers
    std::vector<std::uint64_t> next(std::size_t expected, const char* what) {
        std::string line;
        while (std::getline(in_, line)) {
            ++lineno_;
            std::istringstream ss(line);
            std::vector<std::uint64_t> vals;
            std::string tok;
            while (ss >> tok) {
                std::uint64_t v = 0;
                for (char ch : tok) {
                    if (ch < '0' || ch > '9')
                        fail(Err::Parse, where() + ": '" + tok + "' is not a non-negative integer");
                    if (v > UINT64_MAX / 10) fail(Err::Parse, where() + ": integer too large");
                    v = v * 10 + static_cast<std::uint64_t>(ch - '0');
                }
                vals.push_back(v);
            }
            if (vals.empty()) continue;  // blank line
            if (expected != 0 && vals.size() != expected)
                fail(Err::Parse, where() + ": expected " + std::to_string(expected) + " values for " +
                                     what + ", got " + std::to_string(vals.size()));
            return vals;
        }
        fail(Err::Parse, "line " + std::to_string(lineno_ + 1) + ": unexpected end of file while reading " +
                             what);
    }

    // header row that may carry a trailing word
    std::pair<std::vector<std::uint64_t>, std::string> header(std::size_t numbers) {
        std::string line;
        while (std::getline(in_, line)) {
            ++lineno_;
            std::istringstream ss(line);
            std::vector<std::uint64_t> vals;
            std::string word;
            std::string tok;
            while (ss >> tok) {
                if (!tok.empty() && tok[0] >= '0' && tok[0] <= '9' && word.empty()) {
                    std::uint64_t v = 0;
                    for (char ch : tok) {
                        if (ch < '0' || ch > '9')
                            fail(Err::Parse, where() + ": '" + tok + "' is not an integer");
                        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
                    }
                    vals.push_back(v);
                } else if (word.empty()) {
                    word = tok;
                } else {
                    fail(Err::Parse, where() + ": unexpected token '" + tok + "'");
                }
            }
            if (vals.empty() && word.empty()) continue;
            if (vals.size() != numbers)
                fail(Err::Parse, where() + ": header needs " + std::to_string(numbers) +
                                     " integers, got " + std::to_string(vals.size()));
            return {vals, word};
        }
        fail(Err::Parse, "line 1: empty input");
    }

    std::string where() const { return "line " + std::to_string(lineno_); }

  private:
    std::istream& in_;
    std::size_t lineno_ = 0;
};

Word to_word(const std::vector<std::uint64_t>& vals, unsigned limit, const std::string& where,
             const char* what) {
    Word w(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i] >= limit)
            fail(Err::Parse, where + ": " + what + " entry " + std::to_string(vals[i]) +
                                 " is not below " + std::to_string(limit));
        w[i] = static_cast<std::uint16_t>(vals[i]);
    }
    return w;
}

}  // namespace

void write_linear_code(const LinearCode& code, std::ostream& out) {
    out << code.q() << ' ' << code.dim << ' ' << code.length << '\n';
    for (const auto& row : code.gen) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
        out << '\n';
    }
}

LinearCode read_linear_code(std::istream& in) {
    LineReader rd(in);
    const auto [hdr, word] = rd.header(3);
    if (!word.empty()) fail(Err::Parse, "line 1: unexpected token '" + word + "' in code header");
    const auto q = static_cast<unsigned>(hdr[0]);
    const auto k = hdr[1];
    const auto n = hdr[2];
    if (k == 0 || n == 0 || k > n) fail(Err::Parse, "line 1: need 1 <= k <= N");
    FieldPtr f = field_create(q);
    std::vector<Word> rows;
    rows.reserve(k);
    for (std::uint64_t i = 0; i < k; ++i) {
        const auto vals = rd.next(n, "a generator row");
        rows.push_back(to_word(vals, q, rd.where(), "generator"));
    }
    return LinearCode(std::move(f), std::move(rows));
}

void write_generic_code(const GenericCode& code, std::ostream& out) {
    out << code.q() << ' ' << code.size() << ' ' << code.length << '\n';
    for (const auto& w : code.words) {
        for (std::size_t j = 0; j < w.size(); ++j) out << (j ? " " : "") << w[j];
        out << '\n';
    }
}

GenericCode read_generic_code(std::istream& in) {
    LineReader rd(in);
    const auto [hdr, word] = rd.header(3);
    if (!word.empty()) fail(Err::Parse, "line 1: unexpected token '" + word + "' in code header");
    const auto q = static_cast<unsigned>(hdr[0]);
    const auto count = hdr[1];
    const auto n = hdr[2];
    if (count == 0 || n == 0) fail(Err::Parse, "line 1: need K >= 1 and N >= 1");
    if (count > (1u << 22)) fail(Err::TooLarge, "codeword list too large");
    std::vector<Word> words;
    words.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto vals = rd.next(n, "a codeword");
        words.push_back(to_word(vals, q, rd.where(), "codeword"));
    }
    return GenericCode(q, std::move(words));
}

void write_family(const HashFamily& fam, std::ostream& out) {
    out << fam.functions << ' ' << fam.domain << ' ' << fam.range << ' '
        << (fam.group == RangeGroup::field_additive ? "gf" : "zm") << '\n';
    for (std::size_t i = 0; i < fam.functions; ++i) {
        for (std::size_t a = 0; a < fam.domain; ++a) out << (a ? " " : "") << fam.value(i, a);
        out << '\n';
    }
}

HashFamily read_family(std::istream& in) {
    LineReader rd(in);
    const auto [hdr, word] = rd.header(3);
    const auto nfun = hdr[0];
    const auto domain = hdr[1];
    const auto range = static_cast<unsigned>(hdr[2]);
    RangeGroup group = RangeGroup::cyclic;
    if (word == "gf")
        group = RangeGroup::field_additive;
    else if (!word.empty() && word != "zm")
        fail(Err::Parse, "line 1: unknown range group '" + word + "' (expected zm or gf)");
    if (nfun == 0 || domain == 0 || range == 0) fail(Err::Parse, "line 1: zero dimension");
    if ((__int128)nfun * domain > (__int128)(1u << 26))
        fail(Err::TooLarge, "family table too large");
    std::vector<std::uint16_t> table(nfun * domain);
    for (std::uint64_t i = 0; i < nfun; ++i) {
        const auto vals = rd.next(domain, "a function row");
        for (std::uint64_t a = 0; a < domain; ++a) {
            if (vals[a] >= range)
                fail(Err::Parse, rd.where() + ": value " + std::to_string(vals[a]) +
                                     " is not below the range size " + std::to_string(range));
            table[a * nfun + i] = static_cast<std::uint16_t>(vals[a]);
        }
    }
    return HashFamily(nfun, domain, range, std::move(table), group,
                      group == RangeGroup::field_additive ? field_create(range) : nullptr);
}

namespace {

template <class T, class Reader>
T load(const std::string& path, Reader reader) {
    std::ifstream in(path);
    if (!in) fail(Err::Parse, "cannot open '" + path + "'");
    return reader(in);
}

template <class T, class Writer>
void save(const T& value, const std::string& path, Writer writer) {
    std::ofstream out(path);
    if (!out) fail(Err::Parse, "cannot write '" + path + "'");
    writer(value, out);
}

}  // namespace

LinearCode load_linear_code(const std::string& path) {
    return load<LinearCode>(path, [](std::istream& in) { return read_linear_code(in); });
}
GenericCode load_generic_code(const std::string& path) {
    return load<GenericCode>(path, [](std::istream& in) { return read_generic_code(in); });
}
HashFamily load_family(const std::string& path) {
    return load<HashFamily>(path, [](std::istream& in) { return read_family(in); });
}

void save_linear_code(const LinearCode& code, const std::string& path) {
    save(code, path, [](const LinearCode& c, std::ostream& o) { write_linear_code(c, o); });
}
void save_generic_code(const GenericCode& code, const std::string& path) {
    save(code, path, [](const GenericCode& c, std::ostream& o) { write_generic_code(c, o); });
}
void save_family(const HashFamily& fam, const std::string& path) {
    save(fam, path, [](const HashFamily& f, std::ostream& o) { write_family(f, o); });
}

}  // namespace uhf
