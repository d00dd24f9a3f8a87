#ifndef QASYM_BFILE_HPP
#define QASYM_BFILE_HPP

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qasym/errors.hpp"
#include "qasym/series.hpp"

namespace qasym {

// OEIS b-file: one "n a(n)" pair per line, '#' comments and blank lines
// allowed, indices consecutive.
struct BFile {
    std::int64_t offset = 0;
    std::vector<mpz_class> values;

    std::int64_t last_index() const {
        return offset + static_cast<std::int64_t>(values.size()) - 1;
    }
    const mpz_class& at(std::int64_t n) const {
        if (n < offset || n > last_index())
            throw DomainError("b-file index out of range");
        return values[static_cast<std::size_t>(n - offset)];
    }
};

inline BFile read_bfile(std::istream& in) {
    BFile out;
    std::string line;
    std::int64_t lineno = 0;
    bool have_any = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line.substr(start));
        std::int64_t n;
        std::string value;
        if (!(ls >> n >> value))
            throw FormatError("malformed b-file line " + std::to_string(lineno));
        std::string trail;
        if (ls >> trail && trail[0] != '#')
            throw FormatError("trailing content on b-file line " + std::to_string(lineno));
        mpz_class a;
        if (a.set_str(value, 10) != 0)
            throw FormatError("invalid integer on b-file line " + std::to_string(lineno));
        if (!have_any) {
            out.offset = n;
            have_any = true;
        } else if (n != out.last_index() + 1) {
            throw GapError("non-consecutive index " + std::to_string(n) +
                           " on b-file line " + std::to_string(lineno));
        }
        out.values.push_back(a);
    }
    if (!have_any) throw FormatError("b-file contains no data lines");
    return out;
}

inline void write_bfile(std::ostream& out, const BFile& bf) {
    for (std::size_t i = 0; i < bf.values.size(); ++i)
        out << bf.offset + static_cast<std::int64_t>(i) << " "
            << bf.values[i].get_str() << "\n";
}

inline BFile to_bfile(const SeriesPoly& p, std::int64_t offset = 0) {
    BFile bf;
    bf.offset = offset;
    bf.values.assign(p.coeffs.begin() + offset, p.coeffs.end());
    return bf;
}

// Compare expanded coefficients against a b-file; throws MismatchError at the
// first differing index. Returns the number of indices compared.
inline std::int64_t cross_check(const SeriesPoly& p, const BFile& bf) {
    if (bf.offset < 0 || bf.offset > p.order())
        throw MismatchError("b-file offset " + std::to_string(bf.offset) +
                            " outside expanded range");
    std::int64_t upto = std::min(p.order(), bf.last_index());
    for (std::int64_t n = bf.offset; n <= upto; ++n) {
        if (p.at(n) != bf.at(n))
            throw MismatchError("coefficient mismatch at n=" + std::to_string(n) +
                                ": expanded " + p.at(n).get_str() + ", file " +
                                bf.at(n).get_str());
    }
    return upto - bf.offset + 1;
}

} // namespace qasym

#endif
