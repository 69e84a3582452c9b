#ifndef UHF_IO_HPP
#define UHF_IO_HPP

#include <iosfwd>
#include <string>

#include "uhf/codes.hpp"
#include "uhf/family.hpp"

namespace uhf {

// Text formats, all whitespace-separated decimal integers.
//
// Linear code:   line 1 "q k N", then k generator rows of N entries.
// Generic code:  line 1 "q K N", then K codeword rows of N entries.
// Hash family:   line 1 "N n m [group]" with group in {zm, gf} (default zm),
//                then N rows of n entries; row i is the function h_i.

void write_linear_code(const LinearCode& code, std::ostream& out);
LinearCode read_linear_code(std::istream& in);

void write_generic_code(const GenericCode& code, std::ostream& out);
GenericCode read_generic_code(std::istream& in);

void write_family(const HashFamily& fam, std::ostream& out);
HashFamily read_family(std::istream& in);

LinearCode load_linear_code(const std::string& path);
GenericCode load_generic_code(const std::string& path);
HashFamily load_family(const std::string& path);

void save_linear_code(const LinearCode& code, const std::string& path);
void save_generic_code(const GenericCode& code, const std::string& path);
void save_family(const HashFamily& fam, const std::string& path);

}  // namespace uhf

#endif
