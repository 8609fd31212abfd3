#ifndef EXCOMP_SEQFILE_HPP
#define EXCOMP_SEQFILE_HPP

#include <istream>
#include <stdexcept>
#include <string>

#include "excomp/lincomp.hpp"

namespace excomp {

/// Malformed sequence file or field header.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses the text sequence format:
///
///     q=2^3              # or q=7
///     mod=1,1,0,1        # optional, m+1 coefficients, constant first
///     meta=t:0,T:7       # optional declared preperiod/period
///     1 0 3 5 ...        # element indices, any whitespace
///
/// `#` starts a comment. Header lines must precede the body. Throws
/// ParseError for syntax errors, bad fields, indices >= q, or a meta line
/// that contradicts the body.
Sequence parse_sequence(std::istream& in);
Sequence parse_sequence_string(const std::string& text);
Sequence load_sequence_file(const std::string& path);

/// Parses "p" or "p^m" (the value of a q= header).
std::pair<std::uint32_t, std::uint32_t> parse_field_order(const std::string& text);

/// Serializes in the format above; round-trips through parse_sequence.
std::string format_sequence(const Sequence& seq);

/// Element indices separated by single spaces.
std::string canonical_body(const Sequence& seq);
/// Lower-case hex SHA-256 of canonical_body.
std::string body_digest(const Sequence& seq);

} // namespace excomp

#endif // EXCOMP_SEQFILE_HPP
