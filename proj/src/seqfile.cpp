#include "excomp/seqfile.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace excomp {

namespace {

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
    std::uint64_t v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || text.empty())
        throw ParseError("invalid " + what + ": '" + text + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(strip(cur));
    return out;
}

} // namespace

std::pair<std::uint32_t, std::uint32_t> parse_field_order(const std::string& text) {
    const auto caret = text.find('^');
    const std::uint64_t p = parse_uint(strip(text.substr(0, caret)), "characteristic");
    const std::uint64_t m = caret == std::string::npos ? 1 : parse_uint(strip(text.substr(caret + 1)), "extension degree");
    if (p > kMaxFieldOrder || m > 64) throw ParseError("field order out of range: " + text);
    return {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m)};
}

Sequence parse_sequence(std::istream& in) {
    std::optional<std::pair<std::uint32_t, std::uint32_t>> order;
    std::optional<std::vector<std::uint32_t>> modulus;
    std::optional<Periodicity> meta;
    std::vector<std::uint64_t> body;
    bool in_body = false;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = strip(line);
        if (line.empty()) continue;
        const std::string where = "line " + std::to_string(lineno) + ": ";

        if (auto eq = line.find('='); eq != std::string::npos) {
            if (in_body) throw ParseError(where + "header line after the sequence body");
            const std::string key = strip(line.substr(0, eq)), value = strip(line.substr(eq + 1));
            if (key == "q") {
                if (order) throw ParseError(where + "duplicate q= header");
                order = parse_field_order(value);
            } else if (key == "mod") {
                std::vector<std::uint32_t> coeffs;
                for (const auto& c : split(value, ',')) coeffs.push_back(static_cast<std::uint32_t>(parse_uint(c, "modulus coefficient")));
                modulus = std::move(coeffs);
            } else if (key == "meta") {
                Periodicity per{};
                bool have_t = false, have_T = false;
                for (const auto& item : split(value, ',')) {
                    const auto colon = item.find(':');
                    if (colon == std::string::npos) throw ParseError(where + "meta entries look like t:<n>,T:<n>");
                    const std::string k = strip(item.substr(0, colon));
                    const std::uint64_t v = parse_uint(strip(item.substr(colon + 1)), "meta value");
                    if (k == "t") {
                        per.preperiod = v;
                        have_t = true;
                    } else if (k == "T") {
                        per.period = v;
                        have_T = true;
                    } else {
                        throw ParseError(where + "unknown meta key '" + k + "'");
                    }
                }
                if (!have_t || !have_T) throw ParseError(where + "meta needs both t and T");
                meta = per;
            } else {
                throw ParseError(where + "unknown header '" + key + "'");
            }
            continue;
        }

        in_body = true;
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) body.push_back(parse_uint(tok, "element index"));
    }

    if (!order) throw ParseError("missing q= header");
    Field field;
    try {
        field = Field::make(order->first, order->second, modulus);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad field header: ") + e.what());
    }
    std::vector<Elem> terms;
    terms.reserve(body.size());
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] >= field.order())
            throw ParseError("element " + std::to_string(body[i]) + " at position " + std::to_string(i) +
                             " is not below q=" + std::to_string(field.order()));
        terms.push_back(Elem{static_cast<std::uint32_t>(body[i])});
    }
    try {
        return Sequence(field, std::move(terms), meta);
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

Sequence parse_sequence_string(const std::string& text) {
    std::istringstream is(text);
    return parse_sequence(is);
}

Sequence load_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_sequence(in);
}

std::string canonical_body(const Sequence& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(seq[i].v);
    }
    return out;
}

std::string format_sequence(const Sequence& seq) {
    const Field& f = seq.field();
    std::ostringstream os;
    os << "q=" << f.characteristic();
    if (f.degree() > 1) os << "^" << f.degree();
    os << "\n";
    if (f.degree() > 1) {
        os << "mod=";
        for (std::size_t i = 0; i < f.modulus().size(); ++i) os << (i ? "," : "") << f.modulus()[i];
        os << "\n";
    }
    if (seq.meta()) os << "meta=t:" << seq.meta()->preperiod << ",T:" << seq.meta()->period << "\n";
    os << canonical_body(seq) << "\n";
    return os.str();
}

std::string body_digest(const Sequence& seq) {
    const std::string body = canonical_body(seq);
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(body.data(), body.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 digest failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

} // namespace excomp
