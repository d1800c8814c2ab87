#include "polebound/complex.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <system_error>

namespace polebound {

std::string format_double(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_complex(Complex z) {
    const double re = z.real();
    const double im = z.imag();
    if (im == 0.0) return format_double(re);

    std::string imag_part;
    const double mag = std::abs(im);
    if (mag == 1.0) {
        imag_part = "i";
    } else {
        imag_part = format_double(mag) + "i";
    }

    if (re == 0.0) return (im < 0 ? "-" : "") + imag_part;
    return format_double(re) + (im < 0 ? "-" : "+") + imag_part;
}

namespace {

// Scans one signed real literal starting at pos; returns end position.
// Returns pos unchanged when no digits are present (e.g. bare "i").
std::size_t scan_real(const std::string& s, std::size_t pos) {
    std::size_t p = pos;
    if (p < s.size() && (s[p] == '+' || s[p] == '-')) ++p;
    std::size_t digits_start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p < s.size() && s[p] == '.') {
        ++p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    }
    if (p == digits_start || (p == digits_start + 1 && s[digits_start] == '.'))
        return pos;  // no digits
    if (p < s.size() && (s[p] == 'e' || s[p] == 'E')) {
        std::size_t q = p + 1;
        if (q < s.size() && (s[q] == '+' || s[q] == '-')) ++q;
        std::size_t exp_start = q;
        while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
        if (q > exp_start) p = q;
    }
    return p;
}

double to_double(const std::string& s, std::size_t begin, std::size_t end) {
    double value = 0.0;
    const char* first = s.data() + begin;
    const char* last = s.data() + end;
    if (first != last && *first == '+') ++first;  // from_chars rejects leading '+'
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("malformed number in complex literal: " + s);
    return value;
}

}  // namespace

Complex parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty complex literal");

    // One or two signed terms; each term is a real or an imaginary ("...i").
    double re = 0.0, im = 0.0;
    bool saw_re = false, saw_im = false;
    bool first_term = true;
    std::size_t pos = 0;
    while (pos < s.size()) {
        double sign = 1.0;
        std::size_t term_start = pos;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1.0;
        } else if (!first_term) {
            throw std::invalid_argument("malformed complex literal: " + text);
        }
        first_term = false;
        std::size_t num_end = scan_real(s, pos);
        bool has_number = num_end != pos;
        double value = has_number ? to_double(s, pos + (s[pos] == '+' ? 1 : 0), num_end)
                                  : sign;  // bare "i" / "-i"
        if (has_number) {
            pos = num_end;
        } else {
            // only a sign (or nothing) before 'i'
            if (s[pos] == '+' || s[pos] == '-') ++pos;
        }
        if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'I')) {
            if (saw_im) throw std::invalid_argument("duplicate imaginary part: " + text);
            im = value;
            saw_im = true;
            ++pos;
        } else {
            if (!has_number || saw_re)
                throw std::invalid_argument("malformed complex literal: " + text);
            re = value;
            saw_re = true;
        }
        if (pos == term_start)
            throw std::invalid_argument("malformed complex literal: " + text);
    }
    if (!saw_re && !saw_im) throw std::invalid_argument("malformed complex literal: " + text);
    return {re, im};
}

}  // namespace polebound
