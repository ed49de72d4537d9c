#include "faithlab/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace faithlab {

Rat rat(long num, long den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rat q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = (s[0] == '-');
        s = s.substr(1);
    }
    const auto slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("not a rational \"p/q\": '" + text + "'");
    }
    Rat q(mpz_class(num), mpz_class(den));
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator in rational '" + text + "'");
    }
    q.canonicalize();
    if (negative) q = -q;
    return q;
}

std::string rat_str(const Rat& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rat rat_abs(const Rat& value) {
    return value < 0 ? Rat(-value) : value;
}

Rat rat_pow(const Rat& value, unsigned long exp) {
    Rat out = 1;
    Rat base = value;
    while (exp > 0) {
        if (exp & 1) out *= base;
        base *= base;
        exp >>= 1;
    }
    return out;
}

std::vector<Rat> parse_rat_list(const std::string& comma_separated) {
    std::vector<Rat> out;
    std::stringstream ss(comma_separated);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(parse_rat(item));
    }
    return out;
}

}  // namespace faithlab
