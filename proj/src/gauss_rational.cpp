#include "crsym/gauss_rational.hpp"

#include <cctype>

namespace crsym {

std::string rational_str(const mpq_class& q) {
    return q.get_str();
}

mpq_class parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("empty rational");
    if (t[0] == '+') t.erase(0, 1);
    std::size_t start = t[0] == '-' ? 1 : 0;
    bool slash = false;
    for (std::size_t k = start; k < t.size(); ++k) {
        if (t[k] == '/') {
            if (slash || k == start || k + 1 == t.size()) throw std::invalid_argument("bad rational: " + s);
            slash = true;
        } else if (!std::isdigit(static_cast<unsigned char>(t[k]))) {
            throw std::invalid_argument("bad rational: " + s);
        }
    }
    if (start == t.size()) throw std::invalid_argument("bad rational: " + s);
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (slash && sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string GaussRational::str() const {
    if (sgn(im_) == 0) return rational_str(re_);
    std::string ims = rational_str(abs(im_)) + "*i";
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + ims;
    return rational_str(re_) + (sgn(im_) < 0 ? "-" : "+") + ims;
}

namespace {

GaussRational parse_part(const std::string& p) {
    if (p.size() >= 1 && p.back() == 'i') {
        std::string body = p.substr(0, p.size() - 1);
        if (!body.empty() && body.back() == '*') body.pop_back();
        else if (!body.empty() && body != "+" && body != "-") throw std::invalid_argument("bad gaussian rational: " + p);
        if (body.empty() || body == "+") return GaussRational(0, 1);
        if (body == "-") return GaussRational(0, -1);
        return GaussRational(0, parse_rational(body));
    }
    return GaussRational(parse_rational(p));
}

}  // namespace

GaussRational GaussRational::parse(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("empty gaussian rational");
    std::size_t cut = std::string::npos;
    for (std::size_t k = 1; k < t.size(); ++k)
        if (t[k] == '+' || t[k] == '-') cut = k;
    if (cut == std::string::npos) return parse_part(t);
    GaussRational a = parse_part(t.substr(0, cut));
    GaussRational b = parse_part(t.substr(cut));
    if (!a.is_real() || b.is_real()) throw std::invalid_argument("bad gaussian rational: " + s);
    return a + b;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& g) {
    return os << g.str();
}

}  // namespace crsym
