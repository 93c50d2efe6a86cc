#include "crsym/sparse_elim.hpp"

#include <algorithm>
#include <stdexcept>

namespace crsym {

namespace {

void make_primitive(IntRow& r) {
    mpz_class g = 0;
    for (const auto& [c, v] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(r.front().second) < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// a*r - b*p
IntRow combine(const mpz_class& a, const IntRow& r, const mpz_class& b, const IntRow& p) {
    IntRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, a * r[i].second);
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -b * p[j].second);
            ++j;
        } else {
            mpz_class v = a * r[i].second - b * p[j].second;
            if (sgn(v) != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

bool IntEchelon::add_row(IntRow r) {
    while (!r.empty()) {
        int c = r.front().first;
        if (c < 0 || c >= cols()) throw std::out_of_range("column index");
        auto& p = pivot_[c];
        if (!p) {
            make_primitive(r);
            p = std::move(r);
            ++rank_;
            return true;
        }
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), p->front().second.get_mpz_t(), r.front().second.get_mpz_t());
        mpz_class a = p->front().second / g;
        mpz_class b = r.front().second / g;
        r = combine(a, r, b, *p);
        if (!r.empty()) make_primitive(r);
    }
    return false;
}

std::vector<std::vector<mpq_class>> IntEchelon::nullspace() const {
    std::vector<int> pivots;
    for (int c = 0; c < cols(); ++c)
        if (pivot_[c]) pivots.push_back(c);
    std::vector<std::vector<mpq_class>> out;
    for (int f = 0; f < cols(); ++f) {
        if (pivot_[f]) continue;
        std::vector<mpq_class> x(cols());
        x[f] = 1;
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            const IntRow& row = *pivot_[*it];
            mpq_class s = 0;
            for (std::size_t k = 1; k < row.size(); ++k)
                if (sgn(x[row[k].first]) != 0) s += mpq_class(row[k].second) * x[row[k].first];
            if (sgn(s) != 0) x[*it] = -s / mpq_class(row.front().second);
        }
        out.push_back(std::move(x));
    }
    return out;
}

IntRow to_int_row(const std::vector<std::pair<int, mpq_class>>& row) {
    mpz_class l = 1;
    for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    IntRow out;
    out.reserve(row.size());
    for (const auto& [c, v] : row) {
        if (sgn(v) == 0) continue;
        mpz_class x = v.get_num() * (l / v.get_den());
        out.emplace_back(c, std::move(x));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!out.empty()) make_primitive(out);
    return out;
}

}  // namespace crsym
