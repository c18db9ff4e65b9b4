#include "bergball/multiindex.hpp"

#include <algorithm>
#include <cctype>

namespace bergball {

void MultiIndex::validate() const {
    if (c_.empty()) throw DimensionMismatch("multi-index must have dimension >= 1");
    for (int a : c_)
        if (a < 0) throw PreconditionViolation("multi-index entries must be >= 0");
}

MultiIndex MultiIndex::unit(int dimension, int j) {
    MultiIndex e(dimension);
    if (j < 1 || j > dimension)
        throw DimensionMismatch("unit index out of range");
    e[j - 1] = 1;
    return e;
}

int MultiIndex::order() const {
    int s = 0;
    for (int a : c_) s += a;
    return s;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
    if (o.dimension() != dimension()) throw DimensionMismatch("multi-index '+' lengths differ");
    MultiIndex r = *this;
    for (size_t j = 0; j < c_.size(); ++j) r.c_[j] += o.c_[j];
    return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
    if (o.dimension() != dimension()) throw DimensionMismatch("multi-index '-' lengths differ");
    MultiIndex r = *this;
    for (size_t j = 0; j < c_.size(); ++j) {
        r.c_[j] -= o.c_[j];
        if (r.c_[j] < 0) throw PreconditionViolation("multi-index difference went negative");
    }
    return r;
}

bool MultiIndex::leq(const MultiIndex& o) const {
    if (o.dimension() != dimension()) throw DimensionMismatch("multi-index 'leq' lengths differ");
    for (size_t j = 0; j < c_.size(); ++j)
        if (c_[j] > o.c_[j]) return false;
    return true;
}

MultiIndex MultiIndex::meet(const MultiIndex& o) const {
    if (o.dimension() != dimension()) throw DimensionMismatch("multi-index 'meet' lengths differ");
    MultiIndex r = *this;
    for (size_t j = 0; j < c_.size(); ++j) r.c_[j] = std::min(r.c_[j], o.c_[j]);
    return r;
}

Integer MultiIndex::factorial() const {
    Integer f = 1;
    for (int a : c_)
        for (int k = 2; k <= a; ++k) f *= k;
    return f;
}

bool MultiIndex::operator<(const MultiIndex& o) const {
    if (dimension() != o.dimension())
        throw DimensionMismatch("comparing multi-indices of different dimension");
    int da = order(), db = o.order();
    if (da != db) return da < db;
    return c_ < o.c_;
}

std::string MultiIndex::to_string() const {
    std::string s = "(";
    for (size_t j = 0; j < c_.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(c_[j]);
    }
    return s + ")";
}

MultiIndex parse_multiindex(const std::string& s) {
    std::vector<int> parts;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    skip_ws();
    bool parenthesized = pos < s.size() && s[pos] == '(';
    if (parenthesized) ++pos;
    while (true) {
        skip_ws();
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw ParseError("expected digits in multi-index '" + s + "'");
        parts.push_back(std::stoi(s.substr(dstart, pos - dstart)));
        skip_ws();
        if (pos < s.size() && s[pos] == ',') { ++pos; continue; }
        break;
    }
    if (parenthesized) {
        if (pos >= s.size() || s[pos] != ')') throw ParseError("missing ')' in multi-index '" + s + "'");
        ++pos;
        skip_ws();
    }
    if (pos != s.size()) throw ParseError("trailing characters in multi-index '" + s + "'");
    return MultiIndex(std::move(parts));
}

namespace {

void enumerate(int dimension, int slot, int remaining, bool exact,
               std::vector<int>& scratch, std::vector<MultiIndex>& out) {
    if (slot == dimension - 1) {
        if (exact) {
            scratch[static_cast<size_t>(slot)] = remaining;
            out.push_back(MultiIndex(scratch));
        } else {
            for (int a = 0; a <= remaining; ++a) {
                scratch[static_cast<size_t>(slot)] = a;
                out.push_back(MultiIndex(scratch));
            }
        }
        return;
    }
    for (int a = 0; a <= remaining; ++a) {
        scratch[static_cast<size_t>(slot)] = a;
        enumerate(dimension, slot + 1, remaining - a, exact, scratch, out);
    }
}

} // namespace

std::vector<MultiIndex> multiindices_of_order(int dimension, int order) {
    if (dimension < 1) throw DimensionMismatch("dimension must be >= 1");
    if (order < 0) return {};
    std::vector<int> scratch(static_cast<size_t>(dimension), 0);
    std::vector<MultiIndex> out;
    enumerate(dimension, 0, order, true, scratch, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiIndex> multiindices_up_to(int dimension, int bound) {
    if (dimension < 1) throw DimensionMismatch("dimension must be >= 1");
    std::vector<MultiIndex> out;
    for (int d = 0; d <= bound; ++d) {
        auto layer = multiindices_of_order(dimension, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace bergball
