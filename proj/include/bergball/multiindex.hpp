#ifndef BERGBALL_MULTIINDEX_HPP
#define BERGBALL_MULTIINDEX_HPP

#include <string>
#include <vector>

#include "bergball/errors.hpp"
#include "bergball/scalar.hpp"

namespace bergball {

/**
 * A multi-index alpha = (a_1, ..., a_N) of nonnegative integers.  The length
 * is the ambient dimension N; all componentwise operations insist on equal
 * lengths and raise DimensionMismatch otherwise.
 *
 * The canonical ordering everywhere (container keys, serialization) is
 * graded lexicographic: first by |alpha|, ties broken lexicographically.
 */
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(int dimension) : c_(static_cast<size_t>(dimension), 0) {
        if (dimension < 1) throw DimensionMismatch("dimension must be >= 1");
    }
    MultiIndex(std::initializer_list<int> parts) : c_(parts) { validate(); }
    explicit MultiIndex(std::vector<int> parts) : c_(std::move(parts)) { validate(); }

    static MultiIndex unit(int dimension, int j);  // e_j, 1-based j

    int dimension() const { return static_cast<int>(c_.size()); }
    int operator[](int j) const { return c_[static_cast<size_t>(j)]; }
    int& operator[](int j) { return c_[static_cast<size_t>(j)]; }
    const std::vector<int>& parts() const { return c_; }

    /** |alpha| = a_1 + ... + a_N. */
    int order() const;

    bool is_zero() const { return order() == 0; }

    /** Componentwise sum. */
    MultiIndex operator+(const MultiIndex& o) const;
    /** Componentwise difference; requires o <= *this componentwise. */
    MultiIndex operator-(const MultiIndex& o) const;
    /** True when o dominates componentwise (this <= o everywhere). */
    bool leq(const MultiIndex& o) const;
    /** Componentwise minimum (the meet alpha ^ beta). */
    MultiIndex meet(const MultiIndex& o) const;

    /** alpha! = a_1! * ... * a_N!. */
    Integer factorial() const;

    bool operator==(const MultiIndex& o) const { return c_ == o.c_; }
    bool operator!=(const MultiIndex& o) const { return c_ != o.c_; }
    /** Graded-lexicographic order. */
    bool operator<(const MultiIndex& o) const;

    /** "(a1,...,aN)" */
    std::string to_string() const;

private:
    void validate() const;
    std::vector<int> c_;
};

/** Parse "(a1,...,aN)" (or a bare integer "a" as dimension 1). */
MultiIndex parse_multiindex(const std::string& s);

/** All multi-indices of the given dimension with |alpha| == order, graded-lex sorted. */
std::vector<MultiIndex> multiindices_of_order(int dimension, int order);

/** All multi-indices of the given dimension with |alpha| <= bound, graded-lex sorted. */
std::vector<MultiIndex> multiindices_up_to(int dimension, int bound);

} // namespace bergball

#endif
