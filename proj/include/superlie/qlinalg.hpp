#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superlie {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

// Parses "p", "p/q" or a terminating decimal such as "0.25". Result is canonical.
Scalar parse_scalar(const std::string& s);
std::string to_string(const Scalar& q);

// Sorted (index, value) pairs with no stored zeros.
class SparseVec {
public:
    using Entry = std::pair<int, Scalar>;

    SparseVec() = default;
    static SparseVec unit(int i, const Scalar& v = 1);
    static SparseVec from_dense(const Vec& v);
    // Entries may be unsorted and repeated; they are summed.
    static SparseVec from_terms(std::vector<Entry> terms);

    bool empty() const { return e_.empty(); }
    std::size_t size() const { return e_.size(); }
    const std::vector<Entry>& entries() const { return e_; }
    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

    Scalar get(int i) const;
    int lead() const { return e_.empty() ? -1 : e_.front().first; }
    int max_index() const { return e_.empty() ? -1 : e_.back().first; }
    Vec to_dense(int n) const;

    void axpy(const Scalar& a, const SparseVec& x);
    void scale(const Scalar& a);
    // Multiply by the positive rational making entries coprime integers.
    void make_primitive();

    friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.e_ == b.e_; }
    friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }
    friend bool operator<(const SparseVec& a, const SparseVec& b);

private:
    std::vector<Entry> e_;
};

SparseVec operator+(const SparseVec& a, const SparseVec& b);
SparseVec operator-(const SparseVec& a, const SparseVec& b);
SparseVec operator*(const Scalar& a, const SparseVec& x);
Scalar dot(const SparseVec& a, const Vec& b);
Scalar dot(const Vec& a, const Vec& b);

struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<SparseVec> row;  // size == rows

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), row(r) {}
    static SparseMatrix identity(int n);
    static SparseMatrix from_dense(const std::vector<Vec>& m);
    std::vector<Vec> to_dense() const;
    Scalar at(int i, int j) const { return row[i].get(j); }
    void set(int i, int j, const Scalar& v);
    SparseVec apply(const SparseVec& x) const;  // column vector product
    SparseMatrix transpose() const;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

// Incremental reduced row-echelon basis. Rows stay fully reduced, so reduction
// of a vector only needs its entries at pivot columns.
class Echelon {
public:
    explicit Echelon(bool track = false) : track_(track) {}

    // Adds v (with its expression `combo` in some generator set when tracking).
    // Returns false when v already lies in the span.
    bool add(const SparseVec& v, const SparseVec& combo = {});
    SparseVec reduce(const SparseVec& v) const;
    // Residual together with the combination that was subtracted.
    std::pair<SparseVec, SparseVec> reduce_tracked(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    int rank() const { return static_cast<int>(rows_.size()); }
    bool is_pivot(int col) const { return where_.count(col) > 0; }
    std::vector<int> pivots() const;
    // Rows ordered by pivot column: the canonical RREF basis.
    std::vector<SparseVec> basis() const;
    const SparseVec& row_for_pivot(int col) const { return rows_[where_.at(col)]; }

private:
    bool track_;
    std::vector<SparseVec> rows_;
    std::vector<SparseVec> combos_;
    std::vector<int> pivot_;
    std::map<int, int> where_;
};

// Coordinates with respect to a fixed linearly independent list.
class SpanCoordinates {
public:
    SpanCoordinates() = default;
    // Throws std::invalid_argument if the list is dependent.
    explicit SpanCoordinates(const std::vector<SparseVec>& basis);
    std::optional<SparseVec> coords(const SparseVec& v) const;
    int size() const { return n_; }

private:
    Echelon ech_{true};
    int n_ = 0;
};

struct RrefResult {
    int rank = 0;
    std::vector<int> pivots;
    SparseMatrix reduced;
};

RrefResult rref(const SparseMatrix& m);
std::vector<SparseVec> kernel(const SparseMatrix& m);
int rank(const SparseMatrix& m);
// Canonical RREF basis of span(vs).
std::vector<SparseVec> span_basis(const std::vector<SparseVec>& vs);

// Characteristic polynomial det(xI - M), coefficients c[0..n] with c[n] = 1.
Vec charpoly(const std::vector<Vec>& m);
Scalar eval_poly(const Vec& c, const Scalar& x);

// Strict sign feasibility: find h with sign(f_i . h) = signs_i (+1/-1) for all i.
// Exact simplex with Bland's rule; the witness is scaled to a primitive integer vector.
std::optional<Vec> solve_strict(const std::vector<Vec>& functionals, const std::vector<int>& signs);

Vec primitive_integer(const Vec& v);

}  // namespace superlie
