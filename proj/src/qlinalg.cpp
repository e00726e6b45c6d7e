#include "superlie/qlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace superlie {

Scalar parse_scalar(const std::string& raw)
{
    std::string s;
    for (char c : raw)
        if (c != ' ' && c != '+')
            s.push_back(c);
    if (s.empty())
        throw std::invalid_argument("empty rational");
    auto dot_pos = s.find('.');
    if (dot_pos != std::string::npos) {
        if (s.find('/') != std::string::npos || s.find('e') != std::string::npos || s.find('E') != std::string::npos)
            throw std::invalid_argument("malformed rational: " + raw);
        std::string digits = s.substr(0, dot_pos) + s.substr(dot_pos + 1);
        std::size_t frac_len = s.size() - dot_pos - 1;
        mpz_class num;
        if (num.set_str(digits == "-" || digits.empty() ? "0" : digits, 10) != 0)
            throw std::invalid_argument("malformed rational: " + raw);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        Scalar q(num, den);
        q.canonicalize();
        return q;
    }
    Scalar q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: " + raw);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + raw);
    q.canonicalize();
    return q;
}

std::string to_string(const Scalar& q)
{
    return q.get_str(10);
}

// ---------------------------------------------------------------- SparseVec

SparseVec SparseVec::unit(int i, const Scalar& v)
{
    SparseVec r;
    if (v != 0)
        r.e_.emplace_back(i, v);
    return r;
}

SparseVec SparseVec::from_dense(const Vec& v)
{
    SparseVec r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            r.e_.emplace_back(static_cast<int>(i), v[i]);
    return r;
}

SparseVec SparseVec::from_terms(std::vector<Entry> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVec r;
    for (auto& t : terms) {
        if (!r.e_.empty() && r.e_.back().first == t.first)
            r.e_.back().second += t.second;
        else
            r.e_.push_back(std::move(t));
    }
    r.e_.erase(std::remove_if(r.e_.begin(), r.e_.end(), [](const Entry& x) { return x.second == 0; }), r.e_.end());
    return r;
}

Scalar SparseVec::get(int i) const
{
    auto it = std::lower_bound(e_.begin(), e_.end(), i, [](const Entry& a, int k) { return a.first < k; });
    if (it != e_.end() && it->first == i)
        return it->second;
    return 0;
}

Vec SparseVec::to_dense(int n) const
{
    Vec v(n);
    for (const auto& [i, x] : e_) {
        if (i >= n)
            throw std::out_of_range("SparseVec::to_dense");
        v[i] = x;
    }
    return v;
}

void SparseVec::axpy(const Scalar& a, const SparseVec& x)
{
    if (a == 0 || x.e_.empty())
        return;
    std::vector<Entry> out;
    out.reserve(e_.size() + x.e_.size());
    auto i = e_.begin();
    auto j = x.e_.begin();
    while (i != e_.end() || j != x.e_.end()) {
        if (j == x.e_.end() || (i != e_.end() && i->first < j->first)) {
            out.push_back(std::move(*i));
            ++i;
        }
        else if (i == e_.end() || j->first < i->first) {
            out.emplace_back(j->first, a * j->second);
            ++j;
        }
        else {
            Scalar s = i->second + a * j->second;
            if (s != 0)
                out.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    e_ = std::move(out);
}

void SparseVec::scale(const Scalar& a)
{
    if (a == 0) {
        e_.clear();
        return;
    }
    for (auto& t : e_)
        t.second *= a;
}

void SparseVec::make_primitive()
{
    if (e_.empty())
        return;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& t : e_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.second.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.second.get_num_mpz_t());
    }
    Scalar f(den_lcm, num_gcd);
    f.canonicalize();
    scale(f);
}

bool operator<(const SparseVec& a, const SparseVec& b)
{
    return std::lexicographical_compare(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end(),
        [](const SparseVec::Entry& x, const SparseVec::Entry& y) {
            if (x.first != y.first)
                return x.first < y.first;
            return x.second < y.second;
        });
}

SparseVec operator+(const SparseVec& a, const SparseVec& b)
{
    SparseVec r = a;
    r.axpy(1, b);
    return r;
}

SparseVec operator-(const SparseVec& a, const SparseVec& b)
{
    SparseVec r = a;
    r.axpy(-1, b);
    return r;
}

SparseVec operator*(const Scalar& a, const SparseVec& x)
{
    SparseVec r = x;
    r.scale(a);
    return r;
}

Scalar dot(const SparseVec& a, const Vec& b)
{
    Scalar s = 0;
    for (const auto& [i, x] : a)
        s += x * b.at(i);
    return s;
}

Scalar dot(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: dimension mismatch");
    Scalar s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

// ------------------------------------------------------------- SparseMatrix

SparseMatrix SparseMatrix::identity(int n)
{
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.row[i] = SparseVec::unit(i);
    return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<Vec>& d)
{
    SparseMatrix m(static_cast<int>(d.size()), d.empty() ? 0 : static_cast<int>(d[0].size()));
    for (int i = 0; i < m.rows; ++i)
        m.row[i] = SparseVec::from_dense(d[i]);
    return m;
}

std::vector<Vec> SparseMatrix::to_dense() const
{
    std::vector<Vec> d(rows);
    for (int i = 0; i < rows; ++i)
        d[i] = row[i].to_dense(cols);
    return d;
}

void SparseMatrix::set(int i, int j, const Scalar& v)
{
    SparseVec& r = row.at(i);
    r.axpy(v - r.get(j), SparseVec::unit(j));
}

SparseVec SparseMatrix::apply(const SparseVec& x) const
{
    std::vector<SparseVec::Entry> out;
    for (int i = 0; i < rows; ++i) {
        Scalar s = 0;
        auto a = row[i].begin();
        auto b = x.begin();
        while (a != row[i].end() && b != x.end()) {
            if (a->first < b->first)
                ++a;
            else if (b->first < a->first)
                ++b;
            else {
                s += a->second * b->second;
                ++a;
                ++b;
            }
        }
        if (s != 0)
            out.emplace_back(i, s);
    }
    return SparseVec::from_terms(std::move(out));
}

SparseMatrix SparseMatrix::transpose() const
{
    std::vector<std::vector<SparseVec::Entry>> cols_terms(cols);
    for (int i = 0; i < rows; ++i)
        for (const auto& [j, x] : row[i])
            cols_terms[j].emplace_back(i, x);
    SparseMatrix t(cols, rows);
    for (int j = 0; j < cols; ++j)
        t.row[j] = SparseVec::from_terms(std::move(cols_terms[j]));
    return t;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols != b.rows)
        throw std::invalid_argument("matrix product: dimension mismatch");
    SparseMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        std::vector<SparseVec::Entry> terms;
        for (const auto& [k, x] : a.row[i])
            for (const auto& [j, y] : b.row[k])
                terms.emplace_back(j, x * y);
        c.row[i] = SparseVec::from_terms(std::move(terms));
    }
    return c;
}

// ------------------------------------------------------------------ Echelon

SparseVec Echelon::reduce(const SparseVec& v) const
{
    return reduce_tracked(v).first;
}

std::pair<SparseVec, SparseVec> Echelon::reduce_tracked(const SparseVec& v) const
{
    std::vector<SparseVec::Entry> terms(v.begin(), v.end());
    std::vector<SparseVec::Entry> combo_terms;
    for (const auto& [col, x] : v) {
        auto it = where_.find(col);
        if (it == where_.end())
            continue;
        const SparseVec& r = rows_[it->second];
        for (const auto& [j, y] : r)
            terms.emplace_back(j, -x * y);
        if (track_)
            for (const auto& [j, y] : combos_[it->second])
                combo_terms.emplace_back(j, x * y);
    }
    return {SparseVec::from_terms(std::move(terms)), SparseVec::from_terms(std::move(combo_terms))};
}

bool Echelon::add(const SparseVec& v, const SparseVec& combo)
{
    auto [r, sub] = reduce_tracked(v);
    if (r.empty())
        return false;
    SparseVec c;
    if (track_)
        c = combo - sub;
    int p = r.lead();
    Scalar inv = 1 / r.entries().front().second;
    r.scale(inv);
    c.scale(inv);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Scalar f = rows_[k].get(p);
        if (f != 0) {
            rows_[k].axpy(-f, r);
            if (track_)
                combos_[k].axpy(-f, c);
        }
    }
    where_[p] = static_cast<int>(rows_.size());
    pivot_.push_back(p);
    rows_.push_back(std::move(r));
    combos_.push_back(std::move(c));
    return true;
}

std::vector<int> Echelon::pivots() const
{
    std::vector<int> p;
    for (const auto& [col, idx] : where_)
        p.push_back(col);
    return p;
}

std::vector<SparseVec> Echelon::basis() const
{
    std::vector<SparseVec> b;
    for (const auto& [col, idx] : where_)
        b.push_back(rows_[idx]);
    return b;
}

SpanCoordinates::SpanCoordinates(const std::vector<SparseVec>& basis) : n_(static_cast<int>(basis.size()))
{
    for (int i = 0; i < n_; ++i)
        if (!ech_.add(basis[i], SparseVec::unit(i)))
            throw std::invalid_argument("SpanCoordinates: dependent basis");
}

std::optional<SparseVec> SpanCoordinates::coords(const SparseVec& v) const
{
    auto [r, c] = ech_.reduce_tracked(v);
    if (!r.empty())
        return std::nullopt;
    return c;
}

// --------------------------------------------------------------- rref etc.

RrefResult rref(const SparseMatrix& m)
{
    Echelon e;
    for (const auto& r : m.row)
        e.add(r);
    RrefResult res;
    res.rank = e.rank();
    res.pivots = e.pivots();
    res.reduced = SparseMatrix(m.rows, m.cols);
    auto b = e.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        res.reduced.row[i] = b[i];
    return res;
}

int rank(const SparseMatrix& m)
{
    Echelon e;
    for (const auto& r : m.row)
        e.add(r);
    return e.rank();
}

std::vector<SparseVec> kernel(const SparseMatrix& m)
{
    Echelon e;
    for (const auto& r : m.row)
        e.add(r);
    std::vector<SparseVec> out;
    for (int f = 0; f < m.cols; ++f) {
        if (e.is_pivot(f))
            continue;
        std::vector<SparseVec::Entry> terms{{f, Scalar(1)}};
        for (int p : e.pivots()) {
            Scalar x = e.row_for_pivot(p).get(f);
            if (x != 0)
                terms.emplace_back(p, -x);
        }
        out.push_back(SparseVec::from_terms(std::move(terms)));
    }
    return out;
}

std::vector<SparseVec> span_basis(const std::vector<SparseVec>& vs)
{
    Echelon e;
    for (const auto& v : vs)
        e.add(v);
    return e.basis();
}

// ---------------------------------------------------------------- charpoly

Vec charpoly(const std::vector<Vec>& m)
{
    const int n = static_cast<int>(m.size());
    std::vector<Vec> h = m;
    for (const auto& r : h)
        if (static_cast<int>(r.size()) != n)
            throw std::invalid_argument("charpoly: matrix not square");
    // Similarity reduction to upper Hessenberg form.
    for (int c = 1; c + 1 < n; ++c) {
        int i = c;
        while (i < n && h[i][c - 1] == 0)
            ++i;
        if (i == n)
            continue;
        if (i != c) {
            std::swap(h[i], h[c]);
            for (int r = 0; r < n; ++r)
                std::swap(h[r][i], h[r][c]);
        }
        Scalar t = h[c][c - 1];
        for (int j = c + 1; j < n; ++j) {
            Scalar u = h[j][c - 1] / t;
            if (u == 0)
                continue;
            for (int k = 0; k < n; ++k)
                h[j][k] -= u * h[c][k];
            for (int r = 0; r < n; ++r)
                h[r][c] += u * h[r][j];
        }
    }
    // p[k] is the characteristic polynomial of the leading k x k block.
    std::vector<Vec> p(n + 1);
    p[0] = Vec{1};
    for (int k = 1; k <= n; ++k) {
        Vec q(k + 1);
        for (int d = 0; d < k; ++d) {
            q[d + 1] += p[k - 1][d];
            q[d] -= h[k - 1][k - 1] * p[k - 1][d];
        }
        Scalar t = 1;
        for (int i = 1; i < k; ++i) {
            t *= h[k - i][k - i - 1];
            Scalar f = t * h[k - i - 1][k - 1];
            if (f == 0)
                continue;
            for (std::size_t d = 0; d < p[k - i - 1].size(); ++d)
                q[d] -= f * p[k - i - 1][d];
        }
        p[k] = std::move(q);
    }
    return p[n];
}

Scalar eval_poly(const Vec& c, const Scalar& x)
{
    Scalar s = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        s = s * x + *it;
    return s;
}

// ------------------------------------------------------------ solve_strict

Vec primitive_integer(const Vec& v)
{
    SparseVec s = SparseVec::from_dense(v);
    s.make_primitive();
    return s.to_dense(static_cast<int>(v.size()));
}

namespace {

// max c.x subject to A x <= b, x >= 0, with b >= 0 so the origin is feasible.
// Returns the optimal x; the problem must be bounded.
Vec simplex_max(const std::vector<Vec>& a, const Vec& b, const Vec& c)
{
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(c.size());
    const int w = n + m + 1;
    std::vector<Vec> t(m + 1, Vec(w));
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j)
            t[i][j] = a[i][j];
        t[i][n + i] = 1;
        t[i][w - 1] = b[i];
        basis[i] = n + i;
    }
    for (int j = 0; j < n; ++j)
        t[m][j] = -c[j];

    for (;;) {
        int enter = -1;
        for (int j = 0; j < w - 1; ++j)
            if (t[m][j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0)
            break;
        int leave = -1;
        Scalar best;
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] <= 0)
                continue;
            Scalar ratio = t[i][w - 1] / t[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0)
            throw std::logic_error("simplex: unbounded objective");
        Scalar piv = t[leave][enter];
        for (auto& x : t[leave])
            x /= piv;
        for (int i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter] == 0)
                continue;
            Scalar f = t[i][enter];
            for (int j = 0; j < w; ++j)
                if (t[leave][j] != 0)
                    t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    Vec x(n);
    for (int i = 0; i < m; ++i)
        if (basis[i] < n)
            x[basis[i]] = t[i][w - 1];
    return x;
}

}  // namespace

std::optional<Vec> solve_strict(const std::vector<Vec>& functionals, const std::vector<int>& signs)
{
    if (functionals.size() != signs.size())
        throw std::invalid_argument("solve_strict: functionals and signs differ in length");
    if (functionals.empty())
        return Vec{};
    const int d = static_cast<int>(functionals[0].size());
    for (const auto& f : functionals)
        if (static_cast<int>(f.size()) != d)
            throw std::invalid_argument("solve_strict: dimension mismatch");
    for (int s : signs)
        if (s != 1 && s != -1)
            throw std::invalid_argument("solve_strict: signs must be +1 or -1");

    // Variables (p, q, eps) with h = p - q.
    const int nv = 2 * d + 1;
    std::vector<Vec> a;
    Vec b;
    for (std::size_t i = 0; i < functionals.size(); ++i) {
        Vec row(nv);
        for (int j = 0; j < d; ++j) {
            row[j] = -signs[i] * functionals[i][j];
            row[d + j] = signs[i] * functionals[i][j];
        }
        row[2 * d] = 1;
        a.push_back(std::move(row));
        b.emplace_back(0);
    }
    for (int j = 0; j < d; ++j) {
        Vec up(nv), down(nv);
        up[j] = 1;
        up[d + j] = -1;
        down[j] = -1;
        down[d + j] = 1;
        a.push_back(std::move(up));
        b.emplace_back(1);
        a.push_back(std::move(down));
        b.emplace_back(1);
    }
    Vec cap(nv);
    cap[2 * d] = 1;
    a.push_back(std::move(cap));
    b.emplace_back(1);

    Vec c(nv);
    c[2 * d] = 1;
    Vec x = simplex_max(a, b, c);
    if (x[2 * d] <= 0)
        return std::nullopt;
    Vec h(d);
    for (int j = 0; j < d; ++j)
        h[j] = x[j] - x[d + j];
    return primitive_integer(h);
}

}  // namespace superlie
