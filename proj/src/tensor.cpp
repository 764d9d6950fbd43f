#include "polyadic/tensor.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

namespace polyadic {

SlotPermutation::SlotPermutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<char> seen(image_.size(), 0);
    for (int v : image_) {
        if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = 1;
    }
}

SlotPermutation SlotPermutation::identity(int size) {
    std::vector<int> img(size);
    std::iota(img.begin(), img.end(), 0);
    return SlotPermutation(std::move(img));
}

SlotPermutation SlotPermutation::transpose_groups(int groups, int per_group) {
    std::vector<int> img(static_cast<std::size_t>(groups) * per_group);
    for (int i = 0; i < groups; ++i)
        for (int j = 0; j < per_group; ++j) img[i * per_group + j] = j * groups + i;
    return SlotPermutation(std::move(img));
}

SlotPermutation SlotPermutation::medial(int n_cols, int m_rows) {
    return transpose_groups(m_rows, n_cols);
}

SlotPermutation SlotPermutation::reversal(int size) {
    std::vector<int> img(size);
    for (int s = 0; s < size; ++s) img[s] = size - 1 - s;
    return SlotPermutation(std::move(img));
}

std::vector<int> SlotPermutation::fixed_points() const {
    std::vector<int> out;
    for (int s = 0; s < size(); ++s)
        if (image_[s] == s) out.push_back(s);
    return out;
}

std::vector<int> SlotPermutation::moved_points() const {
    std::vector<int> out;
    for (int s = 0; s < size(); ++s)
        if (image_[s] != s) out.push_back(s);
    return out;
}

SlotPermutation SlotPermutation::then(const SlotPermutation& next) const {
    if (size() != next.size()) throw std::invalid_argument("size mismatch");
    std::vector<int> img(size());
    for (int s = 0; s < size(); ++s) img[s] = next.image_[image_[s]];
    return SlotPermutation(std::move(img));
}

SlotPermutation SlotPermutation::inverse() const {
    std::vector<int> img(size());
    for (int s = 0; s < size(); ++s) img[image_[s]] = s;
    return SlotPermutation(std::move(img));
}

bool SlotPermutation::is_identity() const {
    for (int s = 0; s < size(); ++s)
        if (image_[s] != s) return false;
    return true;
}

Word SlotPermutation::apply(const Word& w) const {
    Word out(w.size());
    for (int s = 0; s < size(); ++s) out[image_[s]] = w[s];
    return out;
}

SlotPermutation polyadic_twist(int n_cols, int m_rows) {
    SlotPermutation med = SlotPermutation::medial(n_cols, m_rows);
    std::vector<int> moved = med.moved_points();
    std::vector<int> rank(med.size(), -1);
    for (std::size_t r = 0; r < moved.size(); ++r) rank[moved[r]] = static_cast<int>(r);
    std::vector<int> img(moved.size());
    for (std::size_t r = 0; r < moved.size(); ++r) img[r] = rank[med[moved[r]]];
    return SlotPermutation(std::move(img));
}

std::vector<std::pair<int, int>> twist_grids(int ell, int max_side) {
    std::vector<std::pair<int, int>> out;
    for (int m = 2; m <= max_side; ++m)
        for (int n = 2; n <= max_side; ++n) {
            long long moved = static_cast<long long>(m) * n - (std::gcd(m - 1, n - 1) + 1);
            if (moved == ell) out.emplace_back(m, n);
        }
    return out;
}

std::optional<SlotPermutation> canonical_twist(int ell) {
    auto grids = twist_grids(ell);
    if (grids.empty()) return std::nullopt;
    auto [m, n] = grids.front();
    return polyadic_twist(n, m);
}

TensorSum::TensorSum(std::vector<int> dims, std::vector<std::pair<Scalar, Word>> terms)
    : dims_(std::move(dims)), terms_(std::move(terms)) {
    canonicalize();
}

TensorSum TensorSum::basis(std::vector<int> dims, Word w) {
    TensorSum out(std::move(dims));
    out.add_term(Scalar(1), w);
    return out;
}

TensorSum TensorSum::scalar(Scalar value) {
    TensorSum out{std::vector<int>{}};
    out.add_term(value, Word{});
    return out;
}

void TensorSum::add_term(const Scalar& c, const Word& w) {
    if (w.size() != dims_.size()) throw std::invalid_argument("word length mismatch");
    for (std::size_t s = 0; s < w.size(); ++s)
        if (w[s] < 0 || w[s] >= dims_[s]) throw std::invalid_argument("basis index out of range");
    terms_.emplace_back(c, w);
    canonicalize();
}

void TensorSum::canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    std::vector<std::pair<Scalar, Word>> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().second == t.second)
            merged.back().first += t.first;
        else
            merged.push_back(t);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& t) { return t.first.is_zero(); }),
                 merged.end());
    terms_ = std::move(merged);
}

TensorSum operator+(const TensorSum& a, const TensorSum& b) {
    if (a.dims_ != b.dims_) throw std::invalid_argument("dims mismatch");
    TensorSum out(a.dims_);
    out.terms_ = a.terms_;
    out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
    out.canonicalize();
    return out;
}

TensorSum operator-(const TensorSum& a, const TensorSum& b) { return a + b.scaled(Scalar(-1)); }

TensorSum TensorSum::scaled(const Scalar& c) const {
    TensorSum out(dims_);
    for (auto& t : terms_) out.terms_.emplace_back(t.first * c, t.second);
    out.canonicalize();
    return out;
}

bool operator==(const TensorSum& a, const TensorSum& b) {
    return a.dims_ == b.dims_ && a.terms_ == b.terms_;
}

TensorSum tensor(const TensorSum& a, const TensorSum& b) {
    std::vector<int> dims = a.dims_;
    dims.insert(dims.end(), b.dims_.begin(), b.dims_.end());
    TensorSum out(std::move(dims));
    for (auto& ta : a.terms_)
        for (auto& tb : b.terms_) {
            Word w = ta.second;
            w.insert(w.end(), tb.second.begin(), tb.second.end());
            out.terms_.emplace_back(ta.first * tb.first, std::move(w));
        }
    out.canonicalize();
    return out;
}

TensorSum TensorSum::permuted(const SlotPermutation& p) const {
    if (p.size() != factors()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> dims(dims_.size());
    for (int s = 0; s < factors(); ++s) dims[p[s]] = dims_[s];
    TensorSum out(std::move(dims));
    for (auto& t : terms_) out.terms_.emplace_back(t.first, p.apply(t.second));
    out.canonicalize();
    return out;
}

std::string TensorSum::str(const std::vector<std::string>& labels) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << scalar_format(t.first) << ")";
        for (std::size_t s = 0; s < t.second.size(); ++s) {
            os << (s == 0 ? " " : "*");
            int idx = t.second[s];
            if (static_cast<std::size_t>(idx) < labels.size())
                os << labels[idx];
            else
                os << "e" << idx;
        }
    }
    return os.str();
}

std::size_t MultiLinearMap::total(const std::vector<int>& dims) {
    std::size_t t = 1;
    for (int d : dims) {
        if (d < 1) throw std::invalid_argument("dimension must be >= 1");
        t *= static_cast<std::size_t>(d);
    }
    return t;
}

std::size_t TensorLimits::max_coefficients() {
    static std::size_t value = [] {
        if (const char* env = std::getenv("POLYADIC_BUDGET")) {
            long long v = std::atoll(env);
            if (v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(1) << 22;
    }();
    return value;
}

int TensorLimits::threads = 1;

MultiLinearMap::MultiLinearMap(std::vector<int> in_dims, std::vector<int> out_dims)
    : in_dims_(std::move(in_dims)), out_dims_(std::move(out_dims)) {
    in_total_ = total(in_dims_);
    out_total_ = total(out_dims_);
    if (in_total_ * out_total_ > TensorLimits::max_coefficients())
        throw TensorBudgetError("map with " + std::to_string(in_total_ * out_total_) +
                                " coefficients exceeds the desk-scale budget");
    coef_.assign(in_total_ * out_total_, Scalar());
}

MultiLinearMap MultiLinearMap::uniform(int in_factors, int out_factors, int dim) {
    return MultiLinearMap(std::vector<int>(in_factors, dim), std::vector<int>(out_factors, dim));
}

MultiLinearMap MultiLinearMap::identity(std::vector<int> dims) {
    MultiLinearMap f(dims, dims);
    for (std::size_t k = 0; k < f.in_total_; ++k) f.coeff(k, k) = Scalar(1);
    return f;
}

MultiLinearMap MultiLinearMap::from_permutation(const SlotPermutation& p,
                                                const std::vector<int>& in_dims) {
    if (p.size() != static_cast<int>(in_dims.size()))
        throw std::invalid_argument("permutation/dims size mismatch");
    std::vector<int> out_dims(in_dims.size());
    for (int s = 0; s < p.size(); ++s) out_dims[p[s]] = in_dims[s];
    MultiLinearMap f(in_dims, out_dims);
    for (std::size_t in = 0; in < f.in_total_; ++in) {
        Word w = word_of(in, f.in_dims_);
        f.coeff(index_of(p.apply(w), f.out_dims_), in) = Scalar(1);
    }
    return f;
}

MultiLinearMap MultiLinearMap::constant(const TensorSum& value) {
    MultiLinearMap f(std::vector<int>{}, value.dims());
    for (auto& t : value.terms()) f.coeff(index_of(t.second, f.out_dims_), 0) = t.first;
    return f;
}

MultiLinearMap MultiLinearMap::functional(std::vector<int> in_dims, std::vector<Scalar> values) {
    MultiLinearMap f(std::move(in_dims), std::vector<int>{});
    if (values.size() != f.in_total_) throw std::invalid_argument("functional size mismatch");
    for (std::size_t in = 0; in < f.in_total_; ++in) f.coeff(0, in) = values[in];
    return f;
}

bool MultiLinearMap::is_zero() const {
    for (auto& c : coef_)
        if (!c.is_zero()) return false;
    return true;
}

bool operator==(const MultiLinearMap& a, const MultiLinearMap& b) {
    return a.in_dims_ == b.in_dims_ && a.out_dims_ == b.out_dims_ && a.coef_ == b.coef_;
}

MultiLinearMap operator+(const MultiLinearMap& a, const MultiLinearMap& b) {
    if (a.in_dims_ != b.in_dims_ || a.out_dims_ != b.out_dims_)
        throw std::invalid_argument("shape mismatch");
    MultiLinearMap out = a;
    for (std::size_t k = 0; k < out.coef_.size(); ++k) out.coef_[k] += b.coef_[k];
    return out;
}

MultiLinearMap operator-(const MultiLinearMap& a, const MultiLinearMap& b) {
    return a + b.scaled(Scalar(-1));
}

MultiLinearMap MultiLinearMap::scaled(const Scalar& c) const {
    MultiLinearMap out = *this;
    for (auto& v : out.coef_) v = v * c;
    return out;
}

MultiLinearMap MultiLinearMap::compose(const MultiLinearMap& g) const {
    if (g.out_dims_ != in_dims_)
        throw std::invalid_argument("compose: inner shapes differ");
    MultiLinearMap out(g.in_dims_, out_dims_);
    std::size_t mid_total = in_total_;
    auto run_rows = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t o = lo; o < hi; ++o)
            for (std::size_t m = 0; m < mid_total; ++m) {
                const Scalar& f_om = coeff(o, m);
                if (f_om.is_zero()) continue;
                for (std::size_t in = 0; in < g.in_total_; ++in) {
                    const Scalar& g_mi = g.coeff(m, in);
                    if (g_mi.is_zero()) continue;
                    out.coeff(o, in) += f_om * g_mi;
                }
            }
    };
    int nthreads = TensorLimits::threads;
    if (nthreads > 1 && out_total_ >= 64) {
        std::vector<std::thread> pool;
        std::size_t chunk = (out_total_ + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            std::size_t lo = t * chunk, hi = std::min(out_total_, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_rows, lo, hi);
        }
        for (auto& th : pool) th.join();
    } else {
        run_rows(0, out_total_);
    }
    return out;
}

MultiLinearMap tensor(const MultiLinearMap& f, const MultiLinearMap& g) {
    std::vector<int> in_dims = f.in_dims();
    in_dims.insert(in_dims.end(), g.in_dims().begin(), g.in_dims().end());
    std::vector<int> out_dims = f.out_dims();
    out_dims.insert(out_dims.end(), g.out_dims().begin(), g.out_dims().end());
    MultiLinearMap out(std::move(in_dims), std::move(out_dims));
    for (std::size_t fo = 0; fo < f.out_total(); ++fo)
        for (std::size_t fi = 0; fi < f.in_total(); ++fi) {
            const Scalar& cf = f.coeff(fo, fi);
            if (cf.is_zero()) continue;
            for (std::size_t go = 0; go < g.out_total(); ++go)
                for (std::size_t gi = 0; gi < g.in_total(); ++gi) {
                    const Scalar& cg = g.coeff(go, gi);
                    if (cg.is_zero()) continue;
                    out.coeff(fo * g.out_total() + go, fi * g.in_total() + gi) = cf * cg;
                }
        }
    return out;
}

TensorSum MultiLinearMap::apply(const TensorSum& x) const {
    if (x.dims() != in_dims_) throw std::invalid_argument("apply: shape mismatch");
    std::vector<Scalar> acc(out_total_, Scalar());
    for (auto& t : x.terms()) {
        std::size_t in = index_of(t.second, in_dims_);
        for (std::size_t o = 0; o < out_total_; ++o) {
            const Scalar& c = coeff(o, in);
            if (!c.is_zero()) acc[o] += c * t.first;
        }
    }
    TensorSum out(out_dims_);
    for (std::size_t o = 0; o < out_total_; ++o)
        if (!acc[o].is_zero()) out.add_term(acc[o], word_of(o, out_dims_));
    return out;
}

TensorSum MultiLinearMap::apply_basis(const Word& in_w) const {
    return apply(TensorSum::basis(in_dims_, in_w));
}

MultiLinearMap MultiLinearMap::regroup_in(const std::vector<int>& group_sizes) const {
    std::vector<int> dims;
    std::size_t s = 0;
    for (int g : group_sizes) {
        int d = 1;
        for (int k = 0; k < g; ++k) d *= in_dims_.at(s++);
        dims.push_back(d);
    }
    if (s != in_dims_.size()) throw std::invalid_argument("regroup_in: group sizes mismatch");
    MultiLinearMap out = *this;
    out.in_dims_ = std::move(dims);
    return out;
}

MultiLinearMap MultiLinearMap::regroup_out(const std::vector<int>& group_sizes) const {
    std::vector<int> dims;
    std::size_t s = 0;
    for (int g : group_sizes) {
        int d = 1;
        for (int k = 0; k < g; ++k) d *= out_dims_.at(s++);
        dims.push_back(d);
    }
    if (s != out_dims_.size()) throw std::invalid_argument("regroup_out: group sizes mismatch");
    MultiLinearMap out = *this;
    out.out_dims_ = std::move(dims);
    return out;
}

std::optional<std::pair<Word, Word>> MultiLinearMap::first_difference(const MultiLinearMap& a,
                                                                      const MultiLinearMap& b) {
    if (a.in_dims_ != b.in_dims_ || a.out_dims_ != b.out_dims_)
        return std::make_pair(Word{}, Word{});
    for (std::size_t in = 0; in < a.in_total_; ++in)
        for (std::size_t o = 0; o < a.out_total_; ++o)
            if (a.coeff(o, in) != b.coeff(o, in))
                return std::make_pair(word_of(o, a.out_dims_), word_of(in, a.in_dims_));
    return std::nullopt;
}

std::size_t MultiLinearMap::index_of(const Word& w, const std::vector<int>& dims) {
    if (w.size() != dims.size()) throw std::invalid_argument("word length mismatch");
    std::size_t idx = 0;
    for (std::size_t s = 0; s < dims.size(); ++s) {
        if (w[s] < 0 || w[s] >= dims[s]) throw std::invalid_argument("index out of range");
        idx = idx * dims[s] + w[s];
    }
    return idx;
}

Word MultiLinearMap::word_of(std::size_t index, const std::vector<int>& dims) {
    Word w(dims.size());
    for (std::size_t s = dims.size(); s-- > 0;) {
        w[s] = static_cast<int>(index % dims[s]);
        index /= dims[s];
    }
    return w;
}

MultiLinearMap tensor_power(const MultiLinearMap& f, int k) {
    if (k < 1) throw std::invalid_argument("tensor power needs k >= 1");
    MultiLinearMap out = f;
    for (int i = 1; i < k; ++i) out = tensor(out, f);
    return out;
}

TensorSum tensor_power(const TensorSum& x, int k) {
    if (k < 1) throw std::invalid_argument("tensor power needs k >= 1");
    TensorSum out = x;
    for (int i = 1; i < k; ++i) out = tensor(out, x);
    return out;
}

MultiLinearMap tensor_all(const std::vector<MultiLinearMap>& fs) {
    if (fs.empty()) throw std::invalid_argument("tensor_all of nothing");
    MultiLinearMap out = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) out = tensor(out, fs[i]);
    return out;
}

MultiLinearMap embed_uniform(const MultiLinearMap& f, int before, int after, int dim) {
    MultiLinearMap out = f;
    if (before > 0) out = tensor(MultiLinearMap::identity(std::vector<int>(before, dim)), out);
    if (after > 0) out = tensor(out, MultiLinearMap::identity(std::vector<int>(after, dim)));
    return out;
}

MultiLinearMap embed_at_slots(const MultiLinearMap& f, const std::vector<int>& slots, int total,
                              int dim) {
    int k = static_cast<int>(slots.size());
    if (f.in_factors() != k || f.out_factors() != k)
        throw std::invalid_argument("embed_at_slots expects a k -> k map");
    // gather: move slot slots[j] to front position j, keep the rest in order.
    std::vector<int> img(total, -1);
    for (int j = 0; j < k; ++j) img[slots[j]] = j;
    int next = k;
    for (int s = 0; s < total; ++s)
        if (img[s] < 0) img[s] = next++;
    SlotPermutation gather{img};
    MultiLinearMap pg = MultiLinearMap::from_permutation(gather, std::vector<int>(total, dim));
    MultiLinearMap mid = tensor(f, MultiLinearMap::identity(std::vector<int>(total - k, dim)));
    MultiLinearMap ps = MultiLinearMap::from_permutation(gather.inverse(), std::vector<int>(total, dim));
    return ps.compose(mid.compose(pg));
}

LinearSolution linear_solve(std::vector<std::vector<Scalar>> rows, std::vector<Scalar> rhs) {
    LinearSolution out;
    std::size_t m = rows.size();
    std::size_t n = m ? rows[0].size() : 0;
    std::vector<long long> pivot_col;
    std::vector<std::size_t> row_origin(m);
    for (std::size_t i = 0; i < m; ++i) row_origin[i] = i;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t piv = rank;
        while (piv < m && rows[piv][col].is_zero()) ++piv;
        if (piv == m) continue;
        std::swap(rows[piv], rows[rank]);
        std::swap(rhs[piv], rhs[rank]);
        std::swap(row_origin[piv], row_origin[rank]);
        Scalar inv = rows[rank][col].inverse();
        for (std::size_t j = col; j < n; ++j) rows[rank][j] = rows[rank][j] * inv;
        rhs[rank] = rhs[rank] * inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == rank || rows[i][col].is_zero()) continue;
            Scalar factor = rows[i][col];
            for (std::size_t j = col; j < n; ++j) rows[i][j] -= factor * rows[rank][j];
            rhs[i] -= factor * rhs[rank];
        }
        pivot_col.push_back(static_cast<long long>(col));
        ++rank;
    }
    for (std::size_t i = rank; i < m; ++i)
        if (!rhs[i].is_zero()) {
            out.consistent = false;
            out.witness_row = static_cast<long long>(row_origin[i]);
            return out;
        }
    out.consistent = true;
    out.nullity = static_cast<long long>(n - rank);
    out.values.assign(n, Scalar());
    for (std::size_t r = 0; r < rank; ++r) out.values[pivot_col[r]] = rhs[r];
    return out;
}

std::vector<std::vector<Scalar>> linear_nullspace(std::vector<std::vector<Scalar>> rows) {
    std::size_t m = rows.size();
    std::size_t n = m ? rows[0].size() : 0;
    std::vector<long long> pivot_of_col(n, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t piv = rank;
        while (piv < m && rows[piv][col].is_zero()) ++piv;
        if (piv == m) continue;
        std::swap(rows[piv], rows[rank]);
        Scalar inv = rows[rank][col].inverse();
        for (std::size_t j = col; j < n; ++j) rows[rank][j] = rows[rank][j] * inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == rank || rows[i][col].is_zero()) continue;
            Scalar factor = rows[i][col];
            for (std::size_t j = col; j < n; ++j) rows[i][j] -= factor * rows[rank][j];
        }
        pivot_of_col[col] = static_cast<long long>(rank);
        ++rank;
    }
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<Scalar> v(n, Scalar());
        v[free_col] = Scalar(1);
        for (std::size_t col = 0; col < n; ++col)
            if (pivot_of_col[col] >= 0)
                v[col] = -rows[static_cast<std::size_t>(pivot_of_col[col])][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    BigInt num = numerator(r), den = denominator(r);
    BigInt sn = boost::multiprecision::sqrt(num), sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

}  // namespace

std::optional<Scalar> gaussian_sqrt(const Scalar& z) {
    // (a+bi)^2 = x+yi: a^2 - b^2 = x, 2ab = y; a^2 = (x + |z|)/2 with |z|
    // rational, then b from y (or from -x for pure-imaginary results).
    const Rational &x = z.re(), &y = z.im();
    auto norm = rational_sqrt(x * x + y * y);
    if (!norm) return std::nullopt;
    auto a2 = (x + *norm) / 2;
    if (auto a = rational_sqrt(a2)) {
        if (*a != 0) {
            Rational b = y / (2 * *a);
            Scalar s(*a, b);
            if (s * s == z) return s;
        }
    }
    auto b2 = (*norm - x) / 2;
    if (auto b = rational_sqrt(b2)) {
        Scalar s(Rational(0), *b);
        if (s * s == z) return s;
    }
    return std::nullopt;
}

MapSolution solve_map_equations(
    const std::vector<int>& in_dims, const std::vector<int>& out_dims,
    const std::vector<std::function<MultiLinearMap(const MultiLinearMap&)>>& pipelines,
    const std::vector<MultiLinearMap>& rhs) {
    if (pipelines.size() != rhs.size()) throw std::invalid_argument("pipelines/rhs mismatch");
    MultiLinearMap zero(in_dims, out_dims);
    std::size_t unknowns = zero.in_total() * zero.out_total();

    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> b;
    // Evaluate each pipeline at zero (constant part) and at each coefficient
    // delta (columns); everything downstream is linear in the unknown map.
    for (std::size_t k = 0; k < pipelines.size(); ++k) {
        MultiLinearMap base = pipelines[k](zero);
        std::size_t eq_count = base.in_total() * base.out_total();
        std::size_t row0 = rows.size();
        for (std::size_t e = 0; e < eq_count; ++e) {
            rows.emplace_back(unknowns, Scalar());
            b.push_back(Scalar());
        }
        for (std::size_t u = 0; u < unknowns; ++u) {
            MultiLinearMap delta(in_dims, out_dims);
            delta.coeff(u / zero.in_total(), u % zero.in_total()) = Scalar(1);
            MultiLinearMap col = pipelines[k](delta) - base;
            for (std::size_t e = 0; e < eq_count; ++e)
                rows[row0 + e][u] = col.coeff(e / col.in_total(), e % col.in_total());
        }
        const MultiLinearMap& target = rhs[k];
        if (target.in_dims() != base.in_dims() || target.out_dims() != base.out_dims())
            throw std::invalid_argument("rhs shape mismatch in equation " + std::to_string(k));
        for (std::size_t e = 0; e < eq_count; ++e)
            b[row0 + e] = target.coeff(e / target.in_total(), e % target.in_total()) -
                          base.coeff(e / base.in_total(), e % base.in_total());
    }
    LinearSolution sol = linear_solve(std::move(rows), std::move(b));
    MapSolution out;
    out.consistent = sol.consistent;
    out.nullity = sol.nullity;
    out.witness_row = sol.witness_row;
    if (sol.consistent) {
        MultiLinearMap m(in_dims, out_dims);
        for (std::size_t u = 0; u < unknowns; ++u)
            m.coeff(u / m.in_total(), u % m.in_total()) = sol.values[u];
        out.map = std::move(m);
    }
    return out;
}

}  // namespace polyadic
