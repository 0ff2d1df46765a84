#include "homind/gf2.hpp"

#include <bit>

namespace homind {

int Gf2Vector::popcount() const {
    int c = 0;
    for (auto w : bits) c += std::popcount(w);
    return c;
}

Gf2Matrix::Gf2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_(std::max(1, (cols + 63) / 64)), data_(static_cast<std::size_t>(rows) * words_, 0) {
    if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimensions");
}

void Gf2Matrix::set(int r, int c, bool v) {
    std::uint64_t m = std::uint64_t{1} << (c & 63);
    if (v)
        row(r)[c >> 6] |= m;
    else
        row(r)[c >> 6] &= ~m;
}

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

Gf2Vector Gf2Matrix::multiply(const Gf2Vector& x) const {
    Gf2Vector out(rows_);
    for (int r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (int w = 0; w < words_; ++w) acc ^= row(r)[w] & (w < static_cast<int>(x.bits.size()) ? x.bits[w] : 0);
        if (std::popcount(acc) & 1) out.set(r, true);
    }
    return out;
}

namespace {

// Reduced row echelon form of [M | b | I]; the identity block records the row
// operations so any all-zero row carries its own combination recipe.
struct Elimination {
    int rows, cols, width, words;
    std::vector<std::uint64_t> work;  // rows * words
    std::vector<int> pivot_col;       // per pivot row, in order
    bool with_rhs;

    Elimination(const Gf2Matrix& M, const Gf2Vector* b)
        : rows(M.rows()), cols(M.cols()), width(M.cols() + (b ? 1 : 0) + M.rows()),
          words(std::max(1, (width + 63) / 64)), work(static_cast<std::size_t>(rows) * words, 0), with_rhs(b != nullptr) {
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c)
                if (M.get(r, c)) set(r, c);
            if (b && b->get(r)) set(r, cols);
            set(r, cols + (b ? 1 : 0) + r);
        }
        run();
    }

    std::uint64_t* row(int r) { return work.data() + static_cast<std::size_t>(r) * words; }
    void set(int r, int c) { row(r)[c >> 6] |= std::uint64_t{1} << (c & 63); }
    bool get(int r, int c) { return (row(r)[c >> 6] >> (c & 63)) & 1u; }

    void run() {
        int pr = 0;
        for (int c = 0; c < cols && pr < rows; ++c) {
            int p = -1;
            for (int r = pr; r < rows; ++r)
                if (get(r, c)) {
                    p = r;
                    break;
                }
            if (p < 0) continue;
            if (p != pr)
                for (int w = 0; w < words; ++w) std::swap(row(p)[w], row(pr)[w]);
            for (int r = 0; r < rows; ++r) {
                if (r == pr || !get(r, c)) continue;
                for (int w = 0; w < words; ++w) row(r)[w] ^= row(pr)[w];
            }
            pivot_col.push_back(c);
            ++pr;
        }
    }

    bool m_part_zero(int r) {
        for (int c = 0; c < cols; ++c)
            if (get(r, c)) return false;
        return true;
    }
};

}  // namespace

int rank(const Gf2Matrix& M) {
    Elimination e(M, nullptr);
    return static_cast<int>(e.pivot_col.size());
}

std::optional<Gf2Vector> solve(const Gf2System& S) {
    if (S.b.size != S.M.rows()) throw InvalidInput("right-hand side length mismatch");
    Elimination e(S.M, &S.b);
    int nr = static_cast<int>(e.pivot_col.size());
    for (int r = nr; r < e.rows; ++r)
        if (e.get(r, e.cols)) return std::nullopt;
    Gf2Vector x(S.M.cols());
    for (int r = 0; r < nr; ++r)
        if (e.get(r, e.cols)) x.set(e.pivot_col[r], true);
    return x;
}

std::optional<int> solution_count_log2(const Gf2System& S) {
    if (!solve(S)) return std::nullopt;
    return S.M.cols() - rank(S.M);
}

std::optional<Gf2Vector> fredholm_certificate(const Gf2System& S) {
    if (S.b.size != S.M.rows()) throw InvalidInput("right-hand side length mismatch");
    Elimination e(S.M, &S.b);
    for (int r = static_cast<int>(e.pivot_col.size()); r < e.rows; ++r) {
        if (!e.get(r, e.cols)) continue;
        Gf2Vector y(S.M.rows());
        for (int i = 0; i < S.M.rows(); ++i)
            if (e.get(r, e.cols + 1 + i)) y.set(i, true);
        return y;
    }
    return std::nullopt;
}

}  // namespace homind
